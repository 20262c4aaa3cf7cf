"""Exception hierarchy.

``ParseError`` and its subclasses are input problems (CLI exit 2); every
other ``AlgebraError`` is a failed mathematical check (CLI exit 3).
"""


class AlgebraError(Exception):
    pass


class ParseError(AlgebraError):
    def __init__(self, message, line=None, col=None, source=None):
        self.message = message
        self.line = line
        self.col = col
        self.source = source
        super().__init__(str(self))

    def __str__(self):
        where = []
        if self.source:
            where.append(str(self.source))
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.col is not None:
            where.append(f"col {self.col}")
        prefix = ", ".join(where)
        return f"{prefix}: {self.message}" if prefix else self.message


class UnknownVertex(ParseError):
    pass


class NonComposablePath(ParseError):
    pass


class RelationTooShort(ParseError):
    pass


class NonParallelRelation(ParseError):
    pass


class UnknownBuiltin(ParseError):
    pass


class NonAssociative(AlgebraError):
    def __init__(self, triple, labels=None):
        self.triple = triple
        if labels:
            names = tuple(labels[i] for i in triple)
            msg = f"associativity fails on basis triple {names}"
        else:
            msg = f"associativity fails on basis triple {triple}"
        super().__init__(msg)


class BadUnit(AlgebraError):
    pass


class AlgebraMismatch(AlgebraError):
    pass


class InconsistentBound(AlgebraError):
    pass


class NotCentral(AlgebraError):
    pass


class DegenerateForm(AlgebraError):
    pass


class PreconditionUnmet(AlgebraError):
    pass


class NotMultiplicative(AlgebraError):
    def __init__(self, pair, labels=None):
        self.pair = pair
        names = tuple(labels[i] for i in pair) if labels else pair
        super().__init__(f"morphism is not multiplicative on basis pair {names}")


class NotUnital(AlgebraError):
    pass


class RelationNotKilled(AlgebraError):
    def __init__(self, relation):
        self.relation = relation
        super().__init__(f"relation {relation} does not map to zero")


class NotSurjective(AlgebraError):
    pass


class TargetNotFrobenius(AlgebraError):
    pass


class SchurNotInvertible(AlgebraError):
    pass
