"""Finite-dimensional associative unital algebras over the rationals.

An ``Algebra`` is given by structure constants: ``table[i][j]`` is the
coordinate vector of ``e_i * e_j``.  Associativity and the unit laws are
checked when the algebra is built.
"""

import json
import re
from fractions import Fraction

from . import exactmath as em
from .errors import AlgebraMismatch, BadUnit, NonAssociative, ParseError

__all__ = [
    "Algebra", "Element", "TensorElement", "Subspace", "make_algebra", "mul",
    "left_mult_matrix", "right_mult_matrix", "is_unit", "center", "radical",
    "socle_right", "socle_left", "ideal_generated", "right_ideal",
    "direct_product", "tensor_product", "subspace_power", "field",
    "algebra_to_json", "algebra_from_json", "parse_element", "render_vector",
]


class Algebra:
    def __init__(self, labels, table, one, name=None):
        n = len(labels)
        if len(set(labels)) != n:
            raise ValueError("basis labels must be distinct")
        if len(table) != n or any(len(row) != n for row in table):
            raise ValueError(f"structure table must be {n}x{n}")
        self.name = name
        self.labels = tuple(labels)
        self.dim = n
        dense = []
        sparse = []
        for i in range(n):
            drow, srow = [], []
            for j in range(n):
                v = [em.frac(x) for x in table[i][j]]
                if len(v) != n:
                    raise ValueError(f"product e_{i}*e_{j} must have {n} coordinates")
                drow.append(tuple(v))
                srow.append(tuple((k, x) for k, x in enumerate(v) if x))
            dense.append(tuple(drow))
            sparse.append(tuple(srow))
        self._table = tuple(dense)
        self._sparse = tuple(sparse)
        one = [em.frac(x) for x in one]
        if len(one) != n:
            raise ValueError(f"unit must have {n} coordinates")
        self._one = tuple(one)
        self._index = {l: i for i, l in enumerate(self.labels)}
        self._check_associative()
        self._check_unit()

    def __repr__(self):
        return f"Algebra({self.name or '?'}, dim={self.dim})"

    # -- raw vector arithmetic -------------------------------------------------

    def product(self, i, j):
        return self._table[i][j]

    def mul_vec(self, x, y):
        n = self.dim
        out = [Fraction(0)] * n
        xs = [(i, a) for i, a in enumerate(x) if a]
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in xs:
            row = self._sparse[i]
            for j, b in ys:
                ab = a * b
                for k, c in row[j]:
                    out[k] += ab * c
        return out

    def _check_associative(self):
        n = self.dim
        for i in range(n):
            for j in range(n):
                ij = self._table[i][j]
                for k in range(n):
                    e_k = _unit_vec(n, k)
                    lhs = self.mul_vec(ij, e_k)
                    rhs = self.mul_vec(_unit_vec(n, i), self._table[j][k])
                    if lhs != rhs:
                        raise NonAssociative((i, j, k), self.labels)

    def _check_unit(self):
        for i in range(self.dim):
            e = _unit_vec(self.dim, i)
            if self.mul_vec(self._one, e) != e or self.mul_vec(e, self._one) != e:
                raise BadUnit(f"unit fails on basis element {self.labels[i]}")

    # -- elements --------------------------------------------------------------

    def element(self, coords):
        return Element(self, coords)

    def basis(self):
        return [self.element(_unit_vec(self.dim, i)) for i in range(self.dim)]

    @property
    def one(self):
        return Element(self, self._one)

    def zero(self):
        return Element(self, [0] * self.dim)

    def index(self, label):
        return self._index[label]

    def __getitem__(self, label):
        if isinstance(label, int):
            return self.element(_unit_vec(self.dim, label))
        return self.element(_unit_vec(self.dim, self._index[label]))

    def is_commutative(self):
        n = self.dim
        return all(self._table[i][j] == self._table[j][i]
                   for i in range(n) for j in range(i + 1, n))

    def structure_equal(self, other):
        return (self.dim == other.dim and self._table == other._table
                and self._one == other._one)


def _unit_vec(n, i):
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


def make_algebra(labels, structure, one, name=None):
    return Algebra(labels, structure, one, name=name)


def field(name="k"):
    """The one-dimensional algebra (ground field)."""
    return Algebra(["1"], [[[1]]], [1], name=name)


class Element:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        coords = tuple(em.frac(x) for x in coords)
        if len(coords) != algebra.dim:
            raise ValueError(f"expected {algebra.dim} coordinates, got {len(coords)}")
        self.algebra = algebra
        self.coords = coords

    def _same(self, other):
        if other.algebra is not self.algebra:
            raise AlgebraMismatch("elements belong to different algebras")

    def __add__(self, other):
        self._same(other)
        return Element(self.algebra, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._same(other)
        return Element(self.algebra, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return Element(self.algebra, [-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, Element):
            return mul(self, other)
        c = em.frac(other)
        return Element(self.algebra, [c * a for a in self.coords])

    def __rmul__(self, other):
        c = em.frac(other)
        return Element(self.algebra, [c * a for a in self.coords])

    def __pow__(self, k):
        out = self.algebra.one
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return (isinstance(other, Element) and other.algebra is self.algebra
                and other.coords == self.coords)

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self):
        return not any(self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return render_vector(self.coords, self.algebra.labels)


def render_vector(coords, labels):
    terms = []
    for c, l in zip(coords, labels):
        if not c:
            continue
        if c == 1:
            s = l
        elif c == -1:
            s = f"-{l}"
        else:
            s = f"{em.fmt(c)}·{l}"
        terms.append(s)
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


def mul(x, y):
    if x.algebra is not y.algebra:
        raise AlgebraMismatch("cannot multiply elements of different algebras")
    return Element(x.algebra, x.algebra.mul_vec(x.coords, y.coords))


def left_mult_matrix(x):
    """Matrix of v -> x*v (column j = coords of x*e_j)."""
    A = x.algebra
    cols = [A.mul_vec(x.coords, _unit_vec(A.dim, j)) for j in range(A.dim)]
    return em.transpose(cols)


def right_mult_matrix(x):
    """Matrix of v -> v*x."""
    A = x.algebra
    cols = [A.mul_vec(_unit_vec(A.dim, j), x.coords) for j in range(A.dim)]
    return em.transpose(cols)


def is_unit(x):
    """The inverse of x, or None if x is not invertible."""
    A = x.algebra
    y = em.solve(left_mult_matrix(x), list(A.one.coords))
    if y is None:
        return None
    inv = Element(A, y)
    # one-sided inverses are two-sided in finite dimension; checked anyway
    assert inv * x == A.one
    return inv


class TensorElement:
    """Element sum_ij coeff[i][j] e_i (x) e_j of A (x) A."""

    __slots__ = ("algebra", "coeff")

    def __init__(self, algebra, coeff):
        n = algebra.dim
        coeff = tuple(tuple(em.frac(x) for x in row) for row in coeff)
        if len(coeff) != n or any(len(r) != n for r in coeff):
            raise ValueError(f"tensor coefficients must be {n}x{n}")
        self.algebra = algebra
        self.coeff = coeff

    @classmethod
    def from_terms(cls, algebra, terms):
        """Build from ``[(c, x, y), ...]`` meaning sum c * x (x) y (x, y elements or labels)."""
        n = algebra.dim
        m = em.zeros(n, n)
        for c, x, y in terms:
            if isinstance(x, str):
                x = algebra[x]
            if isinstance(y, str):
                y = algebra[y]
            c = em.frac(c)
            for i, a in enumerate(x.coords):
                if a:
                    for j, b in enumerate(y.coords):
                        if b:
                            m[i][j] += c * a * b
        return cls(algebra, m)

    def matrix(self):
        return [list(r) for r in self.coeff]

    def vector(self):
        return [x for r in self.coeff for x in r]

    def transpose(self):
        return TensorElement(self.algebra, em.transpose(self.coeff))

    def multiply(self):
        """Image under the multiplication map A (x) A -> A."""
        A = self.algebra
        out = [Fraction(0)] * A.dim
        for i, row in enumerate(self.coeff):
            for j, c in enumerate(row):
                if c:
                    for k, x in A._sparse[i][j]:
                        out[k] += c * x
        return Element(A, out)

    def left_act(self, a):
        """(a (x) 1) * t"""
        return TensorElement(self.algebra, em.matmul(left_mult_matrix(a), self.matrix()))

    def right_act(self, a):
        """t * (1 (x) a)"""
        return TensorElement(self.algebra,
                             em.matmul(self.matrix(), em.transpose(right_mult_matrix(a))))

    def __add__(self, other):
        return TensorElement(self.algebra, em.mat_add(self.coeff, other.coeff))

    def __sub__(self, other):
        return TensorElement(self.algebra, em.mat_add(self.coeff, em.mat_scale(-1, other.coeff)))

    def __rmul__(self, c):
        return TensorElement(self.algebra, em.mat_scale(c, self.coeff))

    def __eq__(self, other):
        return (isinstance(other, TensorElement) and other.algebra is self.algebra
                and other.coeff == self.coeff)

    def __hash__(self):
        return hash(self.coeff)

    def is_zero(self):
        return em.is_zero_mat(self.coeff)

    def __repr__(self):
        labels = self.algebra.labels
        pairs = [f"{labels[i]}⊗{labels[j]}" for i in range(self.algebra.dim)
                 for j in range(self.algebra.dim)]
        return render_vector(self.vector(), pairs)


class Subspace:
    """Subspace of an algebra, stored by its RREF basis."""

    def __init__(self, algebra, vectors):
        self.algebra = algebra
        vectors = [list(v.coords) if isinstance(v, Element) else [em.frac(x) for x in v]
                   for v in vectors]
        self.basis = tuple(tuple(r) for r in em.row_basis(vectors, algebra.dim))
        self._ech = em.Echelon(algebra.dim)
        for r in self.basis:
            self._ech.add({j: x for j, x in enumerate(r) if x})

    @property
    def dim(self):
        return len(self.basis)

    def elements(self):
        return [Element(self.algebra, r) for r in self.basis]

    def __contains__(self, x):
        coords = x.coords if isinstance(x, Element) else x
        return self._ech.contains({j: c for j, c in enumerate(coords) if c})

    def issubset(self, other):
        return all(r in other for r in self.basis)

    def __le__(self, other):
        return self.issubset(other)

    def __lt__(self, other):
        return self.issubset(other) and self.dim < other.dim

    def __eq__(self, other):
        return (isinstance(other, Subspace) and other.algebra is self.algebra
                and other.basis == self.basis)

    def __hash__(self):
        return hash(self.basis)

    def intersection(self, other):
        # v = sum a_i s_i = sum b_j o_j ; solve on stacked coefficients
        k = self.dim
        cols = [list(r) for r in self.basis] + [[-x for x in r] for r in other.basis]
        if not cols:
            return Subspace(self.algebra, [])
        system = em.transpose(cols)
        ker = em.nullspace(system, len(cols))
        vecs = []
        for c in ker:
            v = [Fraction(0)] * self.algebra.dim
            for a, r in zip(c[:k], self.basis):
                if a:
                    v = [x + a * y for x, y in zip(v, r)]
            vecs.append(v)
        return Subspace(self.algebra, vecs)

    def sum(self, other):
        return Subspace(self.algebra, list(self.basis) + list(other.basis))

    def __repr__(self):
        inner = ", ".join(repr(e) for e in self.elements())
        return f"span{{{inner}}}"


def _stacked_nullspace(A, blocks):
    rows = [r for m in blocks for r in m]
    return Subspace(A, em.nullspace(rows, A.dim) if rows else
                    [_unit_vec(A.dim, i) for i in range(A.dim)])


def center(A):
    blocks = []
    for e in A.basis():
        L, R = left_mult_matrix(e), right_mult_matrix(e)
        blocks.append([[a - b for a, b in zip(rl, rr)] for rl, rr in zip(L, R)])
    return _stacked_nullspace(A, blocks)


def radical(A):
    """Jacobson radical via the trace form {x : tr(L_x L_y) = 0 for all y}.

    Valid in characteristic zero.
    """
    n = A.dim
    # tr(L_x L_y) = tr(L_{xy})
    traces = [_trace(left_mult_matrix(e)) for e in A.basis()]
    gram = [[sum((c * traces[k] for k, c in A._sparse[i][j]), Fraction(0))
             for i in range(n)] for j in range(n)]
    J = Subspace(A, em.nullspace(gram, n))
    # the radical is a nilpotent ideal
    assert subspace_power(A, J, n + 1).dim == 0
    return J


def _trace(m):
    return sum((m[i][i] for i in range(len(m))), Fraction(0))


def socle_right(A, J=None):
    """{a : a*J = 0}."""
    J = radical(A) if J is None else J
    return _stacked_nullspace(A, [right_mult_matrix(r) for r in J.elements()])


def socle_left(A, J=None):
    """{a : J*a = 0}."""
    J = radical(A) if J is None else J
    return _stacked_nullspace(A, [left_mult_matrix(r) for r in J.elements()])


def ideal_generated(A, x):
    """Two-sided ideal A x A."""
    basis = A.basis()
    return Subspace(A, [e * x * f for e in basis for f in basis])


def right_ideal(A, x):
    return Subspace(A, [x * e for e in A.basis()])


def subspace_power(A, S, k):
    """Span of all k-fold products of elements of S."""
    if k < 1:
        raise ValueError("k must be >= 1")
    gens = S.elements()
    cur = S
    for _ in range(k - 1):
        cur = Subspace(A, [p * s for p in cur.elements() for s in gens])
        if cur.dim == 0:
            break
    return cur


def direct_product(A1, A2, name=None):
    n1, n2 = A1.dim, A2.dim
    n = n1 + n2
    labels = [f"({l},0)" for l in A1.labels] + [f"(0,{l})" for l in A2.labels]
    table = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(n1):
        for j in range(n1):
            table[i][j][:n1] = A1.product(i, j)
    for i in range(n2):
        for j in range(n2):
            table[n1 + i][n1 + j][n1:] = A2.product(i, j)
    one = list(A1.one.coords) + list(A2.one.coords)
    return Algebra(labels, table, one, name=name or f"{A1.name}x{A2.name}")


def tensor_product(A1, A2, name=None):
    """A1 (x) A2 with basis e_i (x) f_k at index i*dim(A2) + k."""
    n1, n2 = A1.dim, A2.dim
    labels = [f"{a}⊗{b}" for a in A1.labels for b in A2.labels]
    table = []
    for i in range(n1):
        for k in range(n2):
            row = []
            for j in range(n1):
                for l in range(n2):
                    row.append(_kron_vec(A1.product(i, j), A2.product(k, l)))
            table.append(row)
    one = _kron_vec(A1.one.coords, A2.one.coords)
    return Algebra(labels, table, one, name=name or f"{A1.name}⊗{A2.name}")


def _kron_vec(u, v):
    return [a * b for a in u for b in v]


def algebra_to_json(A):
    return {
        "name": A.name,
        "dim": A.dim,
        "labels": list(A.labels),
        "one": [em.fmt(x) for x in A.one.coords],
        "table": [[[em.fmt(x) for x in A.product(i, j)] for j in range(A.dim)]
                  for i in range(A.dim)],
    }


def algebra_from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    n = data["dim"]
    labels = data.get("labels") or [f"e{i}" for i in range(n)]
    if len(labels) != n:
        raise ValueError("label count does not match dim")
    return Algebra(labels, data["table"], data["one"], name=data.get("name"))


def parse_element(text, A):
    """Parse a rational combination of basis labels, e.g. ``2*x - 1/3*xy + e1``.

    A bare number stands for that multiple of the unit unless it is itself a
    basis label.
    """
    s = text.strip()
    if not s:
        raise ParseError("empty element expression")
    # split on top-level + / - (labels may contain parentheses and commas)
    terms, depth, cur, sign = [], 0, "", 1
    i = 0
    while i < len(s):
        ch = s[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-" and not (i > 0 and s[i - 1] == "^"):
            if cur.strip():
                terms.append((sign, cur.strip()))
            elif terms:
                raise ParseError(f"dangling operator in {text!r}")
            sign = 1 if ch == "+" else -1
            cur = ""
        else:
            cur += ch
        i += 1
    if not cur.strip():
        raise ParseError(f"expression {text!r} ends with an operator")
    terms.append((sign, cur.strip()))
    out = A.zero()
    for sign, t in terms:
        if t in A._index:
            out = out + sign * A[t]
            continue
        m = re.fullmatch(r"(\d+(?:/\d+)?)\s*(?:\*\s*(.+))?", t)
        if not m:
            raise ParseError(f"unknown basis label {t!r}; labels are {list(A.labels)}")
        c = em.frac(m.group(1)) * sign
        label = m.group(2)
        if label is None:
            out = out + c * A.one
        elif label.strip() in A._index:
            out = out + c * A[label.strip()]
        else:
            raise ParseError(f"unknown basis label {label.strip()!r}; labels are {list(A.labels)}")
    return out
