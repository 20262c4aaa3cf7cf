"""Bound quiver algebras kQ/I from a small text format.

Paths compose left to right: ``p*q`` is "p then q" and is nonzero only when
the target of p is the source of q, so ``e_v * p = p`` iff p starts at v.

The quotient is computed inside kQ/J^W (paths of length < W, W = maxlen)
which equals kQ/I whenever J^W is contained in I.  The ideal is the span of
all truncated products u*r*v; its RREF is taken with columns ordered from the
largest path down, so each relation eliminates its largest path and the
surviving basis paths are the smallest ones (deg-lex normal form).

File format::

    algebra NAME
    vertex 1 2
    arrow a : 1 -> 2
    arrow b : 2 -> 1
    relation a*b
    relation b*a - 2*b*a     # combinations of parallel paths
    maxlen 3
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx

from . import exactmath as em
from .algebra import Algebra, Subspace
from .errors import (
    InconsistentBound, NonComposablePath, NonParallelRelation, ParseError,
    RelationTooShort, UnknownBuiltin, UnknownVertex,
)

__all__ = [
    "Arrow", "Quiver", "Path", "Relation", "Presentation", "parse_presentation",
    "enumerate_paths", "build_algebra", "builtin", "parse_builtin_spec",
    "classify", "is_monomial", "monomial_basis", "graded_radical",
    "path_label",
]


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple = ()

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow names")
        for a in self.arrows:
            for v in (a.source, a.target):
                if v not in self.vertices:
                    raise UnknownVertex(f"arrow {a.name} uses undeclared vertex {v}")

    def arrow(self, name):
        for a in self.arrows:
            if a.name == name:
                return a
        raise KeyError(name)

    def out_arrows(self, v):
        return [a for a in self.arrows if a.source == v]

    def in_arrows(self, v):
        return [a for a in self.arrows if a.target == v]

    def graph(self):
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from((a.source, a.target) for a in self.arrows)
        return g


@dataclass(frozen=True)
class Path:
    source: str
    target: str
    arrows: tuple = ()

    @classmethod
    def trivial(cls, v):
        return cls(v, v, ())

    @classmethod
    def of(cls, quiver, names):
        """Path through the named arrows; raises if not composable."""
        if not names:
            raise ValueError("use Path.trivial for length-zero paths")
        arrows = [quiver.arrow(n) for n in names]
        for a, b in zip(arrows, arrows[1:]):
            if a.target != b.source:
                raise NonComposablePath(f"{a.name} ends at {a.target} but {b.name} "
                                        f"starts at {b.source}")
        return cls(arrows[0].source, arrows[-1].target, tuple(names))

    def __len__(self):
        return len(self.arrows)

    def then(self, other):
        """Concatenation self*other, or None if not composable."""
        if self.target != other.source:
            return None
        return Path(self.source, other.target, self.arrows + other.arrows)


@dataclass(frozen=True)
class Relation:
    terms: tuple  # ((Fraction, Path), ...)

    @property
    def source(self):
        return self.terms[0][1].source

    @property
    def target(self):
        return self.terms[0][1].target

    def is_monomial(self):
        return len(self.terms) == 1

    def __str__(self):
        parts = []
        for c, p in self.terms:
            word = "*".join(p.arrows)
            parts.append(word if c == 1 else f"{em.fmt(c)}*{word}")
        return " + ".join(parts)


@dataclass
class Presentation:
    name: str
    quiver: Quiver
    relations: list = field(default_factory=list)
    maxlen: int = 2

    def __post_init__(self):
        if self.maxlen < 2:
            raise ValueError("maxlen must be at least 2")


def path_key(quiver, p):
    """Sort key: (length, lexicographic in declaration order)."""
    if not p.arrows:
        return (0, (quiver.vertices.index(p.source),))
    order = {a.name: i for i, a in enumerate(quiver.arrows)}
    return (len(p.arrows), tuple(order[a] for a in p.arrows))


def path_label(quiver, p):
    if not p.arrows:
        return "1" if len(quiver.vertices) == 1 else f"e{p.source}"
    if all(len(a.name) == 1 for a in quiver.arrows):
        out = []
        names = p.arrows
        i = 0
        while i < len(names):
            j = i
            while j < len(names) and names[j] == names[i]:
                j += 1
            out.append(names[i] if j - i == 1 else f"{names[i]}^{j - i}")
            i = j
        return "".join(out)
    return "*".join(p.arrows)


def enumerate_paths(quiver, L):
    """All paths of length <= L, ordered by (length, lex)."""
    layer = [Path.trivial(v) for v in quiver.vertices]
    paths = list(layer)
    for _ in range(L):
        nxt = []
        for p in layer:
            for a in quiver.out_arrows(p.target):
                nxt.append(Path(p.source, a.target, p.arrows + (a.name,)))
        nxt.sort(key=lambda p: path_key(quiver, p))
        paths.extend(nxt)
        layer = nxt
    return paths


# -- quotient construction -------------------------------------------------------

class _Quotient:
    def __init__(self, pres, W):
        q = pres.quiver
        self.W = W
        self.paths = enumerate_paths(q, W - 1)
        self.index = {p: i for i, p in enumerate(self.paths)}
        N = len(self.paths)
        self.N = N
        ech = em.Echelon(N)
        ending = {v: [p for p in self.paths if p.target == v] for v in q.vertices}
        starting = {v: [p for p in self.paths if p.source == v] for v in q.vertices}
        for r in pres.relations:
            shortest = min(len(p) for _, p in r.terms)
            for u in ending[r.source]:
                if len(u) + shortest >= W:
                    continue
                for v in starting[r.target]:
                    if len(u) + shortest + len(v) >= W:
                        continue
                    row = {}
                    for c, t in r.terms:
                        w = u.then(t).then(v)
                        if len(w) < W:
                            col = N - 1 - self.index[w]
                            row[col] = row.get(col, 0) + c
                    ech.add(row)
        self.ideal = ech
        self.free = [i for i in range(N) if N - 1 - i not in ech.rows]
        self.position = {i: k for k, i in enumerate(self.free)}

    @property
    def dim(self):
        return len(self.free)

    def coords(self, path):
        out = [Fraction(0)] * len(self.free)
        if path is None or len(path) >= self.W:
            return out
        r = self.ideal.reduce({self.N - 1 - self.index[path]: Fraction(1)})
        for col, x in r.items():
            out[self.position[self.N - 1 - col]] = x
        return out


def build_algebra(pres, maxlen=None, probe=True):
    """Compile a presentation to ``(Algebra, basis paths)``.

    With ``probe`` the quotient is recomputed with bound maxlen+1; a change
    in dimension means J^maxlen is not inside I and raises InconsistentBound.
    """
    W = maxlen or pres.maxlen
    if W < 2:
        raise ValueError("maxlen must be at least 2")
    Q = _Quotient(pres, W)
    if probe:
        d2 = _Quotient(pres, W + 1).dim
        if d2 != Q.dim:
            raise InconsistentBound(
                f"dimension {Q.dim} at maxlen {W} but {d2} at maxlen {W + 1}; "
                f"J^{W} is not contained in the ideal")
    basis = [Q.paths[i] for i in Q.free]
    labels = [path_label(pres.quiver, p) for p in basis]
    if len(set(labels)) != len(labels):
        labels = ["*".join(p.arrows) or f"e{p.source}" for p in basis]
    table = [[Q.coords(p.then(r)) for r in basis] for p in basis]
    one = [Fraction(1) if not p.arrows else Fraction(0) for p in basis]
    return Algebra(labels, table, one, name=pres.name), basis


def is_monomial(pres):
    return all(r.is_monomial() for r in pres.relations)


def monomial_basis(pres, maxlen=None):
    """Paths of length < maxlen containing no relation monomial as a subpath.

    Independent of the linear-algebra quotient; only valid for monomial
    ideals (single-term relations).
    """
    if not is_monomial(pres):
        raise ValueError("presentation has non-monomial relations")
    W = maxlen or pres.maxlen
    q = pres.quiver
    forbidden = [r.terms[0][1].arrows for r in pres.relations]

    def contains(word, sub):
        k = len(sub)
        return any(word[i:i + k] == sub for i in range(len(word) - k + 1))

    found = []

    def grow(p):
        if any(contains(p.arrows, f) for f in forbidden):
            return
        found.append(p)
        if len(p) + 1 >= W:
            return
        for a in q.arrows:
            if a.source == p.target:
                grow(Path(p.source, a.target, p.arrows + (a.name,)))

    for v in q.vertices:
        grow(Path.trivial(v))
    return sorted(found, key=lambda p: path_key(q, p))


def graded_radical(algebra, basis_paths):
    """Span of the positive-length basis paths."""
    n = algebra.dim
    vecs = []
    for i, p in enumerate(basis_paths):
        if p.arrows:
            v = [Fraction(0)] * n
            v[i] = Fraction(1)
            vecs.append(v)
    return Subspace(algebra, vecs)


# -- classification ------------------------------------------------------------

def classify(pres):
    """Structural flags of the quiver and ideal."""
    q = pres.quiver
    g = q.graph()
    has_loop = any(a.source == a.target for a in q.arrows)
    acyclic = not has_loop and nx.is_directed_acyclic_graph(g)
    connected = nx.is_weakly_connected(g) if q.vertices else False
    sources = [v for v in q.vertices if not q.in_arrows(v)]
    sinks = [v for v in q.vertices if not q.out_arrows(v)]
    toupie = (len(sources) == 1 and len(sinks) == 1 and sources != sinks
              and all(len(q.in_arrows(v)) == 1 and len(q.out_arrows(v)) == 1
                      for v in q.vertices if v not in sources + sinks))
    Q = _Quotient(pres, pres.maxlen)
    rsz = Q.dim == len(q.vertices) + len(q.arrows)
    return {
        "acyclic": acyclic,
        "connected": connected,
        "toupie": toupie,
        "radical_square_zero": rsz,
        "single_vertex": len(q.vertices) == 1,
    }


# -- text format -----------------------------------------------------------------

_NUM = r"\d+(?:/\d+)?"
_TOKEN = re.compile(rf"\s*(?:(?P<num>{_NUM})|(?P<name>[^\W\d]\w*)|(?P<op>[*+\-]))")
_ARROW = re.compile(r"arrow\s+(?P<name>[^\W\d]\w*)\s*:\s*(?P<src>\w+)\s*->\s*(?P<dst>\w+)\s*$")


def _tokens(text, line, offset, source):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", line, offset + pos + 1, source)
        kind = m.lastgroup
        out.append((kind, m.group(kind), offset + m.start(kind) + 1))
        pos = m.end()
    return out


def _parse_relation(text, line, offset, quiver, source):
    toks = _tokens(text, line, offset, source)
    if not toks:
        raise ParseError("empty relation", line, offset + 1, source)
    terms = []
    i = 0
    sign = Fraction(1)
    expect_term = True
    while i < len(toks):
        kind, val, col = toks[i]
        if not expect_term:
            if kind == "op" and val in "+-":
                sign = Fraction(1) if val == "+" else Fraction(-1)
                expect_term = True
                i += 1
                continue
            raise ParseError(f"expected '+' or '-', got {val!r}", line, col, source)
        if kind == "op" and val in "+-" and not terms and sign == 1:
            sign = Fraction(1) if val == "+" else Fraction(-1)
            i += 1
            continue
        coef = Fraction(1)
        if kind == "num":
            coef = Fraction(val)
            if i + 1 >= len(toks) or toks[i + 1][1] != "*":
                raise ParseError("coefficient must be followed by '*'", line, col, source)
            i += 2
            if i >= len(toks):
                raise ParseError("missing path after coefficient", line, col, source)
            kind, val, col = toks[i]
        if kind != "name":
            raise ParseError(f"expected an arrow name, got {val!r}", line, col, source)
        names = [val]
        start_col = col
        i += 1
        while i + 1 < len(toks) and toks[i][1] == "*" and toks[i + 1][0] == "name":
            names.append(toks[i + 1][1])
            i += 2
        if i < len(toks) and toks[i][1] == "*":
            raise ParseError("dangling '*'", line, toks[i][2], source)
        for n in names:
            if n not in {a.name for a in quiver.arrows}:
                raise ParseError(f"unknown arrow {n!r}", line, start_col, source)
        try:
            path = Path.of(quiver, names)
        except NonComposablePath as e:
            raise NonComposablePath(e.message, line, start_col, source) from None
        if len(path) < 2:
            raise RelationTooShort(f"relation term {'*'.join(names)} has length "
                                   f"{len(path)} < 2", line, start_col, source)
        terms.append((sign * coef, path))
        sign = Fraction(1)
        expect_term = False
    if expect_term:
        raise ParseError("relation ends with an operator", line, toks[-1][2], source)
    ends = {(p.source, p.target) for _, p in terms}
    if len(ends) > 1:
        raise NonParallelRelation("relation terms are not parallel paths", line, offset + 1, source)
    merged = {}
    order = []
    for c, p in terms:
        if p not in merged:
            order.append(p)
            merged[p] = Fraction(0)
        merged[p] += c
    terms = tuple((merged[p], p) for p in order if merged[p])
    if not terms:
        raise ParseError("relation is identically zero", line, offset + 1, source)
    return Relation(terms)


def parse_presentation(text, source=None):
    name = None
    vertices = []
    arrows = []
    pending = []
    maxlen = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        indent = len(line) - len(line.lstrip())
        word = stripped.split(None, 1)[0]
        rest = stripped[len(word):]
        if word == "algebra":
            if not rest.strip():
                raise ParseError("missing algebra name", lineno, indent + 1, source)
            name = rest.strip()
        elif word == "vertex":
            for m in re.finditer(r"\S+", rest):
                v = m.group()
                col = indent + len(word) + m.start() + 1
                if not re.fullmatch(r"\w+", v):
                    raise ParseError(f"bad vertex name {v!r}", lineno, col, source)
                if v in vertices:
                    raise ParseError(f"duplicate vertex {v!r}", lineno, col, source)
                vertices.append(v)
        elif word == "arrow":
            m = _ARROW.match(stripped)
            if not m:
                raise ParseError("expected 'arrow NAME : SRC -> DST'", lineno, indent + 1, source)
            for key in ("src", "dst"):
                if m.group(key) not in vertices:
                    raise UnknownVertex(f"undeclared vertex {m.group(key)!r}", lineno,
                                        indent + m.start(key) + 1, source)
            if m.group("name") in {a.name for a in arrows}:
                raise ParseError(f"duplicate arrow {m.group('name')!r}", lineno,
                                 indent + m.start("name") + 1, source)
            arrows.append(Arrow(m.group("name"), m.group("src"), m.group("dst")))
        elif word == "relation":
            pending.append((lineno, indent + len(word), line[indent + len(word):]))
        elif word == "maxlen":
            val = rest.strip()
            if not re.fullmatch(r"\d+", val) or int(val) < 2:
                raise ParseError("maxlen must be an integer >= 2", lineno, indent + len(word) + 2, source)
            maxlen = int(val)
        else:
            raise ParseError(f"unknown directive {word!r}", lineno, indent + 1, source)
    if not vertices:
        raise ParseError("no vertices declared", None, None, source)
    quiver = Quiver(tuple(vertices), tuple(arrows))
    relations = [_parse_relation(t, ln, off, quiver, source) for ln, off, t in pending]
    if maxlen is None:
        g = quiver.graph()
        if any(a.source == a.target for a in arrows) or not nx.is_directed_acyclic_graph(g):
            raise ParseError("maxlen is required for quivers with oriented cycles", None, None, source)
        maxlen = max(2, nx.dag_longest_path_length(g) + 1)
    return Presentation(name or "A", quiver, relations, maxlen)


# -- builtin algebras ------------------------------------------------------------

def _matrix(n):
    labels = [f"E{i}{j}" if n < 10 else f"E{i},{j}" for i in range(1, n + 1)
              for j in range(1, n + 1)]
    N = n * n
    table = [[[0] * N for _ in range(N)] for _ in range(N)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j == k:
                        table[i * n + j][k * n + l][i * n + l] = 1
    one = [1 if i == j else 0 for i in range(n) for j in range(n)]
    return Algebra(labels, table, one, name=f"matrix_{n}")


def _power_labels(var, n):
    return (["1", var] + [f"{var}^{k}" for k in range(2, n)])[:n]


def _cyclic_group(n):
    table = [[[1 if k == (i + j) % n else 0 for k in range(n)] for j in range(n)]
             for i in range(n)]
    return Algebra(_power_labels("g", n), table, [1] + [0] * (n - 1), name=f"cyclic_group_{n}")


def _truncated_poly(n):
    d = n + 1
    table = [[[1 if k == i + j else 0 for k in range(d)] for j in range(d)] for i in range(d)]
    return Algebra(_power_labels("x", d), table, [1] + [0] * n, name=f"truncated_poly_{n}")


def _field_product(n):
    labels = [f"e{i}" for i in range(1, n + 1)]
    table = [[[1 if k == i == j else 0 for k in range(n)] for j in range(n)] for i in range(n)]
    return Algebra(labels, table, [1] * n, name=f"field_product_{n}")


_BUILTINS = {
    "matrix": (_matrix, 1),
    "cyclic_group": (_cyclic_group, 1),
    "truncated_poly": (_truncated_poly, 0),
    "field_product": (_field_product, 1),
}


def builtin(name, *params):
    """Named algebra; returns ``(Algebra, labels)``.

    matrix(n): n x n matrices; cyclic_group(n): group algebra of C_n;
    truncated_poly(n): k[x]/x^(n+1); field_product(n): k x ... x k.
    """
    if name not in _BUILTINS:
        raise UnknownBuiltin(f"unknown builtin {name!r}; known: {', '.join(sorted(_BUILTINS))}")
    make, lo = _BUILTINS[name]
    if len(params) != 1:
        raise UnknownBuiltin(f"builtin {name} takes one integer parameter")
    n = int(params[0])
    if n < lo:
        raise UnknownBuiltin(f"builtin {name} needs parameter >= {lo}")
    A = make(n)
    return A, list(A.labels)


def parse_builtin_spec(spec):
    """``builtin:matrix:2`` -> (Algebra, labels)."""
    parts = spec.split(":")
    if len(parts) != 3 or parts[0] != "builtin" or not parts[2].isdigit():
        raise UnknownBuiltin(f"expected builtin:NAME:N, got {spec!r}")
    return builtin(parts[1], int(parts[2]))
