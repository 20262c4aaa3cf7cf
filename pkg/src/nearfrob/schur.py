"""Algebra morphisms, Schur elements and split sections.

For an epimorphism phi: A -> B onto a Frobenius algebra (B, eps) and a
nearly Frobenius coproduct on A with Delta(1) = sum T[i][j] e_i (x) e_j, the
Schur element puts eps on the first leg::

    s = sum_ij T[i][j] eps(phi(e_i)) phi(e_j)

and, when s is invertible, sigma(b) = sum_ij T[i][j] eps(b s^-1 phi(e_i)) e_j
is a right A-linear section of phi.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from . import exactmath as em
from .algebra import (
    Element, TensorElement, is_unit, left_mult_matrix, parse_element,
    right_mult_matrix,
)
from .errors import (
    NotMultiplicative, NotSurjective, NotUnital, ParseError, RelationNotKilled,
    SchurNotInvertible, TargetNotFrobenius,
)
from .frobenius import Coproduct, Counit, handle
from .presentations import builtin

__all__ = [
    "AlgebraMorphism", "SchurData", "Section", "make_morphism",
    "morphism_from_generators", "identity_morphism", "parse_morphism",
    "schur_sum", "schur_element", "counit_of", "verify_casimir_transport",
    "verify_handle_transport", "section", "find_section",
    "is_symmetric_counit", "check_split_counterexamples",
]


class AlgebraMorphism:
    """Linear map A -> B; matrix column i holds phi(e_i)."""

    def __init__(self, source, target, matrix, name=None, check=True):
        self.source = source
        self.target = target
        self.name = name
        self.matrix = [[em.frac(x) for x in row] for row in matrix]
        if len(self.matrix) != target.dim or any(len(r) != source.dim for r in self.matrix):
            raise ValueError(f"morphism matrix must be {target.dim}x{source.dim}")
        self.rank = em.rank(self.matrix) if self.matrix else 0
        if check:
            self._check()

    def _check(self):
        A, B = self.source, self.target
        if self(A.one) != B.one:
            raise NotUnital(f"phi(1) = {self(A.one)!r}, expected 1")
        images = [self(e) for e in A.basis()]
        for i, a in enumerate(A.basis()):
            for j, b in enumerate(A.basis()):
                if self(a * b) != images[i] * images[j]:
                    raise NotMultiplicative((i, j), A.labels)

    @property
    def is_surjective(self):
        return self.rank == self.target.dim

    def __call__(self, x):
        return Element(self.target, em.matvec(self.matrix, x.coords))

    def push(self, t):
        """(phi (x) phi) t"""
        P = em.matmul(em.matmul(self.matrix, t.matrix()), em.transpose(self.matrix))
        return TensorElement(self.target, P)

    def __repr__(self):
        return f"AlgebraMorphism({self.source.name} -> {self.target.name})"


def make_morphism(A, B, images, name=None):
    """Morphism from the images of A's basis (Elements, vectors or expressions)."""
    cols = []
    for x in images:
        if isinstance(x, str):
            x = parse_element(x, B)
        cols.append(list(x.coords) if isinstance(x, Element) else x)
    if len(cols) != A.dim:
        raise ValueError(f"need {A.dim} basis images, got {len(cols)}")
    return AlgebraMorphism(A, B, em.transpose(cols) if cols else [[] for _ in range(B.dim)], name=name)


def identity_morphism(A):
    return AlgebraMorphism(A, A, em.identity(A.dim), name="id")


def morphism_from_generators(pres, A, paths, B, vertex_images, arrow_images, name=None):
    """Morphism kQ/I -> B from images of vertices and arrows.

    The vertex images must be orthogonal idempotents summing to 1 and every
    relation must map to zero; the result is then checked on all basis pairs.
    """
    q = pres.quiver

    def img(x):
        return parse_element(x, B) if isinstance(x, str) else x

    vimg = {v: img(vertex_images[v]) for v in q.vertices}
    aimg = {a.name: img(arrow_images[a.name]) for a in q.arrows}
    total = B.zero()
    for v in q.vertices:
        total = total + vimg[v]
    if total != B.one:
        raise NotUnital(f"vertex images sum to {total!r}, not 1")
    for v in q.vertices:
        for w in q.vertices:
            expect = vimg[v] if v == w else B.zero()
            if vimg[v] * vimg[w] != expect:
                raise NotMultiplicative((A.index(_vertex_label(A, paths, v)),
                                         A.index(_vertex_label(A, paths, w))), A.labels)

    def path_image(p):
        if not p.arrows:
            return vimg[p.source]
        out = vimg[p.source]
        for a in p.arrows:
            out = out * aimg[a]
        return out

    for r in pres.relations:
        value = B.zero()
        for c, p in r.terms:
            value = value + c * path_image(p)
        if not value.is_zero():
            raise RelationNotKilled(str(r))
    return make_morphism(A, B, [path_image(p) for p in paths], name=name)


def _vertex_label(A, paths, v):
    for i, p in enumerate(paths):
        if not p.arrows and p.source == v:
            return A.labels[i]
    raise KeyError(v)


_HEADER = re.compile(r"morphism\s+(?P<name>\S+)\s*:\s*(?P<src>\S+)\s*->\s*(?P<dst>\S+)\s*$")
_MAP = re.compile(r"(?P<kind>vertex|arrow|basis)\s+(?P<key>\S+)\s*->\s*(?P<expr>.+?)\s*$")


def parse_morphism(text, A, B, pres=None, paths=None, source=None):
    """Parse the morphism file format.

    ``vertex``/``arrow`` lines need the source presentation; ``basis LABEL ->``
    lines give images of A's basis directly (JSON or builtin sources).
    """
    name = None
    gens = {"vertex": {}, "arrow": {}, "basis": {}}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        stripped = line.strip()
        col = len(line) - len(line.lstrip()) + 1
        if stripped.startswith("morphism"):
            m = _HEADER.match(stripped)
            if not m:
                raise ParseError("expected 'morphism NAME : SRC -> DST'", lineno, col, source)
            name = m.group("name")
            for key, alg in (("src", A), ("dst", B)):
                if alg.name is not None and m.group(key) != alg.name:
                    raise ParseError(f"morphism {key} {m.group(key)!r} does not match algebra "
                                     f"{alg.name!r}", lineno, col + m.start(key), source)
            continue
        m = _MAP.match(stripped)
        if not m:
            raise ParseError("expected 'vertex|arrow|basis KEY -> EXPR'", lineno, col, source)
        try:
            value = parse_element(m.group("expr"), B)
        except ParseError as e:
            raise ParseError(e.message, lineno, col + m.start("expr"), source) from None
        gens[m.group("kind")][m.group("key")] = value
    if name is None:
        raise ParseError("missing 'morphism' header", None, None, source)
    if gens["basis"]:
        if gens["vertex"] or gens["arrow"]:
            raise ParseError("cannot mix basis lines with vertex/arrow lines", None, None, source)
        missing = [l for l in A.labels if l not in gens["basis"]]
        if missing:
            raise ParseError(f"no image given for basis elements {missing}", None, None, source)
        return make_morphism(A, B, [gens["basis"][l] for l in A.labels], name=name)
    if pres is None:
        raise ParseError("vertex/arrow images need a quiver presentation as source", None, None, source)
    missing = [v for v in pres.quiver.vertices if v not in gens["vertex"]]
    missing += [a.name for a in pres.quiver.arrows if a.name not in gens["arrow"]]
    if missing:
        raise ParseError(f"no image given for {missing}", None, None, source)
    return morphism_from_generators(pres, A, paths, B, gens["vertex"], gens["arrow"], name=name)


# -- Schur elements ------------------------------------------------------------------

def _as_counit(B, eps):
    return eps if isinstance(eps, Counit) else Counit(B, eps)


def schur_sum(phi, cA, epsB):
    """sum_ij T[i][j] eps(phi(e_i)) phi(e_j), with no Frobenius precondition."""
    B = phi.target
    epsB = _as_counit(B, epsB)
    T = cA.t1.coeff
    weights = [epsB(phi(e)) for e in phi.source.basis()]
    out = [Fraction(0)] * B.dim
    for i, row in enumerate(T):
        if not weights[i]:
            continue
        for j, c in enumerate(row):
            if c:
                col = [r[j] for r in phi.matrix]
                f = c * weights[i]
                out = [a + f * b for a, b in zip(out, col)]
    return Element(B, out)


@dataclass
class SchurData:
    s_phi: Element
    central: bool
    invertible: bool
    inverse: Element = None
    section: "Section" = None
    target_frobenius: bool = True


def schur_element(phi, cA, epsB, require_frobenius=True):
    """Schur element of phi for the coproduct cA and counit epsB of the target.

    With ``require_frobenius=False`` a degenerate counit is accepted and only
    the defining sum is evaluated (no section is built).
    """
    B = phi.target
    epsB = _as_counit(B, epsB)
    if not phi.is_surjective:
        raise NotSurjective(f"rank {phi.rank} < dim B = {B.dim}")
    frob = epsB.is_nondegenerate()
    if require_frobenius and not frob:
        raise TargetNotFrobenius("counit on the target has a singular Gram matrix")
    s = schur_sum(phi, cA, epsB)
    # reported, not assumed: over a noncommutative target s need not be central
    central = all(s * b == b * s for b in B.basis())
    inv = is_unit(s)
    data = SchurData(s, central, inv is not None, inv, target_frobenius=frob)
    if inv is not None and frob:
        data.section = section(phi, cA, epsB, inv)
    return data


def counit_of(cB):
    """Recover eps from a Frobenius coproduct: Delta(1) = G^-1 with G[i][j] = eps(e_i e_j)."""
    B = cB.algebra
    G = em.invert(cB.t1.matrix())
    if G is None:
        raise TargetNotFrobenius("coproduct matrix is singular, not a Frobenius coproduct")
    one = B.one.coords
    eps = [sum((one[i] * G[i][k] for i in range(B.dim)), Fraction(0)) for k in range(B.dim)]
    eps = Counit(B, eps)
    if em.invert(eps.gram()) != cB.t1.matrix():
        raise TargetNotFrobenius("coproduct is not the dual-basis coproduct of a counit")
    return eps


def _second_leg(s, t):
    """(1 (x) s) t, s multiplying the second leg from the left"""
    return em.matmul(t.matrix(), em.transpose(left_mult_matrix(s)))


def verify_casimir_transport(phi, cA, cB, epsB=None, leg="first"):
    """(phi (x) phi) Delta_A(1) == s_phi Delta_B(1).

    ``leg="first"`` reads the right side as (s (x) 1) Delta_B(1); ``"second"``
    as (1 (x) s) Delta_B(1).  The second form holds for every coproduct on A;
    the two agree whenever s is central.
    """
    epsB = counit_of(cB) if epsB is None else _as_counit(phi.target, epsB)
    s = schur_sum(phi, cA, epsB)
    lhs = phi.push(cA.t1)
    if leg == "first":
        rhs = em.matmul(left_mult_matrix(s), cB.t1.matrix())
    elif leg == "second":
        rhs = _second_leg(s, cB.t1)
    else:
        raise ValueError(f"leg must be 'first' or 'second', got {leg!r}")
    return lhs == TensorElement(phi.target, rhs)


def verify_handle_transport(phi, cA, cB, epsB=None, leg="first"):
    """phi(omega_A) == s * omega_B, or == m((1 (x) s) Delta_B(1)) for ``leg="second"``."""
    epsB = counit_of(cB) if epsB is None else _as_counit(phi.target, epsB)
    s = schur_sum(phi, cA, epsB)
    if leg == "first":
        rhs = s * handle(cB)
    elif leg == "second":
        rhs = TensorElement(phi.target, _second_leg(s, cB.t1)).multiply()
    else:
        raise ValueError(f"leg must be 'first' or 'second', got {leg!r}")
    return phi(handle(cA)) == rhs


@dataclass
class Section:
    phi: AlgebraMorphism
    matrix: list  # dim A x dim B
    splits: bool
    right_linear: bool
    left_linear: bool = None  # only checked in the symmetric case

    def __call__(self, b):
        return Element(self.phi.source, em.matvec(self.matrix, b.coords))

    @property
    def is_bimodule(self):
        return bool(self.splits and self.right_linear and self.left_linear)


def _linearity(phi, M, side):
    A = phi.source
    mult = right_mult_matrix if side == "right" else left_mult_matrix
    for a in A.basis():
        # sigma o (mult by phi(a) on B) == (mult by a on A) o sigma
        if em.matmul(M, mult(phi(a))) != em.matmul(mult(a), M):
            return False
    return True


def section(phi, cA, epsB, s_inverse=None):
    """sigma(b) = sum_ij T[i][j] eps(b s^-1 phi(e_i)) e_j, with its checks."""
    A, B = phi.source, phi.target
    epsB = _as_counit(B, epsB)
    if s_inverse is None:
        s_inverse = is_unit(schur_sum(phi, cA, epsB))
        if s_inverse is None:
            raise SchurNotInvertible("Schur element is not invertible")
    T = cA.t1.coeff
    phis = [phi(e) for e in A.basis()]
    cols = []
    for b in B.basis():
        bs = b * s_inverse
        w = [epsB(bs * p) for p in phis]
        v = [Fraction(0)] * A.dim
        for i, row in enumerate(T):
            if w[i]:
                for j, c in enumerate(row):
                    if c:
                        v[j] += c * w[i]
        cols.append(v)
    M = em.transpose(cols)
    splits = em.matmul(phi.matrix, M) == em.identity(B.dim)
    right = _linearity(phi, M, "right")
    left = None
    if cA.is_symmetric() and epsB.is_symmetric():
        left = _linearity(phi, M, "left")
    return Section(phi, M, splits, right, left)


def find_section(phi, side="right"):
    """A linear sigma: B -> A with phi o sigma = id that is A-linear on the
    given side ("right", "left" or "both"), or None if none exists."""
    A, B = phi.source, phi.target
    nA, nB = A.dim, B.dim

    def var(j, b):
        return j * nB + b

    rows, rhs = [], []
    for r in range(nB):
        for b in range(nB):
            row = {var(j, b): phi.matrix[r][j] for j in range(nA) if phi.matrix[r][j]}
            rows.append(row)
            rhs.append(1 if r == b else 0)
    sides = ("right", "left") if side == "both" else (side,)
    for sd in sides:
        mult = right_mult_matrix if sd == "right" else left_mult_matrix
        for a in A.basis():
            MB, MA = mult(phi(a)), mult(a)
            for j in range(nA):
                for b in range(nB):
                    row = {}
                    for c in range(nB):
                        if MB[c][b]:
                            row[var(j, c)] = row.get(var(j, c), 0) + MB[c][b]
                    for k in range(nA):
                        if MA[j][k]:
                            row[var(k, b)] = row.get(var(k, b), 0) - MA[j][k]
                    row = {key: x for key, x in row.items() if x}
                    if row:
                        rows.append(row)
                        rhs.append(0)
    x = em.sparse_solve(rows, rhs, nA * nB)
    if x is None:
        return None
    return [[x[var(j, b)] for b in range(nB)] for j in range(nA)]


def is_symmetric_counit(B, epsB):
    return _as_counit(B, epsB).is_symmetric()


def check_split_counterexamples():
    """Morphisms whose Schur element is not invertible and that split anyway,
    plus a control that does not split."""
    from . import fixtures  # fixtures imports this module

    report = {}

    # loop with an arrow onto the dual numbers
    fx = fixtures.loop_arrow_projection()
    phi, E = fx["phi"], fx["space"]
    stated = [schur_sum(phi, d, fx["stated_counit"]) for d in E.basis]
    corrected = [schur_sum(phi, d, fx["counit"]) for d in E.basis]
    incl = fx["inclusion"]
    report["loop_arrow"] = {
        "family_dim": E.dim,
        "stated_counit_nondegenerate": Counit(phi.target, fx["stated_counit"]).is_nondegenerate(),
        "s_phi_stated_counit": [repr(s) for s in stated],
        "s_phi_zero": all(s.is_zero() for s in stated),
        "s_phi_nondegenerate_counit": [repr(s) for s in corrected],
        "s_phi_invertible": any(is_unit(s) is not None for s in corrected),
        "split_found": em.matmul(phi.matrix, incl) == em.identity(phi.target.dim),
        "inclusion_left_linear": _linearity(phi, incl, "left"),
        "inclusion_right_linear": _linearity(phi, incl, "right"),
        "right_section_exists": find_section(phi, "right") is not None,
        "bimodule_section_exists": find_section(phi, "both") is not None,
    }

    # identity of k[x]/x^2 with Delta(1) = x (x) x
    A, _ = builtin("truncated_poly", 1)
    x = A["x"]
    c1 = Coproduct(TensorElement.from_terms(A, [(1, x, x)]))
    idA = identity_morphism(A)
    data = schur_element(idA, c1, [0, 1])
    report["dual_numbers_identity"] = {
        "s": repr(data.s_phi),
        "invertible": data.invertible,
        "split": "identity",
        "identity_bimodule_section": _linearity(idA, em.identity(2), "left")
        and _linearity(idA, em.identity(2), "right"),
    }

    # control: k[x]/x^2 -> k, x -> 0
    K, _ = builtin("truncated_poly", 0)
    p = make_morphism(A, K, [K.one, K.zero()])
    s = schur_sum(p, c1, [1])
    report["dual_numbers_to_field"] = {
        "s_phi": repr(s),
        "right_section_exists": find_section(p, "right") is not None,
        "left_section_exists": find_section(p, "left") is not None,
        "bimodule_section_exists": find_section(p, "both") is not None,
    }
    return report
