"""Nearly Frobenius coproducts, handle elements and Frobenius detection.

A bimodule map Delta: A -> A (x) A is determined by T = Delta(1) through
Delta(x) = (x (x) 1) T, and T is admissible exactly when
(a (x) 1) T = T (1 (x) a) for every a.  In coefficient-matrix form that is
L_a T = T R_a^t, one block of n^2 linear equations per basis element.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from . import exactmath as em
from .algebra import (
    Element, Subspace, TensorElement, left_mult_matrix, radical,
    render_vector, right_mult_matrix, socle_left, socle_right,
)
from .errors import DegenerateForm, NotCentral, PreconditionUnmet
from .presentations import classify

__all__ = [
    "Coproduct", "FrobeniusSpace", "Counit", "FrobeniusVerdict",
    "is_bimodule", "frobenius_space", "handle", "star_action",
    "symmetric_subspace", "separability_element", "is_separable",
    "frobenius_check", "frobenius_from_counit", "handle_socle_power",
    "handle_in_radical", "all_handles_zero", "product_coproduct",
    "tensor_coproduct", "symbolic_handle", "handle_image",
]


def is_bimodule(t):
    A = t.algebra
    T = t.matrix()
    for a in A.basis():
        lhs = em.matmul(left_mult_matrix(a), T)
        rhs = em.matmul(T, em.transpose(right_mult_matrix(a)))
        if lhs != rhs:
            return False
    return True


class Coproduct:
    """Bimodule coproduct, stored by its value at 1."""

    def __init__(self, t1, check=True):
        if not isinstance(t1, TensorElement):
            raise TypeError("a coproduct is given by a TensorElement")
        self.algebra = t1.algebra
        self.t1 = t1
        if check and not is_bimodule(t1):
            raise ValueError("Delta(1) violates the bimodule condition")

    def __call__(self, x):
        return self.t1.left_act(x)

    def is_symmetric(self):
        return self.t1 == self.t1.transpose()

    def __add__(self, other):
        return Coproduct(self.t1 + other.t1, check=False)

    def __rmul__(self, c):
        return Coproduct(em.frac(c) * self.t1, check=False)

    def __eq__(self, other):
        return isinstance(other, Coproduct) and self.t1 == other.t1

    def __hash__(self):
        return hash(self.t1)

    def __repr__(self):
        return f"Coproduct({self.t1!r})"


@dataclass
class FrobeniusSpace:
    algebra: object
    basis: list

    @property
    def dim(self):
        return len(self.basis)

    def combination(self, coeffs):
        n = self.algebra.dim
        m = em.zeros(n, n)
        for c, d in zip(coeffs, self.basis):
            c = em.frac(c)
            if c:
                m = em.mat_add(m, em.mat_scale(c, d.t1.coeff))
        return Coproduct(TensorElement(self.algebra, m), check=False)

    def contains(self, t):
        """Whether a TensorElement (or Coproduct) lies in the span."""
        if isinstance(t, Coproduct):
            t = t.t1
        n2 = self.algebra.dim ** 2
        ech = em.Echelon(n2)
        for d in self.basis:
            ech.add({j: x for j, x in enumerate(d.t1.vector()) if x})
        return ech.contains({j: x for j, x in enumerate(t.vector()) if x})


def _bimodule_rows(A):
    """Sparse rows of L_a T - T R_a^t = 0 over unknowns T[i][j] -> i*n + j."""
    n = A.dim
    for a in A.basis():
        L = left_mult_matrix(a)
        R = right_mult_matrix(a)
        for i in range(n):
            Li = [(k, x) for k, x in enumerate(L[i]) if x]
            for j in range(n):
                row = {}
                for k, x in Li:
                    row[k * n + j] = row.get(k * n + j, 0) + x
                for k, x in enumerate(R[j]):
                    if x:
                        c = i * n + k
                        v = row.get(c, 0) - x
                        if v:
                            row[c] = v
                        else:
                            row.pop(c, None)
                if row:
                    yield row


def frobenius_space(A):
    """All nearly Frobenius coproducts on A.

    The basis is the RREF of the solution space in the row-major order of the
    unknowns T[i][j], so it is canonical and reproducible.
    """
    n = A.dim
    kernel = em.sparse_nullspace(_bimodule_rows(A), n * n)
    basis = []
    for v in em.row_basis(kernel, n * n):
        T = [v[i * n:(i + 1) * n] for i in range(n)]
        basis.append(Coproduct(TensorElement(A, T), check=False))
    return FrobeniusSpace(A, basis)


def handle(c):
    """omega = m(Delta(1)); always central."""
    w = (c.t1 if isinstance(c, Coproduct) else c).multiply()
    A = w.algebra
    assert all(w * e == e * w for e in A.basis()), "handle element is not central"
    return w


def star_action(u, c):
    """u * Delta : x -> (x (x) u) Delta(1); needs u central."""
    A = c.algebra
    if u.algebra is not A:
        raise ValueError("element and coproduct live on different algebras")
    if not all(u * e == e * u for e in A.basis()):
        raise NotCentral(f"{u!r} is not central")
    T = em.matmul(c.t1.matrix(), em.transpose(left_mult_matrix(u)))
    return Coproduct(TensorElement(A, T))


def symmetric_subspace(E):
    """Members of E with Delta(1) fixed by the flip."""
    A = E.algebra
    if not E.basis:
        return FrobeniusSpace(A, [])
    cols = [(d.t1 - d.t1.transpose()).vector() for d in E.basis]
    ker = em.nullspace(em.transpose(cols), len(cols))
    n2 = A.dim ** 2
    vecs = [E.combination(c).t1.vector() for c in ker]
    n = A.dim
    out = []
    for v in em.row_basis(vecs, n2):
        out.append(Coproduct(TensorElement(A, [v[i * n:(i + 1) * n] for i in range(n)]), check=False))
    return FrobeniusSpace(A, out)


def separability_element(A):
    """Some e with a e = e a for all a and m(e) = 1, or None."""
    n = A.dim
    rows = list(_bimodule_rows(A))
    rhs = [0] * len(rows)
    for k in range(n):
        row = {}
        for i in range(n):
            for j in range(n):
                x = A.product(i, j)[k]
                if x:
                    row[i * n + j] = x
        rows.append(row)
        rhs.append(A.one.coords[k])
    x = em.sparse_solve(rows, rhs, n * n)
    if x is None:
        return None
    e = TensorElement(A, [x[i * n:(i + 1) * n] for i in range(n)])
    assert is_bimodule(e) and e.multiply() == A.one
    return e


def is_separable(A):
    return separability_element(A) is not None


@dataclass(frozen=True)
class Counit:
    algebra: object
    eps: tuple

    def __post_init__(self):
        object.__setattr__(self, "eps", tuple(em.frac(x) for x in self.eps))
        if len(self.eps) != self.algebra.dim:
            raise ValueError("counit needs one value per basis element")

    def __call__(self, x):
        return sum((a * b for a, b in zip(self.eps, x.coords) if a and b), Fraction(0))

    def gram(self):
        A = self.algebra
        return [[sum((self.eps[k] * c for k, c in enumerate(A.product(i, j)) if c), Fraction(0))
                 for j in range(A.dim)] for i in range(A.dim)]

    def is_nondegenerate(self):
        return em.invert(self.gram()) is not None

    def is_symmetric(self):
        G = self.gram()
        return G == em.transpose(G)

    def first_leg(self, t):
        """(eps (x) id) t"""
        A = self.algebra
        v = [sum((self.eps[i] * t.coeff[i][j] for i in range(A.dim)), Fraction(0))
             for j in range(A.dim)]
        return Element(A, v)

    def second_leg(self, t):
        """(id (x) eps) t"""
        A = self.algebra
        v = [sum((t.coeff[i][j] * self.eps[j] for j in range(A.dim)), Fraction(0))
             for i in range(A.dim)]
        return Element(A, v)


def frobenius_from_counit(A, eps):
    """Frobenius coproduct of a nondegenerate counit.

    With Gram matrix G[i][j] = eps(e_i e_j) the dual basis e^j has
    coordinates column j of G^-1 (so eps(e_i e^j) = delta_ij) and
    Delta(1) = sum_j e^j (x) e_j, whose coefficient matrix is G^-1 itself.
    """
    if not isinstance(eps, Counit):
        eps = Counit(A, eps)
    Ginv = em.invert(eps.gram())
    if Ginv is None:
        raise DegenerateForm("Gram matrix of the counit is singular")
    t = TensorElement(A, Ginv)
    if not is_bimodule(t):
        raise AssertionError("dual-basis coproduct fails the bimodule condition")
    if eps.first_leg(t) != A.one or eps.second_leg(t) != A.one:
        raise AssertionError("dual-basis coproduct is not counital")
    return Coproduct(t, check=False)


@dataclass
class FrobeniusVerdict:
    status: str  # "frobenius" | "not_frobenius" | "inconclusive"
    counit: Counit = None
    coproduct: Coproduct = None
    certificate: Subspace = None  # span of the (phi (x) id) T
    certificate_side: str = None
    trials: int = 0

    @property
    def is_frobenius(self):
        return self.status == "frobenius"


def _leg_span(E, side):
    A = E.algebra
    vecs = []
    for d in E.basis:
        m = d.t1.coeff if side == "first" else em.transpose(d.t1.coeff)
        vecs.extend(list(r) for r in m if any(r))
    return Subspace(A, vecs)


def frobenius_check(A, trials=20, bound=10, seed=0, space=None):
    """Decide Frobenius-ness where possible.

    1. Certificate: a counital coproduct T has (eps (x) id) T = 1, which lies
       in the span S of the rows of all basis matrices of E_A.  If 1 is not in
       S (or in the analogous column span) no counit exists.
    2. Witness: random integer counits in [-bound, bound]; a nondegenerate
       Gram matrix gives a Frobenius structure.
    3. Otherwise inconclusive.
    """
    E = frobenius_space(A) if space is None else space
    for side in ("first", "second"):
        S = _leg_span(E, side)
        if A.one not in S:
            return FrobeniusVerdict("not_frobenius", certificate=S, certificate_side=side)
    rng = random.Random(seed)
    for t in range(1, trials + 1):
        eps = Counit(A, [rng.randint(-bound, bound) for _ in range(A.dim)])
        if eps.is_nondegenerate():
            return FrobeniusVerdict("frobenius", counit=eps,
                                    coproduct=frobenius_from_counit(A, eps), trials=t)
    return FrobeniusVerdict("inconclusive", trials=trials)


def handle_socle_power(A, c, socles=None):
    """Least k in 1..dim+1 with omega^k in both socles, else None."""
    if socles is None:
        J = radical(A)
        socles = (socle_right(A, J), socle_left(A, J))
    w = handle(c)
    p = w
    for k in range(1, A.dim + 2):
        if all(p in s for s in socles):
            return k
        p = p * w
    return None


def handle_in_radical(pres, A, E):
    """Every handle lies in the radical (connected, non-single-vertex quivers)."""
    flags = classify(pres)
    if not flags["connected"] or flags["single_vertex"]:
        raise PreconditionUnmet("needs a connected quiver with more than one vertex")
    J = radical(A)
    return all(handle(d) in J for d in E.basis)


def all_handles_zero(E):
    return all(handle(d).is_zero() for d in E.basis)


def handle_image(E):
    """Subspace {omega_Delta : Delta in E}."""
    return Subspace(E.algebra, [handle(d) for d in E.basis])


def product_coproduct(c1, c2, AB):
    """Block coproduct on the direct product AB = A1 x A2."""
    n1, n2 = c1.algebra.dim, c2.algebra.dim
    n = n1 + n2
    T = em.zeros(n, n)
    for i in range(n1):
        for j in range(n1):
            T[i][j] = c1.t1.coeff[i][j]
    for i in range(n2):
        for j in range(n2):
            T[n1 + i][n1 + j] = c2.t1.coeff[i][j]
    return Coproduct(TensorElement(AB, T))


def tensor_coproduct(c1, c2, AB):
    """Coproduct on AB = A1 (x) A2 with the middle legs exchanged.

    The coefficient of (e_i f_k) (x) (e_j f_l) is T1[i][j] * T2[k][l], which
    is the Kronecker product of the coefficient matrices.
    """
    return Coproduct(TensorElement(AB, em.kron(c1.t1.matrix(), c2.t1.matrix())))


_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def _param(k):
    return "a" + str(k + 1).translate(_SUB)


def _lincomb(coeffs):
    terms = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mag = abs(c)
        s = _param(k) if mag == 1 else f"{em.fmt(mag)}{_param(k)}"
        terms.append(("-" if c < 0 else "+", s))
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, s in terms[1:]:
        out += sign + s
    return out, len(terms)


def symbolic_handle(E):
    """Handle of the general member sum_k a_k Delta_k, e.g. ``(2a₁+a₂)·αβ``."""
    A = E.algebra
    handles = [handle(d).coords for d in E.basis]
    groups = []  # (coefficient vector, [basis indices])
    for i in range(A.dim):
        coeffs = tuple(h[i] for h in handles)
        if not any(coeffs):
            continue
        for g in groups:
            ratio = _proportional(g[0], coeffs)
            if ratio is not None:
                g[1].append((ratio, i))
                break
        else:
            groups.append((coeffs, [(Fraction(1), i)]))
    if not groups:
        return "0"
    parts = []
    for coeffs, members in groups:
        comb, nterms = _lincomb(coeffs)
        if nterms > 1:
            comb = f"({comb})"
        v = [Fraction(0)] * A.dim
        for r, i in members:
            v[i] = r
        elt = render_vector(v, A.labels)
        if len(members) > 1:
            elt = f"({elt.replace(' ', '')})"
        parts.append(f"{comb}·{elt}")
    return " + ".join(parts)


def _proportional(u, v):
    """r with v = r*u, or None."""
    r = None
    for a, b in zip(u, v):
        if a == 0 and b == 0:
            continue
        if a == 0 or b == 0:
            return None
        q = b / a
        if r is None:
            r = q
        elif q != r:
            return None
    return r
