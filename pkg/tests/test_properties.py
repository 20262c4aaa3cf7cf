"""Randomised invariants: linear combinations of coproducts, handles, counits."""

import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from nearfrob import exactmath as em
from nearfrob.algebra import center, radical
from nearfrob.checks import random_square_zero, random_toupie
from nearfrob.fixtures import algebra as fixture_algebra
from nearfrob.frobenius import (
    Counit, frobenius_check, frobenius_from_counit, frobenius_space, handle, is_bimodule,
    star_action,
)
from nearfrob.presentations import build_algebra, builtin
from nearfrob.schur import counit_of

ALGEBRAS = [builtin("truncated_poly", n)[0] for n in (1, 3)] + [
    builtin("matrix", 2)[0], builtin("cyclic_group", 3)[0],
] + [fixture_algebra(n)[1] for n in ("two_cycle_square_zero", "triangle", "nongorenstein_xy")]
SPACES = [frobenius_space(A) for A in ALGEBRAS]
# algebras where every handle is forced into the radical
LOCAL_OR_RADICAL = [0, 1, 4, 5, 6]

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def member(draw, idx=st.sampled_from(range(len(SPACES)))):
    k = draw(idx)
    E = SPACES[k]
    coeffs = draw(st.lists(rationals, min_size=E.dim, max_size=E.dim))
    return k, E.combination(coeffs)


@settings(max_examples=40, deadline=None)
@given(member())
def test_combinations_are_bimodule_maps(kc):
    k, c = kc
    A = ALGEBRAS[k]
    assert is_bimodule(c.t1)
    a, b = A.basis()[-1], A.basis()[len(A.basis()) // 2]
    # Delta(ab) = Delta(a) b
    assert c(a * b) == c(a).right_act(b)
    assert c(A.one) == c.t1


@settings(max_examples=40, deadline=None)
@given(member())
def test_handle_is_central(kc):
    k, c = kc
    w = handle(c)
    assert all(w * e == e * w for e in ALGEBRAS[k].basis())


@settings(max_examples=30, deadline=None)
@given(member(st.sampled_from(LOCAL_OR_RADICAL)))
def test_handle_in_radical(kc):
    k, c = kc
    assert handle(c) in radical(ALGEBRAS[k])


@settings(max_examples=30, deadline=None)
@given(member(), st.data())
def test_star_action(kc, data):
    k, c = kc
    A, E = ALGEBRAS[k], SPACES[k]
    Z = center(A)
    coeffs = data.draw(st.lists(rationals, min_size=Z.dim, max_size=Z.dim))
    u = A.zero()
    for x, z in zip(coeffs, Z.elements()):
        u = u + x * z
    uc = star_action(u, c)
    assert E.contains(uc.t1)
    assert handle(uc) == u * handle(c)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_random_quivers(seed):
    rng = random.Random(seed)
    pres = random_toupie(rng) if seed % 2 else random_square_zero(rng)
    A, _ = build_algebra(pres)
    E = frobenius_space(A)
    for c in E.basis:
        assert is_bimodule(c.t1)
        w = handle(c)
        assert all(w * e == e * w for e in A.basis())
    v = frobenius_check(A, trials=3, space=E)
    if v.is_frobenius:
        assert v.counit.is_nondegenerate()
        assert E.contains(frobenius_from_counit(A, v.counit).t1)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(range(4)), st.data())
def test_counit_round_trip(k, data):
    A = ALGEBRAS[k]
    eps = Counit(A, data.draw(st.lists(rationals, min_size=A.dim, max_size=A.dim)))
    if not eps.is_nondegenerate():
        return
    c = frobenius_from_counit(A, eps)
    assert SPACES[k].contains(c.t1)
    assert counit_of(c) == eps
    assert eps.first_leg(c.t1) == A.one and eps.second_leg(c.t1) == A.one


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_inverse_and_rank(m):
    n = len(m)
    inv = em.invert(m)
    r = em.rank(m)
    assert (inv is not None) == (r == n)
    if inv is not None:
        assert em.matmul(m, inv) == em.identity(n)
    assert r + len(em.nullspace(m)) == n
    for v in em.nullspace(m):
        assert all(x == Fraction(0) for x in em.matvec(m, v))
