import json
from fractions import Fraction

import pytest

from nearfrob import exactmath as em
from nearfrob.algebra import (
    Subspace, algebra_from_json, algebra_to_json, center, direct_product,
    field, ideal_generated, is_unit, left_mult_matrix, make_algebra, mul,
    parse_element, radical, right_ideal, right_mult_matrix, socle_left, socle_right,
    subspace_power, tensor_product,
)
from nearfrob.errors import AlgebraMismatch, BadUnit, NonAssociative, ParseError
from nearfrob.presentations import builtin


def M(n):
    return builtin("matrix", n)[0]


def T(n):
    return builtin("truncated_poly", n)[0]


def test_one_dim_algebra():
    A = make_algebra(["e"], [[[1]]], [1])
    assert A.dim == 1 and A.one == A["e"]


def test_nonassociative_table_rejected():
    # a*a = b, everything else zero except the unit; then (a a) a = b a = a but a (a a) = a b = 0
    labels = ["1", "a", "b"]
    t = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    for i in range(3):
        t[0][i][i] = t[i][0][i] = 1
    t[1][1] = [0, 0, 1]
    t[2][1] = [0, 1, 0]
    with pytest.raises(NonAssociative) as exc:
        make_algebra(labels, t, [1, 0, 0])
    assert len(exc.value.triple) == 3


def test_bad_unit_rejected():
    with pytest.raises(BadUnit):
        make_algebra(["a", "b"], [[[1, 0], [0, 0]], [[0, 0], [0, 1]]], [1, 0])


def test_matrix_units():
    A = M(2)
    assert A.dim == 4
    assert A["E11"] * A["E12"] == A["E12"]
    assert A["E12"] * A["E11"] == A.zero()


def test_dual_numbers_square_zero():
    A = T(1)
    x = A["x"]
    assert x * x == A.zero()
    assert is_unit(x) is None


def test_path_products(fx):
    _, A, _ = fx.algebra("two_cycle_one_relation")
    assert mul(A["α"], A["β"]) == A["αβ"]
    assert mul(A["β"], A["α"]) == A.zero()


def test_mismatch():
    with pytest.raises(AlgebraMismatch):
        mul(T(1)["x"], T(2)["x"])


def test_regular_representations():
    A = T(2)
    assert left_mult_matrix(A.one) == em.identity(3)
    Lx = left_mult_matrix(A["x"])
    assert em.matvec(Lx, [1, 0, 0]) == [0, 1, 0]
    assert em.matvec(Lx, [0, 0, 1]) == [0, 0, 0]
    assert Lx == right_mult_matrix(A["x"])
    B = M(2)
    for a in B.basis():
        for b in B.basis():
            assert B.element(em.matvec(left_mult_matrix(a), b.coords)) == a * b
            assert B.element(em.matvec(right_mult_matrix(a), b.coords)) == b * a


def test_is_unit():
    A = M(3)
    assert is_unit(A.one) == A.one
    assert is_unit(3 * A.one) == Fraction(1, 3) * A.one


def test_center():
    assert center(T(3)).dim == 4
    A = M(2)
    assert center(A) == Subspace(A, [A.one])


def test_center_square_zero_against_commutant(fx):
    _, A, _ = fx.algebra("two_cycle_square_zero")
    Z = center(A)
    # brute force: z b - b z = (R_b - L_b) z must vanish for every basis b
    stacked = []
    for b in A.basis():
        stacked.extend(em.mat_add(right_mult_matrix(b), em.mat_scale(-1, left_mult_matrix(b))))
    assert Z == Subspace(A, em.nullspace(stacked))
    assert A.one in Z


def test_radical_semisimple_and_truncated():
    assert radical(M(2)).dim == 0
    A = T(3)
    assert radical(A) == Subspace(A, [A["x"], A["x^2"], A["x^3"]])


def test_socles_truncated_and_semisimple():
    A = T(3)
    S = Subspace(A, [A["x^3"]])
    assert socle_right(A) == S == socle_left(A)
    B = M(2)
    assert socle_right(B).dim == 4


def test_socle_square_zero(fx):
    _, A, _ = fx.algebra("two_cycle_square_zero")
    S = Subspace(A, [A["α"], A["β"]])
    assert socle_right(A) == S and socle_left(A) == S


def test_ideals(fx):
    A = T(2)
    assert ideal_generated(A, A.zero()).dim == 0
    assert ideal_generated(A, A.one).dim == 3
    _, B, _ = fx.algebra("triangle")
    g = B["γαβ"]
    assert right_ideal(B, g) == Subspace(B, [g])
    assert g * B["γ"] == B.zero()


def test_subspace_powers(fx):
    _, A, _ = fx.algebra("two_cycle_square_zero")
    assert subspace_power(A, radical(A), 2).dim == 0
    B = T(3)
    assert subspace_power(B, radical(B), 4).dim == 0
    _, C, _ = fx.algebra("two_cycle_one_relation")
    assert subspace_power(C, radical(C), 2) == Subspace(C, [C["αβ"]])


def test_products():
    k = field()
    P = direct_product(k, k)
    assert P.dim == 2 and P.one.coords == (1, 1)
    e1, e2 = P.basis()
    assert e1 * e1 == e1 and e1 * e2 == P.zero()
    A = T(2)
    assert tensor_product(A, k).structure_equal(A)
    assert tensor_product(M(2), M(2)).dim == 16


def test_center_closed_under_mul():
    A = builtin("cyclic_group", 4)[0]
    Z = center(A)
    for a in Z.elements():
        for b in Z.elements():
            assert a * b in Z


def test_json_roundtrip():
    A = M(2)
    data = json.loads(json.dumps(algebra_to_json(A)))
    B = algebra_from_json(data)
    assert B.structure_equal(A) and B.labels == A.labels


def test_parse_element():
    A = T(2)
    assert parse_element("2*x - 1/2*x^2 + 3", A) == 2 * A["x"] - A["x^2"] * parse_element("1/2", A) + 3 * A.one
    assert parse_element("0", A) == A.zero()
    with pytest.raises(ParseError):
        parse_element("y", A)


def test_subspace_ops():
    A = T(3)
    S = Subspace(A, [A["x"], A["x^2"]])
    U = Subspace(A, [A["x^2"], A["x^3"]])
    assert S.intersection(U) == Subspace(A, [A["x^2"]])
    assert S.sum(U) == radical(A)
    assert Subspace(A, [A["x^2"]]) < S
    assert not U.issubset(S)
