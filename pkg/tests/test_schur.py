import pytest

from nearfrob import exactmath as em
from nearfrob.algebra import TensorElement
from nearfrob.errors import (
    NotMultiplicative, NotSurjective, NotUnital, ParseError, RelationNotKilled,
    SchurNotInvertible, TargetNotFrobenius,
)
from nearfrob.fixtures import DUAL_NUMBERS_COUNIT
from nearfrob.frobenius import Coproduct, Counit, frobenius_from_counit, frobenius_space
from nearfrob.presentations import builtin
from nearfrob.schur import (
    check_split_counterexamples, counit_of, find_section, identity_morphism,
    is_symmetric_counit, make_morphism, morphism_from_generators, parse_morphism,
    schur_element, schur_sum, section, verify_casimir_transport, verify_handle_transport,
)


def T(n):
    return builtin("truncated_poly", n)[0]


def M(n):
    return builtin("matrix", n)[0]


def test_identity_morphism():
    A = M(2)
    phi = identity_morphism(A)
    assert phi.is_surjective and phi(A["E12"]) == A["E12"]


def test_projection_from_file(fx):
    phi = fx.morphism("loop_arrow_to_dual.mor", "loop_arrow", "dual_numbers")
    A, B = phi.source, phi.target
    assert phi.is_surjective
    assert phi(A["e1"]) == B.one and phi(A["e2"]).is_zero()
    assert phi(A["α"]) == B["α"] and phi(A["β"]).is_zero()


def test_not_unital():
    A, K = T(1), T(0)
    with pytest.raises(NotUnital):
        make_morphism(A, K, [K.zero(), K.zero()])


def test_not_multiplicative():
    A = T(1)
    with pytest.raises(NotMultiplicative):
        make_morphism(A, A, ["1", "1+x"])


def test_relation_not_killed(fx):
    pres, A, paths = fx.algebra("loop_arrow")
    _, B, _ = fx.algebra("dual_numbers")
    with pytest.raises(RelationNotKilled):
        morphism_from_generators(pres, A, paths, B, {"1": "1", "2": "0"},
                                 {"α": "1", "β": "0"})


def test_vertex_images_must_be_idempotents(fx):
    pres, A, paths = fx.algebra("loop_arrow")
    _, B, _ = fx.algebra("dual_numbers")
    with pytest.raises(NotUnital):
        morphism_from_generators(pres, A, paths, B, {"1": "1", "2": "1"},
                                 {"α": "α", "β": "0"})


def test_morphism_file_errors(fx):
    pres, A, paths = fx.algebra("loop_arrow")
    _, B, _ = fx.algebra("dual_numbers")
    with pytest.raises(ParseError):
        parse_morphism("vertex 1 -> 1\n", A, B, pres=pres, paths=paths)
    with pytest.raises(ParseError) as exc:
        parse_morphism("morphism f : loop_arrow -> dual_numbers\nvertex 1 -> 1\nvertex 2 -> 0\n"
                       "arrow α -> z\narrow β -> 0\n", A, B, pres=pres, paths=paths)
    assert exc.value.line == 4
    with pytest.raises(ParseError):
        parse_morphism("morphism f : loop_arrow -> dual_numbers\nvertex 1 -> 1\n",
                       A, B, pres=pres, paths=paths)


def test_basis_morphism_file():
    A, B = T(2), T(1)
    A.name, B.name = "big", "small"
    phi = parse_morphism("morphism q : big -> small\nbasis 1 -> 1\nbasis x -> x\nbasis x^2 -> 0\n",
                         A, B)
    assert phi.is_surjective


def test_schur_loop_arrow_family(fx):
    data = fx.loop_arrow_projection()
    phi, E = data["phi"], data["space"]
    assert E.dim == 2
    for coeffs in ([1, 0], [0, 1], [3, -2], [5, 7]):
        c = E.combination(coeffs)
        assert schur_sum(phi, c, data["stated_counit"]).is_zero()
        s = schur_element(phi, c, data["counit"])
        assert s.central and not s.invertible
        cB = frobenius_from_counit(phi.target, data["counit"])
        assert verify_casimir_transport(phi, c, cB, data["counit"])
        assert verify_handle_transport(phi, c, cB, data["counit"])


def test_stated_counit_is_degenerate(fx):
    data = fx.loop_arrow_projection()
    with pytest.raises(TargetNotFrobenius):
        schur_element(data["phi"], data["space"].basis[0], data["stated_counit"])
    s = schur_element(data["phi"], data["space"].basis[0], data["stated_counit"],
                      require_frobenius=False)
    assert s.s_phi.is_zero() and s.section is None


def test_inclusion_splits_but_only_on_the_left(fx):
    data = fx.loop_arrow_projection()
    phi, incl = data["phi"], data["inclusion"]
    assert em.matmul(phi.matrix, incl) == em.identity(2)
    assert find_section(phi, "left") is not None
    assert find_section(phi, "right") is None


def test_dual_numbers_identity():
    A = T(1)
    x = A["x"]
    d1 = Coproduct(TensorElement.from_terms(A, [(1, x, x)]))
    s = schur_element(identity_morphism(A), d1, DUAL_NUMBERS_COUNIT)
    assert s.s_phi == x and not s.invertible
    with pytest.raises(SchurNotInvertible):
        section(identity_morphism(A), d1, DUAL_NUMBERS_COUNIT)
    cB = frobenius_from_counit(A, DUAL_NUMBERS_COUNIT)
    # phi(omega) = x^2 = 0 and s omega_B = x * 2x = 0
    assert verify_handle_transport(identity_morphism(A), d1, cB)


@pytest.mark.parametrize("n", range(4))
def test_identity_with_frobenius_coproduct(n):
    A = T(n)
    eps = [0] * n + [1]
    c = frobenius_from_counit(A, eps)
    s = schur_element(identity_morphism(A), c, eps)
    assert s.s_phi == A.one
    assert s.section.matrix == em.identity(A.dim)


def test_symmetric_split():
    A = T(1)
    d2 = Coproduct(TensorElement.from_terms(A, [(1, "x", "1"), (1, "1", "x")]))
    assert is_symmetric_counit(A, DUAL_NUMBERS_COUNIT)
    s = schur_element(identity_morphism(A), d2, DUAL_NUMBERS_COUNIT)
    assert s.s_phi == A.one
    assert s.section.is_bimodule


def test_matrix_trace_section():
    A = M(2)
    tr = [1, 0, 0, 1]
    c = frobenius_from_counit(A, tr)
    s = schur_element(identity_morphism(A), c, tr)
    assert s.s_phi == A.one
    assert s.section.splits and s.section.right_linear and s.section.left_linear


def test_matrix_off_diagonal_coproduct():
    # for a noncommutative target the Schur element of a general coproduct
    # need not be central, and only the second-leg transport survives
    A = M(2)
    tr = Counit(A, [1, 0, 0, 1])
    cB = frobenius_from_counit(A, tr)
    phi = identity_morphism(A)
    for d in frobenius_space(A).basis:
        assert verify_casimir_transport(phi, d, cB, tr, leg="second")
        assert verify_handle_transport(phi, d, cB, tr, leg="second")
    d12 = TensorElement.from_terms(A, [(1, "E11", "E21"), (1, "E21", "E22")])
    s = schur_element(phi, Coproduct(d12), tr)
    assert s.s_phi == A["E21"] and not s.central
    assert not verify_casimir_transport(phi, Coproduct(d12), cB, tr)


def test_surjectivity_required():
    A, K = T(1), T(0)
    inc = make_morphism(K, A, [A.one])
    assert not inc.is_surjective
    with pytest.raises(NotSurjective):
        schur_element(inc, frobenius_space(K).basis[0], [0, 1])


def test_counit_recovered_from_coproduct():
    A = M(2)
    tr = [1, 0, 0, 1]
    assert counit_of(frobenius_from_counit(A, tr)).eps == tuple(em.frac(x) for x in tr)


def test_schur_is_linear(fx):
    data = fx.loop_arrow_projection()
    phi, E, eps = data["phi"], data["space"], data["counit"]
    s1 = schur_sum(phi, E.basis[0], eps)
    s2 = schur_sum(phi, E.basis[1], eps)
    assert schur_sum(phi, E.combination([2, -3]), eps) == 2 * s1 - 3 * s2


def test_split_counterexample_report():
    r = check_split_counterexamples()
    assert r["loop_arrow"]["s_phi_zero"] and r["loop_arrow"]["split_found"]
    assert r["dual_numbers_identity"]["s"] == "x"
    assert not r["dual_numbers_identity"]["invertible"]
    assert not r["dual_numbers_to_field"]["bimodule_section_exists"]
