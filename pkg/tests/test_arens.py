import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import phis, rand_vec, vectors
from phialgebra.algebra import (
    associativity_defect,
    diagonal_algebra,
    make_phi_algebra,
    matrix_algebra,
    pair,
    phi_form_tensor,
)
from phialgebra.arens import (
    MAX_TOWER_DEPTH,
    arens_products,
    bidual_tower,
    bidual_tower_regularity,
    first_arens,
    second_arens,
)
from phialgebra.exactnum import gr


def test_phi_algebra_n3_regular(zhang3):
    r = arens_products(zhang3)
    target = phi_form_tensor(zhang3.phi)
    assert r.square == target == r.lozenge
    assert r.regular and r.matches_phi_form and r.stable


def test_one_dim_is_scalar_multiplication():
    A = make_phi_algebra(1, [gr(2, -1)])
    r = arens_products(A)
    assert r.square == r.lozenge == A.mult
    assert r.regular


@pytest.mark.parametrize("A", [diagonal_algebra(3), matrix_algebra(2)], ids=["diagonal", "M2"])
def test_non_phi_fixtures_regular(A):
    r = arens_products(A)
    assert r.regular
    assert r.square == A.mult
    assert r.matches_phi_form is None


def test_phi_override_detects_mismatch(zhang3):
    assert arens_products(zhang3, phi=[0, 1, 0]).matches_phi_form is False


@settings(max_examples=20, deadline=None)
@given(phis(max_dim=4), st.data())
def test_element_level_products(phi, data):
    n = len(phi)
    A = make_phi_algebra(n, phi)
    m, k = data.draw(vectors(n)), data.draw(vectors(n))
    expected = tuple(pair(m, phi) * x for x in k)
    assert first_arens(A, m, k) == expected == second_arens(A, m, k)


def test_products_extend_original(rng):
    for A in (make_phi_algebra(3, rand_vec(rng, 3)), matrix_algebra(2)):
        for a in A.basis():
            for b in A.basis():
                ab = A.multiply(a, b)
                assert first_arens(A, a, b) == ab == second_arens(A, a, b)


def test_first_product_associative(rng):
    for A in (make_phi_algebra(4, rand_vec(rng, 4)), matrix_algebra(2)):
        assert associativity_defect(arens_products(A).square) is None


def test_tower_examples():
    assert bidual_tower_regularity(make_phi_algebra(2, [1, gr(0, 1)]), 3) == [True, True, True]
    assert bidual_tower_regularity(make_phi_algebra(1, [1]), 2) == [True, True]


def test_tower_is_tensor_stable(zhang3):
    for r in bidual_tower(zhang3, 3):
        assert r.square == zhang3.mult and r.stable and r.matches_phi_form


def test_tower_depth_cap(zhang3):
    assert len(bidual_tower(zhang3, MAX_TOWER_DEPTH)) == MAX_TOWER_DEPTH
    for bad in (0, MAX_TOWER_DEPTH + 1):
        with pytest.raises(ValueError):
            bidual_tower(zhang3, bad)
