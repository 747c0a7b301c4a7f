from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import phis, rand_vec, vectors
from phialgebra.algebra import (
    Algebra,
    canonical_left_identity,
    diagonal_algebra,
    idempotent_set,
    is_idempotent,
    is_minimal_idempotent,
    left_identities,
    make_algebra,
    make_phi_algebra,
    matrix_algebra,
    multiply,
    norm_check,
    phi_kernel,
    radical,
    unitize,
    zero_algebra,
)
from phialgebra.exactnum import ONE, ZERO, Matrix, Subspace, gr, kernel


def e(n, i):
    return tuple(ONE if t == i else ZERO for t in range(n))


def scaled(s, v):
    return tuple(s * x for x in v)


def dot(phi, a):
    return sum((p * x for p, x in zip(phi, a)), ZERO)


# construction -------------------------------------------------------------


def test_two_dim_coordinate_products():
    A = make_phi_algebra(2, [1, 0])
    e1, e2 = e(2, 0), e(2, 1)
    assert A.multiply(e1, e1) == e1
    assert A.multiply(e1, e2) == e2
    assert A.multiply(e2, e1) == (ZERO, ZERO)
    assert A.multiply(e2, e2) == (ZERO, ZERO)


def test_one_dim_is_the_field():
    A = make_phi_algebra(1, [1])
    assert A.mult == (((ONE,),),)
    assert A.multiply((gr(2, 1),), (gr(0, 3),)) == (gr(2, 1) * gr(0, 3),)


def test_zhang_tensor(zhang3):
    for i in range(3):
        for j in range(3):
            for k in range(3):
                expected = ONE if (i == 0 and j == k) else ZERO
                assert zhang3.mult[i][j][k] == expected
    assert zhang3.is_phi_algebra


def test_zero_functional_rejected():
    with pytest.raises(ValueError, match="functional must be nonzero"):
        make_phi_algebra(2, [0, 0])


def test_length_mismatch_rejected():
    with pytest.raises(ValueError):
        make_phi_algebra(3, [1, 0])


def test_non_associative_tensor_rejected():
    # e0 e0 = e1, everything else zero except e1 e0 = e0: (e0 e0) e0 = e0 but e0 (e0 e0) = 0
    c = [[[0, 1], [0, 0]], [[1, 0], [0, 0]]]
    with pytest.raises(ValueError):
        make_algebra(c)


def test_inconsistent_phi_rejected():
    with pytest.raises(ValueError):
        Algebra(2, zero_algebra(2).mult, (ONE, ZERO))


def test_multiply_dimension_mismatch():
    A = make_phi_algebra(2, [1, 0])
    with pytest.raises(ValueError):
        multiply(A, (1, 0, 0), (1, 0))


def test_multiply_examples():
    A = make_phi_algebra(2, [1, 0])
    assert multiply(A, (1, 0), (0, 1)) == (ZERO, ONE)
    assert multiply(A, (0, 1), (1, 0)) == (ZERO, ZERO)


def test_multiply_is_phi_times_vector(rng):
    phi = rand_vec(rng, 4)
    A = make_phi_algebra(4, phi)
    for _ in range(10):
        a, b = rand_vec(rng, 4), rand_vec(rng, 4)
        assert multiply(A, a, b) == scaled(dot(phi, a), b)


@settings(max_examples=30, deadline=None)
@given(phis(max_dim=4), st.data())
def test_associativity_closed_form(phi, data):
    n = len(phi)
    A = make_phi_algebra(n, phi)
    a, b, c = (data.draw(vectors(n)) for _ in range(3))
    left = A.multiply(A.multiply(a, b), c)
    assert left == A.multiply(a, A.multiply(b, c))
    assert left == scaled(dot(phi, a) * dot(phi, b), c)


# identities ---------------------------------------------------------------


def test_left_identities_coordinate():
    L = left_identities(make_phi_algebra(2, [1, 0]))
    assert L.point == (ONE, ZERO)
    assert L.direction == Subspace.span([e(2, 1)], 2)
    assert L.two_sided is None


def test_left_identities_one_dim():
    L = left_identities(make_phi_algebra(1, [1]))
    assert L.point == (ONE,)
    assert L.direction.dim == 0
    assert L.two_sided == (ONE,)


def test_left_identity_member_acts_as_identity(zhang3, rng):
    L = left_identities(zhang3)
    e0 = (gr(1), gr(5), gr(-2))
    assert L.contains(e0)
    for _ in range(5):
        a = rand_vec(rng, 3)
        assert zhang3.multiply(e0, a) == a


@settings(max_examples=25, deadline=None)
@given(phis(min_dim=2, max_dim=4), st.data())
def test_no_two_sided_identity(phi, data):
    n = len(phi)
    A = make_phi_algebra(n, phi)
    L = left_identities(A)
    assert L.two_sided is None
    assert L.direction == phi_kernel(A)
    coeffs = data.draw(vectors(L.direction.dim))
    candidate = L.point
    for c, v in zip(coeffs, L.direction.vectors()):
        candidate = tuple(x + c * y for x, y in zip(candidate, v))
    assert L.contains(candidate)
    assert all(A.multiply(candidate, b) == b for b in A.basis())
    assert any(A.multiply(b, candidate) != b for b in A.basis())


def test_canonical_left_identity():
    A = make_phi_algebra(3, [0, 2, 1])
    assert canonical_left_identity(A) == (ZERO, gr(Fraction(1, 2)), ZERO)


# idempotents --------------------------------------------------------------


def test_idempotent_examples():
    A = make_phi_algebra(2, [1, 0])
    assert is_idempotent(A, (0, 0))
    assert is_idempotent(A, (1, 1))
    assert not is_idempotent(A, (2, 0))


@settings(max_examples=60, deadline=None)
@given(phis(max_dim=4), st.data())
def test_idempotent_characterization(phi, data):
    n = len(phi)
    A = make_phi_algebra(n, phi)
    S = idempotent_set(A)
    a = data.draw(vectors(n))
    if data.draw(st.booleans()):
        # push a onto the hyperplane phi = 1 when possible
        s = dot(phi, a)
        if s:
            a = scaled(ONE / s, a)
    expected = (not any(a)) or dot(phi, a) == ONE
    assert is_idempotent(A, a) == expected == S.contains(a)


def test_minimal_idempotents(zhang3):
    assert is_minimal_idempotent(make_phi_algebra(2, [1, 0]), (1, 0))
    assert is_minimal_idempotent(zhang3, (1, 1, 0))
    assert is_minimal_idempotent(make_phi_algebra(1, [1]), (1,))


def test_minimal_requires_nonzero_idempotent(zhang3):
    with pytest.raises(ValueError):
        is_minimal_idempotent(zhang3, (2, 0, 0))
    with pytest.raises(ValueError):
        is_minimal_idempotent(zhang3, (0, 0, 0))


def test_matrix_unit_is_minimal_but_identity_is_not():
    M2 = matrix_algebra(2)
    assert is_minimal_idempotent(M2, (1, 0, 0, 0))
    assert not is_minimal_idempotent(M2, (1, 0, 0, 1))


# unitization and radical --------------------------------------------------


def test_unitize_zero_algebra():
    U = unitize(zero_algebra(1))
    assert U.dim == 2
    u = U.basis_vector(1)
    assert all(U.multiply(u, b) == b == U.multiply(b, u) for b in U.basis())


def test_unitize_adjoined_unit(rng):
    A = make_phi_algebra(2, [1, gr(0, 1)])
    U = unitize(A)
    assert U.dim == 3 and U.phi is None
    u = U.basis_vector(2)
    for _ in range(5):
        x = rand_vec(rng, 3)
        assert U.multiply(u, x) == x == U.multiply(x, u)


def test_unitize_extends_product(rng):
    A = make_phi_algebra(3, rand_vec(rng, 3))
    U = unitize(A)
    a, b = rand_vec(rng, 3), rand_vec(rng, 3)
    assert U.multiply(a + (ZERO,), b + (ZERO,)) == A.multiply(a, b) + (ZERO,)


def test_radical_examples(zhang3):
    assert radical(zhang3) == Subspace.span([e(3, 1), e(3, 2)], 3)
    assert radical(make_phi_algebra(1, [1])).dim == 0
    assert radical(matrix_algebra(2)).dim == 0


def test_radical_other_fixtures():
    assert radical(zero_algebra(3)) == Subspace.full(3)
    assert radical(diagonal_algebra(3)).dim == 0
    # upper triangular 2x2 matrices: radical is the strictly upper part
    # basis E11, E12, E22
    c = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    c[0][0][0] = 1
    c[0][1][1] = 1
    c[1][2][1] = 1
    c[2][2][2] = 1
    T = make_algebra(c)
    assert radical(T) == Subspace.span([(0, 1, 0)], 3)


@settings(max_examples=25, deadline=None)
@given(phis(min_dim=2, max_dim=5))
def test_radical_is_kernel_of_phi(phi):
    A = make_phi_algebra(len(phi), phi)
    R = radical(A)
    assert R == kernel(Matrix.from_rows([A.phi]))
    vs = R.vectors()
    # squared-zero ideal
    assert all(not any(A.multiply(x, y)) for x in vs for y in vs)
    assert all(R.contains(A.multiply(a, x)) and R.contains(A.multiply(x, a)) for a in A.basis() for x in vs)


# norms --------------------------------------------------------------------


def test_norm_check_examples():
    r = norm_check(make_phi_algebra(3, [1, 0, 0]))
    assert r.phi_sup_squared == 1 and r.admissible
    assert not norm_check(make_phi_algebra(2, [2, 0])).admissible
    assert norm_check(make_phi_algebra(2, [Fraction(1, 2), Fraction(1, 2)])).admissible


def test_norm_check_uses_modulus():
    # |(3+4i)/5| = 1 exactly
    r = norm_check(make_phi_algebra(1, [gr(Fraction(3, 5), Fraction(4, 5))]))
    assert r.phi_sup_squared == 1 and r.admissible
    assert not norm_check(make_phi_algebra(1, [gr(1, 1)])).admissible
