import numpy as np
import pytest

from octotriple.core import (
    DimensionError,
    Hyper,
    conjugate,
    inner,
    multiply,
    norm,
    norm_sq,
    unit,
)
from octotriple.triple import (
    GramMatrix,
    anticommutative_component_norm_sq,
    anticommutator3,
    anticommutator3_alt,
    anticommutator3_closed,
    anticommutator3_norm_sq,
    associator3,
    associator3_alt,
    associator3_norm_sq,
    commutator3,
    commutator3_alt,
    commutator3_closed,
    commutator3_norm_sq,
    cross2,
    decompose_triple,
    det3,
    gram,
    gram_det_imaginary_identity,
    gram_imaginary,
    pair_product_expansion,
)

RNG = np.random.default_rng(7121983)


def rand(dim, scale=1.0):
    return Hyper(dim, scale * RNG.standard_normal(dim))


def vec_close(a, b, scale):
    assert norm(a - b) <= 1e-12 + 1e-9 * scale, (a, b)


# Frozen expected values for one octonion triple, computed with the
# exact-rational doubling recursion in cd_oracle (all values are integers,
# so float comparison is exact).
_U1 = Hyper(8, [1, 2, 0, -1, 0, 3, 0, 1])
_U = Hyper(8, [2, 0, 1, 0, -1, 0, 2, 0])
_U2 = Hyper(8, [0, 1, -2, 0, 1, 0, 0, 3])
_ANTI = np.array([-13, -4, -9, 3, 7, -9, -10, 3], dtype=float)
_COMM = np.array([-12, -4, 18, -6, 16, 2, 11, 8], dtype=float)
_ASSOC = np.array([0, 9, 17, 3, -11, -9, -14, 12], dtype=float)
_PRODUCT = np.array([-25, 1, 26, 0, 12, -16, -13, 23], dtype=float)
_DET_G = 1886.0
_DET_G_IMAG = 1065.0
_CROSS_SCALAR = -12.0


# -- cross2 --------------------------------------------------------------------


def test_cross2_of_equal_arguments_is_zero():
    u = rand(8)
    np.testing.assert_allclose(cross2(u, u).coeffs, np.zeros(8), atol=1e-12)


def test_cross2_with_unit_vanishes():
    u = rand(8)
    np.testing.assert_array_equal(cross2(unit(8), u).coeffs, np.zeros(8))
    np.testing.assert_array_equal(cross2(u, unit(8)).coeffs, np.zeros(8))


def test_cross2_quaternion_basis():
    i = [Hyper.basis(4, k) for k in range(4)]
    np.testing.assert_array_equal(cross2(i[1], i[2]).coeffs, i[3].coeffs)


def test_cross2_orthogonal_to_unit():
    for _ in range(20):
        u1, u2 = rand(8), rand(8)
        assert abs(inner(cross2(u1, u2), unit(8))) <= 1e-12 + 1e-9 * norm(u1) * norm(u2)


def test_cross2_matches_3d_cross_product_on_quaternions():
    for _ in range(20):
        u1, u2 = rand(4), rand(4)
        classic = np.cross(u1.coeffs[1:], u2.coeffs[1:])
        got = cross2(u1, u2)
        assert got.coeffs[0] == 0.0
        np.testing.assert_allclose(got.coeffs[1:], classic,
                                   atol=1e-12 * norm(u1) * norm(u2))


def test_pair_product_expansion_trivial_cases():
    u = rand(8)
    vec_close(pair_product_expansion(unit(8), u), u, norm(u))
    i = [Hyper.basis(4, k) for k in range(4)]
    np.testing.assert_array_equal(pair_product_expansion(i[1], i[2]).coeffs, i[3].coeffs)


@pytest.mark.parametrize("dim", (1, 2, 4, 8))
def test_pair_product_expansion_equals_multiply(dim):
    for _ in range(30):
        u1, u2 = rand(dim), rand(dim)
        vec_close(pair_product_expansion(u1, u2), multiply(u1, u2), norm(u1) * norm(u2))


# -- the three parts: frozen values ---------------------------------------------


def test_frozen_octonion_decomposition():
    d = decompose_triple(_U1, _U, _U2)
    np.testing.assert_array_equal(d.anti.coeffs, _ANTI)
    np.testing.assert_array_equal(d.comm.coeffs, _COMM)
    np.testing.assert_array_equal(d.assoc.coeffs, _ASSOC)
    assert d.residual == 0.0
    prod = multiply(multiply(_U1, conjugate(_U)), _U2)
    np.testing.assert_array_equal(prod.coeffs, _PRODUCT)


def test_frozen_norm_squares():
    assert anticommutator3_norm_sq(_U1, _U, _U2) == 514.0
    assert commutator3_norm_sq(_U1, _U, _U2) == 965.0
    assert associator3_norm_sq(_U1, _U, _U2) == 921.0
    assert gram(_U1, _U, _U2).det() == _DET_G
    assert gram_imaginary(_U1, _U, _U2).det() == _DET_G_IMAG
    assert inner(cross2(_U1, _U), _U2) == _CROSS_SCALAR
    assert anticommutative_component_norm_sq(_U1, _U, _U2) == _DET_G


def test_anticommutator_examples():
    i0 = unit(8)
    np.testing.assert_array_equal(anticommutator3(i0, i0, i0).coeffs, i0.coeffs)
    q = [Hyper.basis(4, k) for k in range(4)]
    np.testing.assert_array_equal(anticommutator3(q[1], q[2], q[3]).coeffs, np.zeros(4))


def test_anticommutator_center_unit_gives_pair_anticommutator():
    for _ in range(20):
        u1, u2 = rand(8), rand(8)
        expected = (multiply(u1, u2) + multiply(u2, u1)) / 2
        vec_close(anticommutator3(u1, unit(8), u2), expected, norm(u1) * norm(u2))


def test_associator_examples():
    # any quaternion triple associates
    for _ in range(20):
        t = [rand(4) for _ in range(3)]
        np.testing.assert_allclose(
            associator3(*t).coeffs, np.zeros(4),
            atol=1e-12 + 1e-9 * norm(t[0]) * norm(t[1]) * norm(t[2]))
    # repeated outer argument
    u1, u = rand(8), rand(8)
    np.testing.assert_allclose(associator3(u1, u, u1).coeffs, np.zeros(8),
                               atol=1e-12 + 1e-9 * norm_sq(u1) * norm(u))


def test_associator_octonion_basis_value():
    i = [Hyper.basis(8, k) for k in range(8)]
    got = associator3(i[1], i[2], i[4])
    np.testing.assert_array_equal(got.coeffs, (-i[7]).coeffs)
    assert norm_sq(got) == 1.0
    for k in (0, 1, 2, 4):
        assert inner(got, i[k]) == 0.0


def test_commutator_examples():
    u1, u = rand(8), rand(8)
    np.testing.assert_allclose(commutator3(u1, u, u1).coeffs, np.zeros(8),
                               atol=1e-12 + 1e-9 * norm_sq(u1) * norm(u))
    q = [Hyper.basis(4, k) for k in range(4)]
    np.testing.assert_array_equal(commutator3(q[1], q[2], q[3]).coeffs, q[0].coeffs)


def test_commutator_center_unit_reduces_to_cross2():
    for _ in range(20):
        u1, u2 = rand(8), rand(8)
        vec_close(commutator3(u1, unit(8), u2), cross2(u1, u2), norm(u1) * norm(u2))


# -- equivalent forms -------------------------------------------------------------


@pytest.mark.parametrize("dim", (2, 4, 8))
def test_half_sum_forms_agree(dim):
    for _ in range(30):
        u1, u, u2 = rand(dim), rand(dim), rand(dim)
        s = norm(u1) * norm(u) * norm(u2)
        vec_close(anticommutator3(u1, u, u2), anticommutator3_alt(u1, u, u2), s)
        vec_close(associator3(u1, u, u2), associator3_alt(u1, u, u2), s)
        vec_close(commutator3(u1, u, u2), commutator3_alt(u1, u, u2), s)


@pytest.mark.parametrize("dim", (2, 4, 8))
def test_closed_forms_agree(dim):
    for _ in range(30):
        u1, u, u2 = rand(dim), rand(dim), rand(dim)
        s = norm(u1) * norm(u) * norm(u2)
        vec_close(anticommutator3(u1, u, u2), anticommutator3_closed(u1, u, u2), s)
        vec_close(commutator3(u1, u, u2), commutator3_closed(u1, u, u2), s)


def test_symmetry_under_argument_swap():
    for _ in range(20):
        u1, u, u2 = rand(8), rand(8), rand(8)
        s = norm(u1) * norm(u) * norm(u2)
        vec_close(anticommutator3(u1, u, u2), anticommutator3(u2, u, u1), s)
        vec_close(commutator3(u1, u, u2), -commutator3(u2, u, u1), s)
        vec_close(associator3(u1, u, u2), -associator3(u2, u, u1), s)


# -- decomposition -----------------------------------------------------------------


@pytest.mark.parametrize("dim", (1, 2, 4, 8))
def test_decomposition_reconstructs_all_four_products(dim):
    for _ in range(30):
        u1, u, u2 = rand(dim), rand(dim), rand(dim)
        s = norm(u1) * norm(u) * norm(u2)
        d = decompose_triple(u1, u, u2)
        ub = conjugate(u)
        vec_close(multiply(multiply(u1, ub), u2), d.anti + d.comm + d.assoc, s)
        vec_close(multiply(multiply(u2, ub), u1), d.anti - d.comm - d.assoc, s)
        vec_close(multiply(u2, multiply(ub, u1)), d.anti - d.comm + d.assoc, s)
        vec_close(multiply(u1, multiply(ub, u2)), d.anti + d.comm - d.assoc, s)
        assert d.residual <= 1e-12 + 1e-9 * s


def test_decomposition_parts_are_mutually_orthogonal():
    for _ in range(50):
        u1, u, u2 = rand(8), rand(8), rand(8)
        s2 = (norm(u1) * norm(u) * norm(u2)) ** 2
        d = decompose_triple(u1, u, u2)
        assert abs(inner(d.anti, d.comm)) <= 1e-12 + 1e-9 * s2
        assert abs(inner(d.anti, d.assoc)) <= 1e-12 + 1e-9 * s2
        assert abs(inner(d.comm, d.assoc)) <= 1e-12 + 1e-9 * s2


def test_decomposition_low_dims_have_no_skew_parts():
    for dim in (1, 2):
        u1, u, u2 = rand(dim), rand(dim), rand(dim)
        d = decompose_triple(u1, u, u2)
        s = norm(u1) * norm(u) * norm(u2)
        assert norm(d.comm) <= 1e-12 + 1e-9 * s
        assert norm(d.assoc) <= 1e-12 + 1e-9 * s


def test_decomposition_with_unit_center():
    for _ in range(20):
        u1, u2 = rand(8), rand(8)
        d = decompose_triple(u1, unit(8), u2)
        expected_anti = (multiply(u1, u2) + multiply(u2, u1)) / 2
        s = norm(u1) * norm(u2)
        vec_close(d.anti, expected_anti, s)
        vec_close(d.comm, cross2(u1, u2), s)
        np.testing.assert_array_equal(d.assoc.coeffs, np.zeros(8))


def test_decomposition_serialization():
    d = decompose_triple(_U1, _U, _U2)
    obj = d.to_dict()
    assert obj["residual"] == 0.0
    assert Hyper.from_dict(obj["anti"]).isclose(d.anti)
    assert Hyper.from_dict(obj["comm"]).isclose(d.comm)
    assert Hyper.from_dict(obj["assoc"]).isclose(d.assoc)
    assert '"residual"' in d.to_json()


def test_triple_dimension_mismatch():
    with pytest.raises(DimensionError):
        decompose_triple(unit(4), unit(8), unit(8))
    with pytest.raises(DimensionError):
        commutator3(unit(8), unit(8), unit(4))


# -- orthogonality to arguments ------------------------------------------------------


def test_skew_parts_orthogonal_to_arguments():
    for _ in range(30):
        u1, u, u2 = rand(8), rand(8), rand(8)
        s = norm(u1) * norm(u) * norm(u2)
        comm = commutator3(u1, u, u2)
        assoc = associator3(u1, u, u2)
        for x in (u1, u, u2):
            assert abs(inner(comm, x)) <= 1e-12 + 1e-9 * s * norm(x)
            assert abs(inner(assoc, x)) <= 1e-12 + 1e-9 * s * norm(x)
        for x in (unit(8), cross2(u1, u), cross2(u1, u2), cross2(u, u2)):
            assert abs(inner(assoc, x)) <= 1e-12 + 1e-9 * s * max(norm(x), 1.0)


def test_mixed_product_anticommutativity():
    for _ in range(30):
        u1, u, u2, u3 = (rand(8) for _ in range(4))
        s = norm(u1) * norm(u) * norm(u2) * norm(u3)
        a = inner(commutator3(u1, u, u2), u3)
        b = inner(commutator3(u3, u, u2), u1)
        assert abs(a + b) <= 1e-12 + 1e-9 * s
        a = inner(associator3(u1, u, u2), u3)
        b = inner(associator3(u3, u, u2), u1)
        assert abs(a + b) <= 1e-12 + 1e-9 * s


def test_associator_cancellation_sum():
    for dim in (4, 8):
        for _ in range(20):
            u1, u, u2 = rand(dim), rand(dim), rand(dim)
            s = norm(u1) * norm(u) * norm(u2)
            total = associator3(u1, u, u2) + associator3(u2, u, u1)
            assert norm(total) <= 1e-12 + 1e-9 * s


# -- Gram matrices and lengths ----------------------------------------------------


def test_gram_examples():
    i0 = unit(8)
    np.testing.assert_array_equal(gram(i0, i0, i0).entries, np.ones((3, 3)))
    q = [Hyper.basis(4, k) for k in range(4)]
    np.testing.assert_array_equal(gram(q[1], q[2], q[3]).entries, np.eye(3))


def test_gram_is_symmetric_and_psd():
    for _ in range(30):
        u1, u, u2 = rand(8), rand(8), rand(8)
        g = gram(u1, u, u2)
        np.testing.assert_allclose(g.entries, g.entries.T, atol=0)
        assert g.det() >= -1e-9 * (norm(u1) * norm(u) * norm(u2)) ** 2


def test_gram_matrix_validation():
    with pytest.raises(ValueError):
        GramMatrix(np.ones((2, 2)))


def test_det3_matches_numpy():
    for _ in range(20):
        m = RNG.standard_normal((3, 3))
        assert abs(det3(m) - np.linalg.det(m)) <= 1e-10


def test_length_formulas_trivial_triples():
    i0 = unit(8)
    assert anticommutator3_norm_sq(i0, i0, i0) == 1.0
    assert commutator3_norm_sq(i0, i0, i0) == 0.0
    assert associator3_norm_sq(i0, i0, i0) == 0.0
    q = [Hyper.basis(4, k) for k in range(4)]
    assert anticommutator3_norm_sq(q[1], q[2], q[3]) == 0.0
    assert commutator3_norm_sq(q[1], q[2], q[3]) == 1.0
    assert associator3_norm_sq(q[1], q[2], q[3]) == 0.0


@pytest.mark.parametrize("dim", (4, 8))
def test_length_formulas_match_decomposition(dim):
    for _ in range(50):
        u1, u, u2 = rand(dim), rand(dim), rand(dim)
        s2 = (norm(u1) * norm(u) * norm(u2)) ** 2
        d = decompose_triple(u1, u, u2)
        assert abs(anticommutator3_norm_sq(u1, u, u2) - norm_sq(d.anti)) <= 1e-12 + 1e-8 * s2
        assert abs(commutator3_norm_sq(u1, u, u2) - norm_sq(d.comm)) <= 1e-12 + 1e-8 * s2
        assert abs(associator3_norm_sq(u1, u, u2) - norm_sq(d.assoc)) <= 1e-12 + 1e-8 * s2
        total = (anticommutator3_norm_sq(u1, u, u2) + commutator3_norm_sq(u1, u, u2)
                 + associator3_norm_sq(u1, u, u2))
        assert abs(total - norm_sq(u1) * norm_sq(u) * norm_sq(u2)) <= 1e-12 + 1e-8 * s2


def test_anticommutative_component_is_gram_determinant():
    for _ in range(30):
        u1, u, u2 = rand(8), rand(8), rand(8)
        s2 = (norm(u1) * norm(u) * norm(u2)) ** 2
        d = decompose_triple(u1, u, u2)
        assert abs(anticommutative_component_norm_sq(u1, u, u2)
                   - norm_sq(d.comm + d.assoc)) <= 1e-12 + 1e-9 * s2


def test_gram_det_imaginary_identity_examples():
    q = [Hyper.basis(4, k) for k in range(4)]
    lhs, rhs = gram_det_imaginary_identity(q[1], q[2], q[3])
    assert lhs == 1.0 and rhs == 1.0
    i0 = unit(8)
    lhs, rhs = gram_det_imaginary_identity(i0, i0, i0)
    assert lhs == 0.0 and rhs == 0.0


@pytest.mark.parametrize("dim", (4, 8))
def test_gram_det_imaginary_identity_random(dim):
    for _ in range(50):
        u1, u, u2 = rand(dim), rand(dim), rand(dim)
        s2 = (norm(u1) * norm(u) * norm(u2)) ** 2
        lhs, rhs = gram_det_imaginary_identity(u1, u, u2)
        assert abs(lhs - rhs) <= 1e-12 + 1e-9 * s2


def test_norm_multiplicativity_of_full_product():
    for _ in range(30):
        u1, u, u2 = rand(8), rand(8), rand(8)
        s2 = (norm(u1) * norm(u) * norm(u2)) ** 2
        prod = multiply(multiply(u1, conjugate(u)), u2)
        assert abs(norm_sq(prod) - norm_sq(u1) * norm_sq(u) * norm_sq(u2)) <= 1e-12 + 1e-8 * s2


def test_nearly_degenerate_triples_are_fine():
    u = rand(8)
    tiny = Hyper(8, 1e-8 * RNG.standard_normal(8))
    u1 = u + tiny
    d = decompose_triple(u1, u, u)
    s = norm(u1) * norm_sq(u)
    assert d.residual <= 1e-12 + 1e-9 * s
    assert abs(anticommutator3_norm_sq(u1, u, u) - norm_sq(d.anti)) <= 1e-12 + 1e-8 * s * s
