import numpy as np
import pytest

from spinrep import clifford as cl
from spinrep import dirac as dr
from spinrep import grassmann as gr
from spinrep import transforms as tr
from spinrep._tables import NBLADES
from spinrep.errors import NotIsometry

from conftest import random_element_coeffs


def null_space_dim_oracle(m, rel_tol=1e-8):
    """Null-space dimension by singular values, independent of any eigensolver."""
    svals = np.linalg.svd(m, compute_uv=False)
    scale = max(float(svals[0]), 1.0)
    return int(np.count_nonzero(svals <= rel_tol * scale))


def random_massive_exponent(rng, g, m):
    while True:
        lam = rng.normal(size=4) + 1j * rng.normal(size=4)
        q = g.inner(lam, lam)
        if abs(q) > 1e-3:
            return lam * (m / np.sqrt(q))


def random_solution(rng, g, basis, m=1.2 + 0.4j):
    lam = random_massive_exponent(rng, g, m)
    sols = dr.plane_wave_solutions(lam, m, basis)
    coeffs = rng.normal(size=sols.dimension)
    return dr.PlaneWave(np.einsum("i,ijk->jk", coeffs, sols.matrix_basis), lam, m)


# ---------------------------------------------------------------------------
# symbol

def test_symbol_basis_vector(basis):
    np.testing.assert_array_equal(
        dr.symbol_matrix(np.array([1, 0, 0, 0], complex), basis), basis.gammas[0])


def test_symbol_zero(basis):
    assert np.abs(dr.symbol_matrix(np.zeros(4, complex), basis)).max() == 0


def test_symbol_squares_to_metric_norm(mink, basis, rng):
    worst = 0.0
    for _ in range(50):
        lam = rng.normal(size=4) + 1j * rng.normal(size=4)
        s = dr.symbol_matrix(lam, basis)
        worst = max(worst, np.abs(s @ s - mink.inner(lam, lam) * np.eye(4)).max())
    assert worst < 1e-11


# ---------------------------------------------------------------------------
# solution spaces

def test_rest_frame_solutions(mink, basis):
    m = 1.5
    sols = dr.plane_wave_solutions(np.array([m, 0, 0, 0], complex), m, basis)
    assert sols.column_dimension == 2
    assert sols.dimension == 8
    # oracle: the +1 eigenspace of the first generator matrix is the top block
    span = sols.column_basis
    top = np.abs(span[:2]).sum()
    bottom = np.abs(span[2:]).sum()
    assert bottom < 1e-12 and top > 1.0 - 1e-12
    for n in sols.matrix_basis:
        assert dr.PlaneWave(n, np.array([m, 0, 0, 0], complex), m).residual(basis) < 1e-12


def test_mismatched_mass_gives_empty_space(basis):
    sols = dr.plane_wave_solutions(np.array([1, 0, 0, 0], complex), 2.0, basis)
    assert sols.column_dimension == 0
    assert sols.matrix_basis.shape == (0, 4, 4)


def test_solution_dimensions_match_null_space_oracle(mink, basis, rng):
    for _ in range(20):
        m = rng.normal() + 1j * rng.normal()
        if abs(m) < 0.5:
            m += 0.7
        lam = random_massive_exponent(rng, mink, m)
        sols = dr.plane_wave_solutions(lam, m, basis)
        oracle = null_space_dim_oracle(dr.symbol_matrix(lam, basis) - m * np.eye(4))
        assert sols.column_dimension == oracle == 2
    for _ in range(20):
        m = rng.normal() + 1j * rng.normal()
        lam = rng.normal(size=4) + 1j * rng.normal(size=4)
        if abs(mink.inner(lam, lam) - m * m) < 0.1:
            lam = lam * 2.0
        sols = dr.plane_wave_solutions(lam, m, basis)
        oracle = null_space_dim_oracle(dr.symbol_matrix(lam, basis) - m * np.eye(4))
        assert sols.column_dimension == oracle == 0


def test_lightlike_massless_solutions(mink, basis, rng):
    for _ in range(10):
        tail = rng.normal(size=3) + 1j * rng.normal(size=3)
        head = np.sqrt(np.sum(tail**2))  # makes the exponent null
        lam = np.concatenate([[head], tail])
        assert abs(mink.inner(lam, lam)) < 1e-10
        sols = dr.plane_wave_solutions(lam, 0.0, basis)
        assert sols.column_dimension == 2
        for n in sols.matrix_basis:
            assert dr.PlaneWave(n, lam, 0.0).residual(basis) < 1e-10


def test_right_multiplication_closure(mink, basis, rng):
    wave = random_solution(rng, mink, basis)
    for _ in range(20):
        r = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        moved = dr.PlaneWave(wave.amplitude @ r, wave.exponent, wave.mass)
        assert moved.residual(basis) < 1e-11


def test_is_solution_flag(mink, basis, rng):
    wave = random_solution(rng, mink, basis)
    assert wave.is_solution(basis)
    broken = dr.PlaneWave(wave.amplitude + 0.1 * np.eye(4), wave.exponent, wave.mass)
    assert not broken.is_solution(basis)
    assert broken.residual(basis) > 0


# ---------------------------------------------------------------------------
# operator form of the symbol

def test_hodge_dirac_is_weighted_generator_sum(mink, rng):
    lam = rng.normal(size=4) + 1j * rng.normal(size=4)
    direct = sum(lam[i] * gr.gamma_op(i, mink) for i in range(4))
    np.testing.assert_array_equal(dr.hodge_dirac_symbol(lam, mink), direct)


def test_hodge_dirac_transport(mink, rng):
    worst = 0.0
    for _ in range(50):
        lam = rng.normal(size=4) + 1j * rng.normal(size=4)
        h = dr.hodge_dirac_symbol(lam, mink)
        omega = random_element_coeffs(rng)
        rhs = cl.geometric_product(dr.symbol_element(lam), cl.CliffordElement(omega),
                                   mink).coeffs
        worst = max(worst, np.abs(h @ omega - rhs).max())
    assert worst < 1e-11


def test_hodge_dirac_square(mink, rng):
    worst = 0.0
    for _ in range(50):
        lam = rng.normal(size=4) + 1j * rng.normal(size=4)
        h = dr.hodge_dirac_symbol(lam, mink)
        worst = max(worst, np.abs(h @ h - mink.inner(lam, lam) * np.eye(NBLADES)).max())
    assert worst < 1e-11


# ---------------------------------------------------------------------------
# covariance

def test_identity_keeps_residual(mink, basis, rng):
    wave = random_solution(rng, mink, basis)
    assert abs(dr.covariance_residual(np.eye(4), wave, basis) - wave.residual(basis)) < 1e-12


def test_covariance_random_isometries(mink, basis, rng):
    worst = 0.0
    for _ in range(5):
        wave = random_solution(rng, mink, basis, m=0.8 + 0.3j * rng.random())
        for _ in range(4):
            a = tr.random_lorentz(rng, mink)
            worst = max(worst, dr.covariance_residual(a, wave, basis))
    assert worst < 1e-10


def test_covariance_rejects_non_isometry(mink, basis, rng):
    wave = random_solution(rng, mink, basis)
    with pytest.raises(NotIsometry):
        dr.covariance_residual(np.diag([1.0, 2.0, 1.0, 1.0]), wave, basis)


def test_non_solution_has_positive_residual(mink, basis, rng):
    wave = random_solution(rng, mink, basis)
    broken = dr.PlaneWave(wave.amplitude + np.eye(4), wave.exponent, wave.mass)
    a = tr.random_lorentz(rng, mink)
    assert dr.covariance_residual(a, broken, basis) > 1e-3


# ---------------------------------------------------------------------------
# product states

def test_make_product_state_single_entry():
    e1, e2 = np.eye(4)[1], np.eye(4)[2]
    m = dr.make_product_state(e1, e2)
    expected = np.zeros((4, 4))
    expected[1, 2] = 1.0
    np.testing.assert_array_equal(m, expected)


def test_product_state_rank_one(rng):
    for _ in range(50):
        psi = rng.normal(size=4) + 1j * rng.normal(size=4)
        alpha = rng.normal(size=4) + 1j * rng.normal(size=4)
        assert np.linalg.matrix_rank(dr.make_product_state(psi, alpha)) == 1


def test_two_sided_multiplication_keeps_product_structure(rng):
    worst = 0.0
    for _ in range(50):
        psi = rng.normal(size=4) + 1j * rng.normal(size=4)
        alpha = rng.normal(size=4) + 1j * rng.normal(size=4)
        left = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        right = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        lhs = left @ dr.make_product_state(psi, alpha) @ right
        rhs = dr.make_product_state(left @ psi, right.T @ alpha)
        worst = max(worst, np.abs(lhs - rhs).max())
    assert worst < 1e-12


def test_probe_identity_returns_input_singular_values(basis, rng):
    psi = rng.normal(size=4) + 1j * rng.normal(size=4)
    alpha = rng.normal(size=4) + 1j * rng.normal(size=4)
    state = dr.ProductState(psi, alpha)
    got = dr.entanglement_probe(np.eye(4), state, basis)
    expected = np.linalg.svd(state.materialize(), compute_uv=False)
    np.testing.assert_allclose(got, expected, atol=1e-12)


def test_lorentz_preserves_rank_one(mink, basis, rng):
    for _ in range(20):
        state = dr.ProductState(rng.normal(size=4) + 1j * rng.normal(size=4),
                                rng.normal(size=4) + 1j * rng.normal(size=4))
        sv = dr.entanglement_probe(tr.random_lorentz(rng, mink), state, basis)
        assert sv[1] / sv[0] < 1e-9


def test_generic_map_mixes_the_factors(basis):
    e0 = np.eye(4)[0].astype(complex)
    sv = dr.entanglement_probe(np.diag([1.0, 2.0, 3.0, 4.0]), dr.ProductState(e0, e0), basis)
    assert sv[1] / sv[0] > 1e-3


def test_probe_search_over_seed_batch(mink, basis):
    rng = np.random.default_rng(2024)
    best = 0.0
    for _ in range(20):
        a = tr.random_invertible_non_isometry(rng, mink)
        state = dr.ProductState(rng.normal(size=4) + 1j * rng.normal(size=4),
                                rng.normal(size=4) + 1j * rng.normal(size=4))
        sv = dr.entanglement_probe(a, state, basis)
        best = max(best, sv[1] / sv[0])
    assert best > 1e-3


def test_probe_rejects_singular_map(basis):
    state = dr.ProductState(np.eye(4)[0], np.eye(4)[0])
    with pytest.raises(ValueError):
        dr.entanglement_probe(np.zeros((4, 4)), state, basis)
