import numpy as np
import pytest

from sector_verify.core import (
    DEFAULT_TOL,
    Tolerance,
    abs_matrix,
    as_hermitian,
    as_matrix,
    direct_sum,
    eig_hermitian,
    hermitian_part,
    inverse,
    is_pd,
    is_psd,
    ky_fan_norm,
    ky_fan_norms,
    loewner_leq,
    polar_decomposition,
    psd_power,
    psd_sqrt,
    singular_values,
    skew_part,
    spectral_norm,
)
from sector_verify.errors import (
    DimensionError,
    NotHermitianError,
    NumericalError,
    RangeError,
    SingularMatrixError,
)

from conftest import crandn


def test_tolerance_defaults_and_validation():
    assert (DEFAULT_TOL.psd, DEFAULT_TOL.eq, DEFAULT_TOL.margin) == (1e-8, 1e-10, 1e-6)
    with pytest.raises(RangeError):
        Tolerance(psd=0)
    with pytest.raises(RangeError):
        Tolerance(margin=-1e-6)
    with pytest.raises(RangeError):
        Tolerance(psd=1e-20)


@pytest.mark.parametrize("bad", [np.zeros((2, 3)), np.zeros(3), np.zeros((0, 0))])
def test_as_matrix_rejects_non_square(bad):
    with pytest.raises(DimensionError):
        as_matrix(bad)


def test_as_matrix_rejects_non_finite():
    with pytest.raises(NumericalError):
        as_matrix(np.array([[1.0, np.nan], [0, 1]]))


def test_real_and_imaginary_parts_reassemble(rng):
    A = crandn(rng, 4)
    R, S = hermitian_part(A), skew_part(A)
    np.testing.assert_allclose(R, R.conj().T)
    np.testing.assert_allclose(S, S.conj().T)
    np.testing.assert_allclose(R + 1j * S, A, atol=1e-15)


def test_as_hermitian_certifies_within_tolerance():
    H = np.array([[1, 2 + 1j], [2 - 1j, 3]])
    out = as_hermitian(H + 1e-13)
    np.testing.assert_allclose(out, out.conj().T, atol=0)
    with pytest.raises(NotHermitianError):
        as_hermitian(np.array([[1, 1], [0, 1]]))


def test_eigenvalues_descending():
    w, U = eig_hermitian(np.diag([1.0, 5.0, 3.0]))
    np.testing.assert_allclose(w, [5, 3, 1])
    np.testing.assert_allclose(U.conj().T @ U, np.eye(3), atol=1e-14)


def test_psd_predicates_tolerance_is_relative():
    big = np.diag([1e6, -1e-3])
    assert is_psd(big)  # -1e-3 >= -1e-8 * (1 + 1e6)
    assert not is_psd(np.diag([1.0, -1e-3]))
    assert is_psd(np.zeros((2, 2)))
    assert not is_pd(np.zeros((2, 2)))
    assert is_pd(np.eye(2))


def test_loewner_order():
    assert loewner_leq(np.eye(2), 2 * np.eye(2))
    assert not loewner_leq(np.diag([1.0, 3.0]), np.diag([2.0, 2.0]))
    assert loewner_leq(np.diag([1.0, 1.0]), np.diag([1.0, 1.0]))


def test_singular_values_and_ky_fan(oracle):
    K = oracle("kyfan_K")
    np.testing.assert_allclose(ky_fan_norms(K), oracle("kyfan_norms"), rtol=1e-13)
    assert ky_fan_norm(K, 1) == pytest.approx(spectral_norm(K))
    assert ky_fan_norm(K, 3) == pytest.approx(oracle("kyfan_norms")[2])
    s = singular_values(K)
    assert np.all(np.diff(s) <= 0)
    with pytest.raises(RangeError):
        ky_fan_norm(K, 0)
    with pytest.raises(RangeError):
        ky_fan_norm(K, 4)


def test_polar_decomposition_matches_oracle(oracle):
    X = oracle("polar_X")
    U, P = polar_decomposition(X)
    np.testing.assert_allclose(U, oracle("polar_U"), atol=1e-13)
    np.testing.assert_allclose(P, oracle("polar_P"), atol=1e-13)
    np.testing.assert_allclose(U @ P, X, atol=1e-13)
    np.testing.assert_allclose(np.sort(np.linalg.eigvalsh(P))[::-1], oracle("polar_svals"), atol=1e-13)


def test_polar_of_singular_matrix_is_unitary():
    X = np.array([[1.0, 0], [0, 0]])
    U, P = polar_decomposition(X)
    np.testing.assert_allclose(U.conj().T @ U, np.eye(2), atol=1e-14)
    np.testing.assert_allclose(U @ P, X, atol=1e-14)
    np.testing.assert_allclose(abs_matrix(X), np.diag([1.0, 0]), atol=1e-14)


def test_inverse_guards_conditioning():
    np.testing.assert_allclose(inverse(np.diag([2.0, 4.0])), np.diag([0.5, 0.25]))
    with pytest.raises(SingularMatrixError):
        inverse(np.diag([1.0, 1e-9]))
    with pytest.raises(SingularMatrixError):
        inverse(np.zeros((2, 2)))


def test_psd_power():
    H = np.diag([4.0, 9.0])
    np.testing.assert_allclose(psd_sqrt(H), np.diag([2.0, 3.0]))
    np.testing.assert_allclose(psd_power(H, -0.5), np.diag([0.5, 1 / 3]))
    np.testing.assert_allclose(psd_power(H, 0), np.eye(2))
    with pytest.raises(SingularMatrixError):
        psd_power(np.diag([1.0, 0.0]), -1)
    with pytest.raises(NumericalError):
        psd_power(np.diag([1.0, -1.0]), 0.5)


def test_direct_sum():
    out = direct_sum(np.eye(1), 2 * np.eye(2))
    np.testing.assert_allclose(out, np.diag([1, 2, 2]))
