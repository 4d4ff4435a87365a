"""Dense complex matrix primitives.

Matrices are plain ``numpy.ndarray`` objects of complex dtype.  Hermitian
inputs are certified (and symmetrized) by :func:`as_hermitian`; every spectral
routine returns values in descending order so that index ``j`` matches the
usual ``lambda_j`` / ``s_j`` convention.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionError,
    NotHermitianError,
    NumericalError,
    RangeError,
    SingularMatrixError,
)

KAPPA_CAP = 1e8


@dataclass(frozen=True)
class Tolerance:
    """Relative tolerances used by predicates and claim verdicts.

    psd
        PSD floor: ``lambda_min(H) >= -psd * (1 + ||H||_2)``.
    eq
        Equality / Hermitian certification scale.
    margin
        A claim passes when its relative margin is ``>= -margin``.
    """

    psd: float = 1e-8
    eq: float = 1e-10
    margin: float = 1e-6

    def __post_init__(self):
        for name in ("psd", "eq", "margin"):
            value = getattr(self, name)
            if not np.isfinite(value) or value <= 0:
                raise RangeError(f"tolerance {name!r} must be positive, got {value!r}")
        if self.psd < np.finfo(float).eps:
            raise RangeError("tolerance 'psd' is below machine epsilon")


DEFAULT_TOL = Tolerance()


def as_matrix(A) -> np.ndarray:
    """Validate ``A`` as a finite square matrix and return it as complex."""
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] == 0:
        raise DimensionError(f"expected a non-empty square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise NumericalError("matrix has non-finite entries")
    return A.astype(complex, copy=False)


def same_shape(*mats) -> None:
    shapes = {np.shape(m) for m in mats}
    if len(shapes) != 1:
        raise DimensionError(f"operand shapes disagree: {sorted(shapes)}")


def adjoint(A: np.ndarray) -> np.ndarray:
    return A.conj().T


def hermitian_part(A) -> np.ndarray:
    """``Re(A) = (A + A*) / 2``."""
    A = as_matrix(A)
    return (A + A.conj().T) / 2


def skew_part(A) -> np.ndarray:
    """``Im(A) = (A - A*) / (2i)``; Hermitian, with ``A = Re(A) + i Im(A)``."""
    A = as_matrix(A)
    return (A - A.conj().T) / 2j


def as_hermitian(H, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Certify ``H`` as Hermitian within ``tol.eq`` and return its symmetrization."""
    H = as_matrix(H)
    dev = np.linalg.norm(H - H.conj().T)
    if dev > tol.eq * (1 + np.linalg.norm(H)):
        raise NotHermitianError(f"||H - H*||_F = {dev:.3e} exceeds tolerance")
    return (H + H.conj().T) / 2


def _eigh(H):
    try:
        w, U = np.linalg.eigh(H)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(str(exc)) from exc
    return w, U


def eig_hermitian(H, tol: Tolerance = DEFAULT_TOL):
    """Eigenvalues (descending) and a unitary matrix of eigenvectors."""
    w, U = _eigh(as_hermitian(H, tol))
    return w[::-1], U[:, ::-1]


def eigvals_hermitian(H) -> np.ndarray:
    """Descending eigenvalues of a Hermitian matrix (no certification)."""
    try:
        w = np.linalg.eigvalsh(H)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(str(exc)) from exc
    return w[::-1]


def psd_slack(H) -> tuple[float, float]:
    """Return ``(lambda_min(H), ||H||_2)`` for a Hermitian ``H``."""
    w = eigvals_hermitian(H)
    return float(w[-1]), float(max(abs(w[0]), abs(w[-1])))


def is_psd(H, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff ``lambda_min(H) >= -tol.psd * (1 + ||H||_2)``."""
    H = as_hermitian(H, tol)
    lam_min, norm = psd_slack(H)
    return lam_min >= -tol.psd * (1 + norm)


def is_pd(H, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Strict version of :func:`is_psd`: ``lambda_min > tol.psd * (1 + ||H||_2)``."""
    H = as_hermitian(H, tol)
    lam_min, norm = psd_slack(H)
    return lam_min > tol.psd * (1 + norm)


def loewner_leq(H1, H2, tol: Tolerance = DEFAULT_TOL) -> bool:
    """``H1 <= H2`` in the Loewner order."""
    H1 = as_hermitian(H1, tol)
    H2 = as_hermitian(H2, tol)
    same_shape(H1, H2)
    return is_psd(H2 - H1, tol)


def singular_values(A) -> np.ndarray:
    """Singular values in descending order."""
    A = as_matrix(A)
    try:
        return np.linalg.svd(A, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(str(exc)) from exc


def spectral_norm(A) -> float:
    return float(singular_values(A)[0])


def ky_fan_norms(A) -> np.ndarray:
    """All Ky Fan norms ``[||A||_(1), ..., ||A||_(n)]``."""
    return np.cumsum(singular_values(A))


def ky_fan_norm(A, k: int) -> float:
    """Sum of the ``k`` largest singular values; ``k = 1`` is the spectral norm."""
    A = as_matrix(A)
    n = A.shape[0]
    if not (isinstance(k, (int, np.integer)) and 1 <= k <= n):
        raise RangeError(f"Ky Fan index must lie in 1..{n}, got {k!r}")
    return float(ky_fan_norms(A)[k - 1])


def polar_decomposition(X):
    """``X = U P`` with ``U`` unitary and ``P = (X* X)^{1/2}``.

    Built from the full SVD, so ``U`` is unitary even for singular ``X``.
    """
    X = as_matrix(X)
    try:
        W, s, Vh = np.linalg.svd(X)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(str(exc)) from exc
    U = W @ Vh
    P = (Vh.conj().T * s) @ Vh
    return U, (P + P.conj().T) / 2


def abs_matrix(X) -> np.ndarray:
    """``|X| = (X* X)^{1/2}``."""
    return polar_decomposition(X)[1]


def inverse(A, kappa_cap: float = KAPPA_CAP) -> np.ndarray:
    """Inverse with a condition-number guard.

    Raises :class:`SingularMatrixError` when ``s_min < s_max / kappa_cap``.
    """
    A = as_matrix(A)
    s = singular_values(A)
    if s[0] == 0 or s[-1] < s[0] / kappa_cap:
        raise SingularMatrixError(
            f"condition number {s[0] / s[-1] if s[-1] else np.inf:.3e} exceeds cap {kappa_cap:.1e}"
        )
    return np.linalg.inv(A)


def _psd_eig(H, tol: Tolerance):
    H = as_hermitian(H, tol)
    w, U = _eigh(H)
    scale = 1 + max(abs(w[0]), abs(w[-1]))
    if w[0] < -tol.psd * scale:
        raise NumericalError(f"matrix is not positive semidefinite (lambda_min = {w[0]:.3e})")
    return np.clip(w, 0, None), U


def psd_power(H, t: float, tol: Tolerance = DEFAULT_TOL, kappa_cap: float = KAPPA_CAP) -> np.ndarray:
    """``H^t`` for PSD ``H`` (PD required when ``t < 0``)."""
    w, U = _psd_eig(H, tol)
    if t < 0 and (w[0] <= 0 or w[0] < w[-1] / kappa_cap):
        raise SingularMatrixError("negative power of a singular or ill-conditioned matrix")
    if t == 0:
        return np.eye(len(w), dtype=complex)
    P = (U * w**t) @ U.conj().T
    return (P + P.conj().T) / 2


def psd_sqrt(H, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    return psd_power(H, 0.5, tol)


def direct_sum(A, B) -> np.ndarray:
    A = as_matrix(A)
    B = as_matrix(B)
    n, m = A.shape[0], B.shape[0]
    out = np.zeros((n + m, n + m), dtype=complex)
    out[:n, :n] = A
    out[n:, n:] = B
    return out
