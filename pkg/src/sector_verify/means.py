"""Matrix means for positive definite and strictly accretive matrices.

All means share the Kubo-Ando form ``A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2}``.
Hermitian positive definite pairs take a real-spectral path through ``eigh``;
anything else goes through the principal-branch functional calculus in
:mod:`sector_verify.functions`.
"""
from __future__ import annotations

import warnings

import numpy as np

from .core import (
    DEFAULT_TOL,
    Tolerance,
    as_matrix,
    inverse,
    psd_power,
    psd_slack,
    same_shape,
)
from .errors import NotSectorialError, RangeError
from .functions import Diagonalization, Omf, apply_omf_hermitian


class RegularizationWarning(UserWarning):
    """A merely accretive operand was shifted by ``eps * I`` before averaging."""


def _check_weight(t):
    if not (0 <= t <= 1):
        raise RangeError(f"mean weight must lie in [0, 1], got {t!r}")


def _hermitian(A, tol):
    return np.linalg.norm(A - A.conj().T) <= tol.eq * (1 + np.linalg.norm(A))


def _prepare(A, tol):
    """Classify ``A``; returns ``(matrix, is_hermitian_pd)``.

    Accretive operands with singular real part are shifted by
    ``1e-8 (1 + ||A||) I`` and flagged with a :class:`RegularizationWarning`.
    """
    herm = _hermitian(A, tol)
    if herm:
        A = (A + A.conj().T) / 2
    lam_min, norm = psd_slack((A + A.conj().T) / 2)
    if lam_min > tol.psd * (1 + norm):
        return A, herm
    if lam_min < -tol.psd * (1 + norm):
        raise NotSectorialError(f"operand is not accretive (lambda_min(Re A) = {lam_min:.3e})")
    eps = 1e-8 * (1 + np.linalg.norm(A, 2))
    warnings.warn(
        f"operand is accretive but not strictly; regularized by {eps:.1e} I",
        RegularizationWarning,
        stacklevel=3,
    )
    return A + eps * np.eye(A.shape[0]), herm


class _Congruence:
    """Shared pieces of ``A^{1/2} g(A^{-1/2} B A^{-1/2}) A^{1/2}`` for one pair."""

    def __init__(self, A, B, tol: Tolerance):
        A = as_matrix(A)
        B = as_matrix(B)
        same_shape(A, B)
        self.A, herm_a = _prepare(A, tol)
        self.B, herm_b = _prepare(B, tol)
        self.hermitian = herm_a and herm_b
        if self.hermitian:
            self.half = psd_power(self.A, 0.5, tol)
            self.inv_half = psd_power(self.A, -0.5, tol)
        else:
            self.half = Diagonalization(self.A).apply(np.sqrt)
            self.inv_half = inverse(self.half)
        self.C = self.inv_half @ self.B @ self.inv_half
        self._diag = None

    def apply(self, values_fn) -> np.ndarray:
        """``A^{1/2} g(C) A^{1/2}`` where ``values_fn`` maps eigenvalues of ``C``."""
        if self._diag is None:
            self._diag = Diagonalization(self.C, hermitian=self.hermitian)
        G = self.half @ self._diag.apply(values_fn) @ self.half
        if self.hermitian:
            G = (G + G.conj().T) / 2
        return G


def arithmetic_mean(A, B, t: float = 0.5) -> np.ndarray:
    """``(1 - t) A + t B``."""
    _check_weight(t)
    A = as_matrix(A)
    B = as_matrix(B)
    same_shape(A, B)
    return (1 - t) * A + t * B


def geometric_means(A, B, ts, tol: Tolerance = DEFAULT_TOL) -> list[np.ndarray]:
    """``[A #_t B for t in ts]`` sharing one factorization of the pair.

    ``t = 0`` and ``t = 1`` return exact copies of ``A`` and ``B``.
    """
    for t in ts:
        _check_weight(t)
    A = as_matrix(A)
    B = as_matrix(B)
    same_shape(A, B)
    out = [None] * len(ts)
    cong = None
    for i, t in enumerate(ts):
        if t == 0:
            out[i] = A.copy()
        elif t == 1:
            out[i] = B.copy()
        else:
            if cong is None:
                cong = _Congruence(A, B, tol)
            out[i] = cong.apply(lambda z, t=t: np.power(z, t))
    return out


def geometric_mean(A, B, t: float = 0.5, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Weighted geometric mean ``A #_t B = A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}``.

    Parameters
    ----------
    A, B : (n, n) array_like
        Strictly accretive operands.  Hermitian positive definite pairs use the
        real spectral calculus; others use principal powers.
    t : float
        Weight in ``[0, 1]``.

    Examples
    --------
    >>> G = geometric_mean(np.diag([1.0, 4.0]), np.diag([9.0, 16.0]))
    >>> np.allclose(G, np.diag([3.0, 8.0]))
    True
    """
    return geometric_means(A, B, [t], tol)[0]


def mean_sigma(f: Omf, A, B, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Operator mean ``A sigma_f B = A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2}``."""
    return _Congruence(A, B, tol).apply(f)


def mean_sigmas(fs, A, B, tol: Tolerance = DEFAULT_TOL) -> list[np.ndarray]:
    cong = _Congruence(A, B, tol)
    return [cong.apply(f) for f in fs]


def adjoint_mean(f: Omf, A, B, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Adjoint mean ``A sigma* B = (A^{-1} sigma B^{-1})^{-1}``."""
    A = as_matrix(A)
    B = as_matrix(B)
    M = mean_sigma(f, inverse(A), inverse(B), tol)
    out = inverse(M)
    if _hermitian(A, tol) and _hermitian(B, tol):
        out = (out + out.conj().T) / 2
    return out


def mean_of_hermitian(f: Omf, A, B, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """``A sigma_f B`` for Hermitian positive definite operands only."""
    Ah = psd_power(A, 0.5, tol)
    Aih = psd_power(A, -0.5, tol)
    return Ah @ apply_omf_hermitian(f, Aih @ B @ Aih, tol) @ Ah
