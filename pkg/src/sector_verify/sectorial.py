"""Accretivity and sectoriality predicates."""
from __future__ import annotations

import numpy as np

from .core import DEFAULT_TOL, Tolerance, as_matrix, eigvals_hermitian, psd_slack
from .errors import NotSectorialError


def accretivity_slack(A) -> tuple[float, float]:
    """``(lambda_min(Re A), ||Re A||_2)``."""
    A = as_matrix(A)
    return psd_slack((A + A.conj().T) / 2)


def is_accretive(A, tol: Tolerance = DEFAULT_TOL) -> bool:
    """``Re(A) >= O`` within ``tol.psd``."""
    lam_min, norm = accretivity_slack(A)
    return lam_min >= -tol.psd * (1 + norm)


def is_strictly_accretive(A, tol: Tolerance = DEFAULT_TOL) -> bool:
    """``Re(A) > O`` with a positive floor of ``tol.psd * (1 + ||Re A||)``."""
    lam_min, norm = accretivity_slack(A)
    return lam_min > tol.psd * (1 + norm)


def sector_tangent(A, tol: Tolerance = DEFAULT_TOL) -> float:
    """``tan`` of the sector angle: the spectral radius of ``R^{-1/2} S R^{-1/2}``
    with ``R = Re(A)`` and ``S = Im(A)``."""
    A = as_matrix(A)
    R = (A + A.conj().T) / 2
    S = (A - A.conj().T) / 2j
    w, U = np.linalg.eigh(R)
    scale = 1 + max(abs(w[0]), abs(w[-1]))
    if w[0] <= tol.psd * scale:
        raise NotSectorialError(f"Re(A) is not positive definite (lambda_min = {w[0]:.3e})")
    Rm = (U / np.sqrt(w)) @ U.conj().T
    K = Rm @ S @ Rm
    mu = eigvals_hermitian((K + K.conj().T) / 2)
    return float(max(abs(mu[0]), abs(mu[-1])))


def sector_angle(A, tol: Tolerance = DEFAULT_TOL) -> float:
    """Least ``alpha`` in ``[0, pi/2)`` with ``W(A)`` inside the sector ``S_alpha``.

    Defined for strictly accretive ``A`` only; otherwise raises
    :class:`NotSectorialError`.

    >>> round(sector_angle(np.eye(2) * (1 + 1j)), 12) == round(np.pi / 4, 12)
    True
    """
    return float(np.arctan(sector_tangent(A, tol)))


def in_sector(A, alpha: float, tol: Tolerance = DEFAULT_TOL) -> bool:
    """``W(A)`` inside ``S_alpha``: ``tan(alpha) Re(A) +/- Im(A) >= O``."""
    A = as_matrix(A)
    R = (A + A.conj().T) / 2
    S = (A - A.conj().T) / 2j
    tau = np.tan(alpha)
    for H in (tau * R - S, tau * R + S):
        lam_min, norm = psd_slack(H)
        if lam_min < -tol.psd * (1 + norm):
            return False
    return True
