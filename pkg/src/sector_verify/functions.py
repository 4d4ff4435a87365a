"""Operator monotone functions and their matrix functional calculus.

Only a closed whitelist of functions is supported (see :data:`KINDS`); each
one maps ``(0, inf)`` into itself, fixes ``1`` and is operator monotone.  The
scalar evaluators use the principal branch, so they extend analytically to the
slit plane ``C \\ (-inf, 0]``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_TOL, Tolerance, as_matrix, _psd_eig
from .errors import IllConditionedEigenbasisError, NumericalError, RangeError, SpectrumOnCutError

KINDS = ("power", "harmonic_like", "log_mean", "affine")
CUT_DISTANCE = 1e-10
EIGENBASIS_COND_CAP = 1e6

_LOG_SERIES_RADIUS = 1e-4


def _log_mean_scalar(z):
    z = np.asarray(z)
    w = z - 1
    near = np.abs(w) < _LOG_SERIES_RADIUS
    safe = np.where(near, 2.0, z)
    out = (safe - 1) / np.log(safe)
    # w / log(1 + w) expanded at w = 0
    series = 1 + w / 2 - w**2 / 12 + w**3 / 24
    return np.where(near, series, out)


@dataclass(frozen=True)
class Omf:
    """A member of the operator monotone registry.

    ``kind`` is one of ``power`` (``x**t``, ``0 < t <= 1``), ``harmonic_like``
    (``2x/(1+x)``), ``log_mean`` (``(x-1)/log x``) or ``affine``
    (``(1-t) + t x``, ``0 <= t <= 1``).
    """

    kind: str
    t: float | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise RangeError(f"unknown operator monotone function {self.kind!r}; choose from {KINDS}")
        if self.kind == "power":
            if self.t is None or not (0 < self.t <= 1):
                raise RangeError(f"power exponent must lie in (0, 1], got {self.t!r}")
        elif self.kind == "affine":
            if self.t is None or not (0 <= self.t <= 1):
                raise RangeError(f"affine weight must lie in [0, 1], got {self.t!r}")
        elif self.t is not None:
            raise RangeError(f"{self.kind} takes no parameter")

    def __call__(self, z):
        z = np.asarray(z)
        if self.kind == "power":
            if self.t == 1:
                return z
            return np.power(z, self.t)
        if self.kind == "harmonic_like":
            return 2 * z / (1 + z)
        if self.kind == "log_mean":
            return _log_mean_scalar(z)
        return (1 - self.t) + self.t * z

    def to_dict(self) -> dict:
        out = {"kind": self.kind}
        if self.t is not None:
            out["t"] = self.t
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Omf":
        t = data.get("t")
        return cls(data["kind"], None if t is None else float(t))

    def __str__(self):
        return self.kind if self.t is None else f"{self.kind}({self.t:g})"


def power(t: float) -> Omf:
    return Omf("power", float(t))


def affine(t: float) -> Omf:
    return Omf("affine", float(t))


HARMONIC = Omf("harmonic_like")
LOG_MEAN = Omf("log_mean")


def registry(ts=(0.25, 0.5, 0.75, 1.0)) -> list[Omf]:
    """Representative registry members; parametrized kinds are sampled at ``ts``."""
    fs = [power(t) for t in ts if 0 < t <= 1]
    fs += [affine(t) for t in ts if 0 <= t <= 1]
    return fs + [HARMONIC, LOG_MEAN]


def _diagonalize(A):
    try:
        lam, V = np.linalg.eig(A)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(str(exc)) from exc
    scale = 1 + np.abs(lam).max()
    # distance of each eigenvalue to the slit (-inf, 0]
    dist = np.where(lam.real > 0, np.abs(lam), np.abs(lam.imag))
    if dist.min() <= CUT_DISTANCE * scale:
        raise SpectrumOnCutError(f"eigenvalue within {dist.min():.2e} of the branch cut")
    cond = np.linalg.cond(V)
    if not np.isfinite(cond) or cond > EIGENBASIS_COND_CAP:
        raise IllConditionedEigenbasisError(f"eigenvector condition number {cond:.3e}")
    return lam, V


def _reassemble(V, values):
    # V diag(values) V^{-1}
    return np.linalg.solve(V.T, (V * values).T).T


class Diagonalization:
    """One eigendecomposition of ``A`` reused for several functions of ``A``.

    Hermitian positive definite matrices go through ``eigh``; anything else
    through ``eig`` with the branch-cut and conditioning checks of
    :func:`apply_omf`.
    """

    def __init__(self, A, hermitian: bool = False):
        A = as_matrix(A)
        self.n = A.shape[0]
        self.hermitian = hermitian
        self.A = A
        if self.n == 1:
            z = A[0, 0]
            if z.real <= 0 and abs(z.imag) <= CUT_DISTANCE * (1 + abs(z)):
                raise SpectrumOnCutError(f"scalar {z} lies on the branch cut")
        elif hermitian:
            H = (A + A.conj().T) / 2
            w, U = np.linalg.eigh(H)
            if w[0] <= CUT_DISTANCE * (1 + abs(w[-1])):
                raise SpectrumOnCutError("Hermitian input is not positive definite")
            self.w, self.U = w, U
        else:
            self.lam, self.V = _diagonalize(A)

    def apply(self, f) -> np.ndarray:
        """``f(A)`` for any callable acting elementwise on eigenvalues."""
        if self.n == 1:
            return np.array([[f(self.A[0, 0])]], dtype=complex)
        if self.hermitian:
            F = (self.U * f(self.w)) @ self.U.conj().T
            return (F + F.conj().T) / 2
        return _reassemble(self.V, f(self.lam))


def apply_omf(f: Omf, A) -> np.ndarray:
    """``f(A)`` via ``A = V D V^{-1}`` and the principal branch of ``f``.

    Raises :class:`SpectrumOnCutError` if an eigenvalue lies within
    ``1e-10 (1 + rho(A))`` of ``(-inf, 0]`` and
    :class:`IllConditionedEigenbasisError` if ``cond(V) > 1e6``.
    """
    return Diagonalization(A).apply(f)


def principal_power(A, t: float) -> np.ndarray:
    """Principal power ``A^t`` for ``t`` in ``[0, 1]``."""
    if not (0 <= t <= 1):
        raise RangeError(f"exponent must lie in [0, 1], got {t!r}")
    A = as_matrix(A)
    if t == 0:
        return np.eye(A.shape[0], dtype=complex)
    if t == 1:
        return A.copy()
    return apply_omf(power(t), A)


def power_family(A, ts) -> list[np.ndarray]:
    """``[A^t for t in ts]`` sharing a single diagonalization."""
    A = as_matrix(A)
    n = A.shape[0]
    diag = None
    out = []
    for t in ts:
        if not (0 <= t <= 1):
            raise RangeError(f"exponent must lie in [0, 1], got {t!r}")
        if t == 0:
            out.append(np.eye(n, dtype=complex))
        elif t == 1:
            out.append(A.copy())
        else:
            diag = diag or Diagonalization(A)
            out.append(diag.apply(lambda z, t=t: np.power(z, t)))
    return out


def apply_omf_hermitian(f: Omf, H, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """``f(H)`` for Hermitian positive definite ``H`` through ``eigh``."""
    w, U = _psd_eig(H, tol)
    if w[0] <= 0:
        raise SpectrumOnCutError("Hermitian input has a zero eigenvalue")
    F = (U * f(w)) @ U.conj().T
    return (F + F.conj().T) / 2
