"""Seeded random instances satisfying the hypotheses of each claim.

Every generator is a pure function of its :class:`GenSpec` (or of an explicit
``numpy.random.Generator``).  Off-diagonal blocks are scaled in closed form so
that the resulting block matrices stay a relative distance ``mu`` inside the
PSD cone; see :func:`shrink_offdiagonal`.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .blocks import Block2x2
from .core import eigvals_hermitian, psd_power
from .errors import (
    GenerationFailedError,
    IllConditionedEigenbasisError,
    NotSectorialError,
    RangeError,
    SingularMatrixError,
    SpectrumOnCutError,
)

MASK64 = (1 << 64) - 1
MAX_ROUNDS = 100
ALPHA_MAX = 1.3
DIMS = (1, 2, 3, 4, 6)

RETRYABLE = (
    IllConditionedEigenbasisError,
    SingularMatrixError,
    SpectrumOnCutError,
    NotSectorialError,
)


def splitmix64(x: int) -> int:
    """One step of the SplitMix64 output function."""
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def mix64(*parts: int) -> int:
    """Fold 64-bit integers into one seed with SplitMix64."""
    h = 0
    for p in parts:
        h = splitmix64(h ^ (int(p) & MASK64))
    return h


def id_hash(text: str) -> int:
    return int.from_bytes(hashlib.blake2b(text.encode(), digest_size=8).digest(), "little")


@dataclass(frozen=True)
class GenSpec:
    """Dimension, optional sector angle, block margin ``mu``, eigenvalue floor of
    generated positive definite matrices, and seed."""

    n: int
    alpha: float | None = None
    mu: float = 1e-3
    seed: int = 0
    floor: float = 0.05

    def __post_init__(self):
        if int(self.n) < 1:
            raise RangeError(f"dimension must be >= 1, got {self.n}")
        if self.alpha is not None and not (0 <= self.alpha < np.pi / 2):
            raise RangeError(f"sector angle must lie in [0, pi/2), got {self.alpha}")
        if not self.mu > 0:
            raise RangeError(f"margin mu must be positive, got {self.mu}")
        if not self.floor > 0:
            raise RangeError(f"eigenvalue floor must be positive, got {self.floor}")
        if not (0 <= int(self.seed) <= MASK64):
            raise RangeError("seed must be a 64-bit unsigned integer")

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(int(self.seed))

    def to_dict(self) -> dict:
        return {"n": self.n, "alpha": self.alpha, "mu": self.mu, "seed": self.seed, "floor": self.floor}

    @classmethod
    def from_dict(cls, data: dict) -> "GenSpec":
        return cls(
            int(data["n"]),
            data.get("alpha"),
            float(data.get("mu", 1e-3)),
            int(data.get("seed", 0)),
            float(data.get("floor", 0.05)),
        )


def _rng(spec: GenSpec, rng):
    return spec.rng() if rng is None else rng


def complex_gaussian(rng, n: int, m: int | None = None) -> np.ndarray:
    """Entries with unit variance: ``(N(0,1) + i N(0,1)) / sqrt(2)``."""
    m = n if m is None else m
    return (rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))) / np.sqrt(2)


def random_hermitian(rng, n: int) -> np.ndarray:
    G = complex_gaussian(rng, n)
    return (G + G.conj().T) / 2


def random_unitary(rng, n: int) -> np.ndarray:
    """Haar unitary via QR with the phase correction."""
    Q, R = np.linalg.qr(complex_gaussian(rng, n))
    d = np.diagonal(R)
    return Q * (d / np.abs(d))


def random_psd(spec: GenSpec, rng=None) -> np.ndarray:
    rng = _rng(spec, rng)
    G = complex_gaussian(rng, spec.n)
    H = G.conj().T @ G / spec.n
    return (H + H.conj().T) / 2


def random_pd(spec: GenSpec, rng=None) -> np.ndarray:
    """``G*G / n + floor I``."""
    return random_psd(spec, rng) + spec.floor * np.eye(spec.n)


def draw_alpha(rng, alpha_max: float = ALPHA_MAX) -> float:
    return float(rng.uniform(0, alpha_max))


def random_sectorial(spec: GenSpec, rng=None, alpha: float | None = None) -> np.ndarray:
    """``R^{1/2} (I + i T) R^{1/2}`` with ``rho(T) = tan(alpha)``.

    ``Re`` of the result is ``R`` and its sector angle is exactly ``alpha``.
    """
    rng = _rng(spec, rng)
    alpha = spec.alpha if alpha is None else alpha
    if alpha is None:
        raise RangeError("random_sectorial needs a target sector angle")
    R = random_pd(spec, rng)
    n = spec.n
    if alpha == 0:
        return R.astype(complex)
    T = random_hermitian(rng, n)
    w = eigvals_hermitian(T)
    rho = max(abs(w[0]), abs(w[-1]))
    T = T * (np.tan(alpha) / rho)
    Rh = psd_power(R, 0.5)
    A = Rh @ (np.eye(n) + 1j * T) @ Rh
    return A


def _floor_inv_sqrt(P, c):
    w, U = np.linalg.eigh(P)
    w = w - c
    if w[0] <= 0:
        return None
    return (U / np.sqrt(w)) @ U.conj().T


def shrink_offdiagonal(P, Q, D, mu: float, partial_transpose: bool = True) -> float:
    """Largest ``s >= 0`` such that ``[[P, sD], [sD*, Q]]`` (and, if requested,
    ``[[P, sD*], [sD, Q]]``) has ``lambda_min >= mu (1 + ||P|| + ||Q||)``.

    Since such a PSD block has spectral norm at most ``||P|| + ||Q||``, this
    floor guarantees a relative margin of at least ``mu``.  Uses
    ``[[P', sD], [sD*, Q']] >= O  <=>  s^2 rho(P'^{-1/2} D Q'^{-1} D* P'^{-1/2}) <= 1``
    with ``P' = P - cI`` and ``Q' = Q - cI``.  Returns ``0.0`` when the
    diagonal blocks are themselves inside the floor.
    """
    normP = float(np.abs(eigvals_hermitian(P)).max())
    normQ = float(np.abs(eigvals_hermitian(Q)).max())
    c = mu * (1 + normP + normQ)
    Pm = _floor_inv_sqrt(P, c)
    Qm = _floor_inv_sqrt(Q, c)
    if Pm is None or Qm is None:
        return 0.0
    Qinv = Qm @ Qm
    rho = 0.0
    for E in ((D, D.conj().T) if partial_transpose else (D,)):
        K = Pm @ E @ Qinv @ E.conj().T @ Pm
        rho = max(rho, float(eigvals_hermitian((K + K.conj().T) / 2)[0]))
    if rho <= 0:
        return np.inf
    return 1.0 / np.sqrt(rho)


def _fill_fraction(rng) -> float:
    """Fraction of the admissible scale actually used; a third of the draws sit
    on the margin boundary."""
    return float(min(1.0, rng.uniform(0.5, 1.25)))


def scaled_offdiagonal(rng, P, Q, mu, partial_transpose=True, D=None) -> np.ndarray:
    n = P.shape[0]
    D = complex_gaussian(rng, n) if D is None else D
    s = shrink_offdiagonal(P, Q, D, mu, partial_transpose)
    if not np.isfinite(s):
        s = 1.0
    return _fill_fraction(rng) * s * D


def random_ppt_block(spec: GenSpec, rng=None) -> Block2x2:
    """Hermitian PPT block ``[[P, X], [X*, Q]]`` with margin ``mu``."""
    rng = _rng(spec, rng)
    P = random_pd(spec, rng)
    Q = random_pd(spec, rng)
    X = scaled_offdiagonal(rng, P, Q, spec.mu)
    return Block2x2.hermitian_form(P, X, Q)


def random_apt_block(spec: GenSpec, rng=None, general: bool = False, alpha=None) -> Block2x2:
    """APT block with sectorial diagonal blocks of angle ``alpha``.

    The real parts ``Re A``, ``Re B`` and ``Z = (X + Y)/2`` form a PPT skeleton;
    the skew parts of ``A`` and ``B`` do not enter ``Re(M)`` or ``Re(M^tau)``.
    With ``general=True`` an arbitrary ``W`` is added as ``X = Z + W``,
    ``Y = Z - W``, which leaves ``Z`` unchanged.
    """
    rng = _rng(spec, rng)
    alpha = spec.alpha if alpha is None else alpha
    A = random_sectorial(spec, rng, alpha)
    B = random_sectorial(spec, rng, alpha)
    Z = scaled_offdiagonal(rng, (A + A.conj().T) / 2, (B + B.conj().T) / 2, spec.mu)
    if not general:
        return Block2x2.hermitian_form(A, Z, B)
    W = complex_gaussian(rng, spec.n) * rng.uniform(0, 2)
    X = Z + W
    Y = Z - W
    return Block2x2(A, X, Y.conj().T, B)


def random_accretive_block(spec: GenSpec, rng=None, alpha=None) -> Block2x2:
    """``[[A, X], [X*, B]]`` accretive (not necessarily APT)."""
    rng = _rng(spec, rng)
    alpha = spec.alpha if alpha is None else alpha
    A = random_sectorial(spec, rng, alpha)
    B = random_sectorial(spec, rng, alpha)
    X = scaled_offdiagonal(rng, (A + A.conj().T) / 2, (B + B.conj().T) / 2, spec.mu, partial_transpose=False)
    return Block2x2.hermitian_form(A, X, B)


def random_commuting_pair(spec: GenSpec, rng=None, alpha=None):
    """Normal strictly accretive ``A`` and ``X`` sharing its eigenbasis.

    Eigenvalues of ``A`` are ``r (1 + i tan(theta))`` with ``|theta| <= alpha``.
    """
    rng = _rng(spec, rng)
    alpha = spec.alpha if alpha is None else alpha
    if alpha is None:
        alpha = draw_alpha(rng)
    n = spec.n
    U = random_unitary(rng, n)
    r = np.exp(rng.uniform(-1, 1, n))
    theta = rng.uniform(-alpha, alpha, n)
    dA = r * (1 + 1j * np.tan(theta))
    dX = complex_gaussian(rng, n, 1)[:, 0]
    A = (U * dA) @ U.conj().T
    X = (U * dX) @ U.conj().T
    return A, X


def extend_to_accretive(rng, A, X, B, mu: float) -> np.ndarray:
    """Rescale ``X`` (direction kept, so commutation relations survive) until
    ``Re([[A, X], [X*, B]])`` has margin ``mu``."""
    return scaled_offdiagonal(rng, (A + A.conj().T) / 2, (B + B.conj().T) / 2, mu, False, D=X)


def regenerate(fn, seed: int, max_rounds: int = MAX_ROUNDS):
    """Call ``fn(rng)`` with derived seeds until it stops raising a retryable
    numerical error."""
    last = None
    for attempt in range(max_rounds):
        rng = np.random.default_rng(seed if attempt == 0 else mix64(seed, attempt))
        try:
            return fn(rng)
        except RETRYABLE as exc:
            last = exc
    raise GenerationFailedError(f"gave up after {max_rounds} rounds: {last}")
