"""2x2 block matrices, partial transposition and PPT/APT predicates."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_TOL, Tolerance, as_hermitian, as_matrix, inverse, psd_slack, same_shape
from .errors import DimensionError


@dataclass(frozen=True)
class Block2x2:
    """The block matrix ``[[A, X], [Ystar, B]]`` with four ``n x n`` blocks."""

    A: np.ndarray
    X: np.ndarray
    Ystar: np.ndarray
    B: np.ndarray

    def __post_init__(self):
        blocks = [as_matrix(getattr(self, name)) for name in ("A", "X", "Ystar", "B")]
        same_shape(*blocks)
        for name, value in zip(("A", "X", "Ystar", "B"), blocks):
            object.__setattr__(self, name, value)

    @classmethod
    def hermitian_form(cls, A, X, B) -> "Block2x2":
        """``[[A, X], [X*, B]]``."""
        X = as_matrix(X)
        return cls(A, X, X.conj().T, B)

    @classmethod
    def from_matrix(cls, M) -> "Block2x2":
        M = as_matrix(M)
        m = M.shape[0]
        if m % 2:
            raise DimensionError(f"block matrix must have even dimension, got {m}")
        n = m // 2
        return cls(M[:n, :n], M[:n, n:], M[n:, :n], M[n:, n:])

    @property
    def n(self) -> int:
        return self.A.shape[0]

    @property
    def Y(self) -> np.ndarray:
        return self.Ystar.conj().T

    @property
    def Z(self) -> np.ndarray:
        """``(X + Y) / 2``, the off-diagonal block of ``Re(M)``."""
        return (self.X + self.Ystar.conj().T) / 2

    def assemble(self) -> np.ndarray:
        return np.block([[self.A, self.X], [self.Ystar, self.B]])

    def partial_transpose(self) -> "Block2x2":
        return partial_transpose(self)

    def real_part(self) -> "Block2x2":
        """``Re(M)`` as a block matrix: ``[[Re A, Z], [Z*, Re B]]``."""
        Z = self.Z
        return Block2x2(
            (self.A + self.A.conj().T) / 2, Z, Z.conj().T, (self.B + self.B.conj().T) / 2
        )

    def to_dict(self) -> dict:
        from .io import matrix_to_dict

        return {
            "n": self.n,
            "A": matrix_to_dict(self.A),
            "X": matrix_to_dict(self.X),
            "Ystar": matrix_to_dict(self.Ystar),
            "B": matrix_to_dict(self.B),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Block2x2":
        from .io import matrix_from_dict

        blk = cls(*(matrix_from_dict(data[k]) for k in ("A", "X", "Ystar", "B")))
        if "n" in data and data["n"] != blk.n:
            raise DimensionError(f"declared n={data['n']} but blocks have n={blk.n}")
        return blk


def partial_transpose(M: Block2x2) -> Block2x2:
    """Swap the off-diagonal blocks: ``[[A, X], [Y*, B]] -> [[A, Y*], [X, B]]``."""
    return Block2x2(M.A, M.Ystar, M.X, M.B)


def _relative(lam_min, norm):
    return lam_min / (1 + norm)


def psd_margin(H) -> float:
    """``lambda_min(H) / (1 + ||H||_2)`` for Hermitian ``H``."""
    return _relative(*psd_slack(H))


def accretive_margin(M) -> float:
    """Relative PSD margin of ``Re(M)``."""
    M = np.asarray(M)
    return psd_margin((M + M.conj().T) / 2)


def ppt_margin(M: Block2x2) -> float:
    """``min`` of the relative PSD margins of ``M`` and ``M^tau``."""
    return min(psd_margin(M.assemble()), psd_margin(partial_transpose(M).assemble()))


def apt_margin(M: Block2x2) -> float:
    """``min`` of the relative accretivity margins of ``M`` and ``M^tau``."""
    return min(accretive_margin(M.assemble()), accretive_margin(partial_transpose(M).assemble()))


def is_ppt(M: Block2x2, tol: Tolerance = DEFAULT_TOL) -> bool:
    """``M >= O`` and ``M^tau >= O``; raises NotHermitianError for non-Hermitian ``M``."""
    full = as_hermitian(M.assemble(), tol)
    pt = as_hermitian(partial_transpose(M).assemble(), tol)
    return all(lam >= -tol.psd * (1 + nrm) for lam, nrm in (psd_slack(full), psd_slack(pt)))


def is_apt(M: Block2x2, tol: Tolerance = DEFAULT_TOL) -> bool:
    """``M`` and ``M^tau`` both accretive."""
    for H in (M.assemble(), partial_transpose(M).assemble()):
        lam, nrm = psd_slack((H + H.conj().T) / 2)
        if lam < -tol.psd * (1 + nrm):
            return False
    return True


def is_block_accretive(M: Block2x2, tol: Tolerance = DEFAULT_TOL) -> bool:
    H = M.assemble()
    lam, nrm = psd_slack((H + H.conj().T) / 2)
    return lam >= -tol.psd * (1 + nrm)


def accretive_schur_complement(A, B, X) -> np.ndarray:
    """``A - X B^{-1} X*``."""
    A = as_matrix(A)
    B = as_matrix(B)
    X = as_matrix(X)
    same_shape(A, B, X)
    return A - X @ inverse(B) @ X.conj().T


def swap_blocks(M: Block2x2) -> Block2x2:
    """Conjugation by ``[[O, I], [I, O]]``: ``[[A, X], [Y*, B]] -> [[B, Y*], [X, A]]``."""
    return Block2x2(M.B, M.Ystar, M.X, M.A)
