import numpy as np
import pytest

from sector_verify.errors import NotSectorialError
from sector_verify.sectorial import (
    in_sector,
    is_accretive,
    is_strictly_accretive,
    sector_angle,
    sector_tangent,
)


def test_accretivity_predicates():
    assert is_accretive(np.array([[1, 5], [-5, 1]]))  # Re = I
    assert is_accretive(np.array([[0, 1], [-1, 0]]))  # Re = O, boundary
    assert not is_strictly_accretive(np.array([[0, 1], [-1, 0]]))
    assert not is_accretive(np.diag([1.0, -0.1]))
    assert is_strictly_accretive(np.diag([1 + 10j, 2 - 3j]))


def test_sector_angle_of_hermitian_is_zero():
    assert sector_angle(np.diag([1.0, 7.0])) == 0.0


def test_sector_angle_of_diagonal():
    A = np.diag([1 + 1j, 2 - 0.5j])
    assert sector_angle(A) == pytest.approx(np.pi / 4)


def test_sector_tangent_matches_oracle(oracle):
    A = oracle("acc_pair")["A"]
    assert sector_tangent(A) == pytest.approx(oracle("acc_A_sector_tangent"), rel=1e-13)


def test_sector_angle_is_tight_on_the_numerical_range(oracle, rng):
    A = oracle("acc_pair")["A"]
    alpha = sector_angle(A)
    assert in_sector(A, alpha)
    assert not in_sector(A, alpha * (1 - 1e-3))
    # sampled numerical range stays inside the sector
    x = rng.standard_normal((2, 2000)) + 1j * rng.standard_normal((2, 2000))
    w = np.einsum("ik,ij,jk->k", x.conj(), A, x)
    assert np.all(np.abs(np.angle(w)) <= alpha + 1e-12)


def test_sector_angle_requires_strict_accretivity():
    with pytest.raises(NotSectorialError):
        sector_angle(np.array([[0, 1], [-1, 0]]))
    with pytest.raises(NotSectorialError):
        sector_angle(np.diag([1.0, -1.0]))
