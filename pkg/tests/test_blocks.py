import numpy as np
import pytest

from sector_verify.blocks import (
    Block2x2,
    accretive_schur_complement,
    apt_margin,
    is_apt,
    is_block_accretive,
    is_ppt,
    partial_transpose,
    ppt_margin,
    swap_blocks,
)
from sector_verify.errors import DimensionError, NotHermitianError

# Bell state |phi+><phi+| written as a 2x2 block matrix of 2x2 blocks
BELL = 0.5 * np.array(
    [
        [1, 0, 0, 1],
        [0, 0, 0, 0],
        [0, 0, 0, 0],
        [1, 0, 0, 1],
    ],
    dtype=complex,
)


def test_partial_transpose_swaps_off_diagonal_blocks():
    M = Block2x2.from_matrix(np.arange(16).reshape(4, 4))
    pt = partial_transpose(M).assemble()
    expected = np.array([[0, 1, 8, 9], [4, 5, 12, 13], [2, 3, 10, 11], [6, 7, 14, 15]])
    np.testing.assert_array_equal(pt, expected)
    np.testing.assert_array_equal(partial_transpose(partial_transpose(M)).assemble(), M.assemble())


def test_bell_block_is_psd_but_not_ppt():
    M = Block2x2.from_matrix(BELL)
    assert np.linalg.eigvalsh(BELL).min() > -1e-15
    np.testing.assert_allclose(np.linalg.eigvalsh(M.partial_transpose().assemble()), [-0.5, 0.5, 0.5, 0.5])
    assert not is_ppt(M)
    assert ppt_margin(M) == pytest.approx(-0.5 / 1.5)


def test_identity_blocks_are_ppt():
    I = np.eye(3)
    M = Block2x2.hermitian_form(I, 0.5 * I, I)
    assert is_ppt(M)
    assert is_apt(M)


def test_is_ppt_requires_hermitian():
    M = Block2x2(np.eye(2), np.eye(2), np.zeros((2, 2)), np.eye(2))
    with pytest.raises(NotHermitianError):
        is_ppt(M)


def test_real_part_blocks():
    A = np.array([[1 + 1j, 2], [0, 3j]])
    X = np.array([[1, 1j], [0, 2]])
    Ys = np.array([[3, 0], [1, 1]])
    M = Block2x2(A, X, Ys, np.eye(2))
    H = M.assemble()
    np.testing.assert_allclose(M.real_part().assemble(), (H + H.conj().T) / 2)
    np.testing.assert_allclose(M.Z, (X + Ys.conj().T) / 2)


def test_apt_is_a_real_part_condition():
    # skew-Hermitian diagonal parts never affect accretivity
    S = np.array([[0, 5], [-5, 0]], dtype=complex)
    M = Block2x2.hermitian_form(np.eye(2) + S, 0.5 * np.eye(2), np.eye(2) - 1j * np.eye(2))
    assert is_apt(M)
    assert is_block_accretive(M)
    assert apt_margin(M) > 0
    bad = Block2x2.hermitian_form(np.eye(2), 2 * np.eye(2), np.eye(2))
    assert not is_apt(bad)


def test_schur_complement_matches_oracle(oracle):
    pair = oracle("acc_pair")
    X = oracle("polar_X")
    np.testing.assert_allclose(accretive_schur_complement(pair["A"], pair["B"], X), oracle("schur"), atol=1e-13)


def test_swap_blocks_is_a_unitary_congruence(rng):
    blocks = [rng.standard_normal((2, 2)) for _ in range(4)]
    M = Block2x2(*blocks)
    P = np.block([[np.zeros((2, 2)), np.eye(2)], [np.eye(2), np.zeros((2, 2))]])
    np.testing.assert_allclose(swap_blocks(M).assemble(), P @ M.assemble() @ P)


def test_shape_validation():
    with pytest.raises(DimensionError):
        Block2x2(np.eye(2), np.eye(3), np.eye(2), np.eye(2))
    with pytest.raises(DimensionError):
        Block2x2.from_matrix(np.eye(3))


def test_dict_round_trip(rng):
    M = Block2x2(*(rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)) for _ in range(4)))
    back = Block2x2.from_dict(M.to_dict())
    np.testing.assert_array_equal(back.assemble(), M.assemble())
