"""Property-based checks of algebraic identities, driven by hypothesis seeds."""
import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from sector_verify.blocks import Block2x2, partial_transpose
from sector_verify.core import ky_fan_norms, loewner_leq, polar_decomposition
from sector_verify.functions import HARMONIC, power
from sector_verify.generators import GenSpec, random_pd, random_sectorial
from sector_verify.io import dumps_matrix, loads_matrix
from sector_verify.means import adjoint_mean, arithmetic_mean, geometric_mean, mean_sigma
from sector_verify.sectorial import in_sector, sector_angle

from conftest import crandn

seeds = st.integers(0, 2**32 - 1)
dims = st.sampled_from([1, 2, 3, 4, 6])
weights = st.floats(0.0, 1.0)
angles = st.floats(0.0, 1.3)

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def pd_pair(seed, n):
    rng = np.random.default_rng(seed)
    spec = GenSpec(n=n)
    return random_pd(spec, rng), random_pd(spec, rng)


def sectorial_pair(seed, n, alpha):
    rng = np.random.default_rng(seed)
    spec = GenSpec(n=n)
    return random_sectorial(spec, rng, alpha), random_sectorial(spec, rng, alpha)


@given(seeds, dims)
def test_harmonic_geometric_arithmetic_order(seed, n):
    A, B = pd_pair(seed, n)
    H = mean_sigma(HARMONIC, A, B)
    G = geometric_mean(A, B)
    M = arithmetic_mean(A, B)
    assert loewner_leq(H, G) and loewner_leq(G, M)


@given(seeds, dims, weights, angles)
def test_weight_symmetry(seed, n, t, alpha):
    A, B = sectorial_pair(seed, n, alpha)
    left = geometric_mean(A, B, t)
    right = geometric_mean(B, A, 1 - t)
    scale = 1 + max(np.linalg.norm(A, 2), np.linalg.norm(B, 2))
    assert np.linalg.norm(left - right, 2) <= 1e-9 * scale


@given(seeds, dims, angles)
def test_riccati_for_sectorial_pairs(seed, n, alpha):
    A, B = sectorial_pair(seed, n, alpha)
    G = geometric_mean(A, B)
    scale = 1 + np.linalg.norm(B, 2)
    assert np.linalg.norm(G @ np.linalg.solve(A, G) - B, 2) <= 1e-8 * scale


@given(seeds, dims, weights)
def test_geometric_mean_is_self_adjoint(seed, n, t):
    A, B = pd_pair(seed, n)
    t = min(max(t, 1e-3), 1.0)
    np.testing.assert_allclose(adjoint_mean(power(t), A, B), geometric_mean(A, B, t), atol=1e-10)


@given(seeds, dims, angles)
def test_sector_angle_is_attained(seed, n, alpha):
    A, _ = sectorial_pair(seed, n, alpha)
    a = sector_angle(A)
    assert abs(a - alpha) <= 1e-10
    assert in_sector(A, a)


@given(seeds, dims)
def test_polar_and_ky_fan(seed, n):
    rng = np.random.default_rng(seed)
    X, Y = crandn(rng, n), crandn(rng, n)
    U, P = polar_decomposition(X)
    np.testing.assert_allclose(U.conj().T @ U, np.eye(n), atol=1e-12)
    np.testing.assert_allclose(U @ P, X, atol=1e-12)
    kx, ky, kxy = ky_fan_norms(X), ky_fan_norms(Y), ky_fan_norms(X + Y)
    assert np.all(np.diff(kx) >= 0)
    assert np.all(kxy <= kx + ky + 1e-12)


@given(seeds, dims)
def test_serialization_and_partial_transpose_involution(seed, n):
    rng = np.random.default_rng(seed)
    blocks = [crandn(rng, n) for _ in range(4)]
    M = Block2x2(*blocks)
    np.testing.assert_array_equal(partial_transpose(partial_transpose(M)).assemble(), M.assemble())
    np.testing.assert_array_equal(loads_matrix(dumps_matrix(blocks[0])), blocks[0])
