"""Sector angles of random sectorial matrices and of their weighted
geometric means, plus the Riccati identity in the positive definite case.

    python3 demos/sector_and_means.py
"""
import numpy as np

from sector_verify import geometric_mean, sector_angle
from sector_verify.generators import GenSpec, random_pd, random_sectorial

rng = np.random.default_rng(11)
spec = GenSpec(n=4)

print("weighted geometric means of sectorial pairs stay in the common sector")
print(f"{'alpha':>7} {'angle A':>8} {'angle B':>8}   angle(A #_t B) for t = 0.2, 0.5, 0.8")
for alpha in (0.3, 0.7, 1.2):
    A = random_sectorial(spec, rng, alpha=alpha)
    B = random_sectorial(spec, rng, alpha=alpha)
    angles = [sector_angle(geometric_mean(A, B, t)) for t in (0.2, 0.5, 0.8)]
    print(f"{alpha:7.2f} {sector_angle(A):8.4f} {sector_angle(B):8.4f}   " + "  ".join(f"{a:.4f}" for a in angles))

print("\nfor positive definite A, B the mean G = A # B solves G A^-1 G = B")
for n in (2, 4, 6):
    A, B = random_pd(GenSpec(n=n), rng), random_pd(GenSpec(n=n), rng)
    G = geometric_mean(A, B)
    residual = np.linalg.norm(G @ np.linalg.solve(A, G) - B, 2)
    print(f"  n = {n}: ||G A^-1 G - B|| = {residual:.2e}")
