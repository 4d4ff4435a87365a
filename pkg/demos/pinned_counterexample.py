"""A fixed pair of accretive 2x2 matrices whose difference outgrows their
direct sum in the largest singular value.

    python3 demos/pinned_counterexample.py
"""
import math

import numpy as np

from sector_verify import is_accretive, singular_values
from sector_verify.claims import PINNED_A, PINNED_B, verify_claim
from sector_verify.core import direct_sum

np.set_printoptions(precision=5, suppress=True)

A, B = PINNED_A, PINNED_B
print("A =\n", A)
print("B =\n", B)
print("A accretive:", is_accretive(A), "  B accretive:", is_accretive(B))

s_diff = singular_values(A - B)
s_sum = singular_values(direct_sum(A, B))
print("\nsingular values of A - B      :", s_diff)
print("singular values of A (+) B    :", s_sum)

# squares of the two leading values have closed forms in radicals
print("\ns1(A - B)^2 =", s_diff[0] ** 2, " vs (61 + 5 sqrt 97)/2 =", (61 + 5 * math.sqrt(97)) / 2)
print("s1(A (+) B)^2 =", s_sum[0] ** 2, " vs (41 + 3 sqrt 165)/2 =", (41 + 3 * math.sqrt(165)) / 2)

v = verify_claim("C8", {"A": A, "B": B})
print(f"\nregistry verdict: {v.status}  (gap s1(A-B) - s1(A(+)B) = {v.slack:.5f})")
