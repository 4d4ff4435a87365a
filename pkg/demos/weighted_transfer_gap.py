"""C17 read literally: the lower-right block f(A nabla_t B) is not mirrored
against the upper-left f(A) nabla_t f(B), and at t = 0 the conclusion asks
more than the hypothesis gives.  A scalar instance shows it; the mirrored
pairing f(A nabla_(1-t) B) survives the same instance.

    python3 demos/weighted_transfer_gap.py
"""
import numpy as np

from sector_verify.campaign import CampaignConfig, run_campaign
from sector_verify.claims import T_GRID, verify_claim
from sector_verify.functions import power

inst = {
    "A": np.array([[1.0 + 0j]]),
    "B": np.array([[4.0 + 0j]]),
    "X": np.array([[1.9 + 0j]]),
    "f": power(1.0),
    "alpha": 0.0,
    "ts": list(T_GRID),
}
print("hypothesis block [1, 1.9; 1.9, 4] has determinant", 4 - 1.9**2)
print("conclusion at t = 0 is [1, 1.9; 1.9, 1], determinant", 1 - 1.9**2)
v = verify_claim("C17", inst)
print(f"verdict: {v.status}, failing weights {v.details['failing_t']}, "
      f"mirrored margin {v.details['mirrored_margin']:+.4f}")

print("\nsmall seeded campaign on C17 alone:")
report = run_campaign(CampaignConfig(claims=("C17",), trials=60, seed=3))
c = report["claims"]["C17"]
print(f"  {c['failures']}/{c['trials']} trials fail, min margin {c['min_margin']:+.3e}")
for w in c["witnesses"][:3]:
    d = w["details"]
    print(f"  n = {w['n']} seed {w['seed']:#x}: fails at t = {d['failing_t']}, mirrored margin {d['mirrored_margin']:+.3e}")
