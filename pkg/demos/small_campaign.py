"""A short seeded campaign across the whole registry, the same run the
``sector-verify run`` command performs, summarised per claim.

    python3 demos/small_campaign.py
"""
from sector_verify.campaign import CampaignConfig, run_campaign

report = run_campaign(CampaignConfig(trials=20, seed=1))
print(f"{'id':<4} {'kind':<11} {'passed':>9}  {'min margin':>11}  statement")
for cid, c in report["claims"].items():
    margin = "n/a" if c["min_margin"] is None else f"{c['min_margin']:+.3e}"
    print(f"{cid:<4} {c['kind']:<11} {c['passes']:>4}/{c['trials']:<4}  {margin:>11}  {c['anchor']}")
s = report["summary"]
print(f"\n{s['trials']} trials, {s['failures']} failures, failing claims: {s['failed_claims'] or 'none'}")
print(f"wall time {report['wall_time']:.1f} s")
