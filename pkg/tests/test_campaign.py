import json

import pytest

from sector_verify.campaign import (
    CampaignConfig,
    dumps_report,
    run_campaign,
    run_trial,
    strip_timing,
    trial_seed,
)
from sector_verify.core import Tolerance
from sector_verify.errors import RangeError


def small(**kw):
    base = dict(claims=("C1", "C6", "C8", "C22"), trials=3, dims=(1, 3), seed=11)
    base.update(kw)
    return CampaignConfig(**base)


def test_config_validation():
    for bad in (
        {"trials": -1},
        {"dims": ()},
        {"dims": (0,)},
        {"seed": -1},
        {"seed": 2**64},
        {"claims": ("C1", "C1")},
        {"claims": ("C0",)},
        {"mu": 0.0},
    ):
        with pytest.raises(RangeError):
            small(**bad)


def test_config_round_trip():
    cfg = small(tol=Tolerance(psd=1e-9, margin=1e-5), alpha=0.3)
    assert CampaignConfig.from_dict(json.loads(json.dumps(cfg.to_dict()))) == cfg
    with pytest.raises(RangeError):
        CampaignConfig.from_dict({"trails": 3})


def test_zero_trials_gives_empty_report():
    report = run_campaign(small(trials=0))
    assert report["claims"] == {}
    assert report["summary"]["all_passed"]


def test_report_contents():
    report = run_campaign(small())
    c1 = report["claims"]["C1"]
    assert c1["trials"] == 6 and c1["passes"] == 6 and c1["failures"] == 0
    assert set(c1["by_dim"]) == {"1", "3"}
    assert c1["min_margin"] > 0
    assert c1["worst_seed"] in {trial_seed(11, "C1", i) for i in range(6)}
    c8 = report["claims"]["C8"]
    assert c8["trials"] == 1
    assert c8["worst_details"]["s_A_minus_B"][0] == pytest.approx(7.42443, abs=1e-4)
    assert report["format_version"] == 1
    assert report["summary"]["trials"] == 6 * 3 + 1


def test_failures_embed_witnesses():
    report = run_campaign(small(claims=("C17",), trials=20, dims=(1,)))
    c17 = report["claims"]["C17"]
    assert c17["failures"] == c17["trials"] - c17["passes"] > 0
    w = c17["witnesses"][0]
    assert w["status"] == "fail" and "instance" in w and "mirrored_margin" in w["details"]
    assert len(c17["witnesses"]) <= 5
    assert not report["summary"]["all_passed"]
    assert report["summary"]["failed_claims"] == ["C17"]


def test_trial_is_replayable_from_its_seed():
    cfg = small()
    report = run_campaign(cfg)
    worst = report["claims"]["C6"]
    index = [i for i in range(6) if trial_seed(11, "C6", i) == worst["worst_seed"]][0]
    n = cfg.dims[index // cfg.trials]
    assert run_trial("C6", n, index, cfg).margin == worst["min_margin"]


def test_reports_are_deterministic_and_worker_independent(monkeypatch):
    monkeypatch.setenv("SECTOR_VERIFY_THREADS", "1")
    a = dumps_report(strip_timing(run_campaign(small())))
    b = dumps_report(strip_timing(run_campaign(small())))
    monkeypatch.setenv("SECTOR_VERIFY_THREADS", "2")
    c = dumps_report(strip_timing(run_campaign(small())))
    assert a == b == c


def test_bad_thread_setting(monkeypatch):
    monkeypatch.setenv("SECTOR_VERIFY_THREADS", "zero")
    with pytest.raises(RangeError):
        run_campaign(small())
