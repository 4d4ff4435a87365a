"""Seeded property campaigns over the claim registry and their JSON reports.

Trial ``i`` of claim ``c`` uses the seed ``mix64(campaign_seed, id_hash(c), i)``
with ``i`` running across the dimension sweep, so every trial can be replayed
on its own from the report.  Results are reduced in ``(claim, trial)`` order,
which keeps reports byte-identical regardless of how many worker processes ran.
"""
from __future__ import annotations

import json
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import __version__
from .claims import CLAIMS, get_claim, verify_claim
from .core import DEFAULT_TOL, Tolerance
from .errors import GenerationFailedError, HypothesisViolation, NumericalError, RangeError
from .generators import DIMS, MASK64, GenSpec, id_hash, mix64, regenerate

FORMAT_VERSION = 1
MAX_WITNESSES = 5
THREADS_ENV = "SECTOR_VERIFY_THREADS"


@dataclass(frozen=True)
class CampaignConfig:
    """What to run: claim subset, trials per dimension, dimensions, seed, tolerances.

    ``mu``, ``floor`` and ``alpha`` are passed to every :class:`GenSpec`;
    ``alpha=None`` draws a fresh sector angle per trial.
    """

    claims: tuple = tuple(CLAIMS)
    trials: int = 1000
    dims: tuple = DIMS
    seed: int = 0
    tol: Tolerance = DEFAULT_TOL
    mu: float = 1e-3
    floor: float = 0.05
    alpha: float | None = None
    out: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "claims", tuple(self.claims))
        object.__setattr__(self, "dims", tuple(int(n) for n in self.dims))
        for cid in self.claims:
            get_claim(cid)
        if len(set(self.claims)) != len(self.claims):
            raise RangeError("claim list contains duplicates")
        if int(self.trials) < 0:
            raise RangeError(f"trials must be >= 0, got {self.trials}")
        if not self.dims:
            raise RangeError("dimension list must not be empty")
        if any(n < 1 for n in self.dims):
            raise RangeError(f"dimensions must be >= 1, got {list(self.dims)}")
        if not (0 <= int(self.seed) <= MASK64):
            raise RangeError("campaign seed must be a 64-bit unsigned integer")
        # validates mu, floor and alpha once, up front
        GenSpec(n=1, alpha=self.alpha, mu=self.mu, floor=self.floor)

    def gen_spec(self, n: int, seed: int) -> GenSpec:
        return GenSpec(n=n, alpha=self.alpha, mu=self.mu, seed=seed, floor=self.floor)

    def to_dict(self) -> dict:
        return {
            "claims": list(self.claims),
            "trials": int(self.trials),
            "dims": list(self.dims),
            "seed": int(self.seed),
            "tol": {"psd": self.tol.psd, "eq": self.tol.eq, "margin": self.tol.margin},
            "gen": {"mu": self.mu, "floor": self.floor, "alpha": self.alpha},
            "out": self.out,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CampaignConfig":
        known = {"claims", "trials", "dims", "seed", "tol", "gen", "out"}
        extra = set(data) - known
        if extra:
            raise RangeError(f"unknown config keys: {sorted(extra)}")
        kw = {}
        for key in ("claims", "trials", "dims", "seed", "out"):
            if key in data:
                kw[key] = data[key]
        if "tol" in data:
            kw["tol"] = Tolerance(**data["tol"])
        gen = data.get("gen", {})
        for key in ("mu", "floor", "alpha"):
            if key in gen:
                kw[key] = gen[key]
        return cls(**kw)


def trial_seed(campaign_seed: int, claim_id: str, index: int) -> int:
    return mix64(campaign_seed, id_hash(claim_id), index)


@dataclass
class TrialResult:
    index: int
    n: int
    seed: int
    status: str  # "pass", "fail", "hypothesis", "error"
    margin: float | None = None
    details: dict = field(default_factory=dict)
    witness: dict | None = None
    message: str | None = None


def run_trial(claim_id: str, n: int, index: int, config: CampaignConfig) -> TrialResult:
    """Generate, check and evaluate one trial; retryable numerical failures
    during generation or evaluation draw a fresh instance."""
    claim = get_claim(claim_id)
    seed = trial_seed(config.seed, claim_id, index)
    spec = config.gen_spec(n, seed)

    def attempt(rng):
        return verify_claim(claim_id, claim.generate(spec, rng), config.tol, seed=seed)

    try:
        verdict = regenerate(attempt, seed)
    except HypothesisViolation as exc:
        return TrialResult(index, n, seed, "hypothesis", message=str(exc))
    except (NumericalError, GenerationFailedError, ArithmeticError) as exc:
        return TrialResult(index, n, seed, "error", message=f"{type(exc).__name__}: {exc}")
    return TrialResult(
        index,
        n,
        seed,
        "pass" if verdict.passed else "fail",
        verdict.min_margin,
        verdict.details,
        verdict.witness,
    )


def _plan(claim_id: str, config: CampaignConfig) -> list[tuple[int, int]]:
    """``(n, trial_index)`` pairs; pinned claims run once on their fixed operands."""
    if get_claim(claim_id).kind == "pinned":
        return [(0, 0)] if config.trials > 0 else []
    return [(n, d * config.trials + i) for d, n in enumerate(config.dims) for i in range(config.trials)]


def _run_chunk(args):
    claim_id, pairs, config = args
    return [run_trial(claim_id, max(n, 1), i, config) for n, i in pairs]


def _workers() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        raise RangeError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise RangeError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return value


def _aggregate(claim_id: str, results: list[TrialResult], wall: float) -> dict:
    claim = get_claim(claim_id)
    passes = sum(r.status == "pass" for r in results)
    scored = [r for r in results if r.margin is not None]
    worst = min(scored, key=lambda r: (r.margin, r.index)) if scored else None
    witnesses = []
    for r in results:
        if r.status == "pass" or len(witnesses) >= MAX_WITNESSES:
            continue
        entry = {"trial": r.index, "n": r.n, "seed": r.seed, "status": r.status}
        if r.margin is not None:
            entry["margin"] = r.margin
        if r.message:
            entry["message"] = r.message
        if r.witness is not None:
            entry["instance"] = r.witness
            entry["details"] = r.details
        witnesses.append(entry)
    by_dim = {}
    for r in results:
        d = by_dim.setdefault(str(r.n), {"trials": 0, "passes": 0, "min_margin": None})
        d["trials"] += 1
        d["passes"] += r.status == "pass"
        if r.margin is not None and (d["min_margin"] is None or r.margin < d["min_margin"]):
            d["min_margin"] = r.margin
    return {
        "anchor": claim.anchor,
        "group": claim.group,
        "kind": claim.kind,
        "trials": len(results),
        "passes": passes,
        "failures": len(results) - passes,
        "hypothesis_violations": sum(r.status == "hypothesis" for r in results),
        "errors": sum(r.status == "error" for r in results),
        "min_margin": None if worst is None else worst.margin,
        "worst_seed": None if worst is None else worst.seed,
        "worst_n": None if worst is None else worst.n,
        "worst_details": None if worst is None else worst.details,
        "by_dim": by_dim,
        "witnesses": witnesses,
        "wall_time": wall,
    }


def run_campaign(config: CampaignConfig, progress=None) -> dict:
    """Run every configured claim and return the report dictionary.

    ``progress``, if given, is called as ``progress(claim_id, summary)`` after
    each claim finishes.
    """
    workers = _workers()
    report_claims = {}
    start = time.perf_counter()
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for claim_id in config.claims:
            t0 = time.perf_counter()
            pairs = _plan(claim_id, config)
            if not pairs:
                continue
            if pool is None or len(pairs) < 2:
                results = _run_chunk((claim_id, pairs, config))
            else:
                size = math.ceil(len(pairs) / (4 * workers))
                chunks = [(claim_id, pairs[k:k + size], config) for k in range(0, len(pairs), size)]
                results = [r for part in pool.map(_run_chunk, chunks) for r in part]
            summary = _aggregate(claim_id, results, time.perf_counter() - t0)
            report_claims[claim_id] = summary
            if progress is not None:
                progress(claim_id, summary)
    finally:
        if pool is not None:
            pool.shutdown()
    total = sum(c["trials"] for c in report_claims.values())
    failures = sum(c["failures"] for c in report_claims.values())
    return {
        "format_version": FORMAT_VERSION,
        "tool_version": __version__,
        "config": config.to_dict(),
        "claims": report_claims,
        "summary": {
            "claims": len(report_claims),
            "trials": total,
            "failures": failures,
            "failed_claims": [cid for cid, c in report_claims.items() if c["failures"]],
            "all_passed": failures == 0,
        },
        "wall_time": time.perf_counter() - start,
    }


def strip_timing(report: dict) -> dict:
    """Copy of ``report`` without any ``wall_time`` field."""
    if isinstance(report, dict):
        return {k: strip_timing(v) for k, v in report.items() if k != "wall_time"}
    if isinstance(report, list):
        return [strip_timing(v) for v in report]
    return report


def dumps_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, allow_nan=False) + "\n"
