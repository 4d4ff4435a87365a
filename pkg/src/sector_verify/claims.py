"""Executable registry of the block-matrix inequalities.

Each :class:`Claim` bundles a hypothesis generator, a hypothesis predicate and
an evaluator.  Evaluators return the *minimum slack* over every asserted
inequality and every quantified index (eigen/singular index ``j``, Ky Fan
index ``k``, mean weight ``t``), divided by ``1 + max ||operand||_2``.
A verdict passes when that relative margin is ``>= -tol.margin``.

Instances are plain dictionaries of named operands; ``ts`` holds the weight
grid, ``f`` an :class:`~sector_verify.functions.Omf` when the claim involves
one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .core import DEFAULT_TOL, Tolerance, abs_matrix, direct_sum, polar_decomposition
from .errors import HypothesisViolation, RangeError
from .functions import Diagonalization, Omf, affine, power
from .generators import (
    GenSpec,
    complex_gaussian,
    draw_alpha,
    extend_to_accretive,
    random_accretive_block,
    random_apt_block,
    random_commuting_pair,
    random_ppt_block,
    random_sectorial,
    scaled_offdiagonal,
)
from .io import matrix_to_dict
from .means import _Congruence, geometric_means
from .sectorial import sector_tangent

T_GRID = (0.0, 0.25, 0.5, 0.75, 1.0)
EXTRA_T_DRAWS = 3

# fixed 2x2 pair whose singular values are pinned below
PINNED_A = np.array([[2 + 2j, -1 + 2j], [3 + 2j, 1 + 1j]])
PINNED_B = np.array([[1 + 2j, -2 - 1j], [-2 - 1j, 5 + 1j]])
PINNED_S_DIFF = (7.42443, 2.42443)
PINNED_S_SUM = (6.30618, 5.1112, 1.36954, 1.11002)
PINNED_ATOL = 1e-4


# ---------------------------------------------------------------- helpers


def _re(A):
    return (A + A.conj().T) / 2


def _eigs(H):
    """Descending eigenvalues of the Hermitian part of ``H``."""
    return np.linalg.eigvalsh(_re(H))[::-1]


def _lmin(H) -> float:
    return float(np.linalg.eigvalsh(_re(H))[0])


def _sv(A):
    return np.linalg.svd(A, compute_uv=False)


def _kyfan(A, length=None):
    s = np.cumsum(_sv(A))
    if length is not None and length > len(s):
        s = np.concatenate([s, np.full(length - len(s), s[-1])])
    return s


def _block(A, X, Ystar, B):
    return np.block([[A, X], [Ystar, B]])


def _apt_slack(A, X, Ystar, B) -> float:
    """``min(lambda_min Re(M), lambda_min Re(M^tau))``."""
    return min(_lmin(_block(A, X, Ystar, B)), _lmin(_block(A, Ystar, X, B)))


def _ppt_slack(A, X, B) -> float:
    Xs = X.conj().T
    return min(_lmin(_block(A, X, Xs, B)), _lmin(_block(A, Xs, X, B)))


def _inv(A):
    return np.linalg.inv(A)


def _pd_mean(L, R, t=0.5):
    """``L #_t R`` for Hermitian positive definite ``L`` and PSD ``R``.

    A lean two-``eigh`` path for bounds that are already Hermitian; the
    checked public entry point is :func:`~sector_verify.means.geometric_means`,
    which the tests compare against this.
    """
    w, U = np.linalg.eigh(_re(L))
    s = np.sqrt(w)
    Lh = (U * s) @ U.conj().T
    Lih = (U / s) @ U.conj().T
    v, W = np.linalg.eigh(_re(Lih @ R @ Lih))
    G = Lh @ ((W * np.power(np.clip(v, 0, None), t)) @ W.conj().T) @ Lh
    return _re(G)


def weight_grid(rng, extra: int = EXTRA_T_DRAWS) -> list[float]:
    return list(T_GRID) + [float(t) for t in rng.uniform(0, 1, extra)]


def registry_means(ts) -> list[Omf]:
    """Registry members exercised by claims quantified over every mean."""
    fs = [power(t) for t in ts if t > 0]
    fs += [affine(t) for t in ts]
    return fs + [Omf("harmonic_like"), Omf("log_mean")]


def random_omf(rng) -> Omf:
    kind = ("power", "harmonic_like", "log_mean", "affine")[rng.integers(4)]
    if kind == "power":
        return power(float(rng.uniform(0.05, 1.0)))
    if kind == "affine":
        return affine(float(rng.uniform(0, 1)))
    return Omf(kind)


def operand_scale(inst: dict) -> float:
    norms = [0.0]
    for key in ("A", "B", "X", "Ystar"):
        if key in inst:
            norms.append(float(_sv(inst[key])[0]))
    return 1.0 + max(norms)


# ---------------------------------------------------------------- predicates


def _require(cond: bool, what: str):
    if not cond:
        raise HypothesisViolation(what)


def _strict(A, tol) -> bool:
    w = np.linalg.eigvalsh(_re(A))
    return w[0] > tol.psd * (1 + max(abs(w[0]), abs(w[-1])))


def _nonneg(H, tol) -> bool:
    w = np.linalg.eigvalsh(_re(H))
    return w[0] >= -tol.psd * (1 + max(abs(w[0]), abs(w[-1])))


def _apt(A, X, Ystar, B, tol) -> bool:
    return _nonneg(_block(A, X, Ystar, B), tol) and _nonneg(_block(A, Ystar, X, B), tol)


def _close(L, R, tol, scale) -> bool:
    return np.linalg.norm(L - R) <= tol.eq * 1e2 * scale**2


def _hyp_strict_pair(inst, tol):
    _require(_strict(inst["A"], tol), "A is not strictly accretive")
    _require(_strict(inst["B"], tol), "B is not strictly accretive")


def _hyp_accretive_block(inst, tol):
    _hyp_strict_pair(inst, tol)
    A, X, B = inst["A"], inst["X"], inst["B"]
    _require(_nonneg(_block(A, X, X.conj().T, B), tol), "M is not accretive")


def _hyp_apt(inst, tol):
    _hyp_strict_pair(inst, tol)
    A, X, B = inst["A"], inst["X"], inst["B"]
    Ystar = inst.get("Ystar", X.conj().T)
    _require(_apt(A, X, Ystar, B, tol), "M is not APT")


def _hyp_apt_sectorial(inst, tol):
    _hyp_apt(inst, tol)
    M = _block(inst["A"], inst["X"], inst.get("Ystar", inst["X"].conj().T), inst["B"])
    _require(_strict(M, tol), "M has no finite sector angle")


def _hyp_ppt(inst, tol):
    A, X, B = inst["A"], inst["X"], inst["B"]
    M = _block(A, X, X.conj().T, B)
    _require(np.allclose(M, M.conj().T, rtol=0, atol=tol.eq * operand_scale(inst)), "M is not Hermitian")
    _require(_strict(A, tol) and _strict(B, tol), "diagonal blocks are not positive definite")
    _require(_nonneg(M, tol) and _nonneg(_block(A, X.conj().T, X, B), tol), "M is not PPT")


def _hyp_strict_a(inst, tol):
    _require(_strict(inst["A"], tol), "A is not strictly accretive")


def _hyp_scaled_f(inst, tol):
    """``A, B`` in the sector ``alpha`` and ``[[cos^2 f(A), X], [X*, cos^2 f(B)]]`` APT."""
    _hyp_strict_pair(inst, tol)
    alpha = inst["alpha"]
    for key in ("A", "B"):
        _require(sector_tangent(inst[key], tol) <= np.tan(alpha) * (1 + 1e-9) + 1e-12,
                 f"{key} is outside the sector")
    c2 = np.cos(alpha) ** 2
    f = inst["f"]
    FA = Diagonalization(inst["A"]).apply(f)
    FB = Diagonalization(inst["B"]).apply(f)
    X = inst["X"]
    _require(_apt(c2 * FA, X, X.conj().T, c2 * FB, tol), "scaled f-block is not APT")


# ---------------------------------------------------------------- evaluators
# Each returns (raw slack, details).  Raw slack is later divided by the scale.


def _ev_schur_forward(inst, tol):
    A, B, X = inst["A"], inst["B"], inst["X"]
    S = A - X @ _inv(B) @ X.conj().T
    return _lmin(S), {}


def _ev_schur_reverse(inst, tol):
    A, B, X = inst["A"], inst["B"], inst["X"]
    alpha = float(np.arctan(sector_tangent(B, tol)))
    c = np.cos(alpha)
    return _lmin(_block(A, c * X, c * X.conj().T, B)), {"alpha": alpha}


def _ev_inverse_block(inst, tol):
    A = inst["A"]
    n = A.shape[0]
    alpha = float(np.arctan(sector_tangent(A, tol)))
    cI = np.cos(alpha) * np.eye(n)
    return _lmin(_block(A, cI, cI, _inv(A))), {"alpha": alpha}


def _inverse_block_re(A):
    n = A.shape[0]
    I = np.eye(n)
    return _re(_block(A, I, I, _inv(A)))


def _ev_inverse_block_refuted(inst, tol):
    # positive when [A, I; I, A^{-1}] fails the accretivity test
    H = _inverse_block_re(inst["A"])
    w = np.linalg.eigvalsh(H)
    floor = tol.psd * (1 + max(abs(w[0]), abs(w[-1])))
    return -(w[0] + floor), {"lambda_min": float(w[0])}


def _ev_mean_block_apt(inst, tol):
    A, X, Ystar, B, ts = inst["A"], inst["X"], inst["Ystar"], inst["B"], inst["ts"]
    G = geometric_means(A, B, ts, tol)
    rev = geometric_means(A, B, [1 - t for t in ts], tol)
    slacks = [_apt_slack(G[i], X, Ystar, rev[i]) for i in range(len(ts))]
    # backward direction: the t = 0 block is M itself
    G0, G1 = geometric_means(A, B, [0.0, 1.0], tol)
    slacks.append(_apt_slack(G0, X, Ystar, G1))
    return min(slacks), {}


def _ev_tao(inst, tol):
    A, B, X = inst["A"], inst["B"], inst["X"]
    n = A.shape[0]
    sM = _sv(_block(A, X, X.conj().T, B))[:n]
    return float(np.min(sM - 2 * _sv(X))), {}


def _sec_of_block(inst, tol):
    M = _block(inst["A"], inst["X"], inst.get("Ystar", inst["X"].conj().T), inst["B"])
    tau = sector_tangent(M, tol)
    return float(np.sqrt(1 + tau**2)), M


def _ev_hiroshima_sec(inst, tol):
    A, B, X = inst["A"], inst["B"], inst["X"]
    sec, _ = _sec_of_block(inst, tol)
    return float(np.min(sec * _kyfan(A + B) - 2 * _kyfan(X))), {"sec_alpha": sec}


def _ev_pinned(inst, tol):
    A, B = inst["A"], inst["B"]
    s_diff = _sv(A - B)
    s_sum = _sv(direct_sum(A, B))
    dev = max(np.max(np.abs(s_diff - PINNED_S_DIFF)), np.max(np.abs(s_sum - PINNED_S_SUM)))
    gap = s_diff[0] - s_sum[0]
    details = {
        "s_A_minus_B": [float(v) for v in s_diff],
        "s_A_oplus_B": [float(v) for v in s_sum],
        "max_deviation": float(dev),
        "strictly_accretive": bool(_strict(A, tol) and _strict(B, tol)),
    }
    if dev > PINNED_ATOL:
        return -dev * operand_scale(inst), details
    return gap, details


def _ev_norm_means(inst, tol):
    A, B, X, ts = inst["A"], inst["B"], inst["X"], inst["ts"]
    sec, _ = _sec_of_block(inst, tol)
    G = geometric_means(A, B, ts, tol)
    rev = geometric_means(A, B, [1 - t for t in ts], tol)
    kx = _kyfan(X)
    slack = min(float(np.min(sec / 2 * _kyfan(G[i] + rev[i]) - kx)) for i in range(len(ts)))
    return slack, {"sec_alpha": sec}


def _polar_z(inst):
    Z = (inst["X"] + inst["Ystar"].conj().T) / 2
    V, absZ = polar_decomposition(Z)
    absZs = V @ absZ @ V.conj().T
    return Z, V, absZ, _re(absZs)


def _ev_abs_z_conjugated(inst, tol):
    A, B, ts = inst["A"], inst["B"], inst["ts"]
    Z, V, absZ, absZs = _polar_z(inst)
    Vh = V.conj().T
    Bc = Vh @ B @ V
    Ac = V @ A @ Vh
    left = geometric_means(A, Bc, ts, tol)
    left_r = geometric_means(A, Bc, [1 - t for t in ts], tol)
    right = geometric_means(Ac, B, ts, tol)
    right_r = geometric_means(Ac, B, [1 - t for t in ts], tol)
    slacks = []
    for i in range(len(ts)):
        bound = _pd_mean(_re(left[i]), _re(left_r[i]))
        slacks.append(_lmin(bound - absZ))
        bound_s = _pd_mean(_re(right[i]), _re(right_r[i]))
        slacks.append(_lmin(bound_s - absZs))
    return min(slacks), {}


def _ev_abs_z_averaged(inst, tol):
    A, B, ts = inst["A"], inst["B"], inst["ts"]
    Z, V, absZ, absZs = _polar_z(inst)
    Vh = V.conj().T
    G = geometric_means(A, B, ts, tol)
    rev = geometric_means(A, B, [1 - t for t in ts], tol)
    slacks = []
    for i in range(len(ts)):
        slacks.append(_lmin(_re(G[i] + Vh @ rev[i] @ V) / 2 - absZ))
        slacks.append(_lmin(_re(V @ G[i] @ Vh + rev[i]) / 2 - absZs))
    return min(slacks), {}


def _ev_sv_chain(inst, tol):
    A, B, ts = inst["A"], inst["B"], inst["ts"]
    Z, V, absZ, _ = _polar_z(inst)
    Vh = V.conj().T
    RA, RB = _re(A), _re(B)
    G = geometric_means(A, B, ts, tol)
    rev = geometric_means(A, B, [1 - t for t in ts], tol)
    H = geometric_means(RA, RB, ts, tol)
    Hrev = geometric_means(RA, RB, [1 - t for t in ts], tol)
    s0 = _sv(Z)
    slacks = []
    for i in range(len(ts)):
        T = G[i] + Vh @ rev[i] @ V
        links = [
            s0,
            _sv(_pd_mean(H[i], _re(Vh @ Hrev[i] @ V))),
            _sv(_pd_mean(_re(G[i]), _re(Vh @ _re(rev[i]) @ V))),
            _sv(_re(T) / 2),
            _sv(T / 2),
        ]
        slacks.extend(float(np.min(b - a)) for a, b in zip(links, links[1:]))
    return min(slacks), {}


def _ev_eigen_bound(inst, tol):
    A, B, X, ts = inst["A"], inst["B"], inst["X"], inst["ts"]
    absX = abs_matrix(X)
    G = geometric_means(A, B, ts, tol)
    rev = geometric_means(A, B, [1 - t for t in ts], tol)
    slacks = []
    for i in range(len(ts)):
        lhs = _eigs(2 * absX - _re(G[i]))
        mid = _eigs(rev[i])
        rhs = _sv(rev[i])
        slacks.append(float(np.min(mid - lhs)))
        slacks.append(float(np.min(rhs - mid)))
    return min(slacks), {}


def _ev_polar_norm(inst, tol):
    A, B, X, ts = inst["A"], inst["B"], inst["X"], inst["ts"]
    V, _ = polar_decomposition(X)
    Vh = V.conj().T
    G = geometric_means(A, B, ts, tol)
    rev = geometric_means(A, B, [1 - t for t in ts], tol)
    kx = _kyfan(X)
    return min(float(np.min(_kyfan(G[i] + Vh @ rev[i] @ V) / 2 - kx)) for i in range(len(ts))), {}


def _ev_adjoint_mean_block(inst, tol):
    A, B, X, ts = inst["A"], inst["B"], inst["X"], inst["ts"]
    Xs = X.conj().T
    fs = registry_means(ts)
    inv_pair = _Congruence(_inv(A), _inv(B), tol)
    swapped = _Congruence(B, A, tol)
    slacks = []
    for f in fs:
        top = _inv(inv_pair.apply(f))
        bottom = swapped.apply(f)
        slacks.append(_apt_slack(top, X, Xs, bottom))
    return min(slacks), {"means": len(fs)}


def _ev_f_real_ppt(inst, tol):
    A, B, X, f = inst["A"], inst["B"], inst["X"], inst["f"]
    FA = Diagonalization(_re(A), hermitian=True).apply(f)
    FB = Diagonalization(_re(B), hermitian=True).apply(f)
    return _ppt_slack(FA, X, FB), {}


def _f_arith_slacks(inst, mirrored: bool):
    A, B, X, f, ts = inst["A"], inst["B"], inst["X"], inst["f"], inst["ts"]
    Xs = X.conj().T
    FA = Diagonalization(A).apply(f)
    FB = Diagonalization(B).apply(f)
    slacks = []
    for t in ts:
        top = (1 - t) * FA + t * FB
        u = 1 - t if mirrored else t
        bottom = Diagonalization((1 - u) * A + u * B).apply(f)
        slacks.append(_apt_slack(top, X, Xs, bottom))
    return slacks


def _ev_f_arith(inst, tol):
    slacks = _f_arith_slacks(inst, mirrored=False)
    details = {}
    if min(slacks) < 0:
        # The literal bottom-right block f(A nabla_t B) has no 1-t mirror, so at
        # t = 0 it demands [f(A), X; X*, f(A)] APT, which the hypothesis does
        # not give.  Record the weight-mirrored variant next to the failure.
        scale = operand_scale(inst)
        details["failing_t"] = [float(t) for t, s in zip(inst["ts"], slacks) if s < 0]
        details["mirrored_margin"] = min(_f_arith_slacks(inst, mirrored=True)) / scale
    return min(slacks), details


def _ev_schwarz(inst, tol):
    A, B, X = inst["A"], inst["B"], inst["X"]
    G = geometric_means(A, B, [0.5], tol)[0]
    return float(_sv(G)[0] - _sv(X)[0]), {"condition": inst["condition"]}


def _ev_commuting_norm(inst, tol):
    A, B, X = inst["A"], inst["B"], inst["X"]
    return float(np.min(_kyfan(A + B) / 2 - _kyfan(X))), {}


def _ev_real_part_f(inst, tol):
    A, ts = inst["A"], inst["ts"]
    tau = sector_tangent(A, tol)
    c2 = 1 / (1 + tau**2)
    R = _re(A)
    dA = Diagonalization(A)
    dR = Diagonalization(R, hermitian=True)
    slacks = []
    for f in registry_means(ts):
        ReF = _re(dA.apply(f))
        FR = dR.apply(f)
        slacks.append(_lmin(FR - c2 * ReF))
        slacks.append(_lmin(ReF - FR))
    Rinv = _inv(R)
    ReAinv = _re(_inv(A))
    slacks.append(_lmin(Rinv - ReAinv))
    slacks.append(_lmin(ReAinv / c2 - Rinv))
    return min(slacks), {"alpha": float(np.arctan(tau))}


def _ev_mean_sandwich(inst, tol):
    A, B, ts = inst["A"], inst["B"], inst["ts"]
    tau = max(sector_tangent(A, tol), sector_tangent(B, tol))
    sec2 = 1 + tau**2
    acc = _Congruence(A, B, tol)
    her = _Congruence(_re(A), _re(B), tol)
    slacks = []
    for f in registry_means(ts):
        lower = her.apply(f)
        mid = _re(acc.apply(f))
        slacks.append(_lmin(mid - lower))
        slacks.append(_lmin(sec2 * lower - mid))
    return min(slacks), {"alpha": float(np.arctan(tau))}


def _ev_hiroshima(inst, tol):
    A, B, X = inst["A"], inst["B"], inst["X"]
    return float(np.min(_kyfan(A + B) - _kyfan(X))), {}


def _ev_ppt_means(inst, tol):
    A, B, X, ts = inst["A"], inst["B"], inst["X"], inst["ts"]
    G = geometric_means(A, B, ts, tol)
    rev = geometric_means(A, B, [1 - t for t in ts], tol)
    slacks = [_ppt_slack(G[i], X, rev[i]) for i in range(len(ts))]
    slacks.append(_ppt_slack(A, X, B))
    return min(slacks), {}


def _ev_ppt_abs_bounds(inst, tol):
    A, B, X, ts = inst["A"], inst["B"], inst["X"], inst["ts"]
    U, absX = polar_decomposition(X)
    Uh = U.conj().T
    absXs = _re(U @ absX @ Uh)
    Bc = _re(Uh @ B @ U)
    Ac = _re(U @ A @ Uh)
    rts = [1 - t for t in ts]
    L, Lr = geometric_means(A, Bc, ts, tol), geometric_means(A, Bc, rts, tol)
    R, Rr = geometric_means(Ac, B, ts, tol), geometric_means(Ac, B, rts, tol)
    G, Gr = geometric_means(A, B, ts, tol), geometric_means(A, B, rts, tol)
    slacks = []
    for i in range(len(ts)):
        slacks.append(_lmin(_pd_mean(L[i], Lr[i]) - absX))
        slacks.append(_lmin(_pd_mean(R[i], Rr[i]) - absXs))
        slacks.append(_lmin(_pd_mean(G[i], _re(Uh @ Gr[i] @ U)) - absX))
        slacks.append(_lmin(_pd_mean(_re(U @ G[i] @ Uh), Gr[i]) - absXs))
        slacks.append(float(np.min(_eigs(Gr[i]) - _eigs(2 * absX - G[i]))))
    return min(slacks), {}


def _ev_apt_norm_and_mean(inst, tol):
    A, B, X, Ystar = inst["A"], inst["B"], inst["X"], inst["Ystar"]
    sec, M = _sec_of_block(inst, tol)
    n = A.shape[0]
    bound = sec * _kyfan(A + B, 2 * n) - _kyfan(M)
    G = geometric_means(A, B, [0.5], tol)[0]
    return min(float(np.min(bound)), _apt_slack(G, X, Ystar, G)), {"sec_alpha": sec}


# ---------------------------------------------------------------- generators


def _alpha(spec: GenSpec, rng) -> float:
    return draw_alpha(rng) if spec.alpha is None else spec.alpha


def _gen_accretive_block(spec, rng):
    blk = random_accretive_block(spec, rng, alpha=_alpha(spec, rng))
    return {"A": blk.A, "B": blk.B, "X": blk.X}


def _gen_schur_reverse(spec, rng):
    B = random_sectorial(spec, rng, _alpha(spec, rng))
    X = complex_gaussian(rng, spec.n)
    E = random_sectorial(spec, rng, draw_alpha(rng)) * rng.uniform(0, 1) ** 2
    A = X @ _inv(B) @ X.conj().T + E
    return {"A": A, "B": B, "X": X}


def _gen_sectorial(spec, rng):
    return {"A": random_sectorial(spec, rng, _alpha(spec, rng))}


def _gen_nonhermitian(spec, rng):
    alpha = spec.alpha if spec.alpha else float(rng.uniform(0.1, 1.3))
    return {"A": random_sectorial(spec, rng, alpha)}


def _gen_apt(spec, rng, general=False, with_ts=True):
    blk = random_apt_block(spec, rng, general=general, alpha=_alpha(spec, rng))
    inst = {"A": blk.A, "B": blk.B, "X": blk.X}
    if general:
        inst["Ystar"] = blk.Ystar
    if with_ts:
        inst["ts"] = weight_grid(rng)
    return inst


def _gen_apt_general(spec, rng):
    return _gen_apt(spec, rng, general=True)


def _gen_apt_plain(spec, rng):
    return _gen_apt(spec, rng, with_ts=False)


def _gen_pinned(spec, rng):
    return {"A": PINNED_A.copy(), "B": PINNED_B.copy()}


def _gen_scaled_f(spec, rng):
    alpha = _alpha(spec, rng)
    A = random_sectorial(spec, rng, alpha)
    B = random_sectorial(spec, rng, alpha)
    f = random_omf(rng)
    c2 = np.cos(alpha) ** 2
    FA = Diagonalization(A).apply(f)
    FB = Diagonalization(B).apply(f)
    X = scaled_offdiagonal(rng, c2 * _re(FA), c2 * _re(FB), spec.mu)
    return {"A": A, "B": B, "X": X, "f": f, "alpha": alpha, "ts": weight_grid(rng)}


def _gen_schwarz(spec, rng):
    condition = int(rng.integers(1, 4))
    alpha = _alpha(spec, rng)
    A, X = random_commuting_pair(spec, rng, alpha)
    if condition == 3:
        B = float(np.exp(rng.uniform(-1, 1))) * A
        X = complex_gaussian(rng, spec.n)
    else:
        B = random_sectorial(spec, rng, alpha)
    X = extend_to_accretive(rng, A, X, B, spec.mu)
    return {"A": A, "B": B, "X": X, "condition": condition}


def _gen_commuting(spec, rng):
    alpha = _alpha(spec, rng)
    A, X = random_commuting_pair(spec, rng, alpha)
    B = random_sectorial(spec, rng, alpha)
    X = extend_to_accretive(rng, A, X, B, spec.mu)
    return {"A": A, "B": B, "X": X}


def _gen_sectorial_ts(spec, rng):
    inst = _gen_sectorial(spec, rng)
    inst["ts"] = weight_grid(rng)
    return inst


def _gen_sectorial_pair(spec, rng):
    alpha = _alpha(spec, rng)
    return {
        "A": random_sectorial(spec, rng, alpha),
        "B": random_sectorial(spec, rng, alpha),
        "ts": weight_grid(rng),
    }


def _gen_ppt(spec, rng, with_ts=True):
    blk = random_ppt_block(spec, rng)
    inst = {"A": blk.A, "B": blk.B, "X": blk.X}
    if with_ts:
        inst["ts"] = weight_grid(rng)
    return inst


def _gen_ppt_plain(spec, rng):
    return _gen_ppt(spec, rng, with_ts=False)


# ---------------------------------------------------------------- extra hypotheses


def _hyp_schur_reverse(inst, tol):
    _require(_strict(inst["B"], tol), "B is not strictly accretive")
    A, B, X = inst["A"], inst["B"], inst["X"]
    _require(_nonneg(A - X @ _inv(B) @ X.conj().T, tol), "A - X B^{-1} X* is not accretive")


def _hyp_nonhermitian(inst, tol):
    A = inst["A"]
    _require(_strict(A, tol), "A is not strictly accretive")
    _require(_sv((A - A.conj().T) / 2j)[0] >= 1e-3, "A is too close to Hermitian")


def _hyp_schwarz(inst, tol):
    _hyp_accretive_block(inst, tol)
    A, B, X = inst["A"], inst["B"], inst["X"]
    scale = operand_scale(inst)
    Ah = A.conj().T
    _require(_close(A @ Ah, Ah @ A, tol, scale), "A is not normal")
    cond = inst["condition"]
    if cond == 1:
        _require(_close(A @ X, X @ A, tol, scale), "AX != XA")
    elif cond == 2:
        Ai = _inv(A)
        Xh = X.conj().T
        _require(_close(Xh @ Ai @ X, X @ Ai @ Xh, tol, scale * (1 + _sv(Ai)[0])), "X*A^{-1}X != XA^{-1}X*")
    else:
        ratio = np.vdot(A, B) / np.vdot(A, A)
        _require(abs(ratio.imag) < 1e-12 and ratio.real > 0 and _close(B, ratio.real * A, tol, scale),
                 "B is not a positive multiple of A")


def _hyp_commuting(inst, tol):
    _hyp_accretive_block(inst, tol)
    A, X = inst["A"], inst["X"]
    _require(_close(A @ X, X @ A, tol, operand_scale(inst)), "AX != XA")


def _hyp_pair_sectorial(inst, tol):
    _hyp_strict_pair(inst, tol)


def _hyp_pinned(inst, tol):
    _hyp_strict_pair(inst, tol)


# ---------------------------------------------------------------- registry


@dataclass(frozen=True)
class Claim:
    """One executable inequality with its hypotheses.

    ``kind`` is ``"inequality"`` (pass when margin >= -tol.margin),
    ``"refutation"`` (pass when the asserted failure is detected, margin > 0)
    or ``"pinned"`` (fixed matrices; pass when margin > 0).
    """

    id: str
    anchor: str
    group: str
    hypothesis: str
    generate: Callable = field(repr=False)
    check: Callable = field(repr=False)
    evaluate: Callable = field(repr=False)
    kind: str = "inequality"
    quantifiers: tuple = ()

    def describe(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "group": self.group,
            "hypothesis": self.hypothesis,
            "kind": self.kind,
            "quantifiers": list(self.quantifiers),
        }


def _c(*args, **kw):
    return Claim(*args, **kw)


CLAIMS: dict[str, Claim] = {
    c.id: c
    for c in [
        _c("C1", "accretive Schur complement, forward", "main",
           "A, B strictly accretive; [A, X; X*, B] accretive => A - X B^-1 X* accretive",
           _gen_accretive_block, _hyp_accretive_block, _ev_schur_forward),
        _c("C2", "accretive Schur complement, reverse with cos(alpha)", "main",
           "B in sector alpha; A - X B^-1 X* accretive => [A, cos(a) X; cos(a) X*, B] accretive",
           _gen_schur_reverse, _hyp_schur_reverse, _ev_schur_reverse),
        _c("C3", "[A, cos(a) I; cos(a) I, A^-1] accretive", "main",
           "A strictly accretive with sector angle alpha",
           _gen_sectorial, _hyp_strict_a, _ev_inverse_block),
        _c("C4", "[A, I; I, A^-1] never accretive for non-Hermitian A", "main",
           "A strictly accretive, ||Im A|| >= 1e-3",
           _gen_nonhermitian, _hyp_nonhermitian, _ev_inverse_block_refuted, kind="refutation"),
        _c("C5", "APT iff geometric-mean block APT", "main",
           "A, B strictly accretive; [A, X; Y*, B] APT => [A #_t B, X; Y*, A #_{1-t} B] APT for all t",
           _gen_apt_general, _hyp_apt, _ev_mean_block_apt, quantifiers=("t",)),
        _c("C6", "2 s_j(X) <= s_j(M) for accretive M", "main",
           "[A, X; X*, B] accretive",
           _gen_accretive_block, _hyp_accretive_block, _ev_tao, quantifiers=("j",)),
        _c("C7", "2||X|| <= sec(alpha) ||A + B|| for APT M in sector alpha", "main",
           "[A, X; X*, B] APT with sector angle alpha",
           _gen_apt_plain, _hyp_apt_sectorial, _ev_hiroshima_sec, quantifiers=("k",)),
        _c("C8", "s_1(A - B) > s_1(A (+) B) for a fixed accretive pair", "main",
           "fixed 2x2 strictly accretive A, B",
           _gen_pinned, _hyp_pinned, _ev_pinned, kind="pinned"),
        _c("C9", "||X|| <= sec(alpha)/2 ||A #_t B + A #_{1-t} B||", "main",
           "[A, X; X*, B] APT with sector angle alpha",
           lambda s, r: _gen_apt(s, r), _hyp_apt_sectorial, _ev_norm_means, quantifiers=("t", "k")),
        _c("C10", "|Z| below Re-geometric-mean bound (conjugated form)", "main",
           "[A, X; Y*, B] APT, Z = (X + Y)/2 = V|Z|",
           _gen_apt_general, _hyp_apt, _ev_abs_z_conjugated, quantifiers=("t",)),
        _c("C11", "|Z| below averaged Re bound", "main",
           "[A, X; Y*, B] APT, Z = (X + Y)/2 = V|Z|",
           _gen_apt_general, _hyp_apt, _ev_abs_z_averaged, quantifiers=("t",)),
        _c("C12", "singular value chain for Z = (X + Y)/2", "main",
           "[A, X; Y*, B] APT",
           _gen_apt_general, _hyp_apt, _ev_sv_chain, quantifiers=("t", "j")),
        _c("C13", "lambda_j(2|X| - Re(A #_t B)) <= lambda_j(Re(A #_{1-t} B)) <= s_j(A #_{1-t} B)", "main",
           "[A, X; X*, B] APT",
           lambda s, r: _gen_apt(s, r), _hyp_apt, _ev_eigen_bound, quantifiers=("t", "j")),
        _c("C14", "||X|| <= 1/2 ||A #_t B + V*(A #_{1-t} B)V||, X = V|X|", "main",
           "[A, X; X*, B] APT",
           lambda s, r: _gen_apt(s, r), _hyp_apt, _ev_polar_norm, quantifiers=("t", "k")),
        _c("C15", "[A sigma* B, X; X*, B sigma A] APT", "main",
           "[A, X; X*, B] APT; every registry mean sigma",
           lambda s, r: _gen_apt(s, r), _hyp_apt, _ev_adjoint_mean_block, quantifiers=("sigma",)),
        _c("C16", "[f(Re A), X; X*, f(Re B)] PPT", "main",
           "A, B in sector alpha; [cos^2(a) f(A), X; X*, cos^2(a) f(B)] APT",
           _gen_scaled_f, _hyp_scaled_f, _ev_f_real_ppt),
        _c("C17", "[f(A) nabla_t f(B), X; X*, f(A nabla_t B)] APT", "main",
           "A, B in sector alpha; [cos^2(a) f(A), X; X*, cos^2(a) f(B)] APT",
           _gen_scaled_f, _hyp_scaled_f, _ev_f_arith, quantifiers=("t",)),
        _c("C18", "accretive Schwarz inequality ||X|| <= ||A # B||", "main",
           "A normal, M accretive, A, B strictly accretive, and AX = XA | X*A^-1X = XA^-1X* | B = kA",
           _gen_schwarz, _hyp_schwarz, _ev_schwarz),
        _c("C19", "||X|| <= 1/2 ||A + B|| when AX = XA", "main",
           "M accretive, AX = XA",
           _gen_commuting, _hyp_commuting, _ev_commuting_norm, quantifiers=("k",)),
        _c("C20", "cos^2 Re f(A) <= f(Re A) <= Re f(A); Re(A^-1) <= (Re A)^-1 <= sec^2 Re(A^-1)", "background",
           "A strictly accretive with sector angle alpha; every registry f",
           _gen_sectorial_ts, _hyp_strict_a, _ev_real_part_f, quantifiers=("f",)),
        _c("C21", "Re A sigma Re B <= Re(A sigma B) <= sec^2 (Re A sigma Re B)", "background",
           "A, B strictly accretive in sector alpha; every registry mean",
           _gen_sectorial_pair, _hyp_pair_sectorial, _ev_mean_sandwich, quantifiers=("sigma",)),
        _c("C22", "Hiroshima: ||X|| <= ||A + B|| for PPT blocks", "background",
           "[A, X; X*, B] PPT",
           _gen_ppt_plain, _hyp_ppt, _ev_hiroshima, quantifiers=("k",)),
        _c("C23", "PPT iff geometric-mean block PPT", "background",
           "[A, X; X*, B] PPT",
           _gen_ppt, _hyp_ppt, _ev_ppt_means, quantifiers=("t",)),
        _c("C24", "PPT bounds on |X|, |X*| and lambda_j(2|X| - A #_t B)", "background",
           "[A, X; X*, B] PPT, X = U|X|",
           _gen_ppt, _hyp_ppt, _ev_ppt_abs_bounds, quantifiers=("t", "j")),
        _c("C25", "||M|| <= sec(alpha)||A + B|| and [A # B, X; Y*, A # B] APT", "background",
           "[A, X; Y*, B] APT with sector angle alpha",
           _gen_apt_general, _hyp_apt_sectorial, _ev_apt_norm_and_mean, quantifiers=("k",)),
    ]
}

GROUPS = ("main", "background")


def list_claims(group: str | None = None) -> list[Claim]:
    if group is not None and group not in GROUPS:
        raise RangeError(f"unknown claim group {group!r}; choose from {GROUPS}")
    return [c for c in CLAIMS.values() if group is None or c.group == group]


def get_claim(claim_id: str) -> Claim:
    try:
        return CLAIMS[claim_id]
    except KeyError:
        raise RangeError(f"unknown claim id {claim_id!r}") from None


# ---------------------------------------------------------------- verdicts


@dataclass
class ClaimVerdict:
    claim_id: str
    seed: int | None
    min_margin: float
    passed: bool
    status: str
    slack: float = float("nan")
    details: dict = field(default_factory=dict)
    witness: dict | None = None


def serialize_instance(inst: dict) -> dict:
    out = {}
    for key, value in inst.items():
        if isinstance(value, np.ndarray):
            out[key] = matrix_to_dict(value)
        elif isinstance(value, Omf):
            out[key] = value.to_dict()
        elif isinstance(value, (list, tuple)):
            out[key] = [float(v) for v in value]
        else:
            out[key] = value
    return out


def _status(claim: Claim, passed: bool) -> str:
    if claim.kind == "pinned":
        return "counterexample-confirmed" if passed else "fail"
    if claim.kind == "refutation":
        return "non-accretivity-confirmed" if passed else "fail"
    return "pass" if passed else "fail"


def verify_claim(claim_id: str, instance: dict, tol: Tolerance = DEFAULT_TOL, seed=None) -> ClaimVerdict:
    """Check the hypotheses of ``claim_id`` on ``instance`` then evaluate it.

    Raises :class:`HypothesisViolation` when the instance does not satisfy
    the claim's hypotheses.
    """
    claim = get_claim(claim_id)
    claim.check(instance, tol)
    slack, details = claim.evaluate(instance, tol)
    margin = float(slack) / operand_scale(instance)
    if claim.kind == "inequality":
        passed = margin >= -tol.margin
    else:
        passed = margin > 0
    verdict = ClaimVerdict(claim_id, seed, margin, passed, _status(claim, passed), float(slack), details)
    if not passed:
        verdict.witness = serialize_instance(instance)
    return verdict


def generate_instance(claim_id: str, spec: GenSpec, rng=None) -> dict:
    claim = get_claim(claim_id)
    return claim.generate(spec, spec.rng() if rng is None else rng)


# ---------------------------------------------------------------- PPT ancestors
# At alpha = 0 the APT bounds of C7 and C9 reduce to statements about PSD
# blocks.  These evaluators compute those PSD bounds directly (Hermitian
# arithmetic, no sector angle), for cross-checking the APT evaluators.


def _ancestor_c7(inst, tol):
    A, B, X = inst["A"], inst["B"], inst["X"]
    return float(np.min(_kyfan(A + B) - 2 * _kyfan(X)))


def _ancestor_c9(inst, tol):
    A, B, X, ts = _re(inst["A"]), _re(inst["B"]), inst["X"], inst["ts"]
    kx = _kyfan(X)
    slacks = []
    for t in ts:
        G = A if t == 0 else B if t == 1 else _pd_mean(A, B, t)
        Gr = B if t == 0 else A if t == 1 else _pd_mean(A, B, 1 - t)
        slacks.append(float(np.min(_kyfan(G + Gr) / 2 - kx)))
    return min(slacks)


PPT_ANCESTORS = {"C7": ("C22", _ancestor_c7), "C9": ("C23", _ancestor_c9)}


def ppt_ancestor_margin(claim_id: str, instance: dict, tol: Tolerance = DEFAULT_TOL) -> float:
    """Relative margin of the PSD bound that ``claim_id`` collapses to at ``alpha = 0``."""
    _, fn = PPT_ANCESTORS[claim_id]
    _hyp_ppt(instance, tol)
    return fn(instance, tol) / operand_scale(instance)
