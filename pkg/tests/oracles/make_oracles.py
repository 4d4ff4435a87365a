"""Regenerate ``frozen.json``: reference values computed independently in mpmath.

Nothing here calls :mod:`sector_verify`.  Every value is obtained with 50-digit
mpmath linear algebra (``sqrtm``, ``powm``, ``logm``, ``svd``, ``eig``) from
the defining formula, then rounded to double precision and frozen.

    python tests/oracles/make_oracles.py
"""
import json
from pathlib import Path

import mpmath as mp

mp.mp.dps = 50

OUT = Path(__file__).with_name("frozen.json")


def M(rows):
    return mp.matrix([[mp.mpc(z) for z in row] for row in rows])


def adj(A):
    return A.transpose_conj()


def enc(A):
    if isinstance(A, mp.matrix):
        return [[[float(mp.re(A[i, j])), float(mp.im(A[i, j]))] for j in range(A.cols)] for i in range(A.rows)]
    return float(A)


def sym(A):
    return (A + adj(A)) / 2


def mean(A, B, f):
    """A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2}, principal branches throughout."""
    Ah = mp.sqrtm(A)
    Aih = mp.inverse(Ah)
    return Ah * f(Aih * B * Aih) * Ah


def gm(t):
    return lambda C: mp.powm(C, t)


def harmonic(C):
    n = C.rows
    return 2 * C * mp.inverse(mp.eye(n) + C)


def log_mean(C):
    n = C.rows
    return (C - mp.eye(n)) * mp.inverse(mp.logm(C))


def svals(A):
    s = mp.svd_c(A, compute_uv=False)
    return sorted([float(v) for v in s], reverse=True)


def main():
    out = {}

    A_pd = M([[2, 1], [1, 3]])
    B_pd = M([[4, -1], [-1, 2]])
    out["pd_pair"] = {"A": enc(A_pd), "B": enc(B_pd)}
    out["pd_gm_half"] = enc(sym(mean(A_pd, B_pd, gm(0.5))))
    out["pd_gm_0.3"] = enc(sym(mean(A_pd, B_pd, gm(mp.mpf("0.3")))))
    out["pd_harmonic"] = enc(sym(mean(A_pd, B_pd, harmonic)))
    out["pd_log_mean"] = enc(sym(mean(A_pd, B_pd, log_mean)))
    # adjoint of the harmonic-like mean: (A^{-1} sigma B^{-1})^{-1}
    out["pd_harmonic_adjoint"] = enc(
        sym(mp.inverse(mean(mp.inverse(A_pd), mp.inverse(B_pd), harmonic)))
    )

    A_acc = M([[2 + 1j, 0.5], [0.2j, 1.5 - 0.5j]])
    B_acc = M([[1 + 0.5j, 0.3], [0.3, 2 - 0.2j]])
    out["acc_pair"] = {"A": enc(A_acc), "B": enc(B_acc)}
    out["acc_gm_half"] = enc(mean(A_acc, B_acc, gm(0.5)))
    out["acc_gm_0.7"] = enc(mean(A_acc, B_acc, gm(mp.mpf("0.7"))))
    out["acc_log_mean"] = enc(mean(A_acc, B_acc, log_mean))

    N = M([[1 + 1j, 2], [0, 2 - 0.5j]])
    out["nonnormal"] = enc(N)
    out["nonnormal_power_0.3"] = enc(mp.powm(N, mp.mpf("0.3")))
    out["nonnormal_sqrt"] = enc(mp.sqrtm(N))
    out["nonnormal_log_mean"] = enc(log_mean(N))

    # sector tangent: spectral radius of R^{-1} S (same spectrum as R^{-1/2} S R^{-1/2})
    R = sym(A_acc)
    S = (A_acc - adj(A_acc)) / (2j)
    ev = mp.eig(mp.inverse(R) * S, left=False, right=False)
    out["acc_A_sector_tangent"] = float(max(abs(e) for e in ev))

    X = M([[1, 2j], [3, -1]])
    U, s, V = mp.svd_c(X)
    W = U * V  # unitary polar factor
    P = adj(V) * mp.diag(s) * V
    out["polar_X"] = enc(X)
    out["polar_U"] = enc(W)
    out["polar_P"] = enc(sym(P))
    out["polar_svals"] = svals(X)

    K = M([[1, 2, 0], [0, 1j, 3], [1, 0, -2]])
    sk = svals(K)
    out["kyfan_K"] = enc(K)
    out["kyfan_norms"] = [sum(sk[: k + 1]) for k in range(3)]

    # accretive Schur complement A - X B^{-1} X*
    out["schur"] = enc(A_acc - X * mp.inverse(B_acc) * adj(X))

    OUT.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
