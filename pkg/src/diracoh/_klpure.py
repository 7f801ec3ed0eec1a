"""Pure-Python Kazhdan-Lusztig table kernel.

Same contract as the compiled twin in ``_klcore.pyx``: given the
multiplication/length/Bruhat tables of a finite Coxeter system whose elements
are indexed in nondecreasing length order, fill the dense table of all
polynomials P[x, w].  Coefficients are returned as an int64 array
``coeffs[x*n + w, k]`` = coefficient of q^k, together with ``degs[x*n + w]``
(-1 marks the zero polynomial).
"""

from __future__ import annotations

import numpy as np


def kl_table(rmul: np.ndarray, lengths: np.ndarray, bruhat: np.ndarray):
    n, ngen = rmul.shape
    if n == 0:
        raise ValueError("empty group")
    maxdeg = max((int(lengths[n - 1]) - 1) // 2, 0)
    width = maxdeg + 1
    coeffs = np.zeros((n * n, width), dtype=np.int64)
    degs = np.full(n * n, -1, dtype=np.int32)

    rmul_l = rmul.tolist()
    len_l = [int(v) for v in lengths]
    bru_l = bruhat.tolist()
    # row-major python lists; cof[p] is the dense coefficient list of pair p
    cof = [None] * (n * n)

    def assign(p, vec):
        d = len(vec) - 1
        while d >= 0 and vec[d] == 0:
            d -= 1
        cof[p] = vec[: d + 1]
        degs[p] = d
        if d >= 0:
            coeffs[p, : d + 1] = vec[: d + 1]

    assign(0, [1])
    for w in range(1, n):
        lw = len_l[w]
        assign(w * n + w, [1])
        s = -1
        for i in range(ngen):
            if len_l[rmul_l[w][i]] < lw:
                s = i
                break
        ws = rmul_l[w][s]
        brow = bru_l
        for x in range(n):
            if x == w or not brow[x][w]:
                continue
            xs = rmul_l[x][s]
            p_xs_ws = cof[xs * n + ws]
            p_x_ws = cof[x * n + ws]
            acc = [0] * width
            if len_l[xs] < len_l[x]:
                if p_xs_ws:
                    for k, c in enumerate(p_xs_ws):
                        acc[k] += c
                if p_x_ws:
                    for k, c in enumerate(p_x_ws):
                        acc[k + 1] += c
            else:
                if p_xs_ws:
                    for k, c in enumerate(p_xs_ws):
                        acc[k + 1] += c
                if p_x_ws:
                    for k, c in enumerate(p_x_ws):
                        acc[k] += c
            # correction sum over x <= z < ws with zs < z and mu(z, ws) != 0
            for z in range(n):
                if z == ws or not brow[x][z] or not brow[z][ws]:
                    continue
                if len_l[rmul_l[z][s]] >= len_l[z]:
                    continue
                gap = len_l[ws] - len_l[z]
                if (gap - 1) % 2:
                    continue
                p_z_ws = cof[z * n + ws]
                tgt = (gap - 1) // 2
                if p_z_ws is None or tgt >= len(p_z_ws):
                    continue
                mu = p_z_ws[tgt]
                if mu == 0:
                    continue
                shift = (lw - len_l[z]) // 2
                p_x_z = cof[x * n + z]
                if p_x_z:
                    for k, c in enumerate(p_x_z):
                        acc[k + shift] -= mu * c
            p = x * n + w
            assign(p, acc)
            d = degs[p]
            if d >= 0:
                if 2 * d > lw - len_l[x] - 1:
                    raise AssertionError("KL degree bound violated")
                if any(c < 0 for c in cof[p]):
                    raise AssertionError("negative KL coefficient")
    return coeffs, degs
