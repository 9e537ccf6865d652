"""Pure-Python versions of the compiled kernels in ``_ckernels.pyx``.

Used when the extension is not built, or when ``BIPARTIFY_PURE_PYTHON=1``.
The two implementations must agree exactly; ``tests/test_kernels.py``
checks this whenever the extension is importable.
"""

import math

import numpy as np


def movement_routine(indptr, indices, side, start_part, moves):
    n = len(side)
    moved = [False] * n
    P = int(start_part)
    t_movement = 0
    t_no_movement = 1
    n_moves = 0
    while True:
        for u in range(n):
            if side[u] != P or moved[u]:
                continue
            nbrs = indices[indptr[u]:indptr[u + 1]]
            same = sum(1 for w in nbrs if side[w] == P)
            if 2 * same > len(nbrs):
                side[u] = 1 - P
                moved[u] = True
                moves[n_moves] = u
                n_moves += 1
                t_movement = 1
                break
        if t_movement == 0:
            t_no_movement += 1
        else:
            t_movement = 0
            t_no_movement = 1
        P = 1 - P
        if t_no_movement > 2:
            break
    return n_moves


def _flip_delta(adj, S, b, v, full):
    deg = int(adj[v]).bit_count()
    if (S >> b) & 1:
        same = (int(adj[v]) & S).bit_count()
    else:
        same = (int(adj[v]) & ~S & full).bit_count()
    return 2 * same - deg


def gray_maxcut(adj, n):
    if n <= 1:
        return 0, 0
    adj = [int(a) for a in adj]
    full = (1 << n) - 1
    S = 0
    cut = best = 0
    best_mask = 0
    for step in range(1, 1 << (n - 1)):
        b = (step & -step).bit_length() - 1
        v = n - 1 - b
        cut += _flip_delta(adj, S, b, v, full)
        S ^= 1 << b
        if cut > best or (cut == best and S < best_mask):
            best = cut
            best_mask = S
    return best, best_mask


def gray_trace(adj, n, limit):
    adj = [int(a) for a in adj]
    full = (1 << n) - 1
    limit = min(int(limit), 1 << max(n - 1, 0))
    masks = np.zeros(limit, dtype=np.uint64)
    cuts = np.zeros(limit, dtype=np.int64)
    S = 0
    cut = 0
    for step in range(1, limit):
        b = (step & -step).bit_length() - 1
        v = n - 1 - b
        cut += _flip_delta(adj, S, b, v, full)
        S ^= 1 << b
        masks[step] = S
        cuts[step] = cut
    return masks, cuts


def jacobi_eigh(a_in, max_rotations, tol):
    a = np.array(a_in, dtype=np.float64, copy=True)
    n = a.shape[0]
    V = np.eye(n)
    scale = np.sqrt((a * a).sum()) or 1.0
    rotations = 0
    converged = False
    while rotations < max_rotations:
        off = np.sqrt((np.triu(a, 1) ** 2).sum() * 2.0)
        if off <= tol * scale:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta >= 0:
                    t = 1.0 / (theta + math.hypot(theta, 1.0))
                else:
                    t = -1.0 / (-theta + math.hypot(theta, 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - s * rowq
                a[q, :] = s * rowp + c * rowq
                a[p, q] = a[q, p] = 0.0
                vp = V[:, p].copy()
                vq = V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
                rotations += 1
    return np.diag(a).copy(), V, rotations, converged
