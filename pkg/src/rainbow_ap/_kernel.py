"""Compiled depth-first enumeration of rainbow-free colorings.

Positions are the support elements in assignment order.  ``preds`` holds, for
each position i (rows ``off[i]:off[i+1]``), the other k-1 positions of every
k-AP whose last position in assignment order is i; all of them are < i.
"""

import numpy as np
from numba import njit

DONE = 0
BUDGET = 1
FOUND = 2


@njit(cache=True, nogil=True)
def _rainbow(col, preds, lo, hi, c):
    kk = preds.shape[1]
    if kk == 2:
        for t in range(lo, hi):
            a = col[preds[t, 0]]
            b = col[preds[t, 1]]
            if a != b and a != c and b != c:
                return True
        return False
    for t in range(lo, hi):
        ok = True
        for u in range(kk):
            cu = col[preds[t, u]]
            if cu == c:
                ok = False
                break
            for v in range(u):
                if col[preds[t, v]] == cu:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


@njit(cache=True, nogil=True)
def dfs(m, r, start, prefix, off, preds, canonical, exact, stop_first, budget,
        counts, witness):
    """Enumerate completions of ``prefix[:start]``.

    counts[s] receives the number of complete colorings using exactly s
    colors.  With ``canonical`` colors first appear in increasing order; with
    ``exact`` only colorings using all r colors are kept.  Returns
    (nodes, status) where nodes counts accepted assignments at depth >= start.
    """
    col = np.full(m, -1, np.int64)
    occ = np.zeros(r + 1, np.int64)
    nused = 0
    for i in range(start):
        col[i] = prefix[i]
        occ[col[i]] += 1
        if occ[col[i]] == 1:
            nused += 1
    nodes = 0
    if start == m:
        if not exact or nused == r:
            counts[nused] += 1
            if stop_first:
                for j in range(m):
                    witness[j] = col[j]
                return nodes, FOUND
        return nodes, DONE

    i = start
    while True:
        c = col[i]
        if c >= 0:
            occ[c] -= 1
            if occ[c] == 0:
                nused -= 1
        c += 1
        limit = r - 1
        if canonical and nused < limit:
            limit = nused
        found = False
        while c <= limit:
            if exact:
                need = r - nused
                if occ[c] == 0:
                    need -= 1
                if need > m - i - 1:
                    c += 1
                    continue
            if not _rainbow(col, preds, off[i], off[i + 1], c):
                found = True
                break
            c += 1
        if not found:
            col[i] = -1
            i -= 1
            if i < start:
                return nodes, DONE
            continue
        col[i] = c
        occ[c] += 1
        if occ[c] == 1:
            nused += 1
        nodes += 1
        if nodes > budget:
            return nodes, BUDGET
        if i == m - 1:
            if not exact or nused == r:
                counts[nused] += 1
                if stop_first:
                    for j in range(m):
                        witness[j] = col[j]
                    return nodes, FOUND
        else:
            i += 1
            col[i] = -1
