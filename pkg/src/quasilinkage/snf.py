"""Integer Smith normal form: dense and sparse-elimination routes.

All arithmetic is on Python ints, so there is no overflow however large the
intermediate coefficients grow.
"""

from __future__ import annotations

import heapq
from typing import Sequence


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix (dense)."""
    a = [list(map(int, row)) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < rows and t < cols:
        # smallest nonzero entry of the trailing block becomes the pivot
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    ri, rt = a[i], a[t]
                    for j in range(t, cols):
                        ri[j] -= q * rt[j]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for i in range(t, rows):
                        a[i][j] -= q * a[i][t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                # pivot must divide the whole trailing block
                bad = None
                for i in range(t + 1, rows):
                    for j in range(t + 1, cols):
                        if a[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                rt, rb = a[t], a[bad]
                for j in range(t, cols):
                    rt[j] += rb[j]
                continue
            # move the smallest remaining entry of row/column t to the pivot
            best = (abs(p), t, t)
            for i in range(t + 1, rows):
                if a[i][t] and abs(a[i][t]) < best[0]:
                    best = (abs(a[i][t]), i, t)
            for j in range(t + 1, cols):
                if a[t][j] and abs(a[t][j]) < best[0]:
                    best = (abs(a[t][j]), t, j)
            _, i, j = best
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def invariant_factors(rows: Sequence[dict[int, int]], dense_threshold: int = 0) -> list[int]:
    """Nonzero invariant factors of a sparse matrix given as ``{column: value}`` rows.

    Unit pivots are eliminated first, choosing short rows and short columns
    to limit fill-in; whatever is left without a unit entry goes through
    :func:`smith_diagonal`.
    """
    mat = [dict((c, v) for c, v in r.items() if v) for r in rows]
    if dense_threshold and len(mat) <= dense_threshold:
        return _dense_from_sparse(mat)
    cols: dict[int, set[int]] = {}
    for i, r in enumerate(mat):
        for c in r:
            cols.setdefault(c, set()).add(i)
    alive = [bool(r) for r in mat]
    heap = [(len(r), i) for i, r in enumerate(mat) if r]
    heapq.heapify(heap)
    units = 0
    parked = []
    while heap:
        length, i = heapq.heappop(heap)
        if not alive[i] or length != len(mat[i]):
            continue
        r = mat[i]
        piv = None
        for c, v in r.items():
            if v == 1 or v == -1:
                cnt = len(cols[c])
                if piv is None or cnt < piv[0]:
                    piv = (cnt, c)
        if piv is None:
            parked.append(i)
            continue
        c = piv[1]
        p = r[c]
        for k in list(cols[c]):
            if k == i:
                continue
            rk = mat[k]
            f = rk[c] * p
            for cc, vv in r.items():
                nv = rk.get(cc, 0) - f * vv
                if nv:
                    if cc not in rk:
                        cols[cc].add(k)
                    rk[cc] = nv
                elif cc in rk:
                    del rk[cc]
                    cols[cc].discard(k)
            if rk:
                heapq.heappush(heap, (len(rk), k))
            else:
                alive[k] = False
        for cc in r:
            cols[cc].discard(i)
        alive[i] = False
        units += 1
    rest = [mat[i] for i in set(parked) if alive[i] and mat[i]]
    return [1] * units + _dense_from_sparse(rest)


def _dense_from_sparse(rows: list[dict[int, int]]) -> list[int]:
    rows = [r for r in rows if r]
    if not rows:
        return []
    colset = sorted({c for r in rows for c in r})
    pos = {c: j for j, c in enumerate(colset)}
    dense = [[0] * len(colset) for _ in rows]
    for i, r in enumerate(rows):
        for c, v in r.items():
            dense[i][pos[c]] = v
    return sorted(smith_diagonal(dense))
