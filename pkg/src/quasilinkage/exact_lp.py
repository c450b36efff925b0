"""Dense tableau simplex over exact rationals.

Solves ``maximize c.x  subject to  A x <= b, x >= 0`` with ``b >= 0``, so the
all-slack basis is feasible from the start and no phase one is needed.
Bland's rule guarantees termination on degenerate problems.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class Unbounded(ArithmeticError):
    pass


@dataclass
class LPSolution:
    x: list[Fraction]
    value: Fraction
    duals: list[Fraction]  # one per row of A, all >= 0 at optimality
    pivots: int


def maximize(
    c: Sequence, a: Sequence[Sequence], b: Sequence, max_pivots: int = 100_000
) -> LPSolution:
    m = len(a)
    nv = len(c)
    if any(Fraction(v) < 0 for v in b):
        raise ValueError("right-hand side must be nonnegative")
    width = nv + m + 1
    # row layout: [structural | slack | rhs]
    tab = []
    for i, row in enumerate(a):
        if len(row) != nv:
            raise ValueError("ragged constraint matrix")
        r = [Fraction(v) for v in row] + [Fraction(0)] * m + [Fraction(b[i])]
        r[nv + i] = Fraction(1)
        tab.append(r)
    obj = [-Fraction(v) for v in c] + [Fraction(0)] * (m + 1)
    basis = [nv + i for i in range(m)]

    pivots = 0
    while True:
        enter = next((j for j in range(width - 1) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            coef = tab[i][enter]
            if coef > 0:
                ratio = tab[i][-1] / coef
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise Unbounded("objective is unbounded")
        _pivot(tab, obj, leave, enter)
        basis[leave] = enter
        pivots += 1
        if pivots > max_pivots:
            raise RuntimeError("simplex pivot limit exceeded")

    x = [Fraction(0)] * nv
    for i, var in enumerate(basis):
        if var < nv:
            x[var] = tab[i][-1]
    duals = obj[nv:nv + m]
    return LPSolution(x=x, value=obj[-1], duals=duals, pivots=pivots)


def _pivot(tab: list[list[Fraction]], obj: list[Fraction], r: int, col: int) -> None:
    prow = tab[r]
    p = prow[col]
    if p != 1:
        prow[:] = [v / p for v in prow]
    nz = [j for j, v in enumerate(prow) if v]
    for i, row in enumerate(tab):
        if i != r:
            f = row[col]
            if f:
                for j in nz:
                    row[j] -= f * prow[j]
    f = obj[col]
    if f:
        for j in nz:
            obj[j] -= f * prow[j]
