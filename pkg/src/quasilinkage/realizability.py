"""Length vectors, weighted realizability, and per-vertex length vectors."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import exact_lp
from .errors import Violation
from .games import Quasilinkage, maximal_from_table
from .subsets import elements


def as_lengths(values) -> tuple[Fraction, ...]:
    """Exact positive rationals from ints, Fractions or "p/q" strings."""
    out = tuple(Fraction(v) for v in values)
    if not out:
        raise ValueError("empty length vector")
    if any(v <= 0 for v in out):
        raise ValueError("lengths must be positive")
    return out


def parse_lengths(text: str) -> tuple[Fraction, ...]:
    return as_lengths(part.strip() for part in text.split(","))


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def integer_representative(lengths: Sequence[Fraction]) -> tuple[int, ...]:
    """Smallest positive integer vector proportional to ``lengths``."""
    den = 1
    for v in lengths:
        den = den * v.denominator // math.gcd(den, v.denominator)
    ints = [int(v * den) for v in lengths]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return tuple(v // g for v in ints)


def _doubled_sums(lengths: Sequence[Fraction]) -> tuple[list[int], int]:
    """Subset sums in common-denominator integer units, plus the total."""
    ints = integer_representative(lengths)
    n = len(ints)
    sums = [0] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        sums[s] = sums[s ^ low] + ints[low.bit_length() - 1]
    return sums, sums[-1]


def is_generic(lengths) -> bool:
    """No subset has exactly half the total length."""
    lengths = as_lengths(lengths)
    sums, total = _doubled_sums(lengths)
    return all(2 * v != total for v in sums)


def short_sets(lengths) -> Quasilinkage:
    """The game of sets shorter than their complement."""
    lengths = as_lengths(lengths)
    sums, total = _doubled_sums(lengths)
    n = len(lengths)
    for s, v in enumerate(sums):
        if 2 * v == total:
            raise Violation("NotGeneric", [elements(s)], f"{elements(s)} has exactly half the length")
    table = bytearray(2 * v < total for v in sums)
    return Quasilinkage(n, maximal_from_table(n, table))


@dataclass(frozen=True)
class RealizationResult:
    """Either a realizing length vector or a Farkas-type certificate.

    ``certificate`` maps each maximal short set M to a nonnegative integer
    weight w_M, not all zero, such that for every element j the weighted
    count of sets M containing j is at least the weighted count of sets M
    avoiding j.  Summing the strict inequalities  sum_M l < sum_(not M) l
    with these weights then contradicts positivity of the lengths.
    """

    lengths: tuple[int, ...] | None = None
    certificate: tuple[tuple[int, int], ...] | None = None
    slack: Fraction = Fraction(0)

    @property
    def real(self) -> bool:
        return self.lengths is not None

    def to_json(self) -> dict:
        if self.real:
            return {"real": True, "lengths": [str(v) for v in self.lengths]}
        return {
            "real": False,
            "certificate": [
                {"set": elements(m), "weight": w} for m, w in self.certificate
            ],
        }


def _lp_rows(game: Quasilinkage) -> tuple[list[list[Fraction]], list[Fraction]]:
    n = game.n
    half = Fraction(1, 2)
    rows, rhs = [], []
    # variables: l_1..l_n, delta (all >= 0)
    for i in range(n):
        r = [Fraction(0)] * (n + 1)
        r[i] = Fraction(-1)
        r[n] = Fraction(1)
        rows.append(r)
        rhs.append(Fraction(0))
    for m in game.maximal_short:
        r = [(Fraction(1) if m >> i & 1 else Fraction(0)) - half for i in range(n)]
        r.append(Fraction(1))
        rows.append(r)
        rhs.append(Fraction(0))
    rows.append([Fraction(1)] * n + [Fraction(0)])
    rhs.append(Fraction(1))
    return rows, rhs


def realize(game: Quasilinkage) -> RealizationResult:
    """Decide weightedness exactly via a slack-maximizing LP.

    maximize d  s.t.  l_i >= d,  sum_M l <= (sum l)/2 - d for maximal short M,
    sum l <= 1,  l, d >= 0.  The optimum is positive iff the game is real.
    """
    n = game.n
    rows, rhs = _lp_rows(game)
    c = [Fraction(0)] * n + [Fraction(1)]
    sol = exact_lp.maximize(c, rows, rhs)
    if sol.value > 0:
        lengths = integer_representative(sol.x[:n])
        if short_sets(lengths) != game:
            raise AssertionError("LP realization does not reproduce the game")
        return RealizationResult(lengths=lengths, slack=sol.value)
    weights = sol.duals[n:n + len(game.maximal_short)]
    cert = _primitive_certificate(game.maximal_short, weights)
    if not verify_certificate(game, cert):
        raise AssertionError("dual certificate failed verification")
    return RealizationResult(certificate=cert)


def _primitive_certificate(maximal, weights) -> tuple[tuple[int, int], ...]:
    den = 1
    for w in weights:
        den = den * w.denominator // math.gcd(den, w.denominator)
    ints = [int(w * den) for w in weights]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    g = g or 1
    return tuple((m, v // g) for m, v in zip(maximal, ints) if v)


def verify_certificate(game: Quasilinkage, cert) -> bool:
    """Independent check of a non-realizability certificate."""
    if not cert or any(w <= 0 for _, w in cert):
        return False
    short = set(game.maximal_short)
    if any(m not in short for m, _ in cert):
        return False
    for j in range(game.n):
        balance = sum(w if m >> j & 1 else -w for m, w in cert)
        if balance < 0:
            return False
    return True


def longest_element(lengths: Sequence) -> int:
    """1-based argmax, ties to the smallest index."""
    best = max(lengths)
    return next(i + 1 for i, v in enumerate(lengths) if v == best)


# per-vertex length vectors


def _segment_mask(order: Sequence[int], start: int, length: int) -> int:
    n = len(order)
    m = 0
    for k in range(length):
        m |= 1 << (order[(start + k) % n] - 1)
    return m


def separator_targets(game: Quasilinkage, order: Sequence[int]) -> list[int]:
    """q(s) for each separator position s (0-based start of the broken line).

    q(s) is the element whose adjunction first makes the growing segment long.
    """
    n = game.n
    out = []
    for s in range(n):
        seg = 0
        for k in range(n):
            e = order[(s + k) % n]
            seg |= 1 << (e - 1)
            if game.is_long(seg):
                out.append(e)
                break
        else:
            raise AssertionError("[n] should be long")
    return out


def cyclic_segments(order: Sequence[int]) -> list[int]:
    """All proper nonempty cyclic segments of ``order`` as masks."""
    n = len(order)
    segs = set()
    for start in range(n):
        for length in range(1, n):
            segs.add(_segment_mask(order, start, length))
    return sorted(segs)


def vertex_length_vector(game: Quasilinkage, order: Sequence[int]) -> tuple[int, ...]:
    """Lengths l_j = 1 + |q^-1(j)| matching the game on every segment of ``order``.

    The total is always 2n and a segment is short iff its length is below n;
    both are checked before returning.
    """
    n = game.n
    order = tuple(order)
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError("vertex must be a cyclic order of [n]")
    for e in order:
        if game.is_long(1 << (e - 1)):
            raise Violation("MissingSingleton", [e])
    lengths = [1] * n
    for e in separator_targets(game, order):
        lengths[e - 1] += 1
    lengths = tuple(lengths)
    if sum(lengths) != 2 * n:
        raise AssertionError("vertex length vector must sum to 2n")
    bad = segment_mismatches(game, order, lengths)
    if bad:
        raise AssertionError(f"segment status mismatch on {[elements(s) for s in bad]}")
    return lengths


def segment_mismatches(game: Quasilinkage, order: Sequence[int], lengths: Sequence) -> list[int]:
    total = sum(lengths)
    bad = []
    for seg in cyclic_segments(order):
        length = sum(lengths[i - 1] for i in elements(seg))
        if game.is_short(seg) != (2 * length < total):
            bad.append(seg)
    return bad


def normalized(lengths: Sequence) -> tuple[Fraction, ...]:
    total = sum(Fraction(v) for v in lengths)
    return tuple(Fraction(v) / total for v in lengths)


def wall_point(game: Quasilinkage, t: int, other_lengths: Sequence) -> tuple[Fraction, ...]:
    """Point on the wall of ``t`` between realizations of ``game`` and its flip.

    ``other_lengths`` realizes the flipped game.  The returned vector is the
    crossing of the segment between the two (normalized) realizations with the
    wall sum_t = sum_(not t); no other wall vanishes there when the two
    chambers are adjacent.
    """
    res = realize(game)
    if not res.real:
        raise ValueError("game is not real")
    a = normalized(res.lengths)
    b = normalized(other_lengths)
    n = game.n

    def excess(v):
        return sum(v[i] if t >> i & 1 else -v[i] for i in range(n))

    ea, eb = excess(a), excess(b)
    if not (ea < 0 < eb):
        raise ValueError("realizations are not on opposite sides of the wall")
    lam = ea / (ea - eb)
    return tuple(a[i] + lam * (b[i] - a[i]) for i in range(n))


def walls_through(lengths: Sequence) -> list[int]:
    """Subsets S containing element 1 whose wall contains ``lengths``."""
    sums, total = _doubled_sums(as_lengths(lengths))
    return [s for s in range(1 << len(lengths)) if s & 1 and 2 * sums[s] == total]

