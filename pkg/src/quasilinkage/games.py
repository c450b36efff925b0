"""Quasilinkages (constant-sum simple games) and the operations on them.

A quasilinkage on [n] is a family of *short* subsets that contains every
singleton, is closed under taking subsets, and contains exactly one set of
every complementary pair.  It is stored by its maximal short sets.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import Violation
from .subsets import (
    check_n,
    complement,
    elements,
    from_elements,
    full_mask,
    is_subset,
    lex_key,
    popcount,
    singleton,
    submasks,
)

MAX_SYMMETRY_N = 8


def _as_mask(x) -> int:
    if isinstance(x, int):
        return x
    return from_elements(x)


def closure_table(n: int, generators: Iterable[int]) -> bytearray:
    """Indicator table (length 2**n) of the downward closure of ``generators``."""
    table = bytearray(1 << n)
    for g in generators:
        table[g] = 1
    # sum-over-supersets sweep: a set is marked if some superset is a generator
    for b in range(n):
        bit = 1 << b
        for s in range(1 << n):
            if s & bit and table[s]:
                table[s ^ bit] = 1
    return table


def maximal_from_table(n: int, table: Sequence[int]) -> tuple[int, ...]:
    """Inclusion-maximal marked sets of a downward-closed indicator table."""
    out = []
    for s in range(1 << n):
        if not table[s]:
            continue
        for b in range(n):
            bit = 1 << b
            if not s & bit and table[s | bit]:
                break
        else:
            out.append(s)
    return tuple(out)


@dataclass(frozen=True)
class Quasilinkage:
    """A constant-sum simple game on [n] given by its maximal short sets.

    Instances built through :func:`validate` satisfy all three axioms.  The
    class itself also carries the degenerate "dictator" games in which one
    singleton is long (see :func:`apex`); :attr:`is_proper` tells them apart.
    """

    n: int
    maximal_short: tuple[int, ...]

    def __post_init__(self):
        check_n(self.n)
        object.__setattr__(self, "maximal_short", tuple(sorted(set(self.maximal_short))))

    @classmethod
    def from_short_family(cls, n: int, sets: Iterable) -> "Quasilinkage":
        """Game whose short family is the downward closure of ``sets`` (unchecked)."""
        table = closure_table(n, (_as_mask(s) for s in sets))
        return cls(n, maximal_from_table(n, table))

    @cached_property
    def short_table(self) -> bytearray:
        return closure_table(self.n, self.maximal_short)

    @property
    def full(self) -> int:
        return full_mask(self.n)

    def is_short(self, s: int) -> bool:
        return bool(self.short_table[s])

    def is_long(self, s: int) -> bool:
        return not self.short_table[s]

    def short_sets(self) -> list[int]:
        t = self.short_table
        return [s for s in range(1 << self.n) if t[s]]

    def count_short(self) -> int:
        return sum(self.short_table)

    @property
    def is_proper(self) -> bool:
        """True when every singleton is short."""
        t = self.short_table
        return all(t[1 << b] for b in range(self.n))

    def key(self) -> tuple[int, ...]:
        return self.maximal_short

    def to_json(self) -> dict:
        return game_to_json(self)

    def __repr__(self) -> str:
        sets = " ".join("".join(map(str, elements(m))) for m in self.maximal_short)
        return f"Quasilinkage(n={self.n}, maximal_short=[{sets}])"


def is_short(game: Quasilinkage, s) -> bool:
    return game.is_short(_as_mask(s))


def validate(
    n: int,
    family: Iterable,
    *,
    closed: bool = False,
    require_singletons: bool = True,
) -> Quasilinkage:
    """Check the quasilinkage axioms and return the canonical game.

    ``family`` lists subsets as bitmasks or as iterables of 1-based elements.
    With ``closed=False`` it is read as generators and closed downward, so
    monotonicity holds by construction.  With ``closed=True`` it must already
    be the complete short family and monotonicity is checked.

    Raises :class:`Violation` with kind ``MissingSingleton``,
    ``NotMonotone`` or ``ComplementClash``.
    """
    check_n(n)
    full = full_mask(n)
    masks = [_as_mask(s) for s in family]
    for s in masks:
        if s & ~full:
            raise Violation("OutOfRange", [elements(s)], f"set {elements(s)} exceeds [{n}]")
    if closed:
        present = set(masks)
        for s in sorted(present):
            for i in elements(s):
                t = s & ~singleton(i)
                if t not in present:
                    raise Violation(
                        "NotMonotone",
                        [elements(s), elements(t)],
                        f"{elements(s)} is short but its subset {elements(t)} is not",
                    )
        table = bytearray(1 << n)
        for s in present:
            table[s] = 1
    else:
        table = closure_table(n, masks)
    if require_singletons:
        for i in range(1, n + 1):
            if not table[singleton(i)]:
                raise Violation("MissingSingleton", [i], f"singleton {{{i}}} is not short")
    for s in range(1 << n):
        c = full ^ s
        if s < c and table[s] == table[c]:
            status = "short" if table[s] else "long"
            raise Violation(
                "ComplementClash",
                [elements(s), elements(c)],
                f"{elements(s)} and its complement are both {status}",
            )
    return Quasilinkage(n, maximal_from_table(n, table))


def check_axioms(game: Quasilinkage, require_singletons: bool = True) -> None:
    """Re-run :func:`validate` on an existing game; raises on failure."""
    validate(game.n, game.maximal_short, require_singletons=require_singletons)


def game_to_json(game: Quasilinkage) -> dict:
    return {
        "n": game.n,
        "maximal_short": sorted(elements(m) for m in game.maximal_short),
    }


def game_from_json(data: dict, *, require_singletons: bool = True) -> Quasilinkage:
    return validate(
        int(data["n"]), data["maximal_short"], require_singletons=require_singletons
    )


def apex(n: int) -> Quasilinkage:
    """The game in which a set is long iff it contains 1.

    Realized by (1, e, ..., e) for small e.  Here {1} is long, so this is a
    constant-sum game but not a proper quasilinkage.
    """
    check_n(n)
    return Quasilinkage(n, (full_mask(n) ^ 1,))


def near_apex(n: int) -> Quasilinkage:
    """The unique proper quasilinkage one flip away from :func:`apex`.

    Short sets are {1} and every proper subset of [n] minus 1; realized by
    (n - 2, 1, ..., 1).
    """
    check_n(n)
    rest = full_mask(n) ^ 1
    maximal = [1] + [rest ^ (1 << b) for b in range(1, n)]
    return Quasilinkage(n, maximal)


def threshold_game(n: int) -> Quasilinkage:
    """Equilateral game for odd n: a set is short iff it has fewer than n/2 elements."""
    if n % 2 == 0:
        raise ValueError("the equal-length game is generic only for odd n")
    k = n // 2
    return Quasilinkage(n, [from_elements(c) for c in itertools.combinations(range(1, n + 1), k)])


# flips


def flip(game: Quasilinkage, t) -> Quasilinkage:
    """Make the maximal short set ``t`` long and its complement short.

    Flipping a singleton yields a dictator game (not proper); every other
    flip of a proper quasilinkage is proper.
    """
    t = _as_mask(t)
    if t not in game.maximal_short:
        raise Violation("NotMaximalShort", [elements(t)], f"{elements(t)} is not a maximal short set")
    ct = complement(game.n, t)
    new = [m for m in game.maximal_short if m != t and not is_subset(m, ct)]
    new.append(ct)
    rest = t
    while rest:
        low = rest & -rest
        rest ^= low
        s = t ^ low
        if s and not any(is_subset(s, m) for m in new):
            new.append(s)
    return Quasilinkage(game.n, new)


def flip_path_to_apex(game: Quasilinkage) -> list[int]:
    """Flips turning ``game`` into :func:`apex`; each flips a maximal short set containing 1."""
    path = []
    g = game
    while True:
        with_one = [m for m in g.maximal_short if m & 1]
        if not with_one:
            return path
        t = with_one[0]
        path.append(t)
        g = flip(g, t)


def proper_flips(game: Quasilinkage) -> list[int]:
    """Maximal short sets whose flip stays inside proper quasilinkages."""
    return [m for m in game.maximal_short if popcount(m) > 1]


# freezing


def freeze(game: Quasilinkage, blocks: Sequence) -> Quasilinkage:
    """Collapse each block of a short partition to one element of [k].

    Block ``i`` (0-based in ``blocks``) becomes element ``i + 1``.
    """
    masks = [_as_mask(b) for b in blocks]
    k = len(masks)
    seen = 0
    for b in masks:
        if b == 0 or b & seen:
            raise Violation("BadPartition", [elements(x) for x in masks], "blocks must be nonempty and disjoint")
        seen |= b
    if seen != game.full:
        raise Violation("BadPartition", [elements(x) for x in masks], "blocks must cover [n]")
    if k < 3:
        raise Violation("BadPartition", [elements(x) for x in masks], "need at least three blocks")
    for b in masks:
        if not game.is_short(b):
            raise Violation("BlockNotShort", [elements(b)], f"block {elements(b)} is long")
    union = [0] * (1 << k)
    for j in range(1, 1 << k):
        low = j & -j
        union[j] = union[j ^ low] | masks[low.bit_length() - 1]
    t = game.short_table
    return validate(k, [j for j in range(1 << k) if t[union[j]]], closed=True)


def long_triangle(game: Quasilinkage) -> tuple[int, int, int] | None:
    """Three elements that are pairwise long together, or None.

    Such a triple splits M(F) into two mirror-image components, as for the
    triangle; without one M(F) is connected (checked exhaustively for n <= 6).
    """
    n = game.n
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if game.is_short((1 << (a - 1)) | (1 << (b - 1))):
                continue
            for c in range(b + 1, n + 1):
                bc = (1 << (b - 1)) | (1 << (c - 1))
                ac = (1 << (a - 1)) | (1 << (c - 1))
                if game.is_long(bc) and game.is_long(ac):
                    return a, b, c
    return None


# conflict-free families


@dataclass(frozen=True)
class ConflictFreeFamily:
    """Partial short-set data: a list of subsets declared short."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        check_n(self.n)
        object.__setattr__(self, "members", tuple(_as_mask(m) for m in self.members))


def conflict_witness(family: ConflictFreeFamily) -> tuple[int, int] | None:
    """A pair (T, S) of members with [n] minus T inside S, or None."""
    for t in family.members:
        ct = complement(family.n, t)
        for s in family.members:
            if is_subset(ct, s):
                return t, s
    return None


def is_conflict_free(family: ConflictFreeFamily) -> bool:
    return conflict_witness(family) is None


def _known_table(family: ConflictFreeFamily) -> bytearray:
    table = closure_table(family.n, family.members)
    table[0] = 1  # the empty set is short in every quasilinkage
    return table


def unknown_subsets(family: ConflictFreeFamily) -> list[int]:
    """Subsets S such that neither S nor its complement lies inside a member."""
    t = _known_table(family)
    full = full_mask(family.n)
    return [s for s in range(1 << family.n) if not t[s] and not t[full ^ s]]


def extend(family: ConflictFreeFamily) -> Quasilinkage:
    """Extend a conflict-free family to a quasilinkage.

    Unknown subsets are adjoined smallest cardinality first, ties broken
    lexicographically.  Adjoining only removes unknowns, so one ordered pass
    reproduces the repeat-until-none procedure.
    """
    w = conflict_witness(family)
    if w is not None:
        raise Violation("NotConflictFree", [elements(w[0]), elements(w[1])])
    n = family.n
    full = full_mask(n)
    table = _known_table(family)
    for s in sorted(range(1 << n), key=lex_key):
        if table[s] or table[full ^ s]:
            continue
        for sub in submasks(s):
            table[sub] = 1
    return validate(n, maximal_from_table(n, table))


# comparability


class ComparabilityWitness(NamedTuple):
    """A and B avoid i, j; A+i long, A+j short, B+i short, B+j long."""

    a: int
    b: int
    i: int
    j: int

    def to_json(self) -> dict:
        return {
            "kind": "Incomparable",
            "witness": [elements(self.a), elements(self.b), self.i, self.j],
        }


def comparability_witness(
    game: Quasilinkage, pair: tuple[int, int] | None = None
) -> ComparabilityWitness | None:
    """First violation of the comparability property, or None.

    If ``pair`` is given only that ordered pair (i, j) is examined.
    """
    n = game.n
    t = game.short_table
    pairs = [pair] if pair is not None else itertools.combinations(range(1, n + 1), 2)
    for i, j in pairs:
        bi, bj = singleton(i), singleton(j)
        rest = full_mask(n) & ~(bi | bj)
        i_longer = j_longer = None
        for a in submasks(rest):
            si, sj = t[a | bi], t[a | bj]
            if i_longer is None and not si and sj:
                i_longer = a
            elif j_longer is None and si and not sj:
                j_longer = a
            if i_longer is not None and j_longer is not None:
                return ComparabilityWitness(i_longer, j_longer, i, j)
    return None


def check_comparability(game: Quasilinkage) -> bool:
    return comparability_witness(game) is None


def verify_comparability_witness(game: Quasilinkage, w: ComparabilityWitness) -> bool:
    bi, bj = singleton(w.i), singleton(w.j)
    if (w.a | w.b) & (bi | bj) or w.i == w.j:
        return False
    return (
        game.is_long(w.a | bi)
        and game.is_short(w.a | bj)
        and game.is_short(w.b | bi)
        and game.is_long(w.b | bj)
    )


# symmetry


def permute_mask(perm: Sequence[int], s: int) -> int:
    """Image of ``s`` under ``perm`` where ``perm[i - 1]`` is the image of i."""
    out = 0
    for i in elements(s):
        out |= singleton(perm[i - 1])
    return out


def relabel(game: Quasilinkage, perm: Sequence[int]) -> Quasilinkage:
    return Quasilinkage(game.n, [permute_mask(perm, m) for m in game.maximal_short])


def _element_profile(game: Quasilinkage, i: int) -> tuple[int, ...]:
    counts = [0] * (game.n + 1)
    bit = singleton(i)
    for s in game.short_sets():
        if s & bit:
            counts[popcount(s)] += 1
    return tuple(counts)


def automorphism_group(game: Quasilinkage) -> list[tuple[int, ...]]:
    """All permutations of [n] mapping short sets onto short sets (n <= 8)."""
    n = game.n
    if n > MAX_SYMMETRY_N:
        raise ValueError(f"exhaustive symmetry search is limited to n <= {MAX_SYMMETRY_N}")
    profile = [_element_profile(game, i) for i in range(1, n + 1)]
    maximal = set(game.maximal_short)
    out = []
    image = [0] * n
    used = [False] * (n + 1)

    def search(i: int) -> None:
        if i == n:
            if all(permute_mask(image, m) in maximal for m in game.maximal_short):
                out.append(tuple(image))
            return
        for j in range(1, n + 1):
            if not used[j] and profile[j - 1] == profile[i]:
                used[j] = True
                image[i] = j
                search(i + 1)
                used[j] = False

    search(0)
    return out


def is_symmetric(game: Quasilinkage) -> bool:
    """True iff the automorphism group is transitive on [n]."""
    orbit = {perm[0] for perm in automorphism_group(game)}
    return len(orbit) == game.n


def symmetric_counting_obstruction(n: int) -> bool:
    """True when counting alone rules out a symmetric quasilinkage on [n].

    Exactly half of the n/2-element sets are short; a transitive symmetry
    would spread their element incidences evenly over [n].
    """
    if n % 2:
        raise Violation("OddN", [n], "the counting obstruction is defined for even n")
    incidences = math.comb(n, n // 2) // 2 * (n // 2)
    return incidences % n != 0
