"""Bitmask helpers for subsets of the ground set [n].

A subset is a plain ``int``: element ``i`` (1-based) lives at bit ``i - 1``.
Canonical order of subsets is integer order of the masks.
"""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_N = 16


def check_n(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"ground-set size must be in 1..{MAX_N}, got {n}")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def complement(n: int, s: int) -> int:
    return full_mask(n) ^ s


def singleton(i: int) -> int:
    return 1 << (i - 1)


def from_elements(elements: Iterable[int]) -> int:
    mask = 0
    for i in elements:
        mask |= 1 << (i - 1)
    return mask


def elements(s: int) -> list[int]:
    """1-based elements of ``s`` in ascending order."""
    out = []
    i = 1
    while s:
        if s & 1:
            out.append(i)
        s >>= 1
        i += 1
    return out


def popcount(s: int) -> int:
    return bin(s).count("1")


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def submasks(s: int, proper: bool = False) -> Iterator[int]:
    """All submasks of ``s`` (including 0), largest first."""
    sub = s
    if proper:
        if s == 0:
            return
        sub = (s - 1) & s
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & s


def lex_key(s: int) -> tuple[int, tuple[int, ...]]:
    """Sort key: cardinality first, then lexicographic on sorted elements."""
    el = elements(s)
    return len(el), tuple(el)


def fmt(s: int) -> str:
    return "{" + ",".join(str(i) for i in elements(s)) + "}"
