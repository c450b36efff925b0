"""Named games used throughout the tests, demos and CLI."""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from importlib import resources

from .games import Quasilinkage, apex, flip, game_from_json, threshold_game, validate
from .realizability import short_sets
from .subsets import from_elements

EXAMPLE6_SHORT_TRIPLES = ["123", "124", "135", "146", "156", "236", "245", "256", "345", "346"]
FANO_LINES = ["123", "145", "167", "257", "246", "347", "356"]
FLIP_LENGTHS = (Fraction(11, 10),) * 3 + (Fraction(1),) * 3
FLIP_SET = from_elements([4, 5, 6])


def _sets(codes):
    return [[int(ch) for ch in code] for code in codes]


def example6() -> Quasilinkage:
    """n = 6: all pairs short plus ten short triples (6-vertex RP^2)."""
    return validate(6, _sets(EXAMPLE6_SHORT_TRIPLES))


def example7() -> Quasilinkage:
    """n = 7: all pairs short; the long triples are the lines of the Fano plane."""
    lines = {frozenset(s) for s in _sets(FANO_LINES)}
    short = [c for c in itertools.combinations(range(1, 8), 3) if frozenset(c) not in lines]
    short += [sorted(set(range(1, 8)) - line) for line in lines]
    return validate(7, short)


def pentagon() -> Quasilinkage:
    return threshold_game(5)


def flip_base() -> Quasilinkage:
    return short_sets(FLIP_LENGTHS)


def paper_flip_n6() -> Quasilinkage:
    """Flip of {4,5,6} in the game of (1+e, 1+e, 1+e, 1, 1, 1), e = 1/10."""
    return flip(flip_base(), FLIP_SET)


def circle_n4() -> Quasilinkage:
    return short_sets([2, 1, 1, 1])


BUILDERS = {
    "example6": example6,
    "example7": example7,
    "pentagon": pentagon,
    "paper_flip_n6": paper_flip_n6,
    "apex_6": lambda: apex(6),
}


def load(name: str) -> Quasilinkage:
    """Read a shipped fixture file by name (without the .json suffix)."""
    text = resources.files("quasilinkage.data").joinpath(f"{name}.json").read_text()
    return game_from_json(json.loads(text), require_singletons=False)


def all_fixtures() -> dict[str, Quasilinkage]:
    return {name: build() for name, build in BUILDERS.items()}
