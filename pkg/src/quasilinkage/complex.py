"""Cell complexes labeled by admissible cyclically ordered partitions.

A cyclic partition is stored as a tuple of bitmask blocks rotated so the
block containing element 1 comes first.  Reflections are not identified.

Two variants share the same labels:

* ``moduli``: a label with m blocks is an (n - m)-cell; its boundary cells
  carry finer labels (one block split into two consecutive blocks).
* ``stable``: a label with m blocks is an (m - 3)-cell; its boundary cells
  carry coarser labels (two consecutive blocks merged).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import Violation
from .games import Quasilinkage, flip
from .subsets import complement, elements, from_elements, full_mask, is_subset, submasks

Label = tuple[int, ...]


class Cell(NamedTuple):
    label: Label
    dim: int


def canonical(blocks: Sequence[int]) -> Label:
    """Rotate a cyclic block sequence so the block containing 1 is first."""
    for k, b in enumerate(blocks):
        if b & 1:
            return tuple(blocks[k:]) + tuple(blocks[:k])
    raise ValueError("no block contains element 1")


def cyclic_partition(n: int, blocks: Iterable) -> Label:
    """Canonical label from blocks given as masks or element lists."""
    masks = [b if isinstance(b, int) else from_elements(b) for b in blocks]
    seen = 0
    for b in masks:
        if b == 0 or b & seen:
            raise ValueError("blocks must be nonempty and disjoint")
        seen |= b
    if seen != full_mask(n):
        raise ValueError(f"blocks must cover [{n}]")
    return canonical(masks)


def label_to_json(label: Label) -> list[list[int]]:
    return [elements(b) for b in label]


def is_admissible(game: Quasilinkage, label: Sequence[int]) -> bool:
    return all(game.is_short(b) for b in label)


def refines(fine: Sequence[int], coarse: Sequence[int]) -> bool:
    """True iff some rotation of ``fine`` groups into consecutive runs giving ``coarse``."""
    fine = tuple(fine)
    coarse = canonical(coarse)
    k = len(fine)
    if k < len(coarse):
        return False
    for r in range(k):
        rot = fine[r:] + fine[:r]
        j = 0
        acc = 0
        ok = True
        for b in rot:
            if j >= len(coarse) or not is_subset(b, coarse[j]):
                ok = False
                break
            acc |= b
            if acc == coarse[j]:
                j += 1
                acc = 0
        if ok and j == len(coarse) and acc == 0:
            return True
    return False


def admissible_partitions(game: Quasilinkage) -> list[Label]:
    """Every admissible cyclic partition of [n], canonical and sorted."""
    t = game.short_table
    full = game.full
    out: list[Label] = []

    def extend(prefix: list[int], rest: int) -> None:
        if rest == 0:
            if len(prefix) >= 2:
                out.append(tuple(prefix))
            return
        for b in submasks(rest):
            if b and t[b]:
                prefix.append(b)
                extend(prefix, rest ^ b)
                prefix.pop()

    for first in submasks(full):
        if first & 1 and t[first] and first != full:
            extend([first], full ^ first)
    out.sort(key=lambda lab: (-len(lab), lab))
    return out


def splits(label: Label) -> list[Label]:
    """Labels obtained by splitting one block into two consecutive nonempty blocks."""
    out = []
    m = len(label)
    for k in range(m):
        b = label[k]
        for x in submasks(b, proper=True):
            if x == 0:
                continue
            new = label[:k] + (x, b ^ x) + label[k + 1:]
            out.append(canonical(new) if k == 0 else new)
    return out


def merges(game: Quasilinkage, label: Label) -> list[Label]:
    """Labels obtained by merging two cyclically consecutive blocks into a short block."""
    out = []
    m = len(label)
    for k in range(m):
        nxt = (k + 1) % m
        u = label[k] | label[nxt]
        if not game.is_short(u):
            continue
        if nxt == 0:
            new = (u,) + label[1:k]
        else:
            new = label[:k] + (u,) + label[k + 2:]
        out.append(canonical(new))
    return out


@dataclass
class CellComplex:
    """Graded cells with covering incidence stored in both directions.

    ``faces[i]`` lists the codimension-one faces of cell ``i`` and
    ``cofaces[i]`` the cells having ``i`` as such a face.  Cells are sorted
    by dimension, then by label.
    """

    n: int
    variant: str
    labels: list[Label]
    dims: list[int]
    faces: list[tuple[int, ...]]
    cofaces: list[tuple[int, ...]] = field(default_factory=list)

    def __post_init__(self):
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        if not self.cofaces:
            up: list[list[int]] = [[] for _ in self.labels]
            for i, fs in enumerate(self.faces):
                for f in fs:
                    up[f].append(i)
            self.cofaces = [tuple(sorted(u)) for u in up]

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def dimension(self) -> int:
        return max(self.dims) if self.dims else -1

    def cells(self) -> list[Cell]:
        return [Cell(lab, d) for lab, d in zip(self.labels, self.dims)]

    def cells_of_dim(self, k: int) -> list[int]:
        return [i for i, d in enumerate(self.dims) if d == k]

    def f_vector(self) -> list[int]:
        f = [0] * (self.dimension + 1)
        for d in self.dims:
            f[d] += 1
        return f

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.f_vector()))

    def below(self, i: int) -> set[int]:
        """All faces of cell ``i`` (transitive), excluding ``i``."""
        seen: set[int] = set()
        stack = list(self.faces[i])
        while stack:
            c = stack.pop()
            if c not in seen:
                seen.add(c)
                stack.extend(self.faces[c])
        return seen

    def above(self, i: int) -> set[int]:
        """All cells having ``i`` as a face (transitive), excluding ``i``."""
        seen: set[int] = set()
        stack = list(self.cofaces[i])
        while stack:
            c = stack.pop()
            if c not in seen:
                seen.add(c)
                stack.extend(self.cofaces[c])
        return seen

    def leq(self, a: int, b: int) -> bool:
        return a == b or a in self.below(b)

    def incidence_pairs(self) -> list[tuple[int, int]]:
        return [(f, i) for i, fs in enumerate(self.faces) for f in fs]

    def is_connected(self) -> bool:
        if not self.labels:
            return True
        seen = {0}
        stack = [0]
        while stack:
            c = stack.pop()
            for d in self.faces[c] + self.cofaces[c]:
                if d not in seen:
                    seen.add(d)
                    stack.append(d)
        return len(seen) == len(self.labels)

    def to_json(self, emit: str = "full") -> dict:
        out = {
            "n": self.n,
            "variant": self.variant,
            "dimension": self.dimension,
            "f_vector": self.f_vector(),
            "euler_characteristic": self.euler_characteristic(),
        }
        if emit == "full":
            out["cells"] = [
                {"label": label_to_json(lab), "dim": d} for lab, d in zip(self.labels, self.dims)
            ]
            out["incidence"] = [list(p) for p in self.incidence_pairs()]
        return out


def _assemble(n: int, variant: str, labels: list[Label], dim_of, neighbors) -> CellComplex:
    order = sorted(labels, key=lambda lab: (dim_of(lab), lab))
    index = {lab: i for i, lab in enumerate(order)}
    faces = []
    for lab in order:
        fs = sorted({index[x] for x in neighbors(lab) if x in index})
        faces.append(tuple(fs))
    return CellComplex(n, variant, order, [dim_of(lab) for lab in order], faces)


def build_moduli_complex(game: Quasilinkage) -> CellComplex:
    n = game.n
    return _assemble(n, "moduli", admissible_partitions(game), lambda lab: n - len(lab), splits)


def build_stable_complex(game: Quasilinkage) -> CellComplex:
    return _assemble(
        game.n,
        "stable",
        admissible_partitions(game),
        lambda lab: len(lab) - 3,
        lambda lab: merges(game, lab),
    )


def f_vector(cx: CellComplex) -> list[int]:
    return cx.f_vector()


def euler_characteristic(cx: CellComplex) -> int:
    return cx.euler_characteristic()


def diamond_violations(cx: CellComplex, augmented: bool = True) -> list[tuple[int, int, int]]:
    """Intervals of length two whose middle does not have exactly two elements.

    Returns (top, bottom, middle count) triples.  With ``augmented`` the empty
    cell is adjoined below the 0-cells, so every 1-cell must have exactly two
    vertices.
    """
    bad = []
    for top in range(len(cx)):
        counts: dict[int, int] = {}
        for f in cx.faces[top]:
            for g in cx.faces[f]:
                counts[g] = counts.get(g, 0) + 1
        for g, c in counts.items():
            if c != 2:
                bad.append((top, g, c))
        if augmented and cx.dims[top] == 1 and len(cx.faces[top]) != 2:
            bad.append((top, -1, len(cx.faces[top])))
    return bad


def is_anti_isomorphic(a: CellComplex, b: CellComplex) -> bool:
    """Identity on labels reverses the covering relation between ``a`` and ``b``."""
    if set(a.labels) != set(b.labels):
        return False
    cover_a = {(a.labels[f], a.labels[i]) for f, i in a.incidence_pairs()}
    cover_b = {(b.labels[i], b.labels[f]) for f, i in b.incidence_pairs()}
    return cover_a == cover_b


def flip_cell_diff(game: Quasilinkage, t) -> tuple[list[Cell], list[Cell]]:
    """Cells removed from and added to the moduli complex by flipping ``t``.

    Removed cells are those with ``t`` as a block; added cells are the cells
    of the flipped complex with the complement of ``t`` as a block.
    """
    t = t if isinstance(t, int) else from_elements(t)
    flipped = flip(game, t)  # raises NotMaximalShort
    n = game.n
    ct = complement(n, t)
    deleted = [Cell(lab, n - len(lab)) for lab in admissible_partitions(game) if t in lab]
    added = [Cell(lab, n - len(lab)) for lab in admissible_partitions(flipped) if ct in lab]
    return deleted, added


def ordered_partition_count(size: int, parts: int) -> int:
    """Number of ordered set partitions of a ``size``-set into ``parts`` blocks."""
    from math import comb

    return sum((-1) ** j * comb(parts, j) * (parts - j) ** size for j in range(parts + 1))


def vertex_label(order: Sequence[int]) -> Label:
    """Label of the 0-cell given by a cyclic order of [n]."""
    return canonical([1 << (e - 1) for e in order])


def vertex_order(label: Label) -> tuple[int, ...]:
    """Cyclic order of [n] for an all-singleton label."""
    if any(b & (b - 1) for b in label):
        raise Violation("NotAVertex", [label_to_json(label)])
    return tuple(b.bit_length() for b in label)
