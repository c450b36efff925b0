"""Circular Gale diagrams of vertex length vectors and star duality.

For a vertex v (a cyclic order of [n]) the vertex length vector is laid out
as arcs on a circle of circumference 1.  Cut point k sits between the arcs of
``v[k]`` and ``v[k + 1]``.  A set I of cut points spans a face of the polytope
K(F, v) iff every gap between cyclically consecutive points outside I is
shorter than 1/2.  All comparisons are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .complex import CellComplex, build_moduli_complex, vertex_label
from .errors import Violation
from .games import Quasilinkage
from .realizability import vertex_length_vector

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ArcDiagram:
    order: tuple[int, ...]
    arcs: tuple[Fraction, ...]

    @property
    def cuts(self) -> tuple[Fraction, ...]:
        """u_0 = 0 < u_1 < ... < u_(n-1): start of each arc."""
        out = [Fraction(0)]
        for a in self.arcs[:-1]:
            out.append(out[-1] + a)
        return tuple(out)

    def gap(self, p: int, q: int) -> Fraction:
        """Arc length from cut point p forward to cut point q (q == p is a full turn)."""
        n = len(self.arcs)
        total = Fraction(0)
        k = p
        while True:
            k = (k + 1) % n
            total += self.arcs[k]
            if k == q:
                return total


def arc_diagram(game: Quasilinkage, order: Sequence[int]) -> ArcDiagram:
    lengths = vertex_length_vector(game, order)
    total = sum(lengths)
    return ArcDiagram(tuple(order), tuple(Fraction(lengths[e - 1], total) for e in order))


def is_gale_face(diagram: ArcDiagram, points: frozenset[int]) -> bool:
    n = len(diagram.arcs)
    rest = [k for k in range(n) if k not in points]
    if len(rest) < 2:
        return False
    for a, b in zip(rest, rest[1:] + rest[:1]):
        g = diagram.gap(a, b)
        if g == HALF:
            raise Violation("DegenerateGap", [a, b], "gap of exactly half the circle")
        if g > HALF:
            return False
    return True


@dataclass(frozen=True)
class FaceLattice:
    """Faces of K as sets of atoms, including the empty face and K itself."""

    atoms: tuple[int, ...]
    faces: tuple[frozenset[int], ...]

    @property
    def top(self) -> frozenset[int]:
        return frozenset(self.atoms)

    def proper_faces(self) -> list[frozenset[int]]:
        return [f for f in self.faces if f and f != self.top]

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.proper_faces()), default=0)

    def f_vector(self) -> list[int]:
        """Number of proper faces by dimension (|face| - 1)."""
        fv = [0] * self.dimension
        for f in self.proper_faces():
            fv[len(f) - 1] += 1
        return fv

    def euler_relation_holds(self) -> bool:
        d = self.dimension
        alt = sum((-1) ** k * c for k, c in enumerate(self.f_vector()))
        return alt == 1 - (-1) ** d

    def is_lattice(self) -> bool:
        faces = set(self.faces)
        if frozenset() not in faces or self.top not in faces:
            return False
        return all(a & b in faces for a in faces for b in faces)


def star_polytope_faces(game: Quasilinkage, order: Sequence[int]) -> FaceLattice:
    """Face lattice of K(F, v), grown level by level from the atoms."""
    diagram = arc_diagram(game, order)
    n = game.n
    atoms = tuple(
        k for k in range(n) if game.is_short((1 << (order[k] - 1)) | (1 << (order[(k + 1) % n] - 1)))
    )
    faces = [frozenset()]
    level = [frozenset([a]) for a in atoms if is_gale_face(diagram, frozenset([a]))]
    while level:
        faces.extend(level)
        found = set(level)
        nxt = set()
        for f in level:
            for a in atoms:
                if a > max(f):
                    cand = f | {a}
                    if all(cand - {x} in found for x in cand) and is_gale_face(diagram, cand):
                        nxt.add(cand)
        level = sorted(nxt, key=sorted)
    top = frozenset(atoms)
    if top not in faces:
        faces.append(top)
    return FaceLattice(atoms, tuple(faces))


def merge_points(order: Sequence[int], label: Sequence[int]) -> frozenset[int]:
    """Cut points of ``order`` that lie inside a block of the coarser ``label``."""
    n = len(order)
    block_of = {}
    for i, b in enumerate(label):
        rest = b
        while rest:
            low = rest & -rest
            rest ^= low
            block_of[low.bit_length()] = i
    return frozenset(k for k in range(n) if block_of[order[k]] == block_of[order[(k + 1) % n]])


@dataclass
class StarDualityReport:
    order: tuple[int, ...]
    star_size: int
    proper_faces: int
    unmatched_cells: list[int]
    missing_faces: list[frozenset[int]]
    order_mismatches: list[tuple[int, int]]

    @property
    def ok(self) -> bool:
        return not (self.unmatched_cells or self.missing_faces or self.order_mismatches)


def star_duality_report(
    game: Quasilinkage, order: Sequence[int], cx: CellComplex | None = None
) -> StarDualityReport:
    """Compare the cells strictly above v with the proper faces of K(F, v).

    A cell above v coarsens the cyclic order by merging across a set I of cut
    points; it is matched with the face I.  The match must be a bijection onto
    the proper faces and must carry the face order of the complex onto
    inclusion of faces (order-preserving both ways).  Reading the star with
    its order reversed, this is the duality with the polar of K.
    """
    order = tuple(order)
    if cx is None:
        cx = build_moduli_complex(game)
    v = cx.index[vertex_label(order)]
    star = sorted(cx.above(v))
    lattice = star_polytope_faces(game, order)
    proper = set(lattice.proper_faces())
    image = {c: merge_points(order, cx.labels[c]) for c in star}
    unmatched = [c for c in star if image[c] not in proper]
    hit = set(image.values())
    missing = sorted((f for f in proper if f not in hit), key=sorted)
    if len(hit) != len(star):
        unmatched.extend(c for c in star if c not in unmatched)
    mism = []
    for c in star:
        below = cx.below(c)
        for c2 in star:
            if c2 != c and ((c2 in below) != (image[c2] < image[c])):
                mism.append((c2, c))
    return StarDualityReport(order, len(star), len(proper), unmatched, missing, mism)


def verify_star_duality(game: Quasilinkage, order: Sequence[int], cx: CellComplex | None = None) -> bool:
    return star_duality_report(game, order, cx).ok
