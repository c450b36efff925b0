"""Integer homology of the cell complexes and manifold checks.

Two independent routes are available: simplicial homology of the order
complex (barycentric subdivision of the face poset) and cellular homology
of the regular complex with incidence numbers chosen so that d^2 = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .complex import CellComplex, build_moduli_complex, label_to_json
from .games import Quasilinkage
from .realizability import longest_element, realize
from .snf import invariant_factors
from .subsets import popcount, singleton


@dataclass(frozen=True)
class HomologyProfile:
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    @property
    def torsion_free(self) -> bool:
        return not any(self.torsion)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))

    def to_json(self) -> dict:
        return {"betti": list(self.betti), "torsion": [list(t) for t in self.torsion]}


@dataclass
class SimplicialComplex:
    """Simplices grouped by dimension; each simplex is a tuple of vertex ids
    listed bottom-to-top along a chain of the face poset."""

    vertices: list[int]
    simplices: list[list[tuple[int, ...]]]

    @property
    def dimension(self) -> int:
        return len(self.simplices) - 1

    def f_vector(self) -> list[int]:
        return [len(s) for s in self.simplices]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * len(s) for k, s in enumerate(self.simplices))

    def maximal_simplices(self) -> list[tuple[int, ...]]:
        faces = set()
        for level in self.simplices[1:]:
            for s in level:
                for i in range(len(s)):
                    faces.add(s[:i] + s[i + 1:])
        return [s for level in self.simplices for s in level if s not in faces]


def order_complex(cx: CellComplex, cells: Iterable[int] | None = None) -> SimplicialComplex:
    """Chains of the face order of ``cx``, optionally restricted to ``cells``."""
    keep = set(range(len(cx))) if cells is None else set(cells)
    order = sorted(keep, key=lambda c: (cx.dims[c], c))
    below = {c: cx.below(c) & keep for c in order}
    chains_to: dict[int, list[tuple[int, ...]]] = {}
    levels: list[list[tuple[int, ...]]] = []
    for c in order:
        mine = [(c,)]
        for d in below[c]:
            mine.extend(ch + (c,) for ch in chains_to[d])
        chains_to[c] = mine
        for ch in mine:
            k = len(ch) - 1
            while len(levels) <= k:
                levels.append([])
            levels[k].append(ch)
    for level in levels:
        level.sort()
    return SimplicialComplex(vertices=order, simplices=levels)


def _homology_from_boundaries(sizes: Sequence[int], boundaries: Sequence[list[dict[int, int]]]) -> HomologyProfile:
    """``boundaries[k]`` holds, for each k-cell, its boundary as {(k-1)-cell: coeff}."""
    top = len(sizes) - 1
    ranks = [0] * (top + 2)
    tors: list[tuple[int, ...]] = [()] * (top + 1)
    for k in range(1, top + 1):
        inv = invariant_factors(boundaries[k])
        ranks[k] = len(inv)
        tors[k - 1] = tuple(sorted(d for d in inv if d > 1))
    betti = tuple(sizes[k] - ranks[k] - ranks[k + 1] for k in range(top + 1))
    return HomologyProfile(betti=betti, torsion=tuple(tors))


def simplicial_homology(sc: SimplicialComplex) -> HomologyProfile:
    if not sc.simplices:
        return HomologyProfile((), ())
    index = [{s: i for i, s in enumerate(level)} for level in sc.simplices]
    boundaries: list[list[dict[int, int]]] = [[{} for _ in sc.simplices[0]]]
    for k in range(1, len(sc.simplices)):
        rows = []
        prev = index[k - 1]
        for s in sc.simplices[k]:
            rows.append({prev[s[:i] + s[i + 1:]]: (-1) ** i for i in range(k + 1)})
        boundaries.append(rows)
    return _homology_from_boundaries([len(l) for l in sc.simplices], boundaries)


def incidence_numbers(cx: CellComplex) -> list[dict[int, int]]:
    """Signs [c : f] in {+1, -1} for every covering pair, with d^2 = 0.

    Works cell by cell: the faces of a cell of dimension >= 2 are linked
    through shared codimension-two faces (each shared by exactly two faces in
    a regular complex) and signs propagate along those links.
    """
    inc: list[dict[int, int]] = [dict() for _ in range(len(cx))]
    order = sorted(range(len(cx)), key=lambda c: cx.dims[c])
    for c in order:
        fs = cx.faces[c]
        d = cx.dims[c]
        if not fs:
            continue
        if d == 1:
            if len(fs) != 2:
                raise ValueError(f"cell {c} has {len(fs)} vertices; complex is not regular")
            inc[c] = {fs[0]: -1, fs[1]: 1}
            continue
        shared: dict[int, list[int]] = {}
        for f in fs:
            for g in cx.faces[f]:
                shared.setdefault(g, []).append(f)
        sign = {fs[0]: 1}
        stack = [fs[0]]
        while stack:
            f = stack.pop()
            for g in cx.faces[f]:
                for f2 in shared[g]:
                    if f2 == f:
                        continue
                    want = -sign[f] * inc[f][g] * inc[f2][g]
                    if f2 in sign:
                        if sign[f2] != want:
                            raise ValueError(f"inconsistent incidence signs on cell {c}")
                    else:
                        sign[f2] = want
                        stack.append(f2)
        if len(sign) != len(fs):
            raise ValueError(f"boundary of cell {c} is disconnected")
        inc[c] = sign
    return inc


def check_boundary_squared(cx: CellComplex, inc: list[dict[int, int]]) -> bool:
    for c in range(len(cx)):
        acc: dict[int, int] = {}
        for f, s in inc[c].items():
            for g, t in inc[f].items():
                acc[g] = acc.get(g, 0) + s * t
        if any(acc.values()):
            return False
    return True


def cellular_homology(cx: CellComplex) -> HomologyProfile:
    if not len(cx):
        return HomologyProfile((), ())
    inc = incidence_numbers(cx)
    top = cx.dimension
    pos: list[dict[int, int]] = [dict() for _ in range(top + 1)]
    for c in range(len(cx)):
        d = cx.dims[c]
        pos[d][c] = len(pos[d])
    sizes = [len(p) for p in pos]
    boundaries: list[list[dict[int, int]]] = [[{} for _ in range(sizes[0])]]
    for k in range(1, top + 1):
        rows = []
        for c in sorted(pos[k], key=pos[k].get):
            rows.append({pos[k - 1][f]: s for f, s in inc[c].items()})
        boundaries.append(rows)
    return _homology_from_boundaries(sizes, boundaries)


def homology(obj, method: str = "cellular") -> HomologyProfile:
    """Integral homology of a SimplicialComplex, or of a CellComplex by ``method``."""
    if isinstance(obj, SimplicialComplex):
        return simplicial_homology(obj)
    if method == "cellular":
        return cellular_homology(obj)
    if method == "order":
        return simplicial_homology(order_complex(obj))
    raise ValueError(f"unknown method {method!r}")


# Betti numbers of real games from short-set counts


def short_counts_containing(game: Quasilinkage, element: int) -> list[int]:
    """a_i = number of short sets of size i + 1 containing ``element``, i = 0..n-3."""
    bit = singleton(element)
    a = [0] * (game.n - 2)
    for s in game.short_sets():
        if s & bit:
            k = popcount(s) - 1
            if k < len(a):
                a[k] += 1
    return a


def betti_fs(game: Quasilinkage, longest: int) -> list[int]:
    """Betti numbers a_k + a_(n-3-k) of a real game, ``longest`` an argmax edge."""
    a = short_counts_containing(game, longest)
    d = game.n - 3
    return [a[k] + a[d - k] for k in range(d + 1)]


def fs_prediction(game: Quasilinkage) -> list[int] | None:
    """Predicted Betti numbers for a real game, None for an imaginary one.

    Every argmax of the realizing vector is tried and must give the same
    answer.
    """
    res = realize(game)
    if not res.real:
        return None
    best = max(res.lengths)
    tied = [i + 1 for i, v in enumerate(res.lengths) if v == best]
    answers = {tuple(betti_fs(game, i)) for i in tied}
    if len(answers) != 1:
        raise AssertionError(f"Betti prediction depends on the choice among tied edges {tied}")
    return list(betti_fs(game, longest_element(res.lengths)))


def torsion_free_check(game: Quasilinkage) -> bool:
    if not realize(game).real:
        raise ValueError("torsion_free_check expects a real quasilinkage")
    return cellular_homology(build_moduli_complex(game)).torsion_free


# manifold verification


@dataclass
class ManifoldReport:
    dimension: int
    not_pure: list[int] = field(default_factory=list)
    bad_ridges: list[tuple[int, int]] = field(default_factory=list)  # (cell, number of top cofaces)
    bad_links: list[tuple[int, tuple[int, ...]]] = field(default_factory=list)
    disconnected_links: list[int] = field(default_factory=list)
    links_checked: bool = False
    link_euler_sum: int | None = None
    link_euler_expected: int | None = None

    @property
    def pure(self) -> bool:
        return not self.not_pure

    @property
    def pseudomanifold(self) -> bool:
        return self.pure and not self.bad_ridges

    @property
    def links_ok(self) -> bool:
        return self.links_checked and not self.bad_links and not self.disconnected_links

    @property
    def plausible(self) -> bool:
        return self.pseudomanifold and self.links_ok

    @property
    def verdict(self) -> str:
        if self.plausible:
            return "manifold: plausible (pure, pseudomanifold, vertex links are homology spheres)"
        if self.pseudomanifold and not self.links_checked:
            return "pseudomanifold (vertex links not checked)"
        return "not a manifold"

    def to_json(self, cx: CellComplex | None = None) -> dict:
        def lab(c):
            return label_to_json(cx.labels[c]) if cx is not None else c

        return {
            "dimension": self.dimension,
            "pure": self.pure,
            "pseudomanifold": self.pseudomanifold,
            "links_checked": self.links_checked,
            "links_ok": self.links_ok,
            "verdict": self.verdict,
            "not_pure": [lab(c) for c in self.not_pure],
            "bad_ridges": [[lab(c), k] for c, k in self.bad_ridges],
            "bad_links": [[lab(c), list(b)] for c, b in self.bad_links],
            "disconnected_links": [lab(c) for c in self.disconnected_links],
        }


def sphere_betti(k: int) -> tuple[int, ...]:
    """Betti numbers of S^k (k = -1 is the empty space)."""
    if k < 0:
        return ()
    if k == 0:
        return (2,)
    return (1,) + (0,) * (k - 1) + (1,)


def vertex_link(cx: CellComplex, v: int) -> SimplicialComplex:
    return order_complex(cx, cx.above(v))


def _connected(sc: SimplicialComplex) -> bool:
    if not sc.simplices:
        return True
    parent = {v: v for v in sc.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in sc.simplices[1] if len(sc.simplices) > 1 else []:
        parent[find(a)] = find(b)
    return len({find(v) for v in sc.vertices}) == 1


def verify_manifold(cx: CellComplex, check_links: bool = True) -> ManifoldReport:
    """Purity, pseudomanifold condition and homology-sphere vertex links.

    Link homology is necessary for a combinatorial manifold, not sufficient;
    the verdict says "plausible" accordingly.
    """
    d = cx.dimension
    rep = ManifoldReport(dimension=d)
    top = set(cx.cells_of_dim(d))
    for c in range(len(cx)):
        if c not in top and not (cx.above(c) & top):
            rep.not_pure.append(c)
    for c in cx.cells_of_dim(d - 1):
        k = sum(1 for u in cx.cofaces[c] if u in top)
        if k != 2:
            rep.bad_ridges.append((c, k))
    if check_links:
        rep.links_checked = True
        want = sphere_betti(d - 1)
        total = 0
        for v in cx.cells_of_dim(0):
            link = vertex_link(cx, v)
            h = simplicial_homology(link)
            if h.betti != want or not h.torsion_free:
                rep.bad_links.append((v, h.betti))
            if d >= 2 and not _connected(link):
                rep.disconnected_links.append(v)
            total += link.euler_characteristic()
        rep.link_euler_sum = total
        rep.link_euler_expected = sum(
            (-1) ** (cx.dims[c] - 1) * sum(1 for u in cx.below(c) if cx.dims[u] == 0)
            for c in range(len(cx))
            if cx.dims[c] >= 1
        )
    return rep
