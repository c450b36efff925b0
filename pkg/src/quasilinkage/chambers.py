"""Flip-graph enumeration of quasilinkages and real/imaginary classification.

Nodes are labeled proper quasilinkages keyed by their sorted maximal short
sets.  The search starts at :func:`~quasilinkage.games.near_apex` and follows
flips of non-singleton maximal short sets.  A singleton flip always leads to
a dictator game, and each dictator game has the near-apex game of its element
as its only neighbour.  Dropping them therefore keeps the graph connected.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .complex import (
    build_moduli_complex,
    flip_cell_diff,
    ordered_partition_count,
)
from .errors import BudgetExceeded
from .games import (
    Quasilinkage,
    comparability_witness,
    flip,
    near_apex,
    permute_mask,
    proper_flips,
    validate,
)
from .homology import cellular_homology, verify_manifold
from .realizability import normalized, realize, short_sets, walls_through
from .subsets import complement, elements, from_elements, full_mask, popcount

EXHAUSTIVE_MAX_N = 7


@dataclass
class NodeInfo:
    real: bool
    lengths: tuple[int, ...] | None = None
    certificate: tuple[tuple[int, int], ...] | None = None
    comparability: tuple | None = None
    f_vector: list[int] | None = None
    euler: int | None = None
    betti: tuple[int, ...] | None = None
    torsion: tuple[tuple[int, ...], ...] | None = None

    def to_json(self) -> dict:
        out: dict = {"real": self.real}
        if self.lengths is not None:
            out["lengths"] = [str(v) for v in self.lengths]
        if self.certificate is not None:
            out["certificate"] = [{"set": elements(m), "weight": w} for m, w in self.certificate]
        if self.comparability is not None:
            a, b, i, j = self.comparability
            out["comparability_witness"] = [elements(a), elements(b), i, j]
        if self.f_vector is not None:
            out["f_vector"] = self.f_vector
            out["euler_characteristic"] = self.euler
        if self.betti is not None:
            out["betti"] = list(self.betti)
            out["torsion"] = [list(t) for t in self.torsion]
        return out


@dataclass
class FlipGraph:
    n: int
    nodes: list[Quasilinkage]
    edges: list[tuple[int, int, int]]  # (i, j, T): flipping T in node i gives node j
    info: list[NodeInfo] = field(default_factory=list)

    def __post_init__(self):
        self.index = {g.key(): i for i, g in enumerate(self.nodes)}

    def __len__(self) -> int:
        return len(self.nodes)

    def degree(self, i: int) -> int:
        return sum(1 for a, b, _ in self.edges if a == i or b == i)

    def neighbors(self, i: int) -> list[int]:
        return sorted({b if a == i else a for a, b, _ in self.edges if i in (a, b)})

    def is_connected(self) -> bool:
        if not self.nodes:
            return True
        adj: dict[int, list[int]] = {i: [] for i in range(len(self.nodes))}
        for a, b, _ in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.nodes)

    def real_nodes(self) -> list[int]:
        return [i for i, inf in enumerate(self.info) if inf.real]

    def imaginary_nodes(self) -> list[int]:
        return [i for i, inf in enumerate(self.info) if not inf.real]

    def summary(self) -> dict:
        return {
            "n": self.n,
            "total": len(self.nodes),
            "real": len(self.real_nodes()),
            "imaginary": len(self.imaginary_nodes()),
            "edges": len(self.edges),
            "orbits": orbit_count(self) if self.n <= 8 else None,
        }

    def to_json(self) -> dict:
        return {
            "summary": self.summary(),
            "nodes": [
                {"maximal_short": sorted(elements(m) for m in g.maximal_short), **inf.to_json()}
                for g, inf in zip(self.nodes, self.info)
            ],
            "edges": [[a, b, elements(t)] for a, b, t in self.edges],
        }


def _classify(game: Quasilinkage, with_homology: bool) -> NodeInfo:
    res = realize(game)
    info = NodeInfo(real=res.real, lengths=res.lengths, certificate=res.certificate)
    if not res.real:
        w = comparability_witness(game)
        info.comparability = tuple(w) if w is not None else None
    if with_homology:
        cx = build_moduli_complex(game)
        info.f_vector = cx.f_vector()
        info.euler = cx.euler_characteristic()
        h = cellular_homology(cx)
        info.betti, info.torsion = h.betti, h.torsion
    return info


def enumerate_quasilinkages(
    n: int, budget: int | None = None, with_homology: bool = False, classify: bool = True
) -> FlipGraph:
    """Breadth-first search of the flip graph of proper quasilinkages on [n].

    Raises :class:`BudgetExceeded` (carrying the partial graph) once more
    than ``budget`` nodes are discovered.
    """
    if n < 3:
        raise ValueError("quasilinkages need n >= 3")
    if budget is None and n > EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive enumeration is limited to n <= {EXHAUSTIVE_MAX_N}; pass a budget")
    start = near_apex(n)
    seen = {start.key(): start}
    raw_edges = set()
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for t in proper_flips(g):
            h = flip(g, t)
            k = h.key()
            if k not in seen:
                if budget is not None and len(seen) >= budget:
                    partial = _finish(n, list(seen.values()), raw_edges, False, False)
                    raise BudgetExceeded(f"more than {budget} quasilinkages on [{n}]", partial)
                seen[k] = h
                queue.append(h)
            if g.key() < k:
                raw_edges.add((g.key(), k, t))
    graph = _finish(n, list(seen.values()), raw_edges, classify, with_homology)
    if not graph.is_connected():
        raise AssertionError("flip graph is not connected")
    return graph


def _finish(n, nodes, raw_edges, classify, with_homology) -> FlipGraph:
    nodes = sorted(nodes, key=lambda g: g.key())
    idx = {g.key(): i for i, g in enumerate(nodes)}
    edges = sorted((idx[a], idx[b], t) for a, b, t in raw_edges if a in idx and b in idx)
    info = [_classify(g, with_homology) for g in nodes] if classify else []
    return FlipGraph(n, nodes, edges, info)


def brute_force_quasilinkages(n: int) -> set[tuple[int, ...]]:
    """All proper quasilinkages on [n] by direct filtration (independent of flips).

    Each complementary pair is decided by choosing the status of the member
    containing 1; singletons are forced short.  Only practical for n <= 5.
    """
    full = full_mask(n)
    forced_short = {1}
    forced_long = {full} | {full ^ (1 << b) for b in range(1, n)}
    free = [s for s in range(1 << n) if s & 1 and s not in forced_short and s not in forced_long]
    out = set()
    for bits in itertools.product((0, 1), repeat=len(free)):
        short = {0} | {1 << b for b in range(n)}
        for s in forced_short:
            short.add(s)
        for s, b in zip(free, bits):
            short.add(s if b else full ^ s)
        for s in forced_long:
            short.add(full ^ s)
        if all((s & ~(1 << b)) in short for s in short for b in range(n) if s >> b & 1):
            out.add(validate(n, short, closed=True).key())
    return out


# orbits under relabeling


def orbit_count(graph: FlipGraph) -> int:
    n = graph.n
    perms = list(itertools.permutations(range(1, n + 1)))
    tables = []
    for p in perms:
        tables.append([permute_mask(p, s) for s in range(1 << n)])
    remaining = set(graph.index)
    orbits = 0
    while remaining:
        key = remaining.pop()
        orbits += 1
        for tab in tables:
            remaining.discard(tuple(sorted(tab[m] for m in key)))
    return orbits


# real chamber graph


@dataclass
class WallCertificate:
    edge: tuple[int, int, int]
    wall_point: tuple[Fraction, ...]
    side_a: tuple[Fraction, ...]
    side_b: tuple[Fraction, ...]


@dataclass
class ChamberGraph:
    graph: FlipGraph
    nodes: list[int]
    edges: list[tuple[int, int, int]]
    certificates: list[WallCertificate]

    def is_connected(self) -> bool:
        if not self.nodes:
            return True
        adj = {i: [] for i in self.nodes}
        for a, b, _ in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = {self.nodes[0]}
        stack = [self.nodes[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.nodes)


def certify_wall(graph: FlipGraph, edge: tuple[int, int, int]) -> WallCertificate:
    """Points on each side of the shared wall and on the wall itself.

    Both endpoint games agree off the flipped pair, so the segment between
    their realizations crosses only that wall.
    """
    i, j, t = edge
    gi, gj = graph.nodes[i], graph.nodes[j]
    a = normalized(graph.info[i].lengths)
    b = normalized(graph.info[j].lengths)
    n = graph.n

    def excess(v):
        return sum(v[k] if t >> k & 1 else -v[k] for k in range(n))

    ea, eb = excess(a), excess(b)
    lam = ea / (ea - eb)

    def at(s):
        return tuple(a[k] + s * (b[k] - a[k]) for k in range(n))

    w = at(lam)
    side_a, side_b = at(lam / 2), at((1 + lam) / 2)
    on = walls_through(w)
    if on != [t if t & 1 else complement(n, t)]:
        raise AssertionError(f"wall point lies on walls {[elements(s) for s in on]}")
    if short_sets(side_a) != gi or short_sets(side_b) != gj:
        raise AssertionError("segment points fall outside the expected chambers")
    return WallCertificate(edge, w, side_a, side_b)


def real_chamber_graph(graph: FlipGraph) -> ChamberGraph:
    real = set(graph.real_nodes())
    edges = [e for e in graph.edges if e[0] in real and e[1] in real]
    certs = [certify_wall(graph, e) for e in edges]
    return ChamberGraph(graph, sorted(real), edges, certs)


# surgery audit


@dataclass
class AuditReport:
    n: int
    flipped: list[int]
    index: int
    deleted_by_parts: dict[int, int]
    added_by_parts: dict[int, int]
    expected_deleted: dict[int, int]
    expected_added: dict[int, int]
    euler_before: int
    euler_after: int
    expected_euler_change: int
    betti_before: tuple[int, ...]
    betti_after: tuple[int, ...]
    manifold_before: bool
    manifold_after: bool

    @property
    def counts_ok(self) -> bool:
        return (
            self.deleted_by_parts == self.expected_deleted
            and self.added_by_parts == self.expected_added
        )

    @property
    def euler_ok(self) -> bool:
        ok = self.euler_after - self.euler_before == self.expected_euler_change
        if (self.n - 3) % 2:
            ok = ok and self.euler_before == 0 and self.euler_after == 0
        return ok

    @property
    def betti_ok(self) -> bool:
        """Total Betti change is at most two and confined to degrees touched by the surgery."""
        d = self.n - 3
        lam = self.index
        allowed = {lam - 1, lam, d - lam, d + 1 - lam}
        size = max(len(self.betti_before), len(self.betti_after))
        before = list(self.betti_before) + [0] * (size - len(self.betti_before))
        after = list(self.betti_after) + [0] * (size - len(self.betti_after))
        diffs = [abs(x - y) for x, y in zip(before, after)]
        return sum(diffs) <= 2 and all(k in allowed for k, v in enumerate(diffs) if v)

    @property
    def ok(self) -> bool:
        return (
            self.counts_ok
            and self.euler_ok
            and self.betti_ok
            and self.manifold_before
            and self.manifold_after
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "flipped": self.flipped,
            "index": self.index,
            "deleted_by_parts": {str(k): v for k, v in sorted(self.deleted_by_parts.items())},
            "added_by_parts": {str(k): v for k, v in sorted(self.added_by_parts.items())},
            "counts_ok": self.counts_ok,
            "euler_before": self.euler_before,
            "euler_after": self.euler_after,
            "euler_ok": self.euler_ok,
            "betti_before": list(self.betti_before),
            "betti_after": list(self.betti_after),
            "betti_ok": self.betti_ok,
            "manifold_before": self.manifold_before,
            "manifold_after": self.manifold_after,
            "ok": self.ok,
        }


def _by_parts(cells) -> dict[int, int]:
    out: dict[int, int] = {}
    for c in cells:
        m = len(c.label)
        out[m] = out.get(m, 0) + 1
    return out


def surgery_audit(game: Quasilinkage, t, max_cells: int | None = None, check_links: bool = True) -> AuditReport:
    """Check a flip against the cell counts and topology of a Morse surgery."""
    t = t if isinstance(t, int) else from_elements(t)
    n = game.n
    after_game = flip(game, t)
    deleted, added = flip_cell_diff(game, t)
    before_cx = build_moduli_complex(game)
    after_cx = build_moduli_complex(after_game)
    if max_cells is not None and max(len(before_cx), len(after_cx)) > max_cells:
        raise BudgetExceeded(f"complexes exceed {max_cells} cells")
    size = popcount(t)
    a = n - size
    exp_del = {m: ordered_partition_count(a, m - 1) for m in range(2, a + 2)}
    exp_add = {m: ordered_partition_count(size, m - 1) for m in range(2, size + 2)}
    exp_del = {m: c for m, c in exp_del.items() if c and m >= 3}
    exp_add = {m: c for m, c in exp_add.items() if c and m >= 3}
    h_before = cellular_homology(before_cx)
    h_after = cellular_homology(after_cx)
    rep_before = verify_manifold(before_cx, check_links)
    rep_after = verify_manifold(after_cx, check_links)
    return AuditReport(
        n=n,
        flipped=elements(t),
        index=n - size - 1,
        deleted_by_parts=_by_parts(deleted),
        added_by_parts=_by_parts(added),
        expected_deleted=exp_del,
        expected_added=exp_add,
        euler_before=before_cx.euler_characteristic(),
        euler_after=after_cx.euler_characteristic(),
        expected_euler_change=(-1) ** (n - 1) * ((-1) ** size - (-1) ** a),
        betti_before=h_before.betti,
        betti_after=h_after.betti,
        manifold_before=rep_before.plausible if check_links else rep_before.pseudomanifold,
        manifold_after=rep_after.plausible if check_links else rep_after.pseudomanifold,
    )
