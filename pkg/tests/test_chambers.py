import pytest

from quasilinkage.chambers import (
    brute_force_quasilinkages,
    enumerate_quasilinkages,
    orbit_count,
    real_chamber_graph,
    surgery_audit,
)
from quasilinkage.errors import BudgetExceeded
from quasilinkage.fixtures import FLIP_SET, flip_base
from quasilinkage.games import flip, near_apex, threshold_game
from quasilinkage.subsets import from_elements


@pytest.fixture(scope="module")
def graph5():
    return enumerate_quasilinkages(5, with_homology=True)


def test_n3():
    g = enumerate_quasilinkages(3)
    assert len(g) == 1 and g.edges == [] and g.real_nodes() == [0]


def test_n4():
    g = enumerate_quasilinkages(4)
    assert g.summary() == {"n": 4, "total": 8, "real": 8, "imaginary": 0, "edges": g.summary()["edges"], "orbits": 2}
    assert g.is_connected()


def test_n5(graph5):
    s = graph5.summary()
    assert (s["total"], s["real"], s["imaginary"], s["orbits"]) == (76, 76, 0, 6)
    assert graph5.is_connected()


def test_bfs_matches_brute_force():
    for n in (3, 4, 5):
        assert set(enumerate_quasilinkages(n, classify=False).index) == brute_force_quasilinkages(n)


def test_edges_are_single_flips(graph5):
    for a, b, t in graph5.edges:
        assert flip(graph5.nodes[a], t) == graph5.nodes[b]


def test_homology_annotations(graph5):
    for inf in graph5.info:
        assert inf.euler is not None and inf.betti is not None
        assert sum((-1) ** k * b for k, b in enumerate(inf.betti)) == inf.euler
        assert all(not t for t in inf.torsion)


def test_contains_near_apex_and_pentagon(graph5):
    assert near_apex(5).key() in graph5.index
    assert threshold_game(5).key() in graph5.index


def test_real_chamber_graph(graph5):
    ch = real_chamber_graph(graph5)
    assert ch.is_connected()
    assert len(ch.certificates) == len(ch.edges) == len(graph5.edges)


def test_budget():
    with pytest.raises(BudgetExceeded) as err:
        enumerate_quasilinkages(5, budget=10)
    assert len(err.value.partial) == 10


def test_exhaustive_limit():
    with pytest.raises(ValueError):
        enumerate_quasilinkages(8)


def test_json_summary(graph5):
    data = graph5.to_json()
    assert data["summary"]["total"] == 76
    assert len(data["nodes"]) == 76 and "betti" in data["nodes"][0]


@pytest.mark.slow
def test_n6(example6):
    g = enumerate_quasilinkages(6)
    s = g.summary()
    assert (s["total"], s["real"], s["imaginary"], s["orbits"]) == (2640, 1678, 962, 29)
    assert example6.key() in g.index
    assert g.info[g.index[example6.key()]].real is False
    assert real_chamber_graph(g).is_connected()


class TestSurgery:
    def test_flip_fixture(self):
        rep = surgery_audit(flip_base(), FLIP_SET)
        assert rep.index == 2
        assert rep.deleted_by_parts == {3: 6, 4: 6} == rep.expected_deleted
        assert rep.added_by_parts == {3: 6, 4: 6} == rep.expected_added
        assert rep.euler_before == rep.euler_after == 0
        assert rep.betti_before == (1, 8, 8, 1) and rep.betti_after == (1, 7, 7, 1)
        assert rep.manifold_before and rep.manifold_after and rep.ok

    def test_even_dimension_changes_euler(self):
        g = threshold_game(5)
        t = from_elements([1, 2])
        rep = surgery_audit(g, t)
        assert rep.index == 2
        assert rep.euler_after - rep.euler_before == rep.expected_euler_change == 2
        assert rep.ok

    def test_budget(self, example6):
        with pytest.raises(BudgetExceeded):
            surgery_audit(example6, from_elements([1, 2, 3]), max_cells=10)
