import itertools
from fractions import Fraction

import pytest

from quasilinkage.complex import build_moduli_complex, vertex_order
from quasilinkage.errors import Violation
from quasilinkage.fixtures import circle_n4
from quasilinkage.gale import (
    ArcDiagram,
    arc_diagram,
    is_gale_face,
    merge_points,
    star_duality_report,
    star_polytope_faces,
    verify_star_duality,
)
from quasilinkage.games import validate
from quasilinkage.complex import cyclic_partition


def test_arcs_n3():
    g = validate(3, [[1], [2], [3]])
    assert arc_diagram(g, (1, 2, 3)).arcs == (Fraction(1, 3),) * 3


def test_arcs_pentagon(pentagon):
    d = arc_diagram(pentagon, (1, 3, 5, 2, 4))
    assert d.arcs == (Fraction(1, 5),) * 5
    assert d.cuts == tuple(Fraction(k, 5) for k in range(5))


def test_arcs_example6(example6):
    d = arc_diagram(example6, (1, 2, 3, 4, 5, 6))
    assert sum(d.arcs) == 1
    assert d.arcs == (Fraction(1, 12), Fraction(1, 4)) * 3


def test_pentagon_star_is_a_pentagon(pentagon):
    lat = star_polytope_faces(pentagon, (1, 2, 3, 4, 5))
    assert len(lat.atoms) == 5
    assert lat.f_vector() == [5, 5]
    assert lat.is_lattice() and lat.euler_relation_holds()


def test_example6_star_is_a_3_polytope(example6):
    lat = star_polytope_faces(example6, (1, 2, 3, 4, 5, 6))
    assert lat.f_vector() == [6, 12, 8]
    v, e, f = lat.f_vector()
    assert v - e + f == 2
    assert lat.is_lattice()


def test_circle_game_stars():
    g = circle_n4()
    cx = build_moduli_complex(g)
    for v in cx.cells_of_dim(0):
        order = vertex_order(cx.labels[v])
        lat = star_polytope_faces(g, order)
        assert lat.dimension <= 1
        assert verify_star_duality(g, order, cx)


def test_atoms_are_short_adjacent_pairs(flip_n6):
    for rest in itertools.permutations(range(2, 7)):
        order = (1,) + rest
        lat = star_polytope_faces(flip_n6, order)
        short_pairs = [k for k in range(6) if flip_n6.is_short((1 << (order[k] - 1)) | (1 << (order[(k + 1) % 6] - 1)))]
        assert list(lat.atoms) == short_pairs
        break


def test_degenerate_gap_rejected():
    d = ArcDiagram((1, 2, 3, 4), (Fraction(1, 4),) * 4)
    with pytest.raises(Violation) as err:
        is_gale_face(d, frozenset([0]))
    assert err.value.kind == "DegenerateGap"


def test_merge_points():
    order = (1, 2, 3, 4, 5)
    lab = cyclic_partition(5, [[5, 1], [2], [3, 4]])
    # cut 4 sits between 5 and 1, cut 2 between 3 and 4
    assert merge_points(order, lab) == frozenset([2, 4])


@pytest.mark.parametrize("name", ["pentagon", "example6", "flip_n6"])
def test_duality_at_every_vertex(name, request):
    g = request.getfixturevalue(name)
    cx = build_moduli_complex(g)
    for v in cx.cells_of_dim(0):
        rep = star_duality_report(g, vertex_order(cx.labels[v]), cx)
        assert rep.ok, rep
        assert rep.star_size == rep.proper_faces


def test_n3_is_vacuous():
    g = validate(3, [[1], [2], [3]])
    rep = star_duality_report(g, (1, 2, 3))
    assert rep.ok and rep.star_size == 0
