import itertools
import math
import random

import pytest

from quasilinkage.complex import (
    admissible_partitions,
    build_moduli_complex,
    build_stable_complex,
    canonical,
    cyclic_partition,
    diamond_violations,
    flip_cell_diff,
    is_admissible,
    is_anti_isomorphic,
    label_to_json,
    ordered_partition_count,
    refines,
    vertex_label,
)
from quasilinkage.errors import Violation
from quasilinkage.fixtures import circle_n4
from quasilinkage.games import flip, long_triangle, validate
from quasilinkage.subsets import complement, from_elements

from conftest import random_game


def P(n, *blocks):
    return cyclic_partition(n, blocks)


class TestLabels:
    def test_canonical_rotation(self):
        lab = P(5, [3], [4, 5], [1, 2])
        assert label_to_json(lab) == [[1, 2], [3], [4, 5]]
        assert canonical(tuple(reversed(lab))) != lab  # mirror images stay distinct

    def test_bad_partition(self):
        with pytest.raises(ValueError):
            P(4, [1, 2], [2, 3], [4])
        with pytest.raises(ValueError):
            P(4, [1, 2], [3])

    def test_is_admissible(self, pentagon, example6):
        assert is_admissible(pentagon, P(5, [1, 2], [3], [4, 5]))
        assert not is_admissible(pentagon, P(5, [1, 2, 3], [4], [5]))
        assert is_admissible(example6, P(6, [1, 2, 3], [4, 5], [6]))


class TestRefines:
    def test_examples(self):
        p = P(5, [1, 2], [3], [4, 5])
        assert refines(p, p)
        assert refines(P(5, [1], [2], [3], [4], [5]), P(5, [5, 1], [2], [3, 4]))
        assert not refines(P(4, [1], [3], [2], [4]), P(4, [1, 2], [3, 4]))

    def test_matches_split_generation(self, pentagon):
        cx = build_moduli_complex(pentagon)
        for i, lab in enumerate(cx.labels):
            for j in range(len(cx)):
                other = cx.labels[j]
                covered = j in cx.faces[i]
                assert covered == (len(other) == len(lab) + 1 and refines(other, lab))


class TestModuliComplex:
    def test_n3(self):
        cx = build_moduli_complex(validate(3, [[1], [2], [3]]))
        assert cx.f_vector() == [2]
        assert sorted(label_to_json(lab) for lab in cx.labels) == [[[1], [2], [3]], [[1], [3], [2]]]
        assert cx.euler_characteristic() == 2
        assert not cx.is_connected()

    def test_circle(self):
        cx = build_moduli_complex(circle_n4())
        assert cx.f_vector() == [6, 6]
        assert cx.euler_characteristic() == 0
        assert cx.is_connected()
        assert all(len(cx.faces[c]) == 2 for c in cx.cells_of_dim(1))

    def test_pentagon(self, pentagon):
        cx = build_moduli_complex(pentagon)
        assert cx.f_vector() == [24, 60, 30]
        assert cx.f_vector()[2] == sum(1 for lab in admissible_partitions(pentagon) if len(lab) == 3)
        assert cx.euler_characteristic() == -6

    def test_example6(self, example6):
        cx = build_moduli_complex(example6)
        assert cx.f_vector() == [120, 360, 330, 90]
        assert cx.euler_characteristic() == 0
        assert cx.dimension == 3

    def test_vertices_are_cyclic_orders(self, example6):
        cx = build_moduli_complex(example6)
        verts = cx.cells_of_dim(0)
        assert len(verts) <= math.factorial(5)
        assert all(all(bin(b).count("1") == 1 for b in cx.labels[v]) for v in verts)
        assert cx.index[vertex_label((1, 3, 5, 2, 4, 6))] in verts

    def test_no_duplicate_labels(self, example7):
        cx = build_moduli_complex(example7)
        assert len(set(cx.labels)) == len(cx)
        assert cx.f_vector() == [720, 2520, 3192, 1680, 294]

    def test_downward_closed(self, example6):
        cx = build_moduli_complex(example6)
        for c in range(len(cx)):
            assert all(f in cx.index.values() for f in cx.faces[c])

    def test_json(self, pentagon):
        cx = build_moduli_complex(pentagon)
        short = cx.to_json(emit="f-vector")
        assert short["f_vector"] == [24, 60, 30] and short["euler_characteristic"] == -6
        full = cx.to_json()
        assert len(full["cells"]) == 114
        assert full["cells"][0] == {"label": label_to_json(cx.labels[0]), "dim": cx.dims[0]}
        assert len(full["incidence"]) == sum(len(f) for f in cx.faces)

    def test_odd_dimension_has_zero_euler_characteristic(self):
        rng = random.Random(5)
        for _ in range(40):
            assert build_moduli_complex(random_game(rng, 6)).euler_characteristic() == 0

    def test_connected_unless_long_triangle(self):
        rng = random.Random(6)
        seen = set()
        for _ in range(60):
            g = random_game(rng, rng.randint(3, 6))
            cx = build_moduli_complex(g)
            seen.add(cx.is_connected())
            assert cx.is_connected() == (long_triangle(g) is None)
        assert seen == {True, False}


class TestStableComplex:
    def test_dimension_pairing(self, example6):
        mod = build_moduli_complex(example6)
        st = build_stable_complex(example6)
        assert sorted(mod.labels) == sorted(st.labels)
        for i, lab in enumerate(mod.labels):
            assert mod.dims[i] + st.dims[st.index[lab]] == 6 - 3

    def test_anti_isomorphic(self, pentagon, example6):
        for g in (pentagon, example6):
            assert is_anti_isomorphic(build_moduli_complex(g), build_stable_complex(g))

    def test_pentagon_vertices(self, pentagon):
        st = build_stable_complex(pentagon)
        assert st.f_vector() == [30, 60, 24]


class TestDiamond:
    @pytest.mark.parametrize("name", ["pentagon", "example6", "flip_n6"])
    def test_fixtures(self, name, request):
        g = request.getfixturevalue(name)
        assert diamond_violations(build_moduli_complex(g)) == []
        assert diamond_violations(build_stable_complex(g)) == []


class TestFlipCellDiff:
    def test_flip_fixture(self, flip_n6):
        from quasilinkage.fixtures import FLIP_SET, flip_base

        base = flip_base()
        deleted, added = flip_cell_diff(base, FLIP_SET)
        by_parts = lambda cells: sorted((len(c.label), sum(1 for d in cells if len(d.label) == len(c.label))) for c in cells)
        assert sorted(set(by_parts(deleted))) == [(3, 6), (4, 6)]
        assert sorted(set(by_parts(added))) == [(3, 6), (4, 6)]
        before = set(build_moduli_complex(base).labels)
        after = set(build_moduli_complex(flip_n6).labels)
        dl = {c.label for c in deleted}
        al = {c.label for c in added}
        assert not dl & al
        assert (before - dl) | al == after

    def test_inverse_flip_swaps_roles(self, example6):
        t = from_elements([1, 2, 3])
        deleted, added = flip_cell_diff(example6, t)
        back_deleted, back_added = flip_cell_diff(flip(example6, t), complement(6, t))
        assert {c.label for c in deleted} == {c.label for c in back_added}
        assert {c.label for c in added} == {c.label for c in back_deleted}

    def test_rejects_non_maximal(self, example6):
        with pytest.raises(Violation):
            flip_cell_diff(example6, from_elements([1, 2]))


def test_ordered_partition_count():
    # Fubini numbers are the row sums
    assert [sum(ordered_partition_count(k, m) for m in range(k + 1)) for k in range(6)] == [1, 1, 3, 13, 75, 541]
    assert ordered_partition_count(3, 2) == 6 and ordered_partition_count(3, 3) == 6
