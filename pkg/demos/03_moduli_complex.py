# The cell complex M(F): cells are cyclic partitions into short blocks
from quasilinkage import fixtures
from quasilinkage.complex import (
    build_moduli_complex, build_stable_complex, diamond_violations,
    flip_cell_diff, is_anti_isomorphic, label_to_json,
)
from quasilinkage.games import validate

# triangle: two points, one per orientation
cx = build_moduli_complex(validate(3, [[1], [2], [3]]))
print([label_to_json(lab) for lab in cx.labels])

pent = fixtures.pentagon()
cx = build_moduli_complex(pent)
print("pentagon f-vector", cx.f_vector(), "chi", cx.euler_characteristic())

# a top cell and its faces
top = cx.cells_of_dim(2)[0]
print(label_to_json(cx.labels[top]), "->", [label_to_json(cx.labels[f]) for f in cx.faces[top]])

# the stable complex has the same labels with reversed incidence
st = build_stable_complex(pent)
print("stable f-vector", st.f_vector(), "dual:", is_anti_isomorphic(cx, st))
print("diamond violations:", len(diamond_violations(cx)), len(diamond_violations(st)))

# a flip cuts out the cells carrying T as a block
deleted, added = flip_cell_diff(fixtures.flip_base(), fixtures.FLIP_SET)
print(len(deleted), "cells deleted,", len(added), "added")

cx7 = build_moduli_complex(fixtures.example7())
print("Fano f-vector", cx7.f_vector())
