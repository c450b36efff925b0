# Quasilinkages: validation, flips, freezing, conflict-free extension
from quasilinkage import fixtures
from quasilinkage.games import (
    ConflictFreeFamily, comparability_witness, extend, flip, flip_path_to_apex,
    freeze, is_symmetric, validate,
)
from quasilinkage.subsets import elements, from_elements

# all pairs short plus ten short triples
g = fixtures.example6()
print(g)
print("short sets:", g.count_short(), "(always 2^(n-1))")
print("symmetric:", is_symmetric(g))

# the ten short triples, by element lists
print([elements(m) for m in g.maximal_short])

# a flip swaps one maximal short set with its complement
t = from_elements([1, 2, 3])
h = flip(g, t)
print("after flipping {1,2,3}:", [elements(m) for m in h.maximal_short])
print("flip back:", flip(h, from_elements([4, 5, 6])) == g)

# the flipped game fails comparability; the witness is A, B, i, j
w = comparability_witness(h)
print("comparability witness:", elements(w.a), elements(w.b), w.i, w.j)

# walk to the apex game one flip at a time
path = flip_path_to_apex(g)
print("flips to the apex:", [elements(s) for s in path])

# freezing the pentagon's first two edges gives a 4-gon game
pent = fixtures.pentagon()
print("frozen:", freeze(pent, [[1, 2], [3], [4], [5]]))

# conflict-free partial data always extends
fam = ConflictFreeFamily(6, (from_elements([1, 2, 3]), from_elements([3, 5, 6]),
                             from_elements([2, 4, 5]), from_elements([1, 4, 6])))
print("extension:", extend(fam))

# an invalid family is reported with a witness
try:
    validate(4, [[1, 2], [3, 4]])
except ValueError as exc:
    print("rejected:", exc.to_json())
