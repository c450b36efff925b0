# Which games come from actual length vectors?
from fractions import Fraction

from quasilinkage import fixtures
from quasilinkage.realizability import (
    is_generic, realize, short_sets, verify_certificate, vertex_length_vector,
)
from quasilinkage.subsets import elements

# equilateral pentagon
print(is_generic([1] * 5), realize(fixtures.pentagon()).lengths)

# (1+e, 1+e, 1+e, 1, 1, 1) for e = 1/10
base = short_sets([Fraction(11, 10)] * 3 + [1] * 3)
res = realize(base)
print("base game realized by", res.lengths)

# its flip along {4,5,6} has no length vector
res = realize(fixtures.paper_flip_n6())
print("flip real?", res.real)
print("certificate:", [(elements(m), w) for m, w in res.certificate])
print("certificate checks:", verify_certificate(fixtures.paper_flip_n6(), res.certificate))

# the symmetric games are imaginary too
for name in ("example6", "example7"):
    print(name, "real?", realize(fixtures.load(name)).real)

# even an imaginary game looks real along one cyclic order
g = fixtures.example6()
for order in [(1, 2, 3, 4, 5, 6), (1, 3, 5, 2, 4, 6)]:
    print(order, "->", vertex_length_vector(g, order))
