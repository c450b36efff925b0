# All quasilinkages on [n] for small n, their flip graph and chamber walls
import time

from quasilinkage import fixtures
from quasilinkage.chambers import enumerate_quasilinkages, real_chamber_graph, surgery_audit
from quasilinkage.subsets import from_elements

for n in (3, 4, 5):
    print(enumerate_quasilinkages(n).summary())

t0 = time.perf_counter()
g6 = enumerate_quasilinkages(6)
print(g6.summary(), f"{time.perf_counter() - t0:.1f}s")
print("example6 is node", g6.index[fixtures.example6().key()])

# walls between adjacent real chambers, each with a point on the wall
ch = real_chamber_graph(enumerate_quasilinkages(5))
c = ch.certificates[0]
print(len(ch.certificates), "walls; first:", [str(x) for x in c.wall_point])

# a flip is a surgery
rep = surgery_audit(fixtures.flip_base(), fixtures.FLIP_SET)
print(rep.to_json())
print(surgery_audit(fixtures.pentagon(), from_elements([1, 2])).to_json())
