# Integer homology two ways, the Betti count for real games, manifold checks
from quasilinkage import fixtures
from quasilinkage.complex import build_moduli_complex
from quasilinkage.homology import betti_fs, fs_prediction, homology, verify_manifold

pent = fixtures.pentagon()
cx = build_moduli_complex(pent)
print("cellular:", homology(cx, "cellular"))
print("order complex:", homology(cx, "order"))
print("counting short sets through edge 1:", betti_fs(pent, 1))

# the 6-vertex projective plane game has Z/2 in H_1
g = fixtures.example6()
cx6 = build_moduli_complex(g)
h = homology(cx6)
print(h.betti, h.torsion, "prediction:", fs_prediction(g))

rep = verify_manifold(cx6)
print(rep.verdict)
print("link chi sum", rep.link_euler_sum, "expected", rep.link_euler_expected)

# a family that is not a quasilinkage builds something that is not a manifold
from quasilinkage.games import Quasilinkage
from quasilinkage.subsets import from_elements
bogus = Quasilinkage(5, tuple(sorted(from_elements(s) for s in
                     ([1, 2, 3], [1, 4], [1, 5], [2, 4], [2, 5], [3, 4], [3, 5], [4, 5]))))
print(verify_manifold(build_moduli_complex(bogus)).verdict)
