# Vertex stars versus polytopes read off circular Gale diagrams
from quasilinkage import fixtures
from quasilinkage.complex import build_moduli_complex, vertex_order
from quasilinkage.gale import arc_diagram, star_duality_report, star_polytope_faces

g = fixtures.example6()
order = (1, 2, 3, 4, 5, 6)
d = arc_diagram(g, order)
print("arcs:", [str(a) for a in d.arcs])

lat = star_polytope_faces(g, order)
print("K f-vector", lat.f_vector(), "Euler relation:", lat.euler_relation_holds())

# every vertex of the complex
cx = build_moduli_complex(g)
bad = [v for v in cx.cells_of_dim(0)
       if not star_duality_report(g, vertex_order(cx.labels[v]), cx).ok]
print(len(cx.cells_of_dim(0)), "vertices checked, failures:", bad)
