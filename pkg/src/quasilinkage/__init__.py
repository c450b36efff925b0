"""Quasilinkages (constant-sum simple games) and their moduli cell complexes.

Subsets of [n] are int bitmasks with element i at bit i - 1.  All arithmetic
is exact: integers and ``fractions.Fraction``.
"""

from .chambers import (
    enumerate_quasilinkages,
    brute_force_quasilinkages,
    real_chamber_graph,
    surgery_audit,
)
from .complex import (
    CellComplex,
    build_moduli_complex,
    build_stable_complex,
    is_admissible,
    refines,
    flip_cell_diff,
)
from .errors import BudgetExceeded, QuasilinkageError, Violation
from .gale import arc_diagram, star_polytope_faces, verify_star_duality
from .games import (
    Quasilinkage,
    ConflictFreeFamily,
    apex,
    near_apex,
    check_axioms,
    check_comparability,
    extend,
    flip,
    freeze,
    is_short,
    is_symmetric,
    validate,
)
from .homology import betti_fs, cellular_homology, verify_manifold
from .realizability import realize, short_sets, vertex_length_vector

__version__ = "0.1.0"
