"""derhed: decide whether a finitely presented triangulated category is
hereditary, extract hereditary hearts, and generate instances from quiver
algebras.

The central data structure is the shift-graph: orbits of indecomposables
under the translation functor, with integer-weighted edges recording the
nonvanishing hom-spaces Hom(X, Y[n]).  A block is hereditary exactly when
no orbit lies on a closed walk of negative total weight, and in that case
shortest-walk weights from any source orbit assemble a heart.
"""

from .complexes import (EndAlgebra, ProjComplex, are_isomorphic,
                        build_shiftgraph_from_complexes, check_complex,
                        hom_k_dim, is_indecomposable, shift_complex)
from .generators import (gen_a2_from_complexes, gen_dual_numbers,
                         gen_dynkin_an, gen_example_a2, gen_semisimple_block)
from .hereditary import (Heart, HeartCheck, HereditaryReport, check_hereditary,
                         cohomology, extract_heart, truncate, verify_heart)
from .linalg import DEFAULT_PRIME, PrimeField
from .paths import (NEG_INF, POS_INF, DegenerateAperiodic, DegeneratePeriodic,
                    NonDegenerate, PathEngine, PathReport, blocks,
                    classify_degenerate, directing_objects, min_weight,
                    negative_walk_objects, path_exists)
from .quiver import (Arrow, MonomialAlgebra, Quiver, Representation,
                     algebra_from_dict, algebra_to_dict, build_algebra,
                     euler_ext1_dim, euler_form, rep_hom_dim)
from .shiftgraph import (AbelianData, FormalObject, HomEdge, ObjRef, Orbit,
                         ShiftGraph, ValidationReport, expand_hereditary,
                         validate)

__version__ = "0.1.0"

__all__ = [
    "AbelianData", "Arrow", "DEFAULT_PRIME", "DegenerateAperiodic",
    "DegeneratePeriodic", "EndAlgebra", "FormalObject", "Heart", "HeartCheck",
    "HereditaryReport", "HomEdge", "MonomialAlgebra", "NEG_INF",
    "NonDegenerate", "ObjRef", "Orbit", "POS_INF", "PathEngine", "PathReport",
    "PrimeField", "ProjComplex", "Quiver", "Representation", "ShiftGraph",
    "ValidationReport", "algebra_from_dict", "algebra_to_dict",
    "are_isomorphic", "blocks", "build_algebra",
    "build_shiftgraph_from_complexes", "check_complex", "check_hereditary",
    "classify_degenerate", "cohomology", "directing_objects",
    "euler_ext1_dim", "euler_form", "expand_hereditary", "extract_heart",
    "gen_a2_from_complexes", "gen_dual_numbers", "gen_dynkin_an",
    "gen_example_a2", "gen_semisimple_block", "hom_k_dim", "is_indecomposable",
    "min_weight", "negative_walk_objects", "path_exists", "rep_hom_dim",
    "shift_complex", "truncate", "validate", "verify_heart",
]
