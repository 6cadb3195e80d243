"""Homology of graded posets through small chain complexes built from local
covering families, with an order-complex oracle for verification."""
from .analysis import (free_bound_check, free_objects, size_report,
                       verify_local_sphericity)
from .builders import (PermutationGroup, SimplicialComplex, elementary_abelian_subgroups,
                       face_poset, group_from_generators, order_complex, quillen_poset)
from .chains import (Chain, basis_cycles, boundary, cone_fill, coords, suspension,
                     truncation)
from .complexes import (FreeChainComplex, oracle_complex, reduced_complex,
                        simplicial_chain_complex)
from .family import (LocalCoveringFamily, build_atom_modular_lcf, k_numbers,
                     sphere_chain_count, validate_lcf)
from .homology import CoefficientRing, homology, quillen_euler, smith_normal_form
from .kernels import BACKEND
from .poset import (BOTTOM, GradedPoset, build_poset, classify_local_type, down_set,
                    is_atom_modular, join)

__version__ = "0.1.0"
