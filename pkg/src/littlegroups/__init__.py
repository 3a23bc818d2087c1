"""Little groups of the irreps of O(3), SO(3) and the infinite axial groups.

Enumeration runs through the massive chain criterion over the subgroup
lattice; every result can be cross-checked numerically through tesseral
harmonic representation matrices, group-averaged projectors and free-axis
symmetry detection.
"""

from .groups import (Family, GroupId, GroupElement, GroupDims, group,
                     canonicalize_label, elements, group_order, dims,
                     inversion_lift, GroupError)
from .characters import (Irrep, SubductionResult, Method, so3_irrep, o3_irrep,
                         parse_irrep, chi_rotation, chi_o3, subduce,
                         subduce_trace, subduce_closed, subduce_continuous,
                         rep_vectors, IrrepError, InternalConsistencyError)
from .lattice import LatticeSlice, is_subgroup, subgroups, \
    adjacent_supergroups, export_graph
from .criteria import (LittleGroupEntry, CriterionVerdict, massless_frequency,
                       massive_frequency, michel, ihrig_golubitsky, massive,
                       massive_little_groups, parity_lift, stratum_dimension,
                       so3_little_groups, o3_little_groups,
                       tetrahedral_little_groups)
from .axial import AxialResult, little_group_axial, little_group_cinf, \
    little_group_cinfh, little_group_cinfv, little_group_dinf, \
    little_group_dinfh
from .oracle import (CoeffVector, SymmetryReport, tesseral_eval,
                     rotation_matrix, projector_rank, invariant_basis,
                     detect_symmetry, canonicalize, diagonalize_l2,
                     verify_rep_vectors, ZeroVectorError)

__version__ = "1.0.0"
