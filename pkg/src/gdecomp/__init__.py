"""Exact-arithmetic toolkit for subset-sum matrix polytopes.

Decides membership of symmetric nonnegative matrices in the polytope cut out
by the inequalities  sum_{i,j in alpha} a_ij <= |alpha|  (and its saturated
slice with total sum m), tests and enumerates extreme points via saturated
neighborhoods, and constructs decompositions A = (X + X^t)/2 with X
stochastic or substochastic, with machine-checkable certificates on both
success and failure.  All arithmetic is exact rational.
"""

from .errors import (
    AsymmetricInputError,
    CapExceededError,
    DiagonalOverflowError,
    GdecompError,
    InternalInvariantViolation,
    InvalidIndexSetError,
    InvalidPartitionError,
    IsExtremeError,
    LengthMismatchError,
    NegativeEntryError,
    NotExtremeError,
    NotMemberError,
    NotOnGridError,
    NotStochasticError,
    OrderMismatchError,
    ParseError,
)
from .matrices import (
    EXHAUSTIVE_CAP,
    HALF,
    CanonicalForm,
    IndexSet,
    Permutation,
    SymMatrix,
    as_fraction,
    canonical_form,
    direct_sum,
    extend_to_saturated,
    is_grid_matrix,
    is_half_grid_matrix,
    permute,
    principal_submatrix,
    principal_sum,
)
from .formats import (
    format_rational,
    parse_matrix,
    parse_rational,
    parse_square_matrix,
    serialize_matrix,
    serialize_square_matrix,
)
from .flow import FlowNetwork, MaxFlowResult
from .membership import (
    TOTAL_SUM_MISMATCH,
    MembershipVerdict,
    check_Um,
    check_Um_bruteforce,
    check_Um_mincut,
    check_Um_upper,
)
from .saturation import (
    SaturationReport,
    is_F_matrix,
    max_sat_neighborhood,
    min_sat_neighborhood,
    saturated_sets,
    saturation_report,
)
from .extremity import (
    ConvexCombination,
    DuplicateNeighborhood,
    ExtremityReport,
    MissingNeighborhood,
    ScanReport,
    conjecture_scan,
    enumerate_extreme,
    grid_matrices,
    grid_size,
    scan_grid_size,
    is_extreme_criterion,
    is_extreme_nullspace,
    krein_milman_decompose,
    split_nonextreme,
)
from .decomposition import (
    DecompResult,
    build_flow_network,
    g_decompose,
    g_decompose_extreme_inductive,
    g_decompose_extreme_substochastic,
    max_flow,
    verify_decomposition,
)
from .sampling import SplitMix64, simplex_lattice_point
from .qso import (
    QfBoundsResult,
    QuadraticOperator,
    SimplexVector,
    averaging_operator,
    majorizes,
    parse_operator,
    qf_bounds_certificate,
    qo_apply,
    qo_gds_necessary,
    qo_gds_sample,
    qo_is_stochastic,
    quadratic_form,
    serialize_operator,
    sort_desc,
)

__version__ = "0.1.0"
