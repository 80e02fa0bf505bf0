"""Exact-arithmetic crepant resolutions and tangent-sheaf deformation
counts for cyclic Calabi-Yau orbifolds C^3/Z_r with isolated
singularities."""

from .errors import (
    BoundaryEdge,
    BoundUnstable,
    InvalidFraction,
    IrregularHole,
    JuniorResolveError,
    MissingNode,
    NonConvergent,
    NotAnEdge,
    NotCalabiYau,
    NotIsolated,
    OutOfRange,
    SizeLimit,
    TruncationOverflow,
)
from .orbifold import (
    ChargeMatrix,
    GroupAction,
    Simplex,
    SimplexPoint,
    charge_matrix,
    coords_from_nu,
    interior_points,
    junior_simplex,
    normalize_action,
    sector_nu,
    sector_nu_num,
    simplex_from_weights,
)
from .hj import ContinuedFraction, CornerFan, CornerRay, corner_fan, hj_expand
from .singlets import (
    SingletTriple,
    TwistedSector,
    case1_counts,
    case1_monomial_counts,
    case2_monomial_counts,
    junior_sectors,
    singlet_count_pf,
    singlets_case1,
    singlets_case2,
    total_singlets,
    twisted_sector,
)
from .triangulation import (
    Quiver,
    Triangulation,
    all_triangulations,
    flip_edge,
    ghilbert_triangulation,
    knockout_triangulation,
    quiver_from_singlets,
    triangulation_from_dict,
    triangulation_to_dict,
)
from .deformations import (
    DeformationReport,
    LaurentMonomial,
    MinimalityResult,
    SectorComparison,
    deformation_report,
    edge_k,
    ext_dim_interior_pair,
    ext_dim_vertex_pair,
    minimality_sweep,
)
from .checks import all_actions, run_checks

__version__ = "0.1.0"

__all__ = [
    "BoundaryEdge",
    "BoundUnstable",
    "ChargeMatrix",
    "ContinuedFraction",
    "CornerFan",
    "CornerRay",
    "DeformationReport",
    "GroupAction",
    "InvalidFraction",
    "IrregularHole",
    "JuniorResolveError",
    "LaurentMonomial",
    "MinimalityResult",
    "MissingNode",
    "NonConvergent",
    "NotAnEdge",
    "NotCalabiYau",
    "NotIsolated",
    "OutOfRange",
    "Quiver",
    "SectorComparison",
    "Simplex",
    "SimplexPoint",
    "SingletTriple",
    "SizeLimit",
    "Triangulation",
    "TruncationOverflow",
    "TwistedSector",
    "all_actions",
    "all_triangulations",
    "case1_counts",
    "case1_monomial_counts",
    "case2_monomial_counts",
    "charge_matrix",
    "coords_from_nu",
    "corner_fan",
    "deformation_report",
    "edge_k",
    "ext_dim_interior_pair",
    "ext_dim_vertex_pair",
    "flip_edge",
    "ghilbert_triangulation",
    "hj_expand",
    "interior_points",
    "junior_sectors",
    "junior_simplex",
    "knockout_triangulation",
    "minimality_sweep",
    "normalize_action",
    "quiver_from_singlets",
    "run_checks",
    "sector_nu",
    "sector_nu_num",
    "simplex_from_weights",
    "singlet_count_pf",
    "singlets_case1",
    "singlets_case2",
    "total_singlets",
    "triangulation_from_dict",
    "triangulation_to_dict",
    "twisted_sector",
]
