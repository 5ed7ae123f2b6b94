"""cmtkit: exact deciders for CM_t and k-CM_t simplicial complexes."""

from .classify import (
    CRITERIA,
    ClassificationReport,
    JoinObservation,
    Witness,
    classify,
    cm_t_witness,
    cm_witness,
    explore_join,
    is_buchsbaum,
    is_cm,
    is_cm_t,
    is_k_buchsbaum,
    is_k_cm_t,
    is_k_cm_t_unbounded,
    is_pure,
    k_cm_t_witness,
    max_k,
    min_t,
)
from .core import EMPTY_FACE, DeletionReport, Face, SimplicialComplex, from_facets
from .fields import GF2, GF3, GF5, RATIONALS, FieldSpec
from .files import ParseError, dump, emit, load, parse
from .generators import (
    GluedFamilySpec,
    GluedRealizabilityError,
    SplitMix64,
    boundary_simplex,
    glued_simplices,
    miyazaki_example,
    projective_plane_6,
    random_pure,
    simplex,
)
from .homology import (
    BettiVector,
    BoundaryMatrix,
    boundary_matrices,
    local_betti,
    reduced_betti,
    reduced_euler_from_faces,
)
from .linalg import active_backend, rank, rank_mod_p, rank_rational
from .snf import betti_via_snf, smith_diagonal

__version__ = "0.1.0"

__all__ = [
    "BettiVector", "BoundaryMatrix", "ClassificationReport", "CRITERIA",
    "DeletionReport", "EMPTY_FACE", "Face", "FieldSpec", "GF2", "GF3", "GF5",
    "GluedFamilySpec", "GluedRealizabilityError", "JoinObservation",
    "ParseError", "RATIONALS", "SimplicialComplex", "SplitMix64", "Witness",
    "active_backend", "betti_via_snf", "boundary_matrices", "boundary_simplex",
    "classify", "cm_t_witness", "cm_witness", "dump", "emit", "explore_join",
    "from_facets", "glued_simplices", "is_buchsbaum", "is_cm", "is_cm_t",
    "is_k_buchsbaum", "is_k_cm_t", "is_k_cm_t_unbounded", "is_pure",
    "k_cm_t_witness", "load", "local_betti", "max_k", "min_t",
    "miyazaki_example", "parse", "projective_plane_6", "random_pure", "rank",
    "rank_mod_p", "rank_rational", "reduced_betti", "reduced_euler_from_faces",
    "simplex", "smith_diagonal",
]
