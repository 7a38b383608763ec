"""Minimal free resolutions of fat points supported in a hyperplane."""

from .arith import GF, QQ, FieldElement, FieldError, PrimeField, Rationals, parse_field
from .fatpoints import (
    FatPointScheme,
    SchemeError,
    embed_in_hyperplane,
    fat_point_ideal,
    load_scheme,
    point_ideal,
    residual_scheme,
    truncation,
)
from .gb import (
    IdealBasis,
    ModuleBasis,
    buchberger,
    colon_ideal,
    ideal_intersection,
    ideal_membership,
    normal_form,
    syzygies,
)
from .hypercone import (
    LadderData,
    build_ladder,
    cone_resolution,
    construction_report,
    theorem_poincare,
    tower_resolution,
)
from .lift import (
    ComparisonMaps,
    check_R1_containment,
    degree_shift_check,
    euler_witness,
    lift_chain_map,
    lift_chain_map_R1,
)
from .poly import Poly, Ring, polynomial_ring, standard_ring
from .resolve import (
    BiPoly,
    Resolution,
    betti,
    direct_resolution,
    is_minimal,
    minimize,
    poincare,
    verify_complex,
    verify_exactness,
)

__version__ = "0.1.0"
