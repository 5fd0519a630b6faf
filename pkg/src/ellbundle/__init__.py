"""Finite classification of Calabi-Yau elliptic fibrations in P(L^a + L^b + O_B).

Given the intersection numbers of a polarized surface (B, L), list the pairs
a >= b >= 0 for which a generic anticanonical hypersurface of the bundle
can be a Calabi-Yau elliptic fibration over B, together with Chern-class
data computed exactly in the Chow ring of the bundle.
"""

from .chow import (
    BaseDivisor,
    BundlePair,
    ChowClass,
    ChowRing,
    DefectError,
    chern_ambient,
    chern_cy,
    degree,
    euler_characteristic,
    friedman_residual,
    mul,
    section_class,
    section_invariants,
)
from .cubic import (
    CoefficientStatus,
    MonomialWeight,
    coefficient_status,
    reducibility_certified,
    section_guaranteed,
    weierstrass_discriminant_weight,
    weight,
)
from .enumeration import (
    EnumerationReport,
    PairRecord,
    PairStatus,
    classify_pair,
    conic_points_irreducible,
    conic_points_reducible,
    count_paper_bounds,
    count_small_exact,
    enumerate_all,
    hodge_discriminant,
    small_region,
)
from .surface import (
    BaseSurface,
    SurfaceError,
    ValidationResult,
    load_surface,
    preset_del_pezzo_submultiple,
    preset_projective_plane,
    validate,
)

__version__ = "0.1.0"
