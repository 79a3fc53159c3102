"""Exact combinatorics of toric varieties cut out by coordinate-subspace arrangements."""

from .arrangements import (
    I_full,
    J_pairs,
    LazyComplex,
    SimplicialComplex,
    SubsetCollection,
    ValidationError,
    build_KI,
    is_downward_closed,
    minimalize,
    r_min,
)
from .exact import GaussianRational, gr
from .fans import Cone, Fan, Position, build_fan, cone_contains, one_cones, orbit_limit, primitive_sets, r_sigma
from .mapspace import (
    MapTuple,
    MonicPolynomial,
    RootMultiset,
    discriminant_member,
    in_E,
    in_hol,
    interpolation_rank,
    multiset_to_poly,
    poly_gcd,
    stabilize,
)
from .polyprod import SupportPattern, in_generalized_wedge, in_polyhedral_product, lemma63_check
from .stability import (
    D,
    Dstar,
    SpectralGrid,
    StabilityParams,
    a_t,
    band_scan,
    band_scan_report,
    bundle_rank,
    config_dim,
    connectivity,
    top_stratum_dim,
    vanishing_threshold,
)

__version__ = "0.1.0"
