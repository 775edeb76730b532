"""
Exact Euler calculus on the coordinate strata of P^n, the
Chern-Schwartz-MacPherson transformation, and a solver for the linear
constraints that naturality places on transformations from constructible
functions to rational homology.
"""

from .constructible import (
    ConstructibleFunction,
    euler_integral,
    evaluate,
    indicator_L,
    indicator_orbit,
    indicator_projective,
    indicator_subspace,
    indicator_U,
)
from .csm import (
    csm,
    csm_closed_rule,
    csm_component,
    decompose_into_csm,
    total_chern_coefficients,
    verify_quotient_isomorphism,
    verify_theorem1,
)
from .expr import ParseError, parse, serialize
from .homology import HomologyClass, component, fundamental_class, top_component
from .solver import (
    SubcategorySpec,
    assemble,
    solve,
    uniqueness_report,
    verify_eigenvalue_vanishing,
)
from .strata import (
    AmbientSpace,
    StratumSet,
    moebius_transform,
    orbit_dimension,
    strata_of_dimension,
    zeta_transform,
)
from .varmaps import (
    CoordinateInclusion,
    CoordinatePermutation,
    PowerMap,
    compose,
    fiber_oracle,
    pushforward_cf,
    pushforward_homology,
)

__version__ = "0.1.0"
