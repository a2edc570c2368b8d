"""splintbranch: exact branching coefficients for regular reductive
subalgebras of simple Lie algebras.

Three independent methods are provided and cross-validated:

* splint transfer        (`splint_branching`)  - branching coefficients read
  off as weight multiplicities of a single module of a complementary system;
* carrier recurrence     (`fan_branching`)     - division of the alternating
  orbit sum by the complementary-root product, with exact verification;
* character peeling      (`oracle_branching`)  - direct, assumption-free
  subtraction of subalgebra characters from the parent weight diagram.

All arithmetic is exact (integers and fractions); every module re-verifies
its own key identities and raises InternalInvariantError on any mismatch.
"""

from .errors import (
    ConfigurationError,
    DomainError,
    InternalInvariantError,
    InvalidSubsystemError,
    NotASplintError,
    PropertyViolationError,
    SplintbranchError,
    UnsupportedSplintError,
)
from .exact import Weight
from .rootsys import (
    MAX_RANK,
    RootSystem,
    SubsystemSpec,
    build_root_system,
    build_system,
    identify_components,
    parse_label,
    regular_subsystem,
    weyl_dimension,
)
from .weyl import SignedWeight, orbit_items, reflect, signed_orbit, to_dominant
from .formal import (
    FormalSum,
    character_via_weyl,
    freudenthal_character,
    product_expand,
    saturated_set,
    singular_element,
    unshifted_singular_element,
    weight_tables,
)
from .fan import BranchingResult, Fan, compute_fan, fan_branching
from .splint import (
    SplintDescriptor,
    catalog_entries,
    chamber_condition,
    detect_injective_splint,
    splint_catalog,
    stem_pairing_witnesses,
)
from .branching import (
    TildeModule,
    compare_methods,
    oracle_branching,
    splint_branching,
    tilde_highest_weight,
)

__version__ = "0.1.0"

__all__ = [
    "BranchingResult",
    "ConfigurationError",
    "DomainError",
    "Fan",
    "FormalSum",
    "InternalInvariantError",
    "InvalidSubsystemError",
    "MAX_RANK",
    "NotASplintError",
    "PropertyViolationError",
    "RootSystem",
    "SignedWeight",
    "SplintDescriptor",
    "SplintbranchError",
    "SubsystemSpec",
    "TildeModule",
    "UnsupportedSplintError",
    "Weight",
    "__version__",
    "build_root_system",
    "build_system",
    "catalog_entries",
    "chamber_condition",
    "character_via_weyl",
    "compare_methods",
    "compute_fan",
    "detect_injective_splint",
    "fan_branching",
    "freudenthal_character",
    "identify_components",
    "orbit_items",
    "oracle_branching",
    "parse_label",
    "product_expand",
    "reflect",
    "regular_subsystem",
    "saturated_set",
    "signed_orbit",
    "singular_element",
    "splint_branching",
    "splint_catalog",
    "stem_pairing_witnesses",
    "tilde_highest_weight",
    "to_dominant",
    "unshifted_singular_element",
    "weight_tables",
    "weyl_dimension",
]
