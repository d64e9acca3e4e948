"""Exact invariants of irreducible plane curve germs."""

from .errors import (
    ContactUndecidableError,
    NumericError,
    PlanebranchError,
    PolyParseError,
    ValidationError,
    VerificationError,
)
from .poly import (
    BiPoly,
    intersection_multiplicity,
    jacobian_det,
    milnor_number,
    resultant_y,
)
from .diagram import (
    ElementarySegment,
    NewtonDiagram,
    diagram_difference,
    diagram_from_support,
    diagram_of,
    lower_hull,
    minkowski_sum,
)
from .branch import (
    CharSequence,
    Semigroup,
    approximate_root,
    approximate_root_semigroup,
    build_test_branch,
    char_to_semigroup,
    characteristic_roots,
    milnor_from_semigroup,
    random_semigroup,
    random_test_branch,
    semigroup_of,
    semigroup_to_char,
)
from .jacobian import (
    JndFamily,
    RecoveryData,
    family_from_json_dict,
    jacobian_invariants,
    jnd_family,
    jnd_formula,
    recover_semigroup,
    recovery_data,
)
from .puiseux import (
    ContactClass,
    PuiseuxSeries,
    contact,
    contact_classes,
    jnd_oracle,
    puiseux_expand,
    root_contacts,
    verify_cycle,
    verify_decomposition,
)
from .parsing import parse_poly

__version__ = "0.1.0"
