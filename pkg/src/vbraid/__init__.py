"""Exact-arithmetic invariants of classical, virtual and flat braids.

Braid-group generators are represented by explicit birational operators on
tuples of exact rational (or rational-function) coordinates.  Words map to
compositions of these operators; images of a base point are invariant vectors
that certify inequality of braids, and applying words to tuples of
independent variables decides equality of the induced maps symbolically.
"""

from .algebra import (
    FieldValue,
    Fraction,
    Monomial,
    Polynomial,
    RationalFunction,
    parse_expression,
    parse_field_value,
    parse_rational,
)
from .cluster import (
    ExchangeMatrix,
    Seed,
    YSeed,
    build_quiver,
    load_seed,
    mutate_x,
    mutate_y,
    r_operator_x,
    r_operator_x_inverse,
    r_operator_y,
    r_operator_y_inverse,
    y_from_x,
)
from .errors import (
    ArityMismatch,
    InvalidStrandCount,
    KindMismatch,
    LengthLimitExceeded,
    SingularPoint,
    WordSyntaxError,
)
from .operators import (
    InvariantResult,
    apply_generator,
    apply_word,
    crossing,
    crossing_inv,
    default_base,
    flat_crossing,
    flat_virtual_swap,
    invariant,
    symbolic_point,
    virtual_swap,
)
from .relations import (
    RelationVerdict,
    check_factorization,
    check_forbidden,
    compare_operators,
    display_report,
    verify_presentation,
    verify_relation,
)
from .words import (
    BraidWord,
    Generator,
    GroupKind,
    format_word,
    free_reduce,
    parse_word,
    relation_table,
    rho,
    sigma,
)

__version__ = "0.1.0"

__all__ = [
    "ArityMismatch",
    "BraidWord",
    "ExchangeMatrix",
    "FieldValue",
    "Fraction",
    "Generator",
    "GroupKind",
    "InvalidStrandCount",
    "InvariantResult",
    "KindMismatch",
    "LengthLimitExceeded",
    "Monomial",
    "Polynomial",
    "RationalFunction",
    "RelationVerdict",
    "Seed",
    "SingularPoint",
    "WordSyntaxError",
    "YSeed",
    "apply_generator",
    "apply_word",
    "build_quiver",
    "check_factorization",
    "check_forbidden",
    "compare_operators",
    "crossing",
    "crossing_inv",
    "default_base",
    "display_report",
    "flat_crossing",
    "flat_virtual_swap",
    "format_word",
    "free_reduce",
    "invariant",
    "load_seed",
    "mutate_x",
    "mutate_y",
    "parse_expression",
    "parse_field_value",
    "parse_rational",
    "parse_word",
    "r_operator_x",
    "r_operator_x_inverse",
    "r_operator_y",
    "r_operator_y_inverse",
    "relation_table",
    "rho",
    "sigma",
    "symbolic_point",
    "verify_presentation",
    "verify_relation",
    "virtual_swap",
    "y_from_x",
]
