"""quatsplit: exact division/split decisions for quaternion algebras H(p1, p2)
over quadratic, biquadratic, cyclotomic, and Kummer base fields, with an
independent local-global oracle for cross-validation."""

from .arith import euler_phi, is_prime, legendre, multiplicative_order, primes_up_to
from .classify import (
    Biquadratic,
    Certainty,
    Cyclotomic,
    FieldDescriptor,
    Kummer,
    Outcome,
    Quadratic,
    Rational,
    TraceStep,
    Verdict,
    classify,
    classify_biquadratic,
    classify_cyclotomic,
    classify_kummer,
    classify_prop41,
    classify_quadratic,
)
from .cyclotomic import (
    CyclotomicField,
    FactorizationShape,
    canonical_n,
    factorization_shape,
    make_cyclotomic,
    maximal_real_subfield_degree,
    quadratic_subfield,
    splits_completely,
)
from .errors import (
    BadModulusError,
    DisallowedValueError,
    EqualPrimesError,
    InvalidInputError,
    NonSquarefreeError,
    UnsupportedFieldError,
)
from .hilbert import (
    INFINITE_PLACE,
    Place,
    RamificationData,
    discriminant_fast_path,
    hilbert_symbol,
    ramified_places,
)
from .oracle import LocalDegreeProfile, division_oracle, local_degree
from .quadratic import QuadraticField, SplittingType, make_quadratic, splitting_type

__version__ = "0.1.0"

__all__ = [
    "BadModulusError",
    "Biquadratic",
    "Certainty",
    "Cyclotomic",
    "CyclotomicField",
    "DisallowedValueError",
    "EqualPrimesError",
    "FactorizationShape",
    "FieldDescriptor",
    "INFINITE_PLACE",
    "InvalidInputError",
    "Kummer",
    "LocalDegreeProfile",
    "NonSquarefreeError",
    "Outcome",
    "Place",
    "Quadratic",
    "QuadraticField",
    "RamificationData",
    "Rational",
    "SplittingType",
    "TraceStep",
    "UnsupportedFieldError",
    "Verdict",
    "canonical_n",
    "classify",
    "classify_biquadratic",
    "classify_cyclotomic",
    "classify_kummer",
    "classify_prop41",
    "classify_quadratic",
    "discriminant_fast_path",
    "division_oracle",
    "euler_phi",
    "factorization_shape",
    "hilbert_symbol",
    "is_prime",
    "legendre",
    "local_degree",
    "make_cyclotomic",
    "make_quadratic",
    "maximal_real_subfield_degree",
    "multiplicative_order",
    "primes_up_to",
    "quadratic_subfield",
    "ramified_places",
    "splits_completely",
    "splitting_type",
]
