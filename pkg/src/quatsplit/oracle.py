"""Independent local-global division test.

H(p, q) over a number field K that is Galois over Q is a division algebra
exactly when some place where H_Q(p, q) ramifies has odd local degree in K:
the local division quaternion algebra survives precisely the odd-degree
local extensions, and Galois uniformity makes "the" local degree above a
rational place well defined.  This route never looks at the classification
criteria, so agreement between the two is a real cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import arith, cyclotomic, quadratic
from .classify import (
    Biquadratic,
    Cyclotomic,
    FieldDescriptor,
    Kummer,
    Outcome,
    Quadratic,
    Rational,
)
from .errors import UnsupportedFieldError
from .hilbert import Place, ramified_places


@dataclass(frozen=True)
class LocalDegreeProfile:
    place: Place
    local_degree: int


@lru_cache(maxsize=None)
def local_degree(field: FieldDescriptor, place: Place) -> int:
    """Degree over Q_v of the completion of K above the place v.

    Cyclotomic n: e * f from the factorization shape (2 at infinity, the
    fields are complex).  Quadratic d: 1 when v splits, else 2; at infinity
    2 iff d < 0.  Biquadratic: 1, 2 or 4 by how many of the three quadratic
    subfields v splits in.  Kummer fields are not supported: their local
    degrees depend on the radicand, which is deliberately not modeled.
    """
    match field:
        case Rational():
            return 1
        case Quadratic(d):
            return _quadratic_degree(d, place)
        case Biquadratic(d1, d2):
            return _biquadratic_degree(d1, d2, place)
        case Cyclotomic(n):
            return _cyclotomic_degree(n, place)
        case Kummer(ell, k):
            raise UnsupportedFieldError(
                f"Kummer local degrees depend on the radicand; use cyclotomic:{ell**k}, "
                "which decides division the same way"
            )
    raise UnsupportedFieldError(f"no local degrees for {field}")


def _quadratic_degree(d: int, place: Place) -> int:
    if place.prime is None:
        return 2 if d < 0 else 1
    field = quadratic.make_quadratic(d)
    split = quadratic.splitting_type(place.prime, field) is quadratic.SplittingType.SPLIT
    return 1 if split else 2


def _biquadratic_degree(d1: int, d2: int, place: Place) -> int:
    if d1 == d2:
        raise UnsupportedFieldError(f"biquadratic field needs distinct d1, d2, got {d1} twice")
    if place.prime is None:
        return 2 if (d1 < 0 or d2 < 0) else 1
    d3 = arith.squarefree_part(d1 * d2)
    split_count = sum(
        1
        for d in (d1, d2, d3)
        if quadratic.splitting_type(place.prime, quadratic.make_quadratic(d))
        is quadratic.SplittingType.SPLIT
    )
    # Splitting in two of the three subfields forces the third.
    assert split_count != 2, f"inconsistent splitting at {place} in Q(sqrt {d1}, sqrt {d2})"
    return {3: 1, 1: 2, 0: 4}[split_count]


def _cyclotomic_degree(n: int, place: Place) -> int:
    if place.prime is None:
        return 2
    shape = cyclotomic.factorization_shape(place.prime, cyclotomic.canonical_n(n))
    return shape.e * shape.f


def local_degree_profiles(field: FieldDescriptor, places: tuple[Place, ...]) -> tuple[LocalDegreeProfile, ...]:
    return tuple(LocalDegreeProfile(v, local_degree(field, v)) for v in places)


def division_oracle(field: FieldDescriptor, p1: int, p2: int) -> Outcome:
    """DIVISION iff some ramified place of H_Q(p1, p2) has odd local degree in K."""
    arith.require_distinct_primes(p1, p2)
    ram = ramified_places(p1, p2)
    # Positive slots: the infinite place never ramifies, so only finite
    # degrees can decide.
    assert all(v.is_finite for v in ram.ramified)
    for profile in local_degree_profiles(field, ram.ramified):
        if profile.local_degree % 2 == 1:
            return Outcome.DIVISION
    return Outcome.SPLIT
