"""Cyclotomic fields Q(zeta_n): canonical labels, prime factorization shape,
quadratic subfields, and subfield degrees.

Fields are identified by the canonical index n alone (n >= 3, n % 4 != 2);
no root-of-unity arithmetic happens anywhere.  Every question answered here
is arithmetic on n, p mod n, and symbols.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import arith
from .errors import InvalidInputError


@dataclass(frozen=True)
class CyclotomicField:
    n: int
    degree: int


@dataclass(frozen=True)
class FactorizationShape:
    """(e, f, g): ramification index, residual degree, number of primes over p."""

    e: int
    f: int
    g: int


def canonical_n(n: int) -> int:
    """Canonical index: Q(zeta_{2m}) = Q(zeta_m) for odd m, so halve n % 4 == 2."""
    if n < 3:
        raise InvalidInputError(f"cyclotomic index must be >= 3, got {n}")
    return n // 2 if n % 4 == 2 else n


def make_cyclotomic(n: int) -> CyclotomicField:
    m = canonical_n(n)
    return CyclotomicField(n=m, degree=arith.euler_phi(m))


def _require_canonical(n: int) -> None:
    if n < 3 or n % 4 == 2:
        raise InvalidInputError(f"expected a canonical cyclotomic index, got {n} (see canonical_n)")


def factorization_shape(p: int, n: int) -> FactorizationShape:
    """Shape of p Z[zeta_n] = (P_1 ... P_g)**e with residual degree f.

    For p not dividing n: e = 1 and f is the multiplicative order of p mod n.
    For p | n, write n = p**a * m with p not dividing m: the p-power part is
    totally ramified, so e = phi(p**a) and f is the order of p mod m (1 when
    m <= 2).  In all cases e * f * g = phi(n).
    """
    arith.require_prime(p)
    _require_canonical(n)
    m, p_power = n, 1
    while m % p == 0:
        m //= p
        p_power *= p
    e = arith.euler_phi(p_power)
    f = 1 if m <= 2 else arith.multiplicative_order(p, m)
    g = arith.euler_phi(m) // f
    return FactorizationShape(e=e, f=f, g=g)


def splits_completely(p: int, n: int) -> bool:
    """p factors into phi(n) distinct primes of Z[zeta_n] iff p == 1 (mod n)."""
    arith.require_prime(p)
    _require_canonical(n)
    return p % n == 1


def quadratic_subfield(p: int) -> int:
    """The d with Q(sqrt(d)) inside Q(zeta_p): +p for p % 4 == 1, -p for p % 4 == 3."""
    arith.require_prime(p)
    if p == 2:
        raise InvalidInputError("Q(zeta_2) = Q has no quadratic subfield; p must be odd")
    return p if p % 4 == 1 else -p


def maximal_real_subfield_degree(n: int) -> int:
    """Degree phi(n)/2 of the maximal real subfield Q(zeta_n + 1/zeta_n)."""
    _require_canonical(n)
    return arith.euler_phi(n) // 2
