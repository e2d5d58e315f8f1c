"""Local Hilbert symbols over Q, ramified places of H_Q(a, b), and the
reduced discriminant.

Conventions for the local symbol (a, b)_v with a = p**alpha * u, b = p**beta * w:

  odd p:   (a, b)_p = (-1)**(alpha*beta*eps(p)) * (u|p)**beta * (w|p)**alpha
  p = 2:   (a, b)_2 = (-1)**(eps(u)*eps(w) + alpha*omega(w) + beta*omega(u))
  v = inf: -1 iff a < 0 and b < 0

where eps(u) = (u - 1)/2 mod 2 and omega(u) = (u**2 - 1)/8 mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import arith
from .errors import InvalidInputError


@dataclass(frozen=True)
class Place:
    """A place of Q: a finite prime, or the infinite (real) place as prime=None."""

    prime: int | None

    def __post_init__(self) -> None:
        if self.prime is not None and (self.prime < 2 or not arith.is_prime(self.prime)):
            raise InvalidInputError(f"finite places carry a prime, got {self.prime}")

    @property
    def is_finite(self) -> bool:
        return self.prime is not None

    def __str__(self) -> str:
        return "inf" if self.prime is None else str(self.prime)


INFINITE_PLACE = Place(prime=None)


def place_sort_key(v: Place) -> tuple[int, int]:
    """Finite places ascending, the infinite place last."""
    return (1, 0) if v.prime is None else (0, v.prime)


def _split_valuation(n: int, p: int) -> tuple[int, int]:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def _eps(u: int) -> int:
    return ((u - 1) // 2) % 2


def _omega(u: int) -> int:
    return ((u * u - 1) // 8) % 2


def hilbert_symbol(a: int, b: int, place: Place) -> int:
    """(a, b)_v in {+1, -1}: +1 iff H(a, b) splits over the completion at v."""
    if a == 0 or b == 0:
        raise InvalidInputError("hilbert_symbol needs nonzero arguments")
    if place.prime is None:
        return -1 if (a < 0 and b < 0) else 1
    p = place.prime
    alpha, u = _split_valuation(a, p)
    beta, w = _split_valuation(b, p)
    if p == 2:
        exponent = _eps(u) * _eps(w) + alpha * _omega(w) + beta * _omega(u)
        return -1 if exponent % 2 else 1
    sign = 1
    if alpha % 2 and beta % 2 and _eps(p):
        sign = -sign
    if beta % 2:
        sign *= arith.legendre(u, p)
    if alpha % 2:
        sign *= arith.legendre(w, p)
    return sign


@dataclass(frozen=True)
class RamificationData:
    """Ramified places of H_Q(a, b); the reduced discriminant is the product
    of the finite ones (1 when none ramify, which happens iff H splits over Q)."""

    ramified: tuple[Place, ...]
    reduced_discriminant: int

    @property
    def splits_over_q(self) -> bool:
        return self.reduced_discriminant == 1


def ramified_places(a: int, b: int) -> RamificationData:
    """Evaluate the local symbol at infinity and at every prime dividing 2ab.

    Any ramified prime divides 2ab, so the candidate set is complete; the
    number of -1 places is even by Hilbert reciprocity.
    """
    if a == 0 or b == 0:
        raise InvalidInputError("H(a, b) needs nonzero a, b")
    candidates = {2}
    for n in (a, b):
        candidates.update(p for p, _ in arith.factorize(abs(n)))
    ramified = [Place(p) for p in sorted(candidates) if hilbert_symbol(a, b, Place(p)) == -1]
    if hilbert_symbol(a, b, INFINITE_PLACE) == -1:
        ramified.append(INFINITE_PLACE)
    ramified.sort(key=place_sort_key)
    assert len(ramified) % 2 == 0, f"Hilbert product formula violated for ({a}, {b})"
    disc = 1
    for v in ramified:
        if v.prime is not None:
            disc *= v.prime
    return RamificationData(ramified=tuple(ramified), reduced_discriminant=disc)


def discriminant_fast_path(p: int, q: int) -> int | None:
    """Closed-form reduced discriminant of H_Q(p, q) for the covered prime pairs.

    Because H(p, q) and H(q, p) are isomorphic, the three cases are tried in
    both argument orders:

      1. p % 4 == q % 4 == 3 and (q|p) != 1          ->  2p
      2. q == 2 and p % 8 == 3                       ->  2p
      3. p or q == 1 (mod 4), q odd, and (p|q) == -1 ->  pq

    Returns None when no case applies in either order.
    """
    arith.require_distinct_primes(p, q)
    for x, y in ((p, q), (q, p)):
        disc = _fast_path_ordered(x, y)
        if disc is not None:
            return disc
    return None


def _fast_path_ordered(p: int, q: int) -> int | None:
    if p % 4 == 3 and q % 4 == 3 and arith.legendre(q, p) != 1:
        return 2 * p
    if q == 2 and p % 8 == 3:
        return 2 * p
    if q != 2 and (p % 4 == 1 or q % 4 == 1) and arith.legendre(p, q) == -1:
        return p * q
    return None
