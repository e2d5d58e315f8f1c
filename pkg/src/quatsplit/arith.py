"""Exact modular arithmetic: primality, Legendre symbols, totients, orders.

Everything here is a pure function on plain ints.  Inputs that the public
contracts bound to 64 bits are range-checked; Python ints make overflow a
non-issue beyond that.
"""

from __future__ import annotations

import math

from .errors import EqualPrimesError, InvalidInputError

UINT64_MAX = 2**64 - 1

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Deterministic Miller-Rabin witness tiers; each set is proven complete for
# n below the paired bound, and the last tier covers the whole 64-bit range.
_MR_TIERS = (
    (2047, (2,)),
    (1373653, (2, 3)),
    (9080191, (31, 73)),
    (25326001, (2, 3, 5)),
    (3215031751, (2, 3, 5, 7)),
    (4759123141, (2, 7, 61)),
    (1122004669633, (2, 13, 23, 1662803)),
    (2152302898747, (2, 3, 5, 7, 11)),
    (3474749660383, (2, 3, 5, 7, 11, 13)),
    (341550071728321, (2, 3, 5, 7, 11, 13, 17)),
    (3825123056546413051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (2**64, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2**64 (no probabilistic error)."""
    if n < 0 or n > UINT64_MAX:
        raise InvalidInputError(f"is_prime expects 0 <= n < 2**64, got {n}")
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    witnesses: tuple[int, ...] = _MR_TIERS[-1][1]
    for bound, tier in _MR_TIERS:
        if n < bound:
            witnesses = tier
            break
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def require_prime(p: int) -> None:
    """Raise unless p is a positive prime."""
    if p < 2 or not is_prime(p):
        raise InvalidInputError(f"expected a positive prime, got {p}")


def require_distinct_primes(p1: int, p2: int) -> None:
    """Raise unless p1, p2 are distinct positive primes."""
    require_prime(p1)
    require_prime(p2)
    if p1 == p2:
        raise EqualPrimesError(f"the two primes must be distinct, got {p1} twice")


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) in {-1, 0, +1} for an odd prime p.

    Euler's criterion: a^((p-1)/2) mod p.  Negative a is reduced mod p first.
    """
    if p < 3 or not is_prime(p):
        raise InvalidInputError(f"legendre modulus must be an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 by trial division, ascending primes."""
    if n < 1:
        raise InvalidInputError(f"factorize expects n >= 1, got {n}")
    factors = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                factors.append((p, e))
        f += 6
    if n > 1:
        factors.append((n, 1))
    return factors


def euler_phi(n: int) -> int:
    """Euler's totient: count of 1 <= k <= n coprime to n."""
    if n < 1:
        raise InvalidInputError(f"euler_phi expects n >= 1, got {n}")
    phi = 1
    for p, e in factorize(n):
        phi *= p ** (e - 1) * (p - 1)
    return phi


def multiplicative_order(a: int, n: int) -> int:
    """Smallest f >= 1 with a**f == 1 (mod n); needs n >= 2 and gcd(a, n) == 1."""
    if n < 2:
        raise InvalidInputError(f"multiplicative_order expects n >= 2, got {n}")
    a %= n
    if math.gcd(a, n) != 1:
        raise InvalidInputError(f"multiplicative_order needs gcd(a, n) = 1, got gcd = {math.gcd(a, n)}")
    x, f = a, 1
    while x != 1:
        x = x * a % n
        f += 1
    return f


def is_squarefree(n: int) -> bool:
    """True when no square > 1 divides n (sign ignored, n nonzero)."""
    if n == 0:
        raise InvalidInputError("0 is not a valid squarefree candidate")
    return all(e == 1 for _, e in factorize(abs(n)))


def squarefree_part(n: int) -> int:
    """The squarefree d with n = d * m**2, carrying the sign of n."""
    if n == 0:
        raise InvalidInputError("0 has no squarefree part")
    d = 1
    for p, e in factorize(abs(n)):
        if e % 2 == 1:
            d *= p
    return d if n > 0 else -d


def primes_up_to(n: int) -> list[int]:
    """Ascending primes <= n (sieve of Eratosthenes)."""
    if n < 2:
        return []
    sieve = bytearray((1,)) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p in range(2, n + 1) if sieve[p]]
