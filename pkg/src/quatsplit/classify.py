"""Division-vs-split decisions for H(p1, p2) over quadratic, biquadratic,
cyclotomic, and Kummer base fields, with per-case evaluation traces.

Every criterion evaluation is recorded as a (criterion-id, fired) step; a
verdict is Division exactly when some step fired.  Criterion ids are stable
strings asserted by the test suite and rendered by the CLI:

  thm3.1/case1, thm3.1/case2/p≡3mod8, thm3.1/case2/p≡5mod8,
  thm3.1/case3a, thm3.1/case3b            quadratic base Q(sqrt(d))
  thm3.4/... (same shape as thm3.1)       biquadratic base Q(sqrt(d1), sqrt(d2))
  prop3.3/case{1,2,3}                     cyclotomic n = 7
  prop3.5/main                            cyclotomic n = 8
  prop3.6/case{1,2,3a,3b}                 cyclotomic n = 9
  prop3.7/case{1,2,3a,3b}                 cyclotomic n = 11
  prop3.8/case{1,2}                       cyclotomic n = 12
  prop3.9/p1≡1mod5, prop3.9/p2≡1mod5      cyclotomic n = 5 (sufficient only)
  prop4.1/case{1,2,3a,3b}                 cyclotomic n = l**k, l ≡ 3 (mod 4)
  reduction/*                             field rewrites, always marked fired

The "a"/"b" suffixes name the two symmetric branches of the both-odd,
both ≡ 3 (mod 4) case: "a" checks the symbol condition at p1, "b" at p2.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Union

from . import arith, cyclotomic, quadratic
from .errors import BadModulusError, InvalidInputError, UnsupportedFieldError


class Outcome(Enum):
    DIVISION = "Division"
    SPLIT = "Split"
    UNKNOWN = "Unknown"


class Certainty(Enum):
    EXACT = "Exact"
    SUFFICIENT_ONLY = "SufficientOnly"


class TraceStep(NamedTuple):
    criterion: str
    fired: bool


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    certainty: Certainty
    trace: tuple[TraceStep, ...]

    @property
    def fired(self) -> tuple[str, ...]:
        """Ids of the criteria that fired, in evaluation order."""
        return tuple(step.criterion for step in self.trace if step.fired)

    def criteria(self) -> tuple[TraceStep, ...]:
        """The trace without reduction bookkeeping entries."""
        return tuple(s for s in self.trace if not s.criterion.startswith("reduction/"))


# --- base-field descriptors -------------------------------------------------


@dataclass(frozen=True)
class Rational:
    def __str__(self) -> str:
        return "rational"


@dataclass(frozen=True)
class Quadratic:
    d: int

    def __str__(self) -> str:
        return f"quadratic:{self.d}"


@dataclass(frozen=True)
class Biquadratic:
    d1: int
    d2: int

    def __str__(self) -> str:
        return f"biquadratic:{self.d1},{self.d2}"


@dataclass(frozen=True)
class Cyclotomic:
    n: int

    def __str__(self) -> str:
        return f"cyclotomic:{self.n}"


@dataclass(frozen=True)
class Kummer:
    ell: int
    k: int

    def __str__(self) -> str:
        return f"kummer:{self.ell}^{self.k}"


FieldDescriptor = Union[Rational, Quadratic, Biquadratic, Cyclotomic, Kummer]


def _exact(division: bool, steps: list[TraceStep]) -> Verdict:
    outcome = Outcome.DIVISION if division else Outcome.SPLIT
    return Verdict(outcome=outcome, certainty=Certainty.EXACT, trace=tuple(steps))


def _odd_member(p1: int, p2: int) -> int:
    return p1 if p2 == 2 else p2


# --- quadratic base (single discriminant symbol) ----------------------------


def _single_symbol_cases(label: str, disc: int, d: int, p1: int, p2: int) -> list[TraceStep]:
    """The three-case criterion for K = Q(sqrt(d)) with discriminant disc.

    Case 2 applies when one prime is 2 and requires, for the odd prime p,
    p ≡ 3 or 5 (mod 8) together with (disc|p) = 1 or d ≡ 1 (mod 8); the
    congruence on p alone is not enough unless d ≡ 1 (mod 8).
    """
    if p1 != 2 and p2 != 2:
        case1 = (
            (p1 % 4 == 1 or p2 % 4 == 1)
            and arith.legendre(p1, p2) == -1
            and (arith.legendre(disc, p1) == 1 or arith.legendre(disc, p2) == 1)
        )
        both_3_mod_4 = p1 % 4 == 3 and p2 % 4 == 3
        case3a = both_3_mod_4 and arith.legendre(p2, p1) != 1 and (
            arith.legendre(disc, p1) == 1 or d % 8 == 1
        )
        case3b = both_3_mod_4 and arith.legendre(p1, p2) != 1 and (
            arith.legendre(disc, p2) == 1 or d % 8 == 1
        )
        return [
            TraceStep(f"{label}/case1", case1),
            TraceStep(f"{label}/case3a", case3a),
            TraceStep(f"{label}/case3b", case3b),
        ]
    p = _odd_member(p1, p2)
    unit_ok = arith.legendre(disc, p) == 1 or d % 8 == 1
    return [
        TraceStep(f"{label}/case2/p≡3mod8", p % 8 == 3 and unit_ok),
        TraceStep(f"{label}/case2/p≡5mod8", p % 8 == 5 and unit_ok),
    ]


def classify_quadratic(d: int, p1: int, p2: int) -> Verdict:
    """Exact division/split decision for H(p1, p2) over Q(sqrt(d))."""
    field = quadratic.make_quadratic(d)
    arith.require_distinct_primes(p1, p2)
    steps = _single_symbol_cases("thm3.1", field.discriminant, d, p1, p2)
    return _exact(any(s.fired for s in steps), steps)


# --- biquadratic base (paired discriminant symbols) --------------------------


def classify_biquadratic(d1: int, d2: int, p1: int, p2: int) -> Verdict:
    """Exact decision for H(p1, p2) over Q(sqrt(d1), sqrt(d2)).

    The shape mirrors the quadratic criterion with every discriminant symbol
    condition required in both subfields at once, and d ≡ 1 (mod 8) required
    of both d1 and d2.
    """
    k1 = quadratic.make_quadratic(d1)
    k2 = quadratic.make_quadratic(d2)
    if d1 == d2:
        raise InvalidInputError(f"biquadratic field needs distinct d1, d2, got {d1} twice")
    arith.require_distinct_primes(p1, p2)

    def splits_in_both(x: int) -> bool:
        return arith.legendre(k1.discriminant, x) == 1 and arith.legendre(k2.discriminant, x) == 1

    units_ok = d1 % 8 == 1 and d2 % 8 == 1
    if p1 != 2 and p2 != 2:
        case1 = (
            (p1 % 4 == 1 or p2 % 4 == 1)
            and arith.legendre(p1, p2) == -1
            and (splits_in_both(p1) or splits_in_both(p2))
        )
        both_3_mod_4 = p1 % 4 == 3 and p2 % 4 == 3
        case3a = both_3_mod_4 and arith.legendre(p2, p1) != 1 and (splits_in_both(p1) or units_ok)
        case3b = both_3_mod_4 and arith.legendre(p1, p2) != 1 and (splits_in_both(p2) or units_ok)
        steps = [
            TraceStep("thm3.4/case1", case1),
            TraceStep("thm3.4/case3a", case3a),
            TraceStep("thm3.4/case3b", case3b),
        ]
    else:
        p = _odd_member(p1, p2)
        bracket = splits_in_both(p) or units_ok
        steps = [
            TraceStep("thm3.4/case2/p≡3mod8", p % 8 == 3 and bracket),
            TraceStep("thm3.4/case2/p≡5mod8", p % 8 == 5 and bracket),
        ]
    return _exact(any(s.fired for s in steps), steps)


# --- cyclotomic base ---------------------------------------------------------


def _n7_cases(p1: int, p2: int) -> list[TraceStep]:
    # d = -7 ≡ 1 (mod 8): 2 splits in Q(sqrt(-7)), so the q = 2 and the
    # both ≡ 3 (mod 4) cases carry no symbol conditions at all.
    if p1 != 2 and p2 != 2:
        case1 = (
            (p1 % 4 == 1 or p2 % 4 == 1)
            and arith.legendre(p1, p2) == -1
            and (arith.legendre(-7, p1) == 1 or arith.legendre(-7, p2) == 1)
        )
        case3 = p1 % 4 == 3 and p2 % 4 == 3
        return [TraceStep("prop3.3/case1", case1), TraceStep("prop3.3/case3", case3)]
    p = _odd_member(p1, p2)
    return [TraceStep("prop3.3/case2", p % 8 in (3, 5))]


def _n8_cases(p1: int, p2: int) -> list[TraceStep]:
    hit = (
        p1 != 2
        and p2 != 2
        and (p1 % 8 == 1 or p2 % 8 == 1)
        and arith.legendre(p1, p2) == -1
    )
    return [TraceStep("prop3.5/main", hit)]


def _n9_cases(p1: int, p2: int) -> list[TraceStep]:
    # Case 1 keeps the two disjunctions of the underlying quadratic criterion
    # (d = -3) independent: the prime that is 1 mod 4 and the prime with
    # (-3|p) = 1 need not coincide, so a single "1 mod 12" test is too narrow.
    if p1 != 2 and p2 != 2:
        case1 = (
            (p1 % 4 == 1 or p2 % 4 == 1)
            and arith.legendre(p1, p2) == -1
            and (arith.legendre(-3, p1) == 1 or arith.legendre(-3, p2) == 1)
        )
        both_3_mod_4 = p1 % 4 == 3 and p2 % 4 == 3
        case3a = both_3_mod_4 and arith.legendre(p2, p1) != 1 and arith.legendre(-3, p1) == 1
        case3b = both_3_mod_4 and arith.legendre(p1, p2) != 1 and arith.legendre(-3, p2) == 1
        return [
            TraceStep("prop3.6/case1", case1),
            TraceStep("prop3.6/case3a", case3a),
            TraceStep("prop3.6/case3b", case3b),
        ]
    p = _odd_member(p1, p2)
    return [TraceStep("prop3.6/case2", p % 24 in (19, 13))]


def _n11_cases(p1: int, p2: int) -> list[TraceStep]:
    if p1 != 2 and p2 != 2:
        case1 = (
            (p1 % 4 == 1 or p2 % 4 == 1)
            and arith.legendre(p1, p2) == -1
            and (arith.legendre(-11, p1) == 1 or arith.legendre(-11, p2) == 1)
        )
        both_3_mod_4 = p1 % 4 == 3 and p2 % 4 == 3
        case3a = both_3_mod_4 and arith.legendre(p2, p1) != 1 and arith.legendre(-11, p1) == 1
        case3b = both_3_mod_4 and arith.legendre(p1, p2) != 1 and arith.legendre(-11, p2) == 1
        return [
            TraceStep("prop3.7/case1", case1),
            TraceStep("prop3.7/case3a", case3a),
            TraceStep("prop3.7/case3b", case3b),
        ]
    p = _odd_member(p1, p2)
    return [TraceStep("prop3.7/case2", p % 8 in (3, 5) and arith.legendre(-11, p) == 1)]


def _n12_cases(p1: int, p2: int) -> list[TraceStep]:
    if p1 != 2 and p2 != 2:
        case1 = (p1 % 12 == 1 or p2 % 12 == 1) and arith.legendre(p1, p2) == -1
        return [TraceStep("prop3.8/case1", case1)]
    p = _odd_member(p1, p2)
    return [TraceStep("prop3.8/case2", p % 24 == 13)]


def _n5_verdict(p1: int, p2: int, steps: list[TraceStep]) -> Verdict:
    # Sufficient condition only; tried in both argument orders since
    # H(p1, p2) and H(p2, p1) are isomorphic.  No split criterion is known
    # for this field, so the fallback is Unknown rather than Split.
    hit1 = p1 % 5 == 1 and arith.legendre(p2, p1) == -1
    hit2 = p2 % 5 == 1 and arith.legendre(p1, p2) == -1
    steps.append(TraceStep("prop3.9/p1≡1mod5", hit1))
    steps.append(TraceStep("prop3.9/p2≡1mod5", hit2))
    outcome = Outcome.DIVISION if hit1 or hit2 else Outcome.UNKNOWN
    return Verdict(outcome=outcome, certainty=Certainty.SUFFICIENT_ONLY, trace=tuple(steps))


def _prime_power_cases(label: str, ell: int, p1: int, p2: int) -> list[TraceStep]:
    """The prime-power criterion for Q(zeta_{ell**k}), ell ≡ 3 (mod 4).

    Identical for every exponent k, so k does not appear.  The symbol
    (-ell|p) may be replaced by the escape hatch ell ≡ 7 (mod 8) in the
    q = 2 and both ≡ 3 (mod 4) cases (then 2 splits in Q(sqrt(-ell))).
    """
    seven = ell % 8 == 7
    if p1 != 2 and p2 != 2:
        case1 = (
            (p1 % 4 == 1 or p2 % 4 == 1)
            and arith.legendre(p1, p2) == -1
            and (arith.legendre(-ell, p1) == 1 or arith.legendre(-ell, p2) == 1)
        )
        both_3_mod_4 = p1 % 4 == 3 and p2 % 4 == 3
        case3a = both_3_mod_4 and arith.legendre(p2, p1) != 1 and (
            arith.legendre(-ell, p1) == 1 or seven
        )
        case3b = both_3_mod_4 and arith.legendre(p1, p2) != 1 and (
            arith.legendre(-ell, p2) == 1 or seven
        )
        return [
            TraceStep(f"{label}/case1", case1),
            TraceStep(f"{label}/case3a", case3a),
            TraceStep(f"{label}/case3b", case3b),
        ]
    p = _odd_member(p1, p2)
    case2 = p % 8 in (3, 5) and (arith.legendre(-ell, p) == 1 or seven)
    return [TraceStep(f"{label}/case2", case2)]


def _prime_power_root(n: int) -> int | None:
    factors = arith.factorize(n)
    return factors[0][0] if len(factors) == 1 else None


def classify_cyclotomic(n: int, p1: int, p2: int) -> Verdict:
    """Decision for H(p1, p2) over Q(zeta_n).

    Exact for canonical n in {3, 4, 7, 8, 9, 11, 12} and n = l**k with prime
    l ≡ 3 (mod 4); sufficient-only for n in {5, 10} (outcome Unknown when the
    sufficient condition fails).  Other n are unsupported here (the oracle
    module still covers them).
    """
    m = cyclotomic.canonical_n(n)
    arith.require_distinct_primes(p1, p2)
    steps: list[TraceStep] = []
    if m != n:
        steps.append(TraceStep(f"reduction/n{n}→n{m}", True))
    if m == 3:
        steps.append(TraceStep("reduction/Q(ζ3)→Q(√-3)", True))
        steps += _single_symbol_cases("thm3.1", -3, -3, p1, p2)
    elif m == 4:
        steps.append(TraceStep("reduction/Q(ζ4)→Q(i)", True))
        steps += _single_symbol_cases("thm3.1", -4, -1, p1, p2)
    elif m == 5:
        return _n5_verdict(p1, p2, steps)
    elif m == 7:
        steps += _n7_cases(p1, p2)
    elif m == 8:
        steps += _n8_cases(p1, p2)
    elif m == 9:
        steps += _n9_cases(p1, p2)
    elif m == 11:
        steps += _n11_cases(p1, p2)
    elif m == 12:
        steps += _n12_cases(p1, p2)
    else:
        ell = _prime_power_root(m)
        if ell is None or ell % 4 != 3:
            raise UnsupportedFieldError(
                f"no criterion for cyclotomic n = {m}; supported: 3-12 and prime powers l**k with l ≡ 3 (mod 4)"
            )
        steps += _prime_power_cases("prop4.1", ell, p1, p2)
    division = any(s.fired for s in steps if not s.criterion.startswith("reduction/"))
    return _exact(division, steps)


def classify_prop41(ell: int, k: int, p1: int, p2: int) -> Verdict:
    """Direct prime-power criterion for Q(zeta_{ell**k}); verdict independent of k.

    p1 = ell or p2 = ell is rejected as outside the criterion's stated scope;
    classify_cyclotomic and the oracle both handle that case.
    """
    _require_ell_power(ell, k)
    arith.require_distinct_primes(p1, p2)
    if ell in (p1, p2):
        raise InvalidInputError(
            f"the prime-power criterion is not stated for p = {ell}; use classify_cyclotomic"
        )
    steps = _prime_power_cases("prop4.1", ell, p1, p2)
    return _exact(any(s.fired for s in steps), steps)


def classify_kummer(ell: int, k: int, p1: int, p2: int) -> Verdict:
    """Decision for H(p1, p2) over the Kummer field Q(zeta_{ell**k}, a**(1/ell**k)).

    The radical layer has odd degree over Q(zeta_{ell**k}), so the verdict is
    the cyclotomic one whatever the radicand is; it is therefore not a
    parameter.
    """
    _require_ell_power(ell, k)
    n = ell**k
    inner = classify_cyclotomic(n, p1, p2)
    steps = (TraceStep(f"reduction/kummer({ell}^{k})→cyclotomic({n})", True),) + inner.trace
    return Verdict(outcome=inner.outcome, certainty=inner.certainty, trace=steps)


def _require_ell_power(ell: int, k: int) -> None:
    if ell < 2 or not arith.is_prime(ell) or ell % 4 != 3:
        raise BadModulusError(f"need a prime l ≡ 3 (mod 4), got {ell}")
    if k < 1:
        raise InvalidInputError(f"exponent k must be >= 1, got {k}")


def classify(field: FieldDescriptor, p1: int, p2: int) -> Verdict:
    """Dispatch on a field descriptor."""
    match field:
        case Quadratic(d):
            return classify_quadratic(d, p1, p2)
        case Biquadratic(d1, d2):
            return classify_biquadratic(d1, d2, p1, p2)
        case Cyclotomic(n):
            return classify_cyclotomic(n, p1, p2)
        case Kummer(ell, k):
            return classify_kummer(ell, k, p1, p2)
        case Rational():
            raise UnsupportedFieldError("no closed-form criterion over Q; use ramified_places")
    raise UnsupportedFieldError(f"unrecognized field descriptor: {field!r}")
