"""The divisors A_alpha, their models, and the 15-case intersection lemma.

For 2/(n-1) <= alpha <= 1 let k be the largest integer in 1..floor(n/2) with
alpha <= 2/(k+1).  Then

    A_alpha = K + sum_{j<=k} (C(j,2) alpha - (j-2)) D_j + sum_{j>k} alpha D_j.

It is the pullback of K + alpha E from the Hassett space with weights 1/k,
and K + alpha D - A_alpha is an effective exceptional divisor.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional

from .divisors import (
    RationalLike,
    SymmetricDivisor,
    VitalPartition,
    add,
    boundary,
    canonical_class,
    enumerate_vital_partitions,
    half,
    parse_rational,
    scale,
)


def _alpha_in_range(n: int, alpha: RationalLike) -> Fraction:
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    alpha = parse_rational(alpha)
    if not Fraction(2, n - 1) <= alpha <= 1:
        raise ValueError(f"alpha={alpha} outside [2/{n - 1}, 1]")
    return alpha


def threshold_k(n: int, alpha: RationalLike) -> int:
    """Largest k in 1..floor(n/2) with alpha <= 2/(k+1)."""
    alpha = _alpha_in_range(n, alpha)
    k = 1
    while k < half(n) and alpha <= Fraction(2, k + 2):
        k += 1
    return k


def a_alpha(n: int, alpha: RationalLike) -> SymmetricDivisor:
    alpha = _alpha_in_range(n, alpha)
    k = threshold_k(n, alpha)
    K = canonical_class(n)
    extra = tuple(
        comb(j, 2) * alpha - (j - 2) if j <= k else alpha for j in range(2, half(n) + 1)
    )
    return add(K, SymmetricDivisor(n, extra))


def exceptional_divisor(n: int, alpha: RationalLike) -> SymmetricDivisor:
    """K + alpha*D - A_alpha, computed by subtraction."""
    alpha = _alpha_in_range(n, alpha)
    return add(add(canonical_class(n), scale(boundary(n), alpha)), scale(a_alpha(n, alpha), -1))


def exceptional_coefficient(n: int, alpha: RationalLike, j: int) -> Fraction:
    """Closed form of the D_j coefficient of the exceptional divisor."""
    alpha = _alpha_in_range(n, alpha)
    k = threshold_k(n, alpha)
    if 3 <= j <= k:
        return (j - 2) + alpha * (1 - comb(j, 2))
    return Fraction(0)


# -- models -----------------------------------------------------------------


@dataclass(frozen=True)
class Hassett:
    """Weighted stable curves with n equal weights 1/k."""

    k: int

    def label(self, n: int) -> str:
        return f"Hassett 1/{self.k} x{n}"


@dataclass(frozen=True)
class GitQuotient:
    """(P^1)^n // SL_2."""

    def label(self, n: int) -> str:
        return "GIT (P^1)^n//SL_2"


ModelLabel = Hassett | GitQuotient


def model_intervals(n: int) -> list[tuple[Fraction, Fraction, ModelLabel]]:
    """Half-open intervals (lo, hi] of alpha together with their model.

    Hassett(k) owns (2/(k+2), 2/(k+1)] for k < floor(n/2); the GIT quotient
    owns (2/(n-1), 2/(floor(n/2)+1)].  For odd n the Hassett range with
    k = floor(n/2) lies inside the GIT range and the two spaces agree there,
    so GIT is reported and the list stays a tiling.
    """
    m = half(n)
    intervals: list[tuple[Fraction, Fraction, ModelLabel]] = [
        (Fraction(2, k + 2), Fraction(2, k + 1), Hassett(k)) for k in range(1, m)
    ]
    intervals.append((Fraction(2, n - 1), Fraction(2, m + 1), GitQuotient()))
    return [iv for iv in intervals if iv[0] < iv[1]]


def reference_model_intervals(n: int) -> list[tuple[Fraction, Fraction, ModelLabel]]:
    """The reference intervals, Hassett k running to floor((n-1)/2); may overlap for odd n."""
    intervals: list[tuple[Fraction, Fraction, ModelLabel]] = [
        (Fraction(2, k + 2), Fraction(2, k + 1), Hassett(k))
        for k in range(1, (n - 1) // 2 + 1)
    ]
    intervals.append((Fraction(2, n - 1), Fraction(2, half(n) + 1), GitQuotient()))
    return intervals


def model_for_alpha(n: int, alpha: RationalLike) -> ModelLabel:
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    alpha = parse_rational(alpha)
    if not Fraction(2, n - 1) < alpha <= 1:
        raise ValueError(f"alpha={alpha} outside (2/{n - 1}, 1]")
    for lo, hi, model in model_intervals(n):
        if lo < alpha <= hi:
            return model
    raise AssertionError(f"no model interval contains alpha={alpha} for n={n}")


def convex_decompose(n: int, alpha: RationalLike) -> tuple[Fraction, int]:
    """(t, k) with alpha = t*lo + (1-t)*2/(k+1) on the piece of A containing alpha.

    lo is 2/(k+2), except on the last piece (k = floor(n/2)) where it is the
    endpoint 2/(n-1).  A_alpha is affine on each piece, so
    A_alpha = t*A_lo + (1-t)*A_{2/(k+1)} coefficient-wise.
    """
    alpha = _alpha_in_range(n, alpha)
    k = threshold_k(n, alpha)
    lo, hi = convex_endpoints(n, k)
    if lo == hi:
        return Fraction(0), k
    return (hi - alpha) / (hi - lo), k


def convex_endpoints(n: int, k: int) -> tuple[Fraction, Fraction]:
    hi = Fraction(2, k + 1)
    lo = Fraction(2, k + 2) if k < half(n) else Fraction(2, n - 1)
    return lo, hi


# -- the lemma --------------------------------------------------------------


def _f(n: int, k: int, j: int) -> Fraction:
    alpha = Fraction(2, k + 1)
    return j * (j - 1) * ((n - 1) * alpha / 2 - 1) / (n - 1)


def _g(n: int, k: int, j: int) -> Fraction:
    alpha = Fraction(2, k + 1)
    return ((n - 1) * (alpha + j - 2) - j * (j - 1)) / Fraction(n - 1)


def h_value(n: int, k: int, j: int) -> Fraction:
    """Piecewise f / g / f(n-j) at alpha = 2/(k+1); h(0) = h(n) = 0."""
    if not 0 <= j <= n:
        raise ValueError(f"j={j} outside 0..{n}")
    if j <= k:
        return _f(n, k, j)
    if j < n - k:
        return _g(n, k, j)
    return _f(n, k, n - j)


def h_sum(n: int, k: int, p: VitalPartition) -> Fraction:
    a, b, c, d = p
    h = lambda j: h_value(n, k, j)  # noqa: E731
    return h(a + b) + h(a + c) + h(a + d) - h(a) - h(b) - h(c) - h(d)


def case_conditions(k: int, p: VitalPartition) -> list[bool]:
    """Truth value of each of the 15 case conditions, in listed order."""
    a, b, c, d = p
    return [
        a > k,
        a <= k < b,
        b <= k < c and a + b > k,
        b <= k < c and a + b <= k,
        c <= k < d and a + b > k,
        c <= k < d and a + b <= k and a + c > k,
        c <= k < d and a + c <= k and b + c > k,
        c <= k < d and b + c <= k and a + b + c > k,
        c <= k < d and b + c <= k and a + b + c <= k,
        d <= k and a + b > k,
        d <= k and a + b <= k and a + c > k,
        d <= k and a + c <= k and a + d > k and b + c > k,
        d <= k and a + c <= k and a + d <= k and b + c > k,
        d <= k and a + c <= k and a + d > k and b + c <= k,
        d <= k and a + c <= k and a + d <= k and b + c <= k,
    ]


def classify_case(n: int, k: int, p: VitalPartition) -> int:
    """Index 1..15 of the first matching case; exactly one must match."""
    if p.n != n:
        raise ValueError(f"partition {p} does not sum to n={n}")
    hits = [i + 1 for i, hit in enumerate(case_conditions(k, p)) if hit]
    if len(hits) != 1:
        raise AssertionError(f"case list not exclusive for n={n}, k={k}, p={p}: {hits}")
    return hits[0]


class EmptyCaseError(ValueError):
    """Case 15 cannot occur when k < floor(n/2)."""


def case_closed_form(n: int, k: int, p: VitalPartition, case: int) -> Fraction:
    """Closed form of the h-sum on the given case.

    Case 14 uses (n-2d)(n-2-k)/(1+k); that is what the f-expansion of the
    case reduces to (the -k is easy to drop when simplifying).
    """
    a, b, c, d = p
    q = k + 1
    if case == 15:
        raise EmptyCaseError(f"case 15 reached for n={n}, k={k}, p={p}")
    numerators = {
        1: lambda: 2 * k,
        2: lambda: a * (2 + k - a),
        3: lambda: (b - 2) * (k - b) + a * (2 + k - a),
        4: lambda: 2 * a * b,
        5: lambda: (k - c) * (c - 2) + (k - b) * (b - 2) + a * (2 + k - a),
        6: lambda: 2 * a * b + (c - 2) * (k - c),
        7: lambda: a * (a + 2 * b + 2 * c - 2 - k),
        8: lambda: (a + b + c - 2) * (a + b + c - k),
        9: lambda: 0,
        10: lambda: (k - d) * (d - 2) + (k - c) * (c - 2) + (k - b) * (b - 2) + a * (2 + k - a),
        11: lambda: 2 * a * b + (c - 2) * (k - c) + (d - 2) * (k - d),
        12: lambda: a * (2 * b + 2 * c + a - 2 - k) + (d - 2) * (k - d),
        13: lambda: 2 * a * (n - 2 - k),
        14: lambda: (n - 2 * d) * (n - 2 - k),
    }
    if case not in numerators:
        raise ValueError(f"case must be in 1..15, got {case}")
    return Fraction(numerators[case](), q)


def reference_case14(n: int, k: int, p: VitalPartition) -> Fraction:
    """The reference form (n-2d)(n-2)/(1+k) for case 14; it lacks the -k and is kept for comparison."""
    return Fraction((n - 2 * p.d) * (n - 2), k + 1)


@dataclass
class LemmaViolation:
    n: int
    k: int
    partition: VitalPartition
    case: Optional[int]
    h_sum: Fraction
    closed_form: Optional[Fraction]
    problem: str


@dataclass
class LemmaReport:
    n: int
    checked: int = 0
    case_counts: Counter = field(default_factory=Counter)
    violations: list[LemmaViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_lemma(n: int) -> LemmaReport:
    """Exhaustively check the lemma for every 2 <= k < floor(n/2) and partition.

    Checks: h-sum >= 0, h-sum equals the closed form of its case, case 15 is
    never reached, and h-sum == 0 exactly when a+b+c <= k.
    """
    if n < 6:
        raise ValueError(f"the lemma needs n >= 6, got {n}")
    report = LemmaReport(n)
    partitions = enumerate_vital_partitions(n)
    for k in range(2, half(n)):
        for p in partitions:
            report.checked += 1
            value = h_sum(n, k, p)
            try:
                case = classify_case(n, k, p)
            except AssertionError as exc:
                report.violations.append(LemmaViolation(n, k, p, None, value, None, str(exc)))
                continue
            report.case_counts[case] += 1

            def fail(problem: str, closed: Optional[Fraction] = None) -> None:
                report.violations.append(LemmaViolation(n, k, p, case, value, closed, problem))

            if value < 0:
                fail("negative h-sum")
            if (value == 0) != (p.a + p.b + p.c <= k):
                fail("zero set differs from {a+b+c <= k}")
            if case == 15:
                fail("case 15 reached")
                continue
            closed = case_closed_form(n, k, p, case)
            if closed != value:
                fail("closed form disagrees with h-sum", closed)
    return report


# -- the c-interval --------------------------------------------------------

Interval = Optional[tuple[Fraction, Fraction]]


def c_bounds(n: int, k: int) -> dict[str, Fraction]:
    """The four reference bounds on c for alpha = 2/(k+1), taken as given."""
    m = half(n)
    alpha = Fraction(2, k + 1)
    return {
        "lower_low_terms": Fraction(k + 1, n - 1) + Fraction(k + 1, 6),
        "upper_low_terms": Fraction(k + 1, n - 1) + Fraction(k + 1, k),
        "lower_high_terms": Fraction((m - 2) * (n + m) + 2) / ((n - 1) * (m - 2 + alpha)),
        "upper_high_terms": Fraction(k * (n - k)) / ((n - 1) * (k - 1 + alpha)),
    }


def c_interval(n: int, k: int) -> Interval:
    """Intersection of the four reference bounds, or None if it is empty."""
    b = c_bounds(n, k)
    lo = max(b["lower_low_terms"], b["lower_high_terms"])
    hi = min(b["upper_low_terms"], b["upper_high_terms"])
    return (lo, hi) if lo <= hi else None


def direct_c_feasible(n: int, k: int) -> Interval:
    """All c with every coefficient of c*A_alpha - K in [0, 1], alpha = 2/(k+1).

    Each coefficient is affine in c, so the feasible set is an exact interval
    (possibly unbounded above only if some A coefficient vanishes, which is
    handled as a constant constraint).
    """
    alpha = Fraction(2, k + 1)
    A = a_alpha(n, alpha)
    K = canonical_class(n)
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    for slope, offset in zip(A.coeffs, K.coeffs):
        # 0 <= slope*c - offset <= 1
        if slope == 0:
            if not 0 <= -offset <= 1:
                return None
            continue
        a, b = offset / slope, (1 + offset) / slope
        if slope < 0:
            a, b = b, a
        lo = a if lo is None else max(lo, a)
        hi = b if hi is None else min(hi, b)
    if lo is None or hi is None:
        raise ValueError("every coefficient of A_alpha vanishes; c is unconstrained")
    # c must be positive
    return (lo, hi) if lo <= hi and hi > 0 else None
