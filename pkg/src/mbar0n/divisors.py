"""Symmetric divisor classes on M_{0,n} and their intersections with vital curves.

A symmetric (S_n-invariant) divisor class is written sum_j r_j D_j over the
boundary classes D_2, ..., D_{floor(n/2)}.  Only those coefficients are
stored; any index 1 <= i <= n-1 is resolved through r_i = r_{n-i} and r_1 = 0.

Every scalar is a :class:`fractions.Fraction`.  Nothing in this module
touches floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(value: RationalLike) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (or pass through ints/Fractions) exactly.

    Decimal strings and floats are rejected; exactness is the point.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_RE.match(value)
        if match is None:
            raise ValueError(f"not an exact rational 'p/q' or 'p': {value!r}")
        num, den = match.groups()
        if den is not None and int(den) == 0:
            raise ValueError(f"zero denominator in {value!r}")
        return Fraction(int(num), int(den) if den is not None else 1)
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def format_rational(value: Fraction) -> str:
    """``p/q`` in lowest terms, or just ``p`` for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def half(n: int) -> int:
    return n // 2


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 4:
        raise ValueError(f"n must be an integer >= 4, got {n!r}")


@dataclass(frozen=True)
class SymmetricDivisor:
    """``sum_{j=2}^{floor(n/2)} r_j D_j`` with exact coefficients.

    ``coeffs[0]`` is r_2, ``coeffs[-1]`` is r_{floor(n/2)}.
    """

    n: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        _check_n(self.n)
        coeffs = tuple(parse_rational(c) for c in self.coeffs)
        if len(coeffs) != half(self.n) - 1:
            raise ValueError(
                f"n={self.n} needs {half(self.n) - 1} coefficients (r_2..r_{half(self.n)}), "
                f"got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, n: int) -> "SymmetricDivisor":
        _check_n(n)
        return cls(n, (Fraction(0),) * (half(n) - 1))

    def coefficient(self, i: int) -> Fraction:
        return coefficient(self, i)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "SymmetricDivisor") -> "SymmetricDivisor":
        return add(self, other)

    def __sub__(self, other: "SymmetricDivisor") -> "SymmetricDivisor":
        return add(self, scale(other, -1))

    def __neg__(self) -> "SymmetricDivisor":
        return scale(self, -1)

    def __mul__(self, factor: RationalLike) -> "SymmetricDivisor":
        return scale(self, factor)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return " ".join(format_rational(c) for c in self.coeffs)


@dataclass(frozen=True, order=True)
class VitalPartition:
    """A vital curve class, indexed by a sorted partition a+b+c+d = n."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if not (1 <= self.a <= self.b <= self.c <= self.d):
            raise ValueError(
                f"vital partition must satisfy 1 <= a <= b <= c <= d, got {tuple(self)}"
            )

    @classmethod
    def of(cls, *parts: int) -> "VitalPartition":
        """Build from four positive parts in any order."""
        if len(parts) == 1:
            parts = tuple(parts[0])
        if len(parts) != 4:
            raise ValueError(f"a vital partition has four parts, got {parts!r}")
        return cls(*sorted(int(p) for p in parts))

    @property
    def n(self) -> int:
        return self.a + self.b + self.c + self.d

    def __iter__(self) -> Iterator[int]:
        return iter((self.a, self.b, self.c, self.d))

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c},{self.d})"


def canonical_class(n: int) -> SymmetricDivisor:
    """K of M_{0,n}: coefficient of D_j is ((j-2)(n-1) - j(j-1)) / (n-1)."""
    _check_n(n)
    return SymmetricDivisor(
        n,
        tuple(Fraction((j - 2) * (n - 1) - j * (j - 1), n - 1) for j in range(2, half(n) + 1)),
    )


def boundary(n: int) -> SymmetricDivisor:
    """Total boundary D = sum_j D_j."""
    _check_n(n)
    return SymmetricDivisor(n, (Fraction(1),) * (half(n) - 1))


def coefficient(divisor: SymmetricDivisor, i: int) -> Fraction:
    """r_i for any 1 <= i <= n-1, folding with r_i = r_{n-i} and r_1 = 0."""
    n = divisor.n
    if not 1 <= i <= n - 1:
        raise IndexError(f"coefficient index must lie in 1..{n - 1}, got {i}")
    i = min(i, n - i)
    if i == 1:
        return Fraction(0)
    return divisor.coeffs[i - 2]


def add(d1: SymmetricDivisor, d2: SymmetricDivisor) -> SymmetricDivisor:
    if d1.n != d2.n:
        raise ValueError(f"cannot add divisors on M_0,{d1.n} and M_0,{d2.n}")
    return SymmetricDivisor(d1.n, tuple(x + y for x, y in zip(d1.coeffs, d2.coeffs)))


def scale(divisor: SymmetricDivisor, factor: RationalLike) -> SymmetricDivisor:
    lam = parse_rational(factor)
    return SymmetricDivisor(divisor.n, tuple(lam * c for c in divisor.coeffs))


def enumerate_vital_partitions(n: int) -> list[VitalPartition]:
    """All a <= b <= c <= d with a+b+c+d = n, in lexicographic order."""
    out = []
    for a in range(1, n // 4 + 1):
        for b in range(a, (n - a) // 3 + 1):
            for c in range(b, (n - a - b) // 2 + 1):
                out.append(VitalPartition(a, b, c, n - a - b - c))
    return out


def intersect_vital(divisor: SymmetricDivisor, p: VitalPartition) -> Fraction:
    """Intersection number with the vital curve of ``p``.

    r_{a+b} + r_{a+c} + r_{a+d} - r_a - r_b - r_c - r_d.  The third positive
    term is r_{a+d}; the criterion is symmetric in a, b, c, d only that way.
    """
    if p.n != divisor.n:
        raise ValueError(f"partition {p} sums to {p.n}, divisor lives on n={divisor.n}")
    a, b, c, d = p
    r = divisor.coefficient
    return r(a + b) + r(a + c) + r(a + d) - r(a) - r(b) - r(c) - r(d)


@dataclass(frozen=True)
class FNefVerdict:
    """Outcome of an F-nefness scan.

    ``witness`` is the lexicographically first partition attaining
    ``min_value``; ``contracted`` lists every partition with intersection 0.
    """

    nef: bool
    min_value: Fraction
    witness: VitalPartition
    contracted: tuple[VitalPartition, ...]

    def __bool__(self) -> bool:
        return self.nef


def is_f_nef(divisor: SymmetricDivisor) -> FNefVerdict:
    best_value: Fraction | None = None
    best: VitalPartition | None = None
    contracted = []
    for p in enumerate_vital_partitions(divisor.n):
        value = intersect_vital(divisor, p)
        if value == 0:
            contracted.append(p)
        if best_value is None or value < best_value:
            best_value, best = value, p
    assert best is not None and best_value is not None
    return FNefVerdict(best_value >= 0, best_value, best, tuple(contracted))


def contracted_partitions(divisor: SymmetricDivisor) -> frozenset[VitalPartition]:
    """Vital partitions whose curve has intersection exactly 0 with ``divisor``."""
    return frozenset(
        p for p in enumerate_vital_partitions(divisor.n) if intersect_vital(divisor, p) == 0
    )


def divisor_from_coeffs(n: int, coeffs: Iterable[RationalLike]) -> SymmetricDivisor:
    return SymmetricDivisor(n, tuple(parse_rational(c) for c in coeffs))
