"""Faces of the symmetric Fulton cone F of M_{0,n}.

Coordinates are (r_2, ..., r_m) with m = floor(n/2).  Each vital partition
gives a linear form; F is the cone where all of them are >= 0.  The special
forms V_i come from 1+1+i+(n-i-2).  F_k is the face cut out by
V_1 = ... = V_{k-2} = 0; it contains A_{2/(k+1)} in its relative interior.

The F-simplex is the simplex cut out by V_1, ..., V_{m-1}; its vertex p_k
lies on every V_i except V_{k-1}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, comb
from typing import Optional, Sequence

from .divisors import (
    SymmetricDivisor,
    VitalPartition,
    canonical_class,
    enumerate_vital_partitions,
    half,
    intersect_vital,
    is_f_nef,
)
from .linalg import Number, nullspace, primitive, rank, same_span
from .polyhedra import ConeDescription, LinearForm, double_description


def partition_label(p: VitalPartition) -> str:
    """``V_i`` for the special partitions (1,1,i,n-i-2), else ``V(a,b,c,d)``."""
    if p.a == 1 and p.b == 1:
        return f"V_{p.c}"
    return f"V({p.a},{p.b},{p.c},{p.d})"


_LABEL_RE = re.compile(r"^V_(\d+)$|^V\((\d+),(\d+),(\d+),(\d+)\)$")


def parse_label(n: int, label: str) -> VitalPartition:
    """Inverse of :func:`partition_label`; ``V_i`` may use either i or n-2-i."""
    match = _LABEL_RE.match(label.replace(" ", ""))
    if match is None:
        raise ValueError(f"unrecognized hyperplane label {label!r}")
    if match.group(1) is not None:
        i = int(match.group(1))
        return VitalPartition.of(1, 1, i, n - i - 2)
    p = VitalPartition.of(*(int(g) for g in match.groups()[1:]))
    if p.n != n:
        raise ValueError(f"{label} does not sum to n={n}")
    return p


def vital_coefficients(n: int, p: VitalPartition) -> tuple[int, ...]:
    """The form r -> intersect_vital(r, p) in coordinates r_2..r_m, unnormalized."""
    if p.n != n:
        raise ValueError(f"partition {p} does not sum to n={n}")
    m = half(n)
    coeffs = [0] * (m - 1)

    def bump(i: int, sign: int) -> None:
        i = min(i, n - i)
        if i >= 2:
            coeffs[i - 2] += sign

    a, b, c, d = p
    for i in (a + b, a + c, a + d):
        bump(i, 1)
    for i in (a, b, c, d):
        bump(i, -1)
    return tuple(coeffs)


def vital_form(n: int, p: VitalPartition) -> LinearForm:
    return LinearForm.of(vital_coefficients(n, p), (partition_label(p),))


def special_hyperplane(n: int, i: int) -> LinearForm:
    """V_i, the form of 1+1+i+(n-i-2), for 1 <= i <= floor(n/2)-1."""
    if not 1 <= i <= half(n) - 1:
        raise ValueError(f"V_i needs 1 <= i <= {half(n) - 1}, got i={i}")
    return vital_form(n, VitalPartition.of(1, 1, i, n - i - 2))


def fulton_forms(n: int) -> list[LinearForm]:
    """One form per vital partition, in partition order (duplicates kept)."""
    return [vital_form(n, p) for p in enumerate_vital_partitions(n)]


# -- the F-simplex ----------------------------------------------------------


def _check_k(n: int, k: int) -> None:
    if not 2 <= k <= half(n):
        raise ValueError(f"k must lie in 2..{half(n)} for n={n}, got {k}")


def f_simplex_vertex(n: int, k: int) -> SymmetricDivisor:
    """p_k: r_i = 2/(n-1) C(i,2) for i <= k, 2/(n-1) (C(i,2) - (i-k)(n-1)/2) beyond."""
    _check_k(n, k)
    scale = Fraction(2, n - 1)
    return SymmetricDivisor(
        n,
        tuple(
            scale * comb(i, 2) if i <= k else scale * (comb(i, 2) - Fraction((i - k) * (n - 1), 2))
            for i in range(2, half(n) + 1)
        ),
    )


def f_simplex_vertex_from_canonical(n: int, k: int) -> SymmetricDivisor:
    """p_k as -K + sum_{i<=k} (i-2) D_i + sum_{i>k} (k-2) D_i."""
    _check_k(n, k)
    extra = SymmetricDivisor(n, tuple(i - 2 if i <= k else k - 2 for i in range(2, half(n) + 1)))
    return extra - canonical_class(n)


def pk_fnef_profile(n: int) -> dict[int, bool]:
    return {k: is_f_nef(f_simplex_vertex(n, k)).nef for k in range(2, half(n) + 1)}


def pk_fnef_threshold(n: int) -> Optional[int]:
    """Least k in 2..floor(n/2) with p_k F-nef, by brute force (None if none)."""
    if n < 6:
        raise ValueError(f"n must be >= 6, got {n}")
    for k, nef in pk_fnef_profile(n).items():
        if nef:
            return k
    return None


def expected_pk_threshold(n: int) -> int:
    return ceil(Fraction(n, 3))


@dataclass(frozen=True)
class TightnessWitness:
    """The partition (p,l,l,l) for n = 3l + p evaluated at two readings of the index."""

    n: int
    l: int
    p: int
    partition: VitalPartition
    value_at_pl: Fraction
    index_alt: Optional[int]
    value_at_alt: Optional[Fraction]


def tightness_witness(n: int) -> TightnessWitness:
    """Evaluate p_l and p_{floor(n/2)-l} on (p,l,l,l) where n = 3l+p, p in {1,2,3}."""
    l = (n - 1) // 3
    p = n - 3 * l
    if l < 2:
        raise ValueError(f"needs l >= 2, i.e. n >= 7; got n={n}")
    part = VitalPartition.of(p, l, l, l)
    value = intersect_vital(f_simplex_vertex_from_canonical(n, l), part)
    alt = half(n) - l
    alt_value = None
    if 2 <= alt <= half(n):
        alt_value = intersect_vital(f_simplex_vertex_from_canonical(n, alt), part)
    else:
        alt = None
    return TightnessWitness(n, l, p, part, value, alt, alt_value)


# -- faces F_k --------------------------------------------------------------


@dataclass(frozen=True)
class SubspaceBasis:
    """A linear subspace of Q^ambient_dim given by independent generators."""

    ambient_dim: int
    vectors: tuple[tuple[int, ...], ...]

    @property
    def reduced_dim(self) -> int:
        return len(self.vectors)

    @property
    def projective_dim(self) -> int:
        return self.reduced_dim - 1

    def lift(self, coords: Sequence[Number]) -> tuple[int, ...]:
        """Primitive integer vector of sum_i coords[i] * vectors[i]."""
        out = [Fraction(0)] * self.ambient_dim
        for t, v in zip(coords, self.vectors):
            for i, x in enumerate(v):
                out[i] += t * x
        return primitive(out)


def face_subspace(n: int, k: int) -> SubspaceBasis:
    """Solutions of V_1 = ... = V_{k-2} = 0.

    One generator with r_i = C(i,2) for i <= k (and 0 beyond), plus a unit
    vector for each free coordinate r_{k+1}, ..., r_m.
    """
    _check_k(n, k)
    m = half(n)
    g0 = tuple(comb(i, 2) if i <= k else 0 for i in range(2, m + 1))
    units = [tuple(int(i == j) for i in range(2, m + 1)) for j in range(k + 1, m + 1)]
    return SubspaceBasis(m - 1, (g0, *units))


def restrict_form(form: LinearForm | Sequence[Number], basis: SubspaceBasis) -> LinearForm:
    coeffs = form.coeffs if isinstance(form, LinearForm) else tuple(form)
    labels = form.labels if isinstance(form, LinearForm) else ()
    if len(coeffs) != basis.ambient_dim:
        raise ValueError(f"form has {len(coeffs)} coefficients, subspace lives in {basis.ambient_dim}")
    return LinearForm.of([sum(Fraction(a) * b for a, b in zip(coeffs, v)) for v in basis.vectors], labels)


@dataclass(frozen=True)
class FacetEntry:
    form: tuple[int, ...]
    labels: tuple[str, ...]
    partitions: tuple[VitalPartition, ...]


@dataclass
class FaceReport:
    """A face of F in reduced coordinates, with facets and vertices.

    ``vertices`` are given back in r-coordinates (r_2..r_m) as primitive
    integer vectors.  A projective vertex (projective_dim 0) has no facets.
    """

    n: int
    k: Optional[int]
    basis: SubspaceBasis
    projective_dim: int
    facets: list[FacetEntry]
    vertices: list[tuple[int, ...]]
    cone: ConeDescription
    contracted: tuple[VitalPartition, ...] = ()
    notes: list[str] = field(default_factory=list)

    def facet_partitions(self) -> list[frozenset[VitalPartition]]:
        return [frozenset(f.partitions) for f in self.facets]


def _face(n: int, basis: SubspaceBasis, k: Optional[int]) -> FaceReport:
    groups: dict[tuple[int, ...], list[VitalPartition]] = {}
    for p in enumerate_vital_partitions(n):
        restricted = restrict_form(vital_coefficients(n, p), basis)
        if restricted.is_zero():
            continue
        groups.setdefault(restricted.coeffs, []).append(p)
    forms = sorted(groups)
    cone = double_description(forms, basis.reduced_dim)
    projective_dim = cone.cone_dim - 1
    facets = []
    if projective_dim > 0:
        for i in cone.facets:
            parts = sorted(p for j in cone.facet_groups[i] for p in groups[forms[j]])
            facets.append(
                FacetEntry(forms[i], tuple(partition_label(p) for p in parts), tuple(parts))
            )
        facets.sort(key=lambda f: f.partitions)
    vertices = sorted(basis.lift(ray) for ray in cone.rays)
    return FaceReport(n, k, basis, projective_dim, facets, vertices, cone, notes=cone.degeneracies())


def facets_of_face(n: int, k: int) -> FaceReport:
    """F_k with every facet and all vital partitions inducing it."""
    return _face(n, face_subspace(n, k), k)


def minimal_face_of(divisor: SymmetricDivisor) -> FaceReport:
    """The smallest face of F containing an F-nef divisor.

    It is F intersected with the common zero set of the forms of the
    partitions the divisor contracts.
    """
    verdict = is_f_nef(divisor)
    if not verdict.nef:
        raise ValueError(
            f"divisor is not F-nef: {verdict.witness} gives {verdict.min_value}"
        )
    n = divisor.n
    contracted = sorted(verdict.contracted)
    ambient = half(n) - 1
    equations = [vital_coefficients(n, p) for p in contracted]
    basis = SubspaceBasis(ambient, tuple(primitive(v) for v in nullspace(equations, ambient)))
    if not basis.vectors:
        raise ValueError("divisor is zero modulo its contracted forms; no face to report")
    report = _face(n, basis, None)
    report.contracted = tuple(contracted)
    return report


def claim_spans(n: int, k: int) -> tuple[int, int, bool]:
    """(rank of contracted forms, rank of V_1..V_{k-2}, equal spans?)."""
    ambient = half(n) - 1
    contracted = [vital_coefficients(n, p) for p in enumerate_vital_partitions(n) if p.a + p.b + p.c <= k]
    special = [special_hyperplane(n, i).coeffs for i in range(1, k - 1)]
    return rank(contracted, ambient), rank(special, ambient), same_span(contracted, special, ambient)


def stable_simplex_check(n: int, k: int) -> bool:
    """Is F_k the simplex spanned by p_k, ..., p_m?"""
    report = facets_of_face(n, k)
    expected = sorted(primitive(f_simplex_vertex(n, j).coeffs) for j in range(k, half(n) + 1))
    return report.cone.is_simplicial_cone() and report.vertices == expected


# -- the table of F_{m-1} and F_{m-2} ----------------------------------------

# n -> (facet labels of F_{m-1}, facet count of F_{m-2}, facet labels of F_{m-2})
EXPECTED_TABLE: dict[int, tuple[tuple[str, ...], Optional[int], Optional[tuple[str, ...]]]] = {
    6: (("V_1", "V_2"), None, None),
    7: (("V_1", "V(1,2,2,2)"), None, None),
    8: (("V_2", "V_3"), 4, ("V_1", "V_2", "V_3", "V(2,2,2,2)")),
    9: (("V_2", "V_3"), 4, ("V_1", "V_2", "V_4", "V(2,2,2,3)")),
    10: (("V_3", "V_4"), 4, ("V_2", "V_3", "V_4", "V(1,3,3,3)")),
    11: (("V_3", "V_4"), 4, ("V_2", "V_3", "V_4", "V(2,3,3,3)")),
    12: (("V_4", "V_5"), 3, ("V_3", "V_4", "V_5")),
    13: (("V_4", "V_5"), 4, ("V_3", "V_4", "V_5", "V(1,4,4,4)")),
}


def expected_row(n: int) -> tuple[tuple[str, ...], Optional[int], Optional[tuple[str, ...]]]:
    """Reference row for n <= 13, the stabilized pattern for n >= 14."""
    if n in EXPECTED_TABLE:
        return EXPECTED_TABLE[n]
    if n < 6:
        raise ValueError(f"the table starts at n=6, got {n}")
    m = half(n)
    return (
        (f"V_{m - 2}", f"V_{m - 1}"),
        3,
        (f"V_{m - 3}", f"V_{m - 2}", f"V_{m - 1}"),
    )


def labels_match(n: int, report: FaceReport, expected: Sequence[str]) -> bool:
    """Each expected label induces a distinct facet, and nothing else does."""
    if len(report.facets) != len(expected):
        return False
    wanted = [parse_label(n, label) for label in expected]
    hit = set()
    for p in wanted:
        owners = [i for i, parts in enumerate(report.facet_partitions()) if p in parts]
        if len(owners) != 1 or owners[0] in hit:
            return False
        hit.add(owners[0])
    return True


@dataclass
class TableRow:
    n: int
    upper: FaceReport
    lower: Optional[FaceReport]
    expected: tuple[tuple[str, ...], Optional[int], Optional[tuple[str, ...]]]
    upper_ok: bool
    lower_ok: bool

    @property
    def ok(self) -> bool:
        return self.upper_ok and self.lower_ok


def table_row(n: int) -> TableRow:
    """Compute F_{m-1} and F_{m-2} for n and compare with the expected row."""
    m = half(n)
    expected = expected_row(n)
    upper = facets_of_face(n, m - 1)
    upper_ok = labels_match(n, upper, expected[0])
    lower = facets_of_face(n, m - 2) if m - 2 >= 2 else None
    if lower is None:
        lower_ok = expected[1] is None
    else:
        lower_ok = (
            expected[1] is not None
            and len(lower.facets) == expected[1]
            and labels_match(n, lower, expected[2] or ())
        )
    return TableRow(n, upper, lower, expected, upper_ok, lower_ok)
