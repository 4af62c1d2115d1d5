"""Exact polyhedral cones: halfspace forms and the double description method.

A cone is ``{x : a_i . x >= 0 for all i}``.  :func:`double_description`
turns that H-representation into extreme rays (plus a lineality basis),
records which halfspaces are tight on which ray, and sorts the input
halfspaces into facets, redundant ones and implicit equalities.

All arithmetic is on Python integers; rays are kept as primitive integer
vectors, so nothing ever grows beyond what gcd reduction allows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .linalg import Number, primitive, rank, rref


@dataclass(frozen=True)
class LinearForm:
    """Integer linear functional, normalized up to *positive* scaling.

    ``labels`` records where the form came from (e.g. ``"V_2"``,
    ``"V(2,2,2,2)"``).  Two forms are the same halfspace iff their
    ``coeffs`` agree.
    """

    coeffs: tuple[int, ...]
    labels: tuple[str, ...] = ()

    @classmethod
    def of(cls, coeffs: Sequence[Number], labels: Iterable[str] = ()) -> "LinearForm":
        return cls(primitive(coeffs), tuple(labels))

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __call__(self, x: Sequence[Number]) -> Number:
        return sum(a * b for a, b in zip(self.coeffs, x))

    def label(self) -> str:
        return "/".join(self.labels) if self.labels else "derived"


def canonical_form(coeffs: Sequence[Number]) -> tuple[int, ...]:
    return primitive(coeffs)


def _as_int_rows(halfspaces: Sequence[LinearForm | Sequence[Number]]) -> list[tuple[int, ...]]:
    rows = []
    for h in halfspaces:
        rows.append(h.coeffs if isinstance(h, LinearForm) else primitive(h))
    return rows


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(u, v))


def _reduce(vec: list[int]) -> tuple[int, ...]:
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g > 1:
        return tuple(x // g for x in vec)
    return tuple(vec)


class DegenerateConeError(ValueError):
    """Input that the requested operation cannot handle (reported, never hidden)."""


@dataclass
class ConeDescription:
    """H- and V-representation of one cone, with incidence bookkeeping.

    ``incidence[j]`` is the set of halfspace indices tight on ``rays[j]``.
    ``facets`` holds one representative halfspace index per facet;
    ``facet_groups`` maps each representative to every index inducing the
    same facet.  ``redundant`` are halfspaces that induce no facet and
    ``equalities`` those tight on the whole cone.
    """

    dim: int
    halfspaces: list[tuple[int, ...]]
    rays: list[tuple[int, ...]]
    lines: list[tuple[int, ...]]
    incidence: list[frozenset[int]]
    cone_dim: int
    facets: list[int] = field(default_factory=list)
    facet_groups: dict[int, list[int]] = field(default_factory=dict)
    redundant: list[int] = field(default_factory=list)
    equalities: list[int] = field(default_factory=list)

    @property
    def pointed(self) -> bool:
        return not self.lines

    @property
    def full_dimensional(self) -> bool:
        return self.cone_dim == self.dim

    @property
    def lineality_dim(self) -> int:
        return len(self.lines)

    def facet_forms(self) -> list[tuple[int, ...]]:
        return [self.halfspaces[i] for i in self.facets]

    def is_simplicial_cone(self) -> bool:
        """Pointed, and exactly cone_dim rays and cone_dim facets."""
        return self.pointed and len(self.rays) == self.cone_dim == len(self.facets)

    def contains(self, x: Sequence[Number]) -> bool:
        return all(_dot(h, x) >= 0 for h in self.halfspaces)

    def degeneracies(self) -> list[str]:
        notes = []
        if self.lines:
            notes.append(f"lineality space of dimension {len(self.lines)} split off")
        if not self.full_dimensional:
            notes.append(f"empty interior: cone dimension {self.cone_dim} < ambient {self.dim}")
        if not self.rays and not self.lines:
            notes.append("cone is {0}")
        elif len(self.rays) == 1 and not self.lines:
            notes.append("cone is a single ray")
        return notes


def insertion_order(rows: Sequence[Sequence[int]]) -> list[int]:
    """Ascending by number of nonzero coefficients, then lexicographic."""
    return sorted(range(len(rows)), key=lambda i: (sum(1 for x in rows[i] if x), tuple(rows[i]), i))


def _extreme_rays(rows: Sequence[tuple[int, ...]], dim: int) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Core double description iteration; returns (rays, lines)."""
    lines: list[tuple[int, ...]] = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    # each ray: (vector, bitmask of processed constraints tight on it)
    rays: list[tuple[tuple[int, ...], int]] = []
    processed = 0
    for idx in insertion_order(rows):
        a = rows[idx]
        bit = 1 << idx
        if not any(a):
            rays = [(v, mask | bit) for v, mask in rays]
            processed |= bit
            continue
        p = next((i for i, line in enumerate(lines) if _dot(a, line) != 0), None)
        if p is not None:
            pivot = lines[p]
            s = _dot(a, pivot)
            if s < 0:
                pivot, s = tuple(-x for x in pivot), -s
            new_lines = []
            for i, line in enumerate(lines):
                if i == p:
                    continue
                t = _dot(a, line)
                new_lines.append(line if t == 0 else _reduce([s * x - t * y for x, y in zip(line, pivot)]))
            new_rays = []
            for v, mask in rays:
                t = _dot(a, v)
                w = v if t == 0 else _reduce([s * x - t * y for x, y in zip(v, pivot)])
                new_rays.append((w, mask | bit))
            # processed constraints vanish on every line, so on the pivot too
            new_rays.append((pivot, processed))
            lines, rays = new_lines, new_rays
            processed |= bit
            continue

        values = [_dot(a, v) for v, _ in rays]
        pos = [i for i, t in enumerate(values) if t > 0]
        neg = [i for i, t in enumerate(values) if t < 0]
        zero = [i for i, t in enumerate(values) if t == 0]
        processed |= bit
        if not neg:
            rays = [(v, mask | bit) if values[i] == 0 else (v, mask) for i, (v, mask) in enumerate(rays)]
            continue
        masks = [mask for _, mask in rays]
        eff_dim = dim - len(lines)
        new_rays = [rays[i] for i in pos] + [(rays[i][0], rays[i][1] | bit) for i in zero]
        for i in pos:
            vi, mi = rays[i]
            for j in neg:
                vj, mj = rays[j]
                common = mi & mj
                if bin(common).count("1") < eff_dim - 2:
                    continue
                if any(
                    (common & masks[r]) == common for r in range(len(rays)) if r != i and r != j
                ):
                    continue
                w = _reduce([values[i] * y - values[j] * x for x, y in zip(vi, vj)])
                new_rays.append((w, common | bit))
        rays = new_rays
    return [v for v, _ in rays], lines


def double_description(
    halfspaces: Sequence[LinearForm | Sequence[Number]], dim: int | None = None
) -> ConeDescription:
    """Extreme rays and facet classification of ``{x : h . x >= 0}``.

    The ambient dimension is taken from the forms unless ``dim`` is given
    (required when there are no halfspaces).
    """
    rows = _as_int_rows(halfspaces)
    if dim is None:
        if not rows:
            raise DegenerateConeError("no halfspaces and no dimension given")
        dim = len(rows[0])
    if any(len(r) != dim for r in rows):
        raise DegenerateConeError("halfspaces of mixed dimension")
    if dim == 0:
        raise DegenerateConeError("zero-dimensional ambient space")

    rays, lines = _extreme_rays(rows, dim)
    rays = sorted(set(rays))
    lines = _canonical_lines(lines, dim)
    incidence = [frozenset(i for i, h in enumerate(rows) if _dot(h, v) == 0) for v in rays]
    cone_dim = rank(list(rays) + list(lines), dim)
    desc = ConeDescription(dim, rows, rays, lines, incidence, cone_dim)
    _classify_halfspaces(desc)
    return desc


def _canonical_lines(lines: list[tuple[int, ...]], dim: int) -> list[tuple[int, ...]]:
    if not lines:
        return []
    reduced, _ = rref(lines, dim)
    return [primitive(row) for row in reduced]


def _classify_halfspaces(desc: ConeDescription) -> None:
    seen: dict[frozenset[int], int] = {}
    for i, h in enumerate(desc.halfspaces):
        tight = [j for j, inc in enumerate(desc.incidence) if i in inc]
        face_rank = rank([desc.rays[j] for j in tight] + list(desc.lines), desc.dim)
        if face_rank == desc.cone_dim:
            desc.equalities.append(i)
        elif face_rank == desc.cone_dim - 1:
            key = frozenset(tight)
            if key in seen:
                desc.facet_groups[seen[key]].append(i)
                desc.redundant.append(i)
            else:
                seen[key] = i
                desc.facets.append(i)
                desc.facet_groups[i] = [i]
        else:
            desc.redundant.append(i)


def facets_from_rays(
    rays: Sequence[Sequence[Number]], dim: int, lines: Sequence[Sequence[Number]] = ()
) -> list[tuple[int, ...]]:
    """Facet normals of cone(rays) + span(lines), via the dual cone.

    Only meaningful for full-dimensional cones (otherwise facet normals are
    determined modulo the implicit equalities, which are raised as an error).
    """
    dual_halfspaces = [primitive(r) for r in rays]
    for line in lines:
        dual_halfspaces.append(primitive(line))
        dual_halfspaces.append(primitive([-x for x in line]))
    dual = double_description(dual_halfspaces, dim)
    if dual.lines:
        raise DegenerateConeError("cone is not full-dimensional; facet normals are not unique")
    return sorted(dual.rays)


def removal_facets(halfspaces: Sequence[LinearForm | Sequence[Number]], dim: int | None = None) -> set[tuple[int, ...]]:
    """Facet forms found by deletion: drop every copy of a form, recompute, compare.

    A form is a facet iff the cone without it contains a point violating it.
    Slow; used as an oracle for :func:`double_description`.
    """
    rows = _as_int_rows(halfspaces)
    if dim is None:
        dim = len(rows[0])
    facets = set()
    for form in set(rows):
        if not any(form):
            continue
        rest = [r for r in rows if r != form]
        if not rest:
            facets.add(form)
            continue
        cone = double_description(rest, dim)
        if any(_dot(form, v) < 0 for v in cone.rays) or any(_dot(form, v) != 0 for v in cone.lines):
            facets.add(form)
    return facets
