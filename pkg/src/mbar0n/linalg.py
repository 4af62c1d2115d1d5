"""Exact linear algebra over Q on small dense matrices (lists of rows)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Number = int | Fraction


def rref(rows: Sequence[Sequence[Number]], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                factor = mat[i][col]
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: Sequence[Sequence[Number]], ncols: int | None = None) -> int:
    if not rows:
        return 0
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence[Number]], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : rows . x = 0}."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    reduced, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def same_span(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]], ncols: int) -> bool:
    """Do the row sets span the same subspace of Q^ncols?"""
    ra, rb = rank(a, ncols), rank(b, ncols)
    return ra == rb == rank(list(a) + list(b), ncols)


def primitive(vec: Sequence[Number]) -> tuple[int, ...]:
    """Positive rescaling to coprime integers; the zero vector stays zero."""
    fracs = [Fraction(x) for x in vec]
    den = 1
    for x in fracs:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def dot(u: Sequence[Number], v: Sequence[Number]) -> Number:
    return sum(x * y for x, y in zip(u, v))
