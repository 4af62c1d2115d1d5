"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line (shown in the pytest terminal
summary, or printed directly when this file is run as a script) and then
asserts the same verdict.  Runtime limits are part of each verdict.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from math import ceil

from mbar0n.divisors import enumerate_vital_partitions, intersect_vital, is_f_nef
from mbar0n.fulton import (
    claim_spans,
    f_simplex_vertex,
    f_simplex_vertex_from_canonical,
    face_subspace,
    facets_of_face,
    pk_fnef_threshold,
    restrict_form,
    table_row,
    tightness_witness,
    vital_coefficients,
)
from mbar0n.log_canonical import (
    a_alpha,
    c_interval,
    convex_decompose,
    convex_endpoints,
    direct_c_feasible,
    model_for_alpha,
    model_intervals,
    reference_model_intervals,
    verify_lemma,
)
from mbar0n.polyhedra import double_description, facets_from_rays, removal_facets

F = Fraction
LINES: dict[int, str] = {}


def record(number: int, ok: bool, detail: str) -> bool:
    LINES[number] = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {detail}"
    return ok


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


# -- 1 ----------------------------------------------------------------------------


def criterion_1() -> bool:
    with Timer() as t:
        bad = [n for n in range(4, 41) if not a_alpha(n, F(2, n - 1)).is_zero()]
    ok = not bad and t.seconds < 1
    return record(1, ok, f"A at alpha=2/(n-1) is zero for n=4..40 (bad: {bad or 'none'}; {t.seconds:.2f}s < 1s)")


# -- 2 ----------------------------------------------------------------------------


def criterion_2() -> bool:
    rng = random.Random(20)
    failures = []
    checked = 0
    with Timer() as t:
        for n in range(6, 26):
            m = n // 2
            for k in range(1, m + 1):
                if not is_f_nef(a_alpha(n, F(2, k + 1))):
                    failures.append((n, f"2/{k + 1}"))
                lo, hi = convex_endpoints(n, k)
                for _ in range(5):
                    alpha = lo + (hi - lo) * F(rng.randint(1, 999), 1000)
                    s, kk = convex_decompose(n, alpha)
                    a, b = convex_endpoints(n, kk)
                    combo = s * a_alpha(n, a) + (1 - s) * a_alpha(n, b)
                    checked += 1
                    if kk != k or not 0 <= s <= 1 or combo != a_alpha(n, alpha):
                        failures.append((n, str(alpha)))
    ok = not failures and t.seconds < 10
    return record(
        2, ok,
        f"A_alpha F-nef at every breakpoint for n=6..25, {checked} interior alphas are exact convex "
        f"combinations of F-nef endpoints (failures: {failures[:3] or 'none'}; {t.seconds:.2f}s < 10s)",
    )


# -- 3 ----------------------------------------------------------------------------


def criterion_3() -> bool:
    checked = 0
    violations = []
    with Timer() as t:
        for n in range(6, 31):
            report = verify_lemma(n)
            checked += report.checked
            violations += report.violations
    ok = not violations and t.seconds < 60
    return record(
        3, ok,
        f"lemma oracle over n=6..30: {checked} (k, partition) pairs, {len(violations)} violations, "
        f"case 15 never reached ({t.seconds:.2f}s < 60s)",
    )


# -- 4 ----------------------------------------------------------------------------


def criterion_4() -> bool:
    n = 20
    stated = {k: c_interval(n, k) is not None for k in range(2, 7)}
    direct = {k: direct_c_feasible(n, k) is not None for k in range(2, 7)}
    expected = {k: k <= 5 for k in range(2, 7)}
    ok = stated == expected and direct == expected
    fmt = lambda d: "".join("Y" if d[k] else "n" for k in range(2, 7))  # noqa: E731
    return record(
        4, ok,
        f"c-interval at n=20, k=2..6 feasible? expected {fmt(expected)}, "
        f"four stated inequalities {fmt(stated)}, direct computation {fmt(direct)}",
    )


# -- 5 ----------------------------------------------------------------------------


def criterion_5() -> bool:
    disagree = [
        (n, k)
        for n in range(4, 41)
        for k in range(2, n // 2 + 1)
        if f_simplex_vertex(n, k) != f_simplex_vertex_from_canonical(n, k)
    ]
    not_prop = []
    for n in range(6, 41):
        m = n // 2
        ratios = {x / y for x, y in zip(f_simplex_vertex(n, m).coeffs, a_alpha(n, F(2, m + 1)).coeffs)}
        if len(ratios) != 1 or min(ratios) <= 0:
            not_prop.append(n)
    ok = not disagree and not not_prop
    return record(
        5, ok,
        f"both p_k formulas agree for n<=40 (mismatches: {disagree or 'none'}); p_m is a positive "
        f"multiple of A at 2/(m+1) for n=6..40 (exceptions: {not_prop or 'none'})",
    )


# -- 6 ----------------------------------------------------------------------------


def criterion_6() -> bool:
    with Timer() as t:
        wrong = [n for n in range(6, 41) if pk_fnef_threshold(n) != ceil(n / 3)]
        values = {}
        for n in range(7, 41):  # n = 3l + p with l >= 2, p in {1,2,3}
            w = tightness_witness(n)
            values[n] = (w.p, w.value_at_pl, intersect_vital(f_simplex_vertex_from_canonical(n, w.l), w.partition))
    not_minus_one = sorted(n for n, (_, v, _) in values.items() if v != -1)
    inconsistent = [n for n, (_, v, v2) in values.items() if v != v2 or v >= 0]
    ok = not wrong and not not_minus_one and not inconsistent and t.seconds < 30
    by_p = {p: sorted({str(v) for n, (pp, v, _) in values.items() if pp == p}) for p in (1, 2, 3)}
    return record(
        6, ok,
        f"threshold = ceil(n/3) for n=6..40 (wrong: {wrong or 'none'}); witness (p,l,l,l) at p_l is "
        f"negative everywhere but equals -1 only for p=1: values by p {by_p} "
        f"(not -1 at n={not_minus_one[:6]}...; {t.seconds:.2f}s < 30s)",
    )


# -- 7 ----------------------------------------------------------------------------


def criterion_7() -> bool:
    with Timer() as t:
        rows = {n: table_row(n) for n in range(6, 21)}
    bad = [n for n, row in rows.items() if not row.ok]
    counts = [len(rows[n].lower.facets) for n in range(8, 15)]
    ok = not bad and counts == [4, 4, 4, 4, 3, 4, 3] and t.seconds < 60
    detail = ""
    for n in bad:
        row = rows[n]
        got = "; ".join(
            part
            for part in (
                "" if row.upper_ok else "F_{m-1}: " + " ".join(f.labels[0] for f in row.upper.facets),
                "" if row.lower_ok else "F_{m-2}: " + " ".join(f.labels[0] for f in row.lower.facets),
            )
            if part
        )
        detail += f" n={n} computed {got} vs reference {' '.join(row.expected[2] or ())};"
    return record(
        7, ok,
        f"table n=6..14 plus stable rows 14..20, facet counts n=8..14 {counts}; "
        f"mismatched rows: {bad or 'none'}.{detail} ({t.seconds:.2f}s < 60s)",
    )


# -- 8 ----------------------------------------------------------------------------


def criterion_8() -> bool:
    bad_span = []
    bad_dim = []
    for n in range(6, 21):
        m = n // 2
        for k in range(2, m + 1):
            r1, r2, same = claim_spans(n, k)
            if not same or r1 != r2 or r1 != max(k - 2, 0):
                bad_span.append((n, k))
            if facets_of_face(n, k).projective_dim != m - k:
                bad_dim.append((n, k))
    ok = not bad_span and not bad_dim
    return record(
        8, ok,
        f"span of contracted forms equals span of V_1..V_(k-2) for n=6..20 (bad: {bad_span or 'none'}); "
        f"F_k has projective dimension m-k (bad: {bad_dim or 'none'})",
    )


# -- 9 ----------------------------------------------------------------------------


def _instances():
    for n in range(6, 21):
        for k in range(2, n // 2 + 1):
            basis = face_subspace(n, k)
            if basis.reduced_dim > 6:
                continue
            forms = set()
            for p in enumerate_vital_partitions(n):
                r = restrict_form(vital_coefficients(n, p), basis)
                if not r.is_zero():
                    forms.add(r.coeffs)
            yield (n, k), sorted(forms), basis.reduced_dim


def criterion_9() -> bool:
    failures = []
    count = 0
    eye = [tuple(int(i == j) for j in range(3)) for i in range(3)]
    orthant = double_description(eye)
    if sorted(orthant.rays) != sorted(eye) or len(orthant.facets) != 3:
        failures.append("orthant")
    dup = double_description(eye + [(0, 5, 0)])
    if len(dup.facets) != 3 or dup.redundant != [3] or sorted(dup.rays) != sorted(eye):
        failures.append("duplicate")
    for key, forms, dim in _instances():
        count += 1
        cone = double_description(forms, dim)
        facets = {cone.halfspaces[i] for i in cone.facets}
        if cone.full_dimensional and set(facets_from_rays(cone.rays, dim, cone.lines)) != facets:
            failures.append(("round trip", key))
        if cone.cone_dim > 1 and facets != removal_facets(forms, dim):
            failures.append(("removal", key))
    ok = not failures
    return record(
        9, ok,
        f"H->V->H round trip and removal oracle on {count} Fulton-cone faces of reduced dim <= 6, "
        f"plus orthant and duplicate cases (failures: {failures[:3] or 'none'})",
    )


# -- 10 ---------------------------------------------------------------------------


def _gaps_and_overlaps(n, intervals):
    lo_all, hi_all = F(2, n - 1), F(1)
    ivs = sorted((lo, hi) for lo, hi, _ in intervals)
    gaps = ivs[0][0] != lo_all or ivs[-1][1] != hi_all or any(a[1] < b[0] for a, b in zip(ivs, ivs[1:]))
    overlaps = any(a[1] > b[0] for a, b in zip(ivs, ivs[1:]))
    return gaps, overlaps


def _owners(alpha, intervals):
    return [m for lo, hi, m in intervals if lo < alpha <= hi]


def criterion_10() -> bool:
    rng = random.Random(10)
    reference_bad: list[int] = []
    model_bad: list[int] = []
    for n in range(5, 31):
        low = F(2, n - 1)
        reference = reference_model_intervals(n)
        effective = model_intervals(n)
        points = {hi for _, hi, _ in reference} | {lo for lo, _, _ in reference if lo > low}
        while len(points) < 1000 + len(reference) * 2:
            den = rng.randint(1, 10**6)
            alpha = F(rng.randint(1, den), den)
            if alpha > low:
                points.add(alpha)
        gaps, overlaps = _gaps_and_overlaps(n, reference)
        if gaps or overlaps or any(len(_owners(a, reference)) != 1 for a in points):
            reference_bad.append(n)
        gaps, overlaps = _gaps_and_overlaps(n, effective)
        if gaps or overlaps or any(_owners(a, effective) != [model_for_alpha(n, a)] for a in points):
            model_bad.append(n)
    ok = not reference_bad and not model_bad
    return record(
        10, ok,
        f"stated intervals tile (2/(n-1),1] for n=5..30 except n={reference_bad or 'none'} (last Hassett "
        f"range lies inside the GIT range); model_for_alpha's intervals tile for all n "
        f"(bad: {model_bad or 'none'})",
    )


# -- pytest entry points ---------------------------------------------------------


def test_criterion_01_zero_at_lower_endpoint():
    assert criterion_1(), LINES[1]


def test_criterion_02_a_alpha_f_nef():
    assert criterion_2(), LINES[2]


def test_criterion_03_lemma_oracle():
    assert criterion_3(), LINES[3]


def test_criterion_04_c_interval():
    assert criterion_4(), LINES[4]


def test_criterion_05_pk_formulas():
    assert criterion_5(), LINES[5]


def test_criterion_06_pk_threshold_and_witness():
    assert criterion_6(), LINES[6]


def test_criterion_07_table():
    assert criterion_7(), LINES[7]


def test_criterion_08_minimal_face_claim():
    assert criterion_8(), LINES[8]


def test_criterion_09_engine_self_consistency():
    assert criterion_9(), LINES[9]


def test_criterion_10_model_tiling():
    assert criterion_10(), LINES[10]


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


if __name__ == "__main__":
    for run in CRITERIA:
        run()
    for number in sorted(LINES):
        print(LINES[number])
