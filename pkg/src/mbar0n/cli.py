"""Command line front end: ``mbar0n {divisor,fnef,model,verify,cone}``.

Every invocation produces one :class:`Report`.  With ``--json`` it is
printed as a single JSON document with fields command, params, status,
payload (rationals as "p/q" strings); otherwise as plain text.

Exit codes: 0 done / all checks pass, 1 a check or table comparison
failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional, Sequence

from .divisors import (
    SymmetricDivisor,
    VitalPartition,
    boundary,
    canonical_class,
    divisor_from_coeffs,
    enumerate_vital_partitions,
    format_rational,
    half,
    is_f_nef,
    parse_rational,
)
from .fulton import (
    FaceReport,
    expected_pk_threshold,
    f_simplex_vertex,
    facets_of_face,
    pk_fnef_threshold,
    table_row,
    tightness_witness,
)
from .log_canonical import (
    Hassett,
    a_alpha,
    c_bounds,
    c_interval,
    convex_decompose,
    convex_endpoints,
    direct_c_feasible,
    model_for_alpha,
    model_intervals,
    threshold_k,
    verify_lemma,
)

PASS, FAIL, INFO = "pass", "fail", "info"


class UsageError(Exception):
    """Bad flags or out-of-domain parameters (exit code 2)."""


@dataclass
class Report:
    command: str
    params: dict[str, Any]
    status: str
    payload: dict[str, Any]
    text: list[str] = field(default_factory=list, compare=False)

    def to_json(self) -> str:
        doc = {
            "command": self.command,
            "params": self.params,
            "status": self.status,
            "payload": self.payload,
        }
        return json.dumps(doc, indent=2, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        doc = json.loads(text)
        return cls(doc["command"], doc["params"], doc["status"], doc["payload"])

    @property
    def exit_code(self) -> int:
        """1 only when a verification suite or table comparison failed."""
        checks = self.command == "verify" or (self.command == "cone" and self.params.get("table"))
        return 1 if checks and self.status == FAIL else 0


# -- serialization helpers ---------------------------------------------------


def q(value: Fraction) -> str:
    return format_rational(value)


def part(p: VitalPartition) -> list[int]:
    return list(p)


def coeffs(d: SymmetricDivisor) -> list[str]:
    return [q(c) for c in d.coeffs]


def face_payload(report: FaceReport) -> dict[str, Any]:
    return {
        "n": report.n,
        "k": report.k,
        "projective_dim": report.projective_dim,
        "facet_count": len(report.facets),
        "facets": [
            {"form": list(f.form), "labels": list(f.labels)} for f in report.facets
        ],
        "vertices": [list(v) for v in report.vertices],
        "contracted": [part(p) for p in report.contracted],
        "notes": list(report.notes),
    }


def _parse_q(text: str, what: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"{what}: {exc}") from None


# -- commands ----------------------------------------------------------------


def cmd_divisor(args: argparse.Namespace) -> Report:
    n = args.n
    params: dict[str, Any] = {"n": n}
    try:
        if args.alpha is not None:
            alpha = _parse_q(args.alpha, "--alpha")
            params["alpha"] = q(alpha)
            d = a_alpha(n, alpha)
            what = f"A_{q(alpha)}"
        elif args.canonical:
            params["canonical"] = True
            d, what = canonical_class(n), "K"
        elif args.boundary:
            params["boundary"] = True
            d, what = boundary(n), "D"
        else:
            params["pk"] = args.pk
            d, what = f_simplex_vertex(n, args.pk), f"p_{args.pk}"
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"divisor": what, "coefficients": coeffs(d), "zero": d.is_zero()}
    return Report("divisor", params, INFO, payload, [str(d)])


def cmd_fnef(args: argparse.Namespace) -> Report:
    n = args.n
    params: dict[str, Any] = {"n": n}
    expected_zero_rule: Optional[int] = None
    try:
        if args.alpha is not None:
            alpha = _parse_q(args.alpha, "--alpha")
            params["alpha"] = q(alpha)
            d = a_alpha(n, alpha)
            expected_zero_rule = threshold_k(n, alpha)
        else:
            values = [_parse_q(c, "--coeffs") for c in args.coeffs.split(",") if c.strip()]
            params["coeffs"] = [q(v) for v in values]
            d = divisor_from_coeffs(n, values)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    verdict = is_f_nef(d)
    payload: dict[str, Any] = {
        "coefficients": coeffs(d),
        "f_nef": verdict.nef,
        "min_value": q(verdict.min_value),
        "witness": part(verdict.witness),
        "contracted": [part(p) for p in verdict.contracted],
    }
    if expected_zero_rule is not None:
        k = expected_zero_rule
        payload["k"] = k
        payload["contracted_is_abc_le_k"] = set(verdict.contracted) == {
            p for p in enumerate_vital_partitions(n) if p.a + p.b + p.c <= k
        }
    text = [
        f"F-nef: {'yes' if verdict.nef else 'no'}",
        f"minimum {q(verdict.min_value)} at {verdict.witness}",
        f"contracted ({len(verdict.contracted)}): " + " ".join(str(p) for p in verdict.contracted),
    ]
    return Report("fnef", params, PASS if verdict.nef else FAIL, payload, text)


def cmd_model(args: argparse.Namespace) -> Report:
    n = args.n
    alpha = _parse_q(args.alpha, "--alpha")
    try:
        model = model_for_alpha(n, alpha)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lo, hi = next((lo, hi) for lo, hi, m in model_intervals(n) if m == model)
    payload = {
        "model": model.label(n),
        "kind": "hassett" if isinstance(model, Hassett) else "git",
        "k": model.k if isinstance(model, Hassett) else None,
        "interval": [q(lo), q(hi)],
    }
    return Report("model", {"n": n, "alpha": q(alpha)}, INFO, payload, [payload["model"]])


# -- verification suites -----------------------------------------------------


def suite_lemma(max_n: int) -> dict[str, Any]:
    checked = 0
    violations = []
    for n in range(6, max_n + 1):
        rep = verify_lemma(n)
        checked += rep.checked
        for v in rep.violations:
            violations.append(
                {"n": v.n, "k": v.k, "partition": part(v.partition), "case": v.case,
                 "h_sum": q(v.h_sum), "closed_form": None if v.closed_form is None else q(v.closed_form),
                 "problem": v.problem}
            )
    return {"ok": not violations, "checked": checked, "violations": violations}


def suite_fnef(max_n: int) -> dict[str, Any]:
    checked = 0
    failures = []
    for n in range(6, max_n + 1):
        m = half(n)
        if not a_alpha(n, Fraction(2, n - 1)).is_zero():
            failures.append({"n": n, "problem": "A_{2/(n-1)} is not zero"})
        for k in range(1, m + 1):
            alpha = Fraction(2, k + 1)
            verdict = is_f_nef(a_alpha(n, alpha))
            checked += 1
            if not verdict.nef:
                failures.append({"n": n, "alpha": q(alpha), "problem": "not F-nef",
                                 "witness": part(verdict.witness), "value": q(verdict.min_value)})
            expected = {p for p in enumerate_vital_partitions(n) if p.a + p.b + p.c <= k}
            if set(verdict.contracted) != expected:
                failures.append({"n": n, "alpha": q(alpha), "problem": "contracted set is not {a+b+c <= k}"})
            lo, hi = convex_endpoints(n, k)
            for alpha in (lo, (lo + hi) / 2, hi):
                t, kk = convex_decompose(n, alpha)
                lo2, hi2 = convex_endpoints(n, kk)
                combo = t * a_alpha(n, lo2) + (1 - t) * a_alpha(n, hi2)
                checked += 1
                if combo != a_alpha(n, alpha) or not 0 <= t <= 1:
                    failures.append({"n": n, "alpha": q(alpha), "problem": "convex decomposition mismatch"})
    return {"ok": not failures, "checked": checked, "violations": failures}


def suite_pk_threshold(max_n: int) -> dict[str, Any]:
    rows = []
    ok = True
    for n in range(6, max_n + 1):
        threshold = pk_fnef_threshold(n)
        row: dict[str, Any] = {"n": n, "threshold": threshold, "ceil_n_over_3": expected_pk_threshold(n)}
        row_ok = threshold == expected_pk_threshold(n)
        if n >= 7:
            w = tightness_witness(n)
            row["witness"] = {
                "partition": part(w.partition),
                "l": w.l,
                "value_at_p_l": q(w.value_at_pl),
                "alt_index": w.index_alt,
                "value_at_alt": None if w.value_at_alt is None else q(w.value_at_alt),
                "equals_minus_one": w.value_at_pl == -1,
            }
            row_ok = row_ok and w.value_at_pl < 0
        row["ok"] = row_ok
        ok = ok and row_ok
        rows.append(row)
    return {"ok": ok, "rows": rows}


def suite_c_interval(n: int) -> dict[str, Any]:
    rows = []
    ok = True
    for k in range(2, 7):
        expected = k <= 5
        stated = c_interval(n, k)
        direct = direct_c_feasible(n, k)
        row = {
            "k": k,
            "expected_feasible": expected,
            "stated_bounds": {name: q(v) for name, v in c_bounds(n, k).items()},
            "stated_interval": None if stated is None else [q(stated[0]), q(stated[1])],
            "direct_interval": None if direct is None else [q(direct[0]), q(direct[1])],
            "stated_ok": (stated is not None) == expected,
            "direct_ok": (direct is not None) == expected,
        }
        ok = ok and row["stated_ok"] and row["direct_ok"]
        rows.append(row)
    return {"ok": ok, "n": n, "rows": rows}


SUITES = ("lemma", "fnef", "pk-threshold", "c-interval")


def cmd_verify(args: argparse.Namespace) -> Report:
    if args.max_n < 6:
        raise UsageError("--max-n must be >= 6")
    if args.n <= 13:
        raise UsageError("--n for the c-interval suite must exceed 13")
    chosen = SUITES if args.suite == "all" else (args.suite,)
    runners: dict[str, Callable[[], dict[str, Any]]] = {
        "lemma": lambda: suite_lemma(args.max_n),
        "fnef": lambda: suite_fnef(args.max_n),
        "pk-threshold": lambda: suite_pk_threshold(args.max_n),
        "c-interval": lambda: suite_c_interval(args.n),
    }
    payload = {name: runners[name]() for name in chosen}
    ok = all(result["ok"] for result in payload.values())
    text = []
    for name, result in payload.items():
        detail = ""
        if "checked" in result:
            detail = f"{result['checked']} checked, {len(result['violations'])} violations"
        elif name == "pk-threshold":
            bad = [r["n"] for r in result["rows"] if not r["ok"]]
            detail = f"{len(result['rows'])} values of n, mismatches at {bad or 'none'}"
        elif name == "c-interval":
            detail = ", ".join(
                f"k={r['k']}: stated {'sat' if r['stated_interval'] else 'unsat'}"
                f" / direct {'sat' if r['direct_interval'] else 'unsat'}"
                for r in result["rows"]
            )
        text.append(f"{name:<13} {'PASS' if result['ok'] else 'FAIL'}  {detail}")
    params = {"suite": args.suite, "max_n": args.max_n, "n": args.n}
    return Report("verify", params, PASS if ok else FAIL, payload, text)


# -- cone --------------------------------------------------------------------


def _face_text(face: FaceReport) -> list[str]:
    lines = [f"n={face.n} k={face.k} projective dimension {face.projective_dim}"]
    if face.projective_dim == 0:
        lines.append("vertex " + " ".join(map(str, face.vertices[0])))
    for f in face.facets:
        lines.append(f"  facet {list(f.form)}: " + ", ".join(f.labels))
    for v in face.vertices if face.projective_dim > 0 else ():
        lines.append(f"  ray {list(v)}")
    return lines


def _parse_range(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(":"))
    except ValueError:
        raise UsageError(f"--n-range must look like a:b, got {text!r}") from None
    if a < 6 or b < a:
        raise UsageError("--n-range needs 6 <= a <= b")
    return a, b


def cmd_cone(args: argparse.Namespace) -> Report:
    if args.table:
        a, b = _parse_range(args.n_range)
        rows = []
        text = [f"{'n':>3}  {'F_{m-1} facets':<34} {'#':>2}  F_{{m-2}} facets   match"]
        ok = True
        for n in range(a, b + 1):
            row = table_row(n)
            ok = ok and row.ok
            rows.append({
                "n": n,
                "upper_facets": [list(f.labels) for f in row.upper.facets],
                "lower_facet_count": None if row.lower is None else len(row.lower.facets),
                "lower_facets": None if row.lower is None else [list(f.labels) for f in row.lower.facets],
                "expected_upper": list(row.expected[0]),
                "expected_lower_count": row.expected[1],
                "expected_lower": None if row.expected[2] is None else list(row.expected[2]),
                "upper_match": row.upper_ok,
                "lower_match": row.lower_ok,
            })
            upper = " ".join(f.labels[0] for f in row.upper.facets)
            lower = "" if row.lower is None else " ".join(f.labels[0] for f in row.lower.facets)
            count = "" if row.lower is None else str(len(row.lower.facets))
            mark = "ok" if row.ok else "MISMATCH (expected " + "; ".join(
                x for x in (" ".join(row.expected[0]), " ".join(row.expected[2] or ())) if x) + ")"
            text.append(f"{n:>3}  {upper:<34} {count:>2}  {lower:<16} {mark}")
        return Report("cone", {"table": True, "n_range": f"{a}:{b}"}, PASS if ok else FAIL,
                      {"rows": rows}, text)
    if args.n is None or args.k is None:
        raise UsageError("cone needs --n and --k, or --table")
    try:
        face = facets_of_face(args.n, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return Report("cone", {"n": args.n, "k": args.k}, INFO, face_payload(face), _face_text(face))


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON document")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="print nothing; report through the exit code only")

    parser = argparse.ArgumentParser(
        prog="mbar0n", parents=[common],
        description="Exact computations with symmetric divisors on M_{0,n}.",
    )
    parser.set_defaults(json=False, quiet=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("divisor", parents=[common], help="print coefficients r_2..r_m")
    p.add_argument("--n", type=int, required=True)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--alpha", help="A_alpha for alpha = p/q")
    which.add_argument("--canonical", action="store_true", help="canonical class K")
    which.add_argument("--boundary", action="store_true", help="total boundary D")
    which.add_argument("--pk", type=int, help="vertex p_k of the F-simplex")
    p.set_defaults(func=cmd_divisor)

    p = sub.add_parser("fnef", parents=[common], help="check F-nefness")
    p.add_argument("--n", type=int, required=True)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--coeffs", help="comma separated r_2,...,r_m")
    which.add_argument("--alpha", help="use A_alpha")
    p.set_defaults(func=cmd_fnef)

    p = sub.add_parser("model", parents=[common], help="log canonical model for K + alpha D")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.set_defaults(func=cmd_model)

    p = sub.add_parser("verify", parents=[common], help="run exhaustive verification suites")
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.add_argument("--max-n", type=int, default=30)
    p.add_argument("--n", type=int, default=20, help="n for the c-interval suite")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cone", parents=[common], help="faces F_k of the Fulton cone")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--table", action="store_true", help="reproduce the F_{m-1}/F_{m-2} table")
    p.add_argument("--n-range", default="6:14")
    p.set_defaults(func=cmd_cone)
    return parser


_VALUE_FLAGS = ("--coeffs", "--alpha")


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--coeffs -2/9,...`` into ``--coeffs=-2/9,...`` so argparse accepts it."""
    out: list[str] = []
    it = iter(argv)
    for token in it:
        if token in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(token)
            else:
                out.append(f"{token}={nxt}")
        else:
            out.append(token)
    return out


def run(argv: Optional[Sequence[str]] = None) -> Report:
    """Parse and execute; raises UsageError / SystemExit(2) on bad input."""
    args = build_parser().parse_args(_glue_negative_values(sys.argv[1:] if argv is None else argv))
    return args.func(args)


def main(argv: Optional[Sequence[str]] = None) -> int:
    raw = _glue_negative_values(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(raw)
    try:
        report = args.func(args)
    except UsageError as exc:
        if not args.quiet:
            print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if not args.quiet:
        print(report.to_json() if args.json else "\n".join(report.text))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
