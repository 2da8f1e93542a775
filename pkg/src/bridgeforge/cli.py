"""Command-line front end and the batch verification battery.

Every subcommand accepts --json for machine-readable output under the
versioned "bridge-forge/1" schema.  Exit codes: 0 all checks pass, 1 any
check failed, 2 usage error, 3 resource truncation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import (
    _kernel,
    farey,
    freeness,
    meridians,
    orbifold,
    presentation,
    sl2_oracle,
    smallcancel,
)
from .slope import Frac, GenusOneKnot, parse_fraction
from .words import cyclic_s_sequence, cyclic_seq_eq, parse_word, s_sequence, word_str

SCHEMA = "bridge-forge/1"

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_TRUNCATED = 3


def _emit(payload: dict, as_json: bool, human_lines) -> None:
    if as_json:
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def _knot_from_args(args) -> GenusOneKnot:
    return GenusOneKnot(args.m, args.n, 1 if args.sign == "+" else -1)


def _cmd_relator(args) -> int:
    rel = presentation.relator(Frac(args.q, args.p))
    cs = cyclic_s_sequence(rel.u)
    payload = {
        "command": "relator",
        "p": args.p,
        "q": args.q,
        "word": word_str(rel.u),
        "length": len(rel.u),
        "s_sequence": list(s_sequence(rel.u)),
        "cyclic_s_sequence": list(cs),
        "epsilons": list(rel.epsilons),
    }
    lines = [
        f"relator for slope {args.q}/{args.p}:",
        f"  u  = {word_str(rel.u)}   (length {len(rel.u)})",
        f"  S  = {tuple(s_sequence(rel.u))}",
        f"  CS = {tuple(cs)}",
    ]
    _emit(payload, args.json, lines)
    return EXIT_PASS


def _cmd_meridians(args) -> int:
    knot = _knot_from_args(args)
    mw = meridians.long_meridian_words(knot)
    fields = {
        "d0": mw.d0, "d1": mw.d1,
        "w_x": mw.w_x, "w_y": mw.w_y,
        "x_l": mw.x_l, "y_l": mw.y_l,
    }
    payload = {
        "command": "meridians",
        "m": knot.m, "n": knot.n, "sign": knot.sign,
        "slope": str(knot.fraction),
        "words": {k: word_str(v) for k, v in fields.items()},
        "s_sequences": {k: list(s_sequence(v)) for k, v in fields.items()},
        "verified": meridians.verify_meridian_forms(knot),
    }
    lines = [f"long meridian pair for {knot} (slope {knot.fraction}):"]
    lines += [
        f"  {name:3s} = {word_str(w)}   S = {s_sequence(w)}"
        for name, w in fields.items()
    ]
    lines.append(f"  raw/closed-form agreement: {payload['verified']}")
    _emit(payload, args.json, lines)
    return EXIT_PASS if payload["verified"] else EXIT_FAIL


def _cmd_pieces(args) -> int:
    knot = _knot_from_args(args)
    rel = presentation.relator(knot.fraction)
    R = smallcancel.SymmetrizedSet(rel.u)
    if args.word is not None:
        w = parse_word(args.word)
        if R.find(w) is None:
            payload = {
                "command": "pieces",
                "m": knot.m, "n": knot.n, "sign": knot.sign,
                "word": args.word,
                "is_piece": smallcancel.is_piece(w, R),
                "min_pieces": None,
                "note": "not a subword of any relator word",
            }
            lines = [
                f"word {args.word} against the symmetrized set of {knot}:",
                "  not a subword of any relator word (is_piece = "
                f"{payload['is_piece']}, min_pieces undefined)",
            ]
            _emit(payload, args.json, lines)
            return EXIT_PASS
        report = smallcancel.piece_report(w, R)
        mp = report.min_pieces
        payload = {
            "command": "pieces",
            "m": knot.m, "n": knot.n, "sign": knot.sign,
            "word": args.word,
            "is_piece": report.is_piece,
            "min_pieces": None if mp is smallcancel.UNREPRESENTABLE else mp,
        }
        lines = [
            f"word {args.word} against the symmetrized set of {knot}:",
            f"  is_piece   = {report.is_piece}",
            f"  min_pieces = {mp}",
        ]
        _emit(payload, args.json, lines)
        return EXIT_PASS
    checks = {
        "piece_prop": smallcancel.verify_piece_prop(knot),
        "three_piece": smallcancel.verify_three_piece_property(knot),
        "C4": smallcancel.check_C(R, 4),
        "T4": smallcancel.check_T(R, 4),
    }
    payload = {
        "command": "pieces",
        "m": knot.m, "n": knot.n, "sign": knot.sign,
        "elements": len(R),
        "checks": checks,
    }
    lines = [f"small cancellation battery for {knot} ({len(R)} relator words):"]
    lines += [f"  {name:12s} {'pass' if ok else 'FAIL'}" for name, ok in checks.items()]
    _emit(payload, args.json, lines)
    return EXIT_PASS if all(checks.values()) else EXIT_FAIL


def _sign_patterns(t_max: int):
    pats = []
    for t in range(1, t_max + 1):
        stack = [[]]
        for _ in range(t):
            stack = [
                p + [(ex, ey)] for p in stack for ex in (1, -1) for ey in (1, -1)
            ]
        pats.extend(tuple(p) for p in stack)
    return pats


def _cmd_freeness(args) -> int:
    if args.t < 1:
        raise ValueError("--t must be at least 1")
    knot = _knot_from_args(args)
    results = []
    all_ok = True
    for pattern in _sign_patterns(args.t):
        ok = freeness.verify_alternating_cs(knot, pattern)
        all_ok &= ok
        results.append({"pattern": [list(p) for p in pattern], "ok": ok})
    payload = {
        "command": "freeness",
        "m": knot.m, "n": knot.n, "sign": knot.sign,
        "t_max": args.t,
        "patterns_checked": len(results),
        "all_ok": all_ok,
        "results": results,
    }
    lines = [
        f"alternating-word cyclic S-sequence checks for {knot}:",
        f"  {len(results)} sign patterns with t <= {args.t}: "
        f"{'all pass' if all_ok else 'FAILURES'}",
    ]
    if args.scan_syllables:
        report = freeness.no_relation_scan(knot, args.scan_syllables)
        payload["scan"] = {
            "max_syllables": report.max_syllables,
            "words_checked": report.words_checked,
            "roots": [str(z) for z in report.roots],
            "max_residual": report.max_residual,
            "min_distance": report.min_distance,
            "hits": [[h.word, str(h.omega), h.distance] for h in report.hits],
        }
        lines.append(
            f"  matrix scan: {report.words_checked} words x {len(report.roots)} roots, "
            f"min distance {report.min_distance:.3e}, hits: {len(report.hits)}"
        )
        all_ok &= report.clean
    _emit(payload, args.json, lines)
    return EXIT_PASS if all_ok else EXIT_FAIL


def _cmd_reps(args) -> int:
    f = Frac(args.q, args.p)
    data = sl2_oracle.riley_polynomials(f)
    reps = sl2_oracle.numeric_reps(f, tol=args.tol)
    payload = {
        "command": "reps",
        "p": args.p, "q": args.q,
        "slope_used": str(data.fraction),
        "polynomial": list(data.poly),
        "roots": [
            {"omega": str(rep.omega), "residual": rep.residual} for rep in reps
        ],
    }
    lines = [
        f"parabolic representations of slope {args.q}/{args.p}"
        + (f" (via mirror slope {data.fraction})" if str(data.fraction) != f"{args.q}/{args.p}" else "")
        + ":",
        f"  defining polynomial coefficients (low->high): {list(data.poly)}",
    ]
    lines += [
        f"  omega = {rep.omega:.12g}   relator residual {rep.residual:.3e}"
        for rep in reps
    ]
    _emit(payload, args.json, lines)
    return EXIT_PASS if reps else EXIT_FAIL


def _cmd_orbifold(args) -> int:
    r = Frac(2 * args.m, 4 * args.m * args.m - 1)
    if args.slope:
        slopes = [parse_fraction(args.slope)]
    else:
        slopes = [Frac(1, 2 * args.m - 1), Frac(1, 2 * args.m + 1)]
    verdicts = [orbifold.subgroup_verdict(s, r) for s in slopes]
    payload = {
        "command": "orbifold",
        "m": args.m,
        "slope": str(r),
        "homology_order": orbifold.homology_order(r),
        "verdicts": [
            {
                "arc_slope": str(v.slope),
                "order_in_homology": v.order_in_homology,
                "dihedral_image_order": v.dihedral_image_order,
                "proper": v.proper,
            }
            for v in verdicts
        ],
    }
    lines = [
        f"dihedral quotient data for slope {r} (homology order {r.den}):"
    ]
    lines += [
        f"  arc {str(v.slope):8s} image order {v.dihedral_image_order:4d}  "
        f"{'proper' if v.proper else 'NOT proper'}"
        for v in verdicts
    ]
    _emit(payload, args.json, lines)
    return EXIT_PASS if all(v.proper for v in verdicts) else EXIT_FAIL


def _cmd_epi(args) -> int:
    result = farey.epimorphism_exists(
        parse_fraction(args.source),
        parse_fraction(args.target),
        depth=args.depth,
        neighbor_bound=args.neighbors,
    )
    cap_hits = sum(s.cap_hits for s in result.searches)
    payload = {
        "command": "epi",
        "source": str(result.source),
        "target": str(result.target),
        "verdict": result.verdict,
        "route": result.route,
        "witness": result.witness,
        "cap_hits": cap_hits,
        "note": "bounded search; 'unknown' is not a 'no'",
    }
    lines = [
        f"epimorphism G(K({result.source})) ->> G(K({result.target})): "
        f"{result.verdict}"
    ]
    if result.route:
        lines.append(f"  via {result.route}, {len(result.witness)} reflections")
    else:
        lines.append("  bounded search exhausted; raise --depth/--neighbors to retry")
    _emit(payload, args.json, lines)
    return EXIT_PASS


_BATTERY = (
    "relator_cs",
    "meridian_forms",
    "piece_prop",
    "three_piece",
    "C4",
    "T4",
    "alternating_cs",
    "alternating_bounds",
    "dihedral_orders",
)


def _verify_cell(cell) -> dict:
    m, n, sign, scan_syllables = cell
    knot = GenusOneKnot(m, n, sign)
    checks = []

    def run(name, fn, applicable=True):
        if not applicable:
            checks.append({"name": name, "status": "unsupported", "elapsed_s": 0.0})
            return
        t0 = time.perf_counter()
        try:
            ok = fn()
            status = "pass" if ok else "fail"
        except freeness.UnsupportedCaseError:
            status = "unsupported"
        checks.append(
            {"name": name, "status": status,
             "elapsed_s": round(time.perf_counter() - t0, 6)}
        )

    rel = presentation.relator(knot.fraction)
    R = smallcancel.SymmetrizedSet(rel.u)
    patterns = _sign_patterns(2)

    run("relator_cs", lambda: presentation.verify_cs_closed_form(knot))
    run("meridian_forms", lambda: meridians.verify_meridian_forms(knot))
    run("piece_prop", lambda: smallcancel.verify_piece_prop(knot))
    run("three_piece", lambda: smallcancel.verify_three_piece_property(knot))
    run("C4", lambda: smallcancel.check_C(R, 4))
    run("T4", lambda: smallcancel.check_T(R, 4))

    def closed_forms():
        for pattern in patterns:
            computed = cyclic_s_sequence(
                freeness.alternating_relation_word(knot, pattern)
            )
            closed = freeness.alternating_cs_closed_form(knot, pattern)
            if not cyclic_seq_eq(computed, closed):
                return False
        return True

    def bounds():
        return all(
            freeness.verify_alternating_cs(knot, pattern) for pattern in patterns
        )

    def dihedral_orders():
        r = Frac(2 * m, 4 * m * m - 1)
        v1 = orbifold.subgroup_verdict(Frac(1, 2 * m - 1), r)
        v2 = orbifold.subgroup_verdict(Frac(1, 2 * m + 1), r)
        return (
            v1.proper and v1.order_in_homology == 2 * m + 1
            and v2.proper and v2.order_in_homology == 2 * m - 1
        )

    run("alternating_cs", closed_forms)
    run("alternating_bounds", bounds)
    run(
        "dihedral_orders",
        dihedral_orders,
        applicable=(sign == -1 and m == n and m >= 2),
    )
    if scan_syllables:
        run("matrix_scan", lambda: freeness.no_relation_scan(knot, scan_syllables).clean)
    expected = _BATTERY + (("matrix_scan",) if scan_syllables else ())
    assert tuple(c["name"] for c in checks) == expected
    return {"m": m, "n": n, "sign": sign, "checks": checks}


def _cmd_verify_all(args) -> int:
    if args.m_max < 1 or args.n_max < 1:
        print("error: grid bounds must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    cells = [
        (m, n, sign, args.scan_syllables if args.scan else 0)
        for m in range(1, args.m_max + 1)
        for n in range(1, args.n_max + 1)
        for sign in (1, -1)
    ]
    deadline = time.monotonic() + args.max_seconds if args.max_seconds else None
    reports = []
    truncated = False
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for report in pool.map(_verify_cell, cells):
                reports.append(report)
                if deadline and time.monotonic() > deadline:
                    truncated = True
                    break
    else:
        for cell in cells:
            if deadline and time.monotonic() > deadline:
                truncated = True
                break
            reports.append(_verify_cell(cell))
    reports.sort(key=lambda r: (r["m"], r["n"], -r["sign"]))
    done = {(r["m"], r["n"], r["sign"]) for r in reports}
    missing = [c[:3] for c in cells if c[:3] not in done]

    n_fail = sum(
        1 for r in reports for c in r["checks"] if c["status"] == "fail"
    )
    payload = {
        "command": "verify-all",
        "grid": {"m_max": args.m_max, "n_max": args.n_max},
        "kernel": _kernel.IMPL,
        "reports": reports,
        "truncated": truncated,
        "missing_cells": [list(c) for c in missing],
        "failures": n_fail,
    }
    lines = []
    for r in reports:
        knot = GenusOneKnot(r["m"], r["n"], r["sign"])
        summary = " ".join(
            f"{c['name']}={c['status']}" for c in r["checks"]
        )
        lines.append(f"{str(knot):10s} {summary}")
    lines.append(
        f"{len(reports)} knots checked, {n_fail} failures"
        + (", TRUNCATED" if truncated else "")
    )
    _emit(payload, args.json, lines)
    if n_fail:
        return EXIT_FAIL
    if truncated:
        return EXIT_TRUNCATED
    return EXIT_PASS


def _add_knot_args(sub):
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--sign", choices=("+", "-"), required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bridgeforge",
        description="verification battery for genus-one two-bridge knot groups",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("relator", help="relator word and S-sequences")
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--q", type=int, required=True)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(fn=_cmd_relator)

    sub = subs.add_parser("meridians", help="long meridian pair words")
    _add_knot_args(sub)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(fn=_cmd_meridians)

    sub = subs.add_parser("pieces", help="piece queries and C(4)/T(4) checks")
    _add_knot_args(sub)
    sub.add_argument("--word", help="word in a/A/b/B syntax to analyze")
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(fn=_cmd_pieces)

    sub = subs.add_parser("freeness", help="alternating-word S-sequence checks")
    _add_knot_args(sub)
    sub.add_argument("--t", type=int, default=2, help="max syllable pairs")
    sub.add_argument("--scan-syllables", type=int, default=0,
                     help="run the matrix scan up to this many syllables")
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(fn=_cmd_freeness)

    sub = subs.add_parser("reps", help="parabolic representation roots")
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--q", type=int, required=True)
    sub.add_argument("--tol", type=float, default=1e-9)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(fn=_cmd_reps)

    sub = subs.add_parser("orbifold", help="dihedral quotient subgroup orders")
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--slope", help="arc slope u/v (default: both standard arcs)")
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(fn=_cmd_orbifold)

    sub = subs.add_parser("epi", help="epimorphism orbit search")
    sub.add_argument("--source", required=True, help="source slope q/p")
    sub.add_argument("--target", required=True, help="target slope q/p")
    sub.add_argument("--depth", type=int, default=5)
    sub.add_argument("--neighbors", type=int, default=6)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(fn=_cmd_epi)

    sub = subs.add_parser("verify-all", help="full battery over an (m, n) grid")
    sub.add_argument("--m-max", type=int, required=True)
    sub.add_argument("--n-max", type=int, required=True)
    sub.add_argument("--scan", action="store_true",
                     help="include the numeric matrix scan")
    sub.add_argument("--scan-syllables", type=int, default=4)
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--max-seconds", type=float, default=0.0,
                     help="soft time budget; exceeding it truncates the grid")
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(fn=_cmd_verify_all)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
