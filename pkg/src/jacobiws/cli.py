"""Command line front-end: enumeration, evaluation, and verification suites.

Exit codes: 0 all good, 1 verification failure, 2 usage or input error.
Reports on stdout are deterministic for a fixed configuration and seed;
timings go to stderr.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from fractions import Fraction

from . import cache
from .diagrams import (
    DEFAULT_CAP,
    DiagramError,
    canonical_key,
    diagram_from_key,
    enumerate_ccds,
    enumerate_chinese_characters,
    enumerate_chord_diagrams,
    parse_diagram,
)
from .linalg import LinComb


class UsageError(Exception):
    pass


def inline(key: str) -> str:
    return key.rstrip("\n").replace("\n", "; ")


def lincomb_text(v: LinComb) -> str:
    if not v:
        return "0"
    pieces = []
    for key, coeff in sorted(v.terms.items()):
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        body = "{%s}" % inline(key) if mag == 1 else "%s*{%s}" % (mag, inline(key))
        pieces.append((sign, body))
    sign, body = pieces[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        text += " %s %s" % (sign, body)
    return text


def _load_diagram(path: str):
    try:
        with open(path) as fh:
            return parse_diagram(fh.read())
    except OSError as exc:
        raise UsageError("cannot read diagram file: %s" % exc) from exc


def _load_algebra(source: str):
    from .algebra import builtin, parse_algebra

    if source.startswith("builtin:"):
        return builtin(source.split(":", 1)[1])
    try:
        with open(source) as fh:
            return parse_algebra(fh.read())
    except OSError as exc:
        raise UsageError("cannot read algebra file: %s" % exc) from exc


# ---------------------------------------------------------------------------
# subcommands


def cmd_enumerate(args) -> int:
    kinds = {
        "chord": lambda: enumerate_chord_diagrams(args.degree, cap=args.cap),
        "ccd": lambda: enumerate_ccds(args.degree, cap=args.cap),
        "cc": lambda: enumerate_chinese_characters(
            args.degree, chordless=args.chordless, cap=args.cap
        ),
    }
    items = kinds[args.kind]()
    for d in items:
        if args.format == "tsv":
            print(inline(canonical_key(d)))
        else:
            sys.stdout.write(canonical_key(d) + "\n")
    print("count %d" % len(items))
    return 0


def cmd_dim(args) -> int:
    from .deframe import dim_Inn
    from .hopf import build_A

    if args.inn:
        print("dim I^%d_%d = %d" % (args.degree, args.degree,
                                    dim_Inn(args.degree, cap=args.cap)))
    else:
        print("dim A_%d = %d" % (args.degree, build_A(args.degree, cap=args.cap).dim))
    return 0


def cmd_relations(args) -> int:
    from .hopf import generate_stu

    rels = generate_stu(args.degree, cap=args.cap)
    for rel in rels:
        print(lincomb_text(rel.lincomb()))
    print("count %d" % len(rels))
    return 0


def cmd_reduce(args) -> int:
    from .hopf import build_A

    d = _load_diagram(args.diagram)
    space = build_A(args.degree, cap=args.cap)
    coords = space.reduce(LinComb.single(canonical_key(d), 1))
    if not coords:
        print("0")
    for key in sorted(coords):
        print("%s * {%s}" % (coords[key], inline(key)))
    return 0


def cmd_deframe(args) -> int:
    from .deframe import decompose

    d = _load_diagram(args.diagram)
    dec = decompose(args.degree, LinComb.single(canonical_key(d), 1))
    print("kernel %s" % lincomb_text(dec.kernel_part))
    for legs in sorted(dec.invariant_parts):
        print("invariant legs=%d %s"
              % (legs, lincomb_text(dec.invariant_parts[legs])))
    return 0


def cmd_ws_eval(args) -> int:
    from .conway import by_name

    ws = by_name(args.name, args.degree, cap=args.cap)
    d = _load_diagram(args.diagram)
    print(ws(LinComb.single(canonical_key(d), 1)))
    return 0


def cmd_ws_convolution(args) -> int:
    from .conway import check_convolution_identity

    failures = 0
    for n in range(args.max_degree + 1):
        report = check_convolution_identity(n, cap=args.cap)
        expected = Fraction(1) if n == 0 else Fraction(0)
        bad = {k: v for k, v in report.items() if v != expected}
        failures += len(bad)
        print("degree %d: %d classes checked, %d violations"
              % (n, len(report), len(bad)))
    print("convolution identity: %s" % ("PASS" if not failures else "FAIL"))
    return 0 if not failures else 1


def cmd_lie_eval(args) -> int:
    from .statesum import evaluate_diagram
    from .verma import deframed_weight_poly, highest_weight_poly

    spec = _load_algebra(args.algebra)
    d = _load_diagram(args.diagram)
    if args.mode == "pbw":
        print(evaluate_diagram(d, spec).text())
        return 0
    if spec.triangular is None:
        raise UsageError("mode %r needs triangular data" % args.mode)
    if args.mode == "k-lambda":
        poly = highest_weight_poly(d, spec)
    elif args.mode == "k-lambda-deframed":
        poly = deframed_weight_poly(
            d.degree, LinComb.single(canonical_key(d), 1), spec
        )
    else:  # knn
        poly = deframed_weight_poly(
            d.degree, LinComb.single(canonical_key(d), 1), spec
        ).homogeneous_part(d.degree)
    if args.lam is not None:
        values = [Fraction(x) for x in args.lam.split(",")]
        if len(values) != len(spec.triangular.cartan):
            raise UsageError(
                "--lambda needs %d coordinates" % len(spec.triangular.cartan)
            )
        print(poly.subs(values))
    else:
        print(poly.text())
    return 0


def cmd_lie_validate(args) -> int:
    from .algebra import validate_spec

    spec = _load_algebra(args.algebra)
    failures = 0
    for check in validate_spec(spec):
        status = "PASS" if check.ok else "FAIL"
        detail = "" if check.ok else " at %s" % check.detail
        print("%s %s%s" % (status, check.name, detail))
        failures += 0 if check.ok else 1
    return 0 if not failures else 1


def cmd_lie_check_stu(args) -> int:
    from .statesum import check_stu_invariance

    spec = _load_algebra(args.algebra)
    violations = check_stu_invariance(spec, args.degree, cap=args.cap)
    print("degree %d: %d violations" % (args.degree, len(violations)))
    return 0 if not violations else 1


# ---------------------------------------------------------------------------
# verification suites


def _emit(lines, name, degree, ok, counts=""):
    status = "PASS" if ok else "FAIL"
    extra = " %s" % counts if counts else ""
    lines.append("%s %s degree=%d%s" % (status, name, degree, extra))
    return ok


def suite_hopf(max_degree, seed, cap):
    from .hopf import check_ihx_as, spanning_defect
    from .hopf import build_A, connect_sum_at, connect_sum
    from .diagrams import enumerate_ccds as enum

    lines = []
    ok = True
    for n in range(0, min(max_degree, 3) + 1):
        v = check_ihx_as(n, cap=cap)
        ok &= _emit(lines, "ihx-antisymmetry-sweep", n, not v,
                    "violations=%d" % len(v))
    for n in range(0, min(max_degree, 4) + 1):
        defect = spanning_defect(n, cap=cap)
        ok &= _emit(lines, "characters-span", n, defect == 0,
                    "defect=%d" % defect)
    rng = random.Random(seed)
    checked = 0
    good = True
    for _ in range(20):
        na = rng.randint(0, 2)
        nb = rng.randint(0, min(2, max_degree - na)) if max_degree > na else 0
        xs = enum(na, cap=cap)
        ys = enum(nb, cap=cap)
        x = rng.choice(xs)
        y = rng.choice(ys)
        if not x.wilson:
            continue
        space = build_A(na + nb, cap=cap)
        base = LinComb.single(canonical_key(connect_sum(x, y)), 1)
        pos = rng.randrange(len(x.wilson) + 1)
        other = LinComb.single(canonical_key(connect_sum_at(x, y, pos)), 1)
        checked += 1
        if not space.is_zero(base - other):
            good = False
    ok &= _emit(lines, "product-insertion-independence", max_degree, good,
                "trials=%d" % checked)
    return lines, ok


def suite_deframing(max_degree, seed, cap):
    from .deframe import decompose, dim_Inn, even_partitions, phi, s_map
    from .diagrams import enumerate_ccds as enum, has_isolated_chord
    from .hopf import build_A

    lines = []
    ok = True
    rng = random.Random(seed)
    for n in range(1, max_degree + 1):
        space = build_A(n, cap=cap)
        keys = [canonical_key(d) for d in enum(n, cap=cap)]
        sample = keys if len(keys) <= 40 else rng.sample(keys, 40)
        idem = kill = image = resum = True
        for key in sample:
            v = LinComb.single(key, 1)
            pv = phi(n, v)
            if not space.is_zero(phi(n, pv) - pv):
                idem = False
            if n >= 1 and s_map(pv):
                below = build_A(n - 1, cap=cap)
                if not below.is_zero(s_map(pv)):
                    image = False
            if has_isolated_chord(diagram_from_key(key)):
                if not space.is_zero(pv):
                    kill = False
            dec = decompose(n, v)
            if not space.is_zero(dec.resum() - v):
                resum = False
        ok &= _emit(lines, "projector-idempotent", n, idem,
                    "sample=%d" % len(sample))
        ok &= _emit(lines, "projector-image-chordless", n, image)
        ok &= _emit(lines, "isolated-chord-killed", n, kill)
        ok &= _emit(lines, "decomposition-resums", n, resum)
    for n in range(2, max_degree + 1, 2):
        want = len(even_partitions(n))
        got = dim_Inn(n, cap=cap)
        ok &= _emit(lines, "wheel-basis-rank", n, got == want,
                    "rank=%d expected=%d" % (got, want))
    return lines, ok


def suite_conway(max_degree, seed, cap):
    from .conway import check_convolution_identity, conway, conway_bar
    from .deframe import even_partitions, tau
    from .diagrams import enumerate_ccds as enum, has_isolated_chord
    from .hopf import e_set

    lines = []
    ok = True
    for n in range(0, max_degree + 1):
        cn = conway(n, cap=cap)
        good = True
        for P in even_partitions(n):
            want = Fraction(-2) ** len(P)
            for key in e_set(tau(P)):
                if cn.on_key(key) != want:
                    good = False
        ok &= _emit(lines, "conway-wheel-values", n, good)
        isolated_ok = all(
            cn.on_key(canonical_key(d)) == 0
            for d in enum(n, cap=cap)
            if has_isolated_chord(d)
        )
        ok &= _emit(lines, "conway-kills-isolated-chords", n, isolated_ok)
    for n in range(0, max_degree + 1):
        report = check_convolution_identity(n, cap=cap)
        expected = Fraction(1) if n == 0 else Fraction(0)
        bad = sum(1 for v in report.values() if v != expected)
        ok &= _emit(lines, "convolution-identity", n, bad == 0,
                    "classes=%d violations=%d" % (len(report), bad))
    return lines, ok


def suite_mmr_sl2(max_degree, seed, cap):
    from .algebra import sl2
    from .conway import conway_bar
    from .verma import knn, lambda_degree_bound_violations

    lines = []
    ok = True
    for n in range(0, max_degree + 1):
        same = knn(n, sl2(), cap=cap).value_vector() == conway_bar(
            n, cap=cap
        ).value_vector()
        ok &= _emit(lines, "top-weight-coefficient-equals-inverse", n, same)
    for n in range(0, min(max_degree, 3) + 1):
        v = lambda_degree_bound_violations(n, sl2(), cap=cap)
        ok &= _emit(lines, "weight-degree-bound", n, not v,
                    "violations=%d" % len(v))
    return lines, ok


def suite_gl11(max_degree, seed, cap):
    from .statesum import check_gl11_vanishing, gl11_theorem_violations

    lines = []
    ok = True
    for n in range(1, max_degree + 1):
        bad = gl11_theorem_violations(n, cap=cap)
        ok &= _emit(lines, "deframed-image-is-conway-times-h", n, not bad,
                    "violations=%d" % len(bad))
        audit = check_gl11_vanishing(n, cap=cap)
        ok &= _emit(
            lines, "vanishing-audit", n,
            not audit["coloring_violations"] and not audit["low_leg_violations"],
        )
    return lines, ok


def suite_classical_osp12(max_degree, seed, cap):
    from .algebra import osp12, validate_spec
    from .verma import classical_theorem_violations

    lines = []
    ok = True
    valid = all(c.ok for c in validate_spec(osp12()))
    ok &= _emit(lines, "spec-valid", 0, valid)
    for n in range(2, max_degree + 1, 2):
        bad = classical_theorem_violations(osp12(), n)
        ok &= _emit(lines, "wheel-root-sum-formula", n, not bad,
                    "violations=%d" % len(bad))
    return lines, ok


def suite_statesum(max_degree, seed, cap):
    from .algebra import gl11, osp12, sl2
    from .diagrams import enumerate_ccds as enum
    from .statesum import (
        check_compilation_independence,
        check_stu_invariance,
        evaluate_diagram,
        is_central,
        multiplicativity_violations,
    )

    lines = []
    ok = True
    specs = (sl2(), gl11(), osp12())
    for spec in specs:
        for n in range(1, min(max_degree, 3) + 1):
            v = check_stu_invariance(spec, n, cap=cap)
            ok &= _emit(lines, "stu-annihilation-%s" % spec.name, n, not v,
                        "violations=%d" % len(v))
    rng = random.Random(seed)
    for spec in specs:
        good = True
        trials = 0
        for n in range(0, min(max_degree, 3) + 1):
            pool = enum(n, cap=cap)
            sample = pool if len(pool) <= 6 else rng.sample(pool, 6)
            for d in sample:
                trials += 3
                if not check_compilation_independence(
                    d, spec, trials=3, seed=rng.randrange(10**6)
                ):
                    good = False
        ok &= _emit(lines, "compilation-independence-%s" % spec.name,
                    min(max_degree, 3), good, "trials=%d" % trials)
    for spec in specs:
        central = all(
            is_central(evaluate_diagram(d, spec))
            for n in range(0, min(max_degree, 2) + 1)
            for d in enum(n, cap=cap)
        )
        ok &= _emit(lines, "central-images-%s" % spec.name,
                    min(max_degree, 2), central)
        mult = multiplicativity_violations(spec, min(max_degree, 2), cap=cap)
        ok &= _emit(lines, "multiplicative-%s" % spec.name,
                    min(max_degree, 2), not mult,
                    "violations=%d" % len(mult))
    return lines, ok


SUITES = {
    "hopf": suite_hopf,
    "deframing": suite_deframing,
    "conway": suite_conway,
    "mmr-sl2": suite_mmr_sl2,
    "gl11": suite_gl11,
    "classical-osp12": suite_classical_osp12,
    "statesum": suite_statesum,
}

SUITE_DEFAULT_DEGREE = {
    "hopf": 3,
    "deframing": 4,
    "conway": 4,
    "mmr-sl2": 3,
    "gl11": 3,
    "classical-osp12": 3,
    "statesum": 3,
}


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    all_ok = True
    for name in names:
        max_degree = (
            args.max_degree
            if args.max_degree is not None
            else SUITE_DEFAULT_DEGREE[name]
        )
        t0 = time.time()
        lines, ok = SUITES[name](max_degree, args.seed, args.cap)
        elapsed = time.time() - t0
        print("suite %s" % name)
        for line in lines:
            print("  " + line)
        print("suite %s: %s" % (name, "PASS" if ok else "FAIL"))
        print("suite %s took %.1fs" % (name, elapsed), file=sys.stderr)
        all_ok &= ok
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacobiws",
        description="exact diagram-algebra computations and weight systems",
    )
    parser.add_argument("--cache-dir", default=None,
                        help="override the on-disk cache location")
    parser.add_argument("--no-cache", action="store_true",
                        help="disable the on-disk cache")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list diagram classes")
    p.add_argument("kind", choices=("chord", "ccd", "cc"))
    p.add_argument("degree", type=int)
    p.add_argument("--chordless", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--format", choices=("text", "tsv"), default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("dim", help="dimension of the degree-n quotient")
    p.add_argument("degree", type=int)
    p.add_argument("--inn", action="store_true",
                   help="rank of the even-partition wheel classes instead")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("relations", help="dump the degree-n relations")
    p.add_argument("degree", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("reduce", help="coordinates of a diagram's class")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--diagram", required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("deframe", help="kernel and invariant parts")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--diagram", required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_deframe)

    ws = sub.add_parser("ws", help="scalar weight systems").add_subparsers(
        dest="ws_command", required=True
    )
    p = ws.add_parser("eval")
    p.add_argument("--name", required=True,
                   choices=("conway", "conway-bar", "counit"))
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--diagram", required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_ws_eval)
    p = ws.add_parser("check-convolution")
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_ws_convolution)

    lie = sub.add_parser("lie", help="superalgebra weight systems").add_subparsers(
        dest="lie_command", required=True
    )
    p = lie.add_parser("eval")
    p.add_argument("--algebra", required=True,
                   help="builtin:sl2|builtin:gl11|builtin:osp12 or a file")
    p.add_argument("--diagram", required=True)
    p.add_argument("--mode", default="pbw",
                   choices=("pbw", "k-lambda", "k-lambda-deframed", "knn"))
    p.add_argument("--lambda", dest="lam", default=None,
                   help="comma separated rational weight coordinates")
    p.set_defaults(func=cmd_lie_eval)
    p = lie.add_parser("validate")
    p.add_argument("--algebra", required=True)
    p.set_defaults(func=cmd_lie_validate)
    p = lie.add_parser("check-stu")
    p.add_argument("--algebra", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_lie_check_stu)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=tuple(SUITES) + ("all",))
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--format", choices=("text", "tsv"), default="text")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.cache_dir:
        cache.set_cache_dir(args.cache_dir)
    if args.no_cache:
        cache.disable_cache()
    try:
        return args.func(args)
    except (UsageError, DiagramError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
