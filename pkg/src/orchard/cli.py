"""Command-line interface: generators, counters, fitting, experiments,
group checks and SVG plots.

Exit codes: 0 success, 2 parse/usage error, 3 internal invariant
violation (the message names the violated invariant).  Counts print as
exact integers, tables as CSV on stdout; rationals serialize as
reduced "p/q" strings since JSON numbers cannot carry big integers.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import curves as curvemod
from . import generators as gen
from .conic import ExternalPoint, image_count, involution_value, \
    parabola_collinear, reps_collinear
from .cubics import fit_cubics
from .grouplaw import (WeierstrassCurve, cuspidal_description,
                       hyperbola_infinity_description,
                       parabola_infinity_description,
                       parallel_lines_description,
                       verify_group_description)
from .projective import ProjPoint, collinear, mk_point, point_from_rationals
from .richlines import (InvariantViolation, PointSet, direction_count,
                        green_tao_bound, k_rich_count, spanned_lines,
                        tripartite_count)
from .svg import render_pointset
from .tenpoint import (build_tenpoint_cuspidal, build_tenpoint_weierstrass,
                       extend_cantilever, verify_lattice)


# --- points file -------------------------------------------------------------

def pointset_to_doc(ps: PointSet) -> dict:
    pts = []
    for p in ps.points:
        if p.at_infinity:
            pts.append({"h": [str(v) for v in p.h]})
        else:
            x, y = p.affine()
            pts.append({"x": str(x), "y": str(y)})
    doc = {"points": pts}
    if ps.labels is not None:
        doc["labels"] = list(ps.labels)
    return doc


def pointset_from_doc(doc: dict) -> PointSet:
    if "points" not in doc or not isinstance(doc["points"], list):
        raise ValueError("points file needs a 'points' list")
    pts = []
    for entry in doc["points"]:
        if "h" in entry:
            h = [int(v) for v in entry["h"]]
            if len(h) != 3:
                raise ValueError("homogeneous entry needs three integers")
            pts.append(ProjPoint(tuple(h)))
        else:
            pts.append(mk_point(Fraction(entry["x"]), Fraction(entry["y"])))
    labels = doc.get("labels")
    return PointSet(tuple(pts),
                    tuple(int(g) for g in labels) if labels else None)


def _load_pointset(path: str) -> PointSet:
    with open(path, "r", encoding="utf-8") as fh:
        return pointset_from_doc(json.load(fh))


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- subcommands ---------------------------------------------------------------

def cmd_generate(args) -> int:
    if args.example == "ngon":
        cfg = gen.gen_ngon_directions(args.n)
        doc = {"kind": "ngon", "n": cfg.n,
               "direction_classes": cfg.direction_class_count,
               "chords": cfg.chord_count}
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
        return 0
    builders = {
        "parallel-aps": lambda n: gen.gen_parallel_aps(n, args.dense_middle),
        "triangle-ratios": gen.gen_triangle_ratios,
        "cubic-power": gen.gen_cubic_power,
        "parabola-ap": gen.gen_parabola_ap,
        "grid": gen.gen_grid,
    }
    ps = builders[args.example](args.n)
    _emit(json.dumps(pointset_to_doc(ps), indent=2) + "\n", args.out)
    return 0


def cmd_count(args) -> int:
    ps = _load_pointset(args.infile)
    if args.tripartite:
        pattern = [int(t) for t in args.tripartite.replace(",", "")]
        print(tripartite_count(ps, pattern))
        return 0
    table = spanned_lines(ps, workers=args.workers)
    print(k_rich_count(table, args.k, exactly=args.exactly))
    return 0


def cmd_directions(args) -> int:
    print(direction_count(_load_pointset(args.infile)))
    return 0


def cmd_bound(args) -> int:
    print(green_tao_bound(args.n))
    return 0


def cmd_fit_cubic(args) -> int:
    ps = _load_pointset(args.infile)
    pts = list(ps.points)
    if args.indices:
        idx = [int(i) for i in args.indices.split(",")]
        pts = [pts[i] for i in idx]
    basis = fit_cubics(pts)
    print("coefficients(X^3,X^2Y,X^2Z,XY^2,XYZ,XZ^2,Y^3,Y^2Z,YZ^2,Z^3)")
    for f in basis:
        print(",".join(str(c) for c in f.coefficients))
    if not basis:
        print("none")
    return 0


def _random_fraction(rng: random.Random, span: int = 12) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, 6))


def _check_random_triangle(trials: int, seed: int) -> int:
    from .grouplaw import menelaus_params
    rng = random.Random(seed)
    p1, p2, p3 = mk_point(0, 0), mk_point(4, 0), mk_point(1, 3)
    sides = [(p3, p2), (p1, p3), (p2, p1)]
    failures = 0
    for t in range(trials):
        if t % 2 == 0:
            xs = [gen.ratio_point(a, b, _nonzero(rng)) for a, b in sides]
        else:
            q1 = mk_point(_random_fraction(rng), _random_fraction(rng))
            q2 = mk_point(_random_fraction(rng) + 20, _random_fraction(rng))
            from .projective import join, meet
            line = join(q1, q2)
            try:
                xs = [meet(line, join(a, b)) for a, b in sides]
            except Exception:
                continue
            if any(x in (p1, p2, p3) for x in xs):
                continue
        try:
            _, verdict = menelaus_params(p1, p2, p3, *xs)
        except ValueError:
            continue
        if verdict != collinear(*xs):
            failures += 1
    return failures


def _nonzero(rng: random.Random) -> Fraction:
    while True:
        f = _random_fraction(rng)
        if f not in (0, -1):
            return f


def cmd_group_check(args) -> int:
    name = args.config
    if name == "example1":
        ps = gen.gen_parallel_aps(args.n)
        ok = verify_group_description(ps, parallel_lines_description())
        print(f"example1 n={args.n} exhaustive: {'PASS' if ok else 'FAIL'}")
    elif name == "example4":
        ps = gen.gen_cubic_power(args.n)
        ok = verify_group_description(ps, cuspidal_description())
        print(f"example4 n={args.n} exhaustive: {'PASS' if ok else 'FAIL'}")
    elif name == "triangle":
        failures = _check_random_triangle(args.trials, args.seed)
        ok = failures == 0
        print(f"triangle {args.trials} trials: "
              f"{'PASS' if ok else f'FAIL ({failures} failures)'}")
    elif name in ("parabola-inf", "hyperbola-inf"):
        desc = (parabola_infinity_description() if name == "parabola-inf"
                else hyperbola_infinity_description())
        rng = random.Random(args.seed)
        failures = 0
        for t in range(args.trials):
            p = _nonzero(rng)
            q = _nonzero(rng)
            if p == q:
                continue
            if name == "parabola-inf":
                pt1, pt2 = mk_point(p, p * p), mk_point(q, q * q)
                s = p + q if t % 2 == 0 else p + q + _nonzero(rng)
            else:
                pt1, pt2 = mk_point(p, 1 / p), mk_point(q, 1 / q)
                s = -1 / (p * q) if t % 2 == 0 else -1 / (p * q) * _nonzero(rng)
            if s == 0:
                continue
            d = point_from_rationals(1, s, 0)
            vals = [desc.value(1, pt1), desc.value(2, pt2), desc.value(3, d)]
            if desc.operation == "additive":
                alg = sum(vals) == 0
            else:
                alg = vals[0] * vals[1] * vals[2] == 1
            if alg != collinear(pt1, pt2, d):
                failures += 1
        ok = failures == 0
        print(f"{name} {args.trials} trials: "
              f"{'PASS' if ok else f'FAIL ({failures} failures)'}")
    else:
        raise ValueError(f"unknown group-check config {name!r}")
    if not ok:
        raise InvariantViolation(f"group description {name} failed")
    return 0


def _parse_curve(spec: str):
    if spec == "cuspidal":
        return ("cuspidal", None)
    if spec.startswith("weierstrass:"):
        a, b = (Fraction(v) for v in spec.split(":", 1)[1].split(","))
        return ("weierstrass", WeierstrassCurve(a, b))
    raise ValueError(f"unknown curve {spec!r}")


def _parse_point(token: str) -> ProjPoint:
    x, y = (Fraction(v) for v in token.split(":"))
    return mk_point(x, y)


def _tenpoint_common(args) -> int:
    kind, curve = _parse_curve(args.curve)
    if kind == "cuspidal":
        base = [Fraction(v) for v in args.base.split(",")]
        cfg = build_tenpoint_cuspidal(*base, Fraction(args.delta))

        def on_curve(p):
            return p.h[0] ** 3 == p.h[1] * p.h[2] ** 2
    else:
        pts = [_parse_point(tok) for tok in args.base.split(",")]
        cfg = build_tenpoint_weierstrass(curve, *pts,
                                         _parse_point(args.delta))
        on_curve = curve.contains
    obj = cfg
    if args.extend is not None:
        obj = extend_cantilever(cfg, args.extend)
    print("name,X,Y,Z")
    amap, bmap, cmap = obj.lattice_points()
    for fam, mp in (("A", amap), ("B", bmap), ("C", cmap)):
        for i in sorted(mp):
            x, y, z = mp[i].h
            print(f"{fam}{i},{x},{y},{z}")
    if not verify_lattice(obj):
        raise InvariantViolation("ten-point lattice: collinear iff i+k=j")
    for p in obj.points():
        if not on_curve(p):
            raise InvariantViolation(f"curve membership: {p} left the curve")
    return 0


def cmd_tenpoint(args) -> int:
    return _tenpoint_common(args)


def cmd_cantilever(args) -> int:
    if args.extend is None:
        raise ValueError("cantilever requires --extend M")
    return _tenpoint_common(args)


def cmd_conic(args) -> int:
    if args.mode == "collinear":
        e = _parse_external(args.external)
        print(str(parabola_collinear(Fraction(args.x), Fraction(args.y),
                                     e)).lower())
    elif args.mode == "involution":
        e = _parse_external(args.external)
        print(involution_value(e, Fraction(args.x)))
    elif args.mode == "image-count":
        e = _parse_external(args.external)
        xs = [Fraction(v) for v in args.xs.split(",")]
        print(image_count(e, xs))
    elif args.mode == "reps":
        es = [_parse_external(tok) for tok in args.externals.split(";")]
        if len(es) != 3:
            raise ValueError("reps mode needs three a,b pairs")
        print(str(reps_collinear(*es)).lower())
    else:
        raise ValueError(f"unknown conic mode {args.mode!r}")
    return 0


def _parse_external(token: str) -> ExternalPoint:
    a, b = (Fraction(v) for v in token.split(","))
    return ExternalPoint(a, b)


def cmd_experiment(args) -> int:
    d, n = args.degree, args.n
    if args.kind == "dichotomy":
        rows = curvemod.dichotomy_experiment([d], [n])
        print("degree,n,count,count_per_n2")
        for r in rows:
            print(f"{r.degree},{r.n},{r.count},{r.ratio_n2}")
        print("# evidence at desk scale, not a verification", file=sys.stderr)
    elif args.kind == "quadruple":
        xs = range(-n, n + 1)
        print("degree,n,count")
        print(f"{d},{n},{curvemod.quadruple_experiment(curvemod.graph_power(d), xs)}")
    elif args.kind == "directions":
        xs = range(1, n + 1)
        print("degree,n,count")
        print(f"{d},{n},"
              f"{curvemod.few_directions_experiment(curvemod.graph_power(d), xs)}")
    else:
        raise ValueError(f"unknown experiment kind {args.kind!r}")
    return 0


def cmd_plot(args) -> int:
    ps = _load_pointset(args.infile)
    svg = render_pointset(ps, mark_triple_lines=args.mark_triple_lines)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return 0


# --- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="orchard",
        description="Exact triple-line geometry: generators, counts, "
                    "cubic fitting, group checks, experiments, plots.")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a configuration as JSON")
    p.add_argument("--example", required=True,
                   choices=["parallel-aps", "triangle-ratios", "ngon",
                            "cubic-power", "parabola-ap", "grid"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dense-middle", action="store_true",
                   help="double density on the middle row (parallel-aps)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("count", help="k-rich or tripartite line counts")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--exactly", action="store_true")
    p.add_argument("--tripartite", help="label pattern, e.g. 1,2,3 or 112")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("directions", help="distinct directions of all joins")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_directions)

    p = sub.add_parser("bound", help="exact 3-rich maximum for n points")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("fit-cubic", help="exact cubics through the points")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--indices", help="comma list of point indices to use")
    p.set_defaults(func=cmd_fit_cubic)

    p = sub.add_parser("group-check",
                       help="verify a collinearity group description")
    p.add_argument("--config", required=True,
                   choices=["example1", "example4", "triangle",
                            "parabola-inf", "hyperbola-inf"])
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--trials", type=int, default=2000)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_group_check)

    for name, fn in (("tenpoint", cmd_tenpoint), ("cantilever", cmd_cantilever)):
        p = sub.add_parser(name, help="build and verify a ten point "
                                      "configuration (optionally extended)")
        p.add_argument("--curve", required=True,
                       help="cuspidal or weierstrass:a,b")
        p.add_argument("--base", required=True,
                       help="cuspidal: p,q,r parameters; weierstrass: "
                            "x1:y1,x2:y2,x3:y3")
        p.add_argument("--delta", required=True,
                       help="cuspidal: rational step; weierstrass: x:y point")
        p.add_argument("--extend", type=int, default=None)
        p.set_defaults(func=fn)

    p = sub.add_parser("conic", help="parabola secant/involution utilities")
    p.add_argument("--mode", required=True,
                   choices=["collinear", "involution", "image-count", "reps"])
    p.add_argument("--external", help="a,b")
    p.add_argument("--externals", help="a1,b1;a2,b2;a3,b3")
    p.add_argument("--x")
    p.add_argument("--y")
    p.add_argument("--xs", help="comma list of rationals")
    p.set_defaults(func=cmd_conic)

    p = sub.add_parser("experiment", help="dichotomy/quadruple/directions CSV")
    p.add_argument("--kind", required=True,
                   choices=["dichotomy", "quadruple", "directions"])
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("plot", help="render a points file as SVG")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--mark-triple-lines", action="store_true")
    p.set_defaults(func=cmd_plot)

    return top


def run(argv: list[str]) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, IndexError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
