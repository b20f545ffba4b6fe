"""Command-line interface.

Subcommands: parse, verify, vf, level, classify, orbit, series, zoo,
symmetric, dual.  Exit codes: 0 success (non-rational verdicts included),
2 parse error, 3 identically singular input, 4 a required root is
irrational.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .algebra import (AlgebraError, IdenticallySingular, NeedsRationalRoot,
                      Poly)
from .flowcore import (DegenerateJacobian, Flow, VectorField, level_of,
                       vector_field, verify_translation, verify_pde,
                       zeros_poles, is_i0_symmetric)
from .parser import (ParseError, parse_flow, parse_input, parse_vector_field,
                     print_flow, print_vector_field)
from .series import expand_from_vf, expand_flow, diagonal_series
from . import classify as _cl
from .render import orbit_points, orbit_svg, vector_field_csv

_NAMES = ("x", "y")


def _frac(s):
    return Fraction(s)


def _emit(payload, args):
    if getattr(args, "json", False):
        json.dump(payload, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        for k, v in payload.items():
            sys.stdout.write("%s: %s\n" % (k, v))


def _ell_repr(ell):
    if ell is None:
        return None
    return {"P": ell.P.to_string(_NAMES), "Q": ell.Q.to_string(_NAMES),
            "L": [str(ell.L.a), str(ell.L.b), str(ell.L.c), str(ell.L.d)]}


def _coords_repr(coords):
    if coords is None:
        return None
    if isinstance(coords, _cl.PHatValue):
        return {"phat": "oo" if coords.is_infinity else str(coords.tau)}
    return {"pN": [str(v) for v in coords.triple()], "N": coords.N}


def _verdict_payload(verdict, elapsed):
    # timings are deliberately omitted: identical inputs must give
    # byte-identical reports
    out = {"verdict": verdict.kind}
    if isinstance(verdict, _cl.RationalFlow):
        out["level"] = verdict.level
        out["ell"] = _ell_repr(verdict.ell)
        out["orbit_W"] = verdict.orbit_W.to_string(_NAMES)
        out["coords"] = _coords_repr(verdict.coords)
    elif isinstance(verdict, _cl.NonRationalGenus1):
        out["level"] = verdict.level
        out["pair"] = list(verdict.pair)
        out["orbit_W"] = (verdict.orbit_W.to_string(_NAMES)
                          if verdict.orbit_W is not None else None)
    elif isinstance(verdict, _cl.PseudoLog):
        out["ell"] = _ell_repr(verdict.ell_to_normal_form)
    elif isinstance(verdict, _cl.NonIntegerLevel):
        out["delta_squared"] = str(verdict.delta_squared)
    elif isinstance(verdict, _cl.Degenerate):
        out.update(R=verdict.R.to_string(_NAMES), c=str(verdict.c),
                   A=str(verdict.A), B=str(verdict.B))
    elif isinstance(verdict, _cl.NonRational):
        out["tag"] = verdict.tag
    return out


def _read_input(args):
    if args.input == "-":
        return sys.stdin.read()
    return args.input


def cmd_parse(args):
    obj = parse_input(_read_input(args))
    if isinstance(obj, Flow):
        _emit({"kind": "flow", "printed": print_flow(obj)}, args)
    else:
        _emit({"kind": "vector_field",
               "printed": print_vector_field(obj)}, args)
    return 0


def cmd_verify(args):
    f = parse_flow(_read_input(args))
    ok = verify_translation(f)
    _emit({"translation_equation": ok, "pde": verify_pde(f)}, args)
    return 0


def cmd_vf(args):
    f = parse_flow(_read_input(args))
    vf = vector_field(f)
    _emit({"w": vf.w.to_string(_NAMES), "r": vf.r.to_string(_NAMES)}, args)
    return 0


def cmd_level(args):
    obj = parse_input(_read_input(args))
    vf = vector_field(obj) if isinstance(obj, Flow) else obj
    lvl = level_of(vf)
    zp = zeros_poles(vf)
    _emit({"level": repr(lvl), "zeros_poles": list(zp)}, args)
    return 0


def cmd_classify(args):
    obj = parse_input(_read_input(args))
    t0 = time.time()
    if isinstance(obj, Flow):
        verdict = _cl.canonicalize(obj)
    else:
        verdict = _classify_vf(obj)
    payload = _verdict_payload(verdict, time.time() - t0)
    if isinstance(obj, Flow) and isinstance(verdict, _cl.RationalFlow):
        payload["zeros_poles"] = list(zeros_poles(vector_field(obj)))
    _emit(payload, args)
    return 0


def _classify_vf(vf):
    """Classification entry point for a bare vector field."""
    q = _cl._quad_uvw(vf)
    if q is not None:
        res = _cl.univariate_classify(q)
        if isinstance(res, _cl.Verdict):
            return res
        return _cl.RationalFlow(res["N"], None,
                                _cl.orbit_invariant(vf, res["N"]), None)
    if vf.w.den.is_constant() and vf.r.den.is_constant():
        if vf.r.is_zero():
            out = _cl.step2_obstruction(vf)
        else:
            out = _cl.quadratic_classify(vf.w.num, vf.r.num)
        if isinstance(out, _cl.Verdict):
            return out
        if isinstance(out, dict) and out.get("kind") == "level0":
            return _cl.RationalFlow(0, None, _cl.orbit_invariant(vf, 0), None)
        if isinstance(out, dict) and "classification" in out:
            sub = out["classification"]
            return _cl.RationalFlow(sub["N"], None, None, None)
        return _cl.NonRational("unclassified_route", detail=out)
    step = _cl.reduce_denominator_step(vf)
    if isinstance(step, dict):
        return _classify_vf(step["vf"])
    return _cl.NonRational("obstruction", detail=step)


def cmd_orbit(args):
    f = parse_flow(_read_input(args))
    if f.is_identity():
        x0, y0 = args.point
        csv = "x,y,w,r\n%s,%s,0,0\n" % (x0, y0)
        svg = orbit_svg([(Fraction(x0), Fraction(y0))], None,
                        rng=tuple(args.range))
        _write_artifacts(args, csv, svg)
        return 0
    vf = vector_field(f)
    verdict = _cl.canonicalize(f)
    if not isinstance(verdict, _cl.RationalFlow):
        _emit({"error": "no rational orbit invariant",
               "verdict": verdict.kind}, args)
        return 0
    W = verdict.orbit_W
    x0, y0 = Fraction(args.point[0]), Fraction(args.point[1])
    den = W.den.eval((x0, y0))
    if den == 0:
        _emit({"error": "orbit invariant has a pole at the base point"}, args)
        return 0
    value = W.num.eval((x0, y0)) / den
    pts = orbit_points(W, value, rng=tuple(args.range), n=args.grid)
    csv = vector_field_csv(vf, rng=tuple(args.range), n=args.grid)
    svg = orbit_svg(pts, vf, rng=tuple(args.range))
    _write_artifacts(args, csv, svg)
    return 0


def _write_artifacts(args, csv, svg):
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(csv)
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(svg)
    if not args.csv and not args.svg:
        sys.stdout.write(csv)


def cmd_series(args):
    obj = parse_input(_read_input(args))
    vf = vector_field(obj) if isinstance(obj, Flow) else obj
    jets = expand_from_vf(vf, args.order)
    direction = tuple(Fraction(v) for v in args.direction)
    diag = diagonal_series(jets, direction)
    payload = {
        "order": args.order,
        "u_jets": [j.to_string(_NAMES) for j in jets.u_parts],
        "v_jets": [j.to_string(_NAMES) for j in jets.v_parts],
        "diagonal": [str(c) for c in diag],
    }
    _emit(payload, args)
    return 0


def cmd_zoo(args):
    rows = []
    for e in _cl.zoo():
        rows.append({
            "name": e.name,
            "level": e.level,
            "orbit_W": e.orbit_W.to_string(_NAMES),
            "w": e.vf.w.to_string(_NAMES),
            "r": e.vf.r.to_string(_NAMES),
            "coords": _coords_repr(e.coords),
            "zeros_poles": [e.zeros, e.poles],
            "translation_equation": verify_translation(e.flow),
        })
    if args.json:
        json.dump(rows, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        for row in rows:
            sys.stdout.write("%-14s level=%d W=%s ok=%s\n" % (
                row["name"], row["level"], row["orbit_W"],
                row["translation_equation"]))
    return 0


def cmd_symmetric(args):
    f = _cl.symmetric_family(args.N, args.family)
    _emit({"flow": print_flow(f),
           "i0_symmetric": is_i0_symmetric(f),
           "translation_equation": verify_translation(f)}, args)
    return 0


def cmd_dual(args):
    f = parse_flow(_read_input(args))
    d = _cl.dual(f)
    _emit({"dual": print_flow(d)}, args)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="projflow",
        description="Exact computer algebra for rational projective flows")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, needs_input=True):
        p = sub.add_parser(name)
        if needs_input:
            p.add_argument("input", help="expression, or - for stdin")
        p.add_argument("--json", action="store_true")
        p.set_defaults(fn=fn)
        return p

    add("parse", cmd_parse)
    add("verify", cmd_verify)
    add("vf", cmd_vf)
    add("level", cmd_level)
    add("classify", cmd_classify)
    p = add("orbit", cmd_orbit)
    p.add_argument("--point", nargs=2, type=_frac, default=(Fraction(1), Fraction(2)))
    p.add_argument("--range", nargs=2, type=_frac, default=(Fraction(-2), Fraction(2)))
    p.add_argument("--grid", type=int, default=41)
    p.add_argument("--csv")
    p.add_argument("--svg")
    p = add("series", cmd_series)
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--direction", nargs=2, type=_frac,
                   default=(Fraction(1), Fraction(-1)))
    add("zoo", cmd_zoo, needs_input=False)
    p = add("symmetric", cmd_symmetric, needs_input=False)
    p.add_argument("--N", type=int, default=1)
    p.add_argument("--family", default="Phi",
                   choices=["Phi", "PhiPrime", "phi_tor_1", "Psi"])
    add("dual", cmd_dual)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        sys.stderr.write("parse error: %s\n" % exc)
        return 2
    except (IdenticallySingular, DegenerateJacobian) as exc:
        sys.stderr.write("identically singular: %s\n" % exc)
        return 3
    except NeedsRationalRoot as exc:
        sys.stderr.write("needs rational root: %s\n" % exc)
        return 4
    except AlgebraError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
