"""Command-line surface.

Subcommands:
    bound     closed-form sharp bound with hypothesis checklist
    table     regression table of every published numeric value
    verify    numerical maximization against the bound
    sweep     bound/attainment curve over a class parameter, as CSV
    extremal  coefficients and functional values of the extremal function

Exit codes: 0 success/applicable, 2 usage error, 3 bound not applicable,
4 valid but not attained, 5 violation or table mismatch.
"""

from __future__ import annotations

import argparse
import datetime
import json
import sys
from fractions import Fraction

from . import __version__, bounds, catalog, extremal, oracle
from .coeffs import ClassKind, CoeffBundle, FunctionalKind, PhiSpec, Real, toeplitz

_REL_TOL = 1e-12

_FUNCTIONALS = {f.value: f for f in FunctionalKind}
_CLASSES = {k.value: k for k in ClassKind}


# ---------------------------------------------------------------------------
# serialization

def _num(x: Real):
    if isinstance(x, Fraction):
        return {"numerator": x.numerator, "denominator": x.denominator}
    return float(x)


def _cnum(z: complex) -> dict:
    return {"re": float(z.real), "im": float(z.imag)}


def _phi_dict(phi: PhiSpec) -> dict:
    return {"b1": _num(phi.b1), "b2": _num(phi.b2), "b3": _num(phi.b3)}


def bound_report_dict(r: bounds.BoundReport) -> dict:
    sm = None
    if r.sigma_mu is not None:
        sm = {"region": r.sigma_mu.region.value,
              "sigma": r.sigma_mu.sigma, "mu": r.sigma_mu.mu}
    return {
        "functional": r.functional.value,
        "class": r.class_kind.value,
        "phi": _phi_dict(r.phi),
        "bound": _num(r.bound),
        "hypotheses": [
            {"name": h.name, "satisfied": h.satisfied, "margin": h.margin}
            for h in r.hypotheses
        ],
        "sigma_mu": sm,
        "applicable": r.applicable,
        "witness": r.witness,
    }


def verification_report_dict(r: oracle.VerificationReport) -> dict:
    return {
        "functional": r.functional.value,
        "class": r.class_kind.value,
        "phi": _phi_dict(r.phi),
        "bound": r.bound,
        "empirical_max": r.empirical_max,
        "argmax": {
            "gamma0": _cnum(r.argmax.gamma0),
            "gamma1": _cnum(r.argmax.gamma1),
            "gamma2": _cnum(r.argmax.gamma2),
        },
        "samples_used": r.samples_used,
        "refinement_iters": r.refinement_iters,
        "seed": r.seed,
        "verdict": r.verdict.value,
        "margin": r.margin,
        "applicable": r.applicable,
    }


def _dump_json(d: dict) -> str:
    return json.dumps(d, indent=2, sort_keys=True)


def _write_run_record(path: str, report: dict) -> None:
    record = {
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "command": " ".join(sys.argv),
        "version": __version__,
        "report": report,
    }
    with open(path, "w") as fh:
        fh.write(_dump_json(record) + "\n")


def _fmt_value(x: Real) -> str:
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator} = {float(x):.12g}"
    return f"{float(x):.12g}"


# ---------------------------------------------------------------------------
# selector parsing

def _parse_rational(text: str) -> Real:
    """Accept '1/4', '0.25' or '3' and keep them exact."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from exc


def _resolve_phi(args) -> PhiSpec:
    raw = [args.b1, args.b2, args.b3]
    if args.phi is None:
        if any(v is None for v in raw):
            raise SystemExit2("specify --phi NAME or all of --b1/--b2/--b3")
        return PhiSpec(*raw)
    if any(v is not None for v in raw):
        raise SystemExit2("--phi and raw --b1/--b2/--b3 are mutually exclusive")
    params = {}
    for key in ("alpha", "beta", "a", "b"):
        val = getattr(args, key, None)
        if val is not None:
            params[key] = val
    try:
        return catalog.phi_coeffs(args.phi, **params)
    except (ValueError, TypeError) as exc:
        raise SystemExit2(str(exc))


class SystemExit2(Exception):
    """Usage error detected after argparse; maps to exit code 2."""


def _add_selectors(p: argparse.ArgumentParser, functional: bool = True) -> None:
    p.add_argument("--class", dest="class_kind", required=True,
                   choices=sorted(_CLASSES), help="class kind")
    if functional:
        p.add_argument("--functional", required=True,
                       choices=sorted(_FUNCTIONALS), help="Toeplitz functional")
    p.add_argument("--phi", choices=sorted(catalog.PHI_NAMES),
                   help="catalog generator name")
    p.add_argument("--alpha", type=_parse_rational, help="order parameter")
    p.add_argument("--beta", type=_parse_rational, help="strong-class parameter")
    p.add_argument("--a", type=_parse_rational, help="Janowski A")
    p.add_argument("--b", type=_parse_rational, help="Janowski B")
    p.add_argument("--b1", type=_parse_rational, help="raw B1")
    p.add_argument("--b2", type=_parse_rational, help="raw B2")
    p.add_argument("--b3", type=_parse_rational, help="raw B3")


def _add_common(p: argparse.ArgumentParser, formats=("text", "json")) -> None:
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--out", metavar="FILE", help="persist a JSON run record")
    p.add_argument("--tol", type=float, default=None,
                   help="override the default tolerance where applicable")


# ---------------------------------------------------------------------------
# subcommands

def cmd_bound(args) -> int:
    phi = _resolve_phi(args)
    report = bounds.theorem_bound(
        _FUNCTIONALS[args.functional], _CLASSES[args.class_kind], phi)
    d = bound_report_dict(report)
    if args.format == "json":
        print(_dump_json(d))
    else:
        print(f"bound: {_fmt_value(report.bound)}")
        for h in report.hypotheses:
            mark = "ok" if h.satisfied else "FAIL"
            print(f"  [{mark}] {h.name} (margin {h.margin:.6g})")
        if report.sigma_mu is not None:
            sm = report.sigma_mu
            print(f"  sigma = {sm.sigma:.12g}, mu = {sm.mu:.12g}, region = {sm.region.value}")
        print(f"  applicable: {report.applicable}")
        print(f"  attained by: {report.witness}")
    if args.out:
        _write_run_record(args.out, d)
    return 0 if report.applicable else 3


def _table_rows() -> list[dict]:
    rows = []
    for entry in catalog.fixture_entries():
        for functional, expected in entry.fixtures:
            rep = bounds.theorem_bound(functional, entry.class_kind, entry.phi)
            att = extremal.attainment(functional, entry.class_kind, entry.phi)
            if isinstance(expected, Fraction) and isinstance(rep.bound, Fraction):
                match = rep.bound == expected
            else:
                match = abs(float(rep.bound) - float(expected)) <= _REL_TOL * abs(float(expected))
            match = match and rep.applicable and (
                abs(att - float(expected)) <= _REL_TOL * max(1.0, abs(float(expected))))
            rows.append({
                "name": entry.name,
                "class_label": entry.label,
                "class": entry.class_kind.value,
                "functional": functional.value,
                "expected": expected,
                "computed": rep.bound,
                "attained": att,
                "match": match,
                "notes": "",
            })
    return rows


def cmd_table(args) -> int:
    rows = _table_rows()
    if args.only:
        rows = [r for r in rows if r["name"] == args.only]
        if not rows:
            raise SystemExit2(f"no catalog entry named {args.only!r}")
    if args.format == "csv":
        print("class,functional,expected,computed,attained,match")
        for r in rows:
            print(f"{r['class_label']},{r['functional']},{float(r['expected'])!r},"
                  f"{float(r['computed'])!r},{r['attained']!r},{str(r['match']).lower()}")
    elif args.format == "json":
        out = [dict(r, expected=_num(r["expected"]), computed=_num(r["computed"]))
               for r in rows]
        print(_dump_json({"rows": out}))
    else:  # text / markdown
        print("| class | functional | expected | computed | attained | match | notes |")
        print("|---|---|---|---|---|---|---|")
        for r in rows:
            print(f"| {r['class_label']} | {r['functional']} | {_fmt_value(r['expected'])} "
                  f"| {_fmt_value(r['computed'])} | {r['attained']:.12g} "
                  f"| {'yes' if r['match'] else 'NO'} | {r['notes']} |")
    return 0 if all(r["match"] for r in rows) else 5


def cmd_verify(args) -> int:
    phi = _resolve_phi(args)
    kwargs = {}
    if args.tol is not None:
        kwargs["violation_tol"] = args.tol
    report = oracle.maximize(
        _FUNCTIONALS[args.functional], _CLASSES[args.class_kind], phi,
        budget=args.budget, seed=args.seed, **kwargs)
    d = verification_report_dict(report)
    if args.format == "json":
        print(_dump_json(d))
    else:
        flag = "" if report.applicable else " (bound unproven: hypothesis fails)"
        print(f"verdict: {report.verdict.value}{flag}")
        print(f"  bound = {report.bound!r}")
        print(f"  empirical max = {report.empirical_max!r} (margin {report.margin:.3g})")
        print(f"  argmax gamma = ({report.argmax.gamma0:.6g}, "
              f"{report.argmax.gamma1:.6g}, {report.argmax.gamma2:.6g})")
        print(f"  samples = {report.samples_used}, refinement iters = "
              f"{report.refinement_iters}, seed = {report.seed}")
    if args.out:
        _write_run_record(args.out, d)
    return {"SharpConfirmed": 0, "ValidNotAttained": 4, "VIOLATION": 5}[report.verdict.value]


def _parse_range(text: str) -> tuple[Fraction, Fraction, Fraction]:
    parts = text.split(":")
    if len(parts) != 3:
        raise SystemExit2(f"range must be lo:hi:step, got {text!r}")
    try:
        lo, hi, step = (Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise SystemExit2(f"malformed range {text!r}")
    if step <= 0 or hi < lo:
        raise SystemExit2(f"range needs step > 0 and hi >= lo, got {text!r}")
    return lo, hi, step


def cmd_sweep(args) -> int:
    lo, hi, step = _parse_range(args.range)
    kind = _CLASSES[args.class_kind]
    functional = _FUNCTIONALS[args.functional]

    def phi_at(v: Fraction) -> PhiSpec:
        if args.param == "alpha":
            name = "starlike-order" if kind is ClassKind.STARLIKE else "convex-order"
            return catalog.phi_coeffs(name, alpha=v)
        if args.param == "beta":
            name = "strongly-starlike" if kind is ClassKind.STARLIKE else "strongly-convex"
            return catalog.phi_coeffs(name, beta=v)
        if args.param == "janowski-a":
            if args.b is None:
                raise SystemExit2("janowski-a sweep needs fixed --b")
            return catalog.phi_coeffs("janowski", a=v, b=args.b)
        if args.a is None:
            raise SystemExit2("janowski-b sweep needs fixed --a")
        return catalog.phi_coeffs("janowski", a=args.a, b=v)

    print("param,bound,applicable,attained")
    v = lo
    while v <= hi:
        try:
            phi = phi_at(v)
        except ValueError as exc:
            raise SystemExit2(str(exc))
        rep = bounds.theorem_bound(functional, kind, phi)
        att = extremal.attainment(functional, kind, phi)
        print(f"{float(v)!r},{float(rep.bound)!r},"
              f"{str(rep.applicable).lower()},{att!r}")
        v += step
    return 0


def cmd_extremal(args) -> int:
    phi = _resolve_phi(args)
    kind = _CLASSES[args.class_kind]
    n = args.order
    coeffs = extremal.extremal_coeffs(kind, phi, n)
    cb: CoeffBundle | None = coeffs.bundle() if n >= 4 else None
    if cb is None:
        ext4 = extremal.extremal_coeffs(kind, phi, 4)
        cb = ext4.bundle()
    d = {
        "class": kind.value,
        "phi": _phi_dict(phi),
        "a": [_cnum(c) for c in coeffs.a],
        "b": [_cnum(cb.b2), _cnum(cb.b3), _cnum(cb.b4)],
        "gamma": [_cnum(cb.g1), _cnum(cb.g2), _cnum(cb.g3)],
        "functionals": {f.value: toeplitz(f, cb) for f in FunctionalKind},
    }
    if args.format == "json":
        print(_dump_json(d))
    else:
        for m, c in enumerate(coeffs.a, start=1):
            print(f"a{m} = {c:.12g}")
        print(f"b2, b3, b4 = {cb.b2:.12g}, {cb.b3:.12g}, {cb.b4:.12g}")
        print(f"Gamma1, Gamma2, Gamma3 = {cb.g1:.12g}, {cb.g2:.12g}, {cb.g3:.12g}")
        for f in FunctionalKind:
            print(f"{f.value} = {toeplitz(f, cb)!r}")
    if args.out:
        _write_run_record(args.out, d)
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toepsharp",
        description="Sharp Toeplitz determinant bounds for inverse coefficients "
                    "of subordination-defined starlike/convex classes.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="closed-form sharp bound with hypotheses")
    _add_selectors(p)
    _add_common(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("table", help="regression table of published values")
    p.add_argument("--only", help="restrict to one catalog generator")
    _add_common(p, formats=("markdown", "csv", "json", "text"))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="numerical maximization against the bound")
    _add_selectors(p)
    p.add_argument("--budget", type=int, default=10 ** 5)
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="bound curve over a class parameter (CSV)")
    p.add_argument("--param", required=True,
                   choices=("alpha", "beta", "janowski-a", "janowski-b"))
    p.add_argument("--range", required=True, metavar="LO:HI:STEP")
    p.add_argument("--class", dest="class_kind", required=True,
                   choices=sorted(_CLASSES))
    p.add_argument("--functional", required=True, choices=sorted(_FUNCTIONALS))
    p.add_argument("--a", type=_parse_rational, help="fixed Janowski A")
    p.add_argument("--b", type=_parse_rational, help="fixed Janowski B")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("extremal", help="extremal function coefficients")
    _add_selectors(p, functional=False)
    p.add_argument("--order", type=int, default=4, metavar="N")
    _add_common(p)
    p.set_defaults(func=cmd_extremal)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except (SystemExit2, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = 2
    if argv is None:
        sys.exit(code)
    return code


if __name__ == "__main__":
    sys.exit(main())
