"""Command-line front end.

Commands:
  eval     print requested quantities at one model point as JSON
  figure   emit a figure's data table (CSV + JSON mirror) and its PNG
  verify   run every oracle cross-check and report pass/fail

Exit codes: 0 success, 1 I/O or check failure, 2 usage/domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .figures import (
    DIST_DOMAIN,
    DIST_LEVELS,
    DIST_STEP,
    FIGURE_IDS,
    SweepConfig,
    build_figure,
    write_figure,
)

QUANTITIES = (
    "E00", "EHF", "Ecorr", "overlap", "entropy", "purity",
    "concurrence", "dq2", "dp2", "Tstar", "beta",
)
#: Tstar is excluded from the default set: it diverges at chi = 1.
DEFAULT_QUANTITIES = tuple(q for q in QUANTITIES if q != "Tstar")


def _evaluate(point_kind: str, value: float, names: "list[str]") -> dict:
    from . import energetics as ener
    from . import entanglement as ent
    from . import model

    if point_kind == "K":
        p = model.params_from_K(value)
    elif point_kind == "chi":
        p = model.params_from_chi(value)
    else:  # Ecorr
        p = model.params_from_chi(model.chi_from_correlation_energy(value))

    out = {"K": p.K, "chi": p.chi}
    for name in names:
        if name == "E00":
            out[name] = model.energy_level(p, 0, 0)
        elif name == "EHF":
            out[name] = model.hf_energy(p)
        elif name == "Ecorr":
            out[name] = model.correlation_energy(p)
        elif name == "overlap":
            out[name] = model.hf_overlap(p)
        elif name == "entropy":
            out[name] = ent.von_neumann_entropy(p)
        elif name == "purity":
            out[name] = ent.purity(p)
        elif name == "concurrence":
            out[name] = ent.concurrence(p)
        elif name == "dq2":
            out[name] = ent.uncertainties(p).dq2
        elif name == "dp2":
            out[name] = ent.uncertainties(p).dp2
        elif name == "Tstar":
            out[name] = ent.effective_temperature(p)
        elif name == "beta":
            out[name] = ener.beta_from_chi(p.chi)
        else:
            raise KeyError(name)
    return out


def _cmd_eval(args: argparse.Namespace) -> int:
    names = [q.strip() for q in args.quantities.split(",") if q.strip()]
    unknown = [q for q in names if q not in QUANTITIES]
    if unknown:
        print(
            f"entgap eval: unknown quantities {unknown}; choose from {list(QUANTITIES)}",
            file=sys.stderr,
        )
        return 2
    if args.K is not None:
        kind, value = "K", args.K
    elif args.chi is not None:
        kind, value = "chi", args.chi
    else:
        kind, value = "Ecorr", args.Ecorr
    try:
        record = _evaluate(kind, value, names or list(DEFAULT_QUANTITIES))
    except ValueError as exc:
        print(f"entgap eval: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(record, indent=1, sort_keys=True))
    return 0


def _cmd_figure(args: argparse.Namespace) -> int:
    try:
        cfg = SweepConfig(
            parameter=args.parameter,
            lo=args.lo,
            hi=args.hi,
            points=args.points,
            cutoff_ratio=args.cutoff_ratio,
            cumulant_order=args.cumulant_order,
            truncation_tol=args.truncation_tol,
            output=args.format,
            path=args.out,
            domain=(args.dq_lo, args.dq_hi, args.dp_lo, args.dp_hi),
            mesh_step=args.mesh_step,
            levels=args.levels,
            render=not args.no_plot,
        )
        data = build_figure(args.id, cfg)
    except ValueError as exc:
        print(f"entgap figure: {exc}", file=sys.stderr)
        return 2
    try:
        written = write_figure(data, args.out, output=args.format,
                               render=not args.no_plot)
    except OSError as exc:
        print(f"entgap figure: cannot write output: {exc}", file=sys.stderr)
        return 1
    for path in written:
        print(path)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    from .verify import format_report, run_checks

    try:
        results = run_checks(args.profile)
    except ValueError as exc:
        print(f"entgap verify: {exc}", file=sys.stderr)
        return 2
    print(format_report(results))
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entgap",
        description=(
            "Entanglement vs. correlation-energy analytics for a pair of "
            "coupled 3D oscillators, with an Ohmic-bath comparison."
        ),
    )
    parser.add_argument("--version", action="version", version=f"entgap {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate quantities at one model point")
    point = p_eval.add_mutually_exclusive_group(required=True)
    point.add_argument("--K", type=float, help="bare coupling in [0, 1/2)")
    point.add_argument("--chi", type=float, help="effective coupling in (0, 1]")
    point.add_argument("--Ecorr", type=float, help="correlation energy in [0, 0.6213...)")
    p_eval.add_argument(
        "--quantities",
        default=",".join(DEFAULT_QUANTITIES),
        help=f"comma-separated subset of {','.join(QUANTITIES)}",
    )
    p_eval.set_defaults(fn=_cmd_eval)

    p_fig = sub.add_parser("figure", help="emit a figure's data (and PNG)")
    p_fig.add_argument("id", choices=FIGURE_IDS)
    p_fig.add_argument("--out", required=True, help="output table path")
    p_fig.add_argument("--parameter", default="chi",
                       choices=("K", "chi", "Ecorr", "concurrence"))
    p_fig.add_argument("--lo", type=float, default=0.02)
    p_fig.add_argument("--hi", type=float, default=0.999)
    p_fig.add_argument("--points", type=int, default=200)
    p_fig.add_argument("--cutoff-ratio", type=float, default=10.0,
                       help="Ohmic cutoff omega_C/omega")
    p_fig.add_argument("--cumulant-order", type=int, default=8,
                       help="slope-fit window n = 1..N")
    p_fig.add_argument("--truncation-tol", type=float, default=1e-12)
    p_fig.add_argument("--format", default="csv", choices=("csv", "json"))
    p_fig.add_argument("--no-plot", action="store_true",
                       help="skip the PNG, write data only")
    p_fig.add_argument("--dq-lo", type=float, default=DIST_DOMAIN[0])
    p_fig.add_argument("--dq-hi", type=float, default=DIST_DOMAIN[1])
    p_fig.add_argument("--dp-lo", type=float, default=DIST_DOMAIN[2])
    p_fig.add_argument("--dp-hi", type=float, default=DIST_DOMAIN[3])
    p_fig.add_argument("--mesh-step", type=float, default=DIST_STEP)
    p_fig.add_argument("--levels", type=int, default=DIST_LEVELS)
    p_fig.set_defaults(fn=_cmd_figure)

    p_verify = sub.add_parser("verify", help="run all oracle cross-checks")
    p_verify.add_argument("--profile", default="default",
                          choices=("default", "strict"))
    p_verify.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: "list[str] | None" = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
