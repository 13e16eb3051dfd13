"""Command-line front end.

    uwca run      --lattice square --generations 31 [--out state.txt]
    uwca seq      --lattice hex --generations 63 [--out seq.csv]
    uwca verify   --lattice square --generations 63 --claims all [--out report.txt]
    uwca render   --lattice hex --generations 31 --style gasket-solid [--out fig.svg]
    uwca triangle --generations 13 [--out gasket.svg]

Summaries go to stdout; artifacts are written to a temporary file and renamed
into place. Exit status: 0 success, 1 a verified claim failed, 2 usage error,
3 runtime error (cell budget, style/lattice mismatch).
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from pathlib import Path
from typing import Iterable

from . import analysis, engine, render
from .errors import UWError
from .lattice import LatticeKind

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_ERROR = 3


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def write_atomic(path: Path, chunks: Iterable[str]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            for chunk in chunks:
                fh.write(chunk)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _out(args, suffix: str) -> Path:
    if args.out:
        return Path(args.out)
    return Path(f"uw-{args.lattice}-{args.generations}{suffix}")


def cmd_run(args) -> int:
    state = engine.run(args.lattice, args.generations, args.cell_budget)
    path = _out(args, ".snapshot")
    write_atomic(path, engine.snapshot_lines(state))
    print(f"{args.lattice} generation {state.generation}: {state.population_size} live cells")
    print(f"snapshot written to {path}")
    return 0


def cmd_seq(args) -> int:
    rows = analysis.sequence_export(args.lattice, args.generations, args.cell_budget)
    path = _out(args, ".csv")
    write_atomic(path, [analysis.sequence_csv(rows)])
    g, b, total = rows[-1]
    print(f"{args.lattice} generations 0..{g}: final births {b}, cumulative {total}")
    print(f"sequence written to {path}")
    return 0


def _claims(text: str) -> list[str]:
    if text == "all":
        return list(analysis.CLAIMS)
    names = [c.strip() for c in text.split(",") if c.strip()]
    unknown = [c for c in names if c not in analysis.CLAIMS]
    if unknown or not names:
        raise argparse.ArgumentTypeError(
            f"unknown claim(s) {', '.join(unknown) or text!r}; choose from {', '.join(analysis.CLAIMS)} or 'all'"
        )
    return names


def cmd_verify(args) -> int:
    state = engine.run(args.lattice, args.generations, args.cell_budget)
    reports = []
    for claim in args.claims:
        if args.all_claims and not analysis.applicable(claim, state):
            print(f"skip  {claim} (preconditions not met at this lattice/generation)")
            continue
        slices = None if args.slice is None else [args.slice]
        for rep in analysis.run_claim(claim, state, slices, args.radius, args.path_radius):
            reports.append(rep)
            extra = f" slice {rep.parameters['slice']}" if "slice" in rep.parameters else ""
            status = "PASS" if rep.passed else "FAIL"
            print(f"{status}  {claim}{extra} ({len(rep.counterexamples)} counterexamples)")
    path = _out(args, ".report")
    write_atomic(path, [analysis.reports_to_text(reports)])
    print(f"reports written to {path}")
    return 0 if all(r.passed for r in reports) else EXIT_FAIL


def cmd_render(args) -> int:
    path = _out(args, f"-{args.style}.svg")
    state = engine.run(args.lattice, args.generations, args.cell_budget)
    if path.suffix == ".pbm":
        doc = render.render_bitmap(state)
    else:
        style = render.RenderStyle(render.RenderMode(args.style), args.grid, args.cell_size)
        doc = render.render_state(state, style)
    write_atomic(path, [doc])
    print(f"figure written to {path}")
    return 0


def cmd_triangle(args) -> int:
    path = Path(args.out) if args.out else Path(f"gasket-{args.generations}.svg")
    write_atomic(path, [render.render_gasket(args.generations, render.RenderStyle(cell_size=args.cell_size))])
    print(f"gasket rows 0..{args.generations} written to {path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="uwca", description="Ulam-Warburton automaton toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, lattice=True):
        if lattice:
            p.add_argument("--lattice", choices=[k.value for k in LatticeKind], default="square")
        p.add_argument("--generations", type=_nonneg, required=True)
        p.add_argument("--out", help="output path")
        p.add_argument("--cell-budget", type=_positive, default=None,
                       help=f"live-cell limit (default {engine.DEFAULT_CELL_BUDGET}, env {engine.BUDGET_ENV})")

    p = sub.add_parser("run", help="simulate and write a state snapshot")
    common(p)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("seq", help="write the population table as CSV")
    common(p)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("verify", help="check claims against a simulation")
    common(p)
    p.add_argument("--claims", default="all", help="comma-separated claim names or 'all'")
    p.add_argument("--slice", type=_nonneg, default=None, help="only this slice for pioneer-gasket")
    p.add_argument("--radius", type=_nonneg, default=None, help="ball radius for eventually-alive")
    p.add_argument("--path-radius", type=_nonneg, default=6, help="ball radius for monotone-paths")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw the automaton as SVG (or PBM for a .pbm --out)")
    common(p)
    p.add_argument("--style", choices=[m.value for m in render.RenderMode], default="plain")
    p.add_argument("--grid", action="store_true", help="draw empty grid cells")
    p.add_argument("--cell-size", type=_positive, default=10)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("triangle", help="draw rows of the Sierpinski gasket")
    common(p, lattice=False)
    p.add_argument("--cell-size", type=_positive, default=10)
    p.set_defaults(func=cmd_triangle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        args.all_claims = args.claims == "all"
        try:
            args.claims = _claims(args.claims)
        except argparse.ArgumentTypeError as exc:
            parser.error(str(exc))
    if getattr(args, "cell_budget", None) is None and args.command != "triangle":
        args.cell_budget = engine.default_budget()
    try:
        return args.func(args)
    except UWError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
