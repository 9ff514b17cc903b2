"""Command-line front end.

Exit codes: 0 on success, 1 on usage, parse or validation errors, 2 when a
run stalls at the minimum arc length (the partial path is still written).
"""
from __future__ import annotations

import argparse
import dataclasses
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import benchmarks
from .arclength import EquilibriumPath, NonConvergenceError, StallAtMinimumStep, run
from .model import ModelError
from .modelio import ParseError, load_model, write_deformed_shape, write_path

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_STALL = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for stalls here
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


@dataclass(frozen=True)
class RunReport:
    steps: int
    total_iterations: int
    average_iterations: float
    restarts: int
    wall_time: float

    @classmethod
    def from_path(cls, path: EquilibriumPath, wall_time: float) -> "RunReport":
        return cls(len(path), path.total_iterations, path.average_iterations, path.restarts, wall_time)

    def format(self) -> str:
        return (
            f"steps {self.steps}  iterations {self.total_iterations}  "
            f"average {self.average_iterations:.2f}  restarts {self.restarts}  "
            f"time {self.wall_time:.2f}s"
        )


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="arcpath", description="Arc-length continuation for truss and beam models.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("run", help="trace the equilibrium path of a model file")
    r.add_argument("--model", required=True, help="model file, or the name of a bundled benchmark")
    r.add_argument("--out", help="path CSV (default: <model>.csv)")
    r.add_argument("--shapes", help="directory for one deformed-shape CSV per converged step")
    r.add_argument("--steps", type=int, help="number of converged steps")
    r.add_argument("--dlambda", type=float, help="load factor of the first step")
    r.add_argument("--psi", type=float, help="load scaling in the arc-length constraint")
    r.add_argument("--seedless", action="store_true", help="accepted for compatibility; runs are always deterministic")

    b = sub.add_parser("bench", help="run bundled benchmarks and print a summary")
    b.add_argument("--case", required=True, help="case or group name, or 'all'")
    b.add_argument("--out-dir", default="bench_out", help="directory for per-case path CSVs")
    return p


def _load(name: str):
    path = Path(name)
    if path.is_file():
        return load_model(path), path.stem
    try:
        return benchmarks.get(name).load(), name
    except KeyError:
        raise FileNotFoundError(f"no model file or bundled benchmark named {name!r}") from None


def _trace(model, config) -> tuple[EquilibriumPath, int, str]:
    try:
        return run(model, config), EXIT_OK, ""
    except StallAtMinimumStep as exc:
        return exc.path, EXIT_STALL, str(exc)


def cmd_run(args) -> int:
    try:
        (model, config), stem = _load(args.model)
        overrides = {}
        if args.steps is not None:
            overrides["max_steps"] = args.steps
        if args.dlambda is not None:
            overrides["dlambda"] = args.dlambda
        if args.psi is not None:
            overrides["psi"] = args.psi
        config = dataclasses.replace(config, **overrides)
    except (OSError, ParseError, ModelError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    t0 = time.perf_counter()
    try:
        path, code, message = _trace(model, config)
    except NonConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    wall = time.perf_counter() - t0

    out = Path(args.out) if args.out else Path(f"{stem}.csv")
    write_path(path, out)
    if args.shapes:
        shapes = Path(args.shapes)
        shapes.mkdir(parents=True, exist_ok=True)
        for rec in path.records:
            write_deformed_shape(model, rec.u, shapes / f"shape_{rec.step:04d}.csv")
    if message:
        print(f"stalled: {message}", file=sys.stderr)
    print(f"first-step ds {path.first_ds:.6g}")
    print(RunReport.from_path(path, wall).format())
    print(f"wrote {out}")
    return code


def cmd_bench(args) -> int:
    try:
        cases = benchmarks.select(args.case)
    except KeyError:
        names = ", ".join(dict.fromkeys(("all",) + benchmarks.GROUPS + tuple(c.name for c in benchmarks.CASES)))
        print(f"error: unknown case {args.case!r}; choose from {names}", file=sys.stderr)
        return EXIT_ERROR
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    header = (
        f"{'case':<28}{'ds1':>10}{'steps':>7}{'iters':>7}{'avg':>7}{'restarts':>9}"
        f"{'ref iters':>11}{'ref avg':>9}{'ref rst':>9}{'time':>8}"
    )
    print(header)
    status = EXIT_OK
    for case in cases:
        model, config = case.load()
        t0 = time.perf_counter()
        path, code, message = _trace(model, config)
        rep = RunReport.from_path(path, time.perf_counter() - t0)
        write_path(path, out_dir / f"{case.name}.csv")
        ref = case.reference
        print(
            f"{case.name:<28}{path.first_ds:>10.5g}{rep.steps:>7}{rep.total_iterations:>7}"
            f"{rep.average_iterations:>7.2f}{rep.restarts:>9}{ref.total_iterations:>11}"
            f"{ref.average_iterations:>9.2f}{ref.restarts:>9}{rep.wall_time:>7.2f}s"
        )
        if code:
            print(f"{case.name}: stalled: {message}", file=sys.stderr)
            status = max(status, code)
    print(f"wrote {len(cases)} path files to {out_dir}")
    return status


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_ERROR
    if args.command == "run":
        return cmd_run(args)
    return cmd_bench(args)


if __name__ == "__main__":
    sys.exit(main())
