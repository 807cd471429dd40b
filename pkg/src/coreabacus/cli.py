"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .abacus import min_beadset, normalize, to_abacus
from .alpha_sym import build_alpha
from .core_quotient import s_core, s_quotient
from .partitions import EMPTY, InvalidPartition, Partition, make_partition
from .render import render
from .simul_cores import enumerate_cores, gap_set, kappa
from .verify import THEOREMS, run_all, run_theorem


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_partition(text: str) -> Partition:
    """``4,2,1,1`` or ``empty``."""
    text = text.strip()
    if text == "empty":
        return EMPTY
    try:
        return make_partition(int(tok) for tok in text.split(","))
    except (ValueError, InvalidPartition) as exc:
        raise UsageError(f"malformed partition literal {text!r}: {exc}") from None


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _literal(p: Partition) -> str:
    return ",".join(map(str, p)) if p else "empty"


def _require_s(s: int | None, minimum: int = 2) -> int:
    if s is None:
        raise UsageError("--s is required")
    if s < minimum:
        raise UsageError(f"--s must be at least {minimum}")
    return s


def _require_even(s: int | None) -> int:
    s = _require_s(s, 4)
    if s % 2:
        raise UsageError(f"alpha needs an even s > 2, got {s}")
    return s


def _require_pair(s: int | None, t: int | None) -> tuple[int, int]:
    if s is None or t is None:
        raise UsageError("--s and --t are required")
    try:
        gap_set(s, t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return s, t


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coreabacus", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, help, fmt="json", **extra):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=("ascii", "svg", "json"), default=fmt, **extra)
        return p

    p = add("core", "s-core of a partition")
    p.add_argument("--partition", required=True)
    p.add_argument("--s", type=int)

    p = add("quotient", "s-quotient of a partition")
    p.add_argument("--partition", required=True)
    p.add_argument("--s", type=int)

    p = add("kappa", "largest simultaneous (s, t)-core")
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)

    p = sub.add_parser("alpha", help="the abacus alpha(s)")
    p.add_argument("--s", type=int)
    p.add_argument("--render", "--format", dest="format", choices=("ascii", "svg", "json"), default="ascii")

    p = add("enumerate", "all simultaneous (s, t)-cores")
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)

    p = add("verify", "run verification suites")
    p.add_argument("--theorem", choices=THEOREMS + ("all",), default="all")
    p.add_argument("--s-max", type=int, default=12)
    p.add_argument("--r", type=int)
    p.add_argument("--timing", action="store_true")

    p = add("render", "draw an abacus (alpha(s), or a partition on s runners)", fmt="ascii")
    p.add_argument("--s", type=int)
    p.add_argument("--partition")
    return parser


def _dispatch(args) -> tuple[int, str]:
    verb = args.verb
    if verb in ("core", "quotient"):
        p = parse_partition(args.partition)
        s = _require_s(args.s)
        if verb == "core":
            c = s_core(p, s)
            return 0, _dump(c.to_json()) if args.format == "json" else _literal(c)
        q = s_quotient(p, s)
        if args.format == "json":
            return 0, _dump(q.to_json())
        return 0, " | ".join(_literal(part) for part in q)

    if verb == "kappa":
        s, t = _require_pair(args.s, args.t)
        k = kappa(s, t)
        if args.format == "json":
            return 0, _dump({"partition": k.to_json(), "size": k.size})
        return 0, f"{_literal(k)}\nsize {k.size}"

    if verb == "enumerate":
        s, t = _require_pair(args.s, args.t)
        cores = enumerate_cores(s, t)
        if args.format == "json":
            return 0, _dump([c.to_json() for c in cores])
        return 0, "\n".join(_literal(c) for c in cores)

    if verb == "alpha":
        return 0, render(build_alpha(_require_even(args.s)).abacus, args.format)

    if verb == "render":
        if args.partition is None:
            grid = build_alpha(_require_even(args.s)).abacus
        else:
            s = _require_s(args.s)
            grid = to_abacus(normalize(min_beadset(parse_partition(args.partition)), s), s)
        try:
            return 0, render(grid, args.format)
        except ValueError as exc:
            raise UsageError(str(exc)) from None

    if verb == "verify":
        if args.s_max < 4:
            raise UsageError("--s-max must be at least 4")
        if args.r is not None and (args.r < 3 or args.r % 2 == 0):
            raise UsageError(f"--r must be odd and at least 3, got {args.r}")
        if args.theorem == "all":
            reports = run_all(args.s_max, args.r)
        else:
            reports = [run_theorem(args.theorem, args.s_max, args.r)]
        status = 0 if all(rep.passed for rep in reports) else 1
        if args.format == "json":
            payload = [rep.to_json(args.timing) for rep in reports]
            return status, _dump(payload if len(payload) > 1 else payload[0])
        lines = []
        for rep in reports:
            line = f"{rep.theorem}: {'pass' if rep.passed else 'FAIL'} ({len(rep.instances)} instances, {rep.parameter_range})"
            if args.timing:
                line += f" {rep.elapsed:.3f}s"
            lines.append(line)
            lines += [f"  {inst.params} FAIL" for inst in rep.instances if not inst.passed]
        return status, "\n".join(lines)

    raise UsageError(f"unknown verb {verb!r}")


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return int(exc.code or 0)
        status, text = _dispatch(args)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    print(text, file=stdout)
    return status


def main():
    sys.exit(run())
