"""Command-line entry point: ``mvlab <subcommand> ...``.

Exit codes: 0 clean, 1 a mathematical violation or counterexample, 2 usage error.
"""
from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass

from . import io
from .rootsys import UnsupportedTypeError, parse_root_system

log = logging.getLogger("mvlab")

CHECKS = ("thm31", "thm32", "thm33", "am-conjecture", "axioms", "validators")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    root_system: str = "A2"
    depth: int = 2
    check: str | None = None
    out: str | None = None
    fmt: str = "json"
    seed: int = 0
    experimental: bool = False

    def __post_init__(self):
        if self.depth < 0:
            raise UsageError("depth must be nonnegative")
        if self.check is not None and self.check not in CHECKS:
            raise UsageError(f"unknown check {self.check!r}")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rs(cfg: RunConfig):
    try:
        return parse_root_system(cfg.root_system, experimental=cfg.experimental)
    except UnsupportedTypeError as exc:
        raise UsageError(str(exc)) from None


def cmd_generate(cfg: RunConfig) -> int:
    from .crystal import crystal_graph, generate
    rs = _rs(cfg)
    S = generate(rs, cfg.depth)
    log.info("generated %d polytopes for %s", len(S), rs.name)
    if cfg.fmt == "dot":
        _emit(crystal_graph(S), cfg.out)
    else:
        _emit(io.dumps(io.set_to_json(rs.name, S)), cfg.out)
    return 0


def cmd_crystal_graph(cfg: RunConfig) -> int:
    return cmd_generate(RunConfig(cfg.root_system, cfg.depth, None, cfg.out, "dot",
                                  cfg.seed, cfg.experimental))


def cmd_check(cfg: RunConfig) -> int:
    from .checks import axioms_report, theorem_report, validators_report
    from .crystal import generate
    rs = _rs(cfg)
    S = generate(rs, cfg.depth)
    if cfg.check == "axioms":
        rep = axioms_report(S)
    elif cfg.check == "validators":
        rep = validators_report(S)
    else:
        rep = theorem_report(S, cfg.check.replace("-", "_"))
    rep.update({"root_system": rs.name, "depth": cfg.depth})
    _emit(io.dumps(rep), cfg.out)
    log.info("%s on %s depth %d: %d violations", cfg.check, rs.name, cfg.depth, rep["violations"])
    return 1 if rep["violations"] else 0


def cmd_fold(cfg: RunConfig) -> int:
    from .checks import fold_report
    from .folding import build_folding
    if "@" not in cfg.root_system:
        raise UsageError("fold needs a folded system such as C2@A3")
    try:
        ctx = build_folding(cfg.root_system, experimental=cfg.experimental)
    except UnsupportedTypeError as exc:
        raise UsageError(str(exc)) from None
    rep = fold_report(ctx, cfg.depth)
    _emit(io.dumps(rep), cfg.out)
    return 1 if rep["violations"] else 0


def cmd_d4_example(cfg: RunConfig) -> int:
    from .d4example import d4_example
    rep = d4_example()
    lines = ["check | got | expected | status"]
    for c in rep["checks"]:
        lines.append(f"{c['name']} | {c['got']} | {c['expected']} | {'ok' if c['ok'] else 'MISMATCH'}")
    sbs = rep["side_by_side"]
    lines.append("at gamma0 = {}: M' = {}, M~ = {}, M'' = {} (AM route: {})".format(
        rep["gamma0"], sbs["M'"], sbs["M~"], sbs["M''"], rep["route"]))
    if cfg.out:
        _emit(io.dumps(rep), cfg.out)
    print("\n".join(lines))
    return 0 if rep["ok"] else 1


def cmd_preproj_selftest(cfg: RunConfig) -> int:
    from .checks import preproj_selftest
    rep = preproj_selftest()
    for r in rep["results"]:
        print(f"{'PASS' if r['ok'] else 'FAIL'}  {r['name']}")
    if cfg.out:
        _emit(io.dumps(rep), cfg.out)
    return 1 if rep["violations"] else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mvlab", description="MV polytope calculus toolkit")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, depth=True):
        sp.add_argument("--rs", default="A2", help="root system, e.g. A2, D4, C2@A3")
        if depth:
            sp.add_argument("--depth", type=int, default=2)
        sp.add_argument("--out", help="write output to this file")
        sp.add_argument("--experimental", action="store_true", help="allow E6 and F4@E6")

    g = sub.add_parser("generate", help="crystal closure of the trivial polytope")
    common(g)
    g.add_argument("--format", choices=("json", "dot"), default="json")
    c = sub.add_parser("check", help="theorem and property sweeps")
    c.add_argument("which", choices=CHECKS)
    common(c)
    f = sub.add_parser("fold", help="folding round trips on a folded system")
    common(f)
    d = sub.add_parser("d4-example", help="recompute the worked D4 example")
    d.add_argument("--out")
    s = sub.add_parser("preproj-selftest", help="preprojective-algebra cross-checks")
    s.add_argument("--out")
    cg = sub.add_parser("crystal-graph", help="DOT crystal graph")
    common(cg)
    return p


COMMANDS = {
    "generate": cmd_generate,
    "check": cmd_check,
    "fold": cmd_fold,
    "d4-example": cmd_d4_example,
    "preproj-selftest": cmd_preproj_selftest,
    "crystal-graph": cmd_crystal_graph,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        cfg = RunConfig(root_system=getattr(args, "rs", "D4"),
                        depth=getattr(args, "depth", 0),
                        check=getattr(args, "which", None),
                        out=getattr(args, "out", None),
                        fmt=getattr(args, "format", "json"),
                        experimental=getattr(args, "experimental", False))
        return COMMANDS[args.command](cfg)
    except UsageError as exc:
        print(f"mvlab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
