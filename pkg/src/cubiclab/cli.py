"""Command-line driver.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from math import factorial
from typing import List, Optional, Sequence

from . import __version__, bbw, chow, lattice, monodromy
from .bbw import Space
from .bundles import BundleSyntaxError, parse_bundle
from .cache import JsonlStore
from .cohom import (LedgerError, bundle_cohomology, euler_char, fano_cotangent_sections,
                    fano_structure_sheaf, load_ledger, verify_ledger)
from .config import ConfigError, RunConfig, default_config, load_config, resolve_ledger
from .report import LedgerSection, Report, emit_report
from .suites import run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def run_verify(cfg: RunConfig) -> Report:
    """Check every ledger and run the configured suites."""
    start = time.perf_counter()
    if cfg.cache:
        bbw.set_store(JsonlStore(cfg.cache_path))
    try:
        sections = []
        for item in cfg.ledgers:
            path = resolve_ledger(item)
            claims = load_ledger(path)
            sections.append(LedgerSection(item, verify_ledger(claims, cfg.jobs)))
        suites = tuple(run_suite(name, cfg) for name in cfg.suites)
    finally:
        if cfg.cache:
            bbw.set_store(None)
    summary = {"ledgers": list(cfg.ledgers), "suites": list(cfg.suites), "seed": cfg.seed,
               "external_exclusions": cfg.external_exclusions,
               "discriminant_exclusions": cfg.discriminant_exclusions,
               "monodromy_points": cfg.monodromy_points, "monodromy_trials": cfg.monodromy_trials}
    return Report(tuple(sections), suites, summary, time.perf_counter() - start)


# -- subcommands ----------------------------------------------------------------------

def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _cmd_verify(args) -> int:
    cfg = load_config(args.config) if args.config else default_config()
    cfg = cfg.with_overrides(
        ledgers=tuple(args.ledger) if args.ledger else None,
        jobs=args.jobs, seed=args.seed, report=args.report, format=args.format,
        suites=tuple(s for s in args.suites.split(",") if s) if args.suites is not None else None,
        cache=False if args.no_cache else (True if args.cache else None),
        cache_path=args.cache, timing=False if args.no_timing else None,
        external_exclusions=False if args.no_external_exclusions else None,
        monodromy_points=args.points, monodromy_trials=args.trials)
    report = run_verify(cfg)
    text = emit_report(report, cfg.format, cfg.report_path(), cfg.timing)
    if cfg.report_path() is None:
        sys.stdout.write(text)
    else:
        print(f"report written to {cfg.report_path()}")
    for line in report.failures():
        print(f"FAILED {line}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


def _params(items: Sequence[str]) -> dict:
    env = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        try:
            env[name.strip()] = int(value)
        except ValueError:
            raise UsageError(f"bad --param {item!r}; expected name=integer") from None
        if not sep or not name.strip():
            raise UsageError(f"bad --param {item!r}; expected name=integer")
    return env


def _cmd_cohom(args) -> int:
    space = Space.parse(args.space)
    expr = parse_bundle(args.bundle, space)
    env = _params(args.param)
    from .bundles import free_params
    missing = sorted(free_params(expr) - set(env))
    if missing:
        raise UsageError(f"missing --param for {', '.join(missing)}")
    coh = bundle_cohomology(expr, space, env)
    degrees = [args.degree] if args.degree is not None else list(range(space.dim + 1))
    out = {
        "space": space.ident, "bundle": str(expr), "params": env, "split": coh.split,
        "h": {str(q): coh.table[q] for q in degrees},
        "exact": {str(q): q in coh.exact_degrees for q in degrees},
        "euler": euler_char(expr, space, env),
        "pieces": [{"weight": list(w), "multiplicity": m, "h": t.to_json()["dims"]}
                   for w, m, t in coh.pieces],
    }
    _print_json(out)
    return EXIT_OK


_VARIETIES = {"fano-cubic4": 6, "fano-cubic3": 5}


def _cmd_hodge(args) -> int:
    n = _VARIETIES[args.variety]
    res = fano_structure_sheaf(n)
    out = {"variety": args.variety, "grassmannian": f"G(2,{n})", **res.to_json()}
    if n == 6:
        value, status = fano_cotangent_sections(6)
        out["h0_cotangent"] = {"value": value, "status": status.value}
    _print_json(out)
    return EXIT_OK


def _cmd_euler(args) -> int:
    space = Space.parse(args.space)
    chi = factorial(space.rank)
    for b in space.blocks:
        chi //= factorial(b)
    out = {"space": space.ident, "dim": space.dim, "chi_top": chi}
    if space.kind == "G" and space.n >= 4:
        out["chi_top_fano_lines"] = chow.chi_top_fano(space.n)
    if args.bundle:
        expr = parse_bundle(args.bundle, space)
        out["bundle"] = str(expr)
        out["euler_char"] = euler_char(expr, space, _params(args.param))
    _print_json(out)
    return EXIT_OK


def _cmd_lattice_classify(args) -> int:
    res = lattice.classify_aut(args.rank_mp, external_exclusions=not args.no_external_exclusions,
                               discriminant_exclusions=not args.no_discriminant_exclusions)
    _print_json(res.to_json())
    return EXIT_OK


def _cmd_lattice_disc(args) -> int:
    try:
        gram = json.loads(args.gram)
        lat = lattice.IntLattice.of(gram)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad Gram matrix: {exc}") from None
    a = lattice.discriminant_group(lat)
    _print_json({"gram": [list(r) for r in lat.gram], "det": lat.det,
                 "invariant_factors": list(a.invariant_factors), "order": a.order,
                 "group": a.describe(), "id_equals_minus_id": lattice.neg_id_test(lat)})
    return EXIT_OK


def _cmd_monodromy(args) -> int:
    if args.points < 1 or args.trials < 0:
        raise UsageError("need --points >= 1 and --trials >= 0")
    rep = monodromy.build_global(args.points)
    dec = monodromy.decompose_rep(rep)
    runs = monodromy.closure_trials(args.trials, args.seed, [args.points])
    r = monodromy.local_monodromy()
    out = {
        "points": args.points, "trials": args.trials, "seed": args.seed,
        "local_monodromy": r, "order_three": monodromy.has_order_three(r),
        "decomposition": dec.to_json(),
        "closures": {"ok": sum(t.ok for t in runs),
                     "dims": sorted({t.closure_dim for t in runs})},
    }
    _print_json(out)
    return EXIT_OK if dec.complete and all(t.ok for t in runs) else EXIT_FAIL


# -- parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cubiclab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"cubiclab {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check ledgers and run the exact-value suites")
    v.add_argument("--config", help="key = value config file (default: the shipped one)")
    v.add_argument("--ledger", nargs="+", help="ledger files or shipped ledger names")
    v.add_argument("--jobs", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--report", help="write the report here instead of stdout")
    v.add_argument("--format", choices=["json", "md"])
    v.add_argument("--suites", help="comma-separated subset of koszul,chow,lattice,monodromy ('' for none)")
    v.add_argument("--cache", metavar="PATH", help="use a JSON-lines cohomology cache at PATH")
    v.add_argument("--no-cache", action="store_true")
    v.add_argument("--no-timing", action="store_true", help="omit timings for byte-stable output")
    v.add_argument("--no-external-exclusions", action="store_true")
    v.add_argument("--points", type=int, help="largest number of A2 points in the monodromy suite")
    v.add_argument("--trials", type=int, help="random closures in the monodromy suite")
    v.set_defaults(func=_cmd_verify)

    c = sub.add_parser("cohom", help="cohomology of one bundle")
    c.add_argument("--space", required=True)
    c.add_argument("--bundle", required=True)
    c.add_argument("--param", action="append", metavar="NAME=INT")
    c.add_argument("--degree", type=int)
    c.set_defaults(func=_cmd_cohom)

    h = sub.add_parser("hodge", help="h^q(O_F) for a Fano variety of lines")
    h.add_argument("--variety", required=True, choices=sorted(_VARIETIES))
    h.set_defaults(func=_cmd_hodge)

    e = sub.add_parser("euler", help="topological Euler characteristics")
    e.add_argument("--space", required=True)
    e.add_argument("--bundle")
    e.add_argument("--param", action="append", metavar="NAME=INT")
    e.set_defaults(func=_cmd_euler)

    l = sub.add_parser("lattice", help="lattice computations")
    lsub = l.add_subparsers(dest="lattice_command", required=True)
    lc = lsub.add_parser("classify", help="automorphism orders by middle Picard rank")
    lc.add_argument("--rank-mp", type=int, required=True, choices=[1, 2])
    lc.add_argument("--no-external-exclusions", action="store_true")
    lc.add_argument("--no-discriminant-exclusions", action="store_true")
    lc.set_defaults(func=_cmd_lattice_classify)
    ld = lsub.add_parser("disc", help="discriminant group of a Gram matrix")
    ld.add_argument("--gram", required=True, help="JSON array of rows")
    ld.set_defaults(func=_cmd_lattice_disc)

    m = sub.add_parser("monodromy", help="A2 monodromy representation checks")
    m.add_argument("--points", type=int, default=2)
    m.add_argument("--trials", type=int, default=100)
    m.add_argument("--seed", type=int, default=0)
    m.set_defaults(func=_cmd_monodromy)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, ConfigError, LedgerError, BundleSyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # invalid spaces, symbols and weights surface as ValueError from the library
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
