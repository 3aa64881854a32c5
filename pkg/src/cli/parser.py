# src/cli/parser.py
import argparse
import logging

from cli.commands import COMMANDS
from cli.config import build_config
from common.errors import KoblabError, UsageError
from common.log import configure_logging

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


def _common(parser):
    parser.add_argument("--config", dest="config_path", help="JSON config file; flags override it")
    parser.add_argument("--output", "-o", help="output path (default stdout)")
    parser.add_argument("--format", choices=("json", "csv"))
    parser.add_argument("--seed", type=int)
    parser.add_argument("--grid", type=int, help="boundary lattice size M (power of two)")
    parser.add_argument("--ladder", help="comma-separated radii, e.g. 0.9,0.99,0.999")
    parser.add_argument("--margin", type=float)
    parser.add_argument("-v", "--verbose", action="count", default=0)


def _target(parser):
    parser.add_argument("--domain")
    parser.add_argument("--p", help="base point, comma-separated complex coordinates")
    parser.add_argument("--v", help="direction, comma-separated complex coordinates")
    parser.add_argument("--k", type=int)
    parser.add_argument("--degree", type=int)
    parser.add_argument("--restarts", type=int)
    parser.add_argument("--stages", type=int)
    parser.add_argument("--warm-start", dest="warm_start", help="catalog name used as incumbent")
    parser.add_argument("--lift", type=int, help="precompose the warm start with ζ^lift")


def build_parser():
    parser = argparse.ArgumentParser(prog="koblab", description="Higher-order Kobayashi pseudometric toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify-paper", help="run the anchored verification suite")
    _common(verify)
    verify.add_argument("--check", dest="checks", action="append", help="run only this check id (repeatable)")
    verify.add_argument("--inject", action="append", help=argparse.SUPPRESS)

    estimate = sub.add_parser("estimate", help="certified upper bound for K^k")
    _common(estimate)
    _target(estimate)

    sweep = sub.add_parser("sweep", help="degree or feasibility sweep as a table")
    _common(sweep)
    _target(sweep)
    sweep.add_argument("--kind", dest="sweep", choices=("degree", "feasibility"))
    sweep.add_argument("--degrees", help="comma-separated search degrees")
    sweep.add_argument("--t-range", dest="t_range", help="lo,hi,count")
    sweep.add_argument("--ratio-range", dest="ratio_range", help="lo,hi,count for |b|/|a|")

    schwarz = sub.add_parser("schwarz", help="seeded Schwarz-type inequality suite")
    _common(schwarz)
    schwarz.add_argument("--lemma", choices=("basic", "pick", "punctured", "composition"))
    schwarz.add_argument("--k", type=int)
    schwarz.add_argument("--samples", type=int)
    schwarz.add_argument("--center", help="base point ζ₀ for the Schwarz–Pick suite")

    stationarity = sub.add_parser("stationarity", help="weight solve for a catalog map")
    _common(stationarity)
    stationarity.add_argument("--map", required=True)
    stationarity.add_argument("--k", type=int)
    stationarity.add_argument("--cutoff", type=int)

    catalog = sub.add_parser("catalog", help="list or show catalog discs")
    _common(catalog)
    catalog.add_argument("action", choices=("list", "show"))
    catalog.add_argument("name", nargs="?")
    catalog.add_argument("--lift", type=int)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    configure_logging(args.verbose)
    flags = vars(args)
    try:
        config = build_config(args.command, flags, flags.get("config_path"))
        _, ok = COMMANDS[args.command](config)
    except UsageError as exc:
        LOGGER.error("%s", exc)
        return EXIT_USAGE
    except KoblabError as exc:
        LOGGER.error("numerical failure: %s", exc)
        return EXIT_NUMERICAL
    except OSError as exc:
        LOGGER.error("I/O failure: %s", exc)
        return EXIT_NUMERICAL
    return EXIT_OK if ok else EXIT_FAILURE
