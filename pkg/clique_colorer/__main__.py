import argparse
import sys

import colorama

from clique_colorer import (
    EXIT_INFEASIBLE,
    EXIT_ODD_CYCLE,
    EXIT_USAGE,
    __version__,
    settings,
)
from clique_colorer.exceptions import (
    CliqueColorerError,
    Infeasible,
    InternalFault,
    OddCycleException,
)
from clique_colorer.logging import logger, set_verbosity
from clique_colorer.recognizers import RECOGNIZERS
from clique_colorer.sweep import FAMILIES
from clique_colorer.utils import load_config, resolve_threads, setup_i18n


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        _fail(message)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="clique_colorer",
        description="Clique-colorings of graphs with no K3,3 minor: exact solver, "
        "structural colorings, recognizers, Wagner sequences and exhaustive sweeps.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "-c", "--config", type=str, default=None, help="(optional) YAML configuration file."
    )
    parser.add_argument(
        "-l", "--language", type=str, default=None, help="(optional) Message language."
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Debug logging.")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Warnings only.")
    sub = parser.add_subparsers(dest="command", required=True)

    chi = sub.add_parser("chi", help="Clique-chromatic number of a graph.")
    chi.add_argument("file", help="graph6 or edge-list file")
    chi.add_argument("--strong", action="store_true", help="Also forbid monochromatic triangles.")
    chi.add_argument("--max-k", type=int, default=None, help="Largest color allowed.")

    color = sub.add_parser("color", help="Print a verified coloring as JSON.")
    color.add_argument("file", help="graph file, or a sequence .json for --method wagner")
    color.add_argument(
        "--method", choices=("exact", "wagner", "singular", "clawfree2"), default="exact"
    )
    color.add_argument("--trace", action="store_true", help="Include the glue trace.")

    recognize = sub.add_parser("recognize", help="Run structural recognizers.")
    recognize.add_argument("file")
    which = recognize.add_mutually_exclusive_group()
    which.add_argument("--all", action="store_true", dest="all_predicates")
    which.add_argument("--predicate", choices=list(RECOGNIZERS), default=None)
    recognize.add_argument("--table", action="store_true", help="Print a text table.")

    generate = sub.add_parser("generate", help="Random valid Wagner sequence.")
    generate.add_argument("--pieces", type=int, required=True)
    generate.add_argument("--seed", type=int, required=True)
    generate.add_argument("--min-size", type=int, default=3)
    generate.add_argument("--max-size", type=int, default=12)
    generate.add_argument("--out", type=str, default=None)

    decompose = sub.add_parser("decompose", help="Wagner sequence of a graph.")
    decompose.add_argument("file")
    decompose.add_argument("--out", type=str, default=None)

    sweep = sub.add_parser("sweep", help="Check a coloring bound over small graphs.")
    sweep.add_argument("--family", choices=list(FAMILIES), required=True)
    sweep.add_argument("--n-max", type=int, required=True)
    sweep.add_argument("--n-min", type=int, default=1)
    sweep.add_argument("--atlas", type=str, default=None, help="graph6 lines to sweep")
    sweep.add_argument("--out", type=str, default=None, help="CSV output")
    sweep.add_argument("--timeout", type=float, default=None, help="seconds per graph")
    sweep.add_argument("--threads", type=int, default=None)
    sweep.add_argument("--include-disconnected", action="store_true")

    fixtures = sub.add_parser("fixtures", help="List, check or write named graphs.")
    fixtures.add_argument("--check", action="store_true")
    fixtures.add_argument("--write", type=str, default=None, metavar="DIR")

    atlas = sub.add_parser("atlas", help="Every graph up to isomorphism as graph6.")
    atlas.add_argument("--n-max", type=int, default=None)
    atlas.add_argument("--n-min", type=int, default=1)
    atlas.add_argument("--connected", action="store_true")
    atlas.add_argument("--out", type=str, default=None)
    return parser


def dispatch(args):
    from clique_colorer import commands

    if args.command == "chi":
        return commands.cmd_chi(args.file, args.strong, args.max_k)
    if args.command == "color":
        return commands.cmd_color(args.file, args.method, args.trace)
    if args.command == "recognize":
        return commands.cmd_recognize(
            args.file, args.predicate, args.all_predicates, args.table
        )
    if args.command == "generate":
        return commands.cmd_generate(
            args.pieces, args.seed, args.out, args.min_size, args.max_size
        )
    if args.command == "decompose":
        return commands.cmd_decompose(args.file, args.out)
    if args.command == "sweep":
        return commands.cmd_sweep(
            args.family,
            args.n_max,
            n_min=args.n_min,
            atlas=args.atlas,
            out=args.out,
            timeout=args.timeout,
            threads=resolve_threads(args.threads),
            include_disconnected=args.include_disconnected,
        )
    if args.command == "fixtures":
        return commands.cmd_fixtures(args.check, args.write)
    return commands.cmd_atlas(args.n_max, args.out, args.n_min, args.connected)


def _fail(message):
    print(f"{colorama.Fore.RED}[-] {message}{colorama.Style.RESET_ALL}", file=sys.stderr)


def main(argv=None) -> int:
    colorama.init()
    args = build_parser().parse_args(argv)
    set_verbosity(args.verbose, args.quiet)
    try:
        load_config(args.config)
        if args.language is not None:
            settings.LANG = args.language
        setup_i18n(settings.LANG)
        code, messages = dispatch(args)
    except Infeasible as e:
        _fail(e)
        return EXIT_INFEASIBLE
    except OddCycleException as e:
        _fail(e)
        return EXIT_ODD_CYCLE
    except InternalFault as e:
        logger.critical(f"Internal fault: {e}")
        return EXIT_USAGE
    except (CliqueColorerError, OSError, ValueError) as e:
        _fail(e)
        return EXIT_USAGE
    for message in messages:
        print(message)
    return code


if __name__ == "__main__":
    sys.exit(main())
