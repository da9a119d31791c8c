"""Command line driver for normal forms, automorphisms and lemma-lab suites.

Results are written to stdout as aligned text or JSON; log records and error
messages go to stderr. The exit code tells what went wrong:

    0  success
    1  an asserted lemma-lab check failed
    2  usage, syntax, generator range or exponent overflow error, unknown suite
    3  resource cap exceeded
    4  not an automorphism, or another domain precondition
"""

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional

from nilpotra.errors import (
    GeneratorRangeError,
    NotAnAutomorphismError,
    PreconditionError,
    ResourceLimitError,
    WordOverflowError,
    WordSyntaxError,
)
from nilpotra.group.context import GroupContext
from nilpotra.group.element import NilpotentElement, collect
from nilpotra.hall.basis import build_hall_basis
from nilpotra.lab.runner import ALL, SuiteRunner
from nilpotra.morphism.endomorphism import Endomorphism, is_primitive, primitive_witness
from nilpotra.parameters import (
    DEFAULT_CLASS,
    DEFAULT_RANK,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    NILPOTRA,
    OUTPUT_FORMATS,
    TEXT_FORMAT,
    RunConfig,
)
from nilpotra.word.parser import parse_word

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_PRECONDITION = 4

log = logging.getLogger(__name__)


# -------------------------------------------------------------------------------
# output helpers
# -------------------------------------------------------------------------------
def _emit(config: RunConfig, data: Any, text: Callable[[], List[str]]) -> None:
    if config.is_json:
        print(json.dumps(data, indent=2))
    else:
        for line in text():
            print(line)


def _element_lines(element: NilpotentElement) -> List[str]:
    if element.is_identity():
        return ["identity"]
    rows = [
        (entry["commutator"], str(entry["weight"]), entry["exp"])
        for entry in element.toDict()["coords"]
    ]
    widths = [max(len(row[i]) for row in rows) for i in range(3)]
    return [
        f"{label:<{widths[0]}}  {weight:>{widths[1]}}  {exp:>{widths[2]}}"
        for label, weight, exp in rows
    ]


def _map_lines(f: Endomorphism) -> List[str]:
    return [f"x{i} -> {image}" for i, image in enumerate(f.images, start=1)]


def _context(config: RunConfig) -> GroupContext:
    return GroupContext.get(config.rank, config.nclass, config.limits)


def _word(config: RunConfig, text: str) -> NilpotentElement:
    return collect(parse_word(text, config.rank, config.limits.max_word_len), _context(config))


# -------------------------------------------------------------------------------
# commands
# -------------------------------------------------------------------------------
def cmd_nf(args: argparse.Namespace, config: RunConfig) -> int:
    """Print the Hall normal form of a word."""
    element = _word(config, args.word)
    _emit(config, element.toDict(), lambda: _element_lines(element))
    return EXIT_OK


def cmd_hall(args: argparse.Namespace, config: RunConfig) -> int:
    """Print the Hall basis of F_{N,C} or its Witt counts."""
    basis = build_hall_basis(args.n, args.c, config.limits.max_witt)
    if args.counts:
        counts = basis.counts()
        _emit(
            config,
            {"rank": args.n, "class": args.c, "counts": counts},
            lambda: [",".join(str(count) for count in counts)],
        )
    else:
        data = {
            "rank": args.n,
            "class": args.c,
            "counts": basis.counts(),
            "basis": [{"commutator": str(tree), "weight": tree.weight} for tree in basis.trees],
        }
        _emit(config, data, basis.dump)
    return EXIT_OK


def cmd_aut(args: argparse.Namespace, config: RunConfig) -> int:
    """Apply, compose, invert or inspect an endomorphism."""
    ctx = _context(config)
    action = args.action
    if action == "primitive":
        element = _word(config, args.word)
        primitive = is_primitive(element)
        witness = primitive_witness(element) if primitive else None
        data: Dict[str, Any] = {"primitive": primitive}
        if witness is not None:
            data["witness"] = witness.toDict()
        _emit(
            config,
            data,
            lambda: ["true" if primitive else "false"]
            + (_map_lines(witness) if witness is not None else []),
        )
        return EXIT_OK

    f = Endomorphism.from_text(ctx, args.map)
    if action == "apply":
        image = f.apply(_word(config, args.word))
        _emit(config, image.toDict(), lambda: _element_lines(image))
    elif action == "compose":
        h = f.compose(Endomorphism.from_text(ctx, args.other))
        _emit(config, h.toDict(), lambda: _map_lines(h))
    elif action == "invert":
        g = f.invert()
        _emit(config, g.toDict(), lambda: _map_lines(g))
    elif action == "check":
        automorphism = f.is_automorphism()
        determinant = int(f.abelianization_matrix().det())
        _emit(
            config,
            {"automorphism": automorphism, "determinant": determinant},
            lambda: ["true" if automorphism else "false"],
        )
    elif action == "ia-level":
        level = f.ia_level()
        _emit(config, {"ia_level": level}, lambda: [str(level)])
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    """Run one suite or all of them and report the verdict."""
    with SuiteRunner(config, parent_logger=NILPOTRA) as runner:
        try:
            reports = runner.run(args.suite)
        except KeyError:
            print(
                f"{NILPOTRA}: error: unknown suite {args.suite!r}, "
                f"expected one of {', '.join(runner.ids())} or {ALL}",
                file=sys.stderr,
            )
            return EXIT_USAGE
        counters = dict(runner.get_counters())
        summary = runner.summary()
        passed = runner.passed
    _emit(
        config,
        {
            "reports": [report.toDict(timings=args.timings) for report in reports],
            "summary": counters,
            "verdict": "pass" if passed else "fail",
        },
        lambda: [
            str(report) + (f" millis={report.millis}" if args.timings else "")
            for report in reports
        ]
        + [("PASS " if passed else "FAIL ") + summary],
    )
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def cmd_suites(args: argparse.Namespace, config: RunConfig) -> int:
    """List the registered suite ids with their descriptions."""
    runner = SuiteRunner(config)
    suites = [runner.suites[i] for i in runner.ids()]
    width = max(len(suite.id) for suite in suites)
    _emit(
        config,
        [{"id": suite.id, "description": suite.description} for suite in suites],
        lambda: [f"{suite.id:<{width}}  {suite.description}" for suite in suites],
    )
    return EXIT_OK


# -------------------------------------------------------------------------------
# argument parsing
# -------------------------------------------------------------------------------
def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-n", "--rank", type=int, default=DEFAULT_RANK, help=f"rank n (default {DEFAULT_RANK})"
    )
    common.add_argument(
        "-c",
        "--class",
        dest="nclass",
        type=int,
        default=DEFAULT_CLASS,
        help=f"nilpotency class c (default {DEFAULT_CLASS})",
    )
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="random seed")
    common.add_argument(
        "--trials", type=int, default=DEFAULT_TRIALS, help="trials of randomized checks"
    )
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=TEXT_FORMAT)
    common.add_argument(
        "--max-word-len",
        type=int,
        default=None,
        help="cap on word syllables and series monomials"
        + "\noverrides the NILPOTRA_MAX_WORD_LEN environment variable",
    )
    common.add_argument(
        "--max-witt", type=int, default=None, help="cap on the size of the Hall basis"
    )
    common.add_argument("-v", "--verbose", action="store_true", help="log at info level")
    common.add_argument("-d", "--debug", action="store_true", help="log at debug level")
    return common


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per action."""
    help = """
    normal forms, automorphisms and verification suites
    for the free nilpotent groups F_{n,c} of rank n and class c
    """
    parser = argparse.ArgumentParser(
        prog=NILPOTRA, description=help, formatter_class=argparse.RawTextHelpFormatter
    )
    common = _common_options()
    commands = parser.add_subparsers(dest="command", required=True)

    nf = commands.add_parser("nf", parents=[common], help="normal form of a word")
    nf.add_argument("word", help='word such as "x2 x1^-1 [x1,x2]"')
    nf.set_defaults(handler=cmd_nf)

    hall = commands.add_parser("hall", parents=[common], help="Hall basis of F_{N,C}")
    hall.add_argument("n", type=int, metavar="N")
    hall.add_argument("c", type=int, metavar="C")
    hall.add_argument("--counts", action="store_true", help="print the Witt counts only")
    hall.set_defaults(handler=cmd_hall)

    aut = commands.add_parser("aut", help="endomorphisms given as x1 -> word; x2 -> word")
    actions = aut.add_subparsers(dest="action", required=True)
    apply = actions.add_parser("apply", parents=[common], help="image of a word")
    apply.add_argument("map")
    apply.add_argument("word")
    compose = actions.add_parser("compose", parents=[common], help="MAP o OTHER")
    compose.add_argument("map")
    compose.add_argument("other")
    for name, description in (
        ("invert", "inverse automorphism"),
        ("check", "whether the map is an automorphism"),
        ("ia-level", "largest k with the map in IA_k"),
    ):
        actions.add_parser(name, parents=[common], help=description).add_argument("map")
    primitive = actions.add_parser(
        "primitive", parents=[common], help="whether a word is a primitive element"
    )
    primitive.add_argument("word")
    aut.set_defaults(handler=cmd_aut)

    verify = commands.add_parser("verify", parents=[common], help="run lemma-lab suites")
    verify.add_argument("suite", help=f"suite id or '{ALL}'")
    verify.add_argument("--timings", action="store_true", help="report running times")
    verify.set_defaults(handler=cmd_verify)

    suites = commands.add_parser("suites", parents=[common], help="list the suite ids")
    suites.set_defaults(handler=cmd_suites)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv``, run the selected command and return its exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    level = logging.DEBUG if args.debug else logging.INFO if args.verbose else logging.WARNING
    logging.basicConfig(
        format="%(asctime)s : %(levelname)-8s : %(name)s : %(message)s",
        level=level,
        datefmt="%Y-%m-%d %H:%M:%S",
    )
    log.debug(", ".join(f"{arg}={getattr(args, arg)}" for arg in vars(args) if arg != "handler"))

    try:
        config = RunConfig.from_args(args)
        return args.handler(args, config)
    except (WordSyntaxError, GeneratorRangeError, WordOverflowError) as e:
        return _fail(e, EXIT_USAGE)
    except ResourceLimitError as e:
        return _fail(e, EXIT_RESOURCE)
    except (NotAnAutomorphismError, PreconditionError) as e:
        return _fail(e, EXIT_PRECONDITION)
    except ValueError as e:
        return _fail(e, EXIT_USAGE)


def _fail(error: Exception, code: int) -> int:
    print(f"{NILPOTRA}: error: {error}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
