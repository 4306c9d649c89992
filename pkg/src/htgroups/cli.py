"""
Command-line front end for the Higman-Thompson toolkit

Elements travel as element files (see `serialization`) through paths or
standard streams ("-"). Results go to standard output; logs, routes and the
final "error: <code>: <message>" line of a failing command go to standard
error. Exit status: 0 success, 1 property or validation failure, 2 usage or
parse error.
"""

import argparse
import sys
from collections.abc import Callable
from pathlib import Path

from pydantic import ValidationError

from . import __version__
from .config import Settings, get_settings
from .embeddings import (
    CodeEncoding,
    FixatorSpec,
    canonical_code,
    embed_any,
    embed_route,
    higman_embed,
    in_mixed_subgroup,
    iota,
    pfix_witness,
)
from .exceptions import (
    AlphabetMismatch,
    ElementParseError,
    HigmanThompsonError,
    ImpossibleCodeSize,
    InvalidQuery,
    InvalidTable,
    InvalidWord,
    NotMaximalCode,
)
from .logger import get_logger, setup_logging
from .serialization import dump_element, load_element, load_table, parse_code
from .successor import succ_all
from .tables import apply, compose, diagnose, invert, random_element
from .verify import SUITES, render_report, run_verify
from .words import PrefixCode, check_alphabet, format_word, parse_word

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

USAGE_ERRORS = (
    ElementParseError,
    InvalidWord,
    AlphabetMismatch,
    ImpossibleCodeSize,
    InvalidQuery,
    NotMaximalCode,
)


class CommandFailed(Exception):
    """A command ran but its check or validation did not pass"""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def cmd_validate(args: argparse.Namespace) -> int:
    table = load_table(_read(args.path))
    problems = diagnose(table)
    if problems:
        for problem in problems:
            print(f"invalid: {problem}")
        raise InvalidTable(problems)
    print(f"valid: k={table.k} pairs={len(table.pairs)}")
    return EXIT_OK


def cmd_normalize(args: argparse.Namespace) -> int:
    sys.stdout.write(dump_element(load_element(_read(args.path))))
    return EXIT_OK


def cmd_compose(args: argparse.Namespace) -> int:
    f = load_element(_read(args.f_path))
    g = load_element(_read(args.g_path))
    sys.stdout.write(dump_element(compose(f, g)))
    return EXIT_OK


def cmd_invert(args: argparse.Namespace) -> int:
    sys.stdout.write(dump_element(invert(load_element(_read(args.path)))))
    return EXIT_OK


def cmd_apply(args: argparse.Namespace) -> int:
    g = load_element(_read(args.path))
    image = apply(g, parse_word(args.word, g.k))
    print("undefined" if image is None else format_word(image))
    return EXIT_OK


def cmd_embed(args: argparse.Namespace) -> int:
    g = load_element(_read(args.path))
    target = check_alphabet(args.to)
    if args.code is not None and args.via != "higman":
        raise InvalidQuery("--code is only used with --via higman")
    if args.via == "iota":
        result = iota(g, target)
    elif args.via == "higman":
        try:
            encoding = (
                CodeEncoding.from_code(parse_code(args.code, target), target)
                if args.code is not None
                else canonical_code(g.k, target)
            )
        except ImpossibleCodeSize as e:
            raise ImpossibleCodeSize(f"{e.message}; use --via auto") from e
        result = higman_embed(g, encoding)
    else:
        route = embed_route(g.k, target)
        print(f"route: {route}", file=sys.stderr)
        result = embed_any(g, target)
    sys.stdout.write(dump_element(result))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    g = load_element(_read(args.path))
    if args.kind == "subgroup-mixed":
        if not in_mixed_subgroup(g):
            print("false")
            raise CommandFailed("NotInSubgroup", "element leaves G_k,1(0,1|2|...|k-1)")
    else:
        spec = FixatorSpec(w=parse_word(args.prefix, g.k))
        witness = pfix_witness(g, spec)
        if witness is not None:
            print(f"false: moves {format_word(witness)}")
            raise CommandFailed(
                "NotPartiallyFixed", f"element moves a point of {args.prefix}·A^*"
            )
    print("true")
    return EXIT_OK


def cmd_succ(args: argparse.Namespace) -> int:
    words = parse_code(args.code, 2)
    try:
        code = PrefixCode.of(2, words)
    except ValidationError as e:
        raise InvalidQuery(f"--code is not a prefix code: {e.errors()[0]['msg']}") from e
    limit = args.k if args.k is not None else args.letter + 1
    if not 2 <= args.letter < min(check_alphabet(limit), 10):
        raise InvalidQuery(f"letter a_{args.letter} outside a_2..a_{limit - 1}")
    for p, s in succ_all(code, args.letter).items():
        print(f"{format_word(p)} -> {format_word(s)}")
    return EXIT_OK


def cmd_random(args: argparse.Namespace) -> int:
    check_alphabet(args.k)
    sys.stdout.write(dump_element(random_element(args.k, args.leaves, args.seed)))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_verify(
        trials=args.trials,
        seed=args.seed,
        suites=args.suite,
        workers=args.workers,
        progress=args.progress,
    )
    sys.stdout.write(render_report(report))
    logger.info(
        "verify_finished",
        passed=report.passed,
        failures=report.failure_count,
        seconds=round(report.wall_time, 3),
    )
    if not report.passed:
        raise CommandFailed(
            "VerificationFailed", f"{report.failure_count} failing case(s)"
        )
    return EXIT_OK


def build_parser(config: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="htgroups",
        description="Exact computation in the Higman-Thompson groups G_{k,1}",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--log-level", default=None, help="Override HTG_LOG_LEVEL")
    commands = parser.add_subparsers(dest="command", required=True)

    def add(
        name: str, handler: Callable[[argparse.Namespace], int], summary: str
    ) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=summary)
        sub.set_defaults(handler=handler)
        return sub

    add("validate", cmd_validate, "Check the table invariants").add_argument("path")
    add("normalize", cmd_normalize, "Print the canonical form").add_argument("path")

    sub = add("compose", cmd_compose, "Print F∘G (G applied first)")
    sub.add_argument("f_path")
    sub.add_argument("g_path")

    add("invert", cmd_invert, "Print the inverse").add_argument("path")

    sub = add("apply", cmd_apply, "Apply an element to a word")
    sub.add_argument("path")
    sub.add_argument("word", help='Digit string, "-" for the empty word')

    sub = add("embed", cmd_embed, "Embed into G_{j,1}")
    sub.add_argument("path")
    sub.add_argument("--to", type=int, required=True, help="Target alphabet size j")
    sub.add_argument("--via", choices=["iota", "higman", "auto"], default="auto")
    sub.add_argument("--code", help="Encoding words w1,w2,... for --via higman")

    sub = add("check", cmd_check, "Check subgroup or fixator membership")
    checks = sub.add_subparsers(dest="kind", required=True)
    checks.add_parser("subgroup-mixed").add_argument("path")
    pfix = checks.add_parser("pfix")
    pfix.add_argument("--prefix", required=True, help="Generator w of w·A^*")
    pfix.add_argument("path")

    sub = add("succ", cmd_succ, "Print the *a_i-successor map of a binary code")
    sub.add_argument("--code", required=True, help="Maximal binary code w1,w2,...")
    sub.add_argument("--letter", type=int, required=True)
    sub.add_argument("--k", type=int, default=None, help="Target alphabet size")

    sub = add("random", cmd_random, "Print a seeded random element")
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--leaves", type=int, required=True)
    sub.add_argument("--seed", type=int, required=True)

    sub = add("verify", cmd_verify, "Run the seeded verification suites")
    sub.add_argument("--trials", type=int, default=config.verify_trials)
    sub.add_argument("--seed", type=int, default=config.verify_seed)
    sub.add_argument("--suite", action="append", choices=list(SUITES))
    sub.add_argument("--workers", type=int, default=config.verify_workers)
    sub.add_argument("--progress", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        config = get_settings()
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in error['loc'])}: {error['msg']}"
            for error in e.errors()
        )
        print(f"error: InvalidSettings: {problems}", file=sys.stderr)
        return EXIT_USAGE
    args = build_parser(config).parse_args(argv)
    setup_logging(args.log_level)
    logger.debug("command_started", command=args.command)
    try:
        return args.handler(args)
    except CommandFailed as e:
        status, code, message = EXIT_FAILURE, e.code, e.message
    except USAGE_ERRORS as e:
        status, code, message = EXIT_USAGE, e.code, e.message
    except HigmanThompsonError as e:
        status, code, message = EXIT_FAILURE, e.code, e.message
    except OSError as e:
        status, code, message = EXIT_USAGE, "FileError", str(e)
    logger.info("command_failed", command=args.command, code=code, status=status)
    print(f"error: {code}: {message}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
