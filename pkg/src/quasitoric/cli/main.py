"""
``quasitoric`` command-line entry point.

Exit codes: 0 success, 1 unparseable input or usage, 2 validation or
mathematical precondition failure, 3 a cross-check between independent
routes failed.
"""

import argparse
import hashlib
import json
import logging
import pathlib
import sys
import typing

from ..core.errors import InputParseError, QuasitoricError
from ..core.jsonable_encoder import jsonable_encoder
from ..core.options import RunOptions
from ..core.rationals import parse_rational_list
from .commands import COMMANDS, Settings
from .documents import parse_document
from .types import Report

logger = logging.getLogger("quasitoric")


class _WarningCollector(logging.Handler):
    def __init__(self) -> None:
        super().__init__(level=logging.WARNING)
        self.messages: typing.List[str] = []

    def emit(self, record: logging.LogRecord) -> None:
        self.messages.append(record.getMessage())


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, metavar="FILE", help="JSON fan or arrangement document")
    parser.add_argument("--h", metavar="A,B,...", help="support vector, e.g. \"0,0,1/2\"")
    parser.add_argument("--q", metavar="POLY", help="polynomial in x1..xn, e.g. \"x1^2*x2 + 3/2*x1\"")
    parser.add_argument("--samples", type=int, metavar="N", help="random samples for cross-checks")
    parser.add_argument("--seed", type=int, metavar="N", help="seed of every random choice")
    parser.add_argument("--other", metavar="FILE", help="second arrangement document (dominates)")
    parser.add_argument("--compact", action="store_true", help="single-line JSON output")
    parser.add_argument("--verbose", action="store_true", help="debug logging on standard error")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasitoric",
        description="Exact virtual polytopes, volume polynomials and cohomology of quasitoric manifolds.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, (_, help_text) in COMMANDS.items():
        _add_common_flags(subparsers.add_parser(name, help=help_text, description=help_text))
    return parser


def _read(path: str) -> str:
    try:
        return pathlib.Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputParseError("Cannot read input file", body=f"{path}: {e.strerror}") from e


def _settings(args: argparse.Namespace) -> Settings:
    options: RunOptions = {}
    if args.seed is not None:
        options["seed"] = args.seed
    if args.samples is not None:
        if args.samples < 0:
            raise InputParseError("--samples must be nonnegative", body=args.samples)
        options["samples"] = args.samples
    try:
        h = parse_rational_list(args.h) if args.h is not None else None
    except ValueError as e:
        raise InputParseError("Cannot parse --h", body=str(e)) from e
    other = parse_document(_read(args.other)) if args.other is not None else None
    return Settings(h=h, q=args.q, samples=args.samples, seed=args.seed, other=other, options=options)


def _write(report: Report, compact: bool) -> None:
    data = jsonable_encoder(report)
    if compact:
        text = json.dumps(data, separators=(",", ":"), ensure_ascii=False)
    else:
        text = json.dumps(data, indent=2, ensure_ascii=False)
    sys.stdout.write(text + "\n")


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    arguments = list(argv) if argv is not None else sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(arguments)
    except SystemExit as e:
        return 0 if e.code == 0 else 1

    collector = _WarningCollector()
    stderr_handler = logging.StreamHandler(sys.stderr)
    stderr_handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    stderr_handler.setLevel(logging.DEBUG if args.verbose else logging.WARNING)
    previous_level = logger.level
    logger.addHandler(collector)
    logger.addHandler(stderr_handler)
    logger.setLevel(logging.DEBUG if args.verbose else logging.WARNING)
    try:
        digest: typing.Optional[str] = None
        try:
            text = _read(args.input)
            digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
            document = parse_document(text)
            settings = _settings(args)
            command, _ = COMMANDS[args.command]
            outcome = command(document, settings)
        except QuasitoricError as e:
            logger.debug("Command %s failed", args.command, exc_info=True)
            error = {"error": type(e).__name__, "message": e.message, "details": jsonable_encoder(e.body)}
            report = Report(command=arguments, input_digest=digest, results=error, warnings=collector.messages)
            _write(report, args.compact)
            return e.exit_code
        report = Report(
            command=arguments,
            input_digest=digest,
            results=jsonable_encoder(outcome.results),
            warnings=collector.messages,
        )
        _write(report, args.compact)
        return outcome.exit_code
    finally:
        logger.removeHandler(collector)
        logger.removeHandler(stderr_handler)
        logger.setLevel(previous_level)


if __name__ == "__main__":
    sys.exit(main())
