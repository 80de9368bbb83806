#!/usr/bin/env python3
"""
Command-line front end.

    dbs-rank rank FILE... [--show-prefixes]
    dbs-rank compare FILE... A B [--via {matrix,automata,both}] [--show-prefixes]
    dbs-rank walks FILE V --max-len K [--mode {count,enumerate}]
    dbs-rank automaton-equiv FILE1 FILE2

Several framework files are merged by argument name before ranking.

Exit codes: 0 success (compare: strictly stronger; automaton-equiv:
equivalent), 10 equivalent, 11 strictly weaker or not equivalent, 2 invalid
input, 3 I/O failure, 4 internal inconsistency, 5 enumeration cap exceeded.
"""

import argparse
import sys
import time
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import __version__
from .aaf import ArgFramework, load_framework, union_all
from .config.settings import get_settings
from .exceptions import (
    AlphabetMismatchError,
    AutomatonFormatError,
    BackendMismatchError,
    DimensionError,
    EnumerationCapError,
    FrameworkParseError,
    UnknownArgumentError,
    UnknownSymbolError,
)
from .linalg import format_rational
from .logging_config import format_for, get_logger, level_for_verbosity, setup_logging
from .models import BackendVerdict, Query, Report, WalkCounts
from .qautomaton import equivalent, load_automaton, word_to_text
from .ranking import CompareOutcome, Relation, compare, dis_prefix, full_ranking, prefix_bound
from .reduction import compare_via_automata
from .walks import count_recurrence, enumerate_walks_up_to, matrix_counts

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_EQUIVALENT = 10
EXIT_WEAKER = 11
EXIT_NOT_EQUIVALENT = 11
EXIT_INVALID_INPUT = 2
EXIT_IO = 3
EXIT_INCONSISTENT = 4
EXIT_CAP = 5

COMPARE_EXIT_CODES = {
    Relation.STRICTLY_STRONGER: EXIT_OK,
    Relation.EQUIVALENT: EXIT_EQUIVALENT,
    Relation.STRICTLY_WEAKER: EXIT_WEAKER,
}

# Error type -> exit code, checked in order
ERROR_EXIT_CODES = (
    (EnumerationCapError, EXIT_CAP),
    (BackendMismatchError, EXIT_INCONSISTENT),
    (DimensionError, EXIT_INCONSISTENT),
    (FrameworkParseError, EXIT_INVALID_INPUT),
    (AutomatonFormatError, EXIT_INVALID_INPUT),
    (AlphabetMismatchError, EXIT_INVALID_INPUT),
    (UnknownArgumentError, EXIT_INVALID_INPUT),
    (UnknownSymbolError, EXIT_INVALID_INPUT),
    (OSError, EXIT_IO),
)

Outcome = Tuple[Report, str, int]


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dbs-rank",
        description="Discussion-based ranking of abstract argumentation frameworks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", choices=("text", "json"), default=None,
                        help="output format (default from DBS_DEFAULT_FORMAT)")
    parser.add_argument("--log-level", dest="log_level", default=None,
                        choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"),
                        help="log level (default from DBS_LOG_LEVEL)")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v logs at INFO, -vv at DEBUG (ignored with --log-level)")
    sub = parser.add_subparsers(dest="command", required=True)

    rank = sub.add_parser("rank", help="rank all arguments, strongest first")
    rank.add_argument("files", nargs="+", help="APX or TGF files, merged by argument name")
    rank.add_argument("--show-prefixes", action="store_true", help="report every discussion-count prefix")
    rank.set_defaults(handler=cmd_rank)

    cmp_ = sub.add_parser("compare", help="compare two arguments")
    cmp_.add_argument("files", nargs="+", help="APX or TGF files, merged by argument name")
    cmp_.add_argument("a", help="first argument")
    cmp_.add_argument("b", help="second argument")
    cmp_.add_argument("--via", choices=("matrix", "automata", "both"), default="matrix",
                      help="decision back-end; 'both' cross-checks the two")
    cmp_.add_argument("--show-prefixes", action="store_true", help="report both discussion-count prefixes")
    cmp_.set_defaults(handler=cmd_compare)

    walks = sub.add_parser("walks", help="count or list the walks ending in an argument")
    walks.add_argument("file", help="APX or TGF file")
    walks.add_argument("v", help="argument the walks end in")
    walks.add_argument("--max-len", dest="max_len", type=_positive_int, required=True, help="longest walk length")
    walks.add_argument("--mode", choices=("count", "enumerate"), default="count")
    walks.set_defaults(handler=cmd_walks)

    equiv = sub.add_parser("automaton-equiv", help="decide equivalence of two weighted automata")
    equiv.add_argument("file1", help="automaton TOML file")
    equiv.add_argument("file2", help="automaton TOML file")
    equiv.set_defaults(handler=cmd_automaton_equiv)
    return parser


def _load_union(files: Sequence[str]) -> ArgFramework:
    f = union_all(load_framework(path) for path in files)
    logger.info(f"Loaded {len(f)} arguments and {len(f.attacks)} attacks from {len(files)} file(s)")
    return f


def _report(command: str, query: Query, **fields) -> Report:
    return Report(command=command, query=query, elapsed_seconds=0.0, version=__version__, **fields)


def cmd_rank(args: argparse.Namespace) -> Outcome:
    f = _load_union(args.files)
    result = full_ranking(f)
    prefixes = {x: list(p.values) for x, p in result.prefixes.items()} if args.show_prefixes else None
    report = _report(
        "rank",
        Query(files=list(args.files)),
        classes=[list(c) for c in result.classes],
        prefixes=prefixes,
    )
    lines = [result.render()]
    if args.show_prefixes:
        lines += [f"{x}: {result.prefixes[x]}" for x in f.arguments]
    return report, "\n".join(lines), EXIT_OK


def _verdict(outcome: CompareOutcome) -> str:
    return outcome.relation.value


def cmd_compare(args: argparse.Namespace) -> Outcome:
    f = _load_union(args.files)
    a, b = args.a, args.b
    backends: List[BackendVerdict] = []
    outcomes: Dict[str, CompareOutcome] = {}
    if args.via in ("matrix", "both"):
        outcomes["matrix"] = compare(f, a, b)
    if args.via in ("automata", "both"):
        outcomes["automata"] = compare_via_automata(f, a, b)
    for name, outcome in outcomes.items():
        backends.append(BackendVerdict(backend=name, verdict=_verdict(outcome), deciding_index=outcome.deciding_index))
    if len(set(outcomes.values())) > 1:
        raise BackendMismatchError(
            "back-ends disagree: "
            + ", ".join(f"{b.backend}={b.verdict}@{b.deciding_index}" for b in backends)
        )
    outcome = next(iter(outcomes.values()))

    prefixes = None
    if args.show_prefixes:
        k = max(prefix_bound(f), 1)
        prefixes = {x: list(dis_prefix(f, x, k).values) for x in dict.fromkeys((a, b))}

    report = _report(
        "compare",
        Query(files=list(args.files), arguments=[a, b], via=args.via),
        verdict=_verdict(outcome),
        deciding_index=outcome.deciding_index,
        prefixes=prefixes,
        backends=backends,
    )
    text = f"{a} {_verdict(outcome)} {b}"
    if outcome.deciding_index is not None:
        text += f" (decided at length {outcome.deciding_index})"
    lines = [text]
    if prefixes:
        lines += [f"{x}: ({', '.join(str(v) for v in values)})" for x, values in prefixes.items()]
    return report, "\n".join(lines), COMPARE_EXIT_CODES[outcome.relation]


def cmd_walks(args: argparse.Namespace) -> Outcome:
    f = load_framework(args.file)
    v, k = args.v, args.max_len
    recurrence = list(count_recurrence(f, k).row(v))
    matrix = list(matrix_counts(f, v, k))
    if recurrence != matrix:
        raise BackendMismatchError(f"walk counts of {v} disagree: recurrence {recurrence}, matrix {matrix}")

    query = Query(files=[args.file], arguments=[v], max_length=k, mode=args.mode)
    counts = WalkCounts(argument=v, recurrence=recurrence, matrix=matrix)
    if args.mode == "count":
        report = _report("walks", query, walk_counts=counts)
        lines = [f"{i}: {c}" for i, c in enumerate(recurrence, 1)]
        return report, "\n".join(lines), EXIT_OK

    walks = enumerate_walks_up_to(f, v, k)
    report = _report("walks", query, walk_counts=counts, walks=[list(w.vertices) for w in walks])
    lines = [str(w) for w in walks]
    return report, "\n".join(lines), EXIT_OK


def cmd_automaton_equiv(args: argparse.Namespace) -> Outcome:
    a1 = load_automaton(args.file1)
    a2 = load_automaton(args.file2)
    result = equivalent(a1, a2)
    query = Query(files=[args.file1, args.file2])
    if result.is_equivalent:
        return _report("automaton-equiv", query, verdict=result.verdict.value), result.verdict.value, EXIT_OK

    values = [format_rational(x) for x in result.values]
    report = _report(
        "automaton-equiv",
        query,
        verdict=result.verdict.value,
        witness=list(result.witness),
        values=values,
    )
    text = f"{result.verdict.value}: witness {word_to_text(result.witness)}, values {values[0]} and {values[1]}"
    return report, text, EXIT_NOT_EQUIVALENT


def _exit_code_for(error: BaseException) -> Optional[int]:
    for error_type, code in ERROR_EXIT_CODES:
        if isinstance(error, error_type):
            return code
    return None


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit code (argparse usage errors exit with 2)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    settings = get_settings()
    level = args.log_level or level_for_verbosity(args.verbose, settings.log_level)
    setup_logging(level, format_for(settings.log_format))
    output_format = args.format or settings.default_output_format

    handler: Callable[[argparse.Namespace], Outcome] = args.handler
    started = time.perf_counter()
    try:
        report, text, code = handler(args)
    except Exception as e:
        code = _exit_code_for(e)
        if code is None:
            raise
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return code

    report = report.model_copy(update={"elapsed_seconds": time.perf_counter() - started})
    if output_format == "json":
        print(report.model_dump_json(indent=2, exclude_none=True))
    else:
        print(text)
    return code


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
