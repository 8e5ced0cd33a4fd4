"""
Divisiveness CLI
Commands: analyze, axioms, search, verify, repro, convert.

Exit codes: 0 success / pass / exhausted, 1 violation or fixture mismatch,
2 usage, parse or capacity error.
"""
import argparse
import logging
import sys
import time
from typing import List, Optional

from ..axioms.checks import AxiomId, CheckOptions, check_all
from ..axioms.generators import GeneratorSpec
from ..axioms.search import search_counterexample
from ..axioms.theorems import CERTIFICATES, verify
from ..engine import config
from ..infrastructure.formats import emit_profile, guess_format, parse_profile, read_profile, resolve_format
from ..infrastructure.logging_setup import configure_logging
from ..infrastructure.reports import MACHINE, TABLE, ReportDocument, emit_report
from ..model.errors import DivisivenessError
from .repro import FIXTURES, run_fixture
from .specs import METHODS, build_dsf, describe_method

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def seed_arg(text: str) -> int:
    try:
        return config.check_seed(int(text))
    except (ValueError, DivisivenessError):
        raise argparse.ArgumentTypeError(f"seed must be an integer in [0, 2**64), got {text!r}") from None


def _add_method_args(parser: argparse.ArgumentParser):
    parser.add_argument('--method', choices=METHODS, required=True)
    parser.add_argument('--scheme', help="scoring scheme: borda|nborda|plurality|nplurality|copeland|copeland-asym|vec:..|nvec:..")
    parser.add_argument('--scf', help="voting rule: borda|plurality|vec:..|nvec:..")
    parser.add_argument('--index', help="profile index: kendall|const:<value>")
    parser.add_argument('--sampling', default='exact', help="exact | mc:<samples>")
    parser.add_argument('--exact-cap', type=int, default=None, help=f"electorate cap for exact mode (default {config.EXACT_CAP})")
    parser.add_argument('--include-trivial', action='store_true', help="count the pair {empty, N} in exact mode")


def build_parser() -> argparse.ArgumentParser:
    methods = '\n'.join(f"  {m:<10} {describe_method(m)}" for m in METHODS)
    parser = argparse.ArgumentParser(
        prog='divisiveness',
        description="Most divisive proposals of a ranked profile, and an axiom lab.",
        epilog=f"methods:\n{methods}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument('--format', help="profile format: soc | lines (default: by file extension)")
    parser.add_argument('--output', choices=(TABLE, MACHINE), default=TABLE)
    parser.add_argument('--seed', type=seed_arg, default=config.DEFAULT_SEED, help="RNG seed in [0, 2**64)")
    parser.add_argument('--threads', type=int, default=config.THREADS)
    parser.add_argument('--log-level', default=config.LOG_LEVEL)
    sub = parser.add_subparsers(dest='command', required=True)

    analyze = sub.add_parser('analyze', help="divisiveness values and selection for a profile")
    analyze.add_argument('profile', help="profile file, or - for stdin")
    _add_method_args(analyze)

    axioms = sub.add_parser('axioms', help="check axioms on one profile")
    axioms.add_argument('--profile', required=True)
    axioms.add_argument('--axiom', default='all', help="all or an axiom name")
    axioms.add_argument('--copies', type=int, default=config.UNIFORM_COPIES, help="copies of each ranking for uniform reinforcement")
    _add_method_args(axioms)

    search = sub.add_parser('search', help="search small profiles for an axiom violation")
    search.add_argument('--axiom', required=True)
    search.add_argument('--min-m', type=int, default=2)
    search.add_argument('--max-m', type=int, default=3)
    search.add_argument('--min-n', type=int, default=1)
    search.add_argument('--max-n', type=int, default=3)
    search.add_argument('--random', type=int, default=0, metavar='COUNT', help="random profiles instead of exhaustive")
    search.add_argument('--m', type=int, default=3, help="proposals per random profile")
    search.add_argument('--n', type=int, default=3, help="agents per random profile")
    search.add_argument('--neutral-dedup', action='store_true')
    search.add_argument('--copies', type=int, default=config.UNIFORM_COPIES)
    _add_method_args(search)

    verify_cmd = sub.add_parser('verify', help="impossibility certificates")
    verify_cmd.add_argument('certificate', choices=list(CERTIFICATES))
    verify_cmd.add_argument('--m', type=int, default=None)
    verify_cmd.add_argument('--copies', type=int, default=1)

    repro = sub.add_parser('repro', help="rebuild a worked example and compare")
    repro.add_argument('fixture', choices=list(FIXTURES) + ['all'])

    convert = sub.add_parser('convert', help="rewrite a profile file in another format")
    convert.add_argument('input')
    convert.add_argument('--to', required=True, help="soc | lines")
    convert.add_argument('--out', default=None, help="output path (default stdout)")
    return parser


def _load(path: str, fmt: Optional[str]):
    if path == '-':
        return parse_profile(sys.stdin.buffer.read(), fmt or 'lines', source='<stdin>')
    return read_profile(path, resolve_format(fmt) if fmt else guess_format(path))


def _dsf(args):
    return build_dsf(
        args.method, scheme=args.scheme, scf=args.scf, index=args.index, sampling=args.sampling,
        seed=args.seed, exact_cap=args.exact_cap, workers=args.threads, include_trivial=args.include_trivial,
    )


def _options(args) -> CheckOptions:
    return CheckOptions(uniform_copies=args.copies, seed=args.seed)


def cmd_analyze(args) -> int:
    document = _load(args.profile, args.format)
    dsf = _dsf(args)
    started = time.perf_counter()
    report = dsf.report(document.profile)
    elapsed = time.perf_counter() - started
    sys.stdout.write(emit_report(ReportDocument.from_report(report, elapsed), args.output))
    return EXIT_OK


def cmd_axioms(args) -> int:
    document = _load(args.profile, args.format)
    dsf = _dsf(args)
    axioms = list(AxiomId) if args.axiom == 'all' else [AxiomId.parse(args.axiom)]
    outcomes = check_all(dsf, document.profile, _options(args), axioms)
    for outcome in outcomes:
        print(outcome.describe())
    return EXIT_VIOLATION if any(o.is_violation for o in outcomes) else EXIT_OK


def cmd_search(args) -> int:
    dsf = _dsf(args)
    if args.random:
        spec = GeneratorSpec.random(args.random, args.seed, args.m, args.n)
    else:
        spec = GeneratorSpec.exhaustive(args.max_m, args.max_n, args.min_m, args.min_n, args.neutral_dedup)
    result = search_counterexample(dsf, AxiomId.parse(args.axiom), spec, _options(args), workers=args.threads)
    print(result.describe())
    return EXIT_VIOLATION if result.found else EXIT_OK


def cmd_verify(args) -> int:
    cert = verify(args.certificate, args.m, args.copies)
    print(cert.render())
    return EXIT_OK if cert.holds else EXIT_VIOLATION


def cmd_repro(args) -> int:
    results = run_fixture(args.fixture)
    for result in results:
        print(result.render())
    failed = [r.name for r in results if not r.passed]
    if len(results) > 1:
        print(f"{len(results) - len(failed)}/{len(results)} fixtures passed")
    return EXIT_VIOLATION if failed else EXIT_OK


def cmd_convert(args) -> int:
    document = _load(args.input, args.format)
    text = emit_profile(document.profile, args.to, document.title)
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


COMMANDS = {
    'analyze': cmd_analyze,
    'axioms': cmd_axioms,
    'search': cmd_search,
    'verify': cmd_verify,
    'repro': cmd_repro,
    'convert': cmd_convert,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    configure_logging(args.log_level)
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE

    logger.info("[CLI] %s started", args.command)
    try:
        code = COMMANDS[args.command](args)
    except (DivisivenessError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    logger.info("[CLI] %s finished with exit code %d", args.command, code)
    return code


if __name__ == "__main__":
    sys.exit(main())
