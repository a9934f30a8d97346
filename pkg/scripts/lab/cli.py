"""
Command-line front end.

Enumerates the monoids, normalizes and multiplies elements, runs the
verification suites and prints dimension and rank reports. Exit status is
0 when every check in scope passes, 1 when one fails and 2 on a parse or
usage error.
"""

import argparse
import sys
from typing import Any, Dict, List, Optional, TextIO

from combinatorics import (
    bell,
    catalan,
    double_factorial_odd,
    enumerate_partitions,
    partition_count,
    party_monoid_order,
    tied_monoid_order,
)
from config import settings
from diagrams import Diagram, RamifiedPair, closure, family_generators, monoid_closure, render, render_ramified
from errors import AlgebraError, BoundExceededError, LongRunRefusedError
from hecke import (
    GeneratorWord,
    associativity_check,
    basis_keys,
    confluence_check,
    degeneration_check,
    functoriality_check,
    multiply,
    suite_names,
    verify_relation_suite,
    word_to_element,
)
from observability import get_logger, metrics, run_context, setup_logging
from party import (
    PARTY,
    RELATIONS,
    TIED,
    PartyElement,
    TiedSymElement,
    enumerate_party,
    enumerate_tied,
    green_classes,
    party_closure,
    party_multiply,
    ramified_check,
    shape,
    subgroup_orders,
    tied_generators,
    tied_multiply,
    to_diagram,
)
from quotients import (
    IDEALS,
    I_IDEAL,
    J_IDEAL,
    generic_semisimplicity,
    quotient_dimension,
    verify_quotient_consequences,
)
from reports import CheckReport
from scalars import parse_scalar, random_specialization
from tensor import TABLES, certified_rank, multiplicativity_check, verify_matrix_relations
from twisted import (
    KINDS,
    RELATION_SETS,
    SET_TWISTING,
    Twisting,
    cocycle_check,
    twisted_multiply,
    verify_presentation,
)

from .elements import parse_hecke_element, parse_render_target, parse_twisted_element
from .run import JSON, SCHEMA_VERSION, TEXT, RunConfig, RunOutcome, dump_report, emit

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

ENUMERATIONS = ('partitions', 'party', 'tied', 'tonal2', 'brauer', 'jones')

# Orders of the party monoid for n = 2..5
PARTY_ORDERS = {2: 3, 3: 16, 4: 131, 5: 1496}

# Orders of the tonal partition monoid of degree 2 for n = 2..4 (OEIS A005046)
TONAL2_ORDERS = {2: 4, 3: 31, 4: 379}

# Largest n each long computation runs at without --allow-long
LONG_RUN_LIMITS = {
    'quot dim': 4,
    'rep rank': 4,
    'ph check': 3,
}


def _count(name: str, observed: int, expected: Optional[int], oracle: str) -> Dict[str, Any]:
    passed = expected is None or observed == expected
    return {'name': name, 'observed': observed, 'expected': expected, 'oracle': oracle, 'passed': passed}


def _counts_outcome(kind: str, n: int, counts: List[Dict[str, Any]]) -> RunOutcome:
    return RunOutcome({'kind': kind, 'n': n, 'counts': counts}, all(c['passed'] for c in counts))


def _report_outcome(report: CheckReport) -> RunOutcome:
    return RunOutcome(report.to_dict(), report.passed)


def _require_long(config: RunConfig, n: int, label: str) -> None:
    limit = LONG_RUN_LIMITS[label]
    if n > limit and not config.allow_long:
        raise LongRunRefusedError(f"'{label}' with n={n} is a long run; pass --allow-long",
                                  details={'n': n, 'limit': limit})


# ============================================================
# enumerate
# ============================================================

def cmd_enumerate(args: argparse.Namespace, config: RunConfig) -> RunOutcome:
    """Count a monoid two ways and compare with its oracle."""
    n = args.n
    bound = settings.enumeration.partition_bound
    if n > bound:
        raise BoundExceededError('n', n, bound)
    progress = config.progress
    counts = []

    if args.kind == 'partitions':
        counts.append(_count('set partitions', sum(1 for _ in enumerate_partitions(n)), bell(n), 'Bell(n)'))
    elif args.kind == 'party':
        expected = PARTY_ORDERS.get(n, party_monoid_order(n))
        oracle = 'published orders' if n in PARTY_ORDERS else 'sum over block shapes'
        counts.append(_count('coprime pairs', len(enumerate_party(n)), expected, oracle))
        counts.append(_count('generator closure', len(party_closure(n, progress)), expected, oracle))
        diagrams = closure(family_generators('party', n), n=n, progress=progress)
        counts.append(_count('diagram closure', len(diagrams), expected, oracle))
    elif args.kind == 'tied':
        expected = tied_monoid_order(n)
        counts.append(_count('pairs', len(enumerate_tied(n)), expected, 'Bell(n) * n!'))
        if n <= settings.enumeration.green_tied_bound:
            found = monoid_closure(TiedSymElement.identity(n), tied_generators(n), tied_multiply,
                                   progress=progress, label=f'tied closure n={n}')
            counts.append(_count('generator closure', len(found), expected, 'Bell(n) * n!'))
    elif args.kind == 'tonal2':
        diagrams = closure(family_generators('tonal2', n), n=n, progress=progress)
        counts.append(_count('diagram closure', len(diagrams), TONAL2_ORDERS.get(n), 'OEIS A005046'))
    elif args.kind == 'brauer':
        diagrams = closure(family_generators('brauer', n), n=n, progress=progress)
        counts.append(_count('diagram closure', len(diagrams), double_factorial_odd(n), '(2n-1)!!'))
    else:
        diagrams = closure(family_generators('jones', n), n=n, progress=progress)
        counts.append(_count('diagram closure', len(diagrams), catalan(n), 'Catalan(n)'))

    return _counts_outcome(args.kind, n, counts)


# ============================================================
# party
# ============================================================

def _parse_monoid_element(text: str, monoid: str):
    return TiedSymElement.parse(text) if monoid == TIED else PartyElement.parse(text)


def cmd_party_normalize(args: argparse.Namespace, config: RunConfig) -> RunOutcome:
    element = PartyElement.parse(args.element)
    return RunOutcome({'input': args.element, 'normal_form': str(element),
                       'shape': list(shape(element).parts)})


def cmd_party_mul(args: argparse.Namespace, config: RunConfig) -> RunOutcome:
    left = _parse_monoid_element(args.left, args.monoid)
    right = _parse_monoid_element(args.right, args.monoid)
    product = tied_multiply(left, right) if args.monoid == TIED else party_multiply(left, right)
    return RunOutcome({'monoid': args.monoid, 'left': str(left), 'right': str(right), 'product': str(product)})


def _green_expected(monoid: str, relation: str, n: int) -> Optional[int]:
    if relation == 'J':
        return partition_count(n)
    if monoid == PARTY:
        return bell(n)
    return None


def cmd_party_green(args: argparse.Namespace, config: RunConfig) -> RunOutcome:
    classes = green_classes(args.monoid, args.n, args.relation)
    expected = _green_expected(args.monoid, args.relation, args.n)
    count = _count(f'{args.relation}-classes', len(classes), expected,
                   'integer partitions of n' if args.relation == 'J' else 'Bell(n)')
    return RunOutcome({
        'monoid': args.monoid,
        'n': args.n,
        'relation': args.relation,
        'counts': [count],
        'class_sizes': [len(members) for members in classes],
    }, count['passed'])


def cmd_party_maxsub(args: argparse.Namespace, config: RunConfig) -> RunOutcome:
    rows = []
    for idempotent, observed, formula in subgroup_orders(args.monoid, args.n):
        row = _count(f'G_e at e = {idempotent}', observed, formula, 'product formula of the shape')
        row['shape'] = list(idempotent.shape())
        rows.append(row)
    return RunOutcome({'monoid': args.monoid, 'n': args.n, 'subgroups': rows}, all(r['passed'] for r in rows))


def cmd_party_ramified(args: argparse.Namespace, config: RunConfig) -> RunOutcome:
    return _report_outcome(ramified_check(args.n))


# ============================================================
# algebra (twisted monoid algebras)
# ============================================================

def cmd_algebra_mul(args: argparse.Namespace, config: RunConfig) -> RunOutcome:
    twisting = Twisting(args.twist, parse_scalar(args.delta))
    left = parse_twisted_element(args.left, twisting.carrier)
    right = parse_twisted_element(args.right, twisting.carrier)
    product = twisted_multiply(left, right, twisting)
    return RunOutcome({'twisting': twisting.to_dict(), 'left': str(left), 'right': str(right),
                       'product': str(product)})


def cmd_algebra_verify(args: argparse.Namespace, config: RunConfig) -> RunOutcome:
    twisting = None
    if args.delta:
        twisting = Twisting(args.twist or SET_TWISTING[args.set], parse_scalar(args.delta))
    return _report_outcome(verify_presentation(args.set, args.n, twisting))


def cmd_algebra_cocycle(args: argparse.Namespace, config: RunConfig) -> RunOutcome:
    twisting = Twisting(args.twist, parse_scalar(args.delta))
    return _report_outcome(cocycle_check(twisting, args.n, args.samples, config.seed))


# ============================================================
# ph (Party-Hecke algebra)
# ============================================================

def cmd_ph_word(args: argparse.Namespace, config: RunConfig) -> RunOutcome:
    word = GeneratorWord.parse(args.word, args.n)
    element = word_to_element(word)
    return RunOutcome({'n': args.n, 'word': str(word), 'element': str(element), 'terms': element.to_dict()})


def cmd_ph_mul(args: argparse.Namespace, config: RunConfig) -> RunOutcome:
    left = parse_hecke_element(args.left)
    right = parse_hecke_element(args.right)
    product = multiply(left, right)
    return RunOutcome({'n': left.n, 'left': str(left), 'right': str(right), 'product': str(product),
                       'terms': product.to_dict()})


def cmd_ph_verify(args: argparse.Namespace, config: RunConfig) -> RunOutcome:
    names = suite_names() if args.suite == 'all' else [args.suite]
    if len(names) == 1:
        return _report_outcome(verify_relation_suite(names[0], args.n, alternate=args.alternate))
    combined = CheckReport('suites', metadata={'n': args.n, 'suites': names})
    for name in names:
        combined.extend(verify_relation_suite(name, args.n, alternate=args.alternate), prefix=f'{name}: ')
    return _report_outcome(combined)


def cmd_ph_dim(args: argparse.Namespace, config: RunConfig) -> RunOutcome:
    expected = PARTY_ORDERS.get(args.n, party_monoid_order(args.n))
    count = _count('coprime-pair basis', len(basis_keys(args.n)), expected, '|party monoid|')
    return _counts_outcome('ph', args.n, [count])


def cmd_ph_check(args: argparse.Namespace, config: RunConfig) -> RunOutcome:
    if args.kind == 'associativity':
        if not args.samples:
            _require_long(config, args.n, 'ph check')
        report = associativity_check(args.n, args.samples, config.seed, config.progress)
    elif args.kind == 'confluence':
        report = confluence_check(args.n, args.trials, config.seed)
    elif args.kind == 'degeneration':
        report = degeneration_check(args.n)
    else:
        report = functoriality_check(args.n, args.samples or 100, config.seed)
    return _report_outcome(report)


# ============================================================
# rep (tensor representation)
# ============================================================

def cmd_rep_verify(args: argparse.Namespace, config: RunConfig) -> RunOutcome:
    return _report_outcome(verify_matrix_relations(args.n, args.m, args.table))


def cmd_rep_rank(args: argparse.Namespace, config: RunConfig) -> RunOutcome:
    _require_long(config, args.n, 'rep rank')
    result = certified_rank(args.n, args.m, config.seed, args.table, config.progress)
    expected = len(basis_keys(args.n))
    count = _count('faithfulness rank', result.value if result.agree else result.values[0], expected,
                   'number of coprime pairs')
    count['passed'] = count['passed'] and result.agree
    return RunOutcome({'n': args.n, 'm': args.m, 'table': args.table, 'counts': [count],
                       'two_point': result.to_dict()}, count['passed'])


def cmd_rep_multiplicative(args: argparse.Namespace, config: RunConfig) -> RunOutcome:
    spec = random_specialization(config.seed)
    return _report_outcome(multiplicativity_check(args.n, args.m, spec, args.samples, config.seed, args.table))


# ============================================================
# quot (quotients and semisimplicity)
# ============================================================

def cmd_quot_dim(args: argparse.Namespace, config: RunConfig) -> RunOutcome:
    _require_long(config, args.n, 'quot dim')
    report = quotient_dimension(args.ideal, args.n, config.seed, config.progress)
    return RunOutcome(report.to_dict(), report.passed)


def cmd_quot_semisimple(args: argparse.Namespace, config: RunConfig) -> RunOutcome:
    certificates = generic_semisimplicity(args.n, config.seed, include_degenerate=args.n <= 3,
                                          progress=config.progress)
    rows = [c.to_dict() for c in certificates]
    passed = all(c.semisimple_at_point for c in certificates)
    return RunOutcome({'n': args.n, 'certificates': rows}, passed)


def cmd_quot_consequences(args: argparse.Namespace, config: RunConfig) -> RunOutcome:
    return _report_outcome(verify_quotient_consequences(args.ideal, args.n, seed=config.seed))


# ============================================================
# render
# ============================================================

def cmd_render(args: argparse.Namespace, config: RunConfig) -> RunOutcome:
    target = parse_render_target(args.element)
    if isinstance(target, RamifiedPair):
        picture = render_ramified(target)
    elif isinstance(target, Diagram):
        picture = render(target)
    else:
        picture = render(to_diagram(target))
    return RunOutcome({'element': args.element, 'lines': picture.split('\n')}, text=picture)


# ============================================================
# parser
# ============================================================

def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer seed, got {text!r}")
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return value


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--seed', type=_seed, default=settings.default_seed,
                        help='Seed for specialization points and sampled checks')
    common.add_argument('--output', choices=[TEXT, JSON], default=TEXT, help='Report format (default: text)')
    common.add_argument('--allow-long', action='store_true', help='Permit long runs (n = 5 quotients and ranks)')
    common.add_argument('--progress', action='store_true', help='Show progress bars')
    common.add_argument('--report-file', help='Also write the JSON report to this path')
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog='lab',
        description='Party-Hecke algebra lab',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Order of the party monoid, three ways
  python -m lab enumerate party --n 4

  # Defining relations of P_3(p, q), symbolically
  python -m lab ph verify --suite defining --n 3

  # Dimension of P_3 / <F_1F_2> at two random points
  python -m lab quot dim --ideal FF --n 3 --seed 7 --output json
        """
    )
    subparsers = parser.add_subparsers(dest='command', help='Command to run')

    enum_parser = subparsers.add_parser('enumerate', parents=[common], help='Count a monoid')
    enum_parser.add_argument('kind', choices=ENUMERATIONS)
    enum_parser.add_argument('--n', type=_positive, required=True)
    enum_parser.set_defaults(handler=cmd_enumerate)

    # party
    party_parser = subparsers.add_parser('party', help='Party and tied symmetric monoids')
    party_sub = party_parser.add_subparsers(dest='action')
    p = party_sub.add_parser('normalize', parents=[common], help='Coprime normal form of [M][u]')
    p.add_argument('element')
    p.set_defaults(handler=cmd_party_normalize)
    p = party_sub.add_parser('mul', parents=[common], help='Product of two elements')
    p.add_argument('left')
    p.add_argument('right')
    p.add_argument('--monoid', choices=[PARTY, TIED], default=PARTY)
    p.set_defaults(handler=cmd_party_mul)
    p = party_sub.add_parser('green', parents=[common], help="Green's classes")
    p.add_argument('--n', type=_positive, required=True)
    p.add_argument('--monoid', choices=[PARTY, TIED], default=PARTY)
    p.add_argument('--relation', choices=list(RELATIONS), default='J')
    p.set_defaults(handler=cmd_party_green)
    p = party_sub.add_parser('maxsub', parents=[common], help='Maximal subgroups against their formulas')
    p.add_argument('--n', type=_positive, required=True)
    p.add_argument('--monoid', choices=[PARTY, TIED], default=PARTY)
    p.set_defaults(handler=cmd_party_maxsub)
    p = party_sub.add_parser('ramified', parents=[common], help='Ramified view of the tied monoid')
    p.add_argument('--n', type=_positive, required=True)
    p.set_defaults(handler=cmd_party_ramified)

    # algebra
    algebra_parser = subparsers.add_parser('algebra', help='Twisted monoid algebras')
    algebra_sub = algebra_parser.add_subparsers(dest='action')
    p = algebra_sub.add_parser('mul', parents=[common], help='Twisted product of two elements')
    p.add_argument('left')
    p.add_argument('right')
    p.add_argument('--twist', choices=list(KINDS), default='beta')
    p.add_argument('--delta', default='q^2', help='Twisting parameter (default: q^2)')
    p.set_defaults(handler=cmd_algebra_mul)
    p = algebra_sub.add_parser('verify', parents=[common], help='Check a presentation')
    p.add_argument('--set', choices=sorted(RELATION_SETS), required=True)
    p.add_argument('--n', type=_positive, default=3)
    p.add_argument('--twist', choices=list(KINDS))
    p.add_argument('--delta', help='Twisting parameter (default: q^2)')
    p.set_defaults(handler=cmd_algebra_verify)
    p = algebra_sub.add_parser('cocycle', parents=[common], help='Cocycle identity on triples')
    p.add_argument('--n', type=_positive, default=3)
    p.add_argument('--twist', choices=list(KINDS), default='beta')
    p.add_argument('--delta', default='q^2')
    p.add_argument('--samples', type=int, default=0, help='Random triples (default: exhaustive)')
    p.set_defaults(handler=cmd_algebra_cocycle)

    # ph
    ph_parser = subparsers.add_parser('ph', help='Party-Hecke algebra P_n(p, q)')
    ph_sub = ph_parser.add_subparsers(dest='action')
    p = ph_sub.add_parser('word', parents=[common], help='Expand a generator word')
    p.add_argument('word')
    p.add_argument('--n', type=_positive, required=True)
    p.set_defaults(handler=cmd_ph_word)
    p = ph_sub.add_parser('mul', parents=[common], help='Product of two elements')
    p.add_argument('left')
    p.add_argument('right')
    p.set_defaults(handler=cmd_ph_mul)
    p = ph_sub.add_parser('verify', parents=[common], help='Run a relation suite')
    p.add_argument('--suite', choices=suite_names() + ['all'], required=True)
    p.add_argument('--n', type=_positive, default=3)
    p.add_argument('--alternate', action='store_true', help='Use the alternate parameter points, which fail')
    p.set_defaults(handler=cmd_ph_verify)
    p = ph_sub.add_parser('dim', parents=[common], help='Size of the coprime-pair basis')
    p.add_argument('--n', type=_positive, required=True)
    p.set_defaults(handler=cmd_ph_dim)
    p = ph_sub.add_parser('check', parents=[common], help='Structural property checks')
    p.add_argument('--kind', choices=['associativity', 'confluence', 'degeneration', 'functoriality'],
                   required=True)
    p.add_argument('--n', type=_positive, default=3)
    p.add_argument('--samples', type=int, default=0)
    p.add_argument('--trials', type=int, default=1000)
    p.set_defaults(handler=cmd_ph_check)

    # rep
    rep_parser = subparsers.add_parser('rep', help='Tensor representation')
    rep_sub = rep_parser.add_subparsers(dest='action')
    for name, handler, help_text in (('verify', cmd_rep_verify, 'Matrix relations'),
                                     ('rank', cmd_rep_rank, 'Faithfulness rank at two points'),
                                     ('multiplicative', cmd_rep_multiplicative, 'psi(xy) = psi(x)psi(y)')):
        p = rep_sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument('--n', type=_positive, default=3)
        p.add_argument('--m', type=_positive, default=settings.tensor.m)
        p.add_argument('--table', choices=list(TABLES), default=settings.tensor.operator_table)
        if name == 'multiplicative':
            p.add_argument('--samples', type=int, default=50)
        p.set_defaults(handler=handler)

    # quot
    quot_parser = subparsers.add_parser('quot', help='Quotients and semisimplicity')
    quot_sub = quot_parser.add_subparsers(dest='action')
    p = quot_sub.add_parser('dim', parents=[common], help='Quotient dimension at two points')
    p.add_argument('--ideal', choices=list(IDEALS), required=True)
    p.add_argument('--n', type=_positive, required=True)
    p.set_defaults(handler=cmd_quot_dim)
    p = quot_sub.add_parser('semisimple', parents=[common], help='Trace-form rank certificates')
    p.add_argument('--n', type=_positive, required=True)
    p.set_defaults(handler=cmd_quot_semisimple)
    p = quot_sub.add_parser('consequences', parents=[common], help='Identities holding in a quotient')
    p.add_argument('--ideal', choices=[I_IDEAL, J_IDEAL], required=True)
    p.add_argument('--n', type=_positive, default=3)
    p.set_defaults(handler=cmd_quot_consequences)

    render_parser = subparsers.add_parser('render', parents=[common], help='ASCII picture of an element')
    render_parser.add_argument('element', help="'[D]', '[M][u]' or 'tied:[M][u]'")
    render_parser.set_defaults(handler=cmd_render)

    return parser


_GLOBAL_KEYS = {'handler', 'command', 'action', 'seed', 'output', 'allow_long', 'progress', 'report_file'}


def _run_config(args: argparse.Namespace) -> RunConfig:
    command = args.command if not getattr(args, 'action', None) else f"{args.command} {args.action}"
    options = {key: value for key, value in sorted(vars(args).items()) if key not in _GLOBAL_KEYS}
    return RunConfig(command=command, seed=args.seed, output=args.output, allow_long=args.allow_long,
                     progress=args.progress, options=options)


def _emit_error(error: AlgebraError, config: RunConfig, stream: TextIO) -> None:
    if config.output == JSON:
        payload = {'schema': SCHEMA_VERSION, 'config': config.to_dict(), **error.to_dict()}
        stream.write(dump_report(payload).decode('utf-8') + '\n')
    else:
        stream.write(f"error [{error.code}]: {error.message}\n")


def run(argv: Optional[List[str]] = None, stream: Optional[TextIO] = None) -> int:
    """
    Parse argv, run the command and write its report.

    Returns:
        0 when all checks pass, 1 on a failed check, 2 on a parse or usage error
    """
    stream = stream or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    if not getattr(args, 'handler', None):
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    config = _run_config(args)
    with run_context(seed=config.seed, command=config.command) as ctx:
        logger.info("Command started", extra=ctx.to_dict())
        try:
            outcome = args.handler(args, config)
        except AlgebraError as error:
            logger.error("Command failed", extra={'code': error.code, 'details': error.details})
            _emit_error(error, config, stream)
            return error.exit_code
        emit(config, outcome, ctx.run_id, stream, args.report_file)
        logger.info("Command finished", extra={'passed': outcome.passed, 'elapsed_ms': ctx.elapsed_ms})
        logger.debug("Metrics", extra={'metrics': metrics.get_summary()})

    return EXIT_OK if outcome.passed else EXIT_CHECK_FAILED


def main() -> None:
    obs = settings.observability
    setup_logging(log_level=obs.log_level, log_format=obs.log_format, log_dir=obs.log_dir)
    if not obs.metrics_enabled:
        metrics.disable()
    sys.exit(run())


if __name__ == '__main__':
    main()
