"""Command line front end.

Exit codes: 0 ok, 1 verification failure, 2 configuration error, 3 domain error,
4 closed-form mismatch in conjecture mode (the matrix is still written), 5 enumeration cap exceeded.
"""
import argparse
import logging
import sys
from fractions import Fraction

from .config import DEFAULT_DENSITY, DEFAULT_FORMAT, DEFAULT_SEED, ENUMERATION_CAP, EXIT_CAP, EXIT_CONFIG, \
    EXIT_CONJECTURE_MISMATCH, EXIT_DOMAIN, EXIT_OK, EXIT_VERIFY_FAILURE, LASCALA_FORMAT, LOG_FORMAT, MAX_SEED, \
    RANDOM_MAX_LEVELS
from .core import CapExceededError, ConfigError, DocumentError, DomainError, JoinConditionError, PreconditionError, \
    Sequence, SequenceParseError, cobweb, coding_matrix, enumerate_layer_chains, eta, eta_inverse, fnomial, \
    fnomial_via_max, kroton, layer_chain_count, max_inverse, max_matrix, mobius_closed_form, mobius_inverse, \
    mobius_recurrence, parse_sequence, random_poset, render_lascala, zeta_block_formula, zeta_closure, \
    zeta_formula_dziemianczuk, zeta_formula_krot, zeta_formula_kwasniewski
from .io import chain_count_dict, dumps_canonical, read_fixture, read_poset
from .verify import FAIL, SUITES, run_suite, summarize

log = logging.getLogger(__name__)

# most specific first
_ERROR_KINDS = ((SequenceParseError, 'sequence_parse', EXIT_CONFIG),
                (DocumentError, 'document', EXIT_CONFIG),
                (ConfigError, 'config', EXIT_CONFIG),
                (JoinConditionError, 'join_condition', EXIT_DOMAIN),
                (PreconditionError, 'precondition', EXIT_DOMAIN),
                (DomainError, 'domain', EXIT_DOMAIN),
                (CapExceededError, 'cap_exceeded', EXIT_CAP))

_ZETA_FORMULAS = {'kwasniewski': zeta_formula_kwasniewski,
                  'krot': zeta_formula_krot,
                  'dziemianczuk': zeta_formula_dziemianczuk}


class ArgumentParser(argparse.ArgumentParser):
    """Parser whose usage errors become ConfigError instead of exiting."""
    def error(self, message):
        raise ConfigError(message)


def _write(text, out=None):
    if not text.endswith('\n'):
        text += '\n'
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, 'w') as handle:
            handle.write(text)


def _write_error(kind, message, **fields):
    fields.update(error=kind, message=message)
    sys.stderr.write(dumps_canonical(fields) + '\n')


def _sequence(args):
    if args.seq is None:
        raise ConfigError('{} needs --seq'.format(args.command))
    if args.poset is not None:
        raise ConfigError('{} takes --seq only, not --poset'.format(args.command))

    return parse_sequence(args.seq)


def _levels(args):
    if args.levels is None:
        raise ConfigError('--seq needs --levels')

    return args.levels


def _poset(args):
    """Poset from exactly one of --seq with --levels or --poset."""
    if (args.seq is None) == (args.poset is None):
        raise ConfigError('Give exactly one input source: --seq with --levels, or --poset')
    if args.poset is not None:
        if args.levels is not None:
            raise ConfigError('--levels only applies to --seq')
        return read_poset(args.poset)

    return cobweb(parse_sequence(args.seq), _levels(args))


def _emit_matrix(m, args):
    fmt = args.format or DEFAULT_FORMAT
    if fmt == 'json':
        text = dumps_canonical(m.to_dict())
    elif fmt == 'csv':
        text = m.to_csv()
    else:
        text = str(m)
    _write(text, args.out)


def _emit_json(data, args):
    if args.format not in (None, 'json'):
        raise ConfigError('{} only writes json'.format(args.command))
    _write(dumps_canonical(data), args.out)


def cmd_zeta(args):
    if args.method in _ZETA_FORMULAS:
        seq = _sequence(args)
        levels = _levels(args)
        if args.method == 'kwasniewski':
            zeta = zeta_formula_kwasniewski(seq, levels, args.form)
        else:
            zeta = _ZETA_FORMULAS[args.method](seq, levels)
    elif args.method == 'blocks':
        zeta = zeta_block_formula(_poset(args))
    else:
        zeta = zeta_closure(_poset(args))
    _emit_matrix(zeta, args)

    return EXIT_OK


def cmd_mobius(args):
    p = _poset(args)
    if args.method == 'recurrence':
        _emit_matrix(mobius_recurrence(p), args)
    elif args.method == 'closed':
        result = mobius_closed_form(p, 'strict' if p.is_cobweb else 'conjecture')
        _emit_matrix(result.matrix, args)
        if not result.agrees_with_inversion:
            mismatch = result.first_mismatch
            _write_error('conjecture_mismatch', 'closed form disagrees with exact inversion',
                         row=mismatch.row, col=mismatch.col, block=list(mismatch.block),
                         expected=str(mismatch.expected), actual=str(mismatch.actual))
            return EXIT_CONJECTURE_MISMATCH
    else:
        _emit_matrix(mobius_inverse(zeta_closure(p)), args)

    return EXIT_OK


def cmd_max(args):
    p = _poset(args)
    _emit_matrix(max_inverse(p) if args.inverse else max_matrix(p), args)

    return EXIT_OK


def cmd_eta(args):
    p = _poset(args)
    _emit_matrix(eta_inverse(p) if args.inverse else eta(p), args)

    return EXIT_OK


def cmd_coding(args):
    if args.poset is not None and args.seq is None:
        p = read_poset(args.poset)
        seq, levels = Sequence.explicit(list(p.sizes)), p.levels
    else:
        seq, levels = _sequence(args), _levels(args)

    coding = coding_matrix(seq, levels)
    if args.format == 'ascii':
        _write(str(coding), args.out)
    else:
        _emit_json(coding.to_dict(), args)

    return EXIT_OK


def cmd_kroton(args):
    value = kroton(_sequence(args), args.from_level, args.to_level)
    _emit_json({'r': value.r, 's': value.s, 'value': str(value.value)}, args)

    return EXIT_OK


def _report_dict(report):
    return {'name': report.name,
            'holds': report.holds,
            'lhs': None if report.lhs is None else str(report.lhs),
            'rhs': None if report.rhs is None else str(report.rhs),
            'method': report.method}


def cmd_fnomial(args):
    seq = _sequence(args)
    if args.check is None:
        value = fnomial(seq, args.n, args.k)
        _emit_json({'n': str(args.n), 'k': str(args.k),
                    'numerator': str(value.numerator), 'denominator': str(value.denominator),
                    'integral': value.is_integral}, args)
        return EXIT_OK

    report = fnomial_via_max(seq, args.n, args.k, args.check)
    _emit_json(_report_dict(report), args)
    if args.check == 'derived' and not report.holds:
        return EXIT_VERIFY_FAILURE

    return EXIT_OK


def cmd_chains(args):
    p = _poset(args)
    if args.enumerate:
        _emit_json(enumerate_layer_chains(p, args.from_level, args.to_level, args.cap).to_dict(), args)
    else:
        count = layer_chain_count(p, args.from_level, args.to_level)
        _emit_json(chain_count_dict(args.from_level, args.to_level, count), args)

    return EXIT_OK


def cmd_lascala(args):
    p = _poset(args)
    if not p.is_cobweb:
        raise ConfigError('lascala needs a cobweb poset')

    text = render_lascala(p, args.width)
    if (args.format or LASCALA_FORMAT) == 'ascii':
        _write(text, args.out)
    else:
        _emit_json({'rows': text.split('\n')}, args)

    return EXIT_OK


def _density(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ConfigError('Density must be a rational such as 7/10, got {!r}'.format(text))


def _seed(text):
    try:
        seed = int(text)
    except ValueError:
        raise ConfigError('Seed must be an integer, got {!r}'.format(text))
    if not 0 <= seed <= MAX_SEED:
        raise ConfigError('Seed must be in [0, {}], got {}'.format(MAX_SEED, seed))

    return seed


def cmd_random(args):
    p = random_poset(_sequence(args), _levels(args), _density(args.density), args.seed, args.allow_mute)
    _emit_json(p.to_dict(), args)

    return EXIT_OK


def cmd_verify(args):
    fixtures = [(path, read_fixture(path)) for path in args.poset]
    results = []
    for result in run_suite(args.suite, args.levels, args.random, args.seed, fixtures=fixtures):
        line = '{} {} {}'.format(result.status, result.suite, result.name)
        sys.stdout.write(line + (': ' + result.detail if result.detail else '') + '\n')
        results.append(result)

    summary = summarize(results)
    sys.stdout.write(dumps_canonical(summary) + '\n')
    if summary[FAIL] > 0:
        log.warning('%d asserted checks failed', summary[FAIL])
        return EXIT_VERIFY_FAILURE

    return EXIT_OK


def _add_input_arguments(parser):
    parser.add_argument('--seq', metavar='SPEC', help='sequence spec: nat, fib, gauss:Q, const:C, list:a,b,... '
                                                      'with optional +root')
    parser.add_argument('--poset', metavar='FILE', help='poset JSON document')
    parser.add_argument('--levels', metavar='N', type=int, help='number of levels built from --seq')
    parser.add_argument('--format', choices=('json', 'csv', 'ascii'), help='output format')
    parser.add_argument('--out', metavar='PATH', help='write output here instead of standard output')
    parser.add_argument('--seed', metavar='S', type=_seed, default=DEFAULT_SEED)
    parser.add_argument('--cap', metavar='C', type=int, default=ENUMERATION_CAP, help='chain enumeration cap')


def _add_layer_arguments(parser):
    parser.add_argument('--from', dest='from_level', metavar='K', type=int, required=True)
    parser.add_argument('--to', dest='to_level', metavar='N', type=int, required=True)


def build_parser():
    parser = ArgumentParser(prog='kodag',
                            description='Incidence algebras of F-denominated graded posets.',
                            epilog='exit codes: 0 ok, 1 verification failure, 2 configuration error, '
                                   '3 domain error, 4 closed-form mismatch, 5 enumeration cap exceeded',
                            formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('-v', '--verbose', action='store_true', help='debug logging on standard error')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    zeta_parser = commands.add_parser('zeta', help='zeta matrix')
    _add_input_arguments(zeta_parser)
    zeta_parser.add_argument('--method', choices=('closure', 'blocks', 'kwasniewski', 'krot', 'dziemianczuk'),
                             default='closure')
    zeta_parser.add_argument('--form', choices=('delta', 'bracket'), default='delta',
                             help='variant of the kwasniewski formula')
    zeta_parser.set_defaults(handler=cmd_zeta)

    mobius_parser = commands.add_parser('mobius', help='Moebius matrix')
    _add_input_arguments(mobius_parser)
    mobius_parser.add_argument('--method', choices=('invert', 'recurrence', 'closed'), default='invert')
    mobius_parser.set_defaults(handler=cmd_mobius)

    max_parser = commands.add_parser('max', help='maximal chain count matrix [Max]')
    _add_input_arguments(max_parser)
    max_parser.add_argument('--inverse', action='store_true', help='emit delta - kappa')
    max_parser.set_defaults(handler=cmd_max)

    eta_parser = commands.add_parser('eta', help='reflexive cover matrix')
    _add_input_arguments(eta_parser)
    eta_parser.add_argument('--inverse', action='store_true')
    eta_parser.set_defaults(handler=cmd_eta)

    coding_parser = commands.add_parser('coding', help='coding matrix of the closed-form Moebius matrix')
    _add_input_arguments(coding_parser)
    coding_parser.set_defaults(handler=cmd_coding)

    kroton_parser = commands.add_parser('kroton', help='Kroton value K_s(r_F)')
    _add_input_arguments(kroton_parser)
    _add_layer_arguments(kroton_parser)
    kroton_parser.set_defaults(handler=cmd_kroton)

    fnomial_parser = commands.add_parser('fnomial', help='F-nomial coefficient')
    _add_input_arguments(fnomial_parser)
    fnomial_parser.add_argument('--n', type=int, required=True)
    fnomial_parser.add_argument('--k', type=int, required=True)
    fnomial_parser.add_argument('--check', choices=('derived', 'literal'),
                                help='recover the coefficient from [Max] row sums')
    fnomial_parser.set_defaults(handler=cmd_fnomial)

    chains_parser = commands.add_parser('chains', help='maximal chains of a layer')
    _add_input_arguments(chains_parser)
    _add_layer_arguments(chains_parser)
    chains_parser.add_argument('--enumerate', action='store_true', help='list the chains instead of counting')
    chains_parser.set_defaults(handler=cmd_chains)

    lascala_parser = commands.add_parser('lascala', help='staircase rendering of a cobweb zeta')
    _add_input_arguments(lascala_parser)
    lascala_parser.add_argument('--width', metavar='W', type=int, help='maximum characters per line')
    lascala_parser.set_defaults(handler=cmd_lascala)

    random_parser = commands.add_parser('random', help='seeded random graded poset document')
    _add_input_arguments(random_parser)
    random_parser.add_argument('--density', metavar='D', default=str(DEFAULT_DENSITY),
                               help='arc probability, e.g. 7/10')
    random_parser.add_argument('--allow-mute', action='store_true')
    random_parser.set_defaults(handler=cmd_random)

    verify_parser = commands.add_parser('verify', help='run verification suites')
    verify_parser.add_argument('--suite', choices=SUITES, default='all')
    verify_parser.add_argument('--random', metavar='R', type=int, default=0, help='number of random posets')
    verify_parser.add_argument('--seed', metavar='S', type=_seed, default=DEFAULT_SEED)
    verify_parser.add_argument('--levels', metavar='L', type=int, default=RANDOM_MAX_LEVELS)
    verify_parser.add_argument('--poset', metavar='FILE', action='append', default=[],
                               help='poset or fixture document; repeatable')
    verify_parser.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None):
    """Run the command line and return its exit code."""
    try:
        args = build_parser().parse_args(argv)
    except ConfigError as error:
        _write_error('config', str(error))
        return EXIT_CONFIG

    logging.basicConfig(format=LOG_FORMAT, stream=sys.stderr,
                        level=logging.DEBUG if args.verbose else logging.WARNING, force=True)

    try:
        return args.handler(args)
    except (ConfigError, DomainError, CapExceededError) as error:
        for error_type, kind, code in _ERROR_KINDS:
            if isinstance(error, error_type):
                _write_error(kind, str(error))
                return code


def run():
    sys.exit(main())
