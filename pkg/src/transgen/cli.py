"""Command-line interface.

Generator sets come from positional literals (one set) or ``--file`` (one
set per line, ``#`` comments).  Output is JSON by default, TSV with
``--format tsv``.  Exit codes: 0 success, 1 parse error, 2 resource limit,
3 numeric failure.
"""

import argparse
import json
import sys
import time

from . import asymptotics, exactprob, gensets, greens, montecarlo
from .errors import (DomainError, InvalidInputError, NumericError,
                     ResourceLimitError)
from .semigroup import closure
from .table1 import table1, table1_diff
from .transform import parse_generator_line

SCHEMA = 1
EXIT_PARSE, EXIT_RESOURCE, EXIT_NUMERIC = 1, 2, 3
WARN_DEGREE = 6


class _ParseError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _ParseError(message)


def _read_sets(args):
    sets = []
    if args.file:
        with open(args.file) as fh:
            for line in fh:
                gens = parse_generator_line(line)
                if gens:
                    sets.append(gens)
    if args.generators:
        gens = parse_generator_line(' '.join(args.generators))
        if gens:
            sets.append(gens)
    if not sets:
        raise InvalidInputError('no generators given')
    for gens in sets:
        if gens[0].degree > WARN_DEGREE:
            print(f'warning: degree {gens[0].degree} > {WARN_DEGREE}; '
                  'enumeration may exhaust memory', file=sys.stderr)
    return sets


def _deadline(args):
    if args.budget_ms is None:
        return None
    return time.monotonic() + args.budget_ms / 1000


def _per_set(args, fn):
    results = []
    for gens in _read_sets(args):
        out = fn(gens)
        out['input'] = [str(g) for g in gens]
        results.append(out)
    return results


def cmd_closure(args):
    return _per_set(args, lambda gens: closure(gens).to_dict())


def cmd_greens(args):
    def run(gens):
        table = closure(gens)
        out = greens.d_classes(table).to_dict()
        out['size'] = len(table)
        out['elements'] = [str(e) for e in table.elements]
        return out
    return _per_set(args, run)


def cmd_greedy(args):
    # the closure's discovery order is the input list
    return _per_set(args, lambda gens: gensets.greedy(closure(gens).elements).to_dict())


def cmd_smallgen(args):
    return _per_set(args, lambda gens: gensets.small_generating_set(
        closure(gens), args.order).to_dict())


def cmd_irredundant(args):
    return _per_set(args, lambda gens: {'is_irredundant': gensets.is_irredundant(gens)})


def cmd_rank(args):
    deadline = _deadline(args)
    return _per_set(args, lambda gens: {
        'rank': gensets.semigroup_rank(closure(gens), args.ceiling, deadline),
        'semigroup_size': len(closure(gens))})


def cmd_ubiquity(args):
    deadline = _deadline(args)

    def run(gens):
        table = closure(gens)
        sets = gensets.enumerate_irredundant_generating_sets(
            table, args.ceiling, deadline)
        sizes = sorted({len(s) for s in sets})
        return {'is_ubiquitous': len(sizes) == 1,
                'irredundant_set_sizes': sizes,
                'irredundant_set_count': len(sets),
                'semigroup_size': len(table)}
    return _per_set(args, run)


def cmd_suffcond(args):
    return _per_set(args, lambda gens: {
        'satisfies_sufficient_condition':
            gensets.satisfies_sufficient_condition(gens)})


_EXACT = {'G': exactprob.exact_G, 'T': exactprob.exact_T, 'V': exactprob.exact_V}


def cmd_exact(args):
    if args.quantity == 'P':
        if args.k is None:
            raise InvalidInputError('exact P needs --k')
        value = exactprob.bound_P(args.n, args.k)
    else:
        value = _EXACT[args.quantity](args.n)
    return {'value': f'{value.numerator}/{value.denominator}',
            'decimal': exactprob.fraction_to_decimal(value, args.digits)}


def cmd_mc(args):
    workers = args.workers or 1
    seed = 0 if args.seed is None else args.seed
    interval = 'wilson' if args.wilson else 'normal'
    if args.quantity == 'SUFF':
        if args.k is None:
            raise InvalidInputError('mc --quantity SUFF needs --k')
        est = montecarlo.estimate_sufficient(args.n, args.k, args.samples,
                                             seed, workers, interval)
    else:
        est = montecarlo.estimate(args.quantity, args.n, args.samples, seed,
                                  workers, interval)
    return est.to_dict()


def cmd_bounds(args):
    return asymptotics.bounds_report(args.f_resolution, args.g_resolution)


def cmd_table1(args):
    rows = table1(args.order, convention=args.convention)
    return {'order': greens.normalize_direction(args.order),
            'convention': args.convention,
            'class_count': sum(r.class_count for r in rows),
            'rows': [r.to_dict() for r in rows],
            'diff': table1_diff(rows)}


def build_parser():
    def globals_(suppress):
        g = _ArgumentParser(add_help=False)
        kw = {'default': argparse.SUPPRESS} if suppress else {}
        g.add_argument('--format', choices=['json', 'tsv'],
                       **(kw or {'default': 'json'}))
        g.add_argument('--seed', type=int, **kw)
        g.add_argument('--workers', type=int, **kw)
        g.add_argument('--budget-ms', type=int, **kw)
        return g

    # globals may appear before or after the subcommand
    common = globals_(suppress=True)
    parser = _ArgumentParser(prog='transgen', parents=[globals_(suppress=False)],
                             description='Generating sets of transformation semigroups.')
    sub = parser.add_subparsers(dest='command', required=True,
                                parser_class=_ArgumentParser)

    def with_gens(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument('generators', nargs='*', help='literals such as [2,3,1]')
        p.add_argument('--file', help='one generator set per line')
        p.set_defaults(func=func)
        return p

    with_gens('closure', cmd_closure, 'enumerate the generated semigroup')
    with_gens('greens', cmd_greens, 'D-classes and their order')
    with_gens('greedy', cmd_greedy, 'Greedy over the discovery order')
    p = with_gens('smallgen', cmd_smallgen, 'SmallGeneratingSet')
    p.add_argument('--order', choices=['desc', 'asc', 'descending', 'ascending'],
                   default='desc')
    with_gens('irredundant', cmd_irredundant, 'is the given set irredundant')
    p = with_gens('rank', cmd_rank, 'exact semigroup rank')
    p.add_argument('--ceiling', type=int, default=gensets.RANK_CEILING)
    p = with_gens('ubiquity', cmd_ubiquity, 'enumerate irredundant generating sets')
    p.add_argument('--ceiling', type=int, default=gensets.ENUMERATION_CEILING)
    with_gens('suffcond', cmd_suffcond, 'rank(xyz) < rank(y) on all triples')

    p = sub.add_parser('exact', parents=[common], help='exact G_n, T_n, V_n or bound')
    p.add_argument('quantity', choices=['G', 'T', 'V', 'P'])
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--k', type=int)
    p.add_argument('--digits', type=int, default=12)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser('mc', parents=[common], help='Monte Carlo estimate')
    p.add_argument('--quantity', choices=['G', 'T', 'V', 'SUFF'], required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--k', type=int)
    p.add_argument('--samples', type=int, required=True)
    p.add_argument('--wilson', action='store_true')
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser('bounds', parents=[common], help='analytic constants')
    p.add_argument('--f-resolution', type=int, default=400)
    p.add_argument('--g-resolution', type=int, default=100)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser('table1', parents=[common],
                       help='subsemigroups of T_3 up to conjugation')
    p.add_argument('--order', choices=['desc', 'asc', 'descending', 'ascending'],
                   default='desc')
    p.add_argument('--convention', choices=['semigroup', 'monoid'],
                   default='semigroup')
    p.set_defaults(func=cmd_table1)
    return parser


def _tsv_cell(v):
    if isinstance(v, (dict, list, tuple)):
        return json.dumps(v, separators=(',', ':'))
    return str(v)


def _emit(result, fmt, out):
    records = result if isinstance(result, list) else [result]
    if fmt == 'json':
        payload = {'schema': SCHEMA}
        if isinstance(result, list):
            payload['results'] = result
        else:
            payload.update(result)
        json.dump(payload, out, default=str)
        out.write('\n')
        return
    keys = []
    for rec in records:
        for k in rec:
            if k not in keys:
                keys.append(k)
    out.write('\t'.join(keys) + '\n')
    for rec in records:
        out.write('\t'.join(_tsv_cell(rec.get(k, '')) for k in keys) + '\n')


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
    except (_ParseError, InvalidInputError, DomainError, OSError) as exc:
        print(f'error: {exc}', file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimitError as exc:
        print(f'resource limit: {exc}', file=sys.stderr)
        return EXIT_RESOURCE
    except (NumericError, OverflowError) as exc:
        print(f'numeric failure: {exc}', file=sys.stderr)
        return EXIT_NUMERIC
    _emit(result, args.format, out)
    return 0


if __name__ == '__main__':
    sys.exit(main())
