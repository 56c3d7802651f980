"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 precondition violation,
3 internal consistency failure.
"""

import argparse
import json
import sys

from . import engine
from .errors import InternalError, ParseError, PreconditionError
from .newton import Case, check_L_property, newton_data, residual_poly, residue_field
from .intpoly import reduce_mod_p
from .modpoly import fp_is_irreducible, fq_irreducible
from .parse import parse_poly
from .phiadic import phi_expand
from .report import dedekind_line, expansion_dict, newton_dict, report_dict, report_text

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f'{self.prog}: error: {message}\n')


def _build_parser():
    parser = _Parser(prog='valext', description=(
        'Count the extensions of the p-adic valuation to Q[x]/(F) and their '
        'ramification indices and residue degrees.'))
    sub = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument('--poly', help="polynomial in x, or '-' to read stdin")
        sp.add_argument('--json', action='store_true', help='machine-readable output')
        sp.add_argument('--seed', type=int, default=0,
                        help='seed for randomized factoring (output does not depend on it)')

    sp = sub.add_parser('analyze', help='count valuations extending v_p')
    common(sp)
    sp.add_argument('--prime', type=int, help='the prime p (required unless --input is given)')
    sp.add_argument('--input', metavar='FILE', help="batch file with lines 'p ; polynomial'")

    sp = sub.add_parser('dedekind', help='decide whether p divides ind(alpha)')
    common(sp)
    sp.add_argument('--prime', type=int, help='the prime p (required unless --input is given)')
    sp.add_argument('--input', metavar='FILE', help="batch file with lines 'p ; polynomial'")

    sp = sub.add_parser('expand', help='print the phi-adic expansion of a polynomial')
    common(sp)
    sp.add_argument('--phi', required=True, help='monic polynomial to expand in')
    sp.add_argument('--prime', type=int, help='also print p-adic valuations of the coefficients')

    sp = sub.add_parser('newton', help='print slope data and the residual polynomial')
    common(sp)
    sp.add_argument('--phi', required=True, help='monic lift of an irreducible factor mod p')
    sp.add_argument('--prime', type=int, required=True, help='the prime p')
    return parser


def _read_poly(text, stdin):
    if text is None:
        raise _UsageError('--poly is required')
    if text == '-':
        text = stdin.read().strip()
    return parse_poly(text)


def _analyze(F, p, args):
    rep = engine.analyze(F, p, seed=args.seed)
    return report_dict(rep) if args.json else report_text(rep)


def _dedekind(F, p, args):
    divides = engine.dedekind_divides_index(F, p, seed=args.seed)
    if args.json:
        return {'poly': str(F), 'prime': p, 'dedekind_divides_index': divides}
    return f'p={p}: {dedekind_line(divides)}'


def _expand(args, stdin):
    F = _read_poly(args.poly, stdin)
    phi = parse_poly(args.phi)
    exp = phi_expand(F, phi)
    if args.json:
        return expansion_dict(exp, args.prime)
    lines = [f'F = {exp}', f'L = {exp.length}']
    for item in expansion_dict(exp, args.prime)['coeffs']:
        line = f"a_{item['index']} = {item['coeff']}"
        if args.prime is not None:
            line += f"  (v = {'inf' if item['valuation'] is None else item['valuation']})"
        lines.append(line)
    return '\n'.join(lines)


def _newton(args, stdin):
    F = _read_poly(args.poly, stdin)
    phi = parse_poly(args.phi)
    p = args.prime
    exp = phi_expand(F, phi)
    nd = newton_data(exp, p)
    lv = check_L_property(exp, nd)
    out = newton_dict(nd)
    out['L_satisfied'] = lv.satisfied
    if lv.witness is not None:
        out['witness'] = lv.witness
    phibar = reduce_mod_p(phi, p)
    if lv.satisfied and fp_is_irreducible(phibar):
        res = residual_poly(exp, nd, residue_field(phi, p))
        out['residual'] = str(res)
        out['residual_irreducible'] = fq_irreducible(res) if res.degree >= 1 else None
    if args.json:
        return out
    lines = [f"case={nd.case.value} L={nd.L} s={nd.s} v={nd.v} lambda={nd.lam} "
             f"d={nd.d} e={nd.e} h={nd.h}"]
    if lv.satisfied:
        lines.append('L-property: satisfied' + (' (vacuous)' if nd.case is Case.COPRIME else ''))
    else:
        lines.append(f'L-property: violated at i={lv.witness} (coefficient a_{nd.s + lv.witness})')
    if 'residual' in out:
        tag = {True: 'irreducible', False: 'reducible', None: 'constant'}[out['residual_irreducible']]
        lines.append(f"residual: {out['residual']} ({tag})")
    return '\n'.join(lines)


def _emit(result, stdout, as_json):
    if as_json:
        stdout.write(json.dumps(result) + '\n')
    else:
        stdout.write(result + '\n')


def _run_one(func, F_text, p, args, stdin):
    if p is None:
        raise _UsageError('--prime is required')
    return func(_read_poly(F_text, stdin), p, args)


def _classify(exc):
    if isinstance(exc, (ParseError, _UsageError)):
        return EXIT_USAGE
    if isinstance(exc, PreconditionError):
        return EXIT_PRECONDITION
    return EXIT_INTERNAL


def _batch(func, args, stdout, stderr):
    worst = EXIT_OK
    with open(args.input, encoding='utf-8') as fh:
        lines = fh.read().splitlines()
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        try:
            if ';' not in line:
                raise _UsageError("expected 'p ; polynomial'")
            p_text, poly_text = (t.strip() for t in line.split(';', 1))
            try:
                p = int(p_text)
            except ValueError:
                raise _UsageError(f'bad prime {p_text!r}') from None
            result = func(parse_poly(poly_text), p, args)
        except (ParseError, _UsageError, PreconditionError, InternalError) as exc:
            code = _classify(exc)
            worst = max(worst, code)
            if args.json:
                _emit({'line': lineno, 'error': str(exc), 'exit_code': code}, stdout, True)
            else:
                stdout.write(f'== line {lineno}: error: {exc}\n')
            continue
        if args.json:
            result = {'line': lineno, **result}
        else:
            stdout.write(f'== line {lineno} ==\n')
        _emit(result, stdout, args.json)
    return worst


def run(argv=None, stdin=None, stdout=None, stderr=None):
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = _build_parser().parse_args(argv)
    func = {'analyze': _analyze, 'dedekind': _dedekind}.get(args.command)
    try:
        if func is not None and getattr(args, 'input', None):
            if args.poly is not None:
                raise _UsageError('--input and --poly are mutually exclusive')
            return _batch(func, args, stdout, stderr)
        if func is not None:
            result = _run_one(func, args.poly, args.prime, args, stdin)
        elif args.command == 'expand':
            result = _expand(args, stdin)
        else:
            result = _newton(args, stdin)
    except OSError as exc:
        stderr.write(f'error: {exc}\n')
        return EXIT_USAGE
    except (ParseError, _UsageError, PreconditionError, InternalError) as exc:
        kind = {EXIT_USAGE: 'usage', EXIT_PRECONDITION: 'precondition', EXIT_INTERNAL: 'internal'}
        code = _classify(exc)
        stderr.write(f'{kind[code]} error: {exc}\n')
        return code
    _emit(result, stdout, args.json)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
