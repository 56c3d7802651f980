"""Text and JSON renderings of analysis results."""

from .engine import Status, VerdictKind
from .intpoly import ExtInt, reduce_mod_p


def _plural(n, word):
    return f'{n} {word}' if n == 1 else f'{n} {word}s'


def _v(v):
    return None if isinstance(v, ExtInt) else v


def newton_dict(nd):
    return {
        'L': nd.L,
        's': nd.s,
        'v': _v(nd.v),
        'lambda': {'num': nd.lam.numerator, 'den': nd.lam.denominator},
        'd': nd.d,
        'e_slope': nd.e,
        'h_slope': nd.h,
        'case': nd.case.value,
    }


def factor_dict(fa):
    out = {'phi': str(fa.phi_lift), 'phi_bar': str(fa.phi_bar), 'l': fa.l, 'm': fa.m}
    out.update(newton_dict(fa.newton))
    out['L_satisfied'] = fa.l_verdict.satisfied
    if fa.l_verdict.witness is not None:
        out['witness'] = fa.l_verdict.witness
    if fa.residual is not None:
        out['residual'] = str(fa.residual)
        out['residual_irreducible'] = fa.residual_irreducible
    out['status'] = fa.status.value
    if fa.status is Status.CERTIFIED:
        out['e'] = fa.e
        out['f'] = fa.f
    out['min_valuations'] = fa.min_valuations
    out['note'] = fa.note
    return out


def report_dict(rep):
    return {
        'poly': str(rep.F),
        'prime': rep.p,
        'r': rep.r,
        'factors': [factor_dict(fa) for fa in rep.factors],
        'verdict': {'kind': rep.verdict.kind.value, 'n': rep.verdict.n},
        'dedekind_divides_index': rep.dedekind_divides_index,
        'warnings': list(rep.warnings),
    }


def dedekind_line(divides):
    return 'p divides ind(alpha)' if divides else 'p does not divide ind(alpha)'


def verdict_line(rep):
    kind, n = rep.verdict.kind, rep.verdict.n
    if kind is VerdictKind.EXACT:
        data = '; '.join(f'e={fa.e} f={fa.f}' for fa in rep.factors)
        return f'exactly {_plural(n, "valuation")}: {data}'
    if kind is VerdictKind.AT_LEAST:
        return f'at least {_plural(n, "valuation")} (more than r={rep.r})'
    return f'unresolved: at least {_plural(n, "valuation")}, exact count not certified'


def report_text(rep):
    fbar = reduce_mod_p(rep.F, rep.p)
    lines = [f'F = {rep.F}, p = {rep.p}', f'F mod {rep.p} = {_factored(rep)}  (r = {rep.r})']
    if str(fbar) != _factored(rep):
        lines[-1] += f'  [= {fbar}]'
    for w in rep.warnings:
        lines.append(f'warning: {w}')
    for i, fa in enumerate(rep.factors, 1):
        nd = fa.newton
        lines.append(f'[{i}] phi = {fa.phi_lift}  l={fa.l} m={fa.m}')
        lines.append(f'    L={nd.L} s={nd.s} v={nd.v} lambda={nd.lam} d={nd.d} (e={nd.e}, h={nd.h})')
        if fa.l_verdict.satisfied:
            lines.append('    L-property: satisfied')
        else:
            j = fa.l_verdict.witness
            lines.append(f'    L-property: violated at i={j} (coefficient a_{nd.s + j})')
        if fa.residual is not None:
            tag = 'irreducible' if fa.residual_irreducible else 'reducible'
            lines.append(f'    residual: {fa.residual} ({tag})')
        status = f'    status: {fa.status.value}'
        if fa.status is Status.CERTIFIED:
            status += f'  e={fa.e} f={fa.f}'
        else:
            status += f'  min_valuations={fa.min_valuations}'
        lines.append(status)
    lines.append(f'dedekind: {dedekind_line(rep.dedekind_divides_index)}')
    lines.append(verdict_line(rep))
    return '\n'.join(lines)


def _factored(rep):
    parts = []
    for fa in rep.factors:
        base = str(fa.phi_bar)
        if fa.phi_bar.degree > 1 or len([c for c in fa.phi_bar.coeffs if c]) > 1:
            base = f'({base})'
        parts.append(base if fa.l == 1 else f'{base}^{fa.l}')
    return ''.join(parts)


def expansion_dict(exp, p=None):
    from .intpoly import poly_valuation

    L = exp.length
    out = {'phi': str(exp.phi), 'L': L, 'coeffs': []}
    for j, a in enumerate(exp.coeffs):
        item = {'index': j, 'power': L - j, 'coeff': str(a)}
        if p is not None:
            item['valuation'] = _v(poly_valuation(a, p))
        out['coeffs'].append(item)
    return out
