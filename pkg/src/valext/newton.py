"""Slope data, the L-property test and residual polynomials.

Given the phi-adic expansion f = sum a_j phi^(L-j), let s be the largest
index with v_p(a_s) = 0.  When s < L (phi-bar divides f-bar) the single
segment from (s, 0) to (L, v_p(a_L)) has slope lambda = h/e in lowest terms,
and d = gcd(v_p(a_L), L - s).  The expansion has the L-property when every
point (s + i, v_p(a_{s+i})) lies on or above that segment.  Its residual
polynomial is sum_{i=0..d} red(a_{s+ie} / p^(ih)) Y^(d-i) over F_p[x]/(phi-bar).

When s = L (phi-bar does not divide f-bar) lambda = 0, e = 1, d = L, the
property holds vacuously and the residual polynomial is sum red(a_i) Y^(L-i).
"""

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .errors import PreconditionError
from .intpoly import INFINITY, ExtInt, check_prime, poly_valuation, reduce_mod_p, scaled_by_p_power
from .modpoly import FqField, FqPoly


class Case(enum.Enum):
    DIVIDES = 'divides'
    COPRIME = 'coprime'


@dataclass(frozen=True)
class NewtonData:
    p: int
    L: int
    s: int
    v: object  # int, or INFINITY
    lam: Fraction
    d: int
    e: int
    h: int
    case: Case


@dataclass(frozen=True)
class LVerdict:
    satisfied: bool
    witness: Optional[int] = None


def _valuations(exp, p):
    return [poly_valuation(a, p) for a in exp.coeffs]


def newton_data(exp, p):
    check_prime(p)
    vals = _valuations(exp, p)
    if vals[0] != 0:
        raise PreconditionError('leading expansion coefficient must be a p-adic unit')
    L = exp.length
    s = max(j for j, v in enumerate(vals) if v == 0)
    if s == L:
        return NewtonData(p, L, s, vals[L], Fraction(0), L, 1, 0, Case.COPRIME)
    v = vals[L]
    if isinstance(v, ExtInt):
        raise PreconditionError(
            'constant expansion coefficient is zero (phi divides f over the integers); '
            'slope data needs a nonzero a_L')
    d = gcd(v, L - s)
    return NewtonData(p, L, s, v, Fraction(v, L - s), d, (L - s) // d, v // d, Case.DIVIDES)


def check_L_property(exp, nd):
    """Exact test of e * v_p(a_{s+i}) >= i * h for i = 1..L-s."""
    if nd.case is Case.COPRIME:
        return LVerdict(True)
    for i in range(1, nd.L - nd.s + 1):
        v = poly_valuation(exp.coeffs[nd.s + i], nd.p)
        if v is INFINITY:
            continue
        if nd.e * v < i * nd.h:
            return LVerdict(False, i)
    return LVerdict(True)


def residue_field(phi, p):
    return FqField(reduce_mod_p(phi, p).monic())


def red(a, ctx):
    """Image of an integer polynomial in F_p[x]/(phi-bar)."""
    return ctx(reduce_mod_p(a, ctx.p))


def residual_poly(exp, nd, ctx=None):
    """The residual polynomial of the expansion, highest coefficient t_0 first in Y."""
    p = nd.p
    if ctx is None:
        ctx = residue_field(exp.phi, p)
    elif ctx.p != p or ctx.modulus != reduce_mod_p(exp.phi, p):
        raise PreconditionError('residue field does not match phi mod p')
    if nd.case is Case.COPRIME:
        ts = [red(a, ctx) for a in exp.coeffs]
    else:
        if not check_L_property(exp, nd).satisfied:
            raise PreconditionError('residual polynomial requires the L-property')
        ts = []
        for i in range(nd.d + 1):
            a = exp.coeffs[nd.s + i * nd.e]
            k = i * nd.h
            if poly_valuation(a, p) > k:
                ts.append(ctx.zero)
            else:
                ts.append(red(scaled_by_p_power(a, p, k), ctx))
    return FqPoly(ctx, list(reversed(ts)))
