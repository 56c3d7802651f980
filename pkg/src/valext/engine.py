"""Count the valuations extending v_p to Q[x]/(F), with ramification data.

For each irreducible factor phi-bar of F mod p, with multiplicity l and
degree m, the factor is certified (it accounts for exactly one valuation,
with e = l/d and f = m*d) when l = 1, or when F has the L-property with
respect to a lift phi and the residual polynomial is irreducible over
F_p[x]/(phi-bar).  A factor violating the L-property splits over the p-adics,
so it accounts for at least two valuations.  Anything else is inconclusive.
"""

import enum
import random
from dataclasses import dataclass, field
from typing import Optional

from .errors import InternalError, PreconditionError
from .intpoly import (
    IntPoly, check_prime, lift_from_fp, mul, prime_is_certified, reduce_mod_p,
    scaled_by_p_power, is_squarefree_over_q,
)
from .modpoly import FpPoly, FqPoly, fp_factor, fq_irreducible
from .newton import Case, LVerdict, NewtonData, check_L_property, newton_data, residual_poly, residue_field
from .phiadic import phi_expand


class Status(enum.Enum):
    CERTIFIED = 'certified_irreducible'
    L_VIOLATED = 'l_violated'
    INCONCLUSIVE = 'inconclusive'


class VerdictKind(enum.Enum):
    EXACT = 'exact_count'
    AT_LEAST = 'at_least'
    UNRESOLVED = 'unresolved'


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    n: int


@dataclass(frozen=True)
class FactorAnalysis:
    phi_bar: FpPoly
    phi_lift: IntPoly
    l: int
    m: int
    newton: NewtonData
    l_verdict: LVerdict
    residual: Optional[FqPoly]
    residual_irreducible: Optional[bool]
    status: Status
    e: Optional[int]
    f: Optional[int]
    min_valuations: int
    note: str = ''


@dataclass(frozen=True)
class AnalysisReport:
    F: IntPoly
    p: int
    factors: tuple
    verdict: Verdict
    dedekind_divides_index: Optional[bool]
    warnings: tuple = field(default=())

    @property
    def r(self):
        return len(self.factors)


def _check_monic(F):
    if not isinstance(F, IntPoly):
        raise TypeError('F must be an IntPoly')
    if not F or F.degree < 1:
        raise PreconditionError('F must be nonconstant')
    if not F.is_monic():
        raise PreconditionError(f'F = {F} is not monic')


def _multiplicity(Fbar, phi_bar):
    l = 0
    while Fbar.degree >= phi_bar.degree:
        q, r = divmod(Fbar, phi_bar)
        if r:
            break
        Fbar = q
        l += 1
    return l


def analyze_factor(F, p, phi_bar, l, phi_lift=None):
    """Slope and residual analysis of one factor phi_bar^l of F mod p.

    ``phi_lift`` defaults to the lift with coefficients in [0, p).
    """
    _check_monic(F)
    check_prime(p)
    if phi_bar.p != p or not phi_bar.is_monic() or phi_bar.degree < 1:
        raise PreconditionError(f'{phi_bar} is not a monic nonconstant polynomial mod {p}')
    actual = _multiplicity(reduce_mod_p(F, p), phi_bar)
    if actual == 0:
        raise PreconditionError(f'{phi_bar} does not divide F mod {p}')
    if actual != l:
        raise PreconditionError(f'{phi_bar} divides F mod {p} with multiplicity {actual}, not {l}')
    if phi_lift is None:
        phi_lift = lift_from_fp(phi_bar)
    elif not phi_lift.is_monic() or reduce_mod_p(phi_lift, p) != phi_bar:
        raise PreconditionError(f'{phi_lift} is not a monic lift of {phi_bar}')
    m = phi_bar.degree
    ctx = residue_field(phi_lift, p)  # verifies phi_bar irreducible

    exp = phi_expand(F, phi_lift)
    if not exp.coeffs[-1]:
        if l != 1:
            raise PreconditionError(f'F is divisible by {phi_lift}, so F is not irreducible')
        # F equals its own lift; any other lift serves, shift the constant term by p
        phi_lift = phi_lift + p
        exp = phi_expand(F, phi_lift)
    nd = newton_data(exp, p)
    if nd.case is not Case.DIVIDES or nd.L - nd.s != l:
        raise InternalError(f'expected L - s = {l} for {phi_bar}, got s = {nd.s}, L = {nd.L}')
    lv = check_L_property(exp, nd)

    residual = irreducible = None
    if lv.satisfied:
        residual = residual_poly(exp, nd, ctx)
        if residual.degree != nd.d or not residual.lc:
            raise InternalError('residual polynomial degree differs from d')
        irreducible = fq_irreducible(residual)

    if l == 1:
        if nd.d != 1:
            raise InternalError(f'simple factor {phi_bar} has d = {nd.d}')
        return FactorAnalysis(phi_bar, phi_lift, l, m, nd, lv, residual, irreducible,
                              Status.CERTIFIED, 1, m, 1, 'simple factor')
    if not lv.satisfied:
        return FactorAnalysis(phi_bar, phi_lift, l, m, nd, lv, residual, irreducible,
                              Status.L_VIOLATED, None, None, 2,
                              'L-property fails, so the p-adic factor is reducible')
    if irreducible:
        if l % nd.d:
            raise InternalError(f'd = {nd.d} does not divide l = {l}')
        e, f = l // nd.d, m * nd.d
        return FactorAnalysis(phi_bar, phi_lift, l, m, nd, lv, residual, irreducible,
                              Status.CERTIFIED, e, f, 1, 'L-property holds, residual irreducible')
    return FactorAnalysis(phi_bar, phi_lift, l, m, nd, lv, residual, irreducible,
                          Status.INCONCLUSIVE, None, None, 1,
                          'L-property holds but the residual polynomial is reducible')


def _aggregate(factors):
    r = len(factors)
    total = sum(fa.min_valuations for fa in factors)
    statuses = {fa.status for fa in factors}
    if statuses == {Status.CERTIFIED}:
        return Verdict(VerdictKind.EXACT, r)
    if Status.L_VIOLATED in statuses:
        return Verdict(VerdictKind.AT_LEAST, total)
    return Verdict(VerdictKind.UNRESOLVED, total)


def _prepare(F, p, seed):
    _check_monic(F)
    check_prime(p)
    if not is_squarefree_over_q(F):
        raise PreconditionError(f'F = {F} is not squarefree over the rationals, hence reducible')
    return fp_factor(reduce_mod_p(F, p), seed)


def analyze(F, p, seed=0, lift=None):
    """Full report for (F, p).

    ``lift`` optionally maps each phi_bar to a monic integer lift; by default
    the lift with coefficients in [0, p) is used.
    """
    fac = _prepare(F, p, seed)
    factors = tuple(
        analyze_factor(F, p, phi_bar, l, None if lift is None else lift(phi_bar))
        for phi_bar, l in fac
    )
    if sum(fa.l * fa.m for fa in factors) != F.degree:
        raise InternalError('factorization mod p is incomplete')
    warnings = ()
    if not prime_is_certified(p):
        warnings = (f'primality of {p} is assumed (probable-prime test only)',)
    return AnalysisReport(F, p, factors, _aggregate(factors),
                          _dedekind(F, p, fac), warnings)


def dedekind_divides_index(F, p, seed=0):
    """True iff p divides [Z_K : Z[alpha]] for alpha a root of F."""
    _check_monic(F)
    check_prime(p)
    return _dedekind(F, p, fp_factor(reduce_mod_p(F, p), seed))


def _dedekind(F, p, fac):
    if all(l == 1 for _, l in fac):
        return False
    prod = IntPoly(1)
    for phi_bar, l in fac:
        prod = mul(prod, lift_from_fp(phi_bar) ** l)
    try:
        M = scaled_by_p_power(F - prod, p, 1)
    except PreconditionError:
        raise InternalError('F - prod(phi_i^l_i) is not divisible by p') from None
    Mbar = reduce_mod_p(M, p)
    for phi_bar, l in fac:
        if l >= 2 and not (Mbar % phi_bar):
            return True
    return False


def random_lift(phi_bar, rng, spread=3):
    """A monic lift of ``phi_bar`` other than the canonical one: add p*H, deg H < deg phi_bar."""
    p = phi_bar.p
    while True:
        H = IntPoly(rng.randint(-spread, spread) for _ in range(phi_bar.degree))
        if H:
            return lift_from_fp(phi_bar) + p * H


def random_lift_map(seed, spread=3):
    rng = random.Random(seed)
    cache = {}

    def lift(phi_bar):
        if phi_bar not in cache:
            cache[phi_bar] = random_lift(phi_bar, rng, spread)
        return cache[phi_bar]
    return lift
