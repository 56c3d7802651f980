"""Random generators shared by the property suites and the acceptance tests."""

import random
from fractions import Fraction
from math import gcd

from valext.intpoly import IntPoly, reduce_mod_p
from valext.modpoly import FpPoly, fp_is_irreducible
from valext.phiadic import reconstruct, PhiExpansion

PRIMES = (2, 3, 5)


def P(*coeffs):
    """Polynomial from coefficients listed leading first: P(1, 0, -2) = x^2 - 2."""
    return IntPoly(list(reversed(coeffs)))


def rand_intpoly(rng, deg, bound=30, monic=False):
    c = [rng.randint(-bound, bound) for _ in range(deg)]
    lead = 1 if monic else rng.choice([x for x in range(-bound, bound + 1) if x])
    return IntPoly(c + [lead])


def rand_irreducible_phi(rng, p, m, spread=2):
    """Monic integer lift (random, not necessarily canonical) of a random irreducible mod p."""
    while True:
        fb = FpPoly(p, [rng.randrange(p) for _ in range(m)] + [1])
        if fp_is_irreducible(fb):
            break
    return IntPoly(c + p * rng.randint(-spread, spread) for c in fb.coeffs[:-1]) + IntPoly.monomial(m)


def _unit_part(rng, p, m):
    # integer poly of degree < m whose reduction mod p is nonzero
    while True:
        u = IntPoly(rng.randint(-9, 9) for _ in range(m))
        if reduce_mod_p(u, p):
            return u


def _any_part(rng, m):
    return IntPoly(rng.randint(-9, 9) for _ in range(m))


def build_slope_poly(rng, phi, p, l, lam):
    """Monic f with f-bar = phi-bar^l, slope lam and the L-property.

    Coefficient a_i of the phi-expansion is divisible by p^ceil(i*lam) and
    a_l has valuation exactly l*lam, which must be an integer.
    """
    m = phi.degree
    top = lam * l
    assert top.denominator == 1
    coeffs = [IntPoly(1)]
    for i in range(1, l):
        k = -((-i * lam.numerator) // lam.denominator)  # ceil(i * lam)
        k += rng.choice([0, 0, 1])
        coeffs.append(p ** k * _any_part(rng, m))
    coeffs.append(p ** int(top) * _unit_part(rng, p, m))
    return reconstruct(PhiExpansion(phi, tuple(coeffs)))


def build_power_poly(rng, phi, p, l, max_v=4):
    """Monic f with f-bar = phi-bar^l and arbitrary positive valuations on the tail."""
    m = phi.degree
    coeffs = [IntPoly(1)]
    for i in range(1, l + 1):
        k = rng.randint(1, max_v)
        part = _unit_part(rng, p, m) if i == l else _any_part(rng, m)
        coeffs.append(p ** k * part)
    return reconstruct(PhiExpansion(phi, tuple(coeffs)))


def build_coprime_poly(rng, phi, p, deg):
    """Random monic g of the given degree with phi-bar not dividing g-bar."""
    phibar = reduce_mod_p(phi, p)
    while True:
        g = rand_intpoly(rng, deg, bound=20, monic=True)
        if reduce_mod_p(g, p) % phibar:
            return g


def rand_slope(rng, max_e=3, max_h=3):
    while True:
        e, h = rng.randint(1, max_e), rng.randint(1, max_h)
        if gcd(e, h) == 1:
            return Fraction(h, e)


def make_rng(tag):
    return random.Random(f'valext-{tag}')
