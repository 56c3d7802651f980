import itertools

import pytest
from sympy import GF, Poly, symbols

from constructions import P, make_rng
from valext.errors import PreconditionError
from valext.intpoly import reduce_mod_p
from valext.modpoly import (
    FpPoly, FqField, FqPoly, fp_factor, fp_gcd, fp_is_irreducible, fq_arith,
    fq_irreducible, fq_poly_mul, prime_field,
)

X = symbols('x')


def fp(p, *coeffs):
    """F_p polynomial, coefficients leading first."""
    return FpPoly(p, list(reversed(coeffs)))


F4 = FqField(fp(2, 1, 1, 1))
F8 = FqField(fp(2, 1, 0, 1, 1))
xb = F4.gen


def fq(ctx, *coeffs):
    return FqPoly(ctx, list(reversed(coeffs)))


def test_gcd_examples():
    assert fp_gcd(fp(5, 1, 0, -1), fp(5, 1, -1)) == fp(5, 1, 4)
    a = fp(5, 3, 1, 2)
    assert fp_gcd(a, FpPoly(5)) == a.monic()
    assert fp_gcd(fp(2, 1, 0, 1, 0, 1), fp(2, 1, 1, 1)) == fp(2, 1, 1, 1)
    assert fp_gcd(FpPoly(3), FpPoly(3)) == FpPoly(3)
    assert fp(2, 1, 1, 1) ** 2 == fp(2, 1, 0, 1, 0, 1)


def test_gcd_rejects_mixed_moduli():
    with pytest.raises(PreconditionError):
        fp_gcd(fp(2, 1, 1), fp(3, 1, 1))
    with pytest.raises(PreconditionError):
        fp(2, 1, 1) + fp(3, 1)


def test_factor_examples():
    two_val = reduce_mod_p(P(1, 0, 3, 18, 9, 6, 48, 24), 2)
    assert fp_factor(two_val) == [(fp(2, 1, 0), 3), (fp(2, 1, 1, 1), 2)]
    violated = reduce_mod_p(P(1, 0, 48, 6, 24, 12, 3, 18, 6, 12), 2)
    assert fp_factor(violated) == [(fp(2, 1, 0), 3), (fp(2, 1, 1), 2), (fp(2, 1, 1, 1), 2)]
    assert fp_factor(fp(2, 1, 1, 1)) == [(fp(2, 1, 1, 1), 1)]


def test_factor_rejects_bad_input():
    with pytest.raises(PreconditionError):
        fp_factor(FpPoly(3))
    with pytest.raises(PreconditionError):
        fp_factor(fp(3, 2, 1))
    with pytest.raises(PreconditionError):
        fp_factor(fp(3, 1))


def _sympy_factors(f):
    # independent oracle
    lc, facs = Poly(list(reversed(f.coeffs)), X, domain=GF(f.p, symmetric=False)).factor_list()
    out = []
    for g, k in facs:
        coeffs = [int(c) % f.p for c in reversed(g.all_coeffs())]
        out.append((FpPoly(f.p, coeffs).monic(), k))
    return sorted(out, key=lambda t: t[0].sort_key())


def test_factor_random_against_oracle_and_seeds():
    rng = make_rng('fp-factor')
    for _ in range(150):
        p = rng.choice([2, 3, 5, 7, 11])
        n = rng.randint(1, 9)
        f = FpPoly(p, [rng.randrange(p) for _ in range(n)] + [1])
        # bias toward repeated factors
        if rng.random() < 0.4:
            g = FpPoly(p, [rng.randrange(p) for _ in range(rng.randint(1, 3))] + [1])
            f = f * g ** rng.randint(2, 4)
        fac = fp_factor(f, seed=0)
        assert fac == _sympy_factors(f)
        prod = FpPoly(p, 1)
        for g, k in fac:
            assert fq_irreducible(FqPoly.from_fp(prime_field(p), g))
            prod = prod * g ** k
        assert prod == f
        for seed in range(1, 10):
            assert fp_factor(f, seed=seed) == fac


def _brute_irreducible(f):
    # f irreducible iff no monic divisor of degree 1..deg/2
    p, n = f.p, f.degree
    for d in range(1, n // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not f % FpPoly(p, list(tail) + [1]):
                return False
    return True


@pytest.mark.parametrize('p', [2, 3, 5])
def test_irreducibility_matches_enumeration(p):
    for n in range(1, 5):
        for tail in itertools.product(range(p), repeat=n):
            f = FpPoly(p, list(tail) + [1])
            assert fp_is_irreducible(f) == _brute_irreducible(f), f


def test_field_context_requires_irreducible_modulus():
    with pytest.raises(PreconditionError):
        FqField(fp(2, 1, 0, 1))
    with pytest.raises(PreconditionError):
        FqField(fp(3, 2, 1))
    with pytest.raises(PreconditionError):
        FqField(FpPoly(3, 1))


def test_fq_arith_examples():
    assert fq_arith(F4, 'mul', xb, xb + 1) == F4.one
    assert fq_arith(F4, 'add', xb, F4.zero) == xb
    assert fq_arith(F4, 'inv', F4.one) == F4.one
    with pytest.raises(ZeroDivisionError):
        fq_arith(F4, 'inv', F4.zero)
    with pytest.raises(PreconditionError):
        fq_arith(F4, 'add', xb, F8.gen)


@pytest.mark.parametrize('ctx', [F4, F8, FqField(fp(3, 1, 0, 1))], ids=['F4', 'F8', 'F9'])
def test_field_axioms_by_enumeration(ctx):
    els = list(ctx.elements())
    assert len(set(els)) == ctx.q
    for a in els:
        assert a + ctx.zero == a and a * ctx.one == a
        assert a + (-a) == ctx.zero
        if a:
            assert a * a.inverse() == ctx.one
        for b in els:
            assert a + b == b + a and a * b == b * a
            if not (a and b):
                assert not (a * b)
            else:
                assert a * b
    for a, b, c in itertools.product(els, repeat=3):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) + c == a + (b + c)


def test_fq_poly_mul_examples():
    F2 = prime_field(2)
    one = F2.one
    y1 = fq(F2, one, one)
    assert fq_poly_mul(y1, y1) == fq(F2, 1, 0, 1)
    a = fq(F4, 1, xb, xb)
    assert fq_poly_mul(a, fq(F4, 1)) == a
    assert fq_poly_mul(fq(F4, 1, xb), fq(F4, 1, xb + 1)) == fq(F4, 1, 1, 1)


def test_fq_irreducible_examples():
    F2 = prime_field(2)
    assert fq_irreducible(fq(F2, 1, 1, 0, 1))
    assert not fq_irreducible(fq(F2, 1, 0, 1))
    assert not fq_irreducible(fq(F4, 1, 1, 1))
    with pytest.raises(PreconditionError):
        fq_irreducible(fq(F4, xb))


def _brute_fq_irreducible(f):
    # degree <= 3: irreducible iff no root in the field
    return all(sum((c * r ** k for k, c in enumerate(f.coeffs)), f.ctx.zero) for r in f.ctx.elements())


def test_fq_irreducible_over_extension_matches_root_search():
    rng = make_rng('fq-irr')
    for ctx in (F4, F8, FqField(fp(3, 1, 0, 1))):
        els = list(ctx.elements())
        for _ in range(60):
            n = rng.randint(2, 3)
            f = FqPoly(ctx, [rng.choice(els) for _ in range(n)] + [ctx.one])
            assert fq_irreducible(f) == _brute_fq_irreducible(f), f


def test_residual_strings():
    assert str(fq(F4, 1, xb)) == 'Y + x'
    assert str(fq(F4, xb + 1, 0, 1)) == '(x + 1)*Y^2 + 1'
