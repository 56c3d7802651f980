"""Polynomials over F_p and over F_q = F_p[x]/(m(x)).

``FpPoly`` carries its prime and a tuple of residues (low degree first).
``FqField`` is a finite field given by a monic irreducible modulus over F_p;
``FqElem`` and ``FqPoly`` are its elements and polynomials in the variable Y.

Factorization over F_p is squarefree decomposition, distinct-degree
splitting and Cantor-Zassenhaus equal-degree splitting.  The random choices
made by the latter are driven by an explicit seed, and the final factor list
is sorted, so the result never depends on the seed.
"""

import random
from functools import lru_cache

from .errors import PreconditionError
from .intpoly import MINUS_INFINITY, check_prime, format_poly


class FpPoly:
    """Immutable polynomial over the prime field F_p."""

    __slots__ = ('p', 'coeffs')

    def __init__(self, p, coeffs=()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        c = [int(a) % p for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.p = p
        self.coeffs = tuple(c)

    @classmethod
    def x(cls, p):
        return cls(p, (0, 1))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self):
        return self.lc == 1

    def is_one(self):
        return self.coeffs == (1,)

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == FpPoly(self.p, other).coeffs
        if not isinstance(other, FpPoly):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(('FpPoly', self.p, self.coeffs))

    def sort_key(self):
        return (len(self.coeffs), self.coeffs)

    def _coerce(self, other):
        if isinstance(other, int):
            return FpPoly(self.p, other)
        if isinstance(other, FpPoly):
            if other.p != self.p:
                raise PreconditionError(f'modulus mismatch: {self.p} vs {other.p}')
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self), len(other))
        return FpPoly(self.p, [self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return FpPoly(self.p, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self or not other:
            return FpPoly(self.p)
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return FpPoly(self.p, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError('polynomial division by zero')
        p = self.p
        r = list(self.coeffs)
        m = len(other) - 1
        if len(r) <= m:
            return FpPoly(p), self
        inv = pow(other.lc, -1, p)
        q = [0] * (len(r) - m)
        oc = other.coeffs
        for k in range(len(r) - 1, m - 1, -1):
            c = r[k] * inv % p
            if c:
                q[k - m] = c
                for j in range(m + 1):
                    r[k - m + j] = (r[k - m + j] - c * oc[j]) % p
        return FpPoly(p, q), FpPoly(p, r[:m])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, k):
        result, base = FpPoly(self.p, 1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monic(self):
        if not self:
            return self
        inv = pow(self.lc, -1, self.p)
        return FpPoly(self.p, [a * inv for a in self.coeffs])

    def derivative(self):
        return FpPoly(self.p, [k * a for k, a in enumerate(self.coeffs) if k])

    def __repr__(self):
        return f'FpPoly({self.p}, {list(self.coeffs)!r})'

    def __str__(self):
        return format_poly(self.coeffs, 'x')


def fp_pow_mod(base, e, mod):
    result = FpPoly(base.p, 1) % mod
    base = base % mod
    while e:
        if e & 1:
            result = result * base % mod
        base = base * base % mod
        e >>= 1
    return result


def fp_gcd(a, b):
    """Monic gcd; gcd(0, 0) = 0."""
    if a.p != b.p:
        raise PreconditionError(f'modulus mismatch: {a.p} vs {b.p}')
    while b:
        a, b = b, a % b
    return a.monic()


def _sqf_list(f):
    # f monic, deg >= 1; returns [(g, multiplicity)] with g squarefree, pairwise coprime
    p = f.p
    factors = []
    n = 1
    while True:
        sqf = False
        df = f.derivative()
        if df:
            g = fp_gcd(f, df)
            h = f // g
            i = 1
            while not h.is_one():
                G = fp_gcd(g, h)
                H = h // G
                if H.degree > 0:
                    factors.append((H, i * n))
                g, h, i = g // G, G, i + 1
            if g.is_one():
                sqf = True
            else:
                f = g
        if sqf:
            return factors
        # f is a p-th power: take the p-th root coefficientwise
        f = FpPoly(p, f.coeffs[::p])
        n *= p


def _ddf(f):
    # f monic squarefree; returns [(g, d)] with g the product of all degree-d factors
    p = f.p
    x = FpPoly.x(p)
    out = []
    h = x
    d = 1
    while f.degree >= 2 * d:
        h = fp_pow_mod(h, p, f)
        g = fp_gcd(f, h - x)
        if not g.is_one():
            out.append((g, d))
            f = f // g
            h = h % f
        d += 1
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def _edf(f, d, rng):
    # Cantor-Zassenhaus: split f (monic, all factors of degree d)
    n = f.degree
    if n == d:
        return [f]
    p = f.p
    while True:
        a = FpPoly(p, [rng.randrange(p) for _ in range(n)])
        if a.degree < 1:
            continue
        if p == 2:
            b = a % f
            t = b
            for _ in range(d - 1):
                t = t * t % f
                b = b + t
        else:
            b = fp_pow_mod(a, (p ** d - 1) // 2, f) - 1
        g = fp_gcd(f, b)
        if 0 < g.degree < n:
            return _edf(g, d, rng) + _edf(f // g, d, rng)


def fp_factor(a, seed=0):
    """Factor a monic polynomial over F_p into monic irreducibles.

    Returns [(factor, multiplicity), ...] sorted by degree and then by the
    coefficient sequence, so the output is independent of ``seed``.
    """
    if not a:
        raise PreconditionError('cannot factor the zero polynomial')
    if not a.is_monic():
        raise PreconditionError(f'{a} is not monic')
    if a.degree < 1:
        raise PreconditionError('cannot factor a constant')
    rng = random.Random(seed)
    out = []
    for g, mult in _sqf_list(a):
        for h, d in _ddf(g):
            out.extend((q, mult) for q in _edf(h, d, rng))
    out.sort(key=lambda t: t[0].sort_key())
    return out


def _prime_divisors(n):
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


class FqField:
    """The field F_p[x]/(modulus), modulus monic irreducible of degree m >= 1."""

    def __init__(self, modulus):
        if not isinstance(modulus, FpPoly):
            raise TypeError('modulus must be an FpPoly')
        check_prime(modulus.p)
        if modulus.degree == MINUS_INFINITY or modulus.degree < 1:
            raise PreconditionError('modulus must have degree >= 1')
        if not modulus.is_monic():
            raise PreconditionError(f'modulus {modulus} is not monic')
        self.p = modulus.p
        self.modulus = modulus
        self.m = modulus.degree
        self.q = self.p ** self.m
        if self.m > 1 and not fq_irreducible(FqPoly.from_fp(prime_field(self.p), modulus)):
            raise PreconditionError(f'modulus {modulus} is not irreducible mod {self.p}')

    def __eq__(self, other):
        return isinstance(other, FqField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(('FqField', self.modulus))

    def __repr__(self):
        return f'FqField({self.modulus} mod {self.p})'

    def __call__(self, value):
        """Coerce an int, FpPoly or coefficient sequence into the field."""
        if isinstance(value, FqElem):
            if value.ctx != self:
                raise PreconditionError('field mismatch')
            return value
        if isinstance(value, int):
            value = FpPoly(self.p, value)
        elif not isinstance(value, FpPoly):
            value = FpPoly(self.p, value)
        elif value.p != self.p:
            raise PreconditionError(f'modulus mismatch: {self.p} vs {value.p}')
        return FqElem(self, (value % self.modulus).coeffs)

    @property
    def zero(self):
        return FqElem(self, ())

    @property
    def one(self):
        return FqElem(self, (1,) if self.m >= 1 else ())

    @property
    def gen(self):
        """Class of x."""
        return self(FpPoly.x(self.p))

    def elements(self):
        for n in range(self.q):
            digits = []
            for _ in range(self.m):
                n, r = divmod(n, self.p)
                digits.append(r)
            yield self(digits)


@lru_cache(maxsize=64)
def prime_field(p):
    """F_p presented as F_p[x]/(x)."""
    return FqField(FpPoly.x(check_prime(p)))


class FqElem:
    __slots__ = ('ctx', 'rep')

    def __init__(self, ctx, rep):
        self.ctx = ctx
        self.rep = tuple(rep)

    def _check(self, other):
        if isinstance(other, int):
            return self.ctx(other)
        if not isinstance(other, FqElem):
            return None
        if other.ctx != self.ctx:
            raise PreconditionError('field mismatch')
        return other

    def as_fp(self):
        return FpPoly(self.ctx.p, self.rep)

    def __bool__(self):
        return bool(self.rep)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx(other)
        if not isinstance(other, FqElem):
            return NotImplemented
        return self.ctx == other.ctx and self.rep == other.rep

    def __hash__(self):
        return hash(('FqElem', self.ctx.modulus, self.rep))

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return FqElem(self.ctx, (self.as_fp() + other.as_fp()).coeffs)

    __radd__ = __add__

    def __neg__(self):
        return FqElem(self.ctx, (-self.as_fp()).coeffs)

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return FqElem(self.ctx, (self.as_fp() * other.as_fp() % self.ctx.modulus).coeffs)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError('inverse of zero in a finite field')
        # extended Euclid on (rep, modulus)
        r0, r1 = self.ctx.modulus, self.as_fp()
        s0, s1 = FpPoly(self.ctx.p), FpPoly(self.ctx.p, 1)
        while r1:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        # r0 is a nonzero constant
        return self.ctx(s0 * pow(r0.lc, -1, self.ctx.p))

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.ctx.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self):
        return f'FqElem({str(self)})'

    def __str__(self):
        return format_poly(self.rep, 'x')


def fq_arith(ctx, op, a, b=None):
    """Field operation ``op`` in {'add', 'mul', 'inv'} on elements of ``ctx``."""
    a = ctx(a)
    if op == 'inv':
        return a.inverse()
    b = ctx(b)
    if op == 'add':
        return a + b
    if op == 'mul':
        return a * b
    raise ValueError(f'unknown field operation {op!r}')


class FqPoly:
    """Immutable polynomial in Y over an FqField."""

    __slots__ = ('ctx', 'coeffs')

    def __init__(self, ctx, coeffs=()):
        c = [ctx(a) for a in coeffs]
        while c and not c[-1]:
            c.pop()
        self.ctx = ctx
        self.coeffs = tuple(c)

    @classmethod
    def from_fp(cls, ctx, f):
        """View a polynomial over F_p as one over F_q (coefficients in the prime subfield)."""
        return cls(ctx, [ctx(a) for a in f.coeffs])

    @classmethod
    def y(cls, ctx):
        return cls(ctx, (ctx.zero, ctx.one))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.ctx.zero

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.ctx.zero

    def __eq__(self, other):
        if not isinstance(other, FqPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(('FqPoly', self.ctx.modulus, self.coeffs))

    def _check(self, other):
        if isinstance(other, (int, FqElem)):
            return FqPoly(self.ctx, [other])
        if not isinstance(other, FqPoly):
            return None
        if other.ctx != self.ctx:
            raise PreconditionError('field mismatch')
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        n = max(len(self), len(other))
        return FqPoly(self.ctx, [self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return FqPoly(self.ctx, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return fq_poly_mul(self, other)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._check(other)
        if not other:
            raise ZeroDivisionError('polynomial division by zero')
        r = list(self.coeffs)
        m = len(other) - 1
        zero = self.ctx.zero
        if len(r) <= m:
            return FqPoly(self.ctx), self
        inv = other.lc.inverse()
        q = [zero] * (len(r) - m)
        for k in range(len(r) - 1, m - 1, -1):
            c = r[k] * inv
            if c:
                q[k - m] = c
                for j in range(m + 1):
                    r[k - m + j] = r[k - m + j] - c * other.coeffs[j]
        return FqPoly(self.ctx, q), FqPoly(self.ctx, r[:m])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if not self:
            return self
        inv = self.lc.inverse()
        return FqPoly(self.ctx, [a * inv for a in self.coeffs])

    def scale(self, c):
        c = self.ctx(c)
        return FqPoly(self.ctx, [c * a for a in self.coeffs])

    def __repr__(self):
        return f'FqPoly({self})'

    def __str__(self):
        return format_fq_poly(self)


def format_fq_poly(f, var='Y'):
    if not f:
        return '0'
    terms = []
    for k in range(len(f) - 1, -1, -1):
        c = f.coeffs[k]
        if not c:
            continue
        mono = '' if k == 0 else (var if k == 1 else f'{var}^{k}')
        cs = str(c)
        if not mono:
            terms.append(cs)
        elif c.rep == (1,):
            terms.append(mono)
        elif len([a for a in c.rep if a]) == 1:
            terms.append(f'{cs}*{mono}')
        else:
            terms.append(f'({cs})*{mono}')
    return ' + '.join(terms)


def fq_poly_mul(a, b):
    if a.ctx != b.ctx:
        raise PreconditionError('field mismatch')
    if not a or not b:
        return FqPoly(a.ctx)
    zero = a.ctx.zero
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] = out[i + j] + x * y
    return FqPoly(a.ctx, out)


def fq_poly_gcd(a, b):
    while b:
        a, b = b, a % b
    return a.monic()


def fq_pow_mod(base, e, mod):
    result = FqPoly(base.ctx, [base.ctx.one]) % mod
    base = base % mod
    while e:
        if e & 1:
            result = result * base % mod
        base = base * base % mod
        e >>= 1
    return result


def fq_irreducible(a):
    """Rabin's test over F_q.

    ``a`` of degree n is irreducible iff Y^(q^n) = Y mod a and
    gcd(Y^(q^(n/t)) - Y, a) = 1 for every prime t dividing n.
    """
    if a.degree == MINUS_INFINITY or a.degree < 1:
        raise PreconditionError('irreducibility is undefined for constants')
    n = a.degree
    if n == 1:
        return True
    a = a.monic()
    q = a.ctx.q
    y = FqPoly.y(a.ctx)
    frob = [y % a]
    for _ in range(n):
        frob.append(fq_pow_mod(frob[-1], q, a))
    if frob[n] - frob[0]:
        return False
    for t in _prime_divisors(n):
        g = fq_poly_gcd(a, frob[n // t] - y)
        if g.degree != 0:
            return False
    return True


def fp_is_irreducible(f):
    return fq_irreducible(FqPoly.from_fp(prime_field(f.p), f))
