"""Dense univariate polynomials with arbitrary-precision integer coefficients.

A polynomial a_0 + a_1 x + ... + a_n x^n is stored as the tuple
(a_0, a_1, ..., a_n) with a_n != 0; the zero polynomial is the empty tuple.
Alongside the ring operations this module provides the p-adic valuation of a
polynomial (minimum over its coefficients), reduction modulo p and exact
division by powers of p.
"""

from fractions import Fraction
from functools import lru_cache, total_ordering

from .errors import PreconditionError


@total_ordering
class ExtInt:
    """An integer extended by +Infinity or -Infinity.

    Only the two infinite values are ever instantiated; finite values are plain
    ``int``.  Comparisons against ints are exact (no floats involved).
    """

    __slots__ = ('sign',)

    def __init__(self, sign):
        self.sign = sign

    def __eq__(self, other):
        return isinstance(other, ExtInt) and other.sign == self.sign

    def __lt__(self, other):
        if isinstance(other, ExtInt):
            return self.sign < other.sign
        if isinstance(other, (int, Fraction)):
            return self.sign < 0
        return NotImplemented

    def __hash__(self):
        return hash(('ExtInt', self.sign))

    def __add__(self, other):
        if isinstance(other, ExtInt) and other.sign != self.sign:
            raise ArithmeticError('Infinity - Infinity is undefined')
        if isinstance(other, (int, ExtInt)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return INFINITY if self.sign < 0 else MINUS_INFINITY

    def __repr__(self):
        return 'Infinity' if self.sign > 0 else '-Infinity'


INFINITY = ExtInt(1)
MINUS_INFINITY = ExtInt(-1)


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# the bases above are a deterministic witness set for n < 3.3 * 10^24
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981


def is_probable_prime(n):
    """Miller-Rabin with the first twelve prime bases.

    Deterministic for every n below 3.3e24 (in particular all 64-bit n).
    """
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_is_certified(p):
    """True when the primality of p was proven rather than assumed."""
    return p < _MR_DETERMINISTIC_LIMIT


@lru_cache(maxsize=256)
def check_prime(p):
    if not isinstance(p, int) or isinstance(p, bool):
        raise TypeError(f'prime must be an int, got {type(p).__name__}')
    if p < 2:
        raise PreconditionError(f'p must be a prime >= 2, got {p}')
    if not is_probable_prime(p):
        raise PreconditionError(f'{p} is not prime')
    return p


def int_valuation(n, p):
    """Exponent of p in the integer n; INFINITY for n == 0."""
    if n == 0:
        return INFINITY
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class IntPoly:
    """Immutable polynomial over the integers in canonical dense form."""

    __slots__ = ('coeffs',)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, k, c=1):
        return cls((0,) * k + (c,))

    @property
    def degree(self):
        """Degree, or MINUS_INFINITY for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self):
        return self.lc == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(('IntPoly', self.coeffs))

    @staticmethod
    def _coerce(other):
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self), len(other))
        return IntPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-a for a in self.coeffs)

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
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError('negative exponent')
        result, base = IntPoly(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def derivative(self):
        return IntPoly(k * a for k, a in enumerate(self.coeffs) if k)

    def __repr__(self):
        return f'IntPoly({list(self.coeffs)!r})'

    def __str__(self):
        return format_poly(self.coeffs, 'x')


def format_poly(coeffs, var='x'):
    """Render integer coefficients (low to high) as e.g. ``x^2 - 3x + 1``."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = '-' if c < 0 else '+'
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f'{var}^{k}'
            body = mono if a == 1 else f'{a}{mono}'
        terms.append((sign, body))
    if not terms:
        return '0'
    first_sign, first = terms[0]
    out = ('-' if first_sign == '-' else '') + first
    for sign, body in terms[1:]:
        out += f' {sign} {body}'
    return out


def mul(a, b):
    """Schoolbook product."""
    if not a or not b:
        return IntPoly()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return IntPoly(out)


def divmod_monic(a, b):
    """Euclidean division by a monic divisor: returns (Q, R) with a = bQ + R."""
    if not b:
        raise PreconditionError('division by the zero polynomial')
    if not b.is_monic():
        raise PreconditionError(f'divisor {b} is not monic')
    m = b.degree
    r = list(a.coeffs)
    if len(r) <= m:
        return IntPoly(), a
    q = [0] * (len(r) - m)
    bc = b.coeffs
    for k in range(len(r) - 1, m - 1, -1):
        c = r[k]
        if c:
            q[k - m] = c
            for j in range(m + 1):
                r[k - m + j] -= c * bc[j]
    return IntPoly(q), IntPoly(r[:m])


def poly_valuation(a, p):
    """min over coefficients of the p-adic valuation; INFINITY for zero."""
    check_prime(p)
    v = INFINITY
    for c in a.coeffs:
        if c:
            v = min(v, int_valuation(c, p))
            if v == 0:
                break
    return v


def reduce_mod_p(a, p):
    from .modpoly import FpPoly

    check_prime(p)
    return FpPoly(p, a.coeffs)


def scaled_by_p_power(a, p, k):
    """Exact quotient a / p^k; raises when some coefficient is not divisible."""
    if k < 0:
        raise ValueError('k must be nonnegative')
    q = p ** k
    out = []
    for c in a.coeffs:
        t, r = divmod(c, q)
        if r:
            raise PreconditionError(f'coefficient {c} is not divisible by {p}^{k}')
        out.append(t)
    return IntPoly(out)


def lift_from_fp(fp):
    """Integer polynomial with the residues of ``fp`` (in [0, p)) as coefficients."""
    return IntPoly(fp.coeffs)


def is_squarefree_over_q(a):
    """gcd(a, a') over the rationals is constant."""
    if a.degree == MINUS_INFINITY:
        return False
    if a.degree <= 1:
        return True
    u = [Fraction(c) for c in a.coeffs]
    w = [Fraction(c) for c in a.derivative().coeffs]
    while w:
        u, w = w, _frac_rem(u, w)
    return len(u) == 1


def _frac_rem(u, w):
    r = list(u)
    lw = w[-1]
    while len(r) >= len(w):
        c = r[-1] / lw
        shift = len(r) - len(w)
        for j, wc in enumerate(w):
            r[shift + j] -= c * wc
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r
