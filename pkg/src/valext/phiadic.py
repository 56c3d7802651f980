"""phi-adic expansions of integer polynomials.

For monic phi, every nonzero f has a unique expansion

    f = a_0 phi^L + a_1 phi^(L-1) + ... + a_L,    deg a_j < deg phi,  a_0 != 0.

Coefficients are stored leading-first (``coeffs[j]`` is a_j), matching the
indexing used by the slope and residual computations.
"""

from dataclasses import dataclass

from .errors import InternalError, PreconditionError
from .intpoly import IntPoly, divmod_monic, mul, poly_valuation


@dataclass(frozen=True)
class PhiExpansion:
    phi: IntPoly
    coeffs: tuple

    def __post_init__(self):
        if not self.phi.is_monic() or self.phi.degree < 1:
            raise PreconditionError(f'phi = {self.phi} must be monic of degree >= 1')
        if not self.coeffs or not self.coeffs[0]:
            raise PreconditionError('leading expansion coefficient must be nonzero')
        m = self.phi.degree
        for a in self.coeffs:
            if a and a.degree >= m:
                raise PreconditionError(f'expansion coefficient {a} has degree >= deg phi')

    @property
    def length(self):
        """The exponent L of the leading term."""
        return len(self.coeffs) - 1

    def __getitem__(self, j):
        return self.coeffs[j]

    def __str__(self):
        L = self.length
        parts = []
        for j, a in enumerate(self.coeffs):
            if not a:
                continue
            k = L - j
            power = '' if k == 0 else ('phi' if k == 1 else f'phi^{k}')
            coeff = str(a)
            if not power:
                parts.append(f'({coeff})')
            else:
                parts.append(f'({coeff})*{power}')
        return ' + '.join(parts)


def phi_expand(f, phi):
    """Expand nonzero ``f`` in powers of the monic polynomial ``phi``."""
    if not f:
        raise PreconditionError('cannot expand the zero polynomial')
    if not phi.is_monic() or phi.degree < 1:
        raise PreconditionError(f'phi = {phi} must be monic of degree >= 1')
    digits = []
    while f:
        f, r = divmod_monic(f, phi)
        digits.append(r)
    # digits holds a_L, ..., a_0
    return PhiExpansion(phi, tuple(reversed(digits)))


def reconstruct(e):
    acc = IntPoly()
    for a in e.coeffs:
        acc = mul(acc, e.phi) + a
    return acc


def phi_expand_product(fe, ge, p=None):
    """phi-adic expansion of f*g computed from the expansions of f and g.

    Convolve the two coefficient sequences, divide each convolution term c_k
    by phi, keep the remainder in place and carry the quotient one position
    toward the leading end.  When ``p`` is given, the identity
    v_p(c_k) = min(v_p(Q_k), v_p(R_k)) is checked at every step.
    """
    if fe.phi != ge.phi:
        raise PreconditionError('expansions are taken with respect to different phi')
    phi = fe.phi
    a, b = fe.coeffs, ge.coeffs
    l1, l2 = len(a) - 1, len(b) - 1
    l = l1 + l2
    qs, rs = [], []
    for k in range(l + 1):
        c = IntPoly()
        for i in range(max(0, k - l2), min(k, l1) + 1):
            c = c + mul(a[i], b[k - i])
        q, r = divmod_monic(c, phi)
        if p is not None:
            vc = poly_valuation(c, p)
            if vc != min(poly_valuation(q, p), poly_valuation(r, p)):
                raise InternalError(f'valuation of c_{k} differs from min over (Q_{k}, R_{k})')
        qs.append(q)
        rs.append(r)
    # A_k = Q_{k+1} + R_k for k < l, A_l = R_l, A_{-1} = Q_0
    out = [rs[k] + qs[k + 1] for k in range(l)] + [rs[l]]
    # c_0 = a_0 b_0 has degree < 2 deg phi, so Q_0 < phi in degree and no further carry arises
    if (a[0] * b[0]).degree >= phi.degree:
        out.insert(0, qs[0])
    while out and not out[0]:
        out.pop(0)
    return PhiExpansion(phi, tuple(out))
