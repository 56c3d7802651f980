"""Parser for integer polynomial expressions in x.

Accepted: signed integer literals and terms ``c``, ``x``, ``x^k``, ``c*x^k``
and ``cx^k`` joined by ``+``/``-``, with arbitrary whitespace.  Repeated
powers are summed, so ``x^2 + x^2`` is ``2x^2``.
"""

from .errors import ParseError
from .intpoly import IntPoly


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def take(self):
        ch = self.peek()
        self.pos += 1
        return ch

    def digits(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return self.text[start:self.pos], start


def parse_poly(text):
    sc = _Scanner(text)
    if not sc.peek():
        raise ParseError('empty polynomial expression', 0, text)
    coeffs = {}
    sign = 1
    if sc.peek() in '+-':
        sign = -1 if sc.take() == '-' else 1
    while True:
        power, c = _term(sc)
        coeffs[power] = coeffs.get(power, 0) + sign * c
        ch = sc.peek()
        if not ch:
            break
        if ch not in '+-':
            raise ParseError(f'unexpected symbol {ch!r}', sc.pos, text)
        sign = -1 if sc.take() == '-' else 1
        if not sc.peek():
            raise ParseError('expression ends after an operator', sc.pos, text)
    n = max(coeffs) + 1
    return IntPoly([coeffs.get(k, 0) for k in range(n)])


def _term(sc):
    ch = sc.peek()
    c = 1
    if ch.isdigit():
        lit, _ = sc.digits()
        c = int(lit)
        ch = sc.peek()
        if ch == '*':
            sc.take()
            if sc.peek() != 'x':
                raise ParseError("expected 'x' after '*'", sc.pos, sc.text)
            ch = 'x'
        if ch != 'x':
            return 0, c
    elif ch != 'x':
        if not ch:
            raise ParseError('expected a term', sc.pos, sc.text)
        raise ParseError(f'unknown symbol {ch!r}', sc.pos, sc.text)
    sc.take()
    if sc.peek() != '^':
        return 1, c
    sc.take()
    exp, start = sc.digits()
    if not exp:
        raise ParseError('malformed exponent (expected a nonnegative integer)', start, sc.text)
    return int(exp), c
