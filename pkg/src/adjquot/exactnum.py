"""Exact arithmetic over Q and Q(i), plus the text formats for scalars.

Rationals are plain :class:`fractions.Fraction` values.  Gaussian rationals
are stored as a triple of integers ``(a, b, d)`` meaning ``(a + b*i) / d``
with ``d > 0`` and ``gcd(a, b, d) == 1``; that canonical form makes equality
and hashing structural and keeps multiplication to a handful of integer ops.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = [
    "GaussianRational",
    "ParseError",
    "ZeroDivisionErrorGR",
    "I",
    "ONE",
    "ZERO",
    "as_gr",
    "format_complex",
    "format_rational",
    "parse_complex",
    "parse_gaussian",
    "parse_rational",
    "rational_circle",
]


class ParseError(ValueError):
    """Malformed scalar text; ``position`` is the offending character index."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class ZeroDivisionErrorGR(ZeroDivisionError):
    """Division by zero in Q(i); keeps the operands for the report."""

    def __init__(self, numerator, denominator):
        super().__init__(f"division of {numerator} by zero ({denominator})")
        self.numerator = numerator
        self.denominator = denominator


class GaussianRational:
    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // math.gcd(re.denominator, im.denominator)
        self._a = re.numerator * (d // re.denominator)
        self._b = im.numerator * (d // im.denominator)
        self._d = d

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GaussianRational":
        if d < 0:
            a, b, d = -a, -b, -d
        g = math.gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        obj = object.__new__(cls)
        obj._a = a
        obj._b = b
        obj._d = d
        return obj

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_real(self) -> bool:
        return self._b == 0

    def conj(self) -> "GaussianRational":
        if self._b == 0:
            return self
        return GaussianRational._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """|q|^2 as an exact rational."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def __complex__(self) -> complex:
        return complex(self._a / self._d, self._b / self._d)

    def __float__(self) -> float:
        if self._b:
            raise TypeError(f"{self} is not real")
        return self._a / self._d

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and Fraction(self._a, self._d) == other
        if isinstance(other, complex):
            return complex(self) == other
        return NotImplemented

    def __neg__(self):
        obj = object.__new__(GaussianRational)
        obj._a, obj._b, obj._d = -self._a, -self._b, self._d
        return obj

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._d == other._d:
            return GaussianRational._raw(self._a + other._a, self._b + other._b, self._d)
        return GaussianRational._raw(
            self._a * other._d + other._a * self._d,
            self._b * other._d + other._b * self._d,
            self._d * other._d,
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, d = self._a, self._b, self._d
        c, e, f = other._a, other._b, other._d
        if b == 0 and e == 0:
            return GaussianRational._raw(a * c, 0, d * f)
        return GaussianRational._raw(a * c - b * e, a * e + b * c, d * f)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        if not self:
            raise ZeroDivisionErrorGR(ONE, self)
        # d / (a + b i) = d (a - b i) / (a^2 + b^2)
        n = self._a * self._a + self._b * self._b
        return GaussianRational._raw(self._d * self._a, -self._d * self._b, n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other:
            raise ZeroDivisionErrorGR(self, other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self):
        return f"GaussianRational({format_rational(self.re)!r}, {format_rational(self.im)!r})"

    def __str__(self):
        return format_gaussian(self)


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, int):
        return GaussianRational._raw(x, 0, 1)
    if isinstance(x, _RationalABC):
        return GaussianRational._raw(x.numerator, 0, x.denominator)
    return NotImplemented


def as_gr(x) -> GaussianRational:
    """Coerce int / Fraction / GaussianRational / numeric text to Q(i)."""
    if isinstance(x, str):
        return parse_gaussian(x)
    out = _coerce(x)
    if out is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as an exact Gaussian rational")
    return out


ZERO = GaussianRational._raw(0, 0, 1)
ONE = GaussianRational._raw(1, 0, 1)
I = GaussianRational._raw(0, 1, 1)


def rational_circle(s) -> tuple[Fraction, Fraction]:
    """Rational point ((1-s^2)/(1+s^2), 2s/(1+s^2)) on the unit circle.

    ``s = tan(phi/2)``; the pair is (cos phi, sin phi) exactly.
    """
    s = Fraction(s)
    q = 1 + s * s
    return (1 - s * s) / q, 2 * s / q


# --- text formats ---------------------------------------------------------

_INT = re.compile(r"\d+")


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_gaussian(q: GaussianRational) -> str:
    re_, im_ = q.re, q.im
    if im_ == 0:
        return format_rational(re_)
    if im_ == 1:
        im_s = "i"
    elif im_ == -1:
        im_s = "-i"
    else:
        im_s = f"{format_rational(im_)}*i"
    if re_ == 0:
        return im_s
    sep = "" if im_s.startswith("-") else "+"
    return f"{format_rational(re_)}{sep}{im_s}"


def format_complex(z: complex) -> str:
    z = complex(z)
    return f"{z.real!r}{'+' if z.imag >= 0 or z.imag != z.imag else ''}{z.imag!r}*i"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, msg: str):
        raise ParseError(msg, self.text, self.pos)

    def skip_ws(self):
        while self.peek().isspace():
            self.pos += 1

    def sign(self) -> int:
        self.skip_ws()
        c = self.peek()
        if c in "+-":
            self.pos += 1
            return -1 if c == "-" else 1
        return 0

    def integer(self) -> int:
        m = _INT.match(self.text, self.pos)
        if not m:
            self.error("expected digits")
        self.pos = m.end()
        return int(m.group())


def _scan_rational_body(sc: _Scanner) -> Fraction:
    num = sc.integer()
    if sc.peek() == "/":
        sc.pos += 1
        den = sc.integer()
        if den == 0:
            sc.pos -= 1
            sc.error("zero denominator")
        return Fraction(num, den)
    return Fraction(num)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` with an optional sign."""
    sc = _Scanner(text)
    s = sc.sign() or 1
    sc.skip_ws()
    q = _scan_rational_body(sc)
    sc.skip_ws()
    if sc.pos != len(text):
        sc.error("unexpected trailing characters")
    return s * q


def parse_gaussian(text: str) -> GaussianRational:
    """Parse ``"p/q+r/s*i"`` and its abbreviations (``"i"``, ``"-3/2*i"``, ``"1-i"``)."""
    sc = _Scanner(text)
    re_part = Fraction(0)
    im_part = Fraction(0)
    seen_re = seen_im = False
    first = True
    sc.skip_ws()
    if sc.pos == len(text):
        sc.error("empty number")
    while True:
        sc.skip_ws()
        if sc.pos == len(text):
            break
        start = sc.pos
        s = sc.sign()
        if s == 0:
            if not first:
                sc.error("expected '+' or '-'")
            s = 1
        sc.skip_ws()
        if sc.peek() == "i":
            sc.pos += 1
            mag, imaginary = Fraction(1), True
        else:
            mag = _scan_rational_body(sc)
            imaginary = False
            if sc.peek() == "*":
                sc.pos += 1
                if sc.peek() != "i":
                    sc.error("expected 'i' after '*'")
                sc.pos += 1
                imaginary = True
            elif sc.peek() == "i":
                sc.pos += 1
                imaginary = True
        if imaginary:
            if seen_im:
                sc.pos = start
                sc.error("duplicate imaginary part")
            im_part, seen_im = s * mag, True
        else:
            if seen_re or seen_im:
                sc.pos = start
                sc.error("real part must come first and only once")
            re_part, seen_re = s * mag, True
        first = False
    return GaussianRational(re_part, im_part)


_FLOAT = r"[+-]?(?:\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|inf|nan)"
_COMPLEX_RE = re.compile(
    rf"^\s*(?P<re>{_FLOAT})?\s*(?:(?P<im>[+-]\s*(?:\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)?)\s*\*?\s*i)?\s*$"
)


def parse_complex(text: str) -> complex:
    """Parse a decimal ``"x+y*i"`` (either part optional) into a finite complex."""
    stripped = text.strip()
    if stripped in ("i", "+i"):
        return 1j
    if stripped == "-i":
        return -1j
    m = _COMPLEX_RE.match(text)
    if not m or (m.group("re") is None and m.group("im") is None):
        bad = 0
        while bad < len(text) and (text[bad].isdigit() or text[bad] in " +-.eE*i"):
            bad += 1
        raise ParseError("malformed complex number", text, min(bad, max(len(text) - 1, 0)))
    re_ = float(m.group("re")) if m.group("re") else 0.0
    im_txt = m.group("im")
    if im_txt is None:
        im_ = 0.0
    else:
        im_txt = im_txt.replace(" ", "")
        im_ = float(im_txt + "1") if im_txt in "+-" else float(im_txt)
    z = complex(re_, im_)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ParseError("non-finite complex number", text, 0)
    return z
