"""Exact complex-rational scalars.

``QQi`` is a Gaussian rational ``re + i*im`` with ``gmpy2.mpq`` parts.  It
mixes freely with ints and rationals (result stays exact) and with Python
floats/complex (result degrades to ``complex``).  Every operator, symbol and
self-map in the package stores either ``QQi`` values or plain ``complex``.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

__all__ = ["QQi", "Q", "as_scalar", "is_exact", "parse_number", "dump_number"]

_RATIONAL_TYPES = (int, Fraction, type(mpq(0)))


class QQi:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = mpq(re)
        self.im = mpq(im)

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, QQi):
            return other
        if isinstance(other, (int, Rational)) or isinstance(other, _RATIONAL_TYPES):
            return cls(other)
        return None

    def __add__(self, other):
        o = QQi._coerce(other)
        if o is None:
            return complex(self) + other
        return QQi(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = QQi._coerce(other)
        if o is None:
            return complex(self) - other
        return QQi(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = QQi._coerce(other)
        if o is None:
            return other - complex(self)
        return QQi(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = QQi._coerce(other)
        if o is None:
            return complex(self) * other
        if not o.im:
            return QQi(self.re * o.re, self.im * o.re)
        if not self.im:
            return QQi(self.re * o.re, self.re * o.im)
        return QQi(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = QQi._coerce(other)
        if o is None:
            return complex(self) / other
        d = o.re * o.re + o.im * o.im
        if not d:
            raise ZeroDivisionError("QQi division by zero")
        return QQi((self.re * o.re + self.im * o.im) / d, (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, other):
        o = QQi._coerce(other)
        if o is None:
            return other / complex(self)
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are exact")
        result, base = QQi(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __neg__(self):
        return QQi(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self):
        return QQi(self.re, -self.im)

    def abs2(self):
        """|z|^2 as an exact rational."""
        return self.re * self.re + self.im * self.im

    def __abs__(self):
        return abs(complex(self))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = QQi._coerce(other)
        if o is None:
            try:
                return complex(self) == complex(other)
            except TypeError:
                return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(Fraction(int(self.re.numerator), int(self.re.denominator)))
        return hash((self.re, self.im))

    def __repr__(self):
        if not self.im:
            return f"QQi({self.re})"
        return f"QQi({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


def Q(p, q=1) -> QQi:
    """The exact rational p/q as a QQi (note: ``QQi(p, q)`` means p + q*i)."""
    return QQi(mpq(p, q))


def is_exact(x) -> bool:
    return isinstance(x, QQi) or isinstance(x, _RATIONAL_TYPES) or isinstance(x, Rational)


def as_scalar(x):
    """Return ``x`` as ``QQi`` when it is exact, otherwise as ``complex``."""
    if isinstance(x, QQi):
        return x
    o = QQi._coerce(x)
    if o is not None:
        return o
    return complex(x)


def _parse_real(obj):
    if isinstance(obj, dict):
        return mpq(int(obj["num"]), int(obj.get("den", 1)))
    if isinstance(obj, int):
        return mpq(obj)
    if isinstance(obj, str):
        return mpq(Fraction(obj))
    return float(obj)


def parse_number(obj):
    """Decode the JSON number formats used in experiment files.

    Accepted: int, ``{"num": p, "den": q}``, ``"p/q"``, ``{"re": x, "im": y}``
    with rational parts, or plain floats (which yield an inexact ``complex``).
    """
    if isinstance(obj, dict) and ("re" in obj or "im" in obj):
        re = _parse_real(obj.get("re", 0))
        im = _parse_real(obj.get("im", 0))
        if isinstance(re, float) or isinstance(im, float):
            return complex(float(re), float(im))
        return QQi(re, im)
    v = _parse_real(obj)
    return complex(v) if isinstance(v, float) else QQi(v)


def _dump_real(q):
    return {"num": int(q.numerator), "den": int(q.denominator)}


def dump_number(x):
    """Inverse of :func:`parse_number` (exact values keep numerator/denominator)."""
    x = as_scalar(x)
    if isinstance(x, QQi):
        return {"re": _dump_real(x.re), "im": _dump_real(x.im)}
    return {"re": x.real, "im": x.imag}

