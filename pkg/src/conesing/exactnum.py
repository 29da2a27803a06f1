"""Exact arithmetic in real quadratic extensions of the rationals.

A :class:`QuadNum` stores a value ``a + b*sqrt(d)`` with ``a``, ``b``
rational and ``d`` a square-free non-negative integer.  All arithmetic,
comparisons, floors and ceilings are decided by integer arithmetic alone;
floating point is used only for display.  Rational values are canonically
encoded as ``b == 0 and d == 0``, so ``x.is_rational`` is a structural test.

Every computation lives in a single ambient field Q(sqrt(d)): combining
values from two different irrational fields raises :class:`MixedFieldsError`
instead of silently embedding into a biquadratic extension.
"""

from __future__ import annotations

import decimal
import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

Rat = Fraction


class MixedFieldsError(ValueError):
    """Arithmetic attempted between members of distinct quadratic fields."""


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Split ``n >= 1`` as ``square * squarefree`` by trial division.

    Returns ``(m*m, d)`` with ``n == m*m * d`` and ``d`` square-free.
    """
    if n < 1:
        raise ValueError(f"need a positive integer, got {n}")
    square, free = 1, 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            square *= p ** (2 * (e // 2))
            if e % 2:
                free *= p
        p += 1 if p == 2 else 2
    free *= m  # leftover factor is prime or 1
    return square, free


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected a rational, got {type(x).__name__}")


def _sgn(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class QuadNum:
    """The real number ``a + b*sqrt(d)``, kept in canonical form.

    Canonical form: ``d`` square-free and non-negative, and ``d == 0``
    exactly when ``b == 0``.  The constructor normalizes any square factor
    of ``d`` into ``b`` and folds ``d in (0, 1)`` into the rational part.
    """

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 0

    def __post_init__(self) -> None:
        a = _as_fraction(self.a)
        b = _as_fraction(self.b)
        d = self.d
        if not isinstance(d, int) or d < 0:
            raise ValueError(f"field discriminant must be a non-negative integer, got {d!r}")
        if d == 0 or b == 0:
            b, d = Fraction(0), 0
        else:
            square, d = squarefree_decompose(d)
            b *= isqrt(square)
            if d == 1:
                a, b, d = a + b, Fraction(0), 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    # -- field bookkeeping -------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.d == 0

    def _coerce(self, other) -> "QuadNum":
        if isinstance(other, QuadNum):
            return other
        return QuadNum(_as_fraction(other))

    def _merge_field(self, other: "QuadNum") -> int:
        if self.d == 0:
            return other.d
        if other.d == 0 or other.d == self.d:
            return self.d
        raise MixedFieldsError(f"cannot combine Q(√{self.d}) with Q(√{other.d})")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "QuadNum":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        d = self._merge_field(o)
        return QuadNum(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self) -> "QuadNum":
        return QuadNum(-self.a, -self.b, self.d)

    def __sub__(self, other) -> "QuadNum":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "QuadNum":
        return (-self) + other

    def __mul__(self, other) -> "QuadNum":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        d = self._merge_field(o)
        return QuadNum(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadNum":
        return QuadNum(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm ``a**2 - b**2 * d``; always rational."""
        return self.a * self.a - self.b * self.b * self.d

    def inverse(self) -> "QuadNum":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadNum(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other) -> "QuadNum":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        self._merge_field(o)
        return self * o.inverse()

    def __rtruediv__(self, other) -> "QuadNum":
        return self.inverse() * other

    # -- exact order -------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of ``a + b*sqrt(d)``, by comparing ``a**2`` with ``b**2*d``."""
        a, b, d = self.a, self.b, self.d
        if b == 0:
            return _sgn(a)
        if a == 0:
            return _sgn(b)
        sa, sb = _sgn(a), _sgn(b)
        if sa == sb:
            return sa
        lhs, rhs = a * a, b * b * d
        if lhs == rhs:
            return 0
        return sa if lhs > rhs else sb

    def __eq__(self, other) -> bool:
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return (self.a, self.b, self.d) == (o.a, o.b, o.d)

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __lt__(self, other) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - other).sign() >= 0

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    # -- floor / ceiling ---------------------------------------------------

    def floor(self) -> int:
        """Greatest integer <= value, via integer-sqrt bracketing of sqrt(d)."""
        if self.b == 0:
            return math.floor(self.a)
        # |b*sqrt(d)| = sqrt(b^2 d) = sqrt(p*q)/q for b^2 d = p/q
        r = self.b * self.b * self.d
        p, q = r.numerator, r.denominator
        u = isqrt(p * q)
        hi = Fraction(u + 1, q) if self.b > 0 else Fraction(-u, q)
        n = math.floor(self.a + hi)
        if (self - n).sign() < 0:
            n -= 1
        # b != 0 means the value is irrational, so both inequalities are strict
        assert (self - n).sign() > 0 and (self - (n + 1)).sign() < 0
        return n

    def ceil(self) -> int:
        """Least integer >= value."""
        return -(-self).floor()

    # -- display and serialization ----------------------------------------

    def approx(self, digits: int = 50) -> decimal.Decimal:
        """Decimal approximation good to ``digits`` significant digits."""
        with decimal.localcontext() as ctx:
            ctx.prec = digits + 10
            val = decimal.Decimal(self.a.numerator) / self.a.denominator
            if self.d:
                root = decimal.Decimal(self.d).sqrt()
                val += decimal.Decimal(self.b.numerator) / self.b.denominator * root
            ctx.prec = digits
            return +val

    def approx6(self) -> str:
        """Fixed 6-decimal rendering used throughout reports; display only."""
        q = self.approx(30).quantize(decimal.Decimal("0.000001"), rounding=decimal.ROUND_HALF_EVEN)
        return str(q)

    def render(self) -> str:
        if self.is_rational:
            return f"{self.a} ≈ {self.approx6()}"
        return f"({self.a} + {self.b}·√{self.d}) ≈ {self.approx6()}"

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.a)
        return f"({self.a} + {self.b}·√{self.d})"

    def __repr__(self) -> str:
        return f"QuadNum({self.a!r}, {self.b!r}, {self.d})"

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "d": self.d}

    @classmethod
    def from_json(cls, obj: dict) -> "QuadNum":
        return cls(Fraction(obj["a"]), Fraction(obj["b"]), int(obj["d"]))

    @classmethod
    def from_rational(cls, x) -> "QuadNum":
        return cls(_as_fraction(x))
