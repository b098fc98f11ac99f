"""Exact numbers of the form sign * sqrt(q), q a non-negative rational."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


class IncompatibleSqrt(ArithmeticError):
    """Addition of two square roots whose radicands do not differ by a rational square."""


def rational_sqrt(q: Fraction) -> Fraction | None:
    """sqrt(q) when it is rational, else None."""
    q = Fraction(q)
    if q < 0:
        return None
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _square_split(n: int) -> tuple[int, int]:
    """n = s**2 * f with f square-free; returns (s, f)."""
    s, f, d = 1, 1, 2
    while d * d <= n:
        while n % (d * d) == 0:
            n //= d * d
            s *= d
        if n % d == 0:
            n //= d
            f *= d
        d += 1
    return s, f * n


class SqrtRational:
    __slots__ = ("sign", "radicand")

    def __init__(self, sign: int, radicand) -> None:
        radicand = Fraction(radicand)
        if radicand < 0:
            raise ValueError("radicand must be non-negative")
        if sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or +1")
        if (sign == 0) != (radicand == 0):
            raise ValueError("sign is 0 exactly when the radicand is 0")
        self.sign = sign
        self.radicand = radicand

    @classmethod
    def from_rational(cls, x) -> SqrtRational:
        x = Fraction(x)
        return cls((x > 0) - (x < 0), x * x)

    @classmethod
    def sqrt(cls, q) -> SqrtRational:
        q = Fraction(q)
        return cls(1 if q else 0, q)

    @classmethod
    def zero(cls) -> SqrtRational:
        return cls(0, 0)

    def __bool__(self) -> bool:
        return self.sign != 0

    @property
    def square(self) -> Fraction:
        """Signed square: sign * radicand."""
        return self.sign * self.radicand

    def is_rational(self) -> bool:
        return rational_sqrt(self.radicand) is not None

    def __neg__(self) -> SqrtRational:
        return SqrtRational(-self.sign, self.radicand)

    def __mul__(self, other) -> SqrtRational:
        if not isinstance(other, SqrtRational):
            other = SqrtRational.from_rational(other)
        return SqrtRational(self.sign * other.sign, self.radicand * other.radicand)

    __rmul__ = __mul__

    def __add__(self, other) -> SqrtRational:
        if not isinstance(other, SqrtRational):
            other = SqrtRational.from_rational(other)
        if not self:
            return other
        if not other:
            return self
        ratio = rational_sqrt(other.radicand / self.radicand)
        if ratio is None:
            raise IncompatibleSqrt(f"cannot add {self} and {other}")
        factor = self.sign + other.sign * ratio
        return SqrtRational.from_rational(factor) * SqrtRational(1, self.radicand)

    __radd__ = __add__

    def __sub__(self, other) -> SqrtRational:
        return self + (-other)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SqrtRational.from_rational(other)
        if not isinstance(other, SqrtRational):
            return NotImplemented
        return self.sign == other.sign and self.radicand == other.radicand

    def __hash__(self) -> int:
        return hash((self.sign, self.radicand))

    def __float__(self) -> float:
        return self.sign * float(self.radicand) ** 0.5

    def canonical(self) -> tuple[int, Fraction, Fraction]:
        """(sign, rational prefactor r, square-free radicand f) with value sign * r * sqrt(f)."""
        if not self:
            return 0, Fraction(0), Fraction(0)
        q = self.radicand
        # sqrt(n/d) = sqrt(n d) / d
        s, f = _square_split(q.numerator * q.denominator)
        return self.sign, Fraction(s, q.denominator), Fraction(f)

    def __str__(self) -> str:
        sign, r, f = self.canonical()
        if sign == 0:
            return "0"
        head = "-" if sign < 0 else ""
        if f == 1:
            return f"{head}{r}"
        return f"{head}{r}*sqrt({f})" if r != 1 else f"{head}sqrt({f})"

    def __repr__(self) -> str:
        return f"SqrtRational({self.sign}, {self.radicand!s})"

    def to_json(self) -> dict:
        q = self.radicand
        return {"sign": self.sign, "radicand": f"{q.numerator}/{q.denominator}"}

    @classmethod
    def from_json(cls, obj: dict) -> SqrtRational:
        return cls(int(obj["sign"]), Fraction(obj["radicand"]))
