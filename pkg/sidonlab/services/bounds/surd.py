"""Exact numbers of the form p + q*sqrt(2) with rational p, q"""

from decimal import Decimal, localcontext
from fractions import Fraction
from functools import total_ordering
from typing import Union

Rational = Union[int, Fraction]


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@total_ordering
class Surd:
    """p + q*sqrt(2); comparisons square once and never touch floats"""

    __slots__ = ("p", "q")

    def __init__(self, p: Rational = 0, q: Rational = 0):
        self.p = Fraction(p)
        self.q = Fraction(q)

    @classmethod
    def pow2_half(cls, e: int) -> "Surd":
        """2^(e/2) for any integer e"""

        if e % 2 == 0:
            return cls(Fraction(2) ** (e // 2))
        return cls(0, Fraction(2) ** ((e - 1) // 2))

    @staticmethod
    def _coerce(other: object) -> "Surd":
        if isinstance(other, Surd):
            return other
        if isinstance(other, (int, Fraction)):
            return Surd(other)
        raise TypeError(f"cannot combine Surd with {type(other).__name__}")

    def sign(self) -> int:
        sp, sq = _sign(self.p), _sign(self.q)
        if sq == 0 or sp == sq:
            return sp or sq
        if sp == 0:
            return sq
        # opposite signs: compare p^2 with 2 q^2
        return sp * _sign(self.p * self.p - 2 * self.q * self.q)

    def __add__(self, other: object) -> "Surd":
        o = self._coerce(other)
        return Surd(self.p + o.p, self.q + o.q)

    __radd__ = __add__

    def __neg__(self) -> "Surd":
        return Surd(-self.p, -self.q)

    def __sub__(self, other: object) -> "Surd":
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> "Surd":
        return self._coerce(other) - self

    def __mul__(self, other: object) -> "Surd":
        o = self._coerce(other)
        return Surd(self.p * o.p + 2 * self.q * o.q, self.p * o.q + self.q * o.p)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        try:
            return (self - other).sign() == 0
        except TypeError:
            return NotImplemented

    def __lt__(self, other: object) -> bool:
        return (self - other).sign() < 0

    def __hash__(self) -> int:
        return hash((self.p, self.q))

    def to_decimal(self, digits: int = 50) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = digits
            root2 = Decimal(2).sqrt()
            p = Decimal(self.p.numerator) / Decimal(self.p.denominator)
            q = Decimal(self.q.numerator) / Decimal(self.q.denominator)
            return p + q * root2

    def __repr__(self) -> str:
        return f"Surd({self.p} + {self.q}*sqrt(2))"
