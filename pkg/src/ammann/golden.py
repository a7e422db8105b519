"""Exact arithmetic in the golden field Q(phi).

Elements are stored as a + b*phi with Fraction coefficients, where phi is
the positive root of phi**2 = phi + 1.  All comparisons are decided by
rational case analysis; floats never influence a result.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering

_SQRT5 = 5 ** 0.5
PHI_FLOAT = (1 + _SQRT5) / 2
PHI_CONJ_FLOAT = (1 - _SQRT5) / 2

_RationalLike = int | Fraction


def sign_pair(a, b) -> int:
    """Sign of a + b*phi for exact rational a, b, without floats.

    a + b*phi = ((2a + b) + b*sqrt(5)) / 2, so compare (2a+b)**2 against
    5*b**2 with case analysis on the signs of the two terms.
    """
    s = 2 * a + b
    if s >= 0 and b >= 0:
        return 1 if (s != 0 or b != 0) else 0
    if s <= 0 and b <= 0:
        return -1
    # opposite signs: s^2 == 5 b^2 is impossible for rationals unless both vanish
    if s > 0:
        return 1 if s * s > 5 * b * b else -1
    return 1 if 5 * b * b > s * s else -1


@total_ordering
class GoldenRational:
    """An element a + b*phi of Q(phi) in canonical reduced form."""

    __slots__ = ("_a", "_b")

    def __init__(self, a: _RationalLike = 0, b: _RationalLike = 0) -> None:
        self._a = a if type(a) is Fraction else Fraction(a)
        self._b = b if type(b) is Fraction else Fraction(b)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @classmethod
    def from_int(cls, n: int) -> GoldenRational:
        return cls(n, 0)

    def __repr__(self) -> str:
        return f"GoldenRational({self._a!r}, {self._b!r})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        phi_part = "phi" if abs(self._b) == 1 else f"{abs(self._b)}*phi"
        sign = "-" if self._b < 0 else "+"
        if self._a == 0:
            return phi_part if self._b > 0 else f"-{phi_part}"
        return f"{self._a} {sign} {phi_part}"

    def __eq__(self, other: object) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._a == other._a and self._b == other._b

    def __hash__(self) -> int:
        # rational values hash like their Fraction so x == n implies equal hashes
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __lt__(self, other: object) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() < 0

    def __add__(self, other) -> GoldenRational:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GoldenRational(self._a + other._a, self._b + other._b)

    __radd__ = __add__

    def __neg__(self) -> GoldenRational:
        return GoldenRational(-self._a, -self._b)

    def __sub__(self, other) -> GoldenRational:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GoldenRational(self._a - other._a, self._b - other._b)

    def __rsub__(self, other) -> GoldenRational:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> GoldenRational:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        # (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi  via phi^2 = phi + 1
        a, b, c, d = self._a, self._b, other._a, other._b
        bd = b * d
        return GoldenRational(a * c + bd, a * d + b * c + bd)

    __rmul__ = __mul__

    def __truediv__(self, other) -> GoldenRational:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> GoldenRational:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> GoldenRational:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def conj(self) -> GoldenRational:
        """Galois conjugate: phi maps to 1 - phi."""
        return GoldenRational(self._a + self._b, -self._b)

    def field_norm(self) -> Fraction:
        """Rational norm x * conj(x) = a^2 + ab - b^2."""
        return self._a * self._a + self._a * self._b - self._b * self._b

    def inverse(self) -> GoldenRational:
        n = self.field_norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(phi)")
        c = self.conj()
        return GoldenRational(c._a / n, c._b / n)

    def sign(self) -> int:
        return sign_pair(self._a, self._b)

    def is_rational(self) -> bool:
        return self._b == 0

    def is_integer(self) -> bool:
        return self._b == 0 and self._a.denominator == 1

    def embed(self) -> tuple[float, float]:
        """Float values at the two real embeddings (phi and 1 - phi)."""
        a, b = float(self._a), float(self._b)
        return (a + b * PHI_FLOAT, a + b * PHI_CONJ_FLOAT)

    def __float__(self) -> float:
        return self.embed()[0]

    def floor(self) -> int:
        """Largest integer n with n <= a + b*phi, decided exactly."""
        try:
            n = math.floor(float(self))
        except (OverflowError, ValueError):
            n = 0
        while sign_pair(self._a - n, self._b) < 0:
            n -= 1
        while sign_pair(self._a - (n + 1), self._b) >= 0:
            n += 1
        return n

    def to_json(self) -> list[int]:
        """Four-integer serialized form [a_num, a_den, b_num, b_den]."""
        return [
            self._a.numerator,
            self._a.denominator,
            self._b.numerator,
            self._b.denominator,
        ]

    @classmethod
    def from_json(cls, data) -> GoldenRational:
        if len(data) != 4 or not all(isinstance(v, int) for v in data):
            raise ValueError(f"golden number must be four integers, got {data!r}")
        an, ad, bn, bd = data
        if ad <= 0 or bd <= 0:
            raise ValueError("golden number denominators must be positive")
        return cls(Fraction(an, ad), Fraction(bn, bd))


def _coerce(x) -> GoldenRational | None:
    if isinstance(x, GoldenRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GoldenRational(x, 0)
    return None


ZERO = GoldenRational(0, 0)
ONE = GoldenRational(1, 0)
PHI = GoldenRational(0, 1)
PHI_INV = GoldenRational(-1, 1)  # 1/phi = phi - 1
SIGMA_SQ = GoldenRational(3, -1)  # squared tiling edge length, 1 + 1/phi^2
