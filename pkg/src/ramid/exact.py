"""Exact scalar arithmetic: arbitrary-precision rationals and real quadratic surds.

``Rational`` is ``fractions.Fraction`` (always reduced, positive denominator),
which already carries the invariants and the ``p/q`` string format required
here.  ``Surd`` represents ``p + q*sqrt(d)`` with rational ``p``, ``q`` and a
squarefree integer radicand ``d``; normalization is eager so equality and
hashing are structural.  Everything is immutable.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, isqrt

from .errors import IncompatibleFieldError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_SURD_RE = re.compile(
    r"^(?P<p>[+-]?\d+(?:/\d+)?)\s*(?P<sign>[+-])\s*"
    r"(?P<q>\d+(?:/\d+)?)\*sqrt\((?P<d>\d+)\)$"
)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def parse_rational(text: str) -> Fraction:
    """Parse the strict ``p/q`` / ``p`` grammar (no floats, no whitespace)."""
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    return str(value)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for anything this package produces)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    # Brent's cycle variant; n must be odd, composite, > 1.
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"failed to factor {n}")


def _factor(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _factor(d, out)
    _factor(n // d, out)


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write ``n = s*s*f`` with ``f`` squarefree; return ``(f, s)``.

    ``n`` must be nonnegative; ``squarefree_decompose(0) == (0, 1)``.
    """
    if n < 0:
        raise ValueError("radicand must be nonnegative")
    if n in (0, 1):
        return n, 1
    f, s = 1, 1
    for p in range(2, 4096):
        if p * p > n:
            break
        while n % (p * p) == 0:
            n //= p * p
            s *= p
        if n % p == 0:
            n //= p
            f *= p
    if n > 1:
        r = isqrt(n)
        if r * r == n:
            s *= r
        elif is_prime(n):
            f *= n
        else:
            exponents: dict[int, int] = {}
            _factor(n, exponents)
            for p, e in exponents.items():
                s *= p ** (e // 2)
                if e % 2:
                    f *= p
    return f, s


def rational_sqrt(value: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if value < 0:
        raise ValueError("square root of a negative rational")
    rn = isqrt(value.numerator)
    if rn * rn != value.numerator:
        return None
    rd = isqrt(value.denominator)
    if rd * rd != value.denominator:
        return None
    return Fraction(rn, rd)


class Surd:
    """Immutable element ``p + q*sqrt(d)`` of a real quadratic field.

    ``d`` is kept squarefree (square parts are folded into ``q``), ``q = 0``
    forces ``d = 0``, and pure rationals embed as ``d = 0``.  Construction is
    the normalization: it is idempotent and value-preserving.
    """

    __slots__ = ("p", "q", "d")

    p: Fraction
    q: Fraction
    d: int

    def __init__(self, p: Fraction | int, q: Fraction | int = 0, d: int = 0):
        p, q, d = Fraction(p), Fraction(q), int(d)
        if d < 0:
            raise ValueError("only real quadratic fields: d must be nonnegative")
        if d == 0:
            q = Fraction(0)
        elif q == 0:
            d = 0
        else:
            f, s = squarefree_decompose(d)
            q *= s
            d = f
            if d == 1:
                p += q
                q = Fraction(0)
                d = 0
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Surd is immutable")

    @classmethod
    def from_rational(cls, value: Fraction | int) -> Surd:
        return cls(Fraction(value))

    @classmethod
    def sqrt_rational(cls, value: Fraction | int) -> Surd:
        """Exact ``sqrt(value)`` for a nonnegative rational, as a surd."""
        value = Fraction(value)
        if value < 0:
            raise ValueError("square root of a negative rational")
        # sqrt(a/b) = sqrt(a*b)/b
        return cls(0, Fraction(1, value.denominator),
                   value.numerator * value.denominator)

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def as_rational(self) -> Fraction:
        if self.q != 0:
            raise ValueError(f"{self} is irrational")
        return self.p

    def _coerce(self, other: object) -> Surd | None:
        if isinstance(other, Surd):
            return other
        if isinstance(other, (int, Fraction)):
            return Surd(Fraction(other))
        return None

    def _common_d(self, other: Surd) -> int:
        if self.d and other.d and self.d != other.d:
            raise IncompatibleFieldError(
                f"cannot mix sqrt({self.d}) with sqrt({other.d})"
            )
        return self.d or other.d

    def __add__(self, other: object) -> Surd:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        d = self._common_d(rhs)
        return Surd(self.p + rhs.p, self.q + rhs.q, d)

    __radd__ = __add__

    def __neg__(self) -> Surd:
        return Surd(-self.p, -self.q, self.d)

    def __sub__(self, other: object) -> Surd:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> Surd:
        return (-self) + other

    def __mul__(self, other: object) -> Surd:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        d = self._common_d(rhs)
        return Surd(
            self.p * rhs.p + self.q * rhs.q * d,
            self.p * rhs.q + self.q * rhs.p,
            d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> Surd:
        return Surd(self.p, -self.q, self.d)

    def norm(self) -> Fraction:
        """Field norm ``p*p - q*q*d`` (the product with the conjugate)."""
        return self.p * self.p - self.q * self.q * self.d

    def inverse(self) -> Surd:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError(f"{self} has no inverse")
        return Surd(self.p / n, -self.q / n, self.d)

    def __truediv__(self, other: object) -> Surd:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        self._common_d(rhs)
        return self * rhs.inverse()

    def __rtruediv__(self, other: object) -> Surd:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs * self.inverse()

    def sign(self) -> int:
        """Exact sign of ``p + q*sqrt(d)``: compares p*p against q*q*d."""
        if self.q == 0:
            return (self.p > 0) - (self.p < 0)
        if self.p == 0:
            return 1 if self.q > 0 else -1
        if self.p > 0 and self.q > 0:
            return 1
        if self.p < 0 and self.q < 0:
            return -1
        lhs, rhs = self.p * self.p, self.q * self.q * self.d
        if lhs == rhs:
            return 0
        # Signs differ, so the larger square decides.
        if self.p > 0:
            return 1 if lhs > rhs else -1
        return -1 if lhs > rhs else 1

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return (self.p, self.q, self.d) == (rhs.p, rhs.q, rhs.d)

    def __hash__(self) -> int:
        if self.q == 0:
            return hash(self.p)
        return hash((self.p, self.q, self.d))

    def __lt__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs).sign() < 0

    def __le__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs).sign() <= 0

    def __gt__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs).sign() > 0

    def __ge__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs).sign() >= 0

    def __bool__(self) -> bool:
        return self.p != 0 or self.q != 0

    def __float__(self) -> float:
        return float(self.p) + float(self.q) * self.d ** 0.5

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p)
        sign = "-" if self.q < 0 else "+"
        return f"{self.p} {sign} {abs(self.q)}*sqrt({self.d})"

    def __repr__(self) -> str:
        return f"Surd({self.p!r}, {self.q!r}, {self.d})"


def parse_surd(text: str) -> Surd:
    """Inverse of ``str(Surd)``; also accepts a bare rational literal."""
    text = text.strip()
    if _RATIONAL_RE.match(text):
        return Surd(Fraction(text))
    m = _SURD_RE.match(text)
    if not m:
        raise ValueError(f"not a surd literal: {text!r}")
    q = Fraction(m.group("q"))
    if m.group("sign") == "-":
        q = -q
    return Surd(Fraction(m.group("p")), q, int(m.group("d")))


def surd_mul(a: Surd, b: Surd) -> Surd:
    return a * b


def surd_normalize(p: Fraction | int, q: Fraction | int, d: int) -> Surd:
    """Normalize raw components (radicand not necessarily squarefree)."""
    return Surd(p, q, d)
