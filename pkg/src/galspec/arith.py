"""Exact rationals, p-adic valuations and points of the projective line over Q.

Rationals are plain :class:`fractions.Fraction` values.  The point at infinity
is the canonical :class:`ProjPoint` ``(1, 0)``; reductions into P^1(F_p) return
either an ``int`` in ``range(p)`` or the singleton :data:`INFINITY`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

__all__ = [
    "INFINITY", "PLUS_INF", "MINUS_INF", "ExtendedValuation", "ProjPoint",
    "is_prime", "primes_up_to", "parse_rational", "parse_point",
    "padic_valuation", "proj_normalize", "proj_reduce_mod_p", "residue_sort_key",
]


class _Infinity:
    """The point at infinity of P^1(F_p)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


@total_ordering
class ExtendedValuation:
    """A symbolic +inf / -inf valuation.

    Comparable with integers, but deliberately not usable in arithmetic.
    """

    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = 1 if sign > 0 else -1

    def __eq__(self, other):
        if isinstance(other, ExtendedValuation):
            return self.sign == other.sign
        if isinstance(other, int):
            return False
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, ExtendedValuation):
            return self.sign < other.sign
        if isinstance(other, int):
            return self.sign < 0
        return NotImplemented

    def __hash__(self):
        return hash(("extval", self.sign))

    def __repr__(self):
        return "PLUS_INF" if self.sign > 0 else "MINUS_INF"

    def __str__(self):
        return "+inf" if self.sign > 0 else "-inf"


PLUS_INF = ExtendedValuation(1)
MINUS_INF = ExtendedValuation(-1)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    if n < 41 * 41:
        return True
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
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


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")


def primes_up_to(bound: int) -> list[int]:
    """All primes ``<= bound`` (sieve of Eratosthenes)."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytes(len(range(i * i, bound + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


@dataclass(frozen=True)
class ProjPoint:
    """A point ``(a : b)`` of P^1(Q) in lowest terms with ``b >= 0``.

    Use :func:`proj_normalize` (or :meth:`of`) to build one from arbitrary input.
    """

    a: int
    b: int

    def __post_init__(self):
        if (self.a, self.b) == (0, 0):
            raise ValueError("(0, 0) is not a projective point")
        if self.b < 0 or math.gcd(self.a, self.b) != 1 or (self.b == 0 and self.a != 1):
            raise ValueError(f"({self.a}, {self.b}) is not normalized; use proj_normalize")

    @classmethod
    def of(cls, x) -> "ProjPoint":
        if isinstance(x, ProjPoint):
            return x
        if x is INFINITY:
            return cls(1, 0)
        x = Fraction(x)
        return cls(x.numerator, x.denominator)

    @property
    def is_infinite(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if self.is_infinite:
            raise ValueError("the point at infinity has no rational value")
        return Fraction(self.a, self.b)

    def __str__(self):
        if self.is_infinite:
            return "inf"
        return str(self.a) if self.b == 1 else f"{self.a}/{self.b}"


def proj_normalize(a: int, b: int) -> ProjPoint:
    if a == 0 and b == 0:
        raise ValueError("(0, 0) is not a projective point")
    if b == 0:
        return ProjPoint(1, 0)
    g = math.gcd(a, b)
    a, b = a // g, b // g
    if b < 0:
        a, b = -a, -b
    return ProjPoint(a, b)


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or ``"a"`` into a Fraction."""
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def parse_point(text: str) -> ProjPoint:
    """Like :func:`parse_rational`, but ``"inf"`` gives the point at infinity."""
    if text.strip().lower() in ("inf", "infinity", "∞"):
        return ProjPoint(1, 0)
    return ProjPoint.of(parse_rational(text))


def _vp_int(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_valuation(x, p: int):
    """v_p(x) for a rational or projective point; +inf at 0, -inf at infinity."""
    _require_prime(p)
    if x is INFINITY or (isinstance(x, ProjPoint) and x.is_infinite):
        return MINUS_INF
    if isinstance(x, ProjPoint):
        x = x.to_fraction()
    x = Fraction(x)
    if x == 0:
        return PLUS_INF
    return _vp_int(abs(x.numerator), p) - _vp_int(x.denominator, p)


def proj_reduce_mod_p(t, p: int):
    """Reduce a point of P^1(Q) into P^1(F_p): an int residue or INFINITY."""
    _require_prime(p)
    t = ProjPoint.of(t)
    b = t.b % p
    if b == 0:
        return INFINITY
    return t.a * pow(b, -1, p) % p


def residue_sort_key(r):
    """Sort key placing INFINITY after every finite residue."""
    return (1, 0) if r is INFINITY else (0, r)
