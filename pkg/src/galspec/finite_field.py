"""Polynomials over prime fields and Frobenius cycle types.

Only factor *degrees* are ever computed (distinct-degree factorization); the
degree pattern of a squarefree reduction is, by Dedekind's theorem, the cycle
type of a Frobenius element.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import is_prime
from .poly import BiPoly, UniPoly, eval_t, resultant

__all__ = [
    "FpPoly", "FpBiPoly", "CycleType", "fp_gcd", "squarefree_part_fp",
    "distinct_degree_pattern", "cycle_type_at", "has_root_mod_p",
    "format_cycle_type", "parse_cycle_type",
]

CycleType = tuple  # sorted tuple of positive ints, e.g. (2, 3)


def format_cycle_type(ct: Sequence[int]) -> str:
    return "[" + ",".join(str(d) for d in sorted(ct)) + "]"


def parse_cycle_type(text: str) -> CycleType:
    body = text.strip().strip("[]")
    return tuple(sorted(int(x) for x in body.split(",") if x.strip()))


@dataclass(frozen=True)
class FpPoly:
    """Polynomial over F_p, coefficients in ``range(p)``, constant term first."""

    modulus: int
    coeffs: tuple = ()
    var: str = field(default="Y", compare=False)

    def __post_init__(self):
        p = self.modulus
        c = [x % p for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_rational(cls, p: int, coeffs: Iterable, var: str = "Y") -> "FpPoly":
        if not is_prime(p):
            raise ValueError(f"{p} is not a prime")
        out = []
        for c in coeffs:
            c = Fraction(c)
            if c.denominator % p == 0:
                raise ZeroDivisionError(f"denominator of {c} is divisible by {p}")
            out.append(c.numerator * pow(c.denominator, -1, p))
        return cls(p, tuple(out), var)

    @classmethod
    def x(cls, p: int) -> "FpPoly":
        return cls(p, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.modulus
        return acc

    def __eq__(self, other):
        if isinstance(other, FpPoly):
            return self.modulus == other.modulus and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == FpPoly(self.modulus, (other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.modulus, self.coeffs))

    def _coerce(self, other) -> "FpPoly":
        if isinstance(other, FpPoly):
            if other.modulus != self.modulus:
                raise ValueError("modulus mismatch")
            return other
        if isinstance(other, int):
            return FpPoly(self.modulus, (other,))
        raise TypeError(f"cannot combine FpPoly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return FpPoly(self.modulus, tuple(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return FpPoly(self.modulus, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return FpPoly(self.modulus, tuple(c * other for c in self.coeffs))
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return FpPoly(self.modulus)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return FpPoly(self.modulus, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = FpPoly(self.modulus, (1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "FpPoly") -> tuple["FpPoly", "FpPoly"]:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.modulus
        r = list(self.coeffs)
        dq = len(r) - len(other.coeffs)
        if dq < 0:
            return FpPoly(p), self
        inv = pow(other.lc, -1, p)
        q = [0] * (dq + 1)
        db = other.degree
        for k in range(dq, -1, -1):
            coef = r[k + db] * inv % p
            q[k] = coef
            if coef:
                for j, b in enumerate(other.coeffs):
                    r[k + j] = (r[k + j] - coef * b) % p
        return FpPoly(p, tuple(q)), FpPoly(p, tuple(r[:db]))

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exquo(self, other) -> "FpPoly":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "FpPoly":
        if self.is_zero():
            return self
        return self * pow(self.lc, -1, self.modulus)

    def derivative(self) -> "FpPoly":
        return FpPoly(self.modulus, tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def powmod(self, n: int, mod: "FpPoly") -> "FpPoly":
        """self^n mod ``mod`` by repeated squaring."""
        result = FpPoly(self.modulus, (1,)) % mod
        base = self % mod
        while n:
            if n & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            n >>= 1
        return result

    def is_squarefree(self) -> bool:
        if self.is_zero():
            raise ValueError("zero polynomial")
        return fp_gcd(self, self.derivative()).degree == 0

    def __str__(self):
        from .poly import format_unipoly
        return format_unipoly(UniPoly(self.coeffs), self.var) + f" (mod {self.modulus})"


def fp_gcd(f: FpPoly, g: FpPoly) -> FpPoly:
    """Monic gcd over F_p."""
    if f.modulus != g.modulus:
        raise ValueError("modulus mismatch")
    while g:
        f, g = g, f % g
    return f.monic()


def _pth_root(f: FpPoly) -> FpPoly:
    # f' == 0 means f(Y) = g(Y^p); over F_p, g(Y^p) = g(Y)^p
    p = f.modulus
    return FpPoly(p, f.coeffs[::p])


def squarefree_part_fp(f: FpPoly) -> FpPoly:
    """Product of the distinct monic irreducible factors of f."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    f = f.monic()
    if f.degree <= 0:
        return f
    d = f.derivative()
    if d.is_zero():
        return squarefree_part_fp(_pth_root(f))
    g = fp_gcd(f, d)
    if g.degree == 0:
        return f
    # f / g holds every factor whose multiplicity is prime to p; the
    # remaining ones survive in g with a vanishing derivative component.
    h = f // g
    rest = g
    while True:
        common = fp_gcd(rest, h)
        if common.degree == 0:
            break
        rest = rest // common
    if rest.degree <= 0:
        return h
    return _lcm(h, squarefree_part_fp(rest))


def _lcm(a: FpPoly, b: FpPoly) -> FpPoly:
    return (a * b // fp_gcd(a, b)).monic()


def distinct_degree_pattern(f: FpPoly) -> CycleType:
    """Sorted degrees of the irreducible factors of a squarefree polynomial."""
    if f.is_zero() or f.degree < 1:
        raise ValueError("need a polynomial of positive degree")
    if not f.is_squarefree():
        raise ValueError("distinct_degree_pattern needs a squarefree polynomial")
    p = f.modulus
    f = f.monic()
    parts: list[int] = []
    x = FpPoly.x(p)
    frob = x
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        frob = frob.powmod(p, f)
        g = fp_gcd(f, frob - x)
        if g.degree > 0:
            parts.extend([d] * (g.degree // d))
            f = f // g
            frob = frob % f
    if f.degree > 0:
        parts.append(f.degree)
    return tuple(sorted(parts))


def cycle_type_at(P: BiPoly, t0, q: int) -> CycleType | None:
    """Frobenius cycle type of P(t0, Y) at q, or ``None`` (skip) at a bad prime."""
    t0 = Fraction(t0)
    if not is_prime(q):
        raise ValueError(f"{q} is not a prime")
    if t0.denominator % q == 0:
        return None
    f = eval_t(P, t0)
    try:
        fq = FpPoly.from_rational(q, f.coeffs)
    except ZeroDivisionError:
        return None
    if not fq.is_squarefree():
        return None
    return distinct_degree_pattern(fq)


def has_root_mod_p(f: UniPoly, p: int) -> bool:
    """Does f have a root in F_p?"""
    fp = FpPoly.from_rational(p, f.coeffs)
    if fp.is_zero():
        raise ValueError(f"polynomial vanishes modulo {p}")
    if fp.degree <= 0:
        return False
    if p <= 64:
        return any(fp(x) == 0 for x in range(p))
    x = FpPoly.x(p)
    return fp_gcd(fp, x.powmod(p, fp) - x).degree > 0


@dataclass(frozen=True)
class FpBiPoly:
    """P(T, Y) over F_p: Y-coefficients are FpPoly objects in T."""

    modulus: int
    y_coeffs: tuple[FpPoly, ...]

    @property
    def y_degree(self) -> int:
        return len(self.y_coeffs) - 1

    def terms(self) -> dict[tuple[int, int], int]:
        return {(i, j): c for i, col in enumerate(self.y_coeffs) for j, c in enumerate(col.coeffs) if c}

    def discriminant_y(self) -> FpPoly:
        """(-1)^(n(n-1)/2) Res_Y(P, dP/dY) / lc, computed over F_p[T]."""
        n = self.y_degree
        if n < 2:
            raise ValueError("discriminant needs Y-degree >= 2")
        deriv = [c * i for i, c in enumerate(self.y_coeffs)][1:]
        if all(c.is_zero() for c in deriv):
            # p divides every exponent: P is inseparable in Y
            return FpPoly(self.modulus, (), "T")
        res = resultant(list(self.y_coeffs), deriv)
        res = res.exquo(self.y_coeffs[-1])
        if (n * (n - 1) // 2) % 2:
            res = -res
        return FpPoly(self.modulus, res.coeffs, "T")

    def __str__(self):
        from .poly import format_terms
        return format_terms(self.terms()) + f" (mod {self.modulus})"
