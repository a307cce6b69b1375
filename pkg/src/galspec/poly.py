"""Dense univariate and bivariate polynomials with exact coefficients.

``UniPoly`` covers both Z[x] and Q[x] (coefficients are ``int`` or
``Fraction``, constant term first).  ``BiPoly`` is a monic-in-Y polynomial
whose Y-coefficients are ``UniPoly`` objects in T.

Resultants are computed by the subresultant PRS over whatever coefficient
ring the inputs live in: Z, Q, Z[T] (``UniPoly``) or F_p[T] (``FpPoly``).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

__all__ = [
    "UniPoly", "BiPoly", "resultant", "discriminant_y", "discriminant_uni",
    "eval_t", "derivative_y", "content", "primitive_part", "is_separable",
    "squarefree_decomposition", "reduce_mod_p", "poly_gcd", "parse_bipoly",
    "parse_unipoly",
]


def _trim(coeffs: Iterable) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _normalize_scalar(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial, coefficients constant-term first.

    ``var`` is only used for printing and does not take part in equality.
    """

    coeffs: tuple = ()
    var: str = field(default="x", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(_normalize_scalar(c) for c in self.coeffs))

    @classmethod
    def monomial(cls, c, n: int, var: str = "x") -> "UniPoly":
        return cls((0,) * n + (c,), var)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def with_var(self, var: str) -> "UniPoly":
        return UniPoly(self.coeffs, var)

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly((other,), self.var)
        raise TypeError(f"cannot combine UniPoly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs], self.var)
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly((), self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = UniPoly((1,), self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, n: int) -> "UniPoly":
        """Multiply by x^n."""
        return UniPoly((0,) * n + self.coeffs, self.var) if self.coeffs else self

    def derivative(self, n: int = 1) -> "UniPoly":
        if n < 0:
            raise ValueError("derivative order must be non-negative")
        c = self.coeffs
        for _ in range(n):
            c = [i * c[i] for i in range(1, len(c))]
        return UniPoly(c, self.var)

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Euclidean division over Q."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = [Fraction(c) for c in self.coeffs]
        dq = len(r) - len(other.coeffs)
        if dq < 0:
            return UniPoly((), self.var), self
        q = [Fraction(0)] * (dq + 1)
        inv = Fraction(1) / other.lc
        for k in range(dq, -1, -1):
            coef = r[k + other.degree] * inv
            q[k] = coef
            if coef:
                for j, b in enumerate(other.coeffs):
                    r[k + j] -= coef * b
        return UniPoly(q, self.var), UniPoly(r[: other.degree], self.var)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exquo(self, other) -> "UniPoly":
        """Exact division; stays in Z[x] when both operands are integral."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        integral = self.is_integral() and other.is_integral()
        r = list(self.coeffs)
        dq = len(r) - len(other.coeffs)
        if dq < 0:
            if r:
                raise ArithmeticError("inexact polynomial division")
            return UniPoly((), self.var)
        q = [0] * (dq + 1)
        lc = other.lc
        for k in range(dq, -1, -1):
            top = r[k + other.degree]
            if integral:
                coef, rem = divmod(top, lc)
                if rem:
                    raise ArithmeticError("inexact polynomial division")
            else:
                coef = Fraction(top) / lc
            q[k] = coef
            if coef:
                for j, b in enumerate(other.coeffs):
                    r[k + j] -= coef * b
        if any(r):
            raise ArithmeticError("inexact polynomial division")
        return UniPoly(q, self.var)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        inv = Fraction(1) / self.lc
        return UniPoly([c * inv for c in self.coeffs], self.var)

    def __str__(self):
        return format_unipoly(self, self.var)

    def __repr__(self):
        return f"UniPoly({str(self)!r})"


# --------------------------------------------------------------- bivariate


@dataclass(frozen=True)
class BiPoly:
    """P(T, Y) = sum_i y_coeffs[i](T) * Y^i, monic in Y of degree >= 1."""

    y_coeffs: tuple[UniPoly, ...]

    def __post_init__(self):
        coeffs = tuple(UniPoly(c.coeffs if isinstance(c, UniPoly) else c, "T") for c in self.y_coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs = coeffs[:-1]
        object.__setattr__(self, "y_coeffs", coeffs)
        if len(coeffs) < 2:
            raise ValueError("BiPoly needs Y-degree >= 1")
        if coeffs[-1] != 1:
            raise ValueError("BiPoly must be monic in Y")
        for c in coeffs:
            if not c.is_integral():
                raise ValueError("BiPoly coefficients must be integers")

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], int]) -> "BiPoly":
        """Build from ``{(y_exponent, t_exponent): coefficient}``."""
        ny = max(i for i, _ in terms) + 1
        cols = [[0] * (1 + max([j for (i, j) in terms if i == k], default=0)) for k in range(ny)]
        for (i, j), c in terms.items():
            cols[i][j] += c
        return cls(tuple(UniPoly(c, "T") for c in cols))

    @property
    def y_degree(self) -> int:
        return len(self.y_coeffs) - 1

    @property
    def t_degree(self) -> int:
        return max(c.degree for c in self.y_coeffs)

    def terms(self) -> dict[tuple[int, int], int]:
        return {(i, j): c for i, col in enumerate(self.y_coeffs) for j, c in enumerate(col.coeffs) if c}

    def __str__(self):
        return format_terms(self.terms())

    def __repr__(self):
        return f"BiPoly({str(self)!r})"


def eval_t(P: BiPoly, t0) -> UniPoly:
    """Specialise T = t0, giving a monic polynomial in Y over Q."""
    t0 = Fraction(t0)
    return UniPoly([Fraction(c(t0)) for c in P.y_coeffs], "Y")


def derivative_y(P, n: int = 1):
    """n-th formal derivative in Y of a BiPoly (as a list of T-polys) or UniPoly.

    The derivative of a monic BiPoly is not monic, so for BiPoly input this
    returns a ``UniPoly`` in Y when every Y-coefficient is constant in T and a
    tuple of T-polynomials otherwise.
    """
    if n < 0:
        raise ValueError("derivative order must be non-negative")
    if isinstance(P, UniPoly):
        return P.derivative(n)
    if n == 0:
        return P
    cols = [math.perm(i, n) * c for i, c in enumerate(P.y_coeffs) if i >= n]
    if all(c.degree <= 0 for c in cols):
        return UniPoly([c[0] for c in cols], "Y")
    return tuple(cols)


def content(f: UniPoly) -> int:
    if f.is_zero():
        raise ValueError("content of the zero polynomial")
    if not f.is_integral():
        raise ValueError("content needs integer coefficients")
    return reduce(math.gcd, f.coeffs, 0)


def primitive_part(f: UniPoly) -> UniPoly:
    c = content(f)
    return UniPoly([a // c for a in f.coeffs], f.var)


def _as_integral_primitive(f: UniPoly, positive_lc: bool = True) -> UniPoly:
    """Clear denominators of a Q-polynomial and divide out the content."""
    den = reduce(math.lcm, (Fraction(c).denominator for c in f.coeffs), 1)
    g = primitive_part(UniPoly([int(Fraction(c) * den) for c in f.coeffs], f.var))
    if positive_lc and g.lc < 0:
        g = -g
    return g


# ------------------------------------------------------------- resultants


def _exquo(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact division in coefficient ring")
        return q
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return Fraction(a) / b
    if isinstance(a, (int, Fraction)):
        a = b ** 0 * a
    return a.exquo(b)


def _ytrim(f: Sequence) -> list:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def _prem(a: list, b: list) -> list:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    delta = len(a) - len(b) + 1
    steps = 0
    while len(r) - 1 >= db and r:
        lr = r[-1]
        k = len(r) - 1 - db
        r = [x * lb for x in r]
        for j, y in enumerate(b):
            r[k + j] = r[k + j] - lr * y
        r = _ytrim(r[:-1])
        steps += 1
    if delta - steps > 0:
        factor = lb ** (delta - steps)
        r = [x * factor for x in r]
    return r


def resultant(f, g):
    """Res(f, g) of two polynomials over an integral domain (subresultant PRS).

    ``f`` and ``g`` are ``UniPoly`` objects or coefficient sequences (constant
    term first) whose entries lie in Z, Q, Z[T] or F_p[T].
    """
    a = _ytrim(f.coeffs if isinstance(f, UniPoly) else f)
    b = _ytrim(g.coeffs if isinstance(g, UniPoly) else g)
    if not a or not b:
        raise ValueError("resultant of a zero polynomial")
    one = a[-1] ** 0
    sign = 1
    if len(a) < len(b):
        a, b = b, a
        if (len(a) - 1) % 2 and (len(b) - 1) % 2:
            sign = -sign
    if len(b) == 1:
        return b[0] ** (len(a) - 1) * sign if len(a) > 1 else one
    gg, h = one, one
    while len(b) > 1:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        r = _prem(a, b)
        if not r:
            return one - one
        divisor = gg * h ** delta
        a, b = b, [_exquo(x, divisor) for x in r]
        gg = a[-1]
        if delta == 0:
            h = h * 1
        elif delta == 1:
            h = gg
        else:
            h = _exquo(gg ** delta, h ** (delta - 1))
    da = len(a) - 1
    if da == 0:
        return one * sign
    res = _exquo(b[0] ** da, h ** (da - 1)) if da > 1 else b[0]
    return res * sign


def _ypoly_derivative(cols: Sequence) -> list:
    return [c * i for i, c in enumerate(cols)][1:]


def discriminant_y(P: BiPoly) -> UniPoly:
    """Discriminant in Y of a monic P(T, Y): (-1)^(n(n-1)/2) Res_Y(P, dP/dY)."""
    n = P.y_degree
    if n < 2:
        raise ValueError("discriminant needs Y-degree >= 2")
    res = resultant(list(P.y_coeffs), _ypoly_derivative(P.y_coeffs))
    res = UniPoly(res.coeffs, "T")
    return -res if (n * (n - 1) // 2) % 2 else res


def discriminant_uni(f: UniPoly):
    """Discriminant (-1)^(n(n-1)/2) Res(f, f') / lc(f) of a univariate polynomial."""
    n = f.degree
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    res = resultant(f, f.derivative())
    d = _exquo(res, f.lc)
    d = _normalize_scalar(d)
    return -d if (n * (n - 1) // 2) % 2 else d


# ----------------------------------------------------- gcd and squarefree


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd over Q (zero if both are zero)."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def is_separable(f) -> bool:
    """True iff gcd(f, f') is constant (works for UniPoly and FpPoly)."""
    if f.is_zero():
        raise ValueError("separability of the zero polynomial")
    if not isinstance(f, UniPoly):
        return f.is_squarefree()
    return poly_gcd(f, f.derivative()).degree == 0


def squarefree_decomposition(f: UniPoly) -> tuple[int | Fraction, list[tuple[UniPoly, int]]]:
    """Yun's algorithm in characteristic zero.

    Returns ``(unit, [(factor, multiplicity), ...])`` with primitive integer
    factors of positive leading coefficient, so that
    ``unit * prod(factor ** m) == f``.
    """
    if f.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    factors: list[tuple[UniPoly, int]] = []
    if f.degree > 0:
        fq = f.monic()
        a0 = poly_gcd(fq, fq.derivative())
        b = fq // a0
        c = fq.derivative() // a0
        d = c - b.derivative()
        i = 1
        while b.degree > 0:
            a = poly_gcd(b, d)
            b, c = b // a, d // a
            d = c - b.derivative()
            if a.degree > 0:
                factors.append((_as_integral_primitive(a).with_var(f.var), i))
            i += 1
    prod = UniPoly((1,), f.var)
    for a, m in factors:
        prod = prod * a ** m
    unit = _normalize_scalar(Fraction(f.lc) / prod.lc)
    return unit, factors


# ---------------------------------------------------------------- mod p


def reduce_mod_p(P, p: int):
    """Coefficient-wise reduction of a BiPoly (-> FpBiPoly) or UniPoly (-> FpPoly)."""
    from .finite_field import FpBiPoly, FpPoly

    if isinstance(P, BiPoly):
        return FpBiPoly(p, tuple(FpPoly.from_rational(p, c.coeffs) for c in P.y_coeffs))
    if isinstance(P, UniPoly):
        return FpPoly.from_rational(p, P.coeffs)
    if hasattr(P, "reduce_mod_p") or hasattr(P, "modulus"):
        if P.modulus != p:
            raise ValueError("cannot reduce across moduli")
        return P
    raise TypeError(f"cannot reduce {type(P).__name__} modulo p")


# ------------------------------------------------------- text round trip


def _fmt_coeff(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_terms(terms: dict[tuple[int, int], int | Fraction]) -> str:
    """Canonical text: descending powers of Y, then of T."""
    parts = []
    for (i, j) in sorted(terms, reverse=True):
        c = terms[(i, j)]
        if c == 0:
            continue
        mono = []
        if j:
            mono.append("T" if j == 1 else f"T^{j}")
        if i:
            mono.append("Y" if i == 1 else f"Y^{i}")
        mag = abs(Fraction(c))
        if mono and mag == 1:
            body = "*".join(mono)
        else:
            body = "*".join([_fmt_coeff(mag)] + mono)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts) if parts else "0"


def format_unipoly(f: UniPoly, var: str = "x") -> str:
    if var == "T":
        return format_terms({(0, j): c for j, c in enumerate(f.coeffs)})
    if var == "Y":
        return format_terms({(i, 0): c for i, c in enumerate(f.coeffs)})
    return format_terms({(i, 0): c for i, c in enumerate(f.coeffs)}).replace("Y", var)


_TOKEN = re.compile(r"\s*(?:(\d+)|(\*\*|[-+*/^()])|([A-Za-z]))")


def _tokenize(text: str) -> list[str]:
    out, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character at {pos} in {text!r}")
        tok = m.group(1) or m.group(2) or m.group(3)
        out.append("^" if tok == "**" else tok)
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _Parser:
    """Recursive-descent parser producing ``{(y_exp, t_exp): Fraction}``."""

    def __init__(self, text: str, variables: str):
        self.toks = _tokenize(text)
        self.pos = 0
        self.variables = variables

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"expected {expected or 'token'}, got {tok!r}")
        self.pos += 1
        return tok

    def parse(self):
        if not self.toks:
            raise ValueError("empty polynomial")
        e = self.expr()
        if self.peek() is not None:
            raise ValueError(f"trailing input at {self.peek()!r}")
        return {k: v for k, v in e.items() if v}

    def expr(self):
        acc = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            acc = _dadd(acc, rhs if op == "+" else _dscale(rhs, -1))
        return acc

    def term(self):
        acc = self.unary()
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
                acc = _dmul(acc, self.unary())
            elif tok == "/":
                self.take()
                rhs = self.unary()
                if set(rhs) - {(0, 0)} or not rhs.get((0, 0)):
                    raise ValueError("division only by nonzero constants")
                acc = _dscale(acc, 1 / rhs[(0, 0)])
            elif tok is not None and (tok.isdigit() or tok.isalpha() or tok == "("):
                acc = _dmul(acc, self.unary())
            else:
                return acc

    def unary(self):
        if self.peek() == "-":
            self.take()
            return _dscale(self.unary(), -1)
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            exp = self.take()
            if not exp.isdigit():
                raise ValueError("exponent must be a non-negative integer")
            out = {(0, 0): Fraction(1)}
            for _ in range(int(exp)):
                out = _dmul(out, base)
            return out
        return base

    def atom(self):
        tok = self.take()
        if tok.isdigit():
            return {(0, 0): Fraction(int(tok))}
        if tok == "(":
            e = self.expr()
            self.take(")")
            return e
        if tok == "Y" and "Y" in self.variables:
            return {(1, 0): Fraction(1)}
        if tok == "T" and "T" in self.variables:
            return {(0, 1): Fraction(1)}
        raise ValueError(f"unexpected token {tok!r}")


def _dadd(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
    return out


def _dscale(a, s):
    return {k: v * s for k, v in a.items()}


def _dmul(a, b):
    out: dict = {}
    for (i1, j1), v1 in a.items():
        for (i2, j2), v2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, 0) + v1 * v2
    return out


def parse_bipoly(text: str) -> BiPoly:
    """Parse text such as ``"Y^5 - Y^4 - T"`` or ``"Y^7 - 1 - T*Y*(Y+1)^3"``."""
    terms = _Parser(text, "TY").parse()
    if any(v.denominator != 1 for v in terms.values()):
        raise ValueError("bivariate polynomials must have integer coefficients")
    return BiPoly.from_terms({k: int(v) for k, v in terms.items()})


def parse_unipoly(text: str, var: str | None = None) -> UniPoly:
    """Parse a univariate polynomial in T or Y (the variable is detected)."""
    terms = _Parser(text, "TY").parse()
    has_y = any(i for i, _ in terms)
    has_t = any(j for _, j in terms)
    if has_y and has_t:
        raise ValueError("expected a univariate polynomial")
    v = var or ("T" if has_t else "Y")
    n = max([i + j for i, j in terms] + [0])
    coeffs = [0] * (n + 1)
    for (i, j), c in terms.items():
        coeffs[i + j] += c
    return UniPoly(coeffs, v)
