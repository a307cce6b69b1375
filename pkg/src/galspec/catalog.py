"""Bundled polynomials and the constant-reproduction harness."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .finite_field import FpPoly, has_root_mod_p
from .poly import (
    BiPoly, UniPoly, derivative_y, discriminant_uni, discriminant_y, is_separable,
    parse_bipoly, parse_unipoly, reduce_mod_p, squarefree_decomposition,
)
from .real_roots import count_real_roots

__all__ = ["CatalogEntry", "ConstantCheck", "catalog", "lookup", "reproduce", "format_report"]


@dataclass(frozen=True)
class ConstantCheck:
    """One recomputed constant.

    ``sign`` is the unit u with computed == u * expected (+1 or -1) when the
    values agree up to sign, and ``None`` when they do not.  ``expected`` is
    ``None`` for informational lines that carry no published value.
    """

    entry: str
    label: str
    computed: str
    expected: str | None
    sign: int | None

    @property
    def informational(self) -> bool:
        return self.expected is None

    @property
    def match(self) -> bool:
        return self.informational or self.sign is not None

    @property
    def status(self) -> str:
        if self.informational:
            return "INFO"
        if self.sign is None:
            return "MISMATCH"
        return "MATCH" if self.sign == 1 else "MATCH(-1)"

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "computed": self.computed,
            "expected": self.expected,
            "match_up_to_sign": self.match if not self.informational else None,
            "sign": self.sign,
        }


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    target_p: int
    expected_group: str
    bipoly: BiPoly | None = None
    unipoly: UniPoly | None = None
    branch_count: int | None = None  # published number of branch points, when stated
    non_pgl2c: bool = True
    non_pgl2c_reason: str = ""
    checks: tuple[Callable[["CatalogEntry"], list[ConstantCheck]], ...] = field(default=(), compare=False)


def _signed_match(computed, expected) -> int | None:
    if computed == expected:
        return 1
    if computed == -expected:
        return -1
    return None


def _check(entry, label, computed, expected, render=str) -> ConstantCheck:
    if expected is None:
        return ConstantCheck(entry, label, render(computed), None, None)
    return ConstantCheck(entry, label, render(computed), render(expected), _signed_match(computed, expected))


def _exact(entry, label, computed, expected) -> ConstantCheck:
    """Exact (not up-to-sign) comparison, for booleans and reductions."""
    return ConstantCheck(entry, label, str(computed), str(expected), 1 if computed == expected else None)


_F = math.factorial

# ---------------------------------------------------------------- entries

S5_POLY = "Y^5 - Y^4 - T"
PSL2F7_POLY = "Y^7 - 56*Y^6 + 609*Y^5 + 1190*Y^4 + 6356*Y^3 + 4536*Y^2 - 6804*Y - 5832 - T*Y*(Y + 1)^3"
PSL2F7_LSY_POLY = "Y^7 + Y^6 + Y^5 + T*Y^4 + (T - 2)*Y^3 - 5*Y^2 - 2*Y + 1"
PSL2F11_POLY = (
    "Y^11 - 3*Y^10 + 7*Y^9 - 25*Y^8 + 46*Y^7 - 36*Y^6 + 60*Y^4 - 121*Y^3 + 140*Y^2"
    " - 95*Y + 27 + Y^2*(Y - 1)^3*T"
)
PSL2F11_CUBIC = "108*T^3 - 7472*T^2 + 267408*T + 7987117"
A6_SEED = "(Y^2 + 1)*(Y^2 + 4)"


def _s5_checks(e: CatalogEntry) -> list[ConstantCheck]:
    disc = discriminant_y(e.bipoly)
    return [
        _check(e.name, "disc_Y(P)", disc, parse_unipoly("5^5*T^4 + 4^4*T^3")),
        _exact(e.name, "disc_Y(P) not in 5Z[T]", any(c % 5 for c in disc.coeffs), True),
    ]


def _psl2f7_checks(e: CatalogEntry) -> list[ConstantCheck]:
    red = reduce_mod_p(e.bipoly, 7)
    target = reduce_mod_p(parse_bipoly("Y^7 - 1 - T*Y*(Y + 1)^3"), 7)
    disc7 = red.discriminant_y()
    expected = FpPoly.from_rational(7, parse_unipoly("-3*T^8 - T^7").coeffs, "T")
    return [
        _exact(e.name, "P mod 7", str(red), str(target)),
        _check(e.name, "disc_Y(P mod 7) over F_7", disc7, expected, render=str),
        _exact(e.name, "disc_Y(P mod 7) nonzero", not disc7.is_zero(), True),
    ]


def _psl2f11_checks(e: CatalogEntry) -> list[ConstantCheck]:
    P = e.bipoly
    cubic = parse_unipoly(PSL2F11_CUBIC)
    disc = discriminant_y(P)
    _, sqf = squarefree_decomposition(disc)
    d9 = derivative_y(P, 9)
    d9_expected = UniPoly((7 * _F(9), -3 * _F(10), _F(11) // 2), "Y")
    d9_disc = discriminant_uni(d9)
    return [
        _check(e.name, "disc_Y(P)", disc, cubic ** 4),
        _exact(e.name, "squarefree structure of disc_Y(P)",
               _sqf_text(sqf), _sqf_text([(cubic, 4)])),
        _exact(e.name, "disc_Y(P) not in 11Z[T]", any(c % 11 for c in disc.coeffs), True),
        _exact(e.name, "cubic has a root mod 5", has_root_mod_p(cubic, 5), False),
        _exact(e.name, "9th Y-derivative", d9, d9_expected),
        _check(e.name, "disc of 9th Y-derivative", d9_disc, _F(10) * _F(9) * (9 * 10 - 2 * 11 * 7)),
        _exact(e.name, "disc of 9th Y-derivative < 0", d9_disc < 0, True),
        _exact(e.name, "real roots of 9th Y-derivative", count_real_roots(d9), 0),
    ]


def _lsy_checks(e: CatalogEntry) -> list[ConstantCheck]:
    from .specialization import branch_data

    P = e.bipoly
    disc = discriminant_y(P)
    B = branch_data(P)
    return [
        _check(e.name, "disc_Y(P)", disc, None),
        _check(e.name, "separable over Q(T)", not disc.is_zero(), None),
        _check(e.name, "branch_bound", B.branch_bound, None),
        _check(e.name, "disc_Y(P) not in 7Z[T]", any(c % 7 for c in disc.coeffs), None),
    ]


def _a6_checks(e: CatalogEntry) -> list[ConstantCheck]:
    f = e.unipoly
    d = discriminant_uni(f)
    root = math.isqrt(d) if d >= 0 else -1
    return [
        _exact(e.name, "f expanded", f, parse_unipoly("Y^4 + 5*Y^2 + 4")),
        _exact(e.name, "f separable", is_separable(f), True),
        _check(e.name, "disc(f)", d, 4 * 9 * 9 * 16),
        _exact(e.name, "disc(f) is a square", root * root == d, True),
        _exact(e.name, "real roots of f", count_real_roots(f), 0),
    ]


def _sqf_text(sqf) -> str:
    return " * ".join(f"({g})^{m}" for g, m in sqf)


_NOT_PGL2C = (
    "finite subgroups of PGL2(C) are cyclic, dihedral, A4, S4 or A5; "
    "this group is none of these"
)


def catalog() -> list[CatalogEntry]:
    return [
        CatalogEntry("s5-p5", 5, "S5", bipoly=parse_bipoly(S5_POLY), branch_count=3,
                     non_pgl2c_reason=_NOT_PGL2C, checks=(_s5_checks,)),
        CatalogEntry("psl2f7-p7", 7, "PSL2(F7)", bipoly=parse_bipoly(PSL2F7_POLY), branch_count=3,
                     non_pgl2c_reason=_NOT_PGL2C, checks=(_psl2f7_checks,)),
        CatalogEntry("psl2f7-lsy", 7, "PSL2(F7)", bipoly=parse_bipoly(PSL2F7_LSY_POLY),
                     non_pgl2c_reason=_NOT_PGL2C, checks=(_lsy_checks,)),
        CatalogEntry("psl2f11-p11", 11, "PSL2(F11)", bipoly=parse_bipoly(PSL2F11_POLY), branch_count=4,
                     non_pgl2c_reason=_NOT_PGL2C, checks=(_psl2f11_checks,)),
        CatalogEntry("a6-seed", 3, "A6", unipoly=parse_unipoly(A6_SEED),
                     non_pgl2c_reason=_NOT_PGL2C, checks=(_a6_checks,)),
    ]


def lookup(name: str) -> CatalogEntry | None:
    return next((e for e in catalog() if e.name == name), None)


def reproduce(name: str) -> list[ConstantCheck]:
    """Recompute every published constant of one entry (or of ``"all"``)."""
    if name == "all":
        return [c for e in catalog() for c in reproduce(e.name)]
    entry = lookup(name)
    if entry is None:
        raise KeyError(f"unknown catalog entry {name!r}")
    return [c for check in entry.checks for c in check(entry)]


def format_report(checks: list[ConstantCheck]) -> str:
    """Tab-separated report: entry, label, status, computed, expected."""
    lines = ["entry\tlabel\tstatus\tcomputed\texpected"]
    for c in checks:
        lines.append("\t".join([c.entry, c.label, c.status, c.computed, c.expected or "-"]))
    return "\n".join(lines) + "\n"
