"""Sturm real-root counting and the "not totally real" tests.

The derivative test: if P(t0, Y) is separable and some Y-derivative of it
has a non-real complex root, the splitting field of P(t0, Y) is not totally
real (Rolle's theorem applied repeatedly).
"""

from __future__ import annotations

from fractions import Fraction

from .poly import BiPoly, UniPoly, derivative_y, eval_t, is_separable, poly_gcd

__all__ = [
    "sturm_chain", "count_real_roots", "squarefree_part", "not_totally_real_witness",
    "uniform_derivative_witness", "three_branch_point_rule", "DIHEDRAL_SMALL",
]

# dihedral groups of order 4, 6, 8 and 12 under their usual names
DIHEDRAL_SMALL = frozenset({
    "D2", "D3", "D4", "D6", "V4", "C2xC2", "S3", "D_2", "D_3", "D_4", "D_6",
    "DIH4", "DIH6", "DIH8", "DIH12",
})


def _positive_primitive(f: UniPoly) -> UniPoly:
    """Scale f by a *positive* rational so it has coprime integer coefficients."""
    from math import gcd, lcm
    den = 1
    for c in f.coeffs:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in f.coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return UniPoly([c // g for c in ints], f.var)


def squarefree_part(f: UniPoly) -> UniPoly:
    """f / gcd(f, f'), rescaled to a primitive integer polynomial with the sign of f."""
    g = poly_gcd(f, f.derivative())
    return _positive_primitive(f // g if g.degree > 0 else f)


def sturm_chain(f: UniPoly) -> list[UniPoly]:
    """Sturm chain of the squarefree part of f.

    Remainders are rescaled by positive constants only, so the sign pattern at
    any point is that of the classical chain.
    """
    if f.degree < 1:
        raise ValueError("Sturm chain needs a non-constant polynomial")
    f0 = squarefree_part(f)
    chain = [f0, _positive_primitive(f0.derivative())]
    while chain[-1].degree > 0:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        chain.append(_positive_primitive(-r))
    return chain


def _sign_changes(signs: list[int]) -> int:
    s = [x for x in signs if x]
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def count_real_roots(f: UniPoly) -> int:
    """Number of distinct real roots of f (0 for a nonzero constant)."""
    if f.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    if f.degree == 0:
        return 0
    chain = sturm_chain(f)
    at_pos = [_sign(g.lc) for g in chain]
    at_neg = [_sign(g.lc) * (-1) ** g.degree for g in chain]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def _has_nonreal_root(f: UniPoly) -> bool:
    if f.degree < 2:
        return False
    sq = squarefree_part(f)
    return count_real_roots(sq) < sq.degree


def not_totally_real_witness(P: BiPoly, t0) -> int | None:
    """Smallest n <= deg_Y P - 2 whose n-th Y-derivative of P(t0, Y) has a non-real root."""
    f = eval_t(P, Fraction(t0))
    if not is_separable(f):
        raise ValueError(f"P(t0, Y) is not separable at t0 = {t0}: derivative test does not apply")
    for n in range(P.y_degree - 1):
        if _has_nonreal_root(f.derivative(n)):
            return n
    return None


def uniform_derivative_witness(P: BiPoly) -> int | None:
    """Smallest n whose n-th Y-derivative of P is free of T and has a non-real root.

    Such an n certifies "not totally real" for every t0 with P(t0, Y) separable.
    """
    for n in range(P.y_degree - 1):
        d = derivative_y(P, n)
        if isinstance(d, UniPoly) and _has_nonreal_root(d):
            return n
    return None


def three_branch_point_rule(branch_count: int, group_tag: str) -> bool:
    """Does the three-branch-point criterion apply (group not dihedral of order 4, 6, 8, 12)?"""
    tag = group_tag.strip().upper().replace("₂", "2")
    return branch_count == 3 and tag not in {d.upper() for d in DIHEDRAL_SMALL}
