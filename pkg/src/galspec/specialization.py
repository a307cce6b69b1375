"""Branch points, meeting modulo p, and the unramifiedness certificate.

Branch points are over-approximated by the roots of the Y-discriminant
Delta(T) together with infinity.  "t0 meets a branch point modulo p" is
tested on the primitive binary form F(A, B) homogenizing Delta: a point
(a : b) of P^1(Q) in lowest terms meets a root of Delta modulo p exactly
when p divides F(a, b).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import INFINITY, ProjPoint, is_prime, proj_reduce_mod_p, residue_sort_key
from .poly import BiPoly, UniPoly, discriminant_y, primitive_part, squarefree_decomposition

__all__ = [
    "BranchData", "UnramifiednessCertificate", "SaturationError", "BranchPointError",
    "branch_data", "meets_mod_p", "excluded_residues", "search_t0",
    "vertical_ramification_excluded", "unramified_certificate", "sorted_residues",
]


class SaturationError(ValueError):
    """Every residue of P^1(F_p) is excluded."""


class BranchPointError(ValueError):
    """The chosen t0 is a root of the discriminant."""


@dataclass(frozen=True)
class BranchData:
    """Certified superset of the branch points of the splitting field of P.

    ``form`` holds the coefficients c_j of F(A, B) = sum_j c_j A^j B^(d-j)
    with ``d = form_degree``; ordinarily ``form`` is the primitive part of
    Delta and ``form_degree = deg Delta``.
    """

    disc: UniPoly
    form: tuple[int, ...]
    form_degree: int
    squarefree_factors: tuple[tuple[UniPoly, int], ...]
    include_infinity: bool = True
    source: BiPoly | None = field(default=None, compare=False)

    @classmethod
    def from_form(cls, form, form_degree: int | None = None, include_infinity: bool = True) -> "BranchData":
        """Branch data for an explicitly given binary form (testing and saturation cases)."""
        f = primitive_part(UniPoly(tuple(form), "T"))
        d = f.degree if form_degree is None else form_degree
        if d < f.degree:
            raise ValueError("form degree below polynomial degree")
        _, sqf = squarefree_decomposition(f)
        return cls(f, f.coeffs, d, tuple(sqf), include_infinity)

    @property
    def branch_bound(self) -> int:
        finite = sum(g.degree for g, _ in self.squarefree_factors)
        # a form of degree above deg(disc) vanishes at infinity
        at_inf = self.include_infinity or self.form_degree > len(self.form) - 1
        return finite + int(at_inf)

    def evaluate_form(self, a: int, b: int) -> int:
        d = self.form_degree
        return sum(c * a ** j * b ** (d - j) for j, c in enumerate(self.form))


def branch_data(P: BiPoly, include_infinity: bool = True) -> BranchData:
    disc = discriminant_y(P)
    if disc.is_zero():
        raise ValueError("P not separable over Q(T): discriminant vanishes")
    form = primitive_part(disc)
    if form.lc < 0:
        form = -form
    _, sqf = squarefree_decomposition(disc)
    return BranchData(disc, form.coeffs, form.degree, tuple(sqf), include_infinity, P)


def meets_mod_p(t0, B: BranchData, p: int) -> bool:
    """Does t0 possibly meet a branch point modulo p?"""
    if not is_prime(p):
        raise ValueError(f"{p} is not a prime")
    t = ProjPoint.of(t0)
    if B.include_infinity and t.is_infinite:
        return True
    if B.include_infinity and proj_reduce_mod_p(t, p) is INFINITY:
        return True
    return B.evaluate_form(t.a, t.b) % p == 0


def excluded_residues(B: BranchData, p: int) -> frozenset:
    """Points of P^1(F_p) whose lifts may meet a branch point modulo p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not a prime")
    out = {x for x in range(p) if B.evaluate_form(x, 1) % p == 0}
    if B.include_infinity or B.evaluate_form(1, 0) % p == 0:
        out.add(INFINITY)
    return frozenset(out)


def sorted_residues(residues) -> list:
    return sorted(residues, key=residue_sort_key)


def search_t0(B: BranchData, p: int, bound: int | None = None) -> int:
    """Smallest integer t0 in [0, bound) whose reduction avoids the excluded residues."""
    bound = p if bound is None else bound
    if bound < p:
        raise ValueError("search bound must be at least p")
    excluded = excluded_residues(B, p)
    for t in range(bound):
        if t % p not in excluded:
            return t
    raise SaturationError(
        f"all residues excluded modulo {p}: the hypothesis p >= r + 1 may fail"
    )


def vertical_ramification_excluded(P: BiPoly, p: int, disc: UniPoly | None = None) -> bool:
    """True when Delta(T) is not in pZ[T] (no vertical ramification at p)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not a prime")
    disc = discriminant_y(P) if disc is None else disc
    return any(c % p for c in disc.coeffs)


@dataclass(frozen=True)
class UnramifiednessCertificate:
    p: int
    t0: ProjPoint
    vertical_ok: bool
    disc_mod_p: tuple[int, ...]
    meets: bool
    excluded: tuple
    form_value: int

    @property
    def meets_none(self) -> bool:
        return not self.meets

    @property
    def verdict(self) -> bool:
        return self.vertical_ok and self.meets_none

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "t0": str(self.t0),
            "vertical_ok": self.vertical_ok,
            "disc_mod_p": list(self.disc_mod_p),
            "meets_none": self.meets_none,
            "excluded_residues": [str(r) for r in self.excluded],
            "form_value_at_t0": str(self.form_value),
            "verdict": self.verdict,
        }


def unramified_certificate(P: BiPoly, p: int, t0, B: BranchData | None = None) -> UnramifiednessCertificate:
    """Check that the specialisation at t0 is unramified at p (sufficient conditions)."""
    t = ProjPoint.of(t0)
    if t.is_infinite:
        raise ValueError("t0 must be a finite rational number")
    B = branch_data(P) if B is None else B
    if B.disc(Fraction(t.a, t.b)) == 0:
        raise BranchPointError(f"t0 = {t} is (possibly) a branch point: Delta(t0) = 0")
    vertical_ok = vertical_ramification_excluded(P, p, B.disc)
    return UnramifiednessCertificate(
        p=p,
        t0=t,
        vertical_ok=vertical_ok,
        disc_mod_p=tuple(c % p for c in B.disc.coeffs),
        meets=meets_mod_p(t, B, p),
        excluded=tuple(sorted_residues(excluded_residues(B, p))),
        form_value=B.evaluate_form(t.a, t.b),
    )
