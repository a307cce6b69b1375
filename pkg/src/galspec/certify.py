"""Family certificates: the two specialisation conditions plus group evidence.

A certificate records, for one catalog entry,

* an unramified-at-p witness t0 (vertical ramification excluded, t0 meeting
  no branch point modulo p),
* a "not totally real" witness (derivative index n at some t0, and/or the
  three-branch-point rule), and
* evidence for the generic Galois group.

Frobenius cycle types seen at *any* separable specialisation are cycle types
of elements of the generic group, so group witnesses may come from several
specialisation points; each witness records its point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .arith import primes_up_to
from .catalog import CatalogEntry, ConstantCheck, lookup, reproduce
from .finite_field import CycleType, cycle_type_at
from .galois_id import (
    GroupEvidence, build_profile, default_prime_bound, order_spectrum_evidence,
    psl2_element_orders, sample_cycle_types, statistical_match,
)
from .poly import BiPoly, eval_t, is_separable
from .real_roots import not_totally_real_witness, three_branch_point_rule, uniform_derivative_witness
from .specialization import (
    BranchData, UnramifiednessCertificate, branch_data, excluded_residues, search_t0,
    unramified_certificate,
)

__all__ = [
    "FamilyCertificate", "certify_family", "note_totally_imaginary_inference",
    "certificate_text", "revalidate", "rigorous_s5_generic", "IMAGINARY_SCAN",
]

IMAGINARY_SCAN = 50

# statistical profiles and the profile name that must survive for each group
_GROUP_PROFILES = {
    "PSL2(F7)": (("PSL2F7-deg7", "A7", "S7"), "PSL2F7-deg7"),
}

INFERENCE_DERIVATIVE = (
    "a Galois number field is either totally real or totally imaginary; "
    "the derivative witness shows it is not totally real, hence it is totally imaginary"
)
INFERENCE_THREE_BRANCH = (
    "three branch points and a group that is not dihedral of order 4, 6, 8 or 12: "
    "no specialisation at a non-branch rational point is totally real, hence each is totally imaginary"
)


@dataclass(frozen=True)
class FamilyCertificate:
    entry_name: str
    polynomial: str
    p: int
    expected_group: str
    non_pgl2c: bool
    non_pgl2c_reason: str
    unramified_witness: UnramifiednessCertificate
    branch_bound: int
    imaginary_t0: Fraction | None
    derivative_index: int | None
    uniform_derivative_index: int | None
    three_branch_rule: bool
    group_evidence: GroupEvidence
    group_ok: bool
    group_witness_points: tuple[str, ...] = ()
    published_constants_report: tuple[ConstantCheck, ...] = ()
    notes: tuple[str, ...] = field(default=())

    @property
    def imaginary_ok(self) -> bool:
        return self.derivative_index is not None or self.three_branch_rule

    @property
    def verdict(self) -> bool:
        return (
            self.imaginary_ok
            and self.unramified_witness.verdict
            and self.group_ok
            and self.non_pgl2c
        )

    @property
    def scope(self) -> str:
        if self.group_evidence.mode == "rigorous":
            return "certified"
        return "certified modulo group identification"

    def to_dict(self) -> dict:
        return {
            "entry_name": self.entry_name,
            "polynomial": self.polynomial,
            "p": self.p,
            "expected_group": self.expected_group,
            "non_pgl2c": self.non_pgl2c,
            "non_pgl2c_reason": self.non_pgl2c_reason,
            "branch_bound": self.branch_bound,
            "unramified_witness": self.unramified_witness.to_dict(),
            "imaginary_witness": {
                "t0": None if self.imaginary_t0 is None else str(self.imaginary_t0),
                "derivative_index": self.derivative_index,
                "uniform_derivative_index": self.uniform_derivative_index,
                "three_branch_rule": self.three_branch_rule,
                "ok": self.imaginary_ok,
            },
            "group_evidence": {
                **self.group_evidence.to_dict(),
                "witness_points": list(self.group_witness_points),
                "expected_group_ok": self.group_ok,
            },
            "published_constants_report": [c.to_dict() for c in self.published_constants_report],
            "notes": list(self.notes),
            "verdict": self.verdict,
            "scope": self.scope,
        }


def certificate_text(cert: FamilyCertificate) -> str:
    """Canonical, byte-stable serialization (sorted keys, exact values as strings)."""
    return json.dumps(cert.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _candidate_points(P: BiPoly, B: BranchData, p: int, start: int, count: int):
    """Integers t >= start avoiding the excluded residues, with P(t, Y) separable."""
    excluded = excluded_residues(B, p)
    t = start
    found = 0
    while found < count:
        if t % p not in excluded and is_separable(eval_t(P, t)):
            found += 1
            yield t
        t += 1


def rigorous_s5_generic(P: BiPoly, points, prime_bound: int) -> tuple[GroupEvidence | None, tuple[str, ...]]:
    """S5 proof for the generic group, collecting [5] and [2,3] witnesses across points.

    Returns the evidence (or None) and, per witness, the point it was found at.
    """
    found: dict[CycleType, tuple[int, int]] = {}
    primes = primes_up_to(prime_bound)
    for t in points:
        for q in primes:
            ct = cycle_type_at(P, t, q)
            if ct in ((5,), (2, 3)) and ct not in found:
                found[ct] = (t, q)
            if len(found) == 2:
                break
        if len(found) == 2:
            break
    if len(found) < 2:
        return None, ()
    order = [(5,), (2, 3)]
    evidence = GroupEvidence(
        mode="rigorous",
        witnesses=tuple((found[ct][1], ct) for ct in order),
        matched_profile="S5",
        note="a [5] Frobenius makes the group transitive; the cube of a [2,3] Frobenius "
             "is a transposition; a transitive subgroup of S5 with a transposition is S5",
    )
    return evidence, tuple(str(found[ct][0]) for ct in order)


def _group_evidence(entry: CatalogEntry, points, prime_bound: int):
    P = entry.bipoly
    n = P.y_degree
    if n == 5 and entry.expected_group == "S5":
        ev, where = rigorous_s5_generic(P, points, prime_bound)
        if ev is not None:
            return ev, where, True
    # statistical: use the first point whose sample shows a full n-cycle
    sample, t_used = None, None
    for t in points:
        sample = sample_cycle_types(P, t, prime_bound)
        t_used = t
        if (n,) in sample.counts:
            break
    if entry.expected_group == "PSL2(F11)":
        ev = order_spectrum_evidence(sample.counts, psl2_element_orders(11), 11, "PSL2F11")
        return ev, (str(t_used),), ev.matched_profile is not None
    names, required = _GROUP_PROFILES.get(entry.expected_group, ((), None))
    if not names:
        names = tuple(s for s in ("S5", "A5", "F20", "D5", "C5") if n == 5)
    ev = statistical_match(sample.counts, [build_profile(s) for s in names])
    ok = required is not None and dict(ev.distances).get(required) is not None
    return ev, (str(t_used),), ok


def certify_family(entry: CatalogEntry | str, prime_bound: int | None = None) -> FamilyCertificate:
    """Run the full certification pipeline for one catalog entry."""
    if isinstance(entry, str):
        found = lookup(entry)
        if found is None:
            raise KeyError(f"unknown catalog entry {entry!r}")
        entry = found
    if entry.bipoly is None:
        raise ValueError(f"{entry.name}: no bivariate polynomial to certify")
    prime_bound = default_prime_bound() if prime_bound is None else prime_bound
    P, p = entry.bipoly, entry.target_p

    B = branch_data(P)
    t0 = search_t0(B, p)
    unram = unramified_certificate(P, p, t0, B)

    three = entry.branch_count is not None and three_branch_point_rule(entry.branch_count, entry.expected_group)
    imag_t0, deriv = None, None
    for t in _candidate_points(P, B, p, t0, IMAGINARY_SCAN):
        n = not_totally_real_witness(P, t)
        if n is not None:
            imag_t0, deriv = Fraction(t), n
            break

    points = list(_candidate_points(P, B, p, t0, 8))
    evidence, where, group_ok = _group_evidence(entry, points, prime_bound)

    cert = FamilyCertificate(
        entry_name=entry.name,
        polynomial=str(P),
        p=p,
        expected_group=entry.expected_group,
        non_pgl2c=entry.non_pgl2c,
        non_pgl2c_reason=entry.non_pgl2c_reason,
        unramified_witness=unram,
        branch_bound=B.branch_bound,
        imaginary_t0=imag_t0,
        derivative_index=deriv,
        uniform_derivative_index=uniform_derivative_witness(P),
        three_branch_rule=three,
        group_evidence=evidence,
        group_ok=group_ok,
        group_witness_points=where,
        published_constants_report=tuple(reproduce(entry.name)),
    )
    return note_totally_imaginary_inference(cert)


def note_totally_imaginary_inference(cert: FamilyCertificate) -> FamilyCertificate:
    """Attach the "not totally real => totally imaginary" inference, if a witness exists."""
    notes = list(cert.notes)
    if cert.three_branch_rule and INFERENCE_THREE_BRANCH not in notes:
        notes.append(INFERENCE_THREE_BRANCH)
    if cert.derivative_index is not None and INFERENCE_DERIVATIVE not in notes:
        notes.append(INFERENCE_DERIVATIVE)
    if notes == list(cert.notes):
        return cert
    return replace(cert, notes=tuple(notes))


def revalidate(cert: FamilyCertificate, entry: CatalogEntry | None = None) -> bool:
    """Re-run every recorded witness through the underlying operations."""
    entry = entry or lookup(cert.entry_name)
    P = entry.bipoly
    u = cert.unramified_witness
    again = unramified_certificate(P, u.p, u.t0)
    if again != u:
        return False
    if cert.derivative_index is not None:
        if not_totally_real_witness(P, cert.imaginary_t0) != cert.derivative_index:
            return False
    if cert.group_evidence.mode == "rigorous":
        for (q, ct), t in zip(cert.group_evidence.witnesses, cert.group_witness_points):
            if cycle_type_at(P, Fraction(t), q) != ct:
                return False
    if cert.three_branch_rule != (
        entry.branch_count is not None and three_branch_point_rule(entry.branch_count, entry.expected_group)
    ):
        return False
    return all(c.match for c in cert.published_constants_report)
