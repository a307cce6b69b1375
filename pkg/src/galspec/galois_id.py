"""Galois-group evidence from Frobenius cycle types.

Two modes are offered.  ``rigorous_s5`` proves Gal = S5 for a quintic from two
modular witnesses (an irreducible reduction and a [2,3] reduction).
``statistical_match`` compares observed cycle-type frequencies with exact
profiles of permutation groups obtained by enumerating every element.
"""

from __future__ import annotations

import itertools
import math
import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from importlib import resources
from typing import Callable, Iterable, Mapping, Sequence

from .arith import primes_up_to
from .finite_field import CycleType, cycle_type_at, format_cycle_type, parse_cycle_type
from .poly import BiPoly, eval_t, is_separable

__all__ = [
    "GroupProfile", "GroupEvidence", "CycleSample", "PROFILE_SPECS", "DEFAULT_PRIME_BOUND",
    "MIN_SAMPLE", "cycle_type", "build_profile", "load_profile", "sample_cycle_types",
    "rigorous_s5", "statistical_match", "order_spectrum_evidence", "psl2_element_orders",
    "default_prime_bound",
]

DEFAULT_PRIME_BOUND = 20000
MIN_SAMPLE = 100


def default_prime_bound() -> int:
    """Sampling bound, overridable through ``GS_PRIME_BOUND``."""
    raw = os.environ.get("GS_PRIME_BOUND")
    return int(raw) if raw else DEFAULT_PRIME_BOUND


Perm = tuple  # image tuple: perm[i] is the image of point i


def cycle_type(perm: Perm) -> CycleType:
    seen = [False] * len(perm)
    parts = []
    for i in range(len(perm)):
        if not seen[i]:
            n, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                n += 1
            parts.append(n)
    return tuple(sorted(parts))


def _is_even(perm: Perm) -> bool:
    return sum(c - 1 for c in cycle_type(perm)) % 2 == 0


def _compose(p: Perm, q: Perm) -> Perm:
    """Apply q, then p."""
    return tuple(p[i] for i in q)


def _closure(gens: Sequence[Perm]) -> set[Perm]:
    identity = tuple(range(len(gens[0])))
    group = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = _compose(s, g)
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return group


def _symmetric(n: int) -> Iterable[Perm]:
    return itertools.permutations(range(n))


def _alternating(n: int) -> Iterable[Perm]:
    return (g for g in itertools.permutations(range(n)) if _is_even(g))


def _affine_mod5(mults: Sequence[int]) -> Iterable[Perm]:
    # x -> a*x + b on F_5 with a in mults
    return (tuple((a * x + b) % 5 for x in range(5)) for a in mults for b in range(5))


def _gl3_f2_on_points() -> Iterable[Perm]:
    """GL_3(F_2) ~ PSL_2(F_7) acting on the 7 nonzero vectors of F_2^3."""
    vectors = [v for v in itertools.product((0, 1), repeat=3) if any(v)]
    index = {v: i for i, v in enumerate(vectors)}
    for bits in itertools.product((0, 1), repeat=9):
        rows = (bits[0:3], bits[3:6], bits[6:9])
        images = [tuple(sum(r[k] * v[k] for k in range(3)) % 2 for r in rows) for v in vectors]
        if all(any(w) for w in images) and len(set(images)) == 7:
            yield tuple(index[w] for w in images)


PROFILE_SPECS: dict[str, tuple[int, Callable[[], Iterable[Perm]]]] = {
    "S5": (5, lambda: _symmetric(5)),
    "A5": (5, lambda: _alternating(5)),
    "F20": (5, lambda: _affine_mod5((1, 2, 3, 4))),
    "D5": (5, lambda: _affine_mod5((1, 4))),
    "C5": (5, lambda: _affine_mod5((1,))),
    "S6": (6, lambda: _symmetric(6)),
    "A6": (6, lambda: _alternating(6)),
    "PSL2F7-deg7": (7, _gl3_f2_on_points),
    "A7": (7, lambda: _alternating(7)),
    "S7": (7, lambda: _symmetric(7)),
}


@dataclass(frozen=True)
class GroupProfile:
    """Cycle-type class sizes of a permutation group."""

    name: str
    degree: int
    order: int
    type_counts: tuple[tuple[CycleType, int], ...]

    @property
    def type_frequencies(self) -> dict[CycleType, Fraction]:
        return {ct: Fraction(n, self.order) for ct, n in self.type_counts}

    def to_text(self) -> str:
        lines = [f"name: {self.name}", f"degree: {self.degree}", f"order: {self.order}"]
        lines += [f"{format_cycle_type(ct)} {n}" for ct, n in self.type_counts]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "GroupProfile":
        header: dict[str, str] = {}
        counts = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith("["):
                ct, n = line.rsplit(" ", 1)
                counts.append((parse_cycle_type(ct), int(n)))
            else:
                key, value = line.split(":", 1)
                header[key.strip()] = value.strip()
        return cls(header["name"], int(header["degree"]), int(header["order"]), tuple(counts))


@lru_cache(maxsize=None)
def build_profile(spec: str) -> GroupProfile:
    """Exact profile of a named group by exhaustive enumeration."""
    if spec not in PROFILE_SPECS:
        raise ValueError(f"unknown group spec {spec!r}; known: {', '.join(PROFILE_SPECS)}")
    degree, elements = PROFILE_SPECS[spec]
    counts = Counter(cycle_type(g) for g in elements())
    order = sum(counts.values())
    return GroupProfile(spec, degree, order, tuple(sorted(counts.items())))


def profile_filename(spec: str) -> str:
    return f"{spec}.profile"


def load_profile(spec: str) -> GroupProfile:
    """Read a shipped profile data file."""
    text = resources.files("galspec.data.profiles").joinpath(profile_filename(spec)).read_text("utf-8")
    return GroupProfile.from_text(text)


def psl2_element_orders(q: int) -> frozenset[int]:
    """Element orders of PSL_2(F_q), q an odd prime, by enumerating SL_2(F_q) mod +-1."""
    seen = set()
    orders = set()
    for a, b, c, d in itertools.product(range(q), repeat=4):
        if (a * d - b * c) % q != 1:
            continue
        key = min((a, b, c, d), tuple((-x) % q for x in (a, b, c, d)))
        if key in seen:
            continue
        seen.add(key)
        m, k = (a, b, c, d), 1
        while m not in ((1, 0, 0, 1), (q - 1, 0, 0, q - 1)):
            x, y, z, w = m
            m = ((x * a + y * c) % q, (x * b + y * d) % q, (z * a + w * c) % q, (z * b + w * d) % q)
            k += 1
        orders.add(k)
    return frozenset(orders)


# ------------------------------------------------------------- sampling


@dataclass
class CycleSample:
    counts: Counter = field(default_factory=Counter)
    skipped: list[int] = field(default_factory=list)
    first_prime: dict[CycleType, int] = field(default_factory=dict)

    @property
    def usable(self) -> int:
        return sum(self.counts.values())

    def frequencies(self) -> dict[CycleType, Fraction]:
        n = self.usable
        return {ct: Fraction(c, n) for ct, c in self.counts.items()}


def sample_cycle_types(P: BiPoly, t0, prime_bound: int) -> CycleSample:
    """Frobenius cycle types of P(t0, Y) at every prime up to ``prime_bound``."""
    t0 = Fraction(t0)
    if not is_separable(eval_t(P, t0)):
        raise ValueError(f"P(t0, Y) is not separable at t0 = {t0}")
    sample = CycleSample()
    for q in primes_up_to(prime_bound):
        ct = cycle_type_at(P, t0, q)
        if ct is None:
            sample.skipped.append(q)
            continue
        sample.counts[ct] += 1
        sample.first_prime.setdefault(ct, q)
    return sample


@dataclass(frozen=True)
class GroupEvidence:
    mode: str  # "rigorous" or "statistical"
    witnesses: tuple[tuple[int, CycleType], ...] = ()
    matched_profile: str | None = None
    distance: Fraction | None = None
    sample_size: int = 0
    distances: tuple[tuple[str, Fraction | None], ...] = ()
    degenerate: bool = False
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "matched_profile": self.matched_profile,
            "distance": None if self.distance is None else f"{float(self.distance):.6f}",
            "sample_size": self.sample_size,
            "witnesses": [[q, format_cycle_type(ct)] for q, ct in self.witnesses],
            "profile_distances": [
                [name, "disqualified" if d is None else f"{float(d):.6f}"] for name, d in self.distances
            ],
            "degenerate": self.degenerate,
            "note": self.note,
        }


def rigorous_s5(P: BiPoly, t0, prime_bound: int, sample: CycleSample | None = None) -> GroupEvidence | None:
    """Prove Gal(P(t0, Y)/Q) = S5 from a [5] witness and a [2,3] witness, if found."""
    if P.y_degree != 5:
        raise ValueError("rigorous_s5 needs a quintic")
    t0 = Fraction(t0)
    if not is_separable(eval_t(P, t0)):
        return None
    irreducible = transposition = None
    for q in primes_up_to(prime_bound):
        ct = cycle_type_at(P, t0, q)
        if ct == (5,) and irreducible is None:
            irreducible = q
        elif ct == (2, 3) and transposition is None:
            transposition = q
        if irreducible and transposition:
            break
    if not (irreducible and transposition):
        return None
    return GroupEvidence(
        mode="rigorous",
        witnesses=((irreducible, (5,)), (transposition, (2, 3))),
        matched_profile="S5",
        note="irreducible mod q => transitive; cube of a [2,3] Frobenius is a transposition; "
             "a transitive subgroup of S5 with a transposition is S5",
    )


def _tv_distance(obs: Mapping[CycleType, Fraction], prof: Mapping[CycleType, Fraction]) -> Fraction:
    keys = set(obs) | set(prof)
    return sum((abs(obs.get(k, 0) - prof.get(k, 0)) for k in keys), Fraction(0)) / 2


def statistical_match(
    observed: Mapping[CycleType, int],
    profiles: Sequence[GroupProfile],
    min_sample: int = MIN_SAMPLE,
) -> GroupEvidence:
    """Match observed cycle-type counts against group profiles by total variation.

    A profile lacking any observed cycle type is disqualified outright.
    """
    n = sum(observed.values())
    if n < min_sample:
        raise ValueError(f"sample of {n} usable primes is below the minimum {min_sample}")
    degrees = {sum(ct) for ct in observed}
    if len(degrees) != 1:
        raise ValueError("observed cycle types have inconsistent degrees")
    degree = degrees.pop()
    candidates = [g for g in profiles if g.degree == degree]
    if not candidates:
        raise ValueError(f"no profile of degree {degree}")
    obs = {ct: Fraction(c, n) for ct, c in observed.items()}
    distances: list[tuple[str, Fraction | None]] = []
    for g in candidates:
        freq = g.type_frequencies
        if any(ct not in freq for ct in obs):
            distances.append((g.name, None))
        else:
            distances.append((g.name, _tv_distance(obs, freq)))
    live = [(d, name) for name, d in distances if d is not None]
    best = min(live) if live else None
    return GroupEvidence(
        mode="statistical",
        matched_profile=best[1] if best else None,
        distance=best[0] if best else None,
        sample_size=n,
        distances=tuple(distances),
        degenerate=len(observed) == 1,
    )


def order_spectrum_evidence(
    observed: Mapping[CycleType, int],
    element_orders: Iterable[int],
    degree: int,
    name: str,
    min_sample: int = MIN_SAMPLE,
) -> GroupEvidence:
    """Partial evidence when no exact profile exists.

    Every observed cycle type must have an order (lcm of parts) in the group's
    element-order set, and a full ``degree``-cycle must occur (transitivity).
    """
    n = sum(observed.values())
    if n < min_sample:
        raise ValueError(f"sample of {n} usable primes is below the minimum {min_sample}")
    orders = frozenset(element_orders)
    bad = sorted(ct for ct in observed if reduce(math.lcm, ct, 1) not in orders)
    transitive = (degree,) in observed
    ok = not bad and transitive
    note = f"element orders {sorted(orders)}; full {degree}-cycle observed: {transitive}"
    if bad:
        note += "; incompatible types " + " ".join(format_cycle_type(ct) for ct in bad)
    return GroupEvidence(
        mode="statistical",
        matched_profile=f"{name}-order-spectrum" if ok else None,
        sample_size=n,
        degenerate=len(observed) == 1,
        note=note,
    )
