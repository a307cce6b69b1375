"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Tolerances are pinned here; nothing is loosened to make a criterion pass.
"""

import math
import random
import subprocess
import sys
import time
from fractions import Fraction
from importlib import resources

from galspec.arith import ProjPoint, primes_up_to
from galspec.catalog import catalog, lookup
from galspec.certify import certificate_text, certify_family, revalidate
from galspec.finite_field import FpPoly, distinct_degree_pattern, has_root_mod_p
from galspec.galois_id import PROFILE_SPECS, build_profile, profile_filename, sample_cycle_types
from galspec.poly import (
    BiPoly, UniPoly, derivative_y, discriminant_uni, discriminant_y, is_separable, parse_bipoly,
    parse_unipoly, reduce_mod_p, squarefree_decomposition,
)
from galspec.real_roots import count_real_roots
from galspec.specialization import BranchData, branch_data, excluded_residues, meets_mod_p

from oracles import (
    count_real_roots_bisection, discriminant_by_interpolation, factor_degrees_trial,
    meets_by_valuations, monic_irreducibles,
)

CUBIC = parse_unipoly("108*T^3 - 7472*T^2 + 267408*T + 7987117")
CASES = 200
PRIME_BOUND = 20000


def up_to_sign(a, b) -> bool:
    return a == b or a == -b


# ------------------------------------------------------------ 1: constants


def test_1_constants(acceptance):
    start = time.perf_counter()
    s5 = lookup("s5-p5").bipoly
    ok_a = up_to_sign(discriminant_y(s5), parse_unipoly("5^5*T^4 + 4^4*T^3"))

    red = reduce_mod_p(lookup("psl2f7-p7").bipoly, 7)
    target = reduce_mod_p(parse_bipoly("Y^7 - 1 - T*Y*(Y + 1)^3"), 7)
    disc7 = red.discriminant_y()
    expected7 = FpPoly.from_rational(7, parse_unipoly("-3*T^8 - T^7").coeffs, "T")
    ok_b = red == target and up_to_sign(disc7, expected7)

    P11 = lookup("psl2f11-p11").bipoly
    disc11 = discriminant_y(P11)
    _, sqf = squarefree_decomposition(disc11)
    ok_c = up_to_sign(disc11, CUBIC ** 4) and [(g.coeffs, m) for g, m in sqf] == [(CUBIC.coeffs, 4)]

    ok_d = has_root_mod_p(CUBIC, 5) is False

    d9 = derivative_y(P11, 9)
    f = math.factorial
    d9_expected = UniPoly((7 * f(9), -3 * f(10), f(11) // 2), "Y")
    d9_disc = discriminant_uni(d9)
    ok_e = (d9 == d9_expected and d9_disc < 0
            and up_to_sign(d9_disc, f(10) * f(9) * (9 * 10 - 2 * 11 * 7))
            and count_real_roots(d9) == 0)

    a6 = parse_unipoly("(Y^2 + 1)*(Y^2 + 4)")
    d6 = discriminant_uni(a6)
    ok_f = d6 == 5184 == 4 * 9 * 9 * 16 and math.isqrt(d6) ** 2 == d6 and count_real_roots(a6) == 0
    elapsed = time.perf_counter() - start

    acceptance("1a", ok_a, f"Delta = {discriminant_y(s5)}")
    acceptance("1b", ok_b, f"P mod 7 = {red}; disc over F7 = {disc7}")
    acceptance("1c", ok_c, "Delta = (cubic)^4, squarefree exponent 4")
    acceptance("1d", ok_d, "cubic has no root mod 5")
    acceptance("1e", ok_e, f"9th derivative {d9}, disc {d9_disc}")
    acceptance("1f", ok_f and elapsed < 10, f"disc {d6}; all constants in {elapsed:.2f}s (< 10s)")
    assert all([ok_a, ok_b, ok_c, ok_d, ok_e, ok_f]) and elapsed < 10


# -------------------------------------------------------- 2: certification


def test_2_certify_s5(acceptance):
    start = time.perf_counter()
    cert = certify_family("s5-p5", PRIME_BOUND)
    elapsed = time.perf_counter() - start
    again = certify_family("s5-p5", PRIME_BOUND)
    u = cert.unramified_witness.to_dict()
    ok = (
        cert.verdict
        and u["t0"] == "1"
        and u["excluded_residues"] == ["0", "inf"]
        and cert.derivative_index == 0
        and cert.group_evidence.mode == "rigorous"
        and (2, (2, 3)) in cert.group_evidence.witnesses
        and certificate_text(cert) == certificate_text(again)
        and revalidate(cert)
        and elapsed < 30
    )
    acceptance("2", ok, f"verdict {cert.verdict}, witnesses {cert.group_evidence.witnesses} "
                        f"at points {cert.group_witness_points}, {elapsed:.1f}s")
    assert ok


# ------------------------------------------------------------ 3: Chebotarev


def test_3_chebotarev_t0_1(acceptance):
    sample = sample_cycle_types(lookup("s5-p5").bipoly, 1, PRIME_BOUND)
    freq = sample.frequencies()
    five = float(freq.get((5,), 0))
    ident = float(freq.get((1,) * 5, 0))
    ok = 0.17 <= five <= 0.23 and ident < 0.05
    acceptance("3", ok, f"t0=1: freq[5] = {five:.4f} (need [0.17, 0.23]), "
                        f"freq[1,1,1,1,1] = {ident:.4f} (need < 0.05), {sample.usable} usable primes")
    assert ok


# -------------------------------------------------------- 4: property suites


def _random_bipoly(rng):
    ny, nt = rng.randint(2, 6), rng.randint(0, 3)
    terms = {(ny, 0): 1}
    for i in range(ny):
        for j in range(nt + 1):
            c = rng.randint(-9, 9)
            if c:
                terms[(i, j)] = c
    return BiPoly.from_terms(terms)


def test_4a_discriminant_oracle(acceptance):
    rng = random.Random(4001)
    bad = 0
    for _ in range(CASES):
        P = _random_bipoly(rng)
        expected = discriminant_by_interpolation(P.terms(), P.y_degree, P.t_degree)
        bad += [Fraction(c) for c in discriminant_y(P).coeffs] != expected
    acceptance("4a", bad == 0, f"{CASES} cases, {bad} mismatches")
    assert bad == 0


def test_4b_sturm_oracle(acceptance):
    rng = random.Random(4002)
    bad = checked = 0
    while checked < CASES:
        deg = rng.randint(1, 8)
        coeffs = [rng.randint(-20, 20) for _ in range(deg)] + [rng.choice([c for c in range(-20, 21) if c])]
        f = UniPoly(tuple(coeffs), "Y")
        if not is_separable(f):
            continue
        checked += 1
        bad += count_real_roots(f) != count_real_roots_bisection(coeffs)
    acceptance("4b", bad == 0, f"{checked} squarefree cases, {bad} mismatches")
    assert bad == 0


def test_4c_meets_oracle(acceptance):
    rng = random.Random(4003)
    primes = primes_up_to(50)
    bad = 0
    for _ in range(CASES):
        roots = [Fraction(rng.randint(-40, 40), rng.randint(1, 40)) for _ in range(rng.randint(1, 4))]
        form = [1]
        for q in roots:
            lin = [-q.numerator, q.denominator]
            form = [sum(form[i] * lin[j - i] for i in range(len(form)) if 0 <= j - i < 2)
                    for j in range(len(form) + 1)]
        extra = rng.randint(0, 1)
        include_inf = rng.random() < 0.5
        B = BranchData.from_form(form, len(form) - 1 + extra, include_inf)
        all_roots = roots + ([None] if extra or include_inf else [])
        p = rng.choice(primes)
        t0 = None if rng.random() < 0.1 else Fraction(rng.randint(-80, 80), rng.randint(1, 80))
        expected = any(meets_by_valuations(t0, r, p) for r in all_roots)
        bad += meets_mod_p(ProjPoint(1, 0) if t0 is None else t0, B, p) != expected
    acceptance("4c", bad == 0, f"{CASES} cases, {bad} mismatches")
    assert bad == 0


def test_4d_ddf_oracle(acceptance):
    rng = random.Random(4004)
    irreducibles = {p: monic_irreducibles(p, 6) for p in (2, 3, 5)}
    bad = checked = 0
    while checked < CASES:
        p = rng.choice((2, 3, 5))
        f = FpPoly(p, tuple(rng.randrange(p) for _ in range(rng.randint(1, 6))) + (1,))
        if not f.is_squarefree():
            continue
        checked += 1
        bad += distinct_degree_pattern(f) != factor_degrees_trial(f.coeffs, p, irreducibles[p])
    acceptance("4d", bad == 0, f"{checked} cases over F2, F3, F5, {bad} mismatches")
    assert bad == 0


def test_4e_excluded_bound(acceptance):
    rng = random.Random(4005)
    primes = primes_up_to(100)
    bad = 0
    for _ in range(CASES):
        B = branch_data(_random_bipoly(rng)) if rng.random() < 0.5 else None
        if B is None or B.disc.degree < 1:
            coeffs = [rng.randint(-9, 9) for _ in range(rng.randint(1, 6))] + [rng.randint(1, 9)]
            B = BranchData.from_form(coeffs, include_infinity=rng.random() < 0.5)
        p = rng.choice(primes)
        bad += len(excluded_residues(B, p)) > B.branch_bound
    for entry in catalog():
        if entry.bipoly is None:
            continue
        B = branch_data(entry.bipoly)
        bad += any(len(excluded_residues(B, p)) > B.branch_bound for p in primes)
    acceptance("4e", bad == 0, f"{CASES} random cases + catalog entries, {bad} violations")
    assert bad == 0


# ----------------------------------------------------------- 5: profiles


def test_5_profiles(acceptance):
    s5 = build_profile("S5")
    psl = build_profile("PSL2F7-deg7")
    stale = [
        spec for spec in PROFILE_SPECS
        if resources.files("galspec.data.profiles").joinpath(profile_filename(spec)).read_bytes()
        != build_profile(spec).to_text().encode("utf-8")
    ]
    ok = s5.order == 120 and dict(s5.type_counts)[(5,)] == 24 and psl.order == 168 and not stale
    acceptance("5", ok, f"S5 order {s5.order}, 5-cycles {dict(s5.type_counts)[(5,)]}, "
                        f"PSL2F7-deg7 order {psl.order}, stale files {stale}")
    assert ok


# --------------------------------------------------------- 6: determinism


def _cli(*args) -> bytes:
    return subprocess.run([sys.executable, "-m", "galspec", *args], capture_output=True, check=False).stdout


def test_6_determinism(acceptance):
    rep1, rep2 = _cli("reproduce", "all"), _cli("reproduce", "all")
    cert1, cert2 = _cli("certify", "s5-p5"), _cli("certify", "s5-p5")
    ok = rep1 == rep2 and cert1 == cert2 and rep1 and cert1
    acceptance("6", bool(ok), f"reproduce {len(rep1)} bytes, certify {len(cert1)} bytes, identical across runs")
    assert ok
