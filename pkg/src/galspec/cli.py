"""Command-line interface: ``galspec <subcommand> ...``.

Exit codes: 0 when every check passes, 1 on a failed check or a domain
error, 2 on a usage error (bad arguments, unreadable or unparsable input).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .arith import parse_point, parse_rational, residue_sort_key
from .catalog import format_report, lookup, reproduce
from .certify import certificate_text, certify_family
from .finite_field import format_cycle_type
from .galois_id import (
    PROFILE_SPECS, build_profile, default_prime_bound, order_spectrum_evidence,
    psl2_element_orders, rigorous_s5, sample_cycle_types, statistical_match,
)
from .poly import discriminant_y, parse_bipoly, parse_unipoly, reduce_mod_p
from .real_roots import count_real_roots, not_totally_real_witness
from .specialization import branch_data, excluded_residues, meets_mod_p, search_t0


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    try:
        raw = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    lines = [ln.split("#", 1)[0] for ln in raw.splitlines()]
    return " ".join(ln for ln in lines if ln.strip())


def _bipoly(path: str):
    try:
        return parse_bipoly(_read_text(path))
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _residues(res) -> str:
    return ",".join(str(r) for r in sorted(res, key=residue_sort_key))


def cmd_disc(args) -> int:
    print(discriminant_y(_bipoly(args.polyfile)))
    return 0


def cmd_reduce(args) -> int:
    red = reduce_mod_p(_bipoly(args.polyfile), args.p)
    print(str(red).replace(f" (mod {args.p})", ""))
    return 0


def cmd_branch(args) -> int:
    B = branch_data(_bipoly(args.polyfile))
    print(f"disc\t{B.disc}")
    print(f"branch_bound\t{B.branch_bound}")
    for g, m in B.squarefree_factors:
        print(f"factor\t{g}\t{m}")
    print(f"include_infinity\t{str(B.include_infinity).lower()}")
    if args.p is not None:
        print(f"excluded_residues\t{_residues(excluded_residues(B, args.p))}")
    return 0


def cmd_meets(args) -> int:
    B = branch_data(_bipoly(args.polyfile))
    try:
        t = parse_point(args.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(str(meets_mod_p(t, B, args.p)).lower())
    return 0


def cmd_search_t0(args) -> int:
    B = branch_data(_bipoly(args.polyfile))
    print(search_t0(B, args.p, args.bound))
    return 0


def cmd_imaginary(args) -> int:
    n = not_totally_real_witness(_bipoly(args.polyfile), _rational(args.t))
    print("none" if n is None else n)
    return 0


def cmd_sturm(args) -> int:
    try:
        f = parse_unipoly(_read_text(args.polyfile))
    except ValueError as exc:
        raise UsageError(f"{args.polyfile}: {exc}") from exc
    print(count_real_roots(f))
    return 0


def cmd_galois_id(args) -> int:
    P = _bipoly(args.polyfile)
    t0 = _rational(args.t)
    bound = args.primes or default_prime_bound()
    if args.rigorous:
        if P.y_degree != 5:
            raise UsageError("--rigorous is only available for quintics")
        ev = rigorous_s5(P, t0, bound)
        if ev is None:
            print("rigorous\tinconclusive")
            return 1
        print("rigorous\tS5")
        for q, ct in ev.witnesses:
            print(f"witness\t{q}\t{format_cycle_type(ct)}")
        return 0
    sample = sample_cycle_types(P, t0, bound)
    print(f"usable_primes\t{sample.usable}")
    print(f"skipped_primes\t{','.join(map(str, sample.skipped))}")
    for ct, c in sorted(sample.counts.items()):
        print(f"type\t{format_cycle_type(ct)}\t{c}\t{c / sample.usable:.6f}")
    n = P.y_degree
    profiles = [build_profile(s) for s, (deg, _) in PROFILE_SPECS.items() if deg == n]
    if profiles:
        ev = statistical_match(sample.counts, profiles)
        for name, d in ev.distances:
            print(f"profile\t{name}\t{'disqualified' if d is None else f'{float(d):.6f}'}")
    elif n == 11:
        ev = order_spectrum_evidence(sample.counts, psl2_element_orders(11), 11, "PSL2F11")
        print(f"note\t{ev.note}")
    else:
        print("matched\tnone")
        return 0
    print(f"matched\t{ev.matched_profile or 'none'}")
    return 0


def cmd_certify(args) -> int:
    entry = lookup(args.entry)
    if entry is None:
        raise UsageError(f"unknown catalog entry {args.entry!r}")
    cert = certify_family(entry, args.primes)
    text = certificate_text(cert)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0 if cert.verdict else 1


def cmd_reproduce(args) -> int:
    if args.entry != "all" and lookup(args.entry) is None:
        raise UsageError(f"unknown catalog entry {args.entry!r}")
    checks = reproduce(args.entry)
    sys.stdout.write(format_report(checks))
    return 0 if all(c.match for c in checks) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="galspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, poly=True):
        sp = sub.add_parser(name, help=help_)
        if poly:
            sp.add_argument("polyfile")
        sp.set_defaults(func=func)
        return sp

    add("disc", cmd_disc, "print the Y-discriminant Delta(T)")
    add("reduce", cmd_reduce, "reduce P modulo a prime").add_argument("-p", type=int, required=True)
    add("branch", cmd_branch, "branch-point superset and excluded residues").add_argument("-p", type=int)
    sp = add("meets", cmd_meets, "does t0 meet a branch point modulo p")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-t", required=True)
    sp = add("search-t0", cmd_search_t0, "smallest admissible integer t0")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--bound", type=int)
    add("imaginary", cmd_imaginary, "derivative witness for 'not totally real'").add_argument("-t", required=True)
    add("sturm", cmd_sturm, "number of distinct real roots of a univariate polynomial")
    sp = add("galois-id", cmd_galois_id, "Frobenius cycle-type evidence")
    sp.add_argument("-t", required=True)
    sp.add_argument("--primes", type=int)
    sp.add_argument("--rigorous", action="store_true")
    sp = add("certify", cmd_certify, "certify a catalog entry", poly=False)
    sp.add_argument("entry")
    sp.add_argument("--primes", type=int)
    sp.add_argument("-o", "--output")
    sp = add("reproduce", cmd_reproduce, "recompute published constants", poly=False)
    sp.add_argument("entry")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"galspec: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, KeyError) as exc:
        print(f"galspec: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
