import random

import pytest
from hypothesis import given, settings, strategies as st

from galspec.catalog import lookup
from galspec.poly import UniPoly, derivative_y, eval_t, is_separable, parse_bipoly, parse_unipoly
from galspec.real_roots import (
    count_real_roots, not_totally_real_witness, squarefree_part, sturm_chain,
    three_branch_point_rule, uniform_derivative_witness,
)

from oracles import count_real_roots_bisection


def test_examples():
    assert count_real_roots(parse_unipoly("Y^2 + 1")) == 0
    assert count_real_roots(parse_unipoly("(Y^2 + 1)*(Y^2 + 4)")) == 0
    assert count_real_roots(parse_unipoly("Y^5 - Y^4 - 1")) == 1
    assert count_real_roots(parse_unipoly("(Y - 1)^3*(Y + 2)")) == 2
    assert count_real_roots(UniPoly((7,), "Y")) == 0


def test_sturm_chain_starts_with_f_and_derivative():
    f = parse_unipoly("Y^3 - 2*Y")
    chain = sturm_chain(f)
    assert chain[0] == f and chain[1] == f.derivative()
    assert chain[-1].degree == 0


def test_oracle_on_bisection_example():
    assert count_real_roots_bisection([-1, 0, 0, 0, -1, 1]) == 1


def test_sturm_matches_bisection_oracle():
    rng = random.Random(7)
    checked = 0
    while checked < 300:
        deg = rng.randint(1, 8)
        coeffs = [rng.randint(-20, 20) for _ in range(deg)] + [rng.choice([c for c in range(-20, 21) if c])]
        f = UniPoly(tuple(coeffs), "Y")
        if not is_separable(f):
            continue
        assert count_real_roots(f) == count_real_roots_bisection(coeffs)
        checked += 1


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=2, max_size=9))
def test_real_root_parity(coeffs):
    f = UniPoly(tuple(coeffs), "Y")
    if f.degree < 1:
        return
    assert count_real_roots(f) % 2 == squarefree_part(f).degree % 2


def test_witness_examples():
    P = parse_bipoly("Y^5 - Y^4 - T")
    assert not_totally_real_witness(P, 1) == 0
    assert not_totally_real_witness(parse_bipoly("Y^2 - T"), 1) is None
    with pytest.raises(ValueError):
        not_totally_real_witness(P, 0)


def test_psl2f11_derivative_witness():
    P = lookup("psl2f11-p11").bipoly
    d9 = derivative_y(P, 9)
    assert count_real_roots(d9) == 0
    # smallest T-free derivative with a non-real root
    assert uniform_derivative_witness(P) == 6
    # P(0, Y) already has non-real roots, so the smallest witness is n = 0
    assert not_totally_real_witness(P, 0) == 0


@pytest.mark.parametrize("t0", [1, 2, 3, -1])
def test_witness_is_rechecked(t0):
    P = parse_bipoly("Y^5 - Y^4 - T")
    n = not_totally_real_witness(P, t0)
    f = eval_t(P, t0).derivative(n)
    g = squarefree_part(f)
    assert count_real_roots(g) < g.degree


def test_three_branch_rule():
    assert three_branch_point_rule(3, "S5")
    assert not three_branch_point_rule(4, "PSL2(11)")
    assert not three_branch_point_rule(3, "D4")
