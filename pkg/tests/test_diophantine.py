import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from classdiv.arith import primes_upto
from classdiv.diophantine import (
    EXCEPTION_SET,
    BSInstance,
    Prop21Status,
    Tag,
    check_prop_2_1,
    fibonacci,
    in_E,
    in_F,
    in_G,
    in_H,
    ljunggren_oracle,
    lucas,
    lucas_square_indices,
    solve_bs,
    solve_special,
)
from oracles import fib_pair_list


def test_solve_bs_remark_quadruple():
    sol = solve_bs(BSInstance(7, 25, 4, 2), 20)
    assert sol.solutions == ((1, 3), (17, 9))
    assert Tag.REMARK22 in sol.classification and Tag.IN_E in sol.classification


def test_solve_bs_examples():
    assert solve_bs(BSInstance(7, 1, 4, 2), 20).solutions == ((1, 1), (3, 4))
    # 31 + 1 = 32 = 4 * 2^3
    assert solve_bs(BSInstance(31, 1, 4, 2), 20).solutions == ((1, 3),)
    sol = solve_bs(BSInstance(2, 1, 1, 3), 30)
    assert sol.solutions == ((1, 1), (2, 2), (11, 5))
    assert Tag.IN_E in sol.classification


def test_solve_special_examples():
    assert solve_special(7, 5, 2, 20).solutions == ((1, 3), (17, 9))
    assert solve_special(31, 1, 2, 20).solutions == ((1, 3),)
    assert solve_special(23, 3, 2, 20).solutions == ((1, 3),)


@given(st.integers(1, 200), st.integers(1, 200), st.sampled_from([1, 2, 4]), st.sampled_from(primes_upto(30)))
def test_solve_bs_solutions_satisfy_equation(d1, d2, lam_sq, p):
    sol = solve_bs(BSInstance(d1, d2, lam_sq, p), 40)
    ys = [y for _, y in sol.solutions]
    assert ys == sorted(ys) and all(1 <= y <= 40 for y in ys)
    for x, y in sol.solutions:
        assert d1 * x * x + d2 == lam_sq * p**y


def test_instance_validation():
    with pytest.raises(ValueError):
        BSInstance(1, 1, 3, 5)
    with pytest.raises(ValueError):
        BSInstance(1, 1, 2, 9)


def test_fibonacci_lucas():
    assert (fibonacci(0), lucas(0), lucas(3), fibonacci(10)) == (0, 2, 4, 55)
    fs, ls = fib_pair_list(1000)
    for k in range(1001):
        assert fibonacci(k) == fs[k] and lucas(k) == ls[k]
        assert ls[k] ** 2 - 5 * fs[k] ** 2 == 4 * (-1) ** k


def test_in_F():
    assert in_F(1, 7, 2, 10) == (3, 1)
    assert in_F(7, 25, 2, 50) is None
    assert in_F(3, 1, 1, 10) == (2, -1)


def test_in_F_membership_reconstructs():
    for k in range(2, 30):
        for eps in (1, -1):
            triple = (fibonacci(k - 2 * eps), lucas(k + eps), fibonacci(k))
            hit = in_F(*triple, 40)
            assert hit is not None
            kk, ee = hit
            assert (fibonacci(kk - 2 * ee), lucas(kk + ee), fibonacci(kk)) == triple


def test_in_G():
    assert in_G(1, 11, 3) == 1
    assert in_G(1, 107, 3) == 3
    assert in_G(3, 11, 3) is None
    assert in_G(1, 7, 2, lambda_sq=4) == 1
    assert in_G(1, 7, 2, lambda_sq=1) is None  # p must be odd unless lambda = 2
    for p in (3, 5, 7):
        for r in range(1, 10):
            assert in_G(1, 4 * p**r - 1, p) == r


def test_in_H():
    assert in_H(1, 1, 5, 2) is None
    assert in_H(2, 1, 3, 1) is None
    assert in_H(1, 2, 3, 1) == (1, 1)
    assert in_H(2, 4, 3, 1) is None  # not mutually coprime


def test_in_H_witnesses_satisfy_both_equations():
    hits = 0
    for lam_sq in (1, 2, 4):
        for d1 in range(1, 60):
            for d2 in range(1, 200):
                for p in primes_upto(30):
                    w = in_H(d1, d2, p, lam_sq)
                    if w is None:
                        continue
                    r, s = w
                    assert d1 * s * s + d2 == lam_sq * p**r
                    assert abs(3 * d1 * s * s - d2) == lam_sq
                    hits += 1
    assert hits > 0


def test_in_E():
    assert in_E(4, 7, 1, 2)
    assert in_E(4, 7, 25, 2)
    assert not in_E(4, 13, 1, 2)
    assert len(EXCEPTION_SET) == 8


def test_exception_set_members_have_two_solutions():
    for lam_sq, d1, d2, p in EXCEPTION_SET:
        assert len(solve_bs(BSInstance(d1, d2, lam_sq, p), 60).solutions) >= 2


def test_ljunggren_oracle():
    assert ljunggren_oracle(100, 30) == [(11, 3, 5), (20, 7, 4)]
    assert ljunggren_oracle(2, 3) == []
    assert ljunggren_oracle(7, 4) == [(20, 7, 4)]


def test_lucas_square_indices():
    assert lucas_square_indices(1000) == [1, 3]
    assert lucas_square_indices(1) == [1]
    assert lucas_square_indices(3) == [1, 3]


def test_prop_2_1_examples():
    r = check_prop_2_1(7, 1, 2, 30)
    assert r.status is Prop21Status.KNOWN_EXCEPTION and r.solutions == ((1, 1), (3, 4))
    r = check_prop_2_1(7, 5, 2, 30)
    assert r.status is Prop21Status.KNOWN_EXCEPTION and r.solutions == ((1, 3), (17, 9))
    assert check_prop_2_1(23, 3, 2, 30).status is Prop21Status.AT_MOST_ONE


def test_equation_7x2_plus_1_only_two_solutions():
    # 7 x^2 + 1 = 2^(y+2): y = 1, 4 only; y = 2, 0 mod 3 impossible mod 7
    assert solve_bs(BSInstance(7, 1, 4, 2), 300).solutions == ((1, 1), (3, 4))
    for t in range(1, 100):
        assert (2 * 8**t - 1) % 7 != 0
        assert (4 * 8**t - 1) % 7 != 0


def test_prop_2_1_counterexamples_in_sweep():
    """The exact set of multi-solution (d, a, p) in the small sweep.

    (15, 7, 2) has gcd(a, p) = 1: 15 + 49 = 4 * 2^4 and 15 * 33^2 + 49 = 4 * 2^12.
    It lies in the H family with s = 1, r = 4. The rest have p | a.
    """
    found = {}
    for p in primes_upto(50):
        for d in range(1, 501, 2):
            for a in range(1, 51, 2):
                if math.gcd(d, a) != 1:
                    continue
                r = check_prop_2_1(d, a, p, 40)
                if r.status is Prop21Status.VIOLATION:
                    found[(d, a, p)] = r.solutions
    assert found == {
        (15, 7, 2): ((1, 4), (33, 12)),
        (3, 7, 7): ((7, 2), (21, 3)),
        (3, 49, 7): ((49, 4), (147, 5)),
        (3, 13, 13): ((13, 2), (195, 4)),
        (3, 19, 19): ((19, 2), (95, 3)),
        (3, 37, 37): ((37, 2), (259, 3)),
    }
    assert in_H(15, 49, 2, 4) == (4, 1)
