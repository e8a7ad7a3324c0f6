from fractions import Fraction
from itertools import product

from pasep.polyring import ONE, Q, Y, ZERO, monomial, parse_poly, substitute
from pasep.qtools import (
    binomial,
    dyck_prefix_weighted,
    motzkin_prefix_gf,
    q_binomial,
    q_int,
    q_pochhammer_eval,
    touchard_M,
)


def test_q_int():
    assert q_int(0) == ZERO
    assert q_int(2) == ONE + Q
    for k in range(21):
        assert substitute(q_int(k), "q", ONE) == k * ONE


def test_q_binomial_frozen():
    assert q_binomial(5, 0) == ONE
    # oracle: the product formula (1-q^3)(1-q^4) / ((1-q)(1-q^2)) expanded
    assert q_binomial(4, 2) == parse_poly("q^4 + q^3 + 2*q^2 + q + 1")


def test_q_binomial_specializes_to_binomial():
    for n in range(13):
        for k in range(n + 1):
            assert substitute(q_binomial(n, k), "q", ONE) == binomial(n, k) * ONE


def test_q_binomial_symmetry():
    for n in range(13):
        for k in range(n + 1):
            assert q_binomial(n, k) == q_binomial(n, n - k)


def test_q_pochhammer():
    assert q_pochhammer_eval(Fraction(3), Fraction(2), 0) == 1
    assert q_pochhammer_eval(Fraction(1), Fraction(5, 7), 3) == 0
    assert q_pochhammer_eval(Fraction(1, 2), Fraction(1, 3), 2) == Fraction(5, 12)


def test_binomial_conventions():
    assert binomial(5, -1) == 0
    assert binomial(4, 2) == 6
    assert binomial(6, 7) == 0


def _brute_motzkin_prefixes(N, h):
    total = ZERO
    for steps in product((1, 0, -1), repeat=N):
        height = 0
        ok = True
        levels = downs = 0
        for s in steps:
            height += s
            if height < 0:
                ok = False
                break
            if s == 0:
                levels += 1
            elif s == -1:
                downs += 1
        if ok and height == h:
            total = total + (ONE + Y) ** levels * Y**downs
    return total


def test_motzkin_prefix_small():
    assert motzkin_prefix_gf(1, 1) == ONE
    assert motzkin_prefix_gf(1, 0) == ONE + Y


def test_motzkin_prefix_exhaustive():
    for N in range(8):
        for h in range(N + 1):
            assert motzkin_prefix_gf(N, h) == _brute_motzkin_prefixes(N, h), (N, h)


def _brute_dyck_prefixes(length, h):
    total = ZERO
    for steps in product((1, -1), repeat=length):
        height = 0
        ok = True
        downs = 0
        for s in steps:
            height += s
            if height < 0:
                ok = False
                break
            if s == -1:
                downs += 1
        if ok and height == h:
            total = total + Y**downs
    return total


def test_dyck_prefix_exhaustive():
    for length in range(15):
        for h in range(length + 2):
            assert dyck_prefix_weighted(length, h) == _brute_dyck_prefixes(length, h)


def test_dyck_prefix_frozen():
    assert dyck_prefix_weighted(3, 3) == ONE
    assert dyck_prefix_weighted(2, 0) == Y
    assert dyck_prefix_weighted(3, 0) == ZERO


def test_touchard_M():
    for k in range(9):
        assert touchard_M(0, k) == ONE
    assert touchard_M(1, 2) == Y * (ONE - Q)
    assert touchard_M(-1, 5) == ZERO


def test_touchard_M_recurrence():
    for k in range(11):
        for n in range(1, k + 2):
            if (k - n + 1) % 2:
                continue
            lhs = touchard_M((k - n + 1) // 2, k) + Y * (ONE - monomial(1, eq=n + 1)) * touchard_M(
                (k - n - 1) // 2, k
            )
            assert lhs == touchard_M((k - n + 1) // 2, k + 1), (k, n)
