import random
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ppimod.applications import (
    HenselStream,
    dmod,
    exact_div,
    hensel_code,
    multiplicative_order,
    par_mul,
    rational_period,
)
from ppimod.digits import DigitVec
from ppimod.errors import (
    InexactDivisionError,
    NotInvertibleError,
    PreconditionError,
    ResourceLimitError,
)
from ppimod.oracle import oracle_modiv, oracle_mul, oracle_period_longdiv

RADIXES = [2, 3, 10, 257, 65536]
D = DigitVec.from_int


def coprime_int(draw, beta, hi):
    v = draw(st.integers(1, hi))
    return v if gcd(v % beta, beta) == 1 else v * beta + 1


# -- exact division ---------------------------------------------------------------


def test_exact_div_examples():
    assert int(exact_div(D(165101, 10), D(1543, 10))) == 107
    assert int(exact_div(D(37229 * 8, 2), D(8, 2))) == 37229
    assert int(exact_div(D(0, 10), D(7, 10))) == 0
    assert int(exact_div(D(1200, 10), D(30, 10))) == 40


def test_exact_div_errors():
    with pytest.raises(PreconditionError):
        exact_div(D(5, 10), D(0, 10))
    with pytest.raises(InexactDivisionError):
        exact_div(D(7, 10), D(70, 10))
    with pytest.raises(NotInvertibleError):
        exact_div(D(100, 10), D(4, 10))
    with pytest.raises(InexactDivisionError):
        exact_div(D(7, 10), D(1543, 10))
    with pytest.raises(InexactDivisionError):
        exact_div(D(1544 * 3, 10), D(1543, 10), checked=True)


@given(st.data())
def test_exact_div_recovers_quotient(data):
    beta = data.draw(st.sampled_from(RADIXES))
    q = data.draw(st.integers(0, beta**30))
    v = coprime_int(data.draw, beta, beta**20) * beta ** data.draw(st.integers(0, 3))
    u = oracle_mul(q, v)
    assert int(exact_div(D(u, beta), D(v, beta), checked=True)) == q


# -- dmod -----------------------------------------------------------------------------


def check_dmod(u, v, beta):
    res = dmod(D(u, beta), D(v, beta), checked=True)
    r = len(D(u, beta)) - len(D(v, beta)) + 1
    assert res.r == r
    assert int(res.x) == oracle_modiv(u, v, beta, r) if u % beta else True
    assert int(res.x) * v - u == res.sign * int(res.w) * beta**r
    assert 0 <= int(res.w) < beta ** len(D(v, beta))
    assert (res.sign == 0) == (int(res.w) == 0)
    return res


def test_dmod_hand_case():
    res = check_dmod(37229, 1543, 2)
    assert (int(res.x), int(res.w), res.sign_char, res.r) == (43, 455, "+", 6)


def test_dmod_small_cases():
    res = check_dmod(1543, 1543, 10)
    assert (int(res.x), int(res.w), res.sign, res.r) == (1, 0, 0, 1)
    res = check_dmod(300, 37, 10)
    assert (int(res.x), int(res.w), res.sign, res.r) == (0, 3, -1, 2)


def test_dmod_errors():
    with pytest.raises(PreconditionError):
        dmod(D(5, 10), D(1543, 10))
    with pytest.raises(NotInvertibleError):
        dmod(D(1000, 10), D(12, 10))


@given(st.data())
def test_dmod_reassembly(data):
    beta = data.draw(st.sampled_from(RADIXES))
    v = coprime_int(data.draw, beta, beta**15)
    u = data.draw(st.integers(v, beta**25 + v))
    check_dmod(u, v, beta)


# -- multiplication ------------------------------------------------------------------------


def test_par_mul_examples():
    assert int(par_mul(D(1543, 10), D(107, 10))[0]) == 165101
    assert int(par_mul(D(0, 10), D(107, 10))[0]) == 0
    for beta in (2, 10, 65536):
        n = beta**17 - 1
        assert int(par_mul(D(n, beta), D(n, beta), checked=True)[0]) == n * n


@given(st.data())
def test_par_mul_matches_oracle(data):
    beta = data.draw(st.sampled_from(RADIXES))
    u = data.draw(st.integers(0, beta**40))
    v = data.draw(st.integers(0, beta**40))
    prod, trace = par_mul(D(u, beta), D(v, beta), checked=True)
    assert int(prod) == oracle_mul(u, v)
    assert trace.max_width <= max(len(D(u, beta)), len(D(v, beta))) + 1


# -- Hensel codes ------------------------------------------------------------------------------


def test_hensel_examples():
    assert hensel_code(D(37229, 2), D(1543, 2), 7).digits == (1, 1, 0, 1, 0, 1, 1)
    stream = HenselStream(D(5, 10), D(3, 10))
    assert stream.code(3).digits == (5, 3, 3)
    assert stream.code(4).digits == (5, 3, 3, 3)
    assert hensel_code(D(123456, 10), D(1, 10), 4).digits == (6, 5, 4, 3)
    assert hensel_code(D(0, 10), D(3, 10), 3).digits == (0, 0, 0)
    assert hensel_code(D(500, 10), D(3, 10), 4).digits == (0, 0, 5, 3)


def test_hensel_errors():
    with pytest.raises(NotInvertibleError):
        hensel_code(D(1, 10), D(5, 10), 3)
    with pytest.raises(PreconditionError):
        hensel_code(D(1, 10), D(3, 10), 0)


@given(st.data())
def test_hensel_prefix_and_value(data):
    beta = data.draw(st.sampled_from(RADIXES))
    v = coprime_int(data.draw, beta, beta**6)
    u = data.draw(st.integers(0, beta**6))
    stream = HenselStream(D(u, beta), D(v, beta))
    prev = ()
    for s in range(1, 20):
        code = stream.code(s)
        assert code.digits[: s - 1] == prev
        assert code.value == oracle_modiv(u, v, beta, s)
        prev = code.digits


# -- periods -------------------------------------------------------------------------------------


@pytest.mark.parametrize(
    "u, v, beta, t, T",
    [(1, 7, 10, 6, 142857), (1, 3, 10, 1, 3), (2, 7, 10, 6, 285714), (3, 21, 10, 6, 142857), (1, 7, 2, 3, 1)],
)
def test_period_examples(u, v, beta, t, T):
    res = rational_period(D(u, beta), D(v, beta))
    assert (res.t, int(res.T)) == (t, T)


def test_period_block_keeps_leading_zeros():
    res = rational_period(D(1, 10), D(13, 10))
    assert res.block() == [0, 7, 6, 9, 2, 3]
    assert oracle_period_longdiv(1, 13, 10) == (6, res.block())


def test_multiplicative_order():
    assert multiplicative_order(10, 7, 100) == 6
    assert multiplicative_order(10, 3, 100) == 1
    assert multiplicative_order(2, 7, 100) == 3
    with pytest.raises(ResourceLimitError):
        multiplicative_order(10, 7, 5)
    with pytest.raises(NotInvertibleError):
        multiplicative_order(10, 6, 100)
    with pytest.raises(PreconditionError):
        multiplicative_order(10, 1, 100)


def test_period_errors():
    with pytest.raises(PreconditionError):
        rational_period(D(7, 10), D(7, 10))
    with pytest.raises(PreconditionError):
        rational_period(D(0, 10), D(7, 10))
    with pytest.raises(NotInvertibleError):
        rational_period(D(1, 10), D(6, 10))
    with pytest.raises(ResourceLimitError):
        rational_period(D(1, 10), D(7, 10), max_t=3)
    # 2/6 reduces to 1/3, which is purely periodic
    assert rational_period(D(2, 10), D(6, 10)).t == 1


def test_period_fuzz():
    rng = random.Random(11)
    for _ in range(150):
        beta = rng.choice([2, 3, 10, 16])
        v = rng.randrange(2, 400)
        if gcd(v, beta) != 1:
            continue
        u = rng.randrange(1, v)
        res = rational_period(D(u, beta), D(v, beta))
        g = gcd(u, v)
        assert (u // g) * (beta**res.t - 1) == (v // g) * int(res.T)
        assert (res.t, res.block()) == oracle_period_longdiv(u, v, beta)
