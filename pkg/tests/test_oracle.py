import pytest

from ppimod.oracle import (
    OracleError,
    oracle_divmod,
    oracle_egcd,
    oracle_modinv,
    oracle_modiv,
    oracle_mul,
    oracle_period_longdiv,
    oracle_pow,
)


def test_modinv_examples():
    r = oracle_modinv(7, 10**6)
    assert 7 * r % 10**6 == 1
    assert oracle_modinv(1, 12345) == 1
    assert oracle_modinv(3, 10) == 7
    with pytest.raises(OracleError):
        oracle_modinv(4, 10)


@pytest.mark.parametrize("a, b", [(240, 46), (0, 5), (17, 0), (2**89 - 1, 3**50)])
def test_egcd_bezout(a, b):
    g, x, y = oracle_egcd(a, b)
    assert a * x + b * y == g
    if a or b:
        assert a % g == 0 and b % g == 0


def test_modinv_many():
    for m in (2, 10, 2**31, 3**20, 65536**4):
        for v in range(1, 400, 7):
            try:
                r = oracle_modinv(v, m)
            except OracleError:
                continue
            assert v * r % m == 1 and 0 <= r < m


def test_modiv():
    assert oracle_modiv(37229, 1543, 2, 7) == 107
    assert oracle_modiv(5, 3, 10, 4) == 3335
    assert oracle_modiv(0, 3, 10, 4) == 0
    # 12/3 mod 2^5: strip 2^2, then 3/3
    assert oracle_modiv(12, 3, 2, 5) == 4
    assert oracle_modiv(8, 5, 2, 3) == 0


def test_arith():
    assert oracle_mul(1543, 107) == 165101
    assert oracle_divmod(165101, 1543) == (107, 0)
    assert oracle_pow(2, 7) == 128
    with pytest.raises(ZeroDivisionError):
        oracle_divmod(1, 0)


def test_longdiv_periods():
    assert oracle_period_longdiv(1, 7, 10) == (6, [1, 4, 2, 8, 5, 7])
    assert oracle_period_longdiv(1, 3, 10) == (1, [3])
    assert oracle_period_longdiv(1, 11, 10) == (2, [0, 9])
    with pytest.raises(OracleError):
        oracle_period_longdiv(1, 2, 10)
    with pytest.raises(OracleError):
        oracle_period_longdiv(1, 7 * 10**9 + 3, 10, cap=10)
