import random
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ppimod.digits import (
    MAX_RADIX,
    DigitVec,
    beta_complement_digit,
    check_radix,
    digit_count,
    digit_mod_inverse,
    from_decimal_string,
    strip_beta_power,
    to_decimal_string,
    truncate_mod_power,
)
from ppimod.errors import NotInvertibleError, PreconditionError, ResourceLimitError

RADIXES = [2, 3, 10, 257, 65536, MAX_RADIX]


def divmod_digits(n, beta):
    out = []
    while n:
        n, d = divmod(n, beta)
        out.append(d)
    return out


def test_zero_is_empty():
    assert from_decimal_string("0", 10).digits == ()
    assert from_decimal_string("000", 7).digits == ()


def test_37229_binary():
    # repeated div-mod: 37229 = 0b1001000101101101
    want = divmod_digits(37229, 2)
    assert want == [1, 0, 1, 1, 0, 1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 1]
    assert list(from_decimal_string("37229", 2).digits) == want


def test_decimal_identity():
    assert from_decimal_string("1543", 10).digits == (3, 4, 5, 1)


@pytest.mark.parametrize(
    "digits, beta, text",
    [((), 10, "0"), ((7, 0, 1), 10, "107"), ((1, 1, 0, 1, 0, 1, 1), 2, "107")],
)
def test_to_decimal(digits, beta, text):
    assert to_decimal_string(DigitVec(digits, beta)) == text


@pytest.mark.parametrize("bad", ["", "-5", "12a", "1 2", "+3", "١٢"])
def test_rejects_non_numerals(bad):
    with pytest.raises(PreconditionError):
        from_decimal_string(bad, 10)


def test_size_limit():
    with pytest.raises(ResourceLimitError):
        from_decimal_string("9" * 100_001, 10)


@pytest.mark.parametrize("beta", [0, 1, MAX_RADIX + 1, True])
def test_radix_cap(beta):
    with pytest.raises(PreconditionError):
        check_radix(beta)


def test_canonical_form_enforced():
    with pytest.raises(PreconditionError):
        DigitVec((1, 0), 10)
    with pytest.raises(PreconditionError):
        DigitVec((10,), 10)
    assert DigitVec.from_digits([1, 0, 0], 10) == DigitVec((1,), 10)


def test_pad_to():
    x = DigitVec((1, 2), 10)
    assert x.pad_to(4) == [1, 2, 0, 0]
    with pytest.raises(PreconditionError):
        x.pad_to(1)


@given(st.integers(min_value=0, max_value=10**400), st.sampled_from(RADIXES))
def test_round_trip(n, beta):
    text = str(n)
    x = from_decimal_string(text, beta)
    assert list(x.digits) == divmod_digits(n, beta)
    assert to_decimal_string(x) == text


def test_round_trip_beyond_str_limit():
    n = 3**30000  # more than 4300 decimal digits
    x = DigitVec.from_int(n, 65536)
    assert int(x) == n
    assert int(from_decimal_string(to_decimal_string(x), 10)) == n


@pytest.mark.parametrize("n, beta, count", [(37229, 2, 16), (1543, 2, 11), (0, 10, 0)])
def test_digit_count(n, beta, count):
    assert digit_count(DigitVec.from_int(n, beta)) == count


def test_truncate_table_rows():
    assert int(truncate_mod_power(DigitVec.from_int(37229, 2), 7)) == 109
    assert truncate_mod_power(DigitVec.from_int(37229, 2), 7).digits == (1, 0, 1, 1, 0, 1, 1)
    assert int(truncate_mod_power(DigitVec.from_int(1543, 2), 7)) == 7
    assert truncate_mod_power(DigitVec.from_int(1543, 2), 0).digits == ()


@given(st.integers(min_value=0, max_value=10**60), st.integers(0, 80), st.sampled_from(RADIXES))
def test_truncate_reassembly(n, s, beta):
    low = int(truncate_mod_power(DigitVec.from_int(n, beta), s))
    assert low + beta**s * (n // beta**s) == n
    assert low < beta**s


@pytest.mark.parametrize("n, beta, q, rest", [(12, 2, 2, 3), (107, 2, 0, 107), (5000, 10, 3, 5)])
def test_strip_beta_power(n, beta, q, rest):
    got_q, got = strip_beta_power(DigitVec.from_int(n, beta))
    assert (got_q, int(got)) == (q, rest)


def test_strip_zero_is_error():
    with pytest.raises(PreconditionError):
        strip_beta_power(DigitVec.zero(10))


@pytest.mark.parametrize("beta", [2, 3, 10, 257, 65536])
def test_strip_reassembly_random(beta):
    rng = random.Random(beta)
    for _ in range(10_000):
        n = rng.randrange(1, beta**6) * beta ** rng.randrange(0, 5)
        q, rest = strip_beta_power(DigitVec.from_int(n, beta))
        assert beta**q * int(rest) == n
        assert int(rest) % beta != 0


def test_digit_inverse_examples():
    assert digit_mod_inverse(1, 97) == 1
    assert digit_mod_inverse(7, 10) == 3
    with pytest.raises(NotInvertibleError):
        digit_mod_inverse(4, 10)


def test_digit_inverse_exhaustive():
    for beta in range(2, 65):
        for v0 in range(beta):
            if gcd(v0, beta) == 1:
                assert digit_mod_inverse(v0, beta) * v0 % beta == 1
            else:
                with pytest.raises(NotInvertibleError):
                    digit_mod_inverse(v0, beta)


def test_digit_inverse_large_radix():
    assert digit_mod_inverse(MAX_RADIX - 1, MAX_RADIX) * (MAX_RADIX - 1) % MAX_RADIX == 1


@pytest.mark.parametrize(
    "u_k, k, r, want", [(0, 5, 5, 10), (9, 6, 5, 0), (3, 7, 5, 6), (4, 5, 5, 6)]
)
def test_beta_complement(u_k, k, r, want):
    assert beta_complement_digit(u_k, k, r, 10) == want


def test_beta_complement_below_boundary():
    with pytest.raises(PreconditionError):
        beta_complement_digit(1, 2, 3, 10)
