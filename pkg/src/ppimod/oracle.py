"""Brute-force reference arithmetic for differential testing.

Values are plain Python ints.  Nothing here imports the digit-vector code
or the kernels, so a bug there cannot cancel against a bug here.
"""

from __future__ import annotations

from math import gcd


class OracleError(ValueError):
    pass


def oracle_egcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def oracle_modinv(v: int, m: int) -> int:
    if m < 2:
        raise OracleError("modulus must be at least 2")
    g, x, _ = oracle_egcd(v % m, m)
    if g != 1:
        raise OracleError(f"{v} is not invertible modulo {m}")
    return x % m


def oracle_pow(beta: int, t: int) -> int:
    out = 1
    for _ in range(t):
        out *= beta
    return out


def oracle_mul(a: int, b: int) -> int:
    return a * b


def oracle_divmod(a: int, b: int) -> tuple[int, int]:
    if b < 1:
        raise ZeroDivisionError("divisor must be positive")
    return divmod(a, b)


def oracle_modiv(u: int, v: int, beta: int, s: int) -> int:
    """``(u / v) mod beta**s`` with the radix power of ``u`` split off."""
    if gcd(v, beta) != 1:
        raise OracleError(f"gcd({v}, {beta}) != 1")
    if u == 0:
        return 0
    q = 0
    while u % beta == 0:
        u //= beta
        q += 1
    if q >= s:
        return 0
    mod = oracle_pow(beta, s - q)
    return oracle_pow(beta, q) * (u * oracle_modinv(v, mod) % mod)


def oracle_digits(n: int, beta: int) -> list[int]:
    """LSF digits, canonical (zero has none)."""
    out = []
    while n:
        n, d = divmod(n, beta)
        out.append(d)
    return out


def oracle_from_digits(digits, beta: int) -> int:
    n = 0
    for d in reversed(list(digits)):
        n = n * beta + d
    return n


def oracle_period_longdiv(u: int, v: int, beta: int, cap: int = 10**6) -> tuple[int, list[int]]:
    """Period length and repeating block (most significant digit first).

    Long division of ``u/v`` in radix ``beta``; the block starts at the
    first repeated remainder.
    """
    if not 0 < u < v:
        raise OracleError("need 0 < u < v")
    g = gcd(u, v)
    if gcd(v // g, beta) != 1:
        raise OracleError("expansion is not purely periodic")
    seen: dict[int, int] = {}
    digits: list[int] = []
    rem = u
    while rem not in seen:
        if len(digits) > cap:
            raise OracleError(f"period exceeds cap {cap}")
        seen[rem] = len(digits)
        d, rem = divmod(rem * beta, v)
        digits.append(d)
    start = seen[rem]
    return len(digits) - start, digits[start:]
