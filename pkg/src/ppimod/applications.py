"""Applications of the alternated-carry scheme.

Exact division, the digit modulus (dmod), a linear surface-time
multiplication, Hensel codes (truncated beta-adic expansions) and periods
of purely periodic rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator

from . import kernels
from .digits import DigitVec, digit_mod_inverse, strip_beta_power
from .engine import ParTrace
from .errors import InexactDivisionError, NotInvertibleError, PreconditionError, ResourceLimitError
from .par_division import par_ppi_v2
from .seq_division import ModDivProblem, ppi_steps


def _complement(digits: list[int], beta: int) -> list[int]:
    """``beta**n - value`` over exactly ``n = len(digits)`` digits (mod beta**n)."""
    out = []
    carry = 1
    for d in digits:
        carry, digit = divmod(beta - 1 - d + carry, beta)
        out.append(digit)
    return out


def _same_radix(u: DigitVec, v: DigitVec) -> int:
    if u.beta != v.beta:
        raise PreconditionError("operands use different radixes")
    return u.beta


# -- exact division -----------------------------------------------------------


def exact_div(u: DigitVec, v: DigitVec, *, checked: bool = False) -> DigitVec:
    """``u / v`` when ``v`` is known to divide ``u``.

    The common radix power is stripped first; what is left of ``v`` must
    be invertible modulo the radix.  Only ``len(u) - len(v) + 1`` quotient
    digits are computed.  Non-divisibility is detected only in checked mode
    (or when the sizes already rule it out).
    """
    beta = _same_radix(u, v)
    if not v:
        raise PreconditionError("division by zero")
    if not u:
        return DigitVec.zero(beta)
    qu, _ = strip_beta_power(u)
    qv, v1 = strip_beta_power(v)
    if qv > qu:
        raise InexactDivisionError("divisor carries a higher radix power than the dividend")
    u1 = DigitVec(u.digits[qv:], beta)
    if gcd(v1[0], beta) != 1:
        raise NotInvertibleError(
            f"divisor without its radix power ends in digit {v1[0]}, not invertible mod {beta}"
        )
    r = len(u1) - len(v1) + 1
    if r < 1:
        raise InexactDivisionError("divisor is larger than the dividend")
    x, _ = par_ppi_v2(ModDivProblem(u1, v1, r), checked=checked)
    if checked and int(x) * int(v1) != int(u1):
        raise InexactDivisionError("divisor does not divide the dividend")
    return x


# -- dmod -----------------------------------------------------------------------


@dataclass(frozen=True)
class DmodResult:
    x: DigitVec
    w: DigitVec
    sign: int
    r: int
    trace: ParTrace

    @property
    def sign_char(self) -> str:
        return {1: "+", 0: "0", -1: "-"}[self.sign]


def dmod(u: DigitVec, v: DigitVec, *, checked: bool = False) -> DmodResult:
    """Modular quotient and digit modulus in one pass.

    With ``s = len(u)``, ``t = len(v)`` and ``r = s - t + 1``: returns
    ``x = (u / v) mod beta**r`` and ``w = |x*v - u| / beta**r``, plus the
    sign of ``x*v - u`` read from the top accumulator cell (0 there means
    negative; ``w == 0`` is reported as sign 0).
    """
    beta = _same_radix(u, v)
    s, t = len(u), len(v)
    if t < 1:
        raise PreconditionError("divisor must be nonzero")
    if s < t:
        raise PreconditionError(f"dividend has fewer digits ({s}) than the divisor ({t})")
    a = digit_mod_inverse(v[0], beta)
    x, L, (steps, width, work) = kernels.impl.dmod(list(u.digits), list(v.digits), beta, a, checked)
    r = s - t + 1
    w_digits = L[r : s + 1]
    if L[s + 1] == 0:
        sign = -1
        w_digits = _complement(w_digits, beta)
    else:
        sign = 1 if any(w_digits) else 0
    trace = ParTrace("dmod", beta, s, steps, width, work)
    return DmodResult(
        DigitVec.from_digits(x, beta), DigitVec.from_digits(w_digits, beta), sign, r, trace
    )


# -- multiplication ---------------------------------------------------------


def par_mul(u: DigitVec, v: DigitVec, *, checked: bool = False) -> tuple[DigitVec, ParTrace]:
    """Product by add-and-shift with alternated carries."""
    beta = _same_radix(u, v)
    if not u or not v:
        return DigitVec.zero(beta), ParTrace("parmul", beta, len(u))
    L, (steps, width, work) = kernels.impl.par_mul(list(u.digits), list(v.digits), beta, checked)
    return DigitVec.from_digits(L, beta), ParTrace("parmul", beta, len(u), steps, width, work)


# -- Hensel codes -----------------------------------------------------------------


@dataclass(frozen=True)
class HenselCode:
    digits: tuple[int, ...]
    beta: int
    precision: int

    @property
    def value(self) -> int:
        return int(DigitVec.from_digits(self.digits, self.beta))


class HenselStream:
    """Digits of the beta-adic expansion of ``u/v``, least significant first.

    Each digit costs one sequential PPI step; asking for more precision
    continues where the last request stopped.  Not safe to share between
    threads mid-stream.
    """

    def __init__(self, u: DigitVec, v: DigitVec):
        self.beta = _same_radix(u, v)
        a = digit_mod_inverse(v[0], self.beta)
        self.digits: list[int] = []
        self._source = self._generate(u, v, a)

    def _generate(self, u: DigitVec, v: DigitVec, a: int) -> Iterator[int]:
        if not u:
            while True:
                yield 0
        q, u1 = strip_beta_power(u)
        for _ in range(q):
            yield 0
        for step in ppi_steps(u1.digits, v.digits, self.beta, a):
            yield step.x

    def __iter__(self):
        return self

    def __next__(self) -> int:
        d = next(self._source)
        self.digits.append(d)
        return d

    def code(self, s: int) -> HenselCode:
        """The first ``s`` digits, computing only those not yet produced."""
        if s < 1:
            raise PreconditionError("precision must be positive")
        while len(self.digits) < s:
            next(self)
        return HenselCode(tuple(self.digits[:s]), self.beta, s)


def hensel_code(u: DigitVec, v: DigitVec, s: int) -> HenselCode:
    return HenselStream(u, v).code(s)


# -- periods ------------------------------------------------------------------------


@dataclass(frozen=True)
class PeriodResult:
    t: int
    T: DigitVec

    def block(self) -> list[int]:
        """The repeating block, most significant digit first."""
        return self.T.pad_to(self.t)[::-1]


def multiplicative_order(beta: int, v_red: DigitVec | int, cap: int) -> int:
    """Smallest ``t >= 1`` with ``beta**t == 1 (mod v_red)``."""
    n = int(v_red)
    if n < 2:
        raise PreconditionError("modulus must be at least 2")
    if gcd(n, beta) != 1:
        raise NotInvertibleError(f"gcd({n}, {beta}) != 1; the radix has no order")
    acc = beta % n
    t = 1
    while acc != 1:
        if t >= cap:
            raise ResourceLimitError(f"order of {beta} modulo {n} exceeds the cap {cap}")
        acc = acc * beta % n
        t += 1
    return t


def rational_period(u: DigitVec, v: DigitVec, max_t: int = 10**6) -> PeriodResult:
    """Period of the purely periodic expansion of ``u/v`` (``0 < u < v``).

    The fraction is reduced first.  The block ``T`` satisfies
    ``u_r * (beta**t - 1) == v_r * T`` and comes out as
    ``T = (-u_r / v_r) mod beta**t``, least significant digit first.
    """
    beta = _same_radix(u, v)
    ui, vi = int(u), int(v)
    if not 0 < ui < vi:
        raise PreconditionError("need 0 < u < v")
    g = gcd(ui, vi)
    u_r = DigitVec.from_int(ui // g, beta)
    v_r = DigitVec.from_int(vi // g, beta)
    if gcd(v_r[0], beta) != 1:
        raise NotInvertibleError("denominator shares a factor with the radix; not purely periodic")
    t = multiplicative_order(beta, v_r, max_t)
    # 0 < u_r < v_r <= beta**t - 1, so -u_r mod beta**t is a plain complement
    neg_u = DigitVec.from_digits(_complement(u_r.pad_to(t), beta), beta)
    T, _ = par_ppi_v2(ModDivProblem(neg_u, v_r, t))
    return PeriodResult(t, T)
