"""Radix-beta digit vectors and the single-digit primitives.

Digits are stored least-significant first, one per slot.  A ``DigitVec``
is canonical: no high-order zero digits, so the empty vector is zero and
structural equality is value equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import NotInvertibleError, PreconditionError, ResourceLimitError

#: Largest supported radix.  (beta**2 + beta - 2) and the pre-carry sums
#: (2*beta**2 - beta - 1) must fit a 64-bit accumulator.
MAX_RADIX = 2**31

#: Largest decimal numeral accepted by :func:`from_decimal_string`.
MAX_DECIMAL_DIGITS = 100_000

_DEC_CHUNK = 1000
_SMALL_DIGITS = 64


def check_radix(beta: int) -> int:
    if not isinstance(beta, int) or isinstance(beta, bool):
        raise PreconditionError(f"radix must be an integer, got {beta!r}")
    if beta < 2:
        raise PreconditionError(f"radix must be >= 2, got {beta}")
    if beta > MAX_RADIX:
        raise PreconditionError(f"radix {beta} exceeds the cap {MAX_RADIX}")
    return beta


def _int_to_digits(n: int, beta: int) -> list[int]:
    """Little-endian digits of ``n`` (canonical, no padding)."""
    if n < 0:
        raise PreconditionError("negative integers are not representable")
    if n == 0:
        return []
    # divide and conquer on beta**(2**j) keeps big conversions subquadratic
    powers = [beta]
    while powers[-1] * powers[-1] <= n:
        powers.append(powers[-1] * powers[-1])
    small = beta**_SMALL_DIGITS

    def rec(m: int, level: int, width: int | None) -> list[int]:
        if level < 0 or m < small:
            out = []
            while m:
                m, d = divmod(m, beta)
                out.append(d)
            if width is not None:
                out.extend([0] * (width - len(out)))
            return out
        hi, lo = divmod(m, powers[level])
        half = 1 << level
        low = rec(lo, level - 1, half)
        if hi == 0 and width is None:
            return low
        high = rec(hi, level - 1, None if width is None else width - half)
        return low + high

    out = rec(n, len(powers) - 1, None)
    while out and out[-1] == 0:
        out.pop()
    return out


def _digits_to_int(digits: Sequence[int], beta: int) -> int:
    n = len(digits)
    if n <= _SMALL_DIGITS:
        acc = 0
        for d in reversed(digits):
            acc = acc * beta + d
        return acc
    half = n // 2
    return _digits_to_int(digits[:half], beta) + beta**half * _digits_to_int(
        digits[half:], beta
    )


@dataclass(frozen=True)
class DigitVec:
    """A nonnegative integer as little-endian radix-``beta`` digits."""

    digits: tuple[int, ...]
    beta: int

    def __post_init__(self):
        check_radix(self.beta)
        if not isinstance(self.digits, tuple):
            object.__setattr__(self, "digits", tuple(self.digits))
        for d in self.digits:
            if not 0 <= d < self.beta:
                raise PreconditionError(f"digit {d} out of range for radix {self.beta}")
        if self.digits and self.digits[-1] == 0:
            raise PreconditionError("DigitVec must not carry high-order zeros")

    @classmethod
    def from_int(cls, n: int, beta: int) -> DigitVec:
        check_radix(beta)
        return cls(tuple(_int_to_digits(n, beta)), beta)

    @classmethod
    def from_digits(cls, digits: Iterable[int], beta: int) -> DigitVec:
        """Build from possibly zero-padded LSF digits."""
        ds = list(digits)
        while ds and ds[-1] == 0:
            ds.pop()
        return cls(tuple(ds), beta)

    @classmethod
    def zero(cls, beta: int) -> DigitVec:
        return cls((), beta)

    def __int__(self) -> int:
        return _digits_to_int(self.digits, self.beta)

    __index__ = __int__

    def __len__(self) -> int:
        return len(self.digits)

    def __bool__(self) -> bool:
        return bool(self.digits)

    def __getitem__(self, i: int) -> int:
        """Digit ``i``; positions beyond the top read as zero."""
        if i < 0:
            raise IndexError("negative digit index")
        return self.digits[i] if i < len(self.digits) else 0

    def pad_to(self, s: int) -> list[int]:
        """Exactly ``s`` digits, zero-filled.  The value must fit."""
        if len(self.digits) > s:
            raise PreconditionError(f"value has {len(self.digits)} digits, cannot pad to {s}")
        return list(self.digits) + [0] * (s - len(self.digits))

    def __str__(self) -> str:
        return to_decimal_string(self)


def from_decimal_string(text: str, beta: int) -> DigitVec:
    """Parse an unsigned ASCII decimal numeral into radix ``beta``."""
    check_radix(beta)
    if not isinstance(text, str) or not text:
        raise PreconditionError("empty numeral")
    if not (text.isascii() and text.isdigit()):
        raise PreconditionError(f"not an unsigned decimal numeral: {text!r}")
    stripped = text.lstrip("0")
    if len(stripped) > MAX_DECIMAL_DIGITS:
        raise ResourceLimitError(
            f"numeral has {len(stripped)} digits, limit is {MAX_DECIMAL_DIGITS}"
        )
    value = 0
    for i in range(0, len(stripped), _DEC_CHUNK):
        chunk = stripped[i : i + _DEC_CHUNK]
        value = value * 10 ** len(chunk) + int(chunk)
    return DigitVec.from_int(value, beta)


def to_decimal_string(x: DigitVec) -> str:
    n = int(x)
    if n < 10**_DEC_CHUNK:
        return str(n)
    chunks = []
    base = 10**_DEC_CHUNK
    while n:
        n, r = divmod(n, base)
        chunks.append(r)
    head = str(chunks.pop())
    return head + "".join(str(c).zfill(_DEC_CHUNK) for c in reversed(chunks))


def digit_count(x: DigitVec) -> int:
    """Number of radix digits of ``x``; zero has none."""
    return len(x.digits)


def truncate_mod_power(x: DigitVec, s: int) -> DigitVec:
    """``x mod beta**s``."""
    if s < 0:
        raise PreconditionError("s must be nonnegative")
    return DigitVec.from_digits(x.digits[:s], x.beta)


def strip_beta_power(x: DigitVec) -> tuple[int, DigitVec]:
    """Split ``x = beta**q * x'`` with ``x'`` not divisible by beta."""
    if not x:
        raise PreconditionError("cannot strip the radix power of zero")
    q = 0
    while x.digits[q] == 0:
        q += 1
    return q, DigitVec(x.digits[q:], x.beta)


def digit_mod_inverse(v0: int, beta: int) -> int:
    check_radix(beta)
    v0 %= beta
    if gcd(v0, beta) != 1:
        raise NotInvertibleError(
            f"gcd(v0={v0}, beta={beta}) = {gcd(v0, beta)}; the divisor is not invertible"
        )
    # single-digit extended Euclid
    r0, r1, t0, t1 = beta, v0, 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    return t0 % beta


def beta_complement_digit(u_k: int, k: int, r: int, beta: int) -> int:
    """Complement digit used to subtract ``u`` by addition.

    Returns ``beta - u_k`` at the boundary position ``k == r`` (which can be
    ``beta`` itself) and ``beta - 1 - u_k`` above it.
    """
    if k < r:
        raise PreconditionError(f"complement undefined below the boundary (k={k} < r={r})")
    if not 0 <= u_k < beta:
        raise PreconditionError(f"digit {u_k} out of range for radix {beta}")
    return beta - u_k if k == r else beta - 1 - u_k
