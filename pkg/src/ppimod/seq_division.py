"""Sequential modular division: SeqModiv and the pen-and-paper inverse.

Both compute ``x = (u / v) mod beta**s``, least-significant digit first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import kernels
from .digits import DigitVec, check_radix, digit_mod_inverse, strip_beta_power, truncate_mod_power
from .errors import InvariantViolation, PreconditionError


@dataclass(frozen=True)
class ModDivProblem:
    u: DigitVec
    v: DigitVec
    s: int

    def __post_init__(self):
        if self.u.beta != self.v.beta:
            raise PreconditionError("u and v use different radixes")
        if not isinstance(self.s, int) or self.s < 1:
            raise PreconditionError(f"s must be a positive integer, got {self.s!r}")
        # raises NotInvertibleError when gcd(v0, beta) != 1
        digit_mod_inverse(self.v[0], self.beta)

    @classmethod
    def of(cls, u: int, v: int, beta: int, s: int) -> ModDivProblem:
        check_radix(beta)
        return cls(DigitVec.from_int(u, beta), DigitVec.from_int(v, beta), s)

    @property
    def beta(self) -> int:
        return self.u.beta

    @property
    def inverse(self) -> int:
        return digit_mod_inverse(self.v[0], self.beta)

    def u_digits(self) -> list[int]:
        """u mod beta**s as exactly s digits."""
        return truncate_mod_power(self.u, self.s).pad_to(self.s)

    def v_digits(self) -> list[int]:
        return truncate_mod_power(self.v, self.s).pad_to(self.s)

    def v_length(self) -> int:
        """Digits of v that can matter: len(v mod beta**s)."""
        return len(truncate_mod_power(self.v, self.s))


@dataclass(frozen=True)
class PpiCarry:
    """State of one sequential PPI step."""

    k: int
    x: int
    L: int
    c_next: int


def seq_modiv(p: ModDivProblem) -> DigitVec:
    x = kernels.impl.seq_modiv(p.u_digits(), p.v_digits(), p.beta, p.s, p.inverse)
    return DigitVec.from_digits(x, p.beta)


def preprocess_numerator(p: ModDivProblem) -> tuple[int, ModDivProblem | None]:
    """Strip ``u = beta**q * u'``.

    Returns ``(q, problem for (u', v, s - q))``, or ``(q, None)`` when
    ``q >= s`` and the answer is zero.
    """
    if not p.u:
        raise PreconditionError("zero numerator has no radix-power split")
    q, u_red = strip_beta_power(p.u)
    if q >= p.s:
        return q, None
    return q, ModDivProblem(u_red, p.v, p.s - q)


def solve_preprocessed(p: ModDivProblem, run) -> list[int]:
    """Run ``run(reduced_problem) -> digits`` behind numerator stripping.

    Returns exactly ``p.s`` digits.
    """
    if not truncate_mod_power(p.u, p.s):
        return [0] * p.s
    q, reduced = preprocess_numerator(p)
    if reduced is None:
        return [0] * p.s
    return [0] * q + list(run(reduced))


def ppi_sequential(p: ModDivProblem, *, checked: bool = False, truncate: bool = True) -> DigitVec:
    """Pen-and-paper inverse.

    With ``truncate`` the inner sum only runs over the digits of
    ``v mod beta**s`` that exist; without it every ``j <= k`` is summed.
    ``checked`` asserts the carry identity and the accumulator bound at
    every step.
    """

    def run(red: ModDivProblem) -> list[int]:
        m = red.v_length() if truncate else red.s
        return kernels.impl.ppi(
            red.u_digits(), red.v_digits(), red.beta, red.s, red.inverse, m, checked
        )

    return DigitVec.from_digits(solve_preprocessed(p, run), p.beta)


def ppi_steps(
    u: Sequence[int], v: Sequence[int], beta: int, a: int, m: int | None = None
) -> Iterator[PpiCarry]:
    """Unbounded stream of PPI steps for digit sequences ``u`` and ``v``.

    Digits past the end of either sequence read as zero, so the stream
    produces the beta-adic expansion of u/v one digit at a time.  ``m``
    caps how many digits of v enter the inner sum (defaults to ``len(v)``).
    """
    if m is None:
        m = len(v)
    xs: list[int] = []
    c = 0
    v0 = v[0] if v else 0
    k = 0
    while True:
        top = min(k, m - 1)
        acc = c
        for j in range(1, top + 1):
            acc += v[j] * xs[k - j]
        uk = u[k] if k < len(u) else 0
        xk = a * (uk - acc) % beta
        xs.append(xk)
        c = (acc + xk * v0) // beta
        yield PpiCarry(k, xk, acc, c)
        k += 1


def ppi_trace(p: ModDivProblem, *, truncate: bool = True) -> list[PpiCarry]:
    """Every step of the (unstripped) PPI run, with carry identity checked."""
    m = p.v_length() if truncate else p.s
    u = p.u_digits()
    out = []
    for step in ppi_steps(u, p.v_digits(), p.beta, p.inverse, m):
        if step.L + step.x * p.v[0] != u[step.k] + p.beta * step.c_next:
            raise InvariantViolation(f"carry identity fails at k={step.k}")
        out.append(step)
        if step.k == p.s - 1:
            break
    return out
