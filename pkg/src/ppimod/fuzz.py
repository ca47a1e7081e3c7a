"""Differential fuzzing of the division algorithms against the oracle."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd

from . import oracle
from .digits import DigitVec
from .par_division import par_modiv, par_ppi_v1, par_ppi_v2
from .seq_division import ModDivProblem, ppi_sequential, seq_modiv

DEFAULT_RADIXES = (2, 3, 10, 257, 65536)

#: name -> f(problem, checked) -> DigitVec.  The fuzz loop looks names up
#: here at call time, so tests can swap in a broken implementation.
DIVISION_ALGORITHMS = {
    "seqmodiv": lambda p, checked=False: seq_modiv(p),
    "ppi": lambda p, checked=False: ppi_sequential(p, checked=checked),
    "parmodiv": lambda p, checked=False: par_modiv(p)[0],
    "parppi1": lambda p, checked=False: par_ppi_v1(p, checked=checked)[0],
    "parppi2": lambda p, checked=False: par_ppi_v2(p, checked=checked)[0],
}


def case_rng(seed: int, index: int) -> random.Random:
    return random.Random(seed * 1_000_003 + index)


def random_problem(rng: random.Random, beta: int, max_s: int) -> tuple[int, int, int]:
    """Random ``(u, v, s)`` with ``v`` invertible modulo ``beta``.

    A quarter of the numerators carry a random power of the radix, and some
    are larger than ``beta**s``.
    """
    s = rng.randint(1, max_s)
    v = rng.randrange(1, beta ** rng.randint(1, s + 2))
    while gcd(v % beta, beta) != 1:
        v += 1
    u = rng.randrange(0, beta ** rng.randint(1, s + 2))
    if rng.random() < 0.25:
        u *= beta ** rng.randint(1, s)
    return u, v, s


@dataclass
class FuzzReport:
    cases: int = 0
    mismatches: list[str] = field(default_factory=list)


def run_fuzz(
    count: int,
    radixes=DEFAULT_RADIXES,
    max_s: int = 64,
    seed: int = 0,
    checked: bool = False,
) -> FuzzReport:
    report = FuzzReport()
    for i in range(count):
        rng = case_rng(seed, i)
        beta = radixes[i % len(radixes)]
        u, v, s = random_problem(rng, beta, max_s)
        want = oracle.oracle_modiv(u, v, beta, s)
        mod = oracle.oracle_pow(beta, s)
        p = ModDivProblem.of(u, v, beta, s)
        for name in DIVISION_ALGORITHMS:
            got = int(DIVISION_ALGORITHMS[name](p, checked))
            if got != want or (got * v - u) % mod:
                report.mismatches.append(
                    f"{name}: case={i} seed={seed} u={u} v={v} beta={beta} s={s} "
                    f"got={got} want={want}"
                )
        report.cases += 1
    return report
