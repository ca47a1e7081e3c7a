"""Parallel modular division: ParModiv, ParPPI v1 and ParPPI v2.

Each algorithm has two executors.  ``backend="kernel"`` (the default)
runs a fused loop from :mod:`ppimod.kernels` that replays each parallel
step sequentially.  ``"sequential"``, ``"shuffled"`` and ``"threaded"``
run the same program on :class:`~ppimod.engine.ParallelMachine`, one
:class:`~ppimod.engine.Update` per cell, which is slower but makes the
step structure explicit and checks write-disjointness.  All executors
return identical digits and identical traces.
"""

from __future__ import annotations

from . import _pykernels, kernels
from .digits import DigitVec
from .engine import ParallelMachine, ParTrace, Update
from .errors import InvariantViolation, PreconditionError
from .seq_division import ModDivProblem, solve_preprocessed

BACKENDS = ("kernel",) + ParallelMachine.BACKENDS


def _check_backend(backend: str) -> None:
    if backend not in BACKENDS:
        raise PreconditionError(f"backend must be one of {BACKENDS}, got {backend!r}")


# -- engine programs --------------------------------------------------------
#
# Each program takes the padded digit lists and returns the x digits.  The
# machine carries the trace.


def _modiv_program(mach: ParallelMachine, v, beta, s, a, checked):
    for k in range(s - 1):
        mach.serial(("x", k), lambda st, k=k: a * st["w"][k] % beta)
        # first carry: serial
        mach.serial(("y", k + 1), lambda st, k=k: st["y"][k + 1] - st["x"][k] * v[0] // beta)
        mach.step(
            [
                Update(
                    (("y", k + i + 1), ("w", k + i)),
                    lambda st, k=k, i=i: divmod(
                        st["w"][k + i] - st["x"][k] * v[i] + st["y"][k + i], beta
                    ),
                )
                for i in range(1, s - k)
            ]
        )
        if checked:
            for j, y in enumerate(mach["y"]):
                if abs(y) >= beta * beta:
                    raise InvariantViolation(f"signed carry y_{j}={y} exceeds a double digit")
    mach.serial(("x", s - 1), lambda st: a * st["w"][s - 1] % beta)
    return mach["x"]


def _v1_program(mach: ParallelMachine, u, v, beta, s, a, checked):
    for k in range(s - 1):
        mach.serial(("x", k), lambda st, k=k: a * (u[k] - st["L"][k] - st["y"][k]) % beta)
        mach.step(
            [
                Update(
                    (("y", k + i + 1), ("L", k + i)),
                    lambda st, k=k, i=i: divmod(
                        st["L"][k + i] + st["x"][k] * v[i] + st["y"][k + i], beta
                    ),
                )
                for i in range(s - k)
            ]
        )
        if checked:
            for j in range(k, s + 1):
                if not (0 <= mach["L"][j] < beta and 0 <= mach["y"][j] < beta):
                    raise InvariantViolation(f"carry-save cell {j} left one digit at k={k}")
    mach.serial(("x", s - 1), lambda st: a * (u[s - 1] - st["L"][s - 1] - st["y"][s - 1]) % beta)
    return mach["x"]


def alternated_carry_updates(k: int, count: int, beta: int) -> list[Update]:
    """Carry from every even offset ``k + 2n`` into the cell above it."""
    return [
        Update(
            (("L", k + 2 * n + 1), ("L", k + 2 * n)),
            lambda st, j=k + 2 * n: (st["L"][j + 1] + st["L"][j] // beta, st["L"][j] % beta),
        )
        for n in range(count)
    ]


def _v2_program(mach: ParallelMachine, u, v, beta, s, a, checked):
    for k in range(s - 1):
        mach.serial(("x", k), lambda st, k=k: a * (u[k] - st["L"][k]) % beta)
        mach.step(
            [
                Update((("L", k + i),), lambda st, k=k, i=i: (st["L"][k + i] + st["x"][k] * v[i],))
                for i in range(s - k)
            ]
        )
        if checked:
            _pykernels._check_precarry(mach["L"], k, s, beta)
        mach.step(alternated_carry_updates(k, (s - k - 1) // 2 + 1, beta))
        if checked:
            _pykernels._check_alternated(mach["L"], k, s, beta, 2 * s)
    mach.serial(("x", s - 1), lambda st: a * (u[s - 1] - st["L"][s - 1]) % beta)
    return mach["x"]


def _run_engine(program, arrays, backend, seed, *args):
    trace = ParTrace()
    with ParallelMachine(arrays, trace, backend=backend, seed=seed) as mach:
        x = program(mach, *args)
    return list(x), trace.counters()


# -- public API ---------------------------------------------------------------


def _finish(name: str, p: ModDivProblem, digits, counters) -> tuple[DigitVec, ParTrace]:
    steps, width, work = counters
    trace = ParTrace(name, p.beta, p.s, steps, width, work)
    return DigitVec.from_digits(digits, p.beta), trace


def par_modiv(
    p: ModDivProblem, *, backend: str = "kernel", checked: bool = False, seed: int = 0
) -> tuple[DigitVec, ParTrace]:
    """Carry-save modular division with a serial first-carry update.

    Takes ``u`` as is (no numerator stripping).  ``checked`` bounds the
    signed carries; it needs an engine backend and switches a ``"kernel"``
    request to ``"sequential"``.
    """
    _check_backend(backend)
    u, v, beta, s, a = p.u_digits(), p.v_digits(), p.beta, p.s, p.inverse
    if checked and backend == "kernel":
        backend = "sequential"
    if backend == "kernel":
        x, counters = kernels.impl.par_modiv(u, v, beta, s, a)
    else:
        arrays = {"w": u + [0], "y": [0] * (s + 1), "x": [0] * s}
        x, counters = _run_engine(_modiv_program, arrays, backend, seed, v, beta, s, a, checked)
    return _finish("parmodiv", p, x, counters)


def _par_ppi(name, kernel, program, p, backend, checked, seed):
    _check_backend(backend)
    counters = [(0, 0, 0)]

    def run(red: ModDivProblem):
        u, v, beta, s, a = red.u_digits(), red.v_digits(), red.beta, red.s, red.inverse
        if backend == "kernel":
            x, counters[0] = kernel(u, v, beta, s, a, checked)
        else:
            arrays = {"L": [0] * (s + 1), "x": [0] * s}
            if program is _v1_program:
                arrays["y"] = [0] * (s + 1)
            x, counters[0] = _run_engine(program, arrays, backend, seed, u, v, beta, s, a, checked)
        return x

    digits = solve_preprocessed(p, run)
    return _finish(name, p, digits, counters[0])


def par_ppi_v1(
    p: ModDivProblem, *, backend: str = "kernel", checked: bool = False, seed: int = 0
) -> tuple[DigitVec, ParTrace]:
    """Carry-save parallel PPI; every cell stays a single digit."""
    return _par_ppi("parppi1", kernels.impl.par_ppi_v1, _v1_program, p, backend, checked, seed)


def par_ppi_v2(
    p: ModDivProblem, *, backend: str = "kernel", checked: bool = False, seed: int = 0
) -> tuple[DigitVec, ParTrace]:
    """Alternated-carry parallel PPI.

    In checked mode, after every multiply step each cell at even offset
    from ``k`` is at most ``2*beta**2 - beta - 1`` and each odd one at
    most ``beta**2 - beta``; after every carry step the even cells are
    single digits and the odd ones at most ``beta**2 + beta - 2``.  The
    top guard cell ``L[s]`` only absorbs discarded carries and is not
    bounded.
    """
    return _par_ppi("parppi2", kernels.impl.par_ppi_v2, _v2_program, p, backend, checked, seed)
