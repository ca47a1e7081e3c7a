"""A synchronous data-parallel step machine.

A *step* is a set of cell updates that may run simultaneously.  Every
update reads the state as it was before the step began and writes a
disjoint set of cells; a barrier separates consecutive steps.  The
machine counts steps, the widest step and the total number of updates,
which is how surface, time and work are reported for the parallel
algorithms.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Mapping, MutableMapping, Sequence

from .errors import InvariantViolation, PreconditionError

Cell = tuple[str, int]
State = MutableMapping[str, list]

TRACE_FIELDS = ("algorithm", "beta", "s", "steps", "max_width", "work")


@dataclass
class ParTrace:
    """Parallel cost accounting for one run."""

    algorithm: str = ""
    beta: int = 0
    s: int = 0
    steps: int = 0
    max_width: int = 0
    work: int = 0

    def record_step(self, width: int) -> None:
        self.steps += 1
        self.work += width
        if width > self.max_width:
            self.max_width = width

    def to_record(self) -> str:
        """One line of JSON with the fields in fixed order."""
        return json.dumps({f: getattr(self, f) for f in TRACE_FIELDS})

    @classmethod
    def from_record(cls, line: str) -> ParTrace:
        data = json.loads(line)
        return cls(**{f: data[f] for f in TRACE_FIELDS})

    def counters(self) -> tuple[int, int, int]:
        return self.steps, self.max_width, self.work


@dataclass(frozen=True)
class Update:
    """Write ``compute(state)`` into ``writes`` (one value per cell)."""

    writes: tuple[Cell, ...]
    compute: Callable[[Mapping[str, list]], Sequence[int]]


def _check_disjoint(updates: Sequence[Update]) -> None:
    seen: set[Cell] = set()
    for upd in updates:
        for cell in upd.writes:
            if cell in seen:
                raise PreconditionError(f"two updates in one step write cell {cell}")
            seen.add(cell)


def pardo_execute(
    state: State,
    updates: Sequence[Update],
    trace: ParTrace,
    *,
    order: Sequence[int] | None = None,
    pool: ThreadPoolExecutor | None = None,
    check_disjoint: bool = True,
) -> State:
    """Apply one parallel step to ``state`` in place and return it.

    ``order`` permutes evaluation; ``pool`` evaluates the updates on
    threads.  Neither can change the outcome.
    """
    if check_disjoint:
        _check_disjoint(updates)
    idx = list(order) if order is not None else list(range(len(updates)))
    if sorted(idx) != list(range(len(updates))):
        raise PreconditionError("order must be a permutation of the updates")
    if pool is not None:
        results = list(pool.map(lambda i: updates[i].compute(state), idx))
    else:
        results = [updates[i].compute(state) for i in idx]
    for i, values in zip(idx, results):
        writes = updates[i].writes
        if len(values) != len(writes):
            raise InvariantViolation("update produced the wrong number of values")
        for (name, j), value in zip(writes, values):
            state[name][j] = value
    trace.record_step(len(updates))
    return state


class ParallelMachine:
    """Runs a program of steps over named integer arrays.

    ``backend`` is ``"sequential"`` (declared order), ``"shuffled"``
    (random order per step, seeded) or ``"threaded"``.  The results and the
    trace are identical across backends.
    """

    BACKENDS = ("sequential", "shuffled", "threaded")

    def __init__(
        self,
        arrays: Mapping[str, list],
        trace: ParTrace,
        backend: str = "sequential",
        seed: int = 0,
        workers: int = 4,
    ):
        if backend not in self.BACKENDS:
            raise PreconditionError(f"unknown engine backend {backend!r}")
        self.state: dict[str, list] = {k: list(v) for k, v in arrays.items()}
        self.trace = trace
        self.backend = backend
        self._rng = random.Random(seed)
        self._pool = ThreadPoolExecutor(max_workers=workers) if backend == "threaded" else None

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    def close(self) -> None:
        if self._pool is not None:
            self._pool.shutdown()
            self._pool = None

    def step(self, updates: Sequence[Update]) -> None:
        order = None
        if self.backend == "shuffled":
            order = list(range(len(updates)))
            self._rng.shuffle(order)
        pardo_execute(self.state, updates, self.trace, order=order, pool=self._pool)

    def serial(self, cell: Cell, compute: Callable[[Mapping[str, list]], int]) -> None:
        """A width-1 step writing a single cell."""
        self.step([Update((cell,), lambda st: (compute(st),))])

    def __getitem__(self, name: str) -> list:
        return self.state[name]
