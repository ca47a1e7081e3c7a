import random

import pytest

from ppimod.engine import ParallelMachine, ParTrace, Update, pardo_execute
from ppimod.errors import PreconditionError


def shift_updates(n):
    # every cell takes its left neighbour's old value: only correct if reads
    # see the pre-step state
    return [Update((("a", i),), lambda st, i=i: (st["a"][i - 1] if i else 0,)) for i in range(n)]


def test_empty_step():
    state = {"a": [1, 2, 3]}
    trace = ParTrace()
    pardo_execute(state, [], trace)
    assert state == {"a": [1, 2, 3]}
    assert trace.counters() == (1, 0, 0)


def test_width_recorded():
    s = 9
    state = {"a": [0] * s}
    trace = ParTrace()
    pardo_execute(state, [Update((("a", i),), lambda st, i=i: (st["a"][i] + 1,)) for i in range(s)], trace)
    assert state["a"] == [1] * s
    assert trace.counters() == (1, s, s)


def test_synchronous_reads():
    state = {"a": [1, 2, 3, 4]}
    pardo_execute(state, shift_updates(4), ParTrace())
    assert state["a"] == [0, 1, 2, 3]


def test_permuted_order_is_identical():
    rng = random.Random(3)
    base = [rng.randrange(100) for _ in range(30)]
    outs = []
    for trial in range(20):
        order = list(range(30))
        rng.shuffle(order)
        state = {"a": list(base)}
        pardo_execute(state, shift_updates(30), ParTrace(), order=order)
        outs.append(state["a"])
    assert all(o == outs[0] for o in outs)


def test_overlapping_writes_rejected():
    ups = [Update((("a", 0),), lambda st: (1,)), Update((("a", 0),), lambda st: (2,))]
    with pytest.raises(PreconditionError):
        pardo_execute({"a": [0]}, ups, ParTrace())


def test_bad_order_rejected():
    with pytest.raises(PreconditionError):
        pardo_execute({"a": [0, 0]}, shift_updates(2), ParTrace(), order=[0, 0])


@pytest.mark.parametrize("backend", ParallelMachine.BACKENDS)
def test_machine_backends_agree(backend):
    trace = ParTrace()
    with ParallelMachine({"a": list(range(50))}, trace, backend=backend, seed=1) as m:
        for _ in range(5):
            m.step(shift_updates(50))
        m.serial(("a", 0), lambda st: 99)
        result = list(m["a"])
    assert result == [99, 0, 0, 0, 0] + list(range(45))
    assert trace.counters() == (6, 50, 251)


def test_unknown_backend():
    with pytest.raises(PreconditionError):
        ParallelMachine({}, ParTrace(), backend="gpu")


def test_trace_record_round_trip():
    t = ParTrace("parppi2", 256, 64, 190, 64, 3200)
    line = t.to_record()
    assert line == (
        '{"algorithm": "parppi2", "beta": 256, "s": 64, "steps": 190, '
        '"max_width": 64, "work": 3200}'
    )
    assert ParTrace.from_record(line) == t
