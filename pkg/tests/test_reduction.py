import time

import numpy as np
import pytest
from hypothesis import given

from baumslag import (
    NonInteger,
    NotDivisible,
    PowerCircuit,
    compare,
    compare_vertices,
    const_circuit,
    div_pow2,
    divisible_by_pow2,
    eval_circuit,
    eval_vertex,
    is_zero,
    mul_pow2,
    parse_circuit,
    reduce,
    sign,
    subtract,
)
from oracles import circuits, int_value, small_circuits, two_adic
from test_circuit import chain


def _sgn(n: int) -> int:
    return (n > 0) - (n < 0)


@given(circuits())
def test_reduce_preserves_value_and_orders_vertices(P):
    R = reduce(P)
    C = R.circuit
    assert eval_circuit(C) == int_value(P)
    vals = [eval_vertex(C, v) for v in R.order]
    assert vals == sorted(set(vals))
    assert sorted(R.order) == list(C.vertices)
    assert C.num_marks <= P.num_marks
    assert C.num_vertices <= P.num_vertices + P.num_marks


@given(circuits())
def test_reduce_is_idempotent(P):
    C1 = reduce(P).circuit
    C2 = reduce(C1).circuit
    assert C2 == C1


@given(circuits())
def test_reduced_edges_and_marks_are_compact(P):
    C = reduce(P).circuit
    for v in C.vertices:
        # one sink; every other vertex has an exponent of distinct powers of two
        if v != 0:
            assert C.out_edges(v)
    assert C.sinks() == [0]
    assert 0 not in C.marks


@given(circuits())
def test_compare_vertices_matches_values(P):
    R = reduce(P)
    vs = R.order
    for u in vs[:4]:
        for v in vs[-4:]:
            a, b = eval_vertex(R.circuit, u), eval_vertex(R.circuit, v)
            assert compare_vertices(R, u, v) == _sgn(a - b)


@given(circuits())
def test_sign_and_is_zero(P):
    n = int_value(P)
    assert sign(P) == _sgn(n)
    assert is_zero(P) == (n == 0)


@given(circuits(), circuits())
def test_compare(P, Q):
    assert compare(P, Q) == _sgn(int_value(P) - int_value(Q))
    assert compare(P, P) == 0


@given(circuits(), small_circuits(-10, 40))
def test_divisibility_and_division(P, Q):
    n, e = int_value(P), int_value(Q)
    expect = n == 0 or e <= 0 or two_adic(n) >= e
    assert divisible_by_pow2(P, Q) == expect
    if expect:
        D = div_pow2(P, Q)
        assert eval_circuit(D) == (n >> e if e >= 0 else n << -e)
    else:
        with pytest.raises(NotDivisible):
            div_pow2(P, Q)


def test_reduce_rejects_non_integer():
    P = PowerCircuit([0, 1, 2], {(1, 0): 1, (2, 1): -1}, {2: 1})
    with pytest.raises(NonInteger):
        reduce(P)


def test_reduce_examples():
    # two marks on value 2 carry into a single mark on value 4
    P = parse_circuit("powercircuit v1\nv 0\nv 1\nv 2\nv 3\ne 1 0 +\ne 2 1 +\ne 3 1 +\nm 2 +\nm 3 +\n")
    R = reduce(P)
    assert eval_circuit(R.circuit) == 4
    assert R.circuit.num_marks == 1
    # 2 - 2 cancels completely
    Q = parse_circuit("powercircuit v1\nv 0\nv 1\nv 2\nv 3\ne 1 0 +\ne 2 1 +\ne 3 1 +\nm 2 +\nm 3 -\n")
    assert is_zero(Q) and reduce(Q).circuit.num_marks == 0


def test_towers_far_beyond_any_budget():
    top = chain(9, 8)  # 2^(2^65536)
    below = mul_pow2(chain(9, 7), const_circuit(5))  # 2^65536 * 32
    assert sign(subtract(top, below)) == 1
    assert compare(chain(12, 11), chain(12, 10)) == 1
    assert is_zero(subtract(chain(12, 11), chain(12, 11)))
    assert divisible_by_pow2(chain(12, 11), chain(12, 10))
    assert not divisible_by_pow2(chain(12, 10), chain(12, 10))


def _chain_time(n: int, repeats: int = 5) -> float:
    P = chain(n, n - 1)
    # mark every vertex with alternating signs as well, to exercise carries
    Q = PowerCircuit(range(n), P.edges, {v: (-1) ** v for v in range(n)})
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        reduce(P)
        reduce(Q)
        best = min(best, time.perf_counter() - t0)
    return best


def test_chain_scaling_is_at_most_cubic():
    sizes = [25, 50, 100, 200]
    times = [_chain_time(n) for n in sizes]
    slope = np.polyfit(np.log(sizes), np.log(times), 1)[0]
    assert slope <= 3.0, (slope, times)
