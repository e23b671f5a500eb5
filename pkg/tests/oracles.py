"""Reference implementations used to check the package.

Everything here works on explicit numbers (ints and Fractions) and only
uses the public, validated side of ``PowerCircuit``.  Nothing is shared
with the code under test.
"""
from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from baumslag import PowerCircuit

# Largest vertex exponent in random circuits: 12 marked vertices of value
# at most 2**123 keep every N(P) below 2**127.
MAX_EXP = 123


def vertex_values(P: PowerCircuit) -> dict[int, Fraction]:
    """Value of every vertex; negative exponent sums give proper fractions."""
    edges = P.edges
    out: dict[int, list[tuple[int, int]]] = {v: [] for v in P.vertices}
    for (s, t), mu in edges.items():
        out[s].append((t, mu))
    vals: dict[int, Fraction] = {}

    def value(v: int) -> Fraction:
        if v not in vals:
            if not out[v]:
                vals[v] = Fraction(0)
            else:
                s = sum(mu * value(t) for t, mu in out[v])
                assert s.denominator == 1, "oracle only handles integral exponents"
                s = int(s)
                vals[v] = Fraction(1 << s) if s >= 0 else Fraction(1, 1 << -s)
        return vals[v]

    for v in P.vertices:
        value(v)
    return vals


def value_of(P: PowerCircuit) -> Fraction:
    vals = vertex_values(P)
    return sum((nu * vals[v] for v, nu in P.marks.items()), Fraction(0))


def int_value(P: PowerCircuit) -> int:
    x = value_of(P)
    assert x.denominator == 1
    return int(x)


def two_adic(n: int) -> int:
    """Largest e with 2**e dividing n (n != 0)."""
    return (n & -n).bit_length() - 1


def _pick_edges(choose, v: int, vals: list[int], max_exp: int):
    """Up to three signed edges from ``v`` to earlier vertices, integral exponent."""
    for _ in range(20):
        k = choose(0, min(3, v))
        targets = choose.sample(range(v), k)
        edges = {t: choose.sign() for t in targets}
        if not edges:
            return {}, 0
        s = sum(mu * vals[t] for t, mu in edges.items())
        if 0 <= s <= max_exp:
            return edges, 1 << s
    return None, None


class _RandomChooser:
    def __init__(self, rng: random.Random):
        self.rng = rng

    def __call__(self, lo, hi):
        return self.rng.randint(lo, hi)

    def sample(self, pop, k):
        return self.rng.sample(pop, k)

    def sign(self):
        return self.rng.choice((1, -1))


def random_circuit(rng: random.Random, n: int | None = None, max_exp: int = MAX_EXP) -> PowerCircuit:
    """Random integral circuit with at most 12 vertices (vertex 0 is a sink)."""
    choose = _RandomChooser(rng)
    if n is None:
        n = rng.randint(1, 12)
    vals = [0]
    edges: dict[tuple[int, int], int] = {}
    for v in range(1, n):
        out, val = _pick_edges(choose, v, vals, max_exp)
        if out is None:
            out, val = {0: 1}, 1
        for t, mu in out.items():
            edges[(v, t)] = mu
        vals.append(val)
    marked = rng.sample(range(n), rng.randint(0, n))
    marks = {v: rng.choice((1, -1)) for v in marked}
    return PowerCircuit(range(n), edges, marks)


def small_circuit(rng: random.Random, lo: int, hi: int) -> PowerCircuit:
    """Random circuit whose value lies in ``[lo, hi]``."""
    while True:
        P = random_circuit(rng, rng.randint(1, 6), max_exp=6)
        if lo <= int_value(P) <= hi:
            return P


@st.composite
def circuits(draw, max_vertices: int = 12, max_exp: int = MAX_EXP):
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(1, max_vertices))
    return random_circuit(random.Random(seed), n, max_exp)


@st.composite
def small_circuits(draw, lo: int = -40, hi: int = 40):
    seed = draw(st.integers(0, 2**32 - 1))
    return small_circuit(random.Random(seed), lo, hi)


# -- words -----------------------------------------------------------------


def expand(pairs) -> list[tuple[str, int]]:
    """Explicit letters ``(x, +-1)`` of a syllable list."""
    out = []
    for x, e in pairs:
        out.extend([(x, 1 if e > 0 else -1)] * abs(e))
    return out


def free_reduce(letters) -> list[tuple[str, int]]:
    stack = []
    for x, e in letters:
        if stack and stack[-1] == (x, -e):
            stack.pop()
        else:
            stack.append((x, e))
    return stack


def b12_oracle(pairs) -> tuple[Fraction, int]:
    """``(x, q)`` with ``a^x t^q`` equal to the {a, t}-word in B(1,2).

    Uses the affine action ``a: z -> z + 1``, ``t: z -> z / 2`` read so that
    ``t^-1 a t = a^2``: the word acts as ``z -> 2**-q z + x``.
    """
    scale = Fraction(1)  # 2**-q so far
    shift = Fraction(0)
    q = 0
    for x, e in pairs:
        if x == "a":
            shift += e * scale
        elif x == "t":
            q += e
            scale = Fraction(1, 1 << q) if q >= 0 else Fraction(1 << -q)
        else:
            raise ValueError(x)
    return shift, q


LETTERS = [("a", 1), ("a", -1), ("b", 1), ("b", -1), ("t", 1), ("t", -1)]

RELATORS = [
    # b^-1 a^-1 b a b^-1 a b a^-2 and t = b^-1 a b, t^-1 a t = a^2
    [("b", -1), ("a", -1), ("b", 1), ("a", 1), ("b", -1), ("a", 1), ("b", 1), ("a", -2)],
    [("b", -1), ("a", 1), ("b", 1), ("t", -1)],
    [("t", -1), ("a", 1), ("t", 1), ("a", -2)],
]


def random_word(rng: random.Random, max_len: int = 12) -> list[tuple[str, int]]:
    return [rng.choice(LETTERS) for _ in range(rng.randint(0, max_len))]


def invert(pairs):
    return [(x, -e) for x, e in reversed(pairs)]


def random_trivial_word(rng: random.Random, pieces: int = 3, conj_len: int = 3):
    """A product of conjugates of relators: trivial in G by construction."""
    word = []
    for _ in range(pieces):
        u = random_word(rng, conj_len)
        r = rng.choice(RELATORS)
        if rng.random() < 0.5:
            r = invert(r)
        word += invert(u) + r + u
    return word
