"""Reduced power circuits: pairwise distinct vertex values, sorted by value.

Reduction never materialises vertex values.  Vertices are inserted one at a
time into a value-sorted table.  For every vertex the table keeps the gap
between its exponent and its predecessor's exponent, capped at ``CAP``.
That is enough to decide the sign of any short signed sum of vertex values:

    sum(c_i * 2**x_i)  has the same sign as  sum(c_i * 2**y_i)

where the ``y_i`` are the ``x_i`` with every gap larger than
``(sum |c_i|).bit_length() + 1`` shrunk to that bound.  Above such a gap the
high part is a multiple of a power of two that dwarfs the whole low part,
so only its sign matters; otherwise the low part decides alone.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .circuit import (
    PowerCircuit,
    exponent_circuit,
    mul_pow2,
    negate,
    subtract,
)
from .errors import NonInteger, NotDivisible

CAP = 64
SINK = 0


class _Table:
    """Value-sorted set of pairwise distinct vertices under construction.

    Id 0 is the sink.  Every other id ``k`` has ``exps[k]``: its outgoing
    edges as ``{target id: +-1}`` (never pointing at the sink; the value-1
    vertex has an empty dict).
    """

    def __init__(self):
        self.exps: list[dict[int, int] | None] = [None]
        self.order: list[int] = []  # non-sink ids, ascending value
        self.gaps: list[int] = []  # capped exponent gap to predecessor (or to 0)
        self.pos: dict[int, int] = {}  # id -> capped exponent position
        self.by_terms: dict[frozenset, int] = {}
        self.doubles: dict[int, int] = {}
        self._one: int | None = None

    # -- sign queries ---------------------------------------------------

    def sign(self, terms: dict[int, int], const: int = 0) -> int:
        """Sign of ``const + sum(c * value(k))`` over non-sink ids ``k``."""
        pos = self.pos
        items: dict[int, int] = {}
        for k, c in terms.items():
            if c:
                p = pos[k]
                items[p] = items.get(p, 0) + c
        if const:
            items[0] = items.get(0, 0) + const
        total = 0
        weight = 0
        for c in items.values():
            weight += abs(c)
        if not weight:
            return 0
        bound = weight.bit_length() + 1
        y = 0
        prev = None
        for p in sorted(items):
            c = items[p]
            if not c:
                continue
            if prev is not None:
                d = p - prev
                y += d if d < bound else bound
            total += c << y
            prev = p
        return (total > 0) - (total < 0)

    def _capped(self, terms: dict[int, int]) -> int:
        """``min(sum, CAP)`` for a signed sum already known to be >= 0."""
        lo, hi = 0, CAP
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.sign(terms, -mid) >= 0:
                lo = mid
            else:
                hi = mid - 1
        return lo

    # -- insertion ------------------------------------------------------

    def cmp_exp(self, terms: dict[int, int], k: int) -> int:
        diff = dict(terms)
        for t, mu in self.exps[k].items():
            diff[t] = diff.get(t, 0) - mu
        return self.sign(diff)

    def find_or_insert(self, terms: dict[int, int]) -> int:
        """Id of the vertex whose exponent is the (compact) sum ``terms``."""
        key = frozenset(terms.items())
        hit = self.by_terms.get(key)
        if hit is not None:
            return hit
        if self.sign(terms) < 0:
            raise NonInteger("vertex with negative exponent sum")
        order = self.order
        lo, hi = 0, len(order)
        while lo < hi:
            mid = (lo + hi) // 2
            c = self.cmp_exp(terms, order[mid])
            if c == 0:
                self.by_terms[key] = order[mid]
                return order[mid]
            if c > 0:
                lo = mid + 1
            else:
                hi = mid
        k = len(self.exps)
        self.exps.append(dict(terms))
        self.by_terms[key] = k

        def diff(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
            d = dict(a)
            for t, mu in b.items():
                d[t] = d.get(t, 0) - mu
            return d

        if lo == 0:
            gap = self._capped(terms)
        else:
            gap = self._capped(diff(terms, self.exps[order[lo - 1]]))
        order.insert(lo, k)
        self.gaps.insert(lo, gap)
        if lo + 1 < len(order):
            nxt = order[lo + 1]
            self.gaps[lo + 1] = self._capped(diff(self.exps[nxt], terms))
        p = self.pos[order[lo - 1]] if lo else 0
        for i in range(lo, len(order)):
            p += self.gaps[i]
            self.pos[order[i]] = p
        return k

    def one(self) -> int:
        if self._one is None:
            self._one = self.find_or_insert({})
        return self._one

    def double_of(self, k: int) -> int:
        d = self.doubles.get(k)
        if d is None:
            d = self.find_or_insert(self.compact(self.exps[k], 1))
            self.doubles[k] = d
        return d

    def compact(self, terms: dict[int, int], const: int = 0) -> dict[int, int]:
        """Rewrite ``const + sum(c * value(k))`` with every coefficient in {-1, +1}.

        A coefficient ``c`` with ``|c| >= 2`` keeps its parity and carries
        ``c // 2`` to the vertex of twice the value (created on demand).
        The total absolute coefficient strictly drops with every carry.
        """
        coeffs = {k: c for k, c in terms.items() if c}
        if const:
            one = self.one()
            c = coeffs.get(one, 0) + const
            if c:
                coeffs[one] = c
            else:
                coeffs.pop(one, None)
        work = [k for k, c in coeffs.items() if c > 1 or c < -1]
        while work:
            k = work.pop()
            c = coeffs.get(k, 0)
            if -1 <= c <= 1:
                continue
            r = 0 if c % 2 == 0 else (1 if c > 0 else -1)
            q = (c - r) // 2
            if r:
                coeffs[k] = r
            else:
                del coeffs[k]
            d = self.double_of(k)
            nc = coeffs.get(d, 0) + q
            if nc:
                coeffs[d] = nc
                if nc > 1 or nc < -1:
                    work.append(d)
            else:
                coeffs.pop(d, None)
        return coeffs

    # -- export ---------------------------------------------------------

    def export(self, marks: dict[int, int]) -> ReducedCircuit:
        live = set()
        stack = list(marks)
        while stack:
            k = stack.pop()
            if k in live:
                continue
            live.add(k)
            stack.extend(self.exps[k])
        kept = [k for k in self.order if k in live]
        new_id = {k: i + 1 for i, k in enumerate(kept)}
        out: dict[int, dict[int, int]] = {0: {}}
        for k in kept:
            e = self.exps[k]
            out[new_id[k]] = {new_id[t]: mu for t, mu in e.items()} if e else {0: 1}
        new_marks = {new_id[k]: nu for k, nu in marks.items()}
        positions = tuple(self.pos[k] for k in kept)
        return ReducedCircuit(PowerCircuit._raw(out, new_marks), tuple(range(len(kept) + 1)), positions)


@dataclass(frozen=True)
class ReducedCircuit:
    """A circuit whose vertices have pairwise distinct values.

    ``order`` lists the vertex ids by ascending value (the sink first);
    ids coincide with ranks.  ``positions`` holds the capped exponent
    position of each non-sink vertex in the same order.
    """

    circuit: PowerCircuit
    order: tuple[int, ...]
    positions: tuple[int, ...] = field(default=(), repr=False)
    _ranks: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_ranks", {v: i for i, v in enumerate(self.order)})

    def rank(self, v: int) -> int:
        return self._ranks[v]

    @property
    def marks(self) -> dict[int, int]:
        return self.circuit.marks

    def max_mark(self) -> int | None:
        m = self.circuit._marks
        return max(m, key=self.rank) if m else None

    def min_mark(self) -> int | None:
        m = self.circuit._marks
        return min(m, key=self.rank) if m else None


def reduce(P: PowerCircuit) -> ReducedCircuit:
    """Equivalent circuit with pairwise distinct vertex values, sorted by value.

    Only vertices reachable from the marks are kept.  Marks and edges are
    compacted so that each target appears at most once with sign +-1; equal
    parallel contributions carry into a vertex of twice the value.
    """
    out = P._out
    needed = P.reachable(P._marks)
    table = _Table()
    canon: dict[int, int] = {}
    for v in P.topological_order():
        if v not in needed:
            continue
        o = out[v]
        if not o:
            canon[v] = SINK
            continue
        terms: dict[int, int] = {}
        for t, mu in o.items():
            c = canon[t]
            if c != SINK:
                terms[c] = terms.get(c, 0) + mu
        if any(c > 1 or c < -1 for c in terms.values()):
            terms = table.compact(terms)
        else:
            terms = {k: c for k, c in terms.items() if c}
        canon[v] = table.find_or_insert(terms)
    marks: dict[int, int] = {}
    for v, nu in P._marks.items():
        c = canon[v]
        if c != SINK:
            marks[c] = marks.get(c, 0) + nu
    return table.export(table.compact(marks))


def compare_vertices(R: ReducedCircuit, u: int, v: int) -> int:
    """Sign of ``E(u) - E(v)`` in a reduced circuit."""
    ru, rv = R.rank(u), R.rank(v)
    return (ru > rv) - (ru < rv)


def sign_reduced(R: ReducedCircuit) -> int:
    top = R.max_mark()
    return 0 if top is None else R.circuit._marks[top]


def sign(P: PowerCircuit) -> int:
    """Sign of ``N(P)``: the mark sign of the largest marked vertex after reduction.

    Distinct powers of two below the largest one sum to less than it.
    """
    return sign_reduced(reduce(P))


def compare(P1: PowerCircuit, P2: PowerCircuit) -> int:
    return sign(subtract(P1, P2))


def is_zero(P: PowerCircuit) -> bool:
    if not P._marks:
        return True
    return not reduce(P).circuit._marks


def _divisible_reduced(R: ReducedCircuit, Q: PowerCircuit) -> bool:
    low = R.min_mark()
    if low is None:
        return True
    return compare(exponent_circuit(R.circuit, low), Q) >= 0


def divisible_by_pow2(P: PowerCircuit, Q: PowerCircuit) -> bool:
    """Whether ``2 ** N(Q)`` divides ``N(P)``.

    After reduction ``N(P)`` is a signed sum of distinct powers of two, so
    its 2-adic valuation is the exponent of the smallest marked vertex.
    A negative ``N(Q)`` is always accepted.
    """
    return _divisible_reduced(reduce(P), Q)


def div_pow2(P1: PowerCircuit, P2: PowerCircuit) -> PowerCircuit:
    """Circuit for ``N(P1) / 2 ** N(P2)``; raises ``NotDivisible`` if inexact."""
    R = reduce(P1)
    if not _divisible_reduced(R, P2):
        raise NotDivisible("dividend is not divisible by the requested power of two")
    return mul_pow2(R.circuit, negate(P2))
