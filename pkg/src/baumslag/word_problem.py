"""Word problem for G = <a, b | b^-1 a^-1 b a b^-1 a b = a^2>.

G is the HNN extension of B(1,2) = <a, t | t^-1 a t = a^2> with stable
letter ``b`` and ``b^-1 a b = t``.  A word is cut into b-blocks separated
by {a, t}-segments.  Pinches are removed one b-pair at a time:

* ``b^-e g b^f`` with ``g = a^p`` in B(1,2) becomes ``b^-(e-1) t^p b^(f-1)``
* ``b^e g b^-f`` with ``g = t^p`` in B(1,2) becomes ``b^(e-1) a^p b^-(f-1)``

By Britton's lemma the word is trivial exactly when no b survives and the
remaining {a, t}-word is trivial in B(1,2).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .bs import BsNormalForm, bs_normalize
from .circuit import eval_circuit, unary_circuit
from .errors import BudgetExceeded, GrowthViolation
from .reduction import is_zero
from .sequence import PowerSequence, join_reduced, reduce_sequence

TOWER_MAX = 5


class Verdict(enum.Enum):
    YES = "yes"
    NO = "no"
    RESOURCE_EXCEEDED = "resource-exceeded"


@dataclass
class SolveStats:
    """Counters collected by one run of the pinch loop.

    Block ``b^e`` counts as ``|e|`` marks on ``|e| + 1`` vertices, the size
    of its unary circuit; segments count their exponent circuits.
    """

    length: float = 0
    initial_vertices: int = 0
    initial_marks: int = 0
    rewrites: int = 0
    peak_vertices: int = 0
    peak_marks: int = 0
    vertices: int = 0
    marks: int = 0

    @property
    def vertex_bound(self) -> float:
        return self.initial_vertices + (self.length / 2) * self.initial_marks


_UNSET = object()


class _Seg:
    __slots__ = ("seq", "_nf")

    def __init__(self, seq: PowerSequence):
        self.seq = seq
        self._nf = _UNSET

    def normal_form(self) -> BsNormalForm | None:
        if self._nf is _UNSET:
            nf = bs_normalize(self.seq)
            self._nf = None if nf is None else (nf, is_zero(nf.M), is_zero(nf.sigma))
        return self._nf


class _Pinches:
    """Segments ``segs[0..n]`` interleaved with b-exponents ``bexp[0..n-1]``."""

    def __init__(self, S: PowerSequence):
        segs: list[_Seg] = []
        bexp: list[int] = []
        cur: list = []
        for x, P in S:
            if x == "b":
                segs.append(_Seg(PowerSequence(cur)))
                bexp.append(eval_circuit(P))
                cur = []
            else:
                cur.append((x, P))
        segs.append(_Seg(PowerSequence(cur)))
        self.segs = segs
        self.bexp = bexp

    def measure(self) -> tuple[int, int]:
        V = sum(s.seq.vertex_count for s in self.segs)
        M = sum(s.seq.mark_count for s in self.segs)
        for e in self.bexp:
            V += abs(e) + 1
            M += abs(e)
        return V, M

    def pinch(self, i: int) -> tuple[str, object] | None:
        """Replacement letter and exponent for the pinch around ``segs[i]``."""
        e1, e2 = self.bexp[i - 1], self.bexp[i]
        if e1 < 0 < e2:
            nf = self.segs[i].normal_form()
            if nf is not None and nf[2]:
                return "t", nf[0].M
        elif e1 > 0 > e2:
            nf = self.segs[i].normal_form()
            if nf is not None and nf[1]:
                return "a", nf[0].sigma
        return None

    def rewrite(self, i: int, letter: str, p) -> int:
        """Apply a pinch at ``segs[i]`` and restore the block structure.

        Returns the smallest segment index whose neighbourhood changed.
        """
        segs, bexp = self.segs, self.bexp
        segs[i] = _Seg(reduce_sequence(PowerSequence([(letter, p)])))
        bexp[i - 1] += 1 if bexp[i - 1] < 0 else -1
        bexp[i] += 1 if bexp[i] < 0 else -1
        return self._settle(i)

    def _settle(self, i: int) -> int:
        segs, bexp = self.segs, self.bexp
        low = i
        while True:
            if i > 0 and bexp[i - 1] == 0:
                segs[i - 1] = _Seg(join_reduced(segs[i - 1].seq, segs[i].seq))
                del segs[i], bexp[i - 1]
                i -= 1
            elif i < len(bexp) and bexp[i] == 0:
                segs[i] = _Seg(join_reduced(segs[i].seq, segs[i + 1].seq))
                del segs[i + 1], bexp[i]
            elif 0 < i < len(bexp) and not segs[i].seq.entries:
                bexp[i - 1] += bexp[i]
                del segs[i], bexp[i]
                i -= 1
            else:
                return min(low, i)
            low = min(low, i)

    def to_sequence(self) -> PowerSequence:
        entries = list(self.segs[0].seq)
        for e, s in zip(self.bexp, self.segs[1:]):
            entries.append(("b", unary_circuit(e)))
            entries.extend(s.seq)
        return PowerSequence(entries)


def _word_length(S: PowerSequence) -> float:
    try:
        return sum(abs(e) for _, e in S.to_ints())
    except BudgetExceeded:
        return math.inf


def _eliminate(
    w: PowerSequence, order: str, check_growth: bool, stats: SolveStats | None
) -> _Pinches:
    if order not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown pinch order {order!r}")
    st = stats if stats is not None else SolveStats()
    st.length = _word_length(w)
    state = _Pinches(reduce_sequence(w))
    V, M = state.measure()
    st.initial_vertices = st.peak_vertices = st.vertices = V
    st.initial_marks = st.peak_marks = st.marks = M

    start = 1
    while True:
        n = len(state.bexp)
        if order == "leftmost":
            candidates = range(start, n)
        else:
            candidates = range(n - 1, 0, -1)
        for i in candidates:
            hit = state.pinch(i)
            if hit is not None:
                break
        else:
            break
        start = max(1, state.rewrite(i, *hit) - 1)
        st.rewrites += 1
        V, M = state.measure()
        if check_growth:
            if M > st.marks:
                raise GrowthViolation(f"mark count rose from {st.marks} to {M}")
            if V > st.vertex_bound:
                raise GrowthViolation(f"vertex count {V} exceeds {st.vertex_bound}")
        st.vertices, st.marks = V, M
        st.peak_vertices = max(st.peak_vertices, V)
        st.peak_marks = max(st.peak_marks, M)
    return state


def eliminate_pinches(
    w: PowerSequence,
    *,
    order: str = "leftmost",
    check_growth: bool = False,
    stats: SolveStats | None = None,
) -> PowerSequence:
    """Remove pinches until none is left; the result equals ``w`` in G.

    ``order`` picks the leftmost applicable pinch first, or the rightmost
    one (slower, for cross-checking).  With ``check_growth`` the mark and
    vertex counters are asserted after every rewrite.
    """
    return _eliminate(w, order, check_growth, stats).to_sequence()


def solve(
    w: PowerSequence,
    *,
    order: str = "leftmost",
    check_growth: bool = False,
    stats: SolveStats | None = None,
) -> Verdict:
    """``Verdict.YES`` iff ``w`` represents the identity of G."""
    state = _eliminate(w, order, check_growth, stats)
    if state.bexp:
        return Verdict.NO
    nf = state.segs[0].normal_form()
    if nf is not None and nf[1] and nf[2]:
        return Verdict.YES
    return Verdict.NO


def tower2(k: int) -> int:
    if not 0 <= k <= TOWER_MAX:
        raise ValueError(f"tower2 is only materialised for 0 <= k <= {TOWER_MAX}")
    v = 1
    for _ in range(k):
        v = 1 << v
    return v


def hard_word(k: int) -> PowerSequence:
    """``w_0 = a`` and ``w_{i+1} = b^-1 w_i^-1 b a b^-1 w_i b``, letter by letter.

    ``w_k`` has ``6 * 2**k - 5`` letters and equals ``a^tower2(k)`` in G.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    w = [("a", 1)]
    for _ in range(k):
        inv = [(x, -e) for x, e in reversed(w)]
        w = [("b", -1)] + inv + [("b", 1), ("a", 1), ("b", -1)] + w + [("b", 1)]
    return PowerSequence.from_ints(w)


def commutator(u: PowerSequence, v: PowerSequence) -> PowerSequence:
    """``u^-1 v^-1 u v``."""
    return u.inverse() + v.inverse() + u + v
