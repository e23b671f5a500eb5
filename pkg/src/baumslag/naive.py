"""Baseline: rewrite the explicit word with bignum exponents until it is empty.

The rules are the confluent system for G with ``t = b^-1 a b``:

    t^-1 a^k t   -> a^(2k)          b^-1 a^k b  -> t^k
    t a^(2k) t^-1 -> a^k            b t^k b^-1  -> a^k

plus free cancellation.  A stack holds a word with no redex.  Each
letter is pushed and the rules that the push creates are applied at once,
so rewriting is leftmost.  Exponents stay syllables (``a^k`` is one stack
item), and repeated t-pinches on one syllable are applied in bulk with a
shift; the step counter still advances by one per elementary rewrite.

The right-hand rule for b needs the segment between the two b-letters to
be a single power of t.  A Britton-reduced {a, t}-segment that equals
``t^k`` in B(1,2) need not be written that way (``a t a^-2`` is ``t``), so
the segment is evaluated in ``Z[1/2] x| Z`` and counted as one step.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .circuit import DEFAULT_BIT_BUDGET
from .errors import BudgetExceeded
from .sequence import PowerSequence
from .word_problem import Verdict

DEFAULT_STEP_CAP = 10**6


@dataclass(frozen=True)
class NaiveOutcome:
    verdict: Verdict
    steps: int
    reason: str | None = None  # "steps" or "bits" when the run was cut off


class _Exceeded(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def b12_element(syllables, bit_budget: int | None = None) -> tuple[Fraction, int]:
    """``(x, q)`` with ``a^x t^q`` equal to an {a, t}-word in B(1,2).

    ``t^q a^m = a^(m / 2**q) t^q``.  Raises ``BudgetExceeded`` when a
    running t-exponent is too large to shift by.
    """
    x = Fraction(0)
    q = 0
    for letter, e in syllables:
        if letter == "t":
            q += e
        elif letter == "a":
            if bit_budget is not None and abs(q) > bit_budget:
                raise BudgetExceeded("t-exponent too large", bits=abs(q))
            x += Fraction(e << -q) if q <= 0 else Fraction(e, 1 << q)
        else:
            raise ValueError(f"letter {letter!r} is not in B(1,2)")
    return x, q


class _Machine:
    def __init__(self, step_cap: int, bit_budget: int):
        self.step_cap = step_cap
        self.bit_budget = bit_budget
        self.steps = 0
        self.stack: list[tuple[str, int]] = []
        self.bpos: list[int] = []  # stack indices holding b-syllables

    def tick(self, n: int = 1) -> None:
        self.steps += n
        if self.steps > self.step_cap:
            self.steps = self.step_cap
            raise _Exceeded("steps")

    def fits(self, k: int) -> int:
        if k.bit_length() > self.bit_budget:
            raise _Exceeded("bits")
        return k

    def pop(self) -> tuple[str, int]:
        item = self.stack.pop()
        if item[0] == "b":
            self.bpos.pop()
        return item

    def push(self, item: tuple[str, int]) -> None:
        if item[0] == "b":
            self.bpos.append(len(self.stack))
        self.stack.append(item)

    def run(self, syllables: list[tuple[str, int]]) -> None:
        pending = list(reversed(syllables))
        stack = self.stack
        while pending:
            x, e = pending.pop()
            if e == 0:
                continue
            if stack and stack[-1][0] == x:
                _, f = self.pop()
                if (f > 0) != (e > 0):
                    self.tick(min(abs(f), abs(e)))
                pending.append((x, self.fits(f + e)))
                continue
            if x == "t" and self._t_rule(e, pending):
                continue
            if x == "b" and self._b_rule(e, pending):
                continue
            self.push((x, e))

    def _t_rule(self, e: int, pending: list) -> bool:
        stack = self.stack
        if len(stack) < 2 or stack[-1][0] != "a" or stack[-2][0] != "t":
            return False
        k = stack[-1][1]
        g = stack[-2][1]
        if g < 0 < e:
            j = min(-g, e)
            if abs(k).bit_length() + j > self.bit_budget:
                raise _Exceeded("bits")
            self.tick(j)
            new_k = k << j
        elif g > 0 > e:
            j = min(g, -e, (k & -k).bit_length() - 1)
            if j == 0:
                return False
            self.tick(j)
            new_k = k >> j
        else:
            return False
        self.pop()
        self.pop()
        pending.append(("t", e + j if e < 0 else e - j))
        pending.append(("a", new_k))
        pending.append(("t", g + j if g < 0 else g - j))
        return True

    def _b_rule(self, e: int, pending: list) -> bool:
        if not self.bpos:
            return False
        j = self.bpos[-1]
        seg = self.stack[j + 1 :]
        if not seg:
            return False
        g = self.stack[j][1]
        if g < 0 < e:
            if len(seg) != 1 or seg[0][0] != "a":
                return False
            replacement = ("t", seg[0][1])
        elif g > 0 > e:
            try:
                x, q = b12_element(seg, self.bit_budget)
            except BudgetExceeded:
                raise _Exceeded("bits") from None
            if x != 0:
                return False
            replacement = ("a", q)
        else:
            return False
        self.tick()
        del self.stack[j:]
        self.bpos.pop()
        pending.append(("b", e - 1 if e > 0 else e + 1))
        pending.append(replacement)
        pending.append(("b", g + 1 if g < 0 else g - 1))
        return True


def naive_solve(
    w: PowerSequence,
    step_cap: int = DEFAULT_STEP_CAP,
    bit_budget: int = DEFAULT_BIT_BUDGET,
) -> NaiveOutcome:
    try:
        syllables = w.to_ints(bit_budget)
    except BudgetExceeded:
        return NaiveOutcome(Verdict.RESOURCE_EXCEEDED, 0, "bits")
    machine = _Machine(step_cap, bit_budget)
    try:
        machine.run(syllables)
    except _Exceeded as exc:
        return NaiveOutcome(Verdict.RESOURCE_EXCEEDED, machine.steps, exc.reason)
    verdict = Verdict.NO if machine.stack else Verdict.YES
    return NaiveOutcome(verdict, machine.steps)
