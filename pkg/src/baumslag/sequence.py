"""Words over {a, b, t} whose exponents are power circuits."""
from __future__ import annotations

import re
from collections.abc import Iterable, Iterator

from .circuit import (
    DEFAULT_BIT_BUDGET,
    PowerCircuit,
    add,
    collapse_zero_vertices,
    const_circuit,
    eval_circuit,
    negate,
)
from .errors import WordSyntaxError
from .reduction import is_zero

LETTERS = ("a", "b", "t")

Entry = tuple[str, PowerCircuit]


class PowerSequence:
    """Immutable list of ``(letter, exponent circuit)`` pairs.

    Represents the word ``x_1^N(P_1) ... x_n^N(P_n)``.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[Entry] = ()):
        entries = tuple(entries)
        for x, P in entries:
            if x not in LETTERS:
                raise ValueError(f"unknown letter {x!r}")
            if not isinstance(P, PowerCircuit):
                raise TypeError(f"exponent of {x!r} must be a PowerCircuit")
        self.entries = entries

    @classmethod
    def from_ints(cls, pairs: Iterable[tuple[str, int]]) -> PowerSequence:
        return cls((x, const_circuit(e)) for x, e in pairs)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Entry]:
        return iter(self.entries)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return PowerSequence(self.entries[i])
        return self.entries[i]

    def __add__(self, other: PowerSequence) -> PowerSequence:
        return PowerSequence(self.entries + other.entries)

    def letters(self) -> str:
        return "".join(x for x, _ in self.entries)

    def inverse(self) -> PowerSequence:
        """Formal inverse: entries reversed, exponents negated."""
        return PowerSequence((x, negate(P)) for x, P in reversed(self.entries))

    @property
    def mark_count(self) -> int:
        return sum(P.num_marks for _, P in self.entries)

    @property
    def vertex_count(self) -> int:
        return sum(P.num_vertices for _, P in self.entries)

    def to_ints(self, bit_budget: int = DEFAULT_BIT_BUDGET) -> list[tuple[str, int]]:
        return [(x, eval_circuit(P, bit_budget)) for x, P in self.entries]

    def __repr__(self):
        try:
            return f"PowerSequence({print_word(self, 256)!r})"
        except Exception:
            return f"PowerSequence({self.letters()!r}, |V|={self.vertex_count})"


_TOKEN = re.compile(r"\s*(?:([abtABT])(?:\^([+-]?\d+))?)")


def parse_word(text: str) -> PowerSequence:
    """Parse e.g. ``"a^3 t^-2 b"``; an uppercase letter is the inverse.

    No free reduction is applied.
    """
    pairs = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise WordSyntaxError(f"unexpected {text[pos]!r}", pos)
        letter, exp = m.group(1), m.group(2)
        e = int(exp) if exp is not None else 1
        if letter.isupper():
            letter, e = letter.lower(), -e
        end = m.end()
        if end < n and not text[end].isspace() and not text[end].isalpha():
            raise WordSyntaxError(f"unexpected {text[end]!r}", end)
        pairs.append((letter, e))
        pos = end
    return PowerSequence.from_ints(pairs)


def print_word(S: PowerSequence, bit_budget: int = DEFAULT_BIT_BUDGET) -> str:
    """Explicit text of ``S``; ``BudgetExceeded`` if an exponent is too large."""
    parts = []
    for x, e in S.to_ints(bit_budget):
        parts.append(x if e == 1 else f"{x}^{e}")
    return " ".join(parts)


def reduce_sequence(S: PowerSequence) -> PowerSequence:
    """Merge adjacent equal letters and drop zero exponents, to a fixpoint.

    Merging adds the circuits and glues their zero vertices; a zero test
    runs on every surviving exponent, so a removal can expose a new merge.
    """
    stack: list[Entry] = []
    for x, P in S.entries:
        if stack and stack[-1][0] == x:
            P = collapse_zero_vertices(add(stack.pop()[1], P))
        if is_zero(P):
            continue
        stack.append((x, P))
    return PowerSequence(stack)


def is_reduced(S: PowerSequence) -> bool:
    prev = None
    for x, P in S.entries:
        if x == prev or is_zero(P):
            return False
        prev = x
    return True


def join_reduced(S1: PowerSequence, S2: PowerSequence) -> PowerSequence:
    """``reduce_sequence(S1 + S2)`` for two already reduced sequences.

    Only the junction can merge, so the zero tests stay local to it.
    """
    stack = list(S1.entries)
    rest = S2.entries
    i = 0
    while i < len(rest) and stack and stack[-1][0] == rest[i][0]:
        x, P = rest[i]
        P = collapse_zero_vertices(add(stack.pop()[1], P))
        i += 1
        if not is_zero(P):
            stack.append((x, P))
            break
    return PowerSequence(stack + list(rest[i:]))
