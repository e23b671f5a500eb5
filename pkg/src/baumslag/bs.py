"""Collapsing {a, t}-words in B(1,2) = <a, t | t^-1 a t = a^2> to a^M t^sigma.

Every element of B(1,2) is ``a^x t^q`` with ``x`` a dyadic rational.  The
functions here compute ``x`` and ``q`` as power circuits, without ever
expanding them, and report when ``x`` is not an integer.

Pushing a ``t`` to the right divides the ``a``-exponent it passes by 2
(``t a^m = a^(m/2) t``), pushing ``t^-1`` doubles it.
"""
from __future__ import annotations

from dataclasses import dataclass

from .circuit import (
    PowerCircuit,
    add,
    collapse_zero_vertices,
    make_sources,
    new_zero_circuit,
    sum_circuits,
)
from .errors import NotDivisible
from .reduction import div_pow2, is_zero, sign
from .sequence import PowerSequence, reduce_sequence


@dataclass(frozen=True)
class BsSegment:
    """``a^m[0] t^delta[0] a^m[1] ... t^delta[k-1] a^m[k]``."""

    m: tuple[PowerCircuit, ...]
    delta: tuple[PowerCircuit, ...]

    def __post_init__(self):
        if len(self.m) != len(self.delta) + 1:
            raise ValueError("need exactly one more a-exponent than t-exponents")

    @classmethod
    def from_sequence(cls, S: PowerSequence) -> BsSegment:
        """Split a reduced {a, t}-sequence; missing a-powers become a^0."""
        m: list[PowerCircuit] = []
        delta: list[PowerCircuit] = []
        for x, P in S:
            if x == "a":
                if len(m) > len(delta):
                    raise ValueError("adjacent a-powers; reduce the sequence first")
                m.append(P)
            elif x == "t":
                if len(m) == len(delta):
                    m.append(new_zero_circuit())
                delta.append(P)
            else:
                raise ValueError(f"letter {x!r} is not in B(1,2)")
        if len(m) == len(delta):
            m.append(new_zero_circuit())
        return cls(tuple(m), tuple(delta))


@dataclass(frozen=True)
class BsNormalForm:
    """The element ``a^N(M) t^N(sigma)``."""

    M: PowerCircuit
    sigma: PowerCircuit


@dataclass(frozen=True)
class AlternatingForm:
    """``a^head t^sigma_1 a^M_1 ... t^sigma_n a^M_n [t^trailing]``.

    ``blocks`` holds the pairs ``(sigma_i, M_i)``; every ``sigma_i`` is
    positive and the optional ``trailing`` exponent is negative.
    """

    head: PowerCircuit
    blocks: tuple[tuple[PowerCircuit, PowerCircuit], ...]
    trailing: PowerCircuit | None = None


def t1_collapse(seg: BsSegment) -> BsNormalForm:
    """Collapse a segment whose t-prefix sums are all <= 0.

    ``M = sum_i m_i * 2 ** -(delta_1 + ... + delta_i)``.  The delta circuits
    are laid down once, unmarked, and shared: the marked vertices of each
    (source-made) ``m_i`` get edges to the marked vertices of
    ``delta_1 .. delta_i`` with the opposite label.
    """
    out: dict[int, dict[int, int]] = {}
    marks: dict[int, int] = {}
    offset = 0
    prefix: dict[int, int] = {}
    prefixes = [dict(prefix)]
    for d in seg.delta:
        for v, o in d._out.items():
            out[v + offset] = {t + offset: mu for t, mu in o.items()}
        prefix.update({v + offset: -nu for v, nu in d._marks.items()})
        prefixes.append(dict(prefix))
        offset += d.next_id
    for m, targets in zip(seg.m, prefixes):
        src = make_sources(m)
        for v, o in src._out.items():
            out[v + offset] = {t + offset: mu for t, mu in o.items()}
        for v, nu in src._marks.items():
            w = v + offset
            marks[w] = nu
            if out[w]:
                out[w].update(targets)
        offset += src.next_id
    if not out:
        out = {0: {}}
    M = collapse_zero_vertices(PowerCircuit._raw(out, marks))
    return BsNormalForm(M, sum_circuits(seg.delta))


def split_into_alternating(seg: BsSegment) -> AlternatingForm:
    """Cut ``seg`` greedily wherever the running t-sum would turn positive.

    Each piece between cuts has non-positive prefix sums and is collapsed by
    ``t1_collapse``; the t-power carried out of a piece joins the cutting
    t-power to form a positive ``sigma_i``.
    """
    pieces: list[PowerCircuit] = []
    sigmas: list[PowerCircuit] = []
    piece_m = [seg.m[0]]
    piece_d: list[PowerCircuit] = []
    for j, d in enumerate(seg.delta, 1):
        running = sum_circuits(piece_d + [d])
        if sign(running) > 0:
            pieces.append(t1_collapse(BsSegment(tuple(piece_m), tuple(piece_d))).M)
            sigmas.append(collapse_zero_vertices(running))
            piece_m = [seg.m[j]]
            piece_d = []
        else:
            piece_m.append(seg.m[j])
            piece_d.append(d)
    last = t1_collapse(BsSegment(tuple(piece_m), tuple(piece_d)))
    pieces.append(last.M)
    trailing = None
    if piece_d and sign(last.sigma) < 0:
        trailing = collapse_zero_vertices(last.sigma)
    return AlternatingForm(pieces[0], tuple(zip(sigmas, pieces[1:])), trailing)


def positive_collapse(alt: AlternatingForm) -> BsNormalForm | None:
    """Fold ``M_{i-1} + M_i / 2**sigma_i`` from the right.

    Returns ``None`` when some division is inexact: the a-part of the
    element is then a non-integral dyadic, so it is not ``a^p t^q``.
    """
    X = alt.blocks[-1][1] if alt.blocks else alt.head
    for i in range(len(alt.blocks) - 1, -1, -1):
        sigma_i = alt.blocks[i][0]
        left = alt.blocks[i - 1][1] if i > 0 else alt.head
        try:
            X = collapse_zero_vertices(add(left, div_pow2(X, sigma_i)))
        except NotDivisible:
            return None
    sigmas = [s for s, _ in alt.blocks]
    if alt.trailing is not None:
        sigmas.append(alt.trailing)
    return BsNormalForm(X, collapse_zero_vertices(sum_circuits(sigmas)))


def bs_normalize(S: PowerSequence) -> BsNormalForm | None:
    """``a^M t^sigma`` equal to ``S`` in B(1,2), or ``None`` if there is none."""
    if "b" in S.letters():
        raise ValueError("bs_normalize takes words over {a, t} only")
    seg = BsSegment.from_sequence(reduce_sequence(S))
    return positive_collapse(split_into_alternating(seg))


def equals_power_of_a(S: PowerSequence) -> PowerCircuit | None:
    nf = bs_normalize(S)
    if nf is not None and is_zero(nf.sigma):
        return nf.M
    return None


def equals_power_of_t(S: PowerSequence) -> PowerCircuit | None:
    nf = bs_normalize(S)
    if nf is not None and is_zero(nf.M):
        return nf.sigma
    return None
