"""Power circuits: integers stored as DAGs with +-1 edge labels and signed marks.

A vertex with no outgoing edges evaluates to 0; any other vertex ``v``
evaluates to ``2 ** sum(label * value(target))`` over its outgoing edges.
The circuit represents the signed sum of the values of its marked vertices.

Circuits are immutable values.  Every operation returns a new circuit and
leaves its arguments untouched.  Vertex ids are non-negative ints, unique
within one circuit; binary operations rename the second operand's ids.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping

from .errors import BudgetExceeded, CircuitFormatError, NonInteger

DEFAULT_BIT_BUDGET = 1 << 20

HEADER = "powercircuit v1"


class PowerCircuit:
    """Labelled DAG with signed marked vertices.

    ``PowerCircuit(vertices, edges, marks)`` validates its input: ``edges``
    maps ``(source, target)`` pairs to +-1, ``marks`` maps vertices to +-1.
    """

    __slots__ = ("_out", "_marks", "_topo")

    def __init__(
        self,
        vertices: Iterable[int] = (),
        edges: Mapping[tuple[int, int], int] | None = None,
        marks: Mapping[int, int] | None = None,
    ):
        out: dict[int, dict[int, int]] = {}
        for v in vertices:
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"vertex ids must be non-negative ints, got {v!r}")
            out[v] = {}
        for (s, t), mu in (edges or {}).items():
            if s not in out or t not in out:
                raise ValueError(f"edge {s}->{t} has an endpoint outside the vertex set")
            if mu not in (1, -1):
                raise ValueError(f"edge label must be +1 or -1, got {mu!r}")
            out[s][t] = mu
        mk = {}
        for v, nu in (marks or {}).items():
            if v not in out:
                raise ValueError(f"marked vertex {v} is not a vertex")
            if nu not in (1, -1):
                raise ValueError(f"mark sign must be +1 or -1, got {nu!r}")
            mk[v] = nu
        self._out = out
        self._marks = mk
        self._topo = None
        self.topological_order()  # raises on cycles

    @classmethod
    def _raw(cls, out: dict[int, dict[int, int]], marks: dict[int, int]) -> PowerCircuit:
        # Trusted constructor: callers hand over freshly built dicts.
        self = object.__new__(cls)
        self._out = out
        self._marks = marks
        self._topo = None
        return self

    # -- structure -----------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._out))

    @property
    def edges(self) -> dict[tuple[int, int], int]:
        return {(s, t): mu for s, o in self._out.items() for t, mu in o.items()}

    @property
    def marks(self) -> dict[int, int]:
        return dict(self._marks)

    def out_edges(self, v: int) -> dict[int, int]:
        return dict(self._out[v])

    def has_vertex(self, v: int) -> bool:
        return v in self._out

    @property
    def num_vertices(self) -> int:
        return len(self._out)

    @property
    def num_edges(self) -> int:
        return sum(len(o) for o in self._out.values())

    @property
    def num_marks(self) -> int:
        return len(self._marks)

    @property
    def size(self) -> int:
        return self.num_vertices + self.num_edges

    @property
    def next_id(self) -> int:
        return max(self._out) + 1 if self._out else 0

    def sinks(self) -> list[int]:
        return sorted(v for v, o in self._out.items() if not o)

    def in_degrees(self) -> dict[int, int]:
        deg = dict.fromkeys(self._out, 0)
        for o in self._out.values():
            for t in o:
                deg[t] += 1
        return deg

    def sources(self) -> list[int]:
        return sorted(v for v, d in self.in_degrees().items() if d == 0)

    def topological_order(self) -> tuple[int, ...]:
        """Vertices ordered so that every edge target precedes its source."""
        if self._topo is None:
            outdeg = {v: len(o) for v, o in self._out.items()}
            preds: dict[int, list[int]] = {v: [] for v in self._out}
            for s, o in self._out.items():
                for t in o:
                    preds[t].append(s)
            ready = sorted(v for v, d in outdeg.items() if d == 0)
            order = []
            while ready:
                v = ready.pop()
                order.append(v)
                for s in preds[v]:
                    outdeg[s] -= 1
                    if outdeg[s] == 0:
                        ready.append(s)
            if len(order) != len(self._out):
                raise ValueError("edge relation contains a directed cycle")
            self._topo = tuple(order)
        return self._topo

    def reachable(self, roots: Iterable[int]) -> set[int]:
        seen = set()
        stack = list(roots)
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(self._out[v])
        return seen

    def __eq__(self, other):
        if not isinstance(other, PowerCircuit):
            return NotImplemented
        return self._out == other._out and self._marks == other._marks

    __hash__ = None

    def __repr__(self):
        return (
            f"PowerCircuit(|V|={self.num_vertices}, |E|={self.num_edges}, "
            f"|M|={self.num_marks})"
        )


# -- construction --------------------------------------------------------


def new_zero_circuit() -> PowerCircuit:
    return PowerCircuit._raw({0: {}}, {})


def _bits(n: int) -> list[int]:
    return [j for j in range(n.bit_length()) if n >> j & 1]


def const_circuit(n: int) -> PowerCircuit:
    """Circuit for ``n`` from the binary expansion of ``|n|``.

    One vertex per power of two used, with the exponents themselves built
    from the same shared pool of power vertices.
    """
    n = int(n)
    if n == 0:
        return new_zero_circuit()
    out: dict[int, dict[int, int]] = {0: {}}
    power_vertex: dict[int, int] = {}

    def power(e: int) -> int:
        if e not in power_vertex:
            targets = {power(j): 1 for j in _bits(e)} if e else {0: 1}
            v = len(out)
            out[v] = targets
            power_vertex[e] = v
        return power_vertex[e]

    sign = 1 if n > 0 else -1
    marks = {power(j): sign for j in _bits(abs(n))}
    return PowerCircuit._raw(out, marks)


def unary_circuit(n: int) -> PowerCircuit:
    """Circuit for ``n`` using ``|n|`` marked vertices of value 1."""
    n = int(n)
    sign = 1 if n > 0 else -1
    out: dict[int, dict[int, int]] = {0: {}}
    for v in range(1, abs(n) + 1):
        out[v] = {0: 1}
    return PowerCircuit._raw(out, {v: sign for v in range(1, abs(n) + 1)})


# -- evaluation ----------------------------------------------------------


def _describe(n: int) -> str:
    # decimal conversion of huge ints is slow and capped by the interpreter
    if n.bit_length() <= 64:
        return str(n)
    return f"{'-' if n < 0 else ''}a {n.bit_length()}-bit number"


def _eval_all(P: PowerCircuit, roots: Iterable[int], bit_budget: int) -> dict[int, int]:
    out = P._out
    values: dict[int, int] = {}
    stack = list(roots)
    while stack:
        v = stack[-1]
        if v in values:
            stack.pop()
            continue
        pending = [t for t in out[v] if t not in values]
        if pending:
            stack.extend(pending)
            continue
        stack.pop()
        o = out[v]
        if not o:
            values[v] = 0
            continue
        s = sum(mu * values[t] for t, mu in o.items())
        if s < 0:
            raise NonInteger(f"vertex {v} has negative exponent sum {_describe(s)}")
        if s + 1 > bit_budget:
            raise BudgetExceeded(f"vertex {v} needs {_describe(s + 1)} bits", bits=s + 1)
        values[v] = 1 << s
    return values


def eval_vertex(P: PowerCircuit, v: int, bit_budget: int = DEFAULT_BIT_BUDGET) -> int:
    if not P.has_vertex(v):
        raise KeyError(v)
    return _eval_all(P, [v], bit_budget)[v]


def eval_circuit(P: PowerCircuit, bit_budget: int = DEFAULT_BIT_BUDGET) -> int:
    """Exact value of the circuit, or ``BudgetExceeded``/``NonInteger``."""
    values = _eval_all(P, P._marks, bit_budget)
    total = sum(nu * values[v] for v, nu in P._marks.items())
    if total.bit_length() > bit_budget:
        raise BudgetExceeded(f"value needs {total.bit_length()} bits", bits=total.bit_length())
    return total


# -- structural arithmetic ----------------------------------------------


def _copy_out(P: PowerCircuit, offset: int = 0) -> dict[int, dict[int, int]]:
    if not offset:
        return {v: dict(o) for v, o in P._out.items()}
    return {v + offset: {t + offset: mu for t, mu in o.items()} for v, o in P._out.items()}


def _union(P1: PowerCircuit, P2: PowerCircuit, sign2: int = 1):
    offset = P1.next_id
    out = _copy_out(P1)
    out.update(_copy_out(P2, offset))
    marks = dict(P1._marks)
    marks.update({v + offset: sign2 * nu for v, nu in P2._marks.items()})
    return out, marks, offset


def add(P1: PowerCircuit, P2: PowerCircuit) -> PowerCircuit:
    out, marks, _ = _union(P1, P2)
    return PowerCircuit._raw(out, marks)


def subtract(P1: PowerCircuit, P2: PowerCircuit) -> PowerCircuit:
    out, marks, _ = _union(P1, P2, -1)
    return PowerCircuit._raw(out, marks)


def negate(P: PowerCircuit) -> PowerCircuit:
    return PowerCircuit._raw(_copy_out(P), {v: -nu for v, nu in P._marks.items()})


def sum_circuits(circuits: Iterable[PowerCircuit]) -> PowerCircuit:
    """Disjoint union of all ``circuits``; the empty sum is the zero circuit."""
    out: dict[int, dict[int, int]] = {}
    marks: dict[int, int] = {}
    offset = 0
    for P in circuits:
        out.update(_copy_out(P, offset))
        marks.update({v + offset: nu for v, nu in P._marks.items()})
        offset += P.next_id
    if not out:
        return new_zero_circuit()
    return PowerCircuit._raw(out, marks)


def collapse_zero_vertices(P: PowerCircuit) -> PowerCircuit:
    """Glue all sinks into one and drop marks sitting on sinks."""
    sinks = P.sinks()
    marked_sinks = [v for v in P._marks if not P._out[v]]
    if len(sinks) <= 1 and not marked_sinks:
        return P
    z = sinks[0]
    glued = set(sinks[1:])
    out: dict[int, dict[int, int]] = {}
    for v, o in P._out.items():
        if v in glued:
            continue
        new = {}
        for t, mu in o.items():
            if t in glued:
                t = z
            # edges into a sink contribute 0; one survivor keeps v a non-sink
            new.setdefault(t, mu)
        out[v] = new
    marks = {v: nu for v, nu in P._marks.items() if P._out[v]}
    return PowerCircuit._raw(out, marks)


def make_sources(P: PowerCircuit) -> PowerCircuit:
    """Move every mark on a vertex with incoming edges onto a fresh clone."""
    deg = P.in_degrees()
    out = _copy_out(P)
    marks = {}
    nxt = P.next_id
    for v, nu in sorted(P._marks.items()):
        if deg[v]:
            out[nxt] = dict(P._out[v])
            marks[nxt] = nu
            nxt += 1
        else:
            marks[v] = nu
    return PowerCircuit._raw(out, marks)


def mul_pow2(P1: PowerCircuit, P2: PowerCircuit) -> PowerCircuit:
    """Circuit for ``N(P1) * 2 ** N(P2)``.

    Marked vertices of ``P1`` become sources, then each gets an edge to
    every marked vertex of ``P2`` labelled with that mark's sign.  Marked
    sinks of ``P1`` are left alone (they are worth 0 either way).
    """
    S = make_sources(P1)
    out, marks, offset = _union(S, P2)
    marks = dict(S._marks)
    targets = {v + offset: nu for v, nu in P2._marks.items()}
    for v in marks:
        if out[v]:
            out[v].update(targets)
    return PowerCircuit._raw(out, marks)


def exponent_circuit(P: PowerCircuit, v: int) -> PowerCircuit:
    """Same graph, marked by the outgoing edges of ``v``: its value is log2 E(v)."""
    return PowerCircuit._raw(_copy_out(P), dict(P._out[v]))


# -- text formats ----------------------------------------------------------


def _sign_char(s: int) -> str:
    return "+" if s > 0 else "-"


def format_circuit(P: PowerCircuit) -> str:
    lines = [HEADER]
    lines += [f"v {v}" for v in P.vertices]
    lines += [f"e {s} {t} {_sign_char(mu)}" for (s, t), mu in sorted(P.edges.items())]
    lines += [f"m {v} {_sign_char(nu)}" for v, nu in sorted(P._marks.items())]
    return "\n".join(lines) + "\n"


def _parse_id(tok: str, lineno: int) -> int:
    if not tok.isdigit():
        raise CircuitFormatError(f"bad vertex id {tok!r}", lineno)
    return int(tok)


def _parse_sign(tok: str, lineno: int) -> int:
    if tok == "+":
        return 1
    if tok == "-":
        return -1
    raise CircuitFormatError(f"bad sign {tok!r}, expected + or -", lineno)


def parse_circuit(text: str) -> PowerCircuit:
    """Parse the line-oriented circuit format (see ``format_circuit``)."""
    vertices: set[int] = set()
    edges: dict[tuple[int, int], int] = {}
    marks: dict[int, int] = {}
    refs: list[tuple[int, int]] = []
    seen_header = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not seen_header:
            if line != HEADER:
                raise CircuitFormatError(f"expected header {HEADER!r}", lineno)
            seen_header = True
            continue
        toks = line.split()
        kind = toks[0]
        if kind == "v" and len(toks) == 2:
            vertices.add(_parse_id(toks[1], lineno))
        elif kind == "e" and len(toks) == 4:
            s, t = _parse_id(toks[1], lineno), _parse_id(toks[2], lineno)
            if (s, t) in edges:
                raise CircuitFormatError(f"duplicate edge {s} {t}", lineno)
            edges[(s, t)] = _parse_sign(toks[3], lineno)
            refs += [(s, lineno), (t, lineno)]
        elif kind == "m" and len(toks) == 3:
            v = _parse_id(toks[1], lineno)
            if v in marks:
                raise CircuitFormatError(f"vertex {v} marked twice", lineno)
            marks[v] = _parse_sign(toks[2], lineno)
            refs.append((v, lineno))
        else:
            raise CircuitFormatError(f"unrecognised line {line!r}", lineno)
    if not seen_header:
        raise CircuitFormatError(f"missing header {HEADER!r}")
    for v, lineno in refs:
        if v not in vertices:
            raise CircuitFormatError(f"dangling vertex id {v}", lineno)
    try:
        return PowerCircuit(vertices, edges, marks)
    except ValueError as exc:
        raise CircuitFormatError(str(exc)) from None


def to_dot(P: PowerCircuit, name: str = "circuit") -> str:
    """Graphviz rendering: marked vertices filled black, labels + and -."""
    lines = [f"digraph {name} {{", "  node [shape=circle];"]
    for v in P.vertices:
        if v in P._marks:
            lines.append(
                f'  v{v} [label="{_sign_char(P._marks[v])}", style=filled, '
                f'fillcolor=black, fontcolor=white];'
            )
        else:
            lines.append(f'  v{v} [label=""];')
    for (s, t), mu in sorted(P.edges.items()):
        lines.append(f'  v{s} -> v{t} [label="{_sign_char(mu)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
