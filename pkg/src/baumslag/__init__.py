"""Power circuits and a polynomial-time word problem solver for the
Baumslag group G = <a, b | b^-1 a^-1 b a b^-1 a b = a^2>."""
from .bs import (
    AlternatingForm,
    BsNormalForm,
    BsSegment,
    bs_normalize,
    equals_power_of_a,
    equals_power_of_t,
    positive_collapse,
    split_into_alternating,
    t1_collapse,
)
from .circuit import (
    DEFAULT_BIT_BUDGET,
    PowerCircuit,
    add,
    collapse_zero_vertices,
    const_circuit,
    eval_circuit,
    eval_vertex,
    exponent_circuit,
    format_circuit,
    make_sources,
    mul_pow2,
    negate,
    new_zero_circuit,
    parse_circuit,
    subtract,
    sum_circuits,
    to_dot,
    unary_circuit,
)
from .errors import (
    BaumslagError,
    BudgetExceeded,
    CircuitFormatError,
    GrowthViolation,
    NonInteger,
    NotDivisible,
    WordSyntaxError,
)
from .naive import NaiveOutcome, b12_element, naive_solve
from .reduction import (
    ReducedCircuit,
    compare,
    compare_vertices,
    div_pow2,
    divisible_by_pow2,
    is_zero,
    reduce,
    sign,
)
from .sequence import (
    PowerSequence,
    is_reduced,
    join_reduced,
    parse_word,
    print_word,
    reduce_sequence,
)
from .word_problem import (
    SolveStats,
    Verdict,
    commutator,
    eliminate_pinches,
    hard_word,
    solve,
    tower2,
)

__version__ = "0.1.0"
