"""Show w_k collapsing to a^tower2(k) without expanding the exponent.

For each k the pinches of w_k are removed, the remaining {a, t}-word is
normalised, and the exponent circuit is reduced.  Its size stays tiny
while the value it encodes is a tower of twos.

    python scripts/tower_demo.py --k-max 10
"""
from __future__ import annotations

import argparse
import sys
import time

from baumslag import (
    BudgetExceeded,
    SolveStats,
    bs_normalize,
    eliminate_pinches,
    eval_circuit,
    hard_word,
    reduce,
    tower2,
)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k-max", type=int, default=10)
    args = ap.parse_args(argv)

    print(f"{'k':>2} {'|w_k|':>6} {'rewrites':>8} {'|V(M)|':>7} {'reduced':>7} {'seconds':>8}  value of M")
    for k in range(args.k_max + 1):
        t0 = time.perf_counter()
        stats = SolveStats()
        S = eliminate_pinches(hard_word(k), stats=stats)
        nf = bs_normalize(S)
        R = reduce(nf.M)
        dt = time.perf_counter() - t0
        try:
            value = eval_circuit(R.circuit, bit_budget=1 << 17)
            shown = str(value) if value.bit_length() < 64 else f"2^{value.bit_length() - 1}"
            if k <= 5:
                assert value == tower2(k)
        except BudgetExceeded:
            shown = f"tower2({k}), too large to print"
        print(
            f"{k:>2} {len(hard_word(k)):>6} {stats.rewrites:>8} {nf.M.num_vertices:>7} "
            f"{R.circuit.num_vertices:>7} {dt:>8.3f}  {shown}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
