"""Compute reference values with the test oracles and store them as JSON.

The frozen file pins expected results so that later changes to either the
package or the oracles show up as test failures.

    python scripts/freeze_oracles.py [--out tests/data/oracle_cases.json]
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

from oracles import (  # noqa: E402
    b12_oracle,
    expand,
    free_reduce,
    random_circuit,
    random_trivial_word,
    random_word,
    vertex_values,
)

from baumslag import format_circuit, naive_solve, PowerSequence  # noqa: E402


def word_text(pairs) -> str:
    return " ".join(x if e == 1 else f"{x}^{e}" for x, e in pairs)


def freeze(seed: int) -> dict:
    rng = random.Random(seed)
    circuits = []
    for _ in range(300):
        P = random_circuit(rng)
        vals = vertex_values(P)
        circuits.append(
            {
                "text": format_circuit(P),
                "value": str(sum(nu * vals[v] for v, nu in P.marks.items())),
                "vertex_values": {str(v): str(x) for v, x in vals.items()},
            }
        )
    bs_words = []
    for _ in range(300):
        w = [(rng.choice("at"), rng.randint(-6, 6)) for _ in range(rng.randint(0, 8))]
        x, q = b12_oracle(w)
        bs_words.append({"word": word_text(w), "x": str(x), "q": q})
    words = []
    for i in range(400):
        w = random_word(rng) if i % 2 else random_trivial_word(rng, pieces=2)
        outcome = naive_solve(PowerSequence.from_ints(w))
        words.append(
            {
                "word": word_text(w),
                "free_reduced": word_text(free_reduce(expand(w))),
                "naive": outcome.verdict.value,
                "trivial_by_construction": i % 2 == 0,
            }
        )
    return {"seed": seed, "circuits": circuits, "bs_words": bs_words, "words": words}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(ROOT / "tests" / "data" / "oracle_cases.json"))
    ap.add_argument("--seed", type=int, default=20240601)
    args = ap.parse_args(argv)
    data = freeze(args.seed)
    Path(args.out).write_text(json.dumps(data, indent=1) + "\n")
    print(f"wrote {args.out}: {len(data['circuits'])} circuits, "
          f"{len(data['bs_words'])} B(1,2) words, {len(data['words'])} G words")
    return 0


if __name__ == "__main__":
    sys.exit(main())
