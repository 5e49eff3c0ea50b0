#!/usr/bin/env python3
"""Cross-validate the three score routes on random elections.

For each sampled triple: the DP oracle must match the assumption-free BFS
oracle (where the profile space is small enough), and any definite greedy
score must match the DP.  Disagreements print the offending triple and the
script exits nonzero.

    python scripts/check_oracles.py --triples 500 --max-m 5 --max-n 9
"""

import argparse
import math
import random
import sys

from dodgson import (
    Confidence,
    DodgsonTriple,
    SamplerConfig,
    bfs_swap_score,
    exact_dodgson_score,
    greedy_score,
    sample_election,
)
from dodgson.oracle import DEFAULT_BFS_PROFILE_BUDGET, ScoreMode


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--triples", type=int, default=500)
    ap.add_argument("--max-m", type=int, default=5)
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    bfs_hits = greedy_hits = 0
    for i in range(args.triples):
        m = rng.randint(2, args.max_m)
        n = rng.randint(1, args.max_n)
        e = sample_election(SamplerConfig(m, n, rng.getrandbits(64)))
        c = rng.randint(1, m)
        t = DodgsonTriple(e, c)
        for mode in ScoreMode:
            dp = exact_dodgson_score(t, mode)
            if math.factorial(m) ** n <= DEFAULT_BFS_PROFILE_BUDGET:
                bfs = bfs_swap_score(t, mode)
                bfs_hits += 1
                if bfs != dp:
                    print(f"DISAGREEMENT ({mode.value}): dp={dp} bfs={bfs} "
                          f"c={c} votes={e.votes}", file=sys.stderr)
                    return 1
        g = greedy_score(t)
        if g.confidence is Confidence.DEFINITELY:
            greedy_hits += 1
            if g.score != exact_dodgson_score(t):
                print(f"DISAGREEMENT (greedy definite): greedy={g.score} "
                      f"c={c} votes={e.votes}", file=sys.stderr)
                return 1
    print(f"agree: {args.triples} triples, {bfs_hits} BFS comparisons, "
          f"{greedy_hits} definite greedy scores")
    return 0


if __name__ == "__main__":
    sys.exit(main())
