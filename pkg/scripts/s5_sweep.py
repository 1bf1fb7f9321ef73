"""Heavier checks in S_5: recursion vs chain formula, monomial positivity,
the minimum-degree filtration and the pipe-dream formula, with timings.

    python scripts/s5_sweep.py --sample 40 --seed 1
"""

import argparse
import random
import time
from dataclasses import dataclass

from twisted_schubert.permutations import all_permutations
from twisted_schubert.polyring import is_monomial_nonnegative, min_degree_part
from twisted_schubert.schubert import (
    schubert, schubert_via_pipedreams, twisted_schubert, twisted_schubert_via_chains,
)


@dataclass(frozen=True)
class Config:
    n: int = 5
    sample: int = 40
    seed: int = 1


def timed(label, fn):
    start = time.perf_counter()
    ok = fn()
    print(f"{'ok ' if ok else 'BAD'} {label:<48} {time.perf_counter() - start:7.2f}s")
    return ok


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--n", type=int, default=Config.n)
    ap.add_argument("--sample", type=int, default=Config.sample)
    ap.add_argument("--seed", type=int, default=Config.seed)
    cfg = Config(**vars(ap.parse_args()))
    perms = all_permutations(cfg.n)
    sample = random.Random(cfg.seed).sample(perms, min(cfg.sample, len(perms)))
    results = [
        timed(f"positivity, all of S_{cfg.n}", lambda: all(is_monomial_nonnegative(twisted_schubert(w)) for w in perms)),
        timed(f"minimum degree part is S_w, all of S_{cfg.n}",
              lambda: all(min_degree_part(twisted_schubert(w)) == schubert(w) for w in perms)),
        timed(f"pipe dreams, all of S_{cfg.n}", lambda: all(schubert(w) == schubert_via_pipedreams(w) for w in perms)),
        timed(f"chain formula, {len(sample)} sampled",
              lambda: all(twisted_schubert(w) == twisted_schubert_via_chains(w) for w in sample)),
    ]
    raise SystemExit(0 if all(results) else 1)


if __name__ == "__main__":
    main()
