"""Search for v, w with a negative monomial coefficient in T_v S_w.

    python scripts/tv_positivity.py --n-max 5
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from twisted_schubert.permutations import all_permutations
from twisted_schubert.polyring import is_monomial_nonnegative
from twisted_schubert.schubert import tv_schubert


@dataclass(frozen=True)
class Config:
    n_min: int = 2
    n_max: int = 5


def sweep(n: int) -> dict:
    start = time.perf_counter()
    perms = all_permutations(n)
    negative = []
    min_coeff = 0
    for v in perms:
        for w in perms:
            f = tv_schubert(v, w)
            if not is_monomial_nonnegative(f):
                negative.append([str(v), str(w)])
                min_coeff = min(min_coeff, min(f.terms.values()))
    return {"n": n, "pairs": len(perms) ** 2, "negative": negative, "min_coeff": min_coeff,
            "seconds": round(time.perf_counter() - start, 2)}


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--n-min", type=int, default=Config.n_min)
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    cfg = Config(**{k: v for k, v in vars(ap.parse_args()).items()})
    rows = [sweep(n) for n in range(cfg.n_min, cfg.n_max + 1)]
    print(json.dumps({"config": asdict(cfg), "results": rows}, indent=2))


if __name__ == "__main__":
    main()
