"""How often random lattice simplices satisfy ``w(P) >= delta(A) - 1``.

Each simplex also goes through the feasibility solver, and the result is
compared with brute-force enumeration.

    python scripts/simplex_flatness.py --count 100 --n 2
"""
import argparse
import random
from collections import Counter
from dataclasses import dataclass

from subdet.flat import min_basis, solve_simplex_feasible
from subdet.generators import random_simplex
from subdet.oracle import enumerate_lattice_points
from subdet.width import width_exact


@dataclass
class Config:
    count: int = 100
    n: int = 2
    seed: int = 0
    entry_bound: int = 3
    radius: int = 5


def run(cfg):
    rng = random.Random(cfg.seed)
    tally = Counter()
    for _ in range(cfg.count):
        P = random_simplex(rng, cfg.n, cfg.entry_bound)
        _, delta = min_basis(P.A)
        res = width_exact(P, radius=cfg.radius)
        wide = res.certified and res.width >= delta - 1
        rep = solve_simplex_feasible(P, policy="assume", radius=cfg.radius)
        has_point = bool(enumerate_lattice_points(P, limit=1))
        tally["wide" if wide else "narrow"] += 1
        tally[("found" if rep.found else "missed", "nonempty" if has_point else "empty")] += 1
        if wide and not rep.found:
            tally["false negative"] += 1
    return tally


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(Config()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=int, default=default)
    cfg = Config(**vars(ap.parse_args()))
    tally = run(cfg)
    for key in sorted(tally, key=str):
        label = key if isinstance(key, str) else " / ".join(key)
        print(f"{label:>22}: {tally[key]}")


if __name__ == "__main__":
    main()
