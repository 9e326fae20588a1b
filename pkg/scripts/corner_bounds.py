"""Statistics for the identity-case corner construction and integer-hull vertices.

For random nonsingular ``A_hat`` the script records how close ``sum(y)`` gets
to ``Delta - 1``. For random corner systems it counts the hull vertices and
the largest ``prod(1 + y_k) / Delta`` among them.

    python scripts/corner_bounds.py --trials 200 --seed 3
"""
import argparse
import random
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from subdet.corner import build_group_system, solve_identity_case
from subdet.exact import det
from subdet.generators import random_corner, random_nonsingular
from subdet.oracle import group_hull_vertices


@dataclass
class Config:
    trials: int = 200
    seed: int = 0
    n_max: int = 3
    s_max: int = 3
    entry_bound: int = 4
    max_delta: int = 12


def identity_stats(cfg, rng):
    worst = Fraction(0)
    tight = 0
    for _ in range(cfg.trials):
        n = rng.randint(1, cfg.n_max)
        A = random_nonsingular(rng, n, cfg.entry_bound, cfg.max_delta)
        b = tuple(rng.randint(-20, 20) for _ in range(n))
        delta = abs(det(A))
        total = sum(solve_identity_case(A, b).y)
        if delta > 1:
            worst = max(worst, Fraction(total, delta - 1))
        tight += total == delta - 1
    return worst, tight


def hull_stats(cfg, rng):
    n_vertices = 0
    worst = Fraction(0)
    for _ in range(cfg.trials):
        n = rng.randint(1, cfg.n_max)
        s = rng.randint(1, cfg.s_max)
        gs = build_group_system(random_corner(rng, n, s, cfg.entry_bound, cfg.max_delta))
        for y in group_hull_vertices(gs):
            n_vertices += 1
            worst = max(worst, Fraction(prod(1 + v for v in y), gs.order))
    return n_vertices, worst


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(Config()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=int, default=default)
    cfg = Config(**vars(ap.parse_args()))
    rng = random.Random(cfg.seed)
    worst, tight = identity_stats(cfg, rng)
    print(f"identity case: max sum(y)/(Delta-1) = {worst} ({float(worst):.3f}); "
          f"{tight}/{cfg.trials} attain Delta - 1")
    n_vertices, ratio = hull_stats(cfg, rng)
    print(f"hull vertices: {n_vertices}; max prod(1+y)/Delta = {ratio} ({float(ratio):.3f})")


if __name__ == "__main__":
    main()
