"""Edge counts and timings for the cube cone with one doubled column.

    python scripts/cube_cone_edges.py --n-max 7
"""
import argparse
import time
from dataclasses import dataclass

from subdet.instances import count_cone_edges, gen_cube_cone
from subdet.spectrum import compute_spectrum


@dataclass
class Config:
    n_min: int = 2
    n_max: int = 6
    scaled_col: str = "last"
    spectrum_up_to: int = 4


def run(cfg):
    rows = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        col = n + 1 if cfg.scaled_col == "last" else int(cfg.scaled_col)
        A = gen_cube_cone(n, col)
        t0 = time.perf_counter()
        edges = count_cone_edges(A)
        elapsed = time.perf_counter() - t0
        spec = compute_spectrum(A) if n <= cfg.spectrum_up_to else None
        rows.append((n, edges, elapsed, spec))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=Config.n_min)
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    ap.add_argument("--scaled-col", default=Config.scaled_col,
                    help="1-based column to double, or 'last'")
    ap.add_argument("--spectrum-up-to", type=int, default=Config.spectrum_up_to)
    cfg = Config(**vars(ap.parse_args()))
    print(f"{'n':>3} {'edges':>7} {'2^n':>7} {'seconds':>9}  spectrum")
    for n, edges, elapsed, spec in run(cfg):
        extra = "" if spec is None else (
            f"Delta={spec.delta_max} delta={spec.delta_min} lcm={spec.delta_lcm}")
        print(f"{n:>3} {edges:>7} {2 ** n:>7} {elapsed:>9.3f}  {extra}")


if __name__ == "__main__":
    main()
