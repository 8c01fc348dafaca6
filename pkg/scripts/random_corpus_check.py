"""Sweep random braid-closure diagrams and check Euler/Jones, mirror duality and d^2 = 0."""
import argparse
import random
import time
from dataclasses import dataclass

from khgraph.corpus import random_diagram, random_relabeling
from khgraph.khovanov import dual_table, graded_euler, khovanov_homology
from khgraph.laurent import jones_state_sum
from khgraph.linkdiag import mirror


@dataclass
class SweepConfig:
    count: int = 200
    max_crossings: int = 8
    seed: int = 0


def sweep(cfg: SweepConfig) -> dict:
    rng = random.Random(cfg.seed)
    stats = {"diagrams": 0, "euler_fail": 0, "mirror_fail": 0, "relabel_fail": 0, "max_rank": 0}
    for _ in range(cfg.count):
        d = random_diagram(rng, cfg.max_crossings)
        t = khovanov_homology(d)  # raises if d^2 != 0
        stats["diagrams"] += 1
        stats["euler_fail"] += graded_euler(t) != jones_state_sum(d)
        stats["mirror_fail"] += khovanov_homology(mirror(d)) != dual_table(t)
        stats["relabel_fail"] += khovanov_homology(random_relabeling(d, rng)).to_csv() != t.to_csv()
        stats["max_rank"] = max(stats["max_rank"], t.total_rank())
    return stats


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=SweepConfig.count)
    ap.add_argument("--max-crossings", type=int, default=SweepConfig.max_crossings)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    args = ap.parse_args()
    t0 = time.perf_counter()
    stats = sweep(SweepConfig(args.count, args.max_crossings, args.seed))
    for k, v in stats.items():
        print(f"{k:>13}: {v}")
    print(f"{'seconds':>13}: {time.perf_counter() - t0:.2f}")


if __name__ == "__main__":
    main()
