"""Time the theorem suite per check and per worker count.

Usage: python scripts/suite_timing.py [--max-order 32] [--jobs 1 2 4]
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from hollowlab.checks import REGISTRY, RingContext
from hollowlab.corpus import CorpusSpec, build_corpus
from hollowlab.lattice import enumerate_ideals
from hollowlab.verify import evaluate, run_suite


@dataclass(frozen=True)
class TimingConfig:
    max_order: int = 32
    jobs: tuple[int, ...] = (1, 2)
    top: int = 10


def per_check(rings, top: int) -> list[tuple[str, float]]:
    t0 = time.perf_counter()
    contexts = [RingContext(R, enumerate_ideals(R)) for R in rings]
    print(f"lattices for {len(rings)} rings: {time.perf_counter() - t0:.2f}s")
    cost = {}
    for cid, chk in REGISTRY.items():
        t = time.perf_counter()
        for ctx in contexts:
            evaluate(chk, ctx)
        cost[cid] = time.perf_counter() - t
    return sorted(cost.items(), key=lambda kv: -kv[1])[:top]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=TimingConfig.max_order)
    ap.add_argument("--jobs", type=int, nargs="+", default=list(TimingConfig.jobs))
    ap.add_argument("--top", type=int, default=TimingConfig.top)
    args = ap.parse_args()
    cfg = TimingConfig(args.max_order, tuple(args.jobs), args.top)
    rings = build_corpus(CorpusSpec(max_order=cfg.max_order))
    for cid, secs in per_check(rings, cfg.top):
        print(f"  {cid:24s} {secs:.3f}s")
    for j in cfg.jobs:
        t = time.perf_counter()
        res = run_suite(rings, jobs=j)
        c = res.counts
        print(f"jobs={j}: {time.perf_counter() - t:.2f}s  pass={c['pass']} fail={c['fail']} vacuous={c['vacuous']}")


if __name__ == "__main__":
    main()
