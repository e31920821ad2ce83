"""Count which branch of the SH classification each strongly hollow ideal takes.

Usage: python scripts/trichotomy_census.py [--max-order 32] [--out census.json]
"""

from __future__ import annotations

import argparse
import collections
import json
from dataclasses import dataclass

from hollowlab.corpus import CorpusSpec, build_corpus
from hollowlab.hollow import classify_sh, sh_indices
from hollowlab.lattice import enumerate_ideals


@dataclass(frozen=True)
class CensusConfig:
    max_order: int = 32
    out: str | None = None


def census(cfg: CensusConfig) -> dict:
    totals = collections.Counter()
    rows = []
    for R in build_corpus(CorpusSpec(max_order=cfg.max_order)):
        L = enumerate_ideals(R)
        for i in sh_indices(L):
            case = classify_sh(L, i)
            totals[case.kind] += 1
            rows.append({
                "ring": R.provenance,
                "ideal": L.labels[i],
                "case": case.number,
                "maximal": L.labels[case.maximal] if case.maximal is not None else None,
                "n": case.n,
            })
    return {"totals": dict(sorted(totals.items())), "ideals": rows}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=CensusConfig.max_order)
    ap.add_argument("--out")
    args = ap.parse_args()
    cfg = CensusConfig(args.max_order, args.out)
    result = census(cfg)
    for kind, count in result["totals"].items():
        print(f"{kind:24s} {count}")
    deepest = max((r for r in result["ideals"] if r["n"]), key=lambda r: r["n"], default=None)
    if deepest:
        print(f"largest shallow exponent: n = {deepest['n']} for {deepest['ideal']} in {deepest['ring']}")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump(result, fh, indent=2, ensure_ascii=False)


if __name__ == "__main__":
    main()
