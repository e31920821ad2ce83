"""Write DOT (and optionally JSON) lattice files for a list of rings.

Usage: python scripts/export_lattices.py --out lattices/ Z/12 "F2[x,y]/(x,y)^2"
Render with ``dot -Tsvg file.dot``.
"""

from __future__ import annotations

import argparse
import re
from dataclasses import dataclass, field
from pathlib import Path

from hollowlab.corpus import parse_ring
from hollowlab.export import to_dot, to_json
from hollowlab.lattice import enumerate_ideals

DEFAULT_RINGS = ("Z/6", "Z/8", "Z/12", "F2[x,y]/(x,y)^2", "Z4[x]/(x^2-2,2x)", "Z/2 x Z/4")


@dataclass(frozen=True)
class ExportConfig:
    out: Path = Path("lattices")
    rings: tuple[str, ...] = DEFAULT_RINGS
    formats: tuple[str, ...] = field(default=("dot",))


def slug(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "_", name).strip("_")


def export(cfg: ExportConfig) -> list[Path]:
    cfg.out.mkdir(parents=True, exist_ok=True)
    written = []
    for name in cfg.rings:
        L = enumerate_ideals(parse_ring(name))
        for fmt in cfg.formats:
            path = cfg.out / f"{slug(name)}.{fmt}"
            path.write_text(to_dot(L) if fmt == "dot" else to_json(L))
            written.append(path)
    return written


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("rings", nargs="*", default=list(DEFAULT_RINGS))
    ap.add_argument("--out", type=Path, default=ExportConfig.out)
    ap.add_argument("--json", action="store_true", help="also write the JSON form")
    args = ap.parse_args()
    formats = ("dot", "json") if args.json else ("dot",)
    for path in export(ExportConfig(args.out, tuple(args.rings), formats)):
        print(path)


if __name__ == "__main__":
    main()
