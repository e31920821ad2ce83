"""DOT and JSON renderings of an ideal lattice with its hollowness flags."""

from __future__ import annotations

import json

from .hollow import gamma_index, is_csh_index, is_csi_index, is_sh_index, is_si_index, l_index
from .lattice import IdealLattice


def _flags(L: IdealLattice, i: int) -> list[str]:
    names = []
    for flag, pred in (("SH", is_sh_index), ("CSH", is_csh_index), ("SI", is_si_index), ("CSI", is_csi_index)):
        if pred(L, i):
            names.append(flag)
    return names


def to_dot(L: IdealLattice) -> str:
    """Hasse diagram, smallest ideal at the bottom."""
    lines = [f'digraph "{L.ring.provenance}" {{', "  rankdir=BT;", "  node [shape=box];"]
    for i in range(len(L)):
        flags = " ".join(_flags(L, i))
        label = L.labels[i] + (f"\\n{flags}" if flags else "")
        lines.append(f'  n{i} [label="{label}"];')
    for a, b in L.hasse_edges:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(L: IdealLattice) -> dict:
    R = L.ring
    ideals = []
    for i in range(len(L)):
        ideals.append({
            "index": i,
            "label": L.labels[i],
            "mask": hex(L.masks[i]),
            "size": bin(L.masks[i]).count("1"),
            "prime": L.is_prime[i],
            "maximal": L.is_maximal[i],
            "primary": L.is_primary[i],
            "radical": L.radical[i],
            "minimal_prime": L.is_minimal_prime[i],
            "sh": is_sh_index(L, i),
            "csh": is_csh_index(L, i),
            "si": is_si_index(L, i),
            "csi": is_csi_index(L, i),
            "gamma": gamma_index(L, i),
            "l": l_index(L, i),
        })
    return {
        "ring": R.provenance,
        "order": R.order,
        "elements": list(R.element_names),
        "ideals": ideals,
        "hasse_edges": [list(e) for e in L.hasse_edges],
    }


def to_json(L: IdealLattice) -> str:
    return json.dumps(to_json_dict(L), indent=2, ensure_ascii=False) + "\n"


def export_lattice(L: IdealLattice, fmt: str) -> str:
    if fmt == "dot":
        return to_dot(L)
    if fmt == "json":
        return to_json(L)
    raise ValueError(f"unknown format {fmt!r}")
