"""Run theorem checks over a corpus and search for counterexamples to converses."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .checks import ELEMENT_KEYS, REGISTRY, RingContext, TheoremCheck
from .corpus import LatticeCache, get_lattice
from .errors import UnknownCheck, UnknownProperty
from .hollow import (
    Least,
    is_ci_index,
    is_csh_index,
    is_csi_index,
    is_sh_index,
    is_si_index,
    is_waist_index,
    classify_sh,
    least_escape,
)
from .lattice import IdealLattice
from .ring import FiniteRing


@dataclass
class VerificationReport:
    check: str
    ring: str
    status: str  # pass | fail | vacuous
    hypothesis: int
    verified: int
    witness: dict | None = None
    note: str | None = None

    def to_record(self) -> dict:
        rec = {
            "check": self.check,
            "ring": self.ring,
            "status": self.status,
            "instances": {"hypothesis": self.hypothesis, "verified": self.verified},
        }
        if self.witness is not None:
            rec["witness"] = self.witness
        if self.note is not None:
            rec["note"] = self.note
        return rec

    def to_json(self) -> str:
        return json.dumps(self.to_record(), ensure_ascii=False)


# ------------------------------------------------------------ witnesses


def encode_instance(L: IdealLattice, inst: dict) -> dict:
    """JSON form of an instance: ideals as hex bitmasks plus labels."""
    R = L.ring
    out = {}
    for key, val in inst.items():
        if key[:1].isupper():
            out[key] = {"ideal": hex(L.masks[val]), "label": L.labels[val]}
        elif key in ELEMENT_KEYS:
            out[key] = {"element": val, "name": R.name(val)}
        else:
            out[key] = val
    return out


def decode_instance(L: IdealLattice, data: dict) -> dict:
    out = {}
    for key, val in data.items():
        if key[:1].isupper():
            out[key] = L.index[int(val["ideal"], 16)]
        elif key in ELEMENT_KEYS:
            out[key] = int(val["element"])
        else:
            out[key] = val
    return out


def replay(check_id: str, ring: FiniteRing, witness: dict, lattice: IdealLattice | None = None) -> bool:
    """Re-evaluate the conclusion at a serialized witness; True when it still fails."""
    chk = get_check(check_id)
    ctx = RingContext(ring, lattice)
    return not chk.holds(ctx, **decode_instance(ctx.L, witness))


# -------------------------------------------------------------- running


def get_check(check: str | TheoremCheck) -> TheoremCheck:
    if isinstance(check, TheoremCheck):
        return check
    try:
        return REGISTRY[check]
    except KeyError:
        raise UnknownCheck(check) from None


def evaluate(chk: TheoremCheck, ctx: RingContext) -> VerificationReport:
    hyp = ok = 0
    witness = None
    for inst in chk.instances(ctx):
        hyp += 1
        if chk.holds(ctx, **inst):
            ok += 1
        elif witness is None:
            witness = encode_instance(ctx.L, inst)
    if witness is not None:
        status = "fail"
    elif hyp == 0:
        status = "vacuous"
    else:
        status = "pass"
    note = chk.note(ctx) if chk.note else None
    return VerificationReport(chk.id, ctx.R.provenance, status, hyp, ok, witness, note)


def _contexts(rings: Sequence[FiniteRing], cache: LatticeCache | None) -> list[RingContext]:
    return [RingContext(R, get_lattice(R, cache)) for R in rings]


def run_check(
    check: str | TheoremCheck,
    corpus: Sequence[FiniteRing],
    cache: LatticeCache | None = None,
) -> list[VerificationReport]:
    """One report per ring, in corpus order."""
    chk = get_check(check)
    return [evaluate(chk, ctx) for ctx in _contexts(corpus, cache)]


def _ring_task(args) -> list[VerificationReport]:
    ring, masks, ids = args
    from .lattice import lattice_from_masks

    L = lattice_from_masks(ring, masks) if masks is not None else None
    ctx = RingContext(ring, L)
    return [evaluate(REGISTRY[i], ctx) for i in ids]


@dataclass
class SuiteResult:
    reports: list[VerificationReport]
    counts: dict[str, int]
    failures: list[VerificationReport]
    vacuous_checks: list[str] = field(default_factory=list)
    degenerate_checks: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and not self.vacuous_checks


def run_suite(
    corpus: Sequence[FiniteRing],
    checks: Iterable[str] | None = None,
    cache: LatticeCache | None = None,
    jobs: int = 1,
) -> SuiteResult:
    """Every (check, ring) pair. Reports are ordered check-major, then by corpus order.

    With ``jobs > 1`` rings are distributed over worker processes; the merge
    order does not depend on scheduling. A check that is vacuous on every
    ring counts as a suite failure unless it is tagged degenerate.
    """
    ids = list(REGISTRY) if checks is None else [get_check(c).id for c in checks]
    masks = [None] * len(corpus)
    if cache is not None:
        masks = [get_lattice(R, cache).masks for R in corpus]
    tasks = [(R, m, ids) for R, m in zip(corpus, masks)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_ring = list(pool.map(_ring_task, tasks, chunksize=1))
    else:
        per_ring = [_ring_task(t) for t in tasks]
    reports = [per_ring[r][c] for c in range(len(ids)) for r in range(len(corpus))]
    counts = {"pass": 0, "fail": 0, "vacuous": 0}
    for rep in reports:
        counts[rep.status] += 1
    failures = [r for r in reports if r.status == "fail"]
    vacuous, degenerate = [], []
    for c, cid in enumerate(ids):
        if all(per_ring[r][c].status == "vacuous" for r in range(len(corpus))):
            (degenerate if REGISTRY[cid].degenerate else vacuous).append(cid)
    return SuiteResult(reports, counts, failures, vacuous, degenerate)


# ---------------------------------------------------------- probes


def _gen_order(L: IdealLattice) -> list[int]:
    """Ideal indices ordered by their generator tuples, so ``(2)`` precedes ``(3)``."""
    return sorted(range(len(L)), key=lambda i: (len(L.generators[i]), L.generators[i]))


def _jr_mask(L: IdealLattice) -> int:
    m = (1 << L.ring.order) - 1
    for i in L.maximals:
        m &= L.masks[i]
    return m


def _p_sh_not_csh(L, i):
    return is_sh_index(L, i) and not is_csh_index(L, i)


def _p_si_not_csi(L, i):
    return is_si_index(L, i) and not is_csi_index(L, i)


def _p_csh_not_principal(L, i):
    return is_csh_index(L, i) and not L.is_principal(i)


def _p_csh_not_local(L, i):
    return is_csh_index(L, i) and len(L.maximals) != 1


def _p_sh_proper_outside_jr(L, i):
    return i != L.top and is_sh_index(L, i) and L.masks[i] & ~_jr_mask(L) != 0


def _p_ci_not_waist_local(L, i):
    return len(L.maximals) == 1 and is_ci_index(L, i) and not is_waist_index(L, i)


def _p_partner_not_minimal(L, i):
    # i ranges over maximal ideals; its CSH partner has a strictly smaller CSH ideal
    if not L.is_maximal[i]:
        return False
    e = least_escape(L, i)
    if not isinstance(e, Least):
        return True
    return any(is_csh_index(L, j) and j != e.ideal and L.le(j, e.ideal) for j in range(len(L)))


def _p_case_two(L, i):
    return classify_sh(L, i).kind == "InAllMaximalPowers"


PROPERTIES = {
    "sh-not-csh": _p_sh_not_csh,
    "si-not-csi": _p_si_not_csi,
    "csh-not-principal": _p_csh_not_principal,
    "csh-not-local": _p_csh_not_local,
    "sh-proper-not-in-jacobson": _p_sh_proper_outside_jr,
    "ci-not-waist-local": _p_ci_not_waist_local,
    "csh-partner-not-minimal": _p_partner_not_minimal,
    "sh-case-2": _p_case_two,
}

ALIASES = {
    "SH∧¬CSH": "sh-not-csh",
    "SI∧¬CSI": "si-not-csi",
    "CSH∧¬principal": "csh-not-principal",
    "CSH∧¬local-ring": "csh-not-local",
    "SH-proper∧¬⊆J(R)": "sh-proper-not-in-jacobson",
}


def property_name(name: str) -> str:
    key = ALIASES.get(name.strip(), name.strip().lower())
    if key not in PROPERTIES:
        raise UnknownProperty(name)
    return key


@dataclass(frozen=True)
class Counterexample:
    property: str
    ring: str
    ideal: str
    mask: str

    def to_record(self) -> dict:
        return {"property": self.property, "ring": self.ring, "ideal": self.ideal, "mask": self.mask}


def search_counterexample(
    prop: str, corpus: Sequence[FiniteRing], cache: LatticeCache | None = None
) -> Counterexample | None:
    """First ideal with the named property, scanning rings in corpus order."""
    key = property_name(prop)
    pred = PROPERTIES[key]
    for R in corpus:
        L = get_lattice(R, cache)
        for i in _gen_order(L):
            if pred(L, i):
                return Counterexample(key, R.provenance, L.labels[i], hex(L.masks[i]))
    return None
