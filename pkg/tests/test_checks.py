import json

import pytest

import hollowlab.checks as checks
from hollowlab.checks import REGISTRY, RingContext, TheoremCheck
from hollowlab.corpus import CorpusSpec, build_corpus, parse_ring
from hollowlab.errors import UnknownCheck, UnknownProperty
from hollowlab.ring import make_zmod
from hollowlab.verify import (
    decode_instance,
    encode_instance,
    evaluate,
    property_name,
    replay,
    run_check,
    run_suite,
    search_counterexample,
)

EXPECTED_IDS = """
chk-max-sh chk-gamma-sandwich chk-colon-sh chk-quotient-gamma chk-surj-image chk-ker-preimage
chk-small-kernel chk-least chk-gamma-greatest chk-csh-gamma chk-arith-minimal chk-si-minimal-escape
chk-arith-dual chk-sh-dual chk-escapes-jacobson chk-semiprimitive chk-si-min chk-min-jr
chk-colon-equal chk-domain-field chk-gamma-proper chk-weakly-coprime chk-ann-local chk-ann-csh
chk-ann-primary chk-reduced-field chk-vs-split chk-i-in-m2 chk-comax-powers chk-a-gamma
chk-trichotomy chk-ci-gives-ch chk-local-bijection chk-true-bijection chk-order-preserving
chk-waist chk-noetherian-csh chk-localized-si chk-pprimary-bij chk-nonprime-si chk-colonM-local
chk-gamma-power chk-artinian-csi chk-artinian-min chk-star-fg chk-star-bezout
""".split()


def test_registry_contents():
    assert list(REGISTRY) == EXPECTED_IDS
    for chk in REGISTRY.values():
        assert chk.anchor and chk.quote and chk.scope
    assert {c.id for c in REGISTRY.values() if c.degenerate} == {"chk-domain-field", "chk-gamma-power"}


def test_unknown_check():
    with pytest.raises(UnknownCheck):
        run_check("chk-nonexistent", [make_zmod(2)])
    with pytest.raises(UnknownCheck):
        run_suite([make_zmod(2)], ["chk-nonexistent"])


def test_escapes_jacobson_small_corpus():
    rings = build_corpus(CorpusSpec(max_order=12))
    reports = run_check("chk-escapes-jacobson", rings)
    assert len(reports) == len(rings)
    assert all(r.status in ("pass", "vacuous") for r in reports)
    assert sum(r.hypothesis for r in reports) >= 2
    z6 = next(r for r in reports if r.ring == "Z/6")
    assert z6.status == "pass" and z6.verified == z6.hypothesis >= 2


def test_i_in_m2_instances():
    fat = [parse_ring(n) for n in ("F2[x,y]/(x,y)^2", "F2[x,y]/(x^2,y^2)", "Z4[x]/(x^2)")]
    statuses = {r.ring: (r.status, r.hypothesis) for r in run_check("chk-i-in-m2", fat)}
    # the only SH ideal of the square-zero ring is R itself, which escapes J(R)
    assert statuses["F2[x,y]/(x,y)^2"] == ("vacuous", 0)
    assert statuses["F2[x,y]/(x^2,y^2)"][0] == "pass"
    assert statuses["Z4[x]/(x^2)"][0] == "pass"


def test_empty_corpus_is_all_vacuous():
    res = run_suite([])
    assert res.reports == [] and not res.failures
    assert set(res.vacuous_checks) | set(res.degenerate_checks) == set(REGISTRY)


def test_chain_ring_versus_product():
    z8 = {r.check: r.status for r in run_suite([make_zmod(8)]).reports}
    for cid in ("chk-local-bijection", "chk-waist", "chk-trichotomy", "chk-ci-gives-ch", "chk-colonM-local"):
        assert z8[cid] == "pass"
    assert z8["chk-semiprimitive"] == "vacuous"
    prod = {r.check: r.status for r in run_suite([parse_ring("Z/2 x Z/3")]).reports}
    for cid in ("chk-local-bijection", "chk-waist", "chk-ci-gives-ch"):
        assert prod[cid] == "vacuous"
    assert prod["chk-semiprimitive"] == "pass"


def test_vacuous_never_counts_as_pass():
    rep = run_check("chk-vs-split", [make_zmod(8)])[0]
    assert rep.status == "vacuous" and rep.hypothesis == 0


def test_report_record_shape():
    rep = run_check("chk-trichotomy", [make_zmod(8)])[0]
    rec = json.loads(rep.to_json())
    assert rec["check"] == "chk-trichotomy" and rec["ring"] == "Z/8" and rec["status"] == "pass"
    assert rec["instances"]["hypothesis"] == rec["instances"]["verified"] > 0
    assert "witness" not in rec


# --------------------------------------------------- failure plumbing


def _never_sh(ctx, I):
    return not ctx.sh(I)


FAKE = TheoremCheck(
    "chk-fake", "none", "none", "every nonzero ideal is not SH",
    lambda ctx: ({"I": i, "a": 1, "tag": "t"} for i in range(1, ctx.n)),
    lambda ctx, I, a, tag: _never_sh(ctx, I),
)


def test_failing_check_reports_and_replays():
    R = make_zmod(6)
    rep = evaluate(FAKE, RingContext(R))
    assert rep.status == "fail"
    w = rep.witness
    assert w["I"]["label"] == "(3)" and w["a"] == {"element": 1, "name": "1"} and w["tag"] == "t"
    assert replay(FAKE, R, json.loads(json.dumps(w)))


def test_witness_codec_roundtrip():
    ctx = RingContext(parse_ring("F2[x,y]/(x^2,y^2)"))
    inst = {"I": 3, "J": 5, "x": 2, "n": 4}
    assert decode_instance(ctx.L, encode_instance(ctx.L, inst)) == inst


def test_mutation_is_caught_and_replays(monkeypatch):
    R = make_zmod(8)
    monkeypatch.setattr(checks, "is_csh_index", lambda L, i: False)
    res = run_suite([R], ["chk-noetherian-csh"])
    assert not res.ok and res.failures[0].check == "chk-noetherian-csh"
    w = res.failures[0].witness
    assert replay("chk-noetherian-csh", R, w)
    monkeypatch.undo()
    assert not replay("chk-noetherian-csh", R, w)


# -------------------------------------------------------------- probes


def test_property_names():
    assert property_name("SH∧¬CSH") == "sh-not-csh"
    assert property_name("CSH-NOT-LOCAL") == "csh-not-local"
    with pytest.raises(UnknownProperty):
        property_name("is-cute")


def test_probe_results(corpus):
    assert search_counterexample("SH∧¬CSH", corpus) is None
    assert search_counterexample("SI∧¬CSI", corpus) is None
    assert search_counterexample("CSH∧¬principal", corpus) is None
    hit = search_counterexample("CSH∧¬local-ring", corpus)
    assert (hit.ring, hit.ideal) == ("Z/6", "(2)")
    assert search_counterexample("sh-case-2", corpus) is None


def test_probes_for_adapted_statements(corpus):
    ci = search_counterexample("ci-not-waist-local", corpus)
    assert (ci.ring, ci.ideal) == ("F2[x,y]/(x,y)^2", "(x)")
    partner = search_counterexample("csh-partner-not-minimal", corpus)
    assert (partner.ring, partner.ideal) == ("Z/4", "(2)")


def test_corrupted_gamma_breaks_many_checks(monkeypatch):
    rings = build_corpus(CorpusSpec(max_order=12))
    monkeypatch.setattr(checks, "gamma_index", lambda L, i: 0)
    res = run_suite(rings)
    broken = {r.check for r in res.failures}
    assert len(broken) >= 5
    for rep in res.failures[:20]:
        R = next(R for R in rings if R.provenance == rep.ring)
        assert replay(rep.check, R, rep.witness)
