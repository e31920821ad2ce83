import io
import json

import pytest

from hollowlab.cli import main, parse_ideal
from hollowlab.corpus import (
    CorpusSpec,
    LatticeCache,
    PRESETS,
    build_corpus,
    parse_poly,
    parse_ring,
    resolve_corpus,
    split_product,
)
from hollowlab.errors import DuplicateRing, OrderCapExceeded, UnknownRing
from hollowlab.export import export_lattice, to_json_dict
from hollowlab.lattice import enumerate_ideals

from conftest import lat


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


# ------------------------------------------------------------ corpus


def test_default_corpus_contents(corpus):
    names = [R.provenance for R in corpus]
    assert len(names) == len(set(names))
    for n in range(2, 33):
        assert f"Z/{n}" in names
    for want in ("Z/2 x Z/3", "F2[x]/(x^2+x+1)", "F2[x]/(x^2)", "F2[x,y]/(x,y)^2", "Z4[x]/(x^2-2,2x)"):
        assert want in names
    assert max(R.order for R in corpus) <= 32
    presets = [p for p in PRESETS if parse_ring(p).order <= 32]
    assert names[-len(presets):] == presets
    head = names[:-len(presets)]
    kind = lambda n: 2 if "[" in n else 1 if " x " in n else 0
    assert [kind(n) for n in head] == sorted(kind(n) for n in head)


def test_small_zmod_corpus():
    rings = build_corpus(CorpusSpec(max_order=8, products=False, poly_quotients=False, presets=False))
    assert [R.provenance for R in rings] == [f"Z/{n}" for n in range(2, 9)]


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        build_corpus(CorpusSpec(max_order=100))
    with pytest.raises(OrderCapExceeded):
        build_corpus(CorpusSpec(max_order=4, zmod=False, products=False, poly_quotients=False,
                                presets=False, extra=("Z/65",)))


def test_duplicates_rejected():
    with pytest.raises(DuplicateRing):
        build_corpus(CorpusSpec(max_order=8, extra=("Z/6",)))


def test_corpus_spec_json(tmp_path):
    p = tmp_path / "c.json"
    p.write_text(json.dumps({"max_order": 6, "products": False, "extra": ["Z/2 x Z/4"]}))
    rings = resolve_corpus(str(p))
    assert rings[-1].provenance == "Z/2 x Z/4"
    with pytest.raises(ValueError):
        CorpusSpec.from_json('{"max_ordr": 3}')


def test_every_corpus_ring_roundtrips_through_parser(corpus):
    for R in corpus:
        S = parse_ring(R.provenance)
        assert S.content_hash == R.content_hash, R.provenance


@pytest.mark.parametrize("name,order", [
    ("F4", 4), ("F_9", 9), ("F5", 5), ("Z/1", 1), ("F3[x]/(x^2+1)", 9),
    ("Z/2 × Z/3", 6), ("(Z/2 x Z/2) x Z/3", 12), ("F2[x]/(x^3+x+1)", 8),
])
def test_parse_ring(name, order):
    assert parse_ring(name).order == order


@pytest.mark.parametrize("name", ["F6", "Q", "Z/0", "F4[x]/(x^2)", "F2[x]/(2x^2)"])
def test_parse_ring_rejects(name):
    with pytest.raises(Exception):
        parse_ring(name)


def test_parse_helpers():
    assert split_product("(Z/2 x Z/2) x Z/3") == ["(Z/2 x Z/2)", "Z/3"]
    assert parse_poly("x^3+2x+1", 3) == (1, 2, 0, 1)
    assert parse_poly("x^2-1", 5) == (4, 0, 1)
    with pytest.raises(UnknownRing):
        parse_poly("x^^2", 2)


# ------------------------------------------------------------- cache


def test_cache_roundtrip(tmp_path):
    cache = LatticeCache(tmp_path)
    R = parse_ring("F2[x,y]/(x^2,y^2)")
    first = cache.lattice(R)
    again = LatticeCache(tmp_path).lattice(parse_ring("F2[x,y]/(x^2,y^2)"))
    assert cache.misses == 1
    assert again == first == enumerate_ideals(R)
    assert again.hasse_edges == first.hasse_edges and again.is_primary == first.is_primary
    assert list(tmp_path.glob("*.tmp")) == []


def test_cache_ignores_corrupt_file(tmp_path):
    cache = LatticeCache(tmp_path)
    R = parse_ring("Z/6")
    cache.path(R).parent.mkdir(parents=True, exist_ok=True)
    cache.path(R).write_text("{not json")
    assert cache.lattice(R) == enumerate_ideals(R) and cache.misses == 1


def test_cache_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("HOLLOW_CACHE", str(tmp_path / "env"))
    assert LatticeCache().dir == tmp_path / "env"


# ------------------------------------------------------------ export


def _dot_counts(text):
    nodes = sum(1 for line in text.splitlines() if "[label=" in line)
    edges = sum(1 for line in text.splitlines() if "->" in line)
    return nodes, edges


@pytest.mark.parametrize("name,nodes,edges", [("Z/6", 4, 4), ("F4", 2, 1), ("Z/12", 6, 7)])
def test_dot_shape(name, nodes, edges):
    assert _dot_counts(export_lattice(lat(name), "dot")) == (nodes, edges)


def test_dot_labels_and_edges_z6():
    text = export_lattice(lat("Z/6"), "dot")
    assert "rankdir=BT" in text
    assert 'label="(2)\\nSH CSH SI CSI"' in text
    L = lat("Z/6")
    pairs = {(L.labels[a], L.labels[b]) for a, b in L.hasse_edges}
    assert pairs == {("(0)", "(2)"), ("(0)", "(3)"), ("(2)", "(1)"), ("(3)", "(1)")}


def test_json_export():
    L = lat("Z/8")
    d = to_json_dict(L)
    assert d["ring"] == "Z/8" and len(d["ideals"]) == 4
    two = next(x for x in d["ideals"] if x["label"] == "(2)")
    assert two["sh"] and two["csh"] and d["ideals"][two["gamma"]]["label"] == "(4)"
    assert json.loads(export_lattice(L, "json")) == d
    with pytest.raises(ValueError):
        export_lattice(L, "svg")


# --------------------------------------------------------------- cli


def test_cli_profile_z6():
    code, out, _ = run("profile", "--no-cache", "--ring", "Z/6", "--ideal", "(2)")
    assert code == 0
    for line in ("Γ = (3)", "L = (3)", "SH ✓", "CSH ✓"):
        assert line in out.splitlines()
    assert "case 1" in out


def test_cli_profile_variants():
    code, out, _ = run("profile", "--no-cache", "--ring", "Z/8", "--ideal", "2")
    assert code == 0 and "case 3 (maximal (2), n = 2)" in out
    code, out, _ = run("profile", "--no-cache", "--ring", "F2[x,y]/(x,y)^2", "--ideal", "(x,y)")
    assert code == 0 and "SH ✗" in out
    code, _, err = run("profile", "--no-cache", "--ring", "Z/6", "--ideal", "(q)")
    assert code == 2 and "no element" in err


def test_parse_ideal_in_product():
    R = parse_ring("Z/2 x Z/3")
    assert len(parse_ideal(R, "(1,0)")) == 2
    assert len(parse_ideal(R, "((1,0),(0,1))")) == 6
    assert parse_ideal(R, "R").is_whole


def test_cli_usage_errors():
    assert run("verify", "--no-cache", "--check", "chk-bogus")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("verify", "--no-cache")[0] == 2
    assert run("search", "--no-cache", "--property", "nonsense")[0] == 2
    assert run("rings", "show", "--no-cache")[0] == 2


def test_cli_verify_single_check(tmp_path):
    corpus = tmp_path / "c.json"
    corpus.write_text('{"max_order": 12}')
    code, out, err = run("verify", "--cache", str(tmp_path / "cache"), "--corpus", str(corpus),
                         "--check", "chk-escapes-jacobson")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert {r["check"] for r in recs} == {"chk-escapes-jacobson"}
    assert all(r["status"] in ("pass", "vacuous") for r in recs)
    assert sum(r["instances"]["hypothesis"] for r in recs) >= 2
    assert "0 fail" in err


def test_cli_rings_and_lattice(tmp_path):
    code, out, _ = run("rings", "show", "Z/12", "--cache", str(tmp_path))
    assert code == 0 and "J(R): (6)" in out and "ideals (6)" in out
    code, out, _ = run("rings", "list", "--cache", str(tmp_path))
    assert code == 0 and len(out.splitlines()) == len(build_corpus())
    code, out, _ = run("lattice", "dump", "--ring", "Z/12", "--format", "dot", "--cache", str(tmp_path))
    assert code == 0 and _dot_counts(out) == (6, 7)


def test_cli_search():
    code, out, _ = run("search", "--no-cache", "--property", "CSH∧¬local-ring")
    assert code == 0
    assert json.loads(out) == {"property": "csh-not-local", "ring": "Z/6", "ideal": "(2)", "mask": "0x15"}
    code, out, _ = run("search", "--no-cache", "--property", "sh-not-csh")
    assert out.strip() == "none"
