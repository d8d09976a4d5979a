import json

import jsonschema
import pytest

from dinfnichols.classify import (
    EvidenceError,
    ParamGrid,
    REPORT_SCHEMA,
    classify,
    default_grid,
    enumerate_families,
    report_csv,
    report_json,
    report_text,
    theorem_table,
)
from dinfnichols.field import Scalar
from dinfnichols.group import conj_class_of, parse_element


def grid_of(ns, a_values, lambdas):
    return ParamGrid.from_strings(ns, a_values, lambdas, 12)


def test_enumerate_counts():
    grid = grid_of([1, 2, 3], ["1", "-1", "2"], ["0", "2", "-2"])
    fams = enumerate_families(grid)
    by_family = {}
    for f in fams:
        by_family.setdefault(f.family, []).append(f)
    assert len(by_family["h-class"]) == 9
    assert len(by_family["g-class"]) == 2
    assert len(by_family["gh-class"]) == 2
    # lambda = 0 contributes s0+ and s0-; each of +-2 contributes slam+/-
    assert len(by_family["one-class"]) == 6
    labels = {f.params["rep"] for f in by_family["one-class"]}
    assert labels == {"s0+", "s0-", "slam+", "slam-"}


def test_enumerate_empty_grid():
    grid = grid_of([], [], [])
    fams = enumerate_families(grid)
    assert [f.family for f in fams] == ["g-class", "g-class",
                                        "gh-class", "gh-class"]


def test_enumerate_rejects_zero_a():
    grid = grid_of([1], ["0"], [])
    with pytest.raises(ValueError):
        enumerate_families(grid)


def _classify_single(family_filter, grid):
    out = []
    cache = {}
    for inst in enumerate_families(grid):
        if family_filter(inst):
            out.append((inst, classify(inst, cache)))
    return out


def test_classify_infinite_support():
    grid = grid_of([], [], [])
    for inst, verdict in _classify_single(lambda i: True, grid):
        assert not verdict.finite
        assert verdict.rule == "R1_InfiniteSupport"
        degrees = verdict.evidence["distinct_degrees"]
        assert len(degrees) == 10
        assert len(set(degrees)) == 10
        support = inst.module.support
        for d in degrees:
            assert conj_class_of(parse_element(d)) == support


def test_classify_h_class_trichotomy():
    zeta3 = str(Scalar.parse("z^4", 12))   # canonical form z^2-1
    grid = grid_of([1, 2, 3, 4, 5], ["1", "-1", "2", "z^4"], [])
    verdicts = {}
    for inst, verdict in _classify_single(lambda i: i.family == "h-class", grid):
        key = (inst.params["a"], inst.params["n"])
        verdicts[key] = verdict
    for n in range(1, 6):
        assert verdicts[("1", n)].finite and verdicts[("1", n)].gk == 2
        assert verdicts[("-1", n)].finite and verdicts[("-1", n)].gk == 0
        assert not verdicts[("2", n)].finite
        assert not verdicts[(zeta3, n)].finite
        # verdict depends only on a, not on n
        for a in ("1", "-1", "2", zeta3):
            assert verdicts[(a, n)].finite == verdicts[(a, 1)].finite
            assert verdicts[(a, n)].gk == verdicts[(a, 1)].gk
            assert verdicts[(a, n)].rule == "R2_Diagonal"


def test_classify_finite_evidence_consistency():
    grid = grid_of([1], ["-1"], ["2"])
    for inst, verdict in _classify_single(lambda i: i.family != "g-class"
                                          and i.family != "gh-class", grid):
        if not verdict.finite:
            continue
        dims = verdict.evidence["hilbert_prefix"]
        growth = verdict.evidence["growth"]
        if growth["kind"] == "PolynomialDegree":
            assert growth["value"] == verdict.gk
        else:
            assert growth["kind"] == "TerminatesAt" and verdict.gk == 0
        assert len(dims) == 7


def test_classify_one_class():
    grid = grid_of([], [], ["0", "2"])
    got = {}
    for inst, verdict in _classify_single(lambda i: i.family == "one-class", grid):
        got[(inst.params["rep"], inst.params["lambda"])] = verdict
    assert got[("s0+", "0")].gk == 2
    assert got[("s0-", "0")].gk == 2
    assert got[("slam+", "2")].gk == 1
    assert got[("slam-", "2")].gk == 1
    for v in got.values():
        assert v.rule == "R3_TrivialBraiding"


def test_classify_infinite_h_class_attaches_growth_evidence():
    grid = grid_of([1], ["2"], [])
    (inst, verdict), = _classify_single(lambda i: i.family == "h-class", grid)
    assert not verdict.finite
    ev = verdict.evidence
    assert ev["hilbert_prefix"][2] == 4
    assert any(d > n + 1 for n, d in enumerate(ev["hilbert_prefix"]))
    assert "cited rule" in ev["note"]


def test_theorem_table_default_grid():
    report = theorem_table(default_grid())
    comp = report["theorem_comparison"]
    assert comp["paper_entries"] == 5
    assert all(e["matched"] for e in comp["entries"])
    finite = [r for r in report["families"] if r["verdict"]["kind"] == "finite"]
    infinite = [r for r in report["families"] if r["verdict"]["kind"] == "infinite"]
    assert {r["family"] for r in infinite} == {"h-class", "g-class", "gh-class"}
    for r in infinite:
        if r["family"] == "h-class":
            assert r["params"]["a"] == "2"
    assert {r["family"] for r in finite} == {"h-class", "one-class"}
    # the iso annotations are present and deterministic
    notes = "\n".join(comp["annotations"])
    assert "s0+ isomorphic to s0-: True" in notes
    assert "slam+ isomorphic to slam-: False" in notes


def test_theorem_table_grid_without_pm2_flags_entries():
    report = theorem_table(grid_of([1], ["1", "-1", "2"], ["0", "3"]))
    comp = report["theorem_comparison"]
    matched = {e["entry"]: e["matched"] for e in comp["entries"]}
    assert matched[1] and matched[2] and matched[3]
    assert not matched[4] and not matched[5]
    notes = "\n".join(comp["annotations"])
    assert "entry 4 has no members" in notes
    assert "entry 5 has no members" in notes
    assert "fails module axioms" in notes


def test_report_validates_against_schema():
    report = theorem_table(default_grid())
    jsonschema.validate(report, REPORT_SCHEMA)


def test_report_byte_stable():
    grid = default_grid()
    s1 = report_json(theorem_table(grid))
    s2 = report_json(theorem_table(grid))
    assert s1 == s2
    assert json.loads(s1) == json.loads(s2)


def test_report_text_and_csv_render():
    report = theorem_table(grid_of([1], ["1", "-1", "2"], ["0", "2"]))
    text = report_text(report)
    assert "entry 1" in text and "Infinite" in text
    csv = report_csv(report)
    lines = csv.splitlines()
    assert lines[0] == "family,params,support,verdict,gk,rule"
    assert len(lines) == len(report["families"]) + 1


def test_grid_serialization():
    grid = default_grid()
    js = grid.as_json()
    assert js["n"] == [1, 2, 3]
    assert js["a"] == ["1", "-1", "2"]
    assert js["lambda"] == ["0", "2", "-2", "3"]
