import json

import pytest

from chdiag.epd import parse_epd
from chdiag.pipeline import (
    RECORD_FIELDS, DiagramRecord, GuardrailError, RunConfig, dedup_spherical_mirror,
    doubled_cycle_medial, expected_diagram_count, hard_table, higher_genus_hard_diagram,
    make_record, read_jsonl, run_enumeration, shadow_table, verify_record, worker_count,
    write_jsonl,
)
from chdiag.planar_map import canonical_code
from chdiag.shadows import enumerate_shadows


@pytest.fixture(scope="module")
def run6():
    return run_enumeration(RunConfig(6, workers=1))


def test_row_6(run6):
    assert run6.table_row() == [0, 0, 0, 0, 8, 0, 2]
    assert run6.diagrams == expected_diagram_count(6, 9) == 9504


def test_records_are_hard_and_named(run6):
    names = [r.name for r in run6.records]
    assert len(set(names)) == len(names) == 10
    assert names[0].startswith("6^{") and names[0].endswith("_{4,1}")
    assert all(r.hard and r.admissible for r in run6.records)


def test_records_verify(run6):
    for r in run6.records:
        assert verify_record(r) == []


def test_verify_detects_tampering(run6):
    rec = run6.records[0]
    bad = DiagramRecord(**{**{f: getattr(rec, f) for f in RECORD_FIELDS}, "euler": rec.euler + 2})
    assert "euler" in verify_record(bad)


def test_workers_do_not_change_output(tmp_path, run6):
    other = run_enumeration(RunConfig(6, workers=2))
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    write_jsonl(run6.records, a)
    write_jsonl(other.records, b)
    assert a.read_bytes() == b.read_bytes()


def test_jsonl_fields(tmp_path, run6):
    path = tmp_path / "r.jsonl"
    write_jsonl(run6.records, path)
    for line in path.read_text().splitlines():
        data = json.loads(line)
        assert list(data) == [f for f in RECORD_FIELDS if f != "writhe"]
    back = list(read_jsonl(path))
    assert [r.epd for r in back] == [r.epd for r in run6.records]
    assert hard_table(back) == {6: [0, 0, 0, 0, 8, 0, 2]}


def test_include_all_counts():
    res = run_enumeration(RunConfig(4, include_all=True, workers=1))
    assert len(res.records) == expected_diagram_count(4, 2) == 144
    assert sum(r.hard for r in res.records) == 1
    m0 = [r for r in res.records if r.m == 0]
    assert all(r.writhe is not None for r in m0)
    assert all(r.writhe is None for r in res.records if r.m)
    for r in res.records:
        assert r.admissible == make_record(parse_epd(r.epd)).admissible


def test_guardrails(monkeypatch):
    with pytest.raises(GuardrailError):
        RunConfig(13)
    with pytest.raises(GuardrailError):
        RunConfig(5, (6,))
    monkeypatch.setenv("CHDIAG_WORKERS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("CHDIAG_WORKERS", "x")
    with pytest.raises(GuardrailError):
        worker_count()


def test_dedup_collapses_periodic_triple(run6):
    m4 = [r for r in run6.records if r.m == 4]
    classes = dedup_spherical_mirror(m4)
    sizes = sorted(len(c) for c in classes)
    assert sizes == [1, 1, 1, 2, 3]
    triple = next(c for c in classes if len(c) == 3)
    assert all(r.gons == [3] * 8 for r in triple)


def test_shadow_table():
    assert shadow_table([4, 5]) == [(4, 2, 144), (5, 3, 816)]


def test_doubled_cycle_medial():
    pm = doubled_cycle_medial(2)
    assert canonical_code(pm) == canonical_code(enumerate_shadows(4).shadows[0])
    with pytest.raises(ValueError):
        doubled_cycle_medial(1)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_higher_genus(k):
    code = higher_genus_hard_diagram(k)
    rec = make_record(code)
    assert (code.n, code.m) == (4 * k, 4 * k)
    assert rec.admissible and rec.hard and rec.orientable
    assert (rec.components, rec.euler) == (1, 4 - 4 * k)


def test_higher_genus_needs_positive_k():
    with pytest.raises(ValueError):
        higher_genus_hard_diagram(0)
