import time

import pytest

from bqzeta.verify import CHECKS, PROFILES, ReportEntry, report_from_json, report_to_json, run_verify


@pytest.fixture(scope="module")
def quick_report():
    start = time.perf_counter()
    entries = run_verify("quick")
    return entries, time.perf_counter() - start


def test_quick_profile_passes_within_a_minute(quick_report):
    entries, elapsed = quick_report
    assert all(e.passed for e in entries), [e.check_id for e in entries if not e.passed]
    assert elapsed < 60


def test_special_value_entry_present(quick_report):
    entries, _ = quick_report
    assert any(e.paper_anchor == "π/4" and e.passed for e in entries)


def test_ids_unique_and_sorted():
    ids = [c.check_id for c in CHECKS]
    assert ids == sorted(ids)
    assert len(set(ids)) == len(ids)


def test_json_roundtrip(quick_report):
    entries, _ = quick_report
    assert report_from_json(report_to_json(entries)) == entries


def test_deterministic(quick_report):
    entries, _ = quick_report
    assert report_to_json(run_verify("quick")) == report_to_json(entries)


def test_concurrent_run_keeps_order(quick_report):
    entries, _ = quick_report
    assert run_verify("quick", workers=4) == entries


@pytest.mark.slow
def test_full_profile_passes():
    entries = run_verify("full")
    assert all(e.passed for e in entries), [e.check_id for e in entries if not e.passed]


def test_unknown_profile():
    assert PROFILES == ("quick", "full")
    with pytest.raises(ValueError):
        run_verify("medium")


def test_entry_fields():
    e = ReportEntry("X", "a", "1", "1", 0.0, True)
    assert ReportEntry.from_dict(e.to_dict()) == e
