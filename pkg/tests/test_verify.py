import pytest

from pmpatterns.report import Check, Report
from pmpatterns.verify import SUITES, run_suite


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suites_pass_small(name):
    rep = run_suite(name, 5)
    assert rep.passed, rep.render()
    assert rep.checks


def test_unknown_suite():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suite("nope", 4)
    with pytest.raises(ValueError):
        run_suite("special", 0)


def test_report_roundtrip_and_render():
    rep = Report("demo")
    rep.add("ok", True, "fine")
    rep.add("bad", False, counterexample={"sigma": "2143"})
    assert not rep.passed
    assert rep.first_failure == Check("bad", False, "", {"sigma": "2143"})
    assert Report.from_json(rep.to_json()) == rep
    text = rep.render()
    assert "FAIL" in text and "2143" in text
