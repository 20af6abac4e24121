import json

import pytest

from report import CERTIFIED, FAIL, PASS, Claim, Report


def test_check_records_and_returns():
    report = Report("demo")
    assert report.check("holds", True) is True
    assert report.check("breaks", False, witness=[1, 0]) is False
    assert [c.status for c in report.claims] == [PASS, FAIL]
    assert not report.ok
    assert report.exit_code == 1
    assert [c.name for c in report.failures] == ["breaks"]


def test_certified_counts_as_ok():
    report = Report("demo")
    report.certify("B_prime", "A alpha-prime")
    assert report.ok
    assert report.claims[0].status == CERTIFIED
    assert report.exit_code == 0


def test_extend_prefixes_claims_and_data():
    inner = Report("inner")
    inner.check("x", True)
    inner.data["k"] = 3
    outer = Report("outer")
    outer.extend(inner, "sub.")
    assert outer.claims[0].name == "sub.x"
    assert outer.data == {"sub.k": 3}


def test_json_sorted_and_loadable():
    report = Report("demo")
    report.check("zeta", True)
    report.check("alpha", False, witness={"i": 1})
    report.finish()
    data = json.loads(report.to_json())
    assert [c["name"] for c in data["claims"]] == ["alpha", "zeta"]
    again = Report.from_dict(data)
    assert again.scenario == "demo"
    assert not again.ok
    assert again.claims[0].witness == {"i": 1}


def test_text_output_marks():
    report = Report("demo")
    report.check("good", True)
    report.check("bad", False, witness=[0, 1])
    report.certify("implied", "transfer")
    text = report.to_text()
    assert "✅ good" in text
    assert "❌ bad" in text
    assert "witness: [0, 1]" in text
    assert "<- transfer" in text
    assert "1 claim(s) failed" in text


def test_unknown_status_rejected():
    with pytest.raises(ValueError):
        Claim("x", "maybe")
