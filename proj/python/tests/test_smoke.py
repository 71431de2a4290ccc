import json

import pytest

import ternalg


def test_catalog_lists_examples():
    names = ternalg.catalog()
    for name in ("fil4", "trunc3", "r_int3", "gl2_trace"):
        assert name in names


def test_fil4_is_three_lie():
    report = ternalg.check("3-lie", ternalg.emit("fil4"))
    assert report["verdict"] == "pass"
    assert report["counterexamples"] == []


def test_cocycle_counterexample():
    report = ternalg.check("cocycle", ternalg.emit("trunc2_cocycle"))
    assert report["verdict"] == "fail"
    assert report["counterexamples"][0]["indices"] == [0, 0, 1]
    assert report["counterexamples"][0]["residual"] == ["-1"]


def test_derive_then_check():
    sd = ternalg.derive("semidirect", ternalg.emit("fil4_adjoint"))
    assert sd["dim"] == 8
    assert ternalg.check("ternary-f-manifold", sd)["verdict"] == "pass"
    t = ternalg.derive("trace-induce", ternalg.emit("gl2_trace"))
    assert ternalg.check("3-lie", t)["verdict"] == "pass"


def test_jobs_do_not_change_reports():
    doc = json.dumps(ternalg.emit("trunc3_non_nijenhuis"))
    one = ternalg.check("nijenhuis", doc, max_counterexamples=5, jobs=1)
    three = ternalg.check("nijenhuis", doc, max_counterexamples=5, jobs=3)
    assert one == three


def test_precondition_error_carries_report():
    with pytest.raises(ternalg.PreconditionError) as info:
        ternalg.derive("deform", ternalg.emit("trunc3_non_nijenhuis"))
    assert info.value.code == "NotNijenhuis"
    assert json.loads(info.value.report)["verdict"] == "fail"


def test_parse_error():
    with pytest.raises(ternalg.TernalgError) as info:
        ternalg.check("3-lie", '{"schema_version": 1, "dim": ')
    assert info.value.code == "ParseError"
    assert not isinstance(info.value, ternalg.PreconditionError)


def test_eval_defect():
    fil4 = ternalg.emit("fil4")
    assert ternalg.eval_defect("fundamental", fil4, [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 1, 1]) == [
        "0"
    ] * 4
    trunc2 = ternalg.emit("trunc2")
    assert ternalg.eval_defect("assoc", trunc2, ["1/2", 1], [0, 1], [1, 0]) == ["0", "0"]
