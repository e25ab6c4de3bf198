import json

import pytest

from hessgkm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_example(capsys):
    code, out, _ = run(capsys, "analyze", "3,3,4,5,5")
    report = json.loads(out)
    assert code == 0
    assert report["schema"] == "hess-gkm/1"
    assert report["bottom"] == [2] and report["L"] == [3, 4]
    assert report["b2"] == {"closed_form": 17, "bruteforce": 17, "graph_cohomology": 17, "agree": True}
    assert report["poincare"]["agree"] is True


def test_analyze_disconnected(capsys):
    code, out, _ = run(capsys, "analyze", "1,2,3")
    report = json.loads(out)
    assert code == 0
    assert report["components"] == 6
    assert report["b2"]["status"] == "not-applicable"


@pytest.mark.parametrize("bad", ["2,1,3", "3,3", "a,b", "1,1,3"])
def test_analyze_invalid_exits_2(capsys, bad):
    code, out, err = run(capsys, "analyze", bad)
    assert code == 2 and out == "" and "error" in err


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_analyze_is_byte_identical(capsys):
    _, a, _ = run(capsys, "analyze", "2,3,4,4", "--d", "2")
    _, b, _ = run(capsys, "analyze", "2,3,4,4", "--d", "2")
    assert a == b


def test_graph_dot(capsys):
    code, out, _ = run(capsys, "graph", "2,3,3", "--format", "dot")
    assert code == 0 and out.count(" -- ") == 6


def test_graph_json(capsys):
    code, out, _ = run(capsys, "graph", "3,3,3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["edges"]) == 9 and data["schema"] == "hess-gkm/1"
    _, again, _ = run(capsys, "graph", "3,3,3", "--format", "json")
    assert again == out


def test_graph_cap(capsys):
    code, _, err = run(capsys, "graph", "2,3,3", "--cap-n", "2")
    assert code == 1 and "CapExceeded" in err


def test_h2_example_formula_only(capsys):
    code, out, _ = run(capsys, "h2", "2,3,6,6,6,7,8,8")
    report = json.loads(out)
    assert code == 0
    assert report["formula_decomposition"]["text"] == "3*M(8) + 2*M(7,1) + 2*M(6,2)"
    assert report["formula_decomposition"]["dimension"] == report["b2_closed_form"] == 75
    assert report["character_check"]["status"] == "skipped-over-budget"


def test_h2_small(capsys):
    code, out, _ = run(capsys, "h2", "2,3,3")
    report = json.loads(out)
    assert code == 0
    assert report["presentation"]["rank"] == 4
    assert report["character_check"]["status"] == "passed"
    assert report["character_check"]["decomposition"]["modules"] == {"(3)": 1, "(2,1)": 1}


def test_h2_disconnected_exits_1(capsys):
    code, _, err = run(capsys, "h2", "1,3,3")
    assert code == 1 and "NotConnected" in err


def test_h2d(capsys):
    code, out, _ = run(capsys, "h2d", "3,4,5,5,5", "--d", "2")
    report = json.loads(out)
    assert code == 0
    assert report["presentation"]["rank"] == 17
    assert report["formula_decomposition"]["modules"] == {"(5)": 7, "(4,1)": 2}
    assert report["character_check"]["match"] is True


def test_h2d_precondition_exits_1(capsys):
    code, _, err = run(capsys, "h2d", "2,3,4,4", "--d", "2")
    assert code == 1 and "PreconditionUnmet" in err


def test_decompose_h(capsys):
    code, out, _ = run(capsys, "decompose", "3,3,4,5,5")
    report = json.loads(out)
    assert code == 0 and report["match"] is True


def test_decompose_character(capsys):
    # the natural permutation character of S_3 in the order (3), (2,1), (1,1,1)
    code, out, _ = run(capsys, "decompose", "--character", "0,1,3", "--n", "3")
    assert code == 0
    assert json.loads(out)["decomposition"]["modules"] == {"(2,1)": 1}


def test_verify_small(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--n", "3", "--output", str(target))
    report = json.loads(target.read_text())
    assert code == 0 and out == ""
    assert report["all_passed"] and report["functions_by_size"] == {"1": 1, "2": 2, "3": 5}


def test_verify_n6_skips_rather_than_fails(capsys):
    code, out, _ = run(capsys, "verify", "--n", "6", "--d", "2", "--la-budget", "200000",
                       "--class-max-n", "3", "--jobs", "4")
    report = json.loads(out)
    assert code == 0
    assert report["summary"]["failed"] == 0
    assert report["checks"]["h2_character"]["skipped"] > 0
    assert report["checks"]["betti_low_degree"]["passed"] > 0
