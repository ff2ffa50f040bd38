import json

import pytest

from zetaforms import cli


def _run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def _only_string_numbers(node):
    if isinstance(node, dict):
        return all(_only_string_numbers(v) for v in node.values())
    if isinstance(node, list):
        return all(_only_string_numbers(v) for v in node)
    return node is None or isinstance(node, (str, bool))


def test_decompose_symmetric_point(capsys):
    code, out = _run(capsys, "decompose", "1", "1", "1", "1", "1", "1", "1", "1",
                     "--prec", "30")
    assert code == 0
    assert out["Q"] == "21"
    assert out["phat"] == "101/4"
    assert out["p"] == "87/4"
    assert _only_string_numbers(out)


def test_decompose_zero_vector(capsys):
    code, out = _run(capsys, "decompose", "0", "0", "0", "0", "0", "0", "0", "0",
                     "--prec", "25")
    assert code == 0
    assert out["Q"] == "1"
    assert out["phat"] == "0"
    assert out["p"] == "0"


def test_decompose_rejects_inadmissible(capsys):
    code, out = _run(capsys, "decompose", "1", "0", "5", "0", "0", "0", "0", "0")
    assert code == 2
    assert out["error"] == "inadmissible vector"
    assert out["form"] == "a1+a5-a3"


def test_worthiness_large_example(capsys):
    code, out = _run(capsys, "worthiness",
                     "8", "16", "10", "15", "12", "16", "18", "13",
                     "--prec", "25")
    assert code == 0
    assert out["healthy"] is True
    assert out["gamma"].startswith("0.8659713554")
    assert out["m"] == ["18", "17", "17", "16", "16"]
    assert _only_string_numbers(out)


def test_worthiness_degenerate_exit_code(capsys):
    code, out = _run(capsys, "worthiness", "1", "1", "1", "1", "1", "1", "2", "1",
                     "--prec", "25")
    assert code == 4
    assert out["error"] == "degenerate asymptotics"


def test_search_tiny_box(capsys):
    code, out = _run(capsys, "search", "1:1", "1:1", "1:1", "1:1", "1:1",
                     "1:1", "1:1", "1:2", "--prec", "25")
    assert code == 0
    assert [r["a"] for r in out["results"]] == [["1"] * 8]
    assert len(out["skipped"]) == 1
    assert out["budgetExceeded"] is False
    assert _only_string_numbers(out)


def test_search_orders_by_score_descending(capsys):
    code, out = _run(capsys, "search", "1:2", "1:2", "1:2", "2:2", "1:2",
                     "2:2", "1:2", "1:2", "--prec", "25")
    assert code == 0
    scores = [float(r["gamma"]) for r in out["results"]]
    assert scores == sorted(scores, reverse=True)


def test_search_budget_warning(capsys):
    code = cli.main(["search", "1:2", "1:2", "1:2", "1:2", "1:2", "1:2",
                     "1:2", "1:2", "--prec", "25", "--budget", "2"])
    captured = capsys.readouterr()
    out = json.loads(captured.out)
    assert code == 0
    assert out["budgetExceeded"] is True
    assert "partial" in captured.err


def test_search_empty_admissible_set(capsys):
    code, out = _run(capsys, "search", "1:1", "0:0", "5:5", "0:0", "0:0",
                     "0:0", "0:0", "0:0")
    assert code == 0
    assert out["results"] == []
    assert out["skipped"] == []


def test_search_deterministic_bytes(capsys):
    argv = ["search", "1:1", "1:2", "1:1", "1:2", "1:1", "1:1", "1:2", "1:1",
            "--prec", "22"]
    cli.main(argv)
    first = capsys.readouterr().out
    cli.main(argv)
    second = capsys.readouterr().out
    assert first == second


def test_verify_single_suite(capsys):
    code, out = _run(capsys, "verify", "--suite", "sequences")
    assert code == 0
    assert out["ok"] is True
    assert out["firstFailure"] is None
    assert set(out["suites"]) == {"sequences"}


def test_json_file_sidecar(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out = _run(capsys, "decompose", "0", "0", "0", "0", "0", "0", "0", "0",
                     "--prec", "20", "--json", str(target))
    assert code == 0
    assert json.loads(target.read_text(encoding="utf-8")) == out
