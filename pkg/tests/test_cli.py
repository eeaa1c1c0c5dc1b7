from __future__ import annotations

import io
import json

import pytest

from gfminrank import MatrixFq, SimpleGraph, emit_graph6, field_new
from gfminrank.cli import main, parse_order
from gfminrank.refdata import F2R3_GRAM, FULLHOUSE_EDGES


def run_cli(capsys, argv, stdin: str = "") -> tuple[int, str, str]:
    import sys
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = main(argv)
    finally:
        sys.stdin = old
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def fullhouse_g6() -> str:
    return emit_graph6(SimpleGraph.from_edges(5, FULLHOUSE_EDGES))


def test_parse_order_forms():
    assert parse_order("4") == 4
    assert parse_order("2^2") == 4
    assert parse_order("3^2") == 9
    from gfminrank.cli import DomainError
    with pytest.raises(DomainError):
        parse_order("6")
    with pytest.raises(DomainError):
        parse_order("x")


def test_patterns_matrix_output(capsys):
    code, out, _ = run_cli(capsys, ["patterns", "--q", "2", "--k", "3", "--format", "matrix"])
    assert code == 0
    rows = [[int(x) for x in line.split()] for line in out.strip().splitlines()]
    assert rows == F2R3_GRAM


def test_patterns_json_and_dot(capsys):
    code, out, _ = run_cli(capsys, ["patterns", "--q", "2", "--k", "2", "--format", "json"])
    assert code == 0
    objs = [json.loads(line) for line in out.strip().splitlines()]
    assert len(objs) == 2 and all(o["n"] == 3 for o in objs)
    code, out, _ = run_cli(capsys, ["patterns", "--q", "2^2", "--k", "1", "--format", "dot"])
    assert code == 0 and "fillcolor=black" in out


def test_patterns_rejects_graph6_format(capsys):
    code, _, err = run_cli(capsys, ["patterns", "--q", "2", "--k", "2", "--format", "g6"])
    assert code == 1 and "error" in err


def test_minrank_stream(capsys):
    code, out, _ = run_cli(capsys, ["minrank", "--q", "3"], stdin=fullhouse_g6() + "\n")
    assert code == 0
    assert json.loads(out) == {"graph6": fullhouse_g6(), "minrank": 2}
    code, out, _ = run_cli(capsys, ["minrank", "--q", "2"], stdin=fullhouse_g6() + "\n")
    assert json.loads(out)["minrank"] == 3


def test_minrank_max_k_reports_bound(capsys):
    code, out, _ = run_cli(capsys, ["minrank", "--q", "2", "--max-k", "2"],
                           stdin=fullhouse_g6() + "\n")
    assert code == 0
    assert json.loads(out) == {"graph6": fullhouse_g6(), "minrank_gt": 2}


def test_member_with_witness(capsys):
    code, out, _ = run_cli(capsys, ["member", "--q", "2", "--k", "3"],
                           stdin=fullhouse_g6() + "\n")
    obj = json.loads(out)
    assert code == 0 and obj["member"] is True and len(obj["witness"]) == 5
    code, out, _ = run_cli(capsys, ["member", "--q", "2", "--k", "2"],
                           stdin=fullhouse_g6() + "\n")
    assert json.loads(out) == {"graph6": fullhouse_g6(), "member": False}


def test_oracle_stream_and_budget(capsys):
    code, out, _ = run_cli(capsys, ["oracle", "--q", "3"], stdin=fullhouse_g6() + "\n")
    assert code == 0 and json.loads(out)["minrank"] == 2
    code, out, _ = run_cli(capsys, ["oracle", "--q", "3", "--budget", "10"],
                           stdin=fullhouse_g6() + "\n")
    assert code == 0 and json.loads(out) == {"graph6": fullhouse_g6(), "error": "budget"}


def test_oracle_jobs_partition(capsys):
    code, out, _ = run_cli(capsys, ["oracle", "--q", "2", "--jobs", "2"],
                           stdin=fullhouse_g6() + "\n")
    assert code == 0 and json.loads(out)["minrank"] == 3


def test_mine_command(capsys):
    code, out, _ = run_cli(capsys, ["mine", "--q", "2", "--k", "1", "--max-n", "4"])
    assert code == 0
    obj = json.loads(out)
    assert obj["stats"]["found"] == len(obj["forbidden"]) == 2


def test_classify_command(capsys):
    f3 = field_new(3, 1)
    payload = json.dumps(MatrixFq(f3, [[1, 0], [0, 2]]).to_json())
    code, out, _ = run_cli(capsys, ["classify"], stdin=payload)
    assert code == 0
    assert json.loads(out) == {"order": 2, "tag": "nonsquare_det",
                               "projective_tag": "nonsquare_det"}


def test_classify_rejects_singular(capsys):
    f3 = field_new(3, 1)
    payload = json.dumps(MatrixFq(f3, [[0, 0], [0, 0]]).to_json())
    code, _, err = run_cli(capsys, ["classify"], stdin=payload)
    assert code == 1 and "error" in err


def test_invalid_order_is_domain_error(capsys):
    code, _, err = run_cli(capsys, ["minrank", "--q", "6"], stdin="@\n")
    assert code == 1 and "prime power" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["minrank"])  # missing required --q
    assert exc.value.code == 2


def test_input_file_option(capsys, tmp_path):
    path = tmp_path / "graphs.g6"
    path.write_text(fullhouse_g6() + "\n")
    code, out, _ = run_cli(capsys, ["minrank", "--q", "3", "--input", str(path)])
    assert code == 0 and json.loads(out)["minrank"] == 2


def test_selftest_command(capsys):
    code, out, err = run_cli(capsys, ["selftest"])
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert lines and all(obj["ok"] for obj in lines)
    assert "checks passed" in err
