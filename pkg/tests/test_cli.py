import json

from difftoric.cli import Request, build_parser, main, run

C_MATRIX = [["x", "2*x^2+1", "0"], ["x^2+1", "0", "4*x^2+2"]]
KERNEL_MAP_MATRIX = [["2", "0"], ["x-1", "0"], ["0", "2"], ["0", "x-1"]]
F_MATRIX = [["1-x", "2", "0", "0"], ["0", "0", "1-x", "2"]]


def _run(command, payload, **options):
    return run(Request(command, payload, options))


def test_ghnf_command():
    resp = _run("ghnf", C_MATRIX + [["x", "-1", "4*x"]])
    assert resp.status == "ok" and resp.exit_code == 0
    assert resp.payload["columns"] == [["x", "2*x^2+1", "0"], ["1", "x", "2"]]
    assert resp.payload["blocks"] == [
        {"pivot_row": 2, "columns": [1]},
        {"pivot_row": 3, "columns": [2]},
    ]


def test_is_ghnf_command():
    assert _run("is-ghnf", C_MATRIX).payload["is_ghnf"] is True
    bad = _run("is-ghnf", [["2", "0"], ["1", "0"]])
    assert bad.payload["is_ghnf"] is False
    assert any("condition 4" in v for v in bad.payload["violations"])


def test_member_command():
    resp = _run("member", {"vector": ["x", "-1", "4*x"], "generators": C_MATRIX})
    assert resp.payload["member"] is False
    resp = _run("member", {"vector": ["1-x", "2", "0", "0"], "generators": F_MATRIX})
    assert resp.payload["member"] is True
    assert resp.payload["normal_form"] == ["0", "0", "0", "0"]


def test_zxfactor_command_golden():
    resp = _run("zxfactor", C_MATRIX, verify=True)
    assert resp.payload["witnesses"] == [
        {"h": ["x", "-1", "4*x"], "p": "2*x^2+1"}
    ]
    assert resp.certificates == {"witness_checks": [True]}


def test_zfactor_command():
    resp = _run("zfactor", [["2"]])
    assert resp.payload["witnesses"] == [{"h": ["1"], "p": "2"}]


def test_is_toric_command():
    resp = _run("is-toric", F_MATRIX, verify=True)
    assert resp.payload["is_toric"] is True
    assert resp.payload["witnesses"] == []
    resp = _run("is-toric", C_MATRIX)
    assert resp.payload["is_toric"] is False
    assert resp.payload["saturated_generators"] == [
        ["x", "2*x^2+1", "0"],
        ["1", "x", "2"],
    ]


def test_saturate_command():
    resp = _run("saturate", C_MATRIX, verify=True)
    assert resp.payload["growth_rounds"] == 1
    assert resp.payload["multiplier"] == "2*x^2+1"
    assert resp.payload["rounds"][0]["kind"] == "zx"


def test_implicitize_command_golden():
    resp = _run("implicitize", KERNEL_MAP_MATRIX, verify=True)
    assert [b["display"] for b in resp.payload["binomials"]] == [
        "y1*y2^2 - y1^x",
        "y3*y4^2 - y3^x",
    ]
    assert resp.payload["dimension"] == 2


def test_parametrize_round_trip_via_cli():
    resp = _run("parametrize", F_MATRIX, verify=True)
    assert resp.status == "ok"
    assert resp.payload["map_columns"] == KERNEL_MAP_MATRIX
    assert resp.payload["monomials"] == ["t1^2", "t1^{x-1}", "t2^2", "t2^{x-1}"]
    back = _run("implicitize", resp.payload["map_columns"])
    assert back.payload["lattice"] == [["-x+1", "2", "0", "0"], ["0", "0", "-x+1", "2"]]


def test_syzygy_and_complement_commands():
    resp = _run("syzygy", KERNEL_MAP_MATRIX, verify=True)
    assert resp.payload["generators"] == [["-x+1", "2", "0", "0"], ["0", "0", "-x+1", "2"]]
    resp = _run("complement", F_MATRIX, verify=True)
    assert resp.payload["rank"] == 2 and resp.payload["input_rank"] == 2
    assert resp.certificates["rank_law"] is True


def test_intersect_command():
    resp = _run("intersect", {"first": [["2"]], "second": [["3"]]}, verify=True)
    assert resp.payload["generators"] == [["6"]]


def test_faces_command():
    resp = _run("faces", {"generators": [["x", "1"], ["x", "2"], ["x", "3"]]})
    assert [f["indices"] for f in resp.payload["faces"]] == [[], [1], [3], [1, 2, 3]]


def test_is_pointed_command():
    resp = _run("is-pointed", {"generators": [["x", "1"], ["x", "2"], ["x", "3"]]})
    assert resp.payload["pointed"] is True


def test_face_sat_command():
    resp = _run(
        "face-sat",
        {"generators": [["2", "0"], ["1", "1"], ["0", "1"]], "face": [1]},
    )
    assert resp.payload["holds"] is False
    assert resp.payload["violations"] == [["1", "0"]]


def test_jacobi_command():
    resp = _run("jacobi", [[1, 2], [3, 4]], verify=True)
    assert resp.payload["jacobi"] == 5
    resp = _run("jacobi", {"matrix": [["-inf", 2], [3, None]]})
    assert resp.payload["jacobi"] == 5


def test_order_bound_command():
    resp = _run("order-bound", KERNEL_MAP_MATRIX)
    assert resp.payload == {
        "rows": [{"o": 1, "o_low": 0}, {"o": 1, "o_low": 0}],
        "bound": 2,
    }


def test_exit_code_invalid_input():
    resp = _run("ghnf", [["not a poly"]])
    assert resp.exit_code == 2 and resp.status == "error"
    resp = _run("member", {"vector": ["1"]})
    assert resp.exit_code == 2
    resp = _run("jacobi", [[1, -3]])
    assert resp.exit_code == 2


def test_exit_code_precondition():
    resp = _run("parametrize", [["2"]])
    assert resp.exit_code == 3
    assert resp.payload["error"]["witnesses"] == [{"h": ["1"], "p": "2"}]
    resp = _run("order-bound", [["1", "0"], ["x", "0"]])
    assert resp.exit_code == 3
    resp = _run("intersect", {"first": [["1"]], "second": [["1", "0"]]})
    assert resp.exit_code == 3


def test_parametrize_saturate_first_flag():
    resp = _run("parametrize", [["2"]], saturate_first=True)
    assert resp.status == "ok"
    assert resp.payload["saturated_first"] is True


def test_exit_code_resource():
    gens = [["1", str(k)] for k in range(13)]
    resp = _run("faces", {"generators": gens})
    assert resp.exit_code == 4


def test_main_json_deterministic(capsys):
    code1 = main(["implicitize", json.dumps(KERNEL_MAP_MATRIX)])
    out1 = capsys.readouterr().out
    code2 = main(["implicitize", json.dumps(KERNEL_MAP_MATRIX)])
    out2 = capsys.readouterr().out
    assert code1 == code2 == 0
    assert out1 == out2
    parsed = json.loads(out1)
    assert parsed["status"] == "ok"


def test_main_pretty_and_stdin(capsys, monkeypatch, tmp_path):
    code = main(["zxfactor", json.dumps(C_MATRIX), "--format", "pretty"])
    out = capsys.readouterr().out
    assert code == 0
    assert "witness (x, -1, 4*x) with multiplier 2*x^2+1" in out

    path = tmp_path / "c.json"
    path.write_text(json.dumps(C_MATRIX))
    code = main(["zxfactor", str(path)])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["payload"]["witnesses"]

    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(C_MATRIX)))
    code = main(["zxfactor", "-"])
    assert code == 0


def test_main_error_paths(capsys):
    code = main(["ghnf", "{broken json"])
    out = json.loads(capsys.readouterr().out)
    assert code == 2 and out["status"] == "error"

    code = main(["ghnf", "/nonexistent/file.json"])
    out = json.loads(capsys.readouterr().out)
    assert code == 2 and "not found" in out["payload"]["error"]["message"]


def test_report_command(tmp_path, capsys):
    code = main([
        "report",
        "faces",
        json.dumps({"generators": [["x", "1"], ["x", "2"], ["x", "3"]]}),
        "--out-dir",
        str(tmp_path),
    ])
    out = json.loads(capsys.readouterr().out)
    assert code == 0
    written = out["payload"]["written"]
    assert (tmp_path / "faces.csv").exists()
    assert (tmp_path / "faces.png").exists()
    header = (tmp_path / "faces.csv").read_text().splitlines()[0]
    assert header == "face,indices,generators,confirmed"

    code = main([
        "report",
        "order-bound",
        json.dumps(KERNEL_MAP_MATRIX),
        "--out-dir",
        str(tmp_path),
    ])
    assert code == 0
    rows = (tmp_path / "order_bound.csv").read_text().splitlines()
    assert rows[-1].startswith("bound")
    assert (tmp_path / "order_bound.png").exists()


def test_parser_covers_all_commands():
    parser = build_parser()
    args = parser.parse_args(["ghnf", "[]"])
    assert args.command == "ghnf"
    args = parser.parse_args(["parametrize", "[]", "--saturate-first"])
    assert args.saturate_first


def test_cross_process_determinism():
    import subprocess
    import sys

    cmd = [
        sys.executable,
        "-m",
        "difftoric.cli",
        "saturate",
        json.dumps(C_MATRIX),
    ]
    one = subprocess.run(cmd, capture_output=True, text=True)
    two = subprocess.run(cmd, capture_output=True, text=True)
    assert one.returncode == two.returncode == 0
    assert one.stdout == two.stdout


def test_matrix_json_round_trip():
    from difftoric import jsonio

    for matrix in (C_MATRIX, KERNEL_MAP_MATRIX, F_MATRIX, [["0", "0"]]):
        cols = jsonio.parse_matrix(matrix)
        assert jsonio.matrix_json(cols) == [
            [_canon(s) for s in col] for col in matrix
        ]
        assert jsonio.parse_matrix(jsonio.matrix_json(cols)) == cols


def _canon(s):
    from difftoric import format_poly, parse_poly

    return format_poly(parse_poly(s))
