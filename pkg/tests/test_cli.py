import json

from quiverdt.cli import run


def run_capture(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_catalog_list(capsys):
    code, out, _ = run_capture(capsys, ["catalog", "list"])
    assert code == 0
    assert "conifold" in out and "adhm3d" in out


def test_catalog_show_json_roundtrip(capsys):
    code, out, _ = run_capture(capsys, ["catalog", "show", "conifold", "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["quiver"]["vertices"] == ["0", "1"]
    assert all(len(t["word"]) == 4 for t in data["potential"]["terms"])


def test_catalog_show_unknown_exits_2(capsys):
    code, _, err = run_capture(capsys, ["catalog", "show", "y77"])
    assert code == 2 and "catalog" in err


def test_quiver_dot_marks_fixed_arrows(capsys):
    code, out, _ = run_capture(capsys, ["quiver", "adhm3d", "--framed", "--dot"])
    assert code == 0
    assert "dashed" in out and '"inf" -> "0"' in out


def test_quiver_json_deterministic(capsys):
    code1, out1, _ = run_capture(capsys, ["quiver", "c3"])
    code2, out2, _ = run_capture(capsys, ["quiver", "c3"])
    assert code1 == code2 == 0 and out1 == out2


def test_relations_text(capsys):
    code, out, _ = run_capture(capsys, ["relations", "adhm3d"])
    assert code == 0
    assert "d/dB3" in out and "J*I" in out


def test_relations_json_for_plain_geometry(capsys):
    code, out, _ = run_capture(capsys, ["relations", "c3", "--json"])
    assert code == 0
    data = json.loads(out)
    assert len(data) == 3 and all(len(t["word"]) == 2 for r in data for t in r["terms"])


def test_relations_with_framing_file(tmp_path, capsys):
    spec = {"ranks": {"inf": 1}, "arrows": {"Af": [[0]]}}
    path = tmp_path / "framing.json"
    path.write_text(json.dumps(spec))
    code, out, _ = run_capture(capsys, ["relations", "adhm3d", "--framing", str(path)])
    assert code == 0 and "d/dI" in out


def test_monad_verify(capsys):
    code, out, _ = run_capture(capsys, ["monad", "verify", "ny3d"])
    assert code == 0 and "certified" in out


def test_monad_verify_numeric(tmp_path, capsys):
    points = {"points": [["0", "0"], ["1", "0"]]}
    path = tmp_path / "points.json"
    path.write_text(json.dumps(points))
    code, out, _ = run_capture(
        capsys, ["monad", "verify", "c3", "--numeric", str(path), "--json"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["certified"] is True
    assert all(t["sheaf"] == [0, 0, 0, 1] for t in data["numeric"]["cohomology"])


def test_count_families(capsys):
    code, out, _ = run_capture(capsys, ["count", "partitions", "--order", "5", "--json"])
    assert code == 0
    data = json.loads(out)
    assert {"exp": [5], "c": "7"} in data["coeffs"]


def test_count_plane_with_pit(capsys):
    code, out, _ = run_capture(
        capsys, ["count", "plane", "--order", "6", "--pit", "2,0", "--json"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["vars"] == ["q"]


def test_count_blowup_prints_half_powers(capsys):
    code, out, _ = run_capture(capsys, ["count", "blowup", "--order", "2"])
    assert code == 0 and "qh^1/2" in out


def test_series_macmahon(capsys):
    code, out, _ = run_capture(capsys, ["series", "macmahon", "--order", "4", "--json"])
    assert code == 0
    data = json.loads(out)
    assert {"exp": [4], "c": "13"} in data["coeffs"]


def test_character_golden_line(capsys):
    code, out, _ = run_capture(
        capsys, ["character", "--shift", "1", "--m", "2", "--n", "0", "--t", "1", "--order", "4"]
    )
    assert code == 0
    # weight multiset {1: x3, 2: x2}: prod (1-q^k)^-3 (1-q^(k+1))^-2
    assert out.strip().splitlines()[-1] == "1,3,11,30,80"


def test_character_divisor_route(capsys):
    code, out, _ = run_capture(
        capsys,
        ["character", "--divisor", "mu=3,1", "--m", "2", "--n", "0", "--t", "2", "--order", "3", "--json"],
    )
    assert code == 0
    data = json.loads(out)
    assert data["sub"] == [2]


def test_compare_pass_exit_zero(capsys):
    code, out, _ = run_capture(capsys, ["compare", "vw-rank1"])
    assert code == 0 and "equal through" in out


def test_compare_json(capsys):
    code, out, _ = run_capture(capsys, ["compare", "blowup", "--json"])
    assert code == 0
    data = json.loads(out)
    assert data[0]["equal"] is True


def test_usage_error_exit_two(capsys):
    assert run(["count", "bogus-family", "--order", "3"]) == 2
    assert run([]) == 2
