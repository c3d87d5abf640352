import json


from katona import family_from_json, katona
from katona.cli import run


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_construct_katona(capsys):
    code, obj = run_json(capsys, ["construct", "--family", "katona",
                                  "--n", "5", "--u", "2"])
    assert code == 0
    assert len(obj["sets"]) == 6
    assert family_from_json(json.dumps(obj)) == katona(5, 2)


def test_construct_round_trip_is_byte_stable(tmp_path, capsys):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    argv = ["construct", "--family", "g-family", "--n", "7", "--d", "2"]
    assert run(argv + ["-o", str(out1)]) == 0
    assert run(argv + ["-o", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    # transform to a file and back: canonical encoding keeps bytes stable
    mid = tmp_path / "c.json"
    assert run(["transform", "--op", "closure", "--input", str(out1),
                "-o", str(mid)]) == 0
    assert run(["transform", "--op", "closure", "--input", str(mid),
                "-o", str(out2)]) == 0
    assert mid.read_bytes() == out2.read_bytes()
    capsys.readouterr()


def test_check_exit_codes(tmp_path):
    fam = tmp_path / "b.json"
    assert run(["construct", "--family", "b-family", "--n", "6", "--d", "2",
                "-o", str(fam)]) == 0
    assert run(["check", "--pred", "u-union", "--u", "4",
                "--input", str(fam), "-o", str(tmp_path / "x.json")]) == 0
    assert run(["check", "--pred", "u-union", "--u", "2",
                "--input", str(fam), "-o", str(tmp_path / "y.json")]) == 1
    assert run(["check", "--pred", "complex", "--input", str(fam),
                "-o", str(tmp_path / "z.json")]) == 0


def test_check_cross(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    run(["construct", "--family", "full-star", "--n", "6", "--k", "3",
         "--t", "2", "-o", str(a)])
    run(["construct", "--family", "full-star", "--n", "6", "--k", "4",
         "--t", "2", "-o", str(b)])
    assert run(["check", "--pred", "cross-t-intersecting", "--t", "2",
                "--input", str(a), "--input2", str(b),
                "-o", str(tmp_path / "o.json")]) == 0


def test_transform_shift_initial_with_log(tmp_path, capsys):
    fam = tmp_path / "f.json"
    fam.write_text(json.dumps({"n": 3, "sets": [[2, 3]]}))
    logp = tmp_path / "log.json"
    code, obj = run_json(capsys, ["transform", "--op", "shift-initial",
                                  "--input", str(fam), "--log", str(logp)])
    assert code == 0
    assert obj["sets"] == [[1, 2]]
    log = json.loads(logp.read_text())
    assert log["ops"] and log["ops"][0]["kind"] == "shift"


def test_overflow_subcommand(tmp_path, capsys):
    fam = tmp_path / "g.json"
    run(["construct", "--family", "g-family", "--n", "8", "--d", "2",
         "-o", str(fam)])
    capsys.readouterr()
    code, obj = run_json(capsys, ["overflow", "--parity", "odd", "--d", "2",
                                  "--input", str(fam)])
    assert code == 0
    assert obj["overflow"] == "10" and obj["best_x"] == 1


def test_walks_subcommands(tmp_path, capsys):
    code, obj = run_json(capsys, ["walks", "--mode", "count", "--n", "4",
                                  "--k", "2", "--t", "1"])
    assert code == 0 and obj["count"] == "4"
    code, obj = run_json(capsys, ["walks", "--mode", "count", "--n", "4",
                                  "--k", "2", "--t", "1", "--brute"])
    assert code == 0 and obj["count"] == "4"
    code, obj = run_json(capsys, ["walks", "--mode", "trace", "--n", "4",
                                  "--set", "1,2"])
    assert code == 0
    assert obj["points"] == [[0, 0], [0, 1], [0, 2], [1, 2], [2, 2]]
    fam = tmp_path / "s.json"
    run(["construct", "--family", "full-star", "--n", "6", "--k", "3",
         "--t", "2", "-o", str(fam)])
    capsys.readouterr()
    assert run(["walks", "--mode", "verify-hits", "--t", "2",
                "--input", str(fam), "-o", str(tmp_path / "h.json")]) == 0


def test_bound_subcommand(capsys):
    code, obj = run_json(capsys, ["bound", "--name", "katona",
                                  "--n", "5", "--u", "2"])
    assert code == 0 and obj["value"] == "6"
    code, obj = run_json(capsys, ["bound", "--name", "overflow",
                                  "--n", "12", "--u", "4"])
    assert code == 0 and obj["value"] == "10" and obj["in_proved_regime"]
    code, obj = run_json(capsys, ["bound", "--name", "quintic", "--c", "11/10"])
    assert code == 0 and obj["sign"] == 1
    code, obj = run_json(capsys, ["bound", "--name", "key-ratio", "--n", "10",
                                  "--r", "3", "--a", "1", "--b", "1"])
    assert code == 0 and obj["holds"]


def test_search_and_recheck_round_trip(tmp_path, capsys):
    cert = tmp_path / "cert.json"
    assert run(["search", "--objective", "overflow-even", "--n", "6",
                "--d", "1", "-o", str(cert)]) == 0
    obj = json.loads(cert.read_text())
    assert obj["optimum"] == "1" and obj["proven_optimal"]
    assert run(["recheck", "--input", str(cert),
                "-o", str(tmp_path / "r.json")]) == 0
    # tamper and recheck again
    obj["optimum"] = "7"
    cert.write_text(json.dumps(obj))
    assert run(["recheck", "--input", str(cert),
                "-o", str(tmp_path / "r2.json")]) == 1
    capsys.readouterr()


def test_search_modes(capsys):
    code, obj = run_json(capsys, [
        "search", "--objective", "overflow-even", "--n", "6", "--d", "1",
        "--initial-complexes", "no"])
    assert code == 0 and obj["optimum"] == "1" and obj["reduction"] == "none"
    code, obj = run_json(capsys, [
        "search", "--objective", "diversity", "--n", "5", "--k", "2"])
    assert code == 0 and obj["optimum"] == "1"
    assert obj["witness"]["sets"] == [[1, 2], [1, 3], [2, 3]]


def test_verify_suite_hilton(capsys):
    code, obj = run_json(capsys, ["verify", "--suite", "hilton"])
    assert code == 0 and obj["holds"]


def test_usage_and_cap_exit_codes(capsys, tmp_path):
    assert run(["construct", "--family", "katona", "--n", "5"]) == 2  # missing --u
    assert run(["bogus"]) == 2
    assert run(["search", "--objective", "max-union-size", "--n", "30",
                "--u", "4"]) == 3
    assert run(["construct", "--family", "katona", "--n", "5", "--u", "9"]) == 2
    capsys.readouterr()


def test_stdin_stdout_paths(capsys, monkeypatch, tmp_path):
    import io
    fam_json = json.dumps({"n": 4, "hex": ["3", "5"]})
    monkeypatch.setattr("sys.stdin", io.StringIO(fam_json))
    code, obj = run_json(capsys, ["check", "--pred", "t-intersecting",
                                  "--t", "1", "--input", "-"])
    assert code == 0 and obj["holds"]


def test_table_format(capsys):
    assert run(["bound", "--name", "binom", "--n", "8", "--k", "2",
                "--format", "table"]) == 0
    out = capsys.readouterr().out
    assert 'value: "28"' in out
