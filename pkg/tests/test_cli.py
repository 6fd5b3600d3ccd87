import json
import subprocess
import sys

import jsonschema
import pytest

from sympower import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_check_fermat3_both(capsys):
    code, rep = run_json(capsys, "check", "fermat:3", "--field", "GF(7)", "--method", "both")
    assert code == cli.EXIT_OK
    jsonschema.validate(rep, cli.REPORT_SCHEMA)
    assert [r["contained"] for r in rep["results"]] == [False, False]
    assert "witness" in rep["results"][1]


def test_check_star_both(capsys):
    code, rep = run_json(capsys, "check", "star3", "--field", "Q", "--method", "both")
    assert code == 0
    jsonschema.validate(rep, cli.REPORT_SCHEMA)
    assert all(r["contained"] for r in rep["results"])


def test_check_klein_criterion(capsys):
    code, rep = run_json(capsys, "check", "klein", "--field", "GF(11)", "--method", "criterion")
    assert code == 0
    assert rep["results"][0]["contained"] is False
    assert rep["betti"] == {"d": 8, "d0": 3, "d1": 5}


def test_check_prop6(capsys):
    code, rep = run_json(capsys, "check", "fermat:3", "--field", "GF(13)", "--method", "prop6")
    assert code == 0
    jsonschema.validate(rep, cli.REPORT_SCHEMA)
    assert rep["results"][0]["contained"] is False


def test_json_is_stable(capsys):
    reps = []
    for _ in range(2):
        _, rep = run_json(capsys, "check", "fermat:3", "--method", "both")
        rep.pop("timings_ms")
        reps.append(json.dumps(rep, sort_keys=True))
    assert reps[0] == reps[1]


def test_default_fields(capsys):
    _, rep = run_json(capsys, "check", "fermat:3", "--method", "criterion")
    assert rep["field"] == "GF(7)"
    _, rep = run_json(capsys, "check", "klein", "--method", "criterion")
    assert rep["field"] == "GF(11)"


def test_characteristic_three_refusal(tmp_path, capsys):
    f = tmp_path / "star.txt"
    f.write_text("field: GF(3)\n# three coordinate points\nx*y\nx*z\ny*z\n")
    code, out, _ = run(capsys, "check", str(f), "--method", "both")
    assert code == cli.EXIT_CHAR
    assert "refused" in out
    assert "oracle: CONTAINED" in out


def test_disagreement_exit_code(monkeypatch, capsys):
    real = cli.oracle_check

    def flipped(*args, **kwargs):
        v = real(*args, **kwargs)
        v.contained = not v.contained
        return v

    monkeypatch.setattr(cli, "oracle_check", flipped)
    code, out, _ = run(capsys, "check", "star3", "--method", "both")
    assert code == cli.EXIT_DISAGREE
    assert "DISAGREEMENT" in out


def test_ideal_file(tmp_path, capsys):
    f = tmp_path / "fermat.txt"
    f.write_text("field: GF(7)\nx*(y^3 - z^3)  # f\ny*(z^3 - x^3)\nz*(x^3 - y^3)\n")
    code, rep = run_json(capsys, "check", str(f))
    assert code == 0
    assert rep["field"] == "GF(7)"
    assert [r["contained"] for r in rep["results"]] == [False, False]


@pytest.mark.parametrize("content", ["x*y\n", "field: GF(7)\n", "field: GF(7)\nx*y+\n", "field: GF(8)\nx\n"])
def test_bad_ideal_files(tmp_path, capsys, content):
    f = tmp_path / "bad.txt"
    f.write_text(content)
    code, _, err = run(capsys, "check", str(f))
    assert code == cli.EXIT_INPUT
    assert err.startswith("error:")


def test_unknown_target(capsys):
    code, _, _ = run(capsys, "check", "no-such-target")
    assert code == cli.EXIT_INPUT


def test_criterion_only_for_three_two(capsys):
    code, _, _ = run(capsys, "check", "star3", "--m", "2", "--r", "2", "--method", "criterion")
    assert code == cli.EXIT_INPUT
    code, rep = run_json(capsys, "check", "star3", "--m", "2", "--r", "2", "--method", "oracle")
    assert code == 0 and rep["results"][0]["contained"] is False


def test_resolve(capsys):
    code, rep = run_json(capsys, "resolve", "fermat:3", "--field", "GF(7)", "--power", "3")
    assert code == 0
    assert rep["ranks"] == [10, 12, 3]
    assert rep["last_map_matches_Y"] is True


def test_syzygy(capsys):
    code, rep = run_json(capsys, "syzygy", "klein", "--field", "GF(11)")
    assert code == 0
    assert (rep["d0"], rep["d1"]) == (3, 5)


def test_points(capsys):
    code, rep = run_json(capsys, "points", "klein", "--field", "GF(11)")
    assert code == 0
    assert rep["points"] == 49
    assert rep["incidence"] == {"3": 28, "4": 21}
    assert rep["pair_count"] == [210, 210]


def test_witness(capsys):
    code, rep = run_json(capsys, "witness", "fermat:3")
    assert code == 0
    by_degree = {w["degree"]: (w["in_symbolic"], w["in_ordinary"]) for w in rep["witnesses"]}
    assert by_degree == {12: (True, True), 9: (True, False)}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sympower", "check", "star3", "--method", "criterion"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert "CONTAINED" in proc.stdout
