import csv
import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from qcw.arith import Poly
from qcw.cli import OutputRecord, main
from qcw.congruence import poly_digest

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def records(text):
    return [OutputRecord.from_json(line) for line in text.splitlines()
            if line and "schema_version" in line]


@pytest.mark.parametrize("argv,code", [
    (["verify", "thm1", "d=3", "r=1", "n=5", "m=paper"], 0),
    (["verify", "thm1", "d=3", "r=1", "n=6"], 3),
    (["verify", "bogus"], 2),
    (["verify", "thm1", "d=3"], 2),
    (["verify", "thm1", "d3"], 2),
    (["verify", "thm1", "d=3", "r=1", "n=5", "power=5"], 1),
    (["verify", "sec5_conj", "n=5", "m=n-1"], 0),
    (["verify", "thm2", "d=3", "n=5"], 0),
    (["identity", "watson", "--N", "2", "--points", "20", "--seed", "7"], 0),
    (["identity", "gasper", "--m", "2", "--N", "3", "--points", "20", "--seed", "7"], 0),
    (["identity", "ms0", "--m", "3", "--N", "2", "--points", "5"], 0),
    (["identity", "andrews", "--m", "3", "--N", "2", "--points", "5"], 0),
    (["identity", "eqmulti", "d=3", "r=1", "n=5"], 0),
    (["identity", "eqmulti", "d=3", "r=1"], 2),
    (["identity", "eqmulti", "d=3", "r=1", "n=6"], 2),
    (["identity", "nothing"], 2),
    (["frobnicate"], 2),
    ([], 2),
])
def test_exit_code_matrix(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_verify_prints_one_record(capsys):
    code, out, _ = run(capsys, "verify", "thm1", "d=3", "r=1", "n=5", "m=paper")
    (rec,) = records(out)
    assert rec.schema_version == "1"
    assert rec.statement == "THM1" and rec.verdict == "PASS"
    assert rec.params["M"] == 3 and rec.remainder_digest == ""
    assert isinstance(rec.wall_ms, int)


def test_identity_emits_per_point_records(capsys):
    _, out, _ = run(capsys, "identity", "watson", "--N", "2", "--points", "6", "--seed", "7")
    points = [json.loads(line) for line in out.splitlines() if '"point"' in line]
    assert [p["point"] for p in points] == list(range(6))
    assert all(p["holds"] for p in points)


def test_dump_remainder_writes_witness(capsys, tmp_path):
    dump = tmp_path / "rem.jsonl"
    code, out, _ = run(capsys, "verify", "thm1", "d=3", "r=1", "n=5", "power=5",
                       "--dump-remainder", str(dump))
    assert code == 1
    (rec,) = records(out)
    (line,) = dump.read_text().splitlines()
    witness = json.loads(line)
    assert witness["digest"] == rec.remainder_digest
    poly = Poly([Fraction(c) for c in witness["remainder"].split(",")])
    assert poly_digest(poly) == rec.remainder_digest


def test_sweep_jsonl_round_trip(capsys, tmp_path):
    out_path = tmp_path / "out.jsonl"
    code, _, err = run(capsys, "sweep", str(CONFIGS / "example.ini"), "--out", str(out_path))
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert lines
    for line in lines:
        rec = OutputRecord.from_json(line)
        assert rec.to_json() == json.dumps(json.loads(line), sort_keys=True)
        assert (rec.remainder_digest == "") == rec.verdict.endswith("PASS")
    verdicts = [OutputRecord.from_json(x).verdict for x in lines]
    assert "INAPPLICABLE" in verdicts
    assert "reports in" in err


def test_sweep_csv(capsys, tmp_path):
    out_path = tmp_path / "out.csv"
    code, _, _ = run(capsys, "sweep", str(CONFIGS / "example.ini"), "--format", "csv",
                     "--out", str(out_path), "--jobs", "2")
    assert code == 0
    rows = list(csv.reader(out_path.open()))
    assert rows[0] == ["statement", "params", "verdict", "wall_ms"]
    assert all(json.loads(row[1]) for row in rows[1:])


def test_sweep_negative_control_exits_one(capsys, tmp_path):
    code, _, _ = run(capsys, "sweep", str(CONFIGS / "negative_control.ini"),
                     "--out", str(tmp_path / "neg.jsonl"))
    assert code == 1


def test_sweep_bad_config_exits_two(capsys, tmp_path):
    bad = tmp_path / "bad.ini"
    bad.write_text("[thm1]\nd = 3\n")
    assert run(capsys, "sweep", str(bad))[0] == 2
    assert run(capsys, "sweep", str(tmp_path / "missing.ini"))[0] == 2


def test_sweep_jobs_from_environment(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("QCW_JOBS", "2")
    out_path = tmp_path / "out.jsonl"
    assert run(capsys, "sweep", str(CONFIGS / "example.ini"), "--out", str(out_path))[0] == 0
    monkeypatch.setenv("QCW_JOBS", "1")
    serial = tmp_path / "serial.jsonl"
    run(capsys, "sweep", str(CONFIGS / "example.ini"), "--out", str(serial))

    def strip(path):
        return [{k: v for k, v in json.loads(x).items() if k != "wall_ms"}
                for x in path.read_text().splitlines()]

    assert strip(out_path) == strip(serial)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qcw", "verify", "gw2", "n=5"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert OutputRecord.from_json(proc.stdout.strip()).verdict == "PASS"
