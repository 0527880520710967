import json
import re
import subprocess
import sys

import pytest

from exotic_mtc import cli
from exotic_mtc import moddata as M
from exotic_mtc.cyclo import rational, root_of_unity, sqrt_int

LINE = re.compile(r"^[A-Z0-9-]+ \S+ (PASS|FAIL|UNDETERMINED)( .*)?$")


@pytest.fixture
def semion_file(tmp_path):
    s = [[rational(1), rational(1)], [rational(1), rational(-1)]]
    md = M.from_matrices(["1", "s"], s, [rational(1), root_of_unity(4)], sqrt_int(2))
    path = tmp_path / "semion.json"
    M.save(md, path)
    return str(path)


def test_verify_bundled_exit_zero(capsys):
    assert cli.main(["verify"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[-1].startswith("SUMMARY pass=")
    assert all(LINE.match(l) for l in out[:-1])


def test_fail_gives_exit_one(semion_file, capsys):
    # valid modular data, but c = 1 is not 0 mod 8
    assert cli.main(["verify", "--data", semion_file]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_json_output(capsys):
    assert cli.main(["--json", "coset"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["ok"] and doc["summary"]["FAIL"] == 0
    assert cli.main(["verify", "--json", "--data", "z_e6"]) == 0
    assert json.loads(capsys.readouterr().out)["checks"]


@pytest.mark.parametrize("content", ["", "{", '{"labels": ["1"]}', "[1, 2, 3]"])
def test_malformed_input_exit_two(tmp_path, content):
    p = tmp_path / "bad.json"
    p.write_text(content)
    assert cli.main(["verify", "--data", str(p)]) == 2


def test_truncated_bundled_file(tmp_path):
    text = M.to_dict(M.bundled("z_e6"))
    p = tmp_path / "cut.json"
    p.write_text(json.dumps(text)[:500])
    assert cli.main(["fusion", "--data", str(p)]) == 2


def test_missing_file_and_bad_args(tmp_path):
    assert cli.main(["verify", "--data", str(tmp_path / "nope.json")]) == 2
    assert cli.main(["center-e6", "--data", str(tmp_path / "nope.json")]) == 2
    assert cli.main(["no-such-command"]) == 2
    assert cli.main([]) == 2
    assert cli.main(["braid-eigs", "--data", "z_e6", "--object", "Q"]) == 2


def test_bundled_names():
    h, e = cli.load_modular_data("z_haagerup"), cli.load_modular_data("z_e6")
    assert (h.rank, h.conductor) == (12, 39)
    assert (e.rank, e.conductor) == (10, 24)


def test_round_trip(tmp_path):
    for name in M.BUNDLED:
        md = M.bundled(name)
        p = tmp_path / f"{name}.json"
        M.save(md, p)
        assert cli.load_modular_data(str(p)) == md


def test_exclude_report_lists(capsys):
    assert cli.main(["exclude", "--report"]) == 1  # printed lists are incomplete
    out = capsys.readouterr().out
    assert "B4" in out and "D4" in out
    fails = [l for l in out.splitlines() if " FAIL" in l]
    names = sorted(l.split()[1] for l in fails)
    assert names == ["c24-solutions", "rank-12-self-dual-list"]


def test_braid_target(capsys):
    assert cli.main(["braid-eigs", "--data", "z_haagerup"]) == 0
    assert cli.main(["braid-eigs", "--data", "z_e6", "--object", "X4", "--target", "1"]) in (0, 1)
    assert "X4" in capsys.readouterr().out


def test_sl2z_without_closure(capsys):
    assert cli.main(["sl2z", "--data", "z_e6", "--no-closure"]) == 0
    assert "CLOSURE" not in capsys.readouterr().out


@pytest.mark.slow
def test_all_deterministic(capsys):
    codes, outs = [], []
    for _ in range(2):
        codes.append(cli.main(["--all", "--no-closure"]))
        outs.append(capsys.readouterr().out)
    assert codes[0] == codes[1] == 1
    assert outs[0] == outs[1]
    assert "PRIME" in outs[0] and "FINITE-SL2Z" in outs[0]


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "exotic_mtc.cli", "verify", "--data", "z_e6"], capture_output=True, text=True)
    assert r.returncode == 0 and "SUMMARY" in r.stdout
