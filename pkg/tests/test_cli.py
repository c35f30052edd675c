"""Command-line behaviour: examples, validation, formats, exit codes."""

import json
import os
import subprocess
import sys

import pytest

from klrcrystal import standard_datum
from klrcrystal.charcalc import Character, char_simple_ci_j, shuffle
from klrcrystal.cli import main, parse_config
from klrcrystal.klr.algebra import KlrAlgebra, KlrElement


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestExamples:
    def test_crystal_mult(self, capsys):
        assert run(capsys, "crystal", "mult", "--datum", "a2.json", "--lambda", "1,1", "--nu", "1,1")[:2] == (0, "2\n")

    def test_cyclotomic_dim(self, capsys):
        assert run(capsys, "klr", "cyclotomic-dim", "--datum", "sl2.json", "--lambda", "2", "--nu", "2")[:2] == (0, "4\n")

    def test_cyclotomic_dim_csv(self, capsys):
        code, out, _ = run(capsys, "klr", "cyclotomic-dim", "--datum", "sl2.json", "--lambda", "2",
                           "--nu", "2", "--format", "csv")
        assert code == 0
        assert out.splitlines() == ["nu,lambda,dim,graded_dim", '"2","2",4,-2:1;0:2;2:1']

    def test_serre_zero(self, capsys):
        assert run(capsys, "char", "serre", "--datum", "a2.json", "--i", "1", "--j", "2",
                   "--c", "2", "--n", "1")[:2] == (0, "0\n")

    def test_serre_nonzero_below(self, capsys):
        code, out, _ = run(capsys, "char", "serre", "--datum", "b2.json", "--i", "2", "--j", "1",
                           "--c", "1", "--n", "1")
        assert code == 0 and out != "0\n"

    def test_parse_config(self):
        cfg = parse_config(["crystal", "mult", "--datum", "a2.json", "--lambda", "1,1", "--nu", "1,1"])
        d = standard_datum("A2")
        assert (cfg.group, cfg.command) == ("crystal", "mult")
        assert cfg.Lambda == d.dominant_weight([1, 1])
        assert cfg.nu == d.root_vector([1, 1])
        assert cfg.fmt == "text" and cfg.output is None


class TestUsageErrors:
    @pytest.mark.parametrize("argv, flag", [
        (["crystal", "mult", "--datum", "a2.json", "--nu", "1,-1"], "--nu"),
        (["crystal", "mult", "--nu", "1,1"], "--datum"),
        (["crystal", "mult", "--datum", "a2.json", "--nu", "1,1,1"], "--nu"),
        (["crystal", "mult", "--datum", "a2.json", "--nu", "x"], "--nu"),
        (["crystal", "mult", "--datum", "a2.json"], "--nu"),
        (["char", "simple", "--datum", "a2.json", "--i", "3", "--j", "1", "--c", "1", "--n", "0"], "--i"),
        (["klr", "cyclotomic-dim", "--datum", "sl2.json", "--nu", "2"], "--lambda"),
        (["crystal", "verify", "--datum", "a2.json", "--suite", "NOPE"], "--suite"),
        (["crystal", "graph", "--datum", "a2.json", "--format", "xml"], "--format"),
        (["crystal", "explode", "--datum", "a2.json"], "explode"),
        (["crystal", "graph", "--datum", "nonexistent.json"], "--datum"),
    ])
    def test_exit_one_and_named_flag(self, capsys, argv, flag):
        code, out, err = run(capsys, *argv)
        assert code == 1 and out == ""
        lines = err.strip().splitlines()
        assert len(lines) == 1 and lines[0].startswith("ERROR UsageError")
        assert flag in lines[0]

    def test_bad_cap_env(self, capsys, monkeypatch):
        monkeypatch.setenv("KLR_CRYSTAL_CAP_MB", "0")
        code, _, err = run(capsys, "klr", "cyclotomic-dim", "--datum", "sl2.json", "--lambda", "2", "--nu", "2")
        assert code == 1 and "KLR_CRYSTAL_CAP_MB" in err


class TestExitCodes:
    def test_cap_exceeded(self, capsys, monkeypatch):
        monkeypatch.setenv("KLR_CRYSTAL_CAP_MB", "1")
        code, out, err = run(capsys, "klr", "cyclotomic-dim", "--datum", "a2.json", "--lambda", "2,0",
                             "--nu", "2,1")
        assert code == 2 and out == ""
        assert err.startswith("ERROR CapExceeded")

    def test_incomplete_warning(self, capsys):
        code, out, err = run(capsys, "crystal", "graph", "--datum", "a1_affine.json", "--lambda", "1,0",
                             "--depth", "3")
        assert code == 0 and "complete false" in out
        assert "IncompleteCrystal" in err

    def test_verify_passes(self, capsys):
        code, out, _ = run(capsys, "crystal", "verify", "--datum", "b2.json", "--lambda", "1,1")
        assert code == 0
        assert [line.split(":")[0] for line in out.splitlines()] == ["C", "KS", "PSI", "JUMP", "EPSJUMP", "PHI"]
        assert all("pass" in line for line in out.splitlines())


class TestFormats:
    def test_char_json_roundtrip(self, capsys, tmp_path):
        d = standard_datum("B2")
        f = char_simple_ci_j(d, "2", "1", 1, 0)
        g = char_simple_ci_j(d, "2", "1", 1, 1)
        pf, pg = tmp_path / "f.json", tmp_path / "g.json"
        pf.write_text(json.dumps(f.to_json()))
        pg.write_text(json.dumps(g.to_json()))
        code, out, _ = run(capsys, "char", "shuffle", str(pf), str(pg), "--datum", "b2.json", "--format", "json")
        assert code == 0
        assert Character.from_json(json.loads(out)) == shuffle(d, f, g)

    def test_char_stats(self, capsys, tmp_path):
        d = standard_datum("A2")
        p = tmp_path / "c.json"
        p.write_text(json.dumps(char_simple_ci_j(d, "1", "2", 1, 0).to_json()))
        code, out, _ = run(capsys, "char", "stats", str(p), "--datum", "a2.json", "--format", "json")
        rows = json.loads(out)
        assert code == 0
        assert {r["vertex"]: r["eps"] for r in rows} == {"1": 0, "2": 1}

    def test_klr_multiply_roundtrip(self, capsys, tmp_path):
        d = standard_datum("A2")
        alg = KlrAlgebra(d, d.root_vector([1, 1]))
        x = KlrElement(alg, alg.generator("psi", 1))
        y = KlrElement(alg, alg.generator("x", 2))
        px, py = tmp_path / "x.json", tmp_path / "y.json"
        px.write_text(json.dumps(x.to_json()))
        py.write_text(json.dumps(y.to_json()))
        code, out, _ = run(capsys, "klr", "multiply", str(px), str(py), "--datum", "a2.json", "--format", "json")
        assert code == 0
        assert KlrElement.from_json(alg, json.loads(out)) == x * y

    def test_klr_dim_json(self, capsys):
        code, out, _ = run(capsys, "klr", "dim", "--datum", "a2.json", "--nu", "1,1", "--max-deg", "2",
                           "--format", "json")
        data = json.loads(out)
        assert code == 0 and data["graded_dim"] == {"0": 2, "1": 2, "2": 4} and data["dim"] == 8

    def test_nilpotency(self, capsys):
        code, out, _ = run(capsys, "klr", "nilpotency", "--datum", "sl2.json", "--lambda", "2", "--nu", "2",
                           "--format", "json")
        assert code == 0 and json.loads(out) == {"1": 2, "2": 2}

    def test_crystal_graph_json(self, capsys):
        code, out, _ = run(capsys, "crystal", "graph", "--datum", "a2.json", "--lambda", "1,1", "--format", "json")
        data = json.loads(out)
        assert code == 0 and len(data["nodes"]) == 8

    def test_crystal_graph_dot(self, capsys):
        code, out, _ = run(capsys, "crystal", "graph", "--datum", "sl2.json", "--depth", "1", "--format", "dot")
        assert code == 0 and out.startswith("digraph") and out.count("->") == 1

    def test_datum_validate_json(self, capsys):
        code, out, _ = run(capsys, "datum", "validate", "--datum", "g2.json", "--format", "json")
        data = json.loads(out)
        assert code == 0 and data["cartan"] == [[2, -3], [-1, 2]]

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "mult.txt"
        code, out, _ = run(capsys, "crystal", "mult", "--datum", "a2.json", "--nu", "1,1", "--output", str(target))
        assert code == 0 and out == "" and target.read_text() == "2\n"


@pytest.mark.parametrize("argv", [
    ["crystal", "graph", "--datum", "b2.json", "--depth", "4", "--format", "dot"],
    ["crystal", "verify", "--datum", "a2.json", "--depth", "3", "--format", "json"],
    ["char", "simple", "--datum", "g2.json", "--i", "1", "--j", "2", "--c", "3", "--n", "1", "--format", "csv"],
])
def test_byte_identical_across_processes(argv):
    env = dict(os.environ, PYTHONHASHSEED="random")
    outs = [subprocess.run([sys.executable, "-m", "klrcrystal.cli", *argv], capture_output=True,
                           env=env, check=True).stdout for _ in range(2)]
    assert outs[0] == outs[1] and outs[0]
