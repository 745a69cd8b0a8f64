import io
import json
from pathlib import Path

import pytest

from hyperturan.cli import main
from hyperturan.core import parse, serialize
from hyperturan.designs import construct_affine_plane, construct_sts

GOLDEN = Path(__file__).parent / "golden"

# Commands documented in the README; outputs frozen in tests/golden/<name>.json.
README_COMMANDS = {
    "bound_crown4": ["bound", "--kind", "crown4", "--n", "9", "--r", "3"],
    "bound_b4": ["bound", "--kind", "b4", "--n", "10", "--r", "3"],
    "bound_star": ["bound", "--kind", "star", "--n", "9", "--r", "3", "--k", "4"],
    "detect_b4_ag3": ["detect", "--pattern", "b4", "--input", "{ag3}"],
    "detect_crown_ag3": ["detect", "--pattern", "crown", "--input", "{ag3}"],
    "certify_ag3": ["certify-b4", "--input", "{ag3}"],
    "verify_ag3": ["verify", "--input", "{ag3}"],
    "witness_tree": ["construct-witness", "--kind", "tree", "--n", "14", "--r", "3", "--k", "4"],
    "search_b4_9": ["search", "--n", "9", "--r", "3", "--forbid", "b4", "--workers", "1"],
    "search_s3_6": ["search", "--n", "6", "--r", "3", "--forbid", "s:3", "--workers", "1"],
    "probe_9": ["probe", "--n", "9", "--r", "3", "--workers", "1"],
}


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def ag3_file(tmp_path):
    p = tmp_path / "ag3.lhg"
    p.write_text(serialize(construct_affine_plane(3)))
    return str(p)


def _strip(obj):
    if isinstance(obj, dict):
        return {k: _strip(v) for k, v in obj.items() if k not in ("nodes", "elapsed")}
    return obj


@pytest.mark.parametrize("name", sorted(README_COMMANDS))
def test_readme_commands_match_golden(name, ag3_file):
    argv = [a.format(ag3=ag3_file) for a in README_COMMANDS[name]]
    code, out, err = run(argv)
    got = {"exit": code, "stdout": _strip(json.loads(out))}
    golden = json.loads((GOLDEN / f"{name}.json").read_text())
    assert got == golden
    manifest = json.loads(err.strip().splitlines()[-1])["manifest"]
    assert manifest["command"] == argv[0]


def test_construct_ag(tmp_path):
    code, out, _ = run(["construct", "--method", "ag", "--param", "3"])
    assert code == 0
    H = parse(out)
    assert H.m == 12
    dest = tmp_path / "pg.lhg"
    code, out, err = run(["construct", "--method", "pg", "--param", "2", "--output", str(dest)])
    assert code == 0 and parse(dest.read_text()).m == 7
    assert str(dest) in json.loads(err.splitlines()[-1])["manifest"]["output"]
    code, out, _ = run(["construct", "--method", "sts", "--param", "13"])
    assert parse(out) == construct_sts(13)


def test_exit_codes(tmp_path, ag3_file):
    assert run(["detect", "--pattern", "b4", "--input", ag3_file])[0] == 1
    assert run(["detect", "--pattern", "b4", "--input", ag3_file])[1].strip() == "null"
    assert run(["detect", "--pattern", "crown", "--input", ag3_file])[0] == 0
    broken = tmp_path / "bad.lhg"
    broken.write_text(serialize(construct_affine_plane(3).without_edges([(0, 1, 2)])))
    assert run(["certify-b4", "--input", str(broken)])[0] == 2
    assert run(["certify-b4", "--input", ag3_file])[0] == 0
    assert run(["search", "--n", "9", "--r", "3", "--forbid", "s:4", "--node-budget", "3", "--workers", "1"])[0] == 3
    assert run(["frobnicate"])[0] == 64
    assert run(["bound", "--kind", "b4"])[0] == 64
    assert run(["construct-witness", "--kind", "tree", "--n", "14", "--r", "3"])[0] == 64
    bad = tmp_path / "x.lhg"
    bad.write_text("3 3 1\n0 1\n")
    assert run(["verify", "--input", str(bad)])[0] == 65
    nonlinear = tmp_path / "y.lhg"
    nonlinear.write_text("3 5 2\n0 1 2\n0 1 3\n")
    assert run(["detect", "--pattern", "p4", "--input", str(nonlinear)])[0] == 65
    assert run(["verify", "--input", str(tmp_path / "missing.lhg")])[0] == 65
    assert run(["construct", "--method", "sts", "--param", "8"])[0] == 65
    assert run(["construct-witness", "--kind", "tree", "--n", "10", "--r", "3", "--k", "4"])[0] == 65
    assert run(["bound", "--kind", "hexagon", "--n", "9", "--r", "3"])[0] == 65


def test_json_input_accepted(tmp_path):
    p = tmp_path / "h.json"
    p.write_text(json.dumps({"r": 3, "n": 7, "edges": [[0, 1, 2]]}))
    code, out, _ = run(["verify", "--input", str(p)])
    assert code == 0 and json.loads(out)["edges"] == 1


def test_witness_written(tmp_path):
    dest = tmp_path / "w.lhg"
    code, out, _ = run(["construct-witness", "--kind", "p4", "--n", "18", "--r", "3", "--output", str(dest)])
    assert code == 0 and json.loads(out)["edges"] == 24
    assert parse(dest.read_text()).m == 24


def test_deterministic_outputs(ag3_file):
    a = run(["search", "--n", "7", "--r", "3", "--forbid", "p3", "--workers", "1"])
    b = run(["search", "--n", "7", "--r", "3", "--forbid", "p3", "--workers", "1"])
    assert _strip(json.loads(a[1])) == _strip(json.loads(b[1]))
