"""Command line interface: expansions, verification, spaces, caching."""

import json
import os

import pytest

from thetaorbit import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_expand_theta(capsys):
    code, out, _ = run(capsys, "expand", "theta", "--prec", "2")
    assert code == 0
    assert out.startswith("q^{1/8}(-zeta^{-1/2} + zeta^{1/2})")
    assert "O(q^{2})" in out


def test_expand_generator_row(capsys):
    code, out, _ = run(capsys, "expand", "phi_0_1", "--prec", "1")
    assert code == 0
    assert "zeta^{-1} + 10 + zeta" in out


def test_expand_json_deterministic(capsys):
    code, out1, _ = run(capsys, "expand", "E4,2", "--prec", "3", "--json")
    assert code == 0
    code, out2, _ = run(capsys, "expand", "E4,2", "--prec", "3", "--json")
    assert out1 == out2
    data = json.loads(out1)
    assert data["terms"][0]["c"]["coeffs"] == ["1/1"]


def test_expand_unknown_name(capsys):
    code, _, err = run(capsys, "expand", "no_such_series")
    assert code == 2
    assert err


def test_verify_single_and_alias(capsys):
    code, out, _ = run(capsys, "verify", "--id", "tr2_4_0_0_0")
    assert code == 0
    assert "PASS" in out
    code, out, _ = run(capsys, "verify", "--id", "c00")
    assert code == 0


def test_verify_unknown_id(capsys):
    code, _, err = run(capsys, "verify", "--id", "nonsense")
    assert code == 2


def test_verify_group_json(capsys):
    code, out, _ = run(capsys, "verify", "--id", "theta_sq_quotient",
                       "--json")
    assert code == 0
    rows = json.loads(out)
    assert rows[0]["status"] == "PASS"


def test_spaces_json(capsys):
    code, out, _ = run(capsys, "spaces", "--weight", "4", "--index", "1",
                       "--holomorphic", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["dimension"] == 1


def test_decompose_orbit_sum(capsys):
    code, out, _ = run(capsys, "decompose", "--target", "tr2_6_2_0_0",
                       "--holomorphic")
    assert code == 0
    assert out.strip()


def test_search_window(capsys):
    code, out, _ = run(capsys, "search", "--N", "2", "--max-weight", "2",
                       "--max-index", "2")
    assert code == 0
    assert out.count("ZERO") >= 2
    assert "Tr^(2)_4,0,0,0" in out
    assert "Tr^(2)_2,2,0,0" in out


def test_cache_round_trip(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("THETA_ORBIT_CACHE", str(tmp_path))
    code, out1, _ = run(capsys, "expand", "eta^24", "--prec", "3")
    assert code == 0
    files = os.listdir(tmp_path)
    assert files
    code, out2, _ = run(capsys, "expand", "eta^24", "--prec", "3")
    assert out1 == out2
    # a corrupted entry must fall back to recomputation, not crash
    for f in files:
        with open(tmp_path / f, "w") as fh:
            fh.write("{broken json")
    code, out3, _ = run(capsys, "expand", "eta^24", "--prec", "3")
    assert code == 0
    assert out3 == out1
    code, out, _ = run(capsys, "cache", "stats")
    assert code == 0
    code, out, _ = run(capsys, "cache", "clear")
    assert code == 0
    assert not os.listdir(tmp_path)


def test_verify_section5_quick(capsys):
    code, out, _ = run(capsys, "verify", "--section", "5", "--wp-N", "2",
                       "--nmax", "20")
    assert code == 0
    assert "PASS" in out
