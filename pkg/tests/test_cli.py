import json

import pytest

from surfalg import cli, fixtures
from surfalg.surface import triangulation_to_json


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_no_arguments_prints_help(capsys):
    code, out, err = run(capsys)
    assert code == 2


def test_build_torus_text(capsys):
    code, out, err = run(capsys, "build", "--builtin", "torus")
    assert code == 0
    assert "3 arcs, 2 triangles" in out
    assert "validation: ok" in out
    assert "cycle around p (length 6)" in out


def test_build_json(capsys):
    code, out, err = run(capsys, "build", "--builtin", "genus2",
                         "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["valid"]
    assert len(doc["quiver"]["arrows"]) == 18
    assert len(doc["g_orbits"]) == 1


def test_build_dot_stable(capsys):
    code1, out1, _ = run(capsys, "build", "--builtin", "torus",
                         "--format", "dot")
    code2, out2, _ = run(capsys, "build", "--builtin", "torus",
                         "--format", "dot")
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.startswith("digraph")


def test_build_from_file(capsys, tmp_path):
    path = tmp_path / "torus.json"
    path.write_text(triangulation_to_json(fixtures.torus()))
    code, out, err = run(capsys, "build", "--input", str(path))
    assert code == 0


def test_build_invalid_triangulation_exits_one(capsys, tmp_path):
    doc = json.loads(triangulation_to_json(fixtures.torus()))
    doc["triangles"] = doc["triangles"][:1]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, out, err = run(capsys, "build", "--input", str(path))
    assert code == 1
    assert "violation" in out


def test_build_missing_file_exits_two(capsys):
    code, out, err = run(capsys, "build", "--input", "/nonexistent.json")
    assert code == 2
    assert "error:" in err


def test_build_unknown_builtin_exits_two(capsys):
    code = cli.main(["build", "--builtin", "moebius"])
    assert code == 2


def test_build_sphere5_notes_quiver_skip(capsys):
    code, out, err = run(capsys, "build", "--builtin", "sphere5")
    assert code == 0
    assert "not built" in out


def test_algebra_torus(capsys):
    code, out, err = run(capsys, "algebra", "--builtin", "torus")
    assert code == 0
    assert "total dimension: 36" in out
    assert "cartan determinant: 0" in out
    assert "weakly symmetric: yes" in out


def test_algebra_json(capsys):
    code, out, err = run(capsys, "algebra", "--builtin", "torus",
                         "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["dimension"] == 36
    assert doc["graded_dimensions"] == [3, 6, 6, 6, 6, 6, 3]


def test_algebra_nonstabilizing_exits_three(capsys):
    code, out, err = run(capsys, "algebra", "--builtin", "genus2",
                         "--max-deg", "5")
    assert code == 3
    assert "did not stabilize" in out
    assert "[9, 18, 18, 18, 18, 18]" in out


def test_bands_text(capsys):
    code, out, err = run(capsys, "bands", "--builtin", "sphere5",
                         "--max-len", "8")
    assert code == 0
    assert "max growth rate" in out


def test_bands_json_with_words(capsys):
    code, out, err = run(capsys, "bands", "--builtin", "sphere5",
                         "--max-len", "5", "--words", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["counts"]["3"] == 2
    assert "a1.a2'.a3" in doc["words"]


def test_bands_requires_presentation(capsys):
    code = cli.main(["bands", "--max-len", "4"])
    assert code == 2


def test_certify_growth_and_verify(capsys, tmp_path):
    cert = tmp_path / "growth.json"
    code, out, err = run(capsys, "certify-growth", "--builtin", "sphere5",
                         "--out", str(cert))
    assert code == 0
    assert "PASS" in out
    code, out, err = run(capsys, "verify", "--input", str(cert))
    assert code == 0
    assert "PASS" in out


def test_certify_growth_genus2(capsys, tmp_path):
    cert = tmp_path / "g2.json"
    code, out, err = run(capsys, "certify-growth", "--builtin", "genus2",
                         "--depth", "4", "--out", str(cert))
    assert code == 0
    code, out, err = run(capsys, "verify", "--input", str(cert))
    assert code == 0


def test_verify_tampered_certificate_fails(capsys, tmp_path):
    cert = tmp_path / "growth.json"
    run(capsys, "certify-growth", "--builtin", "sphere5", "--out", str(cert))
    doc = json.loads(cert.read_text())
    doc["basepoint"] = "3"
    cert.write_text(json.dumps(doc))
    code, out, err = run(capsys, "verify", "--input", str(cert))
    assert code == 1
    assert "FAIL" in out


def test_certify_growth_custom_words_failure(capsys):
    # alpha composed with itself is not freely composable
    code, out, err = run(capsys, "certify-growth", "--builtin", "sphere5",
                         "--word1", "a1.a2'.a3", "--word2", "a1.a2'.a3")
    assert code == 1
    assert "FAIL" in out


def test_periodicity_all_simples(capsys):
    code, out, err = run(capsys, "periodicity", "--builtin", "torus")
    assert code == 0
    assert out.count("periodic") == 3
    assert out.count("tube rank: 2") == 3


def test_periodicity_kx2_rank_one(capsys):
    code, out, err = run(capsys, "periodicity", "--builtin", "kx2")
    assert code == 0
    assert "periodic" in out
    assert "tube rank: 1" in out


def test_certify_growth_excluded_surface(capsys):
    code, out, err = run(capsys, "certify-growth", "--builtin", "tetra")
    assert code == 2
    assert "excluded surface" in err


def test_certify_growth_reports_counts_and_scope(capsys):
    code, out, err = run(capsys, "certify-growth", "--builtin", "sphere5",
                         "--max-len", "8")
    assert code == 0
    assert "band counts up to length 8" in out
    assert "growth estimate: max count^(1/length) = 1.3195" in out
    assert "scope:" in out and "quotient" in out


def test_periodicity_module_file(capsys, tmp_path):
    doc = {
        "algebra": {"builtin": "torus", "field": 32003, "max_deg": 40},
        "dims": {"1": 1, "2": 0, "3": 0},
        "matrices": {},
    }
    path = tmp_path / "mod.json"
    path.write_text(json.dumps(doc))
    code, out, err = run(capsys, "periodicity", "--module", str(path))
    assert code == 0
    assert "periodic" in out


def test_periodicity_module_file_unknown_field(capsys, tmp_path):
    path = tmp_path / "mod.json"
    path.write_text(json.dumps({
        "algebra": {"builtin": "torus"},
        "dims": {"1": 1, "2": 0, "3": 0},
        "woops": 1,
    }))
    code, out, err = run(capsys, "periodicity", "--module", str(path))
    assert code == 2
    assert "woops" in err


def test_syzygy_chain(capsys):
    code, out, err = run(capsys, "syzygy", "--builtin", "torus",
                         "--simple", "1", "--steps", "4")
    assert code == 0
    assert "[1, 0, 0] -> [3, 4, 4] -> [5, 4, 4] -> [3, 4, 4] -> [1, 0, 0]" \
        in out


def test_xi_single_arrow(capsys):
    code, out, err = run(capsys, "xi", "--builtin", "torus")
    assert code == 0
    assert "band: yes" in out
    assert "eta" in out


def test_xi_all_arrows(capsys):
    code, out, err = run(capsys, "xi", "--builtin", "torus", "--all")
    assert code == 0
    assert out.count("band: yes") == 6


def test_env_override(capsys, monkeypatch):
    monkeypatch.setenv("SURFALG_MAX_LEN", "4")
    code, out, err = run(capsys, "bands", "--builtin", "sphere5")
    assert code == 0
    assert "up to length 4" in out
    # explicit flag wins
    code, out, err = run(capsys, "bands", "--builtin", "sphere5",
                         "--max-len", "3")
    assert "up to length 3" in out


def test_env_override_bad_value(capsys, monkeypatch):
    monkeypatch.setenv("SURFALG_MAX_LEN", "many")
    code, out, err = run(capsys, "bands", "--builtin", "sphere5")
    assert code == 2
    assert "SURFALG_MAX_LEN" in err


def test_output_files_written(capsys, tmp_path):
    out_path = tmp_path / "quiver.dot"
    code, out, err = run(capsys, "build", "--builtin", "torus",
                         "--format", "dot", "--out", str(out_path))
    assert code == 0
    assert out_path.read_text().startswith("digraph")
