# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import io
import json
import os

import yaml

from conftest import fixture_path

from cylspec import spectra
from cylspec.cli import run, split_verbosity
from cylspec.treemix import uniform_term


def test_usage_and_version():
    out = io.StringIO()
    assert run([], out) == 2
    assert "usage: cylspec" in out.getvalue()
    out = io.StringIO()
    assert run(["--help"], out) == 0
    out = io.StringIO()
    assert run(["--version"], out) == 0
    assert out.getvalue().startswith("cylspec 1.0.0")


def test_split_verbosity():
    assert split_verbosity(["-vv", "family", "--verbose", "coxeter", "-v"]) == (4, ["family", "coxeter"])


def test_unknown_command(cylspec_cli):
    rc, result = cylspec_cli("draw")
    assert rc == 2
    assert result["failed"] is True
    assert "verify-all" in result["msg"]


def test_family_coxeter(cylspec_cli):
    rc, result = cylspec_cli("family", "coxeter")
    assert rc == 0
    assert result["vertices"] == 28
    assert result["ks"] == [1, 2, 3]
    assert result["girth"] == 7
    assert result["connected"] is True
    assert result["schema"] == "cylspec/1"


def test_family_rooted_profile(cylspec_cli):
    rc, result = cylspec_cli("family", "sym-rooted", "--h", "2", "--profile")
    assert rc == 0
    assert result["vertices"] == 130
    assert result["ks"] == [1, 5, 3, 2, 4, 6]
    assert result["profile"]["uniform_term_match"] is True
    assert len(result["outliers"]["per_j"]) == 13


def test_family_rejects_unknown_name(cylspec_cli):
    rc, result = cylspec_cli("family", "heawood")
    assert rc == 2
    assert "heawood" in result["msg"]
    rc, result = cylspec_cli("family", "sym-rooted", "--h", "3")
    assert rc == 2
    assert "not prime" in result["msg"]


def test_build_dot_output(cylspec_cli):
    rc, text = cylspec_cli("build", "family", "gi", "--n", "5", "--ks", "1,2", "--format", "dot", raw=True)
    assert rc == 0
    assert "graph" in text
    assert text.count("--") == 15


def test_build_writes_files(cylspec_cli, tmp_path):
    outdir = tmp_path / "out"
    rc, result = cylspec_cli("build", "--decomp", fixture_path("d.json"), "--cyls", "path:0,path:1", "--outdir", outdir)
    assert rc == 0
    assert result["vertices"] == 10
    assert result["target"] == "d.json"
    assert sorted(os.path.basename(p) for p in result["files"]) == ["adjacency.json", "construct.dot", "manifest.json"]
    with open(outdir / "manifest.json") as f:
        manifest = json.load(f)
    assert len(manifest["vertices"]) == 10


def test_build_reports_every_violation(cylspec_cli):
    rc, result = cylspec_cli("build", "--decomp", fixture_path("d.json"), "--cyls", fixture_path("c_invalid.json"))
    assert rc == 2
    assert result["failed"] is True
    assert result["identity"] == "Ebb = Ebb*"
    assert [v["identity"] for v in result["violations"]] == ["Ebb = Ebb*", "B = B*"]


def test_build_needs_a_target(cylspec_cli):
    rc, result = cylspec_cli("build")
    assert rc == 2
    assert "nothing to work on" in result["msg"]


def test_spectrum_of_petersen(cylspec_cli):
    rc, result = cylspec_cli("spectrum", "family", "gi", "--n", "5", "--ks", "1,2", "--factored")
    assert rc == 0
    assert result["match"] is True
    assert result["regime"] == "no_inner"
    assert result["is_ramanujan"] is True
    assert result["product"] == result["oracle"]
    assert any(line.startswith("j=5") for line in result["factored_text"])


def test_spectrum_with_inner_vertices(cylspec_cli):
    rc, result = cylspec_cli("spectrum", "--decomp", fixture_path("d_parts.json"), "--cyls", "path:1,path:0")
    assert rc == 0
    assert result["regime"] == "regular"
    assert result["match"] is True
    assert result["prefactor"]
    rc, result = cylspec_cli(
        "spectrum", "--decomp", fixture_path("d_parts.json"), "--cyls", "path:1,path:0", "--regime", "general"
    )
    assert rc == 0
    assert result["match"] is True


def test_spectrum_oracle_only(cylspec_cli, x):
    rc, result = cylspec_cli("spectrum", "--oracle-only", fixture_path("graph.json"))
    assert rc == 0
    assert result["oracle"] == ((x - 3) * (x - 1) ** 5 * (x + 2) ** 4).to_json()
    assert result["degree"] == 10
    roots = [(round(r["value"], 6), r["multiplicity"]) for r in result["roots"]]
    assert roots == [(-2.0, 4), (1.0, 5), (3.0, 1)]


def test_spectrum_forced_regime_that_does_not_apply(cylspec_cli):
    rc, result = cylspec_cli("spectrum", "family", "coxeter", "--regime", "tensor")
    assert rc == 2
    assert "edgeless" in result["msg"]


def test_treemix_uniform(cylspec_cli):
    rc, result = cylspec_cli("treemix", "--height", "2", "--labels", "uniform:x-2:6", "--oracle")
    assert rc == 0
    assert result["match"] is True
    assert result["polynomial"] == uniform_term("rooted", 2).to_json()
    assert len(result["per_level"]) == 3


def test_treemix_unrooted_and_degenerate(cylspec_cli):
    labels = json.dumps(["x-1", "x", "x+1", "x-1/2"])
    rc, result = cylspec_cli("treemix", "--shape", "unrooted", "--height", "1", "--labels", labels, "--oracle")
    assert rc == 0
    assert result["match"] is True
    rc, result = cylspec_cli("treemix", "--height", "1", "--labels", '[0, "x", "x"]')
    assert rc == 2
    assert "zero" in result["msg"]


def test_text_format_from_environment(cylspec_cli, monkeypatch):
    monkeypatch.setenv("CYLSPEC_FORMAT", "text")
    rc, text = cylspec_cli("family", "coxeter", raw=True)
    assert rc == 0
    assert yaml.safe_load(text)["vertices"] == 28


def test_invalid_settings(cylspec_cli, monkeypatch):
    rc, result = cylspec_cli("family", "coxeter", "--tol", "-1")
    assert rc == 2
    assert "tol" in result["msg"]
    monkeypatch.setenv("CYLSPEC_JOBS", "0")
    rc, result = cylspec_cli("family", "coxeter")
    assert rc == 2
    assert "jobs" in result["msg"]


def test_out_file(cylspec_cli, tmp_path):
    target = tmp_path / "coxeter.json"
    rc, text = cylspec_cli("family", "coxeter", "--out", target, raw=True)
    assert rc == 0
    assert text == ""
    with open(target) as f:
        assert json.load(f)["vertices"] == 28


def test_verify_all_selected_checks(cylspec_cli):
    rc, result = cylspec_cli("verify-all", "--only", "coxeter golden,bsymmetry")
    assert rc == 0
    assert result["passed"] == 2 and result["failed"] == 0
    assert [c["name"] for c in result["checks"]] == ["coxeter golden", "bsymmetry"]
    assert result["quick"] is False


def test_verify_all_perturbed(cylspec_cli):
    rc, result = cylspec_cli("verify-all", "--only", "coxeter golden,tree mixing equals determinant", "--perturb", "--quick")
    assert rc == 1
    assert result["failed"] == 2
    rc, result = cylspec_cli("verify-all", "--only", "bsymmetry", "--perturb")
    assert rc == 0
    assert result["warnings"] == ["the perturbation went unnoticed"]


def test_verify_all_unknown_check(cylspec_cli):
    rc, result = cylspec_cli("verify-all", "--only", "everything")
    assert rc == 2
    assert "everything" in result["msg"]


def test_verify_all_is_deterministic(cylspec_cli):
    argv = ("verify-all", "--only", "subdivision identity,regime consistency", "--seed", "7", "--quick")
    rc1, first = cylspec_cli(*argv, raw=True)
    rc2, second = cylspec_cli(*argv, raw=True)
    assert rc1 == rc2 == 0
    assert first == second


def test_verify_all_quick_flag(cylspec_cli):
    rc, result = cylspec_cli("verify-all", "--only", "regime consistency,130-vertex golden", "--quick")
    assert rc == 0
    assert result["quick"] is True
    assert [c["name"] for c in result["checks"]] == ["regime consistency"]


def test_spectrum_honours_root_tol(cylspec_cli, monkeypatch):
    seen = []
    original = spectra.real_roots

    def recording(p, tol=1e-10):
        seen.append(tol)
        return original(p, tol)

    monkeypatch.setattr(spectra, "real_roots", recording)
    rc, result = cylspec_cli(
        "spectrum", "--decomp", fixture_path("d_parts.json"), "--cyls", "path:1,path:0", "--root-tol", "1e-7"
    )
    assert rc == 0
    assert result["match"] is True
    assert seen == [1e-7]
