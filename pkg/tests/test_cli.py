import json

import pytest
from click.testing import CliRunner

from hkforms.cli import main
from hkforms.serialize import dump_form, load_op


@pytest.fixture
def runner():
    return CliRunner()


def run(runner, *args, env=None):
    return runner.invoke(main, list(args), env=env, catch_exceptions=False)


def test_verify_q1_passes(runner):
    res = run(runner, "verify", "--q", "1")
    assert res.exit_code == 0
    report = json.loads(res.output)
    assert report["status"] == "pass"
    assert report["tool"] == "hkforms"
    names = [c["name"] for c in report["checks"]]
    assert "su2:[adI,adJ]=2adK" in names
    assert "so5:killing-nondegenerate" in names


def test_verify_threads_matches_serial(runner):
    a = json.loads(run(runner, "verify", "--q", "1", "--threads", "1").output)
    b = json.loads(run(runner, "verify", "--q", "1", "--threads", "3").output)
    assert a["checks"] == b["checks"]  # config echoes the thread count
    assert a["status"] == b["status"] == "pass"


def test_text_format(runner):
    res = run(runner, "verify", "--q", "1", "--format", "text")
    assert res.exit_code == 0
    assert "PASS" in res.output
    assert "verify" in res.output.splitlines()[0]


def test_bad_config_exits_2(runner):
    assert run(runner, "verify", "--q", "0").exit_code == 2
    assert run(runner, "verify", "--q", "4").exit_code == 2
    assert run(runner, "verify", "--q", "1", "--threads", "0").exit_code == 2


def test_allow_large_lifts_guard(runner):
    res = run(runner, "invariants", "--q", "4", "--degree", "99")
    assert res.exit_code == 2 and "allow-large" in res.output
    # with the guard lifted, the cheap degree validation is reached instead
    res = run(runner, "invariants", "--q", "4", "--allow-large", "--degree", "99")
    assert res.exit_code == 2 and "degree" in res.output


def test_roots_command(runner):
    res = run(runner, "roots", "--q", "1")
    assert res.exit_code == 0
    report = json.loads(res.output)
    assert report["data"]["label"] == "B2"
    assert report["data"]["cartan"] == ["H", "ad_I"]
    coords = sorted(tuple(r["coords"]) for r in report["data"]["roots"])
    assert coords == sorted([(2, 0), (-2, 0), (0, 2), (0, -2),
                             (2, 2), (2, -2), (-2, 2), (-2, -2)])


def test_determinism_byte_identical(runner):
    a = run(runner, "roots", "--q", "1", "--seed", "5")
    b = run(runner, "roots", "--q", "1", "--seed", "5")
    assert a.output == b.output


def test_hodge_command(runner):
    res = run(runner, "hodge", "--q", "1")
    assert res.exit_code == 0
    report = json.loads(res.output)
    assert report["status"] == "pass"
    total = sum(e["dim"] for e in report["data"]["weights"])
    assert total == 16


def test_invariants_command(runner):
    res = run(runner, "invariants", "--q", "1", "--degree", "2")
    report = json.loads(res.output)
    assert res.exit_code == 0
    assert len(report["data"]["basis"]) == 3


def test_ao_command(runner):
    res = run(runner, "ao", "--q", "1")
    assert res.exit_code == 0
    report = json.loads(res.output)
    assert report["data"]["total_dim"] == 5


def test_thm21_k1(runner):
    res = run(runner, "thm21", "--q", "1", "--k", "1")
    assert res.exit_code == 0
    report = json.loads(res.output)
    assert report["status"] == "pass"


def test_thm21_random_invariants(runner):
    res = run(runner, "thm21", "--q", "1", "--random-invariant",
              "--degree", "2", "--count", "5")
    assert res.exit_code == 0
    report = json.loads(res.output)
    assert len(report["checks"]) == 5


def test_thm21_flag_conflicts(runner):
    assert run(runner, "thm21", "--q", "1", "--k", "1",
               "--random-invariant", "--degree", "2").exit_code == 2
    assert run(runner, "thm21", "--q", "1", "--random-invariant").exit_code == 2


def test_hk_seed_env_overrides(runner):
    a = run(runner, "thm21", "--q", "1", "--random-invariant", "--degree", "2",
            "--count", "2", "--seed", "1", env={"HK_SEED": "42"})
    b = run(runner, "thm21", "--q", "1", "--random-invariant", "--degree", "2",
            "--count", "2", "--seed", "2", env={"HK_SEED": "42"})
    assert a.output == b.output
    assert json.loads(a.output)["config"]["seed"] == 42


def test_fixlocus_command(runner, tmp_path, basis1):
    p = tmp_path / "omega_I.json"
    dump_form(basis1.omega["I"], p)
    res = run(runner, "fixlocus", "--q", "1", "--form", str(p))
    assert res.exit_code == 0
    report = json.loads(res.output)
    assert report["data"]["tag"] == "AntipodalPair"
    assert report["data"]["direction"] == [1, 0, 0]


def test_fixlocus_dim_mismatch(runner, tmp_path, basis1):
    p = tmp_path / "omega_I.json"
    dump_form(basis1.omega["I"], p)
    assert run(runner, "fixlocus", "--q", "2", "--form", str(p)).exit_code == 2


def test_scan_command(runner, tmp_path, basis1):
    p = tmp_path / "classes.json"
    from hkforms.serialize import form_to_obj

    p.write_text(json.dumps([form_to_obj(basis1.omega["I"])]))
    res = run(runner, "scan", "--q", "1", "--classes", str(p),
              "--samples", "4", "--point", "1", "0")
    assert res.exit_code == 0
    report = json.loads(res.output)
    rec = report["data"]["classes"][0]
    assert rec["fix_locus"]["tag"] == "AntipodalPair"
    assert 0 in rec["pure_at_samples"]  # the explicit point (1,0,0)


def test_dump_op_roundtrip(runner, tmp_path, basis1):
    p = tmp_path / "L_I.json"
    res = run(runner, "dump-op", "--q", "1", "--output", str(p), "L_I")
    assert res.exit_code == 0
    assert load_op(p) == basis1["L_I"]


def test_dump_op_unknown_name(runner):
    assert run(runner, "dump-op", "--q", "1", "nonsense").exit_code == 2


def test_dump_op_C(runner, tmp_path):
    p = tmp_path / "C.json"
    assert run(runner, "dump-op", "--q", "1", "--output", str(p), "C").exit_code == 0
    op = load_op(p)
    assert op.degree_shifts() == [-4]


def test_output_file(runner, tmp_path):
    p = tmp_path / "report.json"
    res = run(runner, "verify", "--q", "1", "--output", str(p))
    assert res.exit_code == 0
    assert json.loads(p.read_text())["status"] == "pass"


def test_figures_written(runner, tmp_path):
    d = tmp_path / "figs"
    res = run(runner, "roots", "--q", "1", "--figures", str(d))
    assert res.exit_code == 0
    assert (d / "roots.png").exists() and (d / "roots.csv").exists()
    d2 = tmp_path / "figs2"
    res = run(runner, "hodge", "--q", "1", "--figures", str(d2))
    assert res.exit_code == 0
    assert (d2 / "hodge.png").exists() and (d2 / "hodge.csv").exists()
