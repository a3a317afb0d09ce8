import json

import pytest

from bdom.cli import main
from bdom.families import grid, star, star_orientation
from bdom.graphs import format_dg, format_ug
from bdom.lattice import builtin_patterns, format_pat


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr().out
    return rc, out


def run_json(capsys, *argv):
    rc, out = run(capsys, *argv)
    assert rc == 0, out
    return json.loads(out)


@pytest.fixture
def g35_file(tmp_path):
    p = tmp_path / "g35.ug"
    p.write_text(format_ug(grid(3, 5)), encoding="utf-8")
    return str(p)


@pytest.fixture
def s5_file(tmp_path):
    p = tmp_path / "s5.ug"
    p.write_text(format_ug(star(5)), encoding="utf-8")
    return str(p)


def test_family_grid_emits_canonical_ug(capsys):
    rc, out = run(capsys, "family", "grid", "--m", "3", "--n", "5")
    assert rc == 0
    assert out == format_ug(grid(3, 5))
    assert out.startswith("15 22\n")


def test_family_writes_file(tmp_path, capsys):
    target = tmp_path / "out.ug"
    rc, _ = run(capsys, "family", "star", "--n", "9", "--out", str(target))
    assert rc == 0
    assert target.read_text(encoding="utf-8") == format_ug(star(9))


def test_gamma_undirected_grid(capsys, g35_file):
    report = run_json(capsys, "gamma", g35_file, "--t", "3", "--r", "2")
    assert report["results"] == {"gamma": 3, "r": 2, "t": 3, "witness": report["results"]["witness"]}
    assert report["results"]["gamma"] == 3
    assert len(report["results"]["witness"]) == 3


def test_gamma_directed_star(tmp_path, capsys):
    dg = tmp_path / "fig6_left.dg"
    dg.write_text(format_dg(star_orientation(9, 0)), encoding="utf-8")
    report = run_json(capsys, "gamma", str(dg), "--t", "2", "--r", "1")
    assert report["results"]["gamma"] == 1
    assert report["results"]["witness"] == [0]
    assert report["params"]["directed"] is True


def test_gamma_single_vertex(tmp_path, capsys):
    ug = tmp_path / "one.ug"
    ug.write_text("1 0\n", encoding="utf-8")
    report = run_json(capsys, "gamma", str(ug), "--t", "5", "--r", "5")
    assert report["results"]["gamma"] == 1


def test_oracle_agrees_with_gamma(capsys, s5_file):
    # every leaf is forced (it can hear at most 1 from the center), and
    # four leaf towers already feed the center
    solver = run_json(capsys, "gamma", s5_file, "--t", "2", "--r", "2")
    oracle = run_json(capsys, "oracle", s5_file, "--t", "2", "--r", "2")
    assert solver["results"]["gamma"] == oracle["results"]["gamma"] == 4


def test_interval_star5(capsys, s5_file):
    report = run_json(capsys, "interval", s5_file, "--t", "2", "--r", "2")
    assert report["results"] == {"D": 5, "attained": [4, 5], "d": 4, "full": True}
    report = run_json(capsys, "interval", s5_file, "--t", "3", "--r", "1")
    assert report["results"] == {"D": 4, "attained": [1, 2, 3, 4], "d": 1, "full": True}


def test_interval_results_independent_of_jobs(capsys, s5_file):
    one = run_json(capsys, "interval", s5_file, "--t", "2", "--r", "2", "--jobs", "1")
    two = run_json(capsys, "interval", s5_file, "--t", "2", "--r", "2", "--jobs", "2")
    assert one["results"] == two["results"]


def test_walk_star9(tmp_path, capsys):
    ug = tmp_path / "s9.ug"
    ug.write_text(format_ug(star(9)), encoding="utf-8")
    report = run_json(
        capsys, "walk", str(ug), "--from", "0" * 8, "--to", "1" * 8, "--t", "2", "--r", "1"
    )
    assert report["results"]["gamma_sequence"][0] == 1
    assert report["results"]["gamma_sequence"][-1] == 8
    assert report["results"]["max_step"] == 1


def test_torus_builtin(capsys):
    report = run_json(
        capsys, "torus", "--pattern", "diag13", "--t", "2", "--r", "2", "--reps", "2"
    )
    results = report["results"]
    assert results["density"] == "1/3"
    assert results["dominating"] and results["strict_efficient"]
    assert results["torus"] == [6, 6]


def test_torus_pattern_file(tmp_path, capsys):
    pat = tmp_path / "checker.pat"
    pat.write_text(format_pat(builtin_patterns()["checker12"]), encoding="utf-8")
    report = run_json(
        capsys, "torus", "--pattern", str(pat), "--t", "2", "--r", "2", "--reps", "2"
    )
    assert report["results"]["density"] == "1/2"
    assert report["inputs_digest"]["pattern"]


def test_jumps_seeded(capsys):
    report = run_json(
        capsys, "jumps", "--t", "2", "--r", "2", "--budget", "7",
        "--trials", "30", "--seed", "9",
    )
    assert report["results"]["count"] == 0


def test_jumps_requires_seed(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["jumps", "--t", "5", "--r", "3", "--trials", "10"])
    assert exc.value.code == 2


def test_audit_star_all_confirmed(capsys, tmp_path):
    md = tmp_path / "star.md"
    report = run_json(capsys, "audit", "star", "--md-out", str(md))
    claims = report["results"]["claims"]
    assert claims and all(c["status"] == "confirmed" for c in claims)
    assert md.read_text(encoding="utf-8").startswith("# Claim audit: star")


def test_audit_all_renders_markdown(capsys, tmp_path):
    md = tmp_path / "all.md"
    report = run_json(capsys, "audit", "all", "--md-out", str(md))
    statuses = {c["status"] for c in report["results"]["claims"]}
    assert statuses <= {"confirmed", "refuted-at-instance", "unverifiable"}
    assert "refuted-at-instance" in statuses  # the 3x2 upper endpoint
    text = md.read_text(encoding="utf-8")
    assert "Summary:" in text and "| claim | status | details |" in text


def test_audit_prop34_reports_refutation(capsys):
    report = run_json(capsys, "audit", "prop34")
    by_instance = {
        (c["instance"]["m"], c["instance"]["n"]): c["status"]
        for c in report["results"]["claims"]
    }
    assert by_instance[(3, 2)] == "refuted-at-instance"
    assert by_instance[(2, 4)] == "confirmed"
    assert by_instance[(3, 3)] == "confirmed"


def test_exit_code_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.ug"
    bad.write_text("not a graph\n", encoding="utf-8")
    assert main(["gamma", str(bad), "--t", "2", "--r", "1"]) == 2
    assert main(["gamma", str(tmp_path / "missing.ug"), "--t", "2", "--r", "1"]) == 2


def test_exit_code_infeasible(capsys, s5_file):
    assert main(["gamma", s5_file, "--t", "1", "--r", "2"]) == 3


def test_exit_code_guard(tmp_path, capsys):
    big = tmp_path / "big.ug"
    big.write_text(format_ug(grid(3, 6)), encoding="utf-8")  # 27 edges
    assert main(["interval", str(big), "--t", "2", "--r", "2"]) == 4


def test_reports_are_stable_across_runs(capsys, s5_file):
    a = run_json(capsys, "interval", s5_file, "--t", "2", "--r", "2")
    b = run_json(capsys, "interval", s5_file, "--t", "2", "--r", "2")
    a.pop("timing_ms")
    b.pop("timing_ms")
    assert a == b


def test_json_is_key_sorted(capsys, s5_file):
    rc, out = run(capsys, "gamma", s5_file, "--t", "2", "--r", "2")
    assert rc == 0
    assert out == json.dumps(json.loads(out), sort_keys=True) + "\n"
