import json
import subprocess
import sys

import pytest

from eulersums.cli import (ConfigError, SuiteConfig, main, parse_params,
                           point_from_dict, run_suite)


def run_cli(args):
    proc = subprocess.run([sys.executable, "-m", "eulersums.cli"] + args,
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_parse_params():
    assert parse_params("a=1/3,s=2") == {"a": "1/3", "s": "2"}
    assert parse_params(None) is None
    with pytest.raises(ConfigError):
        parse_params("a=1/3,oops")


def test_point_from_dict():
    p = point_from_dict({"a": "1/3", "s": "2"})
    assert str(p.a) == "1/3" and p.s == 2
    with pytest.raises(ConfigError):
        point_from_dict({"zz": "1"})


def test_verify_pass_and_exit_codes(tmp_path):
    rc, out, _ = run_cli(["verify", "--id", "E2.13",
                          "--param", "a=1/4,m=1", "--digits", "25"])
    assert rc == 0
    assert "PASS" in out or "pass" in out

    rc, _, err = run_cli(["verify", "--id", "E9.99"])
    assert rc == 2

    rc, _, _ = run_cli(["verify", "--id", "E2.14",
                        "--param", "a=1/4,s=2,m=1", "--digits", "25"])
    assert rc == 1


def test_list_names_all_identities():
    rc, out, _ = run_cli(["list"])
    assert rc == 0
    assert "E2.13" in out and "E4.24" in out
    assert len([ln for ln in out.splitlines() if ln.strip().startswith("E")]) == 31


def test_suite_json_roundtrip(tmp_path):
    cfg = tmp_path / "cfg.json"
    out = tmp_path / "report.json"
    cfg.write_text(json.dumps({
        "identities": ["E2.13", "E3.12"],
        "digits": 25,
        "grid_override": [{"id": "E2.13", "params": {"a": "1/4", "m": "1"}},
                          {"id": "E3.12", "params": {"s": "2"}}],
        "format": "json",
    }))
    rc, _, _ = run_cli(["suite", "--config", str(cfg), "--out", str(out)])
    assert rc == 0
    report = json.loads(out.read_text())
    assert report["summary"]["failed"] == 0
    ids = {r["id"] for r in report["results"]}
    assert ids == {"E2.13", "E3.12"}
    e213 = [r for r in report["results"] if r["id"] == "E2.13"]
    assert len(e213) == 1 and e213[0]["params"] == {"a": "1/4", "m": "1"}


def test_suite_rejects_bad_config(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"identities": ["E2.13"], "digits": 2}))
    rc, _, err = run_cli(["suite", "--config", str(cfg)])
    assert rc == 2
    cfg.write_text(json.dumps({"identities": "all", "mystery": 1}))
    rc, _, _ = run_cli(["suite", "--config", str(cfg)])
    assert rc == 2


def test_suite_worker_count_does_not_change_results(tmp_path):
    base = {"identities": ["E2.13", "E2.17"], "digits": 25, "format": "json",
            "grid_override": [
                {"id": "E2.13", "params": {"a": "1/4", "m": "1"}},
                {"id": "E2.17", "params": {"a": "1/3", "x": "1/2",
                                           "y": "1/2", "s": "2"}}]}
    reports = []
    for workers in (1, 2):
        cfg_path = tmp_path / f"cfg{workers}.json"
        cfg_path.write_text(json.dumps({**base, "workers": workers}))
        rep = run_suite(SuiteConfig.from_json(str(cfg_path)))
        strip = [{k: v for k, v in r.items() if k != "ms"}
                 for r in rep.results]
        summary = {k: v for k, v in rep.summary.items() if k != "total_ms"}
        reports.append((strip, summary))
    assert reports[0] == reports[1]


def test_suite_records_evaluator_errors_without_aborting(tmp_path):
    # a point missing required parameters becomes a failed record with an
    # error message; the suite still finishes and exits 1
    cfg = tmp_path / "cfg.json"
    out = tmp_path / "report.json"
    cfg.write_text(json.dumps({
        "identities": ["E2.17"], "digits": 20, "format": "json",
        "grid_override": [{"id": "E2.17", "params": {"a": "1/3"}}]}))
    rc, _, _ = run_cli(["suite", "--config", str(cfg), "--out", str(out)])
    assert rc == 1
    report = json.loads(out.read_text())
    assert report["results"][0]["error"]
    assert report["summary"]["failed"] == 1


def test_residues_and_table1_commands():
    rc, out, _ = run_cli(["residues", "--a", "3/10", "--m", "1",
                          "--N", "1000", "--digits", "20"])
    assert rc == 0
    rc, out, _ = run_cli(["table1", "--kind", "cot", "--n", "3", "--K", "3",
                          "--digits", "20"])
    assert rc == 0


def test_main_reports_usage_errors():
    rc, _, err = run_cli(["verify"])
    assert rc == 2
