import json
import subprocess
import sys

import pytest

from canext import suite
from canext.cli import main
from canext.serialize import dot_edges, poset_to_json, read_csv
from canext.order import FinPoset, ValidationError

SMALL = {"maxAtoms": 2, "maxDim": 2, "samples": 30, "normalSamples": 20, "posetMaxSize": 3}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, doc) -> str:
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


# -- single commands ---------------------------------------------------------------

def test_ba_command(capsys):
    code, out, _ = run(capsys, "ba", "--atoms", "2")
    rows = read_csv(out)
    assert code == 0 and rows[0] == ["instance", "check", "result", "sampled"]
    assert {r[2] for r in rows[1:]} == {"pass"}


def test_ba_json_output(capsys, tmp_path):
    dest = tmp_path / "ba.json"
    code, out, _ = run(capsys, "ba", "--atoms", "1", "--json", "--output", str(dest))
    assert code == 0
    assert json.loads(out) == json.loads(dest.read_text())


def test_bal_command(capsys):
    code, out, _ = run(capsys, "bal", "--dim", "2", "--samples", "20", "--seed", "5",
                       "--appendix")
    assert code == 0 and "theta_alpha_is_zeta" in out


def test_poset_regular_opens(capsys, tmp_path):
    f = write(tmp_path, "v.json", poset_to_json(FinPoset.vee()))
    code, out, _ = run(capsys, "poset", "--file", f, "--op", "regular-opens")
    assert code == 0
    assert json.loads(out)["regularOpens"] == [[], ["t1"], ["t2"], ["b", "t1", "t2"]]


def test_poset_normalize(capsys, tmp_path):
    doc = {"poset": poset_to_json(FinPoset.vee()), "values": {"b": "1", "t1": "0", "t2": "0"}}
    f = write(tmp_path, "f.json", doc)
    code, out, _ = run(capsys, "poset", "--file", f, "--op", "normalize")
    res = json.loads(out)
    assert code == 0 and res["normal"] is False
    assert res["values"] == {"b": "0", "t1": "0", "t2": "0"}
    code, out, _ = run(capsys, "poset", "--file", f, "--op", "normalize", "--format", "csv")
    assert read_csv(out)[1] == ["b", "1", "1", "0", "0"]


def test_export_dot_for_vee(capsys, tmp_path):
    f = write(tmp_path, "v.json", poset_to_json(FinPoset.vee()))
    code, out, _ = run(capsys, "export", "--format", "dot", "--input", f)
    assert code == 0 and len(dot_edges(out)) == 2


def test_export_gamma_table(capsys, tmp_path):
    f = write(tmp_path, "a.json", {"dim": 2, "coords": ["1", "2"]})
    code, out, _ = run(capsys, "export", "--format", "csv", "--input", f)
    rows = read_csv(out)
    assert code == 0 and rows[0] == ["ideal", "value"]
    assert rows[1:] == [["I{1}", "1"], ["I{2}", "2"], ["I{1,2}", "1"]]


def test_export_empty_report(capsys, tmp_path):
    skeleton = {"instance": {}, "checks": []}
    f = write(tmp_path, "r.json", skeleton)
    code, out, _ = run(capsys, "export", "--format", "json", "--input", f)
    assert code == 0 and json.loads(out) == skeleton
    code, out, _ = run(capsys, "export", "--format", "csv", "--input", f)
    assert read_csv(out) == [["instance", "check", "result"]]


def test_export_json_is_canonical(capsys, tmp_path):
    f = write(tmp_path, "a.json", {"coords": ["2/4", "-0", "6/3"], "dim": 3})
    code, out, _ = run(capsys, "export", "--format", "json", "--input", f)
    assert json.loads(out) == {"dim": 3, "coords": ["1/2", "0", "2"]}


def test_generate_roundtrips_through_export(capsys, tmp_path):
    for kind, extra in (("poset", ["--n", "5"]), ("boolalg", ["--atoms", "3"]),
                        ("lalg", ["--dim", "2"])):
        code, out, _ = run(capsys, "generate", "--kind", kind, "--seed", "42", *extra)
        assert code == 0
        f = write(tmp_path, f"{kind}.json", json.loads(out))
        code, again, _ = run(capsys, "export", "--format", "json", "--input", f)
        assert json.loads(again) == json.loads(out)


@pytest.mark.parametrize("argv", [
    ["ba", "--atoms", "0"],
    ["bal", "--dim", "x"],
    ["export", "--format", "svg", "--input", "x.json"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_bad_input_files_exit_2(capsys, tmp_path):
    code, _, err = run(capsys, "export", "--format", "json", "--input", str(tmp_path / "none"))
    assert code == 2 and err.startswith("canext: error:")
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(capsys, "poset", "--file", str(bad), "--op", "normalize")[0] == 2
    f = write(tmp_path, "odd.json", {"what": 1})
    assert run(capsys, "export", "--format", "dot", "--input", f)[0] == 2
    f = write(tmp_path, "p.json", {"elements": ["a", "b"], "le": [["a", "b"], ["b", "a"]]})
    assert run(capsys, "poset", "--file", f, "--op", "regular-opens")[0] == 2
    code, _, err = run(capsys, "generate", "--kind", "poset", "--param", "n")
    assert code == 2 and "key=value" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "canext", "ba", "--atoms", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "pass" in res.stdout


# -- suite -------------------------------------------------------------------------

def test_config_validation(tmp_path):
    with pytest.raises(ValidationError, match="unknown"):
        suite.SuiteConfig.from_dict({"maxAtom": 3})
    with pytest.raises(ValidationError):
        suite.SuiteConfig.from_dict({"maxDim": 0})
    with pytest.raises(ValidationError):
        suite.SuiteConfig.from_dict({"epsGrid": ["-1/2"]})
    cfg = suite.SuiteConfig.from_dict({"epsGrid": ["1/3"]})
    assert suite.SuiteConfig.from_dict(cfg.to_dict()) == cfg


def test_seed_override(monkeypatch):
    monkeypatch.setenv("CANEXT_SEED", "17")
    assert suite.SuiteConfig.from_dict({"seed": 3}).seed == 17
    monkeypatch.setenv("CANEXT_SEED", "x")
    with pytest.raises(ValidationError):
        suite.SuiteConfig.from_dict({})


def test_suite_writes_outputs(capsys, tmp_path):
    cfg = write(tmp_path, "cfg.json", dict(SMALL, outputPath=str(tmp_path / "out")))
    code, out, err = run(capsys, "suite", "--config", cfg)
    assert code == 0
    doc = json.loads((tmp_path / "out" / "report.json").read_text())
    assert doc["ok"] is True and doc["config"]["maxDim"] == 2
    kinds = {r["instance"]["kind"] for r in doc["reports"]}
    assert kinds == {"ba", "ro_iso", "hulls", "identities", "bal", "appendix", "normal",
                     "normal_poset"}
    assert (tmp_path / "out" / "figures" / "summary.png").stat().st_size > 0
    assert "report.json" in err


def test_one_dimensional_suite_passes(tmp_path):
    cfg = suite.SuiteConfig.from_dict(dict(SMALL, maxDim=1, maxAtoms=1,
                                           outputPath=str(tmp_path)))
    res = suite.run_suite(cfg, figures=False)
    assert res.exit_code == 0 and res.reports


def test_suite_is_deterministic(tmp_path):
    docs = []
    for _ in range(2):
        cfg = suite.SuiteConfig.from_dict(dict(SMALL, outputPath=str(tmp_path)))
        suite.run_suite(cfg, figures=False)
        docs.append((tmp_path / "report.json").read_bytes())
    assert docs[0] == docs[1]


def test_mutant_fails_and_counterexamples_replay(capsys, tmp_path):
    out = tmp_path / "m"
    cfg = write(tmp_path, "cfg.json", dict(SMALL, outputPath=str(out)))
    code, _, _ = run(capsys, "suite", "--config", cfg, "--mutant", "alpha-shift",
                     "--no-figures")
    assert code == 1
    doc = json.loads((out / "report.json").read_text())
    failed = {c["name"] for r in doc["reports"] for c in r["checks"] if not c["pass"]}
    assert "s_independent" in failed
    report = str(out / "report.json")
    code, lines, _ = run(capsys, "replay", "--file", report, "--mutant", "alpha-shift")
    assert code == 1 and "fails" in lines
    code, lines, _ = run(capsys, "replay", "--file", report)
    assert code == 0 and "fails" not in lines


def test_unknown_mutant(capsys):
    assert run(capsys, "suite", "--mutant", "nope")[0] == 2


def test_replay_needs_payloads(capsys, tmp_path):
    f = write(tmp_path, "r.json", {"reports": []})
    assert run(capsys, "replay", "--file", f)[0] == 2
