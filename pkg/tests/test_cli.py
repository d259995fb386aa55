import json
from pathlib import Path

import pytest

from sinklab.cli import main, parse_element
from sinklab.verify import CheckResult

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def spec_path(name):
    return str(CORPUS_DIR / f"{name}.grp")


def test_build_summary(capsys):
    code, out, _ = run(capsys, "build", spec_path("S4"))
    assert code == 0
    payload = json.loads(out)
    summary = payload["results"][0]
    assert summary["order"] == 24
    assert summary["exponent"] == 12
    assert summary["nilpotent"] is False
    assert summary["fitting_index"] == 6


def test_sink_by_cycle_notation(capsys):
    code, out, _ = run(capsys, "sink", spec_path("S3"), "--element", "(1 2 3)")
    assert code == 0
    result = json.loads(out)["results"][0]
    assert result["sink"] == ["(1 2 3)", "e"]
    assert result["size_full"] == 2
    assert result["size_nontrivial"] == 1


def test_sink_by_index_and_word(capsys):
    code1, out1, _ = run(capsys, "sink", spec_path("Q8"), "--element", "1")
    code2, out2, _ = run(capsys, "sink", spec_path("Q8"), "--element", "g0")
    assert code1 == code2 == 0
    assert json.loads(out1)["results"] == json.loads(out2)["results"]


def test_gamma_a5(capsys):
    code, out, _ = run(capsys, "gamma", spec_path("A5"), "-k", "2")
    assert code == 0
    result = json.loads(out)["results"][0]
    assert result["size"] == 60
    assert result["values"] == sorted(result["values"])


def test_verify_single_check_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", spec_path("S4"), "--check", "heineken")
    assert code == 0
    results = json.loads(out)["results"]
    assert len(results) == 1
    assert results[0]["check"] == "heineken"
    assert results[0]["passed"] is True


def test_verify_all_checks(capsys):
    code, out, _ = run(capsys, "verify", spec_path("frobenius_7_3_2"))
    assert code == 0
    results = json.loads(out)["results"]
    names = [r["check"] for r in results]
    assert names == [
        "heineken",
        "centralizer_power",
        "m1_iff_nilpotent",
        "m1_iff_nilpotent",
        "sink_oracle",
        "orbit_lemma",
    ]
    assert all(r["passed"] for r in results)


def test_verify_failed_check_exits_one(capsys, monkeypatch):
    import sinklab.cli as cli

    def fake_check(G):
        return CheckResult("heineken", G.name, False, counterexample={"g": 1})

    monkeypatch.setattr(cli, "check_heineken", fake_check)
    code, out, _ = run(capsys, "verify", spec_path("S3"), "--check", "heineken")
    assert code == 1
    result = json.loads(out)["results"][0]
    assert result["passed"] is False
    assert result["counterexample"]["g"]["index"] == 1


def test_parse_error_exit_two_names_line(capsys, tmp_path):
    bad = tmp_path / "bad.grp"
    bad.write_text("group perm\ndegree 3\ngen (1 2\n", encoding="utf-8")
    code, _, err = run(capsys, "build", str(bad))
    assert code == 2
    assert "line 3" in err


def test_cap_exceeded_exit_three(capsys, tmp_path):
    spec = tmp_path / "big.grp"
    spec.write_text("group construct symmetric 5\n", encoding="utf-8")
    code, _, err = run(capsys, "build", str(spec), "--cap", "100")
    assert code == 3
    assert "cap" in err.lower()


def test_env_cap_flag_precedence(capsys, tmp_path, monkeypatch):
    spec = tmp_path / "c30.grp"
    spec.write_text("group construct cyclic 30\n", encoding="utf-8")
    monkeypatch.setenv("SINKLAB_CAP", "10")
    code, _, _ = run(capsys, "build", str(spec))
    assert code == 3
    code, out, _ = run(capsys, "build", str(spec), "--cap", "50")
    assert code == 0
    assert json.loads(out)["results"][0]["order"] == 30


def test_bad_element_exit_two(capsys):
    for element in ("(9 9)", "nonsense", "99", "g0^x"):
        code, _, err = run(capsys, "sink", spec_path("S3"), "--element", element)
        assert code == 2, element
        assert err


def test_element_word_addressing(s3):
    assert parse_element(s3, "e") == 0
    assert parse_element(s3, "0") == 0
    a, b = s3.generators
    assert parse_element(s3, "g0*g1") == s3.mul(a, b)
    assert parse_element(s3, "g0^-1") == s3.inv(a)
    assert parse_element(s3, "(1 3 2)") == s3.mul(a, a)


def test_scan_deterministic(capsys, tmp_path):
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(capsys, "scan", "--corpus", str(CORPUS_DIR), "-k", "2", "--out", str(out1))[0] == 0
    assert run(capsys, "scan", "--corpus", str(CORPUS_DIR), "-k", "2", "--out", str(out2))[0] == 0
    assert out1.read_bytes() == out2.read_bytes()
    header = out1.read_text(encoding="utf-8").splitlines()[0]
    assert header == "group,n,k,mFull,mNontrivial,fittingIndex,residualOrder,quotientExponent"


def test_scan_collects_build_errors(capsys, tmp_path):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    (corpus / "ok.grp").write_text("group construct cyclic 3\n", encoding="utf-8")
    (corpus / "broken.grp").write_text("group construct frobenius 7 3 3\n", encoding="utf-8")
    code, out, err = run(capsys, "scan", "--corpus", str(corpus))
    assert code == 0
    assert "ok,3,2" in out
    assert "broken" in err


def test_contrast_table(capsys):
    code, out, _ = run(capsys, "contrast", "-p", "3", "--ranks", "1..3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4
    assert lines[1].startswith("inversion_extension_3_1,6,2,2,1,2,3,2")


def test_report_bodies_reproducible(capsys):
    _, out1, _ = run(capsys, "verify", spec_path("S3"), "--check", "heineken")
    _, out2, _ = run(capsys, "verify", spec_path("S3"), "--check", "heineken")
    body1, body2 = json.loads(out1), json.loads(out2)
    body1.pop("timing_ms"), body2.pop("timing_ms")
    assert json.dumps(body1, sort_keys=True) == json.dumps(body2, sort_keys=True)
