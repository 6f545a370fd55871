import json
import subprocess
import sys
from fractions import Fraction
from importlib import resources

import jsonschema
import pytest

from orbitbound import cli
from orbitbound.report import (
    CLAIMS,
    Engine,
    PaperClaim,
    claims_document,
    evaluate_claim,
    load_golden,
    render,
    render_value,
    verify_paper,
)


@pytest.fixture(scope="module")
def schema():
    doc = json.loads(resources.files("orbitbound.data").joinpath("report_schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(doc)
    return jsonschema.Draft202012Validator(doc)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


# -- subcommands ------------------------------------------------------------------------

def test_enumerate_examples(capsys, schema):
    a2 = run_json(capsys, "enumerate", "A2")
    assert [c["hw"] for c in a2["nonstandard"]] == [[3, 0]]
    e8 = run_json(capsys, "enumerate", "E8")
    assert e8["nonstandard"] == []
    b5 = run_json(capsys, "enumerate", "B5")
    assert {"hw": [0, 0, 0, 0, 1], "dimR": "64"}.items() <= b5["nonstandard"][0].items()
    for doc in (a2, e8, b5):
        schema.validate(doc)
        assert doc["schema"] == "orbitbound-report" and doc["version"] == 1


@pytest.mark.parametrize("t,h,verdict", [
    ("B7", "0,0,0,0,0,0,1", "excluded"),
    ("B3", "0,0,2", "inconclusive"),
    ("A3", "1,1,0", "excluded"),
])
def test_screen_examples(capsys, schema, t, h, verdict):
    doc = run_json(capsys, "screen", t, h, "--no-cache")
    schema.validate(doc)
    assert doc["verdict"] == verdict
    if verdict == "inconclusive":
        assert doc["survivors"] == ["s2", "z1*s2"]


def test_other_commands_validate(capsys, schema):
    for argv in (["involutions", "D4"], ["weights", "G2", "2,0"], ["scan-la", "--max-rank", "4"],
                 ["lemma-g2"], ["scan-la", "--scale", "7/3"]):
        schema.validate(run_json(capsys, *argv))


def test_lemma_document(capsys):
    doc = run_json(capsys, "lemma-g2")
    assert doc["lemmas"][0]["verdict"] == "PASS"


def test_weights_document(capsys):
    doc = run_json(capsys, "weights", "A2", "1,1")
    assert doc["dim"] == "8"
    assert sum(w["mult"] for w in doc["weights"]) == 8
    assert {"labels": [0, 0], "weight": ["0", "0", "0"], "mult": 2} in doc["weights"]


@pytest.mark.parametrize("fmt", ["csv", "text"])
def test_tabular_formats(capsys, fmt):
    code, out, _ = run(capsys, "enumerate", "G2", "--format", fmt)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split(",")[0].split()[0] == "kind"
    assert any("[2,0]" in line for line in lines)


def test_csv_claims_table(capsys):
    code, out, _ = run(capsys, "verify-paper", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "id,status,expected,computed"


# -- exit codes ------------------------------------------------------------------------

@pytest.mark.parametrize("argv", [
    ["enumerate", "X9"], ["enumerate", "B1"], ["screen", "A2", "1"], ["screen", "A2", "1,-1"],
    ["screen", "A2", "a,b"], ["bogus"], [], ["scan-la", "--max-rank", "1"], ["enumerate", "A2", "--budget", "0"],
    ["enumerate", "A2", "--format", "xml"], ["verify-paper", "--golden", "/nonexistent/golden.json"],
])
def test_usage_errors(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2 and out == ""


def test_budget_exit_code(capsys):
    code, out, err = run(capsys, "weights", "E8", "1,0,0,0,0,0,0,0", "--budget", "100")
    assert code == 3 and out == "" and "3875" in err
    code, _, err = run(capsys, "screen", "E8", "1,0,0,0,0,0,0,0", "--budget", "100", "--no-cache")
    assert code == 3


def test_lemma_tabular(capsys):
    code, out, _ = run(capsys, "lemma-g2", "--format", "csv")
    assert code == 0
    rows = out.splitlines()[1:]
    assert len(rows) == 6 and all(r.endswith(",true") for r in rows)


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0 and "verify-paper" in out


def test_mismatch_exit_code(capsys, tmp_path):
    golden = load_golden()
    golden["claims"] = [c for c in golden["claims"] if c["id"] in ("dim.su3.sym3", "g2.f")]
    golden["claims"][0]["expected"] = 21
    p = tmp_path / "golden.json"
    p.write_text(json.dumps(golden))
    code, out, _ = run(capsys, "verify-paper", "--golden", str(p))
    assert code == 1
    doc = json.loads(out)
    assert doc["summary"] == {"match": 1, "mismatch": 1, "flagged-discrepancy": 0}


def test_console_script_entry_point():
    out = subprocess.run([sys.executable, "-m", "orbitbound.cli", "scan-la", "--max-rank", "2", "--format", "csv"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.splitlines() == ["type,index,m,fsType", "A1,1,2,Real", "B2,1,1,Real"]


# -- golden regression -------------------------------------------------------------------

@pytest.fixture(scope="module")
def claims():
    return {c.id: c for c in verify_paper(engine=Engine())}


def test_golden_suite_has_no_mismatch(claims):
    bad = [c.to_json() for c in claims.values() if c.status == "mismatch"]
    assert not bad


def test_every_golden_claim_has_a_computation():
    ids = [c["id"] for c in load_golden()["claims"]]
    assert len(ids) == len(set(ids))
    assert set(ids) <= set(CLAIMS)


def test_flagged_claims_keep_both_numbers(claims):
    flagged = {cid: c for cid, c in claims.items() if c.status == "flagged-discrepancy"}
    assert {"inv.su8.ext3.fixed-arithmetic", "inv.su7.ext3.fixed"} <= set(flagged)
    for c in flagged.values():
        assert c.expected != c.computed and c.engine == c.computed and c.note


@pytest.mark.parametrize("cid,value", [
    ("inv.spin9.ext3.pairs", [[28, 8], [40, 20], [42, 14], [46, 18]]),
    ("inv.spin14.order2.codims", [64]),
    ("la.solutions", None),
    ("g2.f", 9),
])
def test_selected_claims(claims, cid, value):
    c = claims[cid]
    assert c.status == "match"
    if value is not None:
        assert c.computed == value


def test_evaluate_claim_statuses():
    e = Engine()
    assert evaluate_claim({"id": "g2.f", "expected": 9}, e).status == "match"
    assert evaluate_claim({"id": "g2.f", "expected": 8}, e).status == "mismatch"
    assert evaluate_claim({"id": "g2.f", "expected": 8, "discrepancy": {"engine": 9}}, e).status == \
        "flagged-discrepancy"
    assert evaluate_claim({"id": "g2.f", "expected": 8, "discrepancy": {"engine": 7}}, e).status == "mismatch"
    assert evaluate_claim({"id": "no.such.claim", "expected": 1}, e).status == "mismatch"


def test_claims_document_counts():
    doc = claims_document([PaperClaim("a", "", 1, 1, "match"), PaperClaim("b", "", 1, 2, "mismatch")])
    assert doc["summary"] == {"match": 1, "mismatch": 1, "flagged-discrepancy": 0}


# -- rendering, determinism, cache --------------------------------------------------------

def test_render_value():
    assert render_value(Fraction(6, 4)) == "3/2"
    assert render_value(Fraction(4, 2)) == "2"
    assert render_value((1, (Fraction(1, 2),))) == [1, ["1/2"]]
    assert render_value({Fraction(1, 4): 2}) == {"1/4": 2}
    with pytest.raises(TypeError):
        render_value(0.5)


def test_no_floats_in_output(capsys):
    for argv in (["screen", "D5", "0,0,1,0,0"], ["weights", "F4", "0,0,0,1"], ["involutions", "E7"]):
        out = run(capsys, *argv)[1]

        def hook(pairs):
            for _, v in pairs:
                assert not isinstance(v, float)
            return dict(pairs)

        json.loads(out, object_pairs_hook=hook, parse_float=lambda s: pytest.fail(f"float {s}"))


def test_render_rejects_nested_documents_as_csv():
    with pytest.raises(ValueError):
        render({"command": "unknown"}, "csv")


def test_verify_paper_is_deterministic(capsys, tmp_path):
    cache = str(tmp_path / "c")
    a = run(capsys, "verify-paper", "--cache-dir", cache)[1]
    b = run(capsys, "verify-paper", "--cache-dir", cache)[1]
    c = run(capsys, "verify-paper", "--no-cache")[1]
    assert a == b == c
    assert "\"flagged-discrepancy\"" in a


def test_cache_transparency(capsys, tmp_path):
    cache = str(tmp_path / "c")
    cold = run(capsys, "screen", "D5", "0,0,1,0,0", "--cache-dir", cache)[1]
    assert list((tmp_path / "c").glob("*.json"))
    warm = run(capsys, "screen", "D5", "0,0,1,0,0", "--cache-dir", cache)[1]
    none = run(capsys, "screen", "D5", "0,0,1,0,0", "--no-cache")[1]
    assert cold == warm == none


def test_cache_env_var(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("ORBITBOUND_CACHE", str(tmp_path / "env"))
    run(capsys, "weights", "B2", "1,1")
    assert list((tmp_path / "env").glob("*.json"))
