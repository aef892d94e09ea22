import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from toriented.cli import main
from toriented.io import SCHEMA_DIR, verdict_from_json

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def schema(name):
    return json.loads((SCHEMA_DIR / name).read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc) if not isinstance(doc, str) else doc)
    return str(p)


def analyze_json(capsys, kind, path, *flags):
    code, out, err = run(capsys, "analyze", kind, "--input", path, "--format", "json", *flags)
    return code, (json.loads(out) if out else None), err


def test_small_cover_orientable(capsys, tmp_path):
    code, rep, _ = analyze_json(capsys, "small-cover", write(tmp_path, "a.json", {"n": 2, "generators": [[1, 1]]}))
    assert code == 0
    assert rep["results"]["small_cover"]["components"]["count"] == 2
    jsonschema.validate(rep, schema("report.json"))


def test_small_cover_non_orientable_text(capsys, tmp_path):
    path = write(tmp_path, "a.json", {"n": 2, "generators": [[1, 0], [0, 1], [1, 1]]})
    code, out, _ = run(capsys, "analyze", "small-cover", "--input", path)
    assert code == 1
    assert "NON-orientable" in out and "odd dependence" in out and "rows [0, 1, 2]" in out


@pytest.mark.parametrize("doc, needle", [
    ({"n": 2, "generators": [[0, 0]]}, "is zero"),
    ({"n": 2, "generators": [[1, 0, 1]]}, "DimensionMismatchError"),
    ("{not json", "malformed JSON"),
    ({"n": 2, "generators": [[2, 0]]}, "expected 0 or 1"),
])
def test_small_cover_errors(capsys, tmp_path, doc, needle):
    code, out, err = run(capsys, "analyze", "small-cover", "--input", write(tmp_path, "bad.json", doc))
    assert code == 2 and needle in err and out == ""


def test_missing_file(capsys):
    code, _, err = run(capsys, "analyze", "fan", "--input", "/nonexistent.json")
    assert code == 2 and "cannot read" in err


@pytest.mark.parametrize("sample, code, count", [
    ("fan_p1.json", 0, 1),
    ("fan_p2.json", 1, 1),
    ("fan_p1xp1.json", 0, 1),
])
def test_fans(capsys, sample, code, count):
    c, rep, _ = analyze_json(capsys, "fan", str(SAMPLES / sample), "--oracle")
    assert c == code
    assert rep["results"]["toric"]["components"]["count"] == count
    assert rep["results"]["oracle"]["toric"]["agree"]


def test_zero_ray(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", "fan", "--input", write(tmp_path, "f.json", {"rays": [[0, 0], [1, 0]]}))
    assert code == 2 and "zero vector" in err


def test_polytope_modes(capsys):
    code, rep, _ = analyze_json(capsys, "polytope", str(SAMPLES / "cross_polytope_2.json"), "--lower-bound", "--oracle")
    assert code == 0
    lb = rep["results"]["lower_bound"]
    assert lb["applicable"] and lb["divisibility"] == 4
    jsonschema.validate(rep, schema("report.json"))

    code, rep, _ = analyze_json(capsys, "polytope", str(SAMPLES / "reeve_simplex.json"), "--lower-bound")
    assert code == 1
    assert rep["results"]["lower_bound"]["span"]["index"] == 2
    assert "renormalizer" in rep["results"]["lower_bound"]["span"]

    tri = str(SAMPLES / "triangle_facets.json")
    assert analyze_json(capsys, "polytope", tri)[0] == 1
    assert analyze_json(capsys, "polytope", tri, "--spherical")[0] == 0


def test_polytope_errors(capsys, tmp_path):
    flat = write(tmp_path, "flat.json", {"vertices": [[0, 0], [1, 1], [2, 2]]})
    code, _, err = run(capsys, "analyze", "polytope", "--input", flat)
    assert code == 2 and "DegeneracyError" in err
    redundant = write(tmp_path, "red.json", {"facets": [
        {"normal": [1, 0], "offset": 0}, {"normal": [0, 1], "offset": 0},
        {"normal": [-1, -1], "offset": -1}, {"normal": [-1, 0], "offset": -5}]})
    code, _, err = run(capsys, "analyze", "polytope", "--input", redundant)
    assert code == 2 and "not a facet" in err
    code, _, err = run(capsys, "analyze", "polytope", "--input", str(SAMPLES / "square.json"),
                       "--lower-bound")
    assert code == 0


def test_posets(capsys):
    code, rep, _ = analyze_json(capsys, "poset", str(SAMPLES / "poset_chain2.json"), "--oracle")
    assert code == 1
    r = rep["results"]
    assert r["cross_validation_agree"] and r["theorem6_ranked_mod2"] and not r["theorem4_all_chains_odd"]
    assert analyze_json(capsys, "poset", str(SAMPLES / "poset_chain2.json"), "--spherical")[0] == 0
    assert analyze_json(capsys, "poset", str(SAMPLES / "poset_chain3.json"))[0] == 0
    code, rep, _ = analyze_json(capsys, "poset", str(SAMPLES / "poset_nonranked.json"), "--spherical")
    assert code == 1
    code, out, _ = run(capsys, "analyze", "poset", "--input", str(SAMPLES / "poset_antichain3.json"))
    assert code == 0 and "maximal chains" in out


def test_cyclic_poset(capsys, tmp_path):
    path = write(tmp_path, "c.json", {"elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]})
    code, _, err = run(capsys, "analyze", "poset", "--input", path)
    assert code == 2 and "cycle" in err


def test_reports_deterministic_and_round_trip(capsys):
    for sample in sorted(SAMPLES.glob("*.json")):
        from toriented.io import detect_kind, load_json
        try:
            kind = detect_kind(load_json(sample))
        except Exception:
            continue
        first = run(capsys, "analyze", kind, "--input", str(sample), "--format", "json")
        second = run(capsys, "analyze", kind, "--input", str(sample), "--format", "json")
        if first[0] == 2:
            continue
        a, b = json.loads(first[1]), json.loads(second[1])
        a.pop("timing_ms"), b.pop("timing_ms")
        assert a == b
        assert json.loads(json.dumps(a)) == a
        jsonschema.validate({**a, "timing_ms": 0}, schema("report.json"))
        for key in ("small_cover", "toric", "spherical"):
            if key in a["results"]:
                assert verdict_from_json(a["results"][key]["verdict"]).validate()


def test_input_samples_match_schemas():
    from toriented.io import detect_kind, load_json
    names = {"small-cover": "small_cover.json", "fan": "fan.json", "polytope": "polytope.json", "poset": "poset.json"}
    for sample in SAMPLES.glob("*.json"):
        doc = load_json(sample)
        jsonschema.validate(doc, schema(names[detect_kind(doc)]))


def test_gen(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "cross-polytope", "-n", "2")
    doc = json.loads(out)
    assert code == 0 and len(doc["vertices"]) == 4
    jsonschema.validate(doc, schema("polytope.json"))
    code, out, _ = run(capsys, "gen", "cube", "-n", "3")
    assert len(json.loads(out)["vertices"]) == 8
    chain3 = write(tmp_path, "chain3.json", {"elements": [1, 2, 3], "covers": [[1, 2], [2, 3]]})
    code, out, _ = run(capsys, "gen", "order-polytope", "--poset", chain3)
    doc = json.loads(out)
    assert len(doc["facets"]) == 4
    jsonschema.validate(doc, schema("polytope.json"))
    # the generated file analyzes as an orientable polytope (3-chain)
    code, _, _ = run(capsys, "analyze", "polytope", "--input", write(tmp_path, "op.json", doc))
    assert code == 0
    assert run(capsys, "gen", "cube")[0] == 2


def test_oracle_verify_corpus(capsys):
    files = [str(p) for p in sorted(SAMPLES.glob("*.json")) if "zero" not in p.name]
    code, out, _ = run(capsys, "oracle", "verify", "--input", *files)
    assert code == 0 and "all agree" in out and "DISAGREE" not in out


def test_oracle_verify_exhaustive(capsys):
    code, out, _ = run(capsys, "oracle", "verify", "--exhaustive", "3", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["all_agree"]
    assert rep["rows"][0]["cases"] == 128


def test_oracle_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("TORIENTED_ORACLE_CAP", "1")
    code, _, err = run(capsys, "analyze", "fan", "--input", str(SAMPLES / "fan_p2.json"), "--oracle")
    assert code == 2 and "ResourceLimitError" in err


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "toriented", "analyze", "fan", "--input",
                          str(SAMPLES / "fan_p2.json")], capture_output=True, text=True)
    assert out.returncode == 1 and "NON-orientable" in out.stdout
