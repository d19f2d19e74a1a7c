import json

from drinfeld import APoly, SkewPoly, coords_in_skew_basis, endomorphism_ring
from drinfeld.cli import main
from drinfeld.serialize import (
    analyze_report,
    apoly_from_json,
    apoly_to_json,
    endring_report,
    field_from_json,
    field_to_json,
    module_from_json,
    module_to_json,
    render_text,
)

from conftest import get_tower


EX38_FIELD = {"p": 2, "e": 1, "h": [0, 1], "n": 4, "g": [1, 1, 0, 0, 1]}
EX38_MODULE = {
    "field": EX38_FIELD,
    # phi_T = t + t^3 tau^2 + tau^3 in coefficient vectors over F_2
    "phi_T": [[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [1, 0, 0, 0]],
}


def test_field_json_roundtrip():
    tower = field_from_json(EX38_FIELD)
    assert field_to_json(tower) == EX38_FIELD
    assert tower.q == 2 and tower.n == 4


def test_field_json_roundtrip_e2():
    tower = get_tower("f16e2")
    data = field_to_json(tower)
    assert isinstance(data["g"][0], list)  # arrays-of-arrays over F_p
    again = field_from_json(data)
    assert field_to_json(again) == data


def test_module_json_roundtrip(rank3_example):
    data = module_to_json(rank3_example)
    again = module_from_json(data)
    assert again == rank3_example
    assert module_to_json(again) == data


def test_module_json_matches_handwritten(rank3_example):
    assert module_from_json(EX38_MODULE) == rank3_example


def test_apoly_json_roundtrip():
    fq = get_tower("f2").fq
    a = APoly(fq, [1, 1, 0, 0, 1])
    assert apoly_from_json(fq, apoly_to_json(a)) == a


def test_analyze_report_fields(rank3_example):
    rep = analyze_report(rank3_example)
    assert rep["m"] == "x^3+T*x^2+x+(T^4+T+1)"
    assert rep["s"] == 3 and rep["NK"] == 4 and rep["H"] == 1
    assert rep["locally_maximal"] and rep["end_ring_commutative"]
    assert rep["p_char"] == "T^4+T+1"
    text = render_text(rep)
    assert "locally_maximal: True" in text


def test_endring_report(rank3_example):
    rep = endring_report(rank3_example)
    assert rep["rank"] == 3
    assert rep["index_over_minimal"] == "T+1"
    assert rep["gorenstein"] is False
    assert rep["gorenstein_at"]["T+1"] is False
    assert rep["basis"][0]["skew"] == "1"


def _write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def test_cli_analyze(tmp_path, capsys):
    mod = _write(tmp_path, "mod.json", EX38_MODULE)
    rc = main(["analyze", "--input", mod])
    out = capsys.readouterr().out
    assert rc == 0
    data = json.loads(out)
    assert data["m"] == "x^3+T*x^2+x+(T^4+T+1)"


def test_cli_endring_then_ideal_act(tmp_path, capsys):
    mod = _write(tmp_path, "mod.json", EX38_MODULE)
    rc = main(["endring", "--input", mod, "--format", "json"])
    assert rc == 0
    endrep = json.loads(capsys.readouterr().out)
    assert endrep["rank"] == 3

    # the ideal (e2, e3) expressed against the emitted basis ordering
    phi = module_from_json(EX38_MODULE)
    end = endomorphism_ring(phi)
    tower = phi.tower
    t = tower.gen()
    e2 = SkewPoly(tower, [tower.one, tower.zero, tower.zero, tower.zero, tower.one])
    e3 = SkewPoly(
        tower,
        [t**3 + t**2 + t, tower.zero, t**3 + t**2 + tower.one, t**3 + t, t**3 + t**2, tower.one],
    )
    gens = []
    for e in (e2, e3):
        coords = coords_in_skew_basis(phi, end.skew_basis, e)
        gens.append([apoly_to_json(c) for c in coords])
    ideal = _write(tmp_path, "ideal.json", {"generators": gens})

    rc = main(["ideal-act", "--input", mod, "--ideal", ideal])
    assert rc == 0
    report = json.loads(capsys.readouterr().out)
    assert report["u_degree"] == 3
    assert report["kernel"] is False
    assert report["witness"] == ["T^2+1", "0", "0"]  # (T+1)^2 over F_2
    assert report["ideal_norm"] == "T^3+T^2+T+1"

    rc = main(["kernel-test", "--input", mod, "--ideal", ideal])
    assert rc == 0
    verdict = json.loads(capsys.readouterr().out)
    assert verdict["kernel"] is False


def test_cli_census_deterministic(tmp_path):
    spec = {"field": {"p": 2, "e": 1, "h": [0, 1], "n": 1, "g": [1, 1]}, "rank": 2}
    inp = _write(tmp_path, "census.json", spec)
    out1 = tmp_path / "a.jsonl"
    out2 = tmp_path / "b.jsonl"
    assert main(["census", "--input", inp, "--out", str(out1)]) == 0
    assert main(["census", "--input", inp, "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    lines = [json.loads(line) for line in out1.read_text().splitlines()]
    kinds = {rec["record"] for rec in lines}
    assert kinds == {"header", "class", "validation"}
    header = lines[0]
    assert header["schema"] == 1 and header["rank"] == 2
    validations = [rec for rec in lines if rec["record"] == "validation"]
    assert all(
        v["ideal_class_action"].get("bijective", True) for v in validations
    )


def test_cli_paper_examples(tmp_path, capsys):
    rc = main(["paper-examples", "--format", "text"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "[PASS]" in out and "[DISCREPANCY]" in out and "[FAIL]" not in out


def test_cli_input_errors(tmp_path, capsys):
    assert main(["analyze", "--input", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["analyze", "--input", str(bad)]) == 2
    reducible = _write(
        tmp_path,
        "red.json",
        {"field": {"p": 2, "e": 1, "h": [0, 1], "n": 2, "g": [1, 0, 1]}, "phi_T": [[0], [1]]},
    )
    assert main(["analyze", "--input", reducible]) == 2
    capsys.readouterr()


def test_cli_jobs_validation(tmp_path, capsys):
    mod = _write(tmp_path, "mod.json", EX38_MODULE)
    assert main(["analyze", "--input", mod, "--jobs", "0"]) == 2
    capsys.readouterr()
