import json
import subprocess
import sys

import pytest

from dualscope.cli import (
    EXIT_DEGENERATE,
    EXIT_FIXTURE,
    EXIT_MALFORMED,
    EXIT_OK,
    SVG_BANNER,
    MalformedInput,
    packaged_corpus,
    parse_record,
    run,
)

RAMPHOID = {"name": "ramphoid", "role": "dual", "parametrization": [["1"], ["0", "0", "1"], ["0", "1", "0", "0", "1"]]}
NODAL = {"name": "nodal", "parametrization": [["0", "1"], ["0", "0", "0", "1"], ["-1", "0", "1"]]}
CUSPIDAL = {"name": "cusp", "role": "dual", "parametrization": [["0", "0", "-3"], ["0", "0", "0", "2"], ["-1"]]}


def write(tmp_path, obj, name="in.json"):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_packaged_corpus_size():
    recs = packaged_corpus()
    assert len(recs) >= 10
    assert len({r.name for r in recs}) == len(recs)


def test_parse_record_errors():
    with pytest.raises(MalformedInput):
        parse_record({"parametrization": [["1"], ["1"], ["1"]]})
    with pytest.raises(MalformedInput):
        parse_record({"name": "x", "parametrization": [[0.5], ["1"], ["1"]]})
    with pytest.raises(MalformedInput):
        parse_record({"name": "x", "parametrization": [["1/0"], ["1"], ["1"]]})
    with pytest.raises(MalformedInput):
        parse_record({"name": "x"})
    with pytest.raises(MalformedInput):
        parse_record({"name": "x", "role": "both", "parametrization": [["1"], ["0", "1"], ["0", "0", "1"]]})


def test_rationals_parse_exactly():
    rec = parse_record({"name": "x", "parametrization": [["1/3"], ["0", "-2/7"], ["0", "0", "5"]]})
    assert rec.param.g[0].coeff(0) == pytest.approx(1 / 3) and str(rec.param.g[0].coeff(0)) == "1/3"


def test_dualize_command(tmp_path, capsys):
    code, out, _ = call(capsys, "dualize", write(tmp_path, RAMPHOID))
    assert code == EXIT_OK
    res = json.loads(out)
    assert res["parametrization"] == [["0", "0", "-1", "0", "0", "2"], ["-1", "0", "0", "-4"], ["0", "2"]]
    assert res["role"] == "primal" and res["degree"] == 5


def test_dualize_nodal_cubic_gives_three_cusps(tmp_path, capsys):
    code, out, _ = call(capsys, "dualize", write(tmp_path, NODAL))
    dual = json.loads(out)
    rec = {"name": "d", "role": "dual", "parametrization": dual["parametrization"]}
    assert dual["degree"] == 4
    # read as C itself, the dual quartic shows the three cusps
    code, out, _ = call(capsys, "inventory", write(tmp_path, dict(rec, role="primal"), "p.json"))
    assert json.loads(out)["kappa"] == 3


def test_implicitize_command(tmp_path, capsys):
    code, out, _ = call(capsys, "implicitize", write(tmp_path, RAMPHOID))
    res = json.loads(out)
    # -((y0 y2 - y1^2)^2 - y0^3 y1), normalized so the leading exponent has a positive sign
    assert res["equation"] == "y0^3*y1 - y0^2*y2^2 + 2*y0*y1^2*y2 - y1^4"
    code, out, _ = call(capsys, "implicitize", "--format", "text", write(tmp_path, RAMPHOID))
    assert out.startswith("ramphoid: ") and out.rstrip().endswith("= 0")


def test_inventory_command(tmp_path, capsys):
    code, out, _ = call(capsys, "inventory", write(tmp_path, NODAL))
    inv = json.loads(out)
    assert (inv["d"], inv["delta"], inv["kappa"]) == (3, 1, 0)
    assert inv["genus_relation"]["remainder"] == 0
    assert len(inv["artifacts"]) == 2


def test_declared_inventory_command(tmp_path, capsys):
    rec = {"name": "sextic", "declared_inventory": {"d": 6, "g": 1, "mults": [2] * 9, "immersed_dual": True}}
    code, out, _ = call(capsys, "inventory", write(tmp_path, rec))
    assert code == EXIT_OK and json.loads(out)["d_star"] == 3


def test_classify_command(tmp_path, capsys):
    code, out, _ = call(capsys, "classify", write(tmp_path, RAMPHOID))
    assert code == EXIT_OK
    res = json.loads(out)
    verdicts = {j["target"]: j["verdict"] for j in res["judgments"]}
    assert verdicts["complement-of-C-and-artifacts"] == "AlmostCHyperbolic"
    for j in res["judgments"]:
        for g in j["gates"]:
            assert set(g) == {"name", "satisfied", "evidence", "citation"}


def test_classify_text(tmp_path, capsys):
    code, out, _ = call(capsys, "classify", "--format", "text", write(tmp_path, CUSPIDAL))
    assert "DegenerateAlongPencil" in out and "[+] monomial-pencil" in out


def test_several_records_give_a_list(tmp_path, capsys):
    code, out, _ = call(capsys, "dualize", write(tmp_path, [NODAL, RAMPHOID]))
    assert [r["name"] for r in json.loads(out)] == ["nodal", "ramphoid"]


def test_output_is_byte_identical(tmp_path, capsys):
    path = write(tmp_path, {"records": [NODAL, CUSPIDAL]})
    outs = []
    for k in range(2):
        dest = tmp_path / f"out{k}.json"
        assert run(["classify", path, "--out", str(dest)]) == EXIT_OK
        outs.append(dest.read_bytes())
    assert outs[0] == outs[1]
    assert outs[0].endswith(b"\n")


def test_out_flag_writes_a_file(tmp_path, capsys):
    dest = tmp_path / "dual.json"
    code, out, _ = call(capsys, "dualize", write(tmp_path, NODAL), "--out", str(dest))
    assert out == "" and json.loads(dest.read_text())["degree"] == 4


def test_malformed_input_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert call(capsys, "dualize", str(bad))[0] == EXIT_MALFORMED
    assert call(capsys, "dualize", str(tmp_path / "missing.json"))[0] == EXIT_MALFORMED
    assert call(capsys, "dualize", write(tmp_path, {"name": "x", "parametrization": [[1.5], ["1"], ["1"]]}))[0] == EXIT_MALFORMED
    assert call(capsys, "frobnicate")[0] == EXIT_MALFORMED
    assert call(capsys, "sketch", write(tmp_path, CUSPIDAL), "--chart", "7")[0] == EXIT_MALFORMED


def test_inconsistent_inventory_exit_code(tmp_path, capsys):
    rec = {"name": "bad", "declared_inventory": {"d": 6, "g": 1, "mults": [2] * 9, "n": 5}}
    code, _, err = call(capsys, "classify", write(tmp_path, rec))
    assert code == EXIT_MALFORMED and "class formula" in err


def test_degenerate_and_improper_exit_codes(tmp_path, capsys):
    line = {"name": "line", "parametrization": [["0", "1"], ["1"], ["1", "1"]]}
    assert call(capsys, "dualize", write(tmp_path, line))[0] == EXIT_DEGENERATE
    double = {"name": "double", "parametrization": [["0", "0", "1"], ["0", "0", "0", "0", "1"], ["1"]]}
    assert call(capsys, "classify", write(tmp_path, double))[0] == EXIT_DEGENERATE


def test_undetermined_is_success(tmp_path, capsys):
    rec = {"name": "q", "role": "dual",
           "parametrization": [["2", "-1", "3", "1", "-2", "1"], ["1", "3", "-2", "0", "1"], ["1"]]}
    code, out, _ = call(capsys, "classify", write(tmp_path, rec))
    assert code == EXIT_OK
    assert {j["verdict"] for j in json.loads(out)["judgments"]} == {"Undetermined"}


def test_corpus_run_failure_exit_code(tmp_path, capsys):
    rec = dict(NODAL, expected={"complement-of-C": {"verdict": "CHyperbolic"}})
    code, out, _ = call(capsys, "corpus", "run", write(tmp_path, rec))
    assert code == EXIT_FIXTURE
    res = json.loads(out)
    assert res["failed"] == 1 and res["records"][0]["mismatches"]


def test_corpus_run_passes_on_a_subset(tmp_path, capsys):
    recs = [dict(NODAL, expected={"complement-of-C": {"verdict": "SuperLiouville"}, "dual_degree": 4,
                                  "inventory": {"delta": 1}})]
    code, out, _ = call(capsys, "corpus", "run", "--format", "text", write(tmp_path, recs))
    assert code == EXIT_OK and out.endswith("1/1 passed\n")


def test_report_command(tmp_path, capsys):
    code, out, _ = call(capsys, "report", write(tmp_path, [NODAL, CUSPIDAL]))
    rows = json.loads(out)["records"]
    assert rows[0]["delta"] == 1
    assert rows[1]["verdicts"]["complement-of-C-and-artifacts"]["verdict"] == "DegenerateAlongPencil"


def test_sketch_of_the_cuspidal_cubic(tmp_path, capsys):
    code, out, _ = call(capsys, "sketch", write(tmp_path, CUSPIDAL), "--chart", "2", "--range", "-3", "3",
                        "--samples", "400")
    assert code == EXIT_OK
    assert out.startswith('<?xml version="1.0" encoding="UTF-8"?>\n<!-- ' + SVG_BANNER + " -->")
    assert "<path d=" in out
    assert "x2 = 0 (line at infinity)" in out
    assert out.rstrip().endswith("</svg>")


def test_sketch_draws_affine_artifact_lines(tmp_path, capsys):
    code, out, _ = call(capsys, "sketch", write(tmp_path, CUSPIDAL), "--chart", "0")
    assert code == EXIT_OK and "<line " in out


def test_sketch_is_deterministic(tmp_path, capsys):
    path = write(tmp_path, NODAL)
    a = call(capsys, "sketch", path)[1]
    b = call(capsys, "sketch", path)[1]
    assert a == b


def test_max_degree_env_var(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("DUALSCOPE_MAX_DEGREE", "3")
    code, out, _ = call(capsys, "classify", write(tmp_path, RAMPHOID))
    assert code == EXIT_OK
    jcl = json.loads(out)["judgments"][1]
    assert any(g["name"] == "cusp-monomiality" and not g["satisfied"] for g in jcl["gates"])


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dualscope.cli", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "sketch" in proc.stdout
