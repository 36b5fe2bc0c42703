import json
import subprocess
import sys

import pytest

from imlkit.cli import main
from imlkit.fixtures import delta_violation_model, nabla_undefinable_repaired_pair
from imlkit.io import dump_brmodel, dump_nmodel, load_nmodel
from imlkit.birel import nbhd_to_birel


@pytest.fixture
def files(tmp_path):
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)

    m1, m2 = nabla_undefinable_repaired_pair()
    return {
        "delta": write("delta.json", dump_nmodel(delta_violation_model())),
        "m1": write("m1.json", dump_nmodel(m1)),
        "m2": write("m2.json", dump_nmodel(m2)),
        "br": write("br.json", dump_brmodel(nbhd_to_birel(m1))),
        "id": write("id.json", {"map": {"w": "w", "v": "v", "x": "x"}}),
        "bad": write("bad.json", {"worlds": ["w"], "min": {"w": []}, "max": {"w": ["w"]}}),
        "write": write,
    }


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    try:
        return code, json.loads(out)
    except json.JSONDecodeError:
        return code, out


def test_parse(capsys):
    code, out = run(capsys, "parse", "delta p->p")
    assert code == 0 and out["formula"] == "delta p -> p" and out["degree"] == 2


def test_parse_error(capsys):
    code, out = run(capsys, "parse", "p &")
    assert code == 2 and out["error"] == "FormulaSyntaxError" and out["offset"] == 3 and out["expected"]


def test_eval(capsys, files):
    code, out = run(capsys, "eval", files["delta"], "delta p", "--world", "v")
    assert code == 0 and out["truth"] == {"w": True, "v": False, "z": False} and out["value"] is False


def test_eval_unknown_world(capsys, files):
    code, out = run(capsys, "eval", files["delta"], "p", "--world", "nowhere")
    assert code == 2 and out["error"] == "KeyError"


def test_check_frame(capsys, files):
    code, out = run(capsys, "check-frame", files["delta"], "--conditions", "base,arrow,delta")
    assert code == 1
    assert out["conditions"]["delta"] == {"ok": False, "witness": ["w", "v"]}
    code, out = run(capsys, "check-frame", files["m1"], "--conditions", "base,arrow,delta,f1")
    assert code == 0 and out["ok"]
    code, _ = run(capsys, "check-frame", files["m1"], "--conditions", "nope")
    assert code == 2


def test_check_frame_reports_base_failures(capsys, files):
    code, out = run(capsys, "check-frame", files["bad"], "--conditions", "base")
    assert code == 1 and out["conditions"]["base"]["ok"] is False


def test_check_heredity(capsys, files):
    assert run(capsys, "check-heredity", files["delta"])[0] == 0
    path = files["write"]("h.json", {
        "semantics": "intuitionistic", "worlds": ["w", "v"],
        "min": {"w": ["w", "v"], "v": ["v"]}, "max": {"w": ["w", "v"], "v": ["v"]}, "valuation": {"p": ["w"]},
    })
    code, out = run(capsys, "check-heredity", path)
    assert code == 1 and out["violation"] == {"check": "heredity", "witness": ["w", "v"], "atom": "p"}


def test_valid(capsys, files):
    assert run(capsys, "valid", files["delta"], "delta p -> p")[0] == 0
    code, out = run(capsys, "valid", files["delta"], "delta p")
    assert code == 1 and out["failing"] == ["v", "z"]


def test_countermodel(capsys, files):
    code, out = run(capsys, "countermodel", "delta p -> delta delta p", "--logic", "IML1", "--max-worlds", "3")
    assert code == 1 and out["status"] == "countermodel"
    path = files["write"]("cm.json", out["model"])
    assert load_nmodel(path).frame.n <= 3
    code, out = run(capsys, "countermodel", "delta p -> p", "--logic", "IML1", "--max-worlds", "2")
    assert code == 0 and out["status"] == "none_within_bound"
    assert run(capsys, "countermodel", "p", "--logic", "nope")[0] == 2


def test_convert_round_trip(capsys, files):
    code, out = run(capsys, "convert", files["m1"], "--to", "birel")
    assert code == 0 and ["w", "v"] in out["r"]
    path = files["write"]("conv.json", out)
    code, back = run(capsys, "convert", path, "--to", "nbhd")
    assert code == 0 and back == json.loads(open(files["m1"]).read())
    assert run(capsys, "convert", files["delta"], "--to", "birel")[0] == 2


def test_filtrate(capsys, files):
    code, out = run(capsys, "filtrate", files["br"], "alpha")
    assert code == 0 and sorted(set(out["classes"].values())) == ["w", "x"]


def test_bisim_and_morphism(capsys, files):
    code, out = run(capsys, "bisim", files["m1"], files["m1"], "--n", "2")
    assert code == 0 and ["w", "w"] in out["bisimulation"] and len(out["chain"]) == 3
    code, out = run(capsys, "morphism", files["m1"], files["m1"], files["id"])
    assert code == 0 and out["ok"]
    code, out = run(capsys, "morphism", files["m1"], files["m2"], files["id"])
    assert code == 1 and out["violation"] == {"check": "max_image", "witness": ["w", "w"]}


def test_topology(capsys, files):
    code, out = run(capsys, "topology", files["m1"], "--world", "v")
    assert code == 0 and out["opens"] == [[], ["x"], ["v", "x"]]
    code, out = run(capsys, "topology", files["m1"], "--world", "w", "--variant", "alt")
    assert code == 0 and out["variant"] == "alt"


def test_translate(capsys):
    code, out = run(capsys, "translate", "p -> q")
    assert code == 0 and out["output"] == "box (box p -> box q)"
    code, out = run(capsys, "translate", "delta p", "--literal-delta")
    assert out["output"] == "delta p"


def test_logics(capsys):
    code, out = run(capsys, "logics")
    assert code == 0 and [d["name"] for d in out["logics"]][:2] == ["IML1", "IML2"]


def test_human_output(capsys, files):
    code, out = run(capsys, "eval", files["delta"], "delta p", "--human")
    assert code == 0 and out.splitlines() == ["w: true", "v: false", "z: false"]
    code, out = run(capsys, "--human", "parse", "!p")
    assert out.strip() == "!p"


def test_missing_file_and_bad_json(capsys, tmp_path):
    assert run(capsys, "eval", str(tmp_path / "none.json"), "p")[0] == 2
    junk = tmp_path / "junk.json"
    junk.write_text("{")
    assert run(capsys, "eval", str(junk), "p")[0] == 2


def test_usage_errors(capsys):
    assert main([]) == 2
    assert main(["frobnicate"]) == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "imlkit", "parse", "p|q&r"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["formula"] == "p | q & r"
