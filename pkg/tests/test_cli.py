import json

from lcymirror.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_report_k8(capsys):
    code, out, _ = run(capsys, "report", "k8")
    rep = json.loads(out)
    assert code == 0
    assert rep["qbar"] == {"free_rank": 1, "torsion": []}
    assert rep["pi1_trivial"] is True
    assert len(rep["atf"]["nodes"]) == 4


def test_report_pentagon(capsys):
    rep = json.loads(run(capsys, "report", "pentagon")[1])
    assert rep["qbar"]["free_rank"] == 0 and len(rep["atf"]["nodes"]) == 2


def test_report_deterministic(capsys):
    a = run(capsys, "report", "k7")[1]
    b = run(capsys, "report", "k7")[1]
    assert a == b
    assert all(not isinstance(v, float) for v in json.loads(a).values())


def test_malformed_rays(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"rays": [[1, 0], [0]], "m": [0, 0]}')
    code, _, err = run(capsys, "report", str(p))
    assert code == 2 and json.loads(err)["error"] == "schema"
    p.write_text('{"rays": [[1, 0], [0, 1], [-1, -1]],\n "m": [0, 0, 0,]}')
    code, _, err = run(capsys, "validate", str(p))
    assert code == 2 and "line 2" in json.loads(err)["message"]


def test_run_pentagon(capsys):
    code, out, _ = run(capsys, "run", "pentagon", "pentagon")
    rep = json.loads(out)
    assert code == 0 and rep["closed"] and rep["kauto_is_identity"] and rep["compact_support"]
    assert all(s["certificate"]["conjugation_ok"] for s in rep["steps"] if "certificate" in s)


def test_run_involution(capsys):
    rep = json.loads(run(capsys, "run", "pentagon", "involution")[1])
    assert rep["transition_is_identity"] and rep["kauto_is_identity"]


def test_run_illegal_move(capsys, tmp_path):
    p = tmp_path / "s.json"
    p.write_text(json.dumps({"steps": [{"type": "elementary", "i": 0, "j": 2},
                                       {"type": "elementary", "i": 0, "j": 2}]}))
    code, _, err = run(capsys, "run", "pentagon", str(p))
    e = json.loads(err)
    assert code == 4 and e["step"] == 1 and e["cause"] == "no_interior_blowup"


def test_run_not_closed(capsys):
    code, out, _ = run(capsys, "run", "hirzebruch2", "hirzebruch_step")
    assert code == 0 and json.loads(out)["closed"] is False
    code, _, err = run(capsys, "run", "hirzebruch2", "hirzebruch_step", "--kauto")
    assert code == 5 and json.loads(err)["error"] == "script_not_closed"


def test_side_flag(capsys):
    rep = json.loads(run(capsys, "run", "pentagon", "involution", "--side", "ccw")[1])
    assert rep["conventions"]["side"] == "ccw"


def test_svg(capsys, tmp_path):
    out = tmp_path / "p.svg"
    code, _, _ = run(capsys, "svg", "pentagon", "-o", str(out))
    text = out.read_text()
    assert code == 0 and text.count('class="node"') == 2
    code, stdout, _ = run(capsys, "svg", "pentagon")
    assert stdout == text
    code, _, err = run(capsys, "svg", "pentagon", "-o", str(tmp_path / "missing" / "x.svg"))
    assert code == 1 and "missing" in json.loads(err)["message"]


def test_mw_and_relations(capsys):
    assert json.loads(run(capsys, "mw", "k8", "k8_i8")[1])["mw_str"] == "Z"
    code, out, _ = run(capsys, "relations", "k7")
    assert code == 0 and json.loads(out)["all_pass"]


def test_validate_kinds(capsys):
    assert json.loads(run(capsys, "validate", "pentagon")[1])["kind"] == "model"
    assert json.loads(run(capsys, "validate", "b2_rho", "--kind", "script")[1])["closed"] is True
    assert json.loads(run(capsys, "validate", "k6_i6_i2_i3", "--kind", "fibres")[1])["fibre_count"] == 3


def test_pretty_format(capsys):
    code, out, _ = run(capsys, "report", "pentagon", "--format", "pretty")
    assert code == 0 and "qbar:" in out and not out.lstrip().startswith("{")


def test_accept_jobs_invariant(capsys):
    a = run(capsys, "accept", "--only", "1", "7", "12")[1]
    b = run(capsys, "accept", "--only", "1", "7", "12", "--jobs", "2")[1]
    assert a == b and json.loads(a)["all_pass"]
