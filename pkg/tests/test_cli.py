import json
import random

import pytest

from incalg import GenPair, IncidenceAlgebra, RingSpec, chain, left_multiplication
from incalg.cli import main
from incalg.serialize import map_from_json, map_to_json
from incalg.solver import random_sample, solve

from conftest import FIXTURES


@pytest.fixture
def files(tmp_path):
    def write(name, doc):
        path = tmp_path / name
        path.write_text(json.dumps(doc) if not isinstance(doc, str) else doc)
        return str(path)

    return write


@pytest.fixture
def t2_path(files):
    return files("t2.json", {"elements": ["1", "2"], "relations": [["1", "2"]]})


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_closure(capsys, files):
    path = files("p.json", {"elements": ["1", "2", "3"], "relations": [["1", "2"], ["2", "3"]]})
    code, doc = run(capsys, "closure", "--poset", path)
    assert code == 0
    assert ["1", "3"] in doc["relations"] and doc["partial_order"] and doc["schema"] == "incalg/1"


def test_basis(capsys, t2_path):
    code, doc = run(capsys, "basis", "--poset", t2_path, "--ring", "Q")
    assert code == 0 and doc["dimension"] == 3
    assert doc["basis"] == [["1", "1"], ["1", "2"], ["2", "2"]]


def test_solve_with_dump(capsys, t2_path, tmp_path):
    dump = tmp_path / "basis.json"
    code, doc = run(capsys, "solve", "--poset", t2_path, "--ring", "Q", "--class", "gder", "--dump", dump)
    assert code == 0 and doc["dimension"] == 5
    dumped = json.loads(dump.read_text())
    assert dumped["dimension"] == len(dumped["basis"]) == 5
    assert set(dumped["basis"][0]) == {"xi", "tau"}


def test_check_failure_reports_witness(capsys, t2_path, files):
    xi = files("xi.json", {"ring": "Q", "images": [{"from": ["1", "1"], "to": [["1", "2", "1"]]}]})
    code, doc = run(capsys, "check", "--poset", t2_path, "--ring", "Q", "--xi", xi, "--class", "der")
    assert code == 1
    assert not doc["passed"] and doc["witnesses"]


def test_check_pass_and_default_tau(capsys, t2_path, files):
    A = IncidenceAlgebra(chain(2), RingSpec.rationals())
    c = A.element({("1", "1"): 2, ("1", "2"): "1/2"})
    xi = files("xi.json", map_to_json(left_multiplication(c)))
    for cls in ("gder", "gjder", "lemma1", "basis-ids"):
        code, doc = run(capsys, "check", "--poset", t2_path, "--ring", "Q", "--xi", xi, "--class", cls)
        assert code == 0 and doc["passed"], cls


def test_decompose(capsys, t2_path, files, tmp_path):
    A = IncidenceAlgebra(chain(2), RingSpec.mod(5))
    pair = random_sample(solve(A, "gjder"), random.Random(0))
    xi = files("xi.json", map_to_json(pair.xi))
    tau = files("tau.json", map_to_json(pair.tau))
    out = tmp_path / "cert.json"
    code, _ = run(capsys, "decompose", "--poset", t2_path, "--ring", "Z/5", "--xi", xi, "--tau", tau, "--out", out)
    assert code == 0
    cert = json.loads(out.read_text())
    assert cert["verdict"] and cert["psi"]["images"] == []
    assert map_from_json(A, cert["phi"]) == pair.xi
    assert all(r["passed"] for r in cert["checks"].values())


def test_decompose_hypothesis_error(capsys, t2_path, files):
    empty = files("zero.json", {"ring": "Z/6", "images": []})
    code, _ = run(capsys, "decompose", "--poset", t2_path, "--ring", "Z/6", "--xi", empty, "--tau", empty)
    assert code == 2


def test_verify_theorem(capsys, t2_path):
    code, doc = run(capsys, "verify-theorem", "--poset", t2_path, "--ring", "Q")
    assert code == 0 and doc["passed"]
    case = doc["cases"][0]
    assert case["certified"] == case["certificates"] == 5 + 10


def test_verify_theorem_over_diamond_gf5(capsys, files):
    path = files("diamond.json", {"elements": list("abcd"),
                                  "relations": [["a", "b"], ["a", "c"], ["b", "d"], ["c", "d"]]})
    code, doc = run(capsys, "verify-theorem", "--poset", path, "--ring", "Z/5")
    assert code == 0 and doc["passed"]


def test_verify_theorem_refuses_two_torsion(capsys, t2_path):
    code, _ = run(capsys, "verify-theorem", "--poset", t2_path, "--ring", "Z/6")
    assert code == 2


def test_verify_theorem_all_posets_up_to(capsys):
    code, doc = run(capsys, "verify-theorem", "--all-posets-up-to", 2, "--ring", "Z/3", "--samples", 2)
    assert code == 0 and len(doc["cases"]) == 1 + 1 + 3


def test_input_errors(capsys, tmp_path, files):
    assert main(["closure", "--poset", str(tmp_path / "missing.json")]) == 2
    bad = files("bad.json", "{not json")
    assert main(["closure", "--poset", bad]) == 2
    assert "line 1" in capsys.readouterr().err
    unknown = files("u.json", {"elements": ["a"], "relations": [["a", "z"]]})
    assert main(["closure", "--poset", unknown]) == 2
    assert main(["basis", "--poset", unknown, "--ring", "R"]) == 2
    assert main(["no-such-command"]) == 2


def test_torsion_search_single(capsys, t2_path):
    code, doc = run(capsys, "torsion-search", "--poset", t2_path)
    assert code == 0 and doc["ring"] == "Z/2"
    dims = doc["cases"][0]["dimensions"]
    assert {"der", "jder", "gder_xi", "gjder_xi"} <= set(dims)


def test_torsion_search_matches_fixture(capsys, tmp_path):
    out = tmp_path / "torsion.json"
    assert main(["torsion-search", "--out", str(out)]) == 0
    assert out.read_bytes() == (FIXTURES / "torsion_gf2.json").read_bytes()


def test_reports_are_byte_identical(tmp_path, t2_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for out in (a, b):
        assert main(["verify-theorem", "--poset", t2_path, "--ring", "Z/3", "--seed", "4", "--out", str(out)]) == 0
    assert a.read_bytes() == b.read_bytes()
