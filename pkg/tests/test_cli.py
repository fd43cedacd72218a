import json

import pytest

from fvectors.cli import run, EXIT_OK, EXIT_FAIL, EXIT_USAGE
from fvectors.families import FamilySpec, CYCLIC, f_of_family
from fvectors.transforms import FVector, f_to_g


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out.strip()
    return code, json.loads(out) if out else None


def test_family_matches_library(capsys):
    code, doc = invoke(capsys, "family", "cyclic", "--d", "4", "--n", "7")
    assert code == EXIT_OK
    assert doc == {"d": 4, "f": [7, 21, 28, 14]}
    assert tuple(doc["f"]) == f_of_family(FamilySpec(CYCLIC, 7, 4)).entries


def test_family_emit_g(capsys):
    code, doc = invoke(capsys, "family", "cs-stacked", "--d", "4", "--n", "5",
                       "--emit", "g")
    assert code == EXIT_OK
    assert doc == {"d": 4, "g": [1, 5, 2]}


def test_transform_matches_library(capsys):
    code, doc = invoke(capsys, "transform", "--d", "3", "--from", "f",
                       "--to", "g", "--vec", "[6,12,8]")
    assert code == EXIT_OK
    assert tuple(doc["g"]) == f_to_g(FVector(3, (6, 12, 8))).entries


def test_transform_roundtrip(capsys):
    _, doc = invoke(capsys, "transform", "--d", "4", "--from", "f",
                    "--to", "h", "--vec", "[7,21,28,14]")
    assert doc == {"d": 4, "h": [1, 3, 6, 3, 1]}
    _, doc = invoke(capsys, "transform", "--d", "4", "--from", "h",
                    "--to", "f", "--vec", "[1,3,6,3,1]")
    assert doc == {"d": 4, "f": [7, 21, 28, 14]}


def test_check_M_sequence_failure_witness(capsys):
    code, doc = invoke(capsys, "check", "M-sequence", "--vec", "[1,1,2]")
    assert code == EXIT_FAIL
    assert doc == {"result": False, "witness": {"k": 2, "del": 2, "bound": 1}}


def test_check_pass_paths(capsys):
    code, doc = invoke(capsys, "check", "m-sequence", "--vec", "[1,2,3,5]")
    assert code == EXIT_OK and doc["result"] is True
    code, doc = invoke(capsys, "check", "nonnegative", "--vec", "[1,0,2]")
    assert code == EXIT_OK and doc["result"] is True
    code, doc = invoke(capsys, "check", "dehn-sommerville", "--d", "3",
                       "--vec", "[1,3,3,1]")
    assert code == EXIT_OK and doc["result"] is True


def test_check_file_payload(tmp_path, capsys):
    payload = tmp_path / "vec.json"
    payload.write_text(json.dumps({"d": 4, "g": [1, 2, 3]}))
    code, doc = invoke(capsys, "transform", "--d", "4", "--from", "g",
                       "--to", "f", "--file", str(payload))
    assert code == EXIT_OK
    assert doc == {"d": 4, "f": [7, 21, 28, 14]}


def test_compare(capsys):
    code, doc = invoke(capsys, "compare", "--d", "3", "--g1", "[1,2]",
                       "--g2", "[1,3]", "--r", "0")
    assert code == EXIT_OK
    assert doc["premise_holds"] is True
    assert doc["conclusions"]["1"] == {"bound_holds": True, "lhs": 12, "rhs": 15}
    assert doc["witness"] == {"t": 0, "diffs": [0, -1]}


def test_compare_premise_fails(capsys):
    code, doc = invoke(capsys, "compare", "--d", "4", "--g1", "[1,2,3]",
                       "--g2", "[1,1,0]", "--r", "0")
    assert code == EXIT_FAIL
    assert doc["premise_holds"] is False


def test_bounds(capsys):
    code, doc = invoke(capsys, "bounds", "simplicial", "--d", "4", "--r", "1",
                       "--value", "21")
    assert code == EXIT_OK
    assert doc["family_params"] == [7, 7]
    assert doc["conclusions"]["2"]["rhs"] == 28
    code, doc = invoke(capsys, "bounds", "cs", "--d", "4", "--r", "0",
                       "--value", "10")
    assert code == EXIT_OK
    assert doc["family_params"] == [5]


def test_verify_gv(capsys):
    code, doc = invoke(capsys, "verify", "gv", "--max", "4")
    assert code == EXIT_OK
    assert doc["failures"] == []
    assert doc["instances"] == 5**4


def test_verify_phi(capsys):
    code, doc = invoke(capsys, "verify", "phi", "--d", "4")
    assert code == EXIT_OK
    assert doc["injective"] and doc["cases_partition"]


def test_verify_minors(capsys):
    code, doc = invoke(capsys, "verify", "minors", "--d", "5", "--order", "all")
    assert code == EXIT_OK
    assert doc["all_nonnegative"] is True


def test_verify_ratio_chain(capsys):
    code, doc = invoke(capsys, "verify", "ratio-chain", "--d", "8")
    assert code == EXIT_OK
    assert doc["failures"] == []


def test_usage_errors(capsys):
    code, doc = invoke(capsys, "transform", "--d", "3", "--from", "f",
                       "--to", "g", "--vec", "not json")
    assert code == EXIT_USAGE
    assert "error" in doc
    code, doc = invoke(capsys, "transform", "--d", "3", "--from", "f",
                       "--to", "g", "--vec", "[1,2]")  # wrong length
    assert code == EXIT_USAGE
    code, doc = invoke(capsys, "bounds", "simplicial", "--d", "4", "--r", "0",
                       "--value", "3")  # below the simplex floor
    assert code == EXIT_USAGE


def test_unknown_subcommand(capsys):
    code = run(["frobnicate"])
    capsys.readouterr()
    assert code == EXIT_USAGE


def test_big_integers_emitted_as_strings(capsys):
    vec = json.dumps([10**15] * 12)
    code, doc = invoke(capsys, "transform", "--d", "12", "--from", "f",
                       "--to", "h", "--vec", vec)
    assert code == EXIT_OK
    assert any(isinstance(x, str) for x in doc["h"])
    # stringified values round-trip exactly
    from fvectors.transforms import f_to_h as lib_f_to_h

    expected = lib_f_to_h(FVector(12, [10**15] * 12)).entries
    assert tuple(int(x) for x in doc["h"]) == expected
