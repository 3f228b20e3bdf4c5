import json

import pytest

from jsplit import serialize
from jsplit.josp import build_josp_table
from jsplit.splitting import build_counterexample, solve_splitting, trivial_extension


def test_algebra_roundtrip(josp21):
    d = serialize.algebra_to_dict(josp21)
    back = serialize.algebra_from_dict(d)
    assert back == josp21
    # entries are sorted by (i, j, k) and carry lowest-term strings
    triples = [(i, j, k) for i, j, k, _ in d["constants"]]
    assert triples == sorted(triples)
    assert all(isinstance(c, str) for _, _, _, c in d["constants"])


def test_algebra_serialization_is_canonical(josp12):
    a = serialize.dumps(serialize.algebra_to_dict(josp12))
    b = serialize.dumps(serialize.algebra_to_dict(build_josp_table(1, 2)))
    assert a == b


def test_rational_strings_format(josp11):
    d = serialize.algebra_to_dict(josp11)
    values = {c for _, _, _, c in d["constants"]}
    assert "1/2" in values and "-1/2" in values
    assert all("/" not in c or c.split("/")[1].isdigit() for c in values)


def test_bimodule_roundtrip(skew11):
    d = serialize.bimodule_to_dict(skew11)
    back = serialize.bimodule_from_dict(d)
    assert back == skew11


def test_bimodule_rejects_foreign_algebra(josp21, skew11):
    d = serialize.bimodule_to_dict(skew11)
    with pytest.raises(ValueError):
        serialize.bimodule_from_dict(d, algebra=josp21)


def test_extension_roundtrip_counterexample(tmp_path):
    ext = build_counterexample()
    d = serialize.extension_to_dict(ext)
    assert d["ideal"] == [2, 3, 6, 7]
    path = tmp_path / "ce.json"
    serialize.dump(d, path)
    back = serialize.extension_from_dict(serialize.load(path))
    assert back.E == ext.E
    assert back.radical == ext.radical
    assert back.model == ext.model
    assert back.section == ext.section
    assert solve_splitting(back).kind == "no-split"


def test_extension_roundtrip_trivial(josp11, reg11, tmp_path):
    ext = trivial_extension(josp11, reg11)
    d = serialize.extension_to_dict(ext)
    back = serialize.extension_from_dict(d)
    assert solve_splitting(back).is_split


def test_json_is_valid_and_stable(josp11, tmp_path):
    p = tmp_path / "a.json"
    serialize.dump(serialize.algebra_to_dict(josp11), p)
    with open(p) as fh:
        loaded = json.load(fh)
    assert loaded["dim"] == 4
    with open(p, "rb") as fh:
        first = fh.read()
    serialize.dump(serialize.algebra_to_dict(josp11), p)
    with open(p, "rb") as fh:
        assert fh.read() == first
