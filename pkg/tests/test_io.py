import json

import pytest

from dtransit.core import INF, BinaryRelation, Digraph, InputError, Quasimetric, TransitFunction
from dtransit.io import dumps, from_json, loads, to_json


def roundtrip(obj):
    return from_json(json.loads(dumps(to_json(obj))))


def test_roundtrips():
    G = Digraph.of("abc", ["ab", "bc"])
    assert roundtrip(G) == G
    rel = BinaryRelation.of("ab", ["aa", "ab", "bb"])
    assert roundtrip(rel) == rel
    R = TransitFunction.from_dict("abc", {("a", "b"): "acb"})
    assert roundtrip(R) == R
    d = Quasimetric(Digraph.of("ab", []).universe, ((0, 1), (INF, 0)))
    assert roundtrip(d) == d


def test_transit_json_shape():
    R = TransitFunction.from_dict("ab", {("a", "b"): "ba"})
    doc = to_json(R)
    assert doc["entries"][1] == {"from": "a", "to": "b", "set": ["a", "b"]}
    assert len(doc["entries"]) == 4


def test_key_order_does_not_matter():
    a = '{"type":"digraph","vertices":["x","y"],"edges":[["x","y"]]}'
    b = '{"edges":[["x","y"]],"vertices":["x","y"],"type":"digraph"}'
    assert dumps(to_json(loads(a))) == dumps(to_json(loads(b)))


def test_errors():
    with pytest.raises(InputError, match="line 1 column"):
        loads('{"type": ')
    with pytest.raises(InputError):
        loads('{"type": "poset"}')
    with pytest.raises(InputError):
        loads('{"type": "digraph", "vertices": ["a"], "edges": [["a", "z"]]}')
    with pytest.raises(InputError):
        loads('{"type":"transit","vertices":["a"],"entries":[{"from":"a","to":"a","set":["a"]},'
              '{"from":"a","to":"a","set":["a"]}]}')
    with pytest.raises(InputError):
        loads('{"type":"transit","vertices":["a","b"],"entries":[]}', strict=True)
