import io
import json

import pytest

from positroids import formats
from positroids.affine import affine_bruhat_leq, enumerate_bound
from positroids.cli import FORMATS, format_value, parse_value, run
from positroids.complexes import interval_complex
from positroids.perms import parse_permutation
from positroids.positroid import uniform_matroid
from positroids.qposet import canonicalize
from positroids.symfunc import positroid_class


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue().strip(), err.getvalue().strip()


def test_convert_examples():
    assert call("convert", "--from", "siteswap", "--to", "states", "1124", "--n", "4", "--k", "2") \
        == (0, "14 13 12 12", "")
    # the rotated siteswap is the same pattern one beat earlier
    assert call("convert", "--from", "siteswap", "--to", "states", "4112", "--n", "4", "--k", "2")[1] \
        == "12 14 13 12"
    assert call("convert", "--from", "affine", "--to", "siteswap", "4,3,5,6,7")[1] == "31222"
    assert call("convert", "--from", "affine", "--to", "siteswap", "5,2,7,4")[1] == "4040"
    assert call("convert", "--from", "pair", "--to", "affine", "21543 54312", "--k", "2")[1] == "4,3,5,6,7"
    assert call("convert", "--from", "affine", "--to", "necklace", "2,3,5,8")[1] == "14 24 34 14"


def test_enumerate_and_class():
    assert call("enumerate", "--k", "2", "--n", "4", "--count-only") == (0, "33", "")
    code, out, _ = call("enumerate", "--k", "1", "--n", "3", "--format", "json")
    assert code == 0 and [tuple(x["window"]) for x in json.loads(out)] == \
        [f.window for f in enumerate_bound(1, 3)]
    assert call("class", "--f", "5,2,7,4", "--n", "4") == (0, "s[2,2]: 1", "")


def test_quantum_output():
    code, out, _ = call("quantum", "--k", "2", "--n", "5", "--I", "14", "--J", "14", "--d", "1", "--gw")
    obj = json.loads(out)
    assert code == 0 and obj["f"] == [4, 3, 5, 6, 7] and obj["valid"]
    assert len(obj["T"]) == 9 and [2, 3] not in obj["T"]
    assert obj["gw"] == {"3,2": 1}


def test_interval_actions():
    args = ["interval", "--u", "21345", "--w", "45123", "--k", "2"]
    assert call(*args, "fvector")[1] == "9 31 54 51 25 5"
    assert call(*args, "hilbert", "--d", "1")[1] == "9"
    facets = formats.complex_from_json(json.loads(call(*args, "facets")[1]))
    assert set(facets.facet_sets()) == set(interval_complex(parse_permutation("21345"),
                                                            parse_permutation("45123"), 2).facet_sets())
    cert = json.loads(call(*args, "shelling")[1])
    assert len(cert["facets"]) == 5
    assert all(d == 4 for dims in cert["intersection_dims"][1:] for d in dims)
    assert call(*args, "hilbert")[0] == 2


def test_matroid_command(tmp_path):
    m = tmp_path / "m.json"
    m.write_text(json.dumps({"n": 4, "k": 2, "bases": [[1, 2], [2, 3], [3, 4], [1, 4]]}))
    assert json.loads(call("matroid", "--file", str(m), "necklace")[1]) == \
        {"terms": [[1, 2], [2, 3], [3, 4], [1, 4]]}
    assert len(json.loads(call("matroid", "--file", str(m), "envelope")[1])["bases"]) == 6
    assert json.loads(call("matroid", "--file", str(m), "affine")[1])["window"] == [3, 4, 5, 6]
    a = tmp_path / "a.json"
    a.write_text(json.dumps({"matrix": [[1, 0, 1, 2], [0, 1, 1, 2]]}))
    assert json.loads(call("matroid", "--file", str(a), "affine")[1])["window"] == [3, 5, 4, 6]
    a.write_text(json.dumps({"matrix": [["1/2", 0, 1, 2], [0, 1, 1, "2/3"]]}))
    assert call("matroid", "--file", str(a), "necklace")[0] == 0
    a.write_text(json.dumps({"matrix": [[0.5, 0, 1, 2], [0, 1, 1, 2]]}))
    assert call("matroid", "--file", str(a), "necklace")[0] == 2


@pytest.mark.parametrize("argv", [
    ["convert", "--from", "affine", "--to", "states", "1,1,2"],
    ["convert", "--from", "siteswap", "--to", "states", "40x0"],
    ["convert", "--from", "nope", "--to", "states", "1"],
    ["enumerate", "--k", "2"],
    ["enumerate", "--k", "2", "--n", "40"],
    ["class", "--f", "0,1,2,3"],
    ["quantum", "--k", "2", "--n", "4", "--I", "1", "--J", "12", "--d", "0"],
    ["interval", "--u", "321", "--w", "123", "--k", "1", "facets"],
    ["matroid", "--file", "/nonexistent/file.json", "necklace"],
    ["frobnicate"],
    [],
])
def test_bad_input_exits_2(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    assert err.startswith("error:") and "\n" not in err


def test_internal_error_exits_1(monkeypatch):
    import positroids.cli as cli

    def boom(args):
        raise AssertionError("broken invariant\nsecond line")
    monkeypatch.setattr(cli, "cmd_enumerate", boom)
    code, _, err = call("enumerate", "--k", "1", "--n", "2")
    assert code == 1 and err == "internal error: broken invariant"


def test_convert_round_trips():
    for f in enumerate_bound(2, 4):
        for a in FORMATS:
            text = format_value(a, f)
            assert parse_value(a, text, 4, 2) == f
            for b in FORMATS:
                assert parse_value(b, format_value(b, parse_value(a, text, 4, 2)), 4, 2) == f


def test_json_round_trips():
    for f in enumerate_bound(2, 4):
        assert formats.affine_from_json(json.loads(json.dumps(formats.affine_to_json(f)))) == f
        c = positroid_class(f)
        assert formats.class_from_json(json.loads(json.dumps(formats.class_to_json(c)))) == c
    q = canonicalize(parse_permutation("21543"), parse_permutation("54312"), 2)
    assert formats.qclass_from_json(formats.qclass_to_json(q)) == q
    m = uniform_matroid(2, 5)
    assert formats.matroid_from_json(json.loads(json.dumps(formats.matroid_to_json(m)))) == m


def test_dot_closure_is_bruhat_order():
    code, out, _ = call("poset", "--k", "2", "--n", "4")
    assert code == 0 and out.startswith("digraph")
    lines = out.splitlines()
    labels = {}
    edges = []
    for line in lines:
        line = line.strip()
        if "[label=" in line:
            node, rest = line.split(" ", 1)
            labels[node] = tuple(int(x) for x in rest.split('"')[1].split(","))
        elif "->" in line:
            a, b = line.rstrip(";").split(" -> ")
            edges.append((a, b))
    up = {v: {v} for v in labels}
    changed = True
    while changed:
        changed = False
        for a, b in edges:
            for v in labels:
                if a in up[v] and b not in up[v]:
                    up[v].add(b)
                    changed = True
    elems = {v: next(f for f in enumerate_bound(2, 4) if f.window == w) for v, w in labels.items()}
    for v in labels:
        for x in labels:
            assert (x in up[v]) == affine_bruhat_leq(elems[v], elems[x])
    obj = json.loads(call("poset", "--k", "2", "--n", "4", "--format", "json")[1])
    assert len(obj["elements"]) == 33 and len(obj["covers"]) == len(edges)
