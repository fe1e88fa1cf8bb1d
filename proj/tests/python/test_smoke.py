"""Smoke tests for the python module, plus schema checks of CLI payloads."""

import json
import os
import subprocess

import pytest

import swlink

TREFOIL = "2: 1 1 1"
GRANNY = "3: 1 1 1 2 2 2"

E1_BLOCK = {
    "name": "E(1)",
    "classes": ["t"],
    "parity": 0,
    "closed": False,
    "relative": True,
    "sw": {"vars": ["t"], "terms": [{"exp": [0], "coef": "1"}]},
    "pairings": [],
}

FIBER_SQUARE_TERMS = [
    {"exp": [4], "coef": "1"},
    {"exp": [2], "coef": "-2"},
    {"exp": [0], "coef": "3"},
    {"exp": [-2], "coef": "-2"},
    {"exp": [-4], "coef": "1"},
]

TRIPLE_T = {
    "A": {"vars": ["tF"], "terms": []},
    "B": {"vars": ["tF"], "terms": []},
    "C": {"vars": ["tF"], "terms": FIBER_SQUARE_TERMS},
}
TRIPLE_T_PRIME = {
    "A": {"vars": ["tF"], "terms": []},
    "B": {"vars": ["tF"], "terms": [{"exp": [0], "coef": "1"}]},
    "C": {"vars": ["tF"], "terms": FIBER_SQUARE_TERMS},
}


def poly(vars_, terms):
    return swlink.LaurentPoly({"vars": vars_, "terms": terms})


def test_braid_basics():
    b = swlink.BraidWord(TREFOIL)
    assert b.strands == 2
    assert b.letters == [1, 1, 1]
    count, labels = b.closure_components()
    assert count == 1
    assert str(b.stabilize(1)) == "3: 1 1 1 2"
    with pytest.raises(swlink.ParseError):
        swlink.BraidWord("2: 5")


def test_trefoil_alexander():
    d = swlink.alexander(TREFOIL)
    assert d.to_dict() == {
        "vars": ["t"],
        "terms": [
            {"exp": [2], "coef": "1"},
            {"exp": [1], "coef": "-1"},
            {"exp": [0], "coef": "1"},
        ],
    }
    sym = swlink.symmetrize(d)
    assert sym == poly(["t"], [
        {"exp": [2], "coef": "1"},
        {"exp": [0], "coef": "-1"},
        {"exp": [-2], "coef": "1"},
    ])


def test_axis_and_hosokawa():
    axis = swlink.alexander(TREFOIL, axis=True)
    assert set(axis.to_dict()["vars"]) == {"t", "tau"}
    with pytest.raises(swlink.DomainError):
        swlink.hosokawa(TREFOIL)
    assert swlink.hosokawa("3: 1 1 2 2").to_dict()["terms"] == [{"exp": [], "coef": "1"}]


def test_poly_arithmetic():
    t = swlink.LaurentPoly.variable("t")
    tinv = swlink.LaurentPoly.variable("t", -1)
    one = swlink.LaurentPoly.constant(1)
    assert (t - tinv) * (t + tinv) == t * t - tinv * tinv
    assert swlink.associate_equal(t * t - t + one, -(t - one + tinv))
    assert swlink.specialize(t, {"t": {"t": 2}}) == t * t


def test_knot_surgery_granny():
    out = swlink.knot_surgery(E1_BLOCK, GRANNY, "t")
    assert out["sw"]["terms"] == FIBER_SQUARE_TERMS
    assert swlink.check_symmetry(out)
    classes = swlink.basic_classes(out)
    assert classes[0] == ([4], 1)
    assert classes[2] == ([0], 3)


def test_link_surgery_and_cover():
    out = swlink.link_surgery([E1_BLOCK, E1_BLOCK], "2: 1 1")
    assert swlink.associate_equal(
        swlink.LaurentPoly(out["sw"]), swlink.LaurentPoly.constant(1)
    )
    delta = swlink.alexander("2: 1 1")  # unit polynomial
    pushed = swlink.cover_pushforward(delta, E1_BLOCK)
    assert swlink.associate_equal(pushed, swlink.LaurentPoly.constant(1))


def test_families():
    sq = poly(["tF"], FIBER_SQUARE_TERMS)
    assert swlink.mms_evaluate(TRIPLE_T, 5, 7, 1) == sq
    one = poly(["tF"], [{"exp": [0], "coef": "1"}])
    assert swlink.family_membership(TRIPLE_T, one) is None
    assert swlink.family_membership(TRIPLE_T_PRIME, one) == (0, 1, 0)
    verdict = swlink.family_equal(TRIPLE_T, TRIPLE_T_PRIME)
    assert verdict["equal"] is False
    assert verdict["witness"]["terms"] == [{"exp": [0], "coef": "1"}]


def test_distinguish():
    same = swlink.distinguish(TREFOIL, TREFOIL)
    assert same["status"] == "NOT_DISTINGUISHED"
    found = swlink.distinguish("3: 1 2", "3: 1 1 1 2")
    assert found["status"] == "NOT_ISOTOPIC"


def test_misc():
    assert swlink.strands_from_genus(1) == 6
    assert swlink.adjunction_check(1, 0, [0])
    assert not swlink.adjunction_check(1, 0, [2])
    zeroed = swlink.vanishing_flag(swlink.knot_surgery(E1_BLOCK, GRANNY, "t"), True)
    assert zeroed["sw"]["terms"] == []


# ---- CLI payloads against the shipped schemas ----------------------------

CLI = os.environ.get("SWLINK_CLI")
ROOT = os.environ.get("SWLINK_ROOT")


def run_cli(*args):
    out = subprocess.run([CLI, *args], capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


@pytest.mark.skipif(not CLI or not ROOT, reason="needs SWLINK_CLI and SWLINK_ROOT")
def test_cli_payloads_validate_against_schemas():
    jsonschema = pytest.importorskip("jsonschema")

    schemas = {}
    schema_dir = os.path.join(ROOT, "schemas")
    for fname in os.listdir(schema_dir):
        with open(os.path.join(schema_dir, fname)) as f:
            schema = json.load(f)
        schemas[schema["$id"]] = schema

    def validator(schema_id):
        try:
            from referencing import Registry, Resource

            registry = Registry().with_resources(
                (sid, Resource.from_contents(s)) for sid, s in schemas.items()
            )
            return jsonschema.Draft7Validator(schemas[schema_id], registry=registry)
        except ImportError:
            store_resolver = jsonschema.RefResolver(base_uri="", referrer=schemas[schema_id],
                                                    store=schemas)
            return jsonschema.Draft7Validator(schemas[schema_id], resolver=store_resolver)

    fixtures = os.path.join(ROOT, "fixtures")
    payloads = [
        ("swlink:polynomial", run_cli("alexander", TREFOIL)),
        ("swlink:polynomial", run_cli("alexander", TREFOIL, "--axis")),
        ("swlink:polynomial", run_cli("mms", "--triple", os.path.join(fixtures, "T.json"),
                                      "-p", "0", "-q", "0", "-r", "1")),
        ("swlink:polynomial", run_cli("fibersum", "--block", os.path.join(fixtures, "e1.json"),
                                      "--braid", TREFOIL)),
        ("swlink:block", run_cli("knot-surgery", "--block", os.path.join(fixtures, "e1.json"),
                                 "--braid", TREFOIL, "--class", "t")),
        ("swlink:family-verdict", run_cli("family-equal",
                                          "--t1", os.path.join(fixtures, "T.json"),
                                          "--t2", os.path.join(fixtures, "Tprime.json"))),
        ("swlink:obstruction-verdict", run_cli("distinguish", "3: 1 2", "3: 1 1 1 2")),
    ]
    for schema_id, payload in payloads:
        validator(schema_id).validate(payload)

    # fixtures themselves conform
    for fname, schema_id in [("e1.json", "swlink:block"), ("T.json", "swlink:triple"),
                             ("Tprime.json", "swlink:triple")]:
        with open(os.path.join(fixtures, fname)) as f:
            validator(schema_id).validate(json.load(f))


@pytest.mark.skipif(not CLI, reason="needs SWLINK_CLI")
def test_cli_pretty_matches_compact():
    compact = subprocess.run([CLI, "alexander", TREFOIL], capture_output=True, text=True)
    pretty = subprocess.run([CLI, "--pretty", "alexander", TREFOIL],
                            capture_output=True, text=True)
    assert compact.returncode == 0 and pretty.returncode == 0
    assert json.loads(compact.stdout) == json.loads(pretty.stdout)
    assert "\n  " in pretty.stdout


@pytest.mark.skipif(not CLI, reason="needs SWLINK_CLI")
def test_cli_exit_codes():
    assert subprocess.run([CLI, "alexander", "bogus"], capture_output=True).returncode == 2
    assert subprocess.run([CLI, "hosokawa", TREFOIL], capture_output=True).returncode == 3
    assert subprocess.run([CLI, "no-such-command"], capture_output=True).returncode == 1
    ok = subprocess.run([CLI, "adjunction", "-g", "1", "-s", "0", "--pairings", "0"],
                        capture_output=True, text=True)
    assert ok.returncode == 0
    assert ok.stdout.strip() == "true"
