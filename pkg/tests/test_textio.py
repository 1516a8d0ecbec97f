from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contactdual import registry, textio
from contactdual.carrier import AtomSetAlgebra, IntervalLineAlgebra
from contactdual.contact import (
    Alexandroff,
    BetaRho,
    ContactStructure,
    GeneratedIdeal,
    Supremum,
    TableRelation,
    check_nca,
    relation_table,
)
from contactdual.errors import InputError
from contactdual.spaces import SpaceMap
from strategies import finite_spaces, interval_sets, reflexive_symmetric_graphs

LINE = IntervalLineAlgebra()


def roundtrip(obj, to, back, **kw):
    text = textio.dumps(to(obj))
    return back(textio.loads(text), **kw)


@given(interval_sets())
def test_interval_literal_roundtrip(a):
    assert roundtrip(a, lambda v: textio.element_to_json(LINE, v),
                     lambda d: textio.element_from_json(LINE, d)) == a


def test_interval_literal_accepts_integers_and_tokens():
    v = textio.element_from_json(LINE, [["-inf", -1], [0, "1/2"], ["3", "inf"]])
    assert str(v) == "[-inf, -1] u [0, 1/2] u [3, inf]"
    assert textio.element_to_json(LINE, v) == [["-inf", "-1/1"], ["0/1", "1/2"], ["3/1", "inf"]]


@pytest.mark.parametrize("bad", [[[1, 0]], [[0, 0]], [["x", 1]], [[0]], "0", [[True, 2]]])
def test_bad_interval_literals(bad):
    with pytest.raises(InputError):
        textio.element_from_json(LINE, bad)


def test_atom_literals():
    c = AtomSetAlgebra(3)
    assert textio.element_from_json(c, [2, 0]) == 5
    assert textio.element_to_json(c, 5) == [0, 2]
    for bad in ([3], ["0"], 1, [True]):
        with pytest.raises(InputError):
            textio.element_from_json(c, bad)


@given(st.integers(1, 4).flatmap(reflexive_symmetric_graphs), st.data())
@settings(max_examples=40, deadline=None)
def test_atom_graph_structure_roundtrip(g, data):
    c = g.carrier
    s = ContactStructure(c, g, GeneratedIdeal(c, data.draw(st.integers(0, c.one))))
    assert roundtrip(s, textio.structure_to_json, textio.structure_from_json) == s


@given(finite_spaces())
@settings(max_examples=40, deadline=None)
def test_space_roundtrip(X):
    assert roundtrip(X, textio.space_to_json, textio.space_from_json) == X


@pytest.mark.parametrize("name", sorted(registry.STRUCTURES))
def test_registry_structures_roundtrip(name):
    s = registry.structure(name)
    assert roundtrip(s, textio.structure_to_json, textio.structure_from_json) == s


def test_derived_relations_roundtrip():
    base = registry.structure("interval_standard")
    for rel in (Alexandroff(base), BetaRho(base)):
        s = ContactStructure(LINE, rel, base.ib)
        assert roundtrip(s, textio.structure_to_json, textio.structure_from_json) == s
    p3 = registry.structure("p3_overlap")
    sup = ContactStructure(p3.carrier, Supremum(p3, (p3.rho,)), p3.ib)
    assert roundtrip(sup, textio.structure_to_json, textio.structure_from_json) == sup


def test_table_relation_roundtrip():
    s = registry.structure("path3")
    table = TableRelation(s.carrier, relation_table(s.carrier, s.rho))
    t = ContactStructure(s.carrier, table, s.ib)
    back = roundtrip(t, textio.structure_to_json, textio.structure_from_json)
    assert back == t
    assert check_nca(back) == check_nca(s)


def test_map_roundtrip():
    f = registry.space_map("sierpinski_open_point")
    assert roundtrip(f, textio.map_to_json, textio.map_from_json) == f
    g = textio.map_from_json({"domain": "discrete2", "codomain": "discrete1", "pairs": [["0", "0"], ["1", "0"]]},
                             registry.SPACES)
    assert isinstance(g, SpaceMap) and g.mapping == (0, 0)


def test_parse_errors_carry_line_and_column():
    with pytest.raises(InputError) as exc:
        textio.loads('{"a": 1,\n  "b": }')
    assert exc.value.line == 2 and exc.value.column == 8
    assert str(exc.value).startswith("line 2, column 8: ")


@pytest.mark.parametrize("doc,fragment", [
    ({"relation": {"kind": "standard"}}, "missing 'carrier'"),
    ({"carrier": {"kind": "cube"}, "relation": {}}, "unknown carrier kind"),
    ({"carrier": {"kind": "atoms", "n": 2}, "relation": {"kind": "two_point"}}, "interval"),
    ({"carrier": {"kind": "atoms", "n": 2}, "relation": {"kind": "atom_graph", "graph": [[0, 1]]}}, "reflexive"),
    ({"carrier": {"kind": "interval"}, "relation": {"kind": "standard"}, "ideal": {"kind": "generated",
                                                                                 "generator": []}}, "finite"),
])
def test_semantic_errors(doc, fragment):
    with pytest.raises(InputError) as exc:
        textio.structure_from_json(json.loads(json.dumps(doc)))
    assert fragment in str(exc.value)


def test_space_errors():
    with pytest.raises(InputError):
        textio.space_from_json({"points": ["0", "1"]})
    with pytest.raises(InputError):
        textio.space_from_json({"points": ["0", "1"], "opens": [["2"]]})
    with pytest.raises(InputError):
        textio.space_from_json("nowhere", registry.SPACES)


def test_report_serialization():
    reps = check_nca(registry.structure("path3"))
    data = [textio.report_to_json(r) for r in reps]
    assert data[4] == {"axiom": "C5", "verdict": "fail", "counterexample": {"a": [0], "b": [2]}}
    sampled = check_nca(registry.structure("interval_two_point"), samples=20, seed=0)
    assert textio.report_to_json(sampled[0]) == {"axiom": "C1", "verdict": "sampled-pass", "samples": 20}
