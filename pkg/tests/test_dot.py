from __future__ import annotations

import re

import pytest

from contactdual.carrier import AtomSetAlgebra
from contactdual.contact import overlap
from contactdual.dot import render_dot
from contactdual.errors import PreconditionError
from contactdual.extensions import enumerate_admissible
from contactdual.spaces import FiniteSpace, circle4

NODE = re.compile(r'^  "([^"]+)";$', re.M)
EDGE = re.compile(r'^  "([^"]+)" -> "([^"]+)";$', re.M)


def parse(text):
    assert text.startswith("digraph ") and text.rstrip().endswith("}")
    return NODE.findall(text), EDGE.findall(text)


def test_loops_only_graph():
    nodes, edges = parse(render_dot(overlap(AtomSetAlgebra(2))))
    assert nodes == ["a0", "a1"]
    assert edges == [("a0", "a0"), ("a1", "a1")]


def test_circle_preorder():
    nodes, edges = parse(render_dot(circle4()))
    assert nodes == ["a", "b", "c", "d"]
    assert len(edges) == 4


def test_admissible_poset_of_discrete_three_points():
    nodes, edges = parse(render_dot(enumerate_admissible(FiniteSpace.discrete(3))))
    assert nodes == ["s0"] and edges == []


def test_deterministic_and_quoted():
    X = FiniteSpace.from_preorder(['x"y', "z"], [('x"y', "z")])
    assert render_dot(X) == render_dot(X)
    assert '"x\\"y" -> "z";' in render_dot(X)


def test_unsupported_object():
    with pytest.raises(PreconditionError):
        render_dot(42)
