"""Hypothesis strategies shared by the test modules."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from contactdual.carrier import NEG_INF, POS_INF, AtomSetAlgebra, IntervalSet
from contactdual.contact import atom_graph
from contactdual.spaces import FiniteSpace

rationals = st.builds(Fraction, st.integers(-12, 12), st.sampled_from([1, 2, 3, 4]))


@st.composite
def interval_sets(draw, bounded=False):
    pieces = []
    for _ in range(draw(st.integers(0, 3))):
        lo = draw(rationals)
        width = draw(st.builds(Fraction, st.integers(1, 8), st.sampled_from([1, 2, 4])))
        pieces.append((lo, lo + width))
    if not bounded:
        if draw(st.booleans()):
            pieces.append((NEG_INF, draw(rationals)))
        if draw(st.booleans()):
            pieces.append((draw(rationals), POS_INF))
    return IntervalSet.of(*pieces)


@st.composite
def atom_elements(draw, n):
    return draw(st.integers(0, (1 << n) - 1))


@st.composite
def reflexive_symmetric_graphs(draw, n):
    c = AtomSetAlgebra(n)
    edges = [(i, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                edges += [(i, j), (j, i)]
    return atom_graph(c, edges)


@st.composite
def finite_spaces(draw, max_points=4):
    n = draw(st.integers(1, max_points))
    names = [str(i) for i in range(n)]
    pairs = [(names[i], names[j]) for i in range(n) for j in range(n) if i != j and draw(st.booleans())]
    return FiniteSpace.from_preorder(names, pairs)
