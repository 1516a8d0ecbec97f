from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contactdual.contact import all_passed, check_ca
from contactdual.errors import PreconditionError
from contactdual.spaces import (
    DenseEmbedding,
    FiniteSpace,
    SpaceMap,
    all_maps,
    all_topologies,
    circle4,
    closure,
    continuous_maps,
    dense_restriction_iso,
    dense_subspace_embeddings,
    inclusion,
    interior,
    map_is,
    point_cluster,
    rc_algebra,
    regular_closed_algebra,
    regular_closed_sets,
    sierpinski,
    skeletal_equivalences,
)
from strategies import finite_spaces


def brute_topology_count(n):
    """Families of subsets containing 0 and X and closed under union and meet."""
    full = (1 << n) - 1
    subsets = list(range(1 << n))
    count = 0
    for code in range(1 << len(subsets)):
        fam = {s for s in subsets if code >> s & 1}
        if 0 not in fam or full not in fam:
            continue
        if all(a | b in fam and a & b in fam for a, b in combinations(fam, 2)):
            count += 1
    return count


@pytest.mark.parametrize("n", [1, 2, 3])
def test_topology_enumeration_matches_brute_force(n):
    assert len(all_topologies(n)) == brute_topology_count(n)


def test_topology_counts_frozen():
    assert [len(all_topologies(n)) for n in (1, 2, 3, 4)] == [1, 4, 29, 355]


def test_sierpinski_closure_and_interior():
    s = sierpinski()
    assert closure(s, ["1"]) == {"0", "1"}
    assert closure(s, ["0"]) == {"0"}
    assert interior(s, ["0"]) == frozenset()
    assert s.specialization() == [("0", "1")]


def test_circle_model():
    c = circle4()
    rc = rc_algebra(c)
    assert [sorted(c.names(m)) for m in rc.atom_masks] == [["a", "b", "d"], ["b", "c", "d"]]
    assert sorted(c.specialization()) == [("b", "a"), ("b", "c"), ("d", "a"), ("d", "c")]
    # the two regular closed atoms share the closed points, so they touch
    s = regular_closed_algebra(c)
    assert s.related(rc.from_points(c.mask(["a", "b", "d"])), rc.from_points(c.mask(["b", "c", "d"])))


def test_invalid_topology_rejected():
    with pytest.raises(PreconditionError):
        FiniteSpace(("0", "1"), frozenset({0, 1, 3}) - {0})
    with pytest.raises(PreconditionError):
        FiniteSpace(("0", "0"), frozenset({0, 3}))


@given(finite_spaces(), st.data())
@settings(max_examples=60, deadline=None)
def test_closure_and_interior_are_dual(X, data):
    s = data.draw(st.integers(0, X.full))
    cl = X.closure_mask(s)
    assert s & ~cl == 0
    assert X.closure_mask(cl) == cl
    assert X.is_closed(cl)
    assert X.interior_mask(s) == X.full & ~X.closure_mask(X.full & ~s)


@given(finite_spaces())
@settings(max_examples=40, deadline=None)
def test_regular_closed_sets_form_a_contact_algebra(X):
    rc = rc_algebra(X)
    assert len(regular_closed_sets(X)) == rc.size
    for v in rc.values():
        assert X.is_regular_closed(rc.points_of(v))
    assert all_passed(check_ca(regular_closed_algebra(X)))


@given(finite_spaces(max_points=3), finite_spaces(max_points=3))
@settings(max_examples=40, deadline=None)
def test_skeletal_criteria_agree(X, Y):
    for f in continuous_maps(X, Y):
        assert skeletal_equivalences(f).agree


@given(finite_spaces())
@settings(max_examples=40, deadline=None)
def test_dense_subspaces_restrict_isomorphically(Y):
    for emb in dense_subspace_embeddings(Y):
        assert dense_restriction_iso(emb).ok


def test_map_properties_of_open_point_inclusion():
    s = sierpinski()
    f = inclusion(s, ["1"])
    props = {p: map_is(f, p) for p in ("continuous", "open", "closed", "injective", "dense_image", "skeletal")}
    assert props == {"continuous": True, "open": True, "closed": False, "injective": True,
                     "dense_image": True, "skeletal": True}
    with pytest.raises(PreconditionError):
        map_is(f, "smooth")


def test_dense_embedding_rejections():
    s = sierpinski()
    with pytest.raises(PreconditionError):
        DenseEmbedding(inclusion(s, ["0"]))
    d2 = FiniteSpace.discrete(2)
    with pytest.raises(PreconditionError):
        DenseEmbedding(SpaceMap(d2, FiniteSpace.discrete(1), (0, 0)))


def test_skeletal_needs_continuity():
    d2 = FiniteSpace.discrete(2)
    s = sierpinski()
    f = SpaceMap(s, d2, (0, 1))
    assert not f.continuous
    with pytest.raises(PreconditionError):
        skeletal_equivalences(f)


def test_map_composition_and_counts():
    d2, d3 = FiniteSpace.discrete(2), FiniteSpace.discrete(3)
    assert len(all_maps(d3, d2)) == 8
    f = SpaceMap(d3, d2, (0, 0, 1))
    g = SpaceMap(d2, d3, (2, 1))
    assert f.then(g).mapping == (2, 2, 1)
    with pytest.raises(PreconditionError):
        f.then(f)
    assert SpaceMap.from_pairs(d3, d2, f.pairs()) == f


def test_point_cluster_members():
    s = sierpinski()
    cl = point_cluster(s, "1")
    rc = rc_algebra(s)
    assert cl.members == frozenset(v for v in rc.values() if rc.points_of(v) & s.mask(["1"]))
