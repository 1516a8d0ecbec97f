from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contactdual.carrier import NEG_INF, POS_INF, AtomSetAlgebra, Element, IntervalLineAlgebra, IntervalSet
from contactdual.contact import (
    FAIL,
    PASS,
    SAMPLED,
    Alexandroff,
    BetaRho,
    BoundedIdeal,
    ContactStructure,
    GeneratedIdeal,
    PatchedRelation,
    Standard,
    Supremum,
    TwoPoint,
    all_ideal,
    all_passed,
    atom_graph,
    check_ca,
    check_cluster,
    check_ka_membership,
    check_lca,
    check_nca,
    cluster_of_ultrafilter,
    clusters,
    complete,
    contact_from_atom_graph,
    designated_relation,
    interval_point_cluster,
    overlap,
    precedes_c,
    relation_contained,
    separating_family,
    sigma_infinity,
)
from contactdual.errors import PreconditionError
from contactdual.registry import structure
from strategies import interval_sets, reflexive_symmetric_graphs

LINE = IntervalLineAlgebra()
P3 = AtomSetAlgebra(3)


def verdicts(reports):
    return {r.axiom: r.verdict for r in reports}


def cx(report):
    return {k: str(v) for k, v in report.counterexample}


def test_overlap_on_three_atoms_is_normal_and_local():
    s = structure("p3_overlap")
    assert all(v == PASS for v in verdicts(check_nca(s)).values())
    assert all_passed(check_lca(s))


def test_path_graph_counterexamples():
    s = structure("path3")
    reps = {r.axiom: r for r in check_nca(s)}
    assert cx(reps["C5"]) == {"a": "{0}", "b": "{2}"}
    assert cx(reps["C6"]) == {"a": "{1}"}
    # the frozen C5 witness really has no separating element
    C = s.rho.holds
    a, b = 0b001, 0b100
    assert not C(a, b)
    assert not any(not C(a, w) and not C(b, P3.complement(w)) for w in P3.values())


def test_complete_graph_on_two_atoms_fails_c6():
    reps = {r.axiom: r for r in check_nca(structure("p2_complete"))}
    assert reps["C5"].passed
    assert cx(reps["C6"]) == {"a": "{0}"}


def test_proper_ideal_on_overlap_fails_bc2_and_bc3():
    s = ContactStructure(P3, overlap(P3), GeneratedIdeal(P3, 0b011))
    reps = {r.axiom: r for r in check_lca(s)}
    assert reps["BC1"].passed
    assert cx(reps["BC2"]) == {"a": "{2}", "b": "{2}"}
    assert cx(reps["BC3"]) == {"a": "{2}"}


@given(st.integers(1, 4).flatmap(reflexive_symmetric_graphs))
@settings(max_examples=40, deadline=None)
def test_reflexive_symmetric_graphs_give_contact_relations(g):
    c = g.carrier
    assert all_passed(check_ca(ContactStructure(c, g, all_ideal(c))))


@given(st.integers(1, 4).flatmap(reflexive_symmetric_graphs), st.data())
@settings(max_examples=60, deadline=None)
def test_way_below_is_non_contact_with_complement(g, data):
    c = g.carrier
    a = data.draw(st.integers(0, c.one))
    b = data.draw(st.integers(0, c.one))
    assert g.way_below(a, b) == (not g.holds(a, c.complement(b)))


def test_atom_graph_validation():
    with pytest.raises(PreconditionError):
        contact_from_atom_graph(P3, [(0, 0), (1, 1)])
    g = contact_from_atom_graph(P3, [(0, 0), (1, 1), (2, 2), (0, 1)])
    assert g.holds(0b010, 0b001) and g.holds(0b001, 0b010)


def test_removing_a_loop_breaks_c1():
    g = overlap(P3)
    broken = PatchedRelation(g, removed=frozenset({(0b001, 0b001)}))
    reps = {r.axiom: r for r in check_ca(ContactStructure(P3, broken, all_ideal(P3)))}
    assert reps["C1"].verdict == FAIL


def test_symmetry_break_fails_c3():
    g = atom_graph(P3, [(0, 0), (1, 1), (2, 2), (0, 1)])
    reps = {r.axiom: r for r in check_ca(ContactStructure(P3, g, all_ideal(P3)))}
    assert not reps["C3"].passed


def test_designated_relation():
    s = structure("p3_overlap")
    assert designated_relation(s) is s.rho
    proper = ContactStructure(P3, overlap(P3), GeneratedIdeal(P3, 0b011))
    assert isinstance(designated_relation(proper), Alexandroff)


def brute_clusters(s):
    """Direct search over all families of elements for K1-K3."""
    c = s.carrier
    C = designated_relation(s).holds
    vals = list(c.values())
    out = set()
    for code in range(1, 1 << len(vals)):
        mem = {v for k, v in enumerate(vals) if code >> k & 1}
        if not all(C(a, b) for a in mem for b in mem):
            continue
        if any(c.join(a, b) in mem and a not in mem and b not in mem for a in vals for b in vals):
            continue
        if any(a not in mem and all(C(a, b) for b in mem) for a in vals):
            continue
        out.add(frozenset(mem))
    return out


@pytest.mark.parametrize("gen", [0b111, 0b011, 0b001])
def test_clusters_match_brute_force_on_three_atoms(gen):
    s = ContactStructure(P3, overlap(P3), GeneratedIdeal(P3, gen))
    found = {cl.members for cl in clusters(s)}
    assert found == brute_clusters(s)
    for cl in clusters(s):
        assert all_passed(check_cluster(cl))


def test_sigma_infinity_is_a_cluster_for_proper_ideals():
    s = ContactStructure(P3, overlap(P3), GeneratedIdeal(P3, 0b011))
    inf = sigma_infinity(s)
    assert 0b100 in inf and 0b011 not in inf
    assert inf in clusters(s)
    with pytest.raises(PreconditionError):
        sigma_infinity(structure("p3_overlap"))


def test_ultrafilter_cluster_of_overlap_is_principal_filter():
    s = structure("p3_overlap")
    cl = cluster_of_ultrafilter(s, 1)
    assert cl.members == frozenset(v for v in P3.values() if v & 0b010)


def test_clusters_refuse_interval_carrier():
    with pytest.raises(PreconditionError):
        clusters(structure("interval_standard"))


# ---------------------------------------------------------------------------
# interval carrier


def interval_base():
    return ContactStructure(LINE, Standard(LINE), BoundedIdeal(LINE))


def test_interval_lca_is_sampled_and_reproducible():
    base = interval_base()
    first = check_lca(base, samples=150, seed=3)
    assert all(r.verdict == SAMPLED and r.samples == 150 for r in first)
    assert first == check_lca(base, samples=150, seed=3)


def test_witness_pair_separates_alexandroff_and_stone_relations():
    base = interval_base()
    a = IntervalSet.of((1, POS_INF))
    b = IntervalSet.of((NEG_INF, -1))
    assert not base.rho.holds(a, b)
    assert Alexandroff(base).holds(a, b)
    assert not BetaRho(base).holds(a, b)
    assert TwoPoint(LINE).holds(a, IntervalSet.of((NEG_INF, 5)))


def test_separating_family_exists_only_for_positive_gaps():
    base = interval_base()
    a = IntervalSet.of((0, 1))
    assert separating_family(LINE, (base.rho,), a, IntervalSet.of((3, 4))) is not None
    assert separating_family(LINE, (base.rho,), a, IntervalSet.of((1, 2))) is None


@given(interval_sets(), interval_sets())
@settings(max_examples=40, deadline=None)
def test_stone_relation_rule_matches_family_constructor(a, b):
    b = LINE.meet(b, LINE.complement(a))
    base = interval_base()
    expected = separating_family(LINE, (base.rho,), a, b) is None
    assert BetaRho(base).holds(a, b) == expected


def test_interval_relations_lie_in_ka():
    base = interval_base()
    for rel in (Alexandroff(base), BetaRho(base), TwoPoint(LINE)):
        assert all_passed(check_ka_membership(base, rel, samples=120, seed=1))


def test_ordering_of_interval_relations():
    base = interval_base()
    alex, stone, two = Alexandroff(base), BetaRho(base), TwoPoint(LINE)
    assert precedes_c(LINE, alex, two, samples=200, seed=2)
    assert precedes_c(LINE, two, stone, samples=200, seed=2)
    assert relation_contained(LINE, stone, alex, samples=200, seed=2).passed


def test_point_clusters_on_the_line():
    base = interval_base()
    cl = interval_point_cluster(base, Fraction(1, 2))
    assert IntervalSet.of((0, 1)) in cl
    assert IntervalSet.of((1, 2)) not in cl
    assert all_passed(check_cluster(cl, samples=100, seed=0))


def test_supremum_contains_members_and_is_idempotent():
    s = ContactStructure(P3, overlap(P3), GeneratedIdeal(P3, 0b011))
    alex = Alexandroff(s)
    sup = Supremum(s, (alex, alex))
    single = Supremum(s, (alex,))
    for a, b in product(P3.values(), repeat=2):
        assert sup.holds(a, b) == single.holds(a, b)
        if alex.holds(a, b):
            assert sup.holds(a, b)


def test_elements_are_accepted_by_structures():
    s = structure("p3_overlap")
    assert s.related(Element(P3, 1), Element(P3, 3))
    assert not s.related(Element(P3, 1), Element(P3, 2))
    assert s.way_below(Element(P3, 1), Element(P3, 1))
    assert complete(P3).holds(1, 2)
