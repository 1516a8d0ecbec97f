from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contactdual.carrier import IntervalSet
from contactdual.contact import ContactStructure, GeneratedIdeal, overlap
from contactdual.duality import (
    AlgebraMorphism,
    check_dhlc,
    check_lo,
    compose,
    enumerate_dhlc,
    is_boolean_homomorphism,
    is_dhlc,
    lambda_a,
    lambda_a_ultrafilter,
    lambda_g_iso_check,
    lambda_t,
    left_adjoint,
    psi_a,
    psi_t,
    t_map,
)
from contactdual.errors import AxiomFailure, PreconditionError
from contactdual.registry import structure
from contactdual.spaces import FiniteSpace, SpaceMap, all_maps, sierpinski

D = {n: FiniteSpace.discrete(n) for n in (1, 2, 3)}
maps_strategy = st.tuples(st.sampled_from([1, 2, 3]), st.sampled_from([1, 2, 3])).flatmap(
    lambda nm: st.sampled_from(all_maps(D[nm[0]], D[nm[1]])))


def test_cluster_space_of_overlap_is_discrete():
    dual = psi_a(structure("p3_overlap"))
    assert dual.space.points == ("u0", "u1", "u2")
    assert dual.space.is_discrete
    assert not dual.bounded_only


def test_psi_a_rejects_non_normal_structures():
    with pytest.raises(AxiomFailure) as exc:
        psi_a(structure("p2_complete"))
    assert any(r.axiom == "C6" for r in exc.value.reports)
    P3 = structure("p3_overlap").carrier
    with pytest.raises(AxiomFailure):
        psi_a(ContactStructure(P3, overlap(P3), GeneratedIdeal(P3, 0b011)))
    with pytest.raises(PreconditionError):
        psi_a(structure("interval_standard"))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_t_map_is_homeomorphism_for_discrete_spaces(n):
    assert t_map(FiniteSpace.discrete(n)).homeomorphism


def test_t_map_collapses_sierpinski():
    # both points have the same regular closed neighbourhoods
    t = t_map(sierpinski())
    assert t.pairs() == [("0", "u0"), ("1", "u0")]
    assert not t.homeomorphism


def test_lambda_g_on_overlap():
    assert lambda_g_iso_check(structure("p3_overlap")).ok


@pytest.mark.parametrize("m,k", [(1, 1), (1, 3), (2, 2), (2, 3), (3, 2)])
def test_morphism_count_is_number_of_maps(m, k):
    # morphisms P(m) -> P(k) correspond to maps from k points to m points
    assert len(enumerate_dhlc(psi_t(D[m]), psi_t(D[k]))) == m ** k


def test_zero_morphism_counterexamples():
    s = psi_t(D[2])
    z = AlgebraMorphism(s, s, (0, 0, 0, 0))
    reps = {r.axiom: r for r in check_dhlc(z)}
    assert reps["DLC1"].passed and reps["DLC2"].passed and reps["DLC5"].passed
    assert [str(v) for _, v in reps["DLC4"].counterexample] == ["{0}"]
    assert not reps["DLC3"].passed


def test_morphism_table_validation():
    s = psi_t(D[2])
    with pytest.raises(PreconditionError):
        AlgebraMorphism(s, s, (0, 1, 2))
    with pytest.raises(PreconditionError):
        AlgebraMorphism(s, s, (0, 1, 2, 9))
    with pytest.raises(PreconditionError):
        AlgebraMorphism(s, s)


@given(maps_strategy)
@settings(max_examples=50, deadline=None)
def test_lambda_t_gives_boolean_morphisms(f):
    phi = lambda_t(f)
    assert is_dhlc(phi)
    assert is_boolean_homomorphism(phi)
    assert check_lo(phi).passed
    assert lambda_a(phi) == lambda_a_ultrafilter(phi)
    adj = left_adjoint(phi)
    A = phi.source.carrier
    assert all(A.leq(adj[phi.table[a]], a) for a in A.values())


@given(maps_strategy)
@settings(max_examples=50, deadline=None)
def test_lambda_a_recovers_map_through_t(f):
    phi = lambda_t(f)
    assert t_map(f.domain).then(lambda_a(phi)) == f.then(t_map(f.codomain))


@given(maps_strategy, st.data())
@settings(max_examples=50, deadline=None)
def test_composition_laws(f, data):
    Z = D[data.draw(st.sampled_from([1, 2, 3]))]
    g = data.draw(st.sampled_from(all_maps(f.codomain, Z)))
    assert compose(lambda_t(f), lambda_t(g)) == lambda_t(f.then(g))
    prod = compose(lambda_t(f), lambda_t(g))
    assert lambda_a(prod) == lambda_a(lambda_t(f)).then(lambda_a(lambda_t(g)))


def test_identity_laws():
    for X in D.values():
        idm = AlgebraMorphism.identity(psi_t(X))
        assert lambda_t(SpaceMap.identity(X)) == idm
        assert lambda_a(idm) == SpaceMap.identity(psi_a(psi_t(X)).space)


def test_compose_rejects_mismatched_morphisms():
    a = AlgebraMorphism.identity(psi_t(D[2]))
    b = AlgebraMorphism.identity(psi_t(D[3]))
    with pytest.raises(PreconditionError):
        compose(a, b)


def test_left_adjoint_needs_boolean_homomorphism():
    s = psi_t(D[2])
    with pytest.raises(PreconditionError):
        left_adjoint(AlgebraMorphism(s, s, (0, 0, 0, 0)))


def test_interval_rules():
    s = structure("interval_standard")
    aff = AlgebraMorphism(s, s, rule=("affine", 2, 1))
    assert aff(IntervalSet.of((0, 1))) == IntervalSet.of((1, 3))
    cut = AlgebraMorphism(s, s, rule=("meet", IntervalSet.of((0, 5))))
    assert cut(IntervalSet.of((-1, 1))) == IntervalSet.of((0, 1))
    with pytest.raises(PreconditionError):
        AlgebraMorphism(s, s, rule=("affine", -1, 0))
