from __future__ import annotations

import pytest

from contactdual.carrier import AtomSetAlgebra
from contactdual.contact import complete, overlap
from contactdual.errors import PreconditionError
from contactdual.suites import brute_force_clusters, finite_instances, run_suite, triple_loop_nca


def test_triple_loop_oracle():
    c = AtomSetAlgebra(3)
    assert triple_loop_nca(c, overlap(c))
    assert not triple_loop_nca(c, complete(c))


def test_finite_instances_are_overlap_with_everything_bounded():
    inst = finite_instances(3)
    assert len(inst) == 3
    for s in inst:
        assert s.rho == overlap(s.carrier)
        assert s.ib.generator == s.carrier.one
        assert len(brute_force_clusters(s)) == s.carrier.n


@pytest.mark.parametrize("name", ["posets", "extensions", "skeletal"])
def test_small_suites_pass_and_echo_parameters(name):
    (res,) = run_suite(name, 2, 50, 5)
    assert res.passed
    assert res.header() == f"suite {name} (max-atoms 2, samples 50, seed 5)"
    assert res.to_json()["seed"] == 5


def test_suite_arguments_validated():
    with pytest.raises(PreconditionError):
        run_suite("nope", 2, 10, 0)
    with pytest.raises(PreconditionError):
        run_suite("axioms", 0, 10, 0)
