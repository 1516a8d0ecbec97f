"""Contact algebras, their cluster spaces, and extensions of maps between
finite spaces, with exact checkers for the axioms involved."""

from .carrier import AtomSetAlgebra, Element, IntervalLineAlgebra, IntervalSet
from .contact import (
    AxiomReport,
    ContactStructure,
    check_ca,
    check_lca,
    check_nca,
    clusters,
)
from .duality import lambda_a, lambda_t, psi_a, psi_t, t_map
from .errors import AxiomFailure, CarrierMismatch, InputError, PreconditionError
from .extensions import check_main_conditions, check_req, enumerate_admissible, extend_map
from .spaces import FiniteSpace, SpaceMap

__version__ = "0.1.0"

__all__ = [
    "AtomSetAlgebra",
    "AxiomFailure",
    "AxiomReport",
    "CarrierMismatch",
    "ContactStructure",
    "Element",
    "FiniteSpace",
    "InputError",
    "IntervalLineAlgebra",
    "IntervalSet",
    "PreconditionError",
    "SpaceMap",
    "check_ca",
    "check_lca",
    "check_main_conditions",
    "check_nca",
    "check_req",
    "clusters",
    "enumerate_admissible",
    "extend_map",
    "lambda_a",
    "lambda_t",
    "psi_a",
    "psi_t",
    "t_map",
]
