"""Named built-in instances, so the CLI and tests need no external files."""

from __future__ import annotations

from .carrier import AtomSetAlgebra, IntervalLineAlgebra
from .contact import AllIdeal, BoundedIdeal, ContactStructure, Standard, TwoPoint, all_ideal, atom_graph, complete, overlap
from .errors import InputError
from .spaces import FiniteSpace, SpaceMap, circle4, regular_closed_algebra, sierpinski


def _p3_overlap() -> ContactStructure:
    c = AtomSetAlgebra(3)
    return ContactStructure(c, overlap(c), all_ideal(c))


def _p2_complete() -> ContactStructure:
    c = AtomSetAlgebra(2)
    return ContactStructure(c, complete(c), all_ideal(c))


def _path3() -> ContactStructure:
    c = AtomSetAlgebra(3)
    edges = [(0, 0), (1, 1), (2, 2), (0, 1), (1, 0), (1, 2), (2, 1)]
    return ContactStructure(c, atom_graph(c, edges), all_ideal(c))


def _interval_standard() -> ContactStructure:
    c = IntervalLineAlgebra()
    return ContactStructure(c, Standard(c), BoundedIdeal(c))


def _interval_two_point() -> ContactStructure:
    c = IntervalLineAlgebra()
    return ContactStructure(c, TwoPoint(c), AllIdeal(c))


STRUCTURES = {
    "p3_overlap": _p3_overlap,
    "p2_complete": _p2_complete,
    "path3": _path3,
    "circle4": lambda: regular_closed_algebra(circle4()),
    "sierpinski": lambda: regular_closed_algebra(sierpinski()),
    "interval_standard": _interval_standard,
    "interval_two_point": _interval_two_point,
}

SPACES = {
    "discrete1": lambda: FiniteSpace.discrete(1),
    "discrete2": lambda: FiniteSpace.discrete(2),
    "discrete3": lambda: FiniteSpace.discrete(3),
    "discrete4": lambda: FiniteSpace.discrete(4),
    "sierpinski": sierpinski,
    "circle4": circle4,
}


def _collapse() -> SpaceMap:
    return SpaceMap(FiniteSpace.discrete(3), FiniteSpace.discrete(2), (0, 0, 1))


def _open_point() -> SpaceMap:
    s = sierpinski()
    return SpaceMap(s.subspace(["1"]), s, (s.index("1"),))


MAPS = {
    "collapse_3_2": _collapse,
    "identity_discrete3": lambda: SpaceMap.identity(FiniteSpace.discrete(3)),
    "sierpinski_open_point": _open_point,
}


def lookup(table: dict, name: str, what: str):
    if name not in table:
        known = ", ".join(sorted(table))
        raise InputError(f"unknown {what} {name!r} (built-ins: {known})")
    return table[name]()


def structure(name: str) -> ContactStructure:
    return lookup(STRUCTURES, name, "structure")


def space(name: str) -> FiniteSpace:
    return lookup(SPACES, name, "space")


def space_map(name: str) -> SpaceMap:
    return lookup(MAPS, name, "map")
