"""Structured-text (JSON) reading and writing.

Element literals: atom sets are sorted lists of atom indices; interval sets
are lists of ``[lo, hi]`` pairs whose endpoints are ``"p/q"`` strings or
the tokens ``"-inf"`` / ``"inf"``.  Plain integers and ``"p"`` strings are
accepted on input.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .carrier import NEG_INF, POS_INF, AtomSetAlgebra, Element, Infinity, IntervalLineAlgebra, IntervalSet
from .contact import (
    AllIdeal,
    Alexandroff,
    AtomGraph,
    AxiomReport,
    BetaRho,
    BoundedIdeal,
    ContactStructure,
    GeneratedIdeal,
    Standard,
    Supremum,
    TableRelation,
    TwoPoint,
    contact_from_atom_graph,
)
from .errors import InputError, PreconditionError
from .spaces import FiniteSpace, RegularClosedAlgebra, SpaceMap, rc_algebra

INTERVAL = IntervalLineAlgebra()


def loads(text: str):
    """``json.loads`` with line/column reporting."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(exc.msg, exc.lineno, exc.colno) from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _need(obj, key, what):
    if not isinstance(obj, dict):
        raise InputError(f"{what} must be an object")
    if key not in obj:
        raise InputError(f"{what} is missing {key!r}")
    return obj[key]


# ---------------------------------------------------------------------------
# elements


def _endpoint_out(x) -> str:
    if isinstance(x, Infinity):
        return repr(x)
    return f"{x.numerator}/{x.denominator}"


def _endpoint_in(tok):
    if tok == "-inf":
        return NEG_INF
    if tok == "inf":
        return POS_INF
    if isinstance(tok, bool) or not isinstance(tok, (int, str)):
        raise InputError(f"bad endpoint {tok!r}")
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad endpoint {tok!r}") from None


def element_to_json(carrier, value):
    if isinstance(value, Element):
        value = value.value
    if carrier.is_finite:
        return carrier.atoms_of(value)
    return [[_endpoint_out(lo), _endpoint_out(hi)] for lo, hi in value.components]


def element_from_json(carrier, data):
    if carrier.is_finite:
        if not isinstance(data, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in data):
            raise InputError(f"atom set literal must be a list of integers, got {data!r}")
        try:
            return carrier.from_atoms(data)
        except PreconditionError as exc:
            raise InputError(str(exc)) from None
    if not isinstance(data, list) or not all(isinstance(p, list) and len(p) == 2 for p in data):
        raise InputError(f"interval literal must be a list of [lo, hi] pairs, got {data!r}")
    pairs = [(_endpoint_in(lo), _endpoint_in(hi)) for lo, hi in data]
    for lo, hi in pairs:
        if not lo < hi:
            raise InputError(f"degenerate or reversed interval [{_endpoint_out(lo)}, {_endpoint_out(hi)}]")
    return IntervalSet.of(*pairs)


# ---------------------------------------------------------------------------
# spaces and maps


def space_to_json(space: FiniteSpace) -> dict:
    return {
        "points": list(space.points),
        "opens": [sorted(space.names(u)) for u in space.sorted_opens],
    }


def space_from_json(data, registry=None) -> FiniteSpace:
    if isinstance(data, str):
        if registry is None or data not in registry:
            raise InputError(f"unknown space {data!r}")
        return registry[data]()
    points = _need(data, "points", "space")
    if not isinstance(points, list):
        raise InputError("space points must be a list")
    try:
        if "opens" in data:
            return FiniteSpace.from_opens(points, data["opens"])
        if "preorder" in data:
            return FiniteSpace.from_preorder(points, data["preorder"])
    except (PreconditionError, TypeError, ValueError) as exc:
        raise InputError(f"bad space: {exc}") from None
    raise InputError("space needs 'opens' or 'preorder'")


def map_to_json(f: SpaceMap) -> dict:
    return {
        "domain": space_to_json(f.domain),
        "codomain": space_to_json(f.codomain),
        "pairs": [list(p) for p in f.pairs()],
    }


def map_from_json(data, spaces=None) -> SpaceMap:
    dom = space_from_json(_need(data, "domain", "map"), spaces)
    cod = space_from_json(_need(data, "codomain", "map"), spaces)
    try:
        return SpaceMap.from_pairs(dom, cod, _need(data, "pairs", "map"))
    except (PreconditionError, TypeError, ValueError) as exc:
        raise InputError(f"bad map: {exc}") from None


# ---------------------------------------------------------------------------
# structures


def carrier_to_json(carrier) -> dict:
    if isinstance(carrier, RegularClosedAlgebra):
        return {"kind": "rc", "space": space_to_json(carrier.space)}
    if carrier.is_finite:
        return {"kind": "atoms", "n": carrier.n}
    return {"kind": "interval"}


def carrier_from_json(data, spaces=None):
    kind = _need(data, "kind", "carrier")
    if kind == "atoms":
        n = _need(data, "n", "carrier")
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise InputError("atom count must be a non-negative integer")
        return AtomSetAlgebra(n)
    if kind == "interval":
        return INTERVAL
    if kind == "rc":
        return rc_algebra(space_from_json(_need(data, "space", "carrier"), spaces))
    raise InputError(f"unknown carrier kind {kind!r}")


def relation_to_json(rel) -> dict:
    c = rel.carrier
    if isinstance(rel, AtomGraph):
        return {"kind": "atom_graph", "graph": [[i, j] for i, j in rel.edges() if i <= j]}
    if isinstance(rel, Standard):
        return {"kind": "standard"}
    if isinstance(rel, TwoPoint):
        return {"kind": "two_point"}
    if isinstance(rel, Alexandroff):
        return {"kind": "alexandroff", "base": structure_to_json(rel.base)}
    if isinstance(rel, BetaRho):
        return {"kind": "beta_rho", "base": structure_to_json(rel.base)}
    if isinstance(rel, Supremum):
        return {"kind": "supremum", "base": structure_to_json(rel.base),
                "members": [relation_to_json(m) for m in rel.members]}
    if isinstance(rel, TableRelation):
        return {"kind": "table", "pairs": [[element_to_json(c, a), element_to_json(c, b)]
                                           for a, b in sorted(rel.pairs)]}
    raise PreconditionError(f"relation kind {rel.kind!r} is not serializable")


def relation_from_json(data, carrier, spaces=None):
    kind = _need(data, "kind", "relation")
    if kind == "atom_graph":
        if not carrier.is_finite:
            raise InputError("atom_graph needs a finite carrier")
        graph = _need(data, "graph", "relation")
        try:
            return contact_from_atom_graph(carrier, [tuple(e) for e in graph])
        except (PreconditionError, TypeError, ValueError, IndexError) as exc:
            raise InputError(f"bad atom graph: {exc}") from None
    if kind == "standard":
        return Standard(carrier)
    if kind == "two_point":
        if carrier.is_finite:
            raise InputError("two_point needs the interval carrier")
        return TwoPoint(carrier)
    if kind in ("alexandroff", "beta_rho", "supremum"):
        base = structure_from_json(_need(data, "base", "relation"), spaces)
        if base.carrier != carrier:
            raise InputError(f"{kind} base has a different carrier")
        if kind == "alexandroff":
            return Alexandroff(base)
        if kind == "beta_rho":
            return BetaRho(base)
        members = [relation_from_json(m, carrier, spaces) for m in _need(data, "members", "relation")]
        if not members:
            raise InputError("supremum needs at least one member")
        return Supremum(base, tuple(members))
    if kind == "table":
        if not carrier.is_finite:
            raise InputError("table relations need a finite carrier")
        pairs = frozenset((element_from_json(carrier, a), element_from_json(carrier, b))
                          for a, b in _need(data, "pairs", "relation"))
        return TableRelation(carrier, pairs)
    raise InputError(f"unknown relation kind {kind!r}")


def ideal_to_json(ideal) -> dict:
    if isinstance(ideal, GeneratedIdeal):
        return {"kind": "generated", "generator": element_to_json(ideal.carrier, ideal.generator)}
    return {"kind": ideal.kind}


def ideal_from_json(data, carrier):
    kind = _need(data, "kind", "ideal")
    if kind == "generated":
        if not carrier.is_finite:
            raise InputError("generated ideals need a finite carrier")
        return GeneratedIdeal(carrier, element_from_json(carrier, _need(data, "generator", "ideal")))
    if kind == "all":
        return GeneratedIdeal(carrier, carrier.one) if carrier.is_finite else AllIdeal(carrier)
    if kind == "bounded":
        if carrier.is_finite:
            raise InputError("the bounded ideal needs the interval carrier")
        return BoundedIdeal(carrier)
    raise InputError(f"unknown ideal kind {kind!r}")


def structure_to_json(s: ContactStructure) -> dict:
    return {
        "carrier": carrier_to_json(s.carrier),
        "relation": relation_to_json(s.rho),
        "ideal": ideal_to_json(s.ib),
    }


def structure_from_json(data, spaces=None) -> ContactStructure:
    carrier = carrier_from_json(_need(data, "carrier", "structure"), spaces)
    rel = relation_from_json(_need(data, "relation", "structure"), carrier, spaces)
    ideal = ideal_from_json(data.get("ideal", {"kind": "all"}), carrier)
    return ContactStructure(carrier, rel, ideal)


# ---------------------------------------------------------------------------
# reports


def report_to_json(report: AxiomReport, carrier=None) -> dict:
    out = {"axiom": report.axiom, "verdict": report.verdict}
    if report.counterexample is not None:
        cx = {}
        for k, v in report.counterexample:
            cx[k] = element_to_json(v.carrier, v.value) if isinstance(v, Element) else v
        out["counterexample"] = cx
    if report.samples is not None:
        out["samples"] = report.samples
    if report.note:
        out["note"] = report.note
    return out
