"""Graphviz DOT output for atom graphs, specialization preorders and posets."""

from __future__ import annotations

from .contact import AtomGraph
from .errors import PreconditionError
from .extensions import AdmissibleEnumeration
from .spaces import FiniteSpace


def _quote(s) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _digraph(name: str, nodes: list, edges: list) -> str:
    lines = [f"digraph {name} {{"]
    lines += [f"  {_quote(n)};" for n in nodes]
    lines += [f"  {_quote(a)} -> {_quote(b)};" for a, b in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_dot(obj) -> str:
    """DOT digraph with nodes and edges in a fixed order.

    * ``AtomGraph``: one node per atom, one edge per unordered adjacency
      (loops as self-edges).
    * ``FiniteSpace``: the specialization preorder, ``x -> y`` when ``x`` lies
      in the closure of ``y``.
    * ``AdmissibleEnumeration``: the strict order between structures.
    """
    if isinstance(obj, AtomGraph):
        n = obj.carrier.n
        return _digraph("atoms", [f"a{i}" for i in range(n)],
                        [(f"a{i}", f"a{j}") for i, j in obj.edges() if i <= j])
    if isinstance(obj, FiniteSpace):
        return _digraph("space", list(obj.points), obj.specialization())
    if isinstance(obj, AdmissibleEnumeration):
        nodes = [f"s{i}" for i in range(len(obj.structures))]
        return _digraph("admissible", nodes, [(f"s{i}", f"s{j}") for i, j in obj.order if i != j])
    raise PreconditionError(f"cannot render {type(obj).__name__} as DOT")
