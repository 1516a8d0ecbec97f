"""Contact relations, ideals, axiom checkers and clusters.

Relations are intensional evaluators: ``rel.holds(a, b)`` on raw carrier
values.  Universal axioms are checked exhaustively on finite carriers and by
seeded sampling on the interval carrier; existential clauses search all
elements (finite) or a pool of constructed candidates (interval).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Callable, Iterable, Optional, Sequence

from .carrier import (
    AtomSetAlgebra,
    Carrier,
    Element,
    IntervalLineAlgebra,
    IntervalSet,
    raw,
)
from .errors import PreconditionError

PASS = "pass"
FAIL = "fail"
SAMPLED = "sampled-pass"

DEFAULT_SAMPLES = 1000
DEFAULT_SEED = 0
DYADIC_LEVEL = 4


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class AxiomReport:
    """Verdict for one axiom; failures always carry a counterexample."""

    axiom: str
    verdict: str
    counterexample: Optional[tuple] = None
    samples: Optional[int] = None
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict != FAIL

    def __str__(self):
        if self.verdict == FAIL:
            cx = ", ".join(f"{k}={v}" for k, v in self.counterexample)
            return f"{self.axiom}: fail ({cx})"
        if self.verdict == SAMPLED:
            return f"{self.axiom}: sampled-pass ({self.samples} samples)"
        return f"{self.axiom}: pass"


def all_passed(reports: Iterable[AxiomReport]) -> bool:
    return all(r.passed for r in reports)


def failures(reports: Iterable[AxiomReport]) -> list:
    return [r for r in reports if not r.passed]


# ---------------------------------------------------------------------------
# ideals


@dataclass(frozen=True)
class GeneratedIdeal:
    """Principal ideal ``{a | a <= generator}`` of a finite carrier."""

    carrier: AtomSetAlgebra
    generator: int
    kind = "generated"

    def contains(self, a) -> bool:
        return a & ~self.generator == 0

    @property
    def is_proper(self) -> bool:
        return self.generator != self.carrier.one


@dataclass(frozen=True)
class BoundedIdeal:
    """Elements of the interval carrier without ray components."""

    carrier: IntervalLineAlgebra
    kind = "bounded"

    def contains(self, a) -> bool:
        return a.is_bounded

    @property
    def is_proper(self) -> bool:
        return True


@dataclass(frozen=True)
class AllIdeal:
    carrier: Carrier
    kind = "all"

    def contains(self, a) -> bool:
        return True

    @property
    def is_proper(self) -> bool:
        return False


def all_ideal(carrier: Carrier):
    if carrier.is_finite:
        return GeneratedIdeal(carrier, carrier.one)
    return AllIdeal(carrier)


# ---------------------------------------------------------------------------
# contact relations


class ContactRelation:
    """Evaluator interface: ``holds(a, b)`` decides ``a C b`` on raw values."""

    kind = "abstract"
    carrier: Carrier

    def holds(self, a, b) -> bool:
        raise NotImplementedError

    def way_below(self, a, b) -> bool:
        return not self.holds(a, self.carrier.complement(b))


class _Memo:
    """Per-instance memo for derived relations on finite carriers."""

    def _memo_holds(self, a, b, compute):
        cache = self.__dict__.setdefault("_cache", {})
        key = (a, b)
        hit = cache.get(key)
        if hit is None:
            hit = cache[key] = compute(a, b)
        return hit


@dataclass(frozen=True)
class AtomGraph(ContactRelation):
    """Relation generated by an adjacency on atoms (loops included).

    ``adjacency[i]`` is the bitmask of atoms adjacent to atom ``i``.  Then
    ``a C b`` iff some atom of ``a`` is adjacent to some atom of ``b``.
    """

    carrier: AtomSetAlgebra
    adjacency: tuple
    kind = "atom_graph"

    @cached_property
    def _reach(self) -> tuple:
        n = self.carrier.n
        reach = [0] * (1 << n)
        for v in range(1, 1 << n):
            low = (v & -v).bit_length() - 1
            reach[v] = reach[v & (v - 1)] | self.adjacency[low]
        return tuple(reach)

    def holds(self, a, b) -> bool:
        return self._reach[a] & b != 0

    def edges(self) -> list:
        return [(i, j) for i in range(self.carrier.n) for j in range(self.carrier.n) if self.adjacency[i] >> j & 1]


def atom_graph(carrier: AtomSetAlgebra, edges: Iterable, validate: bool = False) -> AtomGraph:
    """Build an ``AtomGraph`` from ``(i, j)`` pairs taken as given (directed)."""
    adj = [0] * carrier.n
    for i, j in edges:
        adj[i] |= 1 << j
    g = AtomGraph(carrier, tuple(adj))
    if validate:
        _validate_graph(g)
    return g


def _validate_graph(g: AtomGraph):
    n = g.carrier.n
    for i in range(n):
        if not g.adjacency[i] >> i & 1:
            raise PreconditionError(f"atom graph is not reflexive at atom {i}")
        for j in range(n):
            if (g.adjacency[i] >> j & 1) != (g.adjacency[j] >> i & 1):
                raise PreconditionError(f"atom graph is not symmetric on ({i}, {j})")


def contact_from_atom_graph(carrier: AtomSetAlgebra, edges: Iterable) -> AtomGraph:
    """Contact relation of a reflexive-symmetric graph; edges are unordered."""
    pairs = set()
    for i, j in edges:
        pairs.add((i, j))
        pairs.add((j, i))
    return atom_graph(carrier, sorted(pairs), validate=True)


def overlap(carrier: AtomSetAlgebra) -> AtomGraph:
    """The smallest contact ``a C b`` iff ``a & b != 0``."""
    return atom_graph(carrier, [(i, i) for i in range(carrier.n)])


def complete(carrier: AtomSetAlgebra) -> AtomGraph:
    """The largest contact ``a C b`` iff ``a != 0`` and ``b != 0``."""
    return atom_graph(carrier, [(i, j) for i in range(carrier.n) for j in range(carrier.n)])


@dataclass(frozen=True)
class TableRelation(ContactRelation):
    """Explicit finite relation (materialised pair set)."""

    carrier: AtomSetAlgebra
    pairs: frozenset
    kind = "table"

    def holds(self, a, b) -> bool:
        return (a, b) in self.pairs


@dataclass(frozen=True)
class PatchedRelation(ContactRelation):
    """``inner`` with some pairs forced on or off; used for mutation tests."""

    inner: ContactRelation
    added: frozenset = frozenset()
    removed: frozenset = frozenset()
    kind = "patched"

    @property
    def carrier(self):
        return self.inner.carrier

    def holds(self, a, b) -> bool:
        if (a, b) in self.removed:
            return False
        return (a, b) in self.added or self.inner.holds(a, b)


@dataclass(frozen=True)
class Standard(ContactRelation):
    """Contact as non-empty intersection of the underlying point sets."""

    carrier: Carrier
    kind = "standard"

    def holds(self, a, b) -> bool:
        return self.carrier.intersects(a, b)


@dataclass(frozen=True)
class TwoPoint(ContactRelation):
    """Interval carrier: intersect, or both unbounded towards the same side."""

    carrier: IntervalLineAlgebra
    kind = "two_point"

    def holds(self, a, b) -> bool:
        return a.intersects(b) or bool(a.unbounded_sides & b.unbounded_sides)


@dataclass(frozen=True)
class Alexandroff(ContactRelation):
    """``a C b`` iff ``a rho b`` or neither ``a`` nor ``b`` is bounded."""

    base: "ContactStructure"
    kind = "alexandroff"

    @property
    def carrier(self):
        return self.base.carrier

    def holds(self, a, b) -> bool:
        ib = self.base.ib
        return self.base.rho.holds(a, b) or (not ib.contains(a) and not ib.contains(b))


@dataclass(frozen=True)
class BetaRho(ContactRelation, _Memo):
    """The relation whose non-contact is witnessed by a dyadic interpolating family.

    Finite carriers: any such family repeats a value ``c`` and so forces
    ``c << c``; a constant family at such a ``c`` is enough.  Interval
    carrier over the standard contact: disjoint finite unions have a
    positive gap, so non-contact is plain disjointness.
    """

    base: "ContactStructure"
    kind = "beta_rho"

    @property
    def carrier(self):
        return self.base.carrier

    def holds(self, a, b) -> bool:
        if self.carrier.is_finite:
            return self._memo_holds(a, b, self._finite)
        if self.base.rho.kind == "standard":
            return a.intersects(b)
        return separating_family(self.carrier, [self.base.rho], a, b) is None

    def _finite(self, a, b) -> bool:
        return not _repeated_value_witness(self.carrier, [self.base.rho], a, b)


@dataclass(frozen=True)
class Supremum(ContactRelation, _Memo):
    """Relation of the family-interpolation clauses taken over several members."""

    base: "ContactStructure"
    members: tuple
    kind = "supremum"

    def __post_init__(self):
        if not self.members:
            raise PreconditionError("supremum of an empty list of relations")

    @property
    def carrier(self):
        return self.base.carrier

    def holds(self, a, b) -> bool:
        if self.carrier.is_finite:
            return self._memo_holds(a, b, self._finite)
        return separating_family(self.carrier, list(self.members), a, b) is None

    def _finite(self, a, b) -> bool:
        return not _repeated_value_witness(self.carrier, list(self.members), a, b)


def _repeated_value_witness(carrier, relations, a, b) -> bool:
    nb = carrier.complement(b)
    for c in carrier.values():
        if all(r.way_below(a, c) and r.way_below(c, c) and r.way_below(c, nb) for r in relations):
            return True
    return False


def dyadics(level: int = DYADIC_LEVEL) -> list:
    """Dyadic rationals ``k / 2**level`` in the open unit interval."""
    return [Fraction(k, 2**level) for k in range(1, 2**level)]


def separating_family(carrier: IntervalLineAlgebra, relations, a, b, level: int = DYADIC_LEVEL):
    """Explicit dyadic-indexed interpolating family for ``a`` against ``b``.

    Tries the neighbourhood family ``c_d = N_{r(d)}(a)`` with radii growing
    in ``d`` and the co-neighbourhood family ``c_d = cl(R - N_{s(d)}(b))``
    with radii shrinking in ``d``.  A family is returned (as a callable on
    dyadics) only after clauses (1) and (2) have been verified for every
    relation on all dyadics of the given level; otherwise ``None``.
    """
    gap = a.distance(b)
    if gap is None:
        scale = Fraction(3)
    elif gap == 0:
        scale = None
    else:
        scale = gap
    families = []
    if scale is not None:
        families.append(lambda d: a.neighborhood(scale * (1 + d) / 3))
        families.append(lambda d: carrier.complement(b.neighborhood(scale * (2 - d) / 3)))
    families.append(lambda d: carrier.zero)
    families.append(lambda d: carrier.one)
    ds = dyadics(level)
    nb = carrier.complement(b)
    for fam in families:
        values = [fam(d) for d in ds]
        ok = all(
            r.way_below(a, c) and r.way_below(c, nb) for r in relations for c in values
        ) and all(
            r.way_below(values[i], values[j])
            for r in relations
            for i in range(len(values))
            for j in range(i + 1, len(values))
        )
        if ok:
            return fam
    return None


# ---------------------------------------------------------------------------
# structures


@dataclass(frozen=True)
class ContactStructure:
    """A carrier with a contact relation and an ideal of bounded elements.

    No axioms are imposed here; use the ``check_*`` functions.
    """

    carrier: Carrier
    rho: ContactRelation
    ib: object

    def related(self, a, b) -> bool:
        return self.rho.holds(raw(self.carrier, a), raw(self.carrier, b))

    def way_below(self, a, b) -> bool:
        return self.rho.way_below(raw(self.carrier, a), raw(self.carrier, b))

    def bounded(self, a) -> bool:
        return self.ib.contains(raw(self.carrier, a))

    def with_relation(self, rel: ContactRelation, ib=None) -> "ContactStructure":
        return ContactStructure(self.carrier, rel, self.ib if ib is None else ib)


def way_below(structure: ContactStructure, a, b) -> bool:
    """``a << b`` iff ``a`` is not in contact with the complement of ``b``."""
    return structure.way_below(a, b)


def alexandroff_extension(structure: ContactStructure) -> Alexandroff:
    return Alexandroff(structure)


def beta_rho(structure: ContactStructure) -> BetaRho:
    return BetaRho(structure)


def supremum_relation(base: ContactStructure, relations: Sequence[ContactRelation]) -> Supremum:
    return Supremum(base, tuple(relations))


def designated_relation(structure: ContactStructure) -> ContactRelation:
    """Relation whose clusters are the points: ``C_rho`` when the ideal is proper."""
    if structure.ib.contains(structure.carrier.one):
        return structure.rho
    return Alexandroff(structure)


def relation_table(carrier: AtomSetAlgebra, rel: ContactRelation) -> frozenset:
    return frozenset((a, b) for a in carrier.values() for b in carrier.values() if rel.holds(a, b))


def ideal_members(carrier: AtomSetAlgebra, ib) -> frozenset:
    return frozenset(a for a in carrier.values() if ib.contains(a))


# ---------------------------------------------------------------------------
# generic quantifier engine


@dataclass
class Quantified:
    ident: str
    names: tuple
    violated: Callable
    generate: Optional[Callable] = None


def run_quantified(structure, axiom: Quantified, samples: int, seed: int) -> AxiomReport:
    carrier = structure.carrier
    if carrier.is_finite:
        for tup in product(carrier.values(), repeat=len(axiom.names)):
            if axiom.violated(*tup):
                return _fail(carrier, axiom, tup)
        return AxiomReport(axiom.ident, PASS)
    rng = random.Random(f"{seed}:{axiom.ident}")
    for _ in range(samples):
        if axiom.generate is not None:
            tup = axiom.generate(rng)
        else:
            tup = tuple(carrier.sample(rng) for _ in axiom.names)
        if axiom.violated(*tup):
            return _fail(carrier, axiom, tup)
    return AxiomReport(axiom.ident, SAMPLED, samples=samples)


def _fail(carrier, axiom, tup) -> AxiomReport:
    return AxiomReport(axiom.ident, FAIL, tuple((k, Element(carrier, v)) for k, v in zip(axiom.names, tup)))


def _pool(carrier, *ctx, points=()):
    if carrier.is_finite:
        return carrier.values()
    return carrier.candidates(*ctx, points=points)


def separated_pair(carrier, rng):
    a = carrier.sample(rng)
    r = Fraction(rng.randint(1, 8), rng.choice((2, 4, 8)))
    b = carrier.meet(carrier.sample(rng), carrier.complement(a.neighborhood(r)))
    return a, b


def touching_pair(carrier, rng):
    a = carrier.sample(rng)
    b = carrier.sample(rng)
    ends = a.endpoints()
    if ends and rng.random() < 0.7:
        x = rng.choice(ends)
        b = carrier.join(b, IntervalSet.of((x - 1, x)) if rng.random() < 0.5 else IntervalSet.of((x, x + 1)))
    return a, b


def _contact_axioms(structure, rel: ContactRelation) -> list:
    c = structure.carrier
    C = rel.holds
    zero, one = c.zero, c.one

    def c5(a, b):
        if C(a, b):
            return False
        return not any(not C(a, w) and not C(b, c.complement(w)) for w in _pool(c, a, b))

    def c6(a):
        if a == one:
            return False
        return not any(w != zero and not C(w, a) for w in _pool(c, a))

    return [
        Quantified("C1", ("a",), lambda a: a != zero and not C(a, a)),
        Quantified("C2", ("a", "b"), lambda a, b: C(a, b) and (a == zero or b == zero),
               (lambda rng: touching_pair(c, rng)) if not c.is_finite else None),
        Quantified("C3", ("a", "b"), lambda a, b: C(a, b) != C(b, a),
               (lambda rng: touching_pair(c, rng)) if not c.is_finite else None),
        Quantified("C4", ("a", "b", "c"), lambda a, b, x: C(a, c.join(b, x)) != (C(a, b) or C(a, x))),
        Quantified("C5", ("a", "b"), c5, (lambda rng: separated_pair(c, rng)) if not c.is_finite else None),
        Quantified("C6", ("a",), c6),
    ]


def _local_axioms(structure) -> list:
    c = structure.carrier
    rho = structure.rho
    ib = structure.ib
    zero = c.zero
    wb = rho.way_below

    def bc1(a, x):
        if not (ib.contains(a) and wb(a, x)):
            return False
        return not any(ib.contains(w) and wb(a, w) and wb(w, x) for w in _pool(c, a, x))

    def bc2(a, b):
        if not rho.holds(a, b):
            return False
        return not any(ib.contains(w) and rho.holds(a, c.meet(w, b)) for w in _pool(c, a, b))

    def bc3(a):
        if a == zero:
            return False
        return not any(w != zero and ib.contains(w) and wb(w, a) for w in _pool(c, a))

    def gen_bc1(rng):
        a = c.sample_bounded(rng)
        r = Fraction(rng.randint(1, 8), rng.choice((2, 4, 8)))
        return a, c.join(a.neighborhood(r), c.sample(rng))

    return [
        Quantified("BC1", ("a", "c"), bc1, None if c.is_finite else gen_bc1),
        Quantified("BC2", ("a", "b"), bc2, None if c.is_finite else (lambda rng: touching_pair(c, rng))),
        Quantified("BC3", ("a",), bc3),
    ]


def _select(axioms, ids) -> list:
    by_id = {ax.ident: ax for ax in axioms}
    return [by_id[i] for i in ids]


def check_ca(structure: ContactStructure, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> list:
    axioms = _select(_contact_axioms(structure, structure.rho), ["C1", "C2", "C3", "C4"])
    return [run_quantified(structure, ax, samples, seed) for ax in axioms]


def check_nca(structure: ContactStructure, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> list:
    axioms = _select(_contact_axioms(structure, structure.rho), ["C1", "C2", "C3", "C4", "C5", "C6"])
    return [run_quantified(structure, ax, samples, seed) for ax in axioms]


def check_lca(structure: ContactStructure, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> list:
    axioms = _select(_contact_axioms(structure, structure.rho), ["C1", "C2", "C3", "C4"])
    axioms += _local_axioms(structure)
    return [run_quantified(structure, ax, samples, seed) for ax in axioms]


def is_lca(structure: ContactStructure, **kw) -> bool:
    """Early-exit LCA test (stops at the first failing axiom)."""
    axioms = _select(_contact_axioms(structure, structure.rho), ["C1", "C2", "C3", "C4"])
    axioms += _local_axioms(structure)
    for ax in axioms:
        if not run_quantified(structure, ax, kw.get("samples", DEFAULT_SAMPLES), kw.get("seed", DEFAULT_SEED)).passed:
            return False
    return True


def check_ka_membership(
    base: ContactStructure,
    rel: ContactRelation,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> list:
    """Normality of ``rel`` plus ``rho <= rel`` (RC1) and agreement on bounded elements (RC2)."""
    c = base.carrier
    as_nca = ContactStructure(c, rel, all_ideal(c))
    reports = check_nca(as_nca, samples, seed)
    rho, ib = base.rho, base.ib

    def gen_rc2(rng):
        return c.sample(rng), c.sample_bounded(rng)

    extra = [
        Quantified("RC1", ("a", "b"), lambda a, b: rho.holds(a, b) and not rel.holds(a, b),
               None if c.is_finite else (lambda rng: touching_pair(c, rng))),
        Quantified("RC2", ("a", "b"), lambda a, b: ib.contains(b) and rel.holds(a, b) and not rho.holds(a, b),
               None if c.is_finite else gen_rc2),
    ]
    return reports + [run_quantified(base, ax, samples, seed) for ax in extra]


def relation_contained(
    carrier: Carrier,
    inner: ContactRelation,
    outer: ContactRelation,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> AxiomReport:
    """Checks ``inner`` is a subset of ``outer`` (report id ``SUBSET``)."""
    struct = ContactStructure(carrier, inner, all_ideal(carrier))
    ax = Quantified("SUBSET", ("a", "b"), lambda a, b: inner.holds(a, b) and not outer.holds(a, b),
                None if carrier.is_finite else (lambda rng: touching_pair(carrier, rng)))
    return run_quantified(struct, ax, samples, seed)


def precedes_c(carrier: Carrier, c1: ContactRelation, c2: ContactRelation, **kw) -> bool:
    """``C1 <=_c C2`` iff ``C2`` is contained in ``C1``."""
    return relation_contained(carrier, c2, c1, **kw).passed


# ---------------------------------------------------------------------------
# clusters


@dataclass(frozen=True, eq=False)
class Cluster:
    """A cluster with its witness; finite clusters also carry the member set."""

    structure: ContactStructure
    witness: tuple
    members: Optional[frozenset] = None
    _member: Optional[Callable] = field(default=None, repr=False)

    def contains(self, a) -> bool:
        a = raw(self.structure.carrier, a)
        if self.members is not None:
            return a in self.members
        return self._member(a)

    __contains__ = contains

    @property
    def bounded(self) -> bool:
        s = self.structure
        if self.members is not None:
            return any(s.ib.contains(a) for a in self.members)
        return self.witness[0] == "point"

    def bounded_trace(self) -> frozenset:
        ib = self.structure.ib
        return frozenset(a for a in self.members if ib.contains(a))

    def _key(self):
        if self.members is not None:
            return (self.structure, self.members)
        return (self.structure, self.witness)

    def __eq__(self, other):
        return isinstance(other, Cluster) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Cluster({self.witness!r})"


def cluster_of_ultrafilter(structure: ContactStructure, atom: int, rel: Optional[ContactRelation] = None) -> Cluster:
    """``sigma_u = {a | a C b for every b in u}`` for the principal ultrafilter at ``atom``."""
    c = structure.carrier
    C = (rel or designated_relation(structure)).holds
    u = [b for b in c.values() if b >> atom & 1]
    members = frozenset(a for a in c.values() if all(C(a, b) for b in u))
    return Cluster(structure, ("ultrafilter", atom), members)


def clusters(structure: ContactStructure) -> list:
    """All clusters ``sigma_u`` (deduplicated, in atom order) of a finite structure."""
    c = structure.carrier
    if not c.is_finite:
        raise PreconditionError("cluster enumeration needs a finite carrier; use interval_point_cluster")
    rel = designated_relation(structure)
    seen = {}
    for i in range(c.n):
        cl = cluster_of_ultrafilter(structure, i, rel)
        seen.setdefault(cl.members, cl)
    return list(seen.values())


def sigma_infinity(structure: ContactStructure) -> Cluster:
    """The cluster of unbounded elements (needs a proper ideal)."""
    c = structure.carrier
    if structure.ib.contains(c.one):
        raise PreconditionError("sigma_infinity is defined only when 1 is not bounded")
    ib = structure.ib
    if c.is_finite:
        return Cluster(structure, ("infinity",), frozenset(a for a in c.values() if not ib.contains(a)))
    return Cluster(structure, ("infinity",), None, lambda a: not ib.contains(a))


def interval_point_cluster(structure: ContactStructure, x) -> Cluster:
    """``sigma_x = {F | x in F}`` on the interval carrier."""
    x = Fraction(x)
    return Cluster(structure, ("point", x), None, lambda a: a.contains_point(x))


def bounded_trace_equal(c1: Cluster, c2: Cluster) -> bool:
    if c1.structure != c2.structure:
        raise PreconditionError("clusters of different structures")
    return c1.bounded_trace() == c2.bounded_trace()


def check_cluster(cluster: Cluster, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> list:
    """K1-K3 for ``cluster`` against the structure's designated relation."""
    s = cluster.structure
    c = s.carrier
    C = designated_relation(s).holds
    if c.is_finite:
        mem = sorted(cluster.members)
        reports = []
        bad = next(((a, b) for a in mem for b in mem if not C(a, b)), None)
        reports.append(_verdict(c, "K1", ("a", "b"), bad))
        bad = next(((a, b) for a in c.values() for b in c.values()
                    if c.join(a, b) in cluster.members and a not in cluster.members and b not in cluster.members), None)
        reports.append(_verdict(c, "K2", ("a", "b"), bad))
        bad = next(((a,) for a in c.values() if a not in cluster.members and all(C(a, b) for b in mem)), None)
        reports.append(_verdict(c, "K3", ("a",), bad))
        if not mem:
            reports[0] = AxiomReport("K1", FAIL, (("sigma", Element(c, 0)),), note="empty cluster")
        return reports
    return _check_line_cluster(cluster, C, samples, seed)


def _verdict(carrier, ident, names, bad) -> AxiomReport:
    if bad is None:
        return AxiomReport(ident, PASS)
    return AxiomReport(ident, FAIL, tuple((k, Element(carrier, v)) for k, v in zip(names, bad)))


def _check_line_cluster(cluster, C, samples, seed) -> list:
    s = cluster.structure
    c = s.carrier
    kind = cluster.witness[0]
    point = cluster.witness[1] if kind == "point" else None

    def member_sample(rng):
        v = c.sample(rng)
        if kind == "point":
            return c.join(v, IntervalSet.of((point, point + Fraction(1, rng.choice((1, 2, 4))))))
        return c.join(v, IntervalSet.of((rng.randint(-8, 8), c.one.components[0][1])))

    def k3(a):
        if cluster.contains(a):
            return False
        pts = (point,) if point is not None else ()
        return not any(cluster.contains(w) and not C(a, w) for w in c.candidates(a, points=pts))

    axioms = [
        Quantified("K1", ("a", "b"), lambda a, b: not C(a, b), lambda rng: (member_sample(rng), member_sample(rng))),
        Quantified("K2", ("a", "b"), lambda a, b: cluster.contains(c.join(a, b))
               and not cluster.contains(a) and not cluster.contains(b)),
        Quantified("K3", ("a",), k3),
    ]
    return [run_quantified(s, ax, samples, seed) for ax in axioms]
