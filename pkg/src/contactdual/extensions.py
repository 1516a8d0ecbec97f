"""Admissible structures, local compactifications and map extension conditions.

Everything here is finite and exhaustive except ``check_la``, which also
accepts the interval carrier and then samples.  Structures over ``RC(X)``
use raw RC values; conditions quantified over arbitrary subsets work on
point bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .carrier import AtomSetAlgebra
from .contact import (
    FAIL,
    PASS,
    AxiomReport,
    ContactStructure,
    GeneratedIdeal,
    Quantified,
    TableRelation,
    all_passed,
    atom_graph,
    check_lca,
    ideal_members,
    relation_table,
    run_quantified,
    touching_pair,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
)
from .duality import AlgebraMorphism, lambda_a, psi_a
from .errors import AxiomFailure, PreconditionError
from .spaces import (
    DenseEmbedding,
    FiniteSpace,
    RegularClosedAlgebra,
    SpaceMap,
    all_maps,
    dense_restriction_iso,
    rc_algebra,
)

ConditionVerdict = AxiomReport

DEFAULT_ENUMERATION_BOUND = 5


def _ok(ident: str) -> AxiomReport:
    return AxiomReport(ident, PASS)


def _bad(ident: str, *witness, note: str = "") -> AxiomReport:
    return AxiomReport(ident, FAIL, tuple(witness), note=note)


def _pts(space: FiniteSpace, mask: int) -> str:
    return "{" + ",".join(sorted(space.names(mask))) + "}"


def _space_of(structure: ContactStructure) -> FiniteSpace:
    c = structure.carrier
    if not isinstance(c, RegularClosedAlgebra):
        raise PreconditionError("structure carrier is not the regular closed algebra of a finite space")
    return c.space


def _subsets(mask: int):
    """All submasks of ``mask`` in increasing order."""
    return [s for s in range(mask + 1) if s & ~mask == 0]


# ---------------------------------------------------------------------------
# admissibility


def check_admissible(structure: ContactStructure) -> list:
    """(A1) overlapping sets are in contact; (A2) bounded interpolation at points."""
    X = _space_of(structure)
    rc = structure.carrier
    rho, ib = structure.rho, structure.ib
    out = []
    bad = next(((F, G) for F in rc.values() for G in rc.values()
                if rc.points_of(F) & rc.points_of(G) and not rho.holds(F, G)), None)
    out.append(_ok("A1") if bad is None else
               _bad("A1", ("F", _pts(X, rc.points_of(bad[0]))), ("G", _pts(X, rc.points_of(bad[1])))))
    interiors = [X.interior_mask(rc.points_of(v)) for v in rc.values()]
    bad = None
    for F in rc.values():
        for x in range(X.size):
            if not interiors[F] >> x & 1:
                continue
            if not any(ib.contains(G) and interiors[G] >> x & 1 and rho.way_below(G, F) for G in rc.values()):
                bad = (F, x)
                break
        if bad:
            break
    out.append(_ok("A2") if bad is None else
               _bad("A2", ("F", _pts(X, rc.points_of(bad[0]))), ("x", X.points[bad[1]])))
    return out


def check_la(structure: ContactStructure, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> list:
    """(LA1) overlap implies contact, (LA2) compact sets bounded,
    (LA3) contact with a compact set implies overlap.

    On the interval carrier the compact regular closed sets are the bounded
    ones and the checks are sampled.
    """
    c = structure.carrier
    rho, ib = structure.rho, structure.ib
    if c.is_finite:
        X = _space_of(structure)
        # finite spaces are compact: CR(X) = RC(X)
        compact = lambda a: True  # noqa: E731
        meets = lambda a, b: bool(c.points_of(a) & c.points_of(b))  # noqa: E731
    else:
        X = None
        compact = lambda a: a.is_bounded  # noqa: E731
        meets = lambda a, b: a.intersects(b)  # noqa: E731

    def gen_la3(rng):
        return c.sample(rng), c.sample_bounded(rng)

    axioms = [
        Quantified("LA1", ("F", "G"), lambda a, b: meets(a, b) and not rho.holds(a, b),
                   None if c.is_finite else (lambda rng: touching_pair(c, rng))),
        Quantified("LA2", ("G",), lambda a: compact(a) and not ib.contains(a),
                   None if c.is_finite else (lambda rng: (c.sample_bounded(rng),))),
        Quantified("LA3", ("F", "G"), lambda a, b: compact(b) and rho.holds(a, b) and not meets(a, b),
                   None if c.is_finite else gen_la3),
    ]
    reports = [run_quantified(structure, ax, samples, seed) for ax in axioms]
    if X is not None:
        reports = [_pointwise(r, X, c) for r in reports]
    return reports


def _pointwise(report: AxiomReport, X, rc) -> AxiomReport:
    if report.passed:
        return report
    cx = tuple((k, _pts(X, rc.points_of(v.value))) for k, v in report.counterexample)
    return AxiomReport(report.axiom, FAIL, cx)


# ---------------------------------------------------------------------------
# extensions and the alpha / beta correspondence


@dataclass(frozen=True)
class Extension:
    """A dense embedding of ``base`` into a larger space."""

    embedding: DenseEmbedding

    @property
    def base(self) -> FiniteSpace:
        return self.embedding.base

    @property
    def space(self) -> FiniteSpace:
        return self.embedding.target

    @property
    def map(self) -> SpaceMap:
        return self.embedding.map


def identity_extension(space: FiniteSpace) -> Extension:
    return Extension(DenseEmbedding(SpaceMap.identity(space)))


@dataclass(frozen=True)
class AlphaResult:
    """The structure of an extension and the transport ``G -> f^-1(G)``."""

    structure: ContactStructure
    transport: tuple
    transport_iso: bool


def alpha(ext: Extension) -> AlphaResult:
    """``F eta G`` iff ``cl_Y f(F)`` meets ``cl_Y f(G)``; bounded iff ``cl_Y f(F)`` compact."""
    f = ext.map
    X, Y = f.domain, f.codomain
    rc = rc_algebra(X)
    hull = [Y.closure_mask(f.image(rc.points_of(v))) for v in rc.values()]
    pairs = frozenset((a, b) for a in rc.values() for b in rc.values() if hull[a] & hull[b])
    # every closed subset of a finite space is compact
    structure = ContactStructure(rc, TableRelation(rc, pairs), GeneratedIdeal(rc, rc.one))
    iso = dense_restriction_iso(ext.embedding)
    ry = rc_algebra(Y)
    ok = iso.ok and all(
        bool(ry.points_of(g1) & ry.points_of(g2)) == ((iso.r[g1], iso.r[g2]) in pairs)
        for g1 in ry.values() for g2 in ry.values()
    )
    return AlphaResult(structure, iso.r, ok)


def point_cluster_index(dual, structure: ContactStructure, x: int) -> int:
    rc = structure.carrier
    members = frozenset(v for v in rc.values() if rc.points_of(v) >> x & 1)
    for i, cl in enumerate(dual.clusters):
        if cl.members == members:
            return i
    raise PreconditionError(f"sigma_{rc.space.points[x]} is not a cluster of the structure")


def beta(structure: ContactStructure) -> Extension:
    """The cluster space of ``structure`` with ``x -> sigma_x``."""
    X = _space_of(structure)
    reports = check_admissible(structure)
    if not all_passed(reports):
        raise AxiomFailure("structure is not admissible", [r for r in reports if not r.passed])
    dual = psi_a(structure)
    table = tuple(point_cluster_index(dual, structure, x) for x in range(X.size))
    return Extension(DenseEmbedding(SpaceMap(X, dual.space, table)))


def homeomorphisms(Y1: FiniteSpace, Y2: FiniteSpace) -> list:
    if Y1.size != Y2.size:
        return []
    return [h for h in all_maps(Y1, Y2) if h.homeomorphism]


def equivalent_extensions(e1: Extension, e2: Extension) -> bool:
    """Some homeomorphism ``h`` has ``h . f1 = f2``."""
    if e1.base != e2.base:
        raise PreconditionError("extensions of different spaces")
    return any(e1.map.then(h) == e2.map for h in homeomorphisms(e1.space, e2.space))


def extension_leq(e1: Extension, e2: Extension) -> bool:
    """``e1 <= e2``: a continuous ``h: Y2 -> Y1`` with ``f1 = h . f2``."""
    return any(h.continuous and e2.map.then(h) == e1.map for h in all_maps(e2.space, e1.space))


def same_structure(s1: ContactStructure, s2: ContactStructure) -> bool:
    """Extensional equality (relation table and ideal) on a common finite carrier."""
    if s1.carrier != s2.carrier:
        return False
    c = s1.carrier
    return relation_table(c, s1.rho) == relation_table(c, s2.rho) and ideal_members(c, s1.ib) == ideal_members(c, s2.ib)


def precedes_ad(s1: ContactStructure, s2: ContactStructure) -> bool:
    """``s1 <=_ad s2`` iff ``rho2 <= rho1`` and ``IB2 <= IB1``."""
    c = s1.carrier
    return (relation_table(c, s2.rho) <= relation_table(c, s1.rho)
            and ideal_members(c, s2.ib) <= ideal_members(c, s1.ib))


@dataclass(frozen=True)
class AdmissibleEnumeration:
    space: FiniteSpace
    structures: tuple
    order: tuple  # pairs (i, j) with structures[i] <=_ad structures[j]

    def __len__(self):
        return len(self.structures)


def reflexive_symmetric_graphs(carrier: AtomSetAlgebra) -> list:
    """Every reflexive symmetric atom graph, in order of the off-diagonal edge code."""
    n = carrier.n
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = []
    for code in range(1 << len(pairs)):
        edges = [(i, i) for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if code >> k & 1:
                edges += [(i, j), (j, i)]
        out.append(atom_graph(carrier, edges))
    return out


def enumerate_admissible(space: FiniteSpace, bound: int = DEFAULT_ENUMERATION_BOUND) -> AdmissibleEnumeration:
    """All (graph, principal ideal) structures on ``RC(X)`` that are admissible LCAs."""
    rc = rc_algebra(space)
    if rc.n > bound:
        raise PreconditionError(f"RC(X) has {rc.n} atoms, above the enumeration bound {bound}")
    found = []
    for g in reflexive_symmetric_graphs(rc):
        for gen in rc.values():
            s = ContactStructure(rc, g, GeneratedIdeal(rc, gen))
            if all_passed(check_admissible(s)) and all_passed(check_lca(s)):
                found.append(s)
    order = tuple((i, j) for i, a in enumerate(found) for j, b in enumerate(found) if precedes_ad(a, b))
    return AdmissibleEnumeration(space, tuple(found), order)


# ---------------------------------------------------------------------------
# local proximities on the full power set


@dataclass(frozen=True)
class LocalProximity:
    """``(X, beta, B)`` with ``beta`` tabulated on point bitmasks."""

    space: FiniteSpace
    carrier: AtomSetAlgebra
    beta: TableRelation
    ideal: GeneratedIdeal

    def near(self, m: int, n: int) -> bool:
        return self.beta.holds(m, n)

    def far_inside(self, m: int, n: int) -> bool:
        """``m << n`` for the proximity: ``m`` is far from ``X - n``."""
        return not self.beta.holds(m, self.carrier.complement(n))


def bridge_to_local_proximity(structure: ContactStructure) -> LocalProximity:
    """Extend an admissible structure to the full power set.

    ``B`` is the set of subsets of bounded elements and ``M`` is far from
    ``N`` iff for every ``B`` in ``B`` some regular closed ``F``, ``G`` with
    ``F`` far from ``G`` have ``M & B`` inside ``int F`` and ``N & B`` inside
    ``int G``.
    """
    X = _space_of(structure)
    rc = structure.carrier
    px = AtomSetAlgebra(X.size, "P")
    top = 0
    for v in rc.values():
        if structure.ib.contains(v):
            top |= rc.points_of(v)
    ideal = GeneratedIdeal(px, top)
    interiors = [X.interior_mask(rc.points_of(v)) for v in rc.values()]
    far = [(interiors[F], interiors[G]) for F in rc.values() for G in rc.values()
           if not structure.rho.holds(F, G)]
    bs = _subsets(top)

    def separated(m, n):
        for b in bs:
            mb, nb = m & b, n & b
            if not any(mb & ~i == 0 and nb & ~j == 0 for i, j in far):
                return False
        return True

    pairs = frozenset((m, n) for m in px.values() for n in px.values() if not separated(m, n))
    return LocalProximity(X, px, TableRelation(px, pairs), ideal)


def restrict_local_proximity(lp: LocalProximity) -> ContactStructure:
    """``beta`` restricted to ``RC(X)`` with the ideal ``B & RC(X)``."""
    rc = rc_algebra(lp.space)
    pts = [rc.points_of(v) for v in rc.values()]
    pairs = frozenset((a, b) for a in rc.values() for b in rc.values() if lp.beta.holds(pts[a], pts[b]))
    gen = 0
    for v in rc.values():
        if lp.ideal.contains(pts[v]):
            gen |= v
    return ContactStructure(rc, TableRelation(rc, pairs), GeneratedIdeal(rc, gen))


def check_local_proximity(lp: LocalProximity) -> list:
    """C1-C4, BC1, BC2 on ``P(X)``, separation, and that ``beta`` induces the topology."""
    s = ContactStructure(lp.carrier, lp.beta, lp.ideal)
    reports = [r for r in check_lca(s) if r.axiom != "BC3"]
    X = lp.space
    n = X.size
    bad = next(((i, j) for i in range(n) for j in range(n) if lp.near(1 << i, 1 << j) != (i == j)), None)
    reports.append(_ok("SEP") if bad is None else
                   _bad("SEP", ("x", X.points[bad[0]]), ("y", X.points[bad[1]])))
    bad = next((m for m in lp.carrier.values()
                if X.closure_mask(m) != sum(1 << i for i in range(n) if lp.near(1 << i, m))), None)
    reports.append(_ok("TOP") if bad is None else _bad("TOP", ("M", _pts(X, bad))))
    return reports


# ---------------------------------------------------------------------------
# extension of maps


def phi_f(f: SpaceMap, s1: ContactStructure, s2: ContactStructure) -> AlgebraMorphism:
    """``G -> cl(f^-1(int G))`` from ``s2`` to ``s1``."""
    X1, X2 = f.domain, f.codomain
    r1, r2 = s1.carrier, s2.carrier
    table = tuple(r1.from_points(X1.closure_mask(f.preimage(X2.interior_mask(r2.points_of(g)))))
                  for g in r2.values())
    return AlgebraMorphism(s2, s1, table)


def _check_pair(f: SpaceMap, s1, s2):
    if _space_of(s1) != f.domain or _space_of(s2) != f.codomain:
        raise PreconditionError("structures do not sit over the map's domain and codomain")
    if not f.continuous:
        raise PreconditionError("map is not continuous")


def check_req(f: SpaceMap, s1: ContactStructure, s2: ContactStructure) -> list:
    """(REQ1) contact of regularised preimages forces contact; (REQ2) bounded images."""
    _check_pair(f, s1, s2)
    X1, X2 = f.domain, f.codomain
    r1, r2 = s1.carrier, s2.carrier
    reg = [r1.from_points(X1.closure_mask(X1.interior_mask(f.preimage(r2.points_of(F))))) for F in r2.values()]
    bad = next(((F, G) for F in r2.values() for G in r2.values()
                if s1.rho.holds(reg[F], reg[G]) and not s2.rho.holds(F, G)), None)
    out = [_ok("REQ1") if bad is None else
           _bad("REQ1", ("F", _pts(X2, r2.points_of(bad[0]))), ("G", _pts(X2, r2.points_of(bad[1]))))]
    bounded2 = [r2.points_of(G) for G in r2.values() if s2.ib.contains(G)]
    bad = next((F for F in r1.values() if s1.ib.contains(F)
                and not any(f.image(r1.points_of(F)) & ~G == 0 for G in bounded2)), None)
    out.append(_ok("REQ2") if bad is None else _bad("REQ2", ("F", _pts(X1, r1.points_of(bad)))))
    return out


@dataclass(frozen=True)
class ExtensionResult:
    """``g = L(f)`` between the cluster spaces, with the two embeddings."""

    g: SpaceMap
    e1: Extension
    e2: Extension


def extend_map(f: SpaceMap, s1: ContactStructure, s2: ContactStructure) -> ExtensionResult:
    """``g`` is the cluster map of ``phi_f``; ``g . f1 = f2 . f`` is verified."""
    reports = check_req(f, s1, s2)
    if not all_passed(reports):
        raise AxiomFailure("map fails the extension conditions", [r for r in reports if not r.passed])
    e1, e2 = beta(s1), beta(s2)
    g = lambda_a(phi_f(f, s1, s2))
    if e1.map.then(g) != f.then(e2.map):
        raise PreconditionError("constructed extension does not commute with the embeddings")
    return ExtensionResult(g, e1, e2)


def extending_maps(f: SpaceMap, e1: Extension, e2: Extension) -> list:
    """Every continuous ``g: Y1 -> Y2`` with ``g . f1 = f2 . f`` (exhaustive)."""
    target = f.then(e2.map)
    return [g for g in all_maps(e1.space, e2.space) if g.continuous and e1.map.then(g) == target]


# ---------------------------------------------------------------------------
# main-theorem conditions


@dataclass(frozen=True)
class AgreementRow:
    clause: str
    condition: str
    condition_holds: bool
    property: str
    property_holds: bool

    @property
    def agree(self) -> bool:
        return self.condition_holds == self.property_holds


@dataclass(frozen=True)
class MainConditionsReport:
    verdicts: tuple
    matrix: tuple
    g: SpaceMap
    asserted: bool  # both spaces discrete, so the theorem's hypotheses hold

    def verdict(self, ident: str) -> AxiomReport:
        return next(v for v in self.verdicts if v.axiom == ident)

    @property
    def disagreements(self) -> list:
        return [row for row in self.matrix if not row.agree]


def check_main_conditions(f: SpaceMap, s1: ContactStructure, s2: ContactStructure) -> MainConditionsReport:
    ext = extend_map(f, s1, s2)
    g = ext.g
    X1, X2 = f.domain, f.codomain
    r1, r2 = s1.carrier, s2.carrier
    p1 = bridge_to_local_proximity(s1)
    p2 = bridge_to_local_proximity(s2)
    pts1 = [r1.points_of(v) for v in r1.values()]
    wb1, wb2 = s1.rho.way_below, s2.rho.way_below
    bounded1 = [F for F in r1.values() if s1.ib.contains(F)]
    bounded2 = [G for G in r2.values() if s2.ib.contains(G)]
    phi = phi_f(f, s1, s2).table
    hull = [X2.closure_mask(f.image(p)) for p in pts1]
    verdicts = []

    verdicts.append(_ok("SKELETAL") if f.skeletal else _bad("SKELETAL", ("f", "not skeletal")))

    def o_condition():
        for F in bounded1:
            for G in r1.values():
                if not wb1(F, G):
                    continue
                if not (X2.is_regular_closed(hull[F]) and X2.is_regular_closed(hull[G])):
                    return _bad("O", ("F", _pts(X1, pts1[F])), ("G", _pts(X1, pts1[G])),
                                note="closure of image is not regular closed")
                if not wb2(r2.from_points(hull[F]), r2.from_points(hull[G])):
                    return _bad("O", ("F", _pts(X1, pts1[F])), ("G", _pts(X1, pts1[G])))
        return _ok("O")

    verdicts.append(o_condition())

    bad = next(((F, G) for F in bounded1 for G in r1.values()
                if wb1(F, G) and not p2.far_inside(hull[F], hull[G])), None)
    verdicts.append(_ok("O1") if bad is None else
                    _bad("O1", ("F", _pts(X1, pts1[bad[0]])), ("G", _pts(X1, pts1[bad[1]]))))

    bad = None
    for A in range(X1.full + 1):
        if not p1.ideal.contains(A):
            continue
        for B in range(X1.full + 1):
            if p1.far_inside(A, B) and not p2.far_inside(f.image(A), X2.closure_mask(f.image(B))):
                bad = (A, B)
                break
        if bad:
            break
    verdicts.append(_ok("O2") if bad is None else _bad("O2", ("A", _pts(X1, bad[0])), ("B", _pts(X1, bad[1]))))

    bad = next((G for G in bounded2 if not s1.ib.contains(phi[G])), None)
    verdicts.append(_ok("P") if bad is None else _bad("P", ("G", _pts(X2, r2.points_of(bad)))))

    verdicts.append(_ok("DENSE") if f.dense_image else _bad("DENSE", ("f(X1)", _pts(X2, f.image(X1.full)))))

    def i_condition():
        for F1 in bounded1:
            for F2 in bounded1:
                if s1.rho.holds(F1, F2):
                    continue
                if not any(wb2(G1, G2) and r1.leq(F1, phi[G2]) and not s1.rho.holds(phi[G2], F2)
                           for G1 in bounded2 for G2 in bounded2):
                    return _bad("I", ("F1", _pts(X1, pts1[F1])), ("F2", _pts(X1, pts1[F2])))
        return _ok("I")

    verdicts.append(i_condition())

    image = set(phi)
    bad = next((F for F in r1.values() if F not in image), None)
    verdicts.append(_ok("OI") if bad is None else _bad("OI", ("F", _pts(X1, pts1[bad]))))

    v = {r.axiom: r.passed for r in verdicts}
    matrix = (
        AgreementRow("a", "f skeletal", v["SKELETAL"], "g skeletal", g.skeletal),
        AgreementRow("b", "f skeletal and O", v["SKELETAL"] and v["O"], "g open", g.open),
        AgreementRow("b'", "O1", v["O1"], "g open", g.open),
        AgreementRow("b''", "O2", v["O2"], "g open", g.open),
        AgreementRow("c", "P", v["P"], "g perfect", g.perfect),
        AgreementRow("d", "f dense image", v["DENSE"], "g dense image", g.dense_image),
        AgreementRow("e", "I", v["I"], "g injective", g.injective),
        AgreementRow("f", "O1 and OI", v["O1"] and v["OI"], "g open injection", g.open and g.injective),
        AgreementRow("g", "P and f dense image", v["P"] and v["DENSE"], "g perfect surjection",
                     g.perfect and g.surjective),
    )
    return MainConditionsReport(tuple(verdicts), matrix, g, X1.is_discrete and X2.is_discrete)


# ---------------------------------------------------------------------------
# compactification conditions


def components(space: FiniteSpace) -> list:
    """Connected components (bitmasks) of the specialization graph."""
    n = space.size
    seen = 0
    out = []
    for i in range(n):
        if seen >> i & 1:
            continue
        comp = 1 << i
        while True:
            grown = comp
            for j in range(n):
                if comp >> j & 1:
                    grown |= space.min_open[j] | space.closure_mask(1 << j)
            if grown == comp:
                break
            comp = grown
        seen |= comp
        out.append(comp)
    return out


def completely_separated(space: FiniteSpace, a: int, b: int) -> bool:
    """Real-valued maps on a finite space are constant on components."""
    return not any(c & a and c & b for c in components(space))


def check_compactification_conditions(f: SpaceMap, s1: ContactStructure, s2: ContactStructure) -> list:
    """(OC), (OB) and the stronger sufficient condition with ``X2 - f(X1 - B)``.

    Both structures must be compact (every element bounded) so that the
    bridged proximities are proximities on the full power sets.
    """
    for s in (s1, s2):
        if not s.carrier.is_finite:
            raise PreconditionError("subset-quantified conditions need finite carriers")
    _check_pair(f, s1, s2)
    p1, p2 = bridge_to_local_proximity(s1), bridge_to_local_proximity(s2)
    X1, X2 = f.domain, f.codomain
    if p1.ideal.generator != X1.full or p2.ideal.generator != X2.full:
        raise PreconditionError("compactification conditions need compact structures")
    subsets = range(X1.full + 1)
    bad = next(((A, B) for A in subsets for B in subsets
                if p1.far_inside(A, B) and not p2.far_inside(f.image(A), X2.closure_mask(f.image(B)))), None)
    out = [_ok("OC") if bad is None else _bad("OC", ("A", _pts(X1, bad[0])), ("B", _pts(X1, bad[1])))]
    sep_pairs = [(A, B) for A in subsets for B in subsets if completely_separated(X1, A, B)]
    bad = next(((A, B) for A, B in sep_pairs
                if not completely_separated(X2, f.image(A), X2.full & ~X2.closure_mask(f.image(X1.full & ~B)))), None)
    out.append(_ok("OB") if bad is None else _bad("OB", ("A", _pts(X1, bad[0])), ("B", _pts(X1, bad[1]))))
    bad = next(((A, B) for A, B in sep_pairs
                if not completely_separated(X2, f.image(A), X2.full & ~f.image(X1.full & ~B))), None)
    note = "sufficient, not necessary"
    out.append(AxiomReport("POLJAKOV", PASS, note=note) if bad is None else
               _bad("POLJAKOV", ("A", _pts(X1, bad[0])), ("B", _pts(X1, bad[1])), note=note))
    return out


def unique_admissible(space: FiniteSpace) -> ContactStructure:
    """The only admissible structure of a finite discrete space."""
    found = enumerate_admissible(space)
    if len(found) != 1:
        raise PreconditionError(f"expected one admissible structure, found {len(found)}")
    return found.structures[0]
