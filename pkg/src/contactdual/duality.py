"""Object and morphism translations between finite structures and spaces.

``psi_a`` builds the space of clusters of a finite structure, ``psi_t`` the
standard structure of a finite space.  Morphisms between finite structures
are full value tables; the morphism calculus (DLC axioms, the check
normalisation and the diamond composition) works on those tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional

from .carrier import Element, Infinity, IntervalSet
from .contact import (
    FAIL,
    PASS,
    AxiomReport,
    Cluster,
    ContactStructure,
    all_passed,
    check_lca,
    check_nca,
    clusters,
    designated_relation,
)
from .errors import AxiomFailure, PreconditionError
from .spaces import FiniteSpace, SpaceMap, point_cluster, rc_algebra, regular_closed_algebra


# ---------------------------------------------------------------------------
# objects


@dataclass(frozen=True)
class DualSpaceResult:
    """Cluster space of a structure with its closed-base map ``lam``.

    ``lam[a]`` is the point mask of ``{sigma | a in sigma}``; ``points[i]``
    of ``space`` names ``clusters[i]``.
    """

    structure: ContactStructure
    space: FiniteSpace
    clusters: tuple
    lam: tuple
    bounded_only: bool

    def point_of(self, cluster: Cluster) -> int:
        for i, c in enumerate(self.clusters):
            if c == cluster:
                return i
        raise PreconditionError("cluster is not a point of this dual space")


def _require_axioms(structure: ContactStructure):
    c = structure.carrier
    if not c.is_finite:
        raise PreconditionError("dual spaces are built for finite carriers only")
    if structure.ib.contains(c.one):
        reports = check_nca(structure)
    else:
        reports = check_lca(structure)
    if not all_passed(reports):
        bad = [r for r in reports if not r.passed]
        raise AxiomFailure("structure fails " + ", ".join(r.axiom for r in bad), bad)


_DUAL_CACHE: dict = {}


def psi_a(structure: ContactStructure, validate: bool = True) -> DualSpaceResult:
    """Space of (bounded) clusters; closed base ``lam(a) = {sigma | a in sigma}``."""
    key = (structure, validate)
    hit = _DUAL_CACHE.get(key)
    if hit is not None:
        return hit
    if validate:
        _require_axioms(structure)
    c = structure.carrier
    bounded_only = not structure.ib.contains(c.one)
    pts = [cl for cl in clusters(structure) if cl.bounded or not bounded_only]
    names = tuple(f"u{cl.witness[1]}" for cl in pts)
    lam = []
    for a in c.values():
        m = 0
        for i, cl in enumerate(pts):
            if a in cl.members:
                m |= 1 << i
        lam.append(m)
    full = (1 << len(pts)) - 1
    closed = {full}
    for m in lam:
        for k in list(closed):
            closed.add(k & m)
    space = FiniteSpace(names, frozenset(full & ~k for k in closed))
    result = DualSpaceResult(structure, space, tuple(pts), tuple(lam), bounded_only)
    _DUAL_CACHE[key] = result
    return result


def psi_t(space: FiniteSpace) -> ContactStructure:
    """``(RC(X), rho_X, CR(X))``."""
    return regular_closed_algebra(space)


def t_map(space: FiniteSpace) -> SpaceMap:
    """``x -> sigma_x`` into the cluster space of ``psi_t(space)``."""
    dual = psi_a(psi_t(space))
    table = []
    for x in space.points:
        sx = point_cluster(space, x)
        match = [i for i, cl in enumerate(dual.clusters) if cl.members == sx.members]
        if not match:
            raise PreconditionError(f"sigma_{x} is not a cluster of the standard structure")
        table.append(match[0])
    return SpaceMap(space, dual.space, tuple(table))


@dataclass(frozen=True)
class IsoReport:
    ok: bool
    failures: tuple = ()

    def __str__(self):
        if self.ok:
            return "lambda_g: pass"
        return "lambda_g: fail (" + "; ".join(self.failures) + ")"


def lambda_g_iso_check(structure: ContactStructure, lam: Optional[tuple] = None) -> IsoReport:
    """Checks ``a -> lam(a)`` is an isomorphism onto ``psi_t(psi_a(structure))``.

    Boolean isomorphism, ``a rho b <-> lam(a) meets lam(b)`` and
    ``a in IB <-> lam(a) compact`` (every finite set is).  Pass ``lam`` to
    check a replacement table.
    """
    dual = psi_a(structure)
    lam = dual.lam if lam is None else tuple(lam)
    c = structure.carrier
    Y = dual.space
    rc = rc_algebra(Y)
    fails = []
    img = []
    for a in c.values():
        if not Y.is_regular_closed(lam[a]):
            fails.append(f"lam({c.show(a)}) not regular closed")
            return IsoReport(False, tuple(fails))
        img.append(rc.from_points(lam[a]))
    if len(set(img)) != c.size or rc.size != c.size:
        fails.append("lam is not a bijection onto RC")
    for a in c.values():
        if img[c.complement(a)] != rc.complement(img[a]):
            fails.append(f"complement not preserved at {c.show(a)}")
            break
        if not structure.ib.contains(a):
            # every subset of a finite space is compact
            fails.append(f"{c.show(a)} unbounded but lam image compact")
            break
    done = False
    for a in c.values():
        for b in c.values():
            if img[c.join(a, b)] != rc.join(img[a], img[b]) or img[c.meet(a, b)] != rc.meet(img[a], img[b]):
                fails.append(f"lattice operation not preserved at ({c.show(a)}, {c.show(b)})")
                done = True
            elif structure.rho.holds(a, b) != bool(lam[a] & lam[b]):
                fails.append(f"contact not preserved at ({c.show(a)}, {c.show(b)})")
                done = True
            if done:
                break
        if done:
            break
    return IsoReport(not fails, tuple(fails))


# ---------------------------------------------------------------------------
# morphisms


@dataclass(frozen=True)
class AlgebraMorphism:
    """A function between carriers: value table (finite) or catalog rule (interval).

    Rules: ``("identity",)``, ``("meet", IntervalSet)``, ``("affine", q, r)``
    for ``x -> q*x + r`` with rational ``q > 0``.
    """

    source: ContactStructure
    target: ContactStructure
    table: Optional[tuple] = None
    rule: Optional[tuple] = None

    def __post_init__(self):
        if (self.table is None) == (self.rule is None):
            raise PreconditionError("a morphism needs exactly one of table or rule")
        if self.table is not None:
            if not self.source.carrier.is_finite:
                raise PreconditionError("value tables need a finite source carrier")
            if len(self.table) != self.source.carrier.size:
                raise PreconditionError("morphism table is not total")
            if any(not self.target.carrier.contains(v) for v in self.table):
                raise PreconditionError("morphism table leaves the target carrier")
        else:
            if self.rule[0] not in ("identity", "meet", "affine"):
                raise PreconditionError(f"unknown morphism rule {self.rule[0]!r}")
            if self.rule[0] == "affine" and not Fraction(self.rule[1]) > 0:
                raise PreconditionError("affine rule needs a positive scale")

    @classmethod
    def identity(cls, structure: ContactStructure) -> "AlgebraMorphism":
        if structure.carrier.is_finite:
            return cls(structure, structure, tuple(structure.carrier.values()))
        return cls(structure, structure, rule=("identity",))

    @classmethod
    def from_function(cls, source, target, fn) -> "AlgebraMorphism":
        return cls(source, target, tuple(fn(a) for a in source.carrier.values()))

    def __call__(self, a):
        a = a.value if isinstance(a, Element) else a
        if self.table is not None:
            return self.table[a]
        kind = self.rule[0]
        if kind == "identity":
            return a
        if kind == "meet":
            return self.source.carrier.meet(a, self.rule[1])
        q, r = Fraction(self.rule[1]), Fraction(self.rule[2])
        return IntervalSet.of(*((_affine(lo, q, r), _affine(hi, q, r)) for lo, hi in a.components))


def _affine(x, q, r):
    return x if isinstance(x, Infinity) else q * x + r


def _finite_pair(phi: AlgebraMorphism):
    if phi.table is None or not phi.target.carrier.is_finite:
        raise PreconditionError("operation needs a finite value-table morphism")
    return phi.source, phi.target


def _join_all(carrier, values):
    out = carrier.zero
    for v in values:
        out = carrier.join(out, v)
    return out


def check_morphism(phi: AlgebraMorphism) -> AlgebraMorphism:
    """The normalisation ``a -> join{phi(b) | b in IB, b << a}``."""
    src, tgt = _finite_pair(phi)
    A, B = src.carrier, tgt.carrier
    bounded = [b for b in A.values() if src.ib.contains(b)]
    wb = src.rho.way_below
    table = tuple(_join_all(B, (phi.table[b] for b in bounded if wb(b, a))) for a in A.values())
    return AlgebraMorphism(src, tgt, table)


def compose(phi2: AlgebraMorphism, phi1: AlgebraMorphism) -> AlgebraMorphism:
    """``phi2 <> phi1``: composite followed by the normalisation."""
    if phi1.target != phi2.source:
        raise PreconditionError("morphisms do not compose: target of the first is not the source of the second")
    _finite_pair(phi1)
    _finite_pair(phi2)
    raw = AlgebraMorphism(phi1.source, phi2.target, tuple(phi2.table[v] for v in phi1.table))
    return check_morphism(raw)


def _cx(carrier, **kv):
    return tuple((k, Element(carrier, v)) for k, v in kv.items())


def check_dhlc(phi: AlgebraMorphism) -> list:
    """DLC1-DLC5 and DLC3S, each with the first counterexample found."""
    src, tgt = _finite_pair(phi)
    A, B = src.carrier, tgt.carrier
    f = phi.table
    wa, wb = src.rho.way_below, tgt.rho.way_below
    reports = []

    reports.append(AxiomReport("DLC1", PASS) if f[A.zero] == B.zero
                   else AxiomReport("DLC1", FAIL, _cx(A, a=A.zero)))

    bad = next(((a, b) for a in A.values() for b in A.values() if f[A.meet(a, b)] != B.meet(f[a], f[b])), None)
    reports.append(AxiomReport("DLC2", PASS) if bad is None else AxiomReport("DLC2", FAIL, _cx(A, a=bad[0], b=bad[1])))

    def dlc3(require_bounded):
        for a in A.values():
            if require_bounded and not src.ib.contains(a):
                continue
            for b in A.values():
                if wa(a, b) and not wb(B.complement(f[A.complement(a)]), f[b]):
                    return a, b
        return None

    for ident, flag in (("DLC3", True), ("DLC3S", False)):
        bad = dlc3(flag)
        reports.append(AxiomReport(ident, PASS) if bad is None else AxiomReport(ident, FAIL, _cx(A, a=bad[0], b=bad[1])))

    bounded_src = [a for a in A.values() if src.ib.contains(a)]
    bad = next((b for b in B.values() if tgt.ib.contains(b)
                and not any(B.leq(b, f[a]) for a in bounded_src)), None)
    reports.append(AxiomReport("DLC4", PASS) if bad is None else AxiomReport("DLC4", FAIL, _cx(B, b=bad)))

    norm = check_morphism(phi).table
    bad = next((a for a in A.values() if norm[a] != f[a]), None)
    reports.append(AxiomReport("DLC5", PASS) if bad is None else AxiomReport("DLC5", FAIL, _cx(A, a=bad)))
    return reports


def is_dhlc(phi: AlgebraMorphism) -> bool:
    return all_passed(check_dhlc(phi))


def lambda_t(f: SpaceMap) -> AlgebraMorphism:
    """``G -> cl(f^-1(int G))`` from ``psi_t(codomain)`` to ``psi_t(domain)``."""
    if not f.continuous:
        raise PreconditionError("lambda_t needs a continuous map")
    X, Y = f.domain, f.codomain
    sx, sy = psi_t(X), psi_t(Y)
    rx, ry = sx.carrier, sy.carrier
    table = tuple(
        rx.from_points(X.closure_mask(f.preimage(Y.interior_mask(ry.points_of(g))))) for g in ry.values()
    )
    return AlgebraMorphism(sy, sx, table)


def lambda_a(phi: AlgebraMorphism) -> SpaceMap:
    """Cluster map ``psi_a(target) -> psi_a(source)``.

    The image of ``sigma'`` is the source cluster whose bounded trace is
    ``{a in IB | a << b implies phi(b) in sigma'}``; the match is unique
    because clusters are determined by their bounded traces.  The matched
    cluster is checked to be closed under K3 against the designated relation.
    """
    src, tgt = _finite_pair(phi)
    A = src.carrier
    dual_src, dual_tgt = psi_a(src), psi_a(tgt)
    wa = src.rho.way_below
    C = designated_relation(src).holds
    bounded = [a for a in A.values() if src.ib.contains(a)]
    table = []
    for sp in dual_tgt.clusters:
        trace = frozenset(a for a in bounded
                          if all(phi.table[b] in sp.members for b in A.values() if wa(a, b)))
        match = [i for i, cl in enumerate(dual_src.clusters) if cl.bounded_trace() == trace]
        if len(match) != 1:
            raise PreconditionError(f"no unique cluster has the bounded trace computed for {sp!r}")
        cl = dual_src.clusters[match[0]]
        closed = frozenset(a for a in A.values() if all(C(a, b) for b in cl.members))
        if closed != cl.members:
            raise PreconditionError("matched cluster is not closed under K3")
        table.append(match[0])
    return SpaceMap(dual_tgt.space, dual_src.space, tuple(table))


def lambda_a_ultrafilter(phi: AlgebraMorphism) -> SpaceMap:
    """``sigma_u -> sigma_{phi^-1(u)}`` for Boolean-homomorphism morphisms."""
    src, tgt = _finite_pair(phi)
    if not is_boolean_homomorphism(phi):
        raise PreconditionError("ultrafilter transport needs a Boolean homomorphism")
    A = src.carrier
    dual_src, dual_tgt = psi_a(src), psi_a(tgt)
    C = designated_relation(src).holds
    table = []
    for sp in dual_tgt.clusters:
        atom = sp.witness[1]
        pre = [a for a in A.values() if phi.table[a] >> atom & 1]
        target = frozenset(a for a in A.values() if all(C(a, b) for b in pre))
        match = [i for i, cl in enumerate(dual_src.clusters) if cl.members == target]
        if len(match) != 1:
            raise PreconditionError("ultrafilter preimage does not give a unique cluster")
        table.append(match[0])
    return SpaceMap(dual_tgt.space, dual_src.space, tuple(table))


def is_boolean_homomorphism(phi: AlgebraMorphism) -> bool:
    src, tgt = _finite_pair(phi)
    A, B = src.carrier, tgt.carrier
    f = phi.table
    if f[A.zero] != B.zero or f[A.one] != B.one:
        return False
    return all(
        f[A.meet(a, b)] == B.meet(f[a], f[b]) and f[A.join(a, b)] == B.join(f[a], f[b])
        for a in A.values() for b in A.values()
    )


def left_adjoint(phi: AlgebraMorphism) -> tuple:
    """``b -> meet{a | phi(a) >= b}`` as a table on the target carrier."""
    src, tgt = _finite_pair(phi)
    if not is_boolean_homomorphism(phi):
        raise PreconditionError("left adjoint is defined here for Boolean homomorphisms only")
    A, B = src.carrier, tgt.carrier
    f = phi.table
    out = []
    for b in B.values():
        m = A.one
        for a in A.values():
            if B.leq(b, f[a]):
                m = A.meet(m, a)
        out.append(m)
    adj = tuple(out)
    if not all(B.leq(b, f[adj[b]]) for b in B.values()) or not all(A.leq(adj[f[a]], a) for a in A.values()):
        raise PreconditionError("adjunction inequalities fail")
    return adj


def check_lo(phi: AlgebraMorphism) -> AxiomReport:
    """``phi_L(b) rho a`` implies ``b eta phi(a)`` for bounded ``b``."""
    src, tgt = _finite_pair(phi)
    adj = left_adjoint(phi)
    A, B = src.carrier, tgt.carrier
    for a in A.values():
        for b in B.values():
            if tgt.ib.contains(b) and src.rho.holds(adj[b], a) and not tgt.rho.holds(b, phi.table[a]):
                return AxiomReport("LO", FAIL, (("a", Element(A, a)), ("b", Element(B, b))))
    return AxiomReport("LO", PASS)


def enumerate_dhlc(source: ContactStructure, target: ContactStructure) -> list:
    """All DHLC morphisms between two finite structures (brute force)."""
    A, B = source.carrier, target.carrier
    out = []
    # meet preservation fixes phi by phi(1) and the images of the co-atoms
    for top in B.values():
        below = [v for v in B.values() if B.leq(v, top)]
        for images in product(below, repeat=A.n):
            table = []
            for a in A.values():
                m = top
                for i in range(A.n):
                    if not a >> i & 1:
                        m = B.meet(m, images[i])
                table.append(m)
            phi = AlgebraMorphism(source, target, tuple(table))
            if is_dhlc(phi):
                out.append(phi)
    return out
