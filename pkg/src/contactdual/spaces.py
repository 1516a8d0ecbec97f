"""Finite topological spaces, their regular closed algebras and map properties.

Point sets are handled internally as bitmasks over the point indices.  A
finite topology is Alexandrov, so every point ``x`` has a smallest open
neighbourhood ``U_x`` and

    int S = {x | U_x <= S},    cl S = {x | U_x meets S}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .carrier import AtomSetAlgebra
from .contact import (
    AtomGraph,
    Cluster,
    ContactStructure,
    GeneratedIdeal,
    atom_graph,
)
from .errors import PreconditionError


def _bits(mask: int, n: int) -> list:
    return [i for i in range(n) if mask >> i & 1]


@dataclass(frozen=True)
class FiniteSpace:
    """Points with an open-set family (bitmasks), validated at construction."""

    points: tuple
    opens: frozenset

    def __post_init__(self):
        full = (1 << len(self.points)) - 1
        if len(set(self.points)) != len(self.points):
            raise PreconditionError("duplicate point names")
        if 0 not in self.opens or full not in self.opens:
            raise PreconditionError("open family must contain the empty set and the whole space")
        for u in self.opens:
            if u & ~full:
                raise PreconditionError("open set mentions an unknown point")
            for v in self.opens:
                if u | v not in self.opens or u & v not in self.opens:
                    raise PreconditionError("open family is not closed under union and intersection")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_opens(cls, points: Sequence, opens: Iterable) -> "FiniteSpace":
        """Topology generated by ``opens`` (closed off under unions and meets)."""
        points = tuple(str(p) for p in points)
        index = {p: i for i, p in enumerate(points)}
        full = (1 << len(points)) - 1
        family = {0, full}
        for u in opens:
            mask = 0
            for p in u:
                if str(p) not in index:
                    raise PreconditionError(f"unknown point {p!r}")
                mask |= 1 << index[str(p)]
            family.add(mask)
        return cls(points, frozenset(_lattice_closure(family)))

    @classmethod
    def from_preorder(cls, points: Sequence, pairs: Iterable) -> "FiniteSpace":
        """Specialization preorder: ``(x, y)`` means ``x <= y``, i.e. ``x in cl{y}``.

        Opens are the up-sets of the reflexive-transitive closure.
        """
        points = tuple(str(p) for p in points)
        index = {p: i for i, p in enumerate(points)}
        n = len(points)
        up = [1 << i for i in range(n)]
        for x, y in pairs:
            if str(x) not in index or str(y) not in index:
                raise PreconditionError(f"unknown point in preorder pair ({x}, {y})")
            up[index[str(x)]] |= 1 << index[str(y)]
        return cls(points, frozenset(_upsets(_transitive(up), n)))

    @classmethod
    def discrete(cls, n: int) -> "FiniteSpace":
        return cls(tuple(str(i) for i in range(n)), frozenset(range(1 << n)))

    # -- basic topology -----------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def full(self) -> int:
        return (1 << len(self.points)) - 1

    @cached_property
    def min_open(self) -> tuple:
        """``U_x`` for every point index ``x``."""
        out = []
        for i in range(self.size):
            m = self.full
            for u in self.opens:
                if u >> i & 1:
                    m &= u
            out.append(m)
        return tuple(out)

    @cached_property
    def sorted_opens(self) -> tuple:
        return tuple(sorted(self.opens))

    @cached_property
    def closed_sets(self) -> tuple:
        return tuple(sorted(self.full & ~u for u in self.opens))

    def index(self, name) -> int:
        try:
            return self.points.index(str(name))
        except ValueError:
            raise PreconditionError(f"unknown point {name!r}") from None

    def mask(self, names: Iterable) -> int:
        m = 0
        for p in names:
            m |= 1 << self.index(p)
        return m

    def names(self, mask: int) -> frozenset:
        return frozenset(self.points[i] for i in _bits(mask, self.size))

    def interior_mask(self, s: int) -> int:
        m = 0
        for i, u in enumerate(self.min_open):
            if u & ~s == 0:
                m |= 1 << i
        return m

    def closure_mask(self, s: int) -> int:
        m = 0
        for i, u in enumerate(self.min_open):
            if u & s:
                m |= 1 << i
        return m

    def is_open(self, s: int) -> bool:
        return s in self.opens

    def is_closed(self, s: int) -> bool:
        return (self.full & ~s) in self.opens

    def is_regular_closed(self, s: int) -> bool:
        return self.closure_mask(self.interior_mask(s)) == s

    def is_dense(self, s: int) -> bool:
        return self.closure_mask(s) == self.full

    @property
    def is_discrete(self) -> bool:
        return len(self.opens) == 1 << self.size

    def specialization(self) -> list:
        """Pairs ``(x, y)`` with ``x != y`` and ``x in cl{y}``, in index order."""
        n = self.size
        return [(self.points[i], self.points[j]) for i in range(n) for j in range(n)
                if i != j and self.min_open[i] >> j & 1]

    def subspace(self, names: Iterable) -> "FiniteSpace":
        keep = [i for i in range(self.size) if self.points[i] in {str(p) for p in names}]
        opens = set()
        for u in self.opens:
            m = 0
            for k, i in enumerate(keep):
                if u >> i & 1:
                    m |= 1 << k
            opens.add(m)
        return FiniteSpace(tuple(self.points[i] for i in keep), frozenset(opens))


def _lattice_closure(family: set) -> set:
    fam = set(family)
    changed = True
    while changed:
        changed = False
        items = list(fam)
        for u in items:
            for v in items:
                for w in (u | v, u & v):
                    if w not in fam:
                        fam.add(w)
                        changed = True
    return fam


def _transitive(up: list) -> list:
    up = list(up)
    n = len(up)
    for k in range(n):
        for i in range(n):
            if up[i] >> k & 1:
                up[i] |= up[k]
    return up


def _upsets(up: list, n: int) -> list:
    return [s for s in range(1 << n) if all(up[i] & ~s == 0 for i in _bits(s, n))]


def closure(space: FiniteSpace, names: Iterable) -> frozenset:
    return space.names(space.closure_mask(space.mask(names)))


def interior(space: FiniteSpace, names: Iterable) -> frozenset:
    return space.names(space.interior_mask(space.mask(names)))


def sierpinski() -> FiniteSpace:
    """Points ``0``, ``1``; the open point is ``1``."""
    return FiniteSpace.from_opens(["0", "1"], [["1"]])


def circle4() -> FiniteSpace:
    """Four-point circle: open points ``a``, ``c``; closed points ``b``, ``d``."""
    return FiniteSpace.from_opens(list("abcd"), [["a"], ["c"], ["a", "b", "c"], ["a", "d", "c"]])


def all_topologies(n: int) -> list:
    """Every topology on points ``0..n-1`` (as specialization preorders).

    Order: increasing characteristic vector of the off-diagonal preorder
    pairs, read as a binary number in row-major order.
    """
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    names = tuple(str(i) for i in range(n))
    out = []
    for code in range(1 << len(pairs)):
        up = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if code >> k & 1:
                up[i] |= 1 << j
        if _transitive(up) != up:
            continue
        out.append(FiniteSpace(names, frozenset(_upsets(up, n))))
    return out


# ---------------------------------------------------------------------------
# regular closed algebra


@dataclass(frozen=True)
class RegularClosedAlgebra(AtomSetAlgebra):
    """``RC(X)`` presented over its atoms (the minimal non-empty RC sets).

    A raw value is a bitmask over RC atoms; ``points_of`` gives the
    underlying point set.  Joins are unions, meets ``cl(int(F & G))`` and
    complements ``cl(X - F)``, all of which reduce to atom bit operations.
    """

    space: FiniteSpace = None
    atom_masks: tuple = ()

    def points_of(self, v: int) -> int:
        m = 0
        for i in _bits(v, self.n):
            m |= self.atom_masks[i]
        return m

    def from_points(self, s: int) -> int:
        """Element for the regular closed point set ``s`` (checked)."""
        if not self.space.is_regular_closed(s):
            raise PreconditionError(f"{sorted(self.space.names(s))} is not regular closed")
        return sum(1 << i for i, a in enumerate(self.atom_masks) if a & ~s == 0)

    def show(self, v: int) -> str:
        return "{" + ",".join(sorted(self.space.names(self.points_of(v)))) + "}"


def regular_closed_sets(space: FiniteSpace) -> list:
    return sorted({space.closure_mask(u) for u in space.opens})


def rc_algebra(space: FiniteSpace) -> RegularClosedAlgebra:
    return _rc_cache(space)


_RC_CACHE: dict = {}


def _rc_cache(space):
    hit = _RC_CACHE.get(space)
    if hit is None:
        rcs = [s for s in regular_closed_sets(space) if s]
        atoms = [s for s in rcs if not any(t != s and t & ~s == 0 for t in rcs)]
        atoms.sort(key=lambda m: [i for i in range(space.size) if m >> i & 1])
        hit = RegularClosedAlgebra(len(atoms), "RC", space, tuple(atoms))
        _RC_CACHE[space] = hit
    return hit


def standard_contact(rc: RegularClosedAlgebra) -> AtomGraph:
    """``F rho_X G`` iff ``F`` and ``G`` meet as point sets."""
    edges = [(i, j) for i in range(rc.n) for j in range(rc.n) if rc.atom_masks[i] & rc.atom_masks[j]]
    return atom_graph(rc, edges)


def regular_closed_algebra(space: FiniteSpace) -> ContactStructure:
    """``(RC(X), rho_X, CR(X))``; finite spaces are compact, so ``CR(X) = RC(X)``."""
    rc = rc_algebra(space)
    return ContactStructure(rc, standard_contact(rc), GeneratedIdeal(rc, rc.one))


def point_cluster(space: FiniteSpace, x) -> Cluster:
    """``sigma_x = {F in RC(X) | x in F}`` on the standard structure."""
    s = regular_closed_algebra(space)
    rc = s.carrier
    i = space.index(x)
    members = frozenset(v for v in rc.values() if rc.points_of(v) >> i & 1)
    return Cluster(s, ("point", space.points[i]), members)


def point_filter(space: FiniteSpace, x) -> frozenset:
    """``nu_x = {F in RC(X) | x in int F}`` as raw RC values."""
    rc = rc_algebra(space)
    i = space.index(x)
    return frozenset(v for v in rc.values() if space.interior_mask(rc.points_of(v)) >> i & 1)


# ---------------------------------------------------------------------------
# maps


@dataclass(frozen=True)
class SpaceMap:
    """Total function between finite spaces, stored as target indices."""

    domain: FiniteSpace
    codomain: FiniteSpace
    mapping: tuple

    def __post_init__(self):
        if len(self.mapping) != self.domain.size:
            raise PreconditionError("map is not total on its domain")
        for y in self.mapping:
            if not 0 <= y < self.codomain.size:
                raise PreconditionError(f"map target {y} outside the codomain")

    @classmethod
    def from_pairs(cls, domain: FiniteSpace, codomain: FiniteSpace, pairs: Iterable) -> "SpaceMap":
        table = {}
        for x, y in pairs:
            table[domain.index(x)] = codomain.index(y)
        if len(table) != domain.size:
            raise PreconditionError("map is not total on its domain")
        return cls(domain, codomain, tuple(table[i] for i in range(domain.size)))

    @classmethod
    def identity(cls, space: FiniteSpace) -> "SpaceMap":
        return cls(space, space, tuple(range(space.size)))

    def __call__(self, name):
        return self.codomain.points[self.mapping[self.domain.index(name)]]

    def pairs(self) -> list:
        return [(self.domain.points[i], self.codomain.points[j]) for i, j in enumerate(self.mapping)]

    def image(self, s: int) -> int:
        m = 0
        for i in _bits(s, self.domain.size):
            m |= 1 << self.mapping[i]
        return m

    def preimage(self, t: int) -> int:
        m = 0
        for i, j in enumerate(self.mapping):
            if t >> j & 1:
                m |= 1 << i
        return m

    def then(self, other: "SpaceMap") -> "SpaceMap":
        """``other`` after ``self``."""
        if self.codomain != other.domain:
            raise PreconditionError("maps do not compose")
        return SpaceMap(self.domain, other.codomain, tuple(other.mapping[j] for j in self.mapping))

    # -- properties ---------------------------------------------------------

    @cached_property
    def continuous(self) -> bool:
        return all(self.domain.is_open(self.preimage(v)) for v in self.codomain.opens)

    @cached_property
    def open(self) -> bool:
        return self.continuous and all(self.codomain.is_open(self.image(u)) for u in self.domain.opens)

    @cached_property
    def closed(self) -> bool:
        return self.continuous and all(self.codomain.is_closed(self.image(c)) for c in self.domain.closed_sets)

    @property
    def perfect(self) -> bool:
        # point inverses are finite, hence compact
        return self.closed

    @property
    def injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    @property
    def surjective(self) -> bool:
        return len(set(self.mapping)) == self.codomain.size

    @property
    def dense_image(self) -> bool:
        return self.codomain.is_dense(self.image(self.domain.full))

    @cached_property
    def skeletal(self) -> bool:
        X, Y = self.domain, self.codomain
        return all(
            X.interior_mask(self.preimage(Y.closure_mask(v))) & ~X.closure_mask(self.preimage(v)) == 0
            for v in Y.opens
        )

    @cached_property
    def quasi_open(self) -> bool:
        return all(self.codomain.interior_mask(self.image(u)) for u in self.domain.opens if u)

    @property
    def homeomorphism(self) -> bool:
        return self.injective and self.surjective and self.open


MAP_PROPERTIES = (
    "continuous", "open", "closed", "perfect", "injective",
    "surjective", "dense_image", "skeletal", "quasi_open",
)


def map_is(f: SpaceMap, prop: str) -> bool:
    if prop not in MAP_PROPERTIES:
        raise PreconditionError(f"unknown map property {prop!r}")
    return getattr(f, prop)


def all_maps(domain: FiniteSpace, codomain: FiniteSpace) -> list:
    """Every function, in lexicographic order of the value tuple."""
    return [SpaceMap(domain, codomain, t) for t in product(range(codomain.size), repeat=domain.size)]


def continuous_maps(domain: FiniteSpace, codomain: FiniteSpace) -> list:
    return [f for f in all_maps(domain, codomain) if f.continuous]


@dataclass(frozen=True)
class SkeletalCriteria:
    by_definition: bool
    by_closed_images: bool
    by_dense_preimages: bool

    @property
    def agree(self) -> bool:
        return self.by_definition == self.by_closed_images == self.by_dense_preimages


def skeletal_equivalences(f: SpaceMap) -> SkeletalCriteria:
    """Skeletality three ways: the defining inclusion, ``cl f(F)`` regular
    closed for every regular closed ``F``, and dense preimages of dense opens."""
    if not f.continuous:
        raise PreconditionError("skeletal criteria need a continuous map")
    X, Y = f.domain, f.codomain
    rc_images = all(Y.is_regular_closed(Y.closure_mask(f.image(F))) for F in regular_closed_sets(X))
    dense_pre = all(X.is_dense(f.preimage(v)) for v in Y.opens if Y.is_dense(v))
    return SkeletalCriteria(f.skeletal, rc_images, dense_pre)


# ---------------------------------------------------------------------------
# dense embeddings


@dataclass(frozen=True)
class DenseEmbedding:
    """A homeomorphic embedding with dense image (checked on construction)."""

    map: SpaceMap

    def __post_init__(self):
        f = self.map
        if not f.continuous or not f.injective:
            raise PreconditionError("not an embedding: map must be continuous and injective")
        induced = {f.preimage(v) for v in f.codomain.opens}
        if induced != set(f.domain.opens):
            raise PreconditionError("not an embedding: domain topology differs from the subspace topology")
        if not f.dense_image:
            raise PreconditionError("embedding image is not dense")

    @property
    def base(self) -> FiniteSpace:
        return self.map.domain

    @property
    def target(self) -> FiniteSpace:
        return self.map.codomain


def inclusion(space: FiniteSpace, names: Iterable) -> SpaceMap:
    sub = space.subspace(names)
    return SpaceMap(sub, space, tuple(space.index(p) for p in sub.points))


def dense_subspace_embeddings(space: FiniteSpace) -> list:
    """Inclusions of every non-empty dense subset (with the subspace topology)."""
    out = []
    for s in range(1, space.full + 1):
        if space.is_dense(s):
            out.append(DenseEmbedding(inclusion(space, space.names(s))))
    return out


@dataclass(frozen=True)
class RestrictionIso:
    """``r: RC(Y) -> RC(X)``, ``F -> F & X`` and ``e: RC(X) -> RC(Y)``, ``G -> cl_Y G``.

    Both tables are indexed by raw RC values.
    """

    r: tuple
    e: tuple
    mutually_inverse: bool
    boolean: bool

    @property
    def ok(self) -> bool:
        return self.mutually_inverse and self.boolean


def dense_restriction_iso(emb: DenseEmbedding) -> RestrictionIso:
    f = emb.map
    X, Y = f.domain, f.codomain
    rx, ry = rc_algebra(X), rc_algebra(Y)
    r, e = [], []
    for v in ry.values():
        s = f.preimage(ry.points_of(v))
        r.append(rx.from_points(s) if X.is_regular_closed(s) else None)
    for v in rx.values():
        s = Y.closure_mask(f.image(rx.points_of(v)))
        e.append(ry.from_points(s) if Y.is_regular_closed(s) else None)
    inverse = (
        None not in r and None not in e and rx.size == ry.size
        and all(e[r[v]] == v for v in ry.values()) and all(r[e[v]] == v for v in rx.values())
    )
    boolean = inverse and all(
        r[ry.join(a, b)] == rx.join(r[a], r[b]) and r[ry.meet(a, b)] == rx.meet(r[a], r[b])
        and r[ry.complement(a)] == rx.complement(r[a])
        for a in ry.values() for b in ry.values()
    )
    return RestrictionIso(tuple(r), tuple(e), inverse, boolean)
