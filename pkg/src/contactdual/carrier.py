"""Boolean-algebra carriers.

Two backends are provided:

* ``AtomSetAlgebra(n)`` -- the power set of ``{0..n-1}``.  Raw values are
  Python ints used as bitmasks over the atoms.
* ``IntervalLineAlgebra()`` -- regular closed subsets of the real line that
  are finite unions of closed intervals and rays with rational endpoints.
  Raw values are ``IntervalSet`` instances.

Hot loops work on raw values through carrier methods; the public
``Element`` wrapper pairs a raw value with its carrier so that elements of
different carriers cannot be mixed silently.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .errors import CarrierMismatch, PreconditionError

DEFAULT_ATOM_BOUND = 12


@functools.total_ordering
class Infinity:
    """Endpoint marker for rays: ``NEG_INF`` or ``POS_INF``."""

    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = sign

    def __eq__(self, other):
        return isinstance(other, Infinity) and other.sign == self.sign

    def __hash__(self):
        return hash(("inf", self.sign))

    def __lt__(self, other):
        if isinstance(other, Infinity):
            return self.sign < other.sign
        return self.sign < 0

    def __neg__(self):
        return POS_INF if self.sign < 0 else NEG_INF

    def __repr__(self):
        return "-inf" if self.sign < 0 else "inf"


NEG_INF = Infinity(-1)
POS_INF = Infinity(1)

Endpoint = Union[Fraction, Infinity]


def _finite(x) -> bool:
    return not isinstance(x, Infinity)


def _shift(x: Endpoint, d: Fraction) -> Endpoint:
    return x if isinstance(x, Infinity) else x + d


def _as_endpoint(x) -> Endpoint:
    if isinstance(x, Infinity):
        return x
    return Fraction(x)


@dataclass(frozen=True)
class IntervalSet:
    """A finite union of non-degenerate closed intervals, canonically stored.

    ``components`` is sorted, and consecutive components are separated by a
    gap of positive length.  Touching intervals are merged and single points
    are dropped, which is exactly ``cl(int(.))`` of the union.
    """

    components: tuple = ()

    @classmethod
    def of(cls, *pairs) -> "IntervalSet":
        return cls(_canonical(tuple((_as_endpoint(lo), _as_endpoint(hi)) for lo, hi in pairs)))

    @property
    def is_empty(self) -> bool:
        return not self.components

    @property
    def is_bounded(self) -> bool:
        return all(_finite(lo) and _finite(hi) for lo, hi in self.components)

    @property
    def unbounded_sides(self) -> frozenset:
        sides = set()
        if self.components:
            if self.components[0][0] == NEG_INF:
                sides.add(-1)
            if self.components[-1][1] == POS_INF:
                sides.add(1)
        return frozenset(sides)

    def endpoints(self) -> list:
        return [x for comp in self.components for x in comp if _finite(x)]

    def contains_point(self, x: Fraction) -> bool:
        return any(lo <= x <= hi for lo, hi in self.components)

    def intersects(self, other: "IntervalSet") -> bool:
        """Set-theoretic intersection test (touching counts)."""
        for lo1, hi1 in self.components:
            for lo2, hi2 in other.components:
                if max(lo1, lo2) <= min(hi1, hi2):
                    return True
        return False

    def is_subset(self, other: "IntervalSet") -> bool:
        return all(
            any(lo2 <= lo1 and hi1 <= hi2 for lo2, hi2 in other.components)
            for lo1, hi1 in self.components
        )

    def distance(self, other: "IntervalSet"):
        """Infimum distance between the two sets; ``None`` if either is empty."""
        if self.is_empty or other.is_empty:
            return None
        best = None
        for lo1, hi1 in self.components:
            for lo2, hi2 in other.components:
                if max(lo1, lo2) <= min(hi1, hi2):
                    return Fraction(0)
                gap = lo2 - hi1 if hi1 < lo2 else lo1 - hi2
                if best is None or gap < best:
                    best = gap
        return best

    def point_distance(self, x: Fraction):
        if self.is_empty:
            return None
        best = None
        for lo, hi in self.components:
            if lo <= x <= hi:
                return Fraction(0)
            gap = lo - x if x < lo else x - hi
            if best is None or gap < best:
                best = gap
        return best

    def neighborhood(self, r: Fraction) -> "IntervalSet":
        """Closed ``r``-neighbourhood: every component widened by ``r``."""
        return IntervalSet(_canonical(tuple((_shift(lo, -r), _shift(hi, r)) for lo, hi in self.components)))

    def __str__(self):
        if not self.components:
            return "0"
        return " u ".join(f"[{lo}, {hi}]" for lo, hi in self.components)


def _canonical(pieces) -> tuple:
    kept = sorted((p for p in pieces if p[0] < p[1]), key=lambda p: (p[0], p[1]))
    merged = []
    for lo, hi in kept:
        if merged and lo <= merged[-1][1]:
            if hi > merged[-1][1]:
                merged[-1] = (merged[-1][0], hi)
        else:
            merged.append((lo, hi))
    return tuple(merged)


class Carrier:
    """Common interface of the two backends (raw-value level)."""

    is_finite = False

    def join(self, a, b):
        raise NotImplementedError

    def meet(self, a, b):
        raise NotImplementedError

    def complement(self, a):
        raise NotImplementedError

    def leq(self, a, b) -> bool:
        return self.meet(a, b) == a

    def intersects(self, a, b) -> bool:
        """Whether the underlying point sets meet (the standard contact)."""
        raise NotImplementedError

    def wrap(self, value) -> "Element":
        return Element(self, value)


@dataclass(frozen=True)
class AtomSetAlgebra(Carrier):
    """Power set of ``n`` atoms; raw values are bitmasks."""

    n: int
    label: str = "P"

    is_finite = True

    def __post_init__(self):
        if self.n < 0:
            raise PreconditionError("atom count must be non-negative")

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return (1 << self.n) - 1

    @property
    def size(self) -> int:
        return 1 << self.n

    def values(self) -> range:
        return range(1 << self.n)

    def join(self, a: int, b: int) -> int:
        return a | b

    def meet(self, a: int, b: int) -> int:
        return a & b

    def complement(self, a: int) -> int:
        return self.one & ~a

    def leq(self, a: int, b: int) -> bool:
        return a & ~b == 0

    def intersects(self, a: int, b: int) -> bool:
        return a & b != 0

    def atoms_of(self, a: int) -> list:
        return [i for i in range(self.n) if a >> i & 1]

    def from_atoms(self, atoms) -> int:
        v = 0
        for i in atoms:
            if not 0 <= i < self.n:
                raise PreconditionError(f"atom {i} out of range for n={self.n}")
            v |= 1 << i
        return v

    def element(self, atoms=()) -> "Element":
        return Element(self, self.from_atoms(atoms))

    def contains(self, value) -> bool:
        return isinstance(value, int) and 0 <= value < (1 << self.n)

    def show(self, a: int) -> str:
        return "{" + ",".join(map(str, self.atoms_of(a))) + "}"


@dataclass(frozen=True)
class IntervalLineAlgebra(Carrier):
    """Regular closed finite unions of intervals and rays in the real line."""

    label: str = "RC(R)"

    is_finite = False

    @property
    def zero(self) -> IntervalSet:
        return IntervalSet(())

    @property
    def one(self) -> IntervalSet:
        return IntervalSet(((NEG_INF, POS_INF),))

    def join(self, a: IntervalSet, b: IntervalSet) -> IntervalSet:
        return IntervalSet(_canonical(a.components + b.components))

    def meet(self, a: IntervalSet, b: IntervalSet) -> IntervalSet:
        pieces = []
        for lo1, hi1 in a.components:
            for lo2, hi2 in b.components:
                pieces.append((max(lo1, lo2), min(hi1, hi2)))
        return IntervalSet(_canonical(tuple(pieces)))

    def complement(self, a: IntervalSet) -> IntervalSet:
        gaps = []
        prev = NEG_INF
        for lo, hi in a.components:
            gaps.append((prev, lo))
            prev = hi
        gaps.append((prev, POS_INF))
        return IntervalSet(_canonical(tuple(gaps)))

    def leq(self, a: IntervalSet, b: IntervalSet) -> bool:
        return a.is_subset(b)

    def intersects(self, a: IntervalSet, b: IntervalSet) -> bool:
        return a.intersects(b)

    def contains(self, value) -> bool:
        return isinstance(value, IntervalSet) and _canonical(value.components) == value.components

    def element(self, *pairs) -> "Element":
        return Element(self, IntervalSet.of(*pairs))

    def show(self, a: IntervalSet) -> str:
        return str(a)

    # -- sampling and witness pools for the sampled axiom checks ----------

    def sample(self, rng: random.Random) -> IntervalSet:
        roll = rng.random()
        if roll < 0.04:
            return self.zero
        if roll < 0.08:
            return self.one
        k = rng.randint(1, 3)
        points = set()
        while len(points) < 2 * k:
            q = rng.choice((1, 2, 3, 4))
            points.add(Fraction(rng.randint(-8 * q, 8 * q), q))
        pts = sorted(points)
        pieces = [[pts[2 * i], pts[2 * i + 1]] for i in range(k)]
        if rng.random() < 0.3:
            pieces[0][0] = NEG_INF
        if rng.random() < 0.3:
            pieces[-1][1] = POS_INF
        return IntervalSet(_canonical(tuple(tuple(p) for p in pieces)))

    def sample_bounded(self, rng: random.Random) -> IntervalSet:
        while True:
            x = self.sample(rng)
            if x.is_bounded:
                return x

    def candidates(self, *values: IntervalSet, points=()) -> list:
        """Deterministic pool of elements built from the given data.

        Used to search for existential witnesses (interpolants, bounded
        approximations, separating neighbourhoods) on the infinite carrier.
        """
        base = []
        for v in values:
            base.append(v)
            base.append(self.complement(v))
        pool = [self.zero, self.one] + base
        for v in values:
            if not v.is_empty:
                pool.append(self.complement(v.neighborhood(Fraction(1))))
        for i, u in enumerate(base):
            for v in base[i + 1:]:
                d = u.distance(v)
                radii = [Fraction(1), Fraction(2)] if d is None else ([] if d == 0 else [d / 2, d / 3, 2 * d / 3])
                for r in radii:
                    for w in (u, v):
                        nb = w.neighborhood(r)
                        pool.append(nb)
                        pool.append(self.complement(nb))
        ends = sorted({x for v in values for x in v.endpoints()} | {Fraction(p) for p in points})
        big = (max((abs(x) for x in ends), default=Fraction(0)) + 2)
        pool.append(IntervalSet.of((-big, big)))
        for x in points:
            x = Fraction(x)
            d = None
            for v in values:
                pd = v.point_distance(x)
                if pd is not None and pd > 0 and (d is None or pd < d):
                    d = pd
            for r in ([d / 2] if d is not None else []) + [Fraction(1, 4), Fraction(1)]:
                pool.append(IntervalSet.of((x - r, x + r)))
        for v in base:
            for lo, hi in v.components:
                if _finite(lo) and _finite(hi):
                    mid, w = (lo + hi) / 2, (hi - lo) / 4
                    pool.append(IntervalSet.of((mid - w, mid + w)))
                elif _finite(lo):
                    pool.append(IntervalSet.of((lo + 1, lo + 2)))
                elif _finite(hi):
                    pool.append(IntervalSet.of((hi - 2, hi - 1)))
                else:
                    pool.append(IntervalSet.of((0, 1)))
        seen = set()
        out = []
        for p in pool:
            if p not in seen:
                seen.add(p)
                out.append(p)
        return out


@dataclass(frozen=True)
class Element:
    """A raw value tagged with its owning carrier."""

    carrier: Carrier
    value: object

    def __and__(self, other):
        return meet(self, other)

    def __or__(self, other):
        return join(self, other)

    def __invert__(self):
        return complement(self)

    def __le__(self, other):
        return leq(self, other)

    def __str__(self):
        return self.carrier.show(self.value)


def _same(a: Element, b: Element) -> Carrier:
    if a.carrier != b.carrier:
        raise CarrierMismatch(f"cannot combine elements of {a.carrier!r} and {b.carrier!r}")
    return a.carrier


def meet(a: Element, b: Element) -> Element:
    c = _same(a, b)
    return Element(c, c.meet(a.value, b.value))


def join(a: Element, b: Element) -> Element:
    c = _same(a, b)
    return Element(c, c.join(a.value, b.value))


def complement(a: Element) -> Element:
    return Element(a.carrier, a.carrier.complement(a.value))


def leq(a: Element, b: Element) -> bool:
    c = _same(a, b)
    return c.leq(a.value, b.value)


def atoms_below(a: Element) -> list:
    if not a.carrier.is_finite:
        raise PreconditionError("atoms_below needs a finite carrier")
    return a.carrier.atoms_of(a.value)


def enumerate_elements(carrier: Carrier, bound: int = DEFAULT_ATOM_BOUND) -> Iterator[Element]:
    if not carrier.is_finite:
        raise PreconditionError("the interval carrier cannot be enumerated")
    if carrier.n > bound:
        raise PreconditionError(f"{carrier.n} atoms exceeds the enumeration bound {bound}")
    for v in carrier.values():
        yield Element(carrier, v)


def raw(carrier: Carrier, x):
    """Unwrap an ``Element`` (checking its carrier) or pass a raw value through."""
    if isinstance(x, Element):
        if x.carrier != carrier:
            raise CarrierMismatch(f"element of {x.carrier!r} used with {carrier!r}")
        return x.value
    return x
