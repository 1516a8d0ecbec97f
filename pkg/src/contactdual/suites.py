"""Reproducible verification suites run by ``verify``.

Every suite is a pure function of its scale parameters, so identical
``(max_atoms, samples, seed)`` produce identical reports.  Checks marked
exploratory are reported but do not affect the exit code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import random

from .carrier import NEG_INF, POS_INF, AtomSetAlgebra, IntervalLineAlgebra, IntervalSet
from .contact import (
    Alexandroff,
    BetaRho,
    BoundedIdeal,
    ContactStructure,
    GeneratedIdeal,
    Standard,
    TwoPoint,
    all_ideal,
    all_passed,
    atom_graph,
    check_ca,
    check_ka_membership,
    check_lca,
    check_nca,
    clusters,
    designated_relation,
    overlap,
    precedes_c,
    separating_family,
)
from .duality import (
    AlgebraMorphism,
    check_lo,
    compose,
    enumerate_dhlc,
    is_dhlc,
    lambda_a,
    lambda_g_iso_check,
    lambda_t,
    psi_t,
    t_map,
)
from .extensions import (
    alpha,
    beta,
    bridge_to_local_proximity,
    check_la,
    check_local_proximity,
    check_main_conditions,
    check_req,
    enumerate_admissible,
    equivalent_extensions,
    extend_map,
    extending_maps,
    identity_extension,
    reflexive_symmetric_graphs,
    restrict_local_proximity,
    same_structure,
)
from .errors import PreconditionError
from .spaces import (
    FiniteSpace,
    SpaceMap,
    all_maps,
    all_topologies,
    continuous_maps,
    dense_restriction_iso,
    dense_subspace_embeddings,
    skeletal_equivalences,
)

SUITES = ("axioms", "duality", "posets", "extensions", "skeletal", "ka")

# sizes for the map sweeps; the exhaustive searches grow as |X2|^|X1|
MAP_SWEEP_POINTS = 3


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""
    exploratory: bool = False

    def line(self) -> str:
        tag = "INFO" if self.exploratory else ("PASS" if self.ok else "FAIL")
        return f"[{tag}] {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class SuiteResult:
    suite: str
    max_atoms: int
    samples: int
    seed: int
    checks: list = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "", exploratory: bool = False):
        self.checks.append(Check(name, bool(ok), detail, exploratory))

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks if not c.exploratory)

    def header(self) -> str:
        return f"suite {self.suite} (max-atoms {self.max_atoms}, samples {self.samples}, seed {self.seed})"

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "max_atoms": self.max_atoms,
            "samples": self.samples,
            "seed": self.seed,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "ok": c.ok, "detail": c.detail, "exploratory": c.exploratory}
                for c in self.checks
            ],
        }


def _first_failure(reports) -> str:
    bad = [r for r in reports if not r.passed]
    return str(bad[0]) if bad else ""


# ---------------------------------------------------------------------------
# oracles shared with the tests


def brute_force_clusters(structure: ContactStructure) -> set:
    """Every member set satisfying K1-K3, found by search over up-sets.

    Clusters are up-closed (K3 plus monotonicity of contact), so only
    up-sets of the non-zero elements are examined.
    """
    c = structure.carrier
    C = designated_relation(structure).holds
    elems = [v for v in c.values() if v]
    pos = {v: k for k, v in enumerate(elems)}
    up = [sum(1 << pos[w] for w in elems if v & ~w == 0) for v in elems]
    found = set()
    for code in range(1, 1 << len(elems)):
        if any(code >> k & 1 and up[k] & ~code for k in range(len(elems))):
            continue
        mem = [elems[k] for k in range(len(elems)) if code >> k & 1]
        if not all(C(a, b) for a in mem for b in mem):
            continue
        ms = set(mem)
        if any(c.join(a, b) in ms and a not in ms and b not in ms for a in c.values() for b in c.values()):
            continue
        if any(a not in ms and all(C(a, b) for b in mem) for a in c.values()):
            continue
        found.add(frozenset(mem))
    return found


def triple_loop_nca(carrier: AtomSetAlgebra, rel) -> bool:
    """C5 and C6 straight from their definitions, over all element triples."""
    vals = list(carrier.values())
    C = rel.holds
    for a in vals:
        for b in vals:
            if C(a, b):
                continue
            witness = False
            for w in vals:
                if not C(a, w) and not C(b, carrier.complement(w)):
                    witness = True
                    break
            if not witness:
                return False
    for a in vals:
        if a != carrier.one and not any(w and not C(w, a) for w in vals):
            return False
    return True


def finite_instances(max_atoms: int):
    """Every (graph, principal ideal) on P(n), n <= max_atoms, passing NCA or LCA."""
    out = []
    for n in range(1, max_atoms + 1):
        c = AtomSetAlgebra(n)
        for g in reflexive_symmetric_graphs(c):
            for gen in c.values():
                s = ContactStructure(c, g, GeneratedIdeal(c, gen))
                if gen == c.one:
                    if all_passed(check_nca(s)):
                        out.append(s)
                elif all_passed(check_lca(s)):
                    out.append(s)
    return out


# ---------------------------------------------------------------------------
# suites


def suite_axioms(max_atoms: int, samples: int, seed: int) -> SuiteResult:
    res = SuiteResult("axioms", max_atoms, samples, seed)
    for n in range(1, max_atoms + 1):
        c = AtomSetAlgebra(n)
        graphs = reflexive_symmetric_graphs(c)
        sound = [g for g in graphs if all_passed(check_ca(ContactStructure(c, g, all_ideal(c))))]
        res.add(f"atom graphs n={n} pass C1-C4", len(sound) == len(graphs), f"{len(sound)}/{len(graphs)}")
        loop_ok = sym_ok = True
        for g in graphs:
            edges = g.edges()
            for i in range(n):
                broken = atom_graph(c, [e for e in edges if e != (i, i)])
                rep = check_ca(ContactStructure(c, broken, all_ideal(c)))
                loop_ok &= not rep[0].passed
            for i, j in edges:
                if i < j:
                    broken = atom_graph(c, [e for e in edges if e != (i, j)])
                    rep = check_ca(ContactStructure(c, broken, all_ideal(c)))
                    sym_ok &= not rep[2].passed
        res.add(f"loop deletions fail C1 n={n}", loop_ok)
        res.add(f"symmetry breaks fail C3 n={n}", sym_ok)
        nca = [g for g in graphs if all_passed(check_nca(ContactStructure(c, g, all_ideal(c))))]
        res.add(f"NCA collapse n={n}", len(nca) == 1 and nca[0] == overlap(c), f"{len(nca)} normal graph(s)")
        lca_bad = 0
        for g in graphs:
            for gen in c.values():
                if all_passed(check_lca(ContactStructure(c, g, GeneratedIdeal(c, gen)))):
                    lca_bad += gen != c.one or g != overlap(c)
        res.add(f"LCA collapse n={n}", lca_bad == 0, f"{lca_bad} LCA(s) besides the overlap relation with every element bounded")
    inst = finite_instances(max_atoms)
    mism = 0
    for s in inst:
        cls = clusters(s)
        if {cl.members for cl in cls} != brute_force_clusters(s):
            mism += 1
        traces = [cl.bounded_trace() for cl in cls]
        if len(set(traces)) != len(traces):
            mism += 1
    res.add("clusters are ultrafilter clusters", mism == 0, f"{len(inst)} instances")
    return res


def _discrete(max_points: int) -> list:
    return [FiniteSpace.discrete(n) for n in range(1, max_points + 1)]


def suite_duality(max_atoms: int, samples: int, seed: int) -> SuiteResult:
    res = SuiteResult("duality", max_atoms, samples, seed)
    for X in _discrete(max_atoms):
        res.add(f"t_map homeomorphism discrete{X.size}", t_map(X).homeomorphism)
    bad = [s for s in finite_instances(max_atoms) if not lambda_g_iso_check(s).ok]
    res.add("lambda_g isomorphism on finite compact structures", not bad)
    spaces = _discrete(min(max_atoms, MAP_SWEEP_POINTS))
    maps = {(X, Y): all_maps(X, Y) for X in spaces for Y in spaces}
    lt = {f: lambda_t(f) for fs in maps.values() for f in fs}
    res.add("lambda_t images are morphisms", all(is_dhlc(phi) for phi in lt.values()), f"{len(lt)} maps")
    res.add("lambda_t preserves identities",
            all(lt[SpaceMap.identity(X)] == AlgebraMorphism.identity(psi_t(X)) for X in spaces))
    nat = all(t_map(f.domain).then(lambda_a(phi)) == f.then(t_map(f.codomain)) for f, phi in lt.items())
    res.add("lambda_a . lambda_t matches f through t_map", nat)
    counts = all(len(enumerate_dhlc(psi_t(Y), psi_t(X))) == Y.size ** X.size for X in spaces for Y in spaces)
    res.add("morphism count P(m)->P(k) is m^k", counts)
    comp_ok = ladj_ok = True
    pairs = 0
    for X in spaces:
        for Y in spaces:
            for Z in spaces:
                for f in maps[(X, Y)]:
                    for g in maps[(Y, Z)]:
                        pairs += 1
                        prod = compose(lt[f], lt[g])
                        comp_ok &= prod == lt[f.then(g)]
                        ladj_ok &= lambda_a(prod) == lambda_a(lt[f]).then(lambda_a(lt[g]))
    res.add("lambda_t(g.f) = lambda_t(f) <> lambda_t(g)", comp_ok, f"{pairs} pairs")
    res.add("lambda_a turns <> into composition", ladj_ok)
    # associativity through the pair table: every composite is again a lambda_t image
    by_table = {(phi.source, phi.target, phi.table): f for f, phi in lt.items()}
    assoc_ok = True
    triples = 0
    for (X, Y), fs in maps.items():
        for Z in spaces:
            for W in spaces:
                for f in fs:
                    for g in maps[(Y, Z)]:
                        for h in maps[(Z, W)]:
                            triples += 1
                            left = compose(compose(lt[f], lt[g]), lt[h])
                            right = compose(lt[f], compose(lt[g], lt[h]))
                            assoc_ok &= left == right
                            assoc_ok &= (left.source, left.target, left.table) in by_table
    res.add("<> is associative", assoc_ok, f"{triples} triples")
    lo = sum(1 for phi in lt.values() if not check_lo(phi).passed)
    res.add("LO violations among lambda_t images", True, f"{lo} found", exploratory=True)
    return res


def suite_posets(max_atoms: int, samples: int, seed: int) -> SuiteResult:
    res = SuiteResult("posets", max_atoms, samples, seed)
    for X in _discrete(max_atoms):
        en = enumerate_admissible(X)
        res.add(f"admissible structures on discrete{X.size}", len(en) == 1, f"{len(en)} structure(s)")
        s = en.structures[0]
        b = beta(s)
        a = alpha(b)
        res.add(f"alpha(beta(s)) = s on discrete{X.size}", same_structure(a.structure, s) and a.transport_iso)
        res.add(f"beta(s) equivalent to the identity extension on discrete{X.size}",
                equivalent_extensions(b, identity_extension(X)))
        lp = bridge_to_local_proximity(s)
        res.add(f"power-set bridge on discrete{X.size}",
                all_passed(check_local_proximity(lp)) and same_structure(restrict_local_proximity(lp), s))
    tops = {n: len(all_topologies(n)) for n in range(1, min(max_atoms, 4) + 1)}
    expect = {1: 1, 2: 4, 3: 29, 4: 355}
    res.add("topology counts", all(tops[n] == expect[n] for n in tops),
            ", ".join(f"n={n}: {k}" for n, k in tops.items()))
    for X in (FiniteSpace.from_preorder(["0", "1"], [("0", "1")]),):
        en = enumerate_admissible(X)
        res.add("admissible structures on the Sierpinski space", True, f"{len(en)} structure(s)", exploratory=True)
    return res


def suite_extensions(max_atoms: int, samples: int, seed: int) -> SuiteResult:
    res = SuiteResult("extensions", max_atoms, samples, seed)
    spaces = _discrete(min(max_atoms, MAP_SWEEP_POINTS))
    structs = {X: enumerate_admissible(X).structures[0] for X in spaces}
    total = agree = unique = clean = 0
    for X1 in spaces:
        for X2 in spaces:
            s1, s2 = structs[X1], structs[X2]
            e1, e2 = beta(s1), beta(s2)
            for f in all_maps(X1, X2):
                total += 1
                req = all_passed(check_req(f, s1, s2))
                gs = extending_maps(f, e1, e2)
                agree += req == bool(gs)
                if req:
                    g = extend_map(f, s1, s2).g
                    unique += gs == [g]
                    clean += not check_main_conditions(f, s1, s2).disagreements
                else:
                    unique += 1
                    clean += 1
    res.add("REQ verdict matches exhaustive extension search", agree == total, f"{agree}/{total}")
    res.add("constructed extension is the unique one", unique == total, f"{unique}/{total}")
    res.add("main-condition agreement matrix", clean == total, f"{clean}/{total} without disagreement")
    return res


def suite_skeletal(max_atoms: int, samples: int, seed: int) -> SuiteResult:
    res = SuiteResult("skeletal", max_atoms, samples, seed)
    n = min(max_atoms, 3)
    tops = all_topologies(n)
    maps = agree = 0
    for X in tops:
        for Y in tops:
            for f in continuous_maps(X, Y):
                maps += 1
                agree += skeletal_equivalences(f).agree
    res.add(f"skeletal criteria agree on {len(tops)} topologies", agree == maps, f"{agree}/{maps} maps")
    embs = ok = 0
    for Y in tops:
        for emb in dense_subspace_embeddings(Y):
            embs += 1
            ok += dense_restriction_iso(emb).ok
    res.add("restriction/closure are inverse Boolean isomorphisms", ok == embs, f"{ok}/{embs} embeddings")
    squares, agree = skeletal_extension_squares(tops)
    res.add("extension g is skeletal iff f is", agree == squares, f"{agree}/{squares} squares")
    return res


def skeletal_extension_squares(tops: list) -> tuple:
    """Counts commuting squares ``g . f1 = f2 . f`` over dense subspaces, and
    how many of them have ``g`` and ``f`` equally skeletal."""
    dense = {Y: [d for d in range(1, Y.full + 1) if Y.is_dense(d)] for Y in tops}
    subs = {(Y, d): Y.subspace(Y.names(d)) for Y in tops for d in dense[Y]}
    cache = {}
    squares = agree = 0
    for Y1 in tops:
        for Y2 in tops:
            for g in continuous_maps(Y1, Y2):
                gs = g.skeletal
                for d1 in dense[Y1]:
                    pts1 = [i for i in range(Y1.size) if d1 >> i & 1]
                    img = 0
                    for i in pts1:
                        img |= 1 << g.mapping[i]
                    for d2 in dense[Y2]:
                        if img & ~d2:
                            continue
                        pos2 = {j: k for k, j in enumerate(i for i in range(Y2.size) if d2 >> i & 1)}
                        X1, X2 = subs[(Y1, d1)], subs[(Y2, d2)]
                        key = (X1, X2, tuple(pos2[g.mapping[i]] for i in pts1))
                        if key not in cache:
                            cache[key] = SpaceMap(X1, X2, key[2]).skeletal
                        squares += 1
                        agree += cache[key] == gs
    return squares, agree


def random_disjoint_pairs(count: int, seed: int) -> list:
    """Pairs of lattice-disjoint interval sets (touching allowed)."""
    c = IntervalLineAlgebra()
    rng = random.Random(f"{seed}:disjoint")
    out = []
    while len(out) < count:
        a = c.sample(rng)
        b = c.meet(c.sample(rng), c.complement(a))
        if not a.is_empty and not b.is_empty:
            out.append((a, b))
    return out


def suite_ka(max_atoms: int, samples: int, seed: int) -> SuiteResult:
    res = SuiteResult("ka", max_atoms, samples, seed)
    c = IntervalLineAlgebra()
    base = ContactStructure(c, Standard(c), BoundedIdeal(c))
    lca = check_lca(base, samples, seed)
    res.add("interval standard passes C1-C4 and BC1-BC3", all_passed(lca), _first_failure(lca))
    la = check_la(base, samples, seed)
    res.add("interval standard passes LA1-LA3", all_passed(la), _first_failure(la))
    alex, stone, two = Alexandroff(base), BetaRho(base), TwoPoint(c)
    for name, rel in (("C_rho", alex), ("C_betarho", stone), ("TwoPoint", two)):
        reps = check_ka_membership(base, rel, samples, seed)
        res.add(f"{name} in K_a", all_passed(reps), _first_failure(reps))
    a = IntervalSet.of((1, POS_INF))
    b = IntervalSet.of((NEG_INF, -1))
    res.add("witness pair separates C_rho and C_betarho", alex.holds(a, b) and not stone.holds(a, b))
    res.add("C_rho <=_c TwoPoint <=_c C_betarho",
            precedes_c(c, alex, two, samples=samples, seed=seed)
            and precedes_c(c, two, stone, samples=samples, seed=seed))
    pairs = random_disjoint_pairs(100, seed)
    match = sum(stone.holds(x, y) == (separating_family(c, (base.rho,), x, y) is None) for x, y in pairs)
    res.add("C_betarho rule matches the dyadic-family constructor", match == len(pairs), f"{match}/{len(pairs)}")
    return res


RUNNERS = {
    "axioms": suite_axioms,
    "duality": suite_duality,
    "posets": suite_posets,
    "extensions": suite_extensions,
    "skeletal": suite_skeletal,
    "ka": suite_ka,
}


def run_suite(name: str, max_atoms: int, samples: int, seed: int) -> list:
    """Results for one suite, or every suite in order for ``all``."""
    if max_atoms < 1:
        raise PreconditionError("max-atoms must be at least 1")
    names = SUITES if name == "all" else (name,)
    if any(n not in RUNNERS for n in names):
        raise PreconditionError(f"unknown suite {name!r}")
    return [RUNNERS[n](max_atoms, samples, seed) for n in names]
