"""Command-line front end.

Exit codes: 0 when every check passes, 1 when any check fails, 2 on
input or precondition errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import registry, textio
from .contact import (
    Alexandroff,
    BetaRho,
    BoundedIdeal,
    ContactStructure,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    Standard,
    TwoPoint,
    all_passed,
    check_cluster,
    check_ka_membership,
    check_lca,
    check_nca,
    clusters,
)
from .dot import render_dot
from .duality import lambda_g_iso_check, psi_a, psi_t, t_map
from .errors import InputError, PreconditionError
from .extensions import (
    check_admissible,
    check_compactification_conditions,
    check_main_conditions,
    check_req,
    enumerate_admissible,
    extend_map,
    unique_admissible,
)
from .spaces import MAP_PROPERTIES, all_topologies, skeletal_equivalences
from .suites import SUITES, run_suite

FORMATS = ("text", "json", "dot")


class Report:
    """Ordered text lines plus the equivalent JSON document."""

    def __init__(self, title: str, samples: int, seed: int):
        self.lines = [title, f"seed: {seed}", f"samples: {samples}"]
        self.doc = {"command": title, "seed": seed, "samples": samples}
        self.ok = True
        self.dot = None

    def add(self, line: str):
        self.lines.append(line)

    def reports(self, key, reports) -> list:
        """Adds verdict lines; stores the JSON under ``key`` unless it is None."""
        out = [textio.report_to_json(r) for r in reports]
        if key is not None:
            self.doc[key] = out
        for r in reports:
            self.add(f"  {r}" + (f" [{r.note}]" if r.note and not r.passed else ""))
        self.ok &= all_passed(reports)
        return out

    def render(self, fmt: str) -> str:
        if fmt == "json":
            self.doc["passed"] = self.ok
            return textio.dumps(self.doc) + "\n"
        if fmt == "dot":
            if self.dot is None:
                raise PreconditionError("this command has no DOT rendering")
            return self.dot
        return "\n".join(self.lines + [f"result: {'PASS' if self.ok else 'FAIL'}"]) + "\n"


# ---------------------------------------------------------------------------
# input resolution


def _read(path: str):
    p = Path(path)
    if not p.is_file():
        return None
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        return textio.loads(text)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None


def load_structure(ref: str) -> ContactStructure:
    if ref in registry.STRUCTURES:
        return registry.structure(ref)
    data = _read(ref)
    if data is None:
        return registry.structure(ref)
    return textio.structure_from_json(data, registry.SPACES)


def load_space(ref: str):
    if ref in registry.SPACES:
        return registry.space(ref)
    data = _read(ref)
    if data is None:
        return registry.space(ref)
    return textio.space_from_json(data, registry.SPACES)


def load_map(ref: str):
    if ref in registry.MAPS:
        return registry.space_map(ref), None
    data = _read(ref)
    if data is None:
        return registry.space_map(ref), None
    f = textio.map_from_json(data, registry.SPACES)
    structs = None
    if isinstance(data, dict) and "structures" in data:
        pair = data["structures"]
        if not isinstance(pair, list) or len(pair) != 2:
            raise InputError("scenario 'structures' must be a list of two structures")
        structs = tuple(textio.structure_from_json(s, registry.SPACES) for s in pair)
    return f, structs


def _show_points(space, mask: int) -> str:
    return "{" + ",".join(p for i, p in enumerate(space.points) if mask >> i & 1) + "}"


def _one_of(args, *names):
    given = [n for n in names if getattr(args, n, None)]
    if len(given) != 1:
        flags = ", ".join("--" + n for n in names)
        raise InputError(f"give exactly one of {flags}")
    return given[0]


# ---------------------------------------------------------------------------
# verbs


def _ka_base(s: ContactStructure):
    rel = s.rho
    if isinstance(rel, (Alexandroff, BetaRho)):
        return rel.base
    if isinstance(rel, TwoPoint):
        return ContactStructure(s.carrier, Standard(s.carrier), BoundedIdeal(s.carrier))
    return None


def cmd_check(args) -> Report:
    which = _one_of(args, "structure", "space", "map")
    rep = Report(f"check --{which} {getattr(args, which)}", args.samples, args.seed)
    if which == "structure":
        s = load_structure(args.structure)
        proper = not s.ib.contains(s.carrier.one)
        kind = "LCA (C1-C4, BC1-BC3)" if proper else "NCA (C1-C6)"
        rep.add(f"axioms: {kind}")
        rep.reports("axioms", check_lca(s, args.samples, args.seed) if proper
                    else check_nca(s, args.samples, args.seed))
        base = _ka_base(s)
        if base is not None:
            rep.add("membership in K_a: RC1, RC2")
            extra = check_ka_membership(base, s.rho, args.samples, args.seed)
            rep.reports("ka", [r for r in extra if r.axiom in ("RC1", "RC2")])
        if s.carrier.is_finite and hasattr(s.rho, "adjacency"):
            rep.dot = render_dot(s.rho)
    elif which == "space":
        X = load_space(args.space)
        s = psi_t(X)
        rep.add(f"points: {', '.join(X.points)}; regular closed atoms: {s.carrier.n}")
        rep.reports("standard_structure", check_nca(s))
        rep.add("admissibility of the standard structure")
        rep.reports("admissible", check_admissible(s))
        rep.dot = render_dot(X)
    else:
        f, _ = load_map(args.map)
        props = {p: getattr(f, p) for p in MAP_PROPERTIES}
        rep.doc["properties"] = props
        for p, v in props.items():
            rep.add(f"  {p}: {'yes' if v else 'no'}")
        if f.continuous:
            crit = skeletal_equivalences(f)
            rep.doc["skeletal_criteria"] = [crit.by_definition, crit.by_closed_images, crit.by_dense_preimages]
            rep.add(f"  skeletal criteria agree: {'yes' if crit.agree else 'no'}")
            rep.ok &= crit.agree
    return rep


def cmd_dual(args) -> Report:
    which = _one_of(args, "structure", "space")
    rep = Report(f"dual --{which} {getattr(args, which)}", args.samples, args.seed)
    if which == "structure":
        s = load_structure(args.structure)
        dual = psi_a(s)
        c = s.carrier
        rep.add(f"cluster space: {dual.space.size} point(s)")
        pts = []
        for name, cl in zip(dual.space.points, dual.clusters):
            lam = [c.show(a) for a in c.values() if dual.lam[a] >> dual.space.index(name) & 1]
            pts.append({"point": name, "witness": list(map(str, cl.witness))})
            label = "unbounded elements" if cl.witness[0] == "infinity" else f"ultrafilter at atom {cl.witness[1]}"
            rep.add(f"  {name}: cluster of the {label}, in lambda of {len(lam)} element(s)")
        rep.doc["points"] = pts
        rep.doc["space"] = textio.space_to_json(dual.space)
        rep.add("  opens: " + " ".join(_show_points(dual.space, u) for u in dual.space.sorted_opens))
        iso = lambda_g_iso_check(s)
        rep.add(f"  {iso}")
        rep.doc["lambda_g"] = iso.ok
        rep.ok &= iso.ok
        rep.dot = render_dot(dual.space)
    else:
        X = load_space(args.space)
        s = psi_t(X)
        rc = s.carrier
        rep.add(f"regular closed atoms: {rc.n}")
        rep.doc["atoms"] = [[p for i, p in enumerate(X.points) if m >> i & 1] for m in rc.atom_masks]
        for i, m in enumerate(rc.atom_masks):
            rep.add(f"  atom {i}: {_show_points(X, m)}")
        t = t_map(X)
        rep.doc["t_map"] = [list(p) for p in t.pairs()]
        rep.doc["homeomorphism"] = t.homeomorphism
        rep.add("  t: " + ", ".join(f"{x}->{y}" for x, y in t.pairs()))
        rep.add(f"  t is a homeomorphism: {'yes' if t.homeomorphism else 'no'}")
        rep.dot = render_dot(t.codomain)
    return rep


def cmd_clusters(args) -> Report:
    s = load_structure(args.structure)
    rep = Report(f"clusters --structure {args.structure}", args.samples, args.seed)
    cls = clusters(s)
    c = s.carrier
    rep.add(f"{len(cls)} cluster(s)")
    out = []
    for cl in cls:
        members = sorted(cl.members)
        rep.add(f"  sigma_{cl.witness[1]}: " + " ".join(c.show(a) for a in members))
        checks = rep.reports(None, check_cluster(cl))
        out.append({"ultrafilter": cl.witness[1], "members": [c.atoms_of(a) for a in members],
                    "bounded": cl.bounded, "checks": checks})
    rep.doc["clusters"] = out
    return rep


def cmd_extend_map(args) -> Report:
    which = _one_of(args, "map", "scenario")
    f, structs = load_map(getattr(args, which))
    rep = Report(f"extend-map --{which} {getattr(args, which)}", args.samples, args.seed)
    s1, s2 = structs or (unique_admissible(f.domain), unique_admissible(f.codomain))
    rep.add("  f: " + ", ".join(f"{x}->{y}" for x, y in f.pairs()))
    req = check_req(f, s1, s2)
    rep.reports("req", req)
    if not all_passed(req):
        return rep
    ext = extend_map(f, s1, s2)
    rep.doc["g"] = [list(p) for p in ext.g.pairs()]
    rep.add("  g: " + ", ".join(f"{x}->{y}" for x, y in ext.g.pairs()))
    main = check_main_conditions(f, s1, s2)
    rep.add("conditions:")
    for v in main.verdicts:
        rep.add(f"  {v}" + (f" [{v.note}]" if v.note else ""))
    rep.doc["conditions"] = [textio.report_to_json(v) for v in main.verdicts]
    rep.doc["matrix"] = [
        {"clause": r.clause, "condition": r.condition, "condition_holds": r.condition_holds,
         "property": r.property, "property_holds": r.property_holds}
        for r in main.matrix
    ]
    for r in main.matrix:
        mark = "agree" if r.agree else "DISAGREE"
        rep.add(f"  ({r.clause}) {r.condition}={r.condition_holds} {r.property}={r.property_holds}: {mark}")
    if main.asserted:
        rep.ok &= not main.disagreements
    if all(s.ib.contains(s.carrier.one) for s in (s1, s2)):
        rep.add("compactification conditions:")
        rep.reports("compactification", check_compactification_conditions(f, s1, s2))
    return rep


def cmd_enumerate(args) -> Report:
    if args.admissible:
        X = load_space(args.space) if args.space else None
        if X is None:
            raise InputError("--admissible needs --space")
        rep = Report(f"enumerate --space {args.space} --admissible", args.samples, args.seed)
        en = enumerate_admissible(X)
        rep.add(f"{len(en)} structure" + ("" if len(en) == 1 else "s"))
        rep.doc["count"] = len(en)
        rep.doc["structures"] = [textio.structure_to_json(s) for s in en.structures]
        rep.doc["order"] = [list(p) for p in en.order]
        for i, s in enumerate(en.structures):
            rep.add(f"  s{i}: edges {[e for e in s.rho.edges() if e[0] < e[1]]}, "
                    f"bounded generator {s.carrier.show(s.ib.generator)}")
        rep.dot = render_dot(en)
        return rep
    if args.topologies:
        rep = Report(f"enumerate --topologies --max-atoms {args.max_atoms}", args.samples, args.seed)
        tops = all_topologies(args.max_atoms)
        rep.add(f"{len(tops)} topologies on {args.max_atoms} point(s)")
        rep.doc["count"] = len(tops)
        return rep
    raise InputError("enumerate needs --admissible or --topologies")


def cmd_verify(args) -> Report:
    rep = Report(f"verify --suite {args.suite} --max-atoms {args.max_atoms}", args.samples, args.seed)
    results = run_suite(args.suite, args.max_atoms, args.samples, args.seed)
    rep.doc["suites"] = [r.to_json() for r in results]
    for r in results:
        rep.add(r.header())
        for c in r.checks:
            rep.add(f"  {c.line()}")
        rep.ok &= r.passed
    return rep


def cmd_render(args) -> Report:
    rep = Report("render", args.samples, args.seed)
    if args.structure:
        s = load_structure(args.structure)
        rep.dot = render_dot(s.rho)
    elif args.space and args.admissible:
        rep.dot = render_dot(enumerate_admissible(load_space(args.space)))
    elif args.space:
        rep.dot = render_dot(load_space(args.space))
    else:
        raise InputError("render needs --structure or --space")
    return rep


VERBS = {
    "check": cmd_check,
    "dual": cmd_dual,
    "clusters": cmd_clusters,
    "extend-map": cmd_extend_map,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "render": cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help="sample budget for the interval carrier")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for sampled checks")
    common.add_argument("--max-atoms", type=int, default=3, help="scale bound for enumerations and suites")
    common.add_argument("--format", choices=FORMATS, default="text")

    parser = argparse.ArgumentParser(prog="contactdual", description="Contact algebras and their dual spaces.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")
    helps = {
        "check": "check axioms of a structure, a space's standard structure, or map properties",
        "dual": "cluster space of a structure, or the canonical map of a space",
        "clusters": "list the clusters of a finite structure",
        "extend-map": "extension conditions and the extended map between cluster spaces",
        "enumerate": "count admissible structures or topologies",
        "verify": "run a verification suite",
        "render": "DOT output for a graph, preorder or poset",
    }
    for verb, text in helps.items():
        p = sub.add_parser(verb, parents=[common], help=text, description=text)
        if verb in ("check", "dual", "clusters", "render"):
            p.add_argument("--structure", help="registry name or JSON path")
        if verb in ("check", "dual", "enumerate", "render"):
            p.add_argument("--space", help="registry name or JSON path")
        if verb in ("check", "extend-map"):
            p.add_argument("--map", help="registry name or JSON path")
        if verb == "extend-map":
            p.add_argument("--scenario", help="JSON map with optional 'structures'")
        if verb in ("enumerate", "render"):
            p.add_argument("--admissible", action="store_true", help="admissible structures of --space")
        if verb == "enumerate":
            p.add_argument("--topologies", action="store_true", help="all topologies on --max-atoms points")
        if verb == "verify":
            p.add_argument("--suite", choices=SUITES + ("all",), required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb == "render":
        args.format = "dot"
    try:
        if args.samples < 1:
            raise InputError("--samples must be positive")
        if args.max_atoms < 1:
            raise InputError("--max-atoms must be positive")
        rep = VERBS[args.verb](args)
        out = rep.render(args.format)
    except (InputError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        for r in getattr(exc, "reports", ()):
            print(f"  {r}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
