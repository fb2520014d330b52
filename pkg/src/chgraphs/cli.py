"""Command-line front end.

Verbs:

    construct NAME [PARAMS...]   write a named graph to a file
    report    NAME [PARAMS...]   parameter / local-structure census as JSON
    check     NAME [PARAMS...]   k-CH decision with witness, JSON output
    aut       NAME [PARAMS...]   automorphism group order + generators
    reproduce --claims FILE      run a claims table and compare verdicts

Graph sources are either registry names with positional numeric parameters
(kebab-case, e.g. ``gq-pointgraph Q5minus 3``) or paths to graph6 / edge-list
files.  Sporadic graphs are fixture-backed: the registry loads the generator
file from the fixture directory and rebuilds the graph as the orbital graph
of the recorded valency.

Exit codes: 0 success / all match, 1 verdict mismatch or failed check,
2 usage error, 3 fixture or I/O error (including per-claim timeouts).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import concurrent.futures
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import census, graphs, homct, permgrp
from .graphs import Graph


EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_IO = 3


class CliError(Exception):
    def __init__(self, message, code=EXIT_IO):
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------------------
# construction registry
# ---------------------------------------------------------------------------


def _schlafli():
    return graphs.complement(graphs.gq("Q5minus", 2).point_graph())


_PLAIN = {
    # name -> (builder, parameter names)
    "complete": (graphs.complete, ("n",)),
    "cycle": (graphs.cycle, ("n",)),
    "complete-multipartite": (graphs.complete_multipartite, ("m", "r")),
    "grid": (graphs.grid, ("n", "m")),
    "cross": (graphs.cross, ("n", "m")),
    "hypercube": (graphs.hypercube, ("n",)),
    "folded-cube": (graphs.folded_cube, ("n",)),
    "halved-cube": (graphs.halved_cube, ("n",)),
    "johnson": (graphs.johnson, ("n", "k")),
    "petersen": (graphs.petersen, ()),
    "icosahedron": (graphs.icosahedron, ()),
    "clebsch": (lambda: graphs.halved_cube(5), ()),
    "schlafli": (_schlafli, ()),
    "projective-plane-incidence": (graphs.projective_plane_incidence, ("q",)),
    "heawood": (lambda: graphs.projective_plane_incidence(2), ()),
    "tutte-coxeter": (lambda: graphs.gq("W3", 2).incidence_graph(), ()),
    "gq-pointgraph": (lambda kind, q: graphs.gq(kind, q).point_graph(), ("kind", "q")),
    "gq-incidence": (lambda kind, q: graphs.gq(kind, q).incidence_graph(), ("kind", "q")),
    "affine-polar": (lambda m, q, eps: graphs.affine_polar(m, q, eps), ("m", "q", "eps")),
}

# fixture-backed graphs: registry name -> fixture file stem
_FIXTURE_GRAPHS = {
    "hoffman-singleton": "hoffman-singleton",
    "higman-sims": "higman-sims",
    "mclaughlin": "mcl2",
    "hexagon22": "hexagon22",
    "hexagon22-dual": "hexagon22-dual",
    "hall-janko": "hall-janko",
}


def fixture_dir(override=None) -> Path:
    if override:
        return Path(override)
    local = Path("fixtures")
    if local.is_dir():
        return local
    packaged = Path(__file__).resolve().parents[2] / "fixtures"
    return packaged


def _coerce(value: str):
    try:
        return int(value)
    except ValueError:
        return value


def load_fixture_group(path: Path):
    """Returns (GroupChain, meta dict) for a .gens file."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read fixture {path}: {exc}") from exc
    try:
        degree, perms, meta = graphs.parse_generators(text)
    except ValueError as exc:
        raise CliError(f"bad fixture {path}: {exc}") from exc
    side = Path(str(path)[: -len(".gens")] + ".meta.json") if str(path).endswith(".gens") else None
    if side is not None and side.exists():
        try:
            meta = {**meta, **json.loads(side.read_text())}
        except (OSError, json.JSONDecodeError) as exc:
            raise CliError(f"bad fixture metadata {side}: {exc}") from exc
    return permgrp.group(perms, degree), meta


def _fixture_graph(stem: str, fixtures: Path):
    G, meta = load_fixture_group(fixtures / f"{stem}.gens")
    valency = int(meta.get("graph_valency", meta.get("graph-valency", 0)))
    if not valency:
        raise CliError(f"fixture {stem} does not record a graph valency")
    built, _ = graphs.orbital_graphs(G.strong_generators, G.degree)
    matching = [g for g in built if g.degree(0) == valency]
    if len(matching) != 1:
        raise CliError(
            f"fixture {stem}: expected one orbital graph of valency {valency}, "
            f"found {len(matching)}"
        )
    return matching[0], G, meta


def construction_names():
    return sorted(list(_PLAIN) + list(_FIXTURE_GRAPHS))


def resolve_graph(name: str, params, fixtures: Path):
    """Returns (graph, fixture group or None, fixture meta or None)."""
    if name in _PLAIN:
        builder, wanted = _PLAIN[name]
        if len(params) != len(wanted):
            raise CliError(
                f"{name} takes {len(wanted)} parameter(s) {wanted}, got {len(params)}",
                EXIT_USAGE,
            )
        try:
            return builder(*[_coerce(p) for p in params]), None, None
        except (ValueError, KeyError) as exc:
            raise CliError(f"{name}: {exc}", EXIT_USAGE) from exc
    if name in _FIXTURE_GRAPHS:
        if params:
            raise CliError(f"{name} takes no parameters", EXIT_USAGE)
        return _fixture_graph(_FIXTURE_GRAPHS[name], fixtures)
    path = Path(name)
    if path.exists():
        text = path.read_text()
        try:
            if path.suffix in (".g6", ".graph6") or not any(
                ch.isspace() for ch in text.strip()
            ):
                return graphs.parse_graph6(text), None, None
            return graphs.parse_edge_list(text), None, None
        except ValueError as exc:
            raise CliError(f"cannot parse graph file {name}: {exc}") from exc
    raise CliError(
        f"unknown construction {name!r}; known: {', '.join(construction_names())}",
        EXIT_USAGE,
    )


def resolve_group(spec: str, g: Graph, fixture_group, fixture_meta):
    """Returns (GroupChain, group id string, trust flag)."""
    if spec == "auto":
        if fixture_group is not None:
            meta = fixture_meta or {}
            trust = (
                "fixture-trusted-Aut"
                if str(meta.get("full_automorphism_group", False)).lower() in ("true", "1")
                else "subgroup-only"
            )
            return fixture_group, meta.get("group", "fixture"), trust
        return permgrp.automorphism_group(g), "Aut", "computed-Aut"
    G, meta = load_fixture_group(Path(spec))
    if G.degree != g.n:
        raise CliError(f"group degree {G.degree} does not match graph order {g.n}")
    trust = (
        "fixture-trusted-Aut"
        if str(meta.get("full_automorphism_group", False)).lower() in ("true", "1")
        else "subgroup-only"
    )
    return G, spec, trust


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------


def cmd_construct(args):
    fixtures = fixture_dir(args.fixtures)
    g, _, _ = resolve_graph(args.name, args.params, fixtures)
    if args.format == "graph6":
        text = graphs.write_graph6(g) + "\n"
    else:
        text = "".join(f"{u} {v}\n" for u, v in g.edges())
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_report(args):
    fixtures = fixture_dir(args.fixtures)
    g, _, _ = resolve_graph(args.name, args.params, fixtures)
    report = census.parameters(g)
    out = {"graph": args.name, "parameters": report.to_dict()}
    if report.connected and report.regular:
        out["mu_classes"] = census.mu_graph_classes(g).to_dict()
        try:
            unique, quad = census.unique_x(g)
            out["unique_x"] = {
                "unique": unique,
                "quadruple": list(quad) if quad is not None else None,
            }
        except ValueError:
            out["unique_x"] = None
        out["k4_minus_edge"] = census.has_induced_k4_minus_edge(g)
    json.dump(out, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


def cmd_check(args):
    fixtures = fixture_dir(args.fixtures)
    g, fixture_group, fixture_meta = resolve_graph(args.name, args.params, fixtures)
    G, group_id, trust = resolve_group(args.group, g, fixture_group, fixture_meta)
    report = homct.check(
        g,
        G,
        args.k,
        mode=args.mode,
        graph_id=args.name,
        group_id=group_id,
        trust=trust,
    )
    json.dump(report.to_dict(), sys.stdout, indent=2)
    sys.stdout.write("\n")
    passed = all(report.passes(k) for k in range(1, args.k + 1))
    return EXIT_OK if passed else EXIT_MISMATCH


def cmd_aut(args):
    fixtures = fixture_dir(args.fixtures)
    g, _, _ = resolve_graph(args.name, args.params, fixtures)
    A = permgrp.automorphism_group(g)
    gens = sorted(A.strong_generators)
    meta = {"name": args.name, "order": str(A.order)}
    text = graphs.write_generators(g.n, gens, meta)
    if args.out:
        Path(args.out).write_text(text)
        print(f"order {A.order}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- reproduce --------------------------------------------------------------


def _load_claims(path: Path):
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot load claims file {path}: {exc}") from exc
    claims = data["claims"] if isinstance(data, dict) else data
    seen = set()
    for c in claims:
        for key in ("id", "graph", "tag"):
            if key not in c:
                raise CliError(f"claim missing {key!r}: {c}")
        if c["id"] in seen:
            raise CliError(f"duplicate claim id {c['id']!r}")
        seen.add(c["id"])
        expected = c.get("expected_verdicts", {})
        levels = sorted(int(k) for k in expected)
        # monotone: never true after a false
        failed = False
        for k in levels:
            v = expected[str(k)]
            if failed and v:
                raise CliError(f"claim {c['id']}: expected verdicts are not monotone")
            failed = failed or not v
        group = c.get("group", "auto")
        if group != "auto" and not Path(group).exists():
            raise CliError(f"claim {c['id']}: group fixture {group} not found")
    return claims


def run_claim(claim, fixtures_path):
    """Worker for one ClaimSpec; returns a result record (no timing)."""
    fixtures = Path(fixtures_path)
    record = {"id": claim["id"], "tag": claim["tag"]}
    try:
        spec = claim["graph"]
        g, fixture_group, fixture_meta = resolve_graph(
            spec["name"], [str(p) for p in spec.get("params", [])], fixtures
        )
        mismatches = []
        expected_srg = claim.get("expected_srg")
        expected_ia = claim.get("expected_intersection_array")
        if expected_srg is not None or expected_ia is not None:
            rep = census.parameters(g)
            if expected_srg is not None and list(rep.srg or ()) != expected_srg:
                mismatches.append(
                    {"field": "srg", "expected": expected_srg, "computed": list(rep.srg or ())}
                )
            if expected_ia is not None:
                ia = rep.intersection_array
                flat = [list(ia[0]), list(ia[1])] if ia else None
                if flat != expected_ia:
                    mismatches.append(
                        {"field": "intersection_array", "expected": expected_ia, "computed": flat}
                    )
        expected = {int(k): v for k, v in claim.get("expected_verdicts", {}).items()}
        if expected:
            G, group_id, trust = resolve_group(
                claim.get("group", "auto"), g, fixture_group, fixture_meta
            )
            report = homct.check(
                g,
                G,
                max(expected),
                mode=claim.get("mode", "ch"),
                graph_id=claim["graph"]["name"],
                group_id=group_id,
                trust=trust,
            )
            record["report"] = report.to_dict()
            for k, want in sorted(expected.items()):
                got = report.passes(k)
                if got != want:
                    mismatches.append({"field": f"k={k}", "expected": want, "computed": got})
        record["mismatches"] = mismatches
        record["status"] = "match" if not mismatches else "mismatch"
    except CliError as exc:
        record["status"] = "error"
        record["error"] = str(exc)
    return record


def cmd_reproduce(args):
    fixtures = fixture_dir(args.fixtures)
    claims = []
    for path in args.claims:
        claims.extend(_load_claims(Path(path)))
    if args.tag != "all":
        claims = [c for c in claims if c["tag"] == args.tag]
    claims.sort(key=lambda c: c["id"])
    results = {}
    timings = {}
    timed_out = []
    start = time.time()
    with ProcessPoolExecutor(max_workers=args.jobs) as pool:
        futures = {
            claim["id"]: pool.submit(run_claim, claim, str(fixtures)) for claim in claims
        }
        for cid, fut in futures.items():
            t0 = time.time()
            try:
                budget = None if args.timeout is None else max(
                    0.1, args.timeout - (time.time() - start)
                )
                results[cid] = fut.result(timeout=budget)
            except concurrent.futures.TimeoutError:
                timed_out.append(cid)
                results[cid] = {"id": cid, "status": "timeout"}
            timings[cid] = round(time.time() - t0, 3)
    rows = [results[c["id"]] for c in claims]
    all_match = all(r["status"] == "match" for r in rows)
    for r in rows:
        detail = ""
        if r["status"] == "mismatch":
            detail = " " + "; ".join(
                f"{m['field']}: expected {m['expected']}, computed {m['computed']}"
                for m in r["mismatches"]
            )
        elif r["status"] in ("error", "timeout"):
            detail = " " + r.get("error", "")
        print(f"{r['id']:40s} {r['status'].upper()}{detail}")
    log = {"claims": rows, "all_match": all_match}
    if args.log:
        full = {**log, "timings": timings}
        Path(args.log).write_text(json.dumps(full, indent=2) + "\n")
    print(f"{sum(r['status'] == 'match' for r in rows)}/{len(rows)} claims match")
    if timed_out or any(r["status"] == "error" for r in rows):
        return EXIT_IO
    return EXIT_OK if all_match else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_graph_args(sub):
    sub.add_argument("name", help="construction name or graph file path")
    sub.add_argument("params", nargs="*", help="positional construction parameters")
    sub.add_argument("--fixtures", default=None, help="fixture directory override")


def build_parser():
    ap = argparse.ArgumentParser(prog="chgraphs", description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0, help="seed for randomised accelerators")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("construct", help="write a named construction")
    _add_graph_args(p)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("report", help="parameter and local-structure census")
    _add_graph_args(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("check", help="k-CH / k-homogeneity decision")
    _add_graph_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--group", default="auto", help="'auto' or a .gens fixture path")
    p.add_argument("--mode", choices=("ch", "hom"), default="ch")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("aut", help="automorphism group of a construction")
    _add_graph_args(p)
    p.add_argument("--out", default=None, help="write generators to this file")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("reproduce", help="run a claims table")
    p.add_argument("--claims", action="append", required=True)
    p.add_argument("--tag", choices=("core", "extended", "all"), default="all")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timeout", type=float, default=None, help="overall budget in seconds")
    p.add_argument("--log", default=None, help="write the JSON log here")
    p.add_argument("--fixtures", default=None)
    p.set_defaults(func=cmd_reproduce)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
