"""Command-line front end.

Exit codes for ``analyze``: 0 orientable, 1 non-orientable, 2 error (bad
input, resource cap, or a disagreement between the theorem path and the
oracle).  ``oracle verify`` exits 0 when everything agrees and 2 otherwise.
"""

from __future__ import annotations

import argparse
import itertools
import sys
import time
from typing import Callable

from . import io, oracle
from .errors import TorientedError
from .lattice import LatticePolytope
from .orientability import (SmallCoverSpec, components, fan_spec, lower_bound_report, polytope_toric_orientable,
                            small_cover_orientable, spherical_orientable, spherical_spec)
from .gf2 import Gf2Vector
from .posets import maximal_chains, order_polytope

EXIT_ORIENTABLE = 0
EXIT_NON_ORIENTABLE = 1
EXIT_ERROR = 2


class Disagreement(TorientedError):
    pass


def _analysis(spec: SmallCoverSpec) -> dict:
    verdict = small_cover_orientable(spec)
    comps = components(spec)
    return {"verdict": io.verdict_to_json(verdict), "components": io.components_to_json(comps)}


def _oracle_check(spec: SmallCoverSpec, analysis: dict) -> dict:
    out = {
        "orientable": oracle.oracle_orientable(spec),
        "components": oracle.oracle_components(spec),
    }
    if spec.n <= oracle.boundary_cap():
        out["boundary_kernel_rank"] = oracle.boundary_kernel_rank(spec)
    orientable = analysis["verdict"]["orientable"]
    count = analysis["components"]["count"]
    agree = out["orientable"] == orientable and out["components"] == count
    if "boundary_kernel_rank" in out:
        agree = agree and out["boundary_kernel_rank"] == (count if orientable else 0)
    out["agree"] = agree
    return out


def analyze_small_cover(doc: dict, args) -> tuple[dict, bool]:
    spec = io.parse_small_cover(doc)
    res = {"small_cover": _analysis(spec)}
    if args.oracle:
        res["oracle"] = {"small_cover": _oracle_check(spec, res["small_cover"])}
    return res, res["small_cover"]["verdict"]["orientable"]


def analyze_fan(doc: dict, args) -> tuple[dict, bool]:
    n, rays = io.parse_fan(doc)
    spec = fan_spec(n, rays)
    res = {"toric": _analysis(spec)}
    if args.oracle:
        res["oracle"] = {"toric": _oracle_check(spec, res["toric"])}
    return res, res["toric"]["verdict"]["orientable"]


def _polytope_results(poly: LatticePolytope, args) -> dict:
    tv, tc = polytope_toric_orientable(poly)
    sv, sc = spherical_orientable(poly)
    res = {
        "polytope": {"dim": poly.dim,
                     "facets": [{"normal": list(f.normal), "offset": f.offset, "label": f.label}
                                for f in poly.facets]},
        "toric": {"verdict": io.verdict_to_json(tv), "components": io.components_to_json(tc)},
        "spherical": {"verdict": io.verdict_to_json(sv), "components": io.components_to_json(sc)},
    }
    if args.lower_bound:
        res["lower_bound"] = io.lower_bound_to_json(lower_bound_report(poly))
    if args.oracle:
        toric_spec = fan_spec(poly.dim, [f.normal for f in poly.facets])
        res["oracle"] = {
            "toric": _oracle_check(toric_spec, res["toric"]),
            "spherical": _oracle_check(spherical_spec(poly), res["spherical"]),
        }
    return res


def _polytope_exit(res: dict, args) -> bool:
    if args.lower_bound:
        return res["lower_bound"]["applicable"]
    if args.spherical:
        return res["spherical"]["verdict"]["orientable"]
    return res["toric"]["verdict"]["orientable"]


def analyze_polytope(doc: dict, args) -> tuple[dict, bool]:
    poly = io.parse_polytope(doc)
    res = _polytope_results(poly, args)
    return res, _polytope_exit(res, args)


def analyze_poset(doc: dict, args) -> tuple[dict, bool]:
    p = io.parse_poset(doc)
    chains = maximal_chains(p)
    poly = order_polytope(p)
    res = _polytope_results(poly, args)
    res["poset"] = {"elements": list(p.elements), "covers": [list(c) for c in p.covers]}
    res["chains"] = io.chains_to_json(chains)
    res["theorem4_all_chains_odd"] = chains.all_odd
    res["theorem6_ranked_mod2"] = chains.ranked_mod2
    res["cross_validation_agree"] = (chains.all_odd == res["toric"]["verdict"]["orientable"]
                                     and chains.ranked_mod2 == res["spherical"]["verdict"]["orientable"])
    if not res["cross_validation_agree"]:
        raise Disagreement("chain-parity prediction disagrees with the polytope computation")
    return res, _polytope_exit(res, args)


ANALYZERS: dict[str, Callable] = {
    "small-cover": analyze_small_cover,
    "fan": analyze_fan,
    "polytope": analyze_polytope,
    "poset": analyze_poset,
}


def build_report(kind: str, doc: dict, args) -> tuple[dict, bool]:
    t0 = time.perf_counter()
    results, ok = ANALYZERS[kind](doc, args)
    if args.oracle:
        for name, check in results["oracle"].items():
            if not check["agree"]:
                raise Disagreement(f"oracle disagrees with the {name} verdict")
    report = {
        "schema": io.SCHEMA_TAG,
        "kind": kind,
        "input": doc,
        "results": results,
        "timing_ms": round((time.perf_counter() - t0) * 1000, 3),
    }
    return report, ok


# Text rendering

def _fmt_bits(b) -> str:
    return "(" + ",".join(map(str, b)) + ")"


def _text_verdict(title: str, block: dict) -> list[str]:
    v = block["verdict"]
    c = block["components"]
    lines = [f"{title}: {'orientable' if v['orientable'] else 'NON-orientable'}",
             f"  components: {c['count']} (generator rank k={c['k']}, ambient dimension {v['dimension']})"]
    cert = v["certificate"]
    if cert["type"] == "odd_basis":
        lines.append("  certificate: odd basis " + " ".join(_fmt_bits(b) for b in cert["basis"]))
        for g, e, prov in zip(v["generators"], cert["expansions"], v["provenance"]):
            lines.append(f"    {_fmt_bits(g)} = sum of basis {e}   <- {', '.join(prov)}")
    else:
        lines.append(f"  certificate: odd dependence, rows {cert['indices']} sum to zero")
        for i, label in zip(cert["indices"], cert["labels"]):
            lines.append(f"    {_fmt_bits(v['generators'][i])}   <- {label}")
    return lines


def render_text(report: dict) -> str:
    r = report["results"]
    lines = [f"toriented analyze {report['kind']}"]
    if "chains" in r:
        ch = r["chains"]
        lines.append(f"maximal chains (length = number of elements): {ch['lengths']}")
        lines.append(f"  all odd: {ch['all_odd']}   ranked mod 2: {ch['ranked_mod2']}")
    for key, title in (("small_cover", "small cover"), ("toric", "real toric variety"),
                       ("spherical", "spherical toric variety")):
        if key in r:
            lines += _text_verdict(title, r[key])
    if "lower_bound" in r:
        lb = r["lower_bound"]
        span = lb["span"]
        lines.append(f"lower bound: {'applicable' if lb['applicable'] else 'NOT applicable'}")
        lines.append(f"  lattice points affinely span Z^n: {span['spans']} (index {span['index']})")
        if "renormalizer" in span:
            lines.append(f"  renormalize via base {span['renormalizer']['base']}, "
                         f"lattice basis {span['renormalizer']['basis']}")
        if lb["applicable"]:
            lines.append(f"  |degree| is a lower bound and a multiple of {lb['divisibility']}")
    if "oracle" in r:
        for name, chk in r["oracle"].items():
            extra = f", boundary kernel rank {chk['boundary_kernel_rank']}" if "boundary_kernel_rank" in chk else ""
            lines.append(f"oracle[{name}]: orientable={chk['orientable']} components={chk['components']}"
                         f"{extra} agree={chk['agree']}")
    if "cross_validation_agree" in r:
        lines.append(f"chain parity vs polytope path agree: {r['cross_validation_agree']}")
    lines.append(f"time: {report['timing_ms']} ms")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    doc = io.load_json(args.input)
    report, ok = build_report(args.kind, doc, args)
    print(io.dumps(report) if args.format == "json" else render_text(report))
    return EXIT_ORIENTABLE if ok else EXIT_NON_ORIENTABLE


# Generators

def cross_polytope_vertices(n: int) -> list[list[int]]:
    verts = []
    for i in range(n):
        for s in (1, -1):
            verts.append([s if j == i else 0 for j in range(n)])
    return verts


def cube_vertices(n: int) -> list[list[int]]:
    return [list(v) for v in itertools.product((0, 1), repeat=n)]


def cmd_gen(args) -> int:
    if args.what in ("cross-polytope", "cube"):
        if args.n is None or args.n < 1:
            raise TorientedError(f"gen {args.what} needs -n >= 1")
        verts = cross_polytope_vertices(args.n) if args.what == "cross-polytope" else cube_vertices(args.n)
        doc = {"schema": io.SCHEMA_TAG, "dim": args.n, "vertices": verts}
    else:
        if not args.poset:
            raise TorientedError("gen order-polytope needs --poset FILE")
        p = io.parse_poset(io.load_json(args.poset))
        doc = io.polytope_to_json(order_polytope(p), with_vertices=False)
    print(io.dumps(doc))
    return 0


# Oracle verification

def _verify_spec(spec: SmallCoverSpec, boundary: bool) -> dict:
    verdict = small_cover_orientable(spec)
    comps = components(spec)
    row = {
        "theorem_orientable": verdict.orientable,
        "theorem_components": comps.count,
        "certificate_valid": verdict.validate(),
        "graph_orientable": oracle.oracle_orientable(spec),
        "graph_components": oracle.oracle_components(spec),
    }
    agree = (row["certificate_valid"] and row["graph_orientable"] == verdict.orientable
             and row["graph_components"] == comps.count)
    if boundary and spec.n <= oracle.boundary_cap():
        kr = oracle.boundary_kernel_rank(spec)
        row["boundary_kernel_rank"] = kr
        agree = agree and kr == (comps.count if verdict.orientable else 0)
    row["agree"] = agree
    return row


def specs_for_document(doc: dict) -> list[tuple[str, SmallCoverSpec]]:
    kind = io.detect_kind(doc)
    if kind == "small-cover":
        return [("small_cover", io.parse_small_cover(doc))]
    if kind == "fan":
        n, rays = io.parse_fan(doc)
        return [("toric", fan_spec(n, rays))]
    poly = io.parse_polytope(doc) if kind == "polytope" else order_polytope(io.parse_poset(doc))
    toric = fan_spec(poly.dim, [f.normal for f in poly.facets])
    return [("toric", toric), ("spherical", spherical_spec(poly))]


def exhaustive_specs(n: int):
    """Every subset of the nonzero vectors of GF(2)^n, empty set included."""
    nonzero = list(range(1, 1 << n))
    for mask in range(1 << len(nonzero)):
        gens = tuple(Gf2Vector(n, w) for j, w in enumerate(nonzero) if (mask >> j) & 1)
        yield SmallCoverSpec(n, gens)


def cmd_oracle_verify(args) -> int:
    rows = []
    if args.exhaustive is not None:
        n = args.exhaustive
        if n < 1 or n > 4:
            raise TorientedError("--exhaustive supports n in 1..4 (2^(2^n - 1) generator sets)")
        boundary = args.boundary or n <= 3
        total = agreeing = 0
        for spec in exhaustive_specs(n):
            total += 1
            agreeing += _verify_spec(spec, boundary)["agree"]
        rows.append({"source": f"exhaustive n={n}", "cases": total, "agree": agreeing,
                     "all_agree": agreeing == total})
    for path in args.input or []:
        doc = io.load_json(path)
        for name, spec in specs_for_document(doc):
            row = _verify_spec(spec, True)
            rows.append({"source": f"{path}:{name}", **row})
    if not rows:
        raise TorientedError("nothing to verify: give --input FILE... and/or --exhaustive N")
    ok = all(r.get("all_agree", r.get("agree")) for r in rows)
    if args.format == "json":
        print(io.dumps({"schema": io.SCHEMA_TAG, "kind": "oracle-verify", "rows": rows, "all_agree": ok}))
    else:
        for r in rows:
            if "cases" in r:
                print(f"{r['source']:<40} {r['agree']}/{r['cases']} agree")
            else:
                kr = r.get("boundary_kernel_rank", "-")
                print(f"{r['source']:<40} theorem={r['theorem_orientable']!s:<5} graph={r['graph_orientable']!s:<5} "
                      f"components={r['theorem_components']}/{r['graph_components']} kernel={kr} "
                      f"cert={'ok' if r['certificate_valid'] else 'BAD'} {'AGREE' if r['agree'] else 'DISAGREE'}")
        print("all agree" if ok else "DISAGREEMENT")
    return 0 if ok else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toriented", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="orientability and components with certificates")
    an.add_argument("kind", choices=sorted(ANALYZERS))
    an.add_argument("--input", "-i", required=True)
    an.add_argument("--format", choices=["text", "json"], default="text")
    an.add_argument("--spherical", action="store_true", help="exit code follows the spherical verdict")
    an.add_argument("--lower-bound", action="store_true", help="add the lower-bound applicability report")
    an.add_argument("--oracle", action="store_true", help="cross-check against the brute-force oracles")
    an.set_defaults(func=cmd_analyze)

    gen = sub.add_parser("gen", help="emit a polytope input file")
    gen.add_argument("what", choices=["cross-polytope", "cube", "order-polytope"])
    gen.add_argument("-n", type=int)
    gen.add_argument("--poset")
    gen.set_defaults(func=cmd_gen)

    orc = sub.add_parser("oracle", help="oracle cross-checks")
    orc_sub = orc.add_subparsers(dest="oracle_command", required=True)
    ver = orc_sub.add_parser("verify", help="compare theorem path with both oracles")
    ver.add_argument("--input", "-i", nargs="*")
    ver.add_argument("--exhaustive", type=int, metavar="N")
    ver.add_argument("--boundary", action="store_true", help="include boundary ranks in exhaustive sweeps")
    ver.add_argument("--format", choices=["text", "json"], default="text")
    ver.set_defaults(func=cmd_oracle_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except io.InputError as exc:
        print(f"error: input: {exc}", file=sys.stderr)
    except Disagreement as exc:
        print(f"error: disagreement: {exc}", file=sys.stderr)
    except TorientedError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
