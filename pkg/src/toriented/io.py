"""JSON ingestion and report serialization (schema tag ``toriented/v1``)."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import ValidationError
from .gf2 import Gf2Matrix, Gf2Vector, OddBasis, OddDependenceWitness
from .lattice import FacetData, LatticePolytope, SpanReport
from .orientability import ComponentIndex, LowerBoundReport, OrientabilityVerdict, SmallCoverSpec
from .posets import ChainReport, FinitePoset

SCHEMA_TAG = "toriented/v1"
SCHEMA_DIR = Path(__file__).parent / "schemas"


class InputError(ValidationError):
    """Malformed or unreadable input document."""


def load_json(path: str | Path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError(f"{path}: top-level JSON value must be an object")
    tag = doc.get("schema", SCHEMA_TAG)
    if tag != SCHEMA_TAG:
        raise InputError(f"{path}: unsupported schema tag {tag!r}, expected {SCHEMA_TAG!r}")
    return doc


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def detect_kind(doc: dict) -> str:
    if "generators" in doc:
        return "small-cover"
    if "rays" in doc:
        return "fan"
    if "vertices" in doc or "facets" in doc:
        return "polytope"
    if "elements" in doc:
        return "poset"
    raise InputError("cannot tell input kind: expected one of generators, rays, vertices/facets, elements")


def _int_list(value, what: str) -> list[int]:
    if not isinstance(value, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in value):
        raise InputError(f"{what} must be a list of integers")
    return value


def parse_small_cover(doc: dict) -> SmallCoverSpec:
    n = doc.get("n")
    if isinstance(n, bool) or not isinstance(n, int):
        raise InputError("'n' must be an integer")
    gens = doc.get("generators")
    if not isinstance(gens, list):
        raise InputError("'generators' must be a list")
    rows = [_int_list(g, f"generator {i}") for i, g in enumerate(gens)]
    return SmallCoverSpec.from_bits(n, rows, doc.get("labels", ()))


def parse_fan(doc: dict) -> tuple[int, list[list[int]]]:
    rays = doc.get("rays")
    if not isinstance(rays, list) or not rays:
        raise InputError("'rays' must be a non-empty list")
    rays = [_int_list(r, f"ray {i}") for i, r in enumerate(rays)]
    n = doc.get("n", len(rays[0]))
    return n, rays


def parse_polytope(doc: dict) -> LatticePolytope:
    if "vertices" in doc:
        verts = doc["vertices"]
        if not isinstance(verts, list) or not verts:
            raise InputError("'vertices' must be a non-empty list")
        return LatticePolytope.from_vertices([_int_list(v, f"vertex {i}") for i, v in enumerate(verts)])
    facets = doc.get("facets")
    if not isinstance(facets, list) or not facets:
        raise InputError("'facets' must be a non-empty list")
    parsed = []
    for i, f in enumerate(facets):
        if not isinstance(f, dict) or "normal" not in f or "offset" not in f:
            raise InputError(f"facet {i} must be an object with 'normal' and 'offset'")
        off = f["offset"]
        if isinstance(off, bool) or not isinstance(off, int):
            raise InputError(f"facet {i}: offset must be an integer")
        parsed.append((_int_list(f["normal"], f"facet {i} normal"), off))
    dim = doc.get("dim", len(parsed[0][0]))
    poly = LatticePolytope.from_facets(dim, parsed)
    labelled = tuple(FacetData(f.normal, f.offset, facets[i].get("label", ""))
                     for i, f in enumerate(poly.facets))
    poly = LatticePolytope(dim, labelled)
    if not poly.check():
        raise ValidationError("facet list does not describe a full-dimensional polytope "
                              "(some inequality is not a facet)")
    return poly


def parse_poset(doc: dict) -> FinitePoset:
    elems = doc.get("elements")
    if not isinstance(elems, list) or not elems:
        raise InputError("'elements' must be a non-empty list")
    pairs = doc.get("covers", doc.get("relations", []))
    if not isinstance(pairs, list) or any(not isinstance(p, list) or len(p) != 2 for p in pairs):
        raise InputError("'covers' must be a list of [a, b] pairs")
    return FinitePoset.from_covers(elems, [tuple(p) for p in pairs])


# Rendering

def bits(v: Gf2Vector) -> list[int]:
    return list(v.bits)


def verdict_to_json(v: OrientabilityVerdict) -> dict:
    out = {
        "orientable": v.orientable,
        "dimension": v.matrix.dim,
        "generators": [bits(r) for r in v.matrix.rows],
        "provenance": [list(p) for p in v.provenance],
    }
    c = v.certificate
    if isinstance(c, OddBasis):
        out["certificate"] = {
            "type": "odd_basis",
            "basis": [bits(b) for b in c.basis],
            "expansions": [list(e) for e in c.expansions],
        }
    else:
        out["certificate"] = {
            "type": "odd_dependence",
            "indices": list(c.indices),
            "labels": v.witness_labels(),
        }
    return out


def verdict_from_json(d: dict) -> OrientabilityVerdict:
    dim = d["dimension"]
    m = Gf2Matrix(dim, tuple(Gf2Vector.from_bits(r) for r in d["generators"]))
    c = d["certificate"]
    if c["type"] == "odd_basis":
        cert = OddBasis(tuple(Gf2Vector.from_bits(b) for b in c["basis"]),
                        tuple(tuple(e) for e in c["expansions"]))
    elif c["type"] == "odd_dependence":
        cert = OddDependenceWitness(tuple(c["indices"]))
    else:
        raise InputError(f"unknown certificate type {c['type']!r}")
    return OrientabilityVerdict(d["orientable"], cert, m, tuple(tuple(p) for p in d["provenance"]))


def components_to_json(c: ComponentIndex) -> dict:
    return {"k": c.k, "count": c.count, "coset_reps": [bits(r) for r in c.coset_reps]}


def span_to_json(s: SpanReport) -> dict:
    out = {"spans": s.spans, "index": s.index, "rank": s.rank}
    if s.renormalizer is not None:
        out["renormalizer"] = {
            "base": list(s.renormalizer.base),
            "basis": [list(b) for b in s.renormalizer.basis],
        }
    return out


def lower_bound_to_json(r: LowerBoundReport) -> dict:
    return {
        "span": span_to_json(r.span),
        "spherical": verdict_to_json(r.spherical_verdict),
        "spherical_components": components_to_json(r.spherical_components),
        "applicable": r.applicable,
        "divisibility": r.divisibility,
    }


def chains_to_json(c: ChainReport) -> dict:
    return {
        "maximal_chains": [list(ch) for ch in c.maximal_chains],
        "lengths": list(c.lengths),
        "all_odd": c.all_odd,
        "ranked_mod2": c.ranked_mod2,
    }


def polytope_to_json(p: LatticePolytope, with_vertices: bool = True) -> dict:
    out: dict[str, Any] = {"schema": SCHEMA_TAG, "dim": p.dim}
    if with_vertices:
        out["vertices"] = [list(v) for v in p.vertices]
    else:
        out["facets"] = [{"normal": list(f.normal), "offset": f.offset, **({"label": f.label} if f.label else {})}
                         for f in p.facets]
    return out
