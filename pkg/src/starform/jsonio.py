"""JSON document format for complexes, traces, and analysis results.

A complex document is a JSON object with keys ``dimension``,
``generators``, optional ``equivalence`` (a list of vertex classes) and
optional ``metadata``.  Every generator list has length dimension + 1 with
distinct non-negative entries; the zero complex is written with dimension
-1 and no generators.  Serialization is canonical (sorted keys, sorted
generators), so parse and serialize are mutually inverse and output bytes
are reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .chains import Complex, Simplex
from .errors import DimensionMismatch, DuplicateVertexInGenerator, Malformed
from .moves import MergeVertex, Relabel, SplitVertex, Subdivide, Weld
from .normalize import StarNormalForm
from .pi1 import GroupPresentation, presentation_text
from .quotient import RegularEquivalence
from .recognition import ManifoldReport, RecognitionResult

__all__ = [
    "ComplexDocument",
    "parse",
    "serialize",
    "document_from_complex",
    "complex_from_document",
    "equivalence_from_document",
    "move_to_obj",
    "move_from_obj",
    "trace_to_obj",
    "normal_form_to_obj",
    "recognition_to_obj",
    "manifold_report_to_obj",
    "presentation_to_obj",
]

_DOC_KEYS = {"dimension", "generators", "equivalence", "metadata"}


@dataclass
class ComplexDocument:
    dimension: int
    generators: list = field(default_factory=list)
    equivalence: list | None = None
    metadata: dict = field(default_factory=dict)


def _check_int(value, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise Malformed(f"{what} must be an integer, got {value!r}")
    return value


def parse(data) -> ComplexDocument:
    """Parse and validate a complex document from bytes or text."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as e:
        raise Malformed(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from e
    if not isinstance(obj, dict):
        raise Malformed("document must be a JSON object")
    extra = set(obj) - _DOC_KEYS
    if extra:
        raise Malformed(f"unknown key {min(extra)!r}")
    if "dimension" not in obj or "generators" not in obj:
        raise Malformed("document needs 'dimension' and 'generators'")

    dim = _check_int(obj["dimension"], "'dimension'")
    raw_gens = obj["generators"]
    if not isinstance(raw_gens, list):
        raise Malformed("'generators' must be a list")
    gens = []
    for i, g in enumerate(raw_gens):
        if not isinstance(g, list):
            raise Malformed(f"generator {i} must be a list")
        entries = [_check_int(v, f"generator {i} entry") for v in g]
        if any(v < 0 for v in entries):
            raise Malformed(f"generator {i} has a negative vertex label")
        if len(set(entries)) != len(entries):
            raise DuplicateVertexInGenerator(f"generator {i} lists a vertex twice: {g}")
        if len(entries) != dim + 1:
            raise DimensionMismatch(f"generator {i} has {len(entries)} vertices, dimension {dim} needs {dim + 1}")
        gens.append(sorted(entries))
    gens.sort()
    if dim < -1 or (dim == -1 and gens):
        raise Malformed(f"dimension {dim} is not valid for {len(gens)} generators")

    vertices = {v for g in gens for v in g}
    eq = None
    if obj.get("equivalence") is not None:
        raw_eq = obj["equivalence"]
        if not isinstance(raw_eq, list):
            raise Malformed("'equivalence' must be a list of classes")
        seen: set[int] = set()
        classes = []
        for i, c in enumerate(raw_eq):
            if not isinstance(c, list):
                raise Malformed(f"equivalence class {i} must be a list")
            entries = [_check_int(v, f"equivalence class {i} entry") for v in c]
            for v in entries:
                if v not in vertices:
                    raise Malformed(f"equivalence class {i} references unknown vertex {v}")
                if v in seen:
                    raise Malformed(f"vertex {v} appears in two equivalence classes")
                seen.add(v)
            if len(entries) >= 2:
                classes.append(sorted(entries))
        classes.sort()
        eq = classes or None

    metadata = obj.get("metadata", {})
    if not isinstance(metadata, dict) or any(not isinstance(k, str) for k in metadata):
        raise Malformed("'metadata' must be an object with string keys")
    return ComplexDocument(dim, gens, eq, metadata)


def _doc_obj(doc: ComplexDocument) -> dict:
    obj = {"dimension": doc.dimension, "generators": doc.generators}
    if doc.equivalence:
        obj["equivalence"] = doc.equivalence
    if doc.metadata:
        obj["metadata"] = doc.metadata
    return obj


def dumps(obj) -> bytes:
    """Canonical JSON bytes: sorted keys, fixed layout, trailing newline."""
    return (json.dumps(obj, sort_keys=True, indent=2) + "\n").encode("utf-8")


def serialize(doc: ComplexDocument) -> bytes:
    return dumps(_doc_obj(doc))


def complex_from_document(doc: ComplexDocument) -> Complex:
    return Complex(*doc.generators)


def equivalence_from_document(doc: ComplexDocument) -> RegularEquivalence:
    return RegularEquivalence.from_classes(doc.equivalence or [])


def document_from_complex(k: Complex, equivalence: RegularEquivalence | None = None, metadata: dict | None = None) -> ComplexDocument:
    if not k.is_uniform:
        raise DimensionMismatch("only complexes of a single dimension have a document form")
    gens = sorted(list(g.vertices) for g in k.generators)
    eq = None
    if equivalence is not None and not equivalence.is_identity:
        eq = sorted(sorted(c) for c in equivalence.classes)
    return ComplexDocument(k.dimension, gens, eq, metadata or {})


def move_to_obj(move) -> dict:
    if isinstance(move, Subdivide):
        return {"kind": "subdivide", "simplex": list(move.simplex.vertices), "vertex": move.vertex}
    if isinstance(move, Weld):
        return {"kind": "weld", "simplex": list(move.simplex.vertices), "vertex": move.vertex}
    if isinstance(move, Relabel):
        return {"kind": "relabel", "mapping": [list(p) for p in move.mapping]}
    if isinstance(move, SplitVertex):
        return {"kind": "split_vertex", "generator": list(move.generator.vertices), "old": move.old, "fresh": move.fresh}
    if isinstance(move, MergeVertex):
        return {"kind": "merge_vertex", "generator": list(move.generator.vertices), "old": move.old, "onto": move.onto}
    raise TypeError(f"not a move: {move!r}")


def move_from_obj(obj: dict):
    kind = obj.get("kind")
    if kind == "subdivide":
        return Subdivide(Simplex(*obj["simplex"]), obj["vertex"])
    if kind == "weld":
        return Weld(Simplex(*obj["simplex"]), obj["vertex"])
    if kind == "relabel":
        return Relabel(tuple(sorted((a, b) for a, b in obj["mapping"])))
    if kind == "split_vertex":
        return SplitVertex(Simplex(*obj["generator"]), obj["old"], obj["fresh"])
    if kind == "merge_vertex":
        return MergeVertex(Simplex(*obj["generator"]), obj["old"], obj["onto"])
    raise Malformed(f"unknown move kind {kind!r}")


def trace_to_obj(trace) -> list:
    return [move_to_obj(m) for m in trace]


def normal_form_to_obj(nf: StarNormalForm) -> dict:
    sphere_doc = document_from_complex(nf.sphere)
    obj = {
        "apex": nf.apex,
        "sphere": _doc_obj(sphere_doc),
        "equivalence": sorted(sorted(c) for c in nf.eq.classes),
        "pairing": {
            "pairs": [[list(a.vertices), list(b.vertices)] for a, b in nf.pairing.pairs],
            "unpaired": [list(g.vertices) for g in nf.pairing.unpaired],
        },
        "trace": trace_to_obj(nf.trace),
        "steps": nf.steps,
    }
    if nf.warnings:
        obj["warnings"] = list(nf.warnings)
    return obj


def recognition_to_obj(res: RecognitionResult) -> dict:
    return {
        "verdict": res.verdict.value,
        "diagnostics": res.diagnostics,
        "certificate": None if res.certificate is None else trace_to_obj(res.certificate),
    }


def manifold_report_to_obj(report: ManifoldReport) -> dict:
    return {
        "verdict": report.verdict.value,
        "witness": report.verdict.witness,
        "per_vertex": [
            {"vertex": v, "verdict": r.verdict.value, "diagnostics": r.diagnostics}
            for v, r in sorted(report.per_vertex.items())
        ],
    }


def presentation_to_obj(p: GroupPresentation, invariants) -> dict:
    return {
        "generators": list(p.generators),
        "relators": [[[sym, exp] for sym, exp in w] for w in p.relators],
        "text": presentation_text(p),
        "abelianization": {"free_rank": invariants.free_rank, "torsion": list(invariants.torsion)},
    }
