"""JSON document formats for conflict graphs and resolutions.

A norm document looks like::

    {
      "norms": [
        {"id": "2", "label": "no disclosure", "declared_at": 3,
         "authority_rank": 1, "antecedents": ["joint-project"]},
        {"id": "4"}
      ],
      "conflicts": [["2", "4"]]
    }

Every norm field except ``id`` is optional (defaults: empty label, time 0,
rank 0, no antecedents). Parse failures carry position or path context so
they can be reported as diagnostics.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DocumentSyntaxError, SchemaError
from .graph import ConflictGraph, Norm, build_graph
from .resolution import CurtailedNorm, Resolution


def _loads(text: str) -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None


def _require_str(value: object, where: str, *, nonempty: bool = False) -> str:
    if not isinstance(value, str) or (nonempty and not value):
        kind = "a non-empty string" if nonempty else "a string"
        raise SchemaError(f"{where}: expected {kind}")
    return value


def _require_int(value: object, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise SchemaError(f"{where}: expected an integer")
    return value


def _parse_norm(item: object, where: str) -> Norm:
    if not isinstance(item, dict):
        raise SchemaError(f"{where}: expected an object")
    if "id" not in item:
        raise SchemaError(f"{where}: missing required field 'id'")
    raw_ants = item.get("antecedents", [])
    if not isinstance(raw_ants, list):
        raise SchemaError(f"{where}.antecedents: expected a list of strings")
    ants = frozenset(
        _require_str(a, f"{where}.antecedents[{i}]") for i, a in enumerate(raw_ants)
    )
    return Norm(
        id=_require_str(item["id"], f"{where}.id", nonempty=True),
        label=_require_str(item.get("label", ""), f"{where}.label"),
        declared_at=_require_int(item.get("declared_at", 0), f"{where}.declared_at"),
        authority_rank=_require_int(item.get("authority_rank", 0), f"{where}.authority_rank"),
        antecedents=ants,
    )


def parse_norm_document(text: str) -> ConflictGraph:
    """Parse a norm document into a conflict graph.

    Raises DocumentSyntaxError for malformed JSON, SchemaError for shape
    violations, and the build_graph errors (DuplicateNormId, UnknownNormId,
    SelfConflict) for semantic ones.
    """
    doc = _loads(text)
    if not isinstance(doc, dict):
        raise SchemaError("top level: expected an object")
    raw_norms = doc.get("norms")
    if not isinstance(raw_norms, list):
        raise SchemaError("norms: expected a list")
    norms = [_parse_norm(item, f"norms[{i}]") for i, item in enumerate(raw_norms)]

    raw_conflicts = doc.get("conflicts", [])
    if not isinstance(raw_conflicts, list):
        raise SchemaError("conflicts: expected a list")
    conflicts = []
    for i, pair in enumerate(raw_conflicts):
        where = f"conflicts[{i}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise SchemaError(f"{where}: expected a pair of norm ids")
        conflicts.append((_require_str(pair[0], f"{where}[0]"), _require_str(pair[1], f"{where}[1]")))
    return build_graph(norms, conflicts)


def write_norm_document(g: ConflictGraph) -> str:
    """Serialise a graph; default-valued norm fields are omitted."""
    norms = []
    for norm in g.norms:
        item: dict[str, object] = {"id": norm.id}
        if norm.label:
            item["label"] = norm.label
        if norm.declared_at:
            item["declared_at"] = norm.declared_at
        if norm.authority_rank:
            item["authority_rank"] = norm.authority_rank
        if norm.antecedents:
            item["antecedents"] = sorted(norm.antecedents)
        norms.append(item)
    doc = {"norms": norms, "conflicts": [list(edge) for edge in g.edges]}
    return json.dumps(doc, indent=2) + "\n"


@dataclass(frozen=True)
class ResolutionDocument:
    """The serialised projection of a Resolution (entries in admission order)."""

    algorithm: str
    policy: str
    colours_used: int
    entries: tuple[CurtailedNorm, ...]

    @classmethod
    def from_resolution(cls, r: Resolution) -> "ResolutionDocument":
        return cls(r.algorithm, r.policy, r.colouring.num_colours, r.entries)


def write_resolution(r: Resolution) -> str:
    doc = {
        "algorithm": r.algorithm,
        "policy": r.policy,
        "colours_used": r.colouring.num_colours,
        "entries": [
            {"norm": e.norm, "curtailed_wrt": list(e.curtailed_wrt)} for e in r.entries
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def read_resolution(text: str) -> ResolutionDocument:
    doc = _loads(text)
    if not isinstance(doc, dict):
        raise SchemaError("top level: expected an object")
    raw_entries = doc.get("entries")
    if not isinstance(raw_entries, list):
        raise SchemaError("entries: expected a list")
    entries = []
    for i, item in enumerate(raw_entries):
        where = f"entries[{i}]"
        if not isinstance(item, dict) or "norm" not in item:
            raise SchemaError(f"{where}: expected an object with a 'norm' field")
        wrt_raw = item.get("curtailed_wrt", [])
        if not isinstance(wrt_raw, list):
            raise SchemaError(f"{where}.curtailed_wrt: expected a list")
        wrt = tuple(
            _require_str(w, f"{where}.curtailed_wrt[{j}]") for j, w in enumerate(wrt_raw)
        )
        entries.append(CurtailedNorm(_require_str(item["norm"], f"{where}.norm"), wrt))
    return ResolutionDocument(
        algorithm=_require_str(doc.get("algorithm", ""), "algorithm"),
        policy=_require_str(doc.get("policy", ""), "policy"),
        colours_used=_require_int(doc.get("colours_used", 0), "colours_used"),
        entries=tuple(entries),
    )
