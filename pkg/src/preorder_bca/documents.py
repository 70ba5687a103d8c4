"""Relation documents: the JSON wire format and the DOT export.

A document carries labels plus an explicit pair list, with optional closure
flags so fixtures can be written either as Hasse edges (closures on) or as
full relations (closures off).  Emission is byte-stable: fixed key order,
two-space indent, trailing newline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import (
    GroundSet,
    Preorder,
    Relation,
    TotalPreorder,
    hasse_edges,
    indifference_classes,
    class_label,
    validate_preorder,
)
from .errors import DocumentError

SCHEMA = "preorder-doc/1"


@dataclass(frozen=True)
class RelationDocument:
    labels: tuple[str, ...]
    pairs: tuple[tuple[int, int], ...]
    reflexive_closure: bool = True
    transitive_closure: bool = True
    schema: str = SCHEMA

    def __post_init__(self):
        if self.schema != SCHEMA:
            raise DocumentError(f"unsupported schema: {self.schema!r}")
        if not self.labels:
            raise DocumentError("document needs at least one label")
        if len(set(self.labels)) != len(self.labels):
            raise DocumentError("document labels must be distinct")
        n = len(self.labels)
        for pair in self.pairs:
            i, j = pair
            if not (0 <= i < n and 0 <= j < n):
                raise DocumentError(f"pair {pair!r} is out of range for "
                                    f"{n} labels")


def parse_document(text: str) -> RelationDocument:
    """Parse JSON text into a document; raises DocumentError on any defect."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise DocumentError("document must be a JSON object")
    try:
        schema = raw["schema"]
        labels = raw["labels"]
        pairs = raw["pairs"]
    except KeyError as exc:
        raise DocumentError(f"missing document field: {exc}") from exc
    if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
        raise DocumentError("labels must be a list of strings")
    if not isinstance(pairs, list):
        raise DocumentError("pairs must be a list of [i, j] index pairs")
    norm_pairs = []
    for pair in pairs:
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(t, int) and not isinstance(t, bool) for t in pair)):
            raise DocumentError(f"bad pair entry: {pair!r}")
        norm_pairs.append((pair[0], pair[1]))
    return RelationDocument(
        labels=tuple(labels),
        pairs=tuple(norm_pairs),
        reflexive_closure=bool(raw.get("reflexive_closure", False)),
        transitive_closure=bool(raw.get("transitive_closure", False)),
        schema=schema,
    )


def document_to_json(doc: RelationDocument) -> str:
    payload = {
        "schema": doc.schema,
        "labels": list(doc.labels),
        "pairs": [list(p) for p in doc.pairs],
        "reflexive_closure": doc.reflexive_closure,
        "transitive_closure": doc.transitive_closure,
    }
    return json.dumps(payload, indent=2) + "\n"


def transitive_closure_rows(rows: list[int]) -> list[int]:
    n = len(rows)
    rows = list(rows)
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rows[k]
    return rows


def document_to_relation(doc: RelationDocument) -> Relation:
    """Apply the requested closures and return the raw relation.

    The result may still violate transitivity when closures are off; run it
    through validation to obtain a preorder.
    """
    n = len(doc.labels)
    rows = [0] * n
    for i, j in doc.pairs:
        rows[i] |= 1 << j
    if doc.reflexive_closure:
        for i in range(n):
            rows[i] |= 1 << i
    if doc.transitive_closure:
        rows = transitive_closure_rows(rows)
    try:
        return Relation(GroundSet(tuple(doc.labels)), tuple(rows))
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def document_to_preorder(doc: RelationDocument) -> Preorder:
    return validate_preorder(document_to_relation(doc))


def document_from_relation(rel: Relation | Preorder) -> RelationDocument:
    """Document with the full off-diagonal pair list, closures marked done."""
    pairs = [(i, j) for i, j in rel.pairs() if i != j]
    return RelationDocument(
        labels=rel.ground.labels,
        pairs=tuple(sorted(pairs)),
        reflexive_closure=True,
        transitive_closure=False,
    )


def document_from_total(total: TotalPreorder) -> RelationDocument:
    return document_from_relation(total.as_preorder)


def _dot_quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_dot(p: Preorder, name: str = "hasse") -> str:
    """Graphviz digraph of the Hasse diagram, one node per indifference
    class, edges pointing downward; byte-stable."""
    nodes = sorted(class_label(p, cls) for cls in indifference_classes(p))
    lines = [f"digraph {name} {{", "  rankdir=TB;"]
    lines.extend(f"  {_dot_quote(node)};" for node in nodes)
    lines.extend(f"  {_dot_quote(upper)} -> {_dot_quote(lower)};"
                 for upper, lower in hasse_edges(p))
    lines.append("}")
    return "\n".join(lines) + "\n"
