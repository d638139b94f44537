"""Lossless JSON documents for every pipeline value.

Rationals travel as exact "num/den" strings, labels as structured
objects, edges as label pairs.  Serialization is deterministic (sorted
keys, canonical vertex/edge order), so byte-identical goldens are
stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .arrangement import Description, LineArrangement
from .geometry import (
    ArrangementObject,
    Disk,
    Line,
    Point,
    Rotation,
    Sector,
    Segment,
    Vec2,
)
from .graphs import DiffReport, Label, LabelledDigraph, digraph
from .transmission import Instance, instance
from .verification import RoundTripReport

FORMAT_VERSION = 1

KINDS = ("arrangement", "description", "instance", "graph", "report")


class SchemaError(Exception):
    """A document payload does not match its kind's schema."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True)
class Document:
    kind: str
    payload: Any
    format_version: int = FORMAT_VERSION

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise SchemaError("kind", f"unknown document kind {self.kind!r}")


# --- encoding ---------------------------------------------------------------


def _enc_rat(x: Fraction) -> str:
    return str(x)


def _enc_point(p: Vec2) -> list[str]:
    return [_enc_rat(p.x), _enc_rat(p.y)]


def _enc_rotation(r: Rotation) -> list[str]:
    return [_enc_rat(r.c), _enc_rat(r.s)]


def _enc_label(label: Label) -> dict:
    if label.kind == "FREE":
        return {"kind": "FREE", "text": label.text}
    return {"kind": label.kind, "indices": list(label.indices)}


def _enc_object(obj: ArrangementObject) -> dict:
    if isinstance(obj, Segment):
        return {"type": "segment", "p": _enc_point(obj.p), "q": _enc_point(obj.q)}
    if isinstance(obj, Sector):
        return {
            "type": "sector",
            "apex": _enc_point(obj.apex),
            "direction": _enc_point(obj.direction),
            "half_angle": _enc_rotation(obj.half_angle),
            "radius_sq": _enc_rat(obj.radius_sq),
        }
    if isinstance(obj, Disk):
        return {
            "type": "disk",
            "center": _enc_point(obj.center),
            "radius_sq": _enc_rat(obj.radius_sq),
        }
    raise SchemaError("object", f"unsupported object {obj!r}")


def _enc_graph(g: LabelledDigraph) -> dict:
    return {
        "vertices": [_enc_label(v) for v in g.sorted_vertices()],
        "edges": [[_enc_label(u), _enc_label(v)] for u, v in g.sorted_edges()],
    }


def _enc_payload(kind: str, payload: Any) -> Any:
    if kind == "arrangement":
        return {
            "lines": [
                [_enc_rat(ln.a), _enc_rat(ln.b), _enc_rat(ln.c)]
                for ln in payload.lines
            ]
        }
    if kind == "description":
        return {
            "n": payload.n,
            "orders": [[list(block) for block in row] for row in payload.orders],
        }
    if kind == "instance":
        return {
            "entries": [
                {"label": _enc_label(label), "object": _enc_object(obj)}
                for label, obj in payload.entries
            ]
        }
    if kind == "graph":
        return _enc_graph(payload)
    if kind == "report":
        return {
            "description": _enc_payload("description", payload.description),
            "graph_from_reduction": _enc_graph(payload.graph_from_reduction),
            "graph_from_geometry": _enc_graph(payload.graph_from_geometry),
            "diff": {
                "missing_vertices": [_enc_label(v) for v in payload.diff.missing_vertices],
                "extra_vertices": [_enc_label(v) for v in payload.diff.extra_vertices],
                "missing_edges": [
                    [_enc_label(u), _enc_label(v)] for u, v in payload.diff.missing_edges
                ],
                "extra_edges": [
                    [_enc_label(u), _enc_label(v)] for u, v in payload.diff.extra_edges
                ],
            },
            "checkers": [
                [name, ok, detail] for name, ok, detail in payload.checker_results
            ],
            "parameters": {
                key: _enc_parameter(value)
                for key, value in sorted(payload.parameters.items())
            },
            "passed": payload.passed,
        }
    raise SchemaError("kind", f"unknown document kind {kind!r}")


def _enc_parameter(value: Any) -> Any:
    if isinstance(value, Fraction):
        return _enc_rat(value)
    if isinstance(value, tuple):
        return [_enc_parameter(v) for v in value]
    return value


def document_to_json(doc: Document) -> str:
    body = {
        "kind": doc.kind,
        "formatVersion": doc.format_version,
        "payload": _enc_payload(doc.kind, doc.payload),
    }
    return json.dumps(body, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def save_document(doc: Document, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(document_to_json(doc))


# --- decoding ---------------------------------------------------------------


def _dec_rat(raw: Any, path: str) -> Fraction:
    if not isinstance(raw, str):
        raise SchemaError(path, f"expected a rational string, got {raw!r}")
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(path, f"bad rational {raw!r}: {exc}") from None


def _dec_point(raw: Any, path: str) -> Vec2:
    if not isinstance(raw, list) or len(raw) != 2:
        raise SchemaError(path, "expected [x, y]")
    return Vec2(_dec_rat(raw[0], path + "[0]"), _dec_rat(raw[1], path + "[1]"))


def _dec_label(raw: Any, path: str) -> Label:
    if not isinstance(raw, dict) or "kind" not in raw:
        raise SchemaError(path, "expected a label object with a kind")
    kind = raw["kind"]
    if kind == "FREE":
        return Label("FREE", (), str(raw.get("text", "")))
    indices = raw.get("indices")
    if not isinstance(indices, list) or not all(isinstance(i, int) for i in indices):
        raise SchemaError(path, "label indices must be a list of integers")
    return Label(kind, tuple(indices))


def _dec_object(raw: Any, path: str) -> ArrangementObject:
    if not isinstance(raw, dict) or "type" not in raw:
        raise SchemaError(path, "expected an object with a type")
    kind = raw["type"]
    try:
        if kind == "segment":
            return Segment(_dec_point(raw["p"], path + ".p"), _dec_point(raw["q"], path + ".q"))
        if kind == "sector":
            ha = raw["half_angle"]
            if not isinstance(ha, list) or len(ha) != 2:
                raise SchemaError(path + ".half_angle", "expected [c, s]")
            return Sector(
                _dec_point(raw["apex"], path + ".apex"),
                _dec_point(raw["direction"], path + ".direction"),
                Rotation(_dec_rat(ha[0], path + ".half_angle[0]"), _dec_rat(ha[1], path + ".half_angle[1]")),
                _dec_rat(raw["radius_sq"], path + ".radius_sq"),
            )
        if kind == "disk":
            return Disk(
                _dec_point(raw["center"], path + ".center"),
                _dec_rat(raw["radius_sq"], path + ".radius_sq"),
            )
    except KeyError as exc:
        raise SchemaError(path, f"missing field {exc}") from None
    except ValueError as exc:
        raise SchemaError(path, str(exc)) from None
    raise SchemaError(path, f"unknown object type {kind!r}")


def _dec_graph(raw: Any, path: str) -> LabelledDigraph:
    if not isinstance(raw, dict):
        raise SchemaError(path, "expected a graph object")
    vertices = [
        _dec_label(v, f"{path}.vertices[{i}]")
        for i, v in enumerate(raw.get("vertices", []))
    ]
    vertex_set = set(vertices)
    edges = []
    for i, pair in enumerate(raw.get("edges", [])):
        if not isinstance(pair, list) or len(pair) != 2:
            raise SchemaError(f"{path}.edges[{i}]", "expected a label pair")
        u = _dec_label(pair[0], f"{path}.edges[{i}][0]")
        v = _dec_label(pair[1], f"{path}.edges[{i}][1]")
        for lab in (u, v):
            if lab not in vertex_set:
                raise SchemaError(
                    f"{path}.edges[{i}]", f"dangling edge endpoint {lab}"
                )
        if u == v:
            raise SchemaError(f"{path}.edges[{i}]", f"self-loop at {u}")
        edges.append((u, v))
    return digraph(vertices, edges)


def _dec_payload(kind: str, raw: Any) -> Any:
    path = "payload"
    if kind == "arrangement":
        lines = []
        for i, row in enumerate(raw.get("lines", [])):
            if not isinstance(row, list) or len(row) != 3:
                raise SchemaError(f"{path}.lines[{i}]", "expected [a, b, c]")
            try:
                lines.append(
                    Line(
                        _dec_rat(row[0], f"{path}.lines[{i}][0]"),
                        _dec_rat(row[1], f"{path}.lines[{i}][1]"),
                        _dec_rat(row[2], f"{path}.lines[{i}][2]"),
                    )
                )
            except ValueError as exc:
                raise SchemaError(f"{path}.lines[{i}]", str(exc)) from None
        try:
            return LineArrangement(tuple(lines))
        except Exception as exc:
            raise SchemaError(f"{path}.lines", str(exc)) from None
    if kind == "description":
        n = raw.get("n")
        if not isinstance(n, int) or n < 1:
            raise SchemaError(f"{path}.n", "expected a positive integer")
        orders = raw.get("orders")
        if not isinstance(orders, list):
            raise SchemaError(f"{path}.orders", "expected a list of crossing lists")
        rows = []
        for i, row in enumerate(orders):
            blocks = []
            for j, block in enumerate(row):
                if not isinstance(block, list) or not all(
                    isinstance(x, int) for x in block
                ):
                    raise SchemaError(
                        f"{path}.orders[{i}][{j}]", "expected a list of integers"
                    )
                blocks.append(tuple(sorted(block)))
            rows.append(tuple(blocks))
        return Description(n, tuple(rows))
    if kind == "instance":
        entries = []
        for i, entry in enumerate(raw.get("entries", [])):
            if not isinstance(entry, dict):
                raise SchemaError(f"{path}.entries[{i}]", "expected an entry object")
            entries.append(
                (
                    _dec_label(entry.get("label"), f"{path}.entries[{i}].label"),
                    _dec_object(entry.get("object"), f"{path}.entries[{i}].object"),
                )
            )
        try:
            return instance(entries)
        except Exception as exc:
            raise SchemaError(f"{path}.entries", str(exc)) from None
    if kind == "graph":
        return _dec_graph(raw, path)
    if kind == "report":
        desc = _dec_payload("description", raw.get("description", {}))
        reduction = _dec_graph(raw.get("graph_from_reduction", {}), path + ".graph_from_reduction")
        geometry = _dec_graph(raw.get("graph_from_geometry", {}), path + ".graph_from_geometry")
        diff_raw = raw.get("diff", {})
        diff = DiffReport(
            missing_vertices=[
                _dec_label(v, path + ".diff") for v in diff_raw.get("missing_vertices", [])
            ],
            extra_vertices=[
                _dec_label(v, path + ".diff") for v in diff_raw.get("extra_vertices", [])
            ],
            missing_edges=[
                (_dec_label(e[0], path + ".diff"), _dec_label(e[1], path + ".diff"))
                for e in diff_raw.get("missing_edges", [])
            ],
            extra_edges=[
                (_dec_label(e[0], path + ".diff"), _dec_label(e[1], path + ".diff"))
                for e in diff_raw.get("extra_edges", [])
            ],
        )
        return RoundTripReport(
            description=desc,
            graph_from_reduction=reduction,
            graph_from_geometry=geometry,
            diff=diff,
            checker_results=[tuple(c) for c in raw.get("checkers", [])],
            parameters=dict(raw.get("parameters", {})),
        )
    raise SchemaError("kind", f"unknown document kind {kind!r}")


def document_from_json(text: str) -> Document:
    try:
        body = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("<document>", f"not valid JSON: {exc}") from None
    if not isinstance(body, dict):
        raise SchemaError("<document>", "expected a JSON object")
    kind = body.get("kind")
    if kind not in KINDS:
        raise SchemaError("kind", f"unknown document kind {kind!r}")
    version = body.get("formatVersion")
    if version != FORMAT_VERSION:
        raise SchemaError("formatVersion", f"unsupported version {version!r}")
    return Document(kind, _dec_payload(kind, body.get("payload", {})), version)


def load_document(path) -> Document:
    with open(path, "r", encoding="utf-8") as fh:
        return document_from_json(fh.read())
