"""Instance and solution files.

An instance file is one JSON object::

    {"format": "planarcut-instance", "version": 1,
     "vertices": 4,
     "edges": [[0, 0, 1, 1], ...],          # [id, u, v, weight]
     "rotation": [[0, 3], ...],             # clockwise edge ids per vertex
     "outer": [0, 0],                       # edge id, 0 = dart u->v, 1 = dart v->u
     "pairs": [[0, 2]]}                     # or "clusters" or "terminals"

:func:`serialize_instance` writes a canonical layout with one edge per line,
and parsing that text and serializing again reproduces it byte for byte.
"""

from __future__ import annotations

import json
from typing import Any

from .graph import Edge, GraphError, PlanarGraph
from .instances import Instance, MCCInstance, MinMCInstance, MTCInstance
from .mtc import CutSolution

FORMAT = "planarcut-instance"
SOLUTION_FORMAT = "planarcut-solution"
VERSION = 1
MAX_WEIGHT = 2**63 - 1
KINDS = ("pairs", "clusters", "terminals")


class InstanceError(ValueError):
    """Positioned diagnostic; ``path`` is the offending field (``edges[3][2]``)."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path
        self.message = message


class ParseError(InstanceError):
    """Malformed text or a field of the wrong shape."""


class ValidationError(InstanceError):
    """Well-formed document that is not a valid instance."""


def _int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(path, f"expected an integer, got {json.dumps(value)}")
    if value < 0:
        raise ParseError(path, f"ids and weights must be nonnegative, got {value}")
    return value


def _list(value: Any, path: str, length: int | None = None) -> list:
    if not isinstance(value, list):
        raise ParseError(path, f"expected a list, got {type(value).__name__}")
    if length is not None and len(value) != length:
        raise ParseError(path, f"expected {length} entries, got {len(value)}")
    return value


def _load(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    if not isinstance(doc, dict):
        raise ParseError("", "top level must be an object")
    return doc


def parse_graph(doc: dict) -> PlanarGraph:
    n = _int(doc.get("vertices"), "vertices") if "vertices" in doc else None
    if n is None:
        raise ParseError("vertices", "missing field")
    edges: list[Edge] = []
    ids: dict[int, int] = {}
    for i, raw in enumerate(_list(doc.get("edges", None), "edges")):
        p = f"edges[{i}]"
        eid, u, v, w = (_int(x, f"{p}[{j}]") for j, x in enumerate(_list(raw, p, 4)))
        if eid in ids:
            raise ValidationError(f"{p}[0]", f"edge id {eid} already used by edges[{ids[eid]}]")
        for j, x in ((1, u), (2, v)):
            if x >= n:
                raise ValidationError(f"{p}[{j}]", f"vertex {x} out of range 0..{n - 1}")
        if w > MAX_WEIGHT:
            raise ValidationError(f"{p}[3]", f"weight exceeds {MAX_WEIGHT}")
        ids[eid] = i
        edges.append(Edge(eid, u, v, w))
    if sum(e.w for e in edges) > MAX_WEIGHT:
        raise ValidationError("edges", f"total weight exceeds {MAX_WEIGHT}")
    rot_raw = _list(doc.get("rotation"), "rotation", n)
    rotation: list[tuple[int, ...]] = []
    ends: dict[int, list[int]] = {v: [] for v in range(n)}
    for e in edges:
        ends[e.u].append(e.id)
        ends[e.v].append(e.id)
    for v, r in enumerate(rot_raw):
        p = f"rotation[{v}]"
        listed = tuple(_int(x, f"{p}[{j}]") for j, x in enumerate(_list(r, p)))
        expected = sorted(ends[v])
        if sorted(listed) != expected:
            missing = sorted(set(expected) - set(listed))
            extra = sorted(set(listed) - set(expected))
            if missing:
                raise ValidationError(p, f"vertex {v} omits the edge-end of edge {missing[0]}")
            if extra:
                raise ValidationError(p, f"vertex {v} lists edge {extra[0]}, which is not incident to it")
            raise ValidationError(p, f"vertex {v} lists an edge-end twice")
        rotation.append(listed)
    outer = None
    if edges:
        raw = _list(doc.get("outer"), "outer", 2)
        eid, flag = _int(raw[0], "outer[0]"), _int(raw[1], "outer[1]")
        if eid not in ids:
            raise ValidationError("outer[0]", f"unknown edge id {eid}")
        if flag not in (0, 1):
            raise ValidationError("outer[1]", "direction flag must be 0 (u->v) or 1 (v->u)")
        e = edges[ids[eid]]
        outer = (eid, e.u if flag == 0 else e.v)
    elif doc.get("outer") is not None:
        raise ValidationError("outer", "must be null for a graph without edges")
    g = PlanarGraph(n, tuple(edges), tuple(rotation), outer)
    try:
        g.validate()
        g.faces  # noqa: B018 - face tracing and the Euler check
    except GraphError as exc:
        raise ValidationError("rotation", str(exc)) from None
    return g


def parse_instance(text: str) -> Instance:
    doc = _load(text)
    if doc.get("format") != FORMAT:
        raise ParseError("format", f"expected {json.dumps(FORMAT)}")
    if doc.get("version") != VERSION:
        raise ParseError("version", f"unsupported version {json.dumps(doc.get('version'))}, expected {VERSION}")
    present = [k for k in KINDS if k in doc]
    if len(present) != 1:
        raise ParseError("", f"exactly one of {', '.join(KINDS)} is required, found {present or 'none'}")
    known = {"format", "version", "vertices", "edges", "rotation", "outer", *KINDS}
    for key in doc:
        if key not in known:
            raise ParseError(key, "unknown field")
    g = parse_graph(doc)
    kind = present[0]
    groups = []
    for i, raw in enumerate(_list(doc[kind], kind)):
        p = f"{kind}[{i}]"
        if kind == "terminals":
            groups.append(_int(raw, p))
            continue
        items = _list(raw, p, 2 if kind == "pairs" else None)
        if kind == "clusters" and not items:
            raise ValidationError(p, "clusters must be nonempty")
        groups.append(tuple(_int(x, f"{p}[{j}]") for j, x in enumerate(items)))
    flat = [(i, t) for i, grp in enumerate(groups) for t in (grp if isinstance(grp, tuple) else (grp,))]
    seen: dict[int, int] = {}
    for i, t in flat:
        if t >= g.vertex_count:
            raise ValidationError(f"{kind}[{i}]", f"vertex {t} out of range 0..{g.vertex_count - 1}")
        if t in seen:
            raise ValidationError(f"{kind}[{i}]", f"vertex {t} is already a terminal ({kind}[{seen[t]}])")
        seen[t] = i
        if g.edges and not g.on_outer_face(t):
            raise ValidationError(f"{kind}[{i}]", f"terminal {t} does not lie on the outer face "
                                  "(every terminal must be a vertex of the outer face walk)")
    try:
        if kind == "pairs":
            return MinMCInstance(g, tuple(groups))
        if kind == "clusters":
            return MCCInstance(g, tuple(groups))
        return MTCInstance(g, tuple(groups))
    except GraphError as exc:
        raise ValidationError(kind, str(exc)) from None


def _outer_field(g: PlanarGraph) -> list[int] | None:
    if g.outer is None:
        return None
    eid, tail = g.outer
    return [eid, 0 if g.edge[eid].u == tail else 1]


def instance_kind(instance: Instance) -> str:
    if isinstance(instance, MinMCInstance):
        return "pairs"
    if isinstance(instance, MCCInstance):
        return "clusters"
    return "terminals"


def serialize_instance(instance: Instance) -> str:
    g = instance.graph
    kind = instance_kind(instance)
    if kind == "pairs":
        payload = [list(p) for p in instance.pairs]
    elif kind == "clusters":
        payload = [list(c) for c in instance.clusters]
    else:
        payload = list(instance.terminals)
    d = json.dumps
    lines = ["{", f'  "format": {d(FORMAT)},', f'  "version": {VERSION},', f'  "vertices": {g.vertex_count},']
    if g.edges:
        lines.append('  "edges": [')
        lines += [f"    {d(list(e))}," for e in g.edges[:-1]] + [f"    {d(list(g.edges[-1]))}"]
        lines.append("  ],")
    else:
        lines.append('  "edges": [],')
    lines.append(f'  "rotation": {d([list(r) for r in g.rotation])},')
    lines.append(f'  "outer": {d(_outer_field(g))},')
    lines.append(f'  "{kind}": {d(payload)}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_instance(path: str) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def serialize_solution(kind: str, solution: CutSolution, component_of: list[int] | tuple[int, ...]) -> str:
    """Sorted cut ids, weight and per-vertex component labels; no timing data."""
    doc = {
        "format": SOLUTION_FORMAT,
        "version": VERSION,
        "kind": kind,
        "weight": solution.total_weight,
        "cut": list(solution.sorted_edges),
        "components": list(component_of),
    }
    return json.dumps(doc, indent=None, separators=(", ", ": ")) + "\n"


def parse_solution(text: str) -> dict:
    doc = _load(text)
    if doc.get("format") != SOLUTION_FORMAT:
        raise ParseError("format", f"expected {json.dumps(SOLUTION_FORMAT)}")
    cut = [_int(x, f"cut[{i}]") for i, x in enumerate(_list(doc.get("cut"), "cut"))]
    doc["cut"] = cut
    return doc


def read_cut(path: str) -> list[int]:
    """Cut edge ids from a solution file or from a bare JSON list."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    doc = json.loads(text) if text.strip().startswith("[") else None
    if doc is not None:
        return [_int(x, f"[{i}]") for i, x in enumerate(doc)]
    return parse_solution(text)["cut"]
