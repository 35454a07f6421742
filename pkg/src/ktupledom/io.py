"""Graph files and JSON results.

Graph file format (line oriented, 1-based vertex labels)::

    c comment
    p <n> <m>          # also accepted: p edge <n> <m>
    e <u> <v>          # exactly m of these

The JSON result schema is versioned by ``SCHEMA_VERSION``.
"""
from __future__ import annotations

import json
from pathlib import Path

from .errors import GraphFormatError, IndexOutOfRange, SelfLoop
from .graph import Graph

SCHEMA_VERSION = 1


def parse_graph(text: str) -> Graph:
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            nums = parts[2:] if len(parts) == 4 else parts[1:]
            if len(nums) != 2:
                raise GraphFormatError(f"expected 'p <n> <m>', got {line!r}", lineno)
            try:
                n, m = int(nums[0]), int(nums[1])
            except ValueError:
                raise GraphFormatError(f"non-integer counts in {line!r}", lineno) from None
            if n < 0 or m < 0:
                raise GraphFormatError("counts must be non-negative", lineno)
        elif tag == "e":
            if n is None:
                raise GraphFormatError("edge line before problem line", lineno)
            if len(parts) != 3:
                raise GraphFormatError(f"expected 'e <u> <v>', got {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"non-integer endpoint in {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"endpoint outside 1..{n} in {line!r}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop in {line!r}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise GraphFormatError("missing problem line 'p <n> <m>'")
    if len(edges) != m:
        raise GraphFormatError(f"problem line announces {m} edges, found {len(edges)}")
    try:
        return Graph.from_edge_list(n, edges)
    except (IndexOutOfRange, SelfLoop) as exc:
        raise GraphFormatError(str(exc)) from exc


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text())


def format_graph(g: Graph, comment: str | None = None) -> str:
    edges = g.edges()
    lines = []
    if comment:
        lines += [f"c {c}" for c in comment.splitlines()]
    lines.append(f"p {g.n} {len(edges)}")
    lines += [f"e {u + 1} {v + 1}" for u, v in edges]
    return "\n".join(lines) + "\n"


def write_graph(g: Graph, path, comment: str | None = None) -> None:
    Path(path).write_text(format_graph(g, comment))


def labels(vertices) -> list[int]:
    return [v + 1 for v in vertices]


def parse_vertex_list(text: str) -> list[int]:
    """``"v1,v4,7"`` -> ``[0, 3, 6]``."""
    out = []
    for tok in text.replace(" ", "").split(","):
        if not tok:
            continue
        tok = tok[1:] if tok[0] in "vV" else tok
        try:
            v = int(tok)
        except ValueError:
            raise GraphFormatError(f"bad vertex label {tok!r}") from None
        if v < 1:
            raise GraphFormatError(f"vertex labels are 1-based, got {v}")
        out.append(v - 1)
    return out


def result_json(n: int, structure=None, results=()) -> dict:
    """Build the versioned result document; ``structure`` is None for non-C0P graphs."""
    doc = {"schema_version": SCHEMA_VERSION, "n": n, "c0p": structure is not None}
    if structure is not None:
        doc["ordering"] = labels(structure.ordering.perm)
        doc["partition"] = {
            "c1": labels(structure.c1),
            "c2": labels(structure.c2),
            "u": labels(structure.u),
        }
        doc["alpha"] = [structure.alpha1, structure.alpha2]
    doc["results"] = [
        {
            "k": k,
            "status": res.status,
            "gamma": res.gamma,
            "witness": labels(res.witness) if res.is_value else None,
            "rule": res.rule or None,
            "reason": res.reason or None,
        }
        for k, res in results
    ]
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)
