"""Edge-list text, DOT output and JSON helpers.

Edge-list format::

    # comment
    vertices: a b c d
    a b
    b c

Blank lines and lines starting with ``#`` are ignored.  Every other line is
either the ``vertices:`` header (declaring vertices, typically isolated ones)
or exactly two whitespace-separated vertex tokens.  Tokens are canonical label
text, so functor images such as ``a~1`` or ``{a,b}`` round-trip.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import LabelError, LoopEdge, ParseError
from .graph import Graph, edge_key
from .labels import VertexLabel, parse_label

_PALETTE = ("red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan")


def _token(tok, lineno):
    try:
        return parse_label(tok)
    except LabelError as exc:
        raise ParseError(str(exc), line=lineno) from None


def parse_edge_list(text: str) -> Graph:
    vertices = set()
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("vertices:"):
            for tok in line[len("vertices:"):].split():
                vertices.add(_token(tok, lineno))
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two vertex tokens, got {len(parts)}", line=lineno)
        u, v = (_token(p, lineno) for p in parts)
        if u == v:
            raise LoopEdge(f"loop edge {{{u},{v}}}", line=lineno)
        vertices.update((u, v))
        edges.add(edge_key(u, v))
    return Graph(frozenset(vertices), edges)


def serialize_edge_list(g: Graph) -> str:
    """Canonical text: a full ``vertices:`` header, then sorted edges."""
    lines = ["vertices: " + " ".join(str(v) for v in g.vertex_list)]
    lines.extend(f"{u} {v}" for u, v in g.edge_list)
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_text(path, text: str):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _q(label) -> str:
    return '"' + str(label).replace('"', '\\"') + '"'


def to_dot(g: Graph, matching: Mapping | None = None, triples: Iterable | None = None) -> str:
    """Render ``g`` as an undirected DOT graph in canonical order.

    ``matching`` highlights the matched edges in bold red; each triple of
    ``triples`` colours its three edges with one palette colour.
    """
    style = {}
    if matching is not None:
        for x, y in matching.items():
            style[edge_key(x, y)] = 'color="red", penwidth=3'
    if triples is not None:
        for i, t in enumerate(sorted(tuple(sorted(t)) for t in triples)):
            colour = _PALETTE[i % len(_PALETTE)]
            a, b, c = t
            for e in ((a, b), (a, c), (b, c)):
                style[edge_key(*e)] = f'color="{colour}", penwidth=2, label="t{i}"'
    lines = ["graph {"]
    lines.extend(f"  {_q(v)};" for v in g.vertex_list)
    for u, v in g.edge_list:
        attrs = style.get((u, v))
        suffix = f" [{attrs}]" if attrs else ""
        lines.append(f"  {_q(u)} -- {_q(v)}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def labels_to_json(mapping: Mapping[VertexLabel, VertexLabel]) -> dict:
    """Render a label map as a JSON object with keys in canonical order."""
    return {str(k): str(mapping[k]) for k in sorted(mapping)}


def labels_from_json(obj: Mapping[str, str]) -> dict:
    if not isinstance(obj, Mapping):
        raise ParseError("expected a JSON object mapping labels to labels")
    try:
        return {parse_label(k): parse_label(v) for k, v in obj.items()}
    except (LabelError, TypeError) as exc:
        raise ParseError(f"bad label in map: {exc}") from None
