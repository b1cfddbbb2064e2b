#!/usr/bin/env python3
"""
Influence - Graph Documents

Line-oriented text format for game graphs, plus a one-way DOT export.

    influence v1
    # comment
    v <id> <L|R>
    a <from> <to>

Ids are arbitrary non-negative integers; the parser re-densifies them in
ascending order and keeps the originals as vertex labels. Serialization writes
vertices in ascending id and arcs in lexicographic order, so a serialized
document parses back to the same bytes.

Author: Influence Contributors
License: MIT
"""

import logging
import re
from pathlib import Path
from typing import Dict, List, Tuple, Union

import networkx as nx

from .errors import GraphParseError
from .graph import Color, GameGraph

logger = logging.getLogger(__name__)

HEADER = "influence v1"
TOKEN = re.compile(r"\S+")


def _tokens(line: str) -> List[Tuple[str, int]]:
    """Whitespace-separated tokens with their 1-based columns."""
    return [(m.group(0), m.start() + 1) for m in TOKEN.finditer(line)]


def _parse_id(token: str, column: int, line_no: int) -> int:
    if not token.isdigit():
        raise GraphParseError(f"expected a non-negative vertex id, got '{token}'", line_no, column)
    return int(token)


def parse_graph(text: str) -> GameGraph:
    """
    Parse a graph document.

    Raises:
        GraphParseError: on a missing header, a malformed line, an unknown or
            repeated vertex id, or a self-loop
    """
    colors: Dict[int, Color] = {}
    arcs: Dict[Tuple[int, int], int] = {}
    header_seen = False

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = _tokens(line)
        if not tokens:
            continue

        if not header_seen:
            if " ".join(t for t, _ in tokens) != HEADER:
                raise GraphParseError(f"expected header '{HEADER}'", line_no, tokens[0][1])
            header_seen = True
            continue

        kind, kind_col = tokens[0]
        if kind == "v":
            if len(tokens) != 3:
                raise GraphParseError("vertex line needs 'v <id> <L|R>'", line_no, kind_col)
            vid = _parse_id(*tokens[1], line_no)
            color_token, color_col = tokens[2]
            if color_token not in ("L", "R"):
                raise GraphParseError(f"unknown colour '{color_token}'", line_no, color_col)
            if vid in colors:
                raise GraphParseError(f"vertex {vid} declared twice", line_no, tokens[1][1])
            colors[vid] = Color(color_token)
        elif kind == "a":
            if len(tokens) != 3:
                raise GraphParseError("arc line needs 'a <from> <to>'", line_no, kind_col)
            tail = _parse_id(*tokens[1], line_no)
            head = _parse_id(*tokens[2], line_no)
            if tail == head:
                raise GraphParseError("self-loop", line_no)
            if (tail, head) in arcs:
                logger.warning(
                    f"⚠️ Duplicate arc {tail} -> {head} at line {line_no} "
                    f"(first seen at line {arcs[(tail, head)]}), ignored"
                )
                continue
            arcs[(tail, head)] = line_no
        else:
            raise GraphParseError(f"unknown line kind '{kind}'", line_no, kind_col)

    if not header_seen:
        raise GraphParseError(f"expected header '{HEADER}'", 1)

    for (tail, head), line_no in arcs.items():
        for vid in (tail, head):
            if vid not in colors:
                raise GraphParseError(f"arc references undeclared vertex {vid}", line_no)

    labels = sorted(colors)
    index = {label: i for i, label in enumerate(labels)}
    return GameGraph(
        colors=tuple(colors[label] for label in labels),
        arcs=tuple((index[a], index[b]) for a, b in arcs),
        labels=tuple(labels),
    )


def serialize_graph(graph: GameGraph) -> str:
    """Canonical document text: header, vertices by id, arcs sorted."""
    lines = [HEADER]
    lines.extend(f"v {graph.labels[v]} {graph.colors[v].value}" for v in graph.vertices)
    lines.extend(f"a {graph.labels[a]} {graph.labels[b]}" for a, b in sorted(graph.arcs))
    return "\n".join(lines) + "\n"


def read_graph(path: Union[str, Path]) -> GameGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(graph: GameGraph, path: Union[str, Path]) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(serialize_graph(graph), encoding="utf-8")
    return target


def to_dot(graph: GameGraph, name: str = "influence") -> str:
    """DOT text for visualization: Left vertices filled black, Right hollow."""
    drawing = nx.DiGraph(name=name)
    for v in graph.vertices:
        if graph.colors[v] is Color.L:
            style = {"style": "filled", "fillcolor": "black", "fontcolor": "white"}
        else:
            style = {"style": "solid", "color": "black"}
        drawing.add_node(str(graph.labels[v]), shape="circle", **style)
    for a, b in graph.arcs:
        drawing.add_edge(str(graph.labels[a]), str(graph.labels[b]))
    return nx.nx_pydot.to_pydot(drawing).to_string()
