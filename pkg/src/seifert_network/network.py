"""Bounded windows of the Seifert Surgery Network.

Vertices are :class:`SeifertSurgery` values keyed by ``SeifertSurgery.key``;
an edge records the twist that produced it, read from ``source``:
``target = twist(source, seiferter, turns)`` with ``turns = +-1``.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from math import gcd

import networkx as nx

from .catalog import default_catalog
from .classifier import classify_torus_surgery
from .errors import DomainError, VertexAbsent
from .knots import (
    DerivedKnot,
    NamedKnot,
    SeifertSurgery,
    TorusKnotId,
    UNKNOT,
    parse_surgery,
)
from .twist import BasicKind, basic_twist, twist_along_seiferter

__all__ = [
    "Edge",
    "NetworkGraph",
    "build_subcomplex_t",
    "add_seiferter_line",
    "build_figure2",
    "find_path_to_t",
    "path_segments",
    "export_graph",
    "import_graph",
    "FIGURE2_WINDOW",
]

GRAPH_SCHEMA = "seifert-network-graph/1"
FIGURE2_WINDOW = (-9, 3)

_KIND_RANK = {TorusKnotId: 0, NamedKnot: 1, DerivedKnot: 2}


def vertex_order(s):
    """Canonical sort key: torus knots first, then named, then derived."""
    knot = s.knot
    if isinstance(knot, TorusKnotId):
        return (0, knot.q, knot.p, "", s.slope)
    return (_KIND_RANK[type(knot)], 0, 0, knot.label, s.slope)


@dataclass(frozen=True)
class Edge:
    source: SeifertSurgery
    target: SeifertSurgery
    seiferter: str
    turns: int
    linking: int

    def sort_key(self):
        return (vertex_order(self.source), vertex_order(self.target), self.seiferter, self.turns)

    def to_json(self):
        return {
            "source": self.source.key,
            "target": self.target.key,
            "seiferter": self.seiferter,
            "turns": self.turns,
            "linking": self.linking,
        }


class NetworkGraph:
    """Undirected multigraph of surgeries; parallel edges differ by seiferter."""

    def __init__(self):
        self._g = nx.MultiGraph()

    def __len__(self):
        return self._g.number_of_nodes()

    def __contains__(self, s):
        return s.key in self._g

    def __eq__(self, other):
        if not isinstance(other, NetworkGraph):
            return NotImplemented
        return set(self.vertices()) == set(other.vertices()) and set(self.edges()) == set(other.edges())

    def add_vertex(self, s):
        if self._g.has_node(s.key):
            return
        self._g.add_node(s.key, surgery=s)

    def add_edge(self, source, target, seiferter, turns, linking):
        if abs(turns) != 1:
            raise ValueError("network edges are single twists")
        self.add_vertex(source)
        self.add_vertex(target)
        # Reading the same twist from the other endpoint must not add a copy.
        if self._g.has_edge(target.key, source.key, key=(seiferter, target.key)):
            return
        edge = Edge(source, target, seiferter, turns, linking)
        self._g.add_edge(source.key, target.key, key=(seiferter, source.key), edge=edge)

    def seal(self):
        """Freeze the graph; later mutations raise."""
        nx.freeze(self._g)
        return self

    def vertex(self, key):
        try:
            return self._g.nodes[key]["surgery"]
        except KeyError:
            raise VertexAbsent(key) from None

    def vertices(self):
        return sorted((d["surgery"] for _, d in self._g.nodes(data=True)), key=vertex_order)

    def edges(self):
        return sorted((d["edge"] for _, _, d in self._g.edges(data=True)), key=Edge.sort_key)

    def incident(self, s):
        """Edges at ``s`` in canonical order."""
        found = [d["edge"] for _, _, d in self._g.edges(s.key, data=True)]
        return sorted(found, key=Edge.sort_key)

    @property
    def number_of_edges(self):
        return self._g.number_of_edges()


# Builders ------------------------------------------------------------------


def _torus_knots(p_max):
    for p in range(-p_max, p_max + 1):
        for q in range(2, abs(p)):
            if gcd(abs(p), q) == 1:
                yield TorusKnotId(p, q)


def build_subcomplex_t(p_max, radius):
    """Vertices (T(p,q), m) with |p| <= p_max and |m - pq| <= radius.

    The unknot contributes (O, m) for |m| <= radius with meridian edges only,
    plus any unknot vertex reached by a basic twist from the torus window.
    """
    if p_max < 2 or radius < 0:
        raise DomainError(f"need p_max >= 2 and radius >= 0, got {p_max}, {radius}")
    g = NetworkGraph()
    knots = list(_torus_knots(p_max))
    bound = set(knots)

    def inside(s):
        k = s.knot
        if k.is_unknot:
            return abs(s.slope) <= radius
        return k in bound and abs(s.slope - k.p * k.q) <= radius

    for m in range(-radius, radius + 1):
        g.add_vertex(SeifertSurgery(UNKNOT, m))
        if m < radius:
            g.add_edge(SeifertSurgery(UNKNOT, m), SeifertSurgery(UNKNOT, m + 1), BasicKind.MERIDIAN.value, 1, 1)
    for k in knots:
        for m in range(k.p * k.q - radius, k.p * k.q + radius + 1):
            s = SeifertSurgery(k, m)
            g.add_vertex(s)
            for kind, w in ((BasicKind.MERIDIAN, 1), (BasicKind.SP, k.q), (BasicKind.SQ, abs(k.p))):
                for turns in (1, -1):
                    t = basic_twist(s, kind, turns)
                    # +1 twists between torus vertices cover every such edge once
                    if t.knot.is_unknot or (turns == 1 and inside(t)):
                        g.add_edge(s, t, kind.value, turns, w)
    return g


def add_seiferter_line(g, s, seiferter, lo, hi, catalog=None):
    """Add the vertices of ``turns`` twists along ``seiferter`` for lo <= turns <= hi."""
    if lo > hi:
        raise DomainError(f"empty twist range [{lo}, {hi}]")
    catalog = catalog or default_catalog()
    g.add_vertex(s)
    line = {t: twist_along_seiferter(s, seiferter, t, catalog) for t in range(lo, hi + 1)}
    for t in range(lo, hi):
        g.add_edge(line[t], line[t + 1], seiferter.id, 1, seiferter.linking)
    for v in line.values():
        g.add_vertex(v)
    return g


def build_figure2(window=FIGURE2_WINDOW, catalog=None):
    """Meridian line on T(-3,2) plus the c_fig8 and c_prime vertical lines."""
    catalog = catalog or default_catalog()
    g = NetworkGraph()
    knot = TorusKnotId(-3, 2)
    lo, hi = window
    for m in range(lo, hi + 1):
        g.add_vertex(SeifertSurgery(knot, m))
        if m < hi:
            g.add_edge(SeifertSurgery(knot, m), SeifertSurgery(knot, m + 1), BasicKind.MERIDIAN.value, 1, 1)
    for slope, sid, turns in ((-2, "c_fig8", (-2, 0)), (-7, "c_prime", (0, 1))):
        host = SeifertSurgery(knot, slope)
        add_seiferter_line(g, host, catalog.get(sid, host), *turns, catalog=catalog)
    return g


# Queries -------------------------------------------------------------------


def find_path_to_t(g, v):
    """Shortest edge path from ``v`` to a torus-knot or unknot vertex.

    Returns [] when ``v`` is already there and None when no such vertex is
    reachable.  Ties break by canonical vertex order.
    """
    if v not in g:
        raise VertexAbsent(v.key)
    if v.in_torus_subcomplex:
        return []
    parent = {v.key: None}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for e in g.incident(u):
            w = e.target if e.source == u else e.source
            if w.key in parent:
                continue
            parent[w.key] = (u, e)
            if w.in_torus_subcomplex:
                path = []
                while parent[w.key] is not None:
                    prev, edge = parent[w.key]
                    path.append(edge)
                    w = prev
                return path[::-1]
            queue.append(w)
    return None


def path_segments(path, start):
    """Group a path into maximal runs along one seiferter.

    Each run is ``(seiferter, turns, from_vertex, to_vertex)`` with ``turns``
    the signed number of twists taken walking from ``start``.
    """
    segments = []
    here = start
    for e in path:
        step = e.turns if e.source == here else -e.turns
        there = e.target if e.source == here else e.source
        if segments and segments[-1][0] == e.seiferter:
            sid, turns, origin, _ = segments[-1]
            segments[-1] = (sid, turns + step, origin, there)
        else:
            segments.append((e.seiferter, step, here, there))
        here = there
    return segments


# Export --------------------------------------------------------------------


def _summary(s):
    if isinstance(s.knot, TorusKnotId):
        return classify_torus_surgery(s.knot, s.slope).summary()
    return None


def _dot_escape(text):
    return text.replace("\\", "\\\\").replace('"', '\\"')


def export_graph(g, fmt="dot"):
    fmt = fmt.lower()
    if fmt == "dot":
        lines = ["graph {"]
        for s in g.vertices():
            label = _dot_escape(s.label)
            summary = _summary(s)
            if summary is not None:
                label += "\\n" + _dot_escape(summary)
            lines.append(f'  "{_dot_escape(s.label)}" [label="{label}"];')
        for e in g.edges():
            lines.append(
                f'  "{_dot_escape(e.source.label)}" -- "{_dot_escape(e.target.label)}"'
                f' [label="{e.seiferter}:{e.turns:+d}"];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {
            "schema": GRAPH_SCHEMA,
            "vertices": [
                {"key": s.key, "label": s.label, "slope": s.slope, "in_T": s.in_torus_subcomplex,
                 "classification": _summary(s)}
                for s in g.vertices()
            ],
            "edges": [e.to_json() for e in g.edges()],
        }
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    raise ValueError(f"unknown export format {fmt!r}")


def import_graph(text):
    """Inverse of ``export_graph(g, "json")``."""
    doc = json.loads(text)
    if doc.get("schema") != GRAPH_SCHEMA:
        raise ValueError(f"not a {GRAPH_SCHEMA} document")
    g = NetworkGraph()
    for v in doc["vertices"]:
        g.add_vertex(parse_surgery(v["key"]))
    for e in doc["edges"]:
        g.add_edge(parse_surgery(e["source"]), parse_surgery(e["target"]), e["seiferter"], e["turns"], e["linking"])
    return g
