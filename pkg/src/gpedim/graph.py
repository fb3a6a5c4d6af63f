"""Immutable model of the generalized Petersen graph P(n, k).

Vertices are u_0..u_{n-1} on the outer cycle and v_0..v_{n-1} on the inner
cycle(s).  Edges come in three kinds: outer arcs u_i u_{i+1}, inner arcs
v_i v_{i+k}, and spokes u_i v_i.  Adjacency is computed arithmetically and
never stored, so graphs with very large n cost O(1) memory.

Indices are reduced modulo n at every construction site; negative indices
are accepted and wrap around.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterator

from .errors import GraphParameterError


class Layer(IntEnum):
    """Which cycle a vertex lives on: OUTER = u, INNER = v."""

    OUTER = 0
    INNER = 1

    @property
    def symbol(self) -> str:
        return "u" if self is Layer.OUTER else "v"


class EdgeKind(IntEnum):
    """Edge kinds, ordered OUTER_ARC < SPOKE < INNER_ARC.

    The order fixes how confusable-pair witnesses are ranked and how the
    edge list is enumerated.
    """

    OUTER_ARC = 0
    SPOKE = 1
    INNER_ARC = 2

    @property
    def symbol(self) -> str:
        return ("u", "s", "v")[self]

    @property
    def json_name(self) -> str:
        return ("outer", "spoke", "inner")[self]


_KIND_BY_SYMBOL = {k.symbol: k for k in EdgeKind}
_KIND_BY_JSON = {k.json_name: k for k in EdgeKind}


@dataclass(frozen=True, order=True)
class Vertex:
    """A vertex w_i with w in {u, v}.  Ordering is (layer, index)."""

    layer: Layer
    index: int

    @property
    def name(self) -> str:
        return f"{self.layer.symbol}{self.index}"


@dataclass(frozen=True, order=True)
class Edge:
    """An edge e_i of one of the three kinds.  Ordering is (kind, index)."""

    kind: EdgeKind
    index: int

    @property
    def name(self) -> str:
        return f"{self.kind.symbol}:{self.index}"


def parse_vertex(text: str) -> tuple[Layer, int]:
    """Parse 'u0' / 'v12' (negative indices allowed) into (layer, index)."""
    text = text.strip()
    if len(text) >= 2 and text[0] in ("u", "v"):
        try:
            return (Layer.OUTER if text[0] == "u" else Layer.INNER, int(text[1:]))
        except ValueError:
            pass
    raise GraphParameterError(f"cannot parse vertex {text!r}; expected e.g. 'u0' or 'v12'")


def parse_edge(text: str) -> tuple[EdgeKind, int]:
    """Parse 'u:5' / 's:0' / 'v:-7' into (kind, index)."""
    head, sep, tail = text.strip().partition(":")
    if sep and head in _KIND_BY_SYMBOL:
        try:
            return _KIND_BY_SYMBOL[head], int(tail)
        except ValueError:
            pass
    raise GraphParameterError(f"cannot parse edge {text!r}; expected e.g. 'u:5', 's:0' or 'v:-7'")


@dataclass(frozen=True)
class GPGraph:
    """The generalized Petersen graph P(n, k), n >= 3 and 1 <= k < n/2."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise GraphParameterError(f"n must be >= 3, got n={self.n}")
        if not 1 <= self.k or not 2 * self.k < self.n:
            raise GraphParameterError(
                f"k must satisfy 1 <= k < n/2, got n={self.n}, k={self.k}"
            )

    # -- construction of reduced elements ------------------------------

    def u(self, i: int) -> Vertex:
        return Vertex(Layer.OUTER, i % self.n)

    def v(self, i: int) -> Vertex:
        return Vertex(Layer.INNER, i % self.n)

    def vertex(self, layer: Layer, i: int) -> Vertex:
        return Vertex(layer, i % self.n)

    def outer_arc(self, i: int) -> Edge:
        return Edge(EdgeKind.OUTER_ARC, i % self.n)

    def spoke(self, i: int) -> Edge:
        return Edge(EdgeKind.SPOKE, i % self.n)

    def inner_arc(self, i: int) -> Edge:
        return Edge(EdgeKind.INNER_ARC, i % self.n)

    def edge(self, kind: EdgeKind, i: int) -> Edge:
        return Edge(kind, i % self.n)

    # -- enumeration ----------------------------------------------------

    def vertices(self) -> Iterator[Vertex]:
        """All 2n vertices: u_0..u_{n-1}, then v_0..v_{n-1}."""
        for i in range(self.n):
            yield Vertex(Layer.OUTER, i)
        for i in range(self.n):
            yield Vertex(Layer.INNER, i)

    def edges(self) -> Iterator[Edge]:
        """All 3n edges in canonical order: outer arcs, spokes, inner arcs."""
        for kind in EdgeKind:
            for i in range(self.n):
                yield Edge(kind, i)

    @property
    def vertex_count(self) -> int:
        return 2 * self.n

    @property
    def edge_count(self) -> int:
        return 3 * self.n

    # -- incidence ------------------------------------------------------

    def incident_vertices(self, e: Edge) -> tuple[Vertex, Vertex]:
        """The two endpoints of e, indices reduced mod n."""
        i = e.index % self.n
        if e.kind is EdgeKind.OUTER_ARC:
            return self.u(i), self.u(i + 1)
        if e.kind is EdgeKind.INNER_ARC:
            return self.v(i), self.v(i + self.k)
        return self.u(i), self.v(i)

    def adjacent_vertices(self, w: Vertex) -> tuple[Vertex, Vertex, Vertex]:
        """The three neighbours of w.

        Order is fixed: cycle predecessor, cycle successor, spoke partner;
        i.e. (u_{i-1}, u_{i+1}, v_i) for u_i and (v_{i-k}, v_{i+k}, u_i)
        for v_i.
        """
        i = w.index % self.n
        if w.layer is Layer.OUTER:
            return self.u(i - 1), self.u(i + 1), self.v(i)
        return self.v(i - self.k), self.v(i + self.k), self.u(i)

    # -- serialization ----------------------------------------------------

    def to_dot(self) -> str:
        """GraphViz DOT text: one node line per vertex, one edge line per edge."""
        lines = [f"graph P_{self.n}_{self.k} {{"]
        for w in self.vertices():
            lines.append(f"  {w.name};")
        for e in self.edges():
            a, b = self.incident_vertices(e)
            lines.append(f"  {a.name} -- {b.name};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        """JSON document with n, k, vertex names, and {kind, index} edge records."""
        doc = {
            "n": self.n,
            "k": self.k,
            "vertices": [w.name for w in self.vertices()],
            "edges": [{"kind": e.kind.json_name, "index": e.index} for e in self.edges()],
        }
        return json.dumps(doc, indent=None, separators=(",", ":")) + "\n"


def build(n: int, k: int) -> GPGraph:
    """Build P(n, k), validating the parameter domain."""
    return GPGraph(n, k)


def from_json(text: str | bytes) -> GPGraph:
    """Rebuild a graph from :meth:`GPGraph.to_json` output (round-trip inverse)."""
    try:
        doc = json.loads(text)
        n, k = int(doc["n"]), int(doc["k"])
    except (ValueError, TypeError, KeyError) as exc:
        raise GraphParameterError(f"malformed graph JSON: {exc}") from exc
    g = GPGraph(n, k)
    vertices = doc.get("vertices")
    edges = doc.get("edges")
    if vertices is not None and list(vertices) != [w.name for w in g.vertices()]:
        raise GraphParameterError("graph JSON vertex list does not match n")
    if edges is not None:
        want = [{"kind": e.kind.json_name, "index": e.index} for e in g.edges()]
        if list(edges) != want:
            raise GraphParameterError("graph JSON edge list does not match (n, k)")
    return g
