"""Simple undirected graphs, named generators and the Delta-Y / Y-Delta moves."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on small nonnegative integer vertices.

    Edges are stored normalized as ``(u, v)`` with ``u < v`` and sorted, so an
    edge's position in :attr:`edges` is a stable edge id.
    """

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    labels: Mapping[int, str] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        verts = tuple(sorted(set(self.vertices)))
        if len(verts) != len(self.vertices):
            raise GraphError("duplicate vertex ids")
        if any(v < 0 for v in verts):
            raise GraphError("vertex ids must be nonnegative")
        vset = set(verts)
        es = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if u not in vset or v not in vset:
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            e = _norm(u, v)
            if e in es:
                raise GraphError(f"parallel edge {e}")
            es.add(e)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(sorted(es)))
        object.__setattr__(self, "labels", {v: t for v, t in dict(self.labels).items() if v in vset})
        adj: dict[int, set[int]] = {v: set() for v in verts}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", {v: frozenset(n) for v, n in adj.items()})
        object.__setattr__(self, "_eid", {e: i for i, e in enumerate(self.edges)})

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], vertices: Iterable[int] = (), labels=None) -> "Graph":
        edges = [tuple(e) for e in edges]
        vs = set(vertices)
        for u, v in edges:
            vs.update((u, v))
        return cls(tuple(sorted(vs)), tuple(edges), labels or {})

    # basic queries -------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._eid[_norm(u, v)]
        except KeyError:
            raise GraphError(f"no edge ({u}, {v})") from None

    def adjacent_edges(self, i: int, j: int) -> bool:
        """True if edges with ids i and j share an endpoint."""
        return bool(set(self.edges[i]) & set(self.edges[j]))

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))

    def vertex_by_label(self, text: str) -> int:
        for v, t in self.labels.items():
            if t == text:
                return v
        raise GraphError(f"no vertex labeled {text!r}")

    def fresh_vertex(self) -> int:
        vs = set(self.vertices)
        return next(i for i in itertools.count() if i not in vs)

    def triangles(self) -> list["Triangle"]:
        out = []
        for u, v in self.edges:
            for w in sorted(self._adj[u] & self._adj[v]):
                if w > v:
                    out.append(Triangle(u, v, w))
        return out

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def subgraph(self, vertices: Iterable[int]) -> "Graph":
        vs = set(vertices)
        return Graph(tuple(sorted(vs)), tuple(e for e in self.edges if e[0] in vs and e[1] in vs),
                     {v: t for v, t in self.labels.items() if v in vs})

    def edge_subgraph(self, edge_ids: Iterable[int]) -> "Graph":
        return Graph(self.vertices, tuple(self.edges[i] for i in edge_ids), self.labels)

    def relabel(self, mapping: Mapping[int, int]) -> "Graph":
        return Graph(tuple(mapping[v] for v in self.vertices),
                     tuple((mapping[u], mapping[v]) for u, v in self.edges),
                     {mapping[v]: t for v, t in self.labels.items()})

    def with_labels(self, labels: Mapping[int, str]) -> "Graph":
        return Graph(self.vertices, self.edges, dict(labels))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True, order=True)
class Triangle:
    v1: int
    v2: int
    v3: int

    def __post_init__(self):
        if len({self.v1, self.v2, self.v3}) != 3:
            raise GraphError("triangle vertices must be distinct")

    def __iter__(self) -> Iterator[int]:
        return iter((self.v1, self.v2, self.v3))

    def check(self, g: Graph) -> None:
        a, b, c = self
        if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
            raise GraphError(f"{tuple(self)} is not a triangle of the graph")


@dataclass(frozen=True)
class MoveStep:
    kind: str  # "DY" or "YD"
    site: Triangle | int
    new_vertex: int
    simplified_edges: int = 0

    def __post_init__(self):
        if self.kind not in ("DY", "YD"):
            raise ValueError(f"unknown move kind {self.kind!r}")
        if self.kind == "DY" and self.simplified_edges:
            raise ValueError("a Delta-Y step never merges edges")


# moves -------------------------------------------------------------------

def delta_y(g: Graph, t: Triangle, label: str | None = None) -> tuple[Graph, MoveStep]:
    """Replace the three edges of triangle ``t`` by a star on a fresh vertex."""
    t.check(g)
    a, b, c = t
    v = g.fresh_vertex()
    gone = {_norm(a, b), _norm(b, c), _norm(a, c)}
    edges = [e for e in g.edges if e not in gone] + [(a, v), (b, v), (c, v)]
    labels = dict(g.labels)
    if label is not None:
        labels[v] = label
    h = Graph(g.vertices + (v,), tuple(edges), labels)
    return h, MoveStep("DY", t, v)


def y_delta(g: Graph, v: int) -> tuple[Graph, MoveStep]:
    """Remove a degree-3 vertex and join its neighbours pairwise.

    Edges that already exist are kept single; the count of such merges is
    recorded on the returned step.
    """
    if v not in g._adj:
        raise GraphError(f"vertex {v} not in graph")
    if g.degree(v) != 3:
        raise GraphError(f"vertex {v} has degree {g.degree(v)}, need 3")
    a, b, c = sorted(g.neighbors(v))
    edges = [e for e in g.edges if v not in e]
    merged = 0
    for x, y in ((a, b), (b, c), (a, c)):
        if g.has_edge(x, y):
            merged += 1
        else:
            edges.append((x, y))
    h = Graph(tuple(u for u in g.vertices if u != v), tuple(edges), g.labels)
    return h, MoveStep("YD", v, v, merged)


# generators --------------------------------------------------------------

def complete(n: int) -> Graph:
    return Graph.from_edges(itertools.combinations(range(n), 2), range(n))


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(((i, p + j) for i in range(p) for j in range(q)), range(p + q))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph.from_edges(((i, (i + 1) % n) for i in range(n)), range(n))


def heawood() -> Graph:
    # LCF notation [5, -5]^7
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + (5 if i % 2 == 0 else -5)) % 14) for i in range(14)]
    return Graph.from_edges({_norm(*e) for e in edges}, range(14))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(outer + spokes + inner, range(10))


def gnk(n: int, k: int) -> Graph:
    """K_n after Delta-Y moves on k edge-disjoint triangles through the hub.

    The hub is vertex 0 (label ``a``); triangle i uses the hub and the
    (2i-1)-th and 2i-th non-hub vertices in id order.
    """
    if n < 3 or k < 0:
        raise GraphError("need n >= 3 and k >= 0")
    if 2 * k > n - 1:
        raise GraphError(f"{k} edge-disjoint triangles at one vertex need 2k <= n-1 (n={n})")
    g = complete(n)
    labels = {0: "a"}
    for i in range(1, k + 1):
        t1, t2 = 2 * i - 1, 2 * i
        g, step = delta_y(g, Triangle(0, t1, t2))
        labels[step.new_vertex] = f"v_{i}"
        labels[t1] = f"t_{{{i},1}}"
        labels[t2] = f"t_{{{i},2}}"
    for j, v in enumerate(range(2 * k + 1, n), start=1):
        labels[v] = str(j)
    return g.with_labels(labels)


def gstar() -> Graph:
    """G_7^(1) followed by a Delta-Y move on a triangle vertex-disjoint from the first."""
    g = gnk(7, 1)
    h, _ = delta_y(g, Triangle(3, 4, 5))
    return h


_PATTERNS = [
    (re.compile(r"K(\d+),(\d+)"), lambda m: complete_bipartite(int(m[1]), int(m[2]))),
    (re.compile(r"K(\d+)"), lambda m: complete(int(m[1]))),
    (re.compile(r"C(\d+)"), lambda m: cycle(int(m[1]))),
    (re.compile(r"Gnk\((\d+),(\d+)\)"), lambda m: gnk(int(m[1]), int(m[2]))),
]

FAMILY_NAMES = ("K6", "Q7", "P7", "Q8", "P8", "P9", "P10")


def named_graph(name: str) -> Graph:
    """Build a graph from a roster name such as ``K7``, ``K3,3``, ``Q8`` or ``Gnk(9,2)``."""
    name = name.strip()
    if name in FAMILY_NAMES and name != "K6":
        from .family import petersen_family

        return petersen_family()[name]
    fixed = {"Heawood": heawood, "Petersen": petersen, "G7_1": lambda: gnk(7, 1),
             "G7_2": lambda: gnk(7, 2), "Gstar": gstar}
    if name in fixed:
        return fixed[name]()
    for pat, make in _PATTERNS:
        m = pat.fullmatch(name)
        if m:
            return make(m)
    raise GraphError(f"unknown graph name {name!r}")


# edge-list text format -----------------------------------------------------

def dumps(g: Graph) -> str:
    lines = [f"# n={g.n} m={g.m}"]
    lines += [f"vertex {v}" for v in g.vertices if g.degree(v) == 0]
    lines += [f"label {v} {t}" for v, t in sorted(g.labels.items())]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def loads(text: str) -> Graph:
    edges, verts, labels = [], set(), {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "label":
                labels[int(parts[1])] = line.split(None, 2)[2]
            elif parts[0] == "vertex":
                verts.add(int(parts[1]))
            elif len(parts) == 2:
                edges.append((int(parts[0]), int(parts[1])))
            else:
                raise ValueError
        except (ValueError, IndexError):
            raise GraphError(f"line {lineno}: cannot parse {raw!r}") from None
    verts.update(labels)
    return Graph.from_edges(edges, verts, labels)
