"""Planarity testing with certificates (embedding or Kuratowski subgraph).

Testing is delegated to networkx's left-right planarity algorithm. Both
certificates can be checked independently: embeddings by face tracing,
obstructions by smoothing to K5 or K3,3.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .graph import Graph, complete, complete_bipartite
from .iso import is_isomorphic


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    embedding: dict[int, tuple[int, ...]] | None = None  # vertex -> cyclic neighbour order
    obstruction: Graph | None = None

    def faces(self) -> int:
        """Number of faces traced from the embedding (planar results only)."""
        if self.embedding is None:
            raise ValueError("no embedding")
        return len(trace_faces(self.embedding))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def is_planar(g: Graph) -> PlanarityResult:
    ok, cert = nx.check_planarity(to_nx(g), counterexample=True)
    if ok:
        return PlanarityResult(True, embedding={v: tuple(cert.neighbors_cw_order(v)) for v in g.vertices})
    obs = Graph.from_edges((min(u, v), max(u, v)) for u, v in cert.edges)
    return PlanarityResult(False, obstruction=obs)


def planar(g: Graph) -> bool:
    return nx.check_planarity(to_nx(g))[0]


def trace_faces(rot: dict[int, tuple[int, ...]]) -> list[list[tuple[int, int]]]:
    seen = set()
    faces = []
    for a, nbrs in rot.items():
        for b in nbrs:
            if (a, b) in seen:
                continue
            face, dart = [], (a, b)
            while dart not in seen:
                seen.add(dart)
                face.append(dart)
                x, y = dart
                r = rot[y]
                dart = (y, r[(r.index(x) + 1) % len(r)])
            faces.append(face)
    return faces


def embedding_is_spherical(g: Graph, rot: dict[int, tuple[int, ...]]) -> bool:
    """Euler characteristic 2 for every component.

    Faces are traced per component and an isolated vertex counts as one face,
    so the totals must satisfy V - E + F == 2 * (number of components).
    """
    if any(sorted(rot.get(v, ())) != sorted(g.neighbors(v)) for v in g.vertices):
        return False
    comps = len(g.components())
    isolated = sum(1 for v in g.vertices if g.degree(v) == 0)
    f = len(trace_faces({v: r for v, r in rot.items() if r})) + isolated
    return g.n - g.m + f == 2 * comps


def smooth(g: Graph) -> Graph:
    """Suppress degree-2 vertices and drop isolated ones (homeomorphic reduction)."""
    adj = {v: set(g.neighbors(v)) for v in g.vertices if g.degree(v) > 0}
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            if len(adj[v]) == 2:
                a, b = adj[v]
                if b in adj[a]:
                    continue
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                del adj[v]
                changed = True
    edges = {(min(u, w), max(u, w)) for u in adj for w in adj[u]}
    return Graph.from_edges(edges, adj)


def is_kuratowski_subdivision(g: Graph, obs: Graph) -> bool:
    """True if ``obs`` is a subgraph of ``g`` homeomorphic to K5 or K3,3."""
    if any(not g.has_edge(u, v) for u, v in obs.edges):
        return False
    core = smooth(obs)
    return is_isomorphic(core, complete(5)) or is_isomorphic(core, complete_bipartite(3, 3))
