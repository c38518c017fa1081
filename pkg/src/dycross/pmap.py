"""Mutable planarized map used for drawing edits.

Nodes are real vertices (ints >= 0) and crossing vertices (negative ints).
For good drawings the planarization is a simple graph, so the rotation at a
node is stored as a cyclic list of neighbouring nodes.
"""

from __future__ import annotations

from collections import deque
from typing import TYPE_CHECKING

from .graph import Edge, Graph

if TYPE_CHECKING:
    from .drawing import Drawing


class MapError(ValueError):
    pass


class PMap:
    def __init__(self, graph: Graph):
        self.graph = graph
        self.chains: dict[Edge, list[int]] = {}
        self.rot: dict[int, list[int]] = {v: [] for v in graph.vertices}
        self.xedges: dict[int, tuple[Edge, Edge]] = {}
        self._next_x = -1

    def new_crossing(self) -> int:
        x = self._next_x
        self._next_x -= 1
        return x

    def copy(self) -> "PMap":
        other = PMap.__new__(PMap)
        other.graph = self.graph
        other.chains = {e: list(c) for e, c in self.chains.items()}
        other.rot = {v: list(r) for v, r in self.rot.items()}
        other.xedges = dict(self.xedges)
        other._next_x = self._next_x
        return other

    @property
    def crossing_count(self) -> int:
        return len(self.xedges)

    def chain_from(self, e: Edge, start: int) -> list[int]:
        c = self.chains[e]
        return c if c[0] == start else c[::-1]

    def edge_crossings(self, e: Edge) -> int:
        return len(self.chains[e]) - 2

    # conversion -------------------------------------------------------------

    @classmethod
    def from_rotation(cls, graph: Graph, chains: dict[Edge, list[int]], rot: dict[int, list[int]]) -> "PMap":
        pm = cls(graph)
        pm.chains = {e: list(c) for e, c in chains.items()}
        pm.rot.update({v: list(r) for v, r in rot.items()})
        for e, c in pm.chains.items():
            for x in c[1:-1]:
                pm.xedges.setdefault(x, ())
                pm.xedges[x] = pm.xedges[x] + (e,)
        for x, es in pm.xedges.items():
            if len(es) != 2:
                raise MapError(f"crossing node {x} lies on {len(es)} edges")
        if pm.xedges:
            pm._next_x = min(pm.xedges) - 1
        return pm

    @classmethod
    def from_drawing(cls, d: "Drawing") -> "PMap":
        g = d.base
        node_of = {}
        chains = {}
        for eid, e in enumerate(g.edges):
            chain = [e[0]] + [~i for i in d.order[eid]] + [e[1]]
            chains[e] = chain
            for j in range(len(chain) - 1):
                node_of[(eid, j)] = (chain[j], chain[j + 1])
        rot = {}
        for node, darts in d.rotation.items():
            nbrs = []
            for s in darts:
                a, b = node_of[s]
                nbrs.append(b if a == node else a)
            if len(set(nbrs)) != len(nbrs):
                raise MapError("planarization is not simple (drawing is not good)")
            rot[node] = nbrs
        return cls.from_rotation(g, chains, rot)

    def to_drawing(self) -> "Drawing":
        from .drawing import Drawing

        g = self.graph
        index: dict[int, int] = {}
        crossings: list[tuple[int, int]] = []
        order = []
        seg_of: dict[tuple[int, int], tuple[int, int]] = {}
        for eid, e in enumerate(g.edges):
            chain = self.chains[e]
            if chain[0] != e[0]:
                chain = chain[::-1]
            for x in chain[1:-1]:
                if x not in index:
                    index[x] = len(crossings)
                    a, b = (g.edge_id(*f) for f in self.xedges[x])
                    crossings.append((min(a, b), max(a, b)))
            order.append(tuple(index[x] for x in chain[1:-1]))
            for j in range(len(chain) - 1):
                seg_of[(chain[j], chain[j + 1])] = seg_of[(chain[j + 1], chain[j])] = (eid, j)

        def key(node):
            return node if node >= 0 else ~index[node]

        rotation = {key(n): tuple(seg_of[(n, w)] for w in nbrs) for n, nbrs in self.rot.items()}
        return Drawing(g, tuple(crossings), tuple(order), rotation)

    # faces -------------------------------------------------------------------

    def succ(self, b: int, a: int) -> int:
        r = self.rot[b]
        return r[(r.index(a) + 1) % len(r)]

    def faces(self) -> tuple[list[list[tuple[int, int]]], dict[tuple[int, int], int]]:
        face_of: dict[tuple[int, int], int] = {}
        faces = []
        for a, nbrs in self.rot.items():
            for b in nbrs:
                if (a, b) in face_of:
                    continue
                f = len(faces)
                cyc = []
                dart = (a, b)
                while dart not in face_of:
                    face_of[dart] = f
                    cyc.append(dart)
                    x, y = dart
                    dart = (y, self.succ(y, x))
                faces.append(cyc)
        return faces, face_of

    # editing -------------------------------------------------------------------

    def _smooth(self, x: int, keep: Edge) -> None:
        """Delete crossing node ``x`` from edge ``keep``'s chain, joining its two neighbours."""
        chain = self.chains[keep]
        i = chain.index(x)
        p, q = chain[i - 1], chain[i + 1]
        del chain[i]
        self.rot[p][self.rot[p].index(x)] = q
        self.rot[q][self.rot[q].index(x)] = p
        del self.rot[x]
        del self.xedges[x]

    def is_transversal(self, x: int) -> bool:
        e, _ = self.xedges[x]
        c = self.chains[e]
        i = c.index(x)
        r = self.rot[x]
        return abs(r.index(c[i - 1]) - r.index(c[i + 1])) == 2

    def uncross(self, x: int) -> None:
        """Remove a touching (non-transversal) crossing by pulling the two edges apart."""
        for e in self.xedges[x]:
            c = self.chains[e]
            i = c.index(x)
            p, q = c[i - 1], c[i + 1]
            del c[i]
            self.rot[p][self.rot[p].index(x)] = q
            self.rot[q][self.rot[q].index(x)] = p
        del self.rot[x]
        del self.xedges[x]

    def remove_edge(self, e: Edge) -> None:
        chain = self.chains.pop(e)
        u, v = chain[0], chain[-1]
        self.rot[u].remove(chain[1])
        self.rot[v].remove(chain[-2])
        for x in chain[1:-1]:
            f = next(f for f in self.xedges[x] if f != e)
            self._smooth(x, f)

    def insertion_path(self, u: int, v: int):
        """Fewest-crossing route for a new edge uv through the current map.

        Returns ``(start_dart, crossed_darts, end_dart)`` or None when no good
        route exists. Crossed segments must belong to edges independent of uv
        and no original edge is crossed twice.
        """
        faces, face_of = self.faces()
        seg_edge = {}
        for e, c in self.chains.items():
            for j in range(len(c) - 1):
                seg_edge[(c[j], c[j + 1])] = seg_edge[(c[j + 1], c[j])] = e
        start = {}
        for a in self.rot[u]:
            start.setdefault(face_of[(a, u)], (a, u))
        end = {}
        for a in self.rot[v]:
            end.setdefault(face_of[(a, v)], (a, v))
        if not self.rot[u] or not self.rot[v]:
            return None

        def allowed(dart):
            e = seg_edge[dart]
            return u not in e and v not in e

        # plain BFS over faces first
        prev = {f: None for f in start}
        q = deque(start)
        hit = None
        while q:
            f = q.popleft()
            if f in end:
                hit = f
                break
            for dart in faces[f]:
                if not allowed(dart):
                    continue
                h = face_of[(dart[1], dart[0])]
                if h not in prev:
                    prev[h] = (f, dart)
                    q.append(h)
        if hit is None:
            return None
        path = []
        f = hit
        while prev[f] is not None:
            f0, dart = prev[f]
            path.append(dart)
            f = f0
        path.reverse()
        crossed = [seg_edge[d] for d in path]
        if len(set(crossed)) == len(crossed):
            return start[f], path, end[hit]
        return self._constrained_path(faces, face_of, seg_edge, start, end, allowed)

    def _constrained_path(self, faces, face_of, seg_edge, start, end, allowed, max_states=200000):
        # breadth-first over (face, crossed-edge set) states
        q = deque((f, frozenset(), f, ()) for f in start)
        seen = {(f, frozenset()) for f in start}
        while q:
            f, used, f0, path = q.popleft()
            if f in end:
                return start[f0], list(path), end[f]
            for dart in faces[f]:
                if not allowed(dart):
                    continue
                e = seg_edge[dart]
                if e in used:
                    continue
                h = face_of[(dart[1], dart[0])]
                st = (h, used | {e})
                if st in seen:
                    continue
                seen.add(st)
                if len(seen) > max_states:
                    return None
                q.append((h, st[1], f0, path + (dart,)))
        return None

    def insert_edge(self, e: Edge, route) -> None:
        """Add edge ``e`` along a route produced by :meth:`insertion_path`."""
        u, v = e
        (a0, _), path, (ar, _) = route
        xs = [self.new_crossing() for _ in path]
        seq = [u] + xs + [v]
        for i, (p, q) in enumerate(path):
            x = xs[i]
            f = next(f for f, c in self.chains.items() if _adjacent_in(c, p, q))
            chain = self.chains[f]
            k = _adjacent_in(chain, p, q)
            chain.insert(k, x)
            self.rot[p][self.rot[p].index(q)] = x
            self.rot[q][self.rot[q].index(p)] = x
            self.rot[x] = [p, seq[i], q, seq[i + 2]]
            self.xedges[x] = (e, f)
        ru = self.rot[u]
        ru.insert(ru.index(a0) + 1, seq[1])
        rv = self.rot[v]
        rv.insert(rv.index(ar) + 1, seq[-2])
        self.chains[e] = seq

    def reroute(self, e: Edge) -> bool:
        """Remove ``e`` and re-insert it along a best route. True if crossings dropped."""
        before = self.edge_crossings(e)
        saved = self.copy()
        self.remove_edge(e)
        route = self.insertion_path(*e)
        if route is None or len(route[1]) > before:
            self.__dict__.update(saved.__dict__)
            return False
        self.insert_edge(e, route)
        return len(route[1]) < before


def _adjacent_in(chain: list[int], p: int, q: int) -> int:
    """1-based insertion index if p, q are consecutive in chain, else 0."""
    for i in range(len(chain) - 1):
        if (chain[i], chain[i + 1]) in ((p, q), (q, p)):
            return i + 1
    return 0


def embed_planar(graph_nodes, graph_edges, seed_order=None):
    """Rotation system (node -> cyclic neighbour list) of a planar graph, or None."""
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(seed_order or graph_nodes)
    h.add_edges_from(graph_edges)
    ok, emb = nx.check_planarity(h)
    if not ok:
        return None
    return {n: list(emb.neighbors_cw_order(n)) for n in h.nodes}
