"""Canonical labelling, isomorphism and cheap invariants for small graphs.

Canonical forms come from colour refinement plus an individualization search
over the refined cells, pruned by automorphisms discovered on the way.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .graph import Graph, GraphError, Triangle

ISO_SIZE_CAP = 16


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement; cell order is decided by label-free signatures only."""
    while True:
        where = {v: i for i, c in enumerate(cells) for v in c}
        out: list[list[int]] = []
        for i, cell in enumerate(cells):
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {}
            for v in cell:
                counts = [0] * len(cells)
                for w in g.neighbors(v):
                    counts[where[w]] += 1
                sig.setdefault(tuple(counts), []).append(v)
            out.extend(sig[k] for k in sorted(sig))
        if len(out) == len(cells):
            return out
        cells = out


def _code(g: Graph, order: list[int]) -> tuple:
    pos = {v: i for i, v in enumerate(order)}
    return tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in g.edges))


class _Orbits:
    def __init__(self, verts):
        self.parent = {v: v for v in verts}

    def find(self, v):
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


def canonical_order(g: Graph, cap: int = ISO_SIZE_CAP) -> tuple[list[int], tuple]:
    """Return a canonical vertex ordering of ``g`` and its edge code."""
    if g.n > cap:
        raise GraphError(f"graph has {g.n} vertices, isomorphism cap is {cap}")
    if g.n == 0:
        return [], ()
    best: list = [None, None]  # code, order
    first_leaf: dict = {}
    autos: list[dict[int, int]] = []

    def search(cells: list[list[int]], prefix: list[int]):
        cells = _refine(g, cells)
        if all(len(c) == 1 for c in cells):
            order = [c[0] for c in cells]
            code = _code(g, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            if code in first_leaf:
                ref = first_leaf[code]
                autos.append({a: b for a, b in zip(ref, order)})
            else:
                first_leaf[code] = order
            return
        idx = next(i for i, c in enumerate(cells) if len(c) > 1)
        tried: list[int] = []
        for v in cells[idx]:
            if tried:
                orb = _Orbits(g.vertices)
                for a in autos:
                    if all(a[p] == p for p in prefix):
                        for x, y in a.items():
                            orb.union(x, y)
                if any(orb.find(v) == orb.find(t) for t in tried):
                    continue
            tried.append(v)
            rest = [w for w in cells[idx] if w != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1:], prefix + [v])

    search([list(g.vertices)], [])
    return best[1], best[0]


def canonical_form(g: Graph, cap: int = ISO_SIZE_CAP) -> bytes:
    """Byte string equal for two graphs exactly when they are isomorphic."""
    _, code = canonical_order(g, cap)
    n = g.n
    bits = bytearray(math.ceil(n * (n - 1) / 2 / 8) or 0)
    for i, j in code:
        k = i * n - i * (i + 1) // 2 + (j - i - 1)
        bits[k // 8] |= 1 << (k % 8)
    return n.to_bytes(2, "big") + bytes(bits)


def is_isomorphic(g: Graph, h: Graph, cap: int = ISO_SIZE_CAP) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(map(g.degree, g.vertices)) != sorted(map(h.degree, h.vertices)):
        return False
    return canonical_form(g, cap) == canonical_form(h, cap)


def find_isomorphism(g: Graph, h: Graph, cap: int = ISO_SIZE_CAP) -> dict[int, int] | None:
    """A vertex bijection g -> h preserving edges, or None."""
    if not is_isomorphic(g, h, cap):
        return None
    og, _ = canonical_order(g, cap)
    oh, _ = canonical_order(h, cap)
    return dict(zip(og, oh))


@dataclass(frozen=True)
class Invariants:
    girth: float  # math.inf for forests
    degree_sequence: tuple[int, ...]
    bipartite: bool
    triangles: tuple[Triangle, ...]


def girth(g: Graph) -> float:
    best = math.inf
    for s in g.vertices:
        dist, parent = {s: 0}, {s: None}
        q = deque([s])
        while q:
            x = q.popleft()
            for y in g.neighbors(x):
                if y not in dist:
                    dist[y], parent[y] = dist[x] + 1, x
                    q.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def is_bipartite(g: Graph) -> bool:
    side: dict[int, int] = {}
    for s in g.vertices:
        if s in side:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in g.neighbors(x):
                if y not in side:
                    side[y] = 1 - side[x]
                    q.append(y)
                elif side[y] == side[x]:
                    return False
    return True


def invariants(g: Graph) -> Invariants:
    return Invariants(
        girth=girth(g),
        degree_sequence=tuple(sorted((g.degree(v) for v in g.vertices), reverse=True)),
        bipartite=is_bipartite(g),
        triangles=tuple(g.triangles()),
    )
