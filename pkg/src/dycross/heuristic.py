"""Planarization heuristic for upper bounds.

Grow a planar subgraph (spanning forest first, then every edge that keeps it
planar), embed it, then insert the remaining edges one at a time along
fewest-crossing routes in the dual of the current planarization. Each pass
ends with remove-and-reinsert sweeps until no edge can be rerouted more
cheaply. All insertions keep the drawing good.
"""

from __future__ import annotations

import random
import time

import networkx as nx

from .drawing import Drawing
from .graph import Graph
from .pmap import PMap, embed_planar


def _spanning_forest(g: Graph, rng: random.Random) -> list[tuple[int, int]]:
    seen: set[int] = set()
    out = []
    roots = list(g.vertices)
    rng.shuffle(roots)
    for r in roots:
        if r in seen:
            continue
        seen.add(r)
        stack = [r]
        while stack:
            x = stack.pop(rng.randrange(len(stack)))
            nbrs = sorted(g.neighbors(x))
            rng.shuffle(nbrs)
            for y in nbrs:
                if y not in seen:
                    seen.add(y)
                    out.append((min(x, y), max(x, y)))
                    stack.append(y)
    return out


def planar_subgraph(g: Graph, rng: random.Random) -> list[tuple[int, int]]:
    """Edges of a maximal planar subgraph grown in random order."""
    kept = _spanning_forest(g, rng)
    rest = [e for e in g.edges if e not in set(kept)]
    rng.shuffle(rest)
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(kept)
    for e in rest:
        h.add_edge(*e)
        if nx.check_planarity(h)[0]:
            kept.append(e)
        else:
            h.remove_edge(*e)
    return kept


def one_pass(g: Graph, rng: random.Random) -> PMap | None:
    kept = planar_subgraph(g, rng)
    nodes = list(g.vertices)
    rng.shuffle(nodes)
    rot = embed_planar(g.vertices, kept, seed_order=nodes)
    pm = PMap(g)
    pm.rot.update(rot)
    pm.chains = {e: [e[0], e[1]] for e in kept}
    rest = [e for e in g.edges if e not in pm.chains]
    rng.shuffle(rest)
    for e in rest:
        route = pm.insertion_path(*e)
        if route is None:
            return None
        pm.insert_edge(e, route)
    improve(pm, rng)
    return pm


def improve(pm: PMap, rng: random.Random) -> None:
    while True:
        edges = [e for e in pm.chains if pm.edge_crossings(e) > 0]
        rng.shuffle(edges)
        if not any(pm.reroute(e) for e in edges):
            return


def heuristic_drawing(g: Graph, restarts: int = 50, seed: int = 1, deadline: float | None = None,
                      target: int = 0) -> Drawing:
    """Best good drawing found over ``restarts`` randomized passes.

    Stops early once a drawing with at most ``target`` crossings is found.
    """
    rng = random.Random(seed)
    best = None
    for _ in range(max(1, restarts)):
        pm = one_pass(g, random.Random(rng.random()))
        if pm is not None and (best is None or pm.crossing_count < best.crossing_count):
            best = pm
        if best is not None and best.crossing_count <= target:
            break
        if deadline is not None and best is not None and time.monotonic() > deadline:
            break
    if best is None:
        raise RuntimeError("heuristic failed to draw the graph")
    return best.to_drawing()
