"""Drawings of graphs on the sphere, stored as planarized combinatorial maps.

A drawing keeps its base graph, the list of crossings (pairs of edge ids),
the order in which each edge meets its crossings (walking from its lower
endpoint) and a rotation system on the planarization. Planarization nodes
are real vertices ``v >= 0`` and crossing vertices ``~i`` for crossing ``i``.
A segment ``(e, j)`` is the j-th piece of edge ``e`` between consecutive
nodes of its chain; rotations list segments in cyclic order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .graph import Graph, GraphError, Triangle, delta_y
from .graph import dumps as graph_dumps
from .graph import loads as graph_loads
from .pmap import PMap

Segment = tuple[int, int]


class DrawingError(ValueError):
    pass


@dataclass(frozen=True)
class Drawing:
    base: Graph
    crossings: tuple[tuple[int, int], ...]
    order: tuple[tuple[int, ...], ...]
    rotation: Mapping[int, tuple[Segment, ...]] = field(compare=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(c) for c in self.crossings))
        object.__setattr__(self, "order", tuple(tuple(o) for o in self.order))
        object.__setattr__(self, "rotation", {k: tuple(tuple(s) for s in v) for k, v in self.rotation.items()})
        _validate(self)

    # planarization ------------------------------------------------------

    def chain(self, eid: int) -> list[int]:
        u, v = self.base.edges[eid]
        return [u] + [~i for i in self.order[eid]] + [v]

    def segment_ends(self, seg: Segment) -> tuple[int, int]:
        c = self.chain(seg[0])
        return c[seg[1]], c[seg[1] + 1]

    def nodes(self) -> list[int]:
        return list(self.base.vertices) + [~i for i in range(len(self.crossings))]

    def segments(self) -> list[Segment]:
        return [(e, j) for e in range(self.base.m) for j in range(len(self.order[e]) + 1)]

    def faces(self) -> list[list[tuple[int, Segment]]]:
        """Face boundaries as lists of darts ``(tail node, segment)``."""
        return _trace_faces(self)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def __repr__(self) -> str:
        return f"Drawing({self.base!r}, crossings={self.crossing_count})"


def _trace_faces(d: Drawing) -> list[list[tuple[int, Segment]]]:
    ends = {s: d.segment_ends(s) for s in d.segments()}
    pos = {(n, s): i for n, rot in d.rotation.items() for i, s in enumerate(rot)}
    seen = set()
    faces = []
    for n, rot in d.rotation.items():
        for s in rot:
            if (n, s) in seen:
                continue
            face = []
            dart = (n, s)
            while dart not in seen:
                seen.add(dart)
                face.append(dart)
                a, b = ends[dart[1]]
                w = b if dart[0] == a else a
                r = d.rotation[w]
                dart = (w, r[(pos[(w, dart[1])] + 1) % len(r)])
            faces.append(face)
    return faces


def _validate(d: Drawing) -> None:
    g = d.base
    if len(d.order) != g.m:
        raise DrawingError(f"order has {len(d.order)} entries for {g.m} edges")
    seen = Counter()
    for i, (a, b) in enumerate(d.crossings):
        if not (0 <= a < g.m and 0 <= b < g.m):
            raise DrawingError(f"crossing {i} references an unknown edge")
        if a == b:
            raise DrawingError(f"crossing {i} pairs edge {a} with itself")
    for e, seq in enumerate(d.order):
        for i in seq:
            if not 0 <= i < len(d.crossings) or e not in d.crossings[i]:
                raise DrawingError(f"edge {e} lists crossing {i} it is not part of")
            seen[i] += 1
    for i in range(len(d.crossings)):
        if seen[i] != 2:
            raise DrawingError(f"crossing {i} appears {seen[i]} times in edge orders, expected 2")
    nodes = set(d.nodes())
    if set(d.rotation) != nodes:
        raise DrawingError("rotations must cover exactly the real and crossing vertices")
    incident: dict[int, list[Segment]] = {n: [] for n in nodes}
    for s in d.segments():
        a, b = d.segment_ends(s)
        if a == b:
            raise DrawingError(f"segment {s} is a loop")
        incident[a].append(s)
        incident[b].append(s)
    for n in nodes:
        rot = d.rotation[n]
        if sorted(rot) != sorted(incident[n]):
            raise DrawingError(f"rotation at node {n} does not match its incident segments")
        if n < 0:
            i = ~n
            kinds = [s[0] for s in rot]
            ea, eb = d.crossings[i]
            if sorted(kinds) != sorted([ea, ea, eb, eb]) or kinds[0] == kinds[1] or kinds[1] == kinds[2]:
                raise DrawingError(f"crossing {i} is not transversal")
    # Euler characteristic per connected component of the planarization
    parent = {n: n for n in nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in d.segments():
        a, b = d.segment_ends(s)
        parent[find(a)] = find(b)
    chi = Counter()
    for n in nodes:
        chi[find(n)] += 1
    for s in d.segments():
        chi[find(d.segment_ends(s)[0])] -= 1
    for face in _trace_faces(d):
        chi[find(face[0][0])] += 1
    for n in nodes:
        if not d.rotation[n]:
            chi[find(n)] += 1  # an isolated vertex bounds one face
    bad = [r for r, c in chi.items() if c != 2]
    if bad:
        raise DrawingError(f"map is not spherical (Euler characteristic {chi[bad[0]]})")


def build_drawing(g: Graph, crossings: Iterable[tuple[int, int]], order: Iterable[Iterable[int]],
                  rotation: Mapping[int, Iterable[Segment]]) -> Drawing:
    """Validated constructor; edges may be given by id or as vertex pairs."""

    def eid(e):
        return e if isinstance(e, int) else g.edge_id(*e)

    xs = []
    for a, b in crossings:
        a, b = eid(a), eid(b)
        xs.append((min(a, b), max(a, b)))
    rot = {n: tuple((eid(e), j) for e, j in segs) for n, segs in rotation.items()}
    return Drawing(g, tuple(xs), tuple(tuple(o) for o in order), rot)


def planar_drawing(g: Graph, rotation: Mapping[int, Iterable[int]]) -> Drawing:
    """Crossing-free drawing from a neighbour-order rotation system."""
    rot = {v: tuple((g.edge_id(v, w), 0) for w in nbrs) for v, nbrs in rotation.items()}
    for v in g.vertices:
        rot.setdefault(v, ())
    return Drawing(g, (), tuple(() for _ in g.edges), rot)


# counting -------------------------------------------------------------------

def crossing_count(d: Drawing) -> int:
    return d.crossing_count


def _eid(d: Drawing, e) -> int:
    if isinstance(e, int):
        if not 0 <= e < d.base.m:
            raise GraphError(f"unknown edge id {e}")
        return e
    return d.base.edge_id(*e)


def edge_crossings(d: Drawing, e) -> int:
    return len(d.order[_eid(d, e)])


def pair_crossings(d: Drawing, s: Iterable, t: Iterable) -> int:
    """Crossings with one edge in ``s`` and the other in ``t``."""
    s = {_eid(d, e) for e in s}
    t = {_eid(d, e) for e in t}
    if s & t:
        raise ValueError("edge sets must be disjoint")
    return sum(1 for a, b in d.crossings if (a in s and b in t) or (a in t and b in s))


# goodness -------------------------------------------------------------------

@dataclass(frozen=True)
class GoodnessReport:
    good: bool
    violations: tuple[tuple[str, tuple[int, ...], tuple[int, ...]], ...]


def goodness(d: Drawing) -> GoodnessReport:
    g = d.base
    out = []
    by_pair: dict[tuple[int, int], list[int]] = {}
    for i, (a, b) in enumerate(d.crossings):
        if a == b:
            out.append(("G1", (a,), (i,)))
            continue
        if g.adjacent_edges(a, b):
            out.append(("G2", (a, b), (i,)))
        by_pair.setdefault((a, b), []).append(i)
    for pair, idx in by_pair.items():
        if len(idx) > 1:
            out.append(("G3", pair, tuple(idx)))
    return GoodnessReport(not out, tuple(out))


def is_good(d: Drawing) -> bool:
    return goodness(d).good


# trigons ---------------------------------------------------------------------

def trigons(d: Drawing) -> list[Triangle]:
    return d.base.triangles()


@dataclass(frozen=True)
class TrigonProfile:
    trigon: Triangle
    c: tuple[int, int, int]
    m: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]
    d: tuple[int, int, int]
    c_star: int


def _dart_at(d: Drawing, v: int, w: int) -> Segment:
    """Segment of edge vw that touches v."""
    e = d.base.edge_id(v, w)
    return (e, 0) if d.base.edges[e][0] == v else (e, len(d.order[e]))


def _arcs(d: Drawing, vi: int, vj: int, vk: int) -> tuple[list[Segment], list[Segment]]:
    """Split the rotation at vi by the trigon darts toward vj and vk.

    Side 1 starts right after the dart toward vj, side 2 right after the dart toward vk.
    """
    rot = list(d.rotation[vi])
    sj, sk = _dart_at(d, vi, vj), _dart_at(d, vi, vk)
    i = rot.index(sj)
    rot = rot[i:] + rot[:i]
    k = rot.index(sk)
    return rot[1:k], rot[k + 1:]


def _require_good(d: Drawing, t: Triangle) -> None:
    t.check(d.base)
    if not is_good(d):
        raise DrawingError("trigon bookkeeping needs a good drawing")


def trigon_profile(d: Drawing, t: Triangle) -> TrigonProfile:
    _require_good(d, t)
    vs = tuple(t)
    g = d.base
    tri_edges = set()
    c, m = [], []
    for i in range(3):
        vi, vj, vk = vs[i], vs[(i + 1) % 3], vs[(i + 2) % 3]
        opp = g.edge_id(vj, vk)
        tri_edges.add(opp)
        c.append(len(d.order[opp]))
        a1, a2 = _arcs(d, vi, vj, vk)
        m.append((len(a1), len(a2)))
    c_star = sum(1 for a, b in d.crossings if a not in tri_edges and b not in tri_edges)
    return TrigonProfile(t, tuple(c), tuple(m), tuple(min(p) for p in m), c_star)


def is_cr_reducible(d: Drawing, t: Triangle) -> tuple[bool, int | None]:
    """Whether some trigon vertex has more crossings opposite it than its smaller side count.

    Returns the smallest such 1-based index, or None.
    """
    p = trigon_profile(d, t)
    for i in range(3):
        if p.c[i] > p.d[i]:
            return True, i + 1
    return False, None


# Delta-Y surgery --------------------------------------------------------------

def surgery_count(p: TrigonProfile, apex: int, side: int) -> int:
    """Crossings left after surgery at ``apex`` (1-based) on ``side``, from the profile alone."""
    i = apex - 1
    return p.m[i][side - 1] + p.c[(i + 1) % 3] + p.c[(i + 2) % 3] + p.c_star


def delta_y_surgery(d: Drawing, t: Triangle, apex: int, side: int) -> Drawing:
    """Redraw ``d`` as a drawing of the Delta-Y image of triangle ``t``.

    The edge opposite the apex is deleted. The new vertex sits next to the
    apex inside the chosen wedge; its strands to the other two trigon
    vertices follow the old trigon edges, and one of them sweeps across the
    wedge, crossing each apex edge there once.
    """
    _require_good(d, t)
    if apex not in (1, 2, 3) or side not in (1, 2):
        raise ValueError("apex must be 1..3 and side 1 or 2")
    vs = tuple(t)
    vi, vj, vk = vs[apex - 1], vs[apex % 3], vs[(apex + 1) % 3]
    h, step = delta_y(d.base, t)
    v = step.new_vertex
    pm = PMap.from_drawing(d)
    pm.remove_edge(_ekey(vj, vk))
    first, last = (vj, vk) if side == 1 else (vk, vj)
    c_first = pm.chain_from(_ekey(vi, first), vi)
    c_last = pm.chain_from(_ekey(vi, last), vi)
    n_first, n_last = c_first[1], c_last[1]
    rot = pm.rot[vi]
    i = rot.index(n_first)
    rot = rot[i:] + rot[:i]
    k = rot.index(n_last)
    wedge = rot[1:k]
    # edges of the apex crossed by the sweeping strand, and their next nodes
    wedge_edges = []
    for w in wedge:
        e = next(e for e in pm.chains if vi in e and _starts(pm.chains[e], vi, w))
        wedge_edges.append(e)
    ys = [pm.new_crossing() for _ in wedge]
    sweep = [v] + ys + [n_last]

    new = PMap(h)
    new.chains = {e: c for e, c in pm.chains.items() if e not in (_ekey(vi, vj), _ekey(vi, vk))}
    new.rot = pm.rot
    new.xedges = {}
    new._next_x = pm._next_x
    new.chains[_ekey(v, first)] = [v] + c_first[1:]
    new.chains[_ekey(v, last)] = [v] + ys + c_last[1:]
    new.chains[_ekey(v, vi)] = [v, vi]
    for y, e, w in zip(ys, wedge_edges, wedge):
        c = new.chains[e]
        if c[0] == vi:
            c.insert(1, y)
        else:
            c.insert(len(c) - 1, y)
    # rotations
    for idx, (y, w) in enumerate(zip(ys, wedge)):
        new.rot[w][new.rot[w].index(vi)] = y
        new.rot[y] = [w, sweep[idx + 2], vi, sweep[idx]]
    new.rot[n_first][new.rot[n_first].index(vi)] = v
    new.rot[n_last][new.rot[n_last].index(vi)] = sweep[-2]
    new.rot[v] = [sweep[1], vi, n_first]
    swap = {n_first: v, **dict(zip(wedge, ys))}
    new.rot[vi] = [swap.get(w, w) for w in new.rot[vi] if w != n_last]
    for e, c in new.chains.items():
        for x in c[1:-1]:
            new.xedges[x] = new.xedges.get(x, ()) + (e,)
    return new.to_drawing()


def _ekey(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def _starts(chain: list[int], a: int, b: int) -> bool:
    return (chain[0] == a and chain[1] == b) or (chain[-1] == a and chain[-2] == b)


def best_surgery(d: Drawing, t: Triangle) -> tuple[Drawing, int]:
    """Best of the six apex/side surgeries on ``t``."""
    p = trigon_profile(d, t)
    apex, side = min(((a, s) for a in (1, 2, 3) for s in (1, 2)), key=lambda x: surgery_count(p, *x))
    out = delta_y_surgery(d, t, apex, side)
    return out, out.crossing_count


# text format -------------------------------------------------------------------

def _node_token(n: int) -> str:
    return str(n) if n >= 0 else f"x{~n}"


def dumps(d: Drawing) -> str:
    lines = ["drawing v1", "graph", graph_dumps(d.base).rstrip("\n")]
    lines += [f"crossing {i} {a} {b}" for i, (a, b) in enumerate(d.crossings)]
    lines += [f"order {e} " + " ".join(map(str, o)) if o else f"order {e}" for e, o in enumerate(d.order)]
    for n in sorted(d.rotation, key=lambda n: (n < 0, abs(n))):
        lines.append(f"rot {_node_token(n)} " + " ".join(f"{e}.{j}" for e, j in d.rotation[n]))
    return "\n".join(line.rstrip() for line in lines) + "\n"


def loads(text: str) -> Drawing:
    lines = text.splitlines()
    if not lines or lines[0].strip() != "drawing v1":
        raise DrawingError("missing 'drawing v1' header")
    graph_lines, crossings, order, rot = [], {}, {}, {}
    for raw in lines[1:]:
        parts = raw.split()
        if not parts or parts[0] == "graph":
            continue
        try:
            if parts[0] == "crossing":
                crossings[int(parts[1])] = (int(parts[2]), int(parts[3]))
            elif parts[0] == "order":
                order[int(parts[1])] = tuple(int(x) for x in parts[2:])
            elif parts[0] == "rot":
                tok = parts[1]
                node = ~int(tok[1:]) if tok.startswith("x") else int(tok)
                rot[node] = tuple(tuple(int(y) for y in x.split(".")) for x in parts[2:])
            else:
                graph_lines.append(raw)
        except (ValueError, IndexError):
            raise DrawingError(f"cannot parse line {raw!r}") from None
    g = graph_loads("\n".join(graph_lines))
    if sorted(crossings) != list(range(len(crossings))):
        raise DrawingError("crossing indices must be 0..k-1")
    xs = tuple(crossings[i] for i in range(len(crossings)))
    od = tuple(order.get(e, ()) for e in range(g.m))
    return Drawing(g, xs, od, rot)
