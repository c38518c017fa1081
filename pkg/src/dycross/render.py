"""Straight-line layout of a drawing's planarization and SVG export.

Coordinates are for rendering only; crossing counts always come from the
combinatorial data.
"""

from __future__ import annotations

from collections import Counter

import networkx as nx
from networkx.algorithms.planar_drawing import combinatorial_embedding_to_pos

from .drawing import Drawing

Point = tuple[float, float]


def _embedding(d: Drawing):
    """networkx PlanarEmbedding of the planarization; parallel segments get a midpoint node."""
    ends = {s: d.segment_ends(s) for s in d.segments()}
    mult = Counter(frozenset(v) for v in ends.values())
    sub = {s for s, (a, b) in ends.items() if mult[frozenset((a, b))] > 1}

    def far(node, s):
        if s in sub:
            return ("mid", s)
        a, b = ends[s]
        return b if a == node else a

    emb = nx.PlanarEmbedding()
    for node, rot in d.rotation.items():
        emb.add_node(node)
        prev = None
        for s in rot:
            emb.add_half_edge(node, far(node, s), cw=prev)
            prev = far(node, s)
    for s in sorted(sub):
        a, b = ends[s]
        m = ("mid", s)
        emb.add_half_edge(m, a)
        emb.add_half_edge(m, b, cw=a)
    emb.check_structure()
    return emb, sub


def layout(d: Drawing) -> tuple[dict, list[tuple[object, object]]]:
    """Positions for every planarization node and the straight pieces to draw.

    Returns ``(pos, pieces)``; nodes are real vertices, crossing nodes ``~i``
    and, for parallel segments only, midpoint nodes ``("mid", segment)``.
    """
    emb, _ = _embedding(d)
    if emb.number_of_nodes() < 3:
        pos = {n: (float(i), 0.0) for i, n in enumerate(emb.nodes)}
    else:
        pos = {n: (float(x), float(y)) for n, (x, y) in combinatorial_embedding_to_pos(emb).items()}
    pieces = [(a, b) for a, b in emb.to_undirected(reciprocal=True).edges]
    return pos, pieces


def _orient(p, q, r) -> float:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def segments_intersect(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """Closed-segment intersection test."""
    d1, d2 = _orient(q1, q2, p1), _orient(q1, q2, p2)
    d3, d4 = _orient(p1, p2, q1), _orient(p1, p2, q2)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        return True

    def on(p, q, r):
        return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])

    return ((d1 == 0 and on(q1, q2, p1)) or (d2 == 0 and on(q1, q2, p2))
            or (d3 == 0 and on(p1, p2, q1)) or (d4 == 0 and on(p1, p2, q2)))


def proper_crossings(pos: dict, pieces) -> list:
    """Pairs of pieces that meet anywhere other than a shared endpoint."""
    bad = []
    for i, (a, b) in enumerate(pieces):
        for c, e in pieces[i + 1:]:
            if {a, b} & {c, e}:
                continue
            if segments_intersect(pos[a], pos[b], pos[c], pos[e]):
                bad.append(((a, b), (c, e)))
    return bad


def to_svg(d: Drawing, size: int = 480, radius: float = 9.0) -> str:
    pos, pieces = layout(d)
    xs = [p[0] for p in pos.values()] or [0.0]
    ys = [p[1] for p in pos.values()] or [0.0]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    pad = 2 * radius
    scale = (size - 2 * pad) / span

    def xy(n):
        x, y = pos[n]
        return pad + (x - min(xs)) * scale, size - pad - (y - min(ys)) * scale

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">',
           '<g stroke="black" stroke-width="1.5" fill="none">']
    for a, b in pieces:
        (x1, y1), (x2, y2) = xy(a), xy(b)
        out.append(f'<path d="M {x1:.2f} {y1:.2f} L {x2:.2f} {y2:.2f}"/>')
    out.append("</g>")
    for v in d.base.vertices:
        x, y = xy(v)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{radius}" fill="white" stroke="black"/>')
        out.append(f'<text x="{x:.2f}" y="{y + 3.5:.2f}" font-size="10" text-anchor="middle">'
                   f'{_escape(d.base.label(v))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
