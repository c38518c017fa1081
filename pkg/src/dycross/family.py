"""Closure of a graph under Delta-Y and Y-Delta moves, and the Petersen family roster."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .graph import Graph, MoveStep, complete, delta_y, y_delta
from .iso import canonical_form, invariants


class BudgetExceeded(RuntimeError):
    pass


@dataclass
class Closure:
    members: dict[bytes, Graph]
    # (source form, step, target form) for every legal move between members
    moves: list[tuple[bytes, MoveStep, bytes]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.members)

    def graphs(self) -> list[Graph]:
        return sorted(self.members.values(), key=lambda g: (g.n, -g.m, canonical_form(g)))


def legal_moves(g: Graph):
    for t in g.triangles():
        yield delta_y(g, t)
    for v in g.vertices:
        if g.degree(v) == 3:
            yield y_delta(g, v)


def move_closure(g: Graph, max_members: int = 1000) -> Closure:
    """Breadth-first closure of ``g`` under all Delta-Y and Y-Delta moves, up to isomorphism."""
    if max_members < 1:
        raise ValueError("max_members must be positive")
    start = canonical_form(g)
    out = Closure({start: g})
    queue = deque([g])
    while queue:
        cur = queue.popleft()
        cur_form = canonical_form(cur)
        for h, step in legal_moves(cur):
            form = canonical_form(h)
            if form not in out.members:
                if len(out.members) >= max_members:
                    raise BudgetExceeded(f"closure exceeds {max_members} members")
                out.members[form] = h
                queue.append(h)
            out.moves.append((cur_form, step, form))
    return out


@lru_cache(maxsize=1)
def _family() -> dict[str, Graph]:
    members = move_closure(complete(6), max_members=20).graphs()
    by_n: dict[int, list[Graph]] = {}
    for h in members:
        by_n.setdefault(h.n, []).append(h)
    if sorted(by_n) != [6, 7, 8, 9, 10] or [len(by_n[k]) for k in (7, 8)] != [2, 2]:
        raise RuntimeError("unexpected Petersen family roster")
    k6 = by_n[6][0]
    # Q7 is the single Delta-Y image of K6; P7 is the other 7-vertex member.
    q7_form = canonical_form(delta_y(k6, k6.triangles()[0])[0])
    q7 = next(h for h in by_n[7] if canonical_form(h) == q7_form)
    p7 = next(h for h in by_n[7] if h is not q7)
    q8 = next(h for h in by_n[8] if invariants(h).bipartite)
    p8 = next(h for h in by_n[8] if h is not q8)
    return {"K6": k6, "Q7": q7, "P7": p7, "Q8": q8, "P8": p8, "P9": by_n[9][0], "P10": by_n[10][0]}


def petersen_family() -> dict[str, Graph]:
    """The seven members reachable from K6, keyed by conventional name."""
    return dict(_family())
