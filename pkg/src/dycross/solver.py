"""Crossing-number bounds, exact decision search and the brute-force oracle.

The decision procedure works on good drawings only: some minimal drawing is
good, so its crossings form a set of distinct pairs of independent edges.
``cr(G) <= k`` holds iff some such set of at most ``k`` pairs, together with
an order of the crossings along every edge, has a planar planarization.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import networkx as nx

from .drawing import Drawing, is_good, planar_drawing
from .graph import Graph
from .heuristic import heuristic_drawing
from .iso import girth
from .planarity import is_planar, to_nx
from .pmap import PMap

MAX_CROSSINGS_PER_EDGE = 6


@dataclass(frozen=True)
class Budget:
    """Search limits. ``time_limit`` is wall-clock seconds per decision call."""

    time_limit: float | None = 60.0
    node_limit: int | None = None
    seed: int = 1
    workers: int = 1
    restarts: int = 50

    def __post_init__(self):
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.workers < 1 or self.restarts < 1:
            raise ValueError("workers and restarts must be positive")


@dataclass
class CrBounds:
    lb: int
    ub: int
    status: str  # exact | bounded | timeout
    witness: Drawing
    lb_certificate: str
    elapsed: float
    nodes: int = 0
    log: list[str] = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.status == "exact"


@dataclass
class Decision:
    verdict: str  # yes | no | timeout
    witness: Drawing | None = None
    nodes: int = 0
    reason: str = ""  # "nodes" or "time" for timeouts


# reference formulas ---------------------------------------------------------

def zarankiewicz(p: int, q: int) -> tuple[int, bool]:
    """Conjectured cr(K_{p,q}) and whether it is proven for these parameters."""
    if p < 1 or q < 1:
        raise ValueError("p, q must be positive")
    value = (p // 2) * ((p - 1) // 2) * (q // 2) * ((q - 1) // 2)
    lo, hi = sorted((p, q))
    proven = lo <= 6 or (lo, hi) in {(7, 7), (7, 8), (7, 9)}
    return value, proven


def guy(n: int) -> tuple[int, bool]:
    """Conjectured cr(K_n) and whether it is proven (n <= 12)."""
    if n < 1:
        raise ValueError("n must be positive")
    value = (n // 2) * ((n - 1) // 2) * ((n - 2) // 2) * ((n - 3) // 2) // 4
    return value, n <= 12


# published values ------------------------------------------------------------

@dataclass(frozen=True)
class RegistryEntry:
    name: str
    value: int
    source: str
    note: str = ""


_REGISTRY = {
    "K6": (3, "published Petersen-family table"),
    "K7": (9, "published value, agrees with Guy's formula (proven for n <= 12)"),
    "Heawood": (3, "published value for the Heawood graph"),
    "Q7": (3, "published Petersen-family table"),
    "P7": (3, "published Petersen-family table"),
    "Q8": (3, "published Petersen-family table"),
    "P8": (2, "published Petersen-family table"),
    "P9": (2, "published Petersen-family table"),
    "P10": (2, "published Petersen-family table"),
    "Petersen": (2, "published Petersen-family table (P10)"),
    "G7_1": (8, "published value from an external computer search"),
    "Gstar": (8, "published value from an external computer search"),
}

_KNOTTED = {"K7", "G7_1", "Gstar", "Heawood"}


def registry(name: str) -> RegistryEntry:
    """Published crossing number; external ground truth, never fed into the solver."""
    try:
        value, src = _REGISTRY[name]
    except KeyError:
        raise KeyError(f"no published crossing number for {name!r}") from None
    note = "intrinsically knotted, so cr >= 3 from knot projections" if name in _KNOTTED else ""
    return RegistryEntry(name, value, src, note)


def registry_names() -> list[str]:
    return list(_REGISTRY)


# lower bounds ------------------------------------------------------------------

def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def complete_graph_lb(n: int) -> int:
    """Lower bound for cr(K_n) by Euler plus the vertex-deletion counting recursion."""
    lb = 0
    for j in range(5, n + 1):
        euler = j * (j - 1) // 2 - 3 * j + 6
        lb = max(euler, math.ceil(j * lb / (j - 4)))
    return lb


def kuratowski_packing(g: Graph) -> int:
    """Size of a greedily found family of edge-disjoint Kuratowski subgraphs."""
    h = to_nx(g)
    count = 0
    while True:
        ok, cert = nx.check_planarity(h, counterexample=True)
        if ok:
            return count
        count += 1
        h.remove_edges_from(list(cert.edges))


def lower_bounds(g: Graph) -> tuple[int, str]:
    n, m = g.n, g.m
    cands = []
    if n >= 3:
        cands.append((m - 3 * n + 6, "euler"))
    gi = girth(g)
    if math.isfinite(gi) and n >= 3:
        cap = max(n - 1, (gi * (n - 2)) // (gi - 2))
        cands.append((m - cap, "girth"))
    if _is_complete(g) and n >= 5:
        cands.append((complete_graph_lb(n), "counting"))
    cands.append((kuratowski_packing(g), "kuratowski-packing"))
    best = max(v for v, _ in cands)
    if best <= 0:
        return 0, "euler" if n >= 3 else "kuratowski-packing"
    return best, next(c for v, c in cands if v == best)


# upper bound ---------------------------------------------------------------------

def upper_bound(g: Graph, budget: Budget = Budget(), target: int = 0) -> Drawing:
    deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit
    return heuristic_drawing(g, restarts=budget.restarts, seed=budget.seed, deadline=deadline, target=target)


# planarizations --------------------------------------------------------------------

def independent_pairs(g: Graph) -> list[tuple[int, int]]:
    return [(a, b) for a, b in itertools.combinations(range(g.m), 2) if not g.adjacent_edges(a, b)]


def _orderings(g: Graph, chosen: list[tuple[int, int]]):
    """Every assignment of crossing orders along the multiply-crossed edges."""
    on_edge: dict[int, list[int]] = {}
    for i, (a, b) in enumerate(chosen):
        on_edge.setdefault(a, []).append(i)
        on_edge.setdefault(b, []).append(i)
    multi = [e for e, xs in on_edge.items() if len(xs) > 1]
    for perms in itertools.product(*(itertools.permutations(on_edge[e]) for e in multi)):
        order = {e: xs for e, xs in on_edge.items()}
        order.update(zip(multi, perms))
        yield order


def _planarization(g: Graph, order: dict[int, tuple[int, ...]]) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    for e, (u, v) in enumerate(g.edges):
        xs = order.get(e)
        if not xs:
            h.add_edge(u, v)
        else:
            nx.add_path(h, [u] + [~i for i in xs] + [v])
    return h


def _witness(g: Graph, chosen, order) -> Drawing:
    h = _planarization(g, order)
    ok, emb = nx.check_planarity(h)
    assert ok
    chains = {}
    for e, (u, v) in enumerate(g.edges):
        chains[(u, v)] = [u] + [~i for i in order.get(e, ())] + [v]
    rot = {n: list(emb.neighbors_cw_order(n)) for n in h.nodes}
    pm = PMap.from_rotation(g, chains, rot)
    for x in list(pm.xedges):
        if not pm.is_transversal(x):
            pm.uncross(x)
    return pm.to_drawing()


# decision search -------------------------------------------------------------------

class _Stop(Exception):
    def __init__(self, reason):
        self.reason = reason


class _Search:
    def __init__(self, g: Graph, k: int, test_from: int, node_limit, deadline):
        self.g, self.k, self.test_from = g, k, test_from
        self.node_limit, self.deadline = node_limit, deadline
        self.pairs = independent_pairs(g)
        suffix, acc = [frozenset()] * (len(self.pairs) + 1), set()
        for j in range(len(self.pairs) - 1, -1, -1):
            acc |= set(self.pairs[j])
            suffix[j] = frozenset(acc)
        self.suffix = suffix
        self.nodes = 0

    def _tick(self):
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _Stop("nodes")
        if self.deadline is not None and self.nodes % 32 == 0 and time.monotonic() > self.deadline:
            raise _Stop("time")

    def _test(self, chosen):
        for count, order in enumerate(_orderings(self.g, chosen), 1):
            if nx.check_planarity(_planarization(self.g, order))[0]:
                return chosen, order
            # one node may try many crossing orders, so watch the clock here too
            if self.deadline is not None and count % 64 == 0 and time.monotonic() > self.deadline:
                raise _Stop("time")
        return None

    def _hopeless(self, chosen, start) -> bool:
        # edges untouched by the chosen pairs and every later pair survive intact
        free = {e for p in chosen for e in p} | self.suffix[start]
        h = nx.Graph()
        h.add_nodes_from(self.g.vertices)
        h.add_edges_from(uv for e, uv in enumerate(self.g.edges) if e not in free)
        return not nx.check_planarity(h)[0]

    def dfs(self, chosen, start, load):
        self._tick()
        if len(chosen) >= self.test_from:
            hit = self._test(chosen)
            if hit:
                return hit
        if len(chosen) == self.k:
            return None
        if chosen and self._hopeless(chosen, start):
            return None
        for j in range(start, len(self.pairs)):
            a, b = self.pairs[j]
            if load.get(a, 0) >= MAX_CROSSINGS_PER_EDGE or load.get(b, 0) >= MAX_CROSSINGS_PER_EDGE:
                continue
            load[a] = load.get(a, 0) + 1
            load[b] = load.get(b, 0) + 1
            hit = self.dfs(chosen + [self.pairs[j]], j + 1, load)
            load[a] -= 1
            load[b] -= 1
            if hit:
                return hit
        return None

    def branch(self, j) -> Decision:
        a, b = self.pairs[j]
        try:
            hit = self.dfs([self.pairs[j]], j + 1, {a: 1, b: 1})
        except _Stop as stop:
            return Decision("timeout", nodes=self.nodes, reason=stop.reason)
        if hit:
            return Decision("yes", _witness(self.g, *hit), self.nodes)
        return Decision("no", nodes=self.nodes)


def _run_branch(args) -> Decision:
    g, k, test_from, j, node_limit, deadline = args
    return _Search(g, k, test_from, node_limit, deadline).branch(j)


def decide_cr_le(g: Graph, k: int, budget: Budget = Budget(), test_from: int = 0) -> Decision:
    """Decide whether ``g`` has a drawing with at most ``k`` crossings.

    ``test_from`` skips planarity tests on sets smaller than that size; callers
    use it only when those sizes are already refuted.

    Verdicts are identical for any worker count under a node limit: each
    first-pair branch is searched independently and the results are combined
    in canonical branch order as a sequential search would.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit
    limit = budget.node_limit
    nodes = 1
    if test_from == 0:
        res = is_planar(g)
        if res.planar:
            return Decision("yes", planar_drawing(g, res.embedding), nodes)
    if k == 0:
        return Decision("no", nodes=nodes)
    probe = _Search(g, k, test_from, None, None)
    branches = range(len(probe.pairs))

    def results():
        if budget.workers > 1 and len(branches) > 1:
            with ProcessPoolExecutor(budget.workers) as pool:
                args = [(g, k, test_from, j, limit, deadline) for j in branches]
                yield from pool.map(_run_branch, args)
        else:
            for j in branches:
                rem = None if limit is None else max(limit - nodes, 0)
                if rem == 0:
                    yield Decision("timeout", nodes=1, reason="nodes")
                    return
                yield _run_branch((g, k, test_from, j, rem, deadline))

    for res in results():
        nodes += res.nodes
        if limit is not None and nodes > limit:
            return Decision("timeout", nodes=min(nodes, limit + 1), reason="nodes")
        if res.verdict == "timeout":
            return Decision("timeout", nodes=nodes, reason=res.reason)
        if res.verdict == "yes":
            return Decision("yes", res.witness, nodes)
    return Decision("no", nodes=nodes)


def crossing_number(g: Graph, budget: Budget = Budget(), max_k: int | None = None) -> CrBounds:
    """Bounds on cr(g): lower bounds, heuristic upper bound, then iterative deepening.

    ``max_k`` stops the deepening before deciding larger k (status ``bounded``).
    """
    t0 = time.monotonic()
    lb, cert = lower_bounds(g)
    witness = upper_bound(g, budget, target=lb)
    ub = witness.crossing_count
    log = [f"lower bound {lb} ({cert})", f"heuristic upper bound {ub}"]
    status, nodes = "exact", 0
    k = lb
    while k < ub:
        if max_k is not None and k > max_k:
            status = "bounded"
            break
        dec = decide_cr_le(g, k, budget, test_from=k)
        nodes += dec.nodes
        if dec.verdict == "yes":
            witness, ub = dec.witness, dec.witness.crossing_count
            log.append(f"k={k}: drawing found ({dec.nodes} nodes)")
            break
        if dec.verdict == "no":
            lb, cert = k + 1, f"exhausted-{k}"
            log.append(f"k={k}: refuted ({dec.nodes} nodes)")
            k += 1
            continue
        status = "bounded" if dec.reason == "nodes" else "timeout"
        log.append(f"k={k}: search stopped on {dec.reason} limit after {dec.nodes} nodes")
        break
    if lb >= ub:
        lb, status = ub, "exact"
    assert is_good(witness)
    return CrBounds(lb, ub, status, witness, cert, time.monotonic() - t0, nodes, log)


# brute-force oracle ------------------------------------------------------------------

def brute_force_cr(g: Graph, cap: int) -> int:
    """Exact crossing number by plain enumeration of crossing sets of size 0..cap.

    Shares nothing with the pruned search beyond the planarity test itself.
    """
    pairs = [(a, b) for a in range(g.m) for b in range(a + 1, g.m)
             if not set(g.edges[a]) & set(g.edges[b])]
    for size in range(cap + 1):
        for chosen in itertools.combinations(pairs, size):
            along: dict[int, list[int]] = {}
            for i, (a, b) in enumerate(chosen):
                along.setdefault(a, []).append(i)
                along.setdefault(b, []).append(i)
            edges = list(along)
            for perms in itertools.product(*(itertools.permutations(along[e]) for e in edges)):
                h = nx.Graph()
                h.add_nodes_from(g.vertices)
                seq = dict(zip(edges, perms))
                for e, (u, v) in enumerate(g.edges):
                    path = [u] + [("x", i) for i in seq.get(e, ())] + [v]
                    h.add_edges_from(zip(path, path[1:]))
                if planar_nx(h):
                    return size
    raise ValueError(f"no drawing with at most {cap} crossings exists")


def planar_nx(h: nx.Graph) -> bool:
    return nx.check_planarity(h)[0]
