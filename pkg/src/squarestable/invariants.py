"""Exact solvers for the stability, matching, covering and domination invariants.

Everything here is exact.  The NP-hard quantities (stability number, clique
cover number, domination numbers, maximum-stable-set enumeration) run under a
:class:`SolverBudget`; exceeding the budget raises :class:`BudgetExhausted`
instead of ever returning an approximate value.  Maximum matching is
polynomial (augmenting paths with blossom contraction) and needs no budget.

Determinism: branching always scans vertices in ascending id.  The stable-set
style witnesses (alpha, gamma, independent domination) are the
lexicographically least optimal sets; the clique-cover witness is a canonical
sorted partition; the matching witness is the deterministic result of the
fixed scan order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graphs import Graph, VertexSet, adjacency_masks
from .graphs import girth as _girth

Matching = frozenset[tuple[int, int]]

#: Materializing every maximum stable set is reserved for graphs up to this
#: order; past it, core_set() switches to vertex-by-vertex fix-and-test.
OMEGA_ENUMERATION_CAP = 16


class BudgetExhausted(RuntimeError):
    """A solver hit its node or wall-clock cap before finishing."""

    def __init__(self, operation: str, nodes_used: int) -> None:
        super().__init__(f"{operation}: search budget exhausted after {nodes_used} nodes")
        self.operation = operation
        self.nodes_used = nodes_used


@dataclass(frozen=True)
class SolverBudget:
    """Resource caps for the exponential solvers."""

    max_nodes: int = 10_000_000
    max_seconds: float = 60.0

    def __post_init__(self) -> None:
        if self.max_nodes <= 0 or self.max_seconds <= 0:
            raise ValueError("budget caps must be positive")


DEFAULT_BUDGET = SolverBudget()


class _Meter:
    """Per-call budget state; every tick counts a node, time is checked rarely."""

    __slots__ = ("operation", "max_nodes", "deadline", "nodes")

    def __init__(self, operation: str, budget: SolverBudget) -> None:
        self.operation = operation
        self.max_nodes = budget.max_nodes
        self.deadline = time.monotonic() + budget.max_seconds
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise BudgetExhausted(self.operation, self.nodes)
        if self.nodes % 4096 == 0 and time.monotonic() > self.deadline:
            raise BudgetExhausted(self.operation, self.nodes)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_to_set(mask: int) -> VertexSet:
    return frozenset(_bits(mask))


# ---------------------------------------------------------------------------
# stability number


def _greedy_clique_cover_size(cand: int, adj: list[int]) -> int:
    """Greedy clique cover of the candidate set: an upper bound on how many
    further stable vertices the candidates can contribute."""
    cliques: list[int] = []
    for v in _bits(cand):
        bit = 1 << v
        for i, c in enumerate(cliques):
            if adj[v] & c == c:
                cliques[i] = c | bit
                break
        else:
            cliques.append(bit)
    return len(cliques)


def _alpha_mask(adj: list[int], universe: int, meter: _Meter) -> tuple[int, int]:
    """Exact maximum stable set inside ``universe`` as (size, mask).

    Branches on the smallest candidate vertex, include-branch first, and only
    replaces the incumbent on strict improvement; among equal-size optima the
    first one found under that order is the lexicographically least, so that
    is what comes back.
    """
    best_size = -1
    best_mask = 0

    def walk(chosen: int, size: int, cand: int) -> None:
        nonlocal best_size, best_mask
        meter.tick()
        if size + _greedy_clique_cover_size(cand, adj) <= best_size:
            return
        if not cand:
            if size > best_size:
                best_size, best_mask = size, chosen
            return
        low = cand & -cand
        v = low.bit_length() - 1
        walk(chosen | low, size + 1, cand & ~(adj[v] | low))
        walk(chosen, size, cand ^ low)

    walk(0, 0, universe)
    return best_size, best_mask


def alpha(g: Graph, budget: SolverBudget = DEFAULT_BUDGET) -> tuple[int, VertexSet]:
    """Stability number with its lexicographically least maximum stable set."""
    meter = _Meter("alpha", budget)
    size, mask = _alpha_mask(adjacency_masks(g), (1 << g.n) - 1, meter)
    return size, _mask_to_set(mask)


# ---------------------------------------------------------------------------
# maximal stable sets, Omega, core


def _maximal_stable_masks(g: Graph, meter: _Meter) -> Iterator[int]:
    """Stream every inclusion-maximal stable set (as a mask), unordered.

    Bron-Kerbosch with pivoting run on the complement graph: maximal cliques
    there are exactly the maximal stable sets here.
    """
    n = g.n
    if n == 0:
        yield 0
        return
    full = (1 << n) - 1
    adj = adjacency_masks(g)
    nonadj = [full & ~adj[v] & ~(1 << v) for v in range(n)]

    def bk(r: int, p: int, x: int) -> Iterator[int]:
        meter.tick()
        if p == 0 and x == 0:
            yield r
            return
        pivot, pivot_count = -1, -1
        for u in _bits(p | x):
            c = (p & nonadj[u]).bit_count()
            if c > pivot_count:
                pivot, pivot_count = u, c
        for v in _bits(p & ~nonadj[pivot]):
            bit = 1 << v
            yield from bk(r | bit, p & nonadj[v], x & nonadj[v])
            p ^= bit
            x |= bit

    yield from bk(0, full, 0)


def enumerate_maximal_stable_sets(
    g: Graph, budget: SolverBudget = DEFAULT_BUDGET
) -> list[VertexSet]:
    """Every inclusion-maximal stable set, exactly once, in lexicographic order."""
    if g.n < 1:
        raise ValueError("enumerate_maximal_stable_sets requires at least one vertex")
    meter = _Meter("enumerate_maximal_stable_sets", budget)
    sets = [_mask_to_set(m) for m in _maximal_stable_masks(g, meter)]
    sets.sort(key=sorted)
    return sets


def omega_family(
    g: Graph,
    budget: SolverBudget = DEFAULT_BUDGET,
    cap: int = OMEGA_ENUMERATION_CAP,
) -> list[VertexSet]:
    """All maximum stable sets, in lexicographic order.

    The family can be exponentially large, so materializing it is only
    supported up to ``cap`` vertices.
    """
    if g.n < 1:
        raise ValueError("omega_family requires at least one vertex")
    if g.n > cap:
        raise ValueError(f"omega_family materializes only up to {cap} vertices, got {g.n}")
    size, _ = alpha(g, budget)
    meter = _Meter("omega_family", budget)
    fam = [_mask_to_set(m) for m in _maximal_stable_masks(g, meter)
           if m.bit_count() == size]
    fam.sort(key=sorted)
    return fam


def core_set(g: Graph, budget: SolverBudget = DEFAULT_BUDGET) -> VertexSet:
    """Intersection of all maximum stable sets.

    Small graphs intersect the materialized family; larger ones use the
    fix-and-test rule: v lies in every maximum stable set exactly when
    deleting v drops the stability number.
    """
    if g.n < 1:
        raise ValueError("core_set requires at least one vertex")
    if g.n <= OMEGA_ENUMERATION_CAP:
        fam = omega_family(g, budget)
        core = set(fam[0])
        for s in fam[1:]:
            core &= s
            if not core:
                break
        return frozenset(core)
    adj = adjacency_masks(g)
    full = (1 << g.n) - 1
    meter = _Meter("core_set", budget)
    size, _ = _alpha_mask(adj, full, meter)
    out = set()
    for v in range(g.n):
        drop, _ = _alpha_mask(adj, full & ~(1 << v), meter)
        if drop == size - 1:
            out.add(v)
    return frozenset(out)


# ---------------------------------------------------------------------------
# maximum matching (blossom contraction)


def mu(g: Graph) -> tuple[int, Matching]:
    """Maximum matching via augmenting-path search with blossom contraction.

    Polynomial, so no budget applies; the witness is deterministic under the
    fixed ascending scan order.
    """
    n = g.n
    adj = [sorted(g.neighbors(v)) for v in range(n)]
    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))

    # greedy seed cuts the number of augmenting phases roughly in half
    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[v], match[u] = u, v
                    break

    def lowest_common_base(a: int, b: int) -> int:
        used = [False] * n
        while True:
            a = base[a]
            used[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if used[b]:
                return b
            b = parent[match[b]]

    def mark_blossom_path(v: int, stem: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != stem:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def try_augment(root: int) -> bool:
        for i in range(n):
            parent[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # odd cycle: contract the blossom down to its stem
                    stem = lowest_common_base(v, to)
                    in_blossom = [False] * n
                    mark_blossom_path(v, stem, to, in_blossom)
                    mark_blossom_path(to, stem, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = stem
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # augment along the alternating path back to the root
                        u = to
                        while u != -1:
                            pv = parent[u]
                            next_u = match[pv]
                            match[u], match[pv] = pv, u
                            u = next_u
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1 and adj[v]:
            try_augment(v)

    edges = frozenset((v, match[v]) for v in range(n) if match[v] > v)
    return len(edges), edges


def count_perfect_matchings(g: Graph, limit: int | None = None) -> int:
    """Number of perfect matchings, optionally stopping early at ``limit``."""
    n = g.n
    if n % 2:
        return 0
    if n == 0:
        return 1
    adj = adjacency_masks(g)
    full = (1 << n) - 1
    count = 0

    def rec(used: int) -> bool:
        nonlocal count
        if used == full:
            count += 1
            return limit is not None and count >= limit
        v = ((~used) & -(~used)).bit_length() - 1
        for w in _bits(adj[v] & ~used):
            if rec(used | (1 << v) | (1 << w)):
                return True
        return False

    rec(0)
    return count


# ---------------------------------------------------------------------------
# clique cover number


def theta(g: Graph, budget: SolverBudget = DEFAULT_BUDGET) -> tuple[int, tuple[VertexSet, ...]]:
    """Exact clique cover number with a certifying partition into cliques.

    Computed as proper coloring of the complement by branch and bound:
    vertices are assigned in ascending id to an existing class (must stay a
    clique of g) or to one fresh class.  The witness partition is returned in
    canonical sorted form.
    """
    if g.n < 1:
        raise ValueError("theta requires at least one vertex")
    n = g.n
    adj = adjacency_masks(g)
    meter = _Meter("theta", budget)

    # greedy first-fit cover gives the initial upper bound
    greedy: list[int] = []
    for v in range(n):
        for i, c in enumerate(greedy):
            if adj[v] & c == c:
                greedy[i] = c | (1 << v)
                break
        else:
            greedy.append(1 << v)
    best_count = len(greedy)
    best_cover = list(greedy)

    classes: list[int] = []

    def walk(v: int) -> None:
        nonlocal best_count, best_cover
        meter.tick()
        if len(classes) >= best_count:
            return
        if v == n:
            best_count = len(classes)
            best_cover = list(classes)
            return
        bit = 1 << v
        for i, c in enumerate(classes):
            if adj[v] & c == c:
                classes[i] = c | bit
                walk(v + 1)
                classes[i] = c
        classes.append(bit)
        walk(v + 1)
        classes.pop()

    walk(0)
    cover = sorted((tuple(sorted(_bits(c))) for c in best_cover))
    return best_count, tuple(frozenset(c) for c in cover)


# ---------------------------------------------------------------------------
# domination


def _gamma_value(closed: list[int], full: int, n: int, meter: _Meter,
                 forced: int = 0, candidates_from: int = 0,
                 stop_at: int | None = None) -> int | None:
    """Minimum size of a dominating set containing ``forced`` whose further
    members all have id >= candidates_from.  ``stop_at`` turns the search into
    a feasibility test: return that size as soon as it is met."""
    best: int | None = None
    start_dom = 0
    for v in _bits(forced):
        start_dom |= closed[v]
    max_cover = max((c.bit_count() for c in closed), default=1) or 1

    def walk(dominated: int, chosen_count: int, min_next: int) -> None:
        nonlocal best
        meter.tick()
        if dominated == full:
            if best is None or chosen_count < best:
                best = chosen_count
            return
        if best is not None and stop_at is not None and best <= stop_at:
            return
        remaining = (full & ~dominated).bit_count()
        lower = chosen_count + -(-remaining // max_cover)
        if best is not None and lower >= best:
            return
        if stop_at is not None and lower > stop_at:
            return
        u = ((full & ~dominated) & -(full & ~dominated)).bit_length() - 1
        # every dominating set must cover u with something from N[u]
        for v in _bits(closed[u]):
            if v < min_next:
                continue
            walk(dominated | closed[v], chosen_count + 1, min_next)

    walk(start_dom, forced.bit_count(), candidates_from)
    return best


def gamma(g: Graph, budget: SolverBudget = DEFAULT_BUDGET) -> tuple[int, VertexSet]:
    """Domination number with the lexicographically least minimum dominating set."""
    if g.n < 1:
        raise ValueError("gamma requires at least one vertex")
    n = g.n
    adjm = adjacency_masks(g)
    closed = [adjm[v] | (1 << v) for v in range(n)]
    full = (1 << n) - 1
    meter = _Meter("gamma", budget)
    value = _gamma_value(closed, full, n, meter)
    assert value is not None
    # lexicographic fix pass: grow the witness smallest-vertex-first, keeping
    # a completion of the optimal size reachable at every step
    chosen = 0
    chosen_count = 0
    next_candidate = 0
    while chosen_count < value:
        for v in range(next_candidate, n):
            trial = chosen | (1 << v)
            feasible = _gamma_value(closed, full, n, meter, forced=trial,
                                    candidates_from=v + 1, stop_at=value)
            if feasible is not None and feasible <= value:
                chosen = trial
                chosen_count += 1
                next_candidate = v + 1
                break
        else:  # pragma: no cover - impossible for a correct solver
            raise AssertionError("lexicographic completion failed")
    return value, _mask_to_set(chosen)


def ind_dom(g: Graph, budget: SolverBudget = DEFAULT_BUDGET) -> tuple[int, VertexSet]:
    """Independent domination number: smallest inclusion-maximal stable set."""
    if g.n < 1:
        raise ValueError("ind_dom requires at least one vertex")
    meter = _Meter("ind_dom", budget)
    best: tuple[int, tuple[int, ...]] | None = None
    for m in _maximal_stable_masks(g, meter):
        key = (m.bit_count(), tuple(sorted(_bits(m))))
        if best is None or key < best:
            best = key
    assert best is not None
    return best[0], frozenset(best[1])


# ---------------------------------------------------------------------------
# simplicial structure


def simplicial_vertices(g: Graph) -> VertexSet:
    """Vertices whose open neighborhood induces a complete subgraph."""
    adj = adjacency_masks(g)
    out = []
    for v in range(g.n):
        nv = adj[v]
        if all((nv & ~(1 << u)) & ~adj[u] == 0 for u in _bits(nv)):
            out.append(v)
    return frozenset(out)


def maximal_cliques(g: Graph, budget: SolverBudget = DEFAULT_BUDGET) -> list[VertexSet]:
    """All inclusion-maximal cliques (Bron-Kerbosch, pivoting), lexicographic."""
    if g.n < 1:
        raise ValueError("maximal_cliques requires at least one vertex")
    n = g.n
    adj = adjacency_masks(g)
    meter = _Meter("maximal_cliques", budget)
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        meter.tick()
        if p == 0 and x == 0:
            out.append(r)
            return
        pivot, pivot_count = -1, -1
        for u in _bits(p | x):
            c = (p & adj[u]).bit_count()
            if c > pivot_count:
                pivot, pivot_count = u, c
        for v in _bits(p & ~adj[pivot]):
            bit = 1 << v
            bk(r | bit, p & adj[v], x & adj[v])
            p ^= bit
            x |= bit

    bk(0, (1 << n) - 1, 0)
    sets = [_mask_to_set(m) for m in out]
    sets.sort(key=sorted)
    return sets


def simplexes(g: Graph, budget: SolverBudget = DEFAULT_BUDGET) -> list[VertexSet]:
    """Maximal cliques containing at least one simplicial vertex."""
    simp = simplicial_vertices(g)
    return [c for c in maximal_cliques(g, budget) if c & simp]


# ---------------------------------------------------------------------------
# witness validation and the aggregate report


def is_stable_set(g: Graph, s: VertexSet) -> bool:
    return all(not g.has_edge(u, v) for u, v in combinations(sorted(s), 2))


def is_maximal_stable_set(g: Graph, s: VertexSet) -> bool:
    if not is_stable_set(g, s):
        return False
    return all(any(w in s for w in g.neighbors(v)) for v in range(g.n) if v not in s)


def is_matching(g: Graph, m: Matching) -> bool:
    used = set()
    for u, v in m:
        if not g.has_edge(u, v) or u in used or v in used:
            return False
        used.update((u, v))
    return True


def is_clique_partition(g: Graph, parts: tuple[VertexSet, ...]) -> bool:
    seen: set[int] = set()
    for part in parts:
        if any(not g.has_edge(u, v) for u, v in combinations(sorted(part), 2)):
            return False
        if seen & part:
            return False
        seen |= part
    return seen == set(range(g.n))


def is_dominating_set(g: Graph, d: VertexSet) -> bool:
    return all(v in d or g.neighbors(v) & d for v in range(g.n))


@dataclass(frozen=True)
class InvariantReport:
    """Exact invariant values for one graph plus certifying witnesses."""

    alpha: int
    mu: int
    theta: int
    gamma: int
    ind_dom: int
    girth: int | None
    stable_set: VertexSet
    matching: Matching
    clique_cover: tuple[VertexSet, ...]
    dominating_set: VertexSet
    min_maximal_stable_set: VertexSet

    def to_json_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "mu": self.mu,
            "theta": self.theta,
            "gamma": self.gamma,
            "ind_dom": self.ind_dom,
            "girth": self.girth,
            "witnesses": {
                "stable_set": sorted(self.stable_set),
                "matching": sorted(sorted(e) for e in self.matching),
                "clique_cover": sorted(sorted(c) for c in self.clique_cover),
                "dominating_set": sorted(self.dominating_set),
                "min_maximal_stable_set": sorted(self.min_maximal_stable_set),
            },
        }


def invariant_report(g: Graph, budget: SolverBudget = DEFAULT_BUDGET) -> InvariantReport:
    """Compute every invariant of the report for one graph."""
    a, a_set = alpha(g, budget)
    m, m_set = mu(g)
    t, t_parts = theta(g, budget)
    d, d_set = gamma(g, budget)
    i, i_set = ind_dom(g, budget)
    return InvariantReport(
        alpha=a, mu=m, theta=t, gamma=d, ind_dom=i, girth=_girth(g),
        stable_set=a_set, matching=m_set, clique_cover=t_parts,
        dominating_set=d_set, min_maximal_stable_set=i_set,
    )
