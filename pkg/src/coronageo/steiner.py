"""Steiner distance, Steiner hulls, and the Steiner number.

The workhorse is a dynamic program over terminal subsets with the classic
split/regrow recurrence: ``dp[T][v]`` is the minimum number of edges of a
tree containing the terminals in ``T`` plus the vertex ``v``.  One table per
terminal set yields both the Steiner distance (last row at any terminal) and
the Steiner hull, since v lies on a minimum tree for W exactly when
d(W + v) = d(W).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from operator import add
from typing import Iterable, Sequence

from .errors import CapExceeded, DomainError
from .graphs import (
    CoronaLayout,
    Graph,
    Mask,
    bfs_distances,
    bits,
    is_connected,
    mask_of,
    vertex_tuple,
)
from .subsets import ascending_subsets

DEFAULT_STEINER_CAP = 16
DEFAULT_TERMINAL_CAP = 16
DEFAULT_ORACLE_CAP = 10

_INF = 1 << 30


@dataclass(frozen=True)
class SteinerResult:
    """Minimum Steiner set: its size, the canonical witness, and the number
    of candidate sets examined."""

    value: int
    witness: tuple[int, ...]
    explored: int


def _steiner_dp(dist: Sequence[Sequence[int]], terms: Sequence[int]) -> list:
    """dp rows indexed by terminal-subset bitmask; dp[m][v] = min edges of a
    tree containing {terms[i] : bit i of m} plus v."""
    n = len(dist)
    size = 1 << len(terms)
    dp: list = [None] * size
    for i, t in enumerate(terms):
        dp[1 << i] = list(dist[t])
    for m in range(3, size):
        if dp[m] is not None:  # singleton rows are exact already
            continue
        low = m & -m
        rest = m ^ low
        best = [_INF] * n
        b = rest
        while b:  # unordered splits of m, the low terminal staying on one side
            best = list(map(min, best, map(add, dp[m ^ b], dp[b])))
            b = (b - 1) & rest
        row = best
        for u in range(n):  # regrow: attach v by a shortest path to the split vertex u
            bu = best[u]
            if bu >= _INF:
                continue
            du = dist[u]
            row = list(map(min, row, [bu + d for d in du]))
        dp[m] = row
    return dp


def _validated_terms(G: Graph, members: Mask, terminal_cap: int) -> tuple[int, ...]:
    if members == 0:
        raise DomainError("terminal set is empty")
    if members & ~G.full_mask:
        raise DomainError("terminal set is not within the graph")
    if not is_connected(G):
        raise DomainError("Steiner distance is defined for connected graphs")
    terms = vertex_tuple(members)
    if len(terms) > terminal_cap:
        raise CapExceeded(f"terminal sets capped at {terminal_cap}, got {len(terms)}")
    return terms


@dataclass(frozen=True)
class SteinerTable:
    """Exposed DP table: cost(T, v) = minimum edges of a tree containing T plus v."""

    terminals: tuple[int, ...]
    n: int
    rows: tuple[tuple[int, ...], ...]  # indexed by terminal-subset bitmask; row 0 empty

    def cost(self, subset: Iterable[int], v: int) -> int:
        idx = 0
        for w in subset:
            try:
                idx |= 1 << self.terminals.index(w)
            except ValueError:
                raise DomainError(f"vertex {w} is not a terminal") from None
        if idx == 0:
            raise DomainError("terminal subset is empty")
        if not 0 <= v < self.n:
            raise DomainError(f"vertex {v} out of range")
        return self.rows[idx][v]

    def distance(self) -> int:
        """Steiner distance of the full terminal set."""
        return self.rows[-1][self.terminals[0]]


def steiner_table(G: Graph, members: Mask, *, terminal_cap: int = DEFAULT_TERMINAL_CAP) -> SteinerTable:
    terms = _validated_terms(G, members, terminal_cap)
    dist = [list(r) for r in bfs_distances(G).rows]
    dp = _steiner_dp(dist, terms)
    rows = tuple(tuple(row) if row is not None else () for row in dp)
    return SteinerTable(terms, G.n, rows)


def steiner_distance(G: Graph, members: Mask, *, terminal_cap: int = DEFAULT_TERMINAL_CAP) -> int:
    """Minimum number of edges of a connected subgraph containing the set
    (necessarily a tree)."""
    terms = _validated_terms(G, members, terminal_cap)
    dist = [list(r) for r in bfs_distances(G).rows]
    return _steiner_dp(dist, terms)[-1][terms[0]]


def _hull_from_row(last: Sequence[int], d: int) -> Mask:
    m = 0
    for v, c in enumerate(last):
        if c == d:
            m |= 1 << v
    return m


def steiner_hull(G: Graph, members: Mask, *, terminal_cap: int = DEFAULT_TERMINAL_CAP) -> Mask:
    """Vertices lying on at least one minimum tree for the set:
    v is in the hull exactly when d(W + v) = d(W)."""
    terms = _validated_terms(G, members, terminal_cap)
    dist = [list(r) for r in bfs_distances(G).rows]
    last = _steiner_dp(dist, terms)[-1]
    return _hull_from_row(last, last[terms[0]])


def is_steiner_set(G: Graph, members: Mask, *, terminal_cap: int = DEFAULT_TERMINAL_CAP) -> bool:
    return steiner_hull(G, members, terminal_cap=terminal_cap) == G.full_mask


def steiner_number(
    G: Graph,
    *,
    cap: int = DEFAULT_STEINER_CAP,
    layout: CoronaLayout | None = None,
) -> SteinerResult:
    """Minimum Steiner set by exact search, cardinality then lexicographic order.

    On arbitrary graphs the search is unrestricted.  When the graph is a
    corona product supplied with its layout and the first factor has order
    at least 2, candidates are restricted to the copy blocks (minimum Steiner
    sets avoid the base vertices there).
    """
    if not is_connected(G):
        raise DomainError("Steiner number is defined for connected graphs")
    if G.n > cap:
        raise CapExceeded(f"Steiner search capped at n <= {cap}, got {G.n}")
    universe = G.full_mask
    if layout is not None:
        if layout.order != G.n:
            raise DomainError("layout does not match the graph")
        if layout.n1 >= 2:
            universe = layout.copies_mask
    dist = [list(r) for r in bfs_distances(G).rows]
    full = G.full_mask
    explored = 0
    for members in ascending_subsets(universe, 0):
        if not members:
            continue
        explored += 1
        terms = vertex_tuple(members)
        last = _steiner_dp(dist, terms)[-1]
        if _hull_from_row(last, last[terms[0]]) == full:
            return SteinerResult(len(terms), terms, explored)
    raise AssertionError("the full vertex set is always a Steiner set")


def _connected_within(adj: Sequence[Mask], members: Mask) -> bool:
    start = members & -members
    seen = frontier = start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= members & ~seen
        seen |= nxt
        frontier = nxt
    return seen == members


def oracle_steiner_trees(G: Graph, members: Mask, *, cap: int = DEFAULT_ORACLE_CAP) -> tuple[Mask, ...]:
    """All vertex supports of minimum trees containing the set, by exhaustive
    enumeration of connected supersets.

    Independent of the dynamic program; the union of the supports equals the
    Steiner hull.  Exponential, so capped at small orders.
    """
    if G.n > cap:
        raise CapExceeded(f"tree enumeration capped at n <= {cap}, got {G.n}")
    if members == 0:
        raise DomainError("terminal set is empty")
    if members & ~G.full_mask:
        raise DomainError("terminal set is not within the graph")
    if not is_connected(G):
        raise DomainError("Steiner trees are defined for connected graphs")
    others = vertex_tuple(G.full_mask & ~members)
    adj = G.adj
    for extra in range(len(others) + 1):
        supports = []
        for combo in combinations(others, extra):
            candidate = members | mask_of(combo)
            if _connected_within(adj, candidate):
                supports.append(candidate)
        if supports:
            return tuple(supports)
    raise AssertionError("a connected graph always spans its terminal sets")
