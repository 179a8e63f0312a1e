"""Undirected simple graphs on up to 62 vertices, stored as bitmask adjacency rows.

Vertex sets are plain ``int`` bitmasks (bit ``v`` set = vertex ``v`` in the set),
so set algebra and subset enumeration stay single-word operations throughout
the exact searches.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError

MAX_VERTICES = 62

Mask = int


def mask_of(vertices: Iterable[int]) -> Mask:
    """Bitmask with the given vertices set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: Mask) -> Iterator[int]:
    """Vertices of a bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertex_tuple(mask: Mask) -> tuple[int, ...]:
    """Sorted tuple of the vertices in a bitmask."""
    return tuple(bits(mask))


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbor bitmask of ``v``."""

    n: int
    adj: tuple[Mask, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise DomainError(f"graph order must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise DomainError("adjacency rows do not match the vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise DomainError(f"vertex {v} has a neighbor out of range")
            if row >> v & 1:
                raise DomainError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise DomainError(f"asymmetric adjacency between {u} and {v}")

    @property
    def full_mask(self) -> Mask:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) pairs with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={self.edges()!r})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Simple graph on vertices 0..n-1; duplicate edges collapse silently."""
    if n < 1:
        raise DomainError(f"graph order must be at least 1, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise DomainError(f"edge endpoint out of range: ({u}, {v}) with n={n}")
        if u == v:
            raise DomainError(f"self-loop at {u}: simple graphs only")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def induced_subgraph(G: Graph, members: Mask) -> Graph:
    """Subgraph induced by ``members``, relabeled 0..k-1 preserving vertex order.

    New label ``i`` corresponds to the i-th smallest member of the set.
    """
    if members == 0:
        raise DomainError("cannot induce a subgraph on the empty set")
    if members & ~G.full_mask:
        raise DomainError("vertex set is not within the graph")
    vs = vertex_tuple(members)
    index = {v: i for i, v in enumerate(vs)}
    rows = [0] * len(vs)
    for i, v in enumerate(vs):
        for u in bits(G.adj[v] & members):
            rows[i] |= 1 << index[u]
    return Graph(len(vs), tuple(rows))


def neighbors_in(G: Graph, within: Mask, v: int) -> Mask:
    """Neighbors of ``v`` that lie in the given vertex set."""
    if not 0 <= v < G.n:
        raise DomainError(f"vertex {v} out of range")
    return G.adj[v] & within


def reachable_set(G: Graph, start: int, within: Mask | None = None) -> Mask:
    """Vertices reachable from ``start`` by paths inside ``within`` (default: all)."""
    scope = G.full_mask if within is None else within
    if not scope >> start & 1:
        raise DomainError(f"start vertex {start} is outside the search scope")
    seen = frontier = 1 << start
    adj = G.adj
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= scope & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(G: Graph) -> bool:
    return reachable_set(G, 0) == G.full_mask


def components(G: Graph) -> list[Mask]:
    """Connected components as bitmasks, ordered by smallest vertex."""
    remaining = G.full_mask
    out = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = reachable_set(G, start)
        out.append(comp)
        remaining &= ~comp
    return out


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances; ``unreachable`` (== n) marks cross-component pairs."""

    rows: tuple[tuple[int, ...], ...]
    unreachable: int

    @property
    def n(self) -> int:
        return len(self.rows)

    def dist(self, u: int, v: int) -> int:
        return self.rows[u][v]

    def reachable(self, u: int, v: int) -> bool:
        return self.rows[u][v] < self.unreachable


def bfs_distances(G: Graph) -> DistanceMatrix:
    """Exact hop distances by breadth-first search from every vertex."""
    n = G.n
    adj = G.adj
    out = []
    for s in range(n):
        row = [n] * n
        row[s] = 0
        seen = frontier = 1 << s
        d = 0
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            nxt &= ~seen
            d += 1
            for v in bits(nxt):
                row[v] = d
            seen |= nxt
            frontier = nxt
        out.append(tuple(row))
    return DistanceMatrix(tuple(out), n)


def diameter(G: Graph) -> int | None:
    """Largest pairwise distance, or None when the graph is disconnected."""
    if not is_connected(G):
        return None
    return max(max(row) for row in bfs_distances(G).rows)


def is_complete(G: Graph) -> bool:
    full = G.full_mask
    return all(G.adj[v] == full ^ (1 << v) for v in range(G.n))


def extreme_vertices(G: Graph) -> Mask:
    """Vertices whose neighborhood induces a complete subgraph.

    Includes isolated and pendant vertices; every geodetic set must contain
    all of these.
    """
    out = 0
    for v in range(G.n):
        nb = G.adj[v]
        if all(nb & ~G.adj[u] == 1 << u for u in bits(nb)):
            out |= 1 << v
    return out


# ---------------------------------------------------------------------------
# Generators.  Canonical labelings: the hub of star/wheel/fan is index 0.


def path(n: int) -> Graph:
    if n < 1:
        raise DomainError(f"path needs n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise DomainError(f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise DomainError(f"complete graph needs n >= 1, got {n}")
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty(n: int) -> Graph:
    """Edgeless graph on n vertices."""
    if n < 1:
        raise DomainError(f"empty graph needs n >= 1, got {n}")
    return Graph(n, (0,) * n)


def star(n: int) -> Graph:
    """Star with hub 0 and n leaves (order n + 1)."""
    if n < 1:
        raise DomainError(f"star needs n >= 1 leaves, got {n}")
    return from_edge_list(n + 1, [(0, i) for i in range(1, n + 1)])


def wheel(n: int) -> Graph:
    """Wheel: hub 0 joined to the rim cycle 1..n (order n + 1).

    Labeled identically to corona(complete(1), cycle(n)).
    """
    if n < 3:
        raise DomainError(f"wheel needs a rim of size >= 3, got {n}")
    rim = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    spokes = [(0, i) for i in range(1, n + 1)]
    return from_edge_list(n + 1, rim + spokes)


def fan(n: int) -> Graph:
    """Fan: hub 0 joined to the path 1..n (order n + 1).

    Labeled identically to corona(complete(1), path(n)).
    """
    if n < 2:
        raise DomainError(f"fan needs a path of size >= 2, got {n}")
    spine = [(i, i + 1) for i in range(1, n)]
    spokes = [(0, i) for i in range(1, n + 1)]
    return from_edge_list(n + 1, spine + spokes)


# ---------------------------------------------------------------------------
# Corona product.


@dataclass(frozen=True)
class CoronaLayout:
    """Index bookkeeping for G ⊙ H.

    Base vertex i keeps index i (0..n1-1); copy i of the second factor
    occupies the contiguous block n1 + i*n2 .. n1 + (i+1)*n2 - 1, preserving
    the second factor's internal labels.
    """

    n1: int
    n2: int

    @property
    def order(self) -> int:
        return self.n1 * (1 + self.n2)

    def g_index(self, i: int) -> int:
        if not 0 <= i < self.n1:
            raise DomainError(f"base index {i} out of range")
        return i

    def copy_indices(self, i: int) -> range:
        if not 0 <= i < self.n1:
            raise DomainError(f"copy index {i} out of range")
        lo = self.n1 + i * self.n2
        return range(lo, lo + self.n2)

    def copy_mask(self, i: int) -> Mask:
        r = self.copy_indices(i)
        return ((1 << self.n2) - 1) << r.start

    @property
    def g_mask(self) -> Mask:
        return (1 << self.n1) - 1

    @property
    def copies_mask(self) -> Mask:
        return ((1 << self.order) - 1) ^ self.g_mask


def corona(G: Graph, H: Graph) -> tuple[Graph, CoronaLayout]:
    """Corona product G ⊙ H: one copy of G, |V(G)| copies of H, copy i fully
    joined to the i-th vertex of G.

    The first factor must be connected; the second may be disconnected.
    """
    if not is_connected(G):
        raise DomainError("corona requires a connected first factor")
    n1, n2 = G.n, H.n
    order = n1 * (1 + n2)
    if order > MAX_VERTICES:
        raise DomainError(f"corona order {order} exceeds the {MAX_VERTICES}-vertex limit")
    layout = CoronaLayout(n1, n2)
    rows = [0] * order
    for v in range(n1):
        rows[v] = G.adj[v]
    for i in range(n1):
        base = n1 + i * n2
        for v in range(n2):
            rows[base + v] |= H.adj[v] << base
        block = layout.copy_mask(i)
        rows[i] |= block
        for v in range(base, base + n2):
            rows[v] |= 1 << i
    return Graph(order, tuple(rows)), layout
