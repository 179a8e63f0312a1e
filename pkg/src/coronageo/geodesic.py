"""Geodesic intervals, geodetic sets, and the (k-)geodetic number by exact search."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceeded, DomainError
from .graphs import (
    DistanceMatrix,
    Graph,
    Mask,
    bfs_distances,
    extreme_vertices,
    is_connected,
    vertex_tuple,
)
from .subsets import ascending_subsets

DEFAULT_GEODETIC_CAP = 20


@dataclass(frozen=True)
class GeodeticResult:
    """Outcome of a minimum-set search.

    ``value is None`` means no set exists (k-geodetic search with no vertex
    pair at distance exactly k); this is an answer, not an error.
    ``explored`` counts the candidate sets examined.
    """

    value: int | None
    witness: tuple[int, ...] | None
    explored: int

    @property
    def unsatisfiable(self) -> bool:
        return self.value is None


def _check_vertex(D: DistanceMatrix, v: int) -> None:
    if not 0 <= v < D.n:
        raise DomainError(f"vertex {v} out of range")


def interval(D: DistanceMatrix, u: int, v: int) -> Mask:
    """I[u, v]: all vertices w with d(u,w) + d(w,v) = d(u,v)."""
    _check_vertex(D, u)
    _check_vertex(D, v)
    du, dv = D.rows[u], D.rows[v]
    target = du[v]
    if target >= D.unreachable:
        raise DomainError(f"vertices {u} and {v} are in different components")
    out = 0
    for w in range(D.n):
        if du[w] + dv[w] == target:
            out |= 1 << w
    return out


def interval_closure(D: DistanceMatrix, members: Mask) -> Mask:
    """Union of I[u, v] over all pairs u, v in the set (contains the set)."""
    if members == 0:
        raise DomainError("interval closure of the empty set")
    vs = vertex_tuple(members)
    acc = members
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            acc |= interval(D, u, v)
    return acc


def is_geodominated(D: DistanceMatrix, v: int, x: int, y: int) -> bool:
    """True when v lies on some x-y geodesic: d(x,v) + d(v,y) = d(x,y)."""
    return D.rows[x][v] + D.rows[v][y] == D.rows[x][y]


def is_geodetic(G: Graph, members: Mask) -> bool:
    """True when the interval closure of the set covers every vertex."""
    if not is_connected(G):
        raise DomainError("geodetic sets are defined for connected graphs")
    if members == 0:
        raise DomainError("geodetic sets are nonempty")
    if members & ~G.full_mask:
        raise DomainError("vertex set is not within the graph")
    return interval_closure(bfs_distances(G), members) == G.full_mask


def _interval_table(D: DistanceMatrix) -> list[list[Mask]]:
    n = D.n
    rows = D.rows
    table: list[list[Mask]] = [[0] * n for _ in range(n)]
    for u in range(n):
        du = rows[u]
        for v in range(u, n):
            dv = rows[v]
            target = du[v]
            m = 0
            if target < D.unreachable:
                for w in range(n):
                    if du[w] + dv[w] == target:
                        m |= 1 << w
            table[u][v] = m
            table[v][u] = m
    return table


def _closure(table: list[list[Mask]], members: Mask) -> Mask:
    acc = members
    vs = vertex_tuple(members)
    for i, u in enumerate(vs):
        tu = table[u]
        for v in vs[i + 1:]:
            acc |= tu[v]
    return acc


def _require_connected(G: Graph) -> None:
    if not is_connected(G):
        raise DomainError("search requires a connected graph")


def _min_geodetic(G: Graph, forced: Mask) -> GeodeticResult:
    table = _interval_table(bfs_distances(G))
    full = G.full_mask
    explored = 0
    for members in ascending_subsets(full, forced):
        if not members:
            continue
        explored += 1
        if _closure(table, members) == full:
            return GeodeticResult(members.bit_count(), vertex_tuple(members), explored)
    raise AssertionError("a connected graph always has a geodetic set")


def geodetic_number(G: Graph, *, cap: int = DEFAULT_GEODETIC_CAP) -> GeodeticResult:
    """Minimum geodetic set by exact search.

    Enumerates only supersets of the extreme vertices (which every geodetic
    set must contain), by cardinality then lexicographic order; the witness
    is the first passing set in that order.
    """
    _require_connected(G)
    if G.n > cap:
        raise CapExceeded(f"geodetic search capped at n <= {cap}, got {G.n}")
    return _min_geodetic(G, extreme_vertices(G))


def geodetic_number_unpruned(G: Graph, *, cap: int = DEFAULT_GEODETIC_CAP) -> GeodeticResult:
    """Reference search over the full subset lattice; oracle for geodetic_number."""
    _require_connected(G)
    if G.n > cap:
        raise CapExceeded(f"geodetic search capped at n <= {cap}, got {G.n}")
    return _min_geodetic(G, 0)


def k_geodetic_number(G: Graph, k: int, *, cap: int = DEFAULT_GEODETIC_CAP) -> GeodeticResult:
    """Minimum set S such that every vertex outside S lies on an x-y geodesic
    with x, y in S and d(x, y) = k exactly.

    Vertices inside S need no cover.  When no vertex pair is at distance
    exactly k (e.g. k exceeds the diameter) the result is unsatisfiable
    (``value is None``) rather than an error.
    """
    _require_connected(G)
    if k < 2:
        raise DomainError(f"k-geodetic sets need k >= 2, got {k}")
    if G.n > cap:
        raise CapExceeded(f"k-geodetic search capped at n <= {cap}, got {G.n}")
    D = bfs_distances(G)
    n = G.n
    rows = D.rows
    kmask: list[list[Mask]] = [[0] * n for _ in range(n)]
    any_pair = False
    for u in range(n):
        du = rows[u]
        for v in range(u + 1, n):
            if du[v] != k:
                continue
            any_pair = True
            dv = rows[v]
            m = 0
            for w in range(n):
                if du[w] + dv[w] == k:
                    m |= 1 << w
            kmask[u][v] = m
            kmask[v][u] = m
    if not any_pair:
        return GeodeticResult(None, None, 0)
    full = G.full_mask
    explored = 0
    for members in ascending_subsets(full, 0):
        if not members:
            continue
        explored += 1
        vs = vertex_tuple(members)
        covered = 0
        for i, u in enumerate(vs):
            ku = kmask[u]
            for v in vs[i + 1:]:
                covered |= ku[v]
        if full & ~members & ~covered == 0:
            return GeodeticResult(len(vs), vs, explored)
    raise AssertionError("a k-geodetic set exists whenever a distance-k pair does")
