"""Executable verification of the corona-product geodetic/Steiner claims.

Every claim has a checker producing a ``VerificationReport`` with verdict
PASS, FAIL, or SKIPPED (hypothesis not met / resource cap), the computed
values, and canonical witnesses.  ``run_corpus`` drives a checker over a
deterministic corpus and serializes reports as JSON Lines.

Hypothesis discipline: a checker never asserts a claim outside its stated
hypotheses; out-of-hypothesis instances are SKIPPED with a reason code,
never PASS.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from multiprocessing import get_context
from typing import Callable, Iterable, Sequence

from .corpus import CorpusEntry, CorpusSpec
from .errors import CapExceeded, DomainError
from .formats import encode_graph6
from .geodesic import (
    DEFAULT_GEODETIC_CAP,
    GeodeticResult,
    geodetic_number,
    is_geodetic,
    is_geodominated,
    k_geodetic_number,
)
from .graphs import (
    CoronaLayout,
    Graph,
    Mask,
    bfs_distances,
    bits,
    complete,
    components,
    corona,
    cycle,
    diameter,
    empty,
    extreme_vertices,
    induced_subgraph,
    is_complete,
    is_connected,
    mask_of,
    path,
    reachable_set,
    vertex_tuple,
)
from .steiner import (
    DEFAULT_STEINER_CAP,
    DEFAULT_TERMINAL_CAP,
    SteinerResult,
    is_steiner_set,
    steiner_distance,
    steiner_number,
)

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"

# reason codes for SKIPPED verdicts
R_G_DISCONNECTED = "g-not-connected"
R_H_DISCONNECTED = "h-not-connected"
R_H_COMPLETE = "h-complete"
R_N1_LT_2 = "n1-lt-2"
R_DIAM_NE_2 = "diameter-ne-2"
R_G_EQ_G2 = "g-equals-g2"
R_N_BELOW_MIN = "n-below-min"
R_K_LT_2 = "k-lt-2"
R_CAP = "cap-exceeded"
R_PARSE = "parse-error"


@dataclass(frozen=True)
class Caps:
    """Search caps threaded through every checker."""

    geodetic: int = DEFAULT_GEODETIC_CAP
    steiner: int = DEFAULT_STEINER_CAP
    terminals: int = DEFAULT_TERMINAL_CAP


@dataclass
class VerificationReport:
    theorem: str
    instance: dict
    computed: dict
    verdict: str
    reason: str | None = None
    witness: list[list[int]] | None = None
    elapsed_ms: int = 0

    def to_json(self, *, timing: bool = False) -> str:
        payload: dict = {
            "theorem": self.theorem,
            "instance": self.instance,
            "computed": self.computed,
            "verdict": self.verdict,
        }
        if self.reason is not None:
            payload["reason"] = self.reason
        if self.witness is not None:
            payload["witness"] = self.witness
        if timing:
            payload["elapsed_ms"] = self.elapsed_ms
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def summarize(reports: Iterable[VerificationReport]) -> dict:
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for r in reports:
        counts[r.verdict.lower()] += 1
    return counts


def summary_json(reports: Iterable[VerificationReport]) -> str:
    return json.dumps({"summary": summarize(reports)}, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# Checker plumbing.


class _Skip(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def _need(condition: bool, reason: str) -> None:
    if not condition:
        raise _Skip(reason)


def _instance(graphs: Sequence[Graph], params: dict) -> dict:
    return {"g6": [encode_graph6(g) for g in graphs], "params": params}


def _finish(
    theorem: str,
    instance: dict,
    start: float,
    *,
    ok: bool,
    computed: dict,
    witness: list[list[int]] | None = None,
    reason: str | None = None,
) -> VerificationReport:
    elapsed = int((time.perf_counter() - start) * 1000)
    return VerificationReport(
        theorem, instance, computed, PASS if ok else FAIL,
        reason=reason, witness=witness, elapsed_ms=elapsed,
    )


def _skipped(theorem: str, instance: dict, start: float, reason: str) -> VerificationReport:
    elapsed = int((time.perf_counter() - start) * 1000)
    return VerificationReport(theorem, instance, {}, SKIPPED, reason=reason, elapsed_ms=elapsed)


def _build_corona(G: Graph, H: Graph) -> tuple[Graph, CoronaLayout]:
    try:
        return corona(G, H)
    except DomainError as exc:  # product order beyond the 62-vertex limit
        raise _Skip(f"{R_CAP}: {exc}") from None


def _geo(G: Graph, caps: Caps) -> GeodeticResult:
    try:
        return geodetic_number(G, cap=caps.geodetic)
    except CapExceeded as exc:
        raise _Skip(f"{R_CAP}: {exc}") from None


def _g2(G: Graph, caps: Caps) -> GeodeticResult:
    try:
        return k_geodetic_number(G, 2, cap=caps.geodetic)
    except CapExceeded as exc:
        raise _Skip(f"{R_CAP}: {exc}") from None


def _stein(G: Graph, caps: Caps, layout: CoronaLayout | None = None) -> SteinerResult:
    try:
        return steiner_number(G, cap=caps.steiner, layout=layout)
    except CapExceeded as exc:
        raise _Skip(f"{R_CAP}: {exc}") from None


def geodetic_number_sum(H: Graph, *, cap: int = DEFAULT_GEODETIC_CAP) -> int:
    """Geodetic number of a possibly-disconnected graph: the sum over its
    components, each single vertex contributing 1."""
    return sum(
        geodetic_number(induced_subgraph(H, comp), cap=cap).value
        for comp in components(H)
    )


def _gsum(H: Graph, caps: Caps) -> int:
    try:
        return geodetic_number_sum(H, cap=caps.geodetic)
    except CapExceeded as exc:
        raise _Skip(f"{R_CAP}: {exc}") from None


def _k1_corona(H: Graph) -> Graph:
    return _build_corona(complete(1), H)[0]


def _copy_to_k1h(layout: CoronaLayout, i: int, members: Mask) -> Mask:
    """Map copy-i vertices of a product onto the copy block of K1 ⊙ H."""
    base = layout.n1 + i * layout.n2
    return mask_of(1 + (v - base) for v in bits(members))


# ---------------------------------------------------------------------------
# Geodetic checkers.


def check_geo_kn(G: Graph, caps: Caps = Caps()) -> VerificationReport:
    """g(G) = n exactly when G is complete."""
    start = time.perf_counter()
    inst = _instance([G], {"n": G.n})
    try:
        _need(is_connected(G), R_G_DISCONNECTED)
        r = _geo(G, caps)
    except _Skip as s:
        return _skipped("GEO_KN", inst, start, s.reason)
    comp = is_complete(G)
    computed = {"g": r.value, "n": G.n, "complete": int(comp)}
    return _finish("GEO_KN", inst, start, ok=(r.value == G.n) == comp,
                   computed=computed, witness=[list(r.witness)])


def check_extreme_in_geodetic(G: Graph, caps: Caps = Caps()) -> VerificationReport:
    """The canonical minimum geodetic witness contains every extreme vertex."""
    start = time.perf_counter()
    inst = _instance([G], {"n": G.n})
    try:
        _need(is_connected(G), R_G_DISCONNECTED)
        r = _geo(G, caps)
    except _Skip as s:
        return _skipped("EXTREME_IN_GEODETIC", inst, start, s.reason)
    ext = extreme_vertices(G)
    computed = {"g": r.value, "extreme_count": ext.bit_count()}
    ok = ext & ~mask_of(r.witness) == 0
    return _finish("EXTREME_IN_GEODETIC", inst, start, ok=ok,
                   computed=computed, witness=[list(r.witness)])


def check_geo_k1_lb(H: Graph, caps: Caps = Caps()) -> VerificationReport:
    """g(K1 ⊙ H) >= g(H) for any graph H (components summed when disconnected)."""
    start = time.perf_counter()
    inst = _instance([H], {"n": H.n})
    try:
        g_h = _gsum(H, caps)
        r = _geo(_k1_corona(H), caps)
    except _Skip as s:
        return _skipped("GEO_K1_LB", inst, start, s.reason)
    computed = {"g_h": g_h, "g_k1_h": r.value}
    return _finish("GEO_K1_LB", inst, start, ok=r.value >= g_h,
                   computed=computed, witness=[list(r.witness)])


def check_geo_bounds(G: Graph, H: Graph, caps: Caps = Caps()) -> VerificationReport:
    """n1·g(H) <= g(G ⊙ H) <= n1·n2; equality on the right exactly when every
    component of H is complete; <= n1(n2-1) when no component is complete."""
    start = time.perf_counter()
    inst = _instance([G, H], {"n1": G.n, "n2": H.n})
    try:
        _need(is_connected(G), R_G_DISCONNECTED)
        _need(G.n >= 2 or not is_complete(H), R_H_COMPLETE)
        prod, _ = _build_corona(G, H)
        r = _geo(prod, caps)
        g_h = _gsum(H, caps)
    except _Skip as s:
        return _skipped("GEO_BOUNDS", inst, start, s.reason)
    comps = [induced_subgraph(H, c) for c in components(H)]
    all_complete = all(is_complete(c) for c in comps)
    none_complete = not any(is_complete(c) for c in comps)
    lower = G.n * g_h
    upper = G.n * H.n
    lower_ok = lower <= r.value
    upper_ok = r.value <= upper
    equality_ok = (r.value == upper) == all_complete
    sharp_ok = r.value <= G.n * (H.n - 1) if none_complete else True
    computed = {
        "g_product": r.value,
        "g_h": g_h,
        "lower": lower,
        "upper": upper,
        "lower_ok": int(lower_ok),
        "upper_ok": int(upper_ok),
        "equality_iff_ok": int(equality_ok),
        "sharp_checked": int(none_complete),
        "sharp_ok": int(sharp_ok),
    }
    ok = lower_ok and upper_ok and equality_ok and sharp_ok
    return _finish("GEO_BOUNDS", inst, start, ok=ok, computed=computed,
                   witness=[list(r.witness)])


def check_corona_structure_geo(G: Graph, H: Graph, caps: Caps = Caps()) -> VerificationReport:
    """Structural facts about geodetic sets of G ⊙ H:
    (i) no copy vertex is geodominated by a pair leaving its copy,
    (ii) the minimum witness meets every copy,
    (iii) it avoids the base vertices (n1 >= 2, or n1 = 1 with H non-complete),
    (iv) each per-copy slice is geodetic in K1 ⊙ H (H non-complete)."""
    start = time.perf_counter()
    inst = _instance([G, H], {"n1": G.n, "n2": H.n})
    try:
        _need(is_connected(G), R_G_DISCONNECTED)
        prod, layout = _build_corona(G, H)
        r = _geo(prod, caps)
    except _Skip as s:
        return _skipped("CORONA_GEO_STRUCT", inst, start, s.reason)

    D = bfs_distances(prod)
    part_i = True
    for i in range(layout.n1):
        block = layout.copy_mask(i)
        for v in bits(block):
            for a in range(prod.n):
                for b in range(a + 1, prod.n):
                    if v in (a, b):
                        continue
                    if block >> a & 1 and block >> b & 1:
                        continue
                    if is_geodominated(D, v, a, b):
                        part_i = False

    W = mask_of(r.witness)
    part_ii = all(W & layout.copy_mask(i) for i in range(layout.n1))
    computed = {"g_product": r.value, "part_i": int(part_i), "part_ii": int(part_ii)}
    skipped_parts = []

    ok = part_i and part_ii
    if G.n >= 2 or not is_complete(H):
        part_iii = W & layout.g_mask == 0
        computed["part_iii"] = int(part_iii)
        ok = ok and part_iii
    else:
        skipped_parts.append("part_iii")

    if not is_complete(H):
        k1h = _k1_corona(H)
        part_iv = all(
            is_geodetic(k1h, _copy_to_k1h(layout, i, W & layout.copy_mask(i)))
            for i in range(layout.n1)
        )
        computed["part_iv"] = int(part_iv)
        ok = ok and part_iv
    else:
        skipped_parts.append("part_iv")

    reason = f"skipped-parts:{','.join(skipped_parts)}" if skipped_parts else None
    return _finish("CORONA_GEO_STRUCT", inst, start, ok=ok, computed=computed,
                   witness=[list(r.witness)], reason=reason)


def check_geo_corona_eq(G: Graph, H: Graph, caps: Caps = Caps()) -> VerificationReport:
    """g(G ⊙ H) = n1 · g(K1 ⊙ H) for connected G and non-complete H."""
    start = time.perf_counter()
    inst = _instance([G, H], {"n1": G.n, "n2": H.n})
    try:
        _need(is_connected(G), R_G_DISCONNECTED)
        _need(not is_complete(H), R_H_COMPLETE)
        prod, _ = _build_corona(G, H)
        rp = _geo(prod, caps)
        rh = _geo(_k1_corona(H), caps)
    except _Skip as s:
        return _skipped("GEO_CORONA_EQ", inst, start, s.reason)
    expected = G.n * rh.value
    computed = {"g_product": rp.value, "g_k1_h": rh.value, "expected": expected}
    return _finish("GEO_CORONA_EQ", inst, start, ok=rp.value == expected,
                   computed=computed, witness=[list(rp.witness), list(rh.witness)])


def check_wheel_geo(n: int, caps: Caps = Caps()) -> VerificationReport:
    """g(wheel with rim n) = ceil(n / 2) for n >= 4."""
    start = time.perf_counter()
    w, _ = corona(complete(1), cycle(n)) if n >= 3 else (complete(1), None)
    inst = _instance([w] if n >= 3 else [], {"n": n})
    try:
        _need(n >= 4, R_N_BELOW_MIN)
        r = _geo(w, caps)
    except _Skip as s:
        return _skipped("WHEEL_GEO", inst, start, s.reason)
    expected = (n + 1) // 2
    computed = {"g": r.value, "expected": expected}
    return _finish("WHEEL_GEO", inst, start, ok=r.value == expected,
                   computed=computed, witness=[list(r.witness)])


def check_fan_geo(n: int, caps: Caps = Caps()) -> VerificationReport:
    """g(fan over a path of n) = ceil((n + 1) / 2) for n >= 3."""
    start = time.perf_counter()
    f, _ = corona(complete(1), path(n)) if n >= 1 else (complete(1), None)
    inst = _instance([f] if n >= 1 else [], {"n": n})
    try:
        _need(n >= 3, R_N_BELOW_MIN)
        r = _geo(f, caps)
    except _Skip as s:
        return _skipped("FAN_GEO", inst, start, s.reason)
    expected = (n + 2) // 2
    computed = {"g": r.value, "expected": expected}
    return _finish("FAN_GEO", inst, start, ok=r.value == expected,
                   computed=computed, witness=[list(r.witness)])


def check_corona_cycle_path(G: Graph, n2: int, caps: Caps = Caps()) -> VerificationReport:
    """g(G ⊙ C_n2) = n1·ceil(n2/2) for n2 >= 4 and
    g(G ⊙ P_n2) = n1·ceil((n2+1)/2) for n2 >= 3."""
    start = time.perf_counter()
    inst = _instance([G], {"n1": G.n, "n2": n2})
    try:
        _need(is_connected(G), R_G_DISCONNECTED)
        _need(n2 >= 3, R_N_BELOW_MIN)
        prod_path, _ = _build_corona(G, path(n2))
        r_path = _geo(prod_path, caps)
        cycle_checked = n2 >= 4
        if cycle_checked:
            prod_cycle, _ = _build_corona(G, cycle(n2))
            r_cycle = _geo(prod_cycle, caps)
    except _Skip as s:
        return _skipped("CORONA_CYCLE_PATH", inst, start, s.reason)
    expected_path = G.n * ((n2 + 2) // 2)
    computed = {
        "g_corona_path": r_path.value,
        "expected_path": expected_path,
        "cycle_checked": int(cycle_checked),
    }
    ok = r_path.value == expected_path
    witness = [list(r_path.witness)]
    if cycle_checked:
        expected_cycle = G.n * ((n2 + 1) // 2)
        computed["g_corona_cycle"] = r_cycle.value
        computed["expected_cycle"] = expected_cycle
        ok = ok and r_cycle.value == expected_cycle
        witness.append(list(r_cycle.witness))
    return _finish("CORONA_CYCLE_PATH", inst, start, ok=ok, computed=computed, witness=witness)


def check_g2_equivalence(H: Graph, caps: Caps = Caps()) -> VerificationReport:
    """g(H) = g(K1 ⊙ H) exactly when g(H) = g2(H), for connected non-complete H."""
    start = time.perf_counter()
    inst = _instance([H], {"n": H.n})
    try:
        _need(is_connected(H), R_H_DISCONNECTED)
        _need(not is_complete(H), R_H_COMPLETE)
        g_h = _geo(H, caps)
        g2_h = _g2(H, caps)
        g_k1 = _geo(_k1_corona(H), caps)
    except _Skip as s:
        return _skipped("G2_EQUIV", inst, start, s.reason)
    left = g_h.value == g_k1.value
    right = g2_h.value is not None and g_h.value == g2_h.value
    computed = {
        "g_h": g_h.value,
        "g2_h": -1 if g2_h.value is None else g2_h.value,
        "g_k1_h": g_k1.value,
        "left": int(left),
        "right": int(right),
    }
    return _finish("G2_EQUIV", inst, start, ok=left == right, computed=computed)


def check_g2_corona_equiv(G: Graph, H: Graph, caps: Caps = Caps()) -> VerificationReport:
    """g(G ⊙ H) = n1·g(H) exactly when g(H) = g2(H), for connected G and
    connected non-complete H."""
    start = time.perf_counter()
    inst = _instance([G, H], {"n1": G.n, "n2": H.n})
    try:
        _need(is_connected(G), R_G_DISCONNECTED)
        _need(is_connected(H), R_H_DISCONNECTED)
        _need(not is_complete(H), R_H_COMPLETE)
        prod, _ = _build_corona(G, H)
        g_prod = _geo(prod, caps)
        g_h = _geo(H, caps)
        g2_h = _g2(H, caps)
    except _Skip as s:
        return _skipped("G2_CORONA_EQUIV", inst, start, s.reason)
    left = g_prod.value == G.n * g_h.value
    right = g2_h.value is not None and g_h.value == g2_h.value
    computed = {
        "g_product": g_prod.value,
        "g_h": g_h.value,
        "g2_h": -1 if g2_h.value is None else g2_h.value,
        "left": int(left),
        "right": int(right),
    }
    return _finish("G2_CORONA_EQUIV", inst, start, ok=left == right, computed=computed)


def check_diam2_geo_eq(G: Graph, H: Graph, caps: Caps = Caps()) -> VerificationReport:
    """If H has diameter 2, then g(G ⊙ H) = n1·g(H)."""
    start = time.perf_counter()
    inst = _instance([G, H], {"n1": G.n, "n2": H.n})
    try:
        _need(is_connected(G), R_G_DISCONNECTED)
        _need(diameter(H) == 2, R_DIAM_NE_2)
        prod, _ = _build_corona(G, H)
        g_prod = _geo(prod, caps)
        g_h = _geo(H, caps)
    except _Skip as s:
        return _skipped("DIAM2_GEO_EQ", inst, start, s.reason)
    computed = {"g_product": g_prod.value, "g_h": g_h.value, "expected": G.n * g_h.value}
    return _finish("DIAM2_GEO_EQ", inst, start, ok=g_prod.value == G.n * g_h.value,
                   computed=computed, witness=[list(g_prod.witness)])


def check_pendant_corollary(G: Graph, H: Graph, k: int, caps: Caps = Caps()) -> VerificationReport:
    """g(G ⊙ (H ⊙ N_k)) = n1·n2·k for connected G, H and k >= 2; the pendants
    of H ⊙ N_k form both a geodetic and a 2-geodetic minimum set."""
    start = time.perf_counter()
    inst = _instance([G, H], {"n1": G.n, "n2": H.n, "k": k})
    try:
        _need(is_connected(G), R_G_DISCONNECTED)
        _need(is_connected(H), R_H_DISCONNECTED)
        _need(k >= 2, R_K_LT_2)
        hnk, _ = _build_corona(H, empty(k))
        prod, _ = _build_corona(G, hnk)
        g_prod = _geo(prod, caps)
        g_hnk = _geo(hnk, caps)
        g2_hnk = _g2(hnk, caps)
    except _Skip as s:
        return _skipped("PENDANT_COROLLARY", inst, start, s.reason)
    expected = G.n * H.n * k
    pendants = H.n * k
    computed = {
        "g_product": g_prod.value,
        "expected": expected,
        "g_hnk": g_hnk.value,
        "g2_hnk": -1 if g2_hnk.value is None else g2_hnk.value,
        "pendants": pendants,
        "n1_is_1": int(G.n == 1),
    }
    ok = g_prod.value == expected and g_hnk.value == pendants and g2_hnk.value == pendants
    return _finish("PENDANT_COROLLARY", inst, start, ok=ok, computed=computed,
                   witness=[list(g_prod.witness)])


def check_geo_lower_minus1(G: Graph, H: Graph, caps: Caps = Caps()) -> VerificationReport:
    """If g(H) != g2(H), then g(G ⊙ H) >= n1·(g(H) - 1); H connected non-complete."""
    start = time.perf_counter()
    inst = _instance([G, H], {"n1": G.n, "n2": H.n})
    try:
        _need(is_connected(G), R_G_DISCONNECTED)
        _need(is_connected(H), R_H_DISCONNECTED)
        _need(not is_complete(H), R_H_COMPLETE)
        g_h = _geo(H, caps)
        g2_h = _g2(H, caps)
        _need(g2_h.value is None or g_h.value != g2_h.value, R_G_EQ_G2)
        prod, _ = _build_corona(G, H)
        g_prod = _geo(prod, caps)
    except _Skip as s:
        return _skipped("GEO_LOWER_MINUS1", inst, start, s.reason)
    bound = G.n * (g_h.value - 1)
    computed = {
        "g_product": g_prod.value,
        "g_h": g_h.value,
        "g2_h": -1 if g2_h.value is None else g2_h.value,
        "bound": bound,
    }
    return _finish("GEO_LOWER_MINUS1", inst, start, ok=g_prod.value >= bound,
                   computed=computed, witness=[list(g_prod.witness)])


# ---------------------------------------------------------------------------
# Steiner checkers.


def check_steiner_kn(G: Graph, caps: Caps = Caps()) -> VerificationReport:
    """s(G) = n exactly when G is complete."""
    start = time.perf_counter()
    inst = _instance([G], {"n": G.n})
    try:
        _need(is_connected(G), R_G_DISCONNECTED)
        r = _stein(G, caps)
    except _Skip as s:
        return _skipped("STEINER_KN", inst, start, s.reason)
    comp = is_complete(G)
    computed = {"s": r.value, "n": G.n, "complete": int(comp)}
    return _finish("STEINER_KN", inst, start, ok=(r.value == G.n) == comp,
                   computed=computed, witness=[list(r.witness)])


def check_steiner_k1_lb(G: Graph, caps: Caps = Caps()) -> VerificationReport:
    """s(K1 ⊙ G) >= s(G) for connected G."""
    start = time.perf_counter()
    inst = _instance([G], {"n": G.n})
    try:
        _need(is_connected(G), R_G_DISCONNECTED)
        s_g = _stein(G, caps)
        s_k1 = _stein(_k1_corona(G), caps)
    except _Skip as s:
        return _skipped("STEINER_K1_LB", inst, start, s.reason)
    computed = {"s_g": s_g.value, "s_k1_g": s_k1.value}
    return _finish("STEINER_K1_LB", inst, start, ok=s_k1.value >= s_g.value,
                   computed=computed, witness=[list(s_k1.witness)])


def _in_every_steiner_tree(prod: Graph, terminals: Mask, v: int, caps: Caps) -> bool:
    """Whether vertex v (not a terminal) lies on every minimum tree for the set."""
    base = steiner_distance(prod, terminals, terminal_cap=caps.terminals)
    keep = prod.full_mask & ~(1 << v)
    start_vertex = (terminals & -terminals).bit_length() - 1
    reach = reachable_set(prod, start_vertex, within=keep)
    if terminals & ~reach:
        return True  # deleting v disconnects the terminals
    sub = induced_subgraph(prod, reach)
    vs = vertex_tuple(reach)
    index = {w: i for i, w in enumerate(vs)}
    mapped = mask_of(index[w] for w in bits(terminals))
    return steiner_distance(sub, mapped, terminal_cap=caps.terminals) > base


def check_corona_structure_steiner(G: Graph, H: Graph, caps: Caps = Caps()) -> VerificationReport:
    """Structural facts about Steiner sets of G ⊙ H:
    (i) for n1 >= 2, terminal sets inside the copies meeting every copy force
        every base vertex onto every minimum tree,
    (ii) the minimum witness meets every copy,
    (iii) it avoids the base vertices (n1 >= 2, or n1 = 1 with H non-complete).
    """
    start = time.perf_counter()
    inst = _instance([G, H], {"n1": G.n, "n2": H.n})
    try:
        _need(is_connected(G), R_G_DISCONNECTED)
        prod, layout = _build_corona(G, H)
        r = _stein(prod, caps, layout=layout if G.n >= 2 else None)
    except _Skip as s:
        return _skipped("STEINER_CORONA_STRUCT", inst, start, s.reason)

    U = mask_of(r.witness)
    part_ii = all(U & layout.copy_mask(i) for i in range(layout.n1))
    computed = {"s_product": r.value, "part_ii": int(part_ii)}
    ok = part_ii
    skipped_parts = []

    if G.n >= 2:
        candidates = {layout.copies_mask}
        if U & layout.g_mask == 0 and all(U & layout.copy_mask(i) for i in range(layout.n1)):
            candidates.add(U)
        try:
            part_i = all(
                _in_every_steiner_tree(prod, A, v, caps)
                for A in sorted(candidates)
                for v in range(layout.n1)
            )
        except CapExceeded as exc:
            return _skipped("STEINER_CORONA_STRUCT", inst, start, f"{R_CAP}: {exc}")
        computed["part_i"] = int(part_i)
        ok = ok and part_i
    else:
        skipped_parts.append("part_i")

    if G.n >= 2 or not is_complete(H):
        part_iii = U & layout.g_mask == 0
        computed["part_iii"] = int(part_iii)
        ok = ok and part_iii
    else:
        skipped_parts.append("part_iii")

    reason = f"skipped-parts:{','.join(skipped_parts)}" if skipped_parts else None
    return _finish("STEINER_CORONA_STRUCT", inst, start, ok=ok, computed=computed,
                   witness=[list(r.witness)], reason=reason)


def check_steiner_corona_eq(G: Graph, H: Graph, caps: Caps = Caps()) -> VerificationReport:
    """s(G ⊙ H) = n1·n2 for connected G of order >= 2 and arbitrary H.

    The search is restricted to the copy blocks; on products of order <= 10
    the unrestricted search is run as well and must agree exactly.
    """
    start = time.perf_counter()
    inst = _instance([G, H], {"n1": G.n, "n2": H.n})
    try:
        _need(is_connected(G), R_G_DISCONNECTED)
        _need(G.n >= 2, R_N1_LT_2)
        prod, layout = _build_corona(G, H)
        r = _stein(prod, caps, layout=layout)
        unpruned = None
        if prod.n <= 10:
            unpruned = _stein(prod, caps)
    except _Skip as s:
        return _skipped("STEINER_CORONA_EQ", inst, start, s.reason)
    expected = G.n * H.n
    computed = {"s_product": r.value, "expected": expected}
    agree = True
    if unpruned is not None:
        agree = unpruned.value == r.value and unpruned.witness == r.witness
        computed["s_unpruned"] = unpruned.value
        computed["pruned_matches_unpruned"] = int(agree)
    return _finish("STEINER_CORONA_EQ", inst, start,
                   ok=r.value == expected and agree,
                   computed=computed, witness=[list(r.witness)])


def check_wheel_steiner(n: int, caps: Caps = Caps()) -> VerificationReport:
    """s(wheel with rim n) = n - 2 for n >= 4."""
    start = time.perf_counter()
    w, _ = corona(complete(1), cycle(n)) if n >= 3 else (complete(1), None)
    inst = _instance([w] if n >= 3 else [], {"n": n})
    try:
        _need(n >= 4, R_N_BELOW_MIN)
        r = _stein(w, caps)
    except _Skip as s:
        return _skipped("WHEEL_STEINER", inst, start, s.reason)
    computed = {"s": r.value, "expected": n - 2}
    return _finish("WHEEL_STEINER", inst, start, ok=r.value == n - 2,
                   computed=computed, witness=[list(r.witness)])


def check_fan_steiner(n: int, caps: Caps = Caps()) -> VerificationReport:
    """s(fan over a path of n) = n - 1 for n >= 3.

    Both s and g of the fan are computed and reported: the claim names the
    formula n - 1, and the report records which invariant actually matches.
    """
    start = time.perf_counter()
    f, _ = corona(complete(1), path(n)) if n >= 2 else (complete(1), None)
    inst = _instance([f] if n >= 2 else [], {"n": n})
    try:
        _need(n >= 3, R_N_BELOW_MIN)
        rs = _stein(f, caps)
        rg = _geo(f, caps)
    except _Skip as s:
        return _skipped("FAN_STEINER", inst, start, s.reason)
    formula = n - 1
    s_matches = rs.value == formula
    g_matches = rg.value == formula
    computed = {
        "s_fan": rs.value,
        "g_fan": rg.value,
        "formula": formula,
        "s_matches": int(s_matches),
        "g_matches": int(g_matches),
    }
    reason = None
    if not s_matches and g_matches:
        reason = "g-matches-formula-instead"
    return _finish("FAN_STEINER", inst, start, ok=s_matches, computed=computed,
                   witness=[list(rs.witness)], reason=reason)


def check_steiner_k1_iff_diam2(H: Graph, caps: Caps = Caps()) -> VerificationReport:
    """s(K1 ⊙ H) = s(H) exactly when H has diameter 2, for connected
    non-complete H."""
    start = time.perf_counter()
    inst = _instance([H], {"n": H.n})
    try:
        _need(is_connected(H), R_H_DISCONNECTED)
        _need(not is_complete(H), R_H_COMPLETE)
        s_h = _stein(H, caps)
        s_k1 = _stein(_k1_corona(H), caps)
    except _Skip as s:
        return _skipped("STEINER_K1_IFF_DIAM2", inst, start, s.reason)
    diam = diameter(H)
    left = s_k1.value == s_h.value
    right = diam == 2
    computed = {
        "s_h": s_h.value,
        "s_k1_h": s_k1.value,
        "diameter": diam,
        "left": int(left),
        "right": int(right),
    }
    return _finish("STEINER_K1_IFF_DIAM2", inst, start, ok=left == right, computed=computed)


# ---------------------------------------------------------------------------
# Geodetic-vs-Steiner checkers.


def check_diam2_steiner_geodetic(G: Graph, caps: Caps = Caps()) -> VerificationReport:
    """On diameter-2 graphs every Steiner set is geodetic.

    Order <= 8: enumerate every Steiner set and test it.  Any order within
    caps: assert g <= s and that the canonical minimum Steiner witness is
    geodetic.
    """
    start = time.perf_counter()
    inst = _instance([G], {"n": G.n})
    try:
        _need(diameter(G) == 2, R_DIAM_NE_2)
        rg = _geo(G, caps)
        rs = _stein(G, caps)
    except _Skip as s:
        return _skipped("DIAM2_STEINER_GEODETIC", inst, start, s.reason)
    tier_a = G.n <= 8
    checked = 0
    offender: Mask | None = None
    if tier_a:
        for members in range(1, 1 << G.n):
            if is_steiner_set(G, members, terminal_cap=caps.terminals):
                checked += 1
                if not is_geodetic(G, members):
                    offender = members
                    break
    min_witness_geodetic = is_geodetic(G, mask_of(rs.witness))
    computed = {
        "g": rg.value,
        "s": rs.value,
        "tier_a": int(tier_a),
        "steiner_sets_checked": checked,
        "min_steiner_witness_geodetic": int(min_witness_geodetic),
    }
    ok = rg.value <= rs.value and min_witness_geodetic and offender is None
    witness = [list(vertex_tuple(offender))] if offender is not None else [list(rs.witness)]
    return _finish("DIAM2_STEINER_GEODETIC", inst, start, ok=ok, computed=computed,
                   witness=witness)


def check_diam2_g_le_s(G: Graph, caps: Caps = Caps()) -> VerificationReport:
    """g(G) <= s(G) on diameter-2 graphs."""
    start = time.perf_counter()
    inst = _instance([G], {"n": G.n})
    try:
        _need(diameter(G) == 2, R_DIAM_NE_2)
        rg = _geo(G, caps)
        rs = _stein(G, caps)
    except _Skip as s:
        return _skipped("DIAM2_G_LE_S", inst, start, s.reason)
    computed = {"g": rg.value, "s": rs.value}
    return _finish("DIAM2_G_LE_S", inst, start, ok=rg.value <= rs.value,
                   computed=computed, witness=[list(rg.witness), list(rs.witness)])


def check_corona_g_le_s(G: Graph, H: Graph, caps: Caps = Caps()) -> VerificationReport:
    """g(G ⊙ H) <= s(G ⊙ H) for connected G of order >= 2 and non-complete H,
    replaying the chain g = n1·g(K1⊙H) <= n1·s(K1⊙H) <= n1·n2 = s."""
    start = time.perf_counter()
    inst = _instance([G, H], {"n1": G.n, "n2": H.n})
    try:
        _need(is_connected(G), R_G_DISCONNECTED)
        _need(G.n >= 2, R_N1_LT_2)
        _need(not is_complete(H), R_H_COMPLETE)
        prod, layout = _build_corona(G, H)
        g_prod = _geo(prod, caps)
        s_prod = _stein(prod, caps, layout=layout)
        k1h = _k1_corona(H)
        g_k1h = _geo(k1h, caps)
        s_k1h = _stein(k1h, caps)
    except _Skip as s:
        return _skipped("CORONA_G_LE_S", inst, start, s.reason)
    sub1 = g_prod.value == G.n * g_k1h.value
    sub2 = g_k1h.value <= s_k1h.value
    sub3 = s_k1h.value <= H.n
    sub4 = s_prod.value == G.n * H.n
    main = g_prod.value <= s_prod.value
    computed = {
        "g_product": g_prod.value,
        "s_product": s_prod.value,
        "g_k1_h": g_k1h.value,
        "s_k1_h": s_k1h.value,
        "chain_g_eq": int(sub1),
        "chain_g_le_s_k1": int(sub2),
        "chain_s_k1_le_n2": int(sub3),
        "chain_s_eq": int(sub4),
    }
    ok = main and sub1 and sub2 and sub3 and sub4
    return _finish("CORONA_G_LE_S", inst, start, ok=ok, computed=computed,
                   witness=[list(g_prod.witness), list(s_prod.witness)])


def check_wheel_fan_formulas(n_range: tuple[int, int], caps: Caps = Caps()) -> list[VerificationReport]:
    """All four wheel/fan closed forms over one parameter range."""
    lo, hi = n_range
    reports = []
    for n in range(lo, hi + 1):
        reports.append(check_wheel_geo(n, caps))
        reports.append(check_fan_geo(n, caps))
        reports.append(check_wheel_steiner(n, caps))
        reports.append(check_fan_steiner(n, caps))
    return reports


# ---------------------------------------------------------------------------
# Registry and corpus runner.


@dataclass(frozen=True)
class TheoremInfo:
    id: str
    kind: str  # "single" | "pair" | "range" | "g_range" | "pendant"
    checker: Callable[..., VerificationReport]
    claim: str


THEOREMS: dict[str, TheoremInfo] = {
    info.id: info
    for info in [
        TheoremInfo("GEO_KN", "single", check_geo_kn,
                    "g(G) = n iff G is complete"),
        TheoremInfo("CORONA_GEO_STRUCT", "pair", check_corona_structure_geo,
                    "structure of minimum geodetic sets of G ⊙ H"),
        TheoremInfo("GEO_K1_LB", "single", check_geo_k1_lb,
                    "g(K1 ⊙ H) >= g(H)"),
        TheoremInfo("EXTREME_IN_GEODETIC", "single", check_extreme_in_geodetic,
                    "minimum geodetic witnesses contain all extreme vertices"),
        TheoremInfo("GEO_BOUNDS", "pair", check_geo_bounds,
                    "n1·g(H) <= g(G ⊙ H) <= n1·n2, equality and sharpening"),
        TheoremInfo("GEO_CORONA_EQ", "pair", check_geo_corona_eq,
                    "g(G ⊙ H) = n1·g(K1 ⊙ H) for non-complete H"),
        TheoremInfo("WHEEL_GEO", "range", check_wheel_geo,
                    "g(wheel_n) = ceil(n/2) for n >= 4"),
        TheoremInfo("FAN_GEO", "range", check_fan_geo,
                    "g(fan_n) = ceil((n+1)/2) for n >= 3"),
        TheoremInfo("CORONA_CYCLE_PATH", "g_range", check_corona_cycle_path,
                    "g(G ⊙ C_n) and g(G ⊙ P_n) closed forms"),
        TheoremInfo("G2_EQUIV", "single", check_g2_equivalence,
                    "g(H) = g(K1 ⊙ H) iff g(H) = g2(H)"),
        TheoremInfo("G2_CORONA_EQUIV", "pair", check_g2_corona_equiv,
                    "g(G ⊙ H) = n1·g(H) iff g(H) = g2(H)"),
        TheoremInfo("DIAM2_GEO_EQ", "pair", check_diam2_geo_eq,
                    "diameter-2 H gives g(G ⊙ H) = n1·g(H)"),
        TheoremInfo("PENDANT_COROLLARY", "pendant", check_pendant_corollary,
                    "g(G ⊙ (H ⊙ N_k)) = n1·n2·k"),
        TheoremInfo("GEO_LOWER_MINUS1", "pair", check_geo_lower_minus1,
                    "g(H) != g2(H) gives g(G ⊙ H) >= n1·(g(H)-1)"),
        TheoremInfo("STEINER_KN", "single", check_steiner_kn,
                    "s(G) = n iff G is complete"),
        TheoremInfo("STEINER_CORONA_STRUCT", "pair", check_corona_structure_steiner,
                    "structure of minimum Steiner sets of G ⊙ H"),
        TheoremInfo("STEINER_K1_LB", "single", check_steiner_k1_lb,
                    "s(K1 ⊙ G) >= s(G)"),
        TheoremInfo("STEINER_CORONA_EQ", "pair", check_steiner_corona_eq,
                    "s(G ⊙ H) = n1·n2 for n1 >= 2"),
        TheoremInfo("WHEEL_STEINER", "range", check_wheel_steiner,
                    "s(wheel_n) = n - 2 for n >= 4"),
        TheoremInfo("FAN_STEINER", "range", check_fan_steiner,
                    "s(fan_n) = n - 1 for n >= 3 (g also reported)"),
        TheoremInfo("STEINER_K1_IFF_DIAM2", "single", check_steiner_k1_iff_diam2,
                    "s(K1 ⊙ H) = s(H) iff H has diameter 2"),
        TheoremInfo("DIAM2_STEINER_GEODETIC", "single", check_diam2_steiner_geodetic,
                    "every Steiner set of a diameter-2 graph is geodetic"),
        TheoremInfo("DIAM2_G_LE_S", "single", check_diam2_g_le_s,
                    "g(G) <= s(G) on diameter-2 graphs"),
        TheoremInfo("CORONA_G_LE_S", "pair", check_corona_g_le_s,
                    "g(G ⊙ H) <= s(G ⊙ H) with the four-step chain"),
    ]
}

THEOREM_IDS = tuple(sorted(THEOREMS))


def _entry_report(theorem: str, entry: CorpusEntry) -> VerificationReport:
    return VerificationReport(
        theorem,
        {"g6": [], "params": {"source": entry.source}},
        {},
        SKIPPED,
        reason=f"{R_PARSE}: {entry.error}",
    )


def _execute(item: tuple) -> VerificationReport:
    theorem, args, caps = item
    for a in args:
        if isinstance(a, CorpusEntry):
            return _entry_report(theorem, a)
    return THEOREMS[theorem].checker(*args, caps)


def build_items(
    theorem: str,
    *,
    corpus: CorpusSpec | None = None,
    corpus_h: CorpusSpec | None = None,
    n_range: tuple[int, int] | None = None,
    k: int | None = None,
    caps: Caps = Caps(),
) -> list[tuple]:
    """Materialize the work items for a corpus run, in canonical order."""
    if theorem not in THEOREMS:
        raise DomainError(f"unknown theorem id {theorem!r}")
    kind = THEOREMS[theorem].kind
    if kind == "single":
        if corpus is None:
            raise DomainError(f"{theorem} needs a graph corpus")
        return [(theorem, (g,), caps) for g in corpus.load()]
    if kind == "pair":
        if corpus is None or corpus_h is None:
            raise DomainError(f"{theorem} needs corpora for both factors")
        hs = corpus_h.load()
        return [(theorem, (g, h), caps) for g in corpus.load() for h in hs]
    if kind == "range":
        if n_range is None:
            raise DomainError(f"{theorem} needs a parameter range")
        return [(theorem, (n,), caps) for n in range(n_range[0], n_range[1] + 1)]
    if kind == "g_range":
        if corpus is None or n_range is None:
            raise DomainError(f"{theorem} needs a graph corpus and a parameter range")
        return [
            (theorem, (g, n), caps)
            for g in corpus.load()
            for n in range(n_range[0], n_range[1] + 1)
        ]
    if kind == "pendant":
        if corpus is None or corpus_h is None or k is None:
            raise DomainError(f"{theorem} needs two corpora and k")
        hs = corpus_h.load()
        return [(theorem, (g, h, k), caps) for g in corpus.load() for h in hs]
    raise AssertionError(f"unhandled theorem kind {kind!r}")


def run_corpus(
    theorem: str,
    *,
    corpus: CorpusSpec | None = None,
    corpus_h: CorpusSpec | None = None,
    n_range: tuple[int, int] | None = None,
    k: int | None = None,
    caps: Caps = Caps(),
    parallel: int = 1,
) -> list[VerificationReport]:
    """Run one checker over a corpus; reports come back in canonical instance
    order regardless of the degree of parallelism."""
    items = build_items(theorem, corpus=corpus, corpus_h=corpus_h,
                        n_range=n_range, k=k, caps=caps)
    if parallel > 1 and len(items) > 1:
        with get_context().Pool(parallel) as pool:
            return pool.map(_execute, items)
    return [_execute(item) for item in items]
