"""Exact NP-hard invariants: clique, independence, chromatic number, toughness."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import Counter, NotConnected
from .graph import Graph, count_components, is_complete, is_connected, members


def _color_sort(adj: tuple[int, ...], p: int) -> tuple[list[int], list[int]]:
    """Greedy colouring of ``p``; returns vertices and their colour numbers in order."""
    order, bounds = [], []
    color = 0
    uncolored = p
    while uncolored:
        color += 1
        q = uncolored
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~adj[v] & ~low
            uncolored &= ~low
            order.append(v)
            bounds.append(color)
    return order, bounds


def maximum_clique(g: Graph, budget: int | None = None) -> list[int]:
    """A maximum clique, by bitset branch and bound with colouring bounds."""
    if g.n == 0:
        return []
    adj = g.adj
    best: list[int] = []
    counter = Counter("maximum clique", budget)

    def expand(r: list[int], p: int) -> None:
        nonlocal best
        counter.tick()
        order, bounds = _color_sort(adj, p)
        for i in range(len(order) - 1, -1, -1):
            if len(r) + bounds[i] <= len(best):
                return
            v = order[i]
            np_ = p & adj[v]
            if np_:
                expand(r + [v], np_)
            elif len(r) + 1 > len(best):
                best = r + [v]
            p &= ~(1 << v)

    expand([], g.vertex_mask())
    return sorted(best)


def clique_number(g: Graph, budget: int | None = None) -> int:
    return g.cached("omega", lambda h: len(maximum_clique(h, budget)))


def maximum_independent_set(g: Graph, budget: int | None = None) -> list[int]:
    return maximum_clique(g.complement(), budget)


def independence_number(g: Graph, budget: int | None = None) -> int:
    return g.cached("alpha", lambda h: len(maximum_independent_set(h, budget)))


def maximal_independent_sets(g: Graph, budget: int | None = None):
    """Yield every maximal independent set as a bitmask (Bron-Kerbosch with pivoting)."""
    comp = g.complement().adj
    counter = Counter("maximal independent sets", budget)

    def bk(r: int, p: int, x: int):
        counter.tick()
        if not p and not x:
            yield r
            return
        pivot_pool = p | x
        u = max(members(pivot_pool), key=lambda w: (p & comp[w]).bit_count())
        for v in members(p & ~comp[u]):
            bit = 1 << v
            yield from bk(r | bit, p & comp[v], x & comp[v])
            p &= ~bit
            x |= bit

    if g.n == 0:
        yield 0
        return
    yield from bk(0, g.vertex_mask(), 0)


def chromatic_number(g: Graph, budget: int | None = None) -> int:
    return g.cached("chi", lambda h: _chromatic(h, budget))


def _chromatic(g: Graph, budget: int | None) -> int:
    """DSATUR branch and bound seeded with a maximum clique."""
    n = g.n
    if n == 0:
        return 0
    if g.m == 0:
        return 1
    adj = g.adj
    clique = maximum_clique(g, budget)
    lb = len(clique)
    colors = [-1] * n

    def dsatur_greedy() -> int:
        col = [-1] * n
        used = 0
        for _ in range(n):
            v = max(
                (w for w in range(n) if col[w] < 0),
                key=lambda w: (len({col[u] for u in members(adj[w]) if col[u] >= 0}), adj[w].bit_count()),
            )
            taken = {col[u] for u in members(adj[v]) if col[u] >= 0}
            c = 0
            while c in taken:
                c += 1
            col[v] = c
            used = max(used, c + 1)
        return used

    best = dsatur_greedy()
    if best == lb:
        return best
    for i, v in enumerate(clique):
        colors[v] = i
    counter = Counter("chromatic number", budget)

    def search(ncolored: int, used: int) -> None:
        nonlocal best
        counter.tick()
        if ncolored == n:
            best = min(best, used)
            return
        v, vtaken, top = -1, 0, (-1, -1)
        for w in range(n):
            if colors[w] >= 0:
                continue
            taken = 0
            for u in members(adj[w]):
                if colors[u] >= 0:
                    taken |= 1 << colors[u]
            key = (taken.bit_count(), adj[w].bit_count())
            if key > top:
                top, v, vtaken = key, w, taken
        for c in range(min(used + 1, best - 1)):
            if vtaken >> c & 1:
                continue
            colors[v] = c
            search(ncolored + 1, max(used, c + 1))
            colors[v] = -1
            if best == lb:
                return

    search(lb, lb)
    return best


def toughness(g: Graph, budget: int | None = None):
    """Exact toughness as a :class:`Fraction`; ``math.inf`` for complete graphs.

    Cut sets are scanned by increasing size ``s``; once ``s/(n-s)`` reaches
    the best ratio found no larger set can do better.
    """
    return g.cached("toughness", lambda h: _toughness(h, budget))


def _toughness(g: Graph, budget: int | None):
    if not is_connected(g):
        raise NotConnected("toughness is defined here for connected graphs")
    n = g.n
    if is_complete(g):
        return math.inf
    full = g.vertex_mask()
    best = None
    counter = Counter("toughness", budget)
    for s in range(1, n - 1):
        if best is not None and Fraction(s, n - s) >= best:
            break
        for cut in combinations(range(n), s):
            counter.tick()
            mask = 0
            for v in cut:
                mask |= 1 << v
            c = count_components(g, full & ~mask)
            if c > 1:
                ratio = Fraction(s, c)
                if best is None or ratio < best:
                    best = ratio
    return best


def is_clique_free(g: Graph, size: int) -> bool:
    return clique_number(g) < size


def is_saturated(g: Graph, r: int) -> bool:
    """True iff ``g`` is ``K_{r+1}``-free and every added edge creates a ``K_{r+1}``."""
    if r < 2:
        raise ValueError("r must be >= 2")
    if clique_number(g) > r:
        return False
    adj = g.adj
    for u, v in combinations(range(g.n), 2):
        if adj[u] >> v & 1:
            continue
        common = adj[u] & adj[v]
        if common.bit_count() < r - 1:
            return False
        if clique_number(g.induced(common)) < r - 1:
            return False
    return True


@dataclass(frozen=True)
class CombinatorialProfile:
    omega: int
    alpha: int
    chi: int
    delta_min: int
    delta_max: int
    d_bar: float
    toughness: object


def profile(g: Graph, with_toughness: bool = True) -> CombinatorialProfile:
    degs = g.degrees()
    t = None
    if with_toughness and is_connected(g) and g.n >= 1:
        t = toughness(g)
    return CombinatorialProfile(
        omega=clique_number(g),
        alpha=independence_number(g),
        chi=chromatic_number(g),
        delta_min=min(degs, default=0),
        delta_max=max(degs, default=0),
        d_bar=2 * g.m / g.n if g.n else 0.0,
        toughness=t,
    )
