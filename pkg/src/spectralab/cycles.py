"""Cycle spectrum, Hamiltonicity, and small-pattern subgraph counts."""

from __future__ import annotations

from math import comb

from .errors import Counter, InvalidParameters
from .graph import Graph, component_mask, members


def cycle_spectrum(g: Graph, max_len: int | None = None, budget: int | None = None) -> set[int]:
    """Set of lengths ``3 <= l <= max_len`` such that ``g`` contains ``C_l``.

    Each cycle is grown from its least vertex through larger vertices only.
    A branch is cut when every length it could still close is already known.
    """
    n = g.n
    top = n if max_len is None else min(max_len, n)
    wanted = set(range(3, top + 1))
    found: set[int] = set()
    if not wanted:
        return found
    adj = g.adj
    counter = Counter("cycle spectrum", budget)

    def extend(start: int, u: int, visited: int, length: int, allowed: int) -> bool:
        counter.tick()
        if length >= 3 and adj[u] >> start & 1 and length not in found and length <= top:
            found.add(length)
            if found >= wanted:
                return True
        if length >= top:
            return False
        left = (allowed & ~visited).bit_count()
        if all(l in found for l in range(max(length + 1, 3), min(top, length + left) + 1)):
            return False
        cand = adj[u] & allowed & ~visited
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            if extend(start, w, visited | low, length + 1, allowed):
                return True
            cand ^= low
        return False

    full = g.vertex_mask()
    for s in range(n):
        allowed = full & ~((1 << s) - 1)
        # restrict to the component of s among vertices >= s
        allowed = component_mask(g, 1 << s, allowed)
        if allowed.bit_count() < 3:
            continue
        if extend(s, s, 1 << s, 1, allowed):
            break
    return found


def is_hamiltonian(g: Graph, budget: int | None = None) -> bool:
    """Exact Hamilton-cycle test by pruned backtracking from vertex 0."""
    n = g.n
    if n < 3:
        return False
    adj = g.adj
    if any(r.bit_count() < 2 for r in adj):
        return False
    full = g.vertex_mask()
    if component_mask(g, 1) != full:
        return False
    counter = Counter("hamiltonicity", budget)

    def feasible(u: int, unvisited: int) -> bool:
        live = unvisited | (1 << u) | 1
        r = unvisited
        while r:
            low = r & -r
            w = low.bit_length() - 1
            if (adj[w] & live).bit_count() < 2:
                return False
            r ^= low
        return component_mask(g, 1 << u, unvisited | (1 << u)) == unvisited | (1 << u)

    def extend(u: int, unvisited: int) -> bool:
        counter.tick()
        if not unvisited:
            return bool(adj[u] & 1)
        if not feasible(u, unvisited):
            return False
        cand = members(adj[u] & unvisited)
        # fewest onward options first
        cand.sort(key=lambda w: (adj[w] & unvisited).bit_count())
        for w in cand:
            if extend(w, unvisited & ~(1 << w)):
                return True
        return False

    return extend(0, full & ~1)


def _count_cliques(g: Graph, r: int) -> int:
    adj = g.adj

    def grow(cand: int, k: int) -> int:
        if k == 0:
            return 1
        if k == 1:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            total += grow(cand & adj[v], k - 1)
        return total

    return grow(g.vertex_mask(), r)


def count_copies(g: Graph, pattern: str) -> int:
    """Number of (unlabelled) subgraph copies of ``triangle``, ``C4`` or ``K<r>``."""
    p = pattern.strip().lower()
    if p in ("triangle", "c3", "k3"):
        return _count_cliques(g, 3)
    if p == "c4":
        total = 0
        adj = g.adj
        for u in range(g.n):
            for v in range(u + 1, g.n):
                total += comb((adj[u] & adj[v]).bit_count(), 2)
        return total // 2
    if p.startswith("k") and p[1:].isdigit():
        r = int(p[1:])
        if not 1 <= r <= 6:
            raise InvalidParameters("clique patterns are K1..K6")
        return _count_cliques(g, r)
    raise InvalidParameters(f"unknown pattern {pattern!r}; use triangle, C4 or K<r>")
