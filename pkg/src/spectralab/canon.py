"""Canonical labelling by equitable refinement and individualisation.

The canonical form of a graph is the relabelling whose graph6 bit vector is
lexicographically least among the leaves of the refinement search tree.
Automorphisms discovered at equal leaves prune sibling branches.
"""

from __future__ import annotations

from .errors import Counter
from .graph import Graph


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition."""
    while True:
        masks = []
        for cell in cells:
            mk = 0
            for v in cell:
                mk |= 1 << v
            masks.append(mk)
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {}
            for v in cell:
                row = adj[v]
                key = tuple((row & mk).bit_count() for mk in masks)
                sig.setdefault(key, []).append(v)
            if len(sig) == 1:
                out.append(cell)
                continue
            changed = True
            for key in sorted(sig):
                out.append(sig[key])
        cells = out
        if not changed:
            return cells


def _leaf_key(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    key = []
    for j in range(1, len(order)):
        row = adj[order[j]]
        c = 0
        for i in range(j):
            c = c << 1 | (row >> order[i] & 1)
        key.append(c)
    return tuple(key)


class _Search:
    def __init__(self, g: Graph, budget: int | None):
        self.adj = g.adj
        self.n = g.n
        self.best_key: tuple[int, ...] | None = None
        self.best_order: list[int] | None = None
        self.first_order: list[int] | None = None
        self.first_key: tuple[int, ...] | None = None
        self.generators: list[list[int]] = []
        self.counter = Counter("canonical labelling", budget)

    def _orbit_rep(self, prefix: list[int]):
        gens = [p for p in self.generators if all(p[v] == v for v in prefix)]
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p in gens:
            for v in range(self.n):
                a, b = find(v), find(p[v])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return find

    def _automorphism(self, order: list[int], other: list[int]) -> None:
        perm = [0] * self.n
        for i, v in enumerate(order):
            perm[v] = other[i]
        if any(perm[v] != v for v in range(self.n)):
            self.generators.append(perm)

    def _record_leaf(self, order: list[int]) -> None:
        key = _leaf_key(self.adj, order)
        if self.first_order is None:
            self.first_order, self.first_key = order, key
        elif key == self.first_key:
            self._automorphism(order, self.first_order)
        if self.best_key is None or key < self.best_key:
            self.best_key = key
            self.best_order = order
        elif key == self.best_key and self.best_order is not self.first_order:
            self._automorphism(order, self.best_order)

    def run(self, cells: list[list[int]], prefix: list[int]) -> None:
        self.counter.tick()
        cells = _refine(self.adj, cells)
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                target = idx
                break
        if target is None:
            self._record_leaf([cell[0] for cell in cells])
            return
        cell = cells[target]
        explored: list[int] = []
        for v in sorted(cell):
            if explored:
                find = self._orbit_rep(prefix)
                rv = find(v)
                if any(find(u) == rv for u in explored):
                    continue
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1 :]
            self.run(child, prefix + [v])
            explored.append(v)


def canonical_labeling(g: Graph, budget: int | None = None) -> list[int]:
    """Return ``order`` with ``order[i]`` the original vertex given label ``i``."""
    if g.n <= 1:
        return list(range(g.n))
    cached = g._cache.get("canon_order")
    if cached is not None:
        return cached
    degs = g.degrees()
    by_deg: dict[int, list[int]] = {}
    for v, d in enumerate(degs):
        by_deg.setdefault(d, []).append(v)
    cells = [by_deg[d] for d in sorted(by_deg)]
    search = _Search(g, budget)
    search.run(cells, [])
    g._cache["canon_order"] = search.best_order
    return search.best_order


def canonical_form(g: Graph) -> Graph:
    order = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def canonical_graph6(g: Graph) -> str:
    return g.cached("canon_g6", lambda h: canonical_form(h).to_graph6())


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_graph6(g) == canonical_graph6(h)


def automorphism_generators(g: Graph) -> list[list[int]]:
    """Generators (not necessarily minimal) of the automorphism group found en route."""
    if g.n <= 1:
        return []
    degs = g.degrees()
    by_deg: dict[int, list[int]] = {}
    for v, d in enumerate(degs):
        by_deg.setdefault(d, []).append(v)
    search = _Search(g, None)
    search.run([by_deg[d] for d in sorted(by_deg)], [])
    return search.generators
