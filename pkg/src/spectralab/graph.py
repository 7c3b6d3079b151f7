"""Immutable simple graphs stored as adjacency bitmasks, plus graph6 I/O.

Vertex ``v`` of a :class:`Graph` is the integer ``v`` in ``range(n)``; row ``v``
of the adjacency is an ``int`` whose bit ``u`` is set iff ``uv`` is an edge.
Vertex sets are plain ``int`` bitmasks over the same labels.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import InvalidParameters, MalformedInput

MAX_ORDER = 512
ENUM_MAX_ORDER = 64

VertexSet = int


def mask_of(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(x: int) -> int:
    return x.bit_count()


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Instances are immutable and hashable; every edit returns a new graph.
    """

    __slots__ = ("_n", "_adj", "_m", "_cache")

    def __init__(self, n: int, adj: Sequence[int]):
        if not 0 <= n <= MAX_ORDER:
            raise InvalidParameters(f"order {n} outside 0..{MAX_ORDER}")
        if len(adj) != n:
            raise InvalidParameters("adjacency must have one row per vertex")
        full = (1 << n) - 1
        rows = tuple(int(r) for r in adj)
        for v, row in enumerate(rows):
            if row & ~full:
                raise InvalidParameters(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise InvalidParameters(f"self-loop at vertex {v}")
        for v, row in enumerate(rows):
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not rows[u] >> v & 1:
                    raise InvalidParameters(f"adjacency not symmetric at ({v}, {u})")
                r ^= low
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_adj", rows)
        object.__setattr__(self, "_m", sum(r.bit_count() for r in rows) // 2)
        object.__setattr__(self, "_cache", {})

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...], m: int | None = None) -> "Graph":
        g = object.__new__(cls)
        object.__setattr__(g, "_n", n)
        object.__setattr__(g, "_adj", rows)
        object.__setattr__(g, "_m", sum(r.bit_count() for r in rows) // 2 if m is None else m)
        object.__setattr__(g, "_cache", {})
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph._trusted, (self._n, self._adj, self._m))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise InvalidParameters(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameters(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    @classmethod
    def from_matrix(cls, a) -> "Graph":
        a = np.asarray(a)
        n = a.shape[0]
        rows = [mask_of(np.flatnonzero(a[i])) for i in range(n)]
        return cls(n, rows)

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def order(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def edge_count(self) -> int:
        return self._m

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return members(self._adj[v])

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self._adj):
            for v in members(row >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def vertex_mask(self) -> VertexSet:
        return (1 << self._n) - 1

    def adjacency_matrix(self) -> np.ndarray:
        a = self._cache.get("A")
        if a is None:
            a = np.zeros((self._n, self._n), dtype=np.float64)
            for u, v in self.edges():
                a[u, v] = a[v, u] = 1.0
            a.setflags(write=False)
            self._cache["A"] = a
        return a

    def cached(self, key, fn):
        """Memoise a derived quantity on this (immutable) graph."""
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = fn(self)
            return value

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m}, g6={self.to_graph6()!r})"

    # -- graph6 ------------------------------------------------------------

    def to_graph6(self) -> str:
        return to_graph6(self)

    @classmethod
    def from_graph6(cls, text: str) -> "Graph":
        return from_graph6(text)

    # -- constructions -----------------------------------------------------

    def complement(self) -> "Graph":
        full = self.vertex_mask()
        return Graph._trusted(self._n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self._adj)))

    def induced(self, vertices: VertexSet | Iterable[int]) -> "Graph":
        """Subgraph induced by ``vertices``, relabelled in increasing order."""
        keep = members(vertices) if isinstance(vertices, int) else sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            r = 0
            for u in members(self._adj[v]):
                if u in index:
                    r |= 1 << index[u]
            rows.append(r)
        return Graph._trusted(len(keep), tuple(rows))

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced(self.vertex_mask() & ~(1 << v))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self._n
        for v, row in enumerate(self._adj):
            r = 0
            for u in members(row):
                r |= 1 << perm[u]
            rows[perm[v]] = r
        return Graph._trusted(self._n, tuple(rows), self._m)

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise InvalidParameters("self-loop")
        rows = list(self._adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._trusted(self._n, tuple(rows))

    def without_edge(self, u: int, v: int) -> "Graph":
        rows = list(self._adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._trusted(self._n, tuple(rows))

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self._n))
        g.add_edges_from(self.edges())
        return g

    @classmethod
    def from_networkx(cls, g) -> "Graph":
        nodes = sorted(g.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in g.edges()))


# -- combinators -----------------------------------------------------------


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(r << offset for r in g.adj)
        offset += g.n
    if offset > MAX_ORDER:
        raise InvalidParameters(f"union has {offset} > {MAX_ORDER} vertices")
    return Graph._trusted(offset, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """``g`` on vertices ``0..g.n-1`` joined to ``h`` on the following block."""
    if g.n + h.n > MAX_ORDER:
        raise InvalidParameters(f"join has {g.n + h.n} > {MAX_ORDER} vertices")
    hmask = ((1 << h.n) - 1) << g.n
    gmask = (1 << g.n) - 1
    rows = [r | hmask for r in g.adj] + [(r << g.n) | gmask for r in h.adj]
    return Graph._trusted(g.n + h.n, tuple(rows))


def blow_up(g: Graph, sizes: Sequence[int]) -> Graph:
    """Replace vertex ``v`` by an independent set of ``sizes[v]`` copies."""
    if len(sizes) != g.n:
        raise InvalidParameters("need one multiplicity per vertex")
    if any(s < 1 for s in sizes):
        raise InvalidParameters("multiplicities must be >= 1")
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    total = starts[-1]
    if total > MAX_ORDER:
        raise InvalidParameters(f"blow-up has {total} > {MAX_ORDER} vertices")
    block = [((1 << sizes[v]) - 1) << starts[v] for v in range(g.n)]
    rows = []
    for v in range(g.n):
        r = 0
        for u in members(g.adj[v]):
            r |= block[u]
        rows.extend([r] * sizes[v])
    return Graph._trusted(total, tuple(rows))


def complement(g: Graph) -> Graph:
    return g.complement()


def induced(g: Graph, s: VertexSet | Iterable[int]) -> Graph:
    return g.induced(s)


# -- structure queries -----------------------------------------------------


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = component_mask(g, 1 << v)
        seen |= comp
        out.append(members(comp))
    return out


def component_mask(g: Graph, start: int, within: int | None = None) -> int:
    """Bitmask of the component containing the vertices of ``start``."""
    allowed = g.vertex_mask() if within is None else within
    reach = start & allowed
    frontier = reach
    adj = g.adj
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= allowed & ~reach
        reach |= nxt
        frontier = nxt
    return reach


def count_components(g: Graph, within: int | None = None) -> int:
    """Number of components of the subgraph induced by ``within``."""
    rest = g.vertex_mask() if within is None else within
    c = 0
    while rest:
        comp = component_mask(g, rest & -rest, rest)
        rest &= ~comp
        c += 1
    return c


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return component_mask(g, 1) == g.vertex_mask()


def degrees(g: Graph) -> list[int]:
    return g.degrees()


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    adj = g.adj
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in members(adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def bipartition(g: Graph) -> list[int] | None:
    """A proper 2-colouring (list of 0/1 per vertex) or ``None``."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in members(g.adj[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_bipartite(g: Graph) -> tuple[bool, list[int] | None]:
    coloring = bipartition(g)
    return coloring is not None, coloring


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_forest(g: Graph) -> bool:
    return g.m == g.n - count_components(g)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


# -- graph6 ----------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    """graph6 line (without trailing newline) for ``g``."""
    bits = []
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    chars = [_encode_n(g.n)]
    for k in range(0, len(bits), 6):
        b = bits[k : k + 6]
        chars.append(chr(63 + (b[0] << 5 | b[1] << 4 | b[2] << 3 | b[3] << 2 | b[4] << 1 | b[5])))
    return "".join(chars)


def from_graph6(text: str) -> Graph:
    """Parse one graph6 line; a ``>>graph6<<`` prefix is tolerated."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
    if not s:
        raise MalformedInput("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise MalformedInput(f"graph6 character out of range in {text!r}")
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise MalformedInput("truncated graph6 header")
        n = 0
        for d in data[2:8]:
            n = n << 6 | d
        pos = 8
    else:
        if len(data) < 4:
            raise MalformedInput("truncated graph6 header")
        n = data[1] << 12 | data[2] << 6 | data[3]
        pos = 4
    if n > MAX_ORDER:
        raise MalformedInput(f"graph6 order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise MalformedInput(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph._trusted(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str], errors: list | None = None) -> Iterator[Graph]:
    """Parse graph6 lines, skipping blanks; malformed lines go to ``errors``."""
    for lineno, line in enumerate(lines, 1):
        s = line.strip()
        if not s or s == _G6_HEADER:
            continue
        try:
            yield from_graph6(s)
        except MalformedInput as exc:
            if errors is None:
                raise
            errors.append((lineno, str(exc)))
