"""Signed graphs, switching, signed spectra and signature minimisation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .errors import BudgetExceeded, MalformedInput, InvalidParameters, NotConnected
from .graph import Graph, from_graph6, is_connected, mask_of, to_graph6
from .spectra import TOL, Spectrum, spectral_radius

MAX_CYCLE_RANK = 24
_CHUNK = 4096


class SignedGraph:
    """A graph with a sign (+1 or -1) on every edge, edges in lexicographic order."""

    __slots__ = ("base", "signs", "_index")

    def __init__(self, base: Graph, signs: Mapping[tuple[int, int], int] | Iterable[int] | None = None):
        edges = base.edges()
        if signs is None:
            vals = [1] * len(edges)
        elif isinstance(signs, Mapping):
            norm = {(min(u, v), max(u, v)): s for (u, v), s in signs.items()}
            if set(norm) != set(edges):
                raise InvalidParameters("signature must be defined on exactly the edges of the graph")
            vals = [norm[e] for e in edges]
        else:
            vals = list(signs)
            if len(vals) != len(edges):
                raise InvalidParameters(f"expected {len(edges)} signs, got {len(vals)}")
        if any(s not in (1, -1) for s in vals):
            raise InvalidParameters("signs must be +1 or -1")
        self.base = base
        self.signs = tuple(vals)
        self._index = {e: i for i, e in enumerate(edges)}

    def sign(self, u: int, v: int) -> int:
        return self.signs[self._index[(min(u, v), max(u, v))]]

    @property
    def signature(self) -> dict[tuple[int, int], int]:
        return dict(zip(self.base.edges(), self.signs))

    def matrix(self) -> np.ndarray:
        n = self.base.n
        a = np.zeros((n, n))
        for (u, v), s in zip(self.base.edges(), self.signs):
            a[u, v] = a[v, u] = s
        return a

    def negative_edges(self) -> list[tuple[int, int]]:
        return [e for e, s in zip(self.base.edges(), self.signs) if s < 0]

    def __eq__(self, other) -> bool:
        return isinstance(other, SignedGraph) and self.base == other.base and self.signs == other.signs

    def __hash__(self) -> int:
        return hash((self.base, self.signs))

    def __repr__(self) -> str:
        return f"SignedGraph({format_signed(self)!r})"


def switch(sg: SignedGraph, u) -> SignedGraph:
    """Flip the signs of the edges between ``u`` and its complement."""
    mask = u if isinstance(u, int) else mask_of(u)
    signs = [
        -s if ((mask >> a) ^ (mask >> b)) & 1 else s
        for (a, b), s in zip(sg.base.edges(), sg.signs)
    ]
    return SignedGraph(sg.base, signs)


def signed_spectrum(sg: SignedGraph, tol: float = TOL) -> Spectrum:
    if sg.base.n == 0:
        raise InvalidParameters("empty graph has no spectrum")
    vals = np.linalg.eigvalsh(sg.matrix())[::-1]
    return Spectrum(tuple(float(x) for x in vals), "signed", tol)


def signed_radius(sg: SignedGraph) -> float:
    return signed_spectrum(sg).radius


def cycle_sign_products(sg: SignedGraph) -> tuple[int, ...]:
    """Sign of each fundamental cycle of a BFS spanning forest (a switching invariant)."""
    tree, cotree = _spanning_tree(sg.base)
    pot = _tree_potentials(sg.base, tree, dict(zip(sg.base.edges(), sg.signs)))
    return tuple(pot[a] * pot[b] * sg.sign(a, b) for a, b in cotree)


def switching_equivalent(a: SignedGraph, b: SignedGraph) -> bool:
    return a.base == b.base and cycle_sign_products(a) == cycle_sign_products(b)


def _spanning_tree(g: Graph) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    seen = 0
    tree = set()
    for root in range(g.n):
        if seen >> root & 1:
            continue
        seen |= 1 << root
        queue = [root]
        for v in queue:
            for w in g.neighbors(v):
                if not seen >> w & 1:
                    seen |= 1 << w
                    tree.add((min(v, w), max(v, w)))
                    queue.append(w)
    edges = g.edges()
    return [e for e in edges if e in tree], [e for e in edges if e not in tree]


def _tree_potentials(g: Graph, tree, signs) -> list[int]:
    """Vertex signs ``p`` with ``p[u] p[v] = sign(uv)`` along tree edges."""
    nbrs: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for a, b in tree:
        nbrs[a].append(b)
        nbrs[b].append(a)
    pot = [0] * g.n
    for root in range(g.n):
        if pot[root]:
            continue
        pot[root] = 1
        stack = [root]
        while stack:
            v = stack.pop()
            for w in nbrs[v]:
                if not pot[w]:
                    pot[w] = pot[v] * signs[(min(v, w), max(v, w))]
                    stack.append(w)
    return pot


def format_signed(sg: SignedGraph) -> str:
    bits = "".join("1" if s < 0 else "0" for s in sg.signs)
    return f"{to_graph6(sg.base)}|{bits}"


def parse_signed(text: str) -> SignedGraph:
    # "|" is itself a graph6 character; the sign bits never contain it
    g6, sep, bits = text.strip().rpartition("|")
    if not sep:
        raise MalformedInput("signed graph line must be 'graph6|bits'")
    g = from_graph6(g6)
    if len(bits) != g.m or set(bits) - {"0", "1"}:
        raise MalformedInput(f"expected {g.m} sign bits of 0/1")
    return SignedGraph(g, [-1 if c == "1" else 1 for c in bits])


@dataclass(frozen=True)
class SignatureMinimum:
    rho_min: float
    rho_witness: SignedGraph
    lambda1_min: float
    lambda1_witness: SignedGraph
    classes: int

    @property
    def degree_bound(self) -> float | None:
        """``2 sqrt(d - 1)`` when the base graph is ``d``-regular with ``d >= 1``."""
        g = self.rho_witness.base
        if not g.is_regular() or g.max_degree() < 1:
            return None
        return 2 * math.sqrt(g.max_degree() - 1)


def min_signature_radius(g: Graph, tol: float = 1e-12) -> SignatureMinimum:
    """Minimum signed spectral radius and minimum largest eigenvalue over all signatures.

    One signature per switching class is evaluated: spanning-tree edges stay
    positive while the co-tree edges range over all sign patterns.  Ties are
    resolved towards the lexicographically least sign bitstring.
    """
    if g.n == 0 or not is_connected(g):
        raise NotConnected("signature minimisation needs a connected graph")
    tree, cotree = _spanning_tree(g)
    c = len(cotree)
    if c > MAX_CYCLE_RANK:
        raise BudgetExceeded("switching classes", 1 << MAX_CYCLE_RANK)
    n = g.n
    base = g.adjacency_matrix().astype(float)
    rows = np.array([a for a, _ in cotree], dtype=np.int64)
    cols = np.array([b for _, b in cotree], dtype=np.int64)
    total = 1 << c
    rho = np.empty(total)
    lam1 = np.empty(total)
    for start in range(0, total, _CHUNK):
        pats = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        flips = 1.0 - 2.0 * ((pats[:, None] >> np.arange(c)) & 1)
        mats = np.broadcast_to(base, (len(pats), n, n)).copy()
        if c:
            mats[:, rows, cols] = flips
            mats[:, cols, rows] = flips
        vals = np.linalg.eigvalsh(mats)
        rho[start : start + len(pats)] = np.maximum(vals[:, -1], -vals[:, 0])
        lam1[start : start + len(pats)] = vals[:, -1]
    edge_pos = {e: i for i, e in enumerate(g.edges())}

    def signature(p: int) -> SignedGraph:
        signs = [1] * g.m
        for j, e in enumerate(cotree):
            if p >> j & 1:
                signs[edge_pos[e]] = -1
        return SignedGraph(g, signs)

    def best(values: np.ndarray) -> tuple[float, SignedGraph]:
        low = float(values.min())
        ties = np.flatnonzero(values <= low + tol)
        cands = [signature(int(p)) for p in ties]
        return low, min(cands, key=lambda s: tuple(x < 0 for x in s.signs))

    r, rw = best(rho)
    l1, lw = best(lam1)
    return SignatureMinimum(r, rw, l1, lw, total)


@dataclass(frozen=True)
class SignedBoundsReport:
    rho_min: float
    lambda1_min: float
    regular_bound: float | None
    regular_slack: float | None
    degree_bound: float | None
    degree_slack: float | None
    radius_bound: float | None
    radius_slack: float | None


def signed_bounds(g: Graph) -> SignedBoundsReport:
    """Slack of the best signature against ``2 sqrt(d-1)``, ``2 sqrt(Delta-1)`` and ``2 sqrt(rho(G)-1)``."""
    res = min_signature_radius(g)
    d = g.max_degree()
    reg = 2 * math.sqrt(d - 1) if g.is_regular() and d >= 1 else None
    deg = 2 * math.sqrt(d - 1) if d >= 1 else None
    lam = spectral_radius(g)
    rad = 2 * math.sqrt(lam - 1) if lam >= 1 else None
    return SignedBoundsReport(
        rho_min=res.rho_min,
        lambda1_min=res.lambda1_min,
        regular_bound=reg,
        regular_slack=None if reg is None else reg - res.rho_min,
        degree_bound=deg,
        degree_slack=None if deg is None else deg - res.rho_min,
        radius_bound=rad,
        radius_slack=None if rad is None else rad - res.rho_min,
    )
