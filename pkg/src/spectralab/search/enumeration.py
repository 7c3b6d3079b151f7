"""Non-isomorphic graph generation with an on-disk cache.

Every graph on ``n`` vertices arises from a graph on ``n - 1`` vertices by
adding a vertex of minimum degree: the new vertex gets ``d`` neighbours where
``d`` is at most one more than the parent's minimum degree and no old vertex
ends up with degree below ``d``.  Children are deduplicated by canonical form.
"""

from __future__ import annotations

import logging
import os
from itertools import combinations
from pathlib import Path
from typing import Iterator

from ..canon import canonical_graph6
from ..errors import InvalidParameters
from ..graph import Graph, from_graph6, is_connected

log = logging.getLogger(__name__)

MAX_ENUM_ORDER = 9
MAX_BOUNDED_DEGREE_ORDER = 12

# OEIS A000088 and A001349
GRAPH_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}


def cache_dir() -> Path:
    root = os.environ.get("SPECTRALAB_CACHE")
    base = Path(root) if root else Path.home() / ".cache" / "spectralab"
    return base / "graphs"


def _children(g: Graph, max_degree: int | None) -> Iterator[Graph]:
    n = g.n
    degs = g.degrees()
    low = min(degs, default=0)
    top = min(low + 1, n) if max_degree is None else min(low + 1, n, max_degree)
    for d in range(top + 1):
        for s in combinations(range(n), d):
            mask = 0
            for v in s:
                mask |= 1 << v
            if any(degs[v] + (mask >> v & 1) < d for v in range(n)):
                continue
            if max_degree is not None and any(degs[v] >= max_degree for v in s):
                continue
            rows = list(g.adj)
            bit = 1 << n
            for v in s:
                rows[v] |= bit
            rows.append(mask)
            yield Graph._trusted(n + 1, tuple(rows))


def _extend(layer: list[str], max_degree: int | None) -> list[str]:
    seen: set[str] = set()
    for code in layer:
        for child in _children(from_graph6(code), max_degree):
            seen.add(canonical_graph6(child))
    return sorted(seen)


def _path(n: int, max_degree: int | None) -> Path:
    suffix = "" if max_degree is None else f"_d{max_degree}"
    return cache_dir() / f"n{n}{suffix}.g6"


def _load(n: int, max_degree: int | None) -> list[str] | None:
    p = _path(n, max_degree)
    if not p.exists():
        return None
    try:
        codes = p.read_text().split()
    except OSError:
        return None
    if max_degree is None and len(codes) != GRAPH_COUNTS.get(n, len(codes)):
        log.warning("discarding cache file %s with %d graphs", p, len(codes))
        return None
    return codes


def _store(n: int, max_degree: int | None, codes: list[str]) -> None:
    p = _path(n, max_degree)
    try:
        p.parent.mkdir(parents=True, exist_ok=True)
        tmp = p.with_suffix(f".tmp{os.getpid()}")
        tmp.write_text("".join(c + "\n" for c in codes))
        os.replace(tmp, p)
    except OSError as exc:
        log.warning("could not write graph cache %s: %s", p, exc)


def graph6_layer(n: int, max_degree: int | None = None, use_cache: bool = True) -> list[str]:
    """Sorted canonical graph6 codes of all graphs on ``n`` vertices."""
    limit = MAX_ENUM_ORDER if max_degree is None else MAX_BOUNDED_DEGREE_ORDER
    if not 0 <= n <= limit:
        raise InvalidParameters(f"built-in enumeration supports n <= {limit}; supply a graph6 stream instead")
    if n == 0:
        return [canonical_graph6(Graph.empty(0))]
    if n == 1:
        return [canonical_graph6(Graph.empty(1))]
    if use_cache:
        codes = _load(n, max_degree)
        if codes is not None:
            return codes
    codes = _extend(graph6_layer(n - 1, max_degree, use_cache), max_degree)
    if use_cache:
        _store(n, max_degree, codes)
    return codes


def enumerate_graphs(
    n: int, connected: bool = False, max_degree: int | None = None, use_cache: bool = True
) -> Iterator[Graph]:
    """Each isomorphism class on ``n`` vertices once, in canonical graph6 order."""
    for code in graph6_layer(n, max_degree, use_cache):
        g = from_graph6(code)
        if connected and not is_connected(g):
            continue
        yield g


def count_graphs(n: int, connected: bool = False) -> int:
    return sum(1 for _ in enumerate_graphs(n, connected))
