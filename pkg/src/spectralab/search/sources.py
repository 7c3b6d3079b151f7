"""Graph sources: built-in enumeration, graph6 streams, free trees, family sweeps."""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Iterator

from ..errors import InvalidParameters, MalformedInput
from ..families import generate, parse_family_sweep
from ..graph import Graph, is_connected, read_graph6_lines
from .enumeration import enumerate_graphs
from .trees import free_trees

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GraphSource:
    kind: str
    n_min: int = 0
    n_max: int = 0
    connected: bool = False
    max_degree: int | None = None
    path: str | None = None
    family: str | None = None
    skipped: list = field(default_factory=list, compare=False, repr=False)

    def describe(self) -> str:
        filt = []
        if self.connected:
            filt.append("connected")
        if self.max_degree is not None:
            filt.append(f"max_degree<={self.max_degree}")
        tail = f" [{', '.join(filt)}]" if filt else ""
        if self.kind == "enum":
            return f"enum n={self.n_min}..{self.n_max}{tail}"
        if self.kind == "trees":
            return f"trees n={self.n_min}..{self.n_max}"
        if self.kind == "graph6":
            return f"graph6 {self.path}{tail}"
        return f"family {self.family}{tail}"

    def __iter__(self) -> Iterator[Graph]:
        return iter_graphs(self)


def parse_range(text: str) -> tuple[int, int]:
    """``"8"`` -> (8, 8); ``"4-8"`` or ``"4..8"`` -> (4, 8)."""
    m = re.fullmatch(r"\s*(\d+)\s*(?:(?:-|\.\.)\s*(\d+))?\s*", str(text))
    if not m:
        raise InvalidParameters(f"bad order range {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if hi < lo:
        raise InvalidParameters(f"empty order range {text!r}")
    return lo, hi


def enum_source(orders, connected: bool = False, max_degree: int | None = None) -> GraphSource:
    lo, hi = parse_range(orders) if isinstance(orders, str) else (orders, orders) if isinstance(orders, int) else orders
    return GraphSource("enum", lo, hi, connected, max_degree)


def tree_source(orders) -> GraphSource:
    lo, hi = parse_range(orders) if isinstance(orders, str) else (orders, orders) if isinstance(orders, int) else orders
    return GraphSource("trees", lo, hi)


def graph6_source(path: str, connected: bool = False, max_degree: int | None = None) -> GraphSource:
    return GraphSource("graph6", connected=connected, max_degree=max_degree, path=str(path))


def family_source(spec: str, connected: bool = False) -> GraphSource:
    parse_family_sweep(spec)
    return GraphSource("family", connected=connected, family=spec)


def _filtered(graphs, src: GraphSource) -> Iterator[Graph]:
    for g in graphs:
        if src.connected and not is_connected(g):
            continue
        if src.max_degree is not None and g.max_degree() > src.max_degree:
            continue
        yield g


def iter_graphs(src: GraphSource) -> Iterator[Graph]:
    if src.kind == "enum":
        for n in range(src.n_min, src.n_max + 1):
            yield from enumerate_graphs(n, src.connected, src.max_degree)
    elif src.kind == "trees":
        for n in range(max(src.n_min, 1), src.n_max + 1):
            yield from free_trees(n)
    elif src.kind == "graph6":
        errors: list = []
        with open(src.path, encoding="ascii", errors="replace") as fh:
            yield from _filtered(read_graph6_lines(fh, errors), src)
        # the latest pass wins, so iterating a source twice does not double count
        src.skipped[:] = errors
        if errors:
            log.warning("%s: skipped %d malformed line(s)", src.path, len(errors))
    elif src.kind == "family":
        specs = parse_family_sweep(src.family)
        yield from _filtered((generate(s) for s in specs), src)
    else:
        raise MalformedInput(f"unknown source kind {src.kind!r}")
