"""Batch verification of registered conjectures over a graph source."""

from __future__ import annotations

import csv
import io
import json
import math
import multiprocessing as mp
import time
from collections import Counter
from dataclasses import dataclass, field
from datetime import datetime, timezone
from itertools import islice
from typing import Iterable, Iterator

from .. import conjectures
from ..canon import canonical_graph6
from ..conjectures import encode_float
from ..errors import InvalidParameters
from ..graph import Graph, from_graph6
from ..spectra import PREDICATE_TOL, prime_eigenvalues
from .sources import GraphSource, iter_graphs

CHUNK_SIZE = 1000
NEAR_MISSES = 10
MAX_WITNESSES = 100


@dataclass(frozen=True)
class ConjectureSpec:
    id: str
    params: tuple[tuple[str, object], ...] = ()

    @property
    def key(self) -> str:
        if not self.params:
            return self.id
        return self.id + ":" + ",".join(f"{k}={v}" for k, v in self.params)

    def param_dict(self) -> dict:
        return dict(self.params)


def _coerce(value: str):
    low = value.lower()
    if low in ("true", "false"):
        return low == "true"
    for kind in (int, float):
        try:
            return kind(value)
        except ValueError:
            pass
    return value


def parse_conjecture_list(text: str | Iterable[str]) -> list[ConjectureSpec]:
    """``"all"`` or ``"C01,C22:i=4,C04:ell_mode=n_plus"`` into specs (``;`` separates params)."""
    items = text.split(",") if isinstance(text, str) else list(text)
    items = [i.strip() for i in items if i.strip()]
    if not items:
        raise InvalidParameters("empty conjecture list")
    if len(items) == 1 and items[0].lower() == "all":
        return [ConjectureSpec(i) for i in conjectures.ids()]
    out = []
    for item in items:
        head, _, tail = item.partition(":")
        cid = conjectures.resolve(head.strip())
        params = []
        for kv in filter(None, (p.strip() for p in tail.split(";"))):
            k, eq, v = kv.partition("=")
            if not eq:
                raise InvalidParameters(f"parameter {kv!r} must look like name=value")
            params.append((k.strip(), _coerce(v.strip())))
        known = conjectures._REGISTRY[cid].info.params
        bad = [k for k, _ in params if k not in known]
        if bad:
            raise InvalidParameters(f"{cid} has no parameter(s) {bad}")
        out.append(ConjectureSpec(cid, tuple(sorted(params))))
    return out


@dataclass
class ConjectureTally:
    key: str
    id: str
    params: dict
    holds: int = 0
    violated: int = 0
    na: int = 0
    na_reasons: Counter = field(default_factory=Counter)
    min_slack: float | None = None
    violations: list = field(default_factory=list)
    near_misses: list = field(default_factory=list)

    def merge(self, other: "ConjectureTally") -> None:
        self.holds += other.holds
        self.violated += other.violated
        self.na += other.na
        self.na_reasons.update(other.na_reasons)
        if other.min_slack is not None and (self.min_slack is None or other.min_slack < self.min_slack):
            self.min_slack = other.min_slack
        self.violations = sorted(self.violations + other.violations, key=_rank)[:MAX_WITNESSES]
        self.near_misses = sorted(self.near_misses + other.near_misses, key=_rank)[:NEAR_MISSES]

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "key": self.key,
            "params": self.params,
            "holds": self.holds,
            "violated": self.violated,
            "na": self.na,
            "na_reasons": dict(sorted(self.na_reasons.items())),
            "min_slack": encode_float(self.min_slack),
            "witnesses": [v["graph6"] for v in self.violations],
            "violations": self.violations,
            "near_misses": self.near_misses,
        }


def _rank(entry: dict):
    s = entry["slack"]
    if isinstance(s, str):
        s = {"inf": math.inf, "-inf": -math.inf}.get(s, math.nan)
    return (s, entry["graph6"])


def _top(entries: list[tuple[float, Graph, dict]], k: int) -> list[dict]:
    """The ``k`` smallest entries by (slack, canonical graph6), ties at the cut included first."""
    if not entries:
        return []
    entries = sorted(entries, key=lambda e: e[0])
    cut = entries[min(k, len(entries)) - 1][0]
    pool = [e for e in entries if e[0] <= cut]
    ranked = []
    for slack, g, extra in pool:
        ranked.append({"graph6": canonical_graph6(g), "slack": encode_float(slack), **extra})
    return sorted(ranked, key=_rank)[:k]


def _check_chunk(args) -> dict[str, ConjectureTally]:
    codes, specs, tol = args
    graphs = [from_graph6(c) for c in codes]
    prime_eigenvalues(graphs)
    out = {}
    for spec in specs:
        tally = ConjectureTally(spec.key, spec.id, spec.param_dict())
        near, bad = [], []
        params = spec.param_dict()
        for g in graphs:
            v = conjectures.check(spec.id, g, params, tol)
            if not v.applicable:
                tally.na += 1
                tally.na_reasons[v.reason] += 1
                continue
            if tally.min_slack is None or v.slack < tally.min_slack:
                tally.min_slack = v.slack
            if v.violated:
                tally.violated += 1
                bad.append((v.slack, g, {"argmin": v.argmin, "witness": v.witness, "notes": list(v.notes)}))
            else:
                tally.holds += 1
                near.append((v.slack, g, {"argmin": v.argmin, "notes": list(v.notes)}))
        tally.violations = _top(bad, MAX_WITNESSES)
        tally.near_misses = _top(near, NEAR_MISSES)
        out[spec.key] = tally
    return out


def _chunks(graphs: Iterable[Graph], size: int) -> Iterator[list[str]]:
    it = iter(graphs)
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield [g.to_graph6() for g in block]


@dataclass
class VerificationReport:
    source: str
    graph_count: int
    tallies: list[ConjectureTally]
    meta: dict

    @property
    def total_violations(self) -> int:
        return sum(t.violated for t in self.tallies)

    def tally(self, key: str) -> ConjectureTally:
        for t in self.tallies:
            if t.key == key or t.id == key:
                return t
        raise KeyError(key)

    def payload(self) -> dict:
        """The deterministic part of the report (everything except ``meta``)."""
        return {
            "source": self.source,
            "graph_count": self.graph_count,
            "conjectures": [t.to_dict() for t in self.tallies],
        }

    def to_dict(self) -> dict:
        return {**self.payload(), "meta": self.meta}

    def to_json(self, include_meta: bool = True) -> str:
        data = self.to_dict() if include_meta else self.payload()
        return json.dumps(data, indent=2, sort_keys=False)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "key", "holds", "violated", "na", "min_slack"])
        for t in self.tallies:
            w.writerow([t.id, t.key, t.holds, t.violated, t.na, encode_float(t.min_slack)])
        return buf.getvalue()


def verify(
    source: GraphSource | Iterable[Graph],
    specs: Iterable[ConjectureSpec | str] | str = "all",
    workers: int = 1,
    tol: float = PREDICATE_TOL,
    chunk_size: int = CHUNK_SIZE,
    description: str | None = None,
) -> VerificationReport:
    """Check every conjecture in ``specs`` on every graph of ``source``.

    Graphs are cut into fixed-size chunks in source order; chunk results are
    merged with an order-independent reducer, so the payload does not depend
    on ``workers``.
    """
    if isinstance(specs, str):
        specs = parse_conjecture_list(specs)
    specs = [parse_conjecture_list([s])[0] if isinstance(s, str) else s for s in specs]
    if isinstance(source, GraphSource):
        desc = description or source.describe()
        graphs = iter_graphs(source)
    else:
        desc = description or "graphs"
        graphs = iter(source)
    started = time.perf_counter()
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    merged = {s.key: ConjectureTally(s.key, s.id, s.param_dict()) for s in specs}
    count = 0

    def jobs():
        nonlocal count
        for codes in _chunks(graphs, chunk_size):
            count += len(codes)
            yield codes, specs, tol

    if workers <= 1:
        results = map(_check_chunk, jobs())
        for part in results:
            for key, t in part.items():
                merged[key].merge(t)
    else:
        ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else mp.get_context()
        with ctx.Pool(workers) as pool:
            for part in pool.imap(_check_chunk, jobs()):
                for key, t in part.items():
                    merged[key].merge(t)
    meta = {
        "started": stamp,
        "wall_time_s": round(time.perf_counter() - started, 3),
        "workers": workers,
        "chunk_size": chunk_size,
    }
    if isinstance(source, GraphSource) and source.skipped:
        meta["skipped_lines"] = len(source.skipped)
    return VerificationReport(desc, count, list(merged.values()), meta)
