import random
import time

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from spectralab import Graph
from spectralab.graph import is_connected
from spectralab.invariants import clique_number, independence_number
from spectralab.search.enumeration import enumerate_graphs
from spectralab.spectra import eigenvalue_array, matrix, prime_eigenvalues, summary

settings.register_profile(
    "repo",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("repo")


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])


@st.composite
def connected_graphs(draw, min_n=1, max_n=10):
    """A random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges.update(p for p, b in zip(pairs, bits) if b)
    return Graph.from_edges(n, sorted(edges))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_connected(rng: random.Random, n: int, p: float = 0.3) -> Graph:
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    edges |= {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    return Graph.from_edges(n, sorted(edges))


@pytest.fixture(scope="session")
def spectral_records():
    """One pass over every graph with n <= 9: spectra, Laplacian spectra, omega, alpha and inertia."""
    out = []
    for n in range(1, 10):
        gs = list(enumerate_graphs(n))
        prime_eigenvalues(gs)
        lap = np.linalg.eigvalsh(np.stack([matrix(g, "laplacian") for g in gs]))[:, ::-1]
        for g, mu in zip(gs, lap):
            s = summary(g)
            out.append(
                (g.n, g.m, eigenvalue_array(g), mu, clique_number(g), independence_number(g),
                 s.n_plus, s.n_minus, is_connected(g), g.is_regular(), g.max_degree())
            )
    assert len(out) == 288266
    return out


# -- acceptance report ---------------------------------------------------------

SUITE_LIMIT_S = 600.0
_acceptance: dict[str, list[tuple[str, str]]] = {}


def pytest_configure(config):
    config._spectralab_started = time.perf_counter()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _acceptance.setdefault(marker.args[0], []).append((item.name, rep.outcome))


def pytest_terminal_summary(terminalreporter, config):
    if not _acceptance:
        return
    elapsed = time.perf_counter() - config._spectralab_started
    tr = terminalreporter
    tr.section("acceptance criteria")
    for label in sorted(_acceptance, key=lambda s: (int(s.rstrip("abc")), s)):
        runs = _acceptance[label]
        bad = [name for name, out in runs if out != "passed"]
        line = f"criterion {label}: {'FAIL' if bad else 'PASS'}  {len(runs) - len(bad)}/{len(runs)} checks passed"
        if label == "8":
            ok = elapsed <= SUITE_LIMIT_S
            line += f"; suite wall time {elapsed:.0f} s ({'within' if ok else 'over'} {SUITE_LIMIT_S:.0f} s)"
            if not ok and not bad:
                line = line.replace("PASS", "FAIL", 1)
        if bad:
            line += f"  failing: {', '.join(bad)}"
        tr.write_line(line)
