import itertools
import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import minimize

from spectralab import Graph
from spectralab.errors import (
    BudgetExceeded,
    EmptyHypergraph,
    InvalidParameters,
    MalformedInput,
    NotConnected,
    NotPlanar,
)
from spectralab.families import generate
from spectralab.graph import is_connected
from spectralab.hypergraph import (
    UniformHypergraph,
    from_triangulation,
    objective,
    shadow,
    spectral_radius,
    triangulation_candidates,
)
from spectralab.planarity import rotation_system
from spectralab.search.enumeration import enumerate_graphs
from spectralab.signed import (
    SignedGraph,
    cycle_sign_products,
    format_signed,
    min_signature_radius,
    parse_signed,
    signed_bounds,
    signed_radius,
    signed_spectrum,
    switch,
    switching_equivalent,
)
from spectralab.spectra import eigenvalue_array

from conftest import connected_graphs, random_graph


# -- hypergraphs -------------------------------------------------------------------


@pytest.mark.parametrize("r,expected", [(2, 1.0), (3, 2.0), (4, 6.0)])
def test_single_edge_radius(r, expected):
    """``r!/r`` at the uniform point ``x_i = r^(-1/r)``."""
    h = UniformHypergraph(r, r, (tuple(range(r)),))
    assert spectral_radius(h).radius == pytest.approx(expected, abs=1e-8)


def test_rank_two_collapses_to_graph_radius():
    rng = random.Random(10)
    done = 0
    while done < 100:
        g = random_graph(rng, rng.randint(2, 10), rng.uniform(0.15, 0.8))
        if g.m == 0:
            continue
        res = spectral_radius(UniformHypergraph.from_graph(g))
        assert abs(res.radius - eigenvalue_array(g)[0]) <= 1e-8
        done += 1


def _random_h3(rng, n, k):
    triples = list(itertools.combinations(range(n), 3))
    return UniformHypergraph(n, 3, tuple(rng.sample(triples, min(k, len(triples)))))


def test_radius_monotone_under_edge_addition():
    rng = random.Random(12)
    for _ in range(100):
        n = rng.randint(4, 8)
        h = _random_h3(rng, n, rng.randint(1, 8))
        missing = [t for t in itertools.combinations(range(n), 3) if t not in h.edges]
        if not missing:
            continue
        bigger = h.with_edge(rng.choice(missing))
        assert spectral_radius(bigger).radius >= spectral_radius(h).radius - 1e-9


def test_radius_vector_and_uniform_lower_bound():
    rng = random.Random(13)
    for _ in range(50):
        n = rng.randint(3, 8)
        h = _random_h3(rng, n, rng.randint(1, 10))
        res = spectral_radius(h)
        x = np.array(res.vector)
        assert np.all(x >= 0)
        assert abs(np.sum(x**3) - 1) <= 1e-12
        assert res.radius == pytest.approx(objective(h, x), abs=1e-12)
        uniform = np.full(n, n ** (-1 / 3))
        assert res.radius >= objective(h, uniform) - 1e-12


def test_radius_independent_of_starting_vector():
    rng = random.Random(14)
    tested = 0
    while tested < 20:
        h = _random_h3(rng, rng.randint(4, 8), rng.randint(2, 10))
        if not is_connected(shadow(h).induced([v for v in range(h.n) if shadow(h).degree(v)])):
            continue
        radii = [spectral_radius(h, starts=1, seed=s).radius for s in range(5)]
        radii += [spectral_radius(h, starts=5, seed=s).radius for s in range(5)]
        assert max(radii) - min(radii) <= 1e-8
        tested += 1


def test_hypergraph_validation():
    with pytest.raises(InvalidParameters):
        UniformHypergraph(4, 3, ((0, 1),))
    with pytest.raises(InvalidParameters):
        UniformHypergraph(4, 3, ((0, 1, 2), (2, 1, 0)))
    with pytest.raises(InvalidParameters):
        UniformHypergraph(4, 5, ())
    with pytest.raises(EmptyHypergraph):
        spectral_radius(UniformHypergraph(4, 3, ()))


def test_triangulation_errors():
    with pytest.raises(NotPlanar):
        from_triangulation(generate("complete(5)"), {})


def _oracle_radius(h, starts=40, seed=0):
    """Independent check: SLSQP on the sphere from a coarse simplex grid plus random starts."""
    n = h.n
    e = np.array(h.edges)

    def f(x):
        return -6 * np.prod(x[e], axis=1).sum()

    cons = {"type": "eq", "fun": lambda x: np.sum(np.abs(x) ** 3) - 1}
    grid = [np.array(p, float) for p in itertools.product(range(1, 4), repeat=n)]
    grid.sort(key=lambda p: f(p / np.sum(p**3) ** (1 / 3)))
    rng = np.random.default_rng(seed)
    inits = [p / np.sum(p**3) ** (1 / 3) for p in grid[:10]] + [rng.random(n) + 0.05 for _ in range(starts)]
    best = 0.0
    for x0 in inits:
        res = minimize(f, x0, constraints=[cons], bounds=[(0, 1)] * n, method="SLSQP", options={"ftol": 1e-14, "maxiter": 500})
        if res.success:
            best = max(best, -res.fun)
    return best


def test_triangulation_radii_match_independent_oracle_at_six():
    for spec in ("k2path(6)", "fan(6)"):
        g = generate(spec)
        for h in triangulation_candidates(g, rotation_system(g)):
            assert spectral_radius(h).radius == pytest.approx(_oracle_radius(h), abs=1e-6)


# -- signed graphs -----------------------------------------------------------------


@given(connected_graphs(min_n=2, max_n=10), st.data())
@settings(max_examples=120)
def test_switching_preserves_spectrum(g, data):
    signs = data.draw(st.lists(st.sampled_from([1, -1]), min_size=g.m, max_size=g.m))
    u = data.draw(st.integers(0, (1 << g.n) - 1))
    sg = SignedGraph(g, signs)
    sw = switch(sg, u)
    assert np.allclose(signed_spectrum(sw).values, signed_spectrum(sg).values, atol=1e-10)
    assert switching_equivalent(sg, sw)
    assert cycle_sign_products(sg) == cycle_sign_products(sw)
    assert parse_signed(format_signed(sg)) == sg


def test_signed_radius_at_most_unsigned_radius():
    rng = random.Random(15)
    for n in range(1, 9):
        for g in enumerate_graphs(n, connected=True):
            sg = SignedGraph(g, [rng.choice((1, -1)) for _ in range(g.m)])
            lam = eigenvalue_array(g)[0]
            assert signed_radius(sg) <= lam + 1e-9


def _spectra_over(g, patterns, edges, cols):
    base = g.adjacency_matrix()
    rows = np.array([a for a, _ in edges]), np.array([b for _, b in edges])
    pats = np.array(patterns, dtype=np.int64)
    flips = 1.0 - 2.0 * ((pats[:, None] >> np.arange(cols)) & 1)
    mats = np.broadcast_to(base, (len(pats), g.n, g.n)).copy()
    if cols:
        mats[:, rows[0], rows[1]] = flips
        mats[:, rows[1], rows[0]] = flips
    vals = np.linalg.eigvalsh(mats)
    return vals, {tuple(np.round(v, 7)) for v in vals}


def test_distinct_spectra_all_signatures_vs_cotree_classes():
    """Exhaustive for connected graphs with n <= 6, plus the brute-force minimum radius."""
    for n in range(2, 7):
        for g in enumerate_graphs(n, connected=True):
            edges = g.edges()
            vals, all_spectra = _spectra_over(g, range(1 << g.m), edges, g.m)
            res = min_signature_radius(g)
            # the co-tree patterns: the search's own class count
            assert res.classes == 1 << (g.m - g.n + 1)
            brute_rho = float(np.min(np.maximum(vals[:, -1], -vals[:, 0])))
            brute_lam = float(np.min(vals[:, -1]))
            assert res.rho_min == pytest.approx(brute_rho, abs=1e-9)
            assert res.lambda1_min == pytest.approx(brute_lam, abs=1e-9)
            # representatives: every switching class has a member positive on a spanning tree
            classes = {}
            for p in range(1 << g.m):
                sg = SignedGraph(g, [-1 if p >> i & 1 else 1 for i in range(g.m)])
                classes.setdefault(cycle_sign_products(sg), p)
            assert len(classes) == res.classes
            _, class_spectra = _spectra_over(g, list(classes.values()), edges, g.m)
            assert class_spectra == all_spectra


def test_signed_known_values():
    assert min_signature_radius(generate("cycle(4)")).rho_min == pytest.approx(math.sqrt(2))
    pet = min_signature_radius(generate("petersen"))
    assert pet.classes == 64
    assert pet.rho_min == pytest.approx(math.sqrt(5))
    assert pet.lambda1_min == pytest.approx(2.0)
    assert signed_radius(pet.rho_witness) == pytest.approx(pet.rho_min)
    assert min_signature_radius(generate("path(5)")).rho_min == pytest.approx(math.sqrt(3))
    report = signed_bounds(generate("petersen"))
    assert report.regular_slack == pytest.approx(2 * math.sqrt(2) - math.sqrt(5))


def test_signed_errors():
    g = generate("cycle(4)")
    with pytest.raises(InvalidParameters):
        SignedGraph(g, [1, 1])
    with pytest.raises(InvalidParameters):
        SignedGraph(g, {(0, 1): 1})
    with pytest.raises(MalformedInput):
        parse_signed("Cr")
    with pytest.raises(NotConnected):
        min_signature_radius(Graph.empty(2))
    with pytest.raises(BudgetExceeded):
        min_signature_radius(generate("complete(9)"))
