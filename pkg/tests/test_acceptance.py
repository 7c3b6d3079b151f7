"""Acceptance checks, one marked group per numbered criterion.

A PASS/FAIL line per criterion is printed in the terminal summary (see
``conftest.py``). Runtime limits are asserted where the criterion states one.
"""

import json
import math
import random
import time

import numpy as np
import pytest

import test_hypergraph_signed
import test_invariants
import test_spectra
from spectralab.canon import canonical_graph6
from spectralab.conjectures import check
from spectralab.families import complete_multipartite, generate
from spectralab.graph import Graph, is_bipartite, is_connected
from spectralab.hypergraph import UniformHypergraph, spectral_radius, triangulation_candidates
from spectralab.planarity import rotation_system
from spectralab.search.enumeration import enumerate_graphs
from spectralab.search.extremal import exhaustive
from spectralab.search.sources import enum_source, tree_source
from spectralab.search.verify import verify
from spectralab.signed import min_signature_radius
from spectralab.spectra import eigenvalue_array, principal_eigenvector

from conftest import random_graph


def _report(label, ok, detail):
    print(f"criterion {label}: {'PASS' if ok else 'FAIL'}  {detail}")


# -- 1. registry on a known counterexample -------------------------------------------


@pytest.mark.acceptance("1")
def test_c04_forced_ell_on_c7():
    start = time.perf_counter()
    c7 = generate("cycle(7)")
    forced = check("C04", c7, {"ell_mode": "n_plus"})
    standard = check("C04", c7)
    elapsed = time.perf_counter() - start
    excess = -forced.slack  # sum of the three largest squared eigenvalues minus 7
    _report("1", forced.violated and standard.holds, f"excess={excess:.6f} standard={standard.outcome} {elapsed:.3f}s")
    assert forced.violated and forced.argmin == 3
    assert excess == pytest.approx(0.1099, abs=1e-3)
    assert standard.holds
    assert elapsed < 1.0


# -- 2. exhaustive verification ---------------------------------------------------------

RUNS = [
    ("connected n<=9", enum_source("1-9", connected=True), "C01"),
    ("all n<=9", enum_source("1-9"), "C02,C15,C19,C19b,C22:i=3"),
    ("all n<=8", enum_source("1-8"), "C03,C04"),
]


@pytest.mark.acceptance("2")
def test_exhaustive_verification_has_no_violations():
    start = time.perf_counter()
    lines = []
    total = 0
    for name, src, conj in RUNS:
        report = verify(src, conj)
        for t in report.tallies:
            lines.append(f"{t.key}[{name}]: graphs={report.graph_count} holds={t.holds} violated={t.violated} na={t.na}")
            total += t.violated
    elapsed = time.perf_counter() - start
    print("\n".join(lines))
    _report("2", total == 0, f"violations={total} {elapsed:.0f}s")
    assert total == 0
    assert elapsed < 30 * 60


# -- 3. extremal reproductions ------------------------------------------------------------


@pytest.mark.acceptance("3a")
def test_planar_maximum_at_nine():
    res = exhaustive(enum_source(9, connected=True), "lambda1", constraints="planar")
    target = generate("k2path(9)")
    _report("3a", res.args == [canonical_graph6(target)], f"args={res.args} value={res.best_value:.6f}")
    assert res.args == [canonical_graph6(target)]
    assert res.best_value == pytest.approx(eigenvalue_array(target)[0], abs=1e-9)


def _gap_tree(n):
    if n <= 8:
        return generate(f"path({n})")
    k = 2 if n <= 11 else 3 if n <= 15 else 4
    return generate(f"doublecomet({k},{n - 2 * k})")


@pytest.mark.acceptance("3b")
def test_tree_spectral_gap_table():
    wrong = []
    for n in range(4, 21):
        res = exhaustive(tree_source(n), "spectral_gap")
        if res.args != [canonical_graph6(_gap_tree(n))]:
            wrong.append((n, res.args))
    _report("3b", not wrong, f"mismatches={wrong}")
    assert not wrong


@pytest.mark.acceptance("3c")
@pytest.mark.parametrize("n", range(4, 10))
def test_kite_minimises_l1_norm(n):
    res = exhaustive(enum_source(n, connected=True), "l1_norm")
    kite = generate(f"kite({n - 3},4)")
    kite_value = float(np.abs(principal_eigenvector(kite).as_array()).sum())
    ok = res.args == [canonical_graph6(kite)]
    _report("3c", ok, f"n={n} minimiser={res.args} value={res.best_value:.6f} kite={kite_value:.6f}")
    assert ok


# -- 4. equality cases ----------------------------------------------------------------------


def _partitions(n, k, largest=None):
    largest = n if largest is None else largest
    if k == 1:
        if 1 <= n <= largest:
            yield (n,)
        return
    for first in range(min(n - k + 1, largest), 0, -1):
        for rest in _partitions(n - first, k - 1, first):
            yield (first, *rest)


def _random_connected_bipartite(rng):
    while True:
        a, b = rng.randint(1, 8), rng.randint(1, 8)
        p = rng.uniform(0.3, 0.9)
        edges = [(u, v) for u in range(a) for v in range(a, a + b) if rng.random() < p]
        g = Graph.from_edges(a + b, edges)
        if is_connected(g):
            return g, set(range(a))


@pytest.mark.acceptance("4")
def test_c08_equality_on_complete_multipartite():
    worst = 0.0
    count = 0
    for n in range(2, 13):
        for k in range(2, n + 1):
            for parts in _partitions(n, k):
                if parts[0] == 1:
                    continue  # complete graph: toughness is infinite
                v = check("C08", complete_multipartite(*parts))
                worst = max(worst, abs(v.slack))
                count += 1
    _report("4", worst <= 1e-9, f"C08 complete multipartite: {count} graphs, max|slack|={worst:.2e}")
    assert worst <= 1e-9


@pytest.mark.acceptance("4")
def test_c25_equality_on_bipartite_colour_classes():
    rng = random.Random(404)
    worst = 0.0
    done = 0
    while done < 200:
        g, left = _random_connected_bipartite(rng)
        assert is_bipartite(g)[0]
        x = principal_eigenvector(g).as_array()
        for side in (left, set(range(g.n)) - left):
            worst = max(worst, abs(sum(x[v] ** 2 for v in side) - 0.5))
        worst = max(worst, abs(check("C25", g).slack))
        done += 1
    _report("4", worst <= 1e-8, f"C25 bipartite: 200 graphs, max deviation={worst:.2e}")
    assert worst <= 1e-8


@pytest.mark.acceptance("4")
def test_hong_equality_on_complete_graphs_and_stars():
    worst = 0.0
    for n in range(1, 31):
        for g in (generate(f"complete({n})"), generate(f"star({n})")):
            lam = eigenvalue_array(g)[0]
            worst = max(worst, abs(lam - math.sqrt(2 * g.m - g.n + 1)), abs(check("C01", g).slack))
    _report("4", worst <= 1e-9, f"Hong equality n<=30: max deviation={worst:.2e}")
    assert worst <= 1e-9


# -- 5. hypergraph engine ---------------------------------------------------------------------


@pytest.mark.acceptance("5")
def test_single_edge_radius():
    rad = spectral_radius(UniformHypergraph(3, 3, ((0, 1, 2),))).radius
    _report("5", abs(rad - 2) <= 1e-8, f"single edge radius={rad!r}")
    assert rad == pytest.approx(2.0, abs=1e-8)


@pytest.mark.acceptance("5")
def test_rank_two_collapse():
    rng = random.Random(505)
    worst, done = 0.0, 0
    while done < 100:
        g = random_graph(rng, rng.randint(2, 10), rng.uniform(0.15, 0.8))
        if g.m == 0:
            continue
        worst = max(worst, abs(spectral_radius(UniformHypergraph.from_graph(g)).radius - eigenvalue_array(g)[0]))
        done += 1
    _report("5", worst <= 1e-8, f"r=2 collapse max deviation={worst:.2e}")
    assert worst <= 1e-8


def _radii(spec):
    g = generate(spec)
    return [spectral_radius(h).radius for h in triangulation_candidates(g, rotation_system(g))]


@pytest.mark.acceptance("5")
def test_k2path_triangulations_beat_fan_triangulations():
    rows = []
    for n in range(8, 13):
        k2, fan = _radii(f"k2path({n})"), _radii(f"fan({n})")
        rows.append((n, min(k2), max(fan)))
    ok = all(lo > hi for _, lo, hi in rows)
    _report("5", ok, " ".join(f"n={n}: {lo:.4f}>{hi:.4f}" for n, lo, hi in rows))
    assert ok


@pytest.mark.acceptance("5")
def test_engine_matches_multistart_oracle_at_six():
    test_hypergraph_signed.test_triangulation_radii_match_independent_oracle_at_six()
    _report("5", True, "n=6 triangulations agree with the SLSQP multistart oracle")


# -- 6. signed engine -----------------------------------------------------------------------------


@pytest.mark.acceptance("6")
def test_cubic_graphs_have_ramanujan_signatures():
    start = time.perf_counter()
    bound = 2 * math.sqrt(2)
    rows = []
    for n in (4, 6, 8, 10):
        for g in enumerate_graphs(n, connected=True, max_degree=3):
            if g.min_degree() != 3:
                continue
            res = min_signature_radius(g)
            rows.append((g.to_graph6(), res.lambda1_min, res.rho_min, res.rho_min <= bound + 1e-8))
    elapsed = time.perf_counter() - start
    for code, lam, rho, bl in rows:
        print(f"{code}: lambda1_min={lam:.6f} rho_min={rho:.6f} rho<=2sqrt2={bl}")
    ok = len(rows) == 27 and all(lam <= bound + 1e-8 for _, lam, _, _ in rows)
    _report("6", ok, f"{len(rows)} cubic graphs, rho bound holds on {sum(r[3] for r in rows)}, {elapsed:.1f}s")
    assert ok
    assert elapsed < 600


# -- 7. determinism -------------------------------------------------------------------------------


@pytest.mark.acceptance("7")
def test_verify_payload_is_worker_independent():
    src = enum_source("1-8")
    conj = "C01,C02,C03,C04,C15,C19,C19b,C22:i=3,C24,C25"
    a = json.dumps(verify(src, conj, workers=1).payload())
    b = json.dumps(verify(src, conj, workers=4).payload())
    _report("7", a == b, f"verify payload {len(a)} bytes")
    assert a == b


@pytest.mark.acceptance("7")
def test_extremal_payload_is_worker_independent():
    for kwargs in ({"source": enum_source(8, connected=True), "objective": "lambda1", "constraints": "planar"},
                   {"source": tree_source(14), "objective": "spectral_gap"}):
        a = json.dumps(exhaustive(workers=1, **kwargs).payload())
        b = json.dumps(exhaustive(workers=4, **kwargs).payload())
        _report("7", a == b, f"extremal {kwargs['objective']} payload {len(a)} bytes")
        assert a == b


# -- 8. property suites -----------------------------------------------------------------------------


@pytest.mark.acceptance("8")
def test_property_suites(spectral_records):
    checks = {
        "trace and Frobenius identities": lambda: test_spectra.test_trace_identities_on_stream(spectral_records),
        "interlacing": test_spectra.test_interlacing_smoke,
        "inertia bound": lambda: test_spectra.test_cvetkovic_inertia_bound_on_stream(spectral_records),
        "switching invariance": test_hypergraph_signed.test_switching_preserves_spectrum,
        "regular Laplacian correspondence": lambda: test_spectra.test_regular_laplacian_correspondence_on_stream(spectral_records),
        "multipartite toughness": test_invariants.test_toughness_formula_on_complete_multipartite,
    }
    failed = []
    for name, fn in checks.items():
        try:
            fn()
        except AssertionError as exc:
            failed.append(f"{name}: {exc}")
    _report("8", not failed, f"{len(checks) - len(failed)}/{len(checks)} property suites")
    assert not failed, failed
