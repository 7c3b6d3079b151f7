import json
import math
import random

import numpy as np
import pytest

from spectralab import Graph, conjectures
from spectralab.conjectures import (
    check,
    gkrs_forms,
    gregory_bound,
    is_complete_regular_multipartite,
    min_double_comet_gap,
    min_double_kite_gap,
    pseudo_random_ratio,
    spectral_mubayi,
    split_plus_threshold,
)
from spectralab.canon import canonical_graph6
from spectralab.errors import InvalidParameters
from spectralab.families import complete_multipartite, generate
from spectralab.graph import is_connected
from spectralab.search.enumeration import enumerate_graphs
from spectralab.spectra import eigenvalue_array, prime_eigenvalues


@pytest.fixture(scope="module")
def stream8():
    gs = [g for n in range(1, 9) for g in enumerate_graphs(n)]
    prime_eigenvalues(gs)
    return gs


# -- registry ----------------------------------------------------------------------


def test_registry_shape():
    ids = conjectures.ids()
    assert len(ids) == len(set(ids)) == 24
    for info in conjectures.catalog():
        assert info.id in ids and info.anchor and info.statement and info.applicability and info.topic
    assert conjectures.resolve("C04") == "C04_ELW"
    assert conjectures.resolve("c19b_energyinertia") == "C19b_EnergyInertia"


def test_registry_rejects_unknowns():
    with pytest.raises(InvalidParameters):
        conjectures.resolve("C99")
    with pytest.raises(InvalidParameters):
        check("C04", generate("cycle(5)"), {"nonsense": 1})
    with pytest.raises(InvalidParameters):
        check("C04", generate("cycle(5)"), {"ell_mode": "max"})
    with pytest.raises(InvalidParameters):
        check("C22", generate("cycle(5)"), {"i": 5})


def test_verdict_serialises():
    v = check("C07", generate("complete(4)"))
    data = json.loads(json.dumps(v.to_dict()))
    assert data["outcome"] == "violated" and data["slack"] == "-inf"
    assert data["witness"]["graph6"] == generate("complete(4)").to_graph6()


# -- examples with known answers ------------------------------------------------------------


def test_c04_cycle7_counterexample_and_standard_form():
    c7 = generate("cycle(7)")
    forced = check("C04", c7, {"ell_mode": "n_plus"})
    expected = 7 - sum((2 * math.cos(2 * math.pi * j / 7)) ** 2 for j in (0, 1, 1))
    assert forced.violated and forced.argmin == 3
    assert forced.slack == pytest.approx(expected, abs=1e-12)
    assert forced.slack == pytest.approx(-0.1099, abs=1e-3)
    assert check("C04", c7).holds


def test_c02_equality_only_on_complete_regular_multipartite(stream8):
    for g in stream8:
        v = check("C02", g)
        if abs(v.slack) <= 1e-6:
            assert is_complete_regular_multipartite(g) == (not v.notes)
    assert check("C02", generate("turan(9,3)")).slack == pytest.approx(0, abs=1e-9)


def test_complete_regular_multipartite_recogniser():
    assert is_complete_regular_multipartite(generate("turan(8,4)"))
    assert is_complete_regular_multipartite(generate("complete(5)"))
    assert not is_complete_regular_multipartite(generate("turan(7,3)"))
    assert not is_complete_regular_multipartite(generate("cycle(5)"))


def test_c05_extremal_graph_ties_with_note():
    v = check("C05", generate("k2path(9)"))
    assert v.holds and v.slack == 0 and "conjectured extremal" in v.notes[0]
    assert check("C05", generate("fan(10)")).slack > 0
    assert not check("C05", generate("complete(9)")).applicable
    assert not check("C05", generate("k2path(8)")).applicable


def test_c07_small_graphs():
    k4 = check("C07", generate("complete(4)"))
    assert k4.violated and k4.witness["missing_lengths"] == [5, 6]
    big = check("C07", generate("complete(7)"))
    assert big.holds
    assert not check("C07", Graph.from_edges(3, [(0, 1)])).applicable


def test_c08_equality_on_complete_multipartite():
    for parts in [(2, 3), (2, 2, 2), (3, 4, 5), (1, 2, 4)]:
        v = check("C08", complete_multipartite(*parts))
        assert v.holds and abs(v.slack) <= 1e-9
    assert not check("C08", generate("complete(5)")).violated


def test_c14_examples():
    assert check("C14", generate("split(7,2)")).slack == pytest.approx(0, abs=1e-12)
    c5 = check("C14", generate("cycle(5)"))
    assert c5.violated and c5.slack == -math.inf and c5.notes
    assert not check("C14", generate("path(4)")).applicable


def test_c15_c16_examples():
    assert check("C15", generate("complete(5)")).holds
    assert check("C16", generate("complete(5)")).holds
    assert check("C16", generate("star(6)")).holds
    assert canonical_graph6(generate("gkrs(2,3)")) in gkrs_forms(5, 2, 7)


def test_gap_references():
    gap, (k, l) = min_double_comet_gap(10)
    assert (k, l) == (2, 6)
    assert gap == pytest.approx(eigenvalue_array(generate("doublecomet(2,6)"))[0] - eigenvalue_array(generate("doublecomet(2,6)"))[1])
    gap, (r, s) = min_double_kite_gap(9)
    assert 2 * r + s == 9
    assert check("C17", generate("doublekite(3,3)")).slack >= -1e-12
    assert check("C18", generate("doublecomet(2,6)")).slack == pytest.approx(0, abs=1e-12)


def test_energy_examples():
    assert check("C19", generate("complete(5)")).slack == pytest.approx(0, abs=1e-12)
    assert not check("C20", generate("bipartite(3,2)")).applicable
    forced = check("C20", generate("bipartite(3,2)"), {"forced": True})
    assert forced.violated and forced.notes
    assert check("C20", generate("complete(6)")).slack == pytest.approx(0, abs=1e-9)


def test_brandt_powers_mohar():
    assert check("C21", generate("cycle(5)")).slack == pytest.approx(4 / 5 - (2 - 2 * math.cos(math.pi / 5)), abs=1e-12)
    assert not check("C21", generate("complete(4)")).applicable
    assert check("C22", generate("complete(9)"), {"i": 4}).holds
    assert check("C23", generate("petersen")).applicable is False
    assert check("C23", generate("cycle(6)")).holds


def test_eigenvector_examples():
    assert check("C25", generate("cycle(6)")).slack == pytest.approx(0, abs=1e-9)
    assert check("C25", generate("cycle(5)")).slack > 0
    s62 = check("C24", generate("split(6,2)"))
    assert s62.slack == pytest.approx(0, abs=1e-9)
    literal = check("C24", generate("split(6,2)"), {"form": "literal"})
    assert literal.violated
    for n in range(2, 20):
        for k in range(2, n + 1):
            assert gregory_bound(n, k) <= 0.5
            assert gregory_bound(n, k, "literal") <= 0.5


def test_guiduli_density():
    v = check("C26", generate("path(8)"), {"t": 1, "r": -1})
    assert v.holds
    assert not check("C26", generate("complete(6)")).applicable


def test_signed_conjectures():
    pet = check("C27", generate("petersen"))
    assert pet.slack == pytest.approx(2 * math.sqrt(2) - math.sqrt(5))
    assert "min largest eigenvalue" in pet.notes[0]
    g28 = check("C28", generate("petersen"))
    assert g28.slack == pytest.approx(pet.slack) and g28.notes == ("strict inequality satisfied",)
    c4 = check("C28", generate("cycle(4)"))
    assert c4.holds and c4.notes == ("strict inequality satisfied",)
    assert not check("C27", generate("path(4)")).applicable


def test_diagnostics():
    d = spectral_mubayi(generate("bipartite(4,4)"))
    assert d.values["triangles"] == 0 and not d.values["above"]
    assert not split_plus_threshold(generate("splitplus(8,2)"), 2).values["has_cycle"]
    assert split_plus_threshold(generate("complete(8)"), 2).values["has_cycle"]
    assert pseudo_random_ratio(generate("petersen")).values["ratio"] == pytest.approx(1.5)


# -- stream properties ---------------------------------------------------------------------


def test_c04_holds_implies_c03_holds(stream8):
    pairs = 0
    for g in stream8:
        c4 = check("C04", g)
        c3 = check("C03", g)
        if c4.holds and c4.argmin >= 2 and c3.applicable:
            pairs += 1
            assert c3.holds
    assert pairs > 1000


def test_c19_holds_implies_c19b_holds(stream8):
    for g in stream8:
        if check("C19", g).holds:
            assert check("C19b", g).holds


def _fresh(g):
    return Graph(g.n, g.adj)


EXPENSIVE_SIGNED = {"C27_BiluLinial", "C28_Gregory_Signed"}


def test_rerunning_check_is_bit_identical(stream8):
    for cid in conjectures.ids():
        limit = 6 if cid in EXPENSIVE_SIGNED else 7
        for g in stream8:
            if g.n > limit:
                break
            a = check(cid, g).to_dict()
            b = check(cid, _fresh(g)).to_dict()
            assert json.dumps(a) == json.dumps(b), (cid, g)


def test_verdict_contract_on_random_graphs():
    rng = random.Random(21)
    for _ in range(40):
        n = rng.randint(2, 10)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        for cid in conjectures.ids():
            if cid in EXPENSIVE_SIGNED and g.m - g.n > 14:
                continue
            v = check(cid, g)
            if v.applicable:
                assert v.holds == (v.slack >= -1e-6 and not (v.violated and v.slack == -math.inf))
                if v.violated:
                    assert Graph.from_graph6(v.witness["graph6"]) == g
            else:
                assert v.reason
    assert is_connected(generate("petersen"))
    assert np.isfinite(eigenvalue_array(generate("petersen"))).all()
