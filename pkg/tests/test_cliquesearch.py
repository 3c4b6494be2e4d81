import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquelab.bitgraph import WordCounter, network_from_rows
from cliquelab.bounds import binomial
from cliquelab.cliquesearch import (
    ComparisonTally,
    NodeSet,
    PlantSpec,
    clique_matrix,
    enumerate_subsets,
    findings_dict,
    max_clique,
    naive_cliques,
    plant_clique,
    random_network,
    rank_subset,
    search_all,
    search_first,
    subnetwork_compare,
    unrank_subset,
)

from conftest import Q_ROWS
from strategies import all_networks, networks, networks_of


def complete(n):
    return network_from_rows(["1" * n] * n)


def edgeless(n):
    return network_from_rows(["".join("1" if i == j else "0" for j in range(n)) for i in range(n)])


# -- NodeSet -------------------------------------------------------------------

def test_nodeset_validation():
    assert NodeSet.of([3, 1, 2], 4).members == (1, 2, 3)
    with pytest.raises(ValueError):
        NodeSet((1, 1), 3)
    with pytest.raises(ValueError):
        NodeSet((0, 2), 3)
    with pytest.raises(ValueError):
        NodeSet((2, 5), 4)
    with pytest.raises(ValueError):
        NodeSet((), 4)


# -- clique_matrix -------------------------------------------------------------

def test_clique_matrix_example_q():
    assert clique_matrix(6, [2, 3, 4]).rows() == list(Q_ROWS)


def test_clique_matrix_singleton_is_identity():
    assert clique_matrix(4, [1]) == edgeless(4)


def test_clique_matrix_full_is_complete():
    assert clique_matrix(6, range(1, 7)) == complete(6)


def test_clique_matrix_out_of_range():
    with pytest.raises(ValueError, match="out of range"):
        clique_matrix(4, [2, 5])


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 10).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.integers(1, n), min_size=1))))
def test_clique_matrix_entries(case):
    n, members = case
    m = clique_matrix(n, members).matrix
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            assert m[i - 1, j - 1] == (i == j or (i in members and j in members))


# -- subnetwork_compare --------------------------------------------------------

def test_compare_example_pair(M):
    tally = ComparisonTally()
    assert subnetwork_compare(clique_matrix(6, [2, 3, 4]), M, tally)
    assert tally.subnetwork_comparisons == 1


def test_compare_absent_clique(M):
    # entry (5, 6) of the example network is 0, so {1, 5, 6} is not a clique
    assert M.entry(5, 6) == 0
    assert not subnetwork_compare(clique_matrix(6, [1, 5, 6]), M, ComparisonTally())


@settings(max_examples=100, deadline=None)
@given(networks())
def test_compare_self_containment(rows):
    net = network_from_rows(rows)
    assert subnetwork_compare(net, net, ComparisonTally())


def test_compare_order_mismatch(M):
    with pytest.raises(ValueError, match="order mismatch"):
        subnetwork_compare(clique_matrix(4, [1, 2]), M, ComparisonTally())


@pytest.mark.parametrize("width", [8, 32, 64])
@pytest.mark.parametrize("n", [1, 3, 6, 9, 12])
def test_strict_verification_cost(n, width):
    net = random_network(n, 0.5, n)
    for members in [[1], list(range(1, n + 1))]:
        tally = ComparisonTally(words=WordCounter(width, strict=True))
        subnetwork_compare(clique_matrix(n, members), net, tally)
        assert tally.word_ops == 2 * math.ceil(n * n / width)


# -- enumeration ---------------------------------------------------------------

def test_enumerate_small():
    got = [s.members for s in enumerate_subsets(4, 2)]
    assert got == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert [s.members for s in enumerate_subsets(3, 3)] == [(1, 2, 3)]


def test_enumerate_six_three():
    got = [s.members for s in enumerate_subsets(6, 3)]
    assert len(got) == 20
    assert got[0] == (1, 2, 3) and got[-1] == (4, 5, 6)


@pytest.mark.parametrize("n", range(1, 10))
def test_enumerate_matches_combinations(n):
    for q in range(1, n + 1):
        got = [s.members for s in enumerate_subsets(n, q)]
        assert got == list(itertools.combinations(range(1, n + 1), q))


def test_enumerate_rank_slices_and_restart():
    full = [s.members for s in enumerate_subsets(9, 4)]
    assert [s.members for s in enumerate_subsets(9, 4)] == full
    pieces = []
    for lo in range(0, len(full), 17):
        pieces += [s.members for s in enumerate_subsets(9, 4, lo, lo + 17)]
    assert pieces == full
    assert list(enumerate_subsets(9, 4, 50, 50)) == []


def test_rank_unrank_round_trip():
    for n in range(1, 9):
        for q in range(1, n + 1):
            for r, c in enumerate(itertools.combinations(range(1, n + 1), q)):
                assert rank_subset(c, n) == r
                assert unrank_subset(n, q, r) == c


def test_enumerate_q_out_of_range():
    with pytest.raises(ValueError):
        list(enumerate_subsets(4, 0))
    with pytest.raises(ValueError):
        list(enumerate_subsets(4, 5))


# -- search_all ----------------------------------------------------------------

def test_search_all_example(M):
    found, tally = search_all(M, 3)
    assert [s.members for s in found] == [(2, 3, 4)]
    assert tally.subnetwork_comparisons == 20
    # independent check: brute-force triangle scan over the 20 triples
    triangles = [t for t in itertools.combinations(range(1, 7), 3)
                 if all(M.entry(a, b) for a, b in itertools.combinations(t, 2))]
    assert triangles == [(2, 3, 4)]


def test_search_all_example_q4(M):
    found, tally = search_all(M, 4)
    assert found == []
    assert tally.subnetwork_comparisons == 15


@pytest.mark.parametrize("n", [1, 4, 7])
def test_search_all_complete(n):
    found, tally = search_all(complete(n), n)
    assert [s.members for s in found] == [tuple(range(1, n + 1))]
    assert tally.subnetwork_comparisons == 1


def test_search_q_out_of_range(M):
    with pytest.raises(ValueError):
        search_all(M, 0)
    with pytest.raises(ValueError):
        search_first(M, 7)


@pytest.mark.parametrize("n", range(1, 10))
def test_tally_equals_binomial(n):
    net = random_network(n, 0.6, 100 + n)
    for q in range(1, n + 1):
        _, tally = search_all(net, q)
        assert tally.subnetwork_comparisons == math.comb(n, q) == binomial(n, q)
        assert tally.candidates_enumerated == tally.subnetwork_comparisons


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_oracle_exhaustive_small(n):
    for rows in all_networks(n):
        net = network_from_rows(rows)
        for q in range(1, n + 1):
            found, _ = search_all(net, q)
            assert [s.members for s in found] == naive_cliques(rows, q)


@settings(max_examples=60, deadline=None)
@given(networks_of(6))
def test_oracle_random_order_six(rows):
    net = network_from_rows(rows)
    for q in range(1, 7):
        assert [s.members for s in search_all(net, q)[0]] == naive_cliques(rows, q)


@settings(max_examples=60, deadline=None)
@given(networks(max_order=8), st.data())
def test_monotone_containment(rows, data):
    n = len(rows)
    net = network_from_rows(rows)
    big = data.draw(st.sets(st.integers(1, n), min_size=1))
    small = data.draw(st.sets(st.sampled_from(sorted(big)), min_size=1))
    if subnetwork_compare(clique_matrix(n, big), net, ComparisonTally()):
        assert subnetwork_compare(clique_matrix(n, small), net, ComparisonTally())


def test_word_ops_non_strict_bounded(M):
    _, loose = search_all(M, 3, word_width=8)
    _, strict = search_all(M, 3, word_width=8, strict=True)
    assert strict.word_ops == 20 * 2 * 5
    assert loose.word_ops <= strict.word_ops


def test_workers_give_identical_results():
    net = plant_clique(PlantSpec(12, NodeSet.of(range(7, 13), 12), 0.5, 3))
    one = search_all(net, 5)
    four = search_all(net, 5, workers=4)
    assert one[0] == four[0]
    assert one[1] == four[1]
    assert findings_dict(12, 5, *one) == findings_dict(12, 5, *four)


# -- search_first / max_clique -------------------------------------------------

def test_search_first_example(M):
    witness, tally = search_first(M, 3)
    assert witness.members == (2, 3, 4)
    expected = list(itertools.combinations(range(1, 7), 3)).index((2, 3, 4)) + 1
    assert tally.subnetwork_comparisons == expected == 11


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_search_first_worst_case_last_block(n):
    q = n // 2
    net = plant_clique(PlantSpec(n, NodeSet.of(range(q + 1, n + 1), n), 0.0, 0))
    witness, tally = search_first(net, q)
    assert witness.members == tuple(range(q + 1, n + 1))
    assert tally.subnetwork_comparisons == math.comb(n, q)


def test_search_first_absent(M):
    witness, tally = search_first(M, 4)
    assert witness is None
    assert tally.subnetwork_comparisons == 15


def test_max_clique_examples(M):
    q, witness, _ = max_clique(M)
    assert (q, witness.members) == (3, (2, 3, 4))
    q, witness, _ = max_clique(complete(5))
    assert (q, witness.members) == (5, (1, 2, 3, 4, 5))
    q, witness, _ = max_clique(edgeless(4))
    assert (q, witness.members) == (1, (1,))


@settings(max_examples=50, deadline=None)
@given(networks(max_order=7))
def test_max_clique_matches_oracle(rows):
    n = len(rows)
    best = max(q for q in range(1, n + 1) if naive_cliques(rows, q))
    q, witness, _ = max_clique(network_from_rows(rows))
    assert q == best
    assert witness.members == naive_cliques(rows, best)[0]


# -- plant_clique --------------------------------------------------------------

def test_plant_block_layout():
    net = plant_clique(PlantSpec(8, NodeSet.of([5, 6, 7, 8], 8), 0.0, 12345))
    expected = ["10000000", "01000000", "00100000", "00010000",
                "00001111", "00001111", "00001111", "00001111"]
    assert net.rows() == expected


def test_plant_full_density_is_complete():
    assert plant_clique(PlantSpec(7, NodeSet.of([2], 7), 1.0, 9)) == complete(7)


def test_plant_deterministic():
    spec = PlantSpec(10, NodeSet.of([1, 4, 9], 10), 0.3, 2**63 + 5)
    assert plant_clique(spec) == plant_clique(spec)
    other = PlantSpec(10, NodeSet.of([1, 4, 9], 10), 0.3, 2**63 + 6)
    assert plant_clique(spec) != plant_clique(other)


def test_plant_spec_validation():
    with pytest.raises(ValueError):
        PlantSpec(4, NodeSet.of([1], 4), 1.5, 0)
    with pytest.raises(ValueError):
        PlantSpec(4, NodeSet.of([1], 5), 0.5, 0)
    with pytest.raises(ValueError):
        PlantSpec(4, NodeSet.of([1], 4), 0.5, 2**64)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 9).flatmap(lambda n: st.tuples(
    st.just(n), st.sets(st.integers(1, n), min_size=1), st.floats(0, 1), st.integers(0, 2**64 - 1))))
def test_plant_contains_members(case):
    n, members, p, seed = case
    spec = PlantSpec(n, NodeSet.of(members, n), p, seed)
    found, _ = search_all(plant_clique(spec), len(members))
    assert spec.members in found


def test_findings_dict_shape(M):
    found, tally = search_all(M, 3, word_width=8, strict=True)
    assert findings_dict(6, 3, found, tally) == {
        "order": 6,
        "q": 3,
        "found": [[2, 3, 4]],
        "tally": {"subnetwork_comparisons": 20, "word_ops": 200, "candidates_enumerated": 20},
        "strict_mode": True,
        "word_width": 8,
    }
