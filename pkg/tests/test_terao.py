from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings, strategies as st

from linarr import catalog
from linarr.arrangement import PreconditionError, max_mu, poincare
from linarr.derivations import resolve
from linarr.terao import (Candidate, ChainSpec, InapplicableFilter, LatticeSummary, chain_bound,
                          enumerate_candidates, filter_balanced_stability, filter_regularity,
                          filter_second_syzygy, verdict, violated_constraints)


def brute_force(d, a, M):
    """Every (alpha, beta) pair of multisets in range, kept if no constraint is violated."""
    out = set()
    for m in range(2, d):
        for al in combinations_with_replacement(range(1, d), m):
            for be in combinations_with_replacement(range(1, d + 1), m - 2):
                c = Candidate(al, be)
                if not violated_constraints(c, d, a, M):
                    out.add(c)
    return out


@pytest.mark.parametrize("d,a,M", [(5, 2, 2), (6, 2, 2), (7, 3, 2), (7, 3, 4), (7, 2, 3), (6, 2, 3)])
def test_enumeration_matches_brute_force(d, a, M):
    cands = enumerate_candidates(d, a, M)
    assert len(set(cands)) == len(cands)
    assert set(cands) == brute_force(d, a, M)


def test_non_fano_count():
    cands = enumerate_candidates(7, 3, 2)
    assert len(cands) == 19
    assert Candidate((3, 3)) in cands
    assert [c for c in cands if c.is_free] == [Candidate((3, 3))]


def test_five_point_lattice():
    cands = enumerate_candidates(7, 3, 4)
    assert Candidate((2, 5, 5), (6,)) in cands
    assert Candidate((3, 3)) not in cands


def test_small_lattice():
    assert Candidate((2, 2)) in enumerate_candidates(5, 2, 2)


def test_enumerate_rejects_bad_parameters():
    with pytest.raises(ValueError):
        enumerate_candidates(3, 1, 1)
    with pytest.raises(ValueError):
        enumerate_candidates(7, 4, 2)


def test_balanced_filter():
    cands = enumerate_candidates(7, 3, 2)
    kept = filter_balanced_stability(cands, 7)
    assert len(kept) == 4 and Candidate((3, 3)) in kept
    assert filter_balanced_stability([Candidate((2, 5, 5), (6,))], 7)
    assert not filter_balanced_stability([Candidate((3, 3, 3), (5,))], 7)
    with pytest.raises(InapplicableFilter):
        filter_balanced_stability(cands, 6)
    with pytest.raises(InapplicableFilter):
        filter_balanced_stability(cands, 7, a=2)


def test_second_syzygy_filter():
    assert filter_second_syzygy([Candidate((2, 2, 4, 4, 4, 5), (3, 3, 3, 6))]) == []
    assert filter_second_syzygy([Candidate((2, 2, 5, 5, 5, 5), (3, 3, 6, 6))]) == []
    keep = Candidate((2, 5, 5), (6,))
    assert filter_second_syzygy([keep]) == [keep]


def test_chain_bound():
    assert chain_bound(ChainSpec(2, (4, 3))) == 4
    assert chain_bound(ChainSpec.parse("2;4,3")) == 4
    assert chain_bound(ChainSpec(5)) == 5
    for d in range(4, 12):
        assert chain_bound(ChainSpec(d - 3, (d - 1,))) == d - 2
    with pytest.raises(ValueError):
        ChainSpec(0)


def test_regularity_filter():
    assert filter_regularity([Candidate((2, 5, 5), (6,))], 4) == []
    assert filter_regularity([Candidate((3, 3))], 4) == [Candidate((3, 3))]
    cands = enumerate_candidates(7, 3, 2)
    assert filter_regularity(cands, 5) == cands


def test_verdicts():
    v = verdict(LatticeSummary(7, 3, 2), ChainSpec(2, (4, 3)))
    assert [n for _, n in v.trace] == [19, 4, 2, 1]
    assert v.forced_free and v.survivors == (Candidate((3, 3)),)
    v = verdict(LatticeSummary(7, 3, 4))
    assert not v.forced_free and Candidate((2, 5, 5), (6,)) in v.survivors
    v = verdict(LatticeSummary(5, 2, 2))
    assert Candidate((2, 2)) in v.survivors


def test_summary_from_arrangement():
    assert LatticeSummary.from_arrangement(catalog.non_fano()) == LatticeSummary(7, 3, 2)
    assert LatticeSummary.from_arrangement(catalog.five_through_a_point()) == LatticeSummary(7, 3, 4)
    with pytest.raises(PreconditionError):
        LatticeSummary.from_arrangement(catalog.nested(2))


@pytest.mark.parametrize("A", [catalog.non_fano(), catalog.five_through_a_point(),
                               catalog.nested(1)])
def test_realized_resolution_is_enumerated(A):
    s = LatticeSummary.from_arrangement(A)
    res = resolve(A)
    assert Candidate(res.alphas, res.betas) in enumerate_candidates(s.d, s.a, s.M)


def test_near_pencil_is_outside_the_constraints():
    # a near pencil has a generator of degree 1, which the degree bounds exclude
    A = catalog.near_pencil(6)
    s = LatticeSummary.from_arrangement(A)
    res = resolve(A)
    assert res.alphas == (1, 4)
    assert 4 in violated_constraints(Candidate(res.alphas, res.betas), s.d, s.a, s.M)


lattices = st.integers(5, 9).flatmap(
    lambda d: st.tuples(st.just(d), st.integers(1, (d - 1) // 2), st.integers(1, d - 2)))


@settings(max_examples=40, deadline=None)
@given(lattices)
def test_candidate_and_filter_properties(params):
    d, a, M = params
    cands = enumerate_candidates(d, a, M)
    for c in cands:
        assert violated_constraints(c, d, a, M) == []
    free = [c for c in cands if c.is_free]
    assert free in ([], [Candidate((a, d - 1 - a))])
    s2 = filter_second_syzygy(cands)
    assert set(s2) <= set(cands)
    for bound in (d - 4, d - 3, d - 2):
        if bound < 1:
            continue
        r = filter_regularity(cands, bound)
        assert set(r) <= set(cands)
        assert filter_regularity(s2, bound) == filter_second_syzygy(r)
    assert filter_regularity(cands, d - 2) == cands
