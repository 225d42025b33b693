import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from krstrata.alcove import PermDatum, enumerate_perm
from krstrata.bruhat import length_im
from krstrata.config import WindowError
from krstrata.prank import SymplecticConfig
from krstrata.reports import (
    closed_form_bound,
    density_report,
    enumerate_wnr,
    hb_report,
    lambda_of,
    n_sigma_stats,
    ordinary_density,
    perm0_bijection_check,
    prank0_dimension,
    prank0_element,
    product_index_set,
    staircase_witness,
    stratum_table,
)
from krstrata.weyl import GL, ExtAffineElement, FrobeniusTuple, GSp, from_cycles, perm_inverse

X = ExtAffineElement
T = FrobeniusTuple
TAU = X((2, 1), (1, 0))
S1_TAU = X.translation((1, 0))
S0_TAU = X.translation((0, 1))


# ---------------------------------------------------------------- W_{n,r}

def test_wnr_examples():
    assert enumerate_wnr(2, 1) == [(2, 1)]
    assert enumerate_wnr(2, 0) == []
    assert enumerate_wnr(3, 3) == []
    assert from_cycles(4, [(1, 2), (3, 4)]) in enumerate_wnr(4, 2)
    with pytest.raises(ValueError):
        enumerate_wnr(3, 4)


def test_wnr_partitions_derangements():
    # derangement numbers
    for n, d in [(2, 1), (3, 2), (4, 9), (5, 44), (6, 265)]:
        assert sum(len(enumerate_wnr(n, r)) for r in range(n + 1)) == d


def test_wnr_inverse_swaps_r():
    for n in range(2, 7):
        for r in range(1, n):
            assert sorted(perm_inverse(w) for w in enumerate_wnr(n, r)) == enumerate_wnr(n, n - r)


# ----------------------------------------------------------------- N_sigma

def test_n_sigma_examples():
    assert n_sigma_stats((2, 1)).N == 0
    assert n_sigma_stats((1, 2, 3, 4)).N == 0
    s = n_sigma_stats(from_cycles(4, [(1, 2), (3, 4)]))
    assert (s.a, s.a_tilde, s.b, s.b_tilde, s.N) == (0, 0, 1, 1, 2)


def _brute_stats(sigma):
    n = len(sigma)
    s = lambda i: sigma[i - 1]  # noqa: E731
    pairs = list(itertools.product(range(1, n + 1), repeat=2))
    return (
        len([(i, j) for i, j in pairs if i < j < s(j) < s(i)]),
        len([(i, j) for i, j in pairs if s(j) < s(i) < i < j]),
        len([(i, j) for i, j in pairs if s(i) < i < j < s(j)]),
        len([(i, j) for i, j in pairs if i < s(i) < s(j) < j]),
    )


@given(st.integers(1, 8).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_n_sigma_matches_definition(sigma):
    s = n_sigma_stats(tuple(sigma))
    assert (s.a, s.a_tilde, s.b, s.b_tilde) == _brute_stats(tuple(sigma))
    assert s.N == s.a + s.a_tilde + s.b + s.b_tilde


@pytest.mark.parametrize("n", range(1, 7))
def test_n_sigma_inverse_symmetry_exhaustive(n):
    for sigma in itertools.permutations(range(1, n + 1)):
        s, t = n_sigma_stats(sigma), n_sigma_stats(perm_inverse(sigma))
        assert s.N == t.N
        assert (s.a, s.b) == (t.a_tilde, t.b_tilde)


@given(st.integers(7, 8).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_n_sigma_inverse_symmetry_random(sigma):
    assert n_sigma_stats(tuple(sigma)).N == n_sigma_stats(perm_inverse(tuple(sigma))).N


# ------------------------------------------------------------------ prank0

def test_prank0_examples():
    r = prank0_dimension(4, 2)
    assert r.dimension == 2 and r.consistent
    assert r.explicit_witness == from_cycles(4, [(1, 2), (3, 4)])
    assert n_sigma_stats(r.witness).N == 2
    assert prank0_dimension(2, 1).dimension == 0
    assert prank0_dimension(5, 2).dimension == 3


def test_prank0_range_errors():
    for n, r in [(1, 1), (4, 0), (4, 4)]:
        with pytest.raises(ValueError):
            prank0_dimension(n, r)


def test_staircase_witness():
    assert staircase_witness(5, 1) == (2, 3, 4, 5, 1)
    assert staircase_witness(6, 3) == from_cycles(6, [(1, 2), (3, 4), (5, 6)])
    with pytest.raises(ValueError):
        staircase_witness(4, 3)


@pytest.mark.parametrize("n", range(2, 8))
def test_prank0_closed_form(n):
    for r in range(1, n):
        res = prank0_dimension(n, r)
        assert res.dimension == closed_form_bound(n, r)
        assert res.witness in enumerate_wnr(n, r)
        if r <= n / 2:
            assert n_sigma_stats(staircase_witness(n, r)).N == res.dimension


# ------------------------------------------------------------------ perm0

def test_lambda_of():
    assert lambda_of((2, 1)) == (0, 1)
    assert lambda_of((1, 2, 3)) == (1, 1, 1)


def test_perm0_examples():
    rep = perm0_bijection_check(2, 1)
    assert rep.ok and rep.size == 1 and rep.max_length == 0
    assert length_im(prank0_element((2, 1)), GL(2)) == 0
    rep = perm0_bijection_check(3, 1)
    assert rep.ok and rep.size == rep.wnr_size
    rep = perm0_bijection_check(4, 2)
    assert rep.ok and rep.max_length == 2


@pytest.mark.parametrize("n", range(2, 6))
def test_perm0_bijection(n):
    for r in range(1, n):
        rep = perm0_bijection_check(n, r)
        assert rep.ok, rep.problems
        assert rep.max_length == closed_form_bound(n, r)


# ----------------------------------------------------------------- density

def test_density_examples():
    assert ordinary_density(2, 1, 1)
    assert not ordinary_density(1, 2, 1)
    assert ordinary_density(1, 1, 2)


def test_density_report_fields():
    rep = density_report(1, 2, 1)
    assert rep.maxima_are_translations
    assert rep.maximal_per_component == (S0_TAU, S1_TAU)
    assert (rep.maximal_tuples, rep.diagonal_tuples) == (4, 2)
    with pytest.raises(ValueError):
        density_report(0, 1, 1)


@pytest.mark.parametrize("e,f,n", [(e, f, n) for e in (1, 2) for f in (1, 2) for n in (1, 2)])
def test_density_criterion(e, f, n):
    assert ordinary_density(e, f, n) == (f == 1)


# ---------------------------------------------------------------------- HB

def test_hb_g2():
    rep = hb_report(2)
    assert len(rep.strata) == 9
    assert rep.prank_values == [0, 2]
    assert rep.ordinary == sorted([T([S1_TAU] * 2), T([S0_TAU] * 2)])
    assert all(s.length == 2 for s in rep.strata if s.index in rep.ordinary)
    assert sum(s.prank == 0 for s in rep.strata) == 7
    assert rep.maximal == sorted(T(c) for c in itertools.product([S1_TAU, S0_TAU], repeat=2))
    assert rep.maximal_lengths == [2]
    assert rep.prank0_covered
    assert rep.intersection == [T([TAU, TAU])]
    assert rep.intersection_prank0


@pytest.mark.parametrize("g", [2, 3, 4])
def test_hb_dichotomy(g):
    rep = hb_report(g)
    assert rep.prank_values == [0, g]
    assert len(rep.ordinary) == 2
    assert len(rep.maximal) == 2**g and rep.maximal_lengths == [g]
    assert rep.intersection_prank0


def test_hb_rejects_small_g():
    with pytest.raises(ValueError):
        hb_report(1)


def test_stratum_table_records():
    cfg = SymplecticConfig(e=1, f=2, n=1)
    perm = enumerate_perm(cfg.datum)
    index = product_index_set(perm, 2)
    assert len(index) == 9
    table = stratum_table(index, cfg, GSp(1))
    for rec in table:
        assert rec.length == sum(length_im(x, GSp(1)) for x in rec.index)
        assert rec.prank % cfg.g == 0
    without = stratum_table(index, cfg)
    assert all(r.length is None and not r.is_maximal for r in without)


def test_product_guard():
    from krstrata.config import Limits

    perm = enumerate_perm(PermDatum(GSp(1), 1))
    with pytest.raises(WindowError):
        product_index_set(perm, 5, Limits(max_product=100))
