"""Exit criteria.  Each test checks one criterion at its stated tolerance and
time limit and prints a single PASS/FAIL line."""

import contextlib
import itertools
import random
import time

import pytest

from krstrata.alcove import (
    PermDatum,
    candidate_vectors,
    enumerate_perm,
    is_permissible,
    is_permissible_oracle,
    verschiebung_to_frobenius,
)
from krstrata.bruhat import admissible_set, bruhat_leq, length_im, length_word
from krstrata.prank import (
    InertUnitaryConfig,
    RamifiedUnitaryConfig,
    SplitUnitaryConfig,
    SymplecticConfig,
    newton_vector,
    prank_sym,
    prank_uni_inert,
    prank_uni_ramified,
    prank_uni_split,
    xprime,
    xprime_via_adjoint,
)
from krstrata.reports import (
    enumerate_wnr,
    hb_report,
    n_sigma_stats,
    ordinary_density,
    prank0_dimension,
    prank0_element,
    staircase_witness,
)
from krstrata.weyl import GL, ExtAffineElement, FrobeniusTuple, GSp, finite_weyl_group

pytestmark = pytest.mark.acceptance

X = ExtAffineElement
T = FrobeniusTuple


@pytest.fixture
def criterion(capsys):
    @contextlib.contextmanager
    def run(k, limit):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            within = elapsed < limit
            verdict = "PASS" if ok and within else "FAIL"
            with capsys.disabled():
                print(f"\n{verdict} criterion {k}: {elapsed:.2f}s (limit {limit}s)")
        assert within, f"criterion {k} took {elapsed:.2f}s, limit {limit}s"

    return run


def _perm_adm_window():
    for n in (1, 2):
        for e in (1, 2):
            yield PermDatum(GSp(n), e)
    for n in (1, 2, 3, 4):
        for r in range(n + 1):
            yield PermDatum(GL(n), 1, r)


def test_criterion_1_hilbert_blumenthal_golden(criterion):
    with criterion(1, 1):
        flavor = GSp(1)
        tau = X((2, 1), (1, 0))
        s1_tau, s0_tau = X.translation((1, 0)), X.translation((0, 1))
        perm = enumerate_perm(PermDatum(flavor, 1))
        assert set(perm) == {s1_tau, s0_tau, tau}
        assert [length_im(x, flavor) for x in (s1_tau, s0_tau, tau)] == [1, 1, 0]
        strict = {(a, b) for a in perm for b in perm if a != b and bruhat_leq(a, b, flavor)}
        assert strict == {(tau, s0_tau), (tau, s1_tau)}


def test_criterion_2_prank_dichotomy(criterion):
    with criterion(2, 5):
        for g in (2, 3):
            rep = hb_report(g)
            assert set(rep.prank_values) <= {0, g}
            assert len(rep.ordinary) == 2
            assert rep.intersection and rep.intersection_prank0


def test_criterion_3_perm_equals_adm(criterion):
    with criterion(3, 60):
        for d in _perm_adm_window():
            assert enumerate_perm(d) == admissible_set(d.mu, d.flavor), d


def test_criterion_4_prank0_dimension(criterion):
    with criterion(4, 30):
        for n in range(2, 9):
            for r in range(1, n):
                res = prank0_dimension(n, r)
                assert res.dimension == min((r - 1) * (n - r), r * (n - r - 1)), (n, r)
                if r <= n / 2:
                    sigma = staircase_witness(n, r)
                    assert sigma in enumerate_wnr(n, r)
                    assert n_sigma_stats(sigma).N == res.dimension, (n, r)


def test_criterion_5_length_consistency(criterion):
    with criterion(5, 60):
        data = [PermDatum(GL(n), e, r) for n in (1, 2, 3, 4) for e in (1, 2) for r in range(n * e + 1)]
        data += [PermDatum(GSp(n), e) for n in (1, 2, 3) for e in (1, 2)]
        for d in data:
            for x in enumerate_perm(d):
                assert length_im(x, d.flavor) == length_word(x, d.flavor), (d, x)
        for n in range(2, 7):
            for r in range(1, n):
                for w in enumerate_wnr(n, r):
                    assert length_im(prank0_element(w), GL(n)) == n_sigma_stats(w).N, w


def _lemma_holds(t):
    nu = newton_vector(t).nu
    for i in range(t.rank):
        some = any(v[i] == 0 for v in nu)
        every = all(v[i] == 0 for v in nu)
        fixed = all(x.w[i] == i + 1 and x.lam[i] == 0 for x in t)
        if not some == every == fixed:
            return False
    return True


def _random_hypothesis_tuple(rng):
    m, f = rng.randint(1, 5), rng.randint(1, 3)
    comps = []
    for _ in range(f):
        w = list(range(1, m + 1))
        rng.shuffle(w)
        lam = tuple(rng.randint(0 if w[i] <= i + 1 else 1, 3) for i in range(m))
        comps.append(X(tuple(w), lam))
    return T(comps)


def test_criterion_6_newton_lemma(criterion):
    with criterion(6, 60):
        rng = random.Random(20261019)
        for _ in range(1000):
            t = _random_hypothesis_tuple(rng)
            assert _lemma_holds(t), t
        for m in (1, 2, 3):
            pool = [
                X(w, lam)
                for w in itertools.permutations(range(1, m + 1))
                for lam in itertools.product(*[range(0 if w[i] <= i + 1 else 1, 3) for i in range(m)])
            ]
            for f in (1, 2):
                for comps in itertools.product(pool, repeat=f):
                    assert _lemma_holds(T(comps)), comps


def test_criterion_7_xprime_identity(criterion):
    with criterion(7, 10):
        rng = random.Random(7)
        for _ in range(10_000):
            n, e = rng.randint(1, 8), rng.randint(0, 3)
            w = list(range(1, n + 1))
            rng.shuffle(w)
            x = X(tuple(w), tuple(rng.randint(-4, 4) for _ in range(n)))
            assert xprime(x, e) == xprime_via_adjoint(x, e), (x, e)


def test_criterion_8_oracle_equivalence(criterion):
    with criterion(8, 60):
        for d in _perm_adm_window():
            for w in finite_weyl_group(d.flavor):
                for lam in candidate_vectors(d.flavor, -1, d.bound + 1):
                    x = X(w, lam)
                    assert is_permissible(x, d) == is_permissible_oracle(x, d), (d, x)


def test_criterion_9_density(criterion):
    with criterion(9, 60):
        for e in (1, 2):
            for f in (1, 2, 3):
                for n in (1, 2):
                    assert ordinary_density(e, f, n) == (f == 1), (e, f, n)


def _v(t, e):
    return T([verschiebung_to_frobenius(x, e) for x in t])


def test_criterion_10_normalization_invariance(criterion):
    with criterion(10, 30):
        for n, e, f in [(1, 1, 3), (1, 2, 2), (2, 1, 2), (2, 2, 1), (3, 1, 1)]:
            cfg = SymplecticConfig(e=e, f=f, n=n)
            for c in itertools.product(enumerate_perm(cfg.datum), repeat=f):
                assert prank_sym(T(c), cfg) == prank_sym(_v(T(c), e), cfg)
        for n, e0, f in [(2, 1, 2), (3, 1, 2), (2, 2, 1), (4, 1, 1)]:
            cfg = RamifiedUnitaryConfig(e0=e0, f=f, n=n)
            for c in itertools.product(enumerate_perm(cfg.datum), repeat=f):
                assert prank_uni_ramified(T(c), cfg) == prank_uni_ramified(_v(T(c), cfg.e), cfg)
        for n, e, f0 in [(2, 1, 2), (3, 1, 2), (2, 2, 1), (4, 1, 1)]:
            cfg = InertUnitaryConfig(e=e, f0=f0, n=n)
            pool = [x for r in range(n * e + 1) for x in enumerate_perm(PermDatum(GL(n), e, r))]
            for c in itertools.product(pool, repeat=f0):
                assert prank_uni_inert(T(c), cfg) == prank_uni_inert(_v(T(c), e), cfg)
        for n, e, f0 in [(2, 1, 2), (3, 1, 2), (3, 2, 1), (4, 1, 1)]:
            for r in range(n * e + 1):
                cfg = SplitUnitaryConfig(e=e, f0=f0, n=n, r=r)
                dual = SplitUnitaryConfig(e=e, f0=f0, n=n, r=n * e - r)
                for c in itertools.product(enumerate_perm(cfg.datum), repeat=f0):
                    assert prank_uni_split(T(c), cfg) == prank_uni_split(_v(T(c), e), dual)
