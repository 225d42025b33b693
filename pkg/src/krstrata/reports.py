"""
Stratum tables and the combinatorial statements built on them.

Dimensions are reported as lengths of index elements; every KR stratum is
assumed non-empty, so the dimension of a union of strata is the largest
length occurring in it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from krstrata.alcove import PermDatum, enumerate_perm, translation_elements
from krstrata.bruhat import closure, maximal_elements, total_length
from krstrata.config import Limits, check_product, check_rank
from krstrata.prank import (
    SplitUnitaryConfig,
    StrataConfig,
    SymplecticConfig,
    prank,
    prank_uni_split,
)
from krstrata.weyl import (
    GL,
    ExtAffineElement,
    FrobeniusTuple,
    GroupFlavor,
    GSp,
    Perm,
    from_cycles,
    from_left_form,
    perm_inverse,
)


@dataclass(frozen=True)
class StratumRecord:
    index: FrobeniusTuple
    prank: int
    length: int | None
    is_maximal: bool


@dataclass(frozen=True)
class PermutationStats:
    sigma: Perm
    a: int
    a_tilde: int
    b: int
    b_tilde: int

    @property
    def N(self) -> int:
        return self.a + self.a_tilde + self.b + self.b_tilde


def product_index_set(perm: Sequence[ExtAffineElement], f: int, limits: Limits | None = None) -> list[FrobeniusTuple]:
    check_product(len(perm) ** f, limits)
    return [FrobeniusTuple(c) for c in itertools.product(sorted(perm), repeat=f)]


def stratum_table(
    index_set: Sequence[FrobeniusTuple], cfg: StrataConfig, flavor: GroupFlavor | None = None
) -> list[StratumRecord]:
    """One record per index; lengths and maximality need a Coxeter flavor (GL or GSp)."""
    maxima = set(maximal_elements(index_set, flavor)) if flavor is not None else set()
    return [
        StratumRecord(
            index=t,
            prank=prank(t, cfg),
            length=total_length(t, flavor) if flavor is not None else None,
            is_maximal=t in maxima,
        )
        for t in index_set
    ]


# ------------------------------------------------------- ordinary locus density

@dataclass(frozen=True)
class DensityReport:
    e: int
    f: int
    n: int
    dense: bool
    maximal_per_component: tuple[ExtAffineElement, ...]
    maxima_are_translations: bool
    maximal_tuples: int
    diagonal_tuples: int


def density_report(e: int, f: int, n: int, limits: Limits | None = None) -> DensityReport:
    if min(e, f, n) < 1:
        raise ValueError("e, f and n must be at least 1")
    flavor = GSp(n)
    check_rank(flavor.rank, limits)
    datum = PermDatum(flavor, e)
    perm = enumerate_perm(datum, limits)
    maxima = maximal_elements(perm, flavor)
    translations = translation_elements(datum)
    # maximal elements of a product order are the products of maximal elements
    check_product(len(maxima) ** f, limits)
    tuples = list(itertools.product(maxima, repeat=f))
    diagonal = [c for c in tuples if len(set(c)) == 1]
    return DensityReport(
        e=e,
        f=f,
        n=n,
        dense=len(tuples) == len(diagonal),
        maximal_per_component=tuple(maxima),
        maxima_are_translations=maxima == translations,
        maximal_tuples=len(tuples),
        diagonal_tuples=len(diagonal),
    )


def ordinary_density(e: int, f: int, n: int, limits: Limits | None = None) -> bool:
    """Whether every maximal stratum index lies on the diagonal of the translation set."""
    return density_report(e, f, n, limits).dense


# ------------------------------------------------------ Hilbert-Blumenthal case

@dataclass
class HBReport:
    g: int
    strata: list[StratumRecord]
    prank_values: list[int]
    ordinary: list[FrobeniusTuple]
    maximal: list[FrobeniusTuple]
    maximal_lengths: list[int]
    prank0_components: list[FrobeniusTuple]
    prank0_covered: bool
    intersection: list[FrobeniusTuple]
    intersection_prank0: bool
    generators: dict[str, ExtAffineElement] = field(default_factory=dict)


def hb_report(g: int, limits: Limits | None = None) -> HBReport:
    """Inert Hilbert-Blumenthal case: e = 1, n = 1, f = g."""
    if g < 2:
        raise ValueError("g must be at least 2")
    flavor = GSp(1)
    cfg = SymplecticConfig(e=1, f=g, n=1)
    perm = enumerate_perm(cfg.datum, limits)
    index = product_index_set(perm, g, limits)
    strata = stratum_table(index, cfg, flavor)
    by_index = {s.index: s for s in strata}

    tau = ExtAffineElement((2, 1), (1, 0))
    s1_tau = ExtAffineElement.translation((1, 0))
    s0_tau = ExtAffineElement.translation((0, 1))
    x1 = FrobeniusTuple([s1_tau] * g)
    x2 = FrobeniusTuple([s0_tau] * g)

    ordinary = [s.index for s in strata if s.prank == cfg.g]
    maximal = [s.index for s in strata if s.is_maximal]
    others = [t for t in maximal if t not in (x1, x2)]
    zero = {s.index for s in strata if s.prank == 0}
    covered = set()
    for t in others:
        covered.update(closure(t, index, flavor))
    inter = sorted(set(closure(x1, index, flavor)) & set(closure(x2, index, flavor)))
    return HBReport(
        g=g,
        strata=strata,
        prank_values=sorted({s.prank for s in strata}),
        ordinary=sorted(ordinary),
        maximal=sorted(maximal),
        maximal_lengths=sorted({by_index[t].length for t in maximal}),
        prank0_components=sorted(others),
        prank0_covered=covered == zero,
        intersection=inter,
        intersection_prank0=all(by_index[t].prank == 0 for t in inter),
        generators={"tau": tau, "s1tau": s1_tau, "s0tau": s0_tau},
    )


# ----------------------------------------------- W_{n,r} and the p-rank 0 locus

def _derangements(n: int):
    for w in itertools.permutations(range(1, n + 1)):
        if all(w[i] != i + 1 for i in range(n)):
            yield w


def enumerate_wnr(n: int, r: int) -> list[Perm]:
    """Fixed-point-free w in S_n with exactly r indices i such that w(i) < i."""
    if n < 1 or not 0 <= r <= n:
        raise ValueError(f"need n >= 1 and 0 <= r <= n, got n={n}, r={r}")
    check_rank(n)
    return [w for w in _derangements(n) if sum(w[i] < i + 1 for i in range(n)) == r]


def n_sigma_stats(sigma: Sequence[int]) -> PermutationStats:
    s = tuple(sigma)
    n = len(s)
    a = at = b = bt = 0
    for i in range(1, n + 1):
        si = s[i - 1]
        for j in range(1, n + 1):
            sj = s[j - 1]
            a += i < j < sj < si
            at += sj < si < i < j
            b += si < i < j < sj
            bt += i < si < sj < j
    return PermutationStats(s, a, at, b, bt)


def closed_form_bound(n: int, r: int) -> int:
    return min((r - 1) * (n - r), r * (n - r - 1))


def staircase_witness(n: int, r: int) -> Perm:
    """(1,2)(3,4)...(2r-3,2r-2)(2r-1,2r,...,n), defined for 1 <= r <= n/2."""
    if not 1 <= r <= n / 2:
        raise ValueError("the explicit witness needs 1 <= r <= n/2")
    cycles = [(2 * k - 1, 2 * k) for k in range(1, r)]
    cycles.append(tuple(range(2 * r - 1, n + 1)))
    return from_cycles(n, cycles)


@lru_cache(maxsize=None)
def _nsigma_table(n: int) -> dict[int, tuple[int, Perm]]:
    """r -> (max N_sigma over W_{n,r}, first sigma attaining it)."""
    best: dict[int, tuple[int, Perm]] = {}
    for w in _derangements(n):
        r = sum(w[i] < i + 1 for i in range(n))
        N = n_sigma_stats(w).N
        if r not in best or N > best[r][0]:
            best[r] = (N, w)
    return best


@dataclass(frozen=True)
class Prank0Result:
    n: int
    r: int
    dimension: int
    witness: Perm
    closed_form: int
    explicit_witness: Perm
    explicit_witness_N: int

    @property
    def consistent(self) -> bool:
        return self.dimension == self.closed_form == self.explicit_witness_N


def prank0_dimension(n: int, r: int) -> Prank0Result:
    """max of N_sigma over W_{n,r}, together with an attaining sigma."""
    if n < 2 or not 1 <= r <= n - 1:
        raise ValueError(f"need n >= 2 and 1 <= r <= n-1, got n={n}, r={r}")
    check_rank(n)
    N, witness = _nsigma_table(n)[r]
    # sigma -> sigma^-1 maps W_{n,r} onto W_{n,n-r} and preserves N
    explicit = staircase_witness(n, r) if r <= n / 2 else perm_inverse(staircase_witness(n, n - r))
    if explicit not in enumerate_wnr(n, r):
        raise AssertionError(f"explicit witness {explicit} is not in W_{n},{r}")
    return Prank0Result(
        n=n,
        r=r,
        dimension=N,
        witness=witness,
        closed_form=closed_form_bound(n, r),
        explicit_witness=explicit,
        explicit_witness_N=n_sigma_stats(explicit).N,
    )


def lambda_of(w: Perm) -> tuple[int, ...]:
    """lam(w)(i) = 0 if w^-1(i) > i, else 1."""
    winv = perm_inverse(w)
    return tuple(0 if winv[i] > i + 1 else 1 for i in range(len(w)))


def prank0_element(w: Perm) -> ExtAffineElement:
    """The element u^lam(w) w."""
    return from_left_form(lambda_of(w), w)


@dataclass(frozen=True)
class Perm0Report:
    n: int
    r: int
    ok: bool
    size: int
    wnr_size: int
    max_length: int
    problems: tuple[str, ...]


def perm0_bijection_check(n: int, r: int, limits: Limits | None = None) -> Perm0Report:
    """Compare the p-rank 0 part of Perm_r (e = 1) with W_{n,r}."""
    if n < 2 or not 1 <= r <= n - 1:
        raise ValueError(f"need n >= 2 and 1 <= r <= n-1, got n={n}, r={r}")
    from krstrata.bruhat import length_im

    flavor = GL(n)
    cfg = SplitUnitaryConfig(e=1, f0=1, n=n, r=r)
    perm = enumerate_perm(cfg.datum, limits)
    zero = [x for x in perm if prank_uni_split(FrobeniusTuple([x]), cfg) == 0]
    wnr = enumerate_wnr(n, r)
    problems = []
    projections = [x.w for x in zero]
    if len(set(projections)) != len(zero):
        problems.append("projection to W is not injective")
    if set(projections) != set(wnr):
        problems.append("projection image differs from W_{n,r}")
    by_w = {x.w: x for x in zero}
    lengths = []
    for w in wnr:
        y = prank0_element(w)
        if by_w.get(w) != y:
            problems.append(f"inverse map sends {w} to {y}, expected {by_w.get(w)}")
        ell = length_im(y, flavor)
        lengths.append(ell)
        if ell != n_sigma_stats(w).N:
            problems.append(f"length {ell} of {y} differs from N_w = {n_sigma_stats(w).N}")
    return Perm0Report(
        n=n,
        r=r,
        ok=not problems,
        size=len(zero),
        wnr_size=len(wnr),
        max_length=max(lengths, default=0),
        problems=tuple(problems),
    )
