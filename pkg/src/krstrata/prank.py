"""
p-rank of a KR stratum from its index, and the slope-zero part of the Newton vector.

All formulas read a component ``(w, lam)`` as ``w u^lam``, which is exactly
the stored monomial matrix ``A_w u^lam``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from krstrata.alcove import PermDatum, is_permissible
from krstrata.config import HypothesisViolation, NotPermissibleError
from krstrata.weyl import (
    GL,
    GU,
    ExtAffineElement,
    FrobeniusTuple,
    GSp,
    adjoint_tau,
    central,
    identity_perm,
    inverse,
    multiply,
    perm_order,
    power,
)


@dataclass(frozen=True)
class SymplecticConfig:
    e: int
    f: int
    n: int

    @property
    def g(self) -> int:
        return self.e * self.f

    @property
    def datum(self) -> PermDatum:
        return PermDatum(GSp(self.n), self.e)

    @property
    def frobenius_length(self) -> int:
        return self.f


@dataclass(frozen=True)
class RamifiedUnitaryConfig:
    e0: int
    f: int
    n: int

    @property
    def e(self) -> int:
        return 2 * self.e0

    @property
    def g(self) -> int:
        return self.e * self.f

    @property
    def datum(self) -> PermDatum:
        return PermDatum(GU(self.n), self.e0)

    @property
    def frobenius_length(self) -> int:
        return self.f


@dataclass(frozen=True)
class InertUnitaryConfig:
    """Components may lie in different Perm_r; r is read off each component."""

    e: int
    f0: int
    n: int

    @property
    def g(self) -> int:
        return 2 * self.e * self.f0

    @property
    def frobenius_length(self) -> int:
        return self.f0


@dataclass(frozen=True)
class SplitUnitaryConfig:
    e: int
    f0: int
    n: int
    r: int

    @property
    def g0(self) -> int:
        return self.e * self.f0

    @property
    def datum(self) -> PermDatum:
        return PermDatum(GL(self.n), self.e, self.r)

    @property
    def frobenius_length(self) -> int:
        return self.f0


StrataConfig = Union[SymplecticConfig, RamifiedUnitaryConfig, InertUnitaryConfig, SplitUnitaryConfig]


def _validate(t: FrobeniusTuple, cfg: StrataConfig) -> None:
    for p in ("e", "n"):
        if getattr(cfg, p) < 1:
            raise ValueError(f"{p} must be at least 1")
    if cfg.frobenius_length < 1:
        raise ValueError("the Frobenius orbit must be non-empty")
    if t.f != cfg.frobenius_length:
        raise ValueError(f"tuple has {t.f} components, configuration expects {cfg.frobenius_length}")
    for xi, x in enumerate(t):
        if isinstance(cfg, InertUnitaryConfig):
            r = cfg.n * cfg.e - sum(x.lam)
            ok = 0 <= r <= cfg.n * cfg.e and x.rank == cfg.n and is_permissible(x, PermDatum(GL(cfg.n), cfg.e, r))
        else:
            d = cfg.datum
            ok = x.rank == d.flavor.rank and is_permissible(x, d)
        if not ok:
            raise NotPermissibleError(f"component {xi} ({x}) is not permissible for {cfg}")


def _count(t: FrobeniusTuple, value: int) -> int:
    return sum(
        1
        for i in range(t.rank)
        if all(x.w[i] == i + 1 and x.lam[i] == value for x in t)
    )


def prank_sym(t: FrobeniusTuple, cfg: SymplecticConfig) -> int:
    _validate(t, cfg)
    return cfg.g * _count(t, 0)


def prank_uni_ramified(t: FrobeniusTuple, cfg: RamifiedUnitaryConfig) -> int:
    _validate(t, cfg)
    return cfg.g * _count(t, 0)


def xprime(x: ExtAffineElement, e: int) -> ExtAffineElement:
    """w'(i) = n+1-w(n+1-i), lam'(i) = e - lam(n+1-i)."""
    n = x.rank
    w = tuple(n + 1 - x.w[n - i] for i in range(1, n + 1))
    lam = tuple(e - x.lam[n - i] for i in range(1, n + 1))
    return ExtAffineElement(w, lam)


def xprime_via_adjoint(x: ExtAffineElement, e: int) -> ExtAffineElement:
    """u^e (x^tau)^-1 computed through group operations."""
    return multiply(central(x.rank, e), inverse(adjoint_tau(x)))


def prank_uni_inert(t: FrobeniusTuple, cfg: InertUnitaryConfig) -> int:
    _validate(t, cfg)
    primes = [xprime(x, cfg.e) for x in t]
    count = 0
    for i in range(cfg.n):
        if all(
            x.w[i] == i + 1 and xp.w[i] == i + 1 and x.lam[i] == 0 and xp.lam[i] == 0
            for x, xp in zip(t, primes)
        ):
            count += 1
    return cfg.g * count


def prank_uni_split(t: FrobeniusTuple, cfg: SplitUnitaryConfig) -> int:
    _validate(t, cfg)
    return cfg.g0 * (_count(t, 0) + _count(t, cfg.e))


def prank(t: FrobeniusTuple, cfg: StrataConfig) -> int:
    if isinstance(cfg, SymplecticConfig):
        return prank_sym(t, cfg)
    if isinstance(cfg, RamifiedUnitaryConfig):
        return prank_uni_ramified(t, cfg)
    if isinstance(cfg, InertUnitaryConfig):
        return prank_uni_inert(t, cfg)
    if isinstance(cfg, SplitUnitaryConfig):
        return prank_uni_split(t, cfg)
    raise TypeError(f"unknown configuration {cfg!r}")


def prank_unit(cfg: StrataConfig) -> int:
    """The p-rank values are multiples of this number."""
    return cfg.g0 if isinstance(cfg, SplitUnitaryConfig) else cfg.g


# --------------------------------------------------------------- Newton vector

@dataclass(frozen=True)
class NewtonResult:
    nu: tuple[tuple[Fraction, ...], ...]  # one vector per component xi
    zero_multiplicity: int
    N: int


def check_newton_hypothesis(t: FrobeniusTuple) -> None:
    """lam(i) >= 0, and lam(i) = 0 forces w(i) <= i, for every component."""
    for xi, x in enumerate(t):
        for i in range(x.rank):
            if x.lam[i] < 0:
                raise HypothesisViolation(xi, i + 1, f"negative entry {x.lam[i]}")
            if x.lam[i] == 0 and x.w[i] > i + 1:
                raise HypothesisViolation(xi, i + 1, f"zero entry but w(i) = {x.w[i]} > i")


def twisted_product(t: FrobeniusTuple, xi: int) -> ExtAffineElement:
    """x_xi x_(xi-1) ... x_(xi-f+1): component xi of prod_(k<f) sigma^k(t)."""
    f = t.f
    result = ExtAffineElement.identity(t.rank)
    for k in range(f):
        result = multiply(result, t[(xi - k) % f])
    return result


def newton_vector(t: FrobeniusTuple) -> NewtonResult:
    check_newton_hypothesis(t)
    f, m = t.f, t.rank
    products = [twisted_product(t, xi) for xi in range(f)]
    # the components of the twisted product are conjugate, so one order serves all
    N = perm_order(products[0].w)
    nu = []
    for p in products:
        full = power(p, N)
        if full.w != identity_perm(m):
            raise AssertionError("twisted power is not a translation")
        nu.append(tuple(Fraction(a, N * f) for a in full.lam))
    zeros = [{i for i in range(m) if v[i] == 0} for v in nu]
    return NewtonResult(tuple(nu), len(zeros[0]), N)
