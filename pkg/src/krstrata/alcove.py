"""
Extended alcoves, permissibility and the monomial-lattice oracle.

A monomial lattice ``L(v)`` is spanned by ``u^v(j) e_j``; a larger exponent
means a smaller lattice.  The standard chain is ``Λ_i = L(omega_i)`` with
``omega_i = ((-1)^(i), 0^(m-i))`` for ``0 <= i < m`` and
``Λ_(i+m) = u^-1 Λ_i``, so ``omega_(i+m) = omega_i - 1``.

The extended alcove of ``x`` is ``x_i = exponents of x Λ_i``.  Because
``x`` commutes with ``u``, ``x_(i+m) = x_i - 1`` as well, so a condition of the
form ``omega_i <= x_i <= omega_i + e`` only has to be checked for the base
indices ``0 <= i < m``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from krstrata.config import FlavorError, Limits, RankMismatchError, check_rank
from krstrata.weyl import (
    ExtAffineElement,
    GroupFlavor,
    Vector,
    central,
    finite_weyl_group,
    in_flavor,
    inverse,
    multiply,
)

AlcoveChain = tuple[Vector, ...]


@dataclass(frozen=True)
class MonomialLattice:
    exponents: Vector

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(a) for a in self.exponents))

    @property
    def rank(self) -> int:
        return len(self.exponents)

    def contains(self, other: "MonomialLattice") -> bool:
        """True iff ``other ⊆ self``."""
        if other.rank != self.rank:
            raise RankMismatchError(f"ranks {other.rank} and {self.rank} differ")
        return all(a >= b for a, b in zip(other.exponents, self.exponents))

    def scaled(self, k: int) -> "MonomialLattice":
        """The lattice u^k L."""
        return MonomialLattice(tuple(a + k for a in self.exponents))


def standard_lattice(m: int, i: int) -> MonomialLattice:
    q, r = divmod(i, m)
    return MonomialLattice(tuple((-1 if j < r else 0) - q for j in range(m)))


def standard_alcove(m: int) -> AlcoveChain:
    if m < 1:
        raise ValueError("rank must be positive")
    return tuple(standard_lattice(m, i).exponents for i in range(m))


def lattice_image(x: ExtAffineElement, L: MonomialLattice) -> MonomialLattice:
    if x.rank != L.rank:
        raise RankMismatchError(f"element of rank {x.rank} applied to lattice of rank {L.rank}")
    out = [0] * x.rank
    for j, wj in enumerate(x.w):
        out[wj - 1] = x.lam[j] + L.exponents[j]
    return MonomialLattice(tuple(out))


def alcove_of(x: ExtAffineElement) -> AlcoveChain:
    m = x.rank
    chain = []
    for i in range(m):
        xi = [0] * m
        for j, wj in enumerate(x.w):
            xi[wj - 1] = x.lam[j] - (1 if j < i else 0)
        chain.append(tuple(xi))
    return tuple(chain)


# ------------------------------------------------------------------ Perm data

@dataclass(frozen=True)
class PermDatum:
    """Parameters of a Perm set.

    ``e`` is the ramification index; for the ramified unitary flavor it is
    ``e_0`` and the alcove bound is ``2 e_0``.  ``r`` is only used for GL,
    where the codimension is ``s = n e - r``.
    """

    flavor: GroupFlavor
    e: int
    r: int | None = None

    def __post_init__(self):
        if self.e < 0:
            raise ValueError("e must be non-negative")
        if self.flavor.kind == "GL":
            if self.r is None:
                raise FlavorError("the GL flavor needs r")
            if not 0 <= self.r <= self.flavor.n * self.e:
                raise FlavorError(f"r={self.r} outside 0..{self.flavor.n * self.e}")
        elif self.r is not None:
            raise FlavorError("r only applies to the GL flavor")

    @property
    def bound(self) -> int:
        return 2 * self.e if self.flavor.kind == "GU" else self.e

    @property
    def target(self) -> int:
        """Required value of sum(lam); row i of the alcove sums to target - i."""
        n = self.flavor.n
        if self.flavor.kind == "GL":
            return n * self.e - self.r
        return n * self.e

    @property
    def s(self) -> int | None:
        return self.target if self.flavor.kind == "GL" else None

    @property
    def mu(self) -> Vector:
        """The dominant coweight whose admissible set this Perm set should be."""
        m, b, t = self.flavor.rank, self.bound, self.target
        if self.flavor.kind == "GL":
            # dominant, entries in [0, b], summing to s
            q, rem = divmod(t, b) if b else (0, 0)
            return ((b,) * q + ((rem,) if rem else ()) + (0,) * m)[:m]
        return (b,) * (m // 2) + ((b // 2,) if m % 2 else ()) + (0,) * (m // 2)


def _check_datum(x: ExtAffineElement, d: PermDatum) -> None:
    if x.rank != d.flavor.rank:
        raise RankMismatchError(f"element of rank {x.rank} for flavor {d.flavor}")
    if not in_flavor(x, d.flavor):
        raise FlavorError(f"{x} does not lie in the extended affine Weyl group of {d.flavor}")


def _gu_duality(chain: AlcoveChain) -> bool:
    # x_i(j) + x_(n-i)(n+1-j) = 2r - 1 for all 0 <= i <= n, with x_n = x_0 - 1
    n = len(chain)
    ext = list(chain) + [tuple(a - 1 for a in chain[0])]
    total = ext[0][0] + ext[n][n - 1]
    if total % 2 == 0:
        return False
    return all(ext[i][j] + ext[n - i][n - 1 - j] == total for i in range(n + 1) for j in range(n))


def is_permissible(x: ExtAffineElement, d: PermDatum) -> bool:
    _check_datum(x, d)
    if sum(x.lam) != d.target:
        return False
    chain = alcove_of(x)
    omega = standard_alcove(x.rank)
    b = d.bound
    for xi, wi in zip(chain, omega):
        if any(not (lo <= a <= lo + b) for a, lo in zip(xi, wi)):
            return False
    if d.flavor.kind == "GU" and not _gu_duality(chain):
        return False
    return True


def is_permissible_oracle(x: ExtAffineElement, d: PermDatum) -> bool:
    """Permissibility via lattice inclusions ``u^e Λ_i ⊆ x Λ_i ⊆ Λ_i``.

    Checks two full periods of the chain rather than relying on periodicity.
    """
    _check_datum(x, d)
    if sum(x.lam) != d.target:
        return False
    m = x.rank
    for i in range(-m, 2 * m):
        base = standard_lattice(m, i)
        image = lattice_image(x, base)
        if not (base.contains(image) and image.contains(base.scaled(d.bound))):
            return False
    return True


# ---------------------------------------------------------------- enumeration

def candidate_vectors(
    flavor: GroupFlavor, lo: int, hi: int, total: int | None = None
) -> Iterator[Vector]:
    """Vectors in X_flavor with entries in [lo, hi] (and given sum), lexicographically."""
    m = flavor.rank
    if flavor.kind == "GL":
        for lam in itertools.product(range(lo, hi + 1), repeat=m):
            if total is None or sum(lam) == total:
                yield lam
        return
    half, odd = m // 2, m % 2
    out = []
    for c in range(2 * lo, 2 * hi + 1):
        if (odd or flavor.kind == "GU") and c % 2:
            continue
        for first in itertools.product(range(lo, hi + 1), repeat=half):
            second = tuple(c - a for a in reversed(first))
            if any(not lo <= a <= hi for a in second):
                continue
            lam = first + ((c // 2,) if odd else ()) + second
            if total is None or sum(lam) == total:
                out.append(lam)
    yield from sorted(out)


def enumerate_perm(d: PermDatum, limits: Limits | None = None) -> list[ExtAffineElement]:
    """All permissible elements, sorted by (w, lam)."""
    check_rank(d.flavor.rank, limits)
    vectors = list(candidate_vectors(d.flavor, 0, d.bound, d.target))
    found = []
    for w in finite_weyl_group(d.flavor):
        for lam in vectors:
            x = ExtAffineElement(w, lam)
            if is_permissible(x, d):
                found.append(x)
    return sorted(found)


def verschiebung_to_frobenius(x: ExtAffineElement, e: int) -> ExtAffineElement:
    """x -> u^(e,...,e) x^-1; switches between the two normalizations of the index set."""
    return multiply(central(x.rank, e), inverse(x))


def translation_elements(d: PermDatum) -> list[ExtAffineElement]:
    """The W-conjugates u^(w . mu) of the datum's coweight."""
    from krstrata.weyl import act

    seen = {act(w, d.mu) for w in finite_weyl_group(d.flavor)}
    return sorted(ExtAffineElement.translation(v) for v in seen)
