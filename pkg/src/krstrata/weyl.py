"""
Extended affine Weyl groups S_m ⋉ Z^m realized as monomial matrices.

An element ``(w, lam)`` stands for the matrix ``A_w u^lam``, where ``A_w`` has
its 1 in position ``(w(j), j)`` and ``u^lam = diag(u^lam(1), ..., u^lam(m))``.
Applied to basis vectors this reads ``x(u^k e_j) = u^(lam(j)+k) e_w(j)``.

Permutations are tuples in one-line notation with 1-based values:
``w[i-1] == w(i)``.  The symmetric group acts on vectors by
``(w . v)(w(j)) = v(j)``.

Two ways of splitting an element occur in the literature this package
follows: ``w u^lam`` (translation first) and ``u^mu w`` (translation last).
They are related by ``w u^lam = u^(w . lam) w``; `to_left_form` and
`from_left_form` convert.  The p-rank formulas and the Newton computation
consume the stored ``(w, lam)`` directly; the Iwahori-Matsumoto length
consumes ``(mu, w)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from krstrata.config import FlavorError, RankMismatchError

Perm = tuple[int, ...]
Vector = tuple[int, ...]


# ---------------------------------------------------------------- permutations

def identity_perm(m: int) -> Perm:
    return tuple(range(1, m + 1))


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def compose(a: Perm, b: Perm) -> Perm:
    """(a ∘ b)(i) = a(b(i))."""
    return tuple(a[b[i] - 1] for i in range(len(b)))


def perm_inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        inv[wi - 1] = i
    return tuple(inv)


def act(w: Perm, v: Sequence[int]) -> Vector:
    """The permuted vector ``w . v`` with ``(w . v)(w(j)) = v(j)``."""
    out = [0] * len(v)
    for j, wj in enumerate(w):
        out[wj - 1] = v[j]
    return tuple(out)


def reversal(m: int) -> Perm:
    """The permutation i -> m+1-i underlying the anti-diagonal matrix."""
    return tuple(range(m, 0, -1))


def fixed_points(w: Perm) -> list[int]:
    return [i for i, wi in enumerate(w, start=1) if wi == i]


def perm_order(w: Perm) -> int:
    """Order of w as a group element (lcm of its cycle lengths)."""
    from math import lcm

    seen = [False] * len(w)
    order = 1
    for start in range(len(w)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = w[j] - 1
            length += 1
        order = lcm(order, length)
    return order


def from_cycles(m: int, cycles: Sequence[Sequence[int]]) -> Perm:
    """Build a permutation of {1..m} from disjoint cycles, e.g. [(1, 2), (3, 4)]."""
    img = list(range(1, m + 1))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            img[a - 1] = b
    if not is_permutation(img):
        raise ValueError(f"cycles {cycles!r} are not disjoint in S_{m}")
    return tuple(img)


# ------------------------------------------------------------------- elements

@dataclass(frozen=True, order=True)
class ExtAffineElement:
    """The monomial matrix ``A_w u^lam``; ordering is lexicographic on (w, lam)."""

    w: Perm
    lam: Vector

    def __post_init__(self):
        object.__setattr__(self, "w", tuple(int(a) for a in self.w))
        object.__setattr__(self, "lam", tuple(int(a) for a in self.lam))
        if len(self.w) != len(self.lam):
            raise RankMismatchError(
                f"permutation of rank {len(self.w)} with vector of rank {len(self.lam)}"
            )
        if not is_permutation(self.w):
            raise ValueError(f"{self.w!r} is not a permutation in one-line notation")

    @property
    def rank(self) -> int:
        return len(self.w)

    @classmethod
    def identity(cls, m: int) -> "ExtAffineElement":
        return cls(identity_perm(m), (0,) * m)

    @classmethod
    def translation(cls, lam: Sequence[int]) -> "ExtAffineElement":
        return cls(identity_perm(len(lam)), tuple(lam))

    @classmethod
    def permutation(cls, w: Sequence[int]) -> "ExtAffineElement":
        return cls(tuple(w), (0,) * len(w))

    def is_translation(self) -> bool:
        return self.w == identity_perm(self.rank)

    def __mul__(self, other: "ExtAffineElement") -> "ExtAffineElement":
        return multiply(self, other)

    def __str__(self) -> str:
        return f"w={list(self.w)};l={list(self.lam)}".replace(" ", "")


def _same_rank(x: ExtAffineElement, y: ExtAffineElement) -> None:
    if x.rank != y.rank:
        raise RankMismatchError(f"ranks {x.rank} and {y.rank} differ")


def multiply(x: ExtAffineElement, y: ExtAffineElement) -> ExtAffineElement:
    # A_w u^a A_v u^b = A_wv u^(v^-1 . a + b)
    _same_rank(x, y)
    moved = act(perm_inverse(y.w), x.lam)
    return ExtAffineElement(compose(x.w, y.w), tuple(a + b for a, b in zip(moved, y.lam)))


def inverse(x: ExtAffineElement) -> ExtAffineElement:
    # (A_w u^a)^-1 = A_(w^-1) u^(-(w . a))
    return ExtAffineElement(perm_inverse(x.w), tuple(-a for a in act(x.w, x.lam)))


def power(x: ExtAffineElement, k: int) -> ExtAffineElement:
    result = ExtAffineElement.identity(x.rank)
    base = x if k >= 0 else inverse(x)
    for _ in range(abs(k)):
        result = multiply(result, base)
    return result


def central(m: int, e: int) -> ExtAffineElement:
    """The central translation u^(e,...,e)."""
    return ExtAffineElement.translation((e,) * m)


def to_left_form(x: ExtAffineElement) -> tuple[Vector, Perm]:
    """Return ``(mu, w)`` with ``x = u^mu w``."""
    return act(x.w, x.lam), x.w


def from_left_form(mu: Sequence[int], w: Sequence[int]) -> ExtAffineElement:
    """The element ``u^mu w``."""
    w = tuple(w)
    return ExtAffineElement(w, act(perm_inverse(w), tuple(mu)))


def adjoint_tau(x: ExtAffineElement) -> ExtAffineElement:
    """Adjoint for the anti-diagonal form: ``J x^t J`` with J = anti-diag(1,...,1)."""
    c = reversal(x.rank)
    # (A_w u^a)^t = u^a A_(w^-1) = A_(w^-1) u^(w . a); conjugating by A_c gives the rest
    return ExtAffineElement(compose(c, compose(perm_inverse(x.w), c)), act(c, act(x.w, x.lam)))


# -------------------------------------------------------------------- flavors

@dataclass(frozen=True)
class GroupFlavor:
    """One of GL_n, GSp_2n or the ramified unitary similitude group GU_n."""

    kind: str  # "GL" | "GSp" | "GU"
    n: int

    def __post_init__(self):
        if self.kind not in ("GL", "GSp", "GU"):
            raise FlavorError(f"unknown flavor {self.kind!r}")
        if self.n < 1:
            raise FlavorError("n must be at least 1")

    @property
    def rank(self) -> int:
        return 2 * self.n if self.kind == "GSp" else self.n

    def __str__(self) -> str:
        return f"{self.kind}({self.n})"


def GL(n: int) -> GroupFlavor:
    return GroupFlavor("GL", n)


def GSp(n: int) -> GroupFlavor:
    return GroupFlavor("GSp", n)


def GU(n: int) -> GroupFlavor:
    return GroupFlavor("GU", n)


def _check_flavor_rank(x: ExtAffineElement, flavor: GroupFlavor) -> None:
    if x.rank != flavor.rank:
        raise RankMismatchError(f"element of rank {x.rank} for flavor {flavor} of rank {flavor.rank}")


def perm_in_flavor(w: Perm, flavor: GroupFlavor) -> bool:
    if flavor.kind == "GL":
        return True
    m = len(w)
    return all(w[i - 1] + w[m - i] == m + 1 for i in range(1, m + 1))


def vector_in_flavor(lam: Vector, flavor: GroupFlavor) -> bool:
    m = len(lam)
    if flavor.kind == "GL":
        return True
    sums = {lam[i] + lam[m - 1 - i] for i in range(m)}
    if len(sums) != 1:
        return False
    if flavor.kind == "GU":
        return next(iter(sums)) % 2 == 0
    return True


def in_flavor(x: ExtAffineElement, flavor: GroupFlavor) -> bool:
    _check_flavor_rank(x, flavor)
    return perm_in_flavor(x.w, flavor) and vector_in_flavor(x.lam, flavor)


def finite_weyl_group(flavor: GroupFlavor) -> Iterator[Perm]:
    """W for the flavor, in lexicographic order of one-line notation."""
    m = flavor.rank
    if flavor.kind == "GL":
        yield from itertools.permutations(range(1, m + 1))
        return
    # w is determined by its values on the first half; the middle point of an odd rank is fixed
    half = m // 2
    mirror = lambda a: m + 1 - a  # noqa: E731
    out = []
    pairs = list(range(1, half + 1))
    for chosen in itertools.permutations(pairs):
        for signs in itertools.product((False, True), repeat=half):
            img = [0] * m
            for i, (a, flip) in enumerate(zip(chosen, signs), start=1):
                v = mirror(a) if flip else a
                img[i - 1] = v
                img[m - i] = mirror(v)
            if m % 2:
                img[half] = half + 1
            out.append(tuple(img))
    yield from sorted(out)


# ------------------------------------------------------------ Frobenius tuples

@dataclass(frozen=True, order=True)
class FrobeniusTuple:
    """A tuple (x_xi) indexed by the cyclic group Z/f, xi = 0..f-1."""

    elements: tuple[ExtAffineElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if not self.elements:
            raise ValueError("a Frobenius tuple needs at least one component")
        ranks = {x.rank for x in self.elements}
        if len(ranks) != 1:
            raise RankMismatchError(f"components of differing ranks {sorted(ranks)}")

    @property
    def f(self) -> int:
        return len(self.elements)

    @property
    def rank(self) -> int:
        return self.elements[0].rank

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, k):
        return self.elements[k]

    def __str__(self) -> str:
        return ";".join(str(x) for x in self.elements)


def shift(t: FrobeniusTuple) -> FrobeniusTuple:
    """Component xi of the result is component xi-1 of the input."""
    return FrobeniusTuple(t.elements[-1:] + t.elements[:-1])
