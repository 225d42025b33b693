"""
Length, Bruhat order and admissible sets for the GL and GSp flavors.

The base alcove is the one spanned by the standard chain; scaled by m its
barycenter is ``B(j) = -(m - j)``, and it is cut out by
``v_1 < v_2 < ... < v_m < v_1 + 1``.  The simple affine reflections are the
reflections in its walls:

* GL_m:   s_i = (i, i+1) for 1 <= i < m, s_0 = (1, m) u^(1, 0, ..., 0, -1)
* GSp_2n: s_i = (i, i+1)(2n-i, 2n+1-i) for 1 <= i < n, s_n = (n, n+1),
          s_0 = (1, 2n) u^(1, 0, ..., 0, -1)

The length-zero generator tau maps the base alcove to itself; it moves the
standard chain down by one step (GL) or by n steps (GSp).

`length_im` evaluates the closed Iwahori-Matsumoto formula; `length_word`
walks down to a length-zero element one wall crossing at a time.  They share
no code beyond group multiplication and are compared in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Union

from krstrata.config import FlavorError, InvariantError, WindowError
from krstrata.weyl import (
    ExtAffineElement,
    FrobeniusTuple,
    GroupFlavor,
    Vector,
    act,
    finite_weyl_group,
    from_cycles,
    identity_perm,
    in_flavor,
    multiply,
    perm_inverse,
    power,
    to_left_form,
    vector_in_flavor,
)

Indexed = Union[ExtAffineElement, FrobeniusTuple]


@dataclass(frozen=True)
class Wall:
    """The affine hyperplane ``v_a - v_b = level``."""

    a: int
    b: int
    level: int


@dataclass(frozen=True)
class SimpleReflectionSet:
    flavor: GroupFlavor
    generators: tuple[ExtAffineElement, ...]  # s_0, s_1, ..., s_k
    walls: tuple[Wall, ...]
    omega_generator: ExtAffineElement


def _require_coxeter_flavor(flavor: GroupFlavor) -> None:
    if flavor.kind not in ("GL", "GSp"):
        raise FlavorError(f"length and Bruhat order are implemented for GL and GSp only, not {flavor}")


@lru_cache(maxsize=None)
def simple_reflections(flavor: GroupFlavor) -> SimpleReflectionSet:
    _require_coxeter_flavor(flavor)
    m = flavor.rank
    gens: list[ExtAffineElement] = []
    walls: list[Wall] = []
    if m >= 2:
        w0 = from_cycles(m, [(1, m)])
        gens.append(ExtAffineElement(w0, (1,) + (0,) * (m - 2) + (-1,)))
        walls.append(Wall(1, m, -1))
    if flavor.kind == "GL":
        for i in range(1, m):
            gens.append(ExtAffineElement.permutation(from_cycles(m, [(i, i + 1)])))
            walls.append(Wall(i, i + 1, 0))
        tau = ExtAffineElement((m,) + tuple(range(1, m)), (1,) + (0,) * (m - 1))
    else:
        n = flavor.n
        for i in range(1, n):
            w = from_cycles(m, [(i, i + 1), (m - i, m + 1 - i)])
            gens.append(ExtAffineElement.permutation(w))
            walls.append(Wall(i, i + 1, 0))
        gens.append(ExtAffineElement.permutation(from_cycles(m, [(n, n + 1)])))
        walls.append(Wall(n, n + 1, 0))
        tau = ExtAffineElement(
            tuple(j + n for j in range(1, n + 1)) + tuple(range(1, n + 1)),
            (1,) * n + (0,) * n,
        )
    return SimpleReflectionSet(flavor, tuple(gens), tuple(walls), tau)


@lru_cache(maxsize=None)
def positive_roots(flavor: GroupFlavor) -> tuple[tuple[int, int], ...]:
    """Positive roots as pairs (a, b) for the functional v_a - v_b, a < b."""
    _require_coxeter_flavor(flavor)
    m = flavor.rank
    if flavor.kind == "GL":
        return tuple((i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1))
    n = flavor.n
    short = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    mixed = [(i, m + 1 - j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    long = [(i, m + 1 - i) for i in range(1, n + 1)]
    return tuple(short + mixed + long)


def _check(x: ExtAffineElement, flavor: GroupFlavor) -> None:
    _require_coxeter_flavor(flavor)
    if not in_flavor(x, flavor):
        raise FlavorError(f"{x} is not in the extended affine Weyl group of {flavor}")


@lru_cache(maxsize=None)
def length_im(x: ExtAffineElement, flavor: GroupFlavor) -> int:
    """Iwahori-Matsumoto length of x = u^mu w.

    sum over beta > 0 of |<beta, mu>| if w^-1 beta > 0, else |<beta, mu> + 1|.
    """
    _check(x, flavor)
    mu, w = to_left_form(x)
    winv = perm_inverse(w)
    total = 0
    for a, b in positive_roots(flavor):
        pairing = mu[a - 1] - mu[b - 1]
        if winv[a - 1] < winv[b - 1]:
            total += abs(pairing)
        else:
            total += abs(pairing + 1)
    return total


def total_length(t: Indexed, flavor: GroupFlavor) -> int:
    if isinstance(t, FrobeniusTuple):
        return sum(length_im(x, flavor) for x in t)
    return length_im(t, flavor)


# ------------------------------------------------------------- wall crossing

def _base_point(m: int) -> Vector:
    return tuple(-(m - j) for j in range(1, m + 1))


def _image_point(x: ExtAffineElement) -> Vector:
    # x . v = w . (v + m lam), everything scaled by m
    m = x.rank
    return act(x.w, tuple(b + m * a for b, a in zip(_base_point(m), x.lam)))


def _side(point: Vector, wall: Wall, m: int) -> int:
    value = point[wall.a - 1] - point[wall.b - 1] - m * wall.level
    if value == 0:
        raise InvariantError("alcove barycenter lies on a wall")
    return 1 if value > 0 else -1


def is_left_descent(k: int, x: ExtAffineElement, flavor: GroupFlavor) -> bool:
    """True iff the wall of s_k separates the base alcove from x(base alcove)."""
    refl = simple_reflections(flavor)
    wall = refl.walls[k]
    m = x.rank
    return _side(_base_point(m), wall, m) != _side(_image_point(x), wall, m)


def _first_descent(x: ExtAffineElement, flavor: GroupFlavor) -> int | None:
    for k in range(len(simple_reflections(flavor).generators)):
        if is_left_descent(k, x, flavor):
            return k
    return None


@lru_cache(maxsize=None)
def reduced_word(x: ExtAffineElement, flavor: GroupFlavor) -> tuple[tuple[int, ...], ExtAffineElement]:
    """Return ``(word, omega)`` with x = s_word[0] s_word[1] ... omega and ℓ(omega) = 0."""
    _check(x, flavor)
    gens = simple_reflections(flavor).generators
    guard = length_im(x, flavor) + 1
    word: list[int] = []
    cur = x
    while (k := _first_descent(cur, flavor)) is not None:
        word.append(k)
        cur = multiply(gens[k], cur)
        if len(word) > guard:
            raise InvariantError(f"descent walk from {x} did not terminate; inconsistent generators")
    return tuple(word), cur


def length_word(x: ExtAffineElement, flavor: GroupFlavor) -> int:
    return len(reduced_word(x, flavor)[0])


def omega_exponent(omega: ExtAffineElement, flavor: GroupFlavor) -> int | None:
    """k with omega = tau^k, or None if omega is not a power of tau."""
    tau = simple_reflections(flavor).omega_generator
    if flavor.kind == "GL":
        k = sum(omega.lam)
    else:
        k = omega.lam[0] + omega.lam[-1]
    return k if power(tau, k) == omega else None


def word_label(x: ExtAffineElement, flavor: GroupFlavor) -> str:
    """Human-readable reduced expression such as 's1 tau' or 's0 s1 tau^2'."""
    word, omega = reduced_word(x, flavor)
    parts = [f"s{k}" for k in word]
    k = omega_exponent(omega, flavor)
    if k is None:
        parts.append(f"[{omega}]")
    elif k == 1:
        parts.append("tau")
    elif k != 0:
        parts.append(f"tau^{k}")
    return " ".join(parts) or "1"


# -------------------------------------------------------------- Bruhat order

@lru_cache(maxsize=None)
def bruhat_leq(x: ExtAffineElement, y: ExtAffineElement, flavor: GroupFlavor) -> bool:
    _check(x, flavor)
    _check(y, flavor)
    lx, ly = length_im(x, flavor), length_im(y, flavor)
    if lx > ly:
        return False
    if lx == ly:
        return x == y
    k = _first_descent(y, flavor)
    s = simple_reflections(flavor).generators[k]
    sy = multiply(s, y)
    if is_left_descent(k, x, flavor):
        return bruhat_leq(multiply(s, x), sy, flavor)
    return bruhat_leq(x, sy, flavor)


def leq(a: Indexed, b: Indexed, flavor: GroupFlavor) -> bool:
    """Bruhat order on elements, componentwise on Frobenius tuples."""
    if isinstance(a, FrobeniusTuple):
        if not isinstance(b, FrobeniusTuple) or a.f != b.f:
            raise ValueError("cannot compare tuples of different shapes")
        return all(bruhat_leq(p, q, flavor) for p, q in zip(a, b))
    return bruhat_leq(a, b, flavor)


@lru_cache(maxsize=None)
def lower_interval(y: ExtAffineElement, flavor: GroupFlavor) -> frozenset[ExtAffineElement]:
    """{x : x <= y}, via {x <= s y'} = {z, s z : z <= y'} for a descent s."""
    _check(y, flavor)
    k = _first_descent(y, flavor)
    if k is None:
        return frozenset([y])
    s = simple_reflections(flavor).generators[k]
    below = lower_interval(multiply(s, y), flavor)
    return below | frozenset(multiply(s, z) for z in below)


def admissible_set(mu: Sequence[int], flavor: GroupFlavor, max_size: int = 100_000) -> list[ExtAffineElement]:
    mu = tuple(mu)
    _require_coxeter_flavor(flavor)
    if len(mu) != flavor.rank or not vector_in_flavor(mu, flavor):
        raise FlavorError(f"{mu} is not a coweight for {flavor}")
    result: set[ExtAffineElement] = set()
    for v in {act(w, mu) for w in finite_weyl_group(flavor)}:
        result |= lower_interval(ExtAffineElement.translation(v), flavor)
        if len(result) > max_size:
            raise WindowError(f"admissible set exceeds {max_size} elements")
    return sorted(result)


def closure(x: Indexed, index_set: Iterable[Indexed], flavor: GroupFlavor) -> list[Indexed]:
    index_set = list(index_set)
    if x not in index_set:
        raise ValueError(f"{x} is not in the index set")
    return sorted(y for y in index_set if leq(y, x, flavor))


def maximal_elements(index_set: Iterable[Indexed], flavor: GroupFlavor) -> list[Indexed]:
    items = list(index_set)
    return sorted(
        y for y in items if not any(z != y and leq(y, z, flavor) for z in items)
    )


def covering_relations(index_set: Iterable[Indexed], flavor: GroupFlavor) -> list[tuple[Indexed, Indexed]]:
    """Pairs (x, y) with x < y and nothing of the index set strictly between."""
    items = sorted(index_set)
    below = {y: [x for x in items if x != y and leq(x, y, flavor)] for y in items}
    edges = []
    for y in items:
        strict = set(below[y])
        for x in below[y]:
            if not any(x in below[z] for z in strict if z != x):
                edges.append((x, y))
    return edges


def identity(flavor: GroupFlavor) -> ExtAffineElement:
    return ExtAffineElement(identity_perm(flavor.rank), (0,) * flavor.rank)
