"""Galois (Z/2)^n covers of the line and their quotient combinatorics.

A cover is described by its branch data: n and a list of nonzero vectors
e_1, ..., e_m in F_2^n (one per branch point) that sum to zero and span
the whole group.  Stabilizers over the i-th branch point are the order-2
subgroups <e_i>, so Riemann-Hurwitz takes the simple shape

    2g - 2 = 2^n (-2 + m/2).

Quotients by a subgroup H replace each e_i by its image in G/H; branch
points whose image dies stop contributing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .integer_algebra import FinAbGroup, IntMatrix, cokernel, rank_mod2


class NonIntegralGenus(Exception):
    """The branch data does not produce an integer genus >= 0."""


class IdentityElement(Exception):
    """A branch image or query element was zero where nonzero is required."""


Vec = tuple[int, ...]


def _check_vec(v: Vec, n: int) -> Vec:
    if len(v) != n:
        raise ValueError(f"vector {v} does not have length {n}")
    return tuple(x & 1 for x in v)


@dataclass(frozen=True)
class BranchedCoverData:
    """Branch data of a maximal (Z/2)^n cover of the projective line."""

    n: int
    branch_images: tuple[Vec, ...]

    def __post_init__(self) -> None:
        imgs = tuple(_check_vec(v, self.n) for v in self.branch_images)
        object.__setattr__(self, "branch_images", imgs)
        for v in imgs:
            if not any(v):
                raise IdentityElement(f"zero branch image in {imgs}")
        total = [0] * self.n
        for v in imgs:
            total = [a ^ b for a, b in zip(total, v)]
        if any(total):
            raise ValueError("branch images must sum to zero")
        if rank_mod2(IntMatrix.from_rows([list(v) for v in imgs])) != self.n:
            raise ValueError("branch images must generate the full group")

    @property
    def m(self) -> int:
        return len(self.branch_images)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of F_2^n given by a generating set (possibly redundant)."""

    n: int
    gens: tuple[Vec, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "gens", tuple(_check_vec(v, self.n) for v in self.gens)
        )

    def elements(self) -> set[Vec]:
        span = {(0,) * self.n}
        for g in self.gens:
            span |= {tuple(a ^ b for a, b in zip(g, v)) for v in span}
        return span

    def order(self) -> int:
        return len(self.elements())

    def contains(self, v: Vec) -> bool:
        return tuple(x & 1 for x in v) in self.elements()


def standard_cover_data(n: int = 4) -> BranchedCoverData:
    """n + 1 branch points: the standard basis plus its sum."""
    basis = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    s = [0] * n
    for v in basis:
        s = [a ^ b for a, b in zip(s, v)]
    return BranchedCoverData(n, tuple(basis) + (tuple(s),))


def _genus_from_double(doubled: int, context: str) -> int:
    if doubled % 2 != 0:
        raise NonIntegralGenus(f"{context}: 2g - 2 = {doubled} is odd")
    g = (doubled + 2) // 2
    if g < 0:
        raise NonIntegralGenus(f"{context}: genus {g} is negative")
    return g


def cover_genus(cover: BranchedCoverData) -> int:
    """Genus of the total space, 2g - 2 = 2^n (-2 + m/2)."""
    deg = 1 << cover.n
    doubled = deg * (-4 + cover.m) // 2
    if (deg * (-4 + cover.m)) % 2 != 0:
        raise NonIntegralGenus("odd ramification total")
    return _genus_from_double(doubled, "cover")


def quotient_genus(cover: BranchedCoverData, sub: Subgroup) -> int:
    """Genus of (total space) / H via Riemann-Hurwitz on the quotient map
    down to the line: branch points surviving in G/H contribute 1/2 each."""
    if sub.n != cover.n:
        raise ValueError("subgroup dimension mismatch")
    elems = sub.elements()
    quotient_order = (1 << cover.n) // len(elems)
    surviving = sum(1 for v in cover.branch_images if v not in elems)
    doubled_times2 = quotient_order * (-4 + surviving)
    if doubled_times2 % 2 != 0:
        raise NonIntegralGenus("quotient ramification is odd")
    return _genus_from_double(doubled_times2 // 2, "quotient")


def fixed_point_count(cover: BranchedCoverData, g: Vec) -> int:
    """Number of fixed points of a nonzero group element on the cover.

    Only the branch stabilizers <e_i> fix anything; each branch point with
    e_i = g contributes a fiber of its index, |G| / 2 points.
    """
    v = _check_vec(g, cover.n)
    if not any(v):
        raise IdentityElement("fixed points of the identity are the whole curve")
    per_point = (1 << cover.n) // 2
    return per_point * sum(1 for e in cover.branch_images if e == v)


def classify_corank1_subgroups(
    cover: BranchedCoverData,
) -> dict[tuple[int, int], int]:
    """Histogram of index-2 subgroups keyed by (branch images inside, genus
    of the quotient curve)."""
    histogram: dict[tuple[int, int], int] = {}
    n = cover.n
    for functional in product((0, 1), repeat=n):
        if not any(functional):
            continue
        kernel_gens = _kernel_basis(functional, n)
        sub = Subgroup(n, kernel_gens)
        inside = sum(1 for v in cover.branch_images if sub.contains(v))
        genus = quotient_genus(cover, sub)
        key = (inside, genus)
        histogram[key] = histogram.get(key, 0) + 1
    return histogram


def _kernel_basis(functional: Vec, n: int) -> tuple[Vec, ...]:
    pivot = next(i for i, x in enumerate(functional) if x)
    basis: list[Vec] = []
    for j in range(n):
        if j == pivot:
            continue
        v = [0] * n
        v[j] = 1
        if functional[j]:
            v[pivot] = 1
        basis.append(tuple(v))
    return tuple(basis)


def orbifold_abelianization(m: int) -> FinAbGroup:
    """Abelianized orbifold group of the line with m order-2 cone points.

    Presentation: x_1, ..., x_m with x_i^2 = 1 and x_1 ... x_m = 1.
    """
    if m < 1:
        raise ValueError("need at least one cone point")
    rows = [[1] * m]
    for i in range(m):
        row = [0] * m
        row[i] = 2
        rows.append(row)
    return cokernel(IntMatrix.from_rows(rows))


def homology_bound(data=None) -> tuple[int, int]:
    """(bound, actual): orbifold cap on the homology order versus the
    computed abelianization order.

    The surface group maps onto the five-point orbifold group extended by
    one extra central involution, and its abelianization adds at most one
    more factor of 2, capping the order at
    2 * |orbifold_abelianization(5) x Z/2| = 2 * (16 * 2) = 64.
    """
    from .affine_groups import abelianize_extension, standard_generators

    if data is None:
        data = standard_generators()
    orb = orbifold_abelianization(5)
    bound = 2 * ((orb.order() or 0) * 2)
    actual = abelianize_extension(data).order() or 0
    return bound, actual


def homology_bound_check(data=None) -> bool:
    """True when the computed homology order attains the orbifold bound."""
    bound, actual = homology_bound(data)
    return bound == actual
