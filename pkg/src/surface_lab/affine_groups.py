"""Affine lattice extensions generated by sign flips and half translations.

Model: transformations of C^n of the form z |-> eps * z + t, where eps is a
diagonal sign vector and t lies in (1/2) Lambda for the rank-2n lattice
Lambda = Z e_1 + ... + Z e_n + Z tau_1 e_1 + ... + Z tau_n e_n.

Coordinate conventions used throughout this module:

* full-lattice coordinates: length-2n integer vectors over the ordered
  basis (e_1, ..., e_n, tau_1 e_1, ..., tau_n e_n);
* half-lattice coordinates: the same vectors doubled, so the translation
  (1/2)(e_1 + tau_2 e_2) of an AffineElement with n = 2 is stored as
  (1, 0, 0, 1).

A sign eps_i acts simultaneously on the e_i and tau_i e_i coordinates
because both span the i-th complex line.  Under composition
(eps, t) (eps', t') = (eps eps', eps t' + t), the commutator of two
elements is the pure translation (eps - 1) t' - (eps' - 1) t and the
square of (eps, t) is the translation (eps + 1) t; both are computed here
in half-lattice coordinates and returned in full-lattice coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .integer_algebra import FinAbGroup, IntMatrix, cokernel, rank_mod2


class NotInLattice(Exception):
    """A derived translation fell outside the full lattice."""


@dataclass(frozen=True)
class LatticeVector:
    """A lattice vector in full-lattice coordinates (length 2n)."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) % 2 != 0:
            raise ValueError("coordinate length must be even (e-part and tau-part)")

    @property
    def n(self) -> int:
        return len(self.coords) // 2

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.coords)

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        if len(self.coords) != len(other.coords):
            raise ValueError("dimension mismatch")
        return LatticeVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(tuple(-a for a in self.coords))


@dataclass(frozen=True)
class AffineElement:
    """z |-> signs * z + trans/2 with trans in half-lattice coordinates."""

    signs: tuple[int, ...]
    trans: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(s not in (-1, 1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")
        if len(self.trans) != 2 * len(self.signs):
            raise ValueError("trans must have length 2n in half-lattice coordinates")

    @property
    def n(self) -> int:
        return len(self.signs)

    def sign_at(self, coord: int) -> int:
        """Sign acting on full-lattice coordinate 0 <= coord < 2n."""
        return self.signs[coord % self.n]

    def compose(self, other: "AffineElement") -> "AffineElement":
        """self after other: (eps, t)(eps', t') = (eps eps', eps t' + t)."""
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        signs = tuple(a * b for a, b in zip(self.signs, other.signs))
        trans = tuple(
            self.sign_at(k) * other.trans[k] + self.trans[k]
            for k in range(2 * self.n)
        )
        return AffineElement(signs, trans)

    def translate(self, v: LatticeVector) -> "AffineElement":
        """Right multiplication by the lattice translation v (a lift change)."""
        if v.n != self.n:
            raise ValueError("dimension mismatch")
        trans = tuple(
            self.trans[k] + 2 * self.sign_at(k) * v.coords[k]
            for k in range(2 * self.n)
        )
        return AffineElement(self.signs, trans)


@dataclass(frozen=True)
class ExtensionData:
    """Generators of a group extension 1 -> Lambda -> Gamma -> (Z/2)^m -> 1."""

    n: int
    generators: tuple[AffineElement, ...]

    def __post_init__(self) -> None:
        for g in self.generators:
            if g.n != self.n:
                raise ValueError("generator dimension mismatch")


def _halves_to_lattice(halves: tuple[int, ...]) -> LatticeVector:
    if any(h % 2 for h in halves):
        raise NotInLattice(f"odd half-coordinates in {halves}")
    return LatticeVector(tuple(h // 2 for h in halves))


def commutator(g: AffineElement, h: AffineElement) -> LatticeVector:
    """[g, h] = g h g^-1 h^-1 as a full-lattice translation.

    Evaluates (eps - 1) t' - (eps' - 1) t in half-lattice coordinates and
    divides out; raises NotInLattice if any coordinate stays odd.
    """
    if g.n != h.n:
        raise ValueError("dimension mismatch")
    halves = tuple(
        (g.sign_at(k) - 1) * h.trans[k] - (h.sign_at(k) - 1) * g.trans[k]
        for k in range(2 * g.n)
    )
    return _halves_to_lattice(halves)


def square_translation(g: AffineElement) -> LatticeVector:
    """g^2 = (eps + 1) t as a full-lattice translation."""
    halves = tuple((g.sign_at(k) + 1) * g.trans[k] for k in range(2 * g.n))
    return _halves_to_lattice(halves)


def standard_generators() -> ExtensionData:
    """The five standard generators acting on C^4.

    g1 = ((-1, 1, 1, 1), (1/2)(e1 + e2))
    g2 = ((1, -1, 1, -1), (1/2)(e2 + e3 + e4))
    g3 = ((1, 1, -1, -1), (1/2)(e1 + e3 + e4))
    g4 = ((1, 1, -1, -1), 0)
    g5 = ((1, 1, 1, 1), (1/2)(tau1 e1 + tau2 e2 + tau3 e3 + tau4 e4))
    """
    g1 = AffineElement((-1, 1, 1, 1), (1, 1, 0, 0, 0, 0, 0, 0))
    g2 = AffineElement((1, -1, 1, -1), (0, 1, 1, 1, 0, 0, 0, 0))
    g3 = AffineElement((1, 1, -1, -1), (1, 0, 1, 1, 0, 0, 0, 0))
    g4 = AffineElement((1, 1, -1, -1), (0, 0, 0, 0, 0, 0, 0, 0))
    g5 = AffineElement((1, 1, 1, 1), (0, 0, 0, 0, 1, 1, 1, 1))
    return ExtensionData(4, (g1, g2, g3, g4, g5))


def check_sign_condition(data: ExtensionData) -> bool:
    """Every lattice coordinate is negated by some word in the generators.

    Sufficient and checked here: for each complex coordinate i some
    product of generators has sign -1 at i.  Since products realize every
    vector in the span of the sign patterns over F_2, it is enough that
    the i-th coordinate of some span element is 1.
    """
    span: set[tuple[int, ...]] = {(0,) * data.n}
    for g in data.generators:
        pattern = tuple(1 if s == -1 else 0 for s in g.signs)
        span |= {tuple(a ^ b for a, b in zip(pattern, v)) for v in span}
    covered = [False] * data.n
    for v in span:
        for i, bit in enumerate(v):
            if bit:
                covered[i] = True
    return all(covered)


def sign_condition_witnesses(data: ExtensionData) -> list[tuple[int, ...]] | None:
    """For each coordinate, a generator word (as index tuple) negating it.

    Returns None if some coordinate is never negated.  Words are found by
    breadth-first search over products, so they are shortest.
    """
    from collections import deque

    start = (0,) * data.n
    seen: dict[tuple[int, ...], tuple[int, ...]] = {start: ()}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for idx, g in enumerate(data.generators):
            pattern = tuple(1 if s == -1 else 0 for s in g.signs)
            w = tuple(a ^ b for a, b in zip(pattern, v))
            if w not in seen:
                seen[w] = seen[v] + (idx,)
                queue.append(w)
    witnesses: list[tuple[int, ...]] = []
    for i in range(data.n):
        best = None
        for v, word in seen.items():
            if v[i] and (best is None or len(word) < len(best)):
                best = word
        if best is None:
            return None
        witnesses.append(best)
    return witnesses


def abelianization_relations(data: ExtensionData) -> IntMatrix:
    """Relation matrix for the abelianized extension.

    Generators (columns): the m group generators followed by the 2n
    lattice generators.  Rows:

    * one row per generator pair (i < j): the commutator [g_i, g_j]
      written in the lattice block (it dies in the abelianization);
    * one row per generator: 2 g_i - (square translation of g_i);
    * one row per generator and lattice coordinate: (eps_i - 1) lambda_k.
    """
    m = len(data.generators)
    width = m + 2 * data.n
    rows: list[list[int]] = []
    for i in range(m):
        for j in range(i + 1, m):
            c = commutator(data.generators[i], data.generators[j])
            rows.append([0] * m + list(c.coords))
    for i, g in enumerate(data.generators):
        s = square_translation(g)
        row = [0] * width
        row[i] = 2
        for k, v in enumerate(s.coords):
            row[m + k] = -v
        rows.append(row)
    for g in data.generators:
        for k in range(2 * data.n):
            factor = g.sign_at(k) - 1
            if factor:
                row = [0] * width
                row[m + k] = factor
                rows.append(row)
    return IntMatrix.from_rows(rows)


def abelianize_extension(data: ExtensionData) -> FinAbGroup:
    """Abelianization of the extension presented by data."""
    return cokernel(abelianization_relations(data))


def commutator_subspan_rank(
    data: ExtensionData, pivot: int, coords: tuple[int, ...] | None = None
) -> int:
    """F_2-rank of {[g_pivot, g_j] : j != pivot} restricted to coords.

    coords selects full-lattice coordinates; None means all 2n of them.
    The commutators are reduced against the doubled lattice, so this is
    the rank of their spans inside Lambda / 2 Lambda.
    """
    if coords is None:
        coords = tuple(range(2 * data.n))
    rows = []
    g = data.generators[pivot]
    for j, h in enumerate(data.generators):
        if j == pivot:
            continue
        c = commutator(g, h)
        rows.append([c.coords[k] for k in coords])
    return rank_mod2(IntMatrix.from_rows(rows))
