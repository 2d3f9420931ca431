"""Exact integer matrix algebra: Smith normal form, cokernels, ranks.

Everything here runs on Python integers, so there is no overflow and no
floating point anywhere.  The Smith reduction uses a smallest-pivot
strategy to keep intermediate entries from exploding on the small dense
matrices this package produces (group presentations, divisor spans).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from itertools import combinations


@dataclass(frozen=True)
class IntMatrix:
    """An immutable integer matrix stored as a tuple of row tuples."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise ValueError("ragged rows")
        for row in self.entries:
            for v in row:
                if not isinstance(v, int):
                    raise TypeError(f"non-integer entry {v!r}")

    @classmethod
    def from_rows(cls, rows: list[list[int]] | list[tuple[int, ...]]) -> "IntMatrix":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(tuple((0,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries))) if self.entries else IntMatrix(())

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = other.transpose().entries
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.entries
            )
        )

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class SmithForm:
    """Result of a Smith reduction U @ M @ V = diag(diagonal).

    diagonal is the tuple of nonzero invariant factors d_1 | d_2 | ... | d_k,
    all positive.  U and V are unimodular when transforms were requested,
    otherwise None.
    """

    diagonal: tuple[int, ...]
    left: IntMatrix | None = None
    right: IntMatrix | None = None

    def __post_init__(self) -> None:
        for a, b in zip(self.diagonal, self.diagonal[1:]):
            if a <= 0 or b % a != 0:
                raise ValueError(f"not a divisibility chain: {self.diagonal}")
        if self.diagonal and self.diagonal[-1] <= 0:
            raise ValueError(f"not a divisibility chain: {self.diagonal}")


@dataclass(frozen=True)
class FinAbGroup:
    """A finitely generated abelian group Z^free_rank x prod Z/d_i.

    torsion holds the invariant factors in divisibility order, each > 1.
    Two values compare equal iff the groups are isomorphic.
    """

    free_rank: int
    torsion: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"torsion not a divisibility chain: {self.torsion}")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"unit or invalid torsion factor {d}")

    def order(self) -> int | None:
        """Group order, or None for infinite groups."""
        if self.free_rank > 0:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def __str__(self) -> str:
        parts: list[str] = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        i = 0
        while i < len(self.torsion):
            j = i
            while j < len(self.torsion) and self.torsion[j] == self.torsion[i]:
                j += 1
            count = j - i
            base = f"Z/{self.torsion[i]}"
            parts.append(base if count == 1 else f"({base})^{count}")
            i = j
        return " x ".join(parts) if parts else "0"


def _swap_rows(m: list[list[int]], i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _swap_cols(m: list[list[int]], i: int, j: int) -> None:
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m: list[list[int]], dst: int, src: int, c: int) -> None:
    m[dst] = [a + c * b for a, b in zip(m[dst], m[src])]


def _add_col(m: list[list[int]], dst: int, src: int, c: int) -> None:
    for row in m:
        row[dst] += c * row[src]


def _scale_row(m: list[list[int]], i: int, c: int) -> None:
    m[i] = [c * v for v in m[i]]


def _scale_col(m: list[list[int]], j: int, c: int) -> None:
    for row in m:
        row[j] *= c


def smith_normal_form(m: IntMatrix, *, transforms: bool = False) -> SmithForm:
    """Smith normal form over Z.

    Returns the nonzero invariant factors as a divisibility chain.  With
    transforms=True also returns unimodular U (rows x rows) and
    V (cols x cols) with U @ m @ V equal to the padded diagonal matrix.

    Pivots are chosen with minimal absolute value over the remaining
    submatrix, which keeps coefficient growth tame.
    """
    r, c = m.nrows, m.ncols
    a = m.to_lists()
    u = IntMatrix.identity(r).to_lists() if transforms else None
    v = IntMatrix.identity(c).to_lists() if transforms else None

    def row_op(dst: int, src: int, k: int) -> None:
        _add_row(a, dst, src, k)
        if u is not None:
            _add_row(u, dst, src, k)

    def col_op(dst: int, src: int, k: int) -> None:
        _add_col(a, dst, src, k)
        if v is not None:
            _add_col(v, dst, src, k)

    def swap_rows(i: int, j: int) -> None:
        _swap_rows(a, i, j)
        if u is not None:
            _swap_rows(u, i, j)

    def swap_cols(i: int, j: int) -> None:
        _swap_cols(a, i, j)
        if v is not None:
            _swap_cols(v, i, j)

    diag: list[int] = []
    t = 0
    while t < min(r, c):
        # locate a nonzero entry of minimal absolute value in a[t:, t:]
        pivot = None
        best = None
        for i in range(t, r):
            for j in range(t, c):
                val = abs(a[i][j])
                if val and (best is None or val < best):
                    best = val
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            swap_rows(t, pivot[0])
        if pivot[1] != t:
            swap_cols(t, pivot[1])

        while True:
            # leave remainders mod the pivot along column t and row t
            for i in range(t + 1, r):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        row_op(i, t, -q)
            for j in range(t + 1, c):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        col_op(j, t, -q)
            # promote the smallest surviving remainder; each promotion
            # strictly shrinks |pivot|, so this loop terminates
            best = None
            promote = None
            for i in range(t + 1, r):
                if a[i][t] and (best is None or abs(a[i][t]) < best):
                    best = abs(a[i][t])
                    promote = ("row", i)
            for j in range(t + 1, c):
                if a[t][j] and (best is None or abs(a[t][j]) < best):
                    best = abs(a[t][j])
                    promote = ("col", j)
            if promote is not None:
                if promote[0] == "row":
                    swap_rows(t, promote[1])
                else:
                    swap_cols(t, promote[1])
                continue
            # pivot must divide every remaining entry; pulling an offending
            # row into the cleared row t forces another strict shrink
            offender = None
            for i in range(t + 1, r):
                for j in range(t + 1, c):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_op(t, offender, 1)

        if a[t][t] < 0:
            _scale_row(a, t, -1)
            if u is not None:
                _scale_row(u, t, -1)
        diag.append(a[t][t])
        t += 1

    left = IntMatrix.from_rows(u) if u is not None else None
    right = IntMatrix.from_rows(v) if v is not None else None
    return SmithForm(tuple(diag), left, right)


def cokernel(m: IntMatrix) -> FinAbGroup:
    """Cokernel Z^ncols / rowspan(m) as an abstract abelian group.

    Rows of m are relations among ncols generators.  Unit invariant
    factors are dropped; the rest become the torsion chain.
    """
    snf = smith_normal_form(m)
    torsion = tuple(d for d in snf.diagonal if d > 1)
    free = m.ncols - len(snf.diagonal)
    return FinAbGroup(free, torsion)


def rank(m: IntMatrix) -> int:
    """Rank over Q."""
    return len(smith_normal_form(m).diagonal)


def rank_mod2(m: IntMatrix) -> int:
    """Rank of m over the field with two elements.

    Rows are packed into bit masks and eliminated greedily.
    """
    masks: list[int] = []
    for row in m.entries:
        bits = 0
        for j, val in enumerate(row):
            if val & 1:
                bits |= 1 << j
        masks.append(bits)
    rk = 0
    basis: list[int] = []
    for bits in masks:
        for b in basis:
            low = b & -b
            if bits & low:
                bits ^= b
        if bits:
            basis.append(bits)
            rk += 1
    return rk


def determinant(m: IntMatrix) -> int:
    """Exact determinant via fraction-free Bareiss elimination."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return 1
    a = m.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def groups_isomorphic(a: FinAbGroup, b: FinAbGroup) -> bool:
    """Isomorphism test; invariant factors are a complete invariant."""
    return a.free_rank == b.free_rank and a.torsion == b.torsion


def gcd_of_minors(m: IntMatrix, k: int) -> int:
    """gcd of all k x k minors (0 if every minor vanishes).

    Exponential in the matrix size, so only suitable as a test oracle on
    small matrices.
    """
    if k == 0:
        return 1
    g = 0
    for rows in combinations(range(m.nrows), k):
        for cols in combinations(range(m.ncols), k):
            sub = IntMatrix.from_rows([[m.entries[i][j] for j in cols] for i in rows])
            g = gcd(g, determinant(sub))
            if g == 1:
                return 1
    return g


def symmetric_signature(gram: IntMatrix) -> tuple[int, int, int]:
    """Signature (positive, negative, zero) of a symmetric integer matrix.

    Congruence diagonalization over the rationals; exact, no eigenvalues.
    """
    n = gram.nrows
    if gram.ncols != n:
        raise ValueError("gram matrix must be square")
    a = [[Fraction(v) for v in row] for row in gram.entries]
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    pos = neg = zero = 0
    for k in range(n):
        if a[k][k] == 0:
            # bring a nonzero diagonal entry to position k if possible
            swapped = False
            for i in range(k + 1, n):
                if a[i][i] != 0:
                    a[k], a[i] = a[i], a[k]
                    for row in a:
                        row[k], row[i] = row[i], row[k]
                    swapped = True
                    break
            if not swapped:
                # all remaining diagonal entries vanish; use an off-diagonal
                found = None
                for i in range(k, n):
                    for j in range(i + 1, n):
                        if a[i][j] != 0:
                            found = (i, j)
                            break
                    if found:
                        break
                if found is None:
                    zero += n - k
                    break
                i, j = found
                # row/col i += row/col j creates 2*a[i][j] on the diagonal
                for col in range(n):
                    a[i][col] += a[j][col]
                for row in a:
                    row[i] += row[j]
                if i != k:
                    a[k], a[i] = a[i], a[k]
                    for row in a:
                        row[k], row[i] = row[i], row[k]
        pivot = a[k][k]
        if pivot == 0:
            zero += 1
            continue
        if pivot > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if a[i][k] != 0:
                factor = a[i][k] / pivot
                for col in range(n):
                    a[i][col] -= factor * a[k][col]
                for row in a:
                    row[i] -= factor * row[k]
    return pos, neg, zero
