"""Intersection theory on the plane blown up in the six vertices of a
complete quadrilateral.

Classes live in Pic(Y) = Z L + Z E_1 + ... + Z E_6 with the unimodular
form (d, m) . (d', m') = d d' - sum m_i m'_i of signature (1, 6).

The catalog records the curve configuration attached to the quadrilateral
through P_1 .. P_6 (four sides S_i, three diagonals Delta_i, three conic
pencils f_i), the three branch divisors D_i built from them, and the
first Chern classes L_1, L_2, L_3 of the character sheaves of the
associated bidouble cover.  Conventions:

* sides: S_1 through P_1 P_2 P_5, S_2 through P_2 P_3 P_6,
  S_3 through P_3 P_4 P_5, S_4 through P_4 P_1 P_6;
* diagonals: Delta_1 = P_1 P_3, Delta_2 = P_2 P_4, Delta_3 = P_5 P_6;
* conics: f_1 through P_2, P_4, P_5, P_6 and cyclically.

Euler characteristics use chi(O_Y) = 1 and e(Y) = 9 (each of the six
blow-ups adds one to e(P^2) = 3).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .integer_algebra import IntMatrix, rank

EULER_NUMBER = 9
CHI_TRIVIAL = 1


@dataclass(frozen=True)
class DivisorClass:
    """d L + sum m_i E_i in the Picard lattice of the blown-up plane."""

    d: int
    m: tuple[int, int, int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.m) != 6:
            raise ValueError("need exactly six exceptional coefficients")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.d + other.d, tuple(a + b for a, b in zip(self.m, other.m)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.d - other.d, tuple(a - b for a, b in zip(self.m, other.m)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.d, tuple(-a for a in self.m))

    def __rmul__(self, k: int) -> "DivisorClass":
        return DivisorClass(k * self.d, tuple(k * a for a in self.m))

    def vector(self) -> tuple[int, ...]:
        return (self.d, *self.m)


def cls(d: int, *m: int) -> DivisorClass:
    return DivisorClass(d, tuple(m))


L = cls(1, 0, 0, 0, 0, 0, 0)
E = [cls(0, *(1 if j == i else 0 for j in range(6))) for i in range(6)]


def intersect(a: DivisorClass, b: DivisorClass) -> int:
    return a.d * b.d - sum(x * y for x, y in zip(a.m, b.m))


def selfint(a: DivisorClass) -> int:
    return intersect(a, a)


@dataclass(frozen=True)
class Component:
    """An irreducible configuration curve with its genus label."""

    name: str
    divisor: DivisorClass
    genus: int = 0


@dataclass(frozen=True)
class ConfigCatalog:
    S: tuple[DivisorClass, ...]
    Delta: tuple[DivisorClass, ...]
    f: tuple[DivisorClass, ...]
    K: DivisorClass
    chern: tuple[DivisorClass, ...]  # character sheaf classes L_1, L_2, L_3
    branch_components: tuple[tuple[Component, ...], ...]  # D_1, D_2, D_3

    def branch_divisor(self, i: int) -> DivisorClass:
        total = cls(0, 0, 0, 0, 0, 0, 0)
        for comp in self.branch_components[i]:
            total = total + comp.divisor
        return total

    def curve_components(self) -> list[Component]:
        """All distinct named curves with genus labels, for adjunction."""
        named = [
            ("S1", self.S[0]), ("S2", self.S[1]), ("S3", self.S[2]), ("S4", self.S[3]),
            ("Delta1", self.Delta[0]), ("Delta2", self.Delta[1]), ("Delta3", self.Delta[2]),
            ("f1", self.f[0]), ("f2", self.f[1]), ("f3", self.f[2]),
        ]
        comps = [Component(n, c, 0) for n, c in named]
        comps.extend(Component(f"E{i+1}", E[i], 0) for i in range(6))
        return comps


def catalog() -> ConfigCatalog:
    s1 = L - E[0] - E[1] - E[4]
    s2 = L - E[1] - E[2] - E[5]
    s3 = L - E[2] - E[3] - E[4]
    s4 = L - E[3] - E[0] - E[5]
    d1 = L - E[0] - E[2]
    d2 = L - E[1] - E[3]
    d3 = L - E[4] - E[5]
    f1 = 2 * L - E[1] - E[3] - E[4] - E[5]
    f2 = 2 * L - E[0] - E[2] - E[4] - E[5]
    f3 = 2 * L - E[0] - E[1] - E[2] - E[3]
    k = -3 * L + E[0] + E[1] + E[2] + E[3] + E[4] + E[5]
    l1 = -1 * k + f1 - E[3]
    l2 = -2 * k - E[4] - E[5]
    l3 = -1 * k + L - E[0] - E[1] - E[2]
    branch1 = (
        Component("Delta1", d1),
        Component("f2", f2),
        Component("S1", s1),
        Component("S2", s2),
    )
    branch2 = (Component("Delta2", d2), Component("f3", f3))
    branch3 = (
        Component("Delta3", d3),
        Component("f1", f1),
        Component("f1'", f1),
        Component("S3", s3),
        Component("S4", s4),
    )
    return ConfigCatalog(
        S=(s1, s2, s3, s4),
        Delta=(d1, d2, d3),
        f=(f1, f2, f3),
        K=k,
        chern=(l1, l2, l3),
        branch_components=(branch1, branch2, branch3),
    )


@dataclass
class ConfigReport:
    checks_run: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def expect(self, label: str, got, want) -> None:
        self.checks_run += 1
        if got != want:
            self.failures.append(f"{label}: got {got}, want {want}")


def verify_configuration(c: ConfigCatalog) -> ConfigReport:
    """Exact arithmetic audit of the configuration relations."""
    r = ConfigReport()
    minus_k = -c.K

    for i in range(3):
        r.expect(f"Delta{i+1} + f{i+1} = -K", c.Delta[i] + c.f[i], minus_k)

    for i in range(4):
        for j in range(i + 1, 4):
            r.expect(f"S{i+1}.S{j+1} = 0", intersect(c.S[i], c.S[j]), 0)
        for j in range(3):
            r.expect(f"S{i+1}.Delta{j+1} = 0", intersect(c.S[i], c.Delta[j]), 0)
            r.expect(f"S{i+1}.f{j+1} = 0", intersect(c.S[i], c.f[j]), 0)
        r.expect(f"S{i+1}^2 = -2", selfint(c.S[i]), -2)
        r.expect(f"K.S{i+1} = 0", intersect(c.K, c.S[i]), 0)

    for i in range(3):
        for j in range(3):
            want = 2 if i == j else 0
            r.expect(f"Delta{i+1}.f{j+1} = {want}", intersect(c.Delta[i], c.f[j]), want)
        r.expect(f"f{i+1}^2 = 0", selfint(c.f[i]), 0)
        r.expect(f"-K.Delta{i+1} = 1", intersect(minus_k, c.Delta[i]), 1)
        r.expect(f"-K.f{i+1} = 2", intersect(minus_k, c.f[i]), 2)
    for i in range(3):
        for j in range(i + 1, 3):
            r.expect(f"f{i+1}.f{j+1} = 2", intersect(c.f[i], c.f[j]), 2)

    r.expect(
        "S1 + S4 - S2 - S3 = -2E1 + 2E3",
        c.S[0] + c.S[3] - c.S[1] - c.S[2],
        -2 * E[0] + 2 * E[2],
    )
    r.expect(
        "K + L2 + Delta2 = S1+S2+S3+S4+E1+E3",
        c.K + c.chern[1] + c.Delta[1],
        c.S[0] + c.S[1] + c.S[2] + c.S[3] + E[0] + E[2],
    )
    r.expect(
        "K + L3 + Delta3 = S1+S2+E2",
        c.K + c.chern[2] + c.Delta[2],
        c.S[0] + c.S[1] + E[1],
    )
    r.expect("K + L1 = f1 - E4", c.K + c.chern[0], c.f[0] - E[3])

    # bidouble consistency: 2 L_i = D_j + D_k for {i, j, k} = {1, 2, 3}
    for i, (j, k) in enumerate([(1, 2), (0, 2), (0, 1)]):
        r.expect(
            f"2L{i+1} = D{j+1} + D{k+1}",
            2 * c.chern[i],
            c.branch_divisor(j) + c.branch_divisor(k),
        )

    # negativity inputs for the two exceptional-case reductions
    r.expect(
        "(2Delta2 - E5 - E6).Delta2 = -2",
        intersect(2 * c.Delta[1] - E[4] - E[5], c.Delta[1]),
        -2,
    )
    r.expect(
        "(K + 2Delta3 + L - E1 - E2 - E3).Delta3 = -2",
        intersect(c.K + 2 * c.Delta[2] + L - E[0] - E[1] - E[2], c.Delta[2]),
        -2,
    )

    # restriction degrees feeding the character-wise bounds
    d1_total = c.branch_divisor(0)
    r.expect(
        "(D1 + f1 - E4).f1 = 3",
        intersect(d1_total + c.f[0] - E[3], c.f[0]),
        3,
    )
    log2 = c.f[2] + c.S[0] + c.S[1] + c.S[2] + c.S[3] + E[0] + E[2]
    r.expect("E1-degree = 2", intersect(E[0], log2), 2)
    r.expect("E3-degree = 2", intersect(E[2], log2), 2)
    log3 = 2 * c.f[0] + c.S[0] + c.S[1] + c.S[2] + c.S[3] + E[1]
    r.expect("E2-degree = 3", intersect(E[1], log3), 3)

    return r


def rank_of_span(classes: list[DivisorClass]) -> int:
    if not classes:
        return 0
    return rank(IntMatrix.from_rows([list(c.vector()) for c in classes]))


def gram_matrix(classes: list[DivisorClass]) -> IntMatrix:
    return IntMatrix.from_rows(
        [[intersect(a, b) for b in classes] for a in classes]
    )


def chi_bundle_hrr(rk: int, c1: DivisorClass, c2: int) -> int:
    """chi of a rank-rk bundle on Y by Hirzebruch-Riemann-Roch."""
    k = catalog().K
    value = (
        Fraction(rk) * CHI_TRIVIAL
        + Fraction(selfint(c1) - 2 * c2, 2)
        - Fraction(intersect(c1, k), 2)
    )
    if value.denominator != 1:
        raise ValueError(f"non-integral chi {value}; invalid Chern data")
    return int(value)


def twisted_cotangent_chern(twist: DivisorClass) -> tuple[int, DivisorClass, int]:
    """(rank, c1, c2) of the cotangent bundle twisted by a line class."""
    k = catalog().K
    c1 = k + 2 * twist
    c2 = EULER_NUMBER + intersect(k, twist) + selfint(twist)
    return 2, c1, c2


def chi_restricted_twist(component: DivisorClass, genus: int, twist: DivisorClass) -> int:
    """Riemann-Roch on a configuration curve: deg + 1 - g."""
    return intersect(twist, component) + 1 - genus


@dataclass
class ThetaReport:
    """Arithmetic skeleton of the tangent-sheaf cohomology bounds."""

    chi_cotangent_twisted: int
    chi_restricted_total: int
    invariant_h1: int
    span_ranks: tuple[int, int, int]
    restriction_degrees: dict[str, int]
    character_bounds: tuple[int, int, int]
    h2_bound: int
    chi_theta: int
    h1: int
    h2: int
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def theta_cohomology_report(ks_squared: int = 7, chi_os: int = 1) -> ThetaReport:
    """Assemble the h1/h2 computation for the tangent sheaf downstairs.

    Inputs mirror the chain: chi of the twisted cotangent bundle plus chi
    of the branch restrictions give the invariant-part dimension; span
    ranks and restriction degrees give per-character bounds upstairs; the
    surface chi(Theta) = 2K^2 - 10 chi(O) pins h1 and h2.
    """
    failures: list[str] = []
    c = catalog()
    config = verify_configuration(c)
    if not config.ok:
        failures.extend(config.failures)

    rk, c1, c2 = twisted_cotangent_chern(c.K)
    chi_tw = chi_bundle_hrr(rk, c1, c2)
    if chi_tw != -4:
        failures.append(f"chi(cotangent twisted by K) = {chi_tw}, want -4")

    chi_restr = sum(
        chi_restricted_twist(comp.divisor, comp.genus, c.K)
        for i in range(3)
        for comp in c.branch_components[i]
    )
    if chi_restr != 0:
        failures.append(f"chi of branch restrictions = {chi_restr}, want 0")

    invariant_h1 = -(chi_tw + chi_restr)

    span1 = [c.Delta[0], c.f[1], c.S[0], c.S[1], c.f[0]]
    span2 = [c.f[2], c.S[0], c.S[1], c.S[2], c.S[3], E[0], E[2]]
    span3 = [c.f[0], c.f[0], c.S[2], c.S[3], c.S[0], c.S[1], E[1]]
    ranks = (rank_of_span(span1), rank_of_span(span2), rank_of_span(span3))
    if ranks != (5, 6, 6):
        failures.append(f"span ranks {ranks}, want (5, 6, 6)")

    d1_total = c.branch_divisor(0)
    degrees = {
        "f1": intersect(d1_total + c.f[0] - E[3], c.f[0]),
        "E1": intersect(E[0], c.f[2] + c.S[0] + c.S[1] + c.S[2] + c.S[3] + E[0] + E[2]),
        "E3": intersect(E[2], c.f[2] + c.S[0] + c.S[1] + c.S[2] + c.S[3] + E[0] + E[2]),
        "E2": intersect(E[1], 2 * c.f[0] + c.S[0] + c.S[1] + c.S[2] + c.S[3] + E[1]),
    }
    if degrees != {"f1": 3, "E1": 2, "E3": 2, "E2": 3}:
        failures.append(f"restriction degrees {degrees}")

    def sections_on_line(degree: int) -> int:
        # h0 of the cotangent sheaf of a rational curve twisted up to degree
        return max(degree - 1, 0)

    bound1 = (len(span1) - ranks[0]) + sections_on_line(degrees["f1"])
    bound2 = (len(span2) - ranks[1]) + sections_on_line(degrees["E1"]) + sections_on_line(
        degrees["E3"]
    )
    bound3 = (len(span3) - ranks[2]) + sections_on_line(degrees["E2"])
    bounds = (bound1, bound2, bound3)
    if bounds != (2, 3, 3):
        failures.append(f"character bounds {bounds}, want (2, 3, 3)")

    h2_bound = sum(bounds)
    chi_theta = 2 * ks_squared - 10 * chi_os
    # h2 - h1 = chi and h1 >= invariant part force equality on both ends
    h1 = invariant_h1
    h2 = chi_theta + h1
    if h2 != h2_bound:
        failures.append(f"h2 = {h2} does not meet the bound {h2_bound}")

    return ThetaReport(
        chi_cotangent_twisted=chi_tw,
        chi_restricted_total=chi_restr,
        invariant_h1=invariant_h1,
        span_ranks=ranks,
        restriction_degrees=degrees,
        character_bounds=bounds,
        h2_bound=h2_bound,
        chi_theta=chi_theta,
        h1=h1,
        h2=h2,
        failures=failures,
    )
