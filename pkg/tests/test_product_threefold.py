"""Fiber-class intersection numbers and Kuenneth cohomology."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from surface_lab.product_threefold import (
    AmbiguousCase,
    FactorData,
    MultiClass,
    NonIntegral,
    adjunction_chain,
    canonical_class,
    curve_h,
    hypersurface_class,
    ks_squared,
    kunneth_h,
    standard_factors,
    triple_product,
)

vec3 = st.tuples(
    st.integers(min_value=-9, max_value=9),
    st.integers(min_value=-9, max_value=9),
    st.integers(min_value=-9, max_value=9),
)


def brute_triple(x, y, z):
    """Expansion oracle: multiply out and keep squarefree monomials."""
    total = 0
    for i in range(3):
        for j in range(3):
            for k in range(3):
                if {i, j, k} == {0, 1, 2}:
                    total += x[i] * y[j] * z[k]
    return total


class TestTripleProduct:
    def test_frozen_examples(self):
        a = MultiClass((2, 2, 12))
        b = MultiClass((2, 2, 4))
        assert triple_product(a, a, b) == 224
        f1 = MultiClass((1, 0, 0))
        assert triple_product(f1, f1, MultiClass((3, 7, 9))) == 0
        ones = MultiClass((1, 1, 1))
        assert triple_product(ones, ones, ones) == 6

    def test_class_arithmetic(self):
        assert canonical_class() + hypersurface_class() == MultiClass((2, 2, 12))
        assert 2 * MultiClass((1, 2, 3)) == MultiClass((2, 4, 6))
        with pytest.raises(ValueError):
            MultiClass((1, 2))

    @given(x=vec3, y=vec3, z=vec3)
    @settings(max_examples=100, deadline=None)
    def test_symmetric_and_matches_brute_force(self, x, y, z):
        cx, cy, cz = MultiClass(x), MultiClass(y), MultiClass(z)
        val = triple_product(cx, cy, cz)
        assert val == brute_triple(x, y, z)
        assert val == triple_product(cy, cx, cz) == triple_product(cz, cy, cx)

    @given(x=vec3, y=vec3, z=vec3, w=vec3, s=st.integers(-5, 5))
    @settings(max_examples=100, deadline=None)
    def test_trilinear(self, x, y, z, w, s):
        cx, cy, cz, cw = MultiClass(x), MultiClass(y), MultiClass(z), MultiClass(w)
        lhs = triple_product(cx + (s * cw), cy, cz)
        rhs = triple_product(cx, cy, cz) + s * triple_product(cw, cy, cz)
        assert lhs == rhs


class TestKsSquared:
    def test_quotient_value(self):
        assert ks_squared() == 7

    def test_cover_value(self):
        assert ks_squared(group_order=1) == 224

    def test_non_integral_rejected(self):
        with pytest.raises(NonIntegral):
            ks_squared(group_order=3)


class TestCurveH:
    def test_four_regimes(self):
        assert curve_h(5, 8) == (5, 1)  # canonical on genus 5
        assert curve_h(5, 12) == (8, 0)  # nonspecial
        assert curve_h(1, 0) == (1, 1)  # trivial on an elliptic curve
        assert curve_h(5, -3) == (0, 7)  # negative degree

    def test_special_range_refused(self):
        with pytest.raises(AmbiguousCase):
            curve_h(5, 4)
        with pytest.raises(AmbiguousCase):
            curve_h(2, 1)

    def test_negative_genus_rejected(self):
        with pytest.raises(ValueError):
            curve_h(-1, 0)

    def test_genus_zero_and_one_never_ambiguous(self):
        for d in range(-6, 7):
            curve_h(0, d)
            curve_h(1, d)

    @given(
        genus=st.integers(min_value=0, max_value=12),
        degree=st.integers(min_value=-30, max_value=30),
    )
    @settings(max_examples=150, deadline=None)
    def test_riemann_roch_in_decidable_regimes(self, genus, degree):
        try:
            h0, h1 = curve_h(genus, degree)
        except AmbiguousCase:
            assert 0 < degree < 2 * genus - 2
            return
        assert h0 >= 0 and h1 >= 0
        assert h0 - h1 == degree - genus + 1


class TestKunneth:
    def test_canonical_multidegree(self):
        assert kunneth_h(standard_factors((0, 0, 8))) == (5, 11, 7, 1)

    def test_adjoint_multidegree(self):
        assert kunneth_h(standard_factors((2, 2, 12))) == (32, 0, 0, 0)

    def test_trivial_bundle(self):
        # convolution of (1,1),(1,1),(1,5): (1+x)^2 (1+5x)
        assert kunneth_h(standard_factors((0, 0, 0))) == (1, 7, 11, 5)

    def test_structure_sheaf_chi_vanishes(self):
        h = kunneth_h(standard_factors((0, 0, 0)))
        assert h[0] - h[1] + h[2] - h[3] == 0

    def test_ambiguity_propagates(self):
        with pytest.raises(AmbiguousCase):
            kunneth_h(standard_factors((0, 0, 4)))

    def test_factor_data_validation(self):
        with pytest.raises(ValueError):
            FactorData((1, 1), (0, 0, 0))
        with pytest.raises(ValueError):
            FactorData((1, -1, 5), (0, 0, 0))

    @given(degs=vec3, perm=st.permutations([0, 1, 2]))
    @settings(max_examples=100, deadline=None)
    def test_factor_permutation_invariance(self, degs, perm):
        genera = (1, 1, 5)
        try:
            base = kunneth_h(FactorData(genera, degs))
        except AmbiguousCase:
            return
        permuted = FactorData(
            tuple(genera[i] for i in perm), tuple(degs[i] for i in perm)
        )
        assert kunneth_h(permuted) == base

    @given(degs=vec3)
    @settings(max_examples=100, deadline=None)
    def test_serre_duality(self, degs):
        dual = (-degs[0], -degs[1], 8 - degs[2])
        try:
            h = kunneth_h(standard_factors(degs))
            hd = kunneth_h(standard_factors(dual))
        except AmbiguousCase:
            return
        assert hd == tuple(reversed(h))


class TestAdjunctionChain:
    def test_headline_numbers(self):
        report = adjunction_chain()
        assert report.h_canonical == (5, 11, 7, 1)
        assert report.h_adjoint == (32, 0, 0, 0)
        assert report.pg_cover == 38
        assert report.q_cover == 7
        assert report.chi_cover == 32
        assert report.chi_quotient == 1
        assert report.ks_squared == 7
        assert report.group_order == 32

    def test_euler_additivity_across_adjunction(self):
        # chi of the hypersurface's dualizing sheaf = chi(adjoint) - chi(canonical)
        report = adjunction_chain()
        chi = lambda h: h[0] - h[1] + h[2] - h[3]
        assert chi(report.h_adjoint) - chi(report.h_canonical) == report.chi_cover

    def test_non_integral_group_order(self):
        with pytest.raises(NonIntegral):
            adjunction_chain(group_order=5)
