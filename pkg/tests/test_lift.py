"""Lifting recursions: table rows, norm/congruence invariants, closed forms."""
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gpspec.dioph import minimal_t
from gpspec.errors import BadInput
from gpspec.lift import (check_k3_invariants, check_k4_invariants, derived_ab, derived_cd,
                         derived_spectrum_k3, derived_spectrum_k4, mul_pair,
                         power_components, step_xy)
from gpspec.oracle import char_sum_spectrum
from gpspec.spectra import GraphSpec, gp_spectrum

# (ell, a, b, non-principal eigenvalues) rows of the p=7, t=3, s=1 family
TABLE1 = [
    (0, 1, 1, {9, 2, -12}),
    (1, -71, 13, {75231, -18408, -56824}),
    (2, -1763, -83, {344515488, 139453281, -483968770}),
    (3, -10907, -6119, {3106191996420, -1026985846948, -2079206149473}),
    (4, 386569, -93911, {12484762621341194, 7406034473827068, -19890797095168263}),
]

# (ell, a, b, non-principal eigenvalues) rows of the p=31, t=1, s=0 family
TABLE2 = [
    (1, 4, -2, {72, 41, -114}),
    (2, 46, 8, {14735, 4164, -18900}),
    (3, -308, 30, {2869866, 188676, -3058543}),
    (4, -194, -368, {539644104, -59721025, -479923080}),
    (5, 10324, 542, {98522451641, -25985726058, -72536725584}),
]

# (ell, c, d, non-principal eigenvalues) rows of the p=5 family
TABLE3 = [
    (1, -3, 2, {16, -4, -14, 1}),
    (2, -7, -12, {-144, 456, -244, -69}),
    (3, 117, 22, {6656, 1156, 3406, -11219}),
    (4, -527, 168, {202656, -7344, -262344, 67031}),
    (5, 237, -1558, {-2427344, 7310156, -2071094, -2811719}),
]


class TestStepXY:
    def test_one_step_from_base_7(self):
        assert step_xy(7, 3, (10, 3)) == (-143, 60)
        assert (-143) ** 2 + 27 * 60 ** 2 == 7 ** 6

    def test_one_step_from_base_31(self):
        assert step_xy(31, 1, (-2, 1)) == (-23, -4)

    def test_rejects_wrong_t(self):
        with pytest.raises(BadInput):
            step_xy(7, 2, (10, 3))

    def test_norm_advances_one_level(self):
        xy = (10, 3)
        for ell in range(1, 12):
            assert xy[0] ** 2 + 27 * xy[1] ** 2 == 7 ** (3 * ell)
            xy = step_xy(7, 3, xy)


class TestDerivedAB:
    @pytest.mark.parametrize("ell,a,b,_", TABLE1)
    def test_table1_pairs(self, ell, a, b, _):
        assert derived_ab(7, 3, 1, ell) == (a, b)

    @pytest.mark.parametrize("ell,a,b,_", TABLE2)
    def test_table2_pairs(self, ell, a, b, _):
        assert derived_ab(31, 1, 0, ell) == (a, b)

    def test_level_zero_only_for_positive_s(self):
        assert derived_ab(7, 3, 1, 0) == (1, 1)
        with pytest.raises(BadInput):
            derived_ab(31, 1, 0, 0)

    def test_rejects_bad_offsets(self):
        with pytest.raises(BadInput):
            derived_ab(7, 3, 3, 1)
        with pytest.raises(BadInput):
            derived_ab(7, 3, -1, 1)

    @pytest.mark.parametrize("p,t,s", [(7, 3, 0), (7, 3, 1), (7, 3, 2), (31, 1, 0),
                                       (13, 3, 0), (13, 3, 1), (13, 3, 2), (43, 1, 0)])
    def test_invariants_up_to_level_64(self, p, t, s):
        for ell in range(1, 65):
            a, b = derived_ab(p, t, s, ell)
            assert a * a + 27 * b * b == 4 * p ** (t * ell + s)
            assert a % 3 == 1
            assert math.gcd(a, p) == 1


class TestDerivedSpectrumK3:
    @pytest.mark.parametrize("ell,a,b,lams", [r for r in TABLE1 if r[0] >= 1])
    def test_table1_eigenvalues(self, ell, a, b, lams):
        s = derived_spectrum_k3(7, 3, 1, ell)
        assert {v for v, _ in s.nonprincipal()} == lams

    @pytest.mark.parametrize("ell,a,b,lams", TABLE2)
    def test_table2_eigenvalues(self, ell, a, b, lams):
        s = derived_spectrum_k3(31, 1, 0, ell)
        assert {v for v, _ in s.nonprincipal()} == lams

    def test_principal_values(self):
        assert derived_spectrum_k3(7, 3, 1, 1).principal == 4613762400
        assert derived_spectrum_k3(7, 3, 1, 2).principal == (7 ** 21 - 1) // 3
        assert derived_spectrum_k3(31, 1, 0, 1).principal == (31 ** 3 - 1) // 3

    @pytest.mark.parametrize("p,t,s,ell", [(7, 3, 1, 1), (7, 3, 0, 1), (31, 1, 0, 1),
                                           (31, 1, 0, 2), (13, 3, 0, 1), (43, 1, 0, 2),
                                           (7, 3, 2, 1), (7, 3, 2, 2), (13, 3, 1, 1),
                                           (13, 3, 2, 1)])
    def test_agrees_with_direct_formula(self, p, t, s, ell):
        # the s = 2 offsets need the conjugate base product: the naive sign
        # gives a1 = 49 for p = 7, divisible by p
        m = 3 * (t * ell + s)
        assert derived_spectrum_k3(p, t, s, ell) == gp_spectrum(GraphSpec(3, p, m))

    @pytest.mark.parametrize("p,ell", [(31, 1), (43, 1)])
    def test_agrees_with_character_oracle(self, p, ell):
        # q = p^3 fits the character cap; triple agreement closes here
        s = derived_spectrum_k3(p, 1, 0, ell)
        assert s == char_sum_spectrum(GraphSpec(3, p, 3 * ell))


class TestDerivedCD:
    @pytest.mark.parametrize("ell,c,d,_", TABLE3)
    def test_table3_pairs(self, ell, c, d, _):
        assert derived_cd(5, ell) == (c, d)

    def test_base_returned_unchanged(self):
        assert derived_cd(5, 1) == (-3, 2)

    @pytest.mark.parametrize("p", [5, 13, 17])
    def test_invariants_up_to_level_64(self, p):
        for ell in range(1, 65):
            c, d = derived_cd(p, ell)
            assert c * c + 4 * d * d == p ** (2 * ell)
            assert c % 4 == 1
            assert math.gcd(c, p) == 1


class TestDerivedSpectrumK4:
    @pytest.mark.parametrize("ell,c,d,lams", TABLE3)
    def test_table3_eigenvalues(self, ell, c, d, lams):
        s = derived_spectrum_k4(5, ell)
        assert {v for v, _ in s.nonprincipal()} == lams

    def test_principal_values(self):
        assert derived_spectrum_k4(5, 1).principal == 156
        assert derived_spectrum_k4(5, 2).principal == 97656

    @pytest.mark.parametrize("p,ell", [(5, 1), (5, 2), (13, 1), (17, 1)])
    def test_agrees_with_direct_formula(self, p, ell):
        assert derived_spectrum_k4(p, ell) == gp_spectrum(GraphSpec(4, p, 4 * ell))

    def test_agrees_with_character_oracle(self):
        assert derived_spectrum_k4(5, 1) == char_sum_spectrum(GraphSpec(4, 5, 4))
        assert derived_spectrum_k4(13, 1) == char_sum_spectrum(GraphSpec(4, 13, 4))


class TestClosedForm:
    """Binomial-expansion closed forms referee the step recursions."""

    @pytest.mark.parametrize("p", [7, 31, 13])
    def test_xy_powers_match_binomial_expansion(self, p):
        t, x0, y0 = minimal_t(p)
        xy = (x0, y0)
        for ell in range(1, 21):
            assert xy == power_components(x0, y0, ell, 27)
            xy = mul_pair((x0, y0), xy, 27)

    @pytest.mark.parametrize("p,t,s", [(7, 3, 0), (7, 3, 1), (7, 3, 2), (31, 1, 0)])
    def test_derived_ab_matches_closed_form(self, p, t, s):
        from gpspec.lift import k3_base_pairs

        _, (x0, y0), base_ab = k3_base_pairs(p, s)
        for ell in range(1, 21):
            X, Y = power_components(x0, y0, ell, 27)
            if s == 0:
                expected = (-2 * X, -2 * Y)
            else:
                expected = mul_pair(base_ab, (X, Y), 27)
            assert derived_ab(p, t, s, ell) == expected

    @pytest.mark.parametrize("p", [5, 13])
    def test_derived_cd_matches_closed_form(self, p):
        from gpspec.dioph import solve_cd

        rep = solve_cd(p, 1)
        for ell in range(1, 21):
            assert derived_cd(p, ell) == power_components(rep.x, rep.y, ell, 4)

    def test_power_components_norm_identity(self):
        for ell in range(0, 15):
            X, Y = power_components(10, 3, ell, 27)
            assert X * X + 27 * Y * Y == (10 ** 2 + 27 * 3 ** 2) ** ell


@settings(max_examples=50, deadline=None)
@given(p=st.sampled_from([7, 13, 31, 43, 61]), ell=st.integers(min_value=1, max_value=40))
def test_xy_norm_identity_random_levels(p, ell):
    t, x0, y0 = minimal_t(p)
    X, Y = power_components(x0, y0, ell, 27)
    assert X * X + 27 * Y * Y == p ** (t * ell)


class TestInvariantCheckers:
    def test_k3_checker_rejects_bad_pair(self):
        with pytest.raises(AssertionError):
            check_k3_invariants(7, 1, 2, 1)  # 4 + 27 != 28 is fine, but 2 != 1 mod 3
        with pytest.raises(AssertionError):
            check_k3_invariants(7, 2, 1, 1)  # wrong norm

    def test_k4_checker_rejects_bad_pair(self):
        with pytest.raises(AssertionError):
            check_k4_invariants(5, 1, 3, 2)  # 3 != 1 mod 4
