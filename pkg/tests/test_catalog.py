import math

import numpy as np
import pytest

from conftest import ALL_GROUPS, G4I_C_VALUES
from g4maxwell.catalog import (CATALOG_CORRECTIONS, DomainError, GroupError,
                               GroupId, domain_guard, frame,
                               killing_bracket_residual, killing_fields_g4vii,
                               parse_group, printed_variant_report,
                               random_point, structure_constants,
                               verify_commutation, verify_jacobi)
from g4maxwell.jets import Point


class TestGroupId:
    def test_g4_vi_is_excluded_with_reason(self):
        with pytest.raises(GroupError, match="vanish"):
            GroupId("G4_VI")

    def test_unknown_tag(self):
        with pytest.raises(GroupError):
            GroupId("G4_IX")

    def test_g4_i_requires_c(self):
        with pytest.raises(GroupError):
            GroupId("G4_I")
        assert GroupId("G4_I", c=0.5).c == 0.5

    def test_g4_iii_requires_nonzero_sin_alpha(self):
        with pytest.raises(GroupError):
            GroupId("G4_III", alpha=math.pi)
        with pytest.raises(GroupError):
            GroupId("G4_III")
        assert GroupId("G4_III", alpha=math.pi / 6).alpha == math.pi / 6

    def test_extraneous_params_rejected(self):
        with pytest.raises(GroupError):
            GroupId("G4_IV", c=1.0)

    @pytest.mark.parametrize("text,tag", [
        ("G4-I:c=2.5", "G4_I"),
        ("G4-II", "G4_II"),
        ("G4-III:alpha=0.7", "G4_III"),
        ("G4-IV", "G4_IV"),
        ("G4-V", "G4_V"),
        ("G4-VII", "G4_VII"),
        ("G4-VIII", "G4_VIII"),
    ])
    def test_parse_group_grammar(self, text, tag):
        assert parse_group(text).tag == tag

    def test_parse_group_errors(self):
        with pytest.raises(GroupError):
            parse_group("G4-I:c")
        with pytest.raises(GroupError):
            parse_group("G4-I:c=abc")
        with pytest.raises(GroupError):
            parse_group("G4-I:q=1")


class TestFrames:
    def test_g4_iv_is_diagonal_exponential(self, rng):
        p = Point(0.3, -0.2, 0.9, -0.5)
        fe = frame(GroupId("G4_IV"), p)
        expected = np.diag([1.0, math.exp(0.3), math.exp(0.5), 1.0])
        np.testing.assert_allclose(fe.e_up.values, expected, rtol=1e-15)

    def test_g4_iv_identity_at_origin(self):
        fe = frame(GroupId("G4_IV"), Point(0, 0, 0, 0))
        np.testing.assert_allclose(fe.e_up.values, np.eye(4), atol=1e-15)

    def test_g4_ii_inverse_pair(self):
        fe = frame(GroupId("G4_II"), Point(0.2, -0.1, 0.7, 0.3))
        np.testing.assert_allclose(fe.e_down.values @ fe.e_up.values, np.eye(4), atol=1e-12)

    @pytest.mark.parametrize("g", ALL_GROUPS, ids=lambda g: g.label())
    def test_duality_completeness_commutation(self, g, rng):
        for _ in range(100):
            p = random_point(g, rng)
            rep = verify_commutation(g, p, tol=1e-10)
            assert rep.passed, (g.label(), rep)
            assert rep.duality_residual <= 1e-12
            assert rep.completeness_residual <= 1e-12

    @pytest.mark.parametrize("c", G4I_C_VALUES)
    def test_g4_i_commutation_across_c(self, c, rng):
        g = GroupId("G4_I", c=c)
        for _ in range(25):
            rep = verify_commutation(g, random_point(g, rng), tol=1e-10)
            assert rep.passed

    @pytest.mark.parametrize("g", ALL_GROUPS, ids=lambda g: g.label())
    def test_det_nonzero_in_domain(self, g, rng):
        for _ in range(25):
            fe = frame(g, random_point(g, rng))
            assert abs(fe.det_up.value) > 1e-6

    def test_zeroed_constants_are_detected(self, rng):
        from g4maxwell.catalog import StructureConstants
        g = GroupId("G4_IV")
        zero = StructureConstants(np.zeros((4, 4, 4)))
        rep = verify_commutation(g, random_point(g, rng), constants=zero)
        assert rep.max_residual > 0.1


class TestDomainGuards:
    def test_g4_viii_rejects_sin_u1_zero(self):
        g = GroupId("G4_VIII")
        assert domain_guard(g, Point(0.0, 0.1, 0.2, 0.3)) is not None
        with pytest.raises(DomainError):
            frame(g, Point(0.0, 0.1, 0.2, 0.3))
        assert domain_guard(g, Point(1.0, 0.1, 0.2, 0.3)) is None

    def test_random_points_respect_guards(self, rng):
        g = GroupId("G4_VIII")
        for _ in range(50):
            p = random_point(g, rng)
            assert 0.2 <= p.u1 <= math.pi - 0.2


class TestStructureConstants:
    def test_g4_viii_table(self):
        C = structure_constants(GroupId("G4_VIII")).C
        assert C[0, 1, 2] == 1.0 and C[1, 2, 0] == 1.0 and C[2, 0, 1] == 1.0
        expected = np.zeros((4, 4, 4))
        for (g, a, b) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            expected[g, a, b] = 1.0
            expected[g, b, a] = -1.0
        np.testing.assert_array_equal(C, expected)

    def test_g4_i_table_at_c2(self):
        C = structure_constants(GroupId("G4_I", c=2.0)).C
        assert C[0, 1, 2] == 1.0      # C^1_{23}
        assert C[0, 0, 3] == 2.0      # C^1_{14}
        assert C[1, 1, 3] == 1.0      # C^2_{24}
        assert C[2, 2, 3] == 1.0      # C^3_{34} = c - 1
        assert np.count_nonzero(C) == 8

    def test_g4_ii_table_includes_certified_term(self):
        C = structure_constants(GroupId("G4_II")).C
        assert C[0, 0, 3] == 2.0
        assert C[0, 1, 2] == -1.0
        assert C[1, 1, 3] == 1.0
        assert C[1, 2, 3] == 1.0      # the term absent from the printed table
        assert C[2, 2, 3] == 1.0

    def test_g4_i_c1_is_the_parametrized_entry(self):
        # the c=1 table is the c-parametrized family evaluated at c=1,
        # not a separate entry: C^3_{34} = c-1 vanishes there
        C1 = structure_constants(GroupId("G4_I", c=1.0)).C
        Cg = structure_constants(GroupId("G4_I", c=2.0)).C
        assert C1[2, 2, 3] == 0.0 and Cg[2, 2, 3] == 1.0
        assert C1[0, 0, 3] == 1.0
        np.testing.assert_array_equal(C1[1], Cg[1])

    @pytest.mark.parametrize("g", ALL_GROUPS, ids=lambda g: g.label())
    def test_antisymmetry_and_jacobi(self, g):
        C = structure_constants(g)
        assert C.antisymmetry_residual() == 0.0
        ok, res = verify_jacobi(C, tol=1e-14)
        assert ok, (g.label(), res)

    @pytest.mark.parametrize("c", G4I_C_VALUES)
    def test_jacobi_across_c(self, c):
        ok, res = verify_jacobi(structure_constants(GroupId("G4_I", c=c)))
        assert ok and res <= 1e-14

    def test_gauge_indices(self):
        assert structure_constants(GroupId("G4_II")).gauge_indices() == (4,)
        assert structure_constants(GroupId("G4_IV")).gauge_indices() == (1, 4)
        assert structure_constants(GroupId("G4_V")).gauge_indices() == (1, 4)
        assert structure_constants(GroupId("G4_I", c=1.0)).gauge_indices() == (3, 4)


class TestKillingFields:
    def test_x2_and_x4_values(self, rng):
        p = random_point(GroupId("G4_VII"), rng)
        X = killing_fields_g4vii(p)
        np.testing.assert_array_equal(X[1], [0.0, 0.0, 1.0, 0.0])
        np.testing.assert_array_equal(X[3], [1.0, 0.0, 0.0, 0.0])

    def test_brackets_match_structure_constants(self, rng):
        for _ in range(20):
            p = random_point(GroupId("G4_VII"), rng)
            assert killing_bracket_residual(p) <= 1e-10


class TestPrintedVariants:
    def test_rejected_variants_fail_commutation_and_corrections_pass(self):
        report = printed_variant_report()
        assert set(report) == {"G4_I_printed_e3", "G4_II_printed_constants",
                               "G4_III_printed_rows", "G4_V_printed_constants"}
        for name, row in report.items():
            assert row["printed"] > 1e-3, name
            assert row["certified"] <= 1e-12, name

    def test_corrections_table_is_complete(self):
        locations = [c["location"] for c in CATALOG_CORRECTIONS]
        assert len(locations) == 4
        assert any("G4(I)" in loc for loc in locations)
        assert any("G4(V)" in loc for loc in locations)
