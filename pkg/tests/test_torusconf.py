"""Configuration spaces of tori, circles, and SU2."""

from math import factorial

import pytest

from confab.exact import QMatrix
from confab.freegroup import (
    FreeGroupModule,
    abelianized_matrix,
    contragredient,
    fixed_space_dim,
    h1_f2,
)
from confab.groups import decompose, format_decomposition
from confab.torusconf import (
    ALPHA_FIBER,
    FIBER_GENERATORS,
    MONODROMY_H,
    MONODROMY_V,
    circle_conf,
    conf2_torus,
    conf2_torus_minus_point_rank2,
    conf3_torus_rank2,
    su2_conf,
)
from confab.weyl import UnsupportedDatum, datum


def dec_by_degree(d, gc):
    return {
        degree: format_decomposition(decompose(gc.piece(degree), d.catalog))
        for degree in gc.degrees()
    }


class TestMonodromy:
    def test_abelianized_loop_actions(self):
        a_h = abelianized_matrix(FIBER_GENERATORS, MONODROMY_H)
        a_v = abelianized_matrix(FIBER_GENERATORS, MONODROMY_V)
        assert a_h == QMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 1, 1]])
        assert a_v == QMatrix.from_rows([[1, 0, 0], [0, 1, 0], [-1, 0, 1]])

    def test_involution_intertwines_the_loops(self):
        a_h = abelianized_matrix(FIBER_GENERATORS, MONODROMY_H)
        a_v = abelianized_matrix(FIBER_GENERATORS, MONODROMY_V)
        alpha = abelianized_matrix(FIBER_GENERATORS, ALPHA_FIBER)
        assert alpha @ alpha == QMatrix.identity(3)
        assert alpha @ a_h == a_v @ alpha

    def test_top_cohomology_of_punctured_pairs(self):
        # H^1 of the free group on the base loops, dual coefficients
        a_h = abelianized_matrix(FIBER_GENERATORS, MONODROMY_H)
        a_v = abelianized_matrix(FIBER_GENERATORS, MONODROMY_V)
        alpha = abelianized_matrix(FIBER_GENERATORS, ALPHA_FIBER)
        module = FreeGroupModule(
            contragredient(a_h), contragredient(a_v), contragredient(alpha)
        )
        result = h1_f2(module)
        assert result.dim == 5
        assert result.involution.trace() == 1
        # independent count: dim M + dim of the simultaneous fixed space
        assert fixed_space_dim(module) == 2
        assert result.dim == module.dim + fixed_space_dim(module)


class TestPuncturedTorusPairs:
    def test_graded_decomposition(self):
        d = datum("U2")
        gc = conf2_torus_minus_point_rank2(d)
        assert dec_by_degree(d, gc) == {
            0: "1",
            1: "2 ⊕ 2σ",
            2: "3 ⊕ 2σ",
        }

    def test_euler_characteristic(self):
        gc = conf2_torus_minus_point_rank2(datum("U2"))
        dims = gc.dims()
        assert (dims[0], dims[1], dims[2]) == (1, 4, 5)
        assert dims[0] - dims[1] + dims[2] == 2

    def test_rejects_other_data(self):
        for tag in ("S1xS1", "S1xSU2", "SU3", "Sp2"):
            with pytest.raises(UnsupportedDatum):
                conf2_torus_minus_point_rank2(datum(tag))


class TestTorusPairs:
    def test_u2_decomposition(self):
        d = datum("U2")
        assert dec_by_degree(d, conf2_torus(d)) == {
            0: "1",
            1: "2 ⊕ 2σ",
            2: "2 ⊕ 3σ",
            3: "1 ⊕ σ",
        }

    def test_sp2_decomposition(self):
        d = datum("Sp2")
        assert dec_by_degree(d, conf2_torus(d)) == {
            0: "1",
            1: "2d",
            2: "1 ⊕ a ⊕ b ⊕ 2c",
            3: "d",
        }

    def test_total_dimension(self):
        # pairs in a rank-r torus always total 2^r (r+1)
        for tag in ("S1xS1", "U2", "S1xSU2", "SU3", "Sp2"):
            assert conf2_torus(datum(tag)).total_dim() == 12


class TestTorusTriples:
    def test_u2_triples(self):
        d = datum("U2")
        assert dec_by_degree(d, conf3_torus_rank2(d)) == {
            0: "1",
            1: "3 ⊕ 3σ",
            2: "7 ⊕ 7σ",
            3: "7 ⊕ 7σ",
            4: "2 ⊕ 3σ",
        }

    def test_rejects_non_swap_data(self):
        with pytest.raises(UnsupportedDatum):
            conf3_torus_rank2(datum("Sp2"))


class TestCircle:
    def test_component_counts(self):
        for k in range(2, 9):
            summary = circle_conf(k)
            assert summary.components == factorial(k - 1)
            assert summary.betti == (summary.components, summary.components)

    def test_reflection_fixed_points(self):
        assert circle_conf(2).reflection_fixed == 1
        for k in range(3, 9):
            assert circle_conf(k).reflection_fixed == 0

    def test_orbit_counts(self):
        assert circle_conf(2).reflection_orbits == 1
        for k in range(3, 9):
            assert circle_conf(k).reflection_orbits == factorial(k - 1) // 2

    def test_closed_form_agrees_with_enumeration_at_boundary(self):
        # k = 8 is enumerated, k = 9 uses the closed form; both must obey
        # the same formulas
        eight = circle_conf(8)
        nine = circle_conf(9)
        assert eight.components == factorial(7)
        assert nine.components == factorial(8)
        assert eight.reflection_orbits == eight.components // 2
        assert nine.reflection_orbits == nine.components // 2
        assert nine.reflection_fixed == 0

    def test_needs_two_points(self):
        with pytest.raises(UnsupportedDatum):
            circle_conf(1)


class TestSU2:
    def test_single_element(self):
        # one element of SU2 commutes with itself: the whole group, a sphere
        assert su2_conf(1).betti == (1, 0, 0, 1)
        assert su2_conf(1).components == 1

    def test_pairs(self):
        assert su2_conf(2).betti == (1, 0, 0, 1)
        assert su2_conf(2).components == 1

    def test_higher_tuples(self):
        for k in range(3, 9):
            summary = su2_conf(k)
            count = factorial(k - 1) // 2
            assert summary.components == count
            assert summary.betti == (count, count, count, count)

    def test_needs_a_point(self):
        with pytest.raises(UnsupportedDatum):
            su2_conf(0)
