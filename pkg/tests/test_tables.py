"""Assembled tables, stability bounds, unordered pairs, verification."""

import pytest

from confab.tables import (
    REFERENCE_CONF3_U2,
    REFERENCE_TABLE2,
    REFERENCE_UNORDERED,
    TABLE2_TAGS,
    RankTooSmall,
    StabilityQuery,
    conf2_ring,
    conf2_ring_involution,
    conf_ab_table,
    first_cohomology_dim,
    shortcut_dims,
    stable_bound,
    unordered_conf2_dims,
    unordered_conf2_ring,
    verify_all,
)
from confab.rings import hilbert_series, invariant_subring_dims
from confab.weyl import LieFactor, UnsupportedDatum, WeylDatum, datum, symplectic


class TestTables:
    def test_pair_columns(self):
        for tag in TABLE2_TAGS:
            for convention in ("derived", "paper"):
                table = conf_ab_table(datum(tag), 2, convention)
                assert table.dims() == REFERENCE_TABLE2[tag][convention]

    def test_triples_for_u2(self):
        table = conf_ab_table(datum("U2"), 3)
        assert table.dims() == REFERENCE_CONF3_U2

    def test_rows_carry_the_full_decomposition(self):
        table = conf_ab_table(datum("Sp2"), 2)
        for row in table.rows:
            assert row.decomposition is not None
            parts = dict(row.decomposition)
            # invariant dimension is the trivial multiplicity
            assert parts.get("1", 0) == row.dimension

    def test_rows_end_at_the_last_nonzero_dimension(self):
        for tag in TABLE2_TAGS:
            table = conf_ab_table(datum(tag), 2)
            assert table.rows[-1].dimension > 0

    def test_euler_characteristic_vanishes(self):
        for tag in TABLE2_TAGS:
            assert conf_ab_table(datum(tag), 2).euler == 0
        assert conf_ab_table(datum("U2"), 3).euler == 0

    def test_unsupported_tuple_lengths(self):
        with pytest.raises(UnsupportedDatum):
            conf_ab_table(datum("U2"), 4)
        with pytest.raises(UnsupportedDatum):
            conf_ab_table(datum("Sp2"), 3)


class TestShortcut:
    def test_agrees_with_tables_everywhere(self):
        for tag in TABLE2_TAGS:
            for convention in ("derived", "paper"):
                d = datum(tag)
                assert shortcut_dims(d, 2, convention) == conf_ab_table(
                    d, 2, convention
                ).dims()

    def test_agrees_for_triples(self):
        assert shortcut_dims(datum("U2"), 3) == REFERENCE_CONF3_U2


class TestFirstCohomology:
    def test_closed_form(self):
        assert first_cohomology_dim(datum("U2"), 2) == 2
        assert first_cohomology_dim(datum("U2"), 3) == 3
        assert first_cohomology_dim(datum("S1xS1"), 2) == 4
        assert first_cohomology_dim(datum("SU3"), 2) == 0
        assert first_cohomology_dim(datum("Sp2"), 2) == 0

    def test_matches_table_entries(self):
        for tag in TABLE2_TAGS:
            expected = conf_ab_table(datum(tag), 2, "derived").rows[1]
            assert first_cohomology_dim(datum(tag), 2) == expected.dimension

    def test_rank_one_is_rejected(self):
        for tag in ("S1", "SU2", "Sp1"):
            with pytest.raises(RankTooSmall):
                first_cohomology_dim(datum(tag), 3)


class TestStability:
    def test_spot_values(self):
        assert stable_bound(StabilityQuery("sp", 3, 2)) == 5
        assert stable_bound(StabilityQuery("sp", 3, 9)) == 5
        assert stable_bound(StabilityQuery("u", 2, 9)) == 5
        assert stable_bound(StabilityQuery("su", 0, 3)) == 2
        assert stable_bound(StabilityQuery("u", 0, 2)) == 2

    def test_monotone_on_a_grid(self):
        for family in ("u", "su", "sp"):
            for k in range(1, 11):
                bounds = [
                    stable_bound(StabilityQuery(family, n, k))
                    for n in range(11)
                ]
                assert bounds == sorted(bounds)
            for n in range(11):
                by_k = [
                    stable_bound(StabilityQuery(family, n, k))
                    for k in range(1, 11)
                ]
                assert by_k == sorted(by_k)

    def test_validation(self):
        with pytest.raises(ValueError):
            StabilityQuery("so", 1, 2)
        with pytest.raises(ValueError):
            StabilityQuery("u", -1, 2)
        with pytest.raises(ValueError):
            StabilityQuery("u", 1, 0)

    def test_family_case_insensitive(self):
        assert stable_bound(StabilityQuery("SP", 3, 2)) == 5


class TestUnordered:
    def test_three_routes_agree(self):
        for tag in ("U2", "S1xSU2"):
            for convention in ("derived", "paper"):
                reference = REFERENCE_UNORDERED[tag][convention]
                fixed = invariant_subring_dims(
                    conf2_ring(tag, convention),
                    conf2_ring_involution(tag, convention),
                )
                model = unordered_conf2_dims(datum(tag), convention)
                closed = hilbert_series(
                    unordered_conf2_ring(tag, convention)
                )
                length = len(reference)
                pad = lambda dims: tuple(
                    dims[i] if i < len(dims) else 0 for i in range(length)
                )
                assert pad(fixed) == reference
                assert pad(model) == reference
                assert pad(closed) == reference

    def test_ring_series_match_ordered_tables(self):
        for tag in ("U2", "S1xSU2"):
            for convention in ("derived", "paper"):
                assert (
                    hilbert_series(conf2_ring(tag, convention))
                    == REFERENCE_TABLE2[tag][convention]
                )

    def test_other_groups_are_not_presented(self):
        with pytest.raises(UnsupportedDatum):
            conf2_ring("Sp2")
        with pytest.raises(UnsupportedDatum):
            unordered_conf2_dims(datum("SU3"))


def corrupt_symplectic_datum():
    """Degrees (1, 8) multiply to the group order but are not fundamental."""
    good = symplectic(2)
    bad = LieFactor(
        good.kind, good.tag, good.rank, (1, 8), good.pi1_rank, good.generators
    )
    return WeylDatum((bad,), tag="Sp2")


class TestVerify:
    def test_clean_run(self):
        report = verify_all()
        passed, failed, warned = report.counts()
        assert report.ok
        assert failed == 0
        assert warned == 1
        assert passed >= 40
        warn = [c for c in report.checks if c.status == "WARN"]
        assert warn[0].name == "s1xsu2-convention"

    def test_clean_run_paper_convention(self):
        report = verify_all("paper")
        _, failed, warned = report.counts()
        assert report.ok
        assert (failed, warned) == (0, 1)

    def test_corrupt_degrees_surface_as_failures(self):
        report = verify_all(data={"Sp2": corrupt_symplectic_datum()})
        assert not report.ok
        flag_check = next(
            c for c in report.checks if c.name == "flag-Sp2"
        )
        assert flag_check.status == "FAIL"
        assert "NonZeroRemainder" in flag_check.got
        # untouched columns still pass
        u2_check = next(c for c in report.checks if c.name == "table2-U2")
        assert u2_check.status == "PASS"

    def test_unknown_convention_rejected(self):
        with pytest.raises(ValueError):
            verify_all("folklore")
