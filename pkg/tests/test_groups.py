"""Finite matrix groups, class functions, and catalog decomposition."""

from fractions import Fraction

import pytest

from confab.exact import QMatrix
from confab.groups import (
    ClassFunction,
    NotACharacter,
    NotAHomomorphism,
    close_group,
    d8_catalog,
    decompose,
    format_decomposition,
    inner_product,
    matrix_rep_character,
    product_catalog,
    product_class_pairs,
    product_group,
    s3_catalog,
    trivial_catalog,
    trivial_group,
    z2_catalog,
)

SWAP = QMatrix.from_rows([[0, 1], [1, 0]])
FLIP = QMatrix.from_rows([[1, 0], [0, -1]])


def signed_permutation_group():
    return close_group([SWAP, FLIP])


def symmetric_3():
    s1 = QMatrix.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    s2 = QMatrix.from_rows([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    return close_group([s1, s2])


class TestClosure:
    def test_signed_permutation_group_order_eight(self):
        group = signed_permutation_group()
        assert group.order == 8
        assert group.elements[0] == QMatrix.identity(2)

    def test_class_partition(self):
        group = signed_permutation_group()
        assert group.class_sizes() == (1, 1, 2, 2, 2)
        # the identity class always comes first
        assert group.classes[0] == (0,)

    def test_symmetric_group_classes(self):
        group = symmetric_3()
        assert group.order == 6
        assert group.class_sizes() == (1, 2, 3)

    def test_generator_order_does_not_change_partition(self):
        forward = close_group([SWAP, FLIP])
        backward = close_group([FLIP, SWAP])
        assert set(forward.elements) == set(backward.elements)
        as_sets = lambda g: {
            frozenset(g.elements[i] for i in cls) for cls in g.classes
        }
        assert as_sets(forward) == as_sets(backward)

    def test_inverses(self):
        group = signed_permutation_group()
        for i, inv in enumerate(group.inverses):
            product = group.elements[i] @ group.elements[inv]
            assert product == QMatrix.identity(2)


class TestCatalogs:
    def test_orthonormality_is_enforced(self):
        group = signed_permutation_group()
        catalog = d8_catalog(group)
        for i, f in enumerate(catalog.chars):
            for j, g in enumerate(catalog.chars):
                expected = Fraction(1 if i == j else 0)
                assert inner_product(f, g) == expected

    def test_dimension_sum(self):
        catalog = d8_catalog(signed_permutation_group())
        assert sum(c.dim**2 for c in catalog.chars) == 8

    def test_two_dimensional_square_decomposes(self):
        group = signed_permutation_group()
        catalog = d8_catalog(group)
        d = catalog.by_label["d"]
        square = d * d
        assert decompose(square, catalog) == (
            ("1", 1),
            ("a", 1),
            ("b", 1),
            ("c", 1),
        )

    def test_symmetric_catalog(self):
        group = symmetric_3()
        catalog = s3_catalog(group)
        std = catalog.by_label["std"]
        assert std.dim == 2
        assert decompose(std * std, catalog) == (
            ("1", 1),
            ("std", 1),
            ("sgn", 1),
        )

    def test_decompose_rejects_non_characters(self):
        group = close_group([FLIP])
        catalog = z2_catalog(group)
        half = ClassFunction(group, (Fraction(1, 2), Fraction(1, 2)))
        with pytest.raises(NotACharacter):
            decompose(half, catalog)
        negative = ClassFunction(group, (Fraction(-1), Fraction(-1)))
        with pytest.raises(NotACharacter):
            decompose(negative, catalog)

    def test_format(self):
        assert format_decomposition(()) == "0"
        assert format_decomposition((("1", 2),)) == "2"
        assert format_decomposition((("σ", 1),)) == "σ"
        assert format_decomposition((("1", 1), ("σ", 3))) == "1 ⊕ 3σ"


class TestRepresentationCharacters:
    def test_character_from_matrices(self):
        group = close_group([FLIP])
        chi = matrix_rep_character(group, {0: QMatrix.identity(1),
                                           1: QMatrix.from_rows([[-1]])})
        assert chi.values == (Fraction(1), Fraction(-1))

    def test_non_homomorphism_rejected(self):
        group = close_group([FLIP])
        bad = {0: QMatrix.identity(1), 1: QMatrix.from_rows([[2]])}
        with pytest.raises(NotAHomomorphism):
            matrix_rep_character(group, bad)


class TestProducts:
    def test_product_orders_multiply(self):
        z2 = close_group([QMatrix.from_rows([[-1]])])
        product = product_group(z2, z2)
        assert product.order == 4
        assert product.dimension == 2
        assert len(product.classes) == 4

    def test_class_pairs_recover_factors(self):
        z2 = close_group([QMatrix.from_rows([[-1]])])
        product = product_group(z2, z2)
        pairs = product_class_pairs(product, z2, z2)
        assert sorted(pairs) == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_tensor_labels_join_when_both_nontrivial(self):
        z2 = close_group([QMatrix.from_rows([[-1]])])
        catalog = product_catalog(
            product_group(z2, z2), z2_catalog(z2), z2_catalog(z2)
        )
        assert catalog.labels == ("1⊗1", "1⊗σ", "σ⊗1", "σ⊗σ")

    def test_trivial_factor_keeps_bare_labels(self):
        z2 = close_group([QMatrix.from_rows([[-1]])])
        point = trivial_group(1)
        catalog = product_catalog(
            product_group(point, z2), trivial_catalog(point), z2_catalog(z2)
        )
        assert catalog.labels == ("1", "σ")
