"""Weyl group data for the supported compact-group families.

Supported factors: the circle, U(n), SU(n), Sp(n); a datum is a finite
product of factors named by a tag like "S1xSU2".  Each factor carries its
Weyl group as explicit integer matrices in the reflection representation:

- circle: trivial group on Q^1, no invariant degrees, fundamental-group rank 1
- U(n): permutation matrices on Q^n, degrees 1..n
- SU(n): the simple-root basis of the (n-1)-dimensional reflection
  representation, adjacent transpositions acting by s_i: a_i -> -a_i,
  a_(i+-1) -> a_(i+-1) + a_i
- Sp(n): signed permutation matrices on Q^n, degrees 2, 4, .., 2n

Cohomology enters through two graded characters: the exterior algebra of the
torus (coefficients of det(1 + t g), degree i in cohomological degree i) and
the coinvariant algebra of the flag manifold (the Molien quotient
prod(1 - q^d_i) / det(1 - q g), q^m in cohomological degree 2m).  The Molien
division must be exact; a nonzero remainder means the degree list is corrupt
and surfaces as NonZeroRemainder rather than silently wrong dimensions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exact import (
    QMatrix,
    RationalPolynomial,
    char_matrix_poly,
    poly_div_exact,
)
from .groups import (
    ClassFunction,
    FiniteMatrixGroup,
    GroupMismatch,
    IrreducibleCatalog,
    NotACharacter,
    close_group,
    d8_catalog,
    inner_product,
    product_catalog,
    product_group,
    s3_catalog,
    trivial_catalog,
    trivial_group,
    z2_catalog,
)

CONVENTIONS = ("derived", "paper")


class UnsupportedDatum(ValueError):
    """A tag or datum outside the supported product family."""


def _perm_transposition(n: int, i: int) -> QMatrix:
    # swap coordinates i and i+1 of Q^n
    rows = [[Fraction(1) if r == c else Fraction(0) for c in range(n)] for r in range(n)]
    rows[i][i] = rows[i + 1][i + 1] = Fraction(0)
    rows[i][i + 1] = rows[i + 1][i] = Fraction(1)
    return QMatrix.from_rows(rows)


def _root_reflection(n: int, i: int) -> QMatrix:
    # simple reflection s_i on the root basis of rank n; columns are images
    rows = [[Fraction(1) if r == c else Fraction(0) for c in range(n)] for r in range(n)]
    rows[i][i] = Fraction(-1)
    if i > 0:
        rows[i][i - 1] = Fraction(1)
    if i + 1 < n:
        rows[i][i + 1] = Fraction(1)
    return QMatrix.from_rows(rows)


def _last_sign_flip(n: int) -> QMatrix:
    rows = [[Fraction(1) if r == c else Fraction(0) for c in range(n)] for r in range(n)]
    rows[n - 1][n - 1] = Fraction(-1)
    return QMatrix.from_rows(rows)


@dataclass(frozen=True)
class LieFactor:
    """One factor of a supported product, with its Weyl group closed."""

    kind: str
    tag: str
    rank: int
    degrees: tuple[int, ...]
    pi1_rank: int
    generators: tuple[QMatrix, ...]

    def __post_init__(self):
        if self.kind == "circle" and self.degrees:
            raise UnsupportedDatum("a circle factor has no invariant degrees")
        if self.kind != "circle" and len(self.degrees) != self.rank:
            raise UnsupportedDatum("one invariant degree per rank required")
        if self.generators:
            group = close_group(self.generators)
        else:
            group = trivial_group(self.rank)
        if group.dimension != self.rank:
            raise UnsupportedDatum("Weyl matrices must act on Q^rank")
        product = 1
        for d in self.degrees:
            product *= d
        if self.kind != "circle" and product != group.order:
            raise UnsupportedDatum(
                f"invariant degrees {self.degrees} do not multiply to the "
                f"Weyl group order {group.order}"
            )
        # not a dataclass field: derived, cached, excluded from eq/repr
        object.__setattr__(self, "group", group)


def circle() -> LieFactor:
    return LieFactor("circle", "S1", 1, (), 1, ())


def unitary(n: int) -> LieFactor:
    if n < 1:
        raise UnsupportedDatum("U(n) needs n >= 1")
    gens = tuple(_perm_transposition(n, i) for i in range(n - 1))
    return LieFactor("unitary", f"U{n}", n, tuple(range(1, n + 1)), 1, gens)


def special_unitary(n: int) -> LieFactor:
    if n < 2:
        raise UnsupportedDatum("SU(n) needs n >= 2")
    rank = n - 1
    gens = tuple(_root_reflection(rank, i) for i in range(rank))
    return LieFactor(
        "special_unitary", f"SU{n}", rank, tuple(range(2, n + 1)), 0, gens
    )


def symplectic(n: int) -> LieFactor:
    if n < 1:
        raise UnsupportedDatum("Sp(n) needs n >= 1")
    gens = tuple(_perm_transposition(n, i) for i in range(n - 1)) + (
        _last_sign_flip(n),
    )
    return LieFactor(
        "symplectic",
        f"Sp{n}",
        n,
        tuple(2 * i for i in range(1, n + 1)),
        0,
        gens,
    )


_PART_PATTERN = re.compile(r"^(S1|SU(\d+)|SP(\d+)|U(\d+))$")


def parse_tag(tag: str) -> tuple[LieFactor, ...]:
    """Split a tag like "S1xSU2" into factors; case-insensitive."""
    parts = re.split(r"[xX]", tag.strip())
    factors = []
    for part in parts:
        m = _PART_PATTERN.match(part.strip().upper())
        if not m:
            raise UnsupportedDatum(f"unrecognized factor {part!r} in {tag!r}")
        if m.group(2):
            factors.append(special_unitary(int(m.group(2))))
        elif m.group(3):
            factors.append(symplectic(int(m.group(3))))
        elif m.group(4):
            factors.append(unitary(int(m.group(4))))
        else:
            factors.append(circle())
    if not factors:
        raise UnsupportedDatum(f"empty tag {tag!r}")
    return tuple(factors)


def _factor_catalog(group: FiniteMatrixGroup) -> IrreducibleCatalog | None:
    if group.order == 1:
        return trivial_catalog(group)
    if group.order == 2:
        return z2_catalog(group)
    try:
        if group.order == 6 and len(group.classes) == 3:
            return s3_catalog(group)
        if group.order == 8 and group.dimension == 2 and len(group.classes) == 5:
            return d8_catalog(group)
    except ValueError:
        return None
    return None


class WeylDatum:
    """A product of supported factors with its assembled Weyl group.

    The group is the block-diagonal direct product in factor order; element
    index is mixed-radix over the factor orders, so each assembled conjugacy
    class projects to a tuple of factor classes (``class_factor_classes``).
    The catalog is the tensor catalog when every factor's Weyl group has one
    (it always does up to rank-3 factors; larger factors still support
    invariant dimensions, just not named decompositions).
    """

    def __init__(self, factors: Sequence[LieFactor], tag: str | None = None):
        factors = tuple(factors)
        if not factors:
            raise UnsupportedDatum("a datum needs at least one factor")
        self.factors = factors
        self.tag = tag or "x".join(f.tag for f in factors)
        self.rank = sum(f.rank for f in factors)
        self.pi1_rank = sum(f.pi1_rank for f in factors)
        group = factors[0].group
        catalog = _factor_catalog(factors[0].group)
        for f in factors[1:]:
            next_group = product_group(group, f.group)
            next_cat = None
            f_cat = _factor_catalog(f.group)
            if catalog is not None and f_cat is not None:
                next_cat = product_catalog(next_group, catalog, f_cat)
            group, catalog = next_group, next_cat
        self.group = group
        self.catalog = catalog
        self.class_factor_classes = self._project_classes()

    def _project_classes(self) -> tuple[tuple[int, ...], ...]:
        radices = [f.group.order for f in self.factors]
        out = []
        for members in self.group.classes:
            idx = members[0]
            digits = []
            for radix in reversed(radices):
                idx, digit = divmod(idx, radix)
                digits.append(digit)
            digits.reverse()
            out.append(
                tuple(
                    f.group.class_of[d]
                    for f, d in zip(self.factors, digits)
                )
            )
        return tuple(out)

    def __repr__(self) -> str:
        return f"WeylDatum({self.tag!r}, rank={self.rank})"


@lru_cache(maxsize=None)
def datum(tag: str) -> WeylDatum:
    return WeylDatum(parse_tag(tag))


@dataclass(frozen=True)
class GradedCharacter:
    """A finitely supported sequence of class functions, one per degree."""

    group: FiniteMatrixGroup
    support: tuple[tuple[int, ClassFunction], ...]

    def __post_init__(self):
        merged: dict[int, ClassFunction] = {}
        for degree, cf in self.support:
            if degree < 0 or degree != int(degree):
                raise ValueError("degrees must be nonnegative integers")
            if cf.group != self.group:
                raise GroupMismatch("graded piece over a foreign group")
            if degree in merged:
                merged[degree] = merged[degree] + cf
            else:
                merged[degree] = cf
        cleaned = tuple(
            (d, merged[d]) for d in sorted(merged) if not merged[d].is_zero()
        )
        object.__setattr__(self, "support", cleaned)

    @classmethod
    def unit(cls, group: FiniteMatrixGroup) -> "GradedCharacter":
        return cls(group, ((0, ClassFunction.trivial(group)),))

    @classmethod
    def from_dict(
        cls, group: FiniteMatrixGroup, pieces: dict[int, ClassFunction]
    ) -> "GradedCharacter":
        return cls(group, tuple(pieces.items()))

    @property
    def top(self) -> int:
        return self.support[-1][0] if self.support else -1

    def degrees(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.support)

    def piece(self, degree: int) -> ClassFunction:
        for d, cf in self.support:
            if d == degree:
                return cf
        return ClassFunction.zero(self.group)

    def dims(self) -> dict[int, int]:
        """Total dimension per degree, 0..top inclusive."""
        out = {}
        for degree in range(self.top + 1):
            value = self.piece(degree).dim
            if value.denominator != 1:
                raise NotACharacter(f"non-integral dimension in degree {degree}")
            out[degree] = int(value)
        return out

    def total_dim(self) -> int:
        return sum(self.dims().values())


def kunneth(a: GradedCharacter, b: GradedCharacter) -> GradedCharacter:
    """Graded tensor product: degreewise convolution of class functions."""
    if a.group != b.group:
        raise GroupMismatch("tensor of graded characters over different groups")
    pieces: list[tuple[int, ClassFunction]] = []
    for d1, c1 in a.support:
        for d2, c2 in b.support:
            pieces.append((d1 + d2, c1 * c2))
    return GradedCharacter(a.group, tuple(pieces))


def torus_character(d: WeylDatum) -> GradedCharacter:
    """Exterior algebra on degree-1 classes: coefficients of det(1 + t g)."""
    group = d.group
    polys = [
        char_matrix_poly(group.elements[members[0]], 1)
        for members in group.classes
    ]
    pieces = []
    for degree in range(d.rank + 1):
        pieces.append(
            (
                degree,
                ClassFunction(
                    group, tuple(p.coefficient(degree) for p in polys)
                ),
            )
        )
    return GradedCharacter(group, tuple(pieces))


def _factor_flag_values(
    factor: LieFactor, convention: str, has_noncircle: bool
) -> dict[int, tuple[Fraction, ...]]:
    """Cohomology of one factor's flag piece, per factor class, by degree."""
    if factor.kind == "circle":
        # the quotient of a circle by its maximal torus is a point; the
        # alternative convention treats the circle factor as carried along,
        # contributing a degree-1 class, but only in genuinely mixed products
        values = {0: (Fraction(1),)}
        if convention == "paper" and has_noncircle:
            values[1] = (Fraction(1),)
        return values
    numerator = RationalPolynomial.one()
    for deg in factor.degrees:
        numerator = numerator * (
            RationalPolynomial.one()
            + RationalPolynomial.monomial(deg, -1)
        )
    quotients = [
        poly_div_exact(
            numerator, char_matrix_poly(factor.group.elements[members[0]], -1)
        )
        for members in factor.group.classes
    ]
    top = max(q.degree for q in quotients)
    return {
        2 * m: tuple(q.coefficient(m) for q in quotients)
        for m in range(top + 1)
    }


def flag_character(d: WeylDatum, convention: str = "derived") -> GradedCharacter:
    """Coinvariant-algebra character of the product flag manifold.

    Molien quotient per factor class, assembled across factors by outer
    tensor.  ``convention`` only affects circle factors inside mixed
    products; see ``_factor_flag_values``.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    group = d.group
    n_classes = len(group.classes)
    has_noncircle = any(f.kind != "circle" for f in d.factors)
    acc: dict[int, list[Fraction]] = {0: [Fraction(1)] * n_classes}
    for fi, factor in enumerate(d.factors):
        factor_values = _factor_flag_values(factor, convention, has_noncircle)
        new: dict[int, list[Fraction]] = {}
        for deg, values in acc.items():
            for fdeg, fvals in factor_values.items():
                target = new.setdefault(
                    deg + fdeg, [Fraction(0)] * n_classes
                )
                for ci in range(n_classes):
                    fc = d.class_factor_classes[ci][fi]
                    target[ci] += values[ci] * fvals[fc]
        acc = new
    pieces = tuple(
        (deg, ClassFunction(group, tuple(vals)))
        for deg, vals in sorted(acc.items())
    )
    return GradedCharacter(group, pieces)


def invariant_dims(gc: GradedCharacter) -> dict[int, int]:
    """Dimension of the invariant part per degree, 0..top inclusive.

    Multiplicities of the trivial character; a non-integer or negative
    pairing means the input was not a genuine character.
    """
    trivial = ClassFunction.trivial(gc.group)
    out = {}
    for degree in range(gc.top + 1):
        mult = inner_product(gc.piece(degree), trivial)
        if mult.denominator != 1 or mult < 0:
            raise NotACharacter(
                f"invariant multiplicity {mult} in degree {degree}"
            )
        out[degree] = int(mult)
    return out
