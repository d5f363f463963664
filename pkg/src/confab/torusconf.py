"""Graded characters of torus configuration spaces.

``conf2_torus`` handles ordered pairs of distinct torus points: translating
the first point to the identity gives T x (T - {1}), and T - {1} carries the
exterior classes of T below the top degree (the fundamental class dies when a
point is removed), all respected by the Weyl action.  So the graded character
is a Kunneth product of the full exterior character with its truncation.

``conf2_torus_minus_point_rank2`` is the rank-2 input to ordered triples:
Conf_3(T) is T x Conf_2(T - {1}), and Conf_2(T - {1}) fibers over T - {1}
with fiber a twice-punctured torus.  Degree 0 is trivial; degree 1 comes from
abelianizing the surface-braid presentation of the fundamental group; degree
2 is H^1 of the free group on the base loops h, v with coefficients in the
dual of fiber homology, the monodromy being conjugation words.  The
coordinate-swap symmetry of the torus acts through all three degrees and its
traces are what the Kunneth consumer needs.

``circle_conf`` and ``su2_conf`` summarize the degenerate rank-1 picture,
where configuration spaces fall apart into many components and first
cohomology stops matching the fundamental-group rank.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .exact import QMatrix
from .freegroup import (
    FreeGroupModule,
    abelianized_matrix,
    abelianized_relation_rows,
    contragredient,
    coordinate_quotient,
    h1_f2,
)
from .groups import ClassFunction
from .weyl import (
    GradedCharacter,
    UnsupportedDatum,
    WeylDatum,
    kunneth,
    torus_character,
)

# loops on the twice-punctured torus: the two coordinate circles and a loop
# around the moving puncture
FIBER_GENERATORS = ("h~", "v~", "r~")

# action of the base loops on fiber homology, read off from conjugation
MONODROMY_H = {"h~": "h~", "v~": "r~ h~ v~ h~^-1", "r~": "r~"}
MONODROMY_V = {"h~": "r~^-1 v~ h~ v~^-1", "v~": "v~", "r~": "r~"}

# the coordinate swap of the torus exchanges the two circles and reverses
# the local orientation at the puncture
ALPHA_FIBER = {"h~": "v~", "v~": "h~", "r~": "r~^-1"}

# surface-braid presentation of pi_1(Conf_2(T - {1})) for the rank-2 torus:
# a_j, b_j are the coordinate loops of the j-th point, B23 the braiding
BIRMAN_GENERATORS = ("B23", "a2", "a3", "b2", "b3")
BIRMAN_RELATORS = (
    "a2 a3 a2^-1 a3^-1",
    "b2 b3 b2^-1 b3^-1",
    "B23 a2 B23^-1 a2^-1",
    "B23 a3 B23^-1 a3^-1",
    "B23 b2 B23^-1 b2^-1",
    "B23 b3 B23^-1 b3^-1",
    "b3 a3 a2^-1 b3^-1 a2 a3^-1 B23^-1",
    "b3 b2^-1 a3 b2 b3^-1 a3^-1 B23^-1",
)
ALPHA_BIRMAN = {
    "B23": "B23^-1",
    "a2": "b2",
    "a3": "b3",
    "b2": "a2",
    "b3": "a3",
}

_SWAP = QMatrix.from_rows([[0, 1], [1, 0]])


def conf2_torus(d: WeylDatum) -> GradedCharacter:
    """Character of ordered pairs of distinct points in the torus of ``d``."""
    full = torus_character(d)
    truncated = GradedCharacter(
        d.group,
        tuple((deg, cf) for deg, cf in full.support if deg < d.rank),
    )
    return kunneth(full, truncated)


def _require_rank2_swap(d: WeylDatum) -> None:
    if d.rank != 2 or d.group.order != 2 or d.group.elements[1] != _SWAP:
        raise UnsupportedDatum(
            "punctured-torus configuration data exists only for the rank-2 "
            "torus with coordinate-swap symmetry"
        )


@lru_cache(maxsize=None)
def conf2_torus_minus_point_rank2(d: WeylDatum) -> GradedCharacter:
    """Character of pairs of distinct points in the punctured rank-2 torus.

    Values are (dimension, swap trace) per degree.  Requires the datum whose
    Weyl element is the coordinate swap; the derivation of the monodromy
    words is written in that basis.
    """
    _require_rank2_swap(d)
    group = d.group
    h0 = ClassFunction.trivial(group)

    # degree 1: abelianized presentation; only the braiding generator dies
    rows = abelianized_relation_rows(BIRMAN_GENERATORS, BIRMAN_RELATORS)
    quotient = coordinate_quotient(len(BIRMAN_GENERATORS), rows)
    alpha_h1 = quotient.induced(
        abelianized_matrix(BIRMAN_GENERATORS, ALPHA_BIRMAN)
    )
    h1 = ClassFunction(
        group, (Fraction(quotient.dim), contragredient(alpha_h1).trace())
    )

    # degree 2: H^1 of the free group on the base loops with coefficients in
    # the dual of fiber homology
    a_h = abelianized_matrix(FIBER_GENERATORS, MONODROMY_H)
    a_v = abelianized_matrix(FIBER_GENERATORS, MONODROMY_V)
    alpha = abelianized_matrix(FIBER_GENERATORS, ALPHA_FIBER)
    module = FreeGroupModule(
        contragredient(a_h), contragredient(a_v), contragredient(alpha)
    )
    top = h1_f2(module)
    h2 = ClassFunction(
        group, (Fraction(top.dim), top.involution.trace())
    )
    return GradedCharacter(group, ((0, h0), (1, h1), (2, h2)))


def conf3_torus_rank2(d: WeylDatum) -> GradedCharacter:
    """Character of ordered triples of distinct points in the rank-2 torus."""
    _require_rank2_swap(d)
    return kunneth(torus_character(d), conf2_torus_minus_point_rank2(d))


@dataclass(frozen=True)
class CircleConfSummary:
    """Configurations of k distinct points on the circle.

    The space deformation retracts to (k-1)! disjoint circles, one per
    cyclic order of the points.  Inversion of the circle reverses cyclic
    orders; it is recorded because the rank-1 Weyl action identifies
    components in pairs.
    """

    k: int
    components: int
    betti: tuple[int, int]
    reflection_fixed: int
    reflection_orbits: int


def circle_conf(k: int) -> CircleConfSummary:
    if k < 2:
        raise UnsupportedDatum("need at least two points on the circle")
    components = math.factorial(k - 1)
    if k <= 8:
        # components are slot assignments: point i+1 sits at counterclockwise
        # slot sigma(i) after point 1; inversion sends slot j to slot k - j
        fixed = 0
        seen = set()
        orbits = 0
        for sigma in permutations(range(1, k)):
            mirror = tuple(k - s for s in sigma)
            if mirror == sigma:
                fixed += 1
            key = min(sigma, mirror)
            if key not in seen:
                seen.add(key)
                orbits += 1
    else:
        # reversal is free once k > 2: a fixed order would need 2s = k at
        # every position, impossible for a bijection on more than one letter
        fixed = 0
        orbits = components // 2
    return CircleConfSummary(
        k, components, (components, components), fixed, orbits
    )


@dataclass(frozen=True)
class SU2ConfSummary:
    """Commuting k-tuples of pairwise-distinct elements in the rank-1 group.

    Commuting tuples land in a common maximal circle, so components follow
    the circle picture modulo the Weyl inversion.  Each freely identified
    pair of circle components contributes a twisted product of the 2-sphere
    with a circle; an inversion-fixed component keeps only the invariant
    classes, which is a 3-sphere pattern.
    """

    k: int
    components: int
    betti: tuple[int, int, int, int]


def su2_conf(k: int) -> SU2ConfSummary:
    if k < 1:
        raise UnsupportedDatum("need at least one point")
    if k == 1:
        # the group itself
        return SU2ConfSummary(1, 1, (1, 0, 0, 1))
    circle = circle_conf(k)
    fixed = circle.reflection_fixed
    pairs = (circle.components - fixed) // 2
    return SU2ConfSummary(
        k,
        fixed + pairs,
        (fixed + pairs, pairs, pairs, fixed + pairs),
    )
