"""Finite graded-commutative rings presented by square-zero generators.

Every ring here is F[g_1, .., g_n] modulo graded commutativity, the squares
of all generators, and a list of forbidden generator pairs whose product is
declared zero.  A linear basis is therefore the squarefree monomials that
avoid forbidden pairs, so the whole ring is finite dimensional and elements
are plain dictionaries monomial -> coefficient.

Monomials are ascending tuples of generator indices.  Reordering a product
into ascending form picks up the usual Koszul sign: each adjacent swap of
generators of degrees p and q contributes (-1)^(p*q).

Automorphisms are given on generators (images must be degree-preserving
linear combinations of generators) and extended multiplicatively; their
matrices per degree drive fixed-subring dimension counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .exact import QMatrix, rank

Monomial = tuple[int, ...]
Element = dict[Monomial, Fraction]


class NotInvolution(ValueError):
    """An automorphism expected to square to the identity does not."""


@dataclass(frozen=True)
class RingPresentation:
    """Generators with degrees, plus index pairs whose product vanishes."""

    generators: tuple[tuple[str, int], ...]
    forbidden: tuple[tuple[int, int], ...]

    def __post_init__(self):
        labels = [label for label, _ in self.generators]
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate generator labels: {labels}")
        for label, degree in self.generators:
            if degree < 1:
                raise ValueError(f"generator {label} needs positive degree")
        n = len(self.generators)
        cleaned = []
        for i, j in self.forbidden:
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise ValueError(f"bad forbidden pair ({i}, {j})")
            cleaned.append((min(i, j), max(i, j)))
        object.__setattr__(self, "forbidden", tuple(sorted(set(cleaned))))

    @classmethod
    def build(
        cls,
        generators: Sequence[tuple[str, int]],
        forbidden_labels: Iterable[tuple[str, str]] = (),
    ) -> "RingPresentation":
        index = {label: i for i, (label, _) in enumerate(generators)}
        pairs = []
        for l1, l2 in forbidden_labels:
            if l1 not in index or l2 not in index:
                raise ValueError(f"forbidden pair uses unknown label ({l1}, {l2})")
            pairs.append((index[l1], index[l2]))
        return cls(tuple(generators), tuple(pairs))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.generators)

    def index_of(self, label: str) -> int:
        for i, (name, _) in enumerate(self.generators):
            if name == label:
                return i
        raise KeyError(label)

    def degree_of(self, monomial: Monomial) -> int:
        return sum(self.generators[i][1] for i in monomial)

    def monomial_label(self, monomial: Monomial) -> str:
        if not monomial:
            return "1"
        return "".join(self.generators[i][0] for i in monomial)

    def to_payload(self) -> dict:
        return {
            "generators": [
                {"label": label, "degree": degree}
                for label, degree in self.generators
            ],
            "forbidden": [
                [self.generators[i][0], self.generators[j][0]]
                for i, j in self.forbidden
            ],
        }

    @classmethod
    def from_payload(cls, payload: Mapping) -> "RingPresentation":
        generators = [
            (entry["label"], int(entry["degree"]))
            for entry in payload["generators"]
        ]
        forbidden = [(pair[0], pair[1]) for pair in payload["forbidden"]]
        return cls.build(generators, forbidden)


def normalize_product(
    pres: RingPresentation, factors: Sequence[int]
) -> tuple[Fraction, Monomial] | None:
    """Sort a product of generators into a basis monomial with its sign.

    Returns None when the product is zero: a repeated generator or a
    forbidden pair.
    """
    seq = list(factors)
    sign = 1
    # insertion sort, tracking Koszul signs of adjacent swaps
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            d1 = pres.generators[seq[j - 1]][1]
            d2 = pres.generators[seq[j]][1]
            if (d1 * d2) % 2 == 1:
                sign = -sign
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            j -= 1
    for a, b in zip(seq, seq[1:]):
        if a == b:
            return None
    forbidden = set(pres.forbidden)
    for a, b in combinations(seq, 2):
        if (a, b) in forbidden:
            return None
    return Fraction(sign), tuple(seq)


def monomial_basis(pres: RingPresentation) -> dict[int, tuple[Monomial, ...]]:
    """All basis monomials bucketed by degree; degree 0 holds the empty one."""
    n = len(pres.generators)
    forbidden = set(pres.forbidden)
    buckets: dict[int, list[Monomial]] = {0: [()]}
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            if any(pair in forbidden for pair in combinations(combo, 2)):
                continue
            buckets.setdefault(pres.degree_of(combo), []).append(combo)
    return {deg: tuple(sorted(monos)) for deg, monos in sorted(buckets.items())}


def hilbert_series(pres: RingPresentation) -> tuple[int, ...]:
    """Dimensions per degree from 0 through the top nonzero degree."""
    buckets = monomial_basis(pres)
    top = max(buckets)
    return tuple(len(buckets.get(d, ())) for d in range(top + 1))


def add_elements(a: Element, b: Element) -> Element:
    out = dict(a)
    for mono, coef in b.items():
        total = out.get(mono, Fraction(0)) + coef
        if total:
            out[mono] = total
        else:
            out.pop(mono, None)
    return out


def scale_element(a: Element, value) -> Element:
    value = Fraction(value)
    if not value:
        return {}
    return {mono: coef * value for mono, coef in a.items()}


def element_product(pres: RingPresentation, a: Element, b: Element) -> Element:
    out: Element = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            normalized = normalize_product(pres, m1 + m2)
            if normalized is None:
                continue
            sign, mono = normalized
            total = out.get(mono, Fraction(0)) + c1 * c2 * sign
            if total:
                out[mono] = total
            else:
                out.pop(mono, None)
    return out


def element_from_terms(
    pres: RingPresentation, terms: Sequence[tuple[object, Sequence[str]]]
) -> Element:
    """Build an element from (coefficient, [labels in product order]) terms."""
    out: Element = {}
    for coef, labels in terms:
        coef = Fraction(coef)
        normalized = normalize_product(
            pres, [pres.index_of(label) for label in labels]
        )
        if normalized is None:
            continue
        sign, mono = normalized
        total = out.get(mono, Fraction(0)) + coef * sign
        if total:
            out[mono] = total
        else:
            out.pop(mono, None)
    return out


def element_degree(pres: RingPresentation, element: Element) -> int | None:
    """The common degree of a homogeneous element, None for the zero element."""
    degrees = {pres.degree_of(mono) for mono in element}
    if not degrees:
        return None
    if len(degrees) > 1:
        raise ValueError(f"element is not homogeneous: degrees {sorted(degrees)}")
    return degrees.pop()


@dataclass(frozen=True)
class GeneratorAutomorphism:
    """A ring map given by degree-preserving images of the generators.

    ``images`` maps a generator label to a tuple of (coefficient, label)
    terms; generators without an entry map to themselves.
    """

    images: tuple[tuple[str, tuple[tuple[Fraction, str], ...]], ...]

    @classmethod
    def build(
        cls, images: Mapping[str, Sequence[tuple[object, str]]]
    ) -> "GeneratorAutomorphism":
        packed = tuple(
            (source, tuple((Fraction(c), target) for c, target in terms))
            for source, terms in images.items()
        )
        return cls(packed)

    def image_of(self, pres: RingPresentation, label: str) -> Element:
        for source, terms in self.images:
            if source == label:
                degree = pres.generators[pres.index_of(label)][1]
                out: Element = {}
                for coef, target in terms:
                    idx = pres.index_of(target)
                    if pres.generators[idx][1] != degree:
                        raise ValueError(
                            f"image of {label} is not degree-preserving"
                        )
                    out = add_elements(out, {(idx,): coef})
                return out
        return {(pres.index_of(label),): Fraction(1)}

    def apply(self, pres: RingPresentation, element: Element) -> Element:
        out: Element = {}
        for mono, coef in element.items():
            image: Element = {(): Fraction(1)}
            for idx in mono:
                image = element_product(
                    pres, image, self.image_of(pres, pres.generators[idx][0])
                )
            out = add_elements(out, scale_element(image, coef))
        return out


def action_matrices(
    pres: RingPresentation, auto: GeneratorAutomorphism
) -> dict[int, QMatrix]:
    """Matrix of the automorphism on each degree's monomial basis."""
    buckets = monomial_basis(pres)
    out = {}
    for degree, monos in buckets.items():
        position = {mono: i for i, mono in enumerate(monos)}
        columns = []
        for mono in monos:
            image = auto.apply(pres, {mono: Fraction(1)})
            col = [Fraction(0)] * len(monos)
            for target, coef in image.items():
                if target not in position:
                    raise ValueError(
                        "automorphism image left the degree's basis"
                    )
                col[position[target]] = coef
            columns.append(col)
        out[degree] = QMatrix.from_rows(
            [[columns[j][i] for j in range(len(monos))] for i in range(len(monos))]
        )
    return out


def invariant_subring_dims(
    pres: RingPresentation,
    autos: GeneratorAutomorphism | Sequence[GeneratorAutomorphism],
) -> tuple[int, ...]:
    """Dimension per degree of the simultaneous fixed subspace.

    Each automorphism must be an involution (their matrices square to the
    identity in every degree); the fixed space is the joint kernel of the
    shifted actions, which covers the group they generate.
    """
    if isinstance(autos, GeneratorAutomorphism):
        autos = (autos,)
    per_auto = [action_matrices(pres, auto) for auto in autos]
    buckets = monomial_basis(pres)
    top = max(buckets)
    dims = []
    for degree in range(top + 1):
        monos = buckets.get(degree, ())
        if not monos:
            dims.append(0)
            continue
        size = len(monos)
        eye = QMatrix.identity(size)
        stacked_rows: list[list[Fraction]] = []
        for matrices in per_auto:
            m = matrices[degree]
            if m.mul(m) != eye:
                raise NotInvolution(
                    f"automorphism does not square to 1 in degree {degree}"
                )
            stacked_rows.extend(m.sub(eye).to_rows())
        if stacked_rows:
            dims.append(size - rank(QMatrix.from_rows(stacked_rows)))
        else:
            dims.append(size)
    return tuple(dims)
