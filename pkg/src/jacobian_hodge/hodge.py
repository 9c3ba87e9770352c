"""Identification of primitive Hodge pieces with graded Jacobian-ring pieces.

The middle primitive cohomology of a smooth degree-d hypersurface of
dimension n splits into pieces indexed by q = 0..n, and the piece of index
q is isomorphic to the ring piece R^{t(q)} with t(q) = (q+1)d - (n+2).  A
class is handled through a degree-t(q) polynomial representative P (the
meromorphic form it represents has pole order q+1; the volume form in that
representative is an implicit normalization and is never materialized).
The identification used here is the bare normal-form map; all constants in
the package are relative to that choice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeMismatchError, InputError
from .jacobian import JacobianRing, RingElement
from .poly import GradedPolynomial, with_degree


def hodge_piece_degree(n: int, d: int, q: int) -> int:
    """Ring degree t(q) = (q+1)d - (n+2) of the Hodge piece of index q."""
    if not 0 <= q <= n:
        raise InputError(f"Hodge index {q} out of range 0..{n}")
    return (q + 1) * d - (n + 2)


@dataclass(frozen=True)
class HodgeDegreeMap:
    """The degree bookkeeping q -> t(q) for one (n, d)."""

    n: int
    d: int

    def t(self, q: int) -> int:
        return hodge_piece_degree(self.n, self.d, q)

    @property
    def sigma(self) -> int:
        return (self.n + 2) * (self.d - 2)

    def degrees(self) -> list[int]:
        return [self.t(q) for q in range(self.n + 1)]


@dataclass(frozen=True)
class PrimitiveHodgeNumbers:
    """Dimensions h_q of the primitive Hodge pieces, q = 0..n."""

    n: int
    d: int
    numbers: tuple[int, ...]

    def __iter__(self):
        return iter(self.numbers)

    def __getitem__(self, q: int) -> int:
        return self.numbers[q]


@dataclass(frozen=True)
class ResidueClass:
    """A primitive cohomology class of Hodge index q, held as a ring element.

    Indices above n can only arise as clipped zero classes (see the jet
    module); such classes carry an empty coordinate tuple.
    """

    q: int
    element: RingElement

    def is_zero(self) -> bool:
        return self.element.is_zero()


def degree_map(ring: JacobianRing) -> HodgeDegreeMap:
    return HodgeDegreeMap(ring.dim_variety, ring.degree)


def primitive_hodge_numbers(ring: JacobianRing) -> PrimitiveHodgeNumbers:
    """h_q = dim R^{t(q)} for q = 0..n; requires a smooth hypersurface."""
    ring.require_smooth()
    tmap = degree_map(ring)
    dims = tuple(ring.dim(tmap.t(q)) for q in range(tmap.n + 1))
    return PrimitiveHodgeNumbers(tmap.n, tmap.d, dims)


def _class_of(ring: JacobianRing, P: GradedPolynomial, q: int) -> ResidueClass:
    """Build a class without range-checking q; q > n yields the zero class."""
    n = ring.dim_variety
    expected = (q + 1) * ring.degree - (n + 2)
    if P.is_zero():
        P = with_degree(P, expected)
    elif P.degree != expected:
        raise DegreeMismatchError(
            f"representative has degree {P.degree}, expected t({q}) = {expected}"
        )
    if q > n:
        return ResidueClass(q, RingElement(expected, (), ring.field))
    return ResidueClass(q, ring.normal_form(P))


def residue_class(ring: JacobianRing, P: GradedPolynomial, q: int) -> ResidueClass:
    """The class of index q represented by P; deg P must equal t(q)."""
    ring.require_smooth()
    if not 0 <= q <= ring.dim_variety:
        raise InputError(f"Hodge index {q} out of range 0..{ring.dim_variety}")
    return _class_of(ring, P, q)
