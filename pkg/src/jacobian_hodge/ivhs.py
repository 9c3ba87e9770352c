"""First-order deformation operators and the second fundamental form.

A degree-d deformation direction g acts on the Hodge pieces through its
class [g] in R^d: the block at index q is the matrix of

    [P]  |->  -(q+1) * [g*P] :  R^{t(q)} -> R^{t(q+1)}

in standard-monomial bases.  Composing two such operators lands two steps
down the Hodge filtration, and the second fundamental form of directions
u, v is exactly that composition:

    II(u, v) block at q:   [P] |-> (q+1)(q+2) * [u*v*P] : R^{t(q)} -> R^{t(q+2)}

which is symmetric in (u, v) because the ring is commutative.  With the
coefficient conventions above the identity II(u,v) = M(v) o M(u) holds
with constant exactly 1; ``raw=True`` drops the combinatorial factors and
returns plain multiplication matrices.

Blocks with a zero-dimensional source or target are stored as empty
matrices rather than omitted, so shape assertions stay total.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DegreeMismatchError,
    DimensionMismatchError,
    InputError,
    InternalInvariantError,
)
from .hodge import degree_map
from .jacobian import JacobianRing, RingElement
from .linalg import ExactMatrix, mat_mul, rank
from .poly import GradedPolynomial, convert_field, monomial_polynomial, multiply, with_degree


@dataclass(frozen=True)
class TangentVector:
    """A first-order deformation direction and its class in R^d."""

    polynomial: GradedPolynomial
    reduced: RingElement


def tangent_vector(ring: JacobianRing, g: GradedPolynomial) -> TangentVector:
    g = _check_direction(ring, g)
    return TangentVector(g, ring.normal_form(g))


def _check_direction(ring: JacobianRing, g) -> GradedPolynomial:
    if isinstance(g, TangentVector):
        g = g.polynomial
    if g.nvars != ring.nvars:
        raise InputError(f"direction in {g.nvars} variables vs ring in {ring.nvars}")
    if g.is_zero():
        return with_degree(convert_field(g, ring.field), ring.degree)
    if g.degree != ring.degree:
        raise DegreeMismatchError(
            f"deformation direction must have degree {ring.degree}, got {g.degree}"
        )
    return convert_field(g, ring.field)


@dataclass(frozen=True)
class IVHSOperator:
    """Blocks of the first-order action: block q maps R^{t(q)} to R^{t(q+1)}."""

    n: int
    degrees: tuple[int, ...]
    blocks: tuple[ExactMatrix, ...]

    def block(self, q: int) -> ExactMatrix:
        if not 0 <= q < self.n:
            raise InputError(f"block index {q} out of range 0..{self.n - 1}")
        return self.blocks[q]

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks)

    def as_endomorphism(self) -> "GradedEndomorphism":
        return GradedEndomorphism(
            self.n, {(q, q + 1): b for q, b in enumerate(self.blocks)}
        )


@dataclass(frozen=True)
class GradedEndomorphism:
    """A block endomorphism of the Hodge diamond, keyed by (source, target) index."""

    n: int
    blocks: dict

    def block(self, q_src: int, q_dst: int) -> ExactMatrix | None:
        return self.blocks.get((q_src, q_dst))

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks.values())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedEndomorphism)
            and self.n == other.n
            and self.blocks == other.blocks
        )


def block_degrees(e: GradedEndomorphism) -> set[int]:
    """Hodge-index shifts q_dst - q_src over the nonzero blocks of e."""
    return {qd - qs for (qs, qd), b in e.blocks.items() if not b.is_zero()}


def _multiplication_block(ring: JacobianRing, w: GradedPolynomial, src_degree: int,
                          dst_degree: int, factor) -> ExactMatrix:
    """Matrix of [P] |-> factor * [w*P] from R^src_degree to R^dst_degree."""
    fld = ring.field
    src = ring.piece(src_degree)
    dst = ring.piece(dst_degree)
    factor = fld.coerce(factor)
    cols = []
    for m in src.std_monomials:
        image = ring.normal_form(multiply(monomial_polynomial(m, fld), w))
        cols.append([fld.mul(factor, c) for c in image.coords])
    entries = [[cols[j][i] for j in range(src.dim)] for i in range(dst.dim)]
    return ExactMatrix(dst.dim, src.dim, entries, fld)


def ivhs_operator(ring: JacobianRing, g, raw: bool = False) -> IVHSOperator:
    """The first-order action of direction g, one block per q = 0..n-1.

    The block at q carries the coefficient -(q+1); ``raw`` omits it and
    returns bare multiplication-by-[g] matrices.  The operator depends only
    on the class [g] in R^d.
    """
    ring.require_smooth()
    g = _check_direction(ring, g)
    tmap = degree_map(ring)
    blocks = []
    for q in range(tmap.n):
        factor = 1 if raw else -(q + 1)
        blocks.append(
            _multiplication_block(ring, g, tmap.t(q), tmap.t(q + 1), factor)
        )
    return IVHSOperator(tmap.n, tuple(tmap.degrees()), tuple(blocks))


def compose_ivhs(a: IVHSOperator, b: IVHSOperator) -> GradedEndomorphism:
    """The composition a o b, landing two steps down: blocks (q -> q+2)."""
    if a.n != b.n or a.degrees != b.degrees:
        raise DimensionMismatchError("operators live on different Hodge diamonds")
    blocks = {}
    for q in range(a.n - 1):
        blocks[(q, q + 2)] = mat_mul(a.block(q + 1), b.block(q))
    return GradedEndomorphism(a.n, blocks)


def second_fundamental_form(ring: JacobianRing, u, v, raw: bool = False) -> GradedEndomorphism:
    """II(u, v): blocks (q -> q+2) of [P] |-> (q+1)(q+2) * [u*v*P].

    Symmetric in (u, v), and equal to compose_ivhs(ivhs_operator(v),
    ivhs_operator(u)) block for block.  ``raw`` omits the (q+1)(q+2)
    factors.
    """
    ring.require_smooth()
    u = _check_direction(ring, u)
    v = _check_direction(ring, v)
    w = multiply(u, v)
    tmap = degree_map(ring)
    blocks = {}
    for q in range(tmap.n - 1):
        factor = 1 if raw else (q + 1) * (q + 2)
        blocks[(q, q + 2)] = _multiplication_block(
            ring, w, tmap.t(q), tmap.t(q + 2), factor
        )
    return GradedEndomorphism(tmap.n, blocks)


def duality_pairing_matrix(ring: JacobianRing, k: int) -> ExactMatrix:
    """Matrix of the multiplication pairing R^k x R^{sigma-k} -> R^sigma.

    The socle is one-dimensional for a smooth hypersurface, so each entry
    is the single socle coordinate of a product of basis monomials.  The
    matrix has full rank dim R^k (the pairing is perfect).
    """
    ring.require_smooth()
    sigma = ring.socle
    if not 0 <= k <= sigma:
        raise InputError(f"degree {k} out of range 0..{sigma}")
    fld = ring.field
    if ring.dim(sigma) != 1:
        raise InternalInvariantError(
            f"socle piece has dimension {ring.dim(sigma)}, expected 1"
        )
    rows_basis = ring.piece(k).std_monomials
    cols_basis = ring.piece(sigma - k).std_monomials
    entries = []
    for a in rows_basis:
        pa = monomial_polynomial(a, fld)
        row = []
        for b in cols_basis:
            prod = multiply(pa, monomial_polynomial(b, fld))
            row.append(ring.normal_form(prod).coords[0])
        entries.append(row)
    return ExactMatrix(len(rows_basis), len(cols_basis), entries, fld)


def pairing_rank(ring: JacobianRing, k: int) -> int:
    return rank(duality_pairing_matrix(ring, k))
