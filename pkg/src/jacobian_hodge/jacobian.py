"""Graded Jacobian rings of projective hypersurfaces.

For a hypersurface {f=0} with f homogeneous of degree d in N = n+2
variables, the partial derivatives of f generate an ideal J inside the
polynomial ring S, and the graded quotient R = S/J is the object everything
else in this package is built on.  Each graded piece R^k is represented by
its standard monomials: the non-pivot canonical monomials of the reduced
row-echelon form of the degree-k slice of J.  Pieces are computed lazily,
at most once per degree, and are immutable afterwards; different degrees
may be computed concurrently from multiple threads.

Smoothness is detected Artinian-style: f is smooth exactly when the
quotient vanishes one degree above the socle degree (n+2)(d-2).  In
prime-field mode a failed smoothness check is re-verified over the
rationals; if the exact answer disagrees, the prime dropped a Jacobian
rank and the run is rejected with BadPrimeError instead of a wrong verdict.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .errors import BadPrimeError, InputError, NotSmoothError
from .fields import QQ, PrimeField
from .linalg import ExactMatrix, ReducedForm, rank, row_reduce
from .poly import (
    GradedPolynomial,
    Monomial,
    convert_field,
    monomial_count,
    monomial_polynomial,
    monomials_of_degree,
    multiply,
    partial_derivative,
    to_dense,
)


@dataclass(frozen=True)
class Hypersurface:
    """A projective hypersurface {f=0}, f homogeneous of degree >= 1."""

    f: GradedPolynomial

    def __post_init__(self):
        if self.f.is_zero():
            raise InputError("the defining polynomial must be nonzero")
        if self.f.nvars < 3:
            raise InputError("need at least 3 variables (projective dimension >= 1)")
        if self.f.degree < 1:
            raise InputError("the defining polynomial must have degree >= 1")

    @property
    def nvars(self) -> int:
        return self.f.nvars

    @property
    def degree(self) -> int:
        return self.f.degree

    @property
    def dim(self) -> int:
        """Projective dimension n of the hypersurface."""
        return self.f.nvars - 2


def socle_degree(h: Hypersurface) -> int:
    """Top nonzero degree (n+2)(d-2) of the Jacobian ring when f is smooth."""
    return h.nvars * (h.degree - 2)


def ideal_graded_basis(h: Hypersurface, k: int, field=None) -> ExactMatrix:
    """Spanning rows of J^k: m * df/dx_i for all monomials m of degree k-(d-1).

    Row order is (canonical index of m, then i); the matrix is empty below
    the generator degree d-1.
    """
    field = field if field is not None else h.f.field
    f = convert_field(h.f, field)
    cols = monomial_count(h.nvars, k) if k >= 0 else 0
    if k < h.degree - 1:
        return ExactMatrix(0, cols, [], field)
    partials = [partial_derivative(f, i) for i in range(h.nvars)]
    rows = []
    for m in monomials_of_degree(h.nvars, k - (h.degree - 1)):
        mp = monomial_polynomial(m, field)
        for df in partials:
            rows.append(to_dense(multiply(mp, df)))
    return ExactMatrix(len(rows), cols, rows, field)


@dataclass(frozen=True)
class RingElement:
    """An element of one graded piece R^k, in standard-monomial coordinates."""

    degree: int
    coords: tuple
    field: object

    def is_zero(self) -> bool:
        return all(self.field.is_zero(c) for c in self.coords)


class GradedPiece:
    """One graded piece R^k: quotient basis plus the normal-form projector."""

    def __init__(self, degree: int, nvars: int, field, reduced: ReducedForm | None,
                 std_monomials: tuple):
        self.degree = degree
        self.field = field
        self.reduced = reduced
        self.std_monomials = std_monomials
        self.ambient_dim = monomial_count(nvars, degree)
        self.rank = reduced.rank if reduced is not None else self.ambient_dim
        self.dim = len(std_monomials)
        self._std_pos = {m: i for i, m in enumerate(std_monomials)}
        # per-pivot sparse reducers: monomial at the pivot column -> the
        # RREF row restricted to standard columns
        self._reducers: dict[Monomial, list] = {}
        if reduced is not None and reduced.rank:
            monos = monomials_of_degree(nvars, degree)
            col_is_std = {}
            std_of_col = {}
            pivot_set = set(reduced.pivots)
            pos = 0
            for j, m in enumerate(monos):
                if j not in pivot_set:
                    std_of_col[j] = pos
                    pos += 1
            is_zero = field.is_zero
            for i, p in enumerate(reduced.pivots):
                row = reduced.rows[i]
                entries = [
                    (std_of_col[j], row[j])
                    for j in std_of_col
                    if j > p and not is_zero(row[j])
                ]
                self._reducers[monos[p]] = entries

    def reduce(self, coeffs: dict) -> tuple:
        """Project a sparse degree-k coefficient map onto the quotient basis."""
        if self.reduced is None:
            return ()
        fld = self.field
        out = [fld.zero] * self.dim
        for mono, c in coeffs.items():
            pos = self._std_pos.get(mono)
            if pos is not None:
                out[pos] = fld.add(out[pos], c)
                continue
            for sp, v in self._reducers[mono]:
                out[sp] = fld.sub(out[sp], fld.mul(c, v))
        return tuple(out)


class JacobianRing:
    """Lazy per-degree cache of the graded quotient R = S/J for one hypersurface."""

    def __init__(self, hypersurface: Hypersurface, field=QQ):
        self.hypersurface = hypersurface
        self.field = field
        self.f = convert_field(hypersurface.f, field)
        if self.f.is_zero():
            raise BadPrimeError(
                f"the defining polynomial vanishes identically over {field!r}"
            )
        self._rational_f = hypersurface.f if hypersurface.f.field == QQ else None
        self._pieces: dict[int, GradedPiece] = {}
        self._dims: dict[int, int] = {}
        self._smooth: bool | None = None
        self._lock = threading.Lock()
        self._degree_locks: dict[int, threading.Lock] = {}

    @property
    def nvars(self) -> int:
        return self.hypersurface.nvars

    @property
    def degree(self) -> int:
        return self.hypersurface.degree

    @property
    def dim_variety(self) -> int:
        return self.hypersurface.dim

    @property
    def socle(self) -> int:
        return socle_degree(self.hypersurface)

    # -- piece construction --------------------------------------------------

    def _degree_lock(self, k: int) -> threading.Lock:
        with self._lock:
            return self._degree_locks.setdefault(k, threading.Lock())

    def piece(self, k: int) -> GradedPiece:
        """The graded piece R^k; degrees outside [0, socle] are the zero piece."""
        got = self._pieces.get(k)
        if got is not None:
            return got
        with self._degree_lock(k):
            got = self._pieces.get(k)
            if got is None:
                got = self._build_piece(k)
                self._pieces[k] = got
            return got

    def _build_piece(self, k: int) -> GradedPiece:
        if k < 0 or k > self.socle:
            return GradedPiece(k, self.nvars, self.field, None, ())
        reduced = row_reduce(ideal_graded_basis(self.hypersurface, k, self.field))
        pivot_set = set(reduced.pivots)
        std = tuple(
            m
            for j, m in enumerate(monomials_of_degree(self.nvars, k))
            if j not in pivot_set
        )
        return GradedPiece(k, self.nvars, self.field, reduced, std)

    # -- public queries --------------------------------------------------------

    def dim(self, k: int) -> int:
        return self.piece(k).dim

    def quotient_basis(self, k: int) -> list[Monomial]:
        return list(self.piece(k).std_monomials)

    def ideal_matrix(self, k: int) -> ExactMatrix:
        return ideal_graded_basis(self.hypersurface, k, self.field)

    def normal_form(self, P: GradedPolynomial) -> RingElement:
        """Coordinates of the class [P] in the standard-monomial basis of R^deg(P)."""
        if P.nvars != self.nvars:
            raise InputError(
                f"polynomial in {P.nvars} variables vs ring in {self.nvars}"
            )
        P = convert_field(P, self.field)
        piece = self.piece(P.degree)
        return RingElement(P.degree, piece.reduce(P.coeffs), self.field)

    def element(self, degree: int, coords) -> RingElement:
        piece = self.piece(degree)
        coords = tuple(self.field.coerce(c) for c in coords)
        if len(coords) != piece.dim:
            raise InputError(
                f"expected {piece.dim} coordinates in degree {degree}, got {len(coords)}"
            )
        return RingElement(degree, coords, self.field)

    def zero_element(self, degree: int) -> RingElement:
        return RingElement(degree, (self.field.zero,) * self.piece(degree).dim, self.field)

    # -- smoothness -------------------------------------------------------------

    def honest_dim(self, k: int) -> int:
        """dim R^k without the socle clipping; used by the smoothness test."""
        if k < 0:
            return 0
        got = self._pieces.get(k)
        if got is not None and not (k > self.socle):
            return got.dim
        cached = self._dims.get(k)
        if cached is None:
            mat = ideal_graded_basis(self.hypersurface, k, self.field)
            cached = mat.cols - rank(mat)
            self._dims[k] = cached
        return cached

    def is_smooth(self) -> bool:
        if self._smooth is None:
            self._smooth = self._smoothness_verdict()
        return self._smooth

    def _smoothness_verdict(self) -> bool:
        sigma = self.socle
        top = self.honest_dim(sigma + 1)
        if not isinstance(self.field, PrimeField):
            return top == 0
        soc = self.honest_dim(sigma) if sigma >= 0 else 1
        if top == 0 and soc == 1:
            return True
        # Modular ranks can only drop, so a failed modular check may be the
        # prime's fault; recheck the failing degrees exactly when we can.
        if self._rational_f is not None:
            exact = JacobianRing(self.hypersurface, QQ)
            ex_top = exact.honest_dim(sigma + 1)
            ex_soc = exact.honest_dim(sigma) if sigma >= 0 else 1
            if ex_top == 0 and ex_soc == 1:
                raise BadPrimeError(
                    f"prime {self.field.p} drops Jacobian ranks: "
                    f"dim R^{sigma} = {soc}, dim R^{sigma + 1} = {top} mod p, "
                    f"but {ex_soc} and {ex_top} over the rationals"
                )
        return False

    def require_smooth(self) -> None:
        if not self.is_smooth():
            raise NotSmoothError(
                "the hypersurface is singular; Hodge-level operations are undefined"
            )
