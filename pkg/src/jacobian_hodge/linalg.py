"""Deterministic exact dense linear algebra over QQ or F_p.

One pivot rule is used everywhere: sweep columns left to right and take the
first remaining row with a nonzero entry in the current column.  The reduced
row-echelon form is unique, so rank, pivot columns, quotient bases and
kernels derived from it are reproducible bit for bit across runs.

Over the rationals the elimination is fraction-free: each row is scaled to
integers up front and updated by cross-multiplication, dividing a row by its
integer content whenever it was rescaled; rational entries reappear only in
the final normalization to leading-1 rows.  Pivot rows are content-reduced
with a positive leading entry, which makes the common unit-pivot case a
cheap sparse update -- the degree slices of a Jacobian ideal are full of
single-entry rows and would otherwise drown in redundant row scalings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatchError, InputError
from .fields import QQ, PrimeField


@dataclass
class ExactMatrix:
    """Dense row-major matrix over an exact field; rows are lists of scalars."""

    rows: int
    cols: int
    entries: list
    field: object

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise DimensionMismatchError(
                f"expected {self.rows} rows, got {len(self.entries)}"
            )
        for r in self.entries:
            if len(r) != self.cols:
                raise DimensionMismatchError(
                    f"row of length {len(r)} in a {self.rows}x{self.cols} matrix"
                )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.field == other.field
            and self.entries == other.entries
        )

    def row(self, i: int) -> list:
        return self.entries[i]

    def transpose(self) -> "ExactMatrix":
        cols = [[self.entries[r][c] for r in range(self.rows)] for c in range(self.cols)]
        return ExactMatrix(self.cols, self.rows, cols, self.field)

    def is_zero(self) -> bool:
        zero = self.field.is_zero
        return all(zero(x) for row in self.entries for x in row)


def matrix_from_rows(rows: list, cols: int, field) -> ExactMatrix:
    return ExactMatrix(len(rows), cols, rows, field)


@dataclass
class ReducedForm:
    """Reduced row-echelon data of a matrix.

    ``rows`` holds only the ``rank`` nonzero RREF rows; the all-zero rows of
    the full echelon form are implicit and can be materialized with
    :meth:`matrix`.  Pivot columns are strictly increasing and each pivot
    entry is the field's one, with zeros elsewhere in its column.
    """

    rank: int
    pivots: list[int]
    rows: list
    nrows: int
    cols: int
    field: object

    def matrix(self) -> ExactMatrix:
        zero_row = [self.field.zero] * self.cols
        full = [list(r) for r in self.rows]
        full.extend(list(zero_row) for _ in range(self.nrows - self.rank))
        return ExactMatrix(self.nrows, self.cols, full, self.field)


# --- rational (fraction-free) elimination ----------------------------------


def _int_row(row) -> list[int]:
    """Clear denominators: scale a row of Fractions to coprime-free ints."""
    scale = 1
    for c in row:
        if c:
            scale = scale * c.denominator // math.gcd(scale, c.denominator)
    if scale == 1:
        return [c.numerator if c else 0 for c in row]
    return [c.numerator * (scale // c.denominator) if c else 0 for c in row]


def _content_reduce(row: list[int], start: int) -> None:
    g = 0
    for x in row[start:]:
        if x:
            g = math.gcd(g, x)
            if g == 1:
                return
    if g > 1:
        row[start:] = [x // g for x in row[start:]]


def _forward_rational(rows, cols: int):
    """Integer echelon pass; returns (pivots, pivot_rows).

    Pivot rows come out content-reduced with positive leading entry.  The
    input rows must be Fraction-valued and are not modified.
    """
    work: list = [_int_row(r) for r in rows]
    pivots: list[int] = []
    piv_rows: list[list[int]] = []
    start = 0
    nrows = len(work)
    for c in range(cols):
        pr = -1
        for r in range(start, nrows):
            w = work[r]
            if w is not None and w[c]:
                pr = r
                break
        if pr < 0:
            continue
        work[start], work[pr] = work[pr], work[start]
        piv = work[start]
        if piv[c] < 0:
            piv[c:] = [-x for x in piv[c:]]
        _content_reduce(piv, c)
        lead = piv[c]
        nz = [(j, piv[j]) for j in range(c, cols) if piv[j]]
        for r in range(start + 1, nrows):
            w = work[r]
            if w is None:
                continue
            a = w[c]
            if not a:
                continue
            if lead == 1:
                for j, v in nz:
                    w[j] -= a * v
            else:
                g = math.gcd(lead, a)
                mp, ma = lead // g, a // g
                if mp != 1:
                    w[c:] = [x * mp for x in w[c:]]
                for j, v in nz:
                    w[j] -= ma * v
                _content_reduce(w, c)
            # cheap zero-row reclamation in the sparse-pivot case
            if len(nz) <= 4 and not any(w):
                work[r] = None
        pivots.append(c)
        piv_rows.append(piv)
        start += 1
        if start == nrows:
            break
    return pivots, piv_rows


def _rref_rational(pivots, piv_rows, cols: int):
    """Back-eliminate above pivots and normalize to Fraction rows."""
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        piv = piv_rows[i]
        lead = piv[c]
        nz = [(j, piv[j]) for j in range(c, cols) if piv[j]]
        for t in range(i):
            row = piv_rows[t]
            a = row[c]
            if not a:
                continue
            if lead == 1:
                for j, v in nz:
                    row[j] -= a * v
            else:
                g = math.gcd(lead, a)
                mp, ma = lead // g, a // g
                ct = pivots[t]
                if mp != 1:
                    row[ct:] = [x * mp for x in row[ct:]]
                for j, v in nz:
                    row[j] -= ma * v
                _content_reduce(row, ct)
    out = []
    for i, c in enumerate(pivots):
        piv = piv_rows[i]
        lead = piv[c]
        if lead == 1:
            out.append([Fraction(x) for x in piv])
        else:
            out.append([Fraction(x, lead) for x in piv])
    return out


# --- prime-field elimination ------------------------------------------------


def _forward_mod(rows, cols: int, p: int):
    work: list = [[x % p for x in r] for r in rows]
    pivots: list[int] = []
    piv_rows: list[list[int]] = []
    start = 0
    nrows = len(work)
    for c in range(cols):
        pr = -1
        for r in range(start, nrows):
            w = work[r]
            if w is not None and w[c]:
                pr = r
                break
        if pr < 0:
            continue
        work[start], work[pr] = work[pr], work[start]
        piv = work[start]
        lead = piv[c]
        if lead != 1:
            inv = pow(lead, -1, p)
            piv[c:] = [x * inv % p for x in piv[c:]]
        nz = [(j, piv[j]) for j in range(c, cols) if piv[j]]
        for r in range(start + 1, nrows):
            w = work[r]
            if w is None:
                continue
            a = w[c]
            if not a:
                continue
            for j, v in nz:
                w[j] = (w[j] - a * v) % p
            if len(nz) <= 4 and not any(w):
                work[r] = None
        pivots.append(c)
        piv_rows.append(piv)
        start += 1
        if start == nrows:
            break
    return pivots, piv_rows


def _rref_mod(pivots, piv_rows, cols: int, p: int):
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        piv = piv_rows[i]
        nz = [(j, piv[j]) for j in range(c, cols) if piv[j]]
        for t in range(i):
            row = piv_rows[t]
            a = row[c]
            if not a:
                continue
            for j, v in nz:
                row[j] = (row[j] - a * v) % p
    return piv_rows


# --- public operations -------------------------------------------------------


def row_reduce(m: ExactMatrix) -> ReducedForm:
    """Unique reduced row-echelon form, deterministic pivot selection."""
    if isinstance(m.field, PrimeField):
        pivots, piv_rows = _forward_mod(m.entries, m.cols, m.field.p)
        rows = _rref_mod(pivots, piv_rows, m.cols, m.field.p)
    else:
        pivots, piv_rows = _forward_rational(m.entries, m.cols)
        rows = _rref_rational(pivots, piv_rows, m.cols)
    return ReducedForm(len(pivots), pivots, rows, m.rows, m.cols, m.field)


def rank(m: ExactMatrix) -> int:
    """Rank via the forward elimination pass only."""
    if isinstance(m.field, PrimeField):
        pivots, _ = _forward_mod(m.entries, m.cols, m.field.p)
    else:
        pivots, _ = _forward_rational(m.entries, m.cols)
    return len(pivots)


def kernel_basis(m: ExactMatrix) -> list[list]:
    """Basis of the right null space, one vector per non-pivot column."""
    red = row_reduce(m)
    fld = m.field
    pivot_set = set(red.pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free_cols:
        vec = [fld.zero] * m.cols
        vec[f] = fld.one
        for i, p in enumerate(red.pivots):
            vec[p] = fld.neg(red.rows[i][f])
        basis.append(vec)
    return basis


def membership(v: list, m: ExactMatrix):
    """Coefficients expressing v in the row span of m, or None.

    Solves x^T m = v by reducing the augmented transpose; when a
    certificate exists it reconstructs v exactly (free coefficients are
    zero, so the certificate is deterministic).
    """
    if len(v) != m.cols:
        raise DimensionMismatchError(
            f"vector of length {len(v)} vs matrix with {m.cols} columns"
        )
    fld = m.field
    aug_rows = [
        [m.entries[r][c] for r in range(m.rows)] + [v[c]] for c in range(m.cols)
    ]
    red = row_reduce(ExactMatrix(m.cols, m.rows + 1, aug_rows, fld))
    if red.pivots and red.pivots[-1] == m.rows:
        return None
    coeffs = [fld.zero] * m.rows
    for i, p in enumerate(red.pivots):
        coeffs[p] = red.rows[i][m.rows]
    return coeffs


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.field != b.field:
        raise InputError("coefficient field mismatch")
    if a.cols != b.rows:
        raise DimensionMismatchError(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}"
        )
    fld = a.field
    zero = fld.zero
    out = []
    for i in range(a.rows):
        arow = a.entries[i]
        acc = [zero] * b.cols
        for k, aik in enumerate(arow):
            if fld.is_zero(aik):
                continue
            brow = b.entries[k]
            for j, bkj in enumerate(brow):
                if not fld.is_zero(bkj):
                    acc[j] = fld.add(acc[j], fld.mul(aik, bkj))
        out.append(acc)
    return ExactMatrix(a.rows, b.cols, out, fld)


def mat_vec(m: ExactMatrix, v: list) -> list:
    if len(v) != m.cols:
        raise DimensionMismatchError(
            f"vector of length {len(v)} vs matrix with {m.cols} columns"
        )
    fld = m.field
    out = []
    for i in range(m.rows):
        row = m.entries[i]
        acc = fld.zero
        for j, x in enumerate(v):
            if not fld.is_zero(x) and not fld.is_zero(row[j]):
                acc = fld.add(acc, fld.mul(row[j], x))
        out.append(acc)
    return out
