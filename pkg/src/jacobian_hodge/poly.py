"""Homogeneous multivariate polynomials over an exact field.

Monomials of a fixed (nvars, degree) carry a canonical total order:
descending lexicographic on exponent vectors with x0 > x1 > ... > x_{N-1}
(graded-lex restricted to one degree).  The position of a monomial in that
enumeration is its canonical index; every dense vector in the package is
indexed this way, which is what makes quotient bases and output matrices
reproducible byte for byte.

Polynomials are sparse maps monomial -> nonzero coefficient.  The zero
polynomial is an empty map that still remembers its nominal degree, so
degree bookkeeping survives vanishing results such as d(x0^3)/dx1.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache

from .errors import (
    InhomogeneityError,
    InputError,
    PolynomialSyntaxError,
    UnknownVariableError,
)
from .fields import QQ


@dataclass(frozen=True)
class Monomial:
    """A single power product, stored as its exponent vector."""

    exponents: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if len(self.exponents) != len(other.exponents):
            raise InputError("monomials live in different variable counts")
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) if parts else "1"


def monomial_count(nvars: int, degree: int) -> int:
    """dim S^degree in nvars variables; zero when degree < 0."""
    if degree < 0:
        return 0
    return math.comb(nvars + degree - 1, degree)


@lru_cache(maxsize=None)
def _exponent_tuples(nvars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    if degree < 0:
        return ()
    if nvars == 1:
        return ((degree,),)
    out = []
    for lead in range(degree, -1, -1):
        for rest in _exponent_tuples(nvars - 1, degree - lead):
            out.append((lead,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _monomial_list(nvars: int, degree: int) -> tuple[Monomial, ...]:
    return tuple(Monomial(t) for t in _exponent_tuples(nvars, degree))


@lru_cache(maxsize=None)
def _monomial_index_map(nvars: int, degree: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(_monomial_list(nvars, degree))}


def monomials_of_degree(nvars: int, degree: int) -> list[Monomial]:
    """All monomials of the given degree in canonical order."""
    if nvars < 1:
        raise InputError("nvars must be at least 1")
    if degree < 0:
        raise InputError("degree must be nonnegative")
    return list(_monomial_list(nvars, degree))


def monomial_index(m: Monomial) -> int:
    """Canonical index of m within its (nvars, degree) enumeration."""
    return _monomial_index_map(m.nvars, m.degree)[m]


@dataclass(frozen=True)
class GradedPolynomial:
    """A homogeneous polynomial; coeffs maps Monomial -> nonzero scalar.

    Instances are immutable by convention: the coeffs dict must not be
    mutated after construction.  Use :func:`graded_polynomial` to build
    one from unnormalized data.
    """

    nvars: int
    degree: int
    field: object
    coeffs: dict = dc_field(default_factory=dict)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self) -> str:
        return polynomial_to_text(self)


def graded_polynomial(nvars, degree, coeffs, field=QQ) -> GradedPolynomial:
    """Normalize and validate a coefficient map into a GradedPolynomial."""
    clean = {}
    for mono, c in coeffs.items():
        if mono.nvars != nvars:
            raise InputError(f"monomial {mono} does not have {nvars} variables")
        if mono.degree != degree:
            raise InhomogeneityError(degree, mono.degree)
        c = field.coerce(c)
        if not field.is_zero(c):
            clean[mono] = c
    return GradedPolynomial(nvars, degree, field, clean)


def zero_polynomial(nvars: int, degree: int, field=QQ) -> GradedPolynomial:
    return GradedPolynomial(nvars, degree, field, {})


def monomial_polynomial(m: Monomial, field=QQ, coeff=None) -> GradedPolynomial:
    c = field.one if coeff is None else field.coerce(coeff)
    if field.is_zero(c):
        return zero_polynomial(m.nvars, m.degree, field)
    return GradedPolynomial(m.nvars, m.degree, field, {m: c})


def _check_compatible(a: GradedPolynomial, b: GradedPolynomial) -> None:
    if a.nvars != b.nvars:
        raise InputError(f"variable count mismatch: {a.nvars} vs {b.nvars}")
    if a.field != b.field:
        raise InputError("coefficient field mismatch")


def add(a: GradedPolynomial, b: GradedPolynomial) -> GradedPolynomial:
    _check_compatible(a, b)
    if a.degree != b.degree:
        raise InhomogeneityError(a.degree, b.degree)
    fld = a.field
    out = dict(a.coeffs)
    for mono, c in b.coeffs.items():
        s = fld.add(out.get(mono, fld.zero), c)
        if fld.is_zero(s):
            out.pop(mono, None)
        else:
            out[mono] = s
    return GradedPolynomial(a.nvars, a.degree, fld, out)


def negate(a: GradedPolynomial) -> GradedPolynomial:
    fld = a.field
    return GradedPolynomial(a.nvars, a.degree, fld, {m: fld.neg(c) for m, c in a.coeffs.items()})


def subtract(a: GradedPolynomial, b: GradedPolynomial) -> GradedPolynomial:
    return add(a, negate(b))


def scale(a: GradedPolynomial, c) -> GradedPolynomial:
    fld = a.field
    c = fld.coerce(c)
    if fld.is_zero(c):
        return zero_polynomial(a.nvars, a.degree, fld)
    return GradedPolynomial(a.nvars, a.degree, fld, {m: fld.mul(v, c) for m, v in a.coeffs.items()})


def multiply(a: GradedPolynomial, b: GradedPolynomial) -> GradedPolynomial:
    _check_compatible(a, b)
    fld = a.field
    degree = a.degree + b.degree
    if not a.coeffs or not b.coeffs:
        return zero_polynomial(a.nvars, degree, fld)
    out: dict = {}
    for ma, ca in a.coeffs.items():
        ea = ma.exponents
        for mb, cb in b.coeffs.items():
            mono = Monomial(tuple(x + y for x, y in zip(ea, mb.exponents)))
            s = fld.add(out.get(mono, fld.zero), fld.mul(ca, cb))
            if fld.is_zero(s):
                out.pop(mono, None)
            else:
                out[mono] = s
    return GradedPolynomial(a.nvars, degree, fld, out)


def partial_derivative(f: GradedPolynomial, i: int) -> GradedPolynomial:
    if not 0 <= i < f.nvars:
        raise InputError(f"variable index {i} out of range for {f.nvars} variables")
    if f.degree < 1:
        raise InputError("cannot differentiate a degree-0 polynomial")
    fld = f.field
    out: dict = {}
    for mono, c in f.coeffs.items():
        e = mono.exponents[i]
        if e == 0:
            continue
        exps = list(mono.exponents)
        exps[i] = e - 1
        d = fld.mul(c, fld.coerce(e))
        if not fld.is_zero(d):
            out[Monomial(tuple(exps))] = d
    return GradedPolynomial(f.nvars, f.degree - 1, fld, out)


def to_dense(f: GradedPolynomial) -> list:
    """Coefficient vector indexed by canonical monomial index."""
    index = _monomial_index_map(f.nvars, f.degree)
    vec = [f.field.zero] * monomial_count(f.nvars, f.degree)
    for mono, c in f.coeffs.items():
        vec[index[mono]] = c
    return vec


def from_dense(nvars: int, degree: int, vec, field=QQ) -> GradedPolynomial:
    monos = _monomial_list(nvars, degree)
    if len(vec) != len(monos):
        raise InputError(f"expected a vector of length {len(monos)}, got {len(vec)}")
    coeffs = {monos[i]: c for i, c in enumerate(vec) if not field.is_zero(c)}
    return GradedPolynomial(nvars, degree, field, coeffs)


def convert_field(f: GradedPolynomial, field) -> GradedPolynomial:
    """Re-coerce all coefficients into another field (dropping new zeros)."""
    if field == f.field:
        return f
    coeffs = {}
    for mono, c in f.coeffs.items():
        v = field.coerce(c)
        if not field.is_zero(v):
            coeffs[mono] = v
    return GradedPolynomial(f.nvars, f.degree, field, coeffs)


def with_degree(f: GradedPolynomial, degree: int) -> GradedPolynomial:
    """Re-tag a zero polynomial's nominal degree; no-op on matching degree."""
    if f.degree == degree:
        return f
    if not f.is_zero():
        raise InhomogeneityError(degree, f.degree)
    return zero_polynomial(f.nvars, degree, f.field)


# --- text format -----------------------------------------------------------
#
# terms separated by + / -; a term is [coeff][*]var^exp[*var^exp...];
# coeff is an integer or a/b; variables are x0..x{N-1}; whitespace ignored.

_TERM_RE = re.compile(
    r"^(?P<coeff>\d+(?:/\d+)?)?"
    r"(?P<sep>\*)?"
    r"(?P<vars>x\d+(?:\^\d+)?(?:\*x\d+(?:\^\d+)?)*)?$"
)
_CHUNK_RE = re.compile(r"([+-]?)([^+-]+)")


def parse_polynomial(text: str, field=QQ, nvars: int | None = None) -> GradedPolynomial:
    """Parse the external polynomial grammar into a GradedPolynomial.

    nvars defaults to the largest variable index used plus one; passing it
    explicitly allows polynomials that do not mention every variable and
    turns out-of-range indices into UnknownVariableError.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise PolynomialSyntaxError("empty polynomial text")

    terms = []  # (sign, coeff_fraction, {var: exp})
    consumed = 0
    for match in _CHUNK_RE.finditer(s):
        if match.start() != consumed:
            raise PolynomialSyntaxError(f"unexpected text at position {consumed} in {text!r}")
        consumed = match.end()
        sign, body = match.group(1), match.group(2)
        m = _TERM_RE.match(body)
        if not m or (m.group("coeff") is None and m.group("vars") is None):
            raise PolynomialSyntaxError(f"bad term {body!r} in {text!r}")
        if m.group("sep") and (m.group("coeff") is None or m.group("vars") is None):
            raise PolynomialSyntaxError(f"bad term {body!r} in {text!r}")
        try:
            coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        except ZeroDivisionError:
            raise PolynomialSyntaxError(f"zero denominator in term {body!r}") from None
        if sign == "-":
            coeff = -coeff
        exps: dict[int, int] = {}
        if m.group("vars"):
            for factor in m.group("vars").split("*"):
                name, _, power = factor.partition("^")
                idx = int(name[1:])
                exps[idx] = exps.get(idx, 0) + (int(power) if power else 1)
        terms.append((coeff, exps))
    if consumed != len(s):
        raise PolynomialSyntaxError(f"unexpected trailing text in {text!r}")

    max_idx = max((i for _, exps in terms for i in exps), default=-1)
    if nvars is None:
        nvars = max(max_idx + 1, 1)
    elif max_idx >= nvars:
        raise UnknownVariableError(
            f"variable x{max_idx} is out of range for nvars={nvars}"
        )

    degree = sum(terms[0][1].values())
    coeffs: dict = {}
    for coeff, exps in terms:
        term_degree = sum(exps.values())
        if term_degree != degree:
            raise InhomogeneityError(degree, term_degree)
        vec = [0] * nvars
        for idx, e in exps.items():
            vec[idx] = e
        mono = Monomial(tuple(vec))
        c = field.add(coeffs.get(mono, field.zero), field.coerce(coeff))
        if field.is_zero(c):
            coeffs.pop(mono, None)
        else:
            coeffs[mono] = c
    return GradedPolynomial(nvars, degree, field, coeffs)


def polynomial_to_text(f: GradedPolynomial) -> str:
    """Canonical text rendering: terms in canonical monomial order."""
    if f.is_zero():
        return "0"
    fld = f.field
    parts = []
    for mono in sorted(f.coeffs, key=lambda m: m.exponents, reverse=True):
        c = f.coeffs[mono]
        text = fld.to_str(c)
        negative = text.startswith("-")
        if negative:
            text = text[1:]
        if mono.degree == 0:
            body = text
        elif text == "1":
            body = str(mono)
        else:
            body = f"{text}*{mono}"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts)
