"""Exact coefficient fields.

Scalars are either arbitrary-precision rationals (`fractions.Fraction`,
always in lowest terms with positive denominator -- Fraction guarantees
this) or elements of a prime field F_p stored as plain ints in ``0..p-1``.
There is deliberately no floating-point mode anywhere in the package.

Both field classes share the same small method surface (``add``, ``mul``,
``inv``, ``coerce``, ``to_str``, ...) so polynomial and matrix code can be
written once.  Performance-critical elimination loops in :mod:`linalg`
specialize per field instead of going through this interface.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadPrimeError, InputError

# Witness bases making Miller-Rabin deterministic for every n < 3.3 * 10^24,
# which covers anything a 64-bit prime flag can carry.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field of rational numbers; use the module-level singleton ``QQ``."""

    kind = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(value)
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError(f"bad rational literal {value!r}: {exc}") from None
        raise InputError(f"cannot coerce {value!r} into the rationals")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def is_zero(self, a) -> bool:
        return a == 0

    def to_str(self, a) -> str:
        return str(a)

    def describe(self) -> dict:
        return {"kind": "rational"}

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("rational")

    def __repr__(self) -> str:
        return "QQ"


QQ = RationalField()


class PrimeField:
    """F_p for a prime p; scalars are ints reduced to ``0..p-1``."""

    kind = "mod"

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise BadPrimeError(f"modulus {p!r} is not a prime number")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, value) -> int:
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise BadPrimeError(
                    f"denominator {value.denominator} vanishes mod {self.p}"
                )
            return value.numerator * pow(den, -1, self.p) % self.p
        if isinstance(value, str):
            return self.coerce(QQ.coerce(value))
        raise InputError(f"cannot coerce {value!r} into F_{self.p}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def to_str(self, a) -> str:
        return str(a % self.p)

    def describe(self) -> dict:
        return {"kind": "mod", "p": self.p}

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("mod", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"


def field_from_spec(spec: str):
    """Parse a CLI field choice: ``rational`` or ``mod:<p>``."""
    if spec == "rational":
        return QQ
    if spec.startswith("mod:"):
        try:
            p = int(spec[4:])
        except ValueError:
            raise InputError(f"bad field spec {spec!r}: modulus must be an integer") from None
        return PrimeField(p)
    raise InputError(f"bad field spec {spec!r}: expected 'rational' or 'mod:<p>'")
