"""Exact scalars in cyclotomic extensions Q(zeta_N) of the rationals.

Order N = 1 gives plain rationals.  For N > 1 a scalar is a polynomial of
degree < phi(N) in the primitive N-th root of unity, reduced modulo the
N-th cyclotomic polynomial, with exact rational coefficients.  Equality of
scalars is literal equality of canonical forms, so identity checks over
these scalars are exact, never approximate.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd

from ._backend import kernel as _K
from .errors import InputError

_FRACTION_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def _poly_divexact(num, den):
    # long division of integer polynomials; den is monic; remainder must vanish
    num = list(num)
    d = len(den) - 1
    out = [0] * (len(num) - d)
    for k in range(len(out) - 1, -1, -1):
        q = num[k + d]
        out[k] = q
        if q:
            for j in range(d + 1):
                num[k + j] -= q * den[j]
    assert not any(num), "inexact polynomial division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(order):
    """Monic integer coefficients (ascending) of the order-th cyclotomic
    polynomial, computed by exact division of x**order - 1 by the product
    of the lower cyclotomic polynomials at proper divisors."""
    if order < 1:
        raise InputError("cyclotomic order must be a positive integer")
    if order == 1:
        return (-1, 1)
    num = [0] * (order + 1)
    num[0], num[order] = -1, 1
    for d in range(1, order):
        if order % d == 0:
            num = _poly_divexact(num, cyclotomic_polynomial(d))
    return tuple(num)


@dataclass(frozen=True)
class FieldDescriptor:
    """Carrier of everything per-field: the order N, the minimal polynomial
    of the root, its degree phi(N), and the integer reduction rows used by
    the multiplication kernel (row t reduces x**(degree+t))."""

    cyclotomic_order: int
    minimal_polynomial: tuple
    degree: int
    reduction: tuple

    def __repr__(self):
        return f"FieldDescriptor(Q(zeta_{self.cyclotomic_order}))"


@lru_cache(maxsize=None)
def cyclotomic_field(order: int) -> FieldDescriptor:
    phi = cyclotomic_polynomial(order)
    d = len(phi) - 1
    rows = []
    if d > 1:
        base = tuple(-c for c in phi[:d])
        rows.append(base)
        row = base
        for _ in range(d - 2):
            top = row[d - 1]
            row = tuple((row[j - 1] if j else 0) + top * base[j] for j in range(d))
            rows.append(row)
    return FieldDescriptor(order, phi, d, tuple(rows))


def _coerce(field, value):
    if isinstance(value, Scalar):
        if value.field is not field and value.field != field:
            raise InputError(
                f"scalar field mismatch: {value.field!r} vs {field!r}"
            )
        return value
    if isinstance(value, int):
        return Scalar._make(field, (value,) + (0,) * (field.degree - 1), 1)
    if isinstance(value, Fraction):
        nums = [value.numerator] + [0] * (field.degree - 1)
        return Scalar._make(field, *_K.normalize(nums, value.denominator))
    return None


class Scalar:
    """Immutable element of Q(zeta_N).

    Stored as integer numerators over one positive denominator; the pair
    is always in canonical reduced form so == and hash are structural.
    """

    __slots__ = ("field", "nums", "den")

    def __init__(self, field, coefficients):
        """Build from a sequence of ints / Fractions (length <= phi(N),
        coefficient k multiplying zeta**k)."""
        fracs = [Fraction(c) for c in coefficients]
        if len(fracs) > field.degree:
            raise InputError(
                f"expected at most {field.degree} coefficients, got {len(fracs)}"
            )
        fracs += [Fraction(0)] * (field.degree - len(fracs))
        den = reduce(lambda a, b: a * b // gcd(a, b), (f.denominator for f in fracs), 1)
        nums = [int(f * den) for f in fracs]
        nums, den = _K.normalize(nums, den)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nums", nums)
        object.__setattr__(self, "den", den)

    # internal: trusted canonical data, skips re-normalization
    @classmethod
    def _make(cls, field, nums, den):
        self = object.__new__(cls)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nums", nums)
        object.__setattr__(self, "den", den)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def zero(cls, field):
        return cls._make(field, (0,) * field.degree, 1)

    @classmethod
    def one(cls, field):
        return cls._make(field, (1,) + (0,) * (field.degree - 1), 1)

    @classmethod
    def rational(cls, field, p, q=1):
        f = Fraction(p, q)
        nums = [f.numerator] + [0] * (field.degree - 1)
        return cls._make(field, *_K.normalize(nums, f.denominator))

    @classmethod
    def root(cls, field):
        """The primitive N-th root of unity as a field element."""
        d = field.degree
        if d >= 2:
            return cls._make(field, (0, 1) + (0,) * (d - 2), 1)
        # degree-1 fields: N == 1 has root 1, N == 2 has root -1
        return cls.rational(field, 1 if field.cyclotomic_order == 1 else -1)

    @property
    def coefficients(self):
        """Coefficients of zeta**0 .. zeta**(phi(N)-1) as Fractions in
        lowest terms with positive denominators."""
        return tuple(Fraction(n, self.den) for n in self.nums)

    def is_zero(self):
        return not any(self.nums)

    def is_one(self):
        return self.den == 1 and self.nums[0] == 1 and not any(self.nums[1:])

    def is_rational(self):
        return not any(self.nums[1:])

    def __bool__(self):
        return any(self.nums)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _coerce(self.field, other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return (
            self.field == other.field
            and self.nums == other.nums
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.field.cyclotomic_order, self.nums, self.den))

    def __add__(self, other):
        other = _coerce(self.field, other)
        if other is None:
            return NotImplemented
        return Scalar._make(
            self.field, *_K.add(self.nums, self.den, other.nums, other.den)
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(self.field, other)
        if other is None:
            return NotImplemented
        return Scalar._make(
            self.field, *_K.sub(self.nums, self.den, other.nums, other.den)
        )

    def __rsub__(self, other):
        other = _coerce(self.field, other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Scalar._make(self.field, tuple(-n for n in self.nums), self.den)

    def __mul__(self, other):
        other = _coerce(self.field, other)
        if other is None:
            return NotImplemented
        return Scalar._make(
            self.field,
            *_K.mul(self.nums, self.den, other.nums, other.den, self.field.reduction),
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(self.field, other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(self.field, other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        if self.field.degree == 1:
            return Scalar._make(self.field, *_K.normalize([self.den], self.nums[0]))
        return Scalar(self.field, _invert_mod_minpoly(self.field, self.coefficients))

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Scalar.one(self.field)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base if exponent > 1 else base
            exponent >>= 1
        return result

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if self.field.degree == 1:
            return _frac_text(self.coefficients[0])
        parts = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = _frac_text(abs(c))
            if k == 0:
                term = mag
            else:
                zk = "z" if k == 1 else f"z^{k}"
                term = zk if mag == "1" else f"{mag}*{zk}"
            parts.append(("-" if c < 0 else "+", term))
        if not parts:
            return "0"
        sign, first = parts[0]
        text = ("-" if sign == "-" else "") + first
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


def _frac_text(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _frac_poly_divmod(a, b):
    # a, b: lists of Fractions, b nonzero; returns (quotient, remainder)
    a = list(a)
    db = max(i for i, c in enumerate(b) if c != 0)
    lead = b[db]
    q = [Fraction(0)] * max(len(a) - db, 1)
    for k in range(len(a) - db - 1, -1, -1):
        c = a[k + db] / lead
        q[k] = c
        if c:
            for j in range(db + 1):
                a[k + j] -= c * b[j]
    return q, a[:db]


def _invert_mod_minpoly(field, coeffs):
    """Extended Euclid in Q[x]: inverse of the given coefficient vector
    modulo the (irreducible) minimal polynomial."""
    r0 = [Fraction(c) for c in field.minimal_polynomial]
    r1 = [Fraction(c) for c in coeffs]
    s0, s1 = [Fraction(0)], [Fraction(1)]

    def deg(p):
        for i in range(len(p) - 1, -1, -1):
            if p[i] != 0:
                return i
        return -1

    def padd(p, q):
        n = max(len(p), len(q))
        return [
            (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
        ]

    def pmul(p, q):
        out = [Fraction(0)] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            if a:
                for j, b in enumerate(q):
                    if b:
                        out[i + j] += a * b
        return out

    while deg(r1) > 0:
        q, rem = _frac_poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, padd(s0, [-c for c in pmul(q, s1)])
    unit = r1[deg(r1)]
    assert deg(r1) == 0, "minimal polynomial not coprime with operand"
    inv = [c / unit for c in s1]
    inv += [Fraction(0)] * (field.degree - len(inv))
    return inv[: field.degree]


def scalar_from_text(field, data) -> Scalar:
    """Parse the document form of a scalar: a single "p" / "p/q" string for
    N == 1, a list of phi(N) such strings for N > 1."""
    if field.cyclotomic_order == 1:
        if not isinstance(data, str):
            raise InputError(f"expected a rational string, got {data!r}")
        data = [data]
    else:
        if not isinstance(data, list) or len(data) != field.degree:
            raise InputError(
                f"expected a list of {field.degree} rational strings, got {data!r}"
            )
    coeffs = []
    for item in data:
        if not isinstance(item, str) or not _FRACTION_RE.fullmatch(item):
            raise InputError(f"malformed rational {item!r} (expected 'p' or 'p/q')")
        coeffs.append(Fraction(item))
    return Scalar(field, coeffs)


def scalar_to_text(s: Scalar):
    """Document form: inverse of scalar_from_text."""
    if s.field.cyclotomic_order == 1:
        return _frac_text(s.coefficients[0])
    return [_frac_text(c) for c in s.coefficients]
