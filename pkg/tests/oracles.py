"""Independent reference implementations used to freeze expected values.

Everything here is deliberately naive: dense Fraction-coefficient
polynomials, schoolbook multiplication, brute-force law evaluation on
dict-of-dicts tables.  Nothing imports colorhom, so agreement between
these oracles and the package is meaningful evidence.
"""

import itertools
from fractions import Fraction


# ---------------------------------------------------------------------------
# dense polynomial arithmetic over Q, coefficients little-endian


def poly_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += Fraction(x) * Fraction(y)
    return poly_trim(out)


def poly_divmod(a, b):
    a = [Fraction(x) for x in a]
    b = poly_trim([Fraction(x) for x in b])
    assert b, "division by zero polynomial"
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = poly_trim(a)
    while len(r) >= len(b):
        shift = len(r) - len(b)
        c = r[-1] / b[-1]
        q[shift] = c
        r = poly_trim(
            [
                r[i] - (c * b[i - shift] if 0 <= i - shift < len(b) else 0)
                for i in range(len(r))
            ]
        )
    return poly_trim(q), r


def poly_mulmod(a, b, modulus):
    return poly_divmod(poly_mul(a, b), modulus)[1]


def poly_ext_gcd(a, b):
    # returns (g, s, t) with s*a + t*b = g, all Fraction polynomials
    r0, r1 = poly_trim([Fraction(x) for x in a]), poly_trim([Fraction(x) for x in b])
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_trim([x - y for x, y in _zip_pad(s0, poly_mul(q, s1))])
        t0, t1 = t1, poly_trim([x - y for x, y in _zip_pad(t0, poly_mul(q, t1))])
    return r0, s0, t0


def _zip_pad(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return zip(a, b)


def poly_invmod(a, modulus):
    g, s, _ = poly_ext_gcd(a, modulus)
    assert len(g) == 1 and g[0] != 0, "not invertible"
    return poly_divmod([c / g[0] for c in s], modulus)[1]


# ---------------------------------------------------------------------------
# field elements as fixed-width Fraction tuples modulo a minimal polynomial


class FieldOracle:
    """Arithmetic in Q[x]/(minpoly) with dense Fraction vectors."""

    def __init__(self, minpoly):
        self.minpoly = [Fraction(c) for c in minpoly]
        self.degree = len(minpoly) - 1

    def widen(self, coeffs):
        out = [Fraction(c) for c in coeffs]
        assert len(out) <= self.degree
        return out + [Fraction(0)] * (self.degree - len(out))

    def add(self, a, b):
        return [x + y for x, y in zip(a, b)]

    def sub(self, a, b):
        return [x - y for x, y in zip(a, b)]

    def mul(self, a, b):
        return self.widen(poly_mulmod(a, b, self.minpoly))

    def inv(self, a):
        return self.widen(poly_invmod(poly_trim(a), self.minpoly))

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        out = self.widen([1])
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def is_zero(self, a):
        return all(c == 0 for c in a)


# ---------------------------------------------------------------------------
# brute-force structure evaluation: tables are {(i,j,...): {k: Fraction-vec}}


class BundleOracle:
    """Evaluates twisted-identity defects over a structure given as plain
    dicts.  Scalars are Fraction vectors in a FieldOracle; eps is a callable
    on basis-index pairs returning such a vector."""

    def __init__(self, field, dim, eps):
        self.F = field
        self.dim = dim
        self.eps = eps

    def zero_vec(self):
        return {}

    def v_add(self, a, b):
        out = dict(a)
        for k, c in b.items():
            s = self.F.add(out.get(k, self.F.widen([])), c)
            if self.F.is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        return out

    def v_scale(self, c, a):
        if self.F.is_zero(c):
            return {}
        return {k: self.F.mul(c, v) for k, v in a.items()}

    def v_neg(self, a):
        return {k: [-x for x in v] for k, v in a.items()}

    def apply_map(self, rows, vec):
        # rows[i][k]: coefficient of basis i in image of basis k
        out = {}
        for k, c in vec.items():
            for i in range(self.dim):
                if not self.F.is_zero(rows[i][k]):
                    out = self.v_add(out, {i: self.F.mul(rows[i][k], c)})
        return out

    def apply_op(self, table, *vecs):
        out = {}
        for key in itertools.product(*[sorted(v) for v in vecs]):
            if key not in table:
                continue
            coeff = self.F.widen([1])
            for v, k in zip(vecs, key):
                coeff = self.F.mul(coeff, v[k])
            out = self.v_add(out, self.v_scale(coeff, table[key]))
        return out

    def basis(self, i):
        return {i: self.F.widen([1])}

    def leibniz_defect(self, bracket, alpha, x, y, z):
        # [a(x), [y,z]] - [[x,y], a(z)] - eps(x,y) [a(y), [x,z]]
        bx, by, bz = self.basis(x), self.basis(y), self.basis(z)
        lhs = self.apply_op(bracket, self.apply_map(alpha, bx), self.apply_op(bracket, by, bz))
        r1 = self.apply_op(bracket, self.apply_op(bracket, bx, by), self.apply_map(alpha, bz))
        r2 = self.v_scale(
            self.eps(x, y),
            self.apply_op(bracket, self.apply_map(alpha, by), self.apply_op(bracket, bx, bz)),
        )
        return self.v_add(lhs, self.v_neg(self.v_add(r1, r2)))

    def associator(self, product, alpha, x, y, z):
        # mu(mu(x,y), a(z)) - mu(a(x), mu(y,z))
        bx, by, bz = self.basis(x), self.basis(y), self.basis(z)
        left = self.apply_op(product, self.apply_op(product, bx, by), self.apply_map(alpha, bz))
        right = self.apply_op(product, self.apply_map(alpha, bx), self.apply_op(product, by, bz))
        return self.v_add(left, self.v_neg(right))

    def akivis_defect(self, bracket, ternary, alpha, x, y, z):
        # cyclic eps(z,x) [[x,y], a(z)]  minus
        # cyclic eps(z,x) ([x,y,z] - eps(x,y) [y,x,z])
        lhs = {}
        rhs = {}
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            pref = self.eps(c, a)
            ba, bb, bc = self.basis(a), self.basis(b), self.basis(c)
            lhs = self.v_add(
                lhs,
                self.v_scale(
                    pref,
                    self.apply_op(bracket, self.apply_op(bracket, ba, bb), self.apply_map(alpha, bc)),
                ),
            )
            t1 = self.apply_op(ternary, ba, bb, bc)
            t2 = self.v_scale(self.eps(a, b), self.apply_op(ternary, bb, ba, bc))
            rhs = self.v_add(rhs, self.v_scale(pref, self.v_add(t1, self.v_neg(t2))))
        return self.v_add(lhs, self.v_neg(rhs))

    def compat_defect(self, bracket, product, alpha, x, y, z):
        # [a(x), mu(y,z)] - mu([x,y], a(z)) - eps(x,y) mu(a(y), [x,z])
        bx, by, bz = self.basis(x), self.basis(y), self.basis(z)
        lhs = self.apply_op(bracket, self.apply_map(alpha, bx), self.apply_op(product, by, bz))
        r1 = self.apply_op(product, self.apply_op(bracket, bx, by), self.apply_map(alpha, bz))
        r2 = self.v_scale(
            self.eps(x, y),
            self.apply_op(product, self.apply_map(alpha, by), self.apply_op(bracket, bx, bz)),
        )
        return self.v_add(lhs, self.v_neg(self.v_add(r1, r2)))


def rational_field_oracle():
    return FieldOracle([0, 1])  # Q itself: x


def eps_constant_one(field):
    one = field.widen([1])

    def eps(i, j):
        return one

    return eps
