# cython: language_level=3
"""Compiled arithmetic kernels for cyclotomic scalar coefficients.

Mirror of ``_core_py``; same canonical (nums, den) contract.  Coefficients
are arbitrary-precision Python ints, so the win over the pure backend is
loop and call overhead, not limb arithmetic.
"""

from math import gcd

BACKEND_NAME = "cython"


cpdef tuple normalize(nums, den):
    cdef Py_ssize_t i, d
    if den == 0:
        raise ZeroDivisionError("scalar with zero denominator")
    d = len(nums)
    if den < 0:
        den = -den
        nums = [-n for n in nums]
    g = den
    for i in range(d):
        g = gcd(g, nums[i])
        if g == 1:
            return tuple(nums), den
    return tuple([n // g for n in nums]), den // g


cpdef tuple add(anums, aden, bnums, bden):
    cdef Py_ssize_t i, d = len(anums)
    cdef list out = [0] * d
    if aden == bden:
        for i in range(d):
            out[i] = anums[i] + bnums[i]
        return normalize(out, aden)
    for i in range(d):
        out[i] = anums[i] * bden + bnums[i] * aden
    return normalize(out, aden * bden)


cpdef tuple sub(anums, aden, bnums, bden):
    cdef Py_ssize_t i, d = len(anums)
    cdef list out = [0] * d
    if aden == bden:
        for i in range(d):
            out[i] = anums[i] - bnums[i]
        return normalize(out, aden)
    for i in range(d):
        out[i] = anums[i] * bden - bnums[i] * aden
    return normalize(out, aden * bden)


cpdef tuple mul(anums, aden, bnums, bden, reduction):
    cdef Py_ssize_t i, j, t, d = len(anums)
    if d == 1:
        return normalize([anums[0] * bnums[0]], aden * bden)
    cdef list conv = [0] * (2 * d - 1)
    for i in range(d):
        a = anums[i]
        if a:
            for j in range(d):
                b = bnums[j]
                if b:
                    conv[i + j] = conv[i + j] + a * b
    cdef list out = conv[:d]
    for t in range(d - 1):
        c = conv[d + t]
        if c:
            row = reduction[t]
            for j in range(d):
                r = row[j]
                if r:
                    out[j] = out[j] + c * r
    return normalize(out, aden * bden)
