# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled cyclotomic coefficient kernels.

Same contract as lgorb._kernels_py: raw field elements are (nums, den)
with integer numerators over one positive denominator.  Numerators are
arbitrary-precision Python ints; the win over the pure kernels is loop
and call overhead, not integer arithmetic.
"""

from math import gcd

BACKEND = "compiled"


def normalize(nums, den):
    cdef Py_ssize_t i, n = len(nums)
    cdef bint any_nonzero = False
    if den < 0:
        den = -den
        nums = [-v for v in nums]
    g = den
    for i in range(n):
        v = nums[i]
        if v:
            any_nonzero = True
            g = gcd(g, v)
            if g == 1:
                break
    if not any_nonzero:
        return tuple(nums), 1
    if g > 1:
        den = den // g
        return tuple([v // g for v in nums]), den
    return tuple(nums), den


def add(an, ad, bn, bd):
    cdef Py_ssize_t i, n = len(an)
    if ad == bd:
        return normalize([an[i] + bn[i] for i in range(n)], ad)
    g = gcd(ad, bd)
    fa = bd // g
    fb = ad // g
    return normalize([an[i] * fa + bn[i] * fb for i in range(n)], (ad // g) * bd)


cdef list _mul_nums(an, bn, rows):
    cdef Py_ssize_t i, j, e, phi = len(an)
    cdef list conv = [0] * (2 * phi - 1)
    for i in range(phi):
        ai = an[i]
        if ai:
            for j in range(phi):
                bj = bn[j]
                if bj:
                    conv[i + j] = conv[i + j] + ai * bj
    cdef list out = conv[:phi]
    for e in range(phi, 2 * phi - 1):
        ce = conv[e]
        if ce:
            row = rows[e - phi]
            for j in range(phi):
                rj = row[j]
                if rj:
                    out[j] = out[j] + ce * rj
    return out


def mul(an, ad, bn, bd, rows):
    return normalize(_mul_nums(an, bn, rows), ad * bd)


def addmul(an, ad, bn, bd, cn, cd, rows):
    cdef Py_ssize_t i, n = len(an)
    cdef list pn = _mul_nums(bn, cn, rows)
    pd = bd * cd
    if ad == pd:
        return normalize([an[i] + pn[i] for i in range(n)], ad)
    g = gcd(ad, pd)
    fa = pd // g
    fp = ad // g
    return normalize([an[i] * fa + pn[i] * fp for i in range(n)], (ad // g) * pd)
