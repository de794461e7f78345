# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled arithmetic kernel; mirrors gcenter._pykernel.

Coefficients are arbitrary-precision Python ints (kept as objects), so the
speedup over the pure kernel comes from C-level loop and list handling, not
from fixed-width arithmetic.
"""

from math import gcd

IS_COMPILED = True


def normalize(nums, den):
    cdef Py_ssize_t i, n
    cdef list out
    if den < 0:
        den = -den
        nums = [-v for v in nums]
    g = den
    for v in nums:
        if g == 1:
            break
        g = gcd(g, v)
    if g > 1:
        den = den // g
        out = [v // g for v in nums]
        return tuple(out), den
    return tuple(nums), den


def poly_add(an, ad, bn, bd):
    cdef Py_ssize_t i, n = len(an)
    cdef list nums = [0] * n
    g = gcd(ad, bd)
    fa = bd // g
    fb = ad // g
    for i in range(n):
        nums[i] = an[i] * fa + bn[i] * fb
    return normalize(nums, ad * fa)


def poly_scale(an, ad, cn, cd):
    cdef list nums = [x * cn for x in an]
    return normalize(nums, ad * cd)


def reduce_mod(list p, phi):
    cdef Py_ssize_t m = len(phi)
    cdef Py_ssize_t k, j, base
    for k in range(len(p) - 1, m - 1, -1):
        c = p[k]
        if c:
            p[k] = 0
            base = k - m
            for j in range(m):
                f = phi[j]
                if f:
                    p[base + j] = p[base + j] - c * f
    del p[m:]
    return p


cdef void _conv_into(list acc, an, bn):
    cdef Py_ssize_t i, j
    cdef Py_ssize_t na = len(an), nb = len(bn)
    for i in range(na):
        x = an[i]
        if x:
            for j in range(nb):
                y = bn[j]
                if y:
                    acc[i + j] = acc[i + j] + x * y


def poly_mul_mod(an, ad, bn, bd, phi):
    cdef Py_ssize_t m = len(phi)
    cdef list acc = [0] * (2 * m)
    _conv_into(acc, an, bn)
    reduce_mod(acc, phi)
    return normalize(acc, ad * bd)


def poly_dot_mod(avals, bvals, phi):
    cdef Py_ssize_t m = len(phi)
    cdef list acc = [0] * (2 * m)
    cdef Py_ssize_t k, n = len(avals)
    cdef Py_ssize_t idx
    den = 1
    for idx in range(n):
        an, ad = avals[idx]
        bn, bd = bvals[idx]
        d = ad * bd
        if d == den:
            _conv_into(acc, an, bn)
        else:
            g = gcd(den, d)
            fa = d // g
            if fa != 1:
                for k in range(len(acc)):
                    acc[k] = acc[k] * fa
            den = den * fa
            f = den // d
            if f == 1:
                _conv_into(acc, an, bn)
            else:
                _conv_into(acc, [x * f for x in an], bn)
    reduce_mod(acc, phi)
    return normalize(acc, den)


def mat_mul(list a, list b, Py_ssize_t nrows, Py_ssize_t ninner,
            Py_ssize_t ncols, phi):
    cdef list bcols = []
    cdef list out = []
    cdef Py_ssize_t i, j, k
    for j in range(ncols):
        bcols.append([b[k * ncols + j] for k in range(ninner)])
    for i in range(nrows):
        arow = a[i * ninner:(i + 1) * ninner]
        for j in range(ncols):
            out.append(poly_dot_mod(arow, bcols[j], phi))
    return out
