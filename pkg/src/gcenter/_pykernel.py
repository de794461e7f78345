"""Pure-Python arithmetic kernel for cyclotomic coefficient vectors.

An element of Q(zeta_N) is stored as a pair ``(nums, den)`` where ``nums`` is
a tuple of ints of length deg(Phi_N) (coordinates in the power basis) and
``den`` is a positive int; gcd(gcd(*nums), den) == 1.  ``phi`` is the tuple
of the lower coefficients of the monic cyclotomic polynomial Phi_N, i.e.
Phi_N(x) = x^m + phi[m-1] x^{m-1} + ... + phi[0].

The compiled twin (_cykernel.pyx) implements the same functions; either one
is selected at import time by gcenter._kernel.
"""

from math import gcd

IS_COMPILED = False


def normalize(nums, den):
    """Reduce to lowest terms with a positive denominator."""
    if den < 0:
        den = -den
        nums = [-v for v in nums]
    g = den
    for v in nums:
        if g == 1:
            break
        g = gcd(g, v)
    if g > 1:
        den //= g
        nums = [v // g for v in nums]
    return tuple(nums), den


def poly_add(an, ad, bn, bd):
    g = gcd(ad, bd)
    fa = bd // g
    fb = ad // g
    nums = [x * fa + y * fb for x, y in zip(an, bn)]
    return normalize(nums, ad * fa)


def poly_scale(an, ad, cn, cd):
    nums = [x * cn for x in an]
    return normalize(nums, ad * cd)


def reduce_mod(p, phi):
    """Reduce an integer coefficient list in place modulo the monic Phi."""
    m = len(phi)
    for k in range(len(p) - 1, m - 1, -1):
        c = p[k]
        if c:
            p[k] = 0
            base = k - m
            for j in range(m):
                if phi[j]:
                    p[base + j] -= c * phi[j]
    del p[m:]
    return p


def _conv_into(acc, an, bn):
    for i, x in enumerate(an):
        if x:
            for j, y in enumerate(bn):
                if y:
                    acc[i + j] += x * y


def poly_mul_mod(an, ad, bn, bd, phi):
    m = len(phi)
    acc = [0] * (2 * m)
    _conv_into(acc, an, bn)
    reduce_mod(acc, phi)
    return normalize(acc, ad * bd)


def poly_dot_mod(avals, bvals, phi):
    """Sum of products of paired elements; one reduction at the end.

    ``avals``/``bvals`` are sequences of (nums, den) pairs of equal length.
    """
    m = len(phi)
    acc = [0] * (2 * m)
    den = 1
    for (an, ad), (bn, bd) in zip(avals, bvals):
        d = ad * bd
        if d == den:
            _conv_into(acc, an, bn)
        else:
            g = gcd(den, d)
            fa = d // g
            if fa != 1:
                for k in range(len(acc)):
                    acc[k] *= fa
            den *= fa
            f = den // d
            if f == 1:
                _conv_into(acc, an, bn)
            else:
                _conv_into(acc, [x * f for x in an], bn)
    reduce_mod(acc, phi)
    return normalize(acc, den)


def mat_mul(a, b, nrows, ninner, ncols, phi):
    """Multiply matrices given as row-major lists of (nums, den) entries."""
    bcols = []
    for j in range(ncols):
        bcols.append([b[k * ncols + j] for k in range(ninner)])
    out = []
    for i in range(nrows):
        arow = a[i * ninner:(i + 1) * ninner]
        for j in range(ncols):
            out.append(poly_dot_mod(arow, bcols[j], phi))
    return out
