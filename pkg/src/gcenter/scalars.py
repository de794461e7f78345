"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are represented in the power basis {zeta_N^k : 0 <= k < deg(Phi_N)}
of Q[x]/Phi_N(x), with an integer coefficient vector over a single positive
denominator.  Working modulo the cyclotomic polynomial (rather than x^N - 1)
gives a field with unique canonical forms, hence decidable equality.

Binary operations between elements of different orders promote both to
Q(zeta_lcm).  Engine code normally fixes a single order per category
instance, so promotions are rare there.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import gcd

from gcenter import _kernel

Rational = Fraction

_phi_cache: dict[int, tuple[int, ...]] = {}
_phi_lock = threading.Lock()


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (den monic)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[len(den) - 1 + k]
        out[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Full coefficient tuple of Phi_n, constant term first, monic."""
    if n < 1:
        raise ValueError("order must be positive")
    with _phi_lock:
        cached = _phi_cache.get(n)
    if cached is not None:
        return cached
    # (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively.
    poly = [0] * (n + 1)
    poly[0] = -1
    poly[n] = 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divide_exact(poly, list(cyclotomic_polynomial(d)))
    result = tuple(poly)
    with _phi_lock:
        _phi_cache.setdefault(n, result)
    return result


def _phi_lower(n: int) -> tuple[int, ...]:
    """Lower coefficients of Phi_n (drops the leading 1); reduction data."""
    return cyclotomic_polynomial(n)[:-1]


def _phi_degree(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


class Cyclotomic:
    """An element of Q(zeta_N), immutable."""

    __slots__ = ("order", "num", "den", "nzf")

    def __init__(self, order: int, num: tuple[int, ...], den: int):
        # Trusted constructor: num/den must already be normalized and of
        # length deg(Phi_order).  Use the factory functions below otherwise.
        self.order = order
        self.num = num
        self.den = den
        self.nzf = any(num)

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(value, order: int = 1) -> "Cyclotomic":
        q = Fraction(value)
        m = _phi_degree(order)
        num = [0] * m
        num[0] = q.numerator
        return Cyclotomic(order, tuple(num), q.denominator)

    @staticmethod
    def zeta(order: int, power: int = 1) -> "Cyclotomic":
        power %= order
        m = _phi_degree(order)
        acc = [0] * (power + 1)
        acc[power] = 1
        acc += [0] * (2 * m - len(acc))
        _kernel.reduce_mod(acc, _phi_lower(order))
        num, den = _kernel.normalize(acc, 1)
        return Cyclotomic(order, num, den)

    @staticmethod
    def zero(order: int = 1) -> "Cyclotomic":
        return Cyclotomic.from_rational(0, order)

    @staticmethod
    def one(order: int = 1) -> "Cyclotomic":
        return Cyclotomic.from_rational(1, order)

    # -- order handling -----------------------------------------------

    def promote(self, order: int) -> "Cyclotomic":
        """Embed into Q(zeta_order); requires self.order | order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot embed Q(z{self.order}) in Q(z{order})")
        step = order // self.order
        m = _phi_degree(order)
        acc = [0] * max(2 * m, (len(self.num) - 1) * step + 1)
        for k, c in enumerate(self.num):
            if c:
                acc[k * step] += c
        _kernel.reduce_mod(acc, _phi_lower(order))
        num, den = _kernel.normalize(acc, self.den)
        return Cyclotomic(order, num, den)

    @staticmethod
    def _common(a: "Cyclotomic", b) -> tuple["Cyclotomic", "Cyclotomic"]:
        if not isinstance(b, Cyclotomic):
            b = Cyclotomic.from_rational(b)
        if a.order == b.order:
            return a, b
        n = a.order * b.order // gcd(a.order, b.order)
        return a.promote(n), b.promote(n)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Cyclotomic):
            if not other.nzf and other.order == self.order:
                return self
            if not self.nzf and self.order == other.order:
                return other
        a, b = Cyclotomic._common(self, other)
        num, den = _kernel.poly_add(a.num, a.den, b.num, b.den)
        return Cyclotomic(a.order, num, den)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, tuple(-v for v in self.num), self.den)

    def __sub__(self, other):
        a, b = Cyclotomic._common(self, other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Cyclotomic) and self.order == other.order:
            if not self.nzf:
                return self
            if not other.nzf:
                return other
        a, b = Cyclotomic._common(self, other)
        num, den = _kernel.poly_mul_mod(a.num, a.den, b.num, b.den,
                                        _phi_lower(a.order))
        return Cyclotomic(a.order, num, den)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic")
        # Extended Euclid in Q[x] against Phi_N.
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        a = [Fraction(v, self.den) for v in self.num]
        while a and a[-1] == 0:
            a.pop()
        r0, r1 = phi, a
        s0: list[Fraction] = [Fraction(0)]
        s1: list[Fraction] = [Fraction(1)]
        while True:
            if len(r1) == 1:
                inv = 1 / r1[0]
                coeffs = [c * inv for c in s1]
                break
            q, rem = _qpoly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
            if not r1:
                raise ArithmeticError("element not invertible mod Phi_N")
        m = _phi_degree(self.order)
        acc_n = [0] * (2 * m)
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        for k, c in enumerate(coeffs[:2 * m]):
            acc_n[k] = c.numerator * (den // c.denominator)
        _kernel.reduce_mod(acc_n, _phi_lower(self.order))
        num, d = _kernel.normalize(acc_n, den)
        return Cyclotomic(self.order, num, d)

    def __truediv__(self, other):
        a, b = Cyclotomic._common(self, other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.from_rational(other).__truediv__(self)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- predicates and views -------------------------------------------

    def is_zero(self) -> bool:
        return not self.nzf

    def is_rational(self) -> bool:
        return all(v == 0 for v in self.num[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation zeta -> zeta^{-1}."""
        n = self.order
        m = _phi_degree(n)
        acc = [0] * (2 * m + n)
        for k, c in enumerate(self.num):
            if c:
                acc[(-k) % n] += c
        _kernel.reduce_mod(acc, _phi_lower(n))
        num, den = _kernel.normalize(acc, self.den)
        return Cyclotomic(n, num, den)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = Cyclotomic._common(self, other)
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        # Elements compare equal across orders after promotion; for hashing
        # we use the minimal cyclotomic subfield representation.
        c = self.demote()
        return hash((c.order, c.num, c.den))

    def demote(self) -> "Cyclotomic":
        """Smallest-order representation among divisors of the order."""
        if self.order == 1:
            return self
        target = [Fraction(v, self.den) for v in self.num]
        for d in sorted(_divisors(self.order)[:-1]):
            md = _phi_degree(d)
            basis = [Cyclotomic.zeta(d, k).promote(self.order)
                     for k in range(md)]
            cols = [[Fraction(b.num[i], b.den) for i in range(len(self.num))]
                    for b in basis]
            sol = _qsolve(cols, target)
            if sol is not None:
                den = 1
                for c in sol:
                    den = den * c.denominator // gcd(den, c.denominator)
                num = tuple(c.numerator * (den // c.denominator) for c in sol)
                num, den = _kernel.normalize(list(num), den)
                return Cyclotomic(d, num, den)
        return self

    def __repr__(self):
        if self.is_rational():
            return f"Cyc({Fraction(self.num[0], self.den)})"
        terms = []
        for k, v in enumerate(self.num):
            if v:
                q = Fraction(v, self.den)
                terms.append(f"{q}*z{self.order}^{k}" if k else f"{q}")
        return "Cyc(" + " + ".join(terms) + ")"

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        coeffs = []
        for v in self.num:
            q = Fraction(v, self.den)
            coeffs.append([str(q.numerator), str(q.denominator)])
        return {"N": self.order, "coeffs": coeffs}

    @staticmethod
    def from_json(data) -> "Cyclotomic":
        if isinstance(data, (int, str)):
            return Cyclotomic.from_rational(Fraction(data))
        n = int(data["N"])
        coeffs = [Fraction(int(p), int(q)) for p, q in data["coeffs"]]
        if len(coeffs) != _phi_degree(n):
            raise ValueError("coefficient vector has wrong length")
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        num = tuple(c.numerator * (den // c.denominator) for c in coeffs)
        num, den = _kernel.normalize(list(num), den)
        return Cyclotomic(n, num, den)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _qsolve(cols: list[list[Fraction]], target: list[Fraction]):
    """Solve sum_j x_j cols[j] = target over Q; None if inconsistent."""
    nrows = len(target)
    ncols = len(cols)
    aug = [[cols[j][i] for j in range(ncols)] + [target[i]]
           for i in range(nrows)]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, nrows):
        if aug[i][ncols] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = aug[i][ncols]
    return sol


# -- Q[x] helpers for the extended Euclidean algorithm --------------------

def _qpoly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _qpoly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _qpoly_trim(out)


def _qpoly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _qpoly_trim(out)


def _qpoly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for k in range(len(q) - 1, -1, -1):
        c = a[len(b) - 1 + k] / lead
        q[k] = c
        if c:
            for j, d in enumerate(b):
                a[k + j] -= c * d
    return _qpoly_trim(q), _qpoly_trim(a[:len(b) - 1])


# Convenience shorthands used across the engine.

def cyc(value, order: int = 1) -> Cyclotomic:
    if isinstance(value, Cyclotomic):
        return value
    return Cyclotomic.from_rational(value, order)


def zeta(order: int, power: int = 1) -> Cyclotomic:
    return Cyclotomic.zeta(order, power)


ZERO = Cyclotomic.zero()
ONE = Cyclotomic.one()
