"""Exact dense linear algebra over cyclotomic fields.

Everything here is deterministic and exact: Gaussian elimination for rank,
kernels and inverses, Faddeev-LeVerrier characteristic polynomials, column
based idempotent splitting, and the decomposition of split semisimple
matrix algebras into primitive orthogonal idempotents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from gcenter import _kernel
from gcenter.scalars import Cyclotomic, _phi_lower, cyc


class NonSplitFieldError(ArithmeticError):
    """A characteristic polynomial does not split into linear factors over
    the working cyclotomic field; the field order is too small."""


class NonSemisimpleError(ArithmeticError):
    """The input algebra failed a semisimplicity check."""


_identity_cache: dict = {}


class Matrix:
    __slots__ = ("rows", "cols", "entries", "_order", "_nz")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._order = None
        self._nz = None

    def nonzeros(self):
        """Cached list of (flat index, entry) with nonzero entries."""
        if self._nz is None:
            self._nz = [(idx, e) for idx, e in enumerate(self.entries)
                        if e.nzf]
        return self._nz

    # -- constructors --------------------------------------------------

    @staticmethod
    def from_rows(rows_data) -> "Matrix":
        rows = len(rows_data)
        cols = len(rows_data[0]) if rows else 0
        ents = [cyc(v) for row in rows_data for v in row]
        return Matrix(rows, cols, ents)

    @staticmethod
    def identity(n: int, order: int = 1) -> "Matrix":
        cached = _identity_cache.get((n, order))
        if cached is None:
            one = Cyclotomic.one(order)
            zero = Cyclotomic.zero(order)
            ents = [zero] * (n * n)
            for i in range(n):
                ents[i * n + i] = one
            cached = Matrix(n, n, ents)
            _identity_cache[(n, order)] = cached
        return cached

    @staticmethod
    def zero(rows: int, cols: int, order: int = 1) -> "Matrix":
        z = Cyclotomic.zero(order)
        return Matrix(rows, cols, [z] * (rows * cols))

    # -- access ----------------------------------------------------------

    def __getitem__(self, key):
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i: int):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_lists(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"

    # -- basic algebra ----------------------------------------------------

    def _self_order(self) -> int:
        if self._order is None:
            n = 1
            for e in self.entries:
                if e.order != 1:
                    n = n * e.order // gcd(n, e.order)
            self._order = n
        return self._order

    def _common_order(self, other=None) -> int:
        n = self._self_order()
        if other is not None:
            m = other._self_order()
            n = n * m // gcd(n, m)
        return n

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix addition")
        if len(self.entries) > 256:
            # sparse accumulation: only touch nonzero positions
            ents = list(self.entries)
            for idx, e in other.nonzeros():
                cur = ents[idx]
                ents[idx] = (cur + e) if cur.nzf else e
            return Matrix(self.rows, self.cols, ents)
        return Matrix(self.rows, self.cols,
                      [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> "Matrix":
        c = cyc(c)
        return Matrix(self.rows, self.cols, [c * a for a in self.entries])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} @ "
                f"{other.rows}x{other.cols}")
        size = self.rows * self.cols + other.rows * other.cols
        if size > 1024:
            sparse = len(self.nonzeros()) * 4 <= self.rows * self.cols \
                or len(other.nonzeros()) * 4 <= other.rows * other.cols
            if sparse:
                return self._matmul_sparse(other)
        order = self._common_order(other)
        phi = _phi_lower(order)
        a = [(e.num, e.den) for e in
             (x.promote(order) for x in self.entries)]
        b = [(e.num, e.den) for e in
             (x.promote(order) for x in other.entries)]
        raw = _kernel.mat_mul(a, b, self.rows, self.cols, other.cols, phi)
        ents = [Cyclotomic(order, num, den) for num, den in raw]
        return Matrix(self.rows, other.cols, ents)

    def _matmul_sparse(self, other: "Matrix") -> "Matrix":
        bc = other.cols
        b_rows: dict[int, list[tuple[int, Cyclotomic]]] = {}
        for idx, e in other.nonzeros():
            b_rows.setdefault(idx // bc, []).append((idx % bc, e))
        zero = Cyclotomic.zero(1)
        acc: dict[int, Cyclotomic] = {}
        for idx, a in self.nonzeros():
            row = b_rows.get(idx % self.cols)
            if not row:
                continue
            base = (idx // self.cols) * bc
            for j, b in row:
                key = base + j
                prod = a * b
                cur = acc.get(key)
                acc[key] = prod if cur is None else cur + prod
        ents = [zero] * (self.rows * bc)
        for key, v in acc.items():
            ents[key] = v
        return Matrix(self.rows, bc, ents)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self[i, j] for j in range(self.cols)
                       for i in range(self.rows)])

    def trace(self) -> Cyclotomic:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        t = Cyclotomic.zero()
        for i in range(self.rows):
            t = t + self[i, i]
        return t

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and all(a == b for a, b in zip(self.entries, other.entries)))

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        ents = []
        for i in range(self.rows):
            ents.extend(self.row(i))
            ents.extend(other.row(i))
        return Matrix(self.rows, self.cols + other.cols, ents)


# -- elimination --------------------------------------------------------


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot column indices."""
    a = [list(m.row(i)) for i in range(m.rows)]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pr = None
        for i in range(r, m.rows):
            if not a[i][c].is_zero():
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = a[r][c].inverse()
        a[r] = [inv * v for v in a[r]]
        for i in range(m.rows):
            if i != r and not a[i][c].is_zero():
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return Matrix(m.rows, m.cols, [v for row in a for v in row]), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def mat_kernel(m: Matrix) -> list[Matrix]:
    """Basis of the right null space, as column vectors."""
    r, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Cyclotomic.zero() for _ in range(m.cols)]
        v[fc] = Cyclotomic.one()
        for i, pc in enumerate(pivots):
            v[pc] = -r[i, fc]
        basis.append(Matrix(m.cols, 1, v))
    return basis


def solve_right(a: Matrix, b: Matrix) -> Matrix | None:
    """One solution x of a @ x = b, or None if inconsistent."""
    aug = a.hstack(b)
    r, pivots = rref(aug)
    if any(p >= a.cols for p in pivots):
        return None
    x = Matrix.zero(a.cols, b.cols)
    ents = [list(x.row(i)) for i in range(a.cols)]
    for i, pc in enumerate(pivots):
        for j in range(b.cols):
            ents[pc][j] = r[i, a.cols + j]
    return Matrix(a.cols, b.cols, [v for row in ents for v in row])


def _monomial_inverse(m: Matrix) -> Matrix | None:
    """Fast inverse for matrices with one nonzero entry per row/column."""
    n = m.rows
    nz = m.nonzeros()
    if len(nz) != n:
        return None
    row_of_col: list[int | None] = [None] * n
    val_of_col: list[Cyclotomic | None] = [None] * n
    rows_seen = [False] * n
    for idx, e in nz:
        i, j = idx // n, idx % n
        if rows_seen[i] or row_of_col[j] is not None:
            return None
        rows_seen[i] = True
        row_of_col[j] = i
        val_of_col[j] = e
    ents = [Cyclotomic.zero(1)] * (n * n)
    for j in range(n):
        i = row_of_col[j]
        if i is None:
            return None
        ents[j * n + i] = val_of_col[j].inverse()
    return Matrix(n, n, ents)


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    if m.rows > 16:
        fast = _monomial_inverse(m)
        if fast is not None:
            return fast
    x = solve_right(m, Matrix.identity(m.rows))
    if x is None or not (m @ x == Matrix.identity(m.rows)):
        raise ArithmeticError("matrix is not invertible")
    return x


def determinant(m: Matrix) -> Cyclotomic:
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    a = [list(m.row(i)) for i in range(n)]
    det = Cyclotomic.one()
    for c in range(n):
        pr = None
        for i in range(c, n):
            if not a[i][c].is_zero():
                pr = i
                break
        if pr is None:
            return Cyclotomic.zero()
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            det = -det
        det = det * a[c][c]
        inv = a[c][c].inverse()
        for i in range(c + 1, n):
            if not a[i][c].is_zero():
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def charpoly(m: Matrix) -> list[Cyclotomic]:
    """Coefficients of det(xI - m), constant term first, monic."""
    n = m.rows
    if n != m.cols:
        raise ValueError("characteristic polynomial of non-square matrix")
    coeffs = [Cyclotomic.zero()] * n + [Cyclotomic.one()]
    mk = Matrix.identity(n)
    for k in range(1, n + 1):
        am = m @ mk
        c = -(am.trace() / cyc(k))
        coeffs[n - k] = c
        mk = am + Matrix.identity(n).scale(c)
    return coeffs


# -- polynomial root extraction over Q(zeta_N) ---------------------------


def _poly_eval(p: list[Cyclotomic], x: Cyclotomic) -> Cyclotomic:
    acc = Cyclotomic.zero()
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _poly_deflate(p: list[Cyclotomic], root: Cyclotomic) -> list[Cyclotomic]:
    # Synthetic division by (x - root); assumes p(root) == 0 and p monic.
    out = [Cyclotomic.zero()] * (len(p) - 1)
    carry = Cyclotomic.zero()
    for k in range(len(p) - 1, 0, -1):
        carry = p[k] + carry * root if k < len(p) - 1 else p[k]
        out[k - 1] = carry
    return out


def _rational_candidates(p: list[Cyclotomic]) -> list[Fraction]:
    """Rational values q such that some q * zeta^k could be a root of the
    monic polynomial p; derived from divisors of the constant term data."""
    nums: set[int] = {1}
    dens: set[int] = {1}
    for c in p:
        for v in c.num:
            if v:
                nums.add(abs(v))
        dens.add(c.den)

    def divisors(n: int) -> set[int]:
        out = set()
        d = 1
        while d * d <= n:
            if n % d == 0:
                out.add(d)
                out.add(n // d)
            d += 1
        return out

    num_divs: set[int] = set()
    for v in nums:
        if v and len(num_divs) < 512:
            num_divs |= divisors(v)
    den_divs: set[int] = set()
    for v in dens:
        den_divs |= divisors(v)
    cands = {Fraction(0)}
    for u in num_divs:
        for v in den_divs | num_divs:
            cands.add(Fraction(u, v))
            cands.add(Fraction(-u, v))
            cands.add(Fraction(v, u))
            cands.add(Fraction(-v, u))
    return sorted(cands)


def poly_roots(p: list[Cyclotomic], order: int) -> list[Cyclotomic]:
    """All roots of the monic p in Q(zeta_order), with multiplicity.

    Roots are searched among rational multiples of order-th roots of unity
    (sufficient for the character-theoretic spectra arising here).  Raises
    NonSplitFieldError if a nonlinear factor remains.
    """
    p = [c.promote(order * c.order // gcd(order, c.order)) for c in p]
    roots: list[Cyclotomic] = []
    zero = Cyclotomic.zero(order)
    while len(p) > 1:
        if p[0].is_zero():
            roots.append(zero)
            p = p[1:]
            continue
        found = None
        for q in _rational_candidates(p):
            if q == 0:
                continue
            for k in range(order):
                cand = Cyclotomic.zeta(order, k) * cyc(q)
                if _poly_eval(p, cand).is_zero():
                    found = cand
                    break
            if found is not None:
                break
        if found is None:
            raise NonSplitFieldError(
                f"polynomial of degree {len(p) - 1} has no linear factor "
                f"over Q(zeta_{order}); increase the cyclotomic order")
        roots.append(found)
        p = _poly_deflate(p, found)
    return roots


# -- idempotent splitting -------------------------------------------------


@dataclass
class SplitResult:
    rank: int
    p: Matrix  # rank x n
    q: Matrix  # n x rank


def split_idempotent(e: Matrix) -> SplitResult:
    """Split e = q @ p with p @ q = identity; e must satisfy e @ e = e."""
    if e.rows != e.cols:
        raise ValueError("idempotent must be square")
    if not (e @ e == e):
        raise ArithmeticError("matrix is not idempotent")
    r, pivots = rref(e)
    k = len(pivots)
    # q: pivot columns of e;  p: the nonzero rows of the RREF.
    q = Matrix(e.rows, k, [e[i, c] for i in range(e.rows) for c in pivots])
    p = Matrix(k, e.cols, [r[i, j] for i in range(k) for j in range(e.cols)])
    assert p @ q == Matrix.identity(k)
    assert q @ p == e
    return SplitResult(k, p, q)


# -- semisimple algebra decomposition -------------------------------------


@dataclass
class AlgebraDecomposition:
    idempotents: list[Matrix]
    block_dims: list[int]


def _flatten(m: Matrix) -> list[Cyclotomic]:
    return list(m.entries)


def algebra_basis(generators: list[Matrix], n: int) -> list[Matrix]:
    """Basis of the unital algebra generated inside End(k^n)."""
    basis: list[Matrix] = []
    rows: list[list[Cyclotomic]] = []

    def try_add(m: Matrix) -> bool:
        cand = Matrix(len(rows) + 1, n * n,
                      [v for row in rows for v in row] + _flatten(m))
        if rank(cand) > len(rows):
            basis.append(m)
            rows.append(_flatten(m))
            return True
        return False

    try_add(Matrix.identity(n))
    queue = list(generators)
    while queue:
        m = queue.pop(0)
        if try_add(m):
            for b in list(basis):
                queue.append(b @ m)
                queue.append(m @ b)
    return basis


def algebra_center(basis: list[Matrix], n: int) -> list[Matrix]:
    """Basis of the center of the algebra spanned by ``basis``."""
    if not basis:
        return []
    # Unknown x = sum c_i basis_i ; constraints [x, b_j] = 0.
    cols = []
    for bi in basis:
        col = []
        for bj in basis:
            col.extend(_flatten(bi @ bj - bj @ bi))
        cols.append(col)
    m = Matrix(len(cols[0]), len(basis),
               [cols[j][i] for i in range(len(cols[0]))
                for j in range(len(basis))])
    out = []
    for v in mat_kernel(m):
        z = Matrix.zero(n, n)
        for i, b in enumerate(basis):
            z = z + b.scale(v[i, 0])
        out.append(z)
    return out


def _eigen_split(e: Matrix, t: Matrix, order: int) -> list[Matrix]:
    """Split the idempotent e along the spectrum of t (with te = et = t,
    t in eAe).  Returns sub-idempotents summing to e, or [e] if no split."""
    n = e.rows
    # Restrict t to the image of e to read off the spectrum.
    se = split_idempotent(e)
    tr = se.p @ t @ se.q
    roots = poly_roots(charpoly(tr), order)
    distinct: list[Cyclotomic] = []
    for r in roots:
        if not any(r == d for d in distinct):
            distinct.append(r)
    if len(distinct) < 2:
        return [e]
    parts = []
    for lam in distinct:
        f = e
        for mu in distinct:
            if mu == lam:
                continue
            f = f @ (t - e.scale(mu)).scale((lam - mu).inverse())
        parts.append(f)
    total = Matrix.zero(n, n)
    for f in parts:
        if not (f @ f == f):
            return [e]  # t not semisimple on im(e); caller may try others
        total = total + f
    if not (total == e):
        return [e]
    return [f for f in parts if not f.is_zero()]


def decompose_algebra(generators: list[Matrix], order: int = 1,
                      n: int | None = None) -> AlgebraDecomposition:
    """Primitive orthogonal idempotents of the unital algebra generated by
    ``generators`` inside End(k^n), summing to the identity.

    The algebra must be semisimple and split over Q(zeta_order).
    """
    if n is None:
        if not generators:
            raise ValueError("need generators or an explicit dimension")
        n = generators[0].rows
    basis = algebra_basis(generators, n)
    center = algebra_center(basis, n)

    # Step 1: split the identity into primitive central idempotents.
    blocks = [Matrix.identity(n)]
    changed = True
    while changed:
        changed = False
        for z in center:
            new_blocks = []
            for e in blocks:
                parts = _eigen_split(e, e @ z @ e, order)
                if len(parts) > 1:
                    changed = True
                new_blocks.extend(parts)
            blocks = new_blocks

    # Verify central primitivity: center restricted to each block is 1-dim.
    for e in blocks:
        se = split_idempotent(e)
        rows = [_flatten(se.p @ z @ se.q) for z in center]
        m = Matrix(len(rows), se.rank * se.rank,
                   [v for row in rows for v in row])
        if rank(m) != 1:
            raise NonSemisimpleError(
                "central idempotent did not become primitive; "
                "algebra may be non-semisimple or the field too small")

    # Step 2: inside each central block, peel primitive idempotents.
    prims: list[Matrix] = []
    for e in blocks:
        stack = [e]
        while stack:
            f = stack.pop()
            sub = _block_subalgebra_dim(basis, f)
            if sub == 1:
                prims.append(f)
                continue
            parts = _try_split_noncentral(basis, f, order)
            if parts is None:
                raise NonSemisimpleError(
                    "could not split a non-primitive idempotent; algebra "
                    "may be non-semisimple over this field")
            stack.extend(parts)

    prims.sort(key=lambda m: tuple(
        (c.order, c.num, c.den) for c in m.entries))
    dims = [rank(f) for f in prims]
    total = Matrix.zero(n, n)
    for f in prims:
        total = total + f
    assert total == Matrix.identity(n)
    return AlgebraDecomposition(prims, dims)


def _block_subalgebra_dim(basis: list[Matrix], f: Matrix) -> int:
    rows = [_flatten(f @ b @ f) for b in basis]
    m = Matrix(len(rows), f.rows * f.cols, [v for row in rows for v in row])
    return rank(m)


def _try_split_noncentral(basis: list[Matrix], f: Matrix,
                          order: int) -> list[Matrix] | None:
    cands = [f @ b @ f for b in basis]
    cands += [a + b for i, a in enumerate(cands) for b in cands[i + 1:]]
    for t in cands:
        parts = _eigen_split(f, t, order)
        if len(parts) > 1:
            return parts
    return None
