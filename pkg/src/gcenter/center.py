"""Objects and morphisms of the G-center.

A half braiding is a pair (A, sigma) with sigma stored on the representative
simples of the neutral component; values on composite neutral objects are
expanded through I-partitions.  Free objects F_a(X) = (Z_a(X), sigma^a) come
from the centralizer machinery, the forgetful/free adjunction identifies
Hom(F_1(X), b) with Hom_C(X, A), and the simple objects of each graded
component are obtained by splitting the endomorphism algebras of the free
objects on simples.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from gcenter import monad
from gcenter.category import FusionData, Mor, Obj
from gcenter.linalg import (Matrix, decompose_algebra, mat_kernel,
                            split_idempotent)


@dataclass
class HalfBraiding:
    data: FusionData
    A: Obj
    sigma: dict[int, Mor]  # neutral simple index -> A (x) i -> i (x) A
    free: tuple[int, Obj] | None = None  # (alpha, X) when built as F_a(X)

    def grade(self):
        return self.data.obj_grade(self.A)

    def sigma_at(self, y: Obj) -> Mor:
        """sigma_Y for a composite neutral object, via an I-partition."""
        data = self.data
        ida = data.identity(self.A)
        total = data.zero_mor(data.ten(self.A, y), data.ten(y, self.A))
        for i, p, q in data.i_partition(y):
            if data.grade(i) != data.group.unit:
                raise ValueError("sigma is only defined on neutral objects")
            total = total + data.ten_mor(q, ida) @ self.sigma[i] \
                @ data.ten_mor(ida, p)
        return total

    def sigma_inv(self, i: int) -> Mor:
        return self.data.mor_inverse(self.sigma[i])

    def content_key(self):
        """Hashable key identifying the half braiding up to equality."""
        cached = getattr(self, "_content_key", None)
        if cached is None:
            parts = []
            for i in sorted(self.sigma):
                for blk in self.sigma[i].blocks:
                    parts.append(tuple((c.order, c.num, c.den)
                                       for c in blk.entries))
            cached = (self.A, tuple(parts))
            object.__setattr__(self, "_content_key", cached)
        return cached

    def is_unit(self) -> bool:
        data = self.data
        return self.A == data.obj_unit() and all(
            self.sigma[i] == data.identity(
                data.ten(self.A, data.obj_simple(i)))
            for i in self.sigma)


@dataclass
class CenterMor:
    """A morphism of half braidings (the intertwining is the caller's
    obligation; check_center_mor verifies it)."""
    f: Mor
    src: HalfBraiding
    dst: HalfBraiding


@dataclass
class CenterSimple:
    grade: int
    parent: int
    block: int
    hb: HalfBraiding
    embed: Mor    # hb.A -> Z_1(parent)
    project: Mor  # Z_1(parent) -> hb.A
    label: str = ""


def neutral_simples(data: FusionData) -> list[int]:
    return sorted(data.simples_of_grade(data.group.unit),
                  key=lambda s: data.simples[s])


def unit_half_braiding(data: FusionData) -> HalfBraiding:
    unit = data.obj_unit()
    sigma = {i: data.identity(data.ten(unit, data.obj_simple(i)))
             for i in neutral_simples(data)}
    return HalfBraiding(data, unit, sigma)


def free_object(data: FusionData, alpha: int, x: Obj) -> HalfBraiding:
    """F_a(X) = (Z_a(X), sigma^a_X)."""
    z = monad.z_obj(data, alpha, x)
    u = data.group.unit
    merge = monad.z2_mul(data, u, alpha, x)
    sigma = {}
    for i in neutral_simples(data):
        rep = data.obj_simple(i)
        par = monad.partial(data, u, z.output, rep)
        sigma[i] = data.ten_mor(data.identity(rep), merge) @ par
    return HalfBraiding(data, z.output, sigma, free=(alpha, x))


def check_half_braiding(hb: HalfBraiding) -> list[str]:
    data = hb.data
    errors = []
    u = data.group.unit
    unit_rep = data.obj_simple(data.unit)
    if not (hb.sigma[data.unit] == data.identity(hb.A)):
        errors.append("sigma_1 != id")
    for i in neutral_simples(data):
        if not data.is_invertible_mor(hb.sigma[i]):
            errors.append(f"sigma_{data.label(i)} not invertible")
    for i in neutral_simples(data):
        for j in neutral_simples(data):
            yi, yj = data.obj_simple(i), data.obj_simple(j)
            lhs = hb.sigma_at(data.ten(yi, yj))
            rhs = data.ten_mor(data.identity(yi), hb.sigma[j]) @ \
                data.ten_mor(hb.sigma[i], data.identity(yj))
            if not (lhs == rhs):
                errors.append(
                    f"multiplicativity fails at ({data.label(i)},"
                    f"{data.label(j)})")
    return errors


def hb_tensor(a: HalfBraiding, b: HalfBraiding) -> HalfBraiding:
    data = a.data
    # strict unitality extends to half braidings
    if b.is_unit():
        return a
    if a.is_unit():
        return b
    prod = data.ten(a.A, b.A)
    sigma = {}
    for i in neutral_simples(data):
        sigma[i] = data.ten_mor(a.sigma[i], data.identity(b.A)) @ \
            data.ten_mor(data.identity(a.A), b.sigma[i])
    return HalfBraiding(data, prod, sigma)


def hb_dual(a: HalfBraiding) -> HalfBraiding:
    """(A, sigma)* = (A*, sigma-dagger)."""
    data = a.data
    ad = data.dual_obj(a.A)
    sigma = {}
    for i in neutral_simples(data):
        sigma[i] = sigma_dagger(a, i)
    return HalfBraiding(data, ad, sigma)


def sigma_dagger(a: HalfBraiding, i: int, variant: str = "inv") -> Mor:
    """The dual half braiding on A* at the neutral simple i.

    variant 'inv' uses sigma^{-1}; variant 'dual' uses the dual of
    sigma_{i*}.  The two agree (a property test)."""
    data = a.data
    rep = data.obj_simple(i)
    ad = data.dual_obj(a.A)
    ida, idad = data.identity(a.A), data.identity(ad)
    idy = data.identity(rep)
    if variant == "dual":
        return data.dual_mor(a.sigma[data.dual[i]])
    sinv = a.sigma_inv(i)
    step1 = data.ten_mor(data.identity(data.ten(ad, rep)), data.coev(a.A))
    step2 = data.ten_mor(idad, sinv, idad)
    step3 = data.ten_mor(data.ev(a.A), idy, idad)
    return step3 @ step2 @ step1


def check_center_mor(f: Mor, a: HalfBraiding, b: HalfBraiding) -> bool:
    data = a.data
    if f.src != a.A or f.dst != b.A:
        return False
    for i in neutral_simples(data):
        rep = data.obj_simple(i)
        lhs = data.ten_mor(data.identity(rep), f) @ a.sigma[i]
        rhs = b.sigma[i] @ data.ten_mor(f, data.identity(rep))
        if not (lhs == rhs):
            return False
    return True


# -- linear spaces of center morphisms -------------------------------------


def _mor_entries(f: Mor) -> list:
    out = []
    for b in f.blocks:
        out.extend(b.entries)
    return out


def hom_center(a: HalfBraiding, b: HalfBraiding) -> list[Mor]:
    """Basis of Hom_{Z_G(C)}((A,sigma),(B,rho)) as morphisms in C."""
    data = a.data
    unknowns = []
    for k in range(data.n):
        for r in range(b.A.mult[k]):
            for c in range(a.A.mult[k]):
                unknowns.append((k, r, c))
    if not unknowns:
        return []
    cols = []
    for (k, r, c) in unknowns:
        blocks = []
        for kk in range(data.n):
            ents = [data.zero_scalar()] * (b.A.mult[kk] * a.A.mult[kk])
            if kk == k:
                ents[r * a.A.mult[k] + c] = data.one()
            blocks.append(Matrix(b.A.mult[kk], a.A.mult[kk], ents))
        f = Mor(a.A, b.A, tuple(blocks))
        resid = []
        for i in neutral_simples(data):
            rep = data.obj_simple(i)
            lhs = data.ten_mor(data.identity(rep), f) @ a.sigma[i]
            rhs = b.sigma[i] @ data.ten_mor(f, data.identity(rep))
            resid.extend(_mor_entries(lhs - rhs))
        cols.append(resid)
    nrows = len(cols[0])
    m = Matrix(nrows, len(cols),
               [cols[j][i] for i in range(nrows) for j in range(len(cols))])
    basis = []
    for v in mat_kernel(m):
        blocks = [[data.zero_scalar()] * (b.A.mult[k] * a.A.mult[k])
                  for k in range(data.n)]
        for idx, (k, r, c) in enumerate(unknowns):
            blocks[k][r * a.A.mult[k] + c] = v[idx, 0]
        basis.append(Mor(a.A, b.A, tuple(
            Matrix(b.A.mult[k], a.A.mult[k], blocks[k])
            for k in range(data.n))))
    return basis


def hom_center_dim(a: HalfBraiding, b: HalfBraiding) -> int:
    return len(hom_center(a, b))


# -- adjunction --------------------------------------------------------------


def action_of(b: HalfBraiding) -> Mor:
    """The Z_1-action Z_1(A) -> A extracted from the half braiding."""
    data = b.data
    u = data.group.unit
    z = monad.z_obj(data, u, b.A)
    total = data.zero_mor(z.output, b.A)
    for (i, s, _inc, proj) in z.summands:
        rep = data.obj_simple(i)
        move = data.mor_inverse(monad._wrap_in(data, b.A, i, 0, z))
        step = data.ten_mor(data.ev(rep), data.identity(b.A)) @ \
            data.ten_mor(data.identity(data.dual_obj(rep)), b.sigma[i]) @ \
            move @ proj
        total = total + step
    return total


def adjunction_to_center(data: FusionData, x: Obj, b: HalfBraiding,
                         f: Mor) -> Mor:
    """Hom_C(X, A) -> Hom_{Z_G}(F_1(X), (A,sigma)):  r_b . Z_1(f)."""
    return action_of(b) @ monad.z_mor(data, data.group.unit, f)

def adjunction_from_center(data: FusionData, x: Obj, b: HalfBraiding,
                           g: Mor) -> Mor:
    """Hom_{Z_G}(F_1(X), (A,sigma)) -> Hom_C(X, A):  g . eta_X."""
    return g @ monad.eta_unit(data, x)


# -- simple objects ----------------------------------------------------------


def mor_to_matrix(data: FusionData, f: Mor) -> Matrix:
    """Block-diagonal matrix of an endomorphism (for algebra work)."""
    n = sum(f.src.mult)
    m = Matrix.zero(n, n, data.order)
    ents = [list(m.row(i)) for i in range(n)]
    off = 0
    for k in range(data.n):
        mk = f.src.mult[k]
        b = f.blocks[k]
        for r in range(mk):
            for c in range(mk):
                ents[off + r][off + c] = b[r, c]
        off += mk
    return Matrix(n, n, [v for row in ents for v in row])


def matrix_to_mor(data: FusionData, x: Obj, m: Matrix) -> Mor:
    blocks = []
    off = 0
    for k in range(data.n):
        mk = x.mult[k]
        ents = [m[off + r, off + c] for r in range(mk) for c in range(mk)]
        blocks.append(Matrix(mk, mk, ents))
        off += mk
    return Mor(x, x, tuple(blocks))


def split_center_idempotent(b: HalfBraiding, e: Mor) -> tuple[
        HalfBraiding, Mor, Mor]:
    """Split a center idempotent e on (A, sigma) inside the center.

    Returns (image half braiding on a standard object, p, q) with
    q . p = e and p . q = id."""
    data = b.data
    ps, qs, ranks = [], [], []
    for k in range(data.n):
        blk = e.blocks[k]
        if blk.rows == 0:
            ps.append(Matrix.zero(0, 0, data.order))
            qs.append(Matrix.zero(0, 0, data.order))
            ranks.append(0)
            continue
        s = split_idempotent(blk)
        ps.append(s.p)
        qs.append(s.q)
        ranks.append(s.rank)
    image = data.obj_std(tuple(ranks))
    p = Mor(b.A, image, tuple(ps))
    q = Mor(image, b.A, tuple(qs))
    sigma = {}
    for i in neutral_simples(data):
        rep = data.obj_simple(i)
        idr = data.identity(rep)
        sigma[i] = data.ten_mor(idr, p) @ b.sigma[i] @ data.ten_mor(q, idr)
    return HalfBraiding(data, image, sigma), p, q


def simple_objects(data: FusionData, alpha: int) -> list[CenterSimple]:
    """Representative simple objects of Z_alpha(C)."""
    def build():
        found: list[CenterSimple] = []
        for i in sorted(data.simples_of_grade(alpha),
                        key=lambda s: data.simples[s]):
            rep = data.obj_simple(i)
            fb = free_object(data, data.group.unit, rep)
            ends = hom_center(fb, fb)
            gens = [mor_to_matrix(data, f) for f in ends]
            dec = decompose_algebra(gens, order=data.order,
                                    n=fb.A.total_dim())
            for blk_idx, idem in enumerate(dec.idempotents):
                e = matrix_to_mor(data, fb.A, idem)
                hb, p, q = split_center_idempotent(fb, e)
                cand = CenterSimple(alpha, i, blk_idx, hb, q, p)
                if any(hom_center_dim(cand.hb, prev.hb) > 0
                       for prev in found):
                    continue
                assert hom_center_dim(cand.hb, cand.hb) == 1
                cand.label = (f"{data.label(i)}#{blk_idx}"
                              f"@{alpha}")
                found.append(cand)
        return found
    return data.cache(("center_simples", alpha), build)


def all_simple_objects(data: FusionData) -> list[CenterSimple]:
    out = []
    for alpha in data.group.elements():
        out.extend(simple_objects(data, alpha))
    return out
