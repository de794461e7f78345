"""Graded centralizer functors and the Hopf monad on the neutral component.

For each group element a, Z_a(X) = (+)_{i in I_a} i* (x) X (x) i with its
universal dinatural transformation rho.  The neutral functor Z_1 carries a
Hopf monad structure (product, unit, comonoidal structure, antipodes via
fusion-operator inversion) whose modules form the G-center, and a
separability transformation gamma when dim(C_1) is invertible.
"""

from __future__ import annotations

from dataclasses import dataclass

from gcenter.category import FusionData, Mor, Obj


class ZeroDimensionError(ArithmeticError):
    """dim(C_1) vanishes; the separability transformation is undefined."""


@dataclass
class CentralizerImage:
    """Z_a(X) together with its summand bookkeeping."""
    alpha: int
    input: Obj
    output: Obj
    summands: list[tuple[int, Obj, Mor, Mor]]  # (i, i* X i, incl, proj)
    level: int

    def summand(self, i: int) -> tuple[Obj, Mor, Mor]:
        for j, s, inc, proj in self.summands:
            if j == i:
                return s, inc, proj
        raise KeyError(f"no summand for simple {i}")


def z_obj(data: FusionData, alpha: int, x: Obj) -> CentralizerImage:
    def build():
        level = x.level() + 1
        summands = []
        for i in sorted(data.simples_of_grade(alpha),
                        key=lambda s: data.simples[s]):
            rep = data.obj_simple(i, level=level)
            summands.append((i, data.ten(data.dual_obj(rep), x, rep)))
        total = data.dsum([s for _, s in summands]) if summands \
            else data.obj_zero()
        full = [(i, s, data.inclusion(s, total), data.projection(total, s))
                for i, s in summands]
        return CentralizerImage(alpha, x, total, full, level)
    return data.cache(("z_obj", alpha, x), build)


def _wrap_in(data: FusionData, f_dst: Obj, i: int, level0: int,
             z: CentralizerImage) -> Mor:
    """Transport ten(i*_{level0}, Y, i_{level0}) into the i-summand letters
    of z (which wrap z.input = Y at z.level)."""
    rep0 = data.obj_simple(i, level=level0)
    rep1 = data.obj_simple(i, level=z.level)
    return data.transport_wrap(f_dst, data.dual_obj(rep0), rep0,
                               data.dual_obj(rep1), rep1)


def z_mor(data: FusionData, alpha: int, f: Mor) -> Mor:
    zs = z_obj(data, alpha, f.src)
    zd = z_obj(data, alpha, f.dst)
    total = data.zero_mor(zs.output, zd.output)
    for (i, s_src, _inc, proj_s) in zs.summands:
        _s_dst, inc_d, _ = zd.summand(i)
        rep = data.obj_simple(i, level=zs.level)
        inner = data.ten_mor(data.identity(data.dual_obj(rep)), f,
                             data.identity(rep))
        move = _wrap_in(data, f.dst, i, zs.level, zd)
        total = total + (inc_d @ move @ inner @ proj_s)
    return total


def rho(data: FusionData, alpha: int, x: Obj, y: Obj) -> Mor:
    """Universal dinatural leg  y* (x) X (x) y -> Z_a(X); only the grade-a
    part of y contributes."""
    return data.cache(("rho", alpha, x, y), lambda: _rho(data, alpha, x, y))


def _rho(data: FusionData, alpha: int, x: Obj, y: Obj) -> Mor:
    z = z_obj(data, alpha, x)
    yd = data.dual_obj(y)
    src = data.ten(yd, x, y)
    total = data.zero_mor(src, z.output)
    for i, p, q in data.i_partition(y):
        if data.grade(i) != alpha:
            continue
        _s, inc, _proj = z.summand(i)
        leg = data.ten_mor(data.dual_mor(q), data.identity(x), p)
        move = _wrap_in(data, x, i, 0, z)
        total = total + (inc @ move @ leg)
    return total


def partial(data: FusionData, alpha: int, x: Obj, y: Obj) -> Mor:
    """del^a_{X,Y} = (id_Y (x) rho)(coev_Y (x) id_{X (x) Y})."""
    r = rho(data, alpha, x, y)
    first = data.ten_mor(data.coev(y), data.identity(data.ten(x, y)))
    second = data.ten_mor(data.identity(y), r)
    return second @ first


def z2_comonoidal(data: FusionData, alpha: int, x1: Obj, x2: Obj) -> Mor:
    """(Z_a)_2 : Z_a(X1 (x) X2) -> Z_a(X1) (x) Z_a(X2)."""
    return data.cache(("z2_comono", alpha, x1, x2),
                      lambda: _z2_comonoidal(data, alpha, x1, x2))


def _z2_comonoidal(data: FusionData, alpha: int, x1: Obj, x2: Obj) -> Mor:
    zsrc = z_obj(data, alpha, data.ten(x1, x2))
    z1 = z_obj(data, alpha, x1)
    z2 = z_obj(data, alpha, x2)
    dst = data.ten(z1.output, z2.output)
    total = data.zero_mor(zsrc.output, dst)
    for (i, s, _inc, proj) in zsrc.summands:
        rep = data.obj_simple(i, level=zsrc.level)
        repd = data.dual_obj(rep)
        split = data.ten_mor(data.identity(data.ten(repd, x1)),
                             data.coev(rep),
                             data.identity(data.ten(x2, rep)))
        _s1, inc_1, _ = z1.summand(i)
        _s2, inc_2, _ = z2.summand(i)
        t1 = _wrap_in(data, x1, i, zsrc.level, z1)
        t2 = _wrap_in(data, x2, i, zsrc.level, z2)
        piece = data.ten_mor(inc_1 @ t1, inc_2 @ t2) @ split @ proj
        total = total + piece
    return total


def z0_counit(data: FusionData, alpha: int) -> Mor:
    """(Z_a)_0 : Z_a(1) -> 1."""
    z = z_obj(data, alpha, data.obj_unit())
    total = data.zero_mor(z.output, data.obj_unit())
    for (i, _s, _inc, proj) in z.summands:
        rep = data.obj_simple(i, level=z.level)
        total = total + (data.ev(rep) @ proj)
    return total


def z2_mul(data: FusionData, alpha: int, beta: int, x: Obj) -> Mor:
    """Z_2(a,b)_X : Z_a(Z_b(X)) -> Z_{ba}(X), merging wrapper letters
    through I-partitions of the products of representatives."""
    return data.cache(("z2_mul", alpha, beta, x),
                      lambda: _z2_mul(data, alpha, beta, x))


def _z2_mul(data: FusionData, alpha: int, beta: int, x: Obj) -> Mor:
    zb = z_obj(data, beta, x)
    za = z_obj(data, alpha, zb.output)
    gz = data.group.mul(beta, alpha)
    ztgt = z_obj(data, gz, x)
    total = data.zero_mor(za.output, ztgt.output)
    for (i, _souter, _inc, proj_outer) in za.summands:
        rep_i = data.obj_simple(i, level=za.level)
        for (j, _sinner, _inc2, proj_inner) in zb.summands:
            rep_j = data.obj_simple(j, level=zb.level)
            w = data.ten(rep_j, rep_i)
            restrict = data.ten_mor(
                data.identity(data.dual_obj(rep_i)),
                data.ten_mor(proj_inner, data.identity(rep_i))) @ proj_outer
            # now living on dual(w) (x) X (x) w
            for k, p, q in data.i_partition(w):
                _s_t, inc_t, _ = ztgt.summand(k)
                leg = data.ten_mor(data.dual_mor(q), data.identity(x), p)
                move = _wrap_in(data, x, k, 0, ztgt)
                total = total + (inc_t @ move @ leg @ restrict)
    return total


def eta_unit(data: FusionData, x: Obj) -> Mor:
    """Monad unit X -> Z_1(X): inclusion of the unit summand."""
    z = z_obj(data, data.group.unit, x)
    _s, inc, _ = z.summand(data.unit)
    return inc @ _wrap_in(data, x, data.unit, 0, z)


def monad_mu(data: FusionData, x: Obj) -> Mor:
    u = data.group.unit
    return z2_mul(data, u, u, x)


def fusion_left(data: FusionData, x: Obj, y: Obj) -> Mor:
    """H^l_{X,Y} : Z_1(X (x) Z_1(Y)) -> Z_1(X) (x) Z_1(Y)."""
    u = data.group.unit
    zy = z_obj(data, u, y)
    zx = z_obj(data, u, x)
    split = z2_comonoidal(data, u, x, zy.output)
    mu = monad_mu(data, y)
    return data.ten_mor(data.identity(zx.output), mu) @ split


def fusion_right(data: FusionData, x: Obj, y: Obj) -> Mor:
    """H^r_{X,Y} : Z_1(Z_1(X) (x) Y) -> Z_1(X) (x) Z_1(Y)."""
    u = data.group.unit
    zx = z_obj(data, u, x)
    zy = z_obj(data, u, y)
    split = z2_comonoidal(data, u, zx.output, y)
    mu = monad_mu(data, x)
    return data.ten_mor(mu, data.identity(zy.output)) @ split


def antipode_l(data: FusionData, x: Obj) -> Mor:
    """s^l_X : Z_1(Z_1(X)*) -> X*, from the inverted left fusion operator."""
    return data.cache(("antipode_l", x), lambda: _antipode_l(data, x))


def _antipode_l(data: FusionData, x: Obj) -> Mor:
    u = data.group.unit
    zx = z_obj(data, u, x)
    zxd = data.dual_obj(zx.output)
    hl = fusion_left(data, zxd, x)
    hl_inv = data.mor_inverse(hl)
    t_ev = z_mor(data, u, data.ev(zx.output))
    t0 = z0_counit(data, u)
    eta = eta_unit(data, x)
    left = t0 @ t_ev @ hl_inv
    right = data.dual_mor(eta)
    zin = z_obj(data, u, zxd)
    first = data.ten_mor(data.identity(zin.output), data.coev(zx.output))
    return data.ten_mor(left, right) @ first


def gamma_separability(data: FusionData, x: Obj) -> Mor:
    """gamma_X : X -> Z_1(Z_1(X)), weighted by dim_r(i)/dim(C_1); satisfies
    mu gamma = eta and Z(mu) gamma_{Z} = mu_{Z} Z(gamma)."""
    u = data.group.unit
    dim1 = data.dim_component(u)
    if dim1.is_zero():
        raise ZeroDimensionError("dim(C_1) = 0")
    inv_dim = dim1.inverse()
    zx = z_obj(data, u, x)
    zzx = z_obj(data, u, zx.output)
    total = data.zero_mor(x, zzx.output)
    for i in data.simples_of_grade(u):
        di = data.dual[i]
        rep0 = data.obj_simple(i)
        body = data.ten_mor(data.coev_tilde(rep0), data.identity(x),
                            data.coev_tilde(rep0))
        # inner wrap: (i_0, X, i*_0) -> inner summand letters at dual(i)
        rep_in = data.obj_simple(di, level=zx.level)
        inner_move = data.transport_wrap(
            x, rep0, data.dual_obj(rep0), data.dual_obj(rep_in), rep_in)
        s_in, inc_in, _ = zx.summand(di)
        # outer wrap: (i*_0, s_in, i_0) -> outer summand letters at i
        rep_out = data.obj_simple(i, level=zzx.level)
        outer_move = data.transport_wrap(
            s_in, data.dual_obj(rep0), rep0,
            data.dual_obj(rep_out), rep_out)
        _s_out, inc_out, _ = zzx.summand(i)
        lift = data.ten_mor(data.identity(data.dual_obj(rep_out)), inc_in,
                            data.identity(rep_out))
        mid = data.ten_mor(data.identity(data.dual_obj(rep0)), inner_move,
                           data.identity(rep0))
        piece = inc_out @ lift @ outer_move @ mid @ body
        total = total + piece.scale(data.dim_r(i) * inv_dim)
    return total
