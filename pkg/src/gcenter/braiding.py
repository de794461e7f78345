"""G-braiding, twist, ribbonness and modular data of the G-center.

The enhanced braiding Gamma^V twists a half braiding past a homogeneous
object and lands in the phi_V-image; with the canonical representatives it
realizes the G-braiding tau.  The twist is the partial trace of tau against
the duality, the ribbon criterion compares the two closures of sigma against
a representative, and the S-matrix collects traces of double braidings of
the neutral center simples.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from gcenter import center as center_mod
from gcenter import crossing, monad
from gcenter.category import FusionData, Mor, Obj
from gcenter.center import (CenterSimple, HalfBraiding, hb_dual, hb_tensor,
                            neutral_simples, simple_objects,
                            unit_half_braiding)
from gcenter.linalg import Matrix, determinant
from gcenter.scalars import Cyclotomic


def gamma_big(data: FusionData, v: Obj, b: HalfBraiding, x: Obj) -> Mor:
    """Gamma^V_{(A,sigma),X} : A (x) X -> X (x) E^V, |X| = |V|."""
    if data.obj_grade(v) != data.obj_grade(x):
        raise ValueError("Gamma needs |V| = |X|")
    img = crossing.phi_V(data, v, b)
    vd = data.dual_obj(v)
    sig = b.sigma_at(data.ten(x, vd))
    step1 = data.ten_mor(data.identity(data.ten(b.A, x)),
                         data.coev_tilde(v))
    step2 = data.ten_mor(sig, data.identity(v))
    step3 = data.ten_mor(data.identity(x), img.p)
    return step3 @ step2 @ step1


def gamma_big_inv(data: FusionData, v: Obj, b: HalfBraiding, x: Obj) -> Mor:
    img = crossing.phi_V(data, v, b)
    vd = data.dual_obj(v)
    sig_inv = data.mor_inverse(b.sigma_at(data.ten(x, vd)))
    step1 = data.ten_mor(data.identity(x), img.q)
    step2 = data.ten_mor(sig_inv, data.identity(v))
    step3 = data.ten_mor(data.identity(data.ten(b.A, x)), data.ev(v))
    return (step3 @ step2 @ step1).scale(
        data.dim_l_obj(v).inverse())


def tau(data: FusionData, a: HalfBraiding, b: HalfBraiding) -> Mor:
    """The G-braiding tau_{a,b} : A (x) B -> B (x) phi_{|b|}(A)."""
    beta = b.grade()
    if beta is None:
        raise ValueError("tau needs a homogeneous right factor")
    v = crossing.rep_object(data, beta)
    return gamma_big(data, v, a, b.A)


def tau_inv(data: FusionData, a: HalfBraiding, b: HalfBraiding) -> Mor:
    beta = b.grade()
    v = crossing.rep_object(data, beta)
    return gamma_big_inv(data, v, a, b.A)


def tau_free_path(data: FusionData, alpha: int, x: Obj, y: Obj) -> Mor:
    """Closed form of tau_{F_a(X), Y} through the centralizer structure:
    (id_Y (x) omega^{-1} Z_2(b,a)_X) del^b_{Z_a(X), Y} for Y of grade b."""
    beta = data.obj_grade(y)
    za = monad.z_obj(data, alpha, x)
    par = monad.partial(data, beta, za.output, y)
    merge = monad.z2_mul(data, beta, alpha, x)
    v = crossing.rep_object(data, beta)
    om = crossing.omega(data, beta, alpha, x)
    om_inv = data.mor_inverse(om)
    return data.ten_mor(data.identity(y), om_inv @ merge) @ par


def twist(data: FusionData, b: HalfBraiding) -> Mor:
    """theta_b : A -> E^{V_alpha}  (underlying the map b -> phi_{|b|}(b))."""
    alpha = b.grade()
    t = tau(data, b, b)
    img = crossing.phi_alpha(data, alpha, b)
    ad = data.dual_obj(b.A)
    step1 = data.ten_mor(data.coev_tilde(b.A), data.identity(b.A))
    step2 = data.ten_mor(data.identity(ad), t)
    step3 = data.ten_mor(data.ev(b.A), data.identity(img.E))
    out = step3 @ step2 @ step1
    assert out.dst == img.E
    return out


def scalar_multiple(data: FusionData, f: Mor) -> Cyclotomic | None:
    """c with f = c id, or None."""
    if f.src != f.dst:
        return None
    c = None
    for k in range(data.n):
        blk = f.blocks[k]
        for r in range(blk.rows):
            for s in range(blk.cols):
                want = blk[r, s]
                if r == s:
                    if c is None:
                        c = want
                    elif not (c == want):
                        return None
                elif not want.is_zero():
                    return None
    return c if c is not None else data.zero_scalar()


def twist_scalar_neutral(data: FusionData, b: HalfBraiding) -> Cyclotomic:
    """(phi_0)^{-1} theta for a neutral center object with End = k."""
    th = twist(data, b)
    ph_inv = crossing.phi0_inv(data, b)
    c = scalar_multiple(data, ph_inv @ th)
    if c is None:
        raise ArithmeticError("twist is not scalar; object not simple?")
    return c


# -- ribbon criterion --------------------------------------------------------


def ribbon_sides(data: FusionData, b: HalfBraiding, u: Obj) -> tuple[Mor,
                                                                     Mor]:
    """The two closures of sigma whose equality characterizes ribbonness:
    both are morphisms A (x) U* -> U* (x) A."""
    a = b.A
    ad = data.dual_obj(a)
    ud = data.dual_obj(u)
    sig1 = b.sigma_at(data.ten(a, ud))
    lhs = data.ten_mor(data.ev(a), data.identity(data.ten(ud, a))) @ \
        data.ten_mor(data.identity(ad), sig1) @ \
        data.ten_mor(data.coev_tilde(a), data.identity(data.ten(a, ud)))
    sig2 = b.sigma_at(data.ten(ud, a))
    rhs = data.ten_mor(data.identity(data.ten(ud, a)),
                       data.ev_tilde(a)) @ \
        data.ten_mor(sig2, data.identity(ad)) @ \
        data.ten_mor(data.identity(data.ten(a, ud)), data.coev(a))
    return lhs, rhs


def ribbon_check(data: FusionData) -> bool:
    for alpha in data.group.elements():
        u = crossing.rep_object(data, alpha)
        for s in simple_objects(data, alpha):
            lhs, rhs = ribbon_sides(data, s.hb, u)
            if not (lhs == rhs):
                return False
    return True


def pivotal_structure_iso(data: FusionData, v: Obj, y: HalfBraiding,
                          y_dual: HalfBraiding) -> Mor:
    """F^l(Y) : phi_V(Y*) -> phi_V(Y)* for the pivotal functor phi_V."""
    img_y = crossing.phi_V(data, v, y)
    img_yd = crossing.phi_V(data, v, y_dual)
    prod = hb_tensor(y_dual, y)
    ev_center = data.ev(y.A)  # a morphism (Y* (x) Y, -) -> (1, id)
    f_ev = crossing.phi_V_mor(data, v, ev_center, prod,
                              unit_half_braiding(data))
    f2 = crossing.phi_V_monoidal(data, v, y_dual, y)
    f0_inv = crossing.phi_V_unit_inv(data, v)
    num = f0_inv @ f_ev @ f2
    step1 = data.ten_mor(data.identity(img_yd.E), data.coev(img_y.E))
    step2 = data.ten_mor(num, data.identity(data.dual_obj(img_y.E)))
    return step2 @ step1


def pivotal_structure_iso_r(data: FusionData, v: Obj, y: HalfBraiding,
                            y_dual: HalfBraiding) -> Mor:
    """F^r(Y) : phi_V(Y*) -> phi_V(Y)*, the right-handed companion."""
    img_y = crossing.phi_V(data, v, y)
    img_yd = crossing.phi_V(data, v, y_dual)
    prod = hb_tensor(y, y_dual)
    evt_center = data.ev_tilde(y.A)
    f_ev = crossing.phi_V_mor(data, v, evt_center, prod,
                              unit_half_braiding(data))
    f2 = crossing.phi_V_monoidal(data, v, y, y_dual)
    f0_inv = crossing.phi_V_unit_inv(data, v)
    num = f0_inv @ f_ev @ f2
    step1 = data.ten_mor(data.coev_tilde(img_y.E),
                         data.identity(img_yd.E))
    step2 = data.ten_mor(data.identity(data.dual_obj(img_y.E)), num)
    return step2 @ step1


def twist_selfdual_check(data: FusionData, b: HalfBraiding) -> bool:
    """The self-duality equation of the twist, checked exactly."""
    alpha = b.grade()
    g = data.group
    v_a = crossing.rep_object(data, alpha)
    v_ai = crossing.rep_object(data, g.inv(alpha))
    v_1 = crossing.rep_object(data, g.unit)
    th = twist(data, b)
    lhs = data.dual_mor(th)
    y = crossing.phi_V(data, v_a, b).gamma
    yd = hb_dual(y)
    th_dual = twist(data, yd)
    fl = pivotal_structure_iso(data, v_ai, y, yd)
    ph2 = crossing.zeta(data, v_ai, v_a, v_1, b)
    ph2_inv_dual = data.dual_mor(data.mor_inverse(ph2))
    ph0_dual = data.dual_mor(crossing.phi0(data, b))
    rhs = ph0_dual @ ph2_inv_dual @ fl @ th_dual
    return lhs == rhs


# -- modular data -------------------------------------------------------------


@dataclass
class ModularReport:
    labels: list[str]
    s_matrix: Matrix
    determinant: Cyclotomic
    is_invertible: bool
    ribbon_ok: bool
    spherical_ok: bool
    dim_neutral: Cyclotomic
    twists: list[Cyclotomic]
    component_sizes: dict[int, int]
    is_g_modular: bool = field(init=False)

    def __post_init__(self):
        self.is_g_modular = (self.is_invertible and self.ribbon_ok
                             and self.spherical_ok
                             and all(v > 0
                                     for v in self.component_sizes.values()))


def neutral_braiding(data: FusionData, a: CenterSimple,
                     b: CenterSimple) -> Mor:
    """c_{a,b} = (id (x) phi_0^{-1}) tau : A (x) B -> B (x) A."""
    t = tau(data, a.hb, b.hb)
    ph_inv = crossing.phi0_inv(data, a.hb)
    return data.ten_mor(data.identity(b.hb.A), ph_inv) @ t


def s_matrix(data: FusionData) -> ModularReport:
    u = data.group.unit
    dim1 = data.dim_component(u)
    if dim1.is_zero():
        raise monad.ZeroDimensionError("dim(C_1) = 0")
    sims = simple_objects(data, u)
    n = len(sims)
    entries = []
    for i in range(n):
        for j in range(n):
            cij = neutral_braiding(data, sims[i], sims[j])
            cji = neutral_braiding(data, sims[j], sims[i])
            entries.append(data.trace_l(cji @ cij))
    smat = Matrix(n, n, entries)
    det = determinant(smat)
    rep = data.validate()
    spherical_ok = all(ok for name, ok, _ in rep.checks
                       if name == "spherical")
    twists = [twist_scalar_neutral(data, s.hb) for s in sims]
    sizes = {alpha: len(simple_objects(data, alpha))
             for alpha in data.group.elements()}
    return ModularReport(
        labels=[s.label for s in sims],
        s_matrix=smat,
        determinant=det,
        is_invertible=not det.is_zero(),
        ribbon_ok=ribbon_check(data),
        spherical_ok=spherical_ok,
        dim_neutral=dim1,
        twists=twists,
        component_sizes=sizes,
    )
