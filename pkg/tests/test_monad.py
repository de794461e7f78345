import random

import pytest

from gcenter import monad
from gcenter.category import FusionData
from gcenter.examples import bundled_category
from gcenter.linalg import Matrix
from gcenter.scalars import cyc


@pytest.fixture(scope="module")
def vz4():
    return bundled_category("z4_to_z2")


def rand_mor(data, src, dst, rng):
    blocks = []
    for i in range(data.n):
        ents = [cyc(rng.randint(-2, 2)).promote(data.order)
                for _ in range(dst.mult[i] * src.mult[i])]
        blocks.append(Matrix(dst.mult[i], src.mult[i], ents))
    return data.mor_from_blocks(src, dst, blocks)


def test_z_obj_shapes(vz4):
    d0 = vz4.obj_simple(0)
    z = monad.z_obj(vz4, 0, d0)
    # I_1 = {d0, d2}: summands 1*d0*1 = d0 and d2* d0 d2 = d0
    assert z.output.mult == (2, 0, 0, 0)
    z1 = monad.z_obj(vz4, 1, vz4.obj_unit())
    # I_alpha = {d1, d3}: d1* 1 d1 = d0, d3* 1 d3 = d0
    assert z1.output.mult == (2, 0, 0, 0)
    assert monad.z_obj(vz4, 0, vz4.obj_zero()).output.is_zero()


def test_z_mor_functorial(vz4):
    rng = random.Random(0)
    x = vz4.obj_std((1, 0, 1, 0))
    y = vz4.obj_std((2, 0, 0, 0))
    zz = vz4.obj_std((1, 0, 2, 0))
    f = rand_mor(vz4, x, y, rng)
    g = rand_mor(vz4, y, zz, rng)
    lhs = monad.z_mor(vz4, 0, g @ f)
    rhs = monad.z_mor(vz4, 0, g) @ monad.z_mor(vz4, 0, f)
    assert lhs == rhs
    assert monad.z_mor(vz4, 0, vz4.identity(x)) == \
        vz4.identity(monad.z_obj(vz4, 0, x).output)


def test_rho_on_simple_is_inclusion(vz4):
    x = vz4.obj_simple(1)
    y = vz4.obj_simple(2)
    r = monad.rho(vz4, 0, x, y)
    z = monad.z_obj(vz4, 0, x)
    s, inc, _ = z.summand(2)
    move = vz4.transport_wrap(x, vz4.dual_obj(vz4.obj_simple(2)),
                              vz4.obj_simple(2),
                              vz4.dual_obj(vz4.obj_simple(2, level=z.level)),
                              vz4.obj_simple(2, level=z.level))
    assert r == inc @ move


def test_rho_dinaturality(vz4):
    rng = random.Random(1)
    x = vz4.obj_simple(1)
    y1 = vz4.obj_std((1, 0, 1, 0))
    y2 = vz4.obj_std((2, 0, 1, 0))
    f = rand_mor(vz4, y1, y2, rng)
    # rho_{X,Y1} (f* (x) id (x) id) = rho_{X,Y2} (id (x) id (x) f)
    lhs = monad.rho(vz4, 0, x, y1) @ vz4.ten_mor(
        vz4.dual_mor(f), vz4.identity(x), vz4.identity(y1))
    rhs = monad.rho(vz4, 0, x, y2) @ vz4.ten_mor(
        vz4.identity(vz4.dual_obj(y2)), vz4.identity(x), f)
    assert lhs == rhs


def test_rho_factorization_of_dinaturals(vz4):
    # any partition-built dinatural factors through rho via (+)_i d_i
    x = vz4.obj_simple(3)
    z = monad.z_obj(vz4, 0, x)
    y = vz4.obj_std((1, 0, 1, 0))
    # build d from an I-partition with modified weights: d_Y = sum over
    # lambda with weight w(i): still dinatural
    weights = {0: cyc(2), 2: cyc(-3)}
    d = vz4.zero_mor(vz4.ten(vz4.dual_obj(y), x, y), z.output)
    for i, p, q in vz4.i_partition(y):
        if vz4.grade(i) != 0:
            continue
        _s, inc, _ = z.summand(i)
        move = monad._wrap_in(vz4, x, i, 0, z)
        leg = vz4.ten_mor(vz4.dual_mor(q), vz4.identity(x), p)
        d = d + (inc @ move @ leg).scale(weights[i])
    # factor: phi = (+)_i w(i) id on summand i
    phi = vz4.zero_mor(z.output, z.output)
    for i, _s, inc, proj in z.summands:
        phi = phi + (inc @ proj).scale(weights[i])
    assert d == phi @ monad.rho(vz4, 0, x, y)


def test_partial_unit_is_eta(vz4):
    for x in [vz4.obj_simple(0), vz4.obj_simple(1),
              vz4.obj_std((1, 1, 1, 0))]:
        assert monad.partial(vz4, 0, x, vz4.obj_unit()) == \
            monad.eta_unit(vz4, x)


def test_comonoidal_counit_law(vz4):
    u = 0
    for x in [vz4.obj_simple(1), vz4.obj_std((1, 0, 1, 0))]:
        unit = vz4.obj_unit()
        z = monad.z_obj(vz4, u, x)
        z2 = monad.z2_comonoidal(vz4, u, x, unit)
        z0 = monad.z0_counit(vz4, u)
        lhs = vz4.ten_mor(vz4.identity(z.output), z0) @ z2
        assert lhs == vz4.identity(z.output)
        z2l = monad.z2_comonoidal(vz4, u, unit, x)
        lhs2 = vz4.ten_mor(z0, vz4.identity(z.output)) @ z2l
        assert lhs2 == vz4.identity(z.output)


def test_comonoidal_coassociativity(vz4):
    u = 0
    x1 = vz4.obj_simple(1)
    x2 = vz4.obj_simple(1)
    x3 = vz4.obj_simple(2)
    x12 = vz4.ten(x1, x2)
    x23 = vz4.ten(x2, x3)
    za = monad.z_obj(vz4, u, x1).output
    zc = monad.z_obj(vz4, u, x3).output
    lhs = vz4.ten_mor(vz4.identity(za),
                      monad.z2_comonoidal(vz4, u, x2, x3)) @ \
        monad.z2_comonoidal(vz4, u, x1, x23)
    rhs = vz4.ten_mor(monad.z2_comonoidal(vz4, u, x1, x2),
                      vz4.identity(zc)) @ \
        monad.z2_comonoidal(vz4, u, x12, x3)
    assert lhs == rhs


def test_monad_unit_laws(vz4):
    u = 0
    for x in [vz4.obj_simple(0), vz4.obj_simple(1),
              vz4.obj_std((1, 1, 0, 0))]:
        z = monad.z_obj(vz4, u, x)
        mu = monad.monad_mu(vz4, x)
        eta_at_z = monad.eta_unit(vz4, z.output)
        assert mu @ eta_at_z == vz4.identity(z.output)
        z_eta = monad.z_mor(vz4, u, monad.eta_unit(vz4, x))
        assert mu @ z_eta == vz4.identity(z.output)


def test_monad_associativity(vz4):
    u = 0
    x = vz4.obj_simple(1)
    z = monad.z_obj(vz4, u, x)
    mu = monad.monad_mu(vz4, x)
    lhs = mu @ monad.z_mor(vz4, u, mu)
    rhs = mu @ monad.monad_mu(vz4, z.output)
    assert lhs == rhs


def test_z2_monoidality_square(vz4):
    # Z_2(ba, c) Z_2(a, b)_{Z_c} = Z_2(a, cb) Z_a(Z_2(b, c))
    G = vz4.group
    x = vz4.obj_simple(1)
    for a in G.elements():
        for b in G.elements():
            for c in G.elements():
                zc = monad.z_obj(vz4, c, x)
                lhs = monad.z2_mul(vz4, G.mul(b, a), c, x) @ \
                    monad.z2_mul(vz4, a, b, zc.output)
                rhs = monad.z2_mul(vz4, a, G.mul(c, b), x) @ \
                    monad.z_mor(vz4, a, monad.z2_mul(vz4, b, c, x))
                assert lhs == rhs


def test_z2_with_inverse_grade_invertible(vz4):
    x = vz4.obj_simple(1)
    za = monad.z_obj(vz4, 1, x)
    m = monad.z2_mul(vz4, 1, 1, x)  # Z_1grade... alpha=1, beta=1 in Z/2
    # alpha = beta = the nontrivial grade: Z_a Z_a -> Z_{aa} = Z_1; the
    # composite with the section built from eta-type legs is invertible;
    # here just check it is surjective exactly: full rank.
    from gcenter.linalg import rank
    total_rank = sum(rank(b) for b in m.blocks)
    ztgt = monad.z_obj(vz4, 0, x)
    assert total_rank == ztgt.output.total_dim()


def test_fusion_operators_invertible(vz4):
    for x, y in [(vz4.obj_simple(0), vz4.obj_simple(0)),
                 (vz4.obj_simple(1), vz4.obj_simple(2)),
                 (vz4.obj_simple(3), vz4.obj_simple(1))]:
        hl = monad.fusion_left(vz4, x, y)
        hr = monad.fusion_right(vz4, x, y)
        assert vz4.mor_inverse(hl) @ hl == vz4.identity(hl.src)
        assert hr @ vz4.mor_inverse(hr) == vz4.identity(hr.dst)


def test_antipode_type_and_grades(vz4):
    for x in [vz4.obj_simple(0), vz4.obj_simple(1)]:
        s = monad.antipode_l(vz4, x)
        zx = monad.z_obj(vz4, 0, x)
        zin = monad.z_obj(vz4, 0, vz4.dual_obj(zx.output))
        assert s.src == zin.output
        assert s.dst == vz4.dual_obj(x)
        assert vz4.obj_grade(s.src) == vz4.obj_grade(s.dst)


def test_separability_identities(vz4):
    u = 0
    for x in [vz4.obj_simple(0), vz4.obj_simple(1)]:
        g = monad.gamma_separability(vz4, x)
        mu = monad.monad_mu(vz4, x)
        assert mu @ g == monad.eta_unit(vz4, x)
        z = monad.z_obj(vz4, u, x)
        lhs = monad.z_mor(vz4, u, mu) @ monad.gamma_separability(
            vz4, z.output)
        rhs = monad.monad_mu(vz4, z.output) @ monad.z_mor(vz4, u, g)
        assert lhs == rhs


def test_separability_weights_sum(vz4):
    total = vz4.zero_scalar()
    dim1 = vz4.dim_component(0)
    for i in vz4.simples_of_grade(0):
        total = total + vz4.dim_r(i) * vz4.dim_l(i)
    assert total == dim1
