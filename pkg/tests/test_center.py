import itertools
import random

import pytest

from gcenter import center, monad
from gcenter.category import FusionData
from gcenter.examples import bundled_category, bundled_epi
from gcenter.linalg import Matrix
from gcenter.scalars import Cyclotomic, cyc


@pytest.fixture(scope="module")
def vz4():
    return bundled_category("z4_to_z2")


@pytest.fixture(scope="module")
def toric():
    # trivial G, C = Vec_{Z/2}: the center is the toric code
    return bundled_category("z2_to_1")


def brute_force_pointed_center(data, alpha):
    """Independent oracle: solve the half-braiding equations directly for
    all one-dimensional underlying objects of a pointed category."""
    neutral = [i for i in range(data.n) if data.grade(i) == data.group.unit]
    roots = [Cyclotomic.zeta(data.order, k) for k in range(data.order)]
    sols = []
    for a in data.simples_of_grade(alpha):
        for values in itertools.product(range(data.order),
                                        repeat=len(neutral)):
            chi = {i: roots[v] for i, v in zip(neutral, values)}
            if not chi[data.unit] == 1:
                continue
            ok = True
            for i in neutral:
                for j in neutral:
                    # sigma scalar on delta_i (x) delta_j; in the pointed
                    # case the braid payload is chi multiplicativity plus
                    # commutation delta_a delta_i = delta_i delta_a
                    k = next(kk for kk in range(data.n)
                             if data.N(i, j, kk))
                    if not (chi[i] * chi[j] == chi[k]):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                # need a i = i a in H for the braiding to exist at all
                if all(next(k for k in range(data.n) if data.N(a, i, k)) ==
                       next(k for k in range(data.n) if data.N(i, a, k))
                       for i in neutral):
                    sols.append((a, tuple(sorted(
                        (i, str(chi[i].num) + "/" + str(chi[i].den))
                        for i in neutral))))
    return sorted(set(sols))


def test_free_object_is_half_braiding(vz4):
    for alpha in (0, 1):
        for i in range(4):
            hb = center.free_object(vz4, alpha, vz4.obj_simple(i))
            assert center.check_half_braiding(hb) == []


def test_free_object_shapes(vz4):
    hb = center.free_object(vz4, 0, vz4.obj_simple(0))
    assert hb.A.mult == (2, 0, 0, 0)
    hb2 = center.free_object(vz4, 1, vz4.obj_simple(0))
    assert hb2.A.mult == (2, 0, 0, 0)
    # underlying object of F_a(d0) is indexed by I_a = {d1, d3}
    z = monad.z_obj(vz4, 1, vz4.obj_simple(0))
    assert [i for i, *_ in z.summands] == [1, 3]


def test_unit_half_braiding(vz4):
    unit = center.unit_half_braiding(vz4)
    assert center.check_half_braiding(unit) == []
    a = center.free_object(vz4, 1, vz4.obj_simple(1))
    prod = center.hb_tensor(a, unit)
    assert prod.A == a.A
    for i in center.neutral_simples(vz4):
        assert prod.sigma[i] == a.sigma[i]


def test_hb_tensor_axiom_and_grade(vz4):
    a = center.free_object(vz4, 0, vz4.obj_simple(0))
    b = center.free_object(vz4, 0, vz4.obj_simple(0))
    prod = center.hb_tensor(a, b)
    assert prod.A.total_dim() == 4
    assert center.check_half_braiding(prod) == []
    assert prod.grade() == 0
    c = center.free_object(vz4, 0, vz4.obj_simple(1))
    assert center.hb_tensor(a, c).grade() == 1


def test_hb_tensor_associative(vz4):
    a = center.free_object(vz4, 0, vz4.obj_simple(1))
    b = center.free_object(vz4, 1, vz4.obj_simple(0))
    c = center.free_object(vz4, 0, vz4.obj_simple(2))
    lhs = center.hb_tensor(center.hb_tensor(a, b), c)
    rhs = center.hb_tensor(a, center.hb_tensor(b, c))
    assert lhs.A == rhs.A
    for i in center.neutral_simples(vz4):
        assert lhs.sigma[i] == rhs.sigma[i]


def test_hb_dual_formulas_agree(vz4):
    for alpha, x in [(0, vz4.obj_simple(0)), (1, vz4.obj_simple(1))]:
        a = center.free_object(vz4, alpha, x)
        for i in center.neutral_simples(vz4):
            f_inv = center.sigma_dagger(a, i, variant="inv")
            f_dual = center.sigma_dagger(a, i, variant="dual")
            assert f_inv == f_dual
        da = center.hb_dual(a)
        assert center.check_half_braiding(da) == []
        assert vz4.dim_l_obj(da.A) == vz4.dim_l_obj(a.A)


def test_dual_of_unit(vz4):
    unit = center.unit_half_braiding(vz4)
    du = center.hb_dual(unit)
    assert du.A == unit.A
    for i in center.neutral_simples(vz4):
        assert du.sigma[i] == unit.sigma[i]


def test_is_center_mor(vz4):
    a = center.free_object(vz4, 0, vz4.obj_simple(0))
    assert center.check_center_mor(vz4.identity(a.A), a, a)
    # a generic non-intertwining endomorphism
    bad_blocks = []
    for k in range(vz4.n):
        m = a.A.mult[k]
        ents = [cyc(r * m + c + 1).promote(vz4.order)
                for r in range(m) for c in range(m)]
        bad_blocks.append(Matrix(m, m, ents))
    from gcenter.category import Mor
    bad = Mor(a.A, a.A, tuple(bad_blocks))
    assert not center.check_center_mor(bad, a, a)


def test_adjunction_bijection(vz4):
    u = 0
    x = vz4.obj_simple(0)
    b = center.free_object(vz4, u, x)
    # dim Hom_Z(F1(d0), F1(d0)) = dim Hom_C(d0, Z1(d0)) = 2
    ends = center.hom_center(b, b)
    assert len(ends) == 2
    z = monad.z_obj(vz4, u, x)
    assert z.output.mult[0] == 2
    # round trips
    rng = random.Random(0)
    for g in ends:
        f = center.adjunction_from_center(vz4, x, b, g)
        g2 = center.adjunction_to_center(vz4, x, b, f)
        assert g2 == g
    # other direction: arbitrary f: X -> A
    for seed in range(3):
        rng = random.Random(seed)
        ents = [cyc(rng.randint(-3, 3)).promote(vz4.order)
                for _ in range(b.A.mult[0] * 1)]
        from gcenter.category import Mor
        blocks = [Matrix(b.A.mult[k], x.mult[k],
                         ents if k == 0 else [])
                  for k in range(vz4.n)]
        f = Mor(x, b.A, tuple(blocks))
        g = center.adjunction_to_center(vz4, x, b, f)
        assert center.check_center_mor(g, center.free_object(vz4, u, x), b)
        f2 = center.adjunction_from_center(vz4, x, b, g)
        assert f2 == f


def test_adjunction_unit_case(vz4):
    unit = center.unit_half_braiding(vz4)
    x = vz4.obj_unit()
    hom = center.hom_center(center.free_object(vz4, 0, x), unit)
    assert len(hom) == 1


def test_action_is_z_action(vz4):
    u = 0
    b = center.free_object(vz4, u, vz4.obj_simple(1))
    r = center.action_of(b)
    # r . eta = id
    assert r @ monad.eta_unit(vz4, b.A) == vz4.identity(b.A)
    # r . Z(r) = r . mu
    lhs = r @ monad.z_mor(vz4, u, r)
    rhs = r @ monad.monad_mu(vz4, b.A)
    assert lhs == rhs


def test_simple_objects_z4_to_z2(vz4):
    s0 = center.simple_objects(vz4, 0)
    s1 = center.simple_objects(vz4, 1)
    assert len(s0) == 4
    assert len(s1) == 4
    for s in s0 + s1:
        assert center.check_half_braiding(s.hb) == []
        assert center.hom_center_dim(s.hb, s.hb) == 1
        # embed/project are center morphisms
        parent = center.free_object(vz4, 0, vz4.obj_simple(s.parent))
        assert center.check_center_mor(s.embed, s.hb, parent)
        assert center.check_center_mor(s.project, parent, s.hb)
        assert s.project @ s.embed == vz4.identity(s.hb.A)
    # grades
    assert all(s.hb.grade() == 0 for s in s0)
    assert all(s.hb.grade() == 1 for s in s1)


def test_simple_count_matches_brute_force(vz4):
    for alpha in (0, 1):
        oracle = brute_force_pointed_center(vz4, alpha)
        engine = center.simple_objects(vz4, alpha)
        assert len(engine) == len(oracle)


def test_toric_code_center(toric):
    sims = center.simple_objects(toric, 0)
    assert len(sims) == 4
    oracle = brute_force_pointed_center(toric, 0)
    assert len(oracle) == 4
    total = toric.zero_scalar()
    for s in sims:
        d = toric.dim_l_obj(s.hb.A)
        total = total + d * d
    assert total == toric.dim_component(0) ** 2  # Mueger sanity: 4


def test_zero_or_iso(vz4):
    sims = center.simple_objects(vz4, 0) + center.simple_objects(vz4, 1)
    for i, s in enumerate(sims):
        for j, t in enumerate(sims):
            d = center.hom_center_dim(s.hb, t.hb)
            assert d == (1 if i == j else 0)


def test_conservative_forgetful(vz4):
    # a center morphism invertible in C has an inverse that is again a
    # center morphism
    s = center.simple_objects(vz4, 0)[0]
    fb = center.free_object(vz4, 0, vz4.obj_simple(s.parent))
    # build an invertible center endomorphism of F1(parent)
    ends = center.hom_center(fb, fb)
    f = None
    for cand in ends:
        if vz4.is_invertible_mor(cand):
            f = cand
            break
    assert f is not None
    finv = vz4.mor_inverse(f)
    assert center.check_center_mor(finv, fb, fb)
