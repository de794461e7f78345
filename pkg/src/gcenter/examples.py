"""Bundled example categories and the group-theoretic reference model.

The generator covers the pointed family: Vec_H for a finite group H
(simples = group elements, fusion = group law, trivial associator and
pivotal structure) and its pushforward along a group epimorphism
pi: H -> G, regrading Vec_H by G.  The reference model implements the
G-ribbon category of H-graded K-modules attached to (pi, s) directly in
terms of group data and characters of the abelian kernel K; its modular
fingerprints are compared against the computed G-center.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from gcenter.category import FiniteGroup, FusionData
from gcenter.scalars import Cyclotomic


@dataclass
class Epimorphism:
    H: FiniteGroup
    G: FiniteGroup
    pi: tuple[int, ...]           # H -> G
    section: tuple[int, ...]      # G -> H with pi(s(a)) = a
    name: str = "epi"

    def __post_init__(self):
        for a in self.H.elements():
            for b in self.H.elements():
                if self.pi[self.H.mul(a, b)] != \
                        self.G.mul(self.pi[a], self.pi[b]):
                    raise ValueError("pi is not a homomorphism")
        if set(self.pi) != set(self.G.elements()):
            raise ValueError("pi is not surjective")
        for a in self.G.elements():
            if self.pi[self.section[a]] != a:
                raise ValueError("section does not split pi")

    @property
    def kernel(self) -> list[int]:
        return [h for h in self.H.elements()
                if self.pi[h] == self.G.unit]

    def with_section(self, section) -> "Epimorphism":
        return Epimorphism(self.H, self.G, self.pi, tuple(section),
                           self.name)

    @staticmethod
    def cyclic(n: int, m: int, name: str | None = None) -> "Epimorphism":
        """Reduction Z/n -> Z/m for m | n, with the inclusion section."""
        if m < 1 or n % m:
            raise ValueError("need m | n")
        H = FiniteGroup.cyclic(n)
        G = FiniteGroup.cyclic(m)
        pi = tuple(h % m for h in range(n))
        section = tuple(range(m))
        return Epimorphism(H, G, pi, section,
                           name or f"z{n}_to_z{m}")


def build_pointed(H: FiniteGroup, order: int = 4,
                  name: str = "pointed") -> FusionData:
    """Vec_H: one simple per group element, fusion by the group law."""
    n = H.size
    simples = [f"g{h}" for h in H.elements()]
    fusion = {(a, b, H.mul(a, b)): 1 for a in H.elements()
              for b in H.elements()}
    dual = [H.inv(a) for a in H.elements()]
    pivotal = [Cyclotomic.one(order)] * n
    return FusionData(name, H, order, simples, list(H.elements()),
                      H.unit, dual, fusion, "trivial", pivotal)


def pushforward(data: FusionData, epi: Epimorphism,
                name: str | None = None) -> FusionData:
    """Regrade an H-graded category along pi: H -> G."""
    if data.group.size != epi.H.size:
        raise ValueError("data is not graded by the source of pi")
    grades = [epi.pi[g] for g in data.grades]
    return FusionData(name or f"{data.name}_push", epi.G, data.order,
                      list(data.simples), grades, data.unit,
                      list(data.dual), dict(data.fusion), data.f_symbols,
                      list(data.pivotal))


def pointed_pushforward(epi: Epimorphism, order: int | None = None
                        ) -> FusionData:
    """The spherical G-fusion category pi_*(Vec_H) of an epimorphism."""
    if order is None:
        order = default_order(epi)
    vec = build_pointed(epi.H, order, name=f"vec_{epi.name}")
    return pushforward(vec, epi, name=f"push_{epi.name}")


def default_order(epi: Epimorphism) -> int:
    """lcm(exponent of K, 4): large enough for all kernel characters."""
    exp = 1
    for k in epi.kernel:
        o = element_order(epi.H, k)
        exp = exp * o // gcd(exp, o)
    return exp * 4 // gcd(exp, 4)


def element_order(group: FiniteGroup, a: int) -> int:
    o = 1
    x = a
    while x != group.unit:
        x = group.mul(x, a)
        o += 1
    return o


# -- the group-theoretic reference model -----------------------------------


@dataclass(frozen=True)
class DpiSimple:
    h: int                      # element of H
    chi: tuple[int, ...]        # character of K as zeta_N exponents per
                                # kernel element (aligned with epi.kernel)


class NonabelianKernelError(NotImplementedError):
    pass


@dataclass
class DpiModel:
    """The G-ribbon category of H-graded K-modules attached to (pi, s),
    restricted to an abelian kernel: simples are pairs (h, chi)."""
    epi: Epimorphism
    order: int
    simples: list[DpiSimple]

    def grade(self, s: DpiSimple) -> int:
        return self.epi.pi[s.h]

    def chi_value(self, s: DpiSimple, k: int) -> Cyclotomic:
        idx = self.epi.kernel.index(k)
        return Cyclotomic.zeta(self.order, s.chi[idx])

    def _k_of(self, h_elem: int, alpha: int) -> int:
        """h . s(alpha)^{-1}, which lies in K."""
        H = self.epi.H
        k = H.mul(h_elem, H.inv(self.epi.section[alpha]))
        if self.epi.pi[k] != self.epi.G.unit:
            raise AssertionError("expected a kernel element")
        return k

    def twist_scalar(self, s: DpiSimple) -> Cyclotomic:
        return self.chi_value(s, self._k_of(s.h, self.grade(s)))

    def braiding_scalar(self, m: DpiSimple, n: DpiSimple) -> Cyclotomic:
        """tau_{M,N} carries m (x) n to n (x) m . (h_N s(|N|)^{-1})."""
        return self.chi_value(m, self._k_of(n.h, self.grade(n)))

    def crossing_image(self, alpha: int, s: DpiSimple) -> DpiSimple:
        """phi_alpha permutes (h, chi) by conjugation with s(alpha)."""
        H = self.epi.H
        sa = self.epi.section[alpha]
        h2 = H.mul(H.mul(sa, s.h), H.inv(sa))
        kernel = self.epi.kernel
        chi2 = []
        for k in kernel:
            k2 = H.mul(H.mul(sa, k), H.inv(sa))
            chi2.append(s.chi[kernel.index(k2)])
        return DpiSimple(h2, tuple(chi2))

    def crossing_is_strict(self) -> bool:
        H, G = self.epi.H, self.epi.G
        sec = self.epi.section
        return all(sec[G.mul(a, b)] == H.mul(sec[a], sec[b])
                   for a in G.elements() for b in G.elements())


def kernel_characters(epi: Epimorphism, order: int) -> list[tuple[int, ...]]:
    """All characters of the (abelian) kernel, as zeta_N exponents."""
    H = epi.H
    kernel = epi.kernel
    for a in kernel:
        for b in kernel:
            if H.mul(a, b) != H.mul(b, a):
                raise NonabelianKernelError(
                    "reference model needs an abelian kernel")
    idx = {k: i for i, k in enumerate(kernel)}
    chars: list[tuple[int, ...]] = []
    import itertools
    for values in itertools.product(range(order), repeat=len(kernel)):
        if values[idx[H.unit]] != 0:
            continue
        if all((values[idx[a]] + values[idx[b]]) % order
               == values[idx[H.mul(a, b)]]
               for a in kernel for b in kernel):
            chars.append(values)
    return chars


def dpi_reference(epi: Epimorphism, order: int | None = None) -> DpiModel:
    if order is None:
        order = default_order(epi)
    chars = kernel_characters(epi, order)
    simples = [DpiSimple(h, chi) for h in epi.H.elements()
               for chi in chars]
    return DpiModel(epi, order, simples)


def check_dpi_axioms(model: DpiModel) -> list[str]:
    """The G-ribbon identities of the reference model, as exact character
    identities (braiding hexagons and crossing cocycles)."""
    errs = []
    epi = model.epi
    H, G = epi.H, epi.G
    sec = epi.section

    def c2(a: int, b: int) -> int:
        """The cocycle s(b) s(a) s(ba)^{-1} in K."""
        k = H.mul(H.mul(sec[b], sec[a]), H.inv(sec[G.mul(b, a)]))
        if epi.pi[k] != G.unit:
            errs.append("phi_2 cocycle leaves the kernel")
        return k

    # (crossing5)-shaped cocycle identity on K-elements (abelian kernel)
    for a in G.elements():
        for b in G.elements():
            for g in G.elements():
                lhs = H.mul(c2(b, g), c2(a, G.mul(g, b)))
                rhs = H.mul(c2(a, b), c2(G.mul(b, a), g))
                if lhs != rhs:
                    errs.append(f"crossing cocycle fails at {(a, b, g)}")

    # braiding hexagons as character identities on every simple triple
    for m in model.simples:
        for n in model.simples:
            for p in model.simples:
                beta = model.grade(n)
                gch = model.grade(p)
                bg = G.mul(beta, gch)
                hnp = H.mul(n.h, p.h)
                lhs = model.chi_value(m, model._k_of(hnp, bg))
                rhs = model.chi_value(m, model._k_of(n.h, beta)) * \
                    model.chi_value(m, model._k_of(p.h, gch)) * \
                    model.chi_value(m, c2(gch, beta))
                if not (lhs == rhs):
                    errs.append(
                        f"hexagon (1) fails at {(m, n, p)}")
                    return errs
    # hexagon (2): tau_{M (x) N, P} = (tau_M (x) id)(id (x) tau_N)
    for m in model.simples:
        for n in model.simples:
            for p in model.simples:
                gch = model.grade(p)
                k = model._k_of(p.h, gch)
                lhs = model.chi_value(m, k) * model.chi_value(n, k)
                # chi of the product simple (h_m h_n, chi_m chi_n)
                idx = epi.kernel.index(k)
                prod_exp = (m.chi[idx] + n.chi[idx]) % model.order
                rhs = Cyclotomic.zeta(model.order, prod_exp)
                if not (lhs == rhs):
                    errs.append("hexagon (2) fails")
                    return errs
    return errs


# -- fingerprint comparison --------------------------------------------------


@dataclass
class ComparisonReport:
    matched: list[tuple[str, DpiSimple]]
    success: bool
    detail: str = ""


def _engine_fingerprints(data, simples):
    """Extract (h, chi, twist, braiding-table) from computed center simples
    of a pointed category (all underlying objects one-dimensional)."""
    from gcenter import braiding as braiding_mod

    out = []
    for s in simples:
        support = s.hb.A.support()
        if len(support) != 1 or s.hb.A.mult[support[0]] != 1:
            raise NonabelianKernelError(
                "fingerprint extraction needs one-dimensional simples")
        h = support[0]
        chi = {}
        for i in data.simples_of_grade(data.group.unit):
            blk = s.hb.sigma[i]
            val = None
            for b in blk.blocks:
                for e in b.entries:
                    if not e.is_zero():
                        val = e
            chi[i] = val
        th = braiding_mod.twist(data, s.hb)
        tw = None
        for b in th.blocks:
            for e in b.entries:
                if not e.is_zero():
                    tw = e
        out.append((s, h, chi, tw))
    return out


def compare_center_vs_dpi(epi: Epimorphism,
                          order: int | None = None) -> ComparisonReport:
    """Match the computed simples of Z_G(pi_*(Vec_H)) against the reference
    model on (grade, dimension, twist, mutual braidings)."""
    from gcenter import braiding as braiding_mod
    from gcenter.center import all_simple_objects

    data = pointed_pushforward(epi, order)
    model = dpi_reference(epi, data.order)
    sims = all_simple_objects(data)
    if len(sims) != len(model.simples):
        return ComparisonReport([], False,
                                f"simple counts differ: engine "
                                f"{len(sims)} vs model {len(model.simples)}")
    fps = _engine_fingerprints(data, sims)

    def braid_entry(a, b):
        t = braiding_mod.tau(data, a.hb, b.hb)
        for blk in t.blocks:
            for e in blk.entries:
                if not e.is_zero():
                    return e
        return data.zero_scalar()

    # candidate matches on (grade, twist)
    candidates = []
    for (s, h, chi, tw) in fps:
        opts = [m for m in model.simples
                if model.grade(m) == s.hb.grade()
                and model.twist_scalar(m) == tw]
        candidates.append(((s, h, chi, tw), opts))
    candidates.sort(key=lambda c: len(c[1]))

    engine_braid = {}
    for (si, *_rest) in fps:
        for (sj, *_rest2) in fps:
            engine_braid[(si.label, sj.label)] = braid_entry(si, sj)

    assignment: dict[str, DpiSimple] = {}
    used: set[DpiSimple] = set()

    def consistent(s, m) -> bool:
        for lab2, m2 in assignment.items():
            if not (engine_braid[(s.label, lab2)]
                    == model.braiding_scalar(m, m2)):
                return False
            if not (engine_braid[(lab2, s.label)]
                    == model.braiding_scalar(m2, m)):
                return False
        return engine_braid[(s.label, s.label)] == \
            model.braiding_scalar(m, m)

    def solve(k: int) -> bool:
        if k == len(candidates):
            return True
        (s, h, chi, tw), opts = candidates[k]
        for m in opts:
            if m in used or not consistent(s, m):
                continue
            assignment[s.label] = m
            used.add(m)
            if solve(k + 1):
                return True
            del assignment[s.label]
            used.remove(m)
        return False

    if not solve(0):
        return ComparisonReport([], False,
                                "no fingerprint-compatible bijection")
    by_label = {s.label: s for s in sims}
    matched = [(lab, assignment[lab]) for lab in sorted(assignment)]
    return ComparisonReport(matched, True)


BUNDLED_EPIS = {
    "z2_to_1": lambda: Epimorphism.cyclic(2, 1),
    "id_z2": lambda: Epimorphism.cyclic(2, 2, name="id_z2"),
    "z4_to_z2": lambda: Epimorphism.cyclic(4, 2),
    "z6_to_z3": lambda: Epimorphism.cyclic(6, 3),
    "z8_to_z2": lambda: Epimorphism.cyclic(8, 2),
}


def bundled_epi(name: str) -> Epimorphism:
    try:
        return BUNDLED_EPIS[name]()
    except KeyError:
        raise KeyError(f"unknown example '{name}'; available: "
                       f"{', '.join(sorted(BUNDLED_EPIS))}") from None


def bundled_category(name: str, order: int | None = None) -> FusionData:
    return pointed_pushforward(bundled_epi(name), order)
