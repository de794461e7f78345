"""Skeletal spherical G-fusion categories and their exact hom calculus.

Objects are finite multiplicity vectors over the simple objects, each slot
carrying a canonical label (a tuple of leaf keys).  Tensor products
concatenate labels and sort them, which makes the skeleton strictly
associative and strictly unital for multiplicity-free fusion rules with
trivial associator.  General fusion multiplicities and F-symbol tensors are
accepted by the data model and validated, but the diagram evaluator refuses
them: every bundled example is multiplicity-free with trivial associator.

Morphisms are per-simple blocks of exact cyclotomic matrices; composition,
tensor product, duality, (co)evaluations, traces and I-partitions are all
exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from gcenter.linalg import Matrix
from gcenter.scalars import Cyclotomic, cyc


class EngineLimitation(NotImplementedError):
    """Input is valid data but outside the evaluator's supported class."""


# ---------------------------------------------------------------------------
# groups


class FiniteGroup:
    """A finite group as a multiplication table."""

    def __init__(self, mul_table: list[list[int]], unit: int = 0):
        self.size = len(mul_table)
        self.table = tuple(tuple(row) for row in mul_table)
        self.unit = unit
        self.inverse_table = tuple(self._find_inverse(a)
                                   for a in range(self.size))

    def _find_inverse(self, a: int) -> int:
        for b in range(self.size):
            if self.table[a][b] == self.unit:
                return b
        raise ValueError(f"element {a} has no inverse")

    @staticmethod
    def cyclic(n: int) -> "FiniteGroup":
        return FiniteGroup([[(a + b) % n for b in range(n)]
                            for a in range(n)])

    @staticmethod
    def trivial() -> "FiniteGroup":
        return FiniteGroup.cyclic(1)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse_table[a]

    def conj(self, a: int, by: int) -> int:
        """by^-1 * a * by."""
        return self.mul(self.mul(self.inv(by), a), by)

    def elements(self):
        return range(self.size)

    def check(self) -> list[str]:
        errs = []
        n = self.size
        for a in range(n):
            if self.table[a][self.unit] != a or self.table[self.unit][a] != a:
                errs.append(f"unit law fails at {a}")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                        errs.append(f"associativity fails at {(a, b, c)}")
                        return errs
        return errs

    def to_json(self) -> dict:
        return {"size": self.size, "mul": [list(r) for r in self.table],
                "unit": self.unit}

    @staticmethod
    def from_json(data: dict) -> "FiniteGroup":
        return FiniteGroup(data["mul"], data.get("unit", 0))

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table \
            and self.unit == other.unit


# ---------------------------------------------------------------------------
# objects

# A leaf key is (simple index, nesting level, copy index); a slot key is a
# tuple of leaf keys.  The monoidal unit is the empty slot key.

LeafKey = tuple[int, int, int]
SlotKey = tuple[LeafKey, ...]


@dataclass(frozen=True)
class Obj:
    mult: tuple[int, ...]
    slots: tuple[tuple[SlotKey, ...], ...]

    def is_zero(self) -> bool:
        return all(m == 0 for m in self.mult)

    def total_dim(self) -> int:
        return sum(self.mult)

    def level(self) -> int:
        lv = 0
        for keys in self.slots:
            for key in keys:
                for (_, tag, _) in key:
                    lv = max(lv, tag)
        return lv

    def support(self) -> list[int]:
        return [i for i, m in enumerate(self.mult) if m]


@dataclass
class Mor:
    src: Obj
    dst: Obj
    blocks: tuple[Matrix, ...]

    def __matmul__(self, other: "Mor") -> "Mor":
        if other.dst != self.src:
            raise ValueError("composition mismatch")
        return Mor(other.src, self.dst,
                   tuple(a @ b for a, b in zip(self.blocks, other.blocks)))

    def __add__(self, other: "Mor") -> "Mor":
        if self.src != other.src or self.dst != other.dst:
            raise ValueError("addition of morphisms with different ends")
        return Mor(self.src, self.dst,
                   tuple(a + b for a, b in zip(self.blocks, other.blocks)))

    def __sub__(self, other: "Mor") -> "Mor":
        return self + other.scale(-1)

    def scale(self, c) -> "Mor":
        c = cyc(c)
        return Mor(self.src, self.dst,
                   tuple(b.scale(c) for b in self.blocks))

    def __eq__(self, other):
        if not isinstance(other, Mor):
            return NotImplemented
        return (self.src == other.src and self.dst == other.dst
                and all(a == b for a, b in zip(self.blocks, other.blocks)))

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks)

    def __repr__(self):
        return f"Mor({self.src.mult} -> {self.dst.mult})"


@dataclass
class TensorWitness:
    """Slot bookkeeping of a binary tensor product: for each simple k the
    ordered list of (i, a, j, b, mu) source-slot pairs."""
    left: Obj
    right: Obj
    product: Obj
    iso: tuple[tuple[tuple[int, int, int, int, int], ...], ...]


# ---------------------------------------------------------------------------
# fusion data


@dataclass
class ValidationReport:
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = ""):
        self.checks.append((name, ok, detail))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self) -> list[tuple[str, str]]:
        return [(name, detail) for name, ok, detail in self.checks if not ok]


class FusionData:
    """Skeletal presentation of a pivotal G-graded fusion category."""

    def __init__(self, name: str, group: FiniteGroup, order: int,
                 simples: list[str], grades: list[int], unit_simple: int,
                 dual: list[int], fusion: dict[tuple[int, int, int], int],
                 f_symbols, pivotal: list[Cyclotomic]):
        self.name = name
        self.group = group
        self.order = order
        self.simples = list(simples)
        self.n = len(simples)
        self.grades = list(grades)
        self.unit = unit_simple
        self.dual = list(dual)
        self.fusion = dict(fusion)
        self.f_symbols = f_symbols  # "trivial" or {(i,j,k,l): {...}}
        self.pivotal = [cyc(t).promote(order) for t in pivotal]
        self._tensor_cache: dict = {}
        self._slot_cache: dict = {}

    # -- basic lookups ---------------------------------------------------

    def N(self, i: int, j: int, k: int) -> int:
        return self.fusion.get((i, j, k), 0)

    def grade(self, i: int) -> int:
        return self.grades[i]

    def label(self, i: int) -> str:
        return self.simples[i]

    def index(self, label: str) -> int:
        return self.simples.index(label)

    def simples_of_grade(self, alpha: int) -> list[int]:
        return [i for i in range(self.n) if self.grades[i] == alpha]

    def representative(self, alpha: int) -> int:
        """Lexicographically first simple of a grade (crossing choice)."""
        cands = self.simples_of_grade(alpha)
        if not cands:
            raise ValueError(f"grade {alpha} has no simple object")
        return min(cands, key=lambda i: self.simples[i])

    def multiplicity_free(self) -> bool:
        return all(v <= 1 for v in self.fusion.values())

    def trivial_associator(self) -> bool:
        return self.f_symbols == "trivial"

    def _require_strict(self):
        if not (self.multiplicity_free() and self.trivial_associator()):
            raise EngineLimitation(
                "diagram evaluation needs multiplicity-free fusion with "
                "trivial associator")

    # -- scalars -----------------------------------------------------------

    def one(self) -> Cyclotomic:
        return Cyclotomic.one(self.order)

    def zero_scalar(self) -> Cyclotomic:
        return Cyclotomic.zero(self.order)

    def piv(self, i: int) -> Cyclotomic:
        return self.pivotal[i]

    def dim_l(self, i: int) -> Cyclotomic:
        return self.piv(i).inverse()

    def dim_r(self, i: int) -> Cyclotomic:
        return self.piv(i)

    def dim_component(self, alpha: int) -> Cyclotomic:
        total = self.zero_scalar()
        for i in self.simples_of_grade(alpha):
            total = total + self.dim_l(i) * self.dim_r(i)
        return total

    def global_dim(self) -> Cyclotomic:
        total = self.zero_scalar()
        for alpha in self.group.elements():
            total = total + self.dim_component(alpha)
        return total

    # -- objects -----------------------------------------------------------

    def obj_zero(self) -> Obj:
        return Obj(tuple(0 for _ in range(self.n)),
                   tuple(() for _ in range(self.n)))

    def obj_unit(self) -> Obj:
        mult = [0] * self.n
        mult[self.unit] = 1
        slots: list[tuple[SlotKey, ...]] = [() for _ in range(self.n)]
        slots[self.unit] = ((),)
        return Obj(tuple(mult), tuple(slots))

    def obj_simple(self, i: int, level: int = 0, copy: int = 0) -> Obj:
        # The canonical unit object is strictly neutral (empty slot key);
        # leveled unit letters keep a real key so that direct sums of
        # wrapper words stay prefix-free.
        if i == self.unit and level == 0 and copy == 0:
            return self.obj_unit()
        mult = [0] * self.n
        mult[i] = 1
        slots: list[tuple[SlotKey, ...]] = [() for _ in range(self.n)]
        slots[i] = (((i, level, copy),),)
        return Obj(tuple(mult), tuple(slots))

    def obj_std(self, mult) -> Obj:
        """Standard object for a multiplicity vector, with atomic slots."""
        mult = tuple(mult)
        slots = tuple(tuple(((i, 0, a),) for a in range(mult[i]))
                      for i in range(self.n))
        return Obj(mult, slots)

    def obj_grade(self, x: Obj):
        """Grade of a homogeneous object; None for the zero object."""
        gs = {self.grades[i] for i in x.support()}
        if not gs:
            return None
        if len(gs) > 1:
            raise ValueError("object is not homogeneous")
        return gs.pop()

    def dual_leaf(self, leaf: LeafKey) -> LeafKey:
        s, tag, idx = leaf
        return (self.dual[s], tag, idx)

    def dual_key(self, key: SlotKey) -> SlotKey:
        return tuple(self.dual_leaf(l) for l in reversed(key))

    def dual_obj(self, x: Obj) -> Obj:
        mult = tuple(x.mult[self.dual[i]] for i in range(self.n))
        slots = tuple(tuple(sorted(self.dual_key(k)
                                   for k in x.slots[self.dual[i]]))
                      for i in range(self.n))
        return Obj(mult, slots)

    def dsum(self, objs: list[Obj]) -> Obj:
        """Direct sum; the summands must have pairwise disjoint slot keys."""
        mult = [0] * self.n
        slots: list[list[SlotKey]] = [[] for _ in range(self.n)]
        for x in objs:
            for i in range(self.n):
                mult[i] += x.mult[i]
                slots[i].extend(x.slots[i])
        out_slots = []
        for i in range(self.n):
            ordered = tuple(sorted(slots[i]))
            if len(set(ordered)) != len(ordered):
                raise ValueError("direct sum with colliding slot keys")
            out_slots.append(ordered)
        return Obj(tuple(mult), tuple(out_slots))

    def inclusion(self, part: Obj, whole: Obj) -> Mor:
        """Slot-key based inclusion of a direct summand."""
        blocks = []
        for i in range(self.n):
            m = Matrix.zero(whole.mult[i], part.mult[i], self.order)
            ents = [list(m.row(r)) for r in range(whole.mult[i])]
            pos = {k: r for r, k in enumerate(whole.slots[i])}
            for c, k in enumerate(part.slots[i]):
                ents[pos[k]][c] = self.one()
            blocks.append(Matrix(whole.mult[i], part.mult[i],
                                 [v for row in ents for v in row]))
        return Mor(part, whole, tuple(blocks))

    def projection(self, whole: Obj, part: Obj) -> Mor:
        return self.transpose_mor(self.inclusion(part, whole))

    def transpose_mor(self, f: Mor) -> Mor:
        return Mor(f.dst, f.src, tuple(b.transpose() for b in f.blocks))

    # -- morphism helpers -------------------------------------------------

    def identity(self, x: Obj) -> Mor:
        return Mor(x, x, tuple(Matrix.identity(m, self.order)
                               for m in x.mult))

    def zero_mor(self, src: Obj, dst: Obj) -> Mor:
        return Mor(src, dst, tuple(Matrix.zero(dm, sm, self.order)
                                   for sm, dm in zip(src.mult, dst.mult)))

    def scalar_mor(self, x: Obj, c) -> Mor:
        return self.identity(x).scale(c)

    def mor_from_blocks(self, src: Obj, dst: Obj, blocks) -> Mor:
        return Mor(src, dst, tuple(blocks))

    # -- tensor product ----------------------------------------------------

    def _pair_slots(self, x: Obj, y: Obj):
        key = (x, y)
        hit = self._slot_cache.get(key)
        if hit is not None:
            return hit
        self._require_strict()
        per_simple: list[list[tuple[SlotKey, int, int, int, int]]] = \
            [[] for _ in range(self.n)]
        for i in x.support():
            for j in y.support():
                for k in range(self.n):
                    nij = self.N(i, j, k)
                    if nij == 0:
                        continue
                    for a, ka in enumerate(x.slots[i]):
                        for b, kb in enumerate(y.slots[j]):
                            per_simple[k].append((ka + kb, i, a, j, b))
        listing = []
        index_maps = []
        for k in range(self.n):
            entries = sorted(per_simple[k])
            keys = [e[0] for e in entries]
            if len(set(keys)) != len(keys):
                raise ValueError("slot key collision in tensor product")
            listing.append(tuple(entries))
            index_maps.append({e[0]: pos for pos, e in enumerate(entries)})
        prod = Obj(tuple(len(listing[k]) for k in range(self.n)),
                   tuple(tuple(e[0] for e in listing[k])
                         for k in range(self.n)))
        result = (prod, tuple(listing), tuple(index_maps))
        self._slot_cache[key] = result
        return result

    def tensor_obj(self, x: Obj, y: Obj) -> tuple[Obj, TensorWitness]:
        prod, listing, _ = self._pair_slots(x, y)
        iso = tuple(tuple((i, a, j, b, 0) for (_, i, a, j, b) in listing[k])
                    for k in range(self.n))
        return prod, TensorWitness(x, y, prod, iso)

    def ten(self, *objs: Obj) -> Obj:
        """Left-comb tensor product of objects."""
        if not objs:
            return self.obj_unit()
        acc = objs[0]
        for y in objs[1:]:
            acc = self._pair_slots(acc, y)[0]
        return acc

    def _block_nonzeros(self, m: Matrix):
        out: dict[tuple[int, int], Cyclotomic] = {}
        cols = m.cols
        for idx, e in enumerate(m.entries):
            if not e.is_zero():
                out[(idx // cols, idx % cols)] = e
        return out

    def tensor_mor(self, f: Mor, g: Mor) -> Mor:
        src, src_list, _ = self._pair_slots(f.src, g.src)
        dst, dst_list, _ = self._pair_slots(f.dst, g.dst)
        f_nz = [self._block_nonzeros(b) for b in f.blocks]
        g_nz = [self._block_nonzeros(b) for b in g.blocks]
        f_by_col: list[dict[int, list[tuple[int, Cyclotomic]]]] = []
        for nz in f_nz:
            cols: dict[int, list[tuple[int, Cyclotomic]]] = {}
            for (r, c), v in nz.items():
                cols.setdefault(c, []).append((r, v))
            f_by_col.append(cols)
        g_by_col: list[dict[int, list[tuple[int, Cyclotomic]]]] = []
        for nz in g_nz:
            cols = {}
            for (r, c), v in nz.items():
                cols.setdefault(c, []).append((r, v))
            g_by_col.append(cols)
        zero = self.zero_scalar()
        blocks = []
        for k in range(self.n):
            rows = len(dst_list[k])
            cols_n = len(src_list[k])
            dst_pos = {(i, a, j, b): pos
                       for pos, (_, i, a, j, b) in enumerate(dst_list[k])}
            ents = [zero] * (rows * cols_n)
            for cpos, (_, i, a, j, b) in enumerate(src_list[k]):
                for (a2, fv) in f_by_col[i].get(a, ()):
                    for (b2, gv) in g_by_col[j].get(b, ()):
                        rpos = dst_pos.get((i, a2, j, b2))
                        if rpos is not None:
                            ents[rpos * cols_n + cpos] = fv * gv
            blocks.append(Matrix(rows, cols_n, ents))
        return Mor(src, dst, tuple(blocks))

    def ten_mor(self, *mors: Mor) -> Mor:
        if not mors:
            return self.identity(self.obj_unit())
        acc = mors[0]
        for g in mors[1:]:
            acc = self.tensor_mor(acc, g)
        return acc

    # -- duality -----------------------------------------------------------

    def _pairing_mor(self, x: Obj, contraction: str) -> Mor:
        """Build ev/coev-style morphisms slot-wise.

        contraction: 'ev'      X* (x) X  -> 1   coefficient 1
                     'coev'    1 -> X (x) X*    coefficient 1
                     'ev~'     X (x) X* -> 1    coefficient piv(i)
                     'coev~'   1 -> X* (x) X    coefficient 1/piv(i)
        """
        xd = self.dual_obj(x)
        unit = self.obj_unit()
        if contraction == "ev":
            src, pair = self.ten(xd, x), "dx"
            dst = unit
        elif contraction == "ev~":
            src, pair = self.ten(x, xd), "xd"
            dst = unit
        elif contraction == "coev":
            src = unit
            dst, pair = self.ten(x, xd), "xd"
        else:
            src = unit
            dst, pair = self.ten(xd, x), "dx"
        wide = src if dst == unit else dst
        _, listing, _ = self._pair_slots(
            *( (xd, x) if pair == "dx" else (x, xd) ))
        cols = len(listing[self.unit])
        ents = [self.zero_scalar()] * cols
        for pos, (_, i, a, j, b) in enumerate(listing[self.unit]):
            if pair == "dx":
                # slot a of X* at i pairs with slot b of X at j, i = dual j
                key_x = x.slots[j][b]
                key_xd = xd.slots[i][a]
                if key_xd == self.dual_key(key_x):
                    coeff = self.one() if contraction == "ev" \
                        else self.piv(j).inverse()
                    ents[pos] = coeff
            else:
                key_x = x.slots[i][a]
                key_xd = xd.slots[j][b]
                if key_xd == self.dual_key(key_x):
                    coeff = self.piv(i) if contraction == "ev~" \
                        else self.one()
                    ents[pos] = coeff
        blocks = []
        for k in range(self.n):
            if k == self.unit:
                if dst == unit:
                    blocks.append(Matrix(1, cols, list(ents)))
                else:
                    blocks.append(Matrix(cols, 1, list(ents)))
            else:
                m = wide.mult[k]
                blocks.append(Matrix(0, m, []) if dst == unit
                              else Matrix(m, 0, []))
        return Mor(src, dst, tuple(blocks))

    def ev(self, x: Obj) -> Mor:
        return self._pairing_mor(x, "ev")

    def coev(self, x: Obj) -> Mor:
        return self._pairing_mor(x, "coev")

    def ev_tilde(self, x: Obj) -> Mor:
        return self._pairing_mor(x, "ev~")

    def coev_tilde(self, x: Obj) -> Mor:
        return self._pairing_mor(x, "coev~")

    def dual_mor(self, f: Mor) -> Mor:
        """f* : Y* -> X* (transpose in the canonical slot bases)."""
        xs, ys = f.src, f.dst
        xd, yd = self.dual_obj(xs), self.dual_obj(ys)
        zero = self.zero_scalar()
        blocks = []
        for i in range(self.n):
            di = self.dual[i]
            rows = xd.mult[i]
            cols = yd.mult[i]
            xpos = {k: a for a, k in enumerate(xs.slots[di])}
            ypos = {k: b for b, k in enumerate(ys.slots[di])}
            rpos = [xpos[self.dual_key(key)] for key in xd.slots[i]]
            cpos = [ypos[self.dual_key(key)] for key in yd.slots[i]]
            r_of = {a: r for r, a in enumerate(rpos)}
            c_of = {b: c for c, b in enumerate(cpos)}
            ents = [zero] * (rows * cols)
            for (b, a), v in self._block_nonzeros(f.blocks[di]).items():
                ents[r_of[a] * cols + c_of[b]] = v
            blocks.append(Matrix(rows, cols, ents))
        return Mor(yd, xd, tuple(blocks))

    def pivotal_mor(self, x: Obj) -> Mor:
        """phi_X : X -> X** (a diagonal of pivotal coefficients)."""
        xdd = self.dual_obj(self.dual_obj(x))
        assert xdd == x
        return Mor(x, x, tuple(
            Matrix.identity(x.mult[i], self.order).scale(self.piv(i))
            for i in range(self.n)))

    # -- traces ------------------------------------------------------------

    def trace_l(self, f: Mor) -> Cyclotomic:
        if f.src != f.dst:
            raise ValueError("trace of a non-endomorphism")
        total = self.zero_scalar()
        for i in range(self.n):
            total = total + self.dim_l(i) * f.blocks[i].trace()
        return total

    def trace_r(self, f: Mor) -> Cyclotomic:
        if f.src != f.dst:
            raise ValueError("trace of a non-endomorphism")
        total = self.zero_scalar()
        for i in range(self.n):
            total = total + self.dim_r(i) * f.blocks[i].trace()
        return total

    def dim_l_obj(self, x: Obj) -> Cyclotomic:
        return self.trace_l(self.identity(x))

    def dim_r_obj(self, x: Obj) -> Cyclotomic:
        return self.trace_r(self.identity(x))

    # -- partitions ----------------------------------------------------------

    def i_partition(self, x: Obj) -> list[tuple[int, Mor, Mor]]:
        """(i, p: X -> i, q: i -> X) triples, one per slot of X."""
        out = []
        for i in range(self.n):
            rep = self.obj_simple(i)
            for a in range(x.mult[i]):
                blocks_p = []
                blocks_q = []
                for k in range(self.n):
                    rm = rep.mult[k]
                    xm = x.mult[k]
                    pm = Matrix.zero(rm, xm, self.order)
                    if k == i and rm:
                        ents = [self.zero_scalar()] * xm
                        ents[a] = self.one()
                        pm = Matrix(1, xm, ents)
                    blocks_p.append(pm)
                    blocks_q.append(pm.transpose())
                p = Mor(x, rep, tuple(blocks_p))
                q = Mor(rep, x, tuple(blocks_q))
                out.append((i, p, q))
        return out

    def scalar_of(self, f: Mor) -> Cyclotomic:
        """The scalar of an endomorphism of the unit object."""
        if f.src != self.obj_unit() or f.dst != self.obj_unit():
            raise ValueError("not an endomorphism of the unit")
        return f.blocks[self.unit][0, 0]

    def mor_inverse(self, f: Mor) -> Mor:
        from gcenter.linalg import inverse as mat_inverse
        if f.src.mult != f.dst.mult:
            raise ArithmeticError("non-square morphism cannot be inverted")
        return Mor(f.dst, f.src, tuple(
            mat_inverse(b) if b.rows else b for b in f.blocks))

    def is_invertible_mor(self, f: Mor) -> bool:
        try:
            self.mor_inverse(f)
            return True
        except ArithmeticError:
            return False

    def relabel(self, src: Obj, dst: Obj) -> Mor:
        """Order-preserving identification of equal multiplicity vectors.

        Use only where the slot orders are known to correspond (moving a
        construction between letter levels)."""
        if src.mult != dst.mult:
            raise ValueError("relabel needs equal multiplicity vectors")
        return Mor(src, dst, tuple(Matrix.identity(m, self.order)
                                   for m in src.mult))

    def transport_wrap(self, x: Obj, a0: Obj, b0: Obj,
                       a1: Obj, b1: Obj) -> Mor:
        """Canonical iso a0 (x) X (x) b0 -> a1 (x) X (x) b1 relabeling the
        wrapper letters; a0/a1 (and b0/b1) must be the unit or single-slot
        objects of the same simple."""
        src = self.ten(a0, x, b0)
        dst = self.ten(a1, x, b1)
        def single_key(o: Obj) -> SlotKey:
            keys = [k for ks in o.slots for k in ks]
            if len(keys) != 1:
                raise ValueError("wrapper must have exactly one slot")
            return keys[0]
        ka0, ka1 = single_key(a0), single_key(a1)
        kb0, kb1 = single_key(b0), single_key(b1)
        la, lb = len(ka0), len(kb0)
        blocks = []
        for k in range(self.n):
            rows = dst.mult[k]
            cols = src.mult[k]
            ents = [[self.zero_scalar()] * cols for _ in range(rows)]
            pos = {key: r for r, key in enumerate(dst.slots[k])}
            for c, key in enumerate(src.slots[k]):
                assert key[:la] == ka0 and (lb == 0 or key[-lb:] == kb0)
                mid = key[la:len(key) - lb] if lb else key[la:]
                newkey = ka1 + mid + kb1
                ents[pos[newkey]][c] = self.one()
            blocks.append(Matrix(rows, cols,
                                 [v for row in ents for v in row]))
        return Mor(src, dst, tuple(blocks))

    def _factor_slots(self, factors):
        """Per-simple listing of the slots of ten(*factors), each slot
        unfolded as a tuple of (simple, slot index) per factor."""
        per_simple = {k: [((k, a),) for a in range(factors[0].mult[k])]
                      for k in range(self.n)}
        acc = factors[0]
        for f in factors[1:]:
            _prod, pair_listing, _ = self._pair_slots(acc, f)
            new = {}
            for k in range(self.n):
                new[k] = [per_simple[i][a] + ((j, b),)
                          for (_key, i, a, j, b) in pair_listing[k]]
            per_simple = new
            acc = self.ten(acc, f)
        return acc, per_simple

    def transport_factors(self, src_factors, dst_factors) -> Mor:
        """Canonical iso ten(*src) -> ten(*dst) where corresponding factors
        are either equal objects or single-slot/unit letters of the same
        simple."""
        src, src_slots = self._factor_slots(list(src_factors))
        dst, dst_slots = self._factor_slots(list(dst_factors))
        blocks = []
        for k in range(self.n):
            rows, cols = dst.mult[k], src.mult[k]
            ents = [[self.zero_scalar()] * cols for _ in range(rows)]
            pos = {t: r for r, t in enumerate(dst_slots[k])}
            for c, t in enumerate(src_slots[k]):
                ents[pos[t]][c] = self.one()
            blocks.append(Matrix(rows, cols,
                                 [v for row in ents for v in row]))
        return Mor(src, dst, tuple(blocks))

    def cache(self, key, builder):
        store = getattr(self, "_engine_cache", None)
        if store is None:
            store = {}
            self._engine_cache = store
        if key not in store:
            store[key] = builder()
        return store[key]

    # -- validation ----------------------------------------------------------

    def validate(self, check_pentagon: bool = False) -> ValidationReport:
        rep = ValidationReport()
        errs = self.group.check()
        rep.add("group-axioms", not errs, "; ".join(errs))

        bad = [f"{i}" for i in range(self.n)
               if self.dual[self.dual[i]] != i]
        rep.add("dual-involution", not bad, ",".join(bad))

        bad = []
        for (i, j, k), v in self.fusion.items():
            if v and self.group.mul(self.grades[i], self.grades[j]) \
                    != self.grades[k]:
                bad.append(f"N[{self.label(i)},{self.label(j)};"
                           f"{self.label(k)}]")
        rep.add("grading-multiplicative", not bad,
                "nonzero multiplicity across wrong grades: "
                + ", ".join(bad) if bad else "")

        rep.add("unit-grade", self.grades[self.unit] == self.group.unit,
                "" if self.grades[self.unit] == self.group.unit
                else f"|1| = {self.grades[self.unit]}")

        bad = []
        for i in range(self.n):
            for j in range(self.n):
                expected = 1 if j == self.dual[i] else 0
                if self.N(i, j, self.unit) != expected:
                    bad.append(f"N[{self.label(i)},{self.label(j)};1]"
                               f"={self.N(i, j, self.unit)}")
        rep.add("duality-multiplicities", not bad, ", ".join(bad))

        bad = []
        for i in range(self.n):
            for j in range(self.n):
                if self.N(self.unit, j, i) != (1 if i == j else 0) or \
                        self.N(j, self.unit, i) != (1 if i == j else 0):
                    bad.append(self.label(j))
                    break
        rep.add("unit-constraints", not bad, ", ".join(bad))

        empty = [alpha for alpha in self.group.elements()
                 if not self.simples_of_grade(alpha)]
        rep.add("components-nonempty", not empty,
                f"empty grades: {empty}" if empty else "")

        bad = [self.label(i) for i in range(self.n)
               if self.piv(i).is_zero()]
        rep.add("pivotal-nonzero", not bad, ", ".join(bad))

        bad = []
        for (i, j, k), v in self.fusion.items():
            if v and not (self.piv(i) * self.piv(j) == self.piv(k)):
                bad.append(f"({self.label(i)},{self.label(j)};"
                           f"{self.label(k)})")
        rep.add("pivotal-monoidal", not bad, ", ".join(bad))

        nonspherical = [self.label(i) for i in range(self.n)
                        if not (self.dim_l(i) == self.dim_r(i))]
        rep.add("spherical", not nonspherical, ", ".join(nonspherical))

        # non-singularity: every grade holds a simple of invertible left
        # dimension; with nonzero pivotal coefficients this reduces to the
        # non-emptiness of the components.
        zero_piv = [i for i in range(self.n) if self.piv(i).is_zero()]
        rep.add("non-singular", not empty and not zero_piv, "")

        if check_pentagon:
            ok, detail = self._check_pentagon()
            rep.add("pentagon", ok, detail)
        return rep

    def _check_pentagon(self) -> tuple[bool, str]:
        if self.trivial_associator():
            return True, "trivial associator"
        if not self.multiplicity_free():
            return False, "pentagon check implemented only for " \
                          "multiplicity-free data"
        # F(a,b,c; d)[y, x]: coefficient relating the ((ab)c) tree through
        # intermediate x to the (a(bc)) tree through intermediate y.
        def F(a, b, c, d, x, y):
            val = self.f_symbols.get((a, b, c, d))
            if val is None:
                return self.one() if self.N(a, b, x) and self.N(x, c, d) \
                    and self.N(b, c, y) and self.N(a, y, d) else None
            return val.get((x, y))

        rng = range(self.n)
        for a in rng:
            for b in rng:
                for c in rng:
                    for d in rng:
                        for e in rng:
                            if not self._pentagon_at(F, a, b, c, d, e):
                                return False, (
                                    f"pentagon fails at "
                                    f"({self.label(a)},{self.label(b)},"
                                    f"{self.label(c)},{self.label(d)};"
                                    f"{self.label(e)})")
        return True, ""

    def _pentagon_at(self, F, a, b, c, d, e) -> bool:
        # Both evaluation orders from (((ab)c)d -> e) to (a(b(cd)) -> e).
        # Trees are indexed by intermediates (x = ab, w = (ab)c or similar).
        rng = range(self.n)
        lhs: dict[tuple[int, int], dict[tuple[int, int], Cyclotomic]] = {}
        # path 1: F(x,c,d;e) then F(a,b,cd-comp;e) ... operate on pairs
        for x in rng:
            if not self.N(a, b, x):
                continue
            for w in rng:
                if not self.N(x, c, w) or not self.N(w, d, e):
                    continue
                # basis vector (x, w) of left-comb trees
                acc: dict[tuple[int, int], Cyclotomic] = {}
                # step 1: F(x, c, d; e): (xc)d -> x(cd), intermediate w -> y
                for y in rng:
                    f1 = F(x, c, d, e, w, y)
                    if f1 is None or not self.N(c, d, y):
                        continue
                    # step 2: F(a, b, y; e): (ab)y -> a(by), x -> z
                    for z in rng:
                        f2 = F(a, b, y, e, x, z)
                        if f2 is None or not self.N(b, y, z):
                            continue
                        key = (y, z)
                        acc[key] = acc.get(key, self.zero_scalar()) + f1 * f2
                rhs: dict[tuple[int, int], Cyclotomic] = {}
                # path 2: F(a,b,c;w), then F(a, u, d; e), then F(b, c, d; z')
                for u in rng:
                    f1 = F(a, b, c, w, x, u)
                    if f1 is None or not self.N(b, c, u):
                        continue
                    for v in rng:
                        f2 = F(a, u, d, e, w, v)
                        if f2 is None or not self.N(u, d, v):
                            continue
                        for y in rng:
                            f3 = F(b, c, d, v, u, y)
                            if f3 is None or not self.N(c, d, y):
                                continue
                            for z in rng:
                                if not self.N(b, y, z):
                                    continue
                                # v must equal the (by) intermediate z
                                if v != z:
                                    continue
                                key = (y, z)
                                rhs[key] = rhs.get(key, self.zero_scalar()) \
                                    + f1 * f2 * f3
                keys = set(acc) | set(rhs)
                for key in keys:
                    l = acc.get(key, self.zero_scalar())
                    r = rhs.get(key, self.zero_scalar())
                    if not (l == r):
                        return False
        return True

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        fusion = [{"i": self.label(i), "j": self.label(j),
                   "k": self.label(k), "mult": v}
                  for (i, j, k), v in sorted(self.fusion.items()) if v]
        if self.f_symbols == "trivial":
            fs = "trivial"
        else:
            fs = [{"factors": [self.label(a), self.label(b), self.label(c)],
                   "target": self.label(d),
                   "left": [self.label(xy[0])], "right": [self.label(xy[1])],
                   "value": val.to_json()}
                  for (a, b, c, d), table in sorted(self.f_symbols.items())
                  for xy, val in sorted(table.items())]
        trivial_piv = all(t == 1 for t in self.pivotal)
        return {
            "name": self.name,
            "cyclotomic_order": self.order,
            "group": self.group.to_json(),
            "simples": [{"label": self.label(i), "grade": self.grades[i]}
                        for i in range(self.n)],
            "unit_simple": self.label(self.unit),
            "dual": {self.label(i): self.label(self.dual[i])
                     for i in range(self.n)},
            "fusion": fusion,
            "f_symbols": fs,
            "pivotal": "trivial" if trivial_piv else
                       {self.label(i): self.pivotal[i].to_json()
                        for i in range(self.n)},
        }

    @staticmethod
    def from_json(data: dict) -> "FusionData":
        group = FiniteGroup.from_json(data["group"])
        order = int(data["cyclotomic_order"])
        simples = [s["label"] for s in data["simples"]]
        grades = [int(s["grade"]) for s in data["simples"]]
        n = len(simples)
        index = {lab: i for i, lab in enumerate(simples)}
        if len(index) != n:
            raise ValueError("duplicate simple labels")
        unit = index[data["unit_simple"]]
        dual = [index[data["dual"][lab]] for lab in simples]
        fusion = {}
        for entry in data["fusion"]:
            key = (index[entry["i"]], index[entry["j"]], index[entry["k"]])
            fusion[key] = int(entry.get("mult", 1))
        fs = data.get("f_symbols", "trivial")
        if fs != "trivial":
            table: dict = {}
            for entry in fs:
                a, b, c = (index[x] for x in entry["factors"])
                d = index[entry["target"]]
                x = index[entry["left"][0]] if entry["left"] else None
                y = index[entry["right"][0]] if entry["right"] else None
                table.setdefault((a, b, c, d), {})[(x, y)] = \
                    Cyclotomic.from_json(entry["value"])
            fs = table
        piv_raw = data.get("pivotal", "trivial")
        if piv_raw == "trivial":
            pivotal = [Cyclotomic.one(order)] * n
        else:
            pivotal = [Cyclotomic.from_json(piv_raw[lab]).promote(order)
                       for lab in simples]
        return FusionData(data.get("name", "category"), group, order,
                          simples, grades, unit, dual, fusion, fs, pivotal)


def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a * b // gcd(a, b)
