"""Bialgebras and Hopf algebras on top of structure-constant coalgebras.

The convolution algebra of linear endomorphisms drives everything:
Hopf powers [n] are convolution powers of the identity map, the
exponent is the least n with [n] = (unit) o (counit), and the two
classification routes implemented in classify_exponent decide
infiniteness (char 0, Chevalley coradical) or a finite bound
(char p, pointed) without unbounded iteration.

Integrals of the dual are computed twice on purpose: once through
traces of left multiplications on H*, once through the dual-basis hit
formula.  The two must agree exactly; tests rely on the redundancy.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field as dataclass_field

from .algebra import FiniteAlgebra
from .coalgebra import (
    Coalgebra,
    Element,
    SimpleComponent,
    as_scalar,
    t2_add_term,
    t2_from_pair,
)
from .errors import (
    AxiomViolation,
    HopfError,
    NotCosemisimple,
    WitnessNotFound,
)
from .linalg import (
    Mat,
    SubspaceBasis,
    unit_vec,
    vec_add,
    vec_is_zero,
    vec_scale,
    zero_vec,
)
from .scalars import FieldSpec

#: LinMaps are plain exact matrices acting on coefficient vectors.
LinMap = Mat


def default_cap(dim: int) -> int:
    """Iteration cap for exponent searches: max(4*dim^2, 256).

    The HOPFEX_CAP environment variable overrides it globally.
    """
    env = os.environ.get("HOPFEX_CAP")
    if env is not None:
        return int(env)
    return max(4 * dim * dim, 256)


@dataclass
class ExponentReport:
    """Outcome of an exponent computation or classification.

    kind is one of "finite", "exceeds_cap", "provably_infinite",
    "bounded"; n is the exact exponent when known, bound the proven
    upper bound for the "bounded" kind, witness an element vector whose
    Hopf powers never return to eps(w)*1 for the "provably_infinite"
    kind.  steps collects a human-readable decision log.
    """

    kind: str
    n: int | None = None
    cap: int | None = None
    bound: int | None = None
    witness: tuple | None = None
    criterion: str = ""
    steps: list = dataclass_field(default_factory=list)

    def describe(self) -> str:
        lines = []
        if self.kind == "finite":
            lines.append(f"exponent = {self.n}")
        elif self.kind == "exceeds_cap":
            lines.append(f"exponent exceeds cap {self.cap}")
        elif self.kind == "provably_infinite":
            lines.append("exponent = infinity (proved)")
        elif self.kind == "bounded":
            lines.append(f"exponent = {self.n} (proved bound {self.bound})")
        if self.criterion:
            lines.append(f"criterion: {self.criterion}")
        for s in self.steps:
            lines.append(f"  {s}")
        return "\n".join(lines)


@dataclass
class IntegralResult:
    """An integral of the dual, with the left-integral assertion flag.

    asserted is True when S^2 = id held and h*Lambda = eps(h)*Lambda was
    verified for every basis element; otherwise the element is returned
    unasserted.
    """

    element: Element
    asserted: bool


@dataclass
class CosemisimpleIntegral:
    """Lambda_0 written as 1 + sum of r_D * (trace of a basic matrix)."""

    element: Element
    unit_component: int
    terms: list  # (simple index, r_D, trace Element)


class HopfAlgebra(Coalgebra):
    """A bialgebra, optionally with antipode, by structure constants.

    mul maps (i, j, m) -> scalar with e_i e_j = sum c e_m; unit is the
    coefficient vector of 1; antipode, when present, maps (i, m) ->
    scalar with S(e_i) = sum c e_m.
    """

    def __init__(self, field: FieldSpec, names, comul, counit, mul, unit,
                 antipode=None, name: str = ""):
        super().__init__(field, names, comul, counit, name=name)
        table = [[list(zero_vec(field, self.dim)) for _ in range(self.dim)]
                 for _ in range(self.dim)]
        for (i, j, m), val in mul.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim
                    and 0 <= m < self.dim):
                raise AxiomViolation(f"multiplication index ({i},{j},{m}) "
                                     f"out of range for dimension {self.dim}")
            table[i][j][m] = table[i][j][m] + as_scalar(field, val)
        self.mul_table = tuple(tuple(tuple(v) for v in row) for row in table)
        self.unit = tuple(as_scalar(field, c) for c in unit)
        if len(self.unit) != self.dim:
            raise AxiomViolation("unit vector length differs from dimension")
        if antipode is None:
            self.antipode_mat = None
        else:
            cols = [list(zero_vec(field, self.dim)) for _ in range(self.dim)]
            for (i, m), val in antipode.items():
                cols[i][m] = cols[i][m] + as_scalar(field, val)
            self.antipode_mat = Mat.from_columns(
                field, [tuple(c) for c in cols], self.dim)
        self._alg = FiniteAlgebra(field, [list(r) for r in self.mul_table],
                                  self.unit)
        self._integral_cache = None

    # -- products ----------------------------------------------------------

    def mul_vec(self, u: tuple, v: tuple) -> tuple:
        return self._alg.mult(u, v)

    def power_vec(self, u: tuple, n: int) -> tuple:
        return self._alg.power(u, n)

    def as_algebra(self) -> FiniteAlgebra:
        return self._alg

    def antipode_vec(self, v: tuple) -> tuple:
        if self.antipode_mat is None:
            raise HopfError("no antipode on this bialgebra")
        return self.antipode_mat.apply(v)

    def one(self) -> Element:
        return Element(self, self.unit)

    def t2_mul(self, a: dict, b: dict) -> dict:
        """Componentwise product on H (x) H: (x(x)y)(x'(x)y') = xx'(x)yy'."""
        out: dict = {}
        for (j, k), c in a.items():
            for (j2, k2), c2 in b.items():
                coeff = c * c2
                left = self.mul_table[j][j2]
                right = self.mul_table[k][k2]
                for m, lv in enumerate(left):
                    if lv.is_zero():
                        continue
                    for m2, rv in enumerate(right):
                        if not rv.is_zero():
                            t2_add_term(out, (m, m2), coeff * lv * rv)
        return out

    # -- axioms ---------------------------------------------------------------

    def check_hopf(self) -> list[str]:
        """Exact audit of bialgebra (and antipode) axioms; returns violations."""
        bad = list(self.check())
        one = self.field.one()
        units = [unit_vec(self.field, self.dim, i) for i in range(self.dim)]
        for i, ei in enumerate(units):
            if self.mul_vec(self.unit, ei) != ei:
                bad.append(f"left unit law fails on {self.names[i]}")
            if self.mul_vec(ei, self.unit) != ei:
                bad.append(f"right unit law fails on {self.names[i]}")
        for i, ei in enumerate(units):
            for j, ej in enumerate(units):
                pij = self.mul_vec(ei, ej)
                for k, ek in enumerate(units):
                    if self.mul_vec(pij, ek) != \
                            self.mul_vec(ei, self.mul_vec(ej, ek)):
                        bad.append("associativity fails at "
                                   f"({self.names[i]},{self.names[j]},{self.names[k]})")
        if self.delta_vec(self.unit) != t2_from_pair(self.unit, self.unit):
            bad.append("comultiplication of 1 is not 1(x)1")
        if self.counit_vec(self.unit) != one:
            bad.append("counit of 1 is not 1")
        for i, ei in enumerate(units):
            di = self.comul[i]
            for j, ej in enumerate(units):
                prod = self.mul_vec(ei, ej)
                if self.delta_vec(prod) != self.t2_mul(di, self.comul[j]):
                    bad.append("comultiplication is not multiplicative on "
                               f"({self.names[i]},{self.names[j]})")
                if self.counit_vec(prod) != self.counit[i] * self.counit[j]:
                    bad.append("counit is not multiplicative on "
                               f"({self.names[i]},{self.names[j]})")
        if self.antipode_mat is not None:
            for i in range(self.dim):
                left = zero_vec(self.field, self.dim)
                right = zero_vec(self.field, self.dim)
                for (j, k), c in self.comul[i].items():
                    sj = self.antipode_mat.column(j)
                    sk = self.antipode_mat.column(k)
                    left = vec_add(left, vec_scale(
                        c, self.mul_vec(sj, unit_vec(self.field, self.dim, k))))
                    right = vec_add(right, vec_scale(
                        c, self.mul_vec(unit_vec(self.field, self.dim, j), sk)))
                want = vec_scale(self.counit[i], self.unit)
                if left != want:
                    bad.append(f"antipode axiom m(S(x)id)Delta fails on {self.names[i]}")
                if right != want:
                    bad.append(f"antipode axiom m(id(x)S)Delta fails on {self.names[i]}")
        return bad

    def require_hopf_valid(self):
        bad = self.check_hopf()
        if bad:
            raise AxiomViolation("; ".join(bad))

    def involutory(self) -> bool:
        if self.antipode_mat is None:
            return False
        return self.antipode_mat @ self.antipode_mat == \
            Mat.identity(self.field, self.dim)

    # -- convolution and Hopf powers ---------------------------------------------

    def identity_map(self) -> Mat:
        return Mat.identity(self.field, self.dim)

    def counit_unit_map(self) -> Mat:
        cols = [vec_scale(self.counit[i], self.unit) for i in range(self.dim)]
        return Mat.from_columns(self.field, cols, self.dim)

    def convolution(self, f: Mat, g: Mat) -> Mat:
        cols = []
        for i in range(self.dim):
            acc = zero_vec(self.field, self.dim)
            for (j, k), c in self.comul[i].items():
                acc = vec_add(acc, vec_scale(
                    c, self.mul_vec(f.column(j), g.column(k))))
            cols.append(acc)
        return Mat.from_columns(self.field, cols, self.dim)

    def hopf_power_map(self, n: int) -> Mat:
        """[n] = n-fold convolution power of the identity; [0] = u o eps."""
        if n < 0:
            raise HopfError("Hopf power maps are defined for n >= 0")
        if n == 0:
            return self.counit_unit_map()
        ident = self.identity_map()
        m = ident
        for _ in range(n - 1):
            m = self.convolution(m, ident)
        return m

    def hopf_power(self, h, n: int):
        """h^[n]; accepts an Element or a coefficient vector."""
        if isinstance(h, Element):
            return Element(self, self.hopf_power(h.vec, n))
        return self.hopf_power_map(n).apply(tuple(h))

    def hopf_order(self, h, cap: int | None = None) -> int | None:
        """Least n >= 1 with h^[n] = eps(h)*1, or None past the cap."""
        vec = h.vec if isinstance(h, Element) else tuple(h)
        cap = default_cap(self.dim) if cap is None else cap
        target = vec_scale(self.counit_vec(vec), self.unit)
        ident = self.identity_map()
        m = ident
        for n in range(1, cap + 1):
            if m.apply(vec) == target:
                return n
            m = self.convolution(m, ident)
        return None

    def exponent(self, cap: int | None = None) -> ExponentReport:
        """Iterate [n] as exact matrices until u o eps, a repeat, or the cap."""
        cap = default_cap(self.dim) if cap is None else cap
        ueps = self.counit_unit_map()
        ident = self.identity_map()
        m = ident
        seen: dict = {}
        steps = [f"iterating convolution powers of id up to cap {cap}"]
        for n in range(1, cap + 1):
            if m == ueps:
                steps.append(f"power {n} equals the unit of convolution")
                return ExponentReport("finite", n=n, cap=cap, steps=steps)
            if m in seen:
                # a cycle that avoids u o eps: impossible when id is
                # convolution-invertible (antipode present)
                assert self.antipode_mat is None, (
                    "convolution powers of id repeated without reaching "
                    "u o eps on a Hopf algebra")
                steps.append(f"power {n} repeats power {seen[m]} without "
                             "reaching the convolution unit; no exponent exists")
                return ExponentReport("exceeds_cap", cap=cap, steps=steps)
            if len(seen) < 4096:
                seen[m] = n
            m = self.convolution(m, ident)
        steps.append(f"no power up to {cap} equals the convolution unit")
        return ExponentReport("exceeds_cap", cap=cap, steps=steps)

    # -- scalar extension ---------------------------------------------------------

    def extend_scalars(self, bigger: FieldSpec) -> "HopfAlgebra":
        conv = bigger.convert
        comul = {}
        for i in range(self.dim):
            for (j, k), c in self.comul[i].items():
                comul[(i, j, k)] = conv(c)
        mul = {}
        for i in range(self.dim):
            for j in range(self.dim):
                for m, c in enumerate(self.mul_table[i][j]):
                    if not c.is_zero():
                        mul[(i, j, m)] = conv(c)
        antipode = None
        if self.antipode_mat is not None:
            antipode = {}
            for i in range(self.dim):
                for m, c in enumerate(self.antipode_mat.column(i)):
                    if not c.is_zero():
                        antipode[(i, m)] = conv(c)
        return HopfAlgebra(bigger, self.names, comul,
                           [conv(c) for c in self.counit], mul,
                           [conv(c) for c in self.unit], antipode,
                           name=f"{self.name} (x) {bigger.describe()}")

    # -- integrals -------------------------------------------------------------

    def integral_trace(self) -> IntegralResult:
        """Integral of the dual via traces of left multiplications on H*."""
        dual = self.dual_algebra()
        vec = tuple(
            dual.left_mult_mat(unit_vec(self.field, self.dim, i)).trace()
            for i in range(self.dim))
        return self._integral_result(vec)

    def integral_dual_basis(self) -> IntegralResult:
        """The same integral via Lambda = sum e_i* harpoon-> e_i."""
        acc = zero_vec(self.field, self.dim)
        for i in range(self.dim):
            f = unit_vec(self.field, self.dim, i)
            acc = vec_add(acc, self.hit_left(f, f))
        return self._integral_result(acc)

    def _integral_result(self, vec: tuple) -> IntegralResult:
        asserted = False
        if self.involutory():
            for i in range(self.dim):
                lhs = self.mul_vec(unit_vec(self.field, self.dim, i), vec)
                assert lhs == vec_scale(self.counit[i], vec), \
                    "left integral property fails on an involutory Hopf algebra"
            asserted = True
        return IntegralResult(Element(self, vec), asserted)

    def cosemisimple_integral_decomposition(self) -> CosemisimpleIntegral:
        """Lambda_0 = 1 + sum over non-unit simples of r_D * tr(basic matrix)."""
        if not self.is_cosemisimple():
            raise NotCosemisimple(
                "integral decomposition needs H equal to its coradical")
        from .matforms import basic_multiplicative_matrix
        comps = self.simple_subcoalgebras()
        unit_comp = self.analysis().find_simple_containing(self.unit)
        total = tuple(self.unit)
        terms = []
        for comp in comps:
            if comp.index == unit_comp:
                continue
            basic = basic_multiplicative_matrix(self, comp)
            tr = zero_vec(self.field, self.dim)
            for i in range(comp.matrix_size):
                tr = vec_add(tr, basic.matrix.entry(i, i))
            r = self.field.from_int(comp.matrix_size)
            total = vec_add(total, vec_scale(r, tr))
            terms.append((comp.index, comp.matrix_size, Element(self, tr)))
        want = self.integral_dual_basis().element.vec
        assert total == want, "trace decomposition disagrees with the integral"
        return CosemisimpleIntegral(Element(self, total), unit_comp, terms)

    # -- structure tests ----------------------------------------------------------

    def chevalley_check(self) -> bool:
        """Is the coradical closed under product (and antipode, if any)?"""
        h0 = self.coradical()
        for u in h0.rows:
            for v in h0.rows:
                if not h0.contains_vector(self.mul_vec(u, v)):
                    return False
        if self.antipode_mat is not None:
            for u in h0.rows:
                if not h0.contains_vector(self.antipode_vec(u)):
                    return False
        return True

    def grouplike_order(self, g, bound: int = 100000) -> int:
        vec = g.vec if isinstance(g, Element) else tuple(g)
        acc = vec
        for n in range(1, bound + 1):
            if acc == self.unit:
                return n
            acc = self.mul_vec(acc, vec)
        raise HopfError("group-like order exceeds sanity bound")

    def nontrivial_h1_witness(self) -> Element:
        """A nonzero element of some (^C H_1 ^1)+ for non-cosemisimple H."""
        if self.is_cosemisimple():
            raise WitnessNotFound("cosemisimple: H_1 carries no witness")
        filt = self.coradical_filtration()
        h1 = filt[1]
        ana = self.analysis()
        unit_idx = ana.find_simple_containing(self.unit)
        keps = SubspaceBasis(self.field, self.dim, [self.counit]).perp()
        for comp in self.simple_subcoalgebras():
            v = self.bicomponent_subspace(comp.index, unit_idx, within=h1)
            plus = v.intersect(keps)
            if plus.dim:
                return Element(self, plus.rows[0])
        raise WitnessNotFound(
            "no nonzero (^C H_1 ^1)+ component; input violates the "
            "non-cosemisimple hypothesis")

    # -- the decision procedure ---------------------------------------------------

    def classify_exponent(self, cap: int | None = None) -> ExponentReport:
        """Decide the exponent by structure before falling back to iteration.

        char 0 + non-cosemisimple + Chevalley coradical: provably
        infinite, with a witness whose Hopf powers never return to
        eps(w)*1.  char p + pointed: the exponent is bounded by
        d*p^(floor(log_p n)+1) with d the exponent of the group-like
        group and n the coradical filtration depth (just d when n = 0),
        and the exact value is found by iteration inside the bound.
        Everything else is capped iteration.
        """
        cap = default_cap(self.dim) if cap is None else cap
        steps = []
        p = self.field.char
        cosem = self.is_cosemisimple()
        if p == 0 and not cosem and self.antipode_mat is not None \
                and self.chevalley_check():
            w = self.nontrivial_h1_witness()
            steps.append("characteristic 0, not cosemisimple, coradical is "
                         "a Hopf subalgebra")
            steps.append(f"witness {w!r} lies in a (^C H_1 ^1)+ component")
            return ExponentReport(
                "provably_infinite", cap=cap, witness=w.vec,
                criterion="non-cosemisimple with Hopf-subalgebra coradical "
                          "in characteristic 0: the witness has infinite "
                          "Hopf order, so no convolution power of id is "
                          "u o eps", steps=steps)
        if p > 0 and self.antipode_mat is not None and self.is_pointed():
            d = 1
            for g in self.group_likes():
                o = self.grouplike_order(g)
                d = d * o // math.gcd(d, o)
            n = len(self.coradical_filtration()) - 1
            if n == 0:
                bound = d
            else:
                e = 0
                while p ** (e + 1) <= n:
                    e += 1
                bound = d * p ** (e + 1)
            steps.append(f"characteristic {p}, pointed; group-like group "
                         f"exponent d = {d}, filtration depth n = {n}")
            steps.append(f"exponent bounded by {bound}")
            inner = self.exponent(bound)
            assert inner.kind == "finite", \
                "iteration missed the proven char-p pointed bound"
            steps.extend(inner.steps[1:])
            return ExponentReport("bounded", n=inner.n, cap=cap, bound=bound,
                                  criterion="pointed in characteristic p: "
                                            "exponent bounded by d*p^(floor("
                                            "log_p n)+1)", steps=steps)
        if cosem:
            steps.append("cosemisimple: no structural bound used, iterating")
        else:
            steps.append("no decision route applies, iterating to the cap")
        inner = self.exponent(cap)
        inner.steps = steps + inner.steps
        return inner


__all__ = [
    "CosemisimpleIntegral",
    "Element",
    "ExponentReport",
    "HopfAlgebra",
    "IntegralResult",
    "LinMap",
    "SimpleComponent",
    "default_cap",
]
