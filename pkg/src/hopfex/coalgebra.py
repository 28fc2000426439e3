"""Finite-dimensional coalgebras presented by structure constants.

A coalgebra here is a based vector space with comultiplication given
sparsely, Delta(e_i) = sum mu[i][(j,k)] e_j (x) e_k, and a counit
vector.  Everything downstream of the definition is derived from the
dual algebra: the Jacobson radical J of H* gives the coradical
filtration H_m = (J^(m+1))^perp, the Wedderburn blocks of H*/J give
the simple subcoalgebras, and lifting their central idempotents
through J gives the orthonormal coradical idempotent family {e_C},
which in turn powers the hit-action calculus and the bicomponent
decompositions.

Tensors in H (x) H are sparse dicts keyed by basis index pairs; they
are kept clean (no explicit zeros), so dict equality is tensor
equality.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .algebra import FiniteAlgebra
from .errors import (
    AxiomViolation,
    FieldMismatch,
    IncompatibleBase,
    NonSplitField,
    UnknownSimple,
)
from .linalg import (
    Mat,
    SubspaceBasis,
    rref_rows,
    unit_vec,
    vec_add,
    vec_dot,
    vec_is_zero,
    vec_scale,
    vec_sub,
    zero_vec,
)
from .scalars import FieldSpec, Scalar


def as_scalar(field: FieldSpec, v) -> Scalar:
    if isinstance(v, Scalar):
        if v.field != field:
            raise FieldMismatch(f"scalar over {v.field.describe()} used in a "
                                f"{field.describe()} coalgebra")
        return v
    if isinstance(v, int):
        return field.from_int(v)
    if isinstance(v, Fraction):
        return field.from_fraction(v)
    raise TypeError(f"cannot coerce {v!r} to a scalar")


# ---------------------------------------------------------------------------
# sparse tensors in H (x) H
# ---------------------------------------------------------------------------

def t2_add_term(acc: dict, key: tuple, val: Scalar):
    if key in acc:
        s = acc[key] + val
        if s.is_zero():
            del acc[key]
        else:
            acc[key] = s
    elif not val.is_zero():
        acc[key] = val


def t2_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        t2_add_term(out, k, v)
    return out


def t2_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        t2_add_term(out, k, -v)
    return out


def t2_scale(c: Scalar, a: dict) -> dict:
    if c.is_zero():
        return {}
    return {k: c * v for k, v in a.items()}


def t2_from_pair(u: tuple, v: tuple) -> dict:
    out = {}
    for j, x in enumerate(u):
        if x.is_zero():
            continue
        for k, y in enumerate(v):
            if not y.is_zero():
                t2_add_term(out, (j, k), x * y)
    return out


def t2_flatten(field: FieldSpec, a: dict, dim: int) -> tuple:
    out = list(zero_vec(field, dim * dim))
    for (j, k), v in a.items():
        out[j * dim + k] = v
    return tuple(out)


def t2_unflatten(vec: tuple, dim: int) -> dict:
    out = {}
    for idx, v in enumerate(vec):
        if not v.is_zero():
            out[(idx // dim, idx % dim)] = v
    return out


def tensor_square_subspace(v: SubspaceBasis, w: SubspaceBasis) -> SubspaceBasis:
    """The subspace V (x) W inside the flattened square of the ambient."""
    field = v.field
    dim = v.ambient
    rows = []
    for a in v.rows:
        for b in w.rows:
            rows.append(t2_flatten(field, t2_from_pair(a, b), dim))
    return SubspaceBasis(field, dim * w.ambient, rows)


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

class Element:
    """A coalgebra element: a coefficient vector bound to its parent.

    Addition, subtraction and scalar multiples always work; * between
    elements delegates to the parent when it carries a product (bi- or
    Hopf algebras).
    """

    __slots__ = ("parent", "vec")

    def __init__(self, parent: "Coalgebra", vec):
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "vec", tuple(vec))

    def __setattr__(self, *a):
        raise AttributeError("Element is immutable")

    def delta(self) -> dict:
        return self.parent.delta_vec(self.vec)

    def eps(self) -> Scalar:
        return self.parent.counit_vec(self.vec)

    def __add__(self, other: "Element") -> "Element":
        self._like(other)
        return Element(self.parent, vec_add(self.vec, other.vec))

    def __sub__(self, other: "Element") -> "Element":
        self._like(other)
        return Element(self.parent, vec_sub(self.vec, other.vec))

    def __neg__(self) -> "Element":
        return Element(self.parent, vec_scale(-self.parent.field.one(), self.vec))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._like(other)
            mul = getattr(self.parent, "mul_vec", None)
            if mul is None:
                raise TypeError("parent coalgebra has no product")
            return Element(self.parent, mul(self.vec, other.vec))
        return Element(self.parent,
                       vec_scale(as_scalar(self.parent.field, other), self.vec))

    def __rmul__(self, other):
        return Element(self.parent,
                       vec_scale(as_scalar(self.parent.field, other), self.vec))

    def __pow__(self, n: int) -> "Element":
        mul = getattr(self.parent, "mul_vec", None)
        if mul is None or n < 0:
            raise TypeError("power needs an algebra product and n >= 0")
        out = getattr(self.parent, "unit")
        acc = Element(self.parent, out)
        for _ in range(n):
            acc = acc * self
        return acc

    def is_zero(self) -> bool:
        return vec_is_zero(self.vec)

    def __eq__(self, other):
        return (isinstance(other, Element) and other.parent is self.parent
                and other.vec == self.vec)

    def __hash__(self):
        return hash((id(self.parent), self.vec))

    def _like(self, other: "Element"):
        if other.parent is not self.parent:
            raise FieldMismatch("elements of different coalgebras")

    def __repr__(self):
        return self.parent.format_element(self.vec)


# ---------------------------------------------------------------------------
# the coalgebra
# ---------------------------------------------------------------------------

class Coalgebra:
    """Coalgebra by structure constants over an exact field.

    comul maps (i, j, k) -> scalar with Delta(e_i) = sum e_j (x) e_k
    weighted by that scalar; counit lists eps(e_i).  Instances are
    immutable after construction; derived data (dual algebra, coradical
    analysis) is computed once and cached.
    """

    def __init__(self, field: FieldSpec, names, comul, counit, name: str = ""):
        self.field = field
        self.names = tuple(str(n) for n in names)
        self.dim = len(self.names)
        self.name = name or "coalgebra"
        if len(set(self.names)) != self.dim:
            raise AxiomViolation("basis names must be distinct")
        if len(counit) != self.dim:
            raise AxiomViolation("counit length differs from dimension")
        self.counit = tuple(as_scalar(field, c) for c in counit)
        table: list[dict] = [dict() for _ in range(self.dim)]
        for (i, j, k), val in comul.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim and 0 <= k < self.dim):
                raise AxiomViolation(f"comultiplication index ({i},{j},{k}) "
                                     f"out of range for dimension {self.dim}")
            s = as_scalar(field, val)
            if not s.is_zero():
                t2_add_term(table[i], (j, k), s)
        self.comul = tuple(table)
        self._dual = None
        self._analysis = None

    # -- basics -------------------------------------------------------------

    def basis_element(self, i: int) -> Element:
        return Element(self, unit_vec(self.field, self.dim, i))

    def element(self, coeffs) -> Element:
        """Element from a coefficient list or a {basis name: coeff} dict."""
        if isinstance(coeffs, dict):
            vec = list(zero_vec(self.field, self.dim))
            for name, c in coeffs.items():
                vec[self.index_of(name)] = as_scalar(self.field, c)
            return Element(self, vec)
        return Element(self, [as_scalar(self.field, c) for c in coeffs])

    def zero(self) -> Element:
        return Element(self, zero_vec(self.field, self.dim))

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise AxiomViolation(f"no basis vector named {name!r}") from None

    def format_element(self, vec) -> str:
        terms = []
        for i, c in enumerate(vec):
            if c.is_zero():
                continue
            s = str(c)
            if s == "1":
                terms.append(self.names[i])
            elif s == "-1":
                terms.append("-" + self.names[i])
            elif all(ch.isdigit() for ch in s.lstrip("-")):
                terms.append(f"{s}*{self.names[i]}")
            else:
                terms.append(f"({s})*{self.names[i]}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += (" - " + t[1:]) if t.startswith("-") else (" + " + t)
        return out

    def delta_vec(self, vec) -> dict:
        out: dict = {}
        for i, c in enumerate(vec):
            if c.is_zero():
                continue
            for key, val in self.comul[i].items():
                t2_add_term(out, key, c * val)
        return out

    def counit_vec(self, vec) -> Scalar:
        return vec_dot(self.counit, vec)

    def __repr__(self):
        return (f"<{type(self).__name__} {self.name!r} dim={self.dim} "
                f"over {self.field.describe()}>")

    # -- axioms ---------------------------------------------------------------

    def check(self) -> list[str]:
        """Exact axiom audit; returns human-readable violations."""
        bad = []
        for i in range(self.dim):
            d = self.comul[i]
            left: dict = {}
            right: dict = {}
            for (j, k), c in d.items():
                for (a, b), c2 in self.comul[j].items():
                    t2_add_term(left, (a, b, k), c * c2)
                for (a, b), c2 in self.comul[k].items():
                    t2_add_term(right, (j, a, b), c * c2)
            if left != right:
                bad.append(f"coassociativity fails on {self.names[i]}")
            lvec = list(zero_vec(self.field, self.dim))
            rvec = list(zero_vec(self.field, self.dim))
            for (j, k), c in d.items():
                lvec[k] = lvec[k] + c * self.counit[j]
                rvec[j] = rvec[j] + c * self.counit[k]
            e_i = unit_vec(self.field, self.dim, i)
            if tuple(lvec) != e_i:
                bad.append(f"left counit law fails on {self.names[i]}")
            if tuple(rvec) != e_i:
                bad.append(f"right counit law fails on {self.names[i]}")
        return bad

    def require_valid(self):
        bad = self.check()
        if bad:
            raise AxiomViolation("; ".join(bad))

    def extend_scalars(self, bigger: FieldSpec) -> "Coalgebra":
        """The same structure constants read in an extension field."""
        conv = bigger.convert
        comul = {}
        for i in range(self.dim):
            for (j, k), c in self.comul[i].items():
                comul[(i, j, k)] = conv(c)
        return Coalgebra(bigger, self.names, comul,
                         [conv(c) for c in self.counit],
                         name=f"{self.name} (x) {bigger.describe()}")

    def is_subcoalgebra(self, v: SubspaceBasis) -> bool:
        target = tensor_square_subspace(v, v)
        for row in v.rows:
            flat = t2_flatten(self.field, self.delta_vec(row), self.dim)
            if not target.contains_vector(flat):
                return False
        return True

    # -- the dual algebra and coradical analysis -------------------------------

    def dual_algebra(self) -> FiniteAlgebra:
        """H* with (f.g)(c) = sum f(c_(1)) g(c_(2)), on the dual basis."""
        if self._dual is None:
            zero = self.field.zero()
            table = []
            for i in range(self.dim):
                row = []
                for j in range(self.dim):
                    row.append(tuple(self.comul[m].get((i, j), zero)
                                     for m in range(self.dim)))
                table.append(row)
            self._dual = FiniteAlgebra(self.field, table, self.counit)
        return self._dual

    def analysis(self) -> "CoradicalAnalysis":
        if self._analysis is None:
            self._analysis = CoradicalAnalysis(self)
        return self._analysis

    def coradical_filtration(self) -> list[SubspaceBasis]:
        return self.analysis().filtration

    def coradical(self) -> SubspaceBasis:
        return self.analysis().filtration[0]

    def is_cosemisimple(self) -> bool:
        return self.coradical().dim == self.dim

    def simple_subcoalgebras(self) -> list["SimpleComponent"]:
        return self.analysis().simples()

    def coradical_idempotents(self) -> "IdempotentFamily":
        return self.analysis().idempotents()

    def is_pointed(self) -> bool:
        return all(c.dim == 1 for c in self.simple_subcoalgebras())

    def group_likes(self) -> list[Element]:
        return [Element(self, c.grouplike) for c in self.simple_subcoalgebras()
                if c.is_grouplike]

    # -- hit actions ------------------------------------------------------------

    def hit_left(self, f: tuple, h: tuple) -> tuple:
        """f harpoon-> h = sum h_(1) f(h_(2)): f eats the right tensor leg."""
        out = list(zero_vec(self.field, self.dim))
        for i, c in enumerate(h):
            if c.is_zero():
                continue
            for (j, k), val in self.comul[i].items():
                fk = f[k]
                if not fk.is_zero():
                    out[j] = out[j] + c * val * fk
        return tuple(out)

    def hit_right(self, h: tuple, f: tuple) -> tuple:
        """h <-harpoon f = sum f(h_(1)) h_(2): f eats the left tensor leg."""
        out = list(zero_vec(self.field, self.dim))
        for i, c in enumerate(h):
            if c.is_zero():
                continue
            for (j, k), val in self.comul[i].items():
                fj = f[j]
                if not fj.is_zero():
                    out[k] = out[k] + c * val * fj
        return tuple(out)

    def component(self, h: tuple, left: int | None = None,
                  right: int | None = None) -> tuple:
        """Bicomponent ^C h ^D: left index applies h <- e_C, right e_D -> h."""
        fam = self.coradical_idempotents()
        v = tuple(h)
        if left is not None:
            v = self.hit_right(v, fam.functional(left))
        if right is not None:
            v = self.hit_left(fam.functional(right), v)
        return v

    def bicomponent_decomposition_vec(self, h: tuple) -> dict:
        """All nonzero ^C h ^D; their sum is h."""
        n = len(self.simple_subcoalgebras())
        out = {}
        total = zero_vec(self.field, self.dim)
        for c in range(n):
            for d in range(n):
                v = self.component(h, left=c, right=d)
                if not vec_is_zero(v):
                    out[(c, d)] = v
                    total = vec_add(total, v)
        assert total == tuple(h), "bicomponents failed to sum back"
        return out

    def bicomponent_decomposition(self, v: SubspaceBasis) -> dict:
        """Map (C, D) -> ^C V ^D for every pair of simples."""
        n = len(self.simple_subcoalgebras())
        out = {}
        for c in range(n):
            for d in range(n):
                rows = [self.component(row, left=c, right=d) for row in v.rows]
                out[(c, d)] = SubspaceBasis(self.field, self.dim, rows)
        return out

    def bicomponent_subspace(self, left: int, right: int,
                             within: SubspaceBasis | None = None) -> SubspaceBasis:
        v = within if within is not None else SubspaceBasis.full(self.field, self.dim)
        rows = [self.component(row, left=left, right=right) for row in v.rows]
        return SubspaceBasis(self.field, self.dim, rows)


# ---------------------------------------------------------------------------
# coradical analysis
# ---------------------------------------------------------------------------

class SimpleComponent:
    """One simple subcoalgebra, with its dual Wedderburn block data."""

    __slots__ = ("index", "subspace", "dim", "matrix_size", "is_grouplike",
                 "grouplike", "central_idempotent", "primitive_idempotent",
                 "block_rows")

    def __init__(self, index, subspace, matrix_size, grouplike,
                 central_idempotent, primitive_idempotent, block_rows):
        self.index = index
        self.subspace = subspace
        self.dim = subspace.dim
        self.matrix_size = matrix_size
        self.is_grouplike = grouplike is not None
        self.grouplike = grouplike
        self.central_idempotent = central_idempotent
        self.primitive_idempotent = primitive_idempotent
        self.block_rows = block_rows

    def __repr__(self):
        kind = "group-like" if self.is_grouplike else f"{self.matrix_size}x{self.matrix_size}"
        return f"<SimpleComponent #{self.index} dim={self.dim} {kind}>"


class IdempotentFamily:
    """Orthonormal coradical idempotents {e_C} in H*, one per simple.

    Invariants (asserted at construction): e_C e_D = delta e_C, the sum
    is the counit, and each e_C restricts on the coradical as the
    projection onto its simple.
    """

    def __init__(self, coalgebra: Coalgebra, functionals: list[tuple]):
        self.coalgebra = coalgebra
        self.functionals = tuple(tuple(f) for f in functionals)

    def __len__(self):
        return len(self.functionals)

    def functional(self, i: int) -> tuple:
        if not 0 <= i < len(self.functionals):
            raise UnknownSimple(f"no simple subcoalgebra with index {i}")
        return self.functionals[i]

    def __iter__(self):
        return iter(self.functionals)


class CoradicalAnalysis:
    """Cached derived structure: radical, filtration, simples, idempotents."""

    def __init__(self, coalgebra: Coalgebra):
        self.coalgebra = coalgebra
        self.dual = coalgebra.dual_algebra()
        self.radical = self.dual.radical()
        jpowers = self.dual.ideal_powers(self.radical)
        # H_m = (J^(m+1))^perp; the chain is strictly increasing and the
        # last term (annihilator of the vanishing power) is all of H.
        self.filtration = [jp.perp() for jp in jpowers]
        self.quotient = self.dual.quotient(self.radical)
        self._simples: list[SimpleComponent] | None = None
        self._idempotents: IdempotentFamily | None = None

    @property
    def depth(self) -> int:
        return len(self.filtration) - 1

    # -- simple subcoalgebras ---------------------------------------------------

    def simples(self) -> list[SimpleComponent]:
        if self._simples is None:
            self._simples = self._compute_simples()
        return self._simples

    def _compute_simples(self) -> list[SimpleComponent]:
        H = self.coalgebra
        field = H.field
        q = self.quotient.algebra
        zrows = q.center().rows
        zmap = q.subalgebra_on(list(zrows), q.unit)
        pool = _split_commutative(zmap.algebra)
        embedded = []
        for e in pool:
            if len(zmap.algebra.corner_basis(e)) > 1:
                raise NonSplitField(
                    "a simple block of the dual algebra has center larger "
                    "than the base field; recompute over a field extension")
            embedded.append(zmap.embed(e))
        blocks = [q.corner_basis(z) for z in embedded]
        raw = []
        for t, z in enumerate(embedded):
            bdim = len(blocks[t])
            if bdim == 1:
                f, r = z, 1
            else:
                f = q.primitive_idempotent_in(z, seed=t)
                lrows = [q.mult(unit_vec(field, q.dim, i), f)
                         for i in range(q.dim)]
                r = SubspaceBasis(field, q.dim, lrows).dim
                if r * r != bdim:
                    raise NonSplitField(
                        f"simple block of dimension {bdim} has minimal left "
                        f"ideals of dimension {r}; the block is a division "
                        "algebra over the base field, extend the field")
            ann_rows = list(self.radical.rows)
            for s, other in enumerate(blocks):
                if s != t:
                    ann_rows.extend(self.quotient.lift(b) for b in other)
            sub = SubspaceBasis(field, H.dim, ann_rows).perp()
            assert sub.dim == bdim, "block/subcoalgebra dimension mismatch"
            assert H.is_subcoalgebra(sub), "perp pullback not a subcoalgebra"
            grouplike = None
            if bdim == 1:
                v = sub.rows[0]
                ev = H.counit_vec(v)
                assert not ev.is_zero(), "counit vanishes on a simple"
                g = vec_scale(ev.inverse(), v)
                assert H.delta_vec(g) == t2_from_pair(g, g)
                grouplike = g
            raw.append((sub, r, grouplike, z, f, blocks[t]))
        raw.sort(key=lambda item: (item[0].dim,
                                   tuple(str(x) for row in item[0].rows
                                         for x in row)))
        comps = [SimpleComponent(i, sub, r, g, z, f, rows)
                 for i, (sub, r, g, z, f, rows) in enumerate(raw)]
        total = SubspaceBasis.zero(field, H.dim)
        for c in comps:
            total = total.sum(c.subspace)
        assert total == self.filtration[0], "simples do not sum to the coradical"
        return comps

    def find_simple_containing(self, vec: tuple) -> int:
        for c in self.simples():
            if c.subspace.contains_vector(vec):
                return c.index
        raise UnknownSimple("vector lies in no single simple subcoalgebra")

    # -- coradical idempotents ---------------------------------------------------

    def idempotents(self) -> IdempotentFamily:
        if self._idempotents is None:
            comps = self.simples()
            a = self.dual
            total = zero_vec(a.field, a.dim)
            funcs = []
            for comp in comps:
                lifted = self.quotient.lift(comp.central_idempotent)
                mask = vec_sub(a.unit, total)
                f = a.lift_idempotent(a.mult(a.mult(mask, lifted), mask))
                funcs.append(f)
                total = vec_add(total, f)
            assert tuple(total) == a.unit, "idempotents do not sum to the counit"
            for f, g in itertools.combinations(funcs, 2):
                assert vec_is_zero(a.mult(f, g)) and vec_is_zero(a.mult(g, f))
            for i, f in enumerate(funcs):
                for comp in comps:
                    for row in comp.subspace.rows:
                        want = (self.coalgebra.counit_vec(row)
                                if comp.index == i else a.field.zero())
                        assert vec_dot(f, row) == want, \
                            "restriction property fails"
            self._idempotents = IdempotentFamily(self.coalgebra, funcs)
        return self._idempotents


def _split_commutative(alg: FiniteAlgebra) -> list[tuple]:
    """All primitive idempotents of a commutative semisimple algebra.

    Splits by base-field roots of minimal polynomials only; factors that
    are proper field extensions simply stay unsplit (their corners keep
    dimension > 1, which callers diagnose).
    """
    cands = [unit_vec(alg.field, alg.dim, i) for i in range(alg.dim)]
    cands.extend(vec_add(a, b) for a, b in itertools.combinations(list(cands), 2))
    base = [unit_vec(alg.field, alg.dim, i) for i in range(alg.dim)]
    cands.extend(alg.mult(a, b) for a, b in itertools.combinations(base, 2))
    rng = random.Random(0xC0A16)
    for _ in range(64):
        v = zero_vec(alg.field, alg.dim)
        for b in base:
            v = vec_add(v, vec_scale(alg.field.from_int(rng.randrange(-3, 4)), b))
        cands.append(v)
    pool = [alg.unit]
    changed = True
    while changed:
        changed = False
        for idx, e in enumerate(pool):
            for x in cands:
                xe = alg.mult(alg.mult(e, x), e)
                f = alg.split_idempotent(e, xe)
                if f is not None:
                    pool[idx:idx + 1] = [f, vec_sub(e, f)]
                    changed = True
                    break
            if changed:
                break
    return pool


# ---------------------------------------------------------------------------
# amalgamated direct sums
# ---------------------------------------------------------------------------

def coalgebra_amalgam(base: Coalgebra, extensions) -> Coalgebra:
    """Glue coalgebras sharing `base` as leading block over their sum.

    Each extension must reproduce base's structure constants on its
    first dim(base) basis vectors; the result is base plus the disjoint
    extra summands, with comultiplications unchanged.
    """
    db = base.dim
    for ext in extensions:
        if ext.field != base.field:
            raise IncompatibleBase("amalgam over different fields")
        if ext.dim < db:
            raise IncompatibleBase("extension smaller than the base")
        for i in range(db):
            if ext.comul[i] != base.comul[i] or ext.counit[i] != base.counit[i]:
                raise IncompatibleBase(
                    f"extension disagrees with the base on basis vector {i}")
    names = list(base.names)
    comul: dict = {}
    counit = list(base.counit)
    for i in range(db):
        for (j, k), c in base.comul[i].items():
            comul[(i, j, k)] = c
    offset = db
    taken = set(names)
    for t, ext in enumerate(extensions, start=1):
        extra = ext.dim - db

        def remap(idx: int) -> int:
            return idx if idx < db else offset + (idx - db)

        for m in range(db, ext.dim):
            nm = ext.names[m]
            if nm in taken:
                nm = f"{nm}.{t}"
            k2 = 2
            while nm in taken:
                nm = f"{ext.names[m]}.{t}.{k2}"
                k2 += 1
            taken.add(nm)
            names.append(nm)
            counit.append(ext.counit[m])
            for (j, k), c in ext.comul[m].items():
                comul[(remap(m), remap(j), remap(k))] = c
        offset += extra
    out = Coalgebra(base.field, names, comul, counit,
                    name=f"amalgam({base.name})")
    out.require_valid()
    return out
