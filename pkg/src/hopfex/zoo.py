"""Canonical Hopf algebra examples: group algebras, their duals, Taft
algebras, restricted polynomial algebras, and tensor products.

Builders return HopfAlgebra values by explicit structure constants.
Nothing here is validated eagerly; the test suite runs check_hopf on
every builder output, and for Taft comultiplications it cross-checks
the iterated-product construction used below against independently
computed Gaussian binomial coefficients.
"""

from __future__ import annotations

import itertools

from .errors import FieldMismatch, HopfError
from .hopf import HopfAlgebra
from .scalars import GF, QQ, FieldSpec, Scalar


# ---------------------------------------------------------------------------
# finite groups, concretely
# ---------------------------------------------------------------------------

class Group:
    """A finite group given by an element list and a multiplication map."""

    def __init__(self, elements: list, op, names: list[str], name: str):
        self.elements = list(elements)
        self.op = op
        self.names = list(names)
        self.name = name
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.identity = next(
            e for e in self.elements
            if all(op(e, x) == x for x in self.elements))

    def __len__(self):
        return len(self.elements)

    def mul_index(self, i: int, j: int) -> int:
        return self.index[self.op(self.elements[i], self.elements[j])]

    def inverse_index(self, i: int) -> int:
        g = self.elements[i]
        for j, h in enumerate(self.elements):
            if self.op(g, h) == self.identity:
                return j
        raise HopfError("group element without inverse")


def cyclic(n: int) -> Group:
    names = ["1"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
    return Group(list(range(n)), lambda a, b: (a + b) % n, names, f"Z{n}")


def symmetric(n: int) -> Group:
    elems = sorted(itertools.permutations(range(n)))
    names = []
    for p in elems:
        if p == tuple(range(n)):
            names.append("e")
        else:
            names.append("s" + "".join(str(i) for i in p))
    return Group(elems, lambda a, b: tuple(a[b[i]] for i in range(n)),
                 names, f"S{n}")


def group_algebra(g: Group, field: FieldSpec) -> HopfAlgebra:
    """kG: group-like basis, S(g) = g^(-1)."""
    n = len(g)
    comul = {(i, i, i): 1 for i in range(n)}
    counit = [1] * n
    mul = {(i, j, g.mul_index(i, j)): 1 for i in range(n) for j in range(n)}
    unit = [0] * n
    unit[g.index[g.identity]] = 1
    antipode = {(i, g.inverse_index(i)): 1 for i in range(n)}
    return HopfAlgebra(field, g.names, comul, counit, mul, unit, antipode,
                       name=f"k[{g.name}]")


def dual_group_algebra(g: Group, field: FieldSpec) -> HopfAlgebra:
    """k^G: pointwise products on delta functions, Delta from the group law."""
    n = len(g)
    names = [f"d{nm}" for nm in g.names]
    comul = {}
    for a in range(n):
        for b in range(n):
            comul[(g.mul_index(a, b), a, b)] = 1
    counit = [0] * n
    counit[g.index[g.identity]] = 1
    mul = {(i, i, i): 1 for i in range(n)}
    unit = [1] * n
    antipode = {(i, g.inverse_index(i)): 1 for i in range(n)}
    return HopfAlgebra(field, names, comul, counit, mul, unit, antipode,
                       name=f"k^{g.name}")


# ---------------------------------------------------------------------------
# Taft algebras
# ---------------------------------------------------------------------------

def taft(n: int, field: FieldSpec, q: Scalar | None = None) -> HopfAlgebra:
    """T_{n^2}(q): g^n = 1, x^n = 0, xg = q gx, Delta x = x(x)1 + g(x)x.

    Basis g^a x^b at index b*n + a.  The comultiplication of a general
    monomial is computed by multiplying Delta(g)^a Delta(x)^b inside
    H (x) H, using only the two generator rules.
    """
    if n < 2:
        raise HopfError("Taft algebras need n >= 2")
    if q is None:
        q = field.primitive_root_of_unity(n)
    one = field.one()

    def idx(a: int, b: int) -> int:
        return b * n + a

    def mul_basis(i: int, j: int):
        a, b = i % n, i // n
        c, d = j % n, j // n
        if b + d >= n:
            return None
        return idx((a + c) % n, b + d), q ** (b * c)

    def dict_mul(u: dict, v: dict) -> dict:
        out: dict = {}
        for i, ci in u.items():
            for j, cj in v.items():
                hit = mul_basis(i, j)
                if hit is None:
                    continue
                m, coeff = hit
                s = out.get(m, field.zero()) + ci * cj * coeff
                if s.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = s
        return out

    def t2_mul(u: dict, v: dict) -> dict:
        out: dict = {}
        for (j, k), c in u.items():
            for (j2, k2), c2 in v.items():
                lhit = mul_basis(j, j2)
                rhit = mul_basis(k, k2)
                if lhit is None or rhit is None:
                    continue
                (m, cl), (m2, cr) = lhit, rhit
                s = out.get((m, m2), field.zero()) + c * c2 * cl * cr
                if s.is_zero():
                    out.pop((m, m2), None)
                else:
                    out[(m, m2)] = s
        return out

    names = []
    for b in range(n):
        for a in range(n):
            if a == 0 and b == 0:
                names.append("1")
            else:
                ga = "" if a == 0 else ("g" if a == 1 else f"g^{a}")
                xb = "" if b == 0 else ("x" if b == 1 else f"x^{b}")
                names.append(ga + xb if not (ga and xb) else f"{ga}{xb}")
    dim = n * n
    dx = {(idx(0, 1), idx(0, 0)): one, (idx(1, 0), idx(0, 1)): one}
    comul = {}
    counit = [0] * dim
    for a in range(n):
        for b in range(n):
            d: dict = {(idx(a, 0), idx(a, 0)): one}
            for _ in range(b):
                d = t2_mul(d, dx)
            for (j, k), c in d.items():
                comul[(idx(a, b), j, k)] = c
            counit[idx(a, b)] = 1 if b == 0 else 0
    mul = {}
    for i in range(dim):
        for j in range(dim):
            hit = mul_basis(i, j)
            if hit is not None:
                mul[(i, j, hit[0])] = hit[1]
    unit = [0] * dim
    unit[0] = 1
    # S(g) = g^(n-1), S(x) = -g^(n-1) x, extended as an antialgebra map
    sg = {idx(n - 1, 0): one}
    sx = {idx(n - 1, 1): -one}
    antipode = {}
    for a in range(n):
        for b in range(n):
            img = {idx(0, 0): one}
            for _ in range(b):
                img = dict_mul(img, sx)
            for _ in range(a):
                img = dict_mul(img, sg)
            for m, c in img.items():
                antipode[(idx(a, b), m)] = c
    label = str(q)
    return HopfAlgebra(field, names, comul, counit, mul, unit, antipode,
                       name=f"T_{n * n}(q={label})")


def sweedler(field: FieldSpec) -> HopfAlgebra:
    """The 4-dimensional Taft algebra with q = -1."""
    h = taft(2, field, q=-field.one())
    h.name = "Sweedler H4"
    return h


def restricted_poly(p: int) -> HopfAlgebra:
    """k[x]/(x^p) over F_p with x primitive: Delta x = x(x)1 + 1(x)x."""
    field = GF(p)
    names = ["1"] + ["x" if m == 1 else f"x^{m}" for m in range(1, p)]
    binom = [[0] * (p + 1) for _ in range(p + 1)]
    for m in range(p + 1):
        binom[m][0] = 1
        for k in range(1, m + 1):
            binom[m][k] = binom[m - 1][k - 1] + (binom[m - 1][k] if k <= m - 1
                                                 else 0)
    comul = {}
    for m in range(p):
        for k in range(m + 1):
            c = binom[m][k] % p
            if c:
                comul[(m, k, m - k)] = c
    counit = [1] + [0] * (p - 1)
    mul = {}
    for a in range(p):
        for b in range(p):
            if a + b < p:
                mul[(a, b, a + b)] = 1
    unit = [1] + [0] * (p - 1)
    antipode = {(m, m): (-1) ** m for m in range(p)}
    return HopfAlgebra(field, names, comul, counit, mul, unit, antipode,
                       name=f"F{p}[x]/(x^{p})")


def tensor_product(a: HopfAlgebra, b: HopfAlgebra) -> HopfAlgebra:
    """A (x) B with componentwise product and tensor coalgebra structure."""
    if a.field != b.field:
        raise FieldMismatch("tensor factors over different fields")
    field = a.field
    names = [f"{na}|{nb}" for na in a.names for nb in b.names]

    def idx(i: int, j: int) -> int:
        return i * b.dim + j

    comul = {}
    for i in range(a.dim):
        for i2 in range(b.dim):
            for (j, k), c in a.comul[i].items():
                for (j2, k2), c2 in b.comul[i2].items():
                    comul[(idx(i, i2), idx(j, j2), idx(k, k2))] = c * c2
    counit = [a.counit[i] * b.counit[j]
              for i in range(a.dim) for j in range(b.dim)]
    mul = {}
    for i in range(a.dim):
        for j in range(a.dim):
            arow = a.mul_table[i][j]
            for i2 in range(b.dim):
                for j2 in range(b.dim):
                    brow = b.mul_table[i2][j2]
                    for m, cm in enumerate(arow):
                        if cm.is_zero():
                            continue
                        for m2, cm2 in enumerate(brow):
                            if not cm2.is_zero():
                                mul[(idx(i, i2), idx(j, j2),
                                     idx(m, m2))] = cm * cm2
    unit = [a.unit[i] * b.unit[j] for i in range(a.dim) for j in range(b.dim)]
    antipode = None
    if a.antipode_mat is not None and b.antipode_mat is not None:
        antipode = {}
        for i in range(a.dim):
            acol = a.antipode_mat.column(i)
            for i2 in range(b.dim):
                bcol = b.antipode_mat.column(i2)
                for m, cm in enumerate(acol):
                    if cm.is_zero():
                        continue
                    for m2, cm2 in enumerate(bcol):
                        if not cm2.is_zero():
                            antipode[(idx(i, i2), idx(m, m2))] = cm * cm2
    return HopfAlgebra(field, names, comul, counit, mul, unit, antipode,
                       name=f"{a.name} (x) {b.name}")


# ---------------------------------------------------------------------------
# named catalog for the command line
# ---------------------------------------------------------------------------

def build_named(name: str, field: FieldSpec | None = None) -> HopfAlgebra:
    """Construct a catalog example by name.

    Names: kZ<n>, kS3, dual-kZ<n>, dual-kS3, sweedler, taft<n>,
    restricted<p>.  When field is omitted each example picks its
    canonical one (rationals, smallest cyclotomic field containing the
    needed root of unity, or F_p).
    """
    if name.startswith("kZ"):
        n = int(name[2:])
        return group_algebra(cyclic(n), field or QQ)
    if name == "kS3":
        return group_algebra(symmetric(3), field or QQ)
    if name.startswith("dual-kZ"):
        n = int(name[7:])
        return dual_group_algebra(cyclic(n), field or QQ)
    if name == "dual-kS3":
        return dual_group_algebra(symmetric(3), field or QQ)
    if name == "sweedler":
        return sweedler(field or QQ)
    if name.startswith("taft"):
        n = int(name[4:])
        return taft(n, field or FieldSpec(0, cyclotomic_order=n))
    if name.startswith("restricted"):
        p = int(name[10:])
        if field is not None and field != GF(p):
            raise HopfError(f"restricted{p} is only defined over F_{p}")
        return restricted_poly(p)
    raise HopfError(f"unknown zoo example {name!r}")


ZOO_NAMES = ["kZ2", "kZ3", "kZ6", "kS3", "dual-kZ2", "dual-kZ3", "dual-kS3",
             "sweedler", "taft3", "taft4", "restricted3", "restricted5"]
