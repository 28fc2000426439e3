"""Extending a pointed coalgebra so an element becomes a matrix corner.

Every element z of a bicomponent ^gH_n^h of a pointed coalgebra H sits in
the top-right corner of a multiplicative upper-triangular matrix over a
finite extension of H.  This module builds such extensions exactly:

* ``graded_positive_part`` normalises z against the group-like direction
  and tests membership in the positive part of ^gH_n^h.
* ``delta_expansion`` writes the reduced comultiplication of z as a sum
  of positive tensors x (x) y, split by intermediate group-like and by
  filtration degree of the first leg, at minimal tensor rank per block.
* ``extend_coalgebra`` produces the extension together with the witness
  matrices: one glued witness per pair of recursive sub-witnesses, plus,
  when the glued corners do not reproduce the middle of z exactly, one
  closing witness that absorbs the defect.

The construction recurses on expansion terms, reusing the extension of a
repeated sub-element, and glues sub-witnesses along their shared
group-like.  Interior cells of a glued matrix are solved inside the
current coalgebra whenever possible; corner cells always adjoin a fresh
basis vector carrying the corner's two-cocycle, and the leftover
skew-primitive residue is folded into the first designated entry so the
designated corners sum back to z.
"""

from __future__ import annotations

from .errors import NoSolution, NotInComponent
from .linalg import (
    Mat,
    SubspaceBasis,
    rref_rows,
    solve,
    solve_columns,
    unit_vec,
    vec_add,
    vec_is_zero,
    vec_sub,
    zero_vec,
)
from .coalgebra import (
    Coalgebra,
    Element,
    coalgebra_amalgam,
    t2_add,
    t2_add_term,
    t2_flatten,
    t2_from_pair,
    t2_scale,
    t2_sub,
)
from .matforms import MatrixOverH, is_multiplicative


# ---------------------------------------------------------------------------
# membership and normalisation
# ---------------------------------------------------------------------------

def _grouplike_simple_index(coalg: Coalgebra, vec: tuple):
    """Index of the simple subcoalgebra spanned by vec, or None."""
    for s in coalg.analysis().simples():
        if s.is_grouplike and s.grouplike == vec:
            return s.index
    return None


def _pad(field, vec: tuple, dim: int) -> tuple:
    if len(vec) == dim:
        return vec
    return tuple(vec) + tuple(zero_vec(field, dim - len(vec)))


def graded_positive_part(z: Element, g: Element, h: Element, n: int):
    """Normalise z against its group-like direction and test membership.

    Returns (ok, w) where w = z - eps(z) g when g and h span the same
    simple and w = z otherwise, and ok records whether w lies in the
    positive part of ^gH_n^h, i.e. in the intersection of the degree-n
    filtration level with the (g, h) bicomponent and the counit kernel.
    Raises NotInComponent when g or h is not group-like in the parent
    of z, or when the three elements live in different coalgebras.
    """
    coalg = z.parent
    if g.parent is not coalg or h.parent is not coalg:
        raise NotInComponent("z, g, h must live in one coalgebra")
    gi = _grouplike_simple_index(coalg, g.vec)
    hi = _grouplike_simple_index(coalg, h.vec)
    if gi is None or hi is None:
        raise NotInComponent("flanking elements must be group-like")
    w = z - g * z.eps() if gi == hi else z
    if n < 0:
        return (w.is_zero(), w)
    ana = coalg.analysis()
    level = ana.filtration[min(n, ana.depth)]
    ok = level.contains_vector(w.vec)
    if ok:
        ok = coalg.component(w.vec, left=gi, right=hi) == w.vec
    if ok:
        assert coalg.counit_vec(w.vec).is_zero()
    return (ok, w)


# ---------------------------------------------------------------------------
# expansion of the reduced comultiplication
# ---------------------------------------------------------------------------

class DeltaExpansion:
    """The reduced comultiplication of z split by group-like and degree.

    terms is a tuple of (degree, serial, k, x, y) with k group-like,
    x in the positive part of ^gH_degree^k, y in the positive part of
    ^kH_{n-degree}^h, and

        delta(z) = g (x) z + sum over terms of x (x) y + z (x) h

    after normalising z to its positive part.  Each (degree, k) block is
    factored at minimal tensor rank; serial counts the factors inside
    one block starting from 1.
    """

    __slots__ = ("z", "g", "h", "n", "terms")

    def __init__(self, z: Element, g: Element, h: Element, n: int, terms):
        self.z = z
        self.g = g
        self.h = h
        self.n = n
        self.terms = tuple(terms)

    def middle(self) -> dict:
        """Sparse tensor equal to the sum of x (x) y over all terms."""
        out: dict = {}
        for _, _, _, x, y in self.terms:
            out = t2_add(out, t2_from_pair(x.vec, y.vec))
        return out

    def __repr__(self):
        return (f"<DeltaExpansion degree={self.n} "
                f"terms={len(self.terms)}>")


def _flag_basis(coalg: Coalgebra, left: int, right: int, maxdeg: int):
    """Degree-tagged basis of the positive part of a bicomponent.

    Returns a list of (vec, degree) whose prefix through degree d spans
    the positive part of ^gH_d^h; the tag is the first filtration level
    in which the vector appears.
    """
    ana = coalg.analysis()
    field = coalg.field
    eps_perp = SubspaceBasis(field, coalg.dim, [coalg.counit]).perp()
    out = []
    span = SubspaceBasis.zero(field, coalg.dim)
    for d in range(1, maxdeg + 1):
        level = ana.filtration[min(d, ana.depth)]
        comp = coalg.bicomponent_subspace(left, right, within=level)
        comp = comp.intersect(eps_perp)
        for row in comp.rows:
            if not span.contains_vector(row):
                out.append((row, d))
                span = span.sum(SubspaceBasis(field, coalg.dim, [row]))
        if d >= ana.depth:
            break
    return out


def _middle_block(coalg: Coalgebra, middle: dict, gi: int, ki: int, hi: int):
    """Project a middle tensor onto ^gH^k (x) ^kH^h, leg by leg."""
    field = coalg.field
    dim = coalg.dim
    lcache: dict = {}
    rcache: dict = {}
    out: dict = {}
    for (a, b), c in middle.items():
        if a not in lcache:
            lcache[a] = coalg.component(unit_vec(field, dim, a),
                                        left=gi, right=ki)
        if b not in rcache:
            rcache[b] = coalg.component(unit_vec(field, dim, b),
                                        left=ki, right=hi)
        pa, pb = lcache[a], rcache[b]
        if vec_is_zero(pa) or vec_is_zero(pb):
            continue
        for j, xj in enumerate(pa):
            if xj.is_zero():
                continue
            cj = c * xj
            for l, yl in enumerate(pb):
                if not yl.is_zero():
                    t2_add_term(out, (j, l), cj * yl)
    return out


def _columns_of_tensor(field, t2: dict, dim: int) -> Mat:
    cols = [list(zero_vec(field, dim)) for _ in range(dim)]
    for (a, b), c in t2.items():
        cols[b][a] = c
    return Mat.from_columns(field, [tuple(c) for c in cols], nrows=dim)


def _factor_middle(coalg: Coalgebra, middle: dict, gi: int, hi: int, n: int):
    """Factor a middle tensor through group-like channels at minimal rank.

    Returns a sorted list of (degree, serial, k, x, y) Elements with
    sum of x (x) y equal to middle, x of exact first-leg degree and y in
    the complementary filtration level.  Requires a pointed coalgebra.
    """
    if not middle:
        return []
    if not coalg.is_pointed():
        raise NotInComponent("expansion requires a pointed coalgebra")
    ana = coalg.analysis()
    field = coalg.field
    dim = coalg.dim
    entries = []
    recovered: dict = {}
    for s in ana.simples():
        ki = s.index
        block = _middle_block(coalg, middle, gi, ki, hi)
        if not block:
            continue
        lefts = _flag_basis(coalg, gi, ki, n - 1)
        rights = _flag_basis(coalg, ki, hi, n - 1)
        assert lefts and rights, "nonzero block over an empty bicomponent"
        lmat = Mat.from_columns(field, [v for v, _ in lefts], nrows=dim)
        rmat = Mat.from_columns(field, [v for v, _ in rights], nrows=dim)
        try:
            xmat = solve_columns(lmat, _columns_of_tensor(field, block, dim))
        except NoSolution:
            raise AssertionError("middle leaves the expected left component")
        try:
            lam = solve_columns(rmat, Mat.from_columns(
                field, [xmat.rows[a] for a in range(len(lefts))], nrows=dim))
        except NoSolution:
            raise AssertionError("middle leaves the expected right component")
        # staircase: no coefficient pairs a degree with more than n minus it
        for a, (_, da) in enumerate(lefts):
            for b, (_, db) in enumerate(rights):
                if da + db > n:
                    assert lam.rows[b][a].is_zero(), \
                        "expansion coefficient violates the degree bound"
        kel = Element(coalg, s.grouplike)
        for d in sorted({da for _, da in lefts}):
            sel = [a for a, (_, da) in enumerate(lefts) if da == d]
            lam_rows = [tuple(lam.rows[b][a] for b in range(len(rights)))
                        for a in sel]
            reduced, piv = rref_rows(field, lam_rows)
            for t, prow in enumerate(reduced):
                xv = zero_vec(field, dim)
                for pos, a in enumerate(sel):
                    c = lam_rows[pos][piv[t]]
                    if not c.is_zero():
                        xv = vec_add(xv, tuple(c * e for e in lefts[a][0]))
                yv = zero_vec(field, dim)
                for b, c in enumerate(prow):
                    if not c.is_zero():
                        yv = vec_add(yv, tuple(c * e for e in rights[b][0]))
                entries.append((d, ki, t + 1, kel,
                                Element(coalg, xv), Element(coalg, yv)))
                recovered = t2_add(recovered, t2_from_pair(xv, yv))
    entries.sort(key=lambda e: (e[0], e[1], e[2]))
    assert recovered == middle, "expansion does not reconstruct the middle"
    return [(d, serial, kel, x, y) for d, _, serial, kel, x, y in entries]


def delta_expansion(z: Element, g: Element, h: Element, n: int) -> DeltaExpansion:
    """Expand delta(z) - g (x) z - z (x) h through group-like channels.

    z must lie in ^gH_n^h up to its group-like direction and the parent
    must be pointed; raises NotInComponent otherwise.  Degree-one (and
    empty) middles give an expansion with no terms.
    """
    coalg = z.parent
    ok, w = graded_positive_part(z, g, h, n)
    if not ok:
        raise NotInComponent(
            f"element is not in the degree-{n} part of the bicomponent")
    middle = t2_sub(coalg.delta_vec(w.vec),
                    t2_add(t2_from_pair(g.vec, w.vec),
                           t2_from_pair(w.vec, h.vec)))
    if n <= 1 or w.is_zero():
        assert not middle, "low-degree element with a nonzero middle"
        return DeltaExpansion(w, g, h, n, ())
    gi = _grouplike_simple_index(coalg, g.vec)
    hi = _grouplike_simple_index(coalg, h.vec)
    terms = _factor_middle(coalg, middle, gi, hi, n)
    return DeltaExpansion(w, g, h, n, terms)


# ---------------------------------------------------------------------------
# growing a coalgebra one vector at a time
# ---------------------------------------------------------------------------

def _is_two_cocycle(coalg: Coalgebra, s: dict, sigma: tuple, tau: tuple) -> bool:
    """Whether (delta (x) id)s + s (x) tau equals sigma (x) s + (id (x) delta)s."""
    t3: dict = {}

    def bump(key, val):
        if key in t3:
            c = t3[key] + val
            if c.is_zero():
                del t3[key]
            else:
                t3[key] = c
        elif not val.is_zero():
            t3[key] = val

    for (a, b), c in s.items():
        for (p, q), v in coalg.comul[a].items():
            bump((p, q, b), c * v)
        for (p, q), v in coalg.comul[b].items():
            bump((a, p, q), -(c * v))
        for m, v in enumerate(tau):
            if not v.is_zero():
                bump((a, b, m), c * v)
        for m, v in enumerate(sigma):
            if not v.is_zero():
                bump((m, a, b), -(c * v))
    return not t3


class _Grower:
    """A coalgebra under construction, extended one basis vector at a time."""

    __slots__ = ("coalg", "_serial")

    def __init__(self, coalg: Coalgebra):
        self.coalg = coalg
        self._serial: dict = {}

    def fresh(self, prefix: str) -> str:
        k = self._serial.get(prefix, 0) + 1
        self._serial[prefix] = k
        return f"{prefix}{k}"

    def pad(self, vec: tuple) -> tuple:
        return _pad(self.coalg.field, vec, self.coalg.dim)

    def adjoin(self, label: str, sigma: tuple, middle: dict, tau: tuple) -> int:
        """Adjoin u with delta(u) = sigma (x) u + middle + u (x) tau.

        sigma, tau, middle live over the current coalgebra; middle must
        be a matched two-cocycle with counit-free legs, which makes the
        grown coalgebra coassociative and counital.  Returns the index
        of the new basis vector.
        """
        coalg = self.coalg
        field = coalg.field
        d = coalg.dim
        sigma = self.pad(sigma)
        tau = self.pad(tau)
        assert _is_two_cocycle(coalg, middle, sigma, tau), \
            "adjoined middle is not a two-cocycle"
        left_eps = zero_vec(field, d)
        right_eps = zero_vec(field, d)
        for (a, b), c in middle.items():
            ea, eb = coalg.counit[a], coalg.counit[b]
            if not ea.is_zero():
                left_eps = vec_add(left_eps, tuple(
                    (c * ea) if j == b else field.zero() for j in range(d)))
            if not eb.is_zero():
                right_eps = vec_add(right_eps, tuple(
                    (c * eb) if j == a else field.zero() for j in range(d)))
        assert vec_is_zero(left_eps) and vec_is_zero(right_eps), \
            "adjoined middle has counit-visible legs"
        comul = {}
        for i in range(d):
            for (j, k), c in coalg.comul[i].items():
                comul[(i, j, k)] = c
        for a, c in enumerate(sigma):
            if not c.is_zero():
                comul[(d, a, d)] = c
        for b, c in enumerate(tau):
            if not c.is_zero():
                comul[(d, d, b)] = c
        for (a, b), c in middle.items():
            comul[(d, a, b)] = c
        names = list(coalg.names)
        lab = label
        while lab in names:
            lab += "'"
        self.coalg = Coalgebra(field, names + [lab], comul,
                               list(coalg.counit) + [0], name=coalg.name)
        return d


def _solve_skew(coalg: Coalgebra, sigma: tuple, tau: tuple, mid: dict):
    """Solve delta(r) = sigma (x) r + mid + r (x) tau inside coalg, or None."""
    field = coalg.field
    dim = coalg.dim
    cols = []
    for e in range(dim):
        col = dict(coalg.comul[e])
        for a, c in enumerate(sigma):
            if not c.is_zero():
                t2_add_term(col, (a, e), -c)
        for b, c in enumerate(tau):
            if not c.is_zero():
                t2_add_term(col, (e, b), -c)
        cols.append(t2_flatten(field, col, dim))
    mat = Mat.from_columns(field, cols, nrows=dim * dim)
    try:
        r = solve(mat, t2_flatten(field, mid, dim))
    except NoSolution:
        return None
    assert coalg.counit_vec(r).is_zero()
    return r


# ---------------------------------------------------------------------------
# gluing witnesses along a shared group-like
# ---------------------------------------------------------------------------

def _ladder_middle(gr: _Grower, grid, u: int, v: int) -> dict:
    out: dict = {}
    for w in range(u + 1, v):
        out = t2_add(out, t2_from_pair(gr.pad(grid[u][w]), gr.pad(grid[w][v])))
    return out


def _glue(gr: _Grower, agrid, bgrid, gvec: tuple, hvec: tuple):
    """Glue two witness grids at their shared group-like corner.

    agrid ends where bgrid begins: the bottom-right entry of agrid
    equals the top-left entry of bgrid.  The glued grid keeps agrid in
    the top-left and bgrid in the bottom-right; rectangle cells in
    between are filled in ascending anti-diagonal order, each either
    solved inside the current coalgebra or adjoined as a fresh vector
    carrying the cell's two-cocycle.  The top-right corner always
    adjoins.  Returns (grid, corner index, corner middle).
    """
    field = gr.coalg.field
    p, q = len(agrid), len(bgrid)
    m = p + q - 1
    assert gr.pad(agrid[p - 1][p - 1]) == gr.pad(bgrid[0][0]), \
        "glued grids disagree on the shared group-like"
    grid = [[None] * m for _ in range(m)]
    for u in range(p):
        for v in range(p):
            grid[u][v] = agrid[u][v]
    for u in range(q):
        for v in range(q):
            grid[p - 1 + u][p - 1 + v] = bgrid[u][v]
    zero = zero_vec(field, gr.coalg.dim)
    for u in range(m):
        for v in range(m):
            if grid[u][v] is None:
                grid[u][v] = zero
    cells = [(u, v) for u in range(p - 1) for v in range(p, m)]
    cells.sort(key=lambda uv: (uv[1] - uv[0], uv[0]))
    for u, v in cells:
        if u == 0 and v == m - 1:
            continue
        mid = _ladder_middle(gr, grid, u, v)
        sigma = gr.pad(grid[u][u])
        tau = gr.pad(grid[v][v])
        cell = _solve_skew(gr.coalg, sigma, tau, mid)
        if cell is None:
            idx = gr.adjoin(gr.fresh("u"), sigma, mid, tau)
            cell = unit_vec(field, gr.coalg.dim, idx)
        grid[u][v] = cell
    mid = _ladder_middle(gr, grid, 0, m - 1)
    idx = gr.adjoin(gr.fresh("z"), gr.pad(gvec), mid, gr.pad(hvec))
    grid[0][m - 1] = unit_vec(field, gr.coalg.dim, idx)
    return grid, idx, mid


# ---------------------------------------------------------------------------
# the closing witness: coefficient matrix of a left coideal
# ---------------------------------------------------------------------------

def _coideal_witness(gr: _Grower, corner_idx: int, gvec: tuple, hvec: tuple,
                     n: int):
    """Witness matrix for an adjoined corner, from its left coideal.

    The span of g, the corner, and every first tensor leg reachable from
    the corner by repeated expansion is a left coideal V with
    delta(V) inside V (x) K; the coefficient matrix of delta on a
    degree-ordered basis of V is multiplicative, upper-triangular, has
    group-likes on the diagonal, and carries the corner in its top-right
    entry.
    """
    coalg = gr.coalg
    field = coalg.field
    dim = coalg.dim
    gpad = _pad(field, gvec, dim)
    hpad = _pad(field, hvec, dim)
    gi = _grouplike_simple_index(coalg, gpad)
    assert gi is not None
    corner = unit_vec(field, dim, corner_idx)
    members = []
    span = SubspaceBasis(field, dim, [gpad, corner])
    queue = [(corner, hpad, n)]
    serial = 0
    while queue:
        vec, rvec, deg = queue.pop(0)
        mid = t2_sub(coalg.delta_vec(vec),
                     t2_add(t2_from_pair(gpad, vec), t2_from_pair(vec, rvec)))
        if not mid:
            continue
        ri = _grouplike_simple_index(coalg, rvec)
        assert ri is not None
        for d, _, kel, x, _y in _factor_middle(coalg, mid, gi, ri, deg):
            if span.contains_vector(x.vec):
                continue
            members.append((x.vec, d, serial))
            serial += 1
            span = span.sum(SubspaceBasis(field, dim, [x.vec]))
            queue.append((x.vec, kel.vec, d))
    members.sort(key=lambda t: (t[1], t[2]))
    fam = [gpad] + [v for v, _, _ in members] + [corner]
    size = len(fam)
    fmat = Mat.from_columns(field, fam, nrows=dim)
    grid = [[None] * size for _ in range(size)]
    for u, fu in enumerate(fam):
        try:
            coeffs = solve_columns(
                fmat, _columns_of_tensor(field, coalg.delta_vec(fu), dim))
        except NoSolution:
            raise AssertionError("closure family is not a left coideal")
        for w in range(size):
            grid[w][u] = tuple(coeffs.rows[w])
    for u in range(size):
        for w in range(u + 1, size):
            assert vec_is_zero(grid[w][u]), "coideal matrix not triangular"
        assert _grouplike_simple_index(coalg, grid[u][u]) is not None, \
            "coideal diagonal entry is not group-like"
    assert grid[0][size - 1] == corner
    assert grid[0][0] == gpad and grid[size - 1][size - 1] == hpad
    return grid


# ---------------------------------------------------------------------------
# the recursive construction
# ---------------------------------------------------------------------------

class _Ext:
    """One level of the recursion: a result coalgebra and witness grids."""

    __slots__ = ("result", "grids")

    def __init__(self, result: Coalgebra, grids):
        self.result = result
        self.grids = grids


def _remap_vec(field, vec: tuple, base_dim: int, offset: int,
               new_dim: int) -> tuple:
    out = list(zero_vec(field, new_dim))
    for i, c in enumerate(vec):
        if not c.is_zero():
            out[i if i < base_dim else offset + (i - base_dim)] = c
    return tuple(out)


def _extend(base: Coalgebra, gvec: tuple, hvec: tuple, wvec: tuple, n: int,
            memo: dict) -> _Ext:
    """Build witnesses for wvec over extensions of the fixed base.

    Every recursion level works over the original base: sub-extensions
    of the expansion legs are built first, amalgamated along the base,
    and then one glued witness is produced per pair of sub-witnesses.
    The skew-primitive residue of wvec against the adjoined corners is
    folded into the first designated entry, so the top-right entries of
    the returned grids sum to wvec.
    """
    key = (gvec, hvec, wvec, n)
    if key in memo:
        return memo[key]
    field = base.field
    g_el = Element(base, gvec)
    h_el = Element(base, hvec)
    exp = delta_expansion(Element(base, wvec), g_el, h_el, n)
    if not exp.terms:
        # skew-primitive: a single witness with the element in the corner
        order = n + 1
        zero = zero_vec(field, base.dim)
        grid = [[zero] * order for _ in range(order)]
        for u in range(order - 1):
            grid[u][u] = gvec
        grid[order - 1][order - 1] = hvec
        grid[0][order - 1] = wvec
        ext = _Ext(base, [grid])
        memo[key] = ext
        return ext

    subpairs = []
    for deg, _serial, kel, x, y in exp.terms:
        ex = _extend(base, gvec, kel.vec, x.vec, deg, memo)
        ey = _extend(base, kel.vec, hvec, y.vec, n - deg, memo)
        subpairs.append((ex, ey))
    distinct = []
    for ex, ey in subpairs:
        for e in (ex, ey):
            if e.result is not base and all(e is not d for d in distinct):
                distinct.append(e)
    if distinct:
        amal = coalgebra_amalgam(base, [e.result for e in distinct])
        offsets = {}
        off = base.dim
        for e in distinct:
            offsets[id(e)] = off
            off += e.result.dim - base.dim
        assert off == amal.dim
    else:
        amal = base
        offsets = {}

    def embed(e: _Ext, grid):
        off = offsets.get(id(e), base.dim)
        return [[_remap_vec(field, c, base.dim, off, amal.dim) for c in row]
                for row in grid]

    gr = _Grower(amal)
    total_mid: dict = {}
    grids = []
    corner_idxs = []
    for ex, ey in subpairs:
        for agrid in ex.grids:
            ea = embed(ex, agrid)
            for bgrid in ey.grids:
                eb = embed(ey, bgrid)
                grid, idx, mid = _glue(gr, ea, eb, gvec, hvec)
                grids.append(grid)
                corner_idxs.append(idx)
                total_mid = t2_add(total_mid, mid)
    gamma = t2_sub(total_mid, exp.middle())
    if gamma:
        # the glued corners overshoot the middle of wvec; adjoin one
        # closing vector whose middle cancels the defect exactly
        neg = t2_scale(field.from_int(-1), gamma)
        zc_idx = gr.adjoin(gr.fresh("zc"), gr.pad(gvec), neg, gr.pad(hvec))
        grids.append(_coideal_witness(gr, zc_idx, gvec, hvec, n))
        corner_idxs.append(zc_idx)
    result = gr.coalg
    rho = _pad(field, wvec, result.dim)
    for idx in corner_idxs:
        rho = vec_sub(rho, unit_vec(field, result.dim, idx))
    gpad = _pad(field, gvec, result.dim)
    hpad = _pad(field, hvec, result.dim)
    leftover = t2_sub(result.delta_vec(rho),
                      t2_add(t2_from_pair(gpad, rho), t2_from_pair(rho, hpad)))
    assert not leftover, "residue is not skew-primitive"
    first = grids[0]
    first[0][len(first) - 1] = vec_add(gr.pad(first[0][len(first) - 1]), rho)
    total = zero_vec(field, result.dim)
    for grid in grids:
        total = vec_add(total, gr.pad(grid[0][len(grid) - 1]))
    assert total == _pad(field, wvec, result.dim), \
        "designated entries do not sum to the element"
    grids = [[[gr.pad(c) for c in row] for row in grid] for grid in grids]
    ext = _Ext(result, grids)
    memo[key] = ext
    return ext


# ---------------------------------------------------------------------------
# public entry point
# ---------------------------------------------------------------------------

class ExtendedCoalgebra:
    """A coalgebra extension exhibiting an element as matrix corners.

    Attributes:
        base: the starting coalgebra, the leading block of result.
        result: the extension; it passes check() and has the same
            coradical as base.
        new_basis: names of the adjoined basis vectors, in order.
        witnesses: multiplicative upper-triangular matrices over result
            with g top-left and h bottom-right; their top-right entries
            are the designated entries.
        z, g, h: the input data transported into result; z is the
            positive part of the original element.
        n: the filtration degree.

    The designated entries sum to z inside result.
    """

    __slots__ = ("base", "result", "new_basis", "witnesses", "z", "g", "h",
                 "n")

    def __init__(self, base, result, new_basis, witnesses, z, g, h, n):
        self.base = base
        self.result = result
        self.new_basis = tuple(new_basis)
        self.witnesses = tuple(witnesses)
        self.z = z
        self.g = g
        self.h = h
        self.n = n

    def designated_entries(self) -> list:
        """The top-right entry of each witness, as elements of result."""
        return [w.element(0, w.ncols - 1) for w in self.witnesses]

    def designated_sum(self) -> Element:
        total = self.result.zero()
        for e in self.designated_entries():
            total = total + e
        return total

    def __repr__(self):
        return (f"<ExtendedCoalgebra {self.base.dim}->{self.result.dim} "
                f"witnesses={len(self.witnesses)}>")


def extend_coalgebra(coalg: Coalgebra, g: Element, h: Element, z: Element,
                     n: int) -> ExtendedCoalgebra:
    """Extend coalg so z appears as the designated corners of witnesses.

    z must lie in ^gH_n^h up to its group-like direction, with g, h
    group-like and n at least 1.  The result contains coalg as its
    leading block, is a valid coalgebra with the same coradical, and
    carries one multiplicative upper-triangular witness per expansion
    path (plus at most one closing witness); the witnesses have g in the
    top-left, h in the bottom-right, group-likes on the diagonal, and
    top-right entries summing to the positive part of z.

    Raises NotInComponent when the membership test fails.
    """
    if n < 1:
        raise NotInComponent("degree must be at least 1")
    ok, w = graded_positive_part(z, g, h, n)
    if not ok:
        raise NotInComponent(
            f"element is not in the degree-{n} part of the bicomponent")
    memo: dict = {}
    ext = _extend(coalg, g.vec, h.vec, w.vec, n, memo)
    result = ext.result
    result.require_valid()
    field = result.field
    old = coalg.coradical()
    new = result.coradical()
    assert new.dim == old.dim, "extension changed the coradical"
    for row in old.rows:
        assert new.contains_vector(_pad(field, row, result.dim))
    # the base must sit inside the result unchanged
    assert result.names[:coalg.dim] == coalg.names
    for i in range(coalg.dim):
        assert result.comul[i] == coalg.comul[i]
        assert result.counit[i] == coalg.counit[i]
    gpad = _pad(field, g.vec, result.dim)
    hpad = _pad(field, h.vec, result.dim)
    witnesses = []
    for grid in ext.grids:
        mat = MatrixOverH(result, grid)
        assert is_multiplicative(mat), "witness is not multiplicative"
        size = mat.nrows
        for u in range(size):
            for v in range(u):
                assert vec_is_zero(mat.entry(u, v)), \
                    "witness is not upper-triangular"
            assert _grouplike_simple_index(result, mat.entry(u, u)) \
                is not None, "witness diagonal is not group-like"
        assert mat.entry(0, 0) == gpad
        assert mat.entry(size - 1, size - 1) == hpad
        witnesses.append(mat)
    out = ExtendedCoalgebra(
        base=coalg,
        result=result,
        new_basis=result.names[coalg.dim:],
        witnesses=witnesses,
        z=Element(result, _pad(field, w.vec, result.dim)),
        g=Element(result, gpad),
        h=Element(result, hpad),
        n=n,
    )
    assert out.designated_sum() == out.z
    return out
