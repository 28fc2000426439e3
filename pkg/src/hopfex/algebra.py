"""Finite-dimensional associative algebras by structure constants.

This is the workhorse behind coradical analysis: the dual of a
coalgebra is such an algebra, and everything downstream (radical,
semisimple quotient, central idempotents, matrix units of simple
blocks) happens here.

The Jacobson radical is computed exactly, split by characteristic:

  * char 0: Dickson's criterion, the kernel of the trace form
    (x, y) -> Tr(L_x L_y) of the left regular representation;
  * char p: the chain of Cohen/Ivanyos/Wales, replacing the trace by
    characteristic-polynomial coefficients c_{p^i} of the regular
    representation.  Each step is a p^i-semilinear condition; it is
    solved as a linear system in the Frobenius-twisted coordinates and
    pulled back through the inverse Frobenius (our char-p fields are
    finite, hence perfect).

Characteristic polynomials use the Berkowitz algorithm: division-free,
valid over every field, O(n^4) but n here is the algebra dimension,
a few dozen at most.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .errors import (
    LinAlgError,
    NonSplitField,
    NoSolution,
    ShapeMismatch,
)
from .linalg import (
    Mat,
    SubspaceBasis,
    kernel,
    rref_rows,
    solve,
    unit_vec,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
    zero_vec,
)
from .scalars import FieldSpec, Scalar


# ---------------------------------------------------------------------------
# characteristic polynomial (Berkowitz, division-free)
# ---------------------------------------------------------------------------

def char_poly(m: Mat) -> list[Scalar]:
    """Coefficients [1, c_1, ..., c_n] of det(tI - m) = sum c_k t^(n-k)."""
    if m.nrows != m.ncols:
        raise ShapeMismatch("characteristic polynomial of a non-square matrix")
    field = m.field
    one, zero = field.one(), field.zero()
    n = m.nrows
    if n == 0:
        return [one]
    poly = [one, -m[0, 0]]
    for r in range(1, n):
        row = m.rows[r][:r]
        col = tuple(m.rows[i][r] for i in range(r))
        corner = m[r, r]
        # q_k = row . (leading block)^(k-1) . col
        qs = [corner]
        vec = col
        for _ in range(r):
            acc = zero
            for a, b in zip(row, vec):
                acc = acc + a * b
            qs.append(acc)
            vec = tuple(
                sum((m.rows[i][j] * vec[j] for j in range(r)), zero) for i in range(r))
        toep = [one] + [-q for q in qs]
        new = [zero] * (r + 2)
        for i in range(r + 2):
            acc = zero
            for j in range(max(0, i - len(toep) + 1), min(i, r) + 1):
                acc = acc + toep[i - j] * poly[j]
            new[i] = acc
        poly = new
    return poly


def min_poly_of_powers(field: FieldSpec, powers: list[tuple]) -> list[Scalar]:
    """Monic minimal polynomial given the power sequence [x^0, x^1, ...].

    powers must be long enough for a dependency to appear (length
    ambient dim + 1 always suffices).  Returns coefficients constant
    term first, monic.
    """
    for k in range(1, len(powers)):
        m = Mat.from_columns(field, powers[:k], len(powers[0]))
        try:
            coeffs = solve(m, powers[k])
        except NoSolution:
            continue
        return [-c for c in coeffs] + [field.one()]
    raise LinAlgError("power sequence too short for a minimal polynomial")


# ---------------------------------------------------------------------------
# root hunting in the base field
# ---------------------------------------------------------------------------

def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def field_roots(field: FieldSpec, coeffs: list[Scalar]) -> list[Scalar]:
    """All roots in the base field of a nonzero polynomial, exactly.

    Finite fields are searched exhaustively.  Over the rationals the
    rational root theorem is used.  Over a char-0 extension the
    candidates are the rational-root candidates together with +-(powers
    of the extension generator), which covers the root-of-unity spectra
    that arise from group-like actions; other irrational roots are out
    of scope and simply not reported.
    """
    zero = field.zero()
    while coeffs and coeffs[-1].is_zero():
        coeffs = coeffs[:-1]
    if not coeffs:
        raise LinAlgError("root search on the zero polynomial")

    def value(x: Scalar) -> Scalar:
        acc = zero
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    roots = []
    if field.char:
        for x in itertools.chain([zero], field._nonzero_elements()):
            if value(x).is_zero():
                roots.append(x)
        return roots

    candidates: list[Scalar] = [zero]
    rational_parts: list[Fraction] = []
    ok_rational = True
    for c in coeffs:
        if field.modulus:
            tup = c.val
            if any(tup[1:]):
                ok_rational = False
                break
            rational_parts.append(tup[0])
        else:
            rational_parts.append(c.val)
    if ok_rational and rational_parts and rational_parts[-1]:
        den = 1
        for fr in rational_parts:
            den = den * fr.denominator // _gcd(den, fr.denominator)
        ints = [int(fr * den) for fr in rational_parts]
        lead, const = ints[-1], ints[0]
        if const == 0:
            candidates.append(zero)
        else:
            for p_ in _divisors(const):
                for q_ in _divisors(lead):
                    for s in (1, -1):
                        candidates.append(field.from_fraction(Fraction(s * p_, q_)))
    if field.modulus:
        t = field.gen()
        acc = field.one()
        for _ in range(2 * field.degree + 2):
            acc = acc * t
            candidates.append(acc)
            candidates.append(-acc)
        candidates.append(field.one())
        candidates.append(-field.one())
    else:
        candidates.extend([field.one(), -field.one()])

    seen = set()
    for x in candidates:
        if x in seen:
            continue
        seen.add(x)
        if value(x).is_zero():
            roots.append(x)
    return roots


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# polynomial helpers over Scalar coefficient lists (constant first, trimmed)

def poly_trim(p: list[Scalar]) -> list[Scalar]:
    while p and p[-1].is_zero():
        p.pop()
    return p


def poly_mul(field: FieldSpec, a: list[Scalar], b: list[Scalar]) -> list[Scalar]:
    if not a or not b:
        return []
    out = [field.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return poly_trim(out)


def poly_divmod(field: FieldSpec, a: list[Scalar], b: list[Scalar]):
    a = list(a)
    q = [field.zero()] * max(0, len(a) - len(b) + 1)
    inv = b[-1].inverse()
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        c = a[-1] * inv
        q[k] = c
        for i, y in enumerate(b):
            a[k + i] = a[k + i] - c * y
        poly_trim(a)
    return q, a


def poly_gcdext(field: FieldSpec, a: list[Scalar], b: list[Scalar]):
    r0, r1 = list(a), list(b)
    u0, u1 = [field.one()], []
    v0, v1 = [], [field.one()]
    while r1:
        q, r = poly_divmod(field, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, poly_trim([x - y for x, y in
                                itertools.zip_longest(u0, poly_mul(field, q, u1),
                                                      fillvalue=field.zero())])
        v0, v1 = v1, poly_trim([x - y for x, y in
                                itertools.zip_longest(v0, poly_mul(field, q, v1),
                                                      fillvalue=field.zero())])
    return r0, u0, v0


# ---------------------------------------------------------------------------
# the algebra class
# ---------------------------------------------------------------------------

class FiniteAlgebra:
    """Unital associative algebra with a dense structure-constant table.

    table[i][j] is the coefficient vector of e_i * e_j; unit is the
    coefficient vector of 1.
    """

    def __init__(self, field: FieldSpec, table: list[list[tuple]], unit: tuple,
                 check: bool = False):
        self.field = field
        self.table = table
        self.dim = len(table)
        self.unit = tuple(unit)
        if check:
            self._check_axioms()

    def _check_axioms(self):
        for i in range(self.dim):
            ei = unit_vec(self.field, self.dim, i)
            if self.mult(self.unit, ei) != ei or self.mult(ei, self.unit) != ei:
                raise LinAlgError(f"unit fails on basis element {i}")
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    lhs = self.mult(self.table[i][j],
                                    unit_vec(self.field, self.dim, k))
                    rhs = self.mult(unit_vec(self.field, self.dim, i),
                                    self.table[j][k])
                    if lhs != rhs:
                        raise LinAlgError(f"associativity fails at ({i},{j},{k})")

    # -- products ----------------------------------------------------------

    def mult(self, u: tuple, v: tuple) -> tuple:
        out = list(zero_vec(self.field, self.dim))
        for i, ui in enumerate(u):
            if ui.is_zero():
                continue
            for j, vj in enumerate(v):
                if vj.is_zero():
                    continue
                c = ui * vj
                for m, t in enumerate(self.table[i][j]):
                    if not t.is_zero():
                        out[m] = out[m] + c * t
        return tuple(out)

    def left_mult_mat(self, u: tuple) -> Mat:
        cols = [self.mult(u, unit_vec(self.field, self.dim, j))
                for j in range(self.dim)]
        return Mat.from_columns(self.field, cols, self.dim)

    def right_mult_mat(self, u: tuple) -> Mat:
        cols = [self.mult(unit_vec(self.field, self.dim, j), u)
                for j in range(self.dim)]
        return Mat.from_columns(self.field, cols, self.dim)

    def power(self, u: tuple, n: int) -> tuple:
        acc = self.unit
        base = u
        while n:
            if n & 1:
                acc = self.mult(acc, base)
            base = self.mult(base, base)
            n >>= 1
        return acc

    def evaluate_poly(self, coeffs: list[Scalar], u: tuple) -> tuple:
        out = zero_vec(self.field, self.dim)
        for c in reversed(coeffs):
            out = vec_add(self.mult(out, u), vec_scale(c, self.unit))
        return out

    def min_poly(self, u: tuple) -> list[Scalar]:
        powers = [self.unit]
        for _ in range(self.dim + 1):
            powers.append(self.mult(powers[-1], u))
        return min_poly_of_powers(self.field, powers)

    # -- radical ---------------------------------------------------------------

    def radical(self) -> SubspaceBasis:
        if self.field.char == 0:
            gram = Mat(self.field, [
                tuple(self.left_mult_mat(self.table[i][j]).trace()
                      for j in range(self.dim))
                for i in range(self.dim)])
            rad = kernel(gram)
        else:
            rad = self._radical_char_p()
        self._assert_nilpotent(rad)
        return rad

    def _radical_char_p(self) -> SubspaceBasis:
        p = self.field.char
        n = self.dim
        current = [unit_vec(self.field, n, i) for i in range(n)]
        q = 1
        while q <= n and current:
            # condition: c_q((x y)-regular matrix) = 0 for all y in the span,
            # q-semilinear in x, linear after the Frobenius twist.
            rows = []
            for y in current:
                row = []
                for a in current:
                    cp = char_poly(self.left_mult_mat(self.mult(a, y)))
                    row.append(cp[q])
                rows.append(tuple(row))
            ker = kernel(Mat(self.field, rows, len(current)))
            # pull the twisted coordinates back through the inverse Frobenius
            twisted = [tuple(_frobenius_root(c, q) for c in v) for v in ker.rows]
            new = []
            for coeffs in twisted:
                v = zero_vec(self.field, n)
                for c, b in zip(coeffs, current):
                    v = vec_add(v, vec_scale(c, b))
                new.append(v)
            current, _ = rref_rows(self.field, new)
            current = list(current)
            q *= p
        return SubspaceBasis(self.field, n, current)

    def _assert_nilpotent(self, rad: SubspaceBasis):
        layer = list(rad.rows)
        for _ in range(self.dim + 1):
            if not layer:
                return
            nxt = []
            for u in layer:
                for v in rad.rows:
                    nxt.append(self.mult(u, v))
            layer, _ = rref_rows(self.field, nxt)
            layer = list(layer)
        raise LinAlgError("computed radical is not nilpotent; algebra data corrupt")

    def ideal_powers(self, ideal: SubspaceBasis) -> list[SubspaceBasis]:
        """[I, I^2, ...] until the zero ideal (which is included)."""
        out = [ideal]
        while out[-1].dim:
            nxt = []
            for u in out[-1].rows:
                for v in ideal.rows:
                    nxt.append(self.mult(u, v))
            out.append(SubspaceBasis(self.field, self.dim, nxt))
        return out

    # -- quotients and subalgebras ----------------------------------------------

    def quotient(self, ideal: SubspaceBasis) -> "QuotientMap":
        return QuotientMap(self, ideal)

    def subalgebra_on(self, rows: list[tuple], identity: tuple) -> "SubalgebraMap":
        return SubalgebraMap(self, rows, identity)

    def center(self) -> SubspaceBasis:
        rows = []
        for j in range(self.dim):
            ej = unit_vec(self.field, self.dim, j)
            diff = self.left_mult_mat(ej) - self.right_mult_mat(ej)
            rows.extend(diff.rows)
        return kernel(Mat(self.field, rows, self.dim))

    def is_commutative(self) -> bool:
        for i in range(self.dim):
            for j in range(i):
                if self.table[i][j] != self.table[j][i]:
                    return False
        return True

    # -- idempotents ------------------------------------------------------------

    def lift_idempotent(self, v: tuple, max_iter: int = 64) -> tuple:
        """Newton lift e <- 3e^2 - 2e^3 until exactly idempotent.

        Converges when v is idempotent modulo a nil ideal; quadratic, so
        the iteration count is logarithmic in the nilpotency index.
        """
        e = v
        for _ in range(max_iter):
            e2 = self.mult(e, e)
            if e2 == e:
                return e
            e3 = self.mult(e2, e)
            e = vec_sub(vec_scale(self.field.from_int(3), e2),
                        vec_scale(self.field.from_int(2), e3))
        raise LinAlgError("idempotent lifting did not converge; input not "
                          "idempotent modulo a nil ideal")

    def split_idempotent(self, e: tuple, x: tuple) -> tuple | None:
        """Try to split idempotent e using the element x = e x e.

        Returns a proper subidempotent 0 != f < e, or None.  Two routes:
        a base-field root lam of the minimal polynomial of x in the
        corner gives either a CRT projection onto the generalized
        lam-eigencomponent, or (when x - lam*e is nilpotent) a proper
        left ideal whose right identity is the wanted idempotent.
        """
        powers = [e]
        for _ in range(self.dim + 1):
            powers.append(self.mult(powers[-1], x))
        mu = min_poly_of_powers(self.field, powers)
        if len(mu) <= 2:
            return None
        for lam in field_roots(self.field, mu):
            lin = [-lam, self.field.one()]
            rest, mult_ = list(mu), 0
            while True:
                qq, rr = poly_divmod(self.field, rest, lin)
                if rr:
                    break
                rest, mult_ = qq, mult_ + 1
            if not rest or len(rest) == 1:
                # x - lam*e is nilpotent in the corner; its last nonzero
                # power spans a proper left ideal of the corner.
                nilp = vec_sub(x, vec_scale(lam, e))
                n = nilp
                for _ in range(mult_ - 2):
                    n = self.mult(n, nilp)
                if vec_is_zero(n):
                    continue
                f = self._left_ideal_idempotent(e, n)
                if f is not None and not vec_is_zero(f) and f != e:
                    return f
                continue
            primary = [self.field.one()]
            for _ in range(mult_):
                primary = poly_mul(self.field, primary, lin)
            g, u, _v = poly_gcdext(self.field, primary, rest)
            assert len(g) == 1, "primary parts are coprime"
            ginv = g[0].inverse()
            # h = u*primary/g is 0 mod primary, 1 mod rest: projection away
            # from the lam eigencomponent; 1-h projects onto it.
            h = poly_mul(self.field, [c * ginv for c in u], primary)
            _, h = poly_divmod(self.field, h, mu)
            f = self.evaluate_poly(h, x)
            # force into the corner (h has a constant term times the algebra
            # unit; replace the unit contribution by e)
            f = self.mult(self.mult(e, f), e)
            if vec_is_zero(f) or f == e:
                continue
            if self.mult(f, f) == f:
                return f
        return None

    def _left_ideal_idempotent(self, e: tuple, n: tuple) -> tuple | None:
        """Right identity of the left ideal (eAe)n, if one exists.

        In a semisimple corner every left ideal is generated by an
        idempotent, which is precisely a right identity of the ideal;
        finding it is a linear solve.
        """
        rows = []
        for b in self.corner_basis(e):
            rows.append(self.mult(b, n))
        rows, _ = rref_rows(self.field, rows)
        if not rows:
            return None
        stacked = []
        rhs = []
        for v in rows:
            lm = self.left_mult_mat(v)
            # restrict the unknown u to coordinates in the ideal basis
            cols = [lm.apply(b) for b in rows]
            stacked.extend(Mat.from_columns(self.field, cols, self.dim).rows)
            rhs.extend(v)
        try:
            coords = solve(Mat(self.field, stacked, len(rows)), tuple(rhs))
        except NoSolution:
            return None
        u = zero_vec(self.field, self.dim)
        for c, b in zip(coords, rows):
            u = vec_add(u, vec_scale(c, b))
        if vec_is_zero(u) or self.mult(u, u) != u:
            return None
        return u

    def primitive_idempotent_in(self, e: tuple, seed: int = 0) -> tuple:
        """A primitive idempotent below e, by deterministic splitting search.

        Candidates: corner basis elements, their pairwise sums, then
        seeded pseudo-random small combinations.  Raises NonSplitField
        when the search exhausts its budget, which is the desk-scale
        signal that the corner is a division algebra over the base
        field (or needs a bigger field).
        """
        corner = self.corner_basis(e)
        if len(corner) == 1:
            return e
        cands = list(corner)
        cands.extend(vec_add(a, b) for a, b in itertools.combinations(corner, 2))
        cands.extend(vec_sub(a, b) for a, b in itertools.combinations(corner, 2))
        cands.extend(self.mult(a, b) for a, b in
                     itertools.permutations(corner, 2))
        rng = random.Random(seed ^ 0x5EED)
        span = corner
        for _ in range(200):
            coeffs = [self.field.from_int(rng.randrange(-3, 4)) for _ in span]
            v = zero_vec(self.field, self.dim)
            for c, b in zip(coeffs, span):
                v = vec_add(v, vec_scale(c, b))
            cands.append(v)
        for x in cands:
            x = self.mult(self.mult(e, x), e)
            f = self.split_idempotent(e, x)
            if f is not None:
                return self.primitive_idempotent_in(f, seed + 1)
        raise NonSplitField(
            "no primitive idempotent found over the base field; a simple "
            "block appears to be a division algebra, extend the field")

    def corner_basis(self, e: tuple) -> list[tuple]:
        rows = []
        for i in range(self.dim):
            ei = unit_vec(self.field, self.dim, i)
            rows.append(self.mult(self.mult(e, ei), e))
        rows, _ = rref_rows(self.field, rows)
        return list(rows)


def _frobenius_root(s: Scalar, q: int) -> Scalar:
    """The unique q-th root (q a power of char) in a finite field."""
    field = s.field
    p = field.char
    if q == 1 or s.is_zero():
        return s
    deg = field.degree
    # x -> x^(p^(deg-1)) inverts one Frobenius; apply once per factor of p in q
    out = s
    while q > 1:
        out = out ** (p ** (deg - 1))
        q //= p
    return out


class QuotientMap:
    """Quotient by a two-sided nil(potent) ideal, with canonical section.

    The complement basis is the set of standard basis vectors at the
    non-pivot columns of the ideal's canonical form, so everything here
    is deterministic.
    """

    def __init__(self, alg: FiniteAlgebra, ideal: SubspaceBasis):
        self.parent = alg
        self.ideal = ideal
        pivots = [next(j for j, c in enumerate(r) if not c.is_zero())
                  for r in ideal.rows]
        self.section_cols = [j for j in range(alg.dim) if j not in pivots]
        secvecs = [unit_vec(alg.field, alg.dim, j) for j in self.section_cols]
        self._solve_mat = Mat.from_columns(
            alg.field, list(ideal.rows) + secvecs, alg.dim)
        self._nideal = ideal.dim
        qdim = len(self.section_cols)
        table = []
        for a in range(qdim):
            row = []
            for b in range(qdim):
                prod = alg.mult(secvecs[a], secvecs[b])
                row.append(self.project(prod))
            table.append(row)
        self.algebra = FiniteAlgebra(alg.field, table, self.project(alg.unit))
        self.section_vectors = secvecs

    def project(self, v: tuple) -> tuple:
        coords = solve(self._solve_mat, v)
        return tuple(coords[self._nideal:])

    def lift(self, q: tuple) -> tuple:
        out = zero_vec(self.parent.field, self.parent.dim)
        for c, vec in zip(q, self.section_vectors):
            out = vec_add(out, vec_scale(c, vec))
        return out


class SubalgebraMap:
    """A unital subalgebra presented on a chosen basis inside the parent."""

    def __init__(self, alg: FiniteAlgebra, rows: list[tuple], identity: tuple):
        self.parent = alg
        rows, _ = rref_rows(alg.field, list(rows))
        self.rows = list(rows)
        self.basis = SubspaceBasis(alg.field, alg.dim, self.rows, canonical=True)
        dim = len(self.rows)
        table = []
        for a in range(dim):
            row = []
            for b in range(dim):
                prod = alg.mult(self.rows[a], self.rows[b])
                row.append(self.coords(prod))
            table.append(row)
        self.algebra = FiniteAlgebra(alg.field, table, self.coords(identity))

    def coords(self, v: tuple) -> tuple:
        return self.basis.coords_of(v)

    def embed(self, q: tuple) -> tuple:
        out = zero_vec(self.parent.field, self.parent.dim)
        for c, vec in zip(q, self.rows):
            out = vec_add(out, vec_scale(c, vec))
        return out
