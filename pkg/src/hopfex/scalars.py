"""Exact scalar arithmetic over the fields the engine supports.

A field is described by a FieldSpec: characteristic 0 or a prime p,
optionally extended by a monic irreducible polynomial over the prime
field.  Char-0 extensions are usually cyclotomic and can be requested by
order; the modulus is then the cyclotomic polynomial, computed here by
iterated polynomial division.

Scalars are immutable and hashable.  Representations:

  * char 0, prime field      -- fractions.Fraction
  * char p, prime field      -- int in [0, p)
  * any extension of degree d -- tuple of d prime-field coefficients,
                                 constant term first

No floating point anywhere.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import (
    DivisionByZero,
    FieldError,
    FieldMismatch,
    IncompatibleExtension,
    NoSuchRoot,
    ReducibleModulus,
    ScalarParseError,
)

MAX_EXTENSION_DEGREE = 16


# ---------------------------------------------------------------------------
# dense polynomial helpers over the prime field
#
# Coefficients are lists, constant term first, with no trailing zeros.
# char == 0 entries are Fractions, char == p entries are ints in [0, p).
# ---------------------------------------------------------------------------

def _trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _padd(a: list, b: list, p: int) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        s = x + y
        out.append(s % p if p else s)
    return _trim(out)


def _pneg(a: list, p: int) -> list:
    return [(-x) % p if p else -x for x in a]


def _psub(a: list, b: list, p: int) -> list:
    return _padd(a, _pneg(b, p), p)


def _pmul(a: list, b: list, p: int) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    if p:
        out = [v % p for v in out]
    return _trim(out)


def _pinv_scalar(x, p: int):
    if p:
        return pow(x, p - 2, p)
    return Fraction(1) / x


def _pdivmod(a: list, b: list, p: int) -> tuple[list, list]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = list(a)
    binv = _pinv_scalar(b[-1], p)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        c = a[-1] * binv
        if p:
            c %= p
        q[k] = c
        for i, y in enumerate(b):
            a[k + i] -= c * y
            if p:
                a[k + i] %= p
        _trim(a)
    return _trim(q), a


def _pgcdext(a: list, b: list, p: int) -> tuple[list, list, list]:
    """Return (g, u, v) with u*a + v*b = g."""
    r0, r1 = list(a), list(b)
    u0, u1 = [_one_coeff(p)], []
    v0, v1 = [], [_one_coeff(p)]
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        u0, u1 = u1, _psub(u0, _pmul(q, u1, p), p)
        v0, v1 = v1, _psub(v0, _pmul(q, v1, p), p)
    return r0, u0, v0


def _one_coeff(p: int):
    return 1 if p else Fraction(1)


def _coeff_from_int(n: int, p: int):
    return n % p if p else Fraction(n)


def cyclotomic_polynomial(m: int) -> list[Fraction]:
    """Monic cyclotomic polynomial of order m over the rationals,
    constant term first, computed by dividing x^m - 1 by the lower orders."""
    if m < 1:
        raise FieldError("cyclotomic order must be positive")
    num = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]
    for d in range(1, m):
        if m % d == 0:
            num, rem = _pdivmod(num, cyclotomic_polynomial(d), 0)
            assert not rem
    return num


def _is_irreducible(coeffs: list, p: int) -> bool:
    """Irreducibility of a monic polynomial over the prime field.

    Over F_p the candidate divisors up to half the degree are enumerated
    directly when that stays small; otherwise, and always over the
    rationals, the check is delegated to sympy.
    """
    deg = len(coeffs) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    if p and p ** (deg // 2 + 1) <= 4096:
        for d in range(1, deg // 2 + 1):
            for tail in itertools.product(range(p), repeat=d):
                cand = list(tail) + [1]
                _, rem = _pdivmod(list(coeffs), cand, p)
                if not rem:
                    return False
        return True
    import sympy

    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c) * x**i for i, c in enumerate(coeffs))
    if p:
        poly = sympy.Poly(expr, x, modulus=p)
    else:
        poly = sympy.Poly(expr, x, domain="QQ")
    return bool(poly.is_irreducible)


# ---------------------------------------------------------------------------
# field specification
# ---------------------------------------------------------------------------

class FieldSpec:
    """An exact base field: Q, F_p, or a simple extension of either.

    modulus, when present, is the monic irreducible defining polynomial
    with constant term first.  cyclotomic_order is a char-0 convenience:
    the modulus is then the cyclotomic polynomial of that order and the
    generator t plays the primitive root of unity.
    """

    __slots__ = ("char", "modulus", "cyclotomic_order", "_hash")

    def __init__(self, char: int = 0, modulus=None, cyclotomic_order: int | None = None):
        if char < 0 or (char > 0 and not _is_prime(char)):
            raise FieldError(f"characteristic must be 0 or prime, got {char}")
        if cyclotomic_order is not None:
            if char != 0:
                raise FieldError("cyclotomic shorthand is for characteristic 0")
            if modulus is not None:
                raise FieldError("give either a modulus or a cyclotomic order, not both")
            if cyclotomic_order < 1:
                raise FieldError("cyclotomic order must be positive")
            if cyclotomic_order <= 2:
                # the root is rational; no extension needed
                cyclotomic_order = None
            else:
                modulus = cyclotomic_polynomial(cyclotomic_order)
        if modulus is not None:
            modulus = [_coerce_prime_coeff(c, char) for c in modulus]
            _trim(modulus)
            deg = len(modulus) - 1
            if deg < 1:
                raise FieldError("extension modulus must have positive degree")
            if deg > MAX_EXTENSION_DEGREE:
                raise FieldError(
                    f"extension degree {deg} exceeds the supported cap {MAX_EXTENSION_DEGREE}")
            if modulus[-1] != _one_coeff(char):
                raise FieldError("extension modulus must be monic")
            if cyclotomic_order is None and not _is_irreducible(modulus, char):
                raise ReducibleModulus("extension modulus is reducible")
            modulus = tuple(modulus)
        self.char = char
        self.modulus = modulus
        self.cyclotomic_order = cyclotomic_order
        self._hash = hash((char, modulus))

    # -- basic protocol ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1 if self.modulus else 1

    def __eq__(self, other):
        return (isinstance(other, FieldSpec) and self.char == other.char
                and self.modulus == other.modulus)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.cyclotomic_order:
            return f"FieldSpec(char=0, cyclotomic_order={self.cyclotomic_order})"
        if self.modulus:
            return f"FieldSpec(char={self.char}, modulus={list(self.modulus)})"
        return f"FieldSpec(char={self.char})"

    def describe(self) -> str:
        if self.char == 0 and not self.modulus:
            return "Q"
        if self.char == 0 and self.cyclotomic_order:
            return f"Q(zeta_{self.cyclotomic_order})"
        if self.char == 0:
            return f"Q[t]/(modulus of degree {self.degree})"
        if not self.modulus:
            return f"F_{self.char}"
        return f"F_{self.char ** self.degree} = F_{self.char}[t]/(modulus of degree {self.degree})"

    # -- element constructors ----------------------------------------------

    def zero(self) -> "Scalar":
        return self.from_int(0)

    def one(self) -> "Scalar":
        return self.from_int(1)

    def from_int(self, n: int) -> "Scalar":
        if self.modulus:
            c = _coeff_from_int(n, self.char)
            return Scalar(self, self._pad([c] if c else []))
        if self.char:
            return Scalar(self, n % self.char)
        return Scalar(self, Fraction(n))

    def from_fraction(self, fr: Fraction) -> "Scalar":
        fr = Fraction(fr)
        if self.char:
            den = fr.denominator % self.char
            if den == 0:
                raise DivisionByZero(
                    f"denominator {fr.denominator} is zero modulo {self.char}")
            val = fr.numerator * pow(den, self.char - 2, self.char) % self.char
            return self.from_int(val)
        if self.modulus:
            return Scalar(self, self._pad([fr] if fr else []))
        return Scalar(self, fr)

    def from_coeffs(self, coeffs) -> "Scalar":
        """Element of an extension field from a coefficient list, constant first."""
        if not self.modulus:
            raise FieldError("coefficient lists only make sense in an extension field")
        cs = [_coerce_prime_coeff(c, self.char) for c in coeffs]
        if len(cs) > self.degree:
            cs = _pdivmod(cs, list(self.modulus), self.char)[1]
        return Scalar(self, self._pad(cs))

    def gen(self) -> "Scalar":
        """The residue of t, i.e. the extension generator."""
        if not self.modulus:
            raise FieldError("prime fields have no extension generator")
        return self.from_coeffs([0, 1])

    def _pad(self, coeffs: list) -> tuple:
        return tuple(coeffs) + (_coeff_from_int(0, self.char),) * (self.degree - len(coeffs))

    # -- scalar text format --------------------------------------------------

    def parse(self, text: str) -> "Scalar":
        """Parse 'a', 'a/b' or a coefficient list '[c0,c1,...]'."""
        text = text.strip()
        try:
            if text.startswith("["):
                if not text.endswith("]"):
                    raise ValueError("unterminated coefficient list")
                body = text[1:-1].strip()
                parts = [p.strip() for p in body.split(",")] if body else []
                fracs = [Fraction(p) if p else Fraction(0) for p in parts]
                if not self.modulus:
                    if len(fracs) > 1 and any(fracs[1:]):
                        raise ValueError("coefficient list too long for a prime field")
                    return self.from_fraction(fracs[0] if fracs else Fraction(0))
                if len(fracs) > self.degree:
                    raise ValueError(
                        f"coefficient list longer than extension degree {self.degree}")
                if self.char:
                    coeffs = []
                    for fr in fracs:
                        den = fr.denominator % self.char
                        if den == 0:
                            raise ValueError("denominator vanishes modulo the characteristic")
                        coeffs.append(fr.numerator * pow(den, self.char - 2, self.char)
                                      % self.char)
                    return self.from_coeffs(coeffs)
                return self.from_coeffs(fracs)
            return self.from_fraction(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ScalarParseError(f"cannot parse scalar {text!r}: {exc}") from None

    def format(self, s: "Scalar") -> str:
        if s.field != self:
            raise FieldMismatch("formatting a scalar from another field")
        if self.modulus:
            if not any(s.val[1:]):
                return _format_prime_coeff(s.val[0])
            return "[" + ",".join(_format_prime_coeff(c) for c in s.val) + "]"
        return _format_prime_coeff(s.val)

    # -- roots of unity ------------------------------------------------------

    def primitive_root_of_unity(self, n: int) -> "Scalar":
        """A primitive n-th root of unity, deterministic, or NoSuchRoot."""
        if n < 1:
            raise FieldError("root order must be positive")
        if n == 1:
            return self.one()
        if self.char == 0:
            if n == 2:
                return self.from_int(-1)
            m = self.cyclotomic_order
            if m is not None:
                full = m if m % 2 == 0 else 2 * m
                if full % n == 0:
                    zeta = self.gen() if m % 2 == 0 else -self.gen()
                    return zeta ** (full // n)
                raise NoSuchRoot(f"{self.describe()} has no primitive {n}-th root of unity")
            if self.modulus:
                # best effort: powers of +-t, in case t is a root of unity
                for base in (self.gen(), -self.gen()):
                    acc = base
                    for order in range(1, 4 * self.degree ** 2 + 2):
                        if acc == self.one():
                            if order % n == 0:
                                return base ** (order // n)
                            break
                        acc = acc * base
            raise NoSuchRoot(f"{self.describe()} has no primitive {n}-th root of unity")
        group_order = self.char ** self.degree - 1
        if group_order % n:
            raise NoSuchRoot(f"{self.describe()} has no primitive {n}-th root of unity")
        for cand in self._nonzero_elements():
            order = _multiplicative_order(cand, group_order)
            if order % n == 0:
                return cand ** (order // n)
        raise NoSuchRoot(f"{self.describe()} has no primitive {n}-th root of unity")

    def _nonzero_elements(self):
        """Deterministic enumeration of the nonzero elements of a finite field."""
        if self.char == 0:
            raise FieldError("cannot enumerate an infinite field")
        if not self.modulus:
            for a in range(1, self.char):
                yield Scalar(self, a)
            return
        for tup in itertools.product(range(self.char), repeat=self.degree):
            if any(tup):
                yield Scalar(self, tuple(tup))

    # -- embeddings ----------------------------------------------------------

    def convert(self, s: "Scalar") -> "Scalar":
        """Embed a scalar of a (subfield) FieldSpec into this field."""
        if s.field == self:
            return s
        if s.field.char != self.char:
            raise IncompatibleExtension(
                f"cannot embed {s.field.describe()} into {self.describe()}: "
                "characteristics differ")
        if s.field.modulus is not None:
            raise IncompatibleExtension(
                f"cannot embed {s.field.describe()} into {self.describe()}: "
                "only prime fields embed automatically")
        if self.modulus is None:
            raise IncompatibleExtension(
                f"cannot embed {s.field.describe()} into {self.describe()}")
        return self.from_coeffs([s.val])


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _coerce_prime_coeff(c, p: int):
    if isinstance(c, Scalar):
        raise FieldError("modulus coefficients must be plain numbers")
    if p:
        if isinstance(c, Fraction):
            if c.denominator % p == 0:
                raise DivisionByZero("coefficient denominator vanishes mod p")
            return c.numerator * pow(c.denominator % p, p - 2, p) % p
        return int(c) % p
    return Fraction(c)


def _format_prime_coeff(c) -> str:
    return str(c)


def _multiplicative_order(s: "Scalar", bound: int) -> int:
    acc = s
    one = s.field.one()
    for k in range(1, bound + 1):
        if acc == one:
            return k
        acc = acc * s
    raise FieldError("element order exceeded the group order; field data corrupt")


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------

class Scalar:
    """Immutable exact field element; arithmetic via operators."""

    __slots__ = ("field", "val")

    def __init__(self, field: FieldSpec, val):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "val", val)

    def __setattr__(self, *a):
        raise AttributeError("Scalar is immutable")

    # -- helpers -------------------------------------------------------------

    def _check(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(
                    f"scalars from {self.field.describe()} and {other.field.describe()}")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        if isinstance(other, Fraction):
            return self.field.from_fraction(other)
        return NotImplemented

    def is_zero(self) -> bool:
        if isinstance(self.val, tuple):
            return not any(self.val)
        return not self.val

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        f = self.field
        if f.modulus:
            v = f._pad(_padd(list(self.val), list(o.val), f.char))
        elif f.char:
            v = (self.val + o.val) % f.char
        else:
            v = self.val + o.val
        return Scalar(f, v)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        if f.modulus:
            v = f._pad(_pneg(list(self.val), f.char))
        elif f.char:
            v = (-self.val) % f.char
        else:
            v = -self.val
        return Scalar(f, v)

    def __sub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        f = self.field
        if f.modulus:
            prod = _pmul(list(self.val), list(o.val), f.char)
            _, rem = _pdivmod(prod, list(f.modulus), f.char)
            v = f._pad(rem)
        elif f.char:
            v = self.val * o.val % f.char
        else:
            v = self.val * o.val
        return Scalar(f, v)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        f = self.field
        if self.is_zero():
            raise DivisionByZero(f"division by zero in {f.describe()}")
        if f.modulus:
            g, u, _ = _pgcdext(_trim(list(self.val)), list(f.modulus), f.char)
            assert len(g) == 1, "modulus is irreducible, gcd must be a unit"
            c = _pinv_scalar(g[0], f.char)
            v = f._pad([x * c % f.char if f.char else x * c for x in u])
            return Scalar(f, v)
        if f.char:
            return Scalar(f, pow(self.val, f.char - 2, f.char))
        return Scalar(f, Fraction(1) / self.val)

    def __truediv__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        acc = self.field.one()
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    # -- comparison --------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._check(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.val == other.val

    def __hash__(self):
        return hash((self.field, self.val))

    def __repr__(self):
        return f"Scalar({self.field.format(self)})"

    def __str__(self):
        return self.field.format(self)


QQ = FieldSpec(0)


def GF(p: int, modulus=None) -> FieldSpec:
    return FieldSpec(p, modulus=modulus)
