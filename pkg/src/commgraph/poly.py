"""Dense univariate polynomials over a ``Field``.

Coefficients are stored low-to-high in a tuple with a nonzero leading
coefficient; the zero polynomial has ``coeffs == ()``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import FieldMismatch
from .fields import Field, Scalar


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        cs = [field.reduce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, field: Field, coeffs: Sequence) -> "Poly":
        # coeffs already canonical; strip only
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls._raw(field, (field.zero, field.one))

    @classmethod
    def constant(cls, field: Field, c) -> "Poly":
        return cls(field, (c,))

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls._raw(field, (field.one,))

    @classmethod
    def monomial(cls, field: Field, d: int, c=1) -> "Poly":
        return cls(field, [0] * d + [c])

    # -- basic queries --------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (self.field.one,)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({self.field!r}, {self.to_str()})"

    def to_str(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"{c}*{mono}")
            else:
                terms.append(str(c))
        return " + ".join(terms)

    def sort_key(self):
        return (self.degree, self.coeffs)

    # -- arithmetic -----------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly(self.field, (other,))

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        red = self.field.reduce
        cs = [red(x + y) for x, y in zip(a, b)] + list(a[len(b):])
        return Poly._raw(self.field, cs)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        red = self.field.reduce
        return Poly._raw(self.field, [red(-c) for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = self.field.reduce(other)
            red = self.field.reduce
            return Poly._raw(self.field, [red(c * a) for a in self.coeffs])
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(self.field, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        red = self.field.reduce
        return Poly._raw(self.field, [red(c) for c in out])

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        field = self.field
        red = field.reduce
        r = list(self.coeffs)
        db = other.degree
        inv_lc = field.inv(other.lc)
        if len(r) <= db:
            return Poly._raw(field, ()), self
        q = [field.zero] * (len(r) - db)
        b = other.coeffs
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if c == 0:
                continue
            c = red(c * inv_lc)
            q[k - db] = c
            off = k - db
            for j in range(db + 1):
                r[off + j] = red(r[off + j] - c * b[j])
        return Poly._raw(field, q), Poly._raw(field, r[:db])

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        """True iff ``self`` divides ``other``."""
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "Poly":
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return self * self.field.inv(self.lc)

    def derivative(self) -> "Poly":
        red = self.field.reduce
        return Poly._raw(self.field, [red(i * c) for i, c in enumerate(self.coeffs) if i])

    def __call__(self, x):
        """Evaluate at a scalar."""
        red = self.field.reduce
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = red(acc * x + c)
        return acc

    def powmod(self, e: int, m: "Poly") -> "Poly":
        result = Poly.one(self.field) % m
        base = self % m
        while e:
            if e & 1:
                result = (result * base) % m
            base = (base * base) % m
            e >>= 1
        return result


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; ``gcd(f, 0) == f.monic()`` and ``gcd(0, 0) == 0``."""
    f._check(g)
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def poly_xgcd(f: Poly, g: Poly):
    """Return ``(d, s, t)`` with ``d`` monic and ``s*f + t*g == d``."""
    f._check(g)
    field = f.field
    r0, r1 = f, g
    s0, s1 = Poly.one(field), Poly(field)
    t0, t1 = Poly(field), Poly.one(field)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    c = field.inv(r0.lc)
    return r0 * c, s0 * c, t0 * c


def poly_lcm(f: Poly, g: Poly) -> Poly:
    if f.is_zero() or g.is_zero():
        return Poly(f.field)
    return (f * g // poly_gcd(f, g)).monic()


def coprime_part(f: Poly, g: Poly) -> Poly:
    """Largest monic divisor of ``f`` sharing no irreducible factor with ``g``."""
    f = f.monic()
    d = poly_gcd(f, g)
    while d.degree > 0:
        f = f // d
        d = poly_gcd(f, d)
    return f
