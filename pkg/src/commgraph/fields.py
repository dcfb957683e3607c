"""Coefficient fields: prime fields F_p and the rationals.

Elements are plain Python values in canonical form: an ``int`` in
``range(p)`` for F_p, a ``fractions.Fraction`` for Q.  Arithmetic is done
with the ordinary operators followed by ``field.reduce``; only division
needs a field method.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

Scalar = Union[int, Fraction]

MAX_PRIME = 2**31


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface; see ``PrimeField`` and ``Rationals``."""

    zero: Scalar
    one: Scalar
    characteristic: int

    def reduce(self, x) -> Scalar:
        raise NotImplementedError

    def inv(self, x: Scalar) -> Scalar:
        raise NotImplementedError

    def __call__(self, x) -> Scalar:
        return self.reduce(x)

    def div(self, x: Scalar, y: Scalar) -> Scalar:
        return self.reduce(x * self.inv(y))

    def parse(self, token) -> Scalar:
        raise NotImplementedError

    def encode(self, x: Scalar):
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError

    @staticmethod
    def from_json(doc: dict) -> "Field":
        kind = doc.get("kind")
        if kind == "fp":
            return PrimeField(int(doc["p"]))
        if kind == "q":
            return QQ
        raise ValueError(f"unknown field kind {kind!r}")


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not 2 <= self.p < MAX_PRIME:
            raise ValueError(f"prime field order out of range: {self.p!r}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    zero = 0
    one = 1

    @property
    def characteristic(self) -> int:
        return self.p

    def reduce(self, x) -> int:
        if type(x) is int:
            return x % self.p
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return x % self.p

    def inv(self, x: int) -> int:
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero in F_%d" % self.p)
        return pow(x, -1, self.p)

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def parse(self, token) -> int:
        if isinstance(token, bool) or not isinstance(token, (int, str)):
            raise ValueError(f"bad F_{self.p} entry {token!r}")
        return self.reduce(Fraction(token))

    def encode(self, x: int) -> int:
        return int(x)

    def to_json(self) -> dict:
        return {"kind": "fp", "p": self.p}

    def __repr__(self) -> str:
        return f"GF({self.p})"


@dataclass(frozen=True)
class Rationals(Field):
    zero = Fraction(0)
    one = Fraction(1)
    characteristic = 0

    def reduce(self, x) -> Fraction:
        return x if isinstance(x, Fraction) else Fraction(x)

    def inv(self, x: Fraction) -> Fraction:
        if x == 0:
            raise ZeroDivisionError("inverse of zero in Q")
        return 1 / Fraction(x)

    def parse(self, token) -> Fraction:
        if isinstance(token, bool) or not isinstance(token, (int, str)):
            raise ValueError(f"bad rational entry {token!r}")
        if isinstance(token, str) and any(c in token for c in ".eE"):
            raise ValueError(f"rational entries must be integers or a/b, got {token!r}")
        return Fraction(token)

    def encode(self, x: Fraction) -> str:
        return str(Fraction(x))

    def to_json(self) -> dict:
        return {"kind": "q"}

    def __repr__(self) -> str:
        return "QQ"


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)
