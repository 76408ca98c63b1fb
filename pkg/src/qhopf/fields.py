"""Exact scalar fields: the rationals and prime fields GF(p).

Every container in the package carries a Field instance. Rational scalars
are plain fractions.Fraction values (always in lowest terms), GF(p)
scalars are Fp instances. Both support +, -, *, /, ==, bool, so tensor
code is field-agnostic: a scalar is zero exactly when it is falsy.
"""

from __future__ import annotations

from fractions import Fraction


class Fp:
    """An element of GF(p), stored as a reduced residue."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _check(self, other: "Fp"):
        if self.p != other.p:
            raise ValueError("mixed characteristics %d and %d" % (self.p, other.p))

    def __add__(self, other):
        self._check(other)
        return Fp(self.v + other.v, self.p)

    def __sub__(self, other):
        self._check(other)
        return Fp(self.v - other.v, self.p)

    def __mul__(self, other):
        self._check(other)
        return Fp(self.v * other.v, self.p)

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __truediv__(self, other):
        self._check(other)
        if other.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return Fp(self.v * pow(other.v, self.p - 2, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "Fp(%d, %d)" % (self.v, self.p)


class Field:
    """Base class: a choice of exact scalar field."""

    name = "?"

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def from_pair(self, num: int, den: int):
        """Scalar from an integer numerator/denominator pair."""
        raise NotImplementedError

    def to_pair(self, c):
        """Inverse of from_pair, for serialization."""
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return "Field(%s)" % self.name


class RationalField(Field):
    name = "Q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def from_pair(self, num, den):
        return Fraction(num, den)

    def to_pair(self, c):
        return (c.numerator, c.denominator)


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError("GF(p) needs a prime p, got %r" % (p,))
        self.p = p
        self.name = "GF(%d)" % p

    def zero(self):
        return Fp(0, self.p)

    def one(self):
        return Fp(1, self.p)

    def from_int(self, n):
        return Fp(n, self.p)

    def from_pair(self, num, den):
        return Fp(num, self.p) / Fp(den, self.p)

    def to_pair(self, c):
        return (c.v, 1)


QQ = RationalField()


def parse_field(spec: str) -> Field:
    """Parse a field name: "Q" or "GF(p)"."""
    spec = spec.strip()
    if spec == "Q":
        return QQ
    if spec.startswith("GF(") and spec.endswith(")"):
        return PrimeField(int(spec[3:-1]))
    raise ValueError("unknown field %r (expected 'Q' or 'GF(p)')" % spec)
