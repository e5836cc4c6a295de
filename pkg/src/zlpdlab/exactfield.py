"""Exact scalar arithmetic over the rationals and prime fields GF(p).

Scalars are kept as plain Python values for speed: ``fractions.Fraction``
over Q and ``int`` residues in ``[0, p)`` over GF(p).  A :class:`FieldSpec`
knows how to combine them.  The :class:`Scalar` wrapper carries its field
along and is what user-facing code should reach for when mixing fields
must be caught.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, ParseError

_Q_RE = re.compile(r"^-?\d+(/\d+)?$")
_GF_RE = re.compile(r"^-?\d+$")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (``kind="Q"``) or a prime field (``kind="GF"``)."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise ValueError("the rational field takes no modulus")
        elif self.kind == "GF":
            if not isinstance(self.p, int) or not _is_prime(self.p):
                raise ValueError(f"GF(p) needs a prime modulus, got {self.p!r}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls("Q")

    @classmethod
    def gf(cls, p: int) -> FieldSpec:
        return cls("GF", p)

    @classmethod
    def from_name(cls, name: str) -> FieldSpec:
        """Parse ``"Q"``, ``"GF5"`` or ``"GF(5)"``."""
        s = name.strip().upper().replace("(", "").replace(")", "")
        if s in ("Q", "QQ"):
            return cls.rationals()
        if s.startswith("GF") and s[2:].isdigit():
            return cls.gf(int(s[2:]))
        raise ParseError(f"unknown field name {name!r}")

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "Q" else self.p

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "GF"

    @property
    def order(self) -> int | None:
        """Number of elements, or None for Q."""
        return self.p

    def __str__(self):
        return "Q" if self.kind == "Q" else f"GF({self.p})"

    # raw-value arithmetic; callers guarantee both operands belong here

    @property
    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "Q" else 1

    def coerce(self, value):
        """Map an int, Fraction or scalar string into this field."""
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool):
            raise TypeError("booleans are not scalars")
        if self.kind == "Q":
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZero(f"{value} has no image in {self}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a, b):
        return a + b if self.kind == "Q" else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.kind == "Q" else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.kind == "Q" else (a * b) % self.p

    def neg(self, a):
        return -a if self.kind == "Q" else (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise DivisionByZero(f"inverse of zero in {self}")
        return 1 / a if self.kind == "Q" else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, e: int):
        return a ** e if self.kind == "Q" else pow(a, e, self.p)

    def parse(self, text: str):
        text = text.strip()
        if self.kind == "Q":
            if not _Q_RE.match(text):
                raise ParseError(f"malformed rational scalar {text!r}")
            num, _, den = text.partition("/")
            if den and int(den) == 0:
                raise DivisionByZero(f"zero denominator in {text!r}")
            return Fraction(int(num), int(den) if den else 1)
        if not _GF_RE.match(text):
            raise ParseError(f"malformed GF({self.p}) scalar {text!r}")
        return int(text) % self.p

    def fmt(self, a) -> str:
        return str(a)

    def vector(self, values) -> tuple:
        return tuple(self.coerce(v) for v in values)


QQ = FieldSpec.rationals()


def GF(p: int) -> FieldSpec:
    return FieldSpec.gf(p)


class Scalar:
    """A field element that remembers its field.

    Mixing scalars from different fields raises :class:`FieldMismatch`.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value):
        self.field = field
        self.value = field.coerce(value)

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field.coerce(other)
        return NotImplemented

    def _wrap(self, raw):
        s = object.__new__(Scalar)
        s.field = self.field
        s.value = raw
        return s

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(self.value, o))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return self._wrap(self.field.power(self.value, e))

    def inverse(self) -> Scalar:
        return self._wrap(self.field.inv(self.value))

    def __eq__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self.value == o

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Scalar({self.field}, {self.value})"

    def __str__(self):
        return self.field.fmt(self.value)


def scalar_arith(op: str, a: Scalar, b: Scalar | None = None):
    """Dispatch one of add/sub/mul/inv/neg/eq on scalars."""
    if op in ("inv", "neg"):
        if b is not None:
            raise TypeError(f"{op} is unary")
        return a.inverse() if op == "inv" else -a
    if b is None:
        raise TypeError(f"{op} needs two operands")
    if isinstance(b, Scalar) and a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "eq":
        return a == b
    raise ValueError(f"unknown scalar operation {op!r}")


def parse_scalar(text: str, field: FieldSpec) -> Scalar:
    return Scalar(field, field.parse(text))
