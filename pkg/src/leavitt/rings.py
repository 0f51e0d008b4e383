"""Exact coefficient rings: the integers, the integers mod n, and the rationals.

Elements are kept in canonical form (least nonnegative residues, reduced
fractions with positive denominator) so equality is structural.

The algebra layer works on the *raw* canonical values (``int`` or
``Fraction``) through the descriptor methods; :class:`RingElement` is the
public boxed value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

from .errors import BadCoefficient, NoSuchHom, RingMismatch

__all__ = [
    "RingDescriptor",
    "RingElement",
    "RingHom",
    "ZZ",
    "QQ",
    "Zmod",
    "parse_ring",
    "add",
    "mul",
    "characteristic",
    "hom_exists",
    "hom_apply",
]

INTEGERS = "Z"
INTEGERS_MOD = "Z/n"
RATIONALS = "Q"

_LITERAL = re.compile(r"^(-?)(\d+)(?:/(\d+))?$")


@dataclass(frozen=True)
class RingDescriptor:
    kind: str
    modulus: int = 0

    def __post_init__(self):
        if self.kind == INTEGERS_MOD:
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise ValueError(f"modulus must be an integer >= 2, got {self.modulus!r}")
        elif self.kind in (INTEGERS, RATIONALS):
            if self.modulus != 0:
                raise ValueError(f"{self.kind} takes no modulus")
        else:
            raise ValueError(f"unknown ring kind {self.kind!r}")

    # -- raw canonical values -------------------------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.kind == RATIONALS else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == RATIONALS else 1

    @property
    def is_field(self) -> bool:
        if self.kind == RATIONALS:
            return True
        if self.kind == INTEGERS_MOD:
            n = self.modulus
            return all(n % p for p in range(2, int(n**0.5) + 1))
        return False

    def reduce(self, value):
        """Canonical raw representative of ``value`` (an int or Fraction)."""
        if self.kind == INTEGERS_MOD:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise BadCoefficient(f"{value} is not an integer")
                value = value.numerator
            return value % self.modulus
        if self.kind == INTEGERS:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise BadCoefficient(f"{value} is not an integer")
                return value.numerator
            return int(value)
        return Fraction(value)

    def format(self, raw) -> str:
        return str(raw)

    def parse_literal(self, text: str):
        """Raw value of a literal ``[-]digits[/digits]``."""
        m = _LITERAL.match(text.strip())
        if not m:
            raise BadCoefficient(f"malformed coefficient {text!r}")
        sign, num, den = m.groups()
        value = int(num) * (-1 if sign else 1)
        if den is None:
            return self.reduce(value)
        if self.kind != RATIONALS:
            raise BadCoefficient(f"fraction literal {text!r} is not allowed over {self}")
        if int(den) == 0:
            raise BadCoefficient("zero denominator")
        return Fraction(value, int(den))

    def __call__(self, value) -> RingElement:
        return RingElement(self, value)

    def __str__(self):
        if self.kind == INTEGERS_MOD:
            return f"Z/{self.modulus}"
        return self.kind

    @property
    def cli_name(self) -> str:
        if self.kind == INTEGERS_MOD:
            return f"z:{self.modulus}"
        return self.kind.lower()


ZZ = RingDescriptor(INTEGERS)
QQ = RingDescriptor(RATIONALS)


def Zmod(n: int) -> RingDescriptor:
    return RingDescriptor(INTEGERS_MOD, n)


def parse_ring(text: str) -> RingDescriptor:
    """Ring from its selection string: ``z``, ``z:<n>`` or ``q``."""
    t = text.strip().lower()
    if t == "z":
        return ZZ
    if t == "q":
        return QQ
    m = re.fullmatch(r"z:(\d+)", t)
    if m and int(m.group(1)) >= 2:
        return Zmod(int(m.group(1)))
    raise ValueError(f"unknown ring {text!r}; expected z, z:<n> (n >= 2) or q")


@dataclass(frozen=True)
class RingElement:
    ring: RingDescriptor
    value: object = field(default=0)

    def __post_init__(self):
        if not isinstance(self.value, (int, Rational)):
            raise TypeError(f"ring values must be exact, got {type(self.value).__name__}")
        object.__setattr__(self, "value", self.ring.reduce(self.value))

    def _coerce(self, other) -> RingElement:
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return RingElement(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.value + other.value)

    __radd__ = __add__

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.value * other.value)

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, -self.value)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.value - other.value)

    def __rsub__(self, other):
        return -self + other

    def __bool__(self):
        return self.value != 0

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self):
        return self.ring.format(self.value)


def add(a: RingElement, b: RingElement) -> RingElement:
    if a.ring != b.ring:
        raise RingMismatch(f"cannot add elements of {a.ring} and {b.ring}")
    return a + b


def mul(a: RingElement, b: RingElement) -> RingElement:
    if a.ring != b.ring:
        raise RingMismatch(f"cannot multiply elements of {a.ring} and {b.ring}")
    return a * b


def characteristic(ring: RingDescriptor) -> int:
    return ring.modulus if ring.kind == INTEGERS_MOD else 0


def hom_exists(source: RingDescriptor, target: RingDescriptor) -> bool:
    """Whether a unital ring homomorphism ``source -> target`` exists."""
    if source.kind == INTEGERS:
        return True
    if source.kind == INTEGERS_MOD:
        return target.kind == INTEGERS_MOD and source.modulus % target.modulus == 0
    return target.kind == RATIONALS


@dataclass(frozen=True)
class RingHom:
    """The unique unital homomorphism between two coefficient rings."""

    source: RingDescriptor
    target: RingDescriptor

    def __post_init__(self):
        if not hom_exists(self.source, self.target):
            raise NoSuchHom(f"no unital ring homomorphism {self.source} -> {self.target}")

    def raw(self, value):
        # every legal hom is induced by Z -> target, and Q -> Q is the identity
        return self.target.reduce(value)

    def __call__(self, a: RingElement) -> RingElement:
        return hom_apply(self, a)

    def __str__(self):
        return f"{self.source} -> {self.target}"


def hom_apply(h: RingHom, a: RingElement) -> RingElement:
    if a.ring != h.source:
        raise RingMismatch(f"{h} applied to an element of {a.ring}")
    return RingElement(h.target, h.raw(a.value))
