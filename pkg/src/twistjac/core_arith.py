"""Exact half-integer exponents and formal character labels.

Everything downstream works with exponents of nu = |det| that live in
(1/2)Z, so they are stored as twice their value.  Character labels form a
free abelian group on string generators.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering


@total_ordering
class HalfInt:
    """A number in (1/2)Z, held as an integer ``twice_value``."""

    __slots__ = ("twice_value",)

    def __init__(self, twice_value):
        if isinstance(twice_value, bool) or not isinstance(twice_value, int):
            raise TypeError("twice_value must be an int")
        object.__setattr__(self, "twice_value", twice_value)

    def __setattr__(self, name, value):
        raise AttributeError("HalfInt is immutable")

    @classmethod
    def coerce(cls, x):
        if isinstance(x, HalfInt):
            return x
        if isinstance(x, bool):
            raise TypeError("bool is not a half-integer")
        if isinstance(x, int):
            return cls(2 * x)
        if isinstance(x, Fraction):
            t = 2 * x
            if t.denominator != 1:
                raise ValueError(f"{x} is not in (1/2)Z")
            return cls(t.numerator)
        if isinstance(x, str):
            return parse_halfint(x)
        raise TypeError(f"cannot make a HalfInt from {x!r}")

    def is_integer(self):
        return self.twice_value % 2 == 0

    def as_fraction(self):
        return Fraction(self.twice_value, 2)

    def floor(self):
        return self.twice_value // 2

    def __int__(self):
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return self.twice_value // 2

    def __add__(self, other):
        try:
            o = HalfInt.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return HalfInt(self.twice_value + o.twice_value)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = HalfInt.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return HalfInt(self.twice_value - o.twice_value)

    def __rsub__(self, other):
        try:
            o = HalfInt.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return HalfInt(o.twice_value - self.twice_value)

    def __neg__(self):
        return HalfInt(-self.twice_value)

    def __mul__(self, k):
        # only scaling by integers stays inside (1/2)Z in general
        if isinstance(k, int) and not isinstance(k, bool):
            return HalfInt(self.twice_value * k)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, HalfInt):
            return self.twice_value == other.twice_value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Fraction(self.twice_value, 2) == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, HalfInt):
            return self.twice_value < other.twice_value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Fraction(self.twice_value, 2) < other
        return NotImplemented

    def __hash__(self):
        return hash(("HalfInt", self.twice_value))

    def __str__(self):
        if self.twice_value % 2 == 0:
            return str(self.twice_value // 2)
        return f"{self.twice_value}/2"

    def __repr__(self):
        return f"HalfInt({self})"


def half(n):
    """n/2 as a HalfInt."""
    return HalfInt(n)


def whole(n):
    """The integer n as a HalfInt."""
    return HalfInt(2 * n)


def parse_halfint(text):
    s = text.strip()
    try:
        q = Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a half-integer: {text!r}") from None
    if "." in s or "e" in s.lower():
        raise ValueError(f"not a half-integer: {text!r}")
    return HalfInt.coerce(q)


@dataclass(frozen=True)
class CharLabel:
    """Formal product of named characters with integer exponents."""

    exponents: tuple = ()  # sorted (name, exp) pairs, zeros pruned

    def __post_init__(self):
        items = dict(self.exponents) if not isinstance(self.exponents, dict) else self.exponents
        clean = tuple(sorted((k, v) for k, v in items.items() if v != 0))
        object.__setattr__(self, "exponents", clean)

    @classmethod
    def of(cls, **kw):
        return cls(tuple(kw.items()))

    @classmethod
    def gen(cls, name, power=1):
        return cls(((name, power),))

    def as_dict(self):
        return dict(self.exponents)

    def is_trivial(self):
        return not self.exponents

    def __mul__(self, other):
        d = self.as_dict()
        for k, v in other.exponents:
            d[k] = d.get(k, 0) + v
        return CharLabel(tuple(d.items()))

    def inverse(self):
        return CharLabel(tuple((k, -v) for k, v in self.exponents))

    def __pow__(self, k):
        return CharLabel(tuple((name, v * k) for name, v in self.exponents))

    def __str__(self):
        if not self.exponents:
            return "1"
        parts = []
        for name, v in self.exponents:
            parts.append(name if v == 1 else f"{name}^{v}")
        return "*".join(parts)


TRIVIAL = CharLabel()


def _exp_str(e):
    if e == 0:
        return ""
    if e.twice_value == 2:
        return "nu"
    if e.is_integer():
        return f"nu^{e}"
    return "nu^{" + str(e) + "}"


@dataclass(frozen=True)
class FormalCharacter:
    """chi * nu^exp."""

    label: CharLabel = TRIVIAL
    exp: HalfInt = field(default_factory=lambda: HalfInt(0))

    def __post_init__(self):
        object.__setattr__(self, "exp", HalfInt.coerce(self.exp))

    def __mul__(self, other):
        return char_mul(self, other)

    def inverse(self):
        return FormalCharacter(self.label.inverse(), -self.exp)

    def __pow__(self, k):
        return FormalCharacter(self.label ** k, self.exp * k)

    def twist(self, t):
        return FormalCharacter(self.label, self.exp + t)

    def is_trivial(self):
        return self.label.is_trivial() and self.exp == 0

    def __str__(self):
        lab = "" if self.label.is_trivial() else str(self.label)
        ex = _exp_str(self.exp)
        if lab and ex:
            return f"{lab}*{ex}"
        return lab or ex or "1"


def char_mul(a, b):
    return FormalCharacter(a.label * b.label, a.exp + b.exp)


def nu(t=0, label=TRIVIAL):
    """Shorthand for label * nu^t."""
    return FormalCharacter(label, HalfInt.coerce(t))
