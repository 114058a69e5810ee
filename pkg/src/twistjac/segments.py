"""Zelevinsky segments [chi nu^b .. chi nu^e] and multisegments."""

from dataclasses import dataclass

from .core_arith import TRIVIAL, CharLabel, HalfInt


@dataclass(frozen=True)
class Segment:
    b: HalfInt
    e: HalfInt
    label: CharLabel = TRIVIAL

    def __post_init__(self):
        b = HalfInt.coerce(self.b)
        e = HalfInt.coerce(self.e)
        d = e - b
        if not d.is_integer() or d < 0:
            raise ValueError(f"bad segment ends {b}..{e}")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "e", e)

    def __len__(self):
        return int(self.e - self.b) + 1

    @property
    def length(self):
        return len(self)

    def key(self):
        return (self.b, self.e)

    def exponents(self):
        return [self.b + i for i in range(len(self))]

    def contains_exp(self, x):
        return self.b <= x <= self.e and (x - self.b).is_integer()

    def shift(self, t):
        return Segment(self.b + t, self.e + t, self.label)

    def minus(self):
        """Drop the top exponent; None when nothing is left."""
        if self.b == self.e:
            return None
        return Segment(self.b, self.e - 1, self.label)

    def __str__(self):
        lab = "" if self.label.is_trivial() else str(self.label)
        if self.b == self.e:
            return f"{lab}[{self.b}]"
        return f"{lab}[{self.b}..{self.e}]"


def _same_line(d1, d2):
    return d1.label == d2.label and (d1.b - d2.b).is_integer()


def linked(d1, d2):
    if not _same_line(d1, d2):
        return False
    if d1.b <= d2.b and d2.e <= d1.e:
        return False
    if d2.b <= d1.b and d1.e <= d2.e:
        return False
    # union is a segment iff there is no gap between them
    return max(d1.b, d2.b) <= min(d1.e, d2.e) + 1


def precedes(d1, d2):
    return linked(d1, d2) and d1.b < d2.b


def juxtaposed(d1, d2):
    return linked(d1, d2) and max(d1.b, d2.b) > min(d1.e, d2.e)


def union_intersect(d1, d2):
    if not linked(d1, d2):
        raise ValueError(f"segments {d1} and {d2} are not linked")
    u = Segment(min(d1.b, d2.b), max(d1.e, d2.e), d1.label)
    lo, hi = max(d1.b, d2.b), min(d1.e, d2.e)
    return u, (Segment(lo, hi, d1.label) if lo <= hi else None)


def _sort_key(s):
    # descending (b, e); label string only breaks ties between lines
    return (-s.b.twice_value, -s.e.twice_value, str(s.label))


class Multisegment(tuple):
    """Immutable multiset of segments kept in canonical order."""

    def __new__(cls, segs=()):
        return super().__new__(cls, sorted(segs, key=_sort_key))

    def degree(self):
        return sum(len(s) for s in self)

    def labels(self):
        return sorted({s.label for s in self}, key=str)

    def by_label(self, label):
        return Multisegment(s for s in self if s.label == label)

    def __add__(self, other):
        return Multisegment(list(self) + list(other))

    def __str__(self):
        return "{" + ", ".join(str(s) for s in self) + "}"

    def __repr__(self):
        return f"Multisegment({self})"


def canonicalize(m):
    return Multisegment(m)


def seg(b, e=None, label=TRIVIAL):
    """Build a segment; exponents may be ints, Fractions or strings like '3/2'."""
    if e is None:
        e = b
    if isinstance(label, str):
        label = TRIVIAL if label in ("", "1") else CharLabel.gen(label)
    return Segment(HalfInt.coerce(b), HalfInt.coerce(e), label)


def centered(r, center=0, label=TRIVIAL):
    """Segment of length r centred at ``center``."""
    c = HalfInt.coerce(center)
    return Segment(c - HalfInt(r - 1), c + HalfInt(r - 1), label)
