"""Symbolic representation expressions for segment-class representations.

ZRep(m) is the Zelevinsky irreducible Z(m), LRep(m) the Langlands quotient
L(m).  CharRep(r, c) is the character c o det of G_r and SteinbergRep(r, c)
the twisted Steinberg St_r c.  Product is the normalized parabolic induction
of its factors, kept unevaluated.
"""

from dataclasses import dataclass

from .core_arith import FormalCharacter, HalfInt, nu
from .segments import Multisegment, Segment, centered, juxtaposed, linked
from .zelevinsky import mw_dual


class ReprExpr:
    def __mul__(self, other):
        return Product([self, other])

    def rank(self):
        return gl_rank(self)


@dataclass(frozen=True)
class ZRep(ReprExpr):
    m: Multisegment

    def __post_init__(self):
        object.__setattr__(self, "m", Multisegment(self.m))
        if not self.m:
            raise ValueError("Z of the empty multisegment is not a representation")

    def __str__(self):
        return "Z" + str(self.m)


@dataclass(frozen=True)
class LRep(ReprExpr):
    m: Multisegment

    def __post_init__(self):
        object.__setattr__(self, "m", Multisegment(self.m))
        if not self.m:
            raise ValueError("L of the empty multisegment is not a representation")

    def __str__(self):
        return "L" + str(self.m)


@dataclass(frozen=True)
class CharRep(ReprExpr):
    r: int
    c: FormalCharacter

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("rank must be positive")

    def segment(self):
        return centered(self.r, self.c.exp, self.c.label)

    def normalize(self):
        return ZRep(Multisegment([self.segment()]))

    def __str__(self):
        return f"char({self.r}, {self.c})"


@dataclass(frozen=True)
class SteinbergRep(ReprExpr):
    r: int
    c: FormalCharacter

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("rank must be positive")

    def segment(self):
        return centered(self.r, self.c.exp, self.c.label)

    def normalize(self):
        return LRep(Multisegment([self.segment()]))

    def __str__(self):
        return f"St({self.r}, {self.c})"


@dataclass(frozen=True)
class Product(ReprExpr):
    factors: tuple

    def __post_init__(self):
        flat = []
        for f in self.factors:
            flat.extend(f.factors if isinstance(f, Product) else [f])
        if not flat:
            raise ValueError("empty product")
        object.__setattr__(self, "factors", tuple(flat))

    def __str__(self):
        return " x ".join(str(f) for f in self.factors)


def one(r, t=0, label=None):
    """The character nu^t of G_r (label optional)."""
    c = nu(t) if label is None else nu(t, label)
    return CharRep(r, c)


def st(r, t=0, label=None):
    c = nu(t) if label is None else nu(t, label)
    return SteinbergRep(r, c)


def gl_rank(e):
    if isinstance(e, (ZRep, LRep)):
        return e.m.degree()
    if isinstance(e, (CharRep, SteinbergRep)):
        return e.r
    if isinstance(e, Product):
        return sum(gl_rank(f) for f in e.factors)
    raise TypeError(f"not a representation expression: {e!r}")


def single_segment(e):
    """(kind, segment) when e is Z or L of one segment, else None."""
    if isinstance(e, CharRep):
        return "Z", e.segment()
    if isinstance(e, SteinbergRep):
        return "L", e.segment()
    if isinstance(e, (ZRep, LRep)) and len(e.m) == 1:
        return ("Z" if isinstance(e, ZRep) else "L"), e.m[0]
    return None


def as_character(e):
    """The FormalCharacter c when e is the one-dimensional rep c o det."""
    got = single_segment(e)
    if got is None:
        return None
    kind, s = got
    if kind == "L" and len(s) > 1:
        return None
    return FormalCharacter(s.label, HalfInt((s.b + s.e).twice_value // 2))


def as_steinberg(e):
    """(r, c) when e is St_r c, else None."""
    got = single_segment(e)
    if got is None:
        return None
    kind, s = got
    if kind == "Z" and len(s) > 1:
        return None
    return len(s), FormalCharacter(s.label, HalfInt((s.b + s.e).twice_value // 2))


def factors_of(e):
    return list(e.factors) if isinstance(e, Product) else [e]


def product_irreducible(segs, kind="Z"):
    """A product of Z(seg_i) (or of L(seg_i)) is irreducible iff no two segments are linked."""
    segs = list(segs)
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            if linked(segs[i], segs[j]):
                return False
    return True


def is_irreducible(e):
    """True when irreducibility is known, False when reducibility is known, None otherwise."""
    if not isinstance(e, Product):
        return True
    fs = e.factors
    if len(fs) == 1:
        return is_irreducible(fs[0])
    singles = [single_segment(f) for f in fs]
    if any(x is None for x in singles):
        return None
    segs = [s for k, s in singles]
    # a one-exponent segment is both Z and L of itself
    kinds_eff = {k for k, s in singles if len(s) > 1}
    if len(kinds_eff) <= 1:
        return product_irreducible(segs)
    if len(fs) == 2:
        # L(D) x Z(D') reduces exactly when D and D' are juxtaposed
        return not juxtaposed(segs[0], segs[1])
    return None


@dataclass(frozen=True)
class ReprClass:
    is_character: bool
    is_steinberg_twist: bool
    is_generic_class: bool
    is_irreducible_known: bool
    gl2_class: bool


def _square_integrable_factors(e):
    """Segments when e is a product of essentially square-integrable pieces."""
    if isinstance(e, LRep):
        return list(e.m)
    segs = []
    for f in factors_of(e):
        if isinstance(f, LRep) and len(f.m) == 1:
            segs.append(f.m[0])
        elif isinstance(f, SteinbergRep):
            segs.append(f.segment())
        elif isinstance(f, (CharRep, ZRep)) and gl_rank(f) == 1:
            segs.append(single_segment(f)[1])
        else:
            return None
    return segs


def classify(e):
    rank = gl_rank(e)
    is_char = as_character(e) is not None
    is_st = isinstance(e, SteinbergRep) or (
        isinstance(e, LRep) and len(e.m) == 1) or (rank == 1 and is_char)
    segs = _square_integrable_factors(e)
    generic = segs is not None and product_irreducible(segs)
    if is_char and rank > 1:
        generic = False
    irr = is_irreducible(e) is True
    gl2 = rank == 2 and (is_char or is_st or (
        isinstance(e, Product) and len(e.factors) == 2
        and all(gl_rank(f) == 1 for f in e.factors)) or (
        isinstance(e, (ZRep, LRep)) and len(e.m) == 2))
    return ReprClass(is_char, is_st, generic, irr, gl2)


def cuspidal_support(e):
    """Multiset of rank-one characters, as a sorted list."""
    out = []
    if isinstance(e, (ZRep, LRep)):
        segs = list(e.m)
    elif isinstance(e, (CharRep, SteinbergRep)):
        segs = [e.segment()]
    elif isinstance(e, Product):
        for f in e.factors:
            out.extend(cuspidal_support(f))
        return sorted(out, key=str)
    else:
        raise TypeError(f"not a representation expression: {e!r}")
    for s in segs:
        out.extend(FormalCharacter(s.label, x) for x in s.exponents())
    return sorted(out, key=str)


def central_character(e):
    """Central character as a character of F^x; determined by cuspidal support."""
    acc = FormalCharacter()
    for c in cuspidal_support(e):
        acc = acc * c
    return acc


def contragredient(e):
    def inv_ms(m):
        return Multisegment(Segment(-s.e, -s.b, s.label.inverse()) for s in m)

    if isinstance(e, ZRep):
        return ZRep(inv_ms(e.m))
    if isinstance(e, LRep):
        return LRep(inv_ms(e.m))
    if isinstance(e, CharRep):
        return CharRep(e.r, e.c.inverse())
    if isinstance(e, SteinbergRep):
        return SteinbergRep(e.r, e.c.inverse())
    return Product([contragredient(f) for f in e.factors])


def langlands_data(e):
    """Multisegment m with e = L(m), when e is irreducible and segment-class."""
    if isinstance(e, LRep):
        return e.m
    if isinstance(e, ZRep):
        return mw_dual(e.m)
    if isinstance(e, SteinbergRep):
        return Multisegment([e.segment()])
    if isinstance(e, CharRep):
        return mw_dual([e.segment()])
    if isinstance(e, Product):
        if is_irreducible(e) is not True:
            raise ValueError(f"{e} is not known to be irreducible")
        out = []
        for f in e.factors:
            out.extend(langlands_data(f))
        return Multisegment(out)
    raise TypeError(f"not a representation expression: {e!r}")


def same_rep(x, y):
    """Equality of irreducible representations through their Langlands data."""
    return langlands_data(x) == langlands_data(y)
