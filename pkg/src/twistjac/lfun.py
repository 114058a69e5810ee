"""Langlands parameters of segment-class representations and adjoint L-function poles.

A parameter is a multiset of blocks Sp(a) (x) chi nu^t.  Only real poles at
positive integers matter here: L(s, Sp(a) (x) nu^t) has a single simple real
pole at s = -(t + (a-1)/2), and a block with a non-trivial label has none.
"""

from collections import Counter
from dataclasses import dataclass, field

from .core_arith import FormalCharacter, HalfInt
from .reps import gl_rank, langlands_data


@dataclass(frozen=True)
class SpehBlock:
    a: int
    c: FormalCharacter = field(compare=False)

    def __post_init__(self):
        if self.a < 1:
            raise ValueError("block dimension must be positive")

    def key(self):
        return (self.a, str(self.c.label), self.c.exp.twice_value)

    def __eq__(self, other):
        return isinstance(other, SpehBlock) and self.a == other.a and self.c == other.c

    def __hash__(self):
        return hash((self.a, self.c))

    def pole(self):
        """The real pole of L(s, block), or None when the label is non-trivial."""
        if not self.c.label.is_trivial():
            return None
        return -(self.c.exp + HalfInt(self.a - 1))

    def __str__(self):
        if self.a == 1:
            return str(self.c)
        return f"Sp({self.a})" + ("" if self.c.is_trivial() else f"*{self.c}")


class LanglandsParam(tuple):
    """Multiset of SpehBlocks in a fixed order."""

    def __new__(cls, blocks=()):
        return super().__new__(cls, sorted(blocks, key=SpehBlock.key))

    @property
    def dim(self):
        return sum(b.a for b in self)

    def counts(self):
        return Counter(self)

    def __str__(self):
        return " + ".join(str(b) for b in self) or "0"


def langlands_param(e):
    """L(D) with D = [b..e] gives Sp(e-b+1) (x) chi nu^{(b+e)/2}; Z(m) goes through m^t."""
    m = langlands_data(e)
    return LanglandsParam(
        SpehBlock(len(s), FormalCharacter(s.label, HalfInt((s.b + s.e).twice_value // 2))) for s in m)


def dual_param(p):
    return LanglandsParam(SpehBlock(b.a, b.c.inverse()) for b in p)


def tensor_blocks(x, y):
    """Sp(a) (x) Sp(b) = sum over i < min(a, b) of Sp(a+b-1-2i)."""
    c = x.c * y.c
    return [SpehBlock(x.a + y.a - 1 - 2 * i, c) for i in range(min(x.a, y.a))]


def tensor_param(p, q):
    out = []
    for x in p:
        for y in q:
            out.extend(tensor_blocks(x, y))
    return LanglandsParam(out)


def adjoint(p):
    return tensor_param(p, dual_param(p))


@dataclass
class PoleProfile:
    orders: dict
    s_max: int
    half_poles: list = field(default_factory=list)
    beyond: list = field(default_factory=list)

    def order(self, s):
        return self.orders.get(s, 0)

    def as_dict(self):
        return {s: self.orders[s] for s in sorted(self.orders) if self.orders[s]}

    def __str__(self):
        return ", ".join(f"s={s}: {o}" for s, o in self.as_dict().items()) or "no poles"


def pole_profile(p, s_max):
    if s_max < 1:
        raise ValueError("s_max must be at least 1")
    orders = {s: 0 for s in range(1, s_max + 1)}
    half, beyond = [], []
    for b in p:
        s = b.pole()
        if s is None or s <= 0:
            continue
        if not s.is_integer():
            half.append(s)
        elif int(s) <= s_max:
            orders[int(s)] += 1
        else:
            beyond.append(int(s))
    return PoleProfile(orders, s_max, sorted(half), sorted(beyond))


def trivial_adjoint_orders(k):
    """Closed form for L(s, 1_k (x) 1_k): order k-s at s = 1..k-1."""
    return {s: k - s for s in range(1, k)}


@dataclass
class ConjectureResult:
    n: int
    param: LanglandsParam
    profile: PoleProfile
    predicted_tjm_zero: bool
    kind: str = "prediction"

    def required(self):
        return {s: self.n + 1 - s for s in range(1, self.n + 1)}

    def lines(self):
        out = [f"parameter: {self.param}",
               f"adjoint poles (s = 1..{self.n}): {self.profile}",
               "required for vanishing: " + ", ".join(f"s={s}: >={o}" for s, o in self.required().items()),
               f"predicted twisted Jacquet module: {'zero' if self.predicted_tjm_zero else 'non-zero'} ({self.kind})"]
        if self.profile.half_poles:
            out.append("half-integer poles (ignored): " + ", ".join(str(h) for h in self.profile.half_poles))
        return out


def conjecture_check(e, n):
    """Vanishing predicted iff the adjoint L-function has order >= n+1-s at each s = 1..n."""
    if gl_rank(e) != 2 * n:
        raise ValueError(f"rank {gl_rank(e)} is not 2n = {2 * n}")
    p = langlands_param(e)
    prof = pole_profile(adjoint(p), n)
    zero = all(prof.order(s) >= n + 1 - s for s in range(1, n + 1))
    return ConjectureResult(n, p, prof, zero)
