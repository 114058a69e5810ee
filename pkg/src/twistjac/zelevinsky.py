"""The Moeglin-Waldspurger algorithm for the Zelevinsky involution m -> m^t."""

from dataclasses import dataclass, field

from .core_arith import TRIVIAL, HalfInt
from .segments import Multisegment, Segment, precedes


@dataclass
class MWTrace:
    extracted: list = field(default_factory=list)
    steps: list = field(default_factory=list)  # (d, chain of indices into the multisegment at that pass)
    inputs: list = field(default_factory=list)  # the multisegment each pass started from

    def lines(self):
        out = []
        for i, (m, (d, chain), got) in enumerate(zip(self.inputs, self.steps, self.extracted)):
            picked = ", ".join(str(m[j]) for j in chain)
            out.append(f"pass {i + 1}: m = {m}; top end {d}; chain {picked} -> {got}")
        return out


def _bigger(a, b):
    # a >= b for the order: larger begin first, then larger end
    return a.b > b.b or (a.b == b.b and a.e >= b.e)


def _extract(m):
    d = max(s.e for s in m)
    # strict comparison keeps the earliest of equal candidates
    i0 = None
    for i, s in enumerate(m):
        if s.e == d and (i0 is None or not _bigger(m[i0], s)):
            i0 = i
    chain = [i0]
    step = 1
    while True:
        target = d - step
        best = None
        for i, s in enumerate(m):
            if i in chain or s.e != target or not precedes(s, m[chain[-1]]):
                continue
            if best is None or not _bigger(m[best], s):
                best = i
        if best is None:
            break
        chain.append(best)
        step += 1
    r = len(chain) - 1
    first = Segment(d - r, d, m[i0].label)
    rest = []
    for i, s in enumerate(m):
        if i in chain:
            s = s.minus()
        if s is not None:
            rest.append(s)
    return first, Multisegment(rest), (d, chain)


def mw_extract(m):
    """First segment of m^t and the residual multisegment m^-."""
    m = Multisegment(m)
    if not m:
        raise ValueError("empty multisegment")
    if len({s.label for s in m}) > 1:
        raise ValueError("mw_extract needs a single cuspidal line")
    first, rest, _ = _extract(m)
    return first, rest


def _dual_one_line(m, trace):
    out = []
    while m:
        first, rest, step = _extract(m)
        if trace is not None:
            trace.inputs.append(m)
            trace.steps.append(step)
            trace.extracted.append(first)
        out.append(first)
        m = rest
    return out


def _lines(m):
    # group by label and by exponent class mod Z
    groups = {}
    for s in m:
        groups.setdefault((str(s.label), s.b.twice_value % 2), []).append(s)
    return [Multisegment(groups[k]) for k in sorted(groups)]


def mw_dual(m, trace=None):
    """m^t, computed independently on each cuspidal line and merged."""
    out = []
    for line in _lines(Multisegment(m)):
        out.extend(_dual_one_line(line, trace))
    return Multisegment(out)


def mw_dual_explain(m):
    trace = MWTrace()
    res = mw_dual(m, trace)
    return res, trace


def lchialpha_segments(n, alpha, chi=TRIVIAL):
    """The pair {Delta_alpha, Delta} whose Langlands quotient is L_{chi,alpha}."""
    if not 1 <= alpha <= n:
        raise ValueError(f"need 1 <= alpha <= n, got alpha={alpha}, n={n}")
    lo = HalfInt(-(n - 1))
    hi = HalfInt(n - 1)
    delta = Segment(lo, hi, chi)
    return Multisegment([delta.shift(alpha), delta])


def lchialpha_expected(n, alpha, chi=TRIVIAL):
    """The closed-form three-part list for m^t of {Delta_alpha, Delta}."""
    c = HalfInt(n - 1)
    out = []
    for j in range(alpha, 1, -1):
        out.append(Segment(c + j, c + j, chi))
    for j in range(alpha, n + 1):
        out.append(Segment(-c + j - 1, -c + j, chi))
    for j in range(alpha - 2, -1, -1):
        out.append(Segment(-c + j, -c + j, chi))
    return Multisegment(out)


def mw_dual_Lchialpha(n, alpha, chi=TRIVIAL):
    got = mw_dual(lchialpha_segments(n, alpha, chi))
    want = lchialpha_expected(n, alpha, chi)
    if got != want:
        raise AssertionError(f"m^t mismatch for n={n}, alpha={alpha}: {got} vs {want}")
    return got
