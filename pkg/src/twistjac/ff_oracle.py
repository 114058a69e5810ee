"""Brute-force checks over F_2 and F_3.

Everything here is exact: matrices have entries mod p, characters of F_p take
values in Z[omega] (omega a primitive p-th root of unity), and the twisted
Jacquet dimension is the multiplicity of psi in the restriction of an induced
representation to the unipotent group, computed as a character sum.
"""

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import accumulate, product
from math import prod

from .doublecosets import representatives, w_matrix
from .jacquet import block_shapes, k_range

MAX_DIM = 4


# ------------------------------------------------------------ exact scalars

@dataclass(frozen=True)
class CycInt:
    """a + b*omega with 1 + omega + omega^2 = 0 (b stays 0 over F_2)."""
    a: int
    b: int = 0

    def __add__(self, o):
        o = _cyc(o)
        return CycInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return CycInt(-self.a, -self.b)

    def __sub__(self, o):
        return self + (-_cyc(o))

    def __mul__(self, o):
        o = _cyc(o)
        # omega^2 = -1 - omega
        bb = self.b * o.b
        return CycInt(self.a * o.a - bb, self.a * o.b + self.b * o.a - bb)

    __rmul__ = __mul__

    def is_rational(self):
        return self.b == 0


def _cyc(x):
    return x if isinstance(x, CycInt) else CycInt(int(x))


def psi0(x, p):
    """The standard additive character x -> omega^x of F_p."""
    x %= p
    if p == 2:
        return CycInt(-1 if x else 1)
    if p == 3:
        return (CycInt(1), CycInt(0, 1), CycInt(-1, -1))[x]
    raise ValueError("only p = 2, 3 are supported")


def psi0_inv(x, p):
    return psi0(-x, p)


# ------------------------------------------------------------ matrices mod p

@dataclass(frozen=True)
class FpMatrix:
    p: int
    rows: tuple

    def __post_init__(self):
        if self.p not in (2, 3):
            raise ValueError("only p = 2, 3 are supported")
        rows = tuple(tuple(x % self.p for x in r) for r in self.rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        if len(rows) > MAX_DIM:
            raise ValueError(f"size {len(rows)} exceeds {MAX_DIM}")
        object.__setattr__(self, "rows", rows)

    @property
    def m(self):
        return len(self.rows)

    @classmethod
    def identity(cls, m, p):
        return cls(p, tuple(tuple(int(i == j) for j in range(m)) for i in range(m)))

    @classmethod
    def from_perm(cls, pm, p):
        return cls(p, tuple(tuple(pm.as_rows()[i]) for i in range(pm.size)))

    def __matmul__(self, o):
        m, p = self.m, self.p
        return FpMatrix(p, tuple(tuple(sum(self.rows[i][t] * o.rows[t][j] for t in range(m)) % p
                                       for j in range(m)) for i in range(m)))

    def det(self):
        return _det(self.rows, self.p)

    def inverse(self):
        m, p = self.m, self.p
        a = [list(r) + [int(i == j) for j in range(m)] for i, r in enumerate(self.rows)]
        for c in range(m):
            piv = next((i for i in range(c, m) if a[i][c]), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            a[c], a[piv] = a[piv], a[c]
            inv = pow(a[c][c], -1, p)
            a[c] = [x * inv % p for x in a[c]]
            for i in range(m):
                if i != c and a[i][c]:
                    f = a[i][c]
                    a[i] = [(x - f * y) % p for x, y in zip(a[i], a[c])]
        return FpMatrix(p, tuple(tuple(r[m:]) for r in a))

    def block(self, r0, r1, c0, c1):
        return tuple(tuple(self.rows[i][c0:c1]) for i in range(r0, r1))

    def columns(self, c0, c1):
        return [tuple(self.rows[i][j] for i in range(self.m)) for j in range(c0, c1)]


def _det(rows, p):
    a = [list(r) for r in rows]
    m, d = len(a), 1
    for c in range(m):
        piv = next((i for i in range(c, m) if a[i][c] % p), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = -d
        d = d * a[c][c] % p
        inv = pow(a[c][c], -1, p)
        for i in range(c + 1, m):
            f = a[i][c] * inv % p
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[c])]
    return d % p


def _rref(vectors, p):
    """Reduced row echelon form of the span of the given vectors, as a tuple."""
    a = [list(v) for v in vectors]
    out_rows = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        piv = next((i for i in range(out_rows, len(a)) if a[i][c] % p), None)
        if piv is None:
            continue
        a[out_rows], a[piv] = a[piv], a[out_rows]
        inv = pow(a[out_rows][c], -1, p)
        a[out_rows] = [x * inv % p for x in a[out_rows]]
        for i in range(len(a)):
            if i != out_rows and a[i][c] % p:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[out_rows])]
        out_rows += 1
    return tuple(tuple(r) for r in a[:out_rows])


def elementary_generators(m, p):
    """Transvections I + E_ij and, for p = 3, the scaling diag(2, 1, ...)."""
    gens = []
    for i in range(m):
        for j in range(m):
            if i != j:
                gens.append(FpMatrix(p, tuple(tuple(int(a == b) + int((a, b) == (i, j)) for b in range(m))
                                              for a in range(m))))
    if p == 3:
        gens.append(FpMatrix(p, tuple(tuple((2 if a == b == 0 else int(a == b)) for b in range(m))
                                      for a in range(m))))
    return gens


def gl_order(m, p):
    return prod(p ** m - p ** i for i in range(m))


def gaussian_multinomial(composition, p):
    m = sum(composition)
    return gl_order(m, p) // (prod(gl_order(c, p) for c in composition) * p ** _unip_dim(composition))


def _unip_dim(composition):
    m = sum(composition)
    return (m * m - sum(c * c for c in composition)) // 2


# ------------------------------------------------------------ cosets and characters

def _flag_key(x, composition):
    ends = list(accumulate(composition))[:-1]
    return tuple(_rref(x.columns(0, e), x.p) for e in ends)


@lru_cache(maxsize=None)
def enumerate_cosets(composition, p):
    """Representatives x of G/P, P the standard parabolic with the given block sizes.

    Cosets are flags; they are found by a breadth-first search from the
    standard flag under left multiplication by generators of G.
    """
    composition = tuple(composition)
    m = sum(composition)
    if m > MAX_DIM:
        raise ValueError(f"GL_{m} exceeds the supported size {MAX_DIM}")
    if p not in (2, 3):
        raise ValueError("only p = 2, 3 are supported")
    if any(c <= 0 for c in composition):
        raise ValueError("block sizes must be positive")
    start = FpMatrix.identity(m, p)
    seen = {_flag_key(start, composition): start}
    queue = deque([start])
    gens = elementary_generators(m, p)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g @ x
            key = _flag_key(y, composition)
            if key not in seen:
                seen[key] = y
                queue.append(y)
    return tuple(seen.values())


LEVI_CHARS = ("1", "sgn")


def levi_char_value(name, d, p):
    """Character of F_p^x evaluated at a determinant."""
    if name == "1":
        return 1
    if name == "sgn":
        if p != 3:
            raise ValueError("the quadratic character is only used for p = 3")
        return 1 if d == 1 else -1
    raise ValueError(f"unknown Levi character {name!r}")


@dataclass(frozen=True)
class InducedCharSpec:
    composition: tuple
    levi_character: tuple = None

    def __post_init__(self):
        comp = tuple(int(c) for c in self.composition)
        object.__setattr__(self, "composition", comp)
        chars = self.levi_character or ("1",) * len(comp)
        object.__setattr__(self, "levi_character", tuple(chars))
        if len(self.levi_character) != len(comp):
            raise ValueError("one Levi character per block is needed")
        for c in self.levi_character:
            if c not in LEVI_CHARS:
                raise ValueError(f"unknown Levi character {c!r}")

    @property
    def total(self):
        return sum(self.composition)


class _Induced:
    """Precomputed coset data for fast character evaluation."""

    def __init__(self, spec, p):
        self.spec, self.p = spec, p
        self.reps = [(x, x.inverse()) for x in enumerate_cosets(spec.composition, p)]
        self.starts = [0] + list(accumulate(spec.composition))

    def value(self, g):
        acc = 0
        s, p = self.starts, self.p
        comp = self.spec.composition
        nb = len(comp)
        for x, xi in self.reps:
            y = _raw_mul(_raw_mul(xi.rows, g.rows, p), x.rows, p)
            if any(y[i][j] for b in range(nb) for i in range(s[b + 1], len(y))
                   for j in range(s[b], s[b + 1])):
                continue
            v = 1
            for b, name in enumerate(self.spec.levi_character):
                if name != "1":
                    blk = tuple(tuple(y[i][s[b]:s[b + 1]]) for i in range(s[b], s[b + 1]))
                    v *= levi_char_value(name, _det(blk, p), p)
            acc += v
        return acc


def _raw_mul(a, b, p):
    bt = list(zip(*b))
    return [[sum(u * v for u, v in zip(row, col)) % p for col in bt] for row in a]


_induced_cache = {}


def _induced(spec, p):
    key = (spec, p)
    if key not in _induced_cache:
        _induced_cache[key] = _Induced(spec, p)
    return _induced_cache[key]


def induced_character(spec, g):
    """Theta(g) = sum over cosets xP fixed by g of the Levi character at x^-1 g x."""
    if g.m != spec.total:
        raise ValueError("size mismatch")
    return CycInt(_induced(spec, g.p).value(g))


# ------------------------------------------------------------ virtual representations

@dataclass(frozen=True)
class VirtualRep:
    """Integer combination of induced representations of one GL_m."""
    terms: tuple  # ((coef, InducedCharSpec), ...)

    @property
    def total(self):
        return self.terms[0][1].total

    def character(self, g):
        return sum((c * induced_character(s, g) for c, s in self.terms), CycInt(0))

    def dim(self, p):
        one = FpMatrix.identity(self.total, p)
        return self.character(one).a


def steinberg2(char="1"):
    """St of GL_2(F_p) twisted by char o det: Ind_B(char x char) minus char o det."""
    return VirtualRep(((1, InducedCharSpec((1, 1), (char, char))),
                       (-1, InducedCharSpec((2,), (char,)))))


def character_rep(m, char="1"):
    return VirtualRep(((1, InducedCharSpec((m,), (char,))),))


def parse_block(text, m):
    """'1', 'sgn', 'st' or 'st*sgn' as a representation of GL_m."""
    t = text.strip()
    if t in LEVI_CHARS:
        return character_rep(m, t)
    if t in ("st", "st*1", "st*sgn"):
        if m != 2:
            raise ValueError("the Steinberg block is only available on GL_2")
        return steinberg2("sgn" if t.endswith("sgn") else "1")
    raise ValueError(f"unknown block {text!r}; use 1, sgn, st or st*sgn")


def induce_pair(rho1, rho2):
    """rho_1 x rho_2 in stages: products of the constituent inducing data."""
    terms = []
    for c1, s1 in rho1.terms:
        for c2, s2 in rho2.terms:
            terms.append((c1 * c2, InducedCharSpec(s1.composition + s2.composition,
                                                   s1.levi_character + s2.levi_character)))
    return VirtualRep(tuple(terms))


# ------------------------------------------------------------ twisted Jacquet dimensions

@dataclass(frozen=True)
class UnipotentChar:
    """Unipotent group given by its free entries, with character psi_0(sum of traced entries)."""
    m: int
    free: tuple
    traced: tuple

    def elements(self, p):
        for vals in product(range(p), repeat=len(self.free)):
            rows = [[int(i == j) for j in range(self.m)] for i in range(self.m)]
            for (i, j), v in zip(self.free, vals):
                rows[i][j] = v
            t = sum(v for (ij, v) in zip(self.free, vals) if ij in self.traced)
            yield FpMatrix(p, tuple(tuple(r) for r in rows)), t

    def order(self, p):
        return p ** len(self.free)


def siegel_unipotent(n):
    """N in G_2n: the n x n upper-right block, psi_0 of its trace."""
    free = tuple((i, n + j) for i in range(n) for j in range(n))
    traced = tuple((i, n + i) for i in range(n))
    return UnipotentChar(2 * n, free, traced)


def shape_unipotent(shape):
    """The block groups N(k,1) in G_r and N(k,2) in G_(2n-r)."""
    b = shape.blocks
    s = [0] + list(accumulate(b))
    if shape.side == 1:
        # rows of block 0 against blocks 1 (x) and 2 (y); psi on x
        free = tuple((i, j) for i in range(s[0], s[1]) for j in range(s[1], s[3]))
        traced = tuple((i, s[1] + i) for i in range(b[0]))
    else:
        # blocks 0 and 1 against block 2 (w and z); psi on z
        free = tuple((i, j) for i in range(s[0], s[2]) for j in range(s[2], s[3]))
        traced = tuple((s[1] + i, s[2] + i) for i in range(b[2]))
    return UnipotentChar(shape.rank, free, traced)


def twisted_dim(rep, unip, p):
    """(1/|U|) sum over u in U of psi(u)^-1 Theta(u), which must be a non-negative integer."""
    if unip.m != rep.total:
        raise ValueError("size mismatch")
    acc = CycInt(0)
    for u, t in unip.elements(p):
        acc = acc + psi0_inv(t, p) * rep.character(u)
    order = unip.order(p)
    if not acc.is_rational() or acc.a % order or acc.a < 0:
        raise ArithmeticError(f"character sum {acc} is not a non-negative multiple of {order}")
    return acc.a // order


def _check_small(n, p):
    if 2 * n > MAX_DIM:
        raise ValueError(f"2n = {2 * n} exceeds {MAX_DIM}")
    if p not in (2, 3):
        raise ValueError("only p = 2, 3 are supported")


def tjm_dim_bruteforce(n, r, rho1, rho2, p):
    _check_small(n, p)
    k_range(n, r)
    return twisted_dim(induce_pair(rho1, rho2), siegel_unipotent(n), p)


@dataclass
class FormulaTerm:
    k: int
    index: int
    left: int
    right: int

    @property
    def value(self):
        return self.index * self.left * self.right


def tjm_dim_formula(n, r, rho1, rho2, p, terms=None):
    """Sum over k of [G_n : P_(k, r-2k, n-r+k)] times the two block dimensions."""
    _check_small(n, p)
    kr = k_range(n, r)
    total = 0
    for k in range(kr.alpha, kr.beta + 1):
        s1, s2 = block_shapes(n, r, k)
        index = gaussian_multinomial([c for c in (k, r - 2 * k, n - r + k) if c], p)
        d1 = twisted_dim(rho1, shape_unipotent(s1), p)
        d2 = twisted_dim(rho2, shape_unipotent(s2), p)
        if terms is not None:
            terms.append(FormulaTerm(k, index, d1, d2))
        total += index * d1 * d2
    return total


# ------------------------------------------------------------ double cosets of GL_4(F_2)

def _f2_encode(rows):
    return sum(bit << (4 * i + j) for i, r in enumerate(rows) for j, bit in enumerate(r))


def _f2_rows(code, m):
    return [[(code >> (m * i + j)) & 1 for j in range(m)] for i in range(m)]


def _block_diag_gens(sizes, p):
    m = sum(sizes)
    gens = []
    off = 0
    for s in sizes:
        for g in elementary_generators(s, p) if s > 1 else ([] if p == 2 else [FpMatrix(p, ((2,),))]):
            rows = [[int(i == j) for j in range(m)] for i in range(m)]
            for i in range(s):
                for j in range(s):
                    rows[off + i][off + j] = g.rows[i][j]
            gens.append(FpMatrix(p, tuple(tuple(r) for r in rows)))
        off += s
    return gens


def _upper_block_gens(sizes, p):
    """Elementary matrices in the unipotent radical of the parabolic with two blocks."""
    a, b = sizes
    m = a + b
    return [FpMatrix(p, tuple(tuple(int(x == y) + int((x, y) == (i, a + j)) for y in range(m)) for x in range(m)))
            for i in range(a) for j in range(b)]


def stabilizer_generators(n, p):
    """S_psi = diagonal GL_n times N inside the (n, n) parabolic."""
    m = 2 * n
    gens = []
    for g in elementary_generators(n, p) if n > 1 else ([] if p == 2 else [FpMatrix(p, ((2,),))]):
        rows = [[0] * m for _ in range(m)]
        for i in range(n):
            for j in range(n):
                rows[i][j] = rows[n + i][n + j] = g.rows[i][j]
        gens.append(FpMatrix(p, tuple(tuple(r) for r in rows)))
    return gens + _upper_block_gens((n, n), p)


def parabolic_generators(r, m, p):
    return _block_diag_gens((r, m - r), p) + _upper_block_gens((r, m - r), p)


@dataclass
class CosetPartition:
    n: int
    r: int
    p: int
    cells: list = field(default_factory=list)  # sizes
    rep_cells: dict = field(default_factory=dict)  # (k, l) -> cell number

    @property
    def count(self):
        return len(self.cells)

    def lines(self):
        out = [f"GL_{2 * self.n}(F_{self.p}), r = {self.r}: {self.count} double cosets, "
               f"{sum(self.cells)} elements"]
        by_cell = {v: k for k, v in self.rep_cells.items()}
        for i, size in enumerate(self.cells):
            kl = by_cell.get(i)
            label = f"w_({kl[0]},{kl[1]})" if kl else "no representative"
            out.append(f"  cell {i}: {size} elements, contains {label}")
        return out


def _all_gl_f2(m):
    # rows as bit patterns; keep those whose rows are independent
    out = []
    for rows in product(range(1, 1 << m), repeat=m):
        span = {0}
        ok = True
        for v in rows:
            if v in span:
                ok = False
                break
            span |= {s ^ v for s in span}
        if ok:
            out.append(rows)
    return out


def double_coset_partition(n, r, p=2):
    """Orbits of S_psi x P_(r,2n-r) on G_2n acting by g -> s g q^-1, by breadth-first search."""
    if p != 2 or n != 2:
        raise ValueError("the partition is only run for GL_4(F_2)")
    m = 2 * n
    k_range(n, r)

    def enc(mat):
        return _f2_encode(mat.rows)

    elements = []
    for rows in _all_gl_f2(m):
        elements.append(tuple(tuple((v >> (m - 1 - j)) & 1 for j in range(m)) for v in rows))
    assert len(elements) == gl_order(m, 2)
    cell_of = {}
    left = stabilizer_generators(n, p)
    right = parabolic_generators(r, m, p)
    cells = []
    for rows in elements:
        code = _f2_encode(rows)
        if code in cell_of:
            continue
        cid = len(cells)
        cell_of[code] = cid
        queue = deque([FpMatrix(p, rows)])
        size = 1
        while queue:
            g = queue.popleft()
            for h in [s @ g for s in left] + [g @ q for q in right]:
                c = enc(h)
                if c not in cell_of:
                    cell_of[c] = cid
                    size += 1
                    queue.append(h)
        cells.append(size)
    part = CosetPartition(n, r, p, cells)
    for idx in representatives(n, r):
        part.rep_cells[(idx.k, idx.l)] = cell_of[enc(FpMatrix.from_perm(w_matrix(idx), p))]
    hit = sorted(part.rep_cells.values())
    if len(cells) != len(part.rep_cells) or hit != list(range(len(cells))):
        raise AssertionError(f"representatives do not meet each cell exactly once: cells={cells}, "
                             f"w cells={part.rep_cells}")
    return part
