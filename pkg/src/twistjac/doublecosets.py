"""Double coset representatives for S_psi \\ G_2n / P_{r,2n-r} as block permutation matrices.

A PermMatrix stores, for each column j, the row perm[j] holding its 1.  Block
matrices are described by row block sizes, column block sizes and the list of
(row block, column block) positions of the identity blocks; empty blocks are
allowed and simply vanish.
"""

from dataclasses import dataclass
from itertools import accumulate

from .jacquet import block_shapes, k_range


@dataclass(frozen=True)
class PermMatrix:
    perm: tuple

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("not a permutation")

    @property
    def size(self):
        return len(self.perm)

    @classmethod
    def identity(cls, size):
        return cls(range(size))

    def __matmul__(self, other):
        # (A B) e_j = A e_{B(j)}
        if self.size != other.size:
            raise ValueError("size mismatch")
        return PermMatrix(self.perm[other.perm[j]] for j in range(self.size))

    def inverse(self):
        inv = [0] * self.size
        for j, i in enumerate(self.perm):
            inv[i] = j
        return PermMatrix(inv)

    def entry(self, i, j):
        return 1 if self.perm[j] == i else 0

    def as_rows(self):
        return [[self.entry(i, j) for j in range(self.size)] for i in range(self.size)]

    def det(self):
        seen, sign = set(), 1
        for start in range(self.size):
            if start in seen:
                continue
            j, length = start, 0
            while j not in seen:
                seen.add(j)
                j = self.perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    def is_involution(self):
        return self @ self == PermMatrix.identity(self.size)

    def one_line(self):
        """1-based images of the basis vectors, e.g. [1 3 2 4]."""
        return "[" + " ".join(str(i + 1) for i in self.perm) + "]"

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self.as_rows())


def block_perm(row_sizes, col_sizes, placements):
    if sum(row_sizes) != sum(col_sizes):
        raise ValueError("row and column blocks have different totals")
    if any(s < 0 for s in list(row_sizes) + list(col_sizes)):
        raise ValueError("negative block size")
    r0 = [0] + list(accumulate(row_sizes))
    c0 = [0] + list(accumulate(col_sizes))
    perm = [None] * sum(col_sizes)
    for bi, bj in placements:
        if row_sizes[bi] != col_sizes[bj]:
            raise ValueError(f"block ({bi},{bj}) is not square")
        for t in range(row_sizes[bi]):
            perm[c0[bj] + t] = r0[bi] + t
    if None in perm:
        raise ValueError("identity blocks do not cover every column")
    return PermMatrix(perm)


@dataclass(frozen=True)
class CosetIndex:
    n: int
    r: int
    k: int
    l: int

    def __post_init__(self):
        kr = k_range(self.n, self.r)
        if not kr.alpha <= self.k <= kr.gamma:
            raise ValueError(f"k={self.k} outside [{kr.alpha}, {kr.gamma}]")
        if not kr.alpha <= self.l <= min(self.k, self.r - self.k):
            raise ValueError(f"l={self.l} outside [{kr.alpha}, {min(self.k, self.r - self.k)}]")

    @property
    def alpha(self):
        return max(0, self.r - self.n)

    def __str__(self):
        return f"w_({self.k},{self.l})"


def w_matrix(idx):
    n, r, k, l = idx.n, idx.r, idx.k, idx.l
    rows = (k, n - k, l, k - l, r - k - l, n - r + l)
    cols = (k, l, r - k - l, n - k, k - l, n - r + l)
    return block_perm(rows, cols, [(0, 0), (1, 3), (2, 1), (3, 4), (4, 2), (5, 5)])


def w_k(n, r, k):
    """The representative w_{k,k} that carries the whole twisted Jacquet module."""
    return w_matrix(CosetIndex(n, r, k, k))


def sigma_matrix(idx):
    n, r, k, l, a = idx.n, idx.r, idx.k, idx.l, idx.alpha
    rows = (k, n - k, a, l - a, k - l, r - k - l, l - a, n - r + a)
    cols = (k, n - k, a, k - l, l - a, l - a, r - k - l, n - r + a)
    return block_perm(rows, cols, [(0, 0), (1, 1), (2, 2), (3, 5), (4, 3), (5, 6), (6, 4), (7, 7)])


def compose_check(n, r, k, l):
    idx = CosetIndex(n, r, k, l)
    base = CosetIndex(n, r, k, idx.alpha)
    return sigma_matrix(idx) @ w_matrix(base) == w_matrix(idx)


def index_count(n, r):
    kr = k_range(n, r)
    return sum(min(k, r - k) - kr.alpha + 1 for k in range(kr.alpha, kr.gamma + 1))


def representatives(n, r):
    kr = k_range(n, r)
    return [CosetIndex(n, r, k, l)
            for k in range(kr.alpha, kr.gamma + 1)
            for l in range(kr.alpha, min(k, r - k) + 1)]


@dataclass(frozen=True)
class ShapeMetadata:
    n: int
    r: int
    k: int
    left: object   # BlockShape N(k,1) in G_r
    right: object  # BlockShape N(k,2) in G_{2n-r}

    def layout(self):
        """Block sizes of the subgroup of M_{r,2n-r}: (k, k, r-2k | r-2k, n-r+k, n-r+k)."""
        return self.left.blocks + self.right.blocks

    def character_rule(self):
        return "psi_0(tr x + tr z): x is the k x k block above the diagonal in G_r, " \
               "z the (n-r+k) square block in the corner of G_(2n-r)"

    def lines(self):
        return [f"n={self.n} r={self.r} k={self.k}",
                f"  {self.left}" + (" (trivial group)" if self.left.is_trivial() else ""),
                f"  {self.right}" + (" (trivial group)" if self.right.is_trivial() else ""),
                f"  layout {self.layout()}; character {self.character_rule()}"]


def shape_metadata(n, r, k):
    left, right = block_shapes(n, r, k)
    return ShapeMetadata(n, r, k, left, right)
