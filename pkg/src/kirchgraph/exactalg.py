"""Exact rational linear algebra for edge-vector row systems.

A row system packages an edge-vector set as a pair of integer matrices:
the row matrix ``R = [q*I_k | C]`` whose columns represent the edge
vectors, and the null matrix ``N = [C / -q*I_{n-k}]`` whose columns span
the null space of ``R``.  Vertex cuts of a Kirchhoff graph must lie in
the row space of ``R``; cycle vectors must lie in its null space.

Everything here is exact: entries are Python ints or
:class:`fractions.Fraction`, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm


class RowSystemError(ValueError):
    """Base class for invalid edge-vector input."""


class DegenerateShape(RowSystemError):
    """Basis block size k must satisfy 1 < k < n."""


class ParallelColumns(RowSystemError):
    """Some edge vector is a rational multiple of another (or zero)."""


class RankDeficient(RowSystemError):
    """The first k columns do not form a basis."""


class ZeroRowInC(RowSystemError):
    """C has an all-zero row, so no graph could be vector 2-connected."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"matrix entries must be int, Fraction or str, got {type(x)!r}")


class RationalMatrix:
    """Immutable dense matrix of Fractions, row-major."""

    __slots__ = ("data",)

    def __init__(self, rows):
        data = tuple(tuple(_frac(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise ValueError("matrix must be nonempty")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("ragged rows")
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def cols(self) -> int:
        return len(self.data[0])

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.data)

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"RationalMatrix[{body}]"


def rref(M: RationalMatrix) -> tuple[RationalMatrix, tuple[int, ...], int]:
    """Reduced row echelon form over the rationals.

    Returns ``(reduced, pivot_columns, rank)``.  Total on nonempty
    matrices; the result is the unique RREF of ``M``.
    """
    work = [list(row) for row in M.data]
    nrows, ncols = len(work), len(work[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if work[i][c] != 0), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(nrows):
            if i != r and work[i][c] != 0:
                factor = work[i][c]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return RationalMatrix(work), tuple(pivots), len(pivots)


def span_rank(vectors) -> int:
    """Rank of the rational span of integer (or rational) vectors."""
    vectors = [list(map(_frac, v)) for v in vectors]
    if not vectors:
        return 0
    return rref(RationalMatrix(vectors))[2]


@dataclass(frozen=True)
class RowSystem:
    """An edge-vector set in normalized ``R = [q*I | C]`` form.

    n        number of edge vectors
    k        rank of the spanning basis block (1 < k < n)
    q        positive integer clearing the denominators of the
             dependency coefficients
    R        k x n integer row matrix; column i represents edge vector i
    C        k x (n-k) integer dependency block, C = q * C'
    N        n x (n-k) integer null matrix [C / -q*I]
    """

    n: int
    k: int
    q: int
    R: tuple[tuple[int, ...], ...]
    C: tuple[tuple[int, ...], ...]
    N: tuple[tuple[int, ...], ...]

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        """Edge vectors as integer k-tuples (columns of R)."""
        return tuple(tuple(row[j] for row in self.R) for j in range(self.n))

    def __post_init__(self):
        # N columns as rows of N^T, precomputed for the hot membership test.
        object.__setattr__(
            self,
            "_nt",
            tuple(tuple(self.N[i][j] for i in range(self.n)) for j in range(self.n - self.k)),
        )

    def contains_in_row_space(self, x) -> bool:
        if len(x) != self.n:
            raise ValueError(f"expected length {self.n}, got {len(x)}")
        return all(sum(c * xi for c, xi in zip(col, x)) == 0 for col in self._nt)

    def contains_in_null_space(self, x) -> bool:
        if len(x) != self.n:
            raise ValueError(f"expected length {self.n}, got {len(x)}")
        return all(sum(r * xi for r, xi in zip(row, x)) == 0 for row in self.R)


def in_row_space(x, sys: RowSystem) -> bool:
    """True iff x is a rational combination of the rows of R (N^T x = 0)."""
    return sys.contains_in_row_space(x)


def in_null_space(x, sys: RowSystem) -> bool:
    """True iff R x = 0."""
    return sys.contains_in_null_space(x)


def build_row_system(edge_matrix) -> RowSystem:
    """Normalize a k x n edge-vector matrix into a RowSystem.

    The columns of ``edge_matrix`` are the edge vectors; the first k must
    be linearly independent.  An already-formed row matrix ``[q*I | C]``
    is accepted too and normalizes to itself.

    Raises DegenerateShape, ParallelColumns, RankDeficient or ZeroRowInC
    on inputs that cannot carry a vector 2-connected Kirchhoff graph.
    """
    M = edge_matrix if isinstance(edge_matrix, RationalMatrix) else RationalMatrix(edge_matrix)
    k, n = M.rows, M.cols
    if k <= 1 or k >= n:
        raise DegenerateShape(f"need 1 < k < n, got k={k}, n={n}")

    cols = [M.column(j) for j in range(n)]
    for j, col in enumerate(cols):
        if all(x == 0 for x in col):
            raise ParallelColumns(f"column {j} is zero")
    for a in range(n):
        for b in range(a + 1, n):
            u, v = cols[a], cols[b]
            # Nonzero u, v are parallel iff every 2x2 minor of [u v] vanishes.
            if all(u[i] * v[j] == u[j] * v[i] for i in range(k) for j in range(i + 1, k)):
                raise ParallelColumns(f"columns {a} and {b} are parallel")

    reduced, pivots, rank = rref(M)
    if pivots[:k] != tuple(range(k)) or rank != k:
        raise RankDeficient("first k columns are not a basis of the column space")

    cprime = [[reduced.data[i][k + j] for j in range(n - k)] for i in range(k)]
    q = lcm(*(x.denominator for row in cprime for x in row)) if n > k else 1
    C = tuple(tuple(int(x * q) for x in row) for row in cprime)
    for i, row in enumerate(C):
        if all(x == 0 for x in row):
            raise ZeroRowInC(f"row {i} of C is zero")

    R = tuple(
        tuple((q if i == j else 0) for j in range(k)) + C[i] for i in range(k)
    )
    N = C + tuple(
        tuple((-q if j == i else 0) for j in range(n - k)) for i in range(n - k)
    )
    sys = RowSystem(n=n, k=k, q=q, R=R, C=C, N=N)
    _check_invariants(sys)
    return sys


def _check_invariants(sys: RowSystem) -> None:
    # R*N must vanish entrywise; rank(R) = k and rank(N) = n - k.
    for i in range(sys.k):
        for j in range(sys.n - sys.k):
            acc = sum(sys.R[i][t] * sys.N[t][j] for t in range(sys.n))
            if acc != 0:
                raise AssertionError(f"R*N nonzero at ({i},{j})")
    if span_rank(sys.R) != sys.k:
        raise AssertionError("rank(R) != k")
    if span_rank(tuple(zip(*sys.N))) != sys.n - sys.k:
        raise AssertionError("rank(N) != n-k")


def enumerate_bounded_cuts(sys: RowSystem, bound: int) -> list[tuple[int, ...]]:
    """All integer vectors of the rational row space with sup-norm <= bound.

    An integer member x of Row(R) has x[i] = q*a[i] on the identity
    block, so the rational coefficients a live on the (1/q)-grid inside
    the box [-bound/q, bound/q]^k.  Scanning that finite grid and keeping
    the integer images is exhaustive.  Output is sorted lexicographically
    and includes the zero vector.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    q, k, n = sys.q, sys.k, sys.n
    ccols = [tuple(sys.C[i][j] for i in range(k)) for j in range(n - k)]
    out = []
    for t in product(range(-bound, bound + 1), repeat=k):
        tail = []
        for col in ccols:
            num = sum(ti * ci for ti, ci in zip(t, col))
            v, rem = divmod(num, q)
            if rem or not -bound <= v <= bound:
                break
            tail.append(v)
        else:
            out.append(t + tuple(tail))
    out.sort()
    return out
