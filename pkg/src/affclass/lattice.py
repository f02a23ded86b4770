"""Exact integer linear algebra: Hermite/Smith normal forms, cokernels and
integer linear systems.

Everything here works on Python ints, so there is no overflow and no floating
point. Matrices are small (desk scale), so the algorithms favour clarity and
determinism over asymptotic speed.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionMismatch

Vector = tuple[int, ...]


@dataclass(frozen=True)
class IntegerMatrix:
    """An immutable ``nrows x ncols`` integer matrix stored row-major."""

    nrows: int
    ncols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0:
            raise DimensionMismatch("matrix dimensions must be nonnegative")
        if len(self.entries) != self.nrows * self.ncols:
            raise DimensionMismatch(
                f"{len(self.entries)} entries for a {self.nrows}x{self.ncols} matrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: int | None = None) -> IntegerMatrix:
        rows = [tuple(int(x) for x in r) for r in rows]
        if ncols is None:
            if not rows:
                raise DimensionMismatch("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged rows")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, cols: Iterable[Sequence[int]], nrows: int | None = None) -> IntegerMatrix:
        cols = [tuple(c) for c in cols]
        if nrows is None:
            if not cols:
                raise DimensionMismatch("nrows is required for a matrix without columns")
            nrows = len(cols[0])
        return cls.from_rows(zip(*cols), len(cols)) if nrows else cls(0, len(cols), ())

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> IntegerMatrix:
        return cls(nrows, ncols, (0,) * (nrows * ncols))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.ncols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.ncols:(i + 1) * self.ncols]

    def column(self, j: int) -> Vector:
        return self.entries[j::self.ncols] if self.ncols else ()

    def rows(self) -> list[Vector]:
        return [self.row(i) for i in range(self.nrows)]

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows()]

    def transpose(self) -> IntegerMatrix:
        return IntegerMatrix.from_rows(self.columns(), self.nrows)

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.ncols != other.nrows:
            raise DimensionMismatch(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        cols = other.columns()
        return IntegerMatrix.from_rows(
            ([dot(r, c) for c in cols] for r in self.rows()), other.ncols)

    def apply(self, v: Sequence[int]) -> Vector:
        """Matrix-vector product ``self @ v``."""
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.ncols} columns")
        return tuple(dot(r, v) for r in self.rows())

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __str__(self):
        return "[" + ", ".join(str(list(r)) for r in self.rows()) + "]"


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def content(v: Iterable[int]) -> int:
    """gcd of the entries (0 for the zero vector)."""
    return reduce(gcd, v, 0)


def primitive(v: Sequence[int]) -> Vector:
    g = content(v)
    return tuple(v) if g in (0, 1) else tuple(x // g for x in v)


def determinant(A: IntegerMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if not A.is_square():
        raise DimensionMismatch("determinant of a non-square matrix")
    n = A.nrows
    M = A.to_lists()
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1


def rank(A: IntegerMatrix) -> int:
    H, _ = hermite_normal_form(A)
    return sum(1 for r in H.rows() if any(r))


# --- row operations on list-of-lists working copies -------------------------

def _swap_rows(M, i, j):
    M[i], M[j] = M[j], M[i]


def _add_row(M, src, dst, q):
    """row[dst] += q * row[src]"""
    if q:
        M[dst] = [a + q * b for a, b in zip(M[dst], M[src])]


def _swap_cols(M, i, j):
    for r in M:
        r[i], r[j] = r[j], r[i]


def _add_col(M, src, dst, q):
    """col[dst] += q * col[src]"""
    if q:
        for r in M:
            r[dst] += q * r[src]


def _eye(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _mat(M, nrows, ncols) -> IntegerMatrix:
    return IntegerMatrix(nrows, ncols, tuple(x for r in M for x in r))


def hermite_normal_form(A: IntegerMatrix) -> tuple[IntegerMatrix, IntegerMatrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U @ A == H``, ``U`` unimodular, ``H`` in row
    echelon form with positive pivots and the entries above each pivot reduced
    into ``[0, pivot)``.
    """
    m, n = A.nrows, A.ncols
    H = A.to_lists()
    U = _eye(m)
    pr = 0
    for j in range(n):
        if pr == m:
            break
        while True:
            nz = [i for i in range(pr, m) if H[i][j] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: (abs(H[i][j]), i))
            if p != pr:
                _swap_rows(H, p, pr)
                _swap_rows(U, p, pr)
            for i in range(pr + 1, m):
                if H[i][j]:
                    q = -(H[i][j] // H[pr][j])
                    _add_row(H, pr, i, q)
                    _add_row(U, pr, i, q)
            if all(H[i][j] == 0 for i in range(pr + 1, m)):
                break
        if H[pr][j] == 0:
            continue
        if H[pr][j] < 0:
            H[pr] = [-x for x in H[pr]]
            U[pr] = [-x for x in U[pr]]
        for i in range(pr):
            q = -(H[i][j] // H[pr][j])
            _add_row(H, pr, i, q)
            _add_row(U, pr, i, q)
        pr += 1
    return _mat(H, m, n), _mat(U, m, m)


@dataclass(frozen=True)
class SmithForm:
    """``U @ A @ V == S`` with ``S`` diagonal and ``U``, ``V`` unimodular."""

    U: IntegerMatrix
    S: IntegerMatrix
    V: IntegerMatrix
    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for s in self.invariant_factors if s)


def smith_normal_form(A: IntegerMatrix) -> SmithForm:
    """Smith normal form with transforms.

    The pivot is always the entry of smallest nonzero absolute value in the
    remaining block, ties going to the lowest ``(row, col)``; this makes the
    transforms reproducible.
    """
    m, n = A.nrows, A.ncols
    S = A.to_lists()
    U, V = _eye(m), _eye(n)
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                a = abs(S[i][j])
                if a and (best is None or a < best[0]):
                    best = (a, i, j)
        if best is None:
            break
        _, i, j = best
        if i != t:
            _swap_rows(S, i, t)
            _swap_rows(U, i, t)
        if j != t:
            _swap_cols(S, j, t)
            _swap_cols(V, j, t)
        p = S[t][t]
        clean = True
        for i in range(t + 1, m):
            if S[i][t]:
                q = -(S[i][t] // p)
                _add_row(S, t, i, q)
                _add_row(U, t, i, q)
                clean = clean and S[i][t] == 0
        for j in range(t + 1, n):
            if S[t][j]:
                q = -(S[t][j] // p)
                _add_col(S, t, j, q)
                _add_col(V, t, j, q)
                clean = clean and S[t][j] == 0
        if not clean:
            continue  # a smaller remainder exists; pick a new pivot
        bad = next((i for i in range(t + 1, m)
                    for j in range(t + 1, n) if S[i][j] % p), None)
        if bad is not None:
            _add_row(S, bad, t, 1)
            _add_row(U, bad, t, 1)
            continue
        if p < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    factors = tuple(S[i][i] for i in range(min(m, n)))
    return SmithForm(_mat(U, m, m), _mat(S, m, n), _mat(V, n, n), factors)


@dataclass(frozen=True)
class FGAbelianGroup:
    """``Z^free_rank + Z/t_1 + ... + Z/t_k`` with ``t_1 | t_2 | ... | t_k``."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(t) for t in self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for t in self.torsion:
            if t < 2:
                raise ValueError(f"torsion invariant {t} must be at least 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion invariants {a}, {b} break the divisibility chain")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_torsion_free(self) -> bool:
        return not self.torsion

    @property
    def torsion_order(self) -> int:
        return reduce(lambda a, b: a * b, self.torsion, 1)

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def cokernel(A: IntegerMatrix) -> FGAbelianGroup:
    """``Z^nrows / image(A)`` where ``A`` maps ``Z^ncols -> Z^nrows``."""
    snf = smith_normal_form(A)
    return FGAbelianGroup(A.nrows - snf.rank,
                          tuple(s for s in snf.invariant_factors if s > 1))


def torsion_free_quotient(G: FGAbelianGroup) -> FGAbelianGroup:
    return FGAbelianGroup(G.free_rank)


def class_coordinates(A: IntegerMatrix, v: Sequence[int]) -> tuple[SmithForm, Vector]:
    """Coordinates of ``v`` in the Smith basis of ``coker(A)``.

    Entry ``i`` lives in ``Z/s_i`` for ``i < rank`` and in ``Z`` beyond.
    """
    if len(v) != A.nrows:
        raise DimensionMismatch(f"vector of length {len(v)} for a map into Z^{A.nrows}")
    snf = smith_normal_form(A)
    return snf, snf.U.apply(v)


def class_order(A: IntegerMatrix, v: Sequence[int]) -> int | None:
    """Order of the class of ``v`` in ``coker(A)``; ``None`` if infinite."""
    snf, w = class_coordinates(A, v)
    r = snf.rank
    if any(w[r:]):
        return None
    order = 1
    for s, x in zip(snf.invariant_factors[:r], w):
        k = s // gcd(s, x)
        order = order * k // gcd(order, k)
    return order


def is_torsion_class(A: IntegerMatrix, v: Sequence[int]) -> bool:
    """True iff some positive multiple of ``v`` lies in the image of ``A``."""
    return class_order(A, v) is not None


@dataclass(frozen=True)
class AffineLattice:
    """Integer solution set ``base_point + span_Z(basis)``, or empty.

    The basis is kept in Hermite normal form and the base point reduced
    against it, so equal solution sets compare equal.
    """

    base_point: Vector | None
    basis: tuple[Vector, ...] = ()

    @property
    def is_empty(self) -> bool:
        return self.base_point is None

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def point(self, coeffs: Sequence[int]) -> Vector:
        if self.base_point is None:
            raise ValueError("empty lattice has no points")
        if len(coeffs) != len(self.basis):
            raise DimensionMismatch("wrong number of coefficients")
        x = list(self.base_point)
        for c, b in zip(coeffs, self.basis):
            for i, bi in enumerate(b):
                x[i] += c * bi
        return tuple(x)

    def __contains__(self, x) -> bool:
        if self.base_point is None:
            return False
        diff = [a - b for a, b in zip(x, self.base_point)]
        if not self.basis:
            return not any(diff)
        A = IntegerMatrix.from_columns(self.basis, len(diff))
        return not solve_integer_system(A, diff).is_empty


def _canonical_lattice(base: Sequence[int], basis: Sequence[Sequence[int]]) -> AffineLattice:
    n = len(base)
    if basis:
        H, _ = hermite_normal_form(IntegerMatrix.from_rows(basis, n))
        rows = [r for r in H.rows() if any(r)]
    else:
        rows = []
    x = list(base)
    for r in rows:
        p = next(j for j, a in enumerate(r) if a)
        q = x[p] // r[p]
        if q:
            x = [a - q * b for a, b in zip(x, r)]
    return AffineLattice(tuple(x), tuple(rows))


def solve_integer_system(A: IntegerMatrix, b: Sequence[int]) -> AffineLattice:
    """All integer ``x`` with ``A @ x == b``; an empty lattice if there are none."""
    if len(b) != A.nrows:
        raise DimensionMismatch(f"right-hand side of length {len(b)} for {A.nrows} rows")
    snf = smith_normal_form(A)
    c = snf.U.apply(b)
    r = snf.rank
    y = [0] * A.ncols
    for i in range(r):
        s = snf.invariant_factors[i]
        if c[i] % s:
            return AffineLattice(None)
        y[i] = c[i] // s
    if any(c[r:]):
        return AffineLattice(None)
    x0 = snf.V.apply(y)
    kernel = [snf.V.column(j) for j in range(r, A.ncols)]
    return _canonical_lattice(x0, kernel)


def kernel_basis(A: IntegerMatrix) -> list[Vector]:
    """A basis of the integer kernel of ``A`` (saturated, in Hermite form)."""
    return list(solve_integer_system(A, (0,) * A.nrows).basis)
