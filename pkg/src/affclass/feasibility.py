"""Exact rational and integer feasibility for systems of linear inequalities.

Inequalities are pairs ``(a, b)`` meaning ``a . x >= b`` with integer ``a``
and rational ``b``. Rational questions are answered by Fourier-Motzkin
elimination over ``Fraction``; integer questions reduce to a bounded
enumeration after splitting off the directions in which the polyhedron is
unbounded (see :func:`first_integer_point`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, lcm
from typing import Sequence

from .errors import DimensionMismatch
from .lattice import IntegerMatrix, Vector, content, dot, smith_normal_form, solve_integer_system

Row = tuple[tuple[int, ...], Fraction]


def _normalize(a: Sequence[int], b) -> Row:
    g = content(a)
    if g > 1:
        return tuple(x // g for x in a), Fraction(b) / g
    return tuple(a), Fraction(b)


def _prune(rows: list[Row]) -> list[Row] | None:
    """Drop constant rows (None if one is violated); keep the tightest
    right-hand side per direction."""
    best: dict[tuple[int, ...], Fraction] = {}
    for a, b in rows:
        if not any(a):
            if b > 0:
                return None
            continue
        if a not in best or b > best[a]:
            best[a] = b
    out = sorted(best.items())
    # opposite directions a.x >= b, -a.x >= c need b <= -c
    for a, b in out:
        neg = tuple(-x for x in a)
        if neg in best and b > -best[neg]:
            return None
    return out


def _eliminate(rows: list[Row], j: int) -> list[Row] | None:
    pos = [r for r in rows if r[0][j] > 0]
    neg = [r for r in rows if r[0][j] < 0]
    out = [r for r in rows if r[0][j] == 0]
    for ap, bp in pos:
        for an, bn in neg:
            cp, cn = -an[j], ap[j]
            out.append(_normalize([cp * x + cn * y for x, y in zip(ap, an)], cp * bp + cn * bn))
    return _prune(out)


def _interval(rows: list[Row], j: int) -> tuple[Fraction | None, Fraction | None]:
    """Bounds on ``x_j`` from rows that involve only ``x_j``."""
    lo = hi = None
    for a, b in rows:
        c = a[j]
        if c > 0:
            v = b / c
            lo = v if lo is None or v > lo else lo
        elif c < 0:
            v = b / c
            hi = v if hi is None or v < hi else hi
    return lo, hi


def _pick(lo: Fraction | None, hi: Fraction | None) -> Fraction:
    if (lo is None or lo <= 0) and (hi is None or hi >= 0):
        return Fraction(0)
    if lo is None:
        return Fraction(floor(hi))
    if hi is None:
        return Fraction(ceil(lo))
    return Fraction(ceil(lo)) if ceil(lo) <= hi else lo


def _rows(G: Sequence[Sequence[int]], h: Sequence) -> list[Row] | None:
    return _prune([_normalize(a, b) for a, b in zip(G, h)])


def rational_point(G: Sequence[Sequence[int]], h: Sequence, nvars: int) -> tuple[Fraction, ...] | None:
    """A rational ``x`` with ``G x >= h``, or None if the system is infeasible."""
    rows = _rows(G, h)
    if rows is None:
        return None
    if nvars == 0:
        return ()
    levels = [rows]
    for j in range(nvars - 1, 0, -1):
        rows = _eliminate(rows, j)
        if rows is None:
            return None
        levels.append(rows)
    x: list[Fraction] = []
    for j, level in enumerate(reversed(levels)):
        # substitute the already chosen x_0..x_{j-1}; only x_j remains free
        sub = [((0,) * j + a[j:j + 1], b - sum(c * v for c, v in zip(a, x))) for a, b in level]
        lo, hi = _interval(sub, j)
        if lo is not None and hi is not None and lo > hi:
            return None
        x.append(_pick(lo, hi))
    return tuple(x)


def projection_interval(G, h, nvars: int) -> tuple[Fraction | None, Fraction | None] | None:
    """Exact range of ``x_0`` over ``{x : G x >= h}``; None when empty."""
    rows = _rows(G, h)
    if rows is None:
        return None
    for j in range(nvars - 1, 0, -1):
        rows = _eliminate(rows, j)
        if rows is None:
            return None
    lo, hi = _interval(rows, 0)
    if lo is not None and hi is not None and lo > hi:
        return None
    return lo, hi


def _bounded_first_point(G, h, nvars: int) -> Vector | None:
    """Lexicographically least integer point of a bounded polyhedron."""
    if nvars == 0:
        return () if all(b <= 0 for b in h) else None
    iv = projection_interval(G, h, nvars)
    if iv is None:
        return None
    lo, hi = iv
    if lo is None or hi is None:
        raise RuntimeError("enumeration reached an unbounded direction")
    rest_G = [a[1:] for a in G]
    for v in range(ceil(lo), floor(hi) + 1):
        sub = _bounded_first_point(rest_G, [b - a[0] * v for a, b in zip(G, h)], nvars - 1)
        if sub is not None:
            return (v,) + sub
    return None


def _integral(w: Sequence[Fraction]) -> list[int]:
    d = lcm(*(x.denominator for x in w)) if w else 1
    v = [int(x * d) for x in w]
    g = content(v)
    return [x // g for x in v] if g > 1 else v


def first_integer_point(G: Sequence[Sequence[int]], h: Sequence[int], nvars: int) -> Vector | None:
    """An integer ``t`` with ``G t >= h``, or None if none exists.

    Let ``C = {w : G w >= 0}`` be the recession cone and ``I`` the rows that
    vanish on all of ``C``. There is ``w*`` in ``C`` with ``G_i w* >= 1`` for
    every row outside ``I``. Rows in ``I`` are bounded on the polyhedron, so in
    coordinates adapted to ``ker G_I`` the complementary part ``s`` ranges over
    a polytope; for any feasible ``s`` the remaining rows are satisfied by a
    large multiple of ``w*``. Hence only the polytope needs enumerating.
    """
    G = [tuple(int(x) for x in a) for a in G]
    h = [int(b) for b in h]
    for a in G:
        if len(a) != nvars:
            raise DimensionMismatch("inequality row of wrong length")
    if rational_point(G, h, nvars) is None:
        return None
    m = len(G)
    zero = [0] * m
    w_star = [Fraction(0)] * nvars
    implicit = []
    for i in range(m):
        if dot(G[i], w_star) > 0:
            continue
        w = rational_point(G + [G[i]], zero + [1], nvars)
        if w is None:
            implicit.append(i)
        else:
            w_star = [a + b for a, b in zip(w_star, w)]
    w_int = _integral(w_star)

    if implicit:
        G_I = IntegerMatrix.from_rows([G[i] for i in implicit], nvars)
        snf = smith_normal_form(G_I)
        r = snf.rank
        V = snf.V
    else:
        r = 0
        V = IntegerMatrix.identity(nvars)
    # t = V (s, u); the implicit rows only see s
    G_new = [V.transpose().apply(a) for a in G]
    s = _bounded_first_point([G_new[i][:r] for i in implicit], [h[i] for i in implicit], r)
    if s is None:
        return None
    w_coords = solve_integer_system(V, w_int).base_point
    w_u = w_coords[r:]
    lam = 0
    for i in range(m):
        if i in implicit:
            continue
        slack = h[i] - dot(G_new[i][:r], s)
        step = dot(G_new[i][r:], w_u)
        lam = max(lam, -((-slack) // step))
    return V.apply(tuple(s) + tuple(lam * x for x in w_u))


@dataclass(frozen=True)
class FeasibilityQuery:
    """Integer system ``E x = e``, ``S x > s``, ``N x >= n`` in ``Z^rank``.

    Strict rows are tightened to ``S x >= s + 1``, exact over the integers.
    """

    rank: int
    equalities: tuple[tuple[Vector, int], ...] = ()
    strict: tuple[tuple[Vector, int], ...] = ()
    nonneg: tuple[tuple[Vector, int], ...] = field(default=())

    def __post_init__(self):
        for group in (self.equalities, self.strict, self.nonneg):
            for a, _ in group:
                if len(a) != self.rank:
                    raise DimensionMismatch(
                        f"row {a} does not match ambient rank {self.rank}")

    def satisfied_by(self, x: Sequence[int]) -> bool:
        return (all(dot(a, x) == b for a, b in self.equalities)
                and all(dot(a, x) > b for a, b in self.strict)
                and all(dot(a, x) >= b for a, b in self.nonneg))


def integer_feasible(q: FeasibilityQuery) -> Vector | None:
    """A witness ``x`` for the query, or None if it is infeasible.

    Equalities are solved first and the inequalities pulled back to the
    parameters of the solution lattice.
    """
    d = q.rank
    if q.equalities:
        E = IntegerMatrix.from_rows([a for a, _ in q.equalities], d)
        L = solve_integer_system(E, [b for _, b in q.equalities])
        if L.is_empty:
            return None
        x0, basis = L.base_point, L.basis
    else:
        x0 = (0,) * d
        basis = tuple(IntegerMatrix.identity(d).rows())
    ineq = [(a, b + 1) for a, b in q.strict] + list(q.nonneg)
    G = [tuple(dot(a, v) for v in basis) for a, _ in ineq]
    h = [b - dot(a, x0) for a, b in ineq]
    t = first_integer_point(G, h, len(basis))
    if t is None:
        return None
    x = list(x0)
    for c, v in zip(t, basis):
        for i, vi in enumerate(v):
            x[i] += c * vi
    return tuple(x)
