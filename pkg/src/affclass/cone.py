"""Pointed full-dimensional rational polyhedral cones.

A cone is stored by both descriptions: its primitive extreme rays and its
primitive inner facet normals, each sorted lexicographically. The facet order
is the one divisors are indexed by everywhere else in the package.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotFullDimensional, NotPointed, ZeroRay
from .feasibility import FeasibilityQuery, integer_feasible, rational_point
from .lattice import IntegerMatrix, Vector, determinant, dot, primitive, rank

__all__ = [
    "RationalCone",
    "FeasibilityQuery",
    "cone_from_generators",
    "cone_from_normals",
    "valuation_matrix",
    "integer_feasible",
]


@dataclass(frozen=True)
class RationalCone:
    ambient_rank: int
    generators: tuple[Vector, ...]
    facet_normals: tuple[Vector, ...]

    def __post_init__(self):
        for n in self.facet_normals:
            for g in self.generators:
                if dot(n, g) < 0:
                    raise ValueError(f"facet normal {n} is negative on generator {g}")

    @property
    def num_facets(self) -> int:
        return len(self.facet_normals)

    def contains(self, v: Sequence[int]) -> bool:
        return all(dot(n, v) >= 0 for n in self.facet_normals)

    def to_json(self) -> dict:
        return {
            "ambient_rank": self.ambient_rank,
            "generators": [list(g) for g in self.generators],
            "facet_normals": [list(n) for n in self.facet_normals],
        }


def _hyperplane_normal(vectors: Sequence[Vector], d: int) -> Vector:
    """Primitive normal of the hyperplane spanned by ``d - 1`` vectors.

    Generalized cross product: the j-th entry is the signed maximal minor with
    column j removed. Zero when the vectors are dependent.
    """
    normal = []
    for j in range(d):
        minor = [v[:j] + v[j + 1:] for v in vectors]
        m = IntegerMatrix.from_rows(minor, d - 1) if minor else IntegerMatrix(0, 0, ())
        normal.append((-1) ** j * determinant(m))
    return primitive(normal)


def _supporting_normals(vectors: Sequence[Vector], d: int) -> list[Vector]:
    """Facet normals of the cone spanned by ``vectors`` (assumed full rank).

    A hyperplane through ``d - 1`` independent vectors with every vector on
    one side supports a facet, and every facet arises this way.
    """
    found = set()
    for subset in combinations(vectors, d - 1):
        n = _hyperplane_normal(subset, d)
        if not any(n):
            continue
        vals = [dot(n, v) for v in vectors]
        if all(x >= 0 for x in vals):
            found.add(n)
        elif all(x <= 0 for x in vals):
            found.add(tuple(-x for x in n))
    return sorted(found)


def _extreme(vectors: Sequence[Vector], normals: Sequence[Vector], d: int) -> list[Vector]:
    out = []
    for v in vectors:
        tight = [n for n in normals if dot(n, v) == 0]
        if d == 1 or (tight and rank(IntegerMatrix.from_rows(tight, d)) == d - 1):
            out.append(v)
    return sorted(set(out))


def _clean(d: int, vectors: Iterable[Sequence[int]]) -> list[Vector]:
    out = []
    for v in vectors:
        v = tuple(int(x) for x in v)
        if len(v) != d:
            raise DimensionMismatch(f"vector {v} does not have length {d}")
        if not any(v):
            raise ZeroRay("zero vector in cone description")
        out.append(primitive(v))
    if not out:
        raise ValueError("a cone needs at least one vector")
    return sorted(set(out))


def _strictly_positive_functional_exists(vectors: Sequence[Vector], d: int) -> bool:
    return rational_point(vectors, [1] * len(vectors), d) is not None


def cone_from_generators(rank_d: int, rays: Iterable[Sequence[int]]) -> RationalCone:
    """Cone spanned by ``rays`` in ``Z^rank_d``, with its facets computed.

    Raises ``NotPointed`` if the cone contains a line, ``NotFullDimensional``
    if it spans less than the whole space, ``ZeroRay`` for a zero input.
    """
    rays = _clean(rank_d, rays)
    if not _strictly_positive_functional_exists(rays, rank_d):
        raise NotPointed("the cone contains a line")
    if rank(IntegerMatrix.from_rows(rays, rank_d)) < rank_d:
        raise NotFullDimensional(f"rays span less than Z^{rank_d}")
    normals = _supporting_normals(rays, rank_d)
    return RationalCone(rank_d, tuple(_extreme(rays, normals, rank_d)), tuple(normals))


def cone_from_normals(rank_d: int, normals: Iterable[Sequence[int]]) -> RationalCone:
    """Cone ``{x : n . x >= 0 for all n}``; redundant inequalities are dropped."""
    normals = _clean(rank_d, normals)
    if rank(IntegerMatrix.from_rows(normals, rank_d)) < rank_d:
        raise NotPointed("the inequalities leave a line free")
    if not _strictly_positive_functional_exists(normals, rank_d):
        raise NotFullDimensional("the inequalities cut out a lower-dimensional cone")
    rays = _supporting_normals(normals, rank_d)
    return RationalCone(rank_d, tuple(rays), tuple(_supporting_normals(rays, rank_d)))


def valuation_matrix(c: RationalCone) -> IntegerMatrix:
    """The ``r x d`` matrix of facet normals; injective on ``Z^d``."""
    return IntegerMatrix.from_rows(c.facet_normals, c.ambient_rank)
