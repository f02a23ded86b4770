"""Brute-force oracles for the decision procedures.

These enumerate lattice points in a box ``[-B, B]^d`` and never touch the
feasibility engine, so they are independent of the production path. Box
enumeration can only miss points, so a box result is a lower bound on the set
of realizable or effective supports; on small instances it is exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Sequence

from . import hyperbola, monoid
from .hyperbola import HyperbolaDatum
from .lattice import Vector, solve_integer_system
from .monoid import MonoidRing, SupportSet

DEFAULT_BOUND = 8


def default_bound(rank: int) -> int:
    return DEFAULT_BOUND if rank <= 3 else 4


@lru_cache(maxsize=64)
def _box(m: MonoidRing, bound: int) -> tuple[tuple[Vector, Vector], ...]:
    if bound < 1:
        raise ValueError("box bound must be at least 1")
    nu = m.nu
    return tuple((g, nu.apply(g)) for g in product(range(-bound, bound + 1), repeat=m.rank))


def oracle_realizable_supports(m: MonoidRing, bound: int = DEFAULT_BOUND) -> set[SupportSet]:
    """Supports of all monomials in the box."""
    return {frozenset(i for i, v in enumerate(vals) if v > 0)
            for _, vals in _box(m, bound) if min(vals) >= 0}


def oracle_effective_supports(m: MonoidRing, n: Sequence[int], bound: int = DEFAULT_BOUND) -> set[SupportSet]:
    """Supports of the effective ``n + nu(gamma)`` with ``gamma`` in the box."""
    n = m.check_divisor(n)
    out = set()
    for _, vals in _box(m, bound):
        e = [a + b for a, b in zip(n, vals)]
        if min(e) >= 0:
            out.add(frozenset(i for i, v in enumerate(e) if v > 0))
    return out


def oracle_is_coaffine(m: MonoidRing, n: Sequence[int], bound: int = DEFAULT_BOUND) -> bool:
    return oracle_effective_supports(m, n, bound) <= oracle_realizable_supports(m, bound)


def _principal_monoid(m: MonoidRing, n: Sequence[int]) -> bool:
    return not solve_integer_system(m.nu, n).is_empty


def oracle_monoid_strong(m: MonoidRing, n: Sequence[int], kmax: int) -> bool:
    """Strong coaffineness by its definition, sampled over ``|k| <= kmax``."""
    n = m.check_divisor(n)
    for k in range(-kmax, kmax + 1):
        kn = tuple(k * x for x in n)
        if not (_principal_monoid(m, kn) or monoid.is_coaffine(m, kn)):
            return False
    return True


def oracle_hyperbola_strong(h: HyperbolaDatum, n: Sequence[int], kmax: int) -> bool:
    """Strong coaffineness by its definition, sampled over ``|k| <= kmax``."""
    n = h.check_divisor(n)
    for k in range(-kmax, kmax + 1):
        kn = tuple(k * x for x in n)
        if not (hyperbola.principal_multiple(h, kn) is not None or hyperbola.is_coaffine(h, kn)):
            return False
    return True


@dataclass
class CrossModelReport:
    exponents: tuple[int, ...]
    checked: int = 0
    disagreements: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def to_json(self) -> dict:
        return {"exponents": list(self.exponents), "checked": self.checked,
                "disagreements": list(self.disagreements)}


def oracle_cross_model(h: HyperbolaDatum, bound: int = DEFAULT_BOUND) -> CrossModelReport:
    """Compare the hyperbola classification with its toric model.

    Class groups, affine class groups, and for effective ``n`` with
    ``n_i <= 2 d_i`` the coaffine and affine trivial verdicts of the hyperbola,
    of the model's production path, and of the model's box oracle.
    """
    local = HyperbolaDatum(h.exponents)
    model = hyperbola.toric_model(local)
    ring = model.ring
    rep = CrossModelReport(local.exponents)
    if monoid.class_group(ring) != hyperbola.class_group(local):
        rep.disagreements.append("class_group")
    if monoid.affine_class_group(ring) != hyperbola.affine_class_group_local(local):
        rep.disagreements.append("affine_class_group")
    for n in product(*(range(2 * x + 1) for x in local.exponents)):
        t = model.translate(n)
        verdicts = {
            "hyperbola": hyperbola.is_coaffine(local, n),
            "model": monoid.is_coaffine(ring, t),
            "model_oracle": oracle_is_coaffine(ring, t, bound),
        }
        if len(set(verdicts.values())) > 1:
            rep.disagreements.append(f"is_coaffine{n}: {verdicts}")
        if hyperbola.is_affine_trivial(local, n) != monoid.is_affine_trivial(ring, t):
            rep.disagreements.append(f"is_affine_trivial{n}")
        rep.checked += 1
    return rep
