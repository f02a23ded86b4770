"""Closed-form class group facts for rings without a finite model here."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidRange, TorsionInput
from .lattice import FGAbelianGroup

Z = FGAbelianGroup(1)


@dataclass(frozen=True)
class DeterminantalDatum:
    """``R_k = K[X_ij] / I_k`` for the k-minors of a generic ``m x n`` matrix."""

    m: int
    n: int
    k: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise InvalidRange(f"matrix size {self.m}x{self.n} must be positive")
        if not 1 < self.k <= min(self.m, self.n):
            raise InvalidRange(f"need 1 < k <= min(m, n), got k={self.k} for {self.m}x{self.n}")


@dataclass(frozen=True)
class CatalogReport:
    dimension: int
    ideal_height: int
    class_group: FGAbelianGroup
    affine_class_group: FGAbelianGroup
    witness_height: int
    notes: str

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "ideal_height": self.ideal_height,
            "class_group": self.class_group.to_json(),
            "affine_class_group": self.affine_class_group.to_json(),
            "witness_height": self.witness_height,
            "notes": self.notes,
        }


def determinantal_report(d: DeterminantalDatum) -> CatalogReport:
    """Dimension, height and class groups of a determinantal ring.

    ``witness_height`` is the height of the image of the generator ``p``
    (the (k-1)-minors of the first k-1 rows) after killing rows k..m; it is
    ``n - k + 2 >= 2``, which is what rules out an affine complement of
    ``V(p)``. The ring is symmetric in ``m`` and ``n``; the witness uses the
    column count.
    """
    m, n, k = d.m, d.n, d.k
    dim = (m + n - k + 1) * (k - 1)
    witness = n - k + 2
    assert witness >= 2
    return CatalogReport(
        dimension=dim,
        ideal_height=m * n - dim,
        class_group=Z,
        affine_class_group=Z,
        witness_height=witness,
        notes=(f"Cl = ACl = Z, generated by the prime p spanned by the {k - 1}-minors "
               f"of the first {k - 1} rows; D(p) is not affine since its image has "
               f"height {witness} >= 2"),
    )


def polynomial_extension_acl(g: FGAbelianGroup) -> FGAbelianGroup:
    """Affine class group of ``A[T]`` given that of ``A``: unchanged."""
    if not g.is_torsion_free:
        raise TorsionInput(f"{g} has torsion; affine class groups are torsion free")
    return g


def ruled_surface_cone_acl() -> FGAbelianGroup:
    """ACl of an affine cone over a geometrically ruled surface whose
    homogeneous coordinate ring is normal: always ``Z``."""
    return Z
