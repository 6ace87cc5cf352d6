"""Duality for nilpotent orbits of split classical groups.

The duality map d sends orthogonal partitions of 2n+1 to symplectic
partitions of 2n and back, and orthogonal partitions of 2n to themselves:

    d(lam) = C-collapse of (lam^t)^-   for type B input,
             B-collapse of (lam^t)^+   for type C input,
             D-collapse of lam^t       for type D input,

where the minus/plus adjustment lowers the smallest (raises the largest)
positive part by one.  The image consists exactly of the special
partitions, and lam <= d(d(lam)) with equality iff lam is special.

Orbit dimensions use the standard centralizer count for classical Lie
algebras: dim Z = (sum of squared transpose parts +/- #odd parts) / 2 with
the plus sign in the symplectic case.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import GroupType, Partition, classify, collapse, transpose

_OUTPUT_TYPE = {
    GroupType.B: GroupType.C,
    GroupType.C: GroupType.B,
    GroupType.D: GroupType.D,
}


@dataclass(frozen=True)
class DualityResult:
    input_type: GroupType
    output_type: GroupType
    partition: Partition


def adjust(lam: Partition, direction: str) -> Partition:
    """Lower the smallest ("minus") or raise the largest ("plus") positive
    part by one.  "plus" on the empty partition gives (1)."""
    if direction == "minus":
        if not lam:
            raise ValueError("cannot lower a part of the empty partition")
        return Partition(lam[:-1] + (lam[-1] - 1,))
    if direction == "plus":
        if not lam:
            return Partition((1,))
        return Partition((lam[0] + 1,) + lam[1:])
    raise ValueError(f"direction must be 'minus' or 'plus', got {direction!r}")


@lru_cache(maxsize=None)
def dual_partition(lam: Partition, t: GroupType) -> Partition:
    """The dual partition alone; see :func:`dual`."""
    if not classify(lam, t).member:
        raise ValueError(f"{str(lam)!r} is not a type-{t} partition")
    lt = transpose(lam)
    if t is GroupType.B:
        return collapse(adjust(lt, "minus"), GroupType.C)
    if t is GroupType.C:
        return collapse(adjust(lt, "plus"), GroupType.B)
    return collapse(lt, GroupType.D)


def dual(lam: Partition, t: GroupType) -> DualityResult:
    """Duality map on a type-``t`` partition; the output is special of the
    output type (B <-> C, D -> D)."""
    return DualityResult(t, _OUTPUT_TYPE[t], dual_partition(lam, t))


def lie_algebra_dim(t: GroupType, size: int) -> int:
    """dim so_m = m(m-1)/2 for B/D, dim sp_m = m(m+1)/2 for C, where
    ``size`` = m is the size of the defining module."""
    if t.orthogonal:
        return size * (size - 1) // 2
    return size * (size + 1) // 2


def orbit_dim(lam: Partition, t: GroupType) -> int:
    """Dimension of the nilpotent orbit with Jordan type ``lam``."""
    if not classify(lam, t).member:
        raise ValueError(f"{str(lam)!r} is not a type-{t} partition")
    odd = sum(1 for p in lam if p % 2 == 1)
    squares = sum(c * c for c in transpose(lam))
    twice_centralizer = squares + odd if t is GroupType.C else squares - odd
    assert twice_centralizer % 2 == 0
    dim = lie_algebra_dim(t, lam.size) - twice_centralizer // 2
    assert dim >= 0 and dim % 2 == 0
    return dim
