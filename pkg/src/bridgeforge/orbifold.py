"""Dihedral quotient arithmetic for two-bridge knots.

The first homology of the double branched cover of K(q/p) is Z/p, and
the quotient of the knot group by squared meridians is the dihedral
group of order 2p.  A proper arc of slope u/v in the defining Conway
sphere contributes the homology class v mod p, so the subgroup generated
by the corresponding meridian pair lands in a dihedral subgroup of order
2 * p / gcd(p, v).  The geometric inputs (which arcs occur, their
slopes) are taken as given; this module implements only the arithmetic
consequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .slope import Frac


@dataclass(frozen=True)
class DihedralElement:
    """Element (rotation, flip) of the dihedral group of order 2p."""

    rotation: int
    flip: bool
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "rotation", self.rotation % self.modulus)

    def __mul__(self, other: "DihedralElement") -> "DihedralElement":
        if self.modulus != other.modulus:
            raise ValueError("mixed dihedral groups")
        rot = self.rotation + (-other.rotation if self.flip else other.rotation)
        return DihedralElement(rot, self.flip ^ other.flip, self.modulus)

    def inverse(self) -> "DihedralElement":
        if self.flip:
            return self
        return DihedralElement(-self.rotation, False, self.modulus)

    @classmethod
    def identity(cls, modulus: int) -> "DihedralElement":
        return cls(0, False, modulus)


def dihedral_group(modulus: int):
    """All 2p elements, for exhaustive axiom checks at small p."""
    return [
        DihedralElement(r, f, modulus)
        for f in (False, True)
        for r in range(modulus)
    ]


@dataclass(frozen=True)
class HomologyClass:
    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "value", self.value % self.modulus)

    @property
    def order(self) -> int:
        return self.modulus // gcd(self.modulus, self.value)


def homology_order(f: Frac) -> int:
    """Order p of the first homology of the double branched cover."""
    return f.den


def arc_class(s: Frac, p: int) -> HomologyClass:
    """Homology class of the lifted arc of slope u/v: v mod p."""
    return HomologyClass(s.den, p)


@dataclass(frozen=True)
class SubgroupVerdict:
    slope: Frac
    order_in_homology: int
    dihedral_image_order: int
    proper: bool


def subgroup_verdict(s: Frac, f: Frac) -> SubgroupVerdict:
    """Order data of the meridian-pair subgroup image in the dihedral quotient."""
    p = homology_order(f)
    order = arc_class(s, p).order
    return SubgroupVerdict(s, order, 2 * order, order < p)


def proper_subgroup_sweep(m_max: int) -> bool:
    """Proper-subgroup verdicts for the slopes 2m/(4m^2 - 1), m = 2..m_max.

    The two arc slopes 1/(2m-1) and 1/(2m+1) must give proper subgroups
    of orders 2m+1 and 2m-1 respectively.
    """
    if m_max < 2:
        raise ValueError("m_max must be at least 2")
    for m in range(2, m_max + 1):
        r = Frac(2 * m, 4 * m * m - 1)
        v1 = subgroup_verdict(Frac(1, 2 * m - 1), r)
        v2 = subgroup_verdict(Frac(1, 2 * m + 1), r)
        if not (v1.proper and v1.order_in_homology == 2 * m + 1):
            return False
        if not (v2.proper and v2.order_in_homology == 2 * m - 1):
            return False
    return True
