"""Sectors of the inertia stack of the moduli stack H_g of smooth hyperelliptic curves.

Sectors are indexed by the reduced order N, the order of the automorphism
induced on the quotient line C/tau. Writing 2g+2 = k*N + a (a in {0,1,2}),
a counts the branch points of C -> C/tau fixed by the reduced automorphism.
Each twisted sector carries its coarse space, a character label and an
explicit monomial lift of the automorphism:

    a = 0:     y^2 = prod_m (x^N - alpha_m),     x -> zeta_N^i x, y -> +-y
    a = 1, 2:  y^2 = x prod_m (x^N - alpha_m),   x -> zeta_N^i x, y -> +-zeta_2N^i y
"""
from __future__ import annotations

import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

from .exactnum import CharacterClass, ClassKind, decompositions, unit_classes
from .m0n_inertia import CoarseSpace, Symmetry

logger = logging.getLogger(__name__)


class InertiaConsistencyError(RuntimeError):
    """Raised when the sector list is not closed under inversion of the automorphism."""


class SectorKind(str, Enum):
    UNTWISTED = "UNTWISTED"
    TAU = "TAU"
    TWISTED = "TWISTED"


class YClass(str, Enum):
    PLUS_MINUS_ONE = "PLUS_MINUS_ONE"    # y -> +-y
    PLUS_MINUS_ZETA = "PLUS_MINUS_ZETA"  # y -> +-zeta_2N^i y


@dataclass(frozen=True)
class LiftAction:
    """Monomial action x -> exp(2 pi i x_turn) x, y -> exp(2 pi i y_turn) y."""

    N: int
    x_exp: int
    y_class: YClass
    y_turn: Fraction

    @property
    def x_turn(self) -> Fraction:
        return Fraction(self.x_exp, self.N)

    @property
    def full_order(self) -> int:
        # a root of unity exp(2 pi i p/q) in lowest terms has order q
        return math.lcm(self.x_turn.denominator, self.y_turn.denominator)


@dataclass(frozen=True)
class HypSector:
    g: int
    N: int
    k: Optional[int]
    a: Optional[int]
    label: CharacterClass
    lam: Optional[int]
    coarse: CoarseSpace
    lift: LiftAction
    kind: SectorKind = SectorKind.TWISTED

    def __post_init__(self) -> None:
        if self.kind is not SectorKind.TWISTED:
            return
        n = 2 * self.g + 2
        if self.k is None or self.a is None or n != self.k * self.N + self.a:
            raise ValueError(f"2g+2={n} is not k*N + a for k={self.k}, N={self.N}, a={self.a}")
        if self.label.modulus not in (self.N, 2 * self.N):
            raise ValueError(f"Label modulus {self.label.modulus} is neither N nor 2N (N={self.N})")
        if self.lift.full_order not in (self.N, 2 * self.N):
            raise ValueError(f"Lift order {self.lift.full_order} is neither N nor 2N (N={self.N})")

    @property
    def n(self) -> int:
        return 2 * self.g + 2

    @property
    def full_order(self) -> int:
        return self.lift.full_order

    @property
    def i(self) -> int:
        """Exponent of zeta_N in the action on x (label representative reduced mod N)."""
        return self.lift.x_exp

    @property
    def codimension(self) -> int:
        return (2 * self.g - 1) - self.coarse.dimension

    @property
    def sector_id(self) -> str:
        if self.kind is not SectorKind.TWISTED:
            return f"hyp(g={self.g}) {self.kind.value}"
        text = f"hyp(g={self.g}) N={self.N} k={self.k} a={self.a} chi={self.label}"
        if self.lam is not None:
            text += f" lambda={self.lam:+d}"
        return text


def _lift_sign(N: int, x_exp: int, lam: Optional[int]) -> LiftAction:
    y_turn = Fraction(1, 2) if lam == -1 else Fraction(0)
    return LiftAction(N=N, x_exp=x_exp % N, y_class=YClass.PLUS_MINUS_ONE, y_turn=y_turn)


def _lift_zeta(N: int, label: CharacterClass) -> LiftAction:
    u = label.representative
    if label.modulus == 2 * N:
        e = u
    else:
        # y -> zeta_2N^e y with e = u or u + N (both square to zeta_N^u); an even e
        # keeps the lift of order N when one exists
        e = next((c for c in (u, u + N) if c % 2 == 0), u)
    return LiftAction(N=N, x_exp=u % N, y_class=YClass.PLUS_MINUS_ZETA, y_turn=Fraction(e, 2 * N))


def _twisted(g: int, N: int, k: int, a: int, label: CharacterClass,
             symmetry: Symmetry, lam: Optional[int] = None) -> HypSector:
    lift = _lift_sign(N, label.representative, lam) if a == 0 else _lift_zeta(N, label)
    return HypSector(
        g=g, N=N, k=k, a=a, label=label, lam=lam,
        coarse=CoarseSpace(k, symmetry), lift=lift,
    )


def _untwisted_pair(g: int) -> List[HypSector]:
    trivial = CharacterClass(modulus=1, members=(0,), kind=ClassKind.FULL)
    coarse = CoarseSpace(2 * g + 2, Symmetry.UNORDERED)
    identity = LiftAction(N=1, x_exp=0, y_class=YClass.PLUS_MINUS_ONE, y_turn=Fraction(0))
    involution = LiftAction(N=1, x_exp=0, y_class=YClass.PLUS_MINUS_ONE, y_turn=Fraction(1, 2))
    return [
        HypSector(g=g, N=1, k=None, a=None, label=trivial, lam=None, coarse=coarse,
                  lift=identity, kind=SectorKind.UNTWISTED),
        HypSector(g=g, N=1, k=None, a=None, label=trivial, lam=None, coarse=coarse,
                  lift=involution, kind=SectorKind.TAU),
    ]


def _involution_sectors(g: int) -> List[HypSector]:
    """Reduced order 2: the splits 2g+2 = 2(g+1) + 0 = 2g + 2."""
    minus_one = CharacterClass(modulus=2, members=(1,), kind=ClassKind.FULL)
    found = []
    if g % 2 == 1:
        for lam in (1, -1):
            found.append(_twisted(g, 2, g + 1, 0, minus_one, Symmetry.TWO_SWAPPED, lam))
        # {zeta_4, zeta_4^3}: the twisted identification is trivial mod 4
        for label in unit_classes(4, ClassKind.TWIST):
            found.append(_twisted(g, 2, g, 2, label, Symmetry.TWO_SWAPPED))
    else:
        found.append(_twisted(g, 2, g + 1, 0, minus_one, Symmetry.TWO_FIXED))
        found.append(_twisted(g, 2, g, 2, minus_one, Symmetry.TWO_FIXED))
    return found


def _labels_for(N: int, k: int, a: int) -> List[CharacterClass]:
    if a == 0:
        return unit_classes(N, ClassKind.INV if k % 2 == 0 else ClassKind.FULL)
    if a == 1:
        return unit_classes(N, ClassKind.FULL) + unit_classes(2 * N, ClassKind.FULL)
    if k % 2 == 0:
        if N % 2 == 0:
            return unit_classes(2 * N, ClassKind.INV)
        return unit_classes(N, ClassKind.INV) + unit_classes(2 * N, ClassKind.INV)
    if N % 2 != 0:
        raise InertiaConsistencyError(f"a=2 with k={k} odd forces N even, got N={N}")
    return unit_classes(2 * N, ClassKind.TWIST)


def _sort_key(s: HypSector) -> Tuple[int, ...]:
    if s.kind is not SectorKind.TWISTED:
        return (0, 0 if s.kind is SectorKind.UNTWISTED else 1)
    return (s.N, s.a, s.label.modulus, s.label.representative, -(s.lam or 0))


def sectors_hyp(g: int) -> Tuple[HypSector, ...]:
    """Every sector of I(H_g): UNTWISTED, TAU, then twisted sectors by (N, a, label, lambda)."""
    if g < 2:
        raise ValueError(f"H_g needs genus g >= 2, got g={g}")
    return _sectors_hyp_cached(g)


@lru_cache(maxsize=512)
def _sectors_hyp_cached(g: int) -> Tuple[HypSector, ...]:
    n = 2 * g + 2
    found = _untwisted_pair(g) + _involution_sectors(g)
    for N in range(3, n + 1):
        for k, a in decompositions(n, N):
            symmetry = Symmetry.TWO_FIXED if a == 1 else Symmetry.TWO_SWAPPED
            for label in _labels_for(N, k, a):
                if a == 0 and k % 2 == 0:
                    found.extend(_twisted(g, N, k, a, label, symmetry, lam) for lam in (1, -1))
                else:
                    found.append(_twisted(g, N, k, a, label, symmetry))
    found.sort(key=_sort_key)
    logger.debug("hyp sectors g=%d count=%d", g, len(found))
    return tuple(found)


def _partner_key(s: HypSector, member: int) -> Tuple:
    return (s.N, s.k, s.a, s.lam, s.label.modulus, s.label.kind, member)


def iota(sector: HypSector, all_sectors: Iterable[HypSector]) -> HypSector:
    """The sector of the inverse automorphism; lambda is kept as is."""
    if sector.kind is not SectorKind.TWISTED:
        return sector
    target = (-sector.label.representative) % sector.label.modulus
    wanted = _partner_key(sector, target)
    for other in all_sectors:
        if other.kind is SectorKind.TWISTED and _partner_key(other, target) == wanted \
                and other.label.contains(target):
            return other
    raise InertiaConsistencyError(f"No inverse sector for {sector.sector_id}")


def iota_map(all_sectors: Iterable[HypSector]) -> Dict[HypSector, HypSector]:
    """iota on a whole sector list, built from one index pass."""
    all_sectors = tuple(all_sectors)
    index = {}
    for s in all_sectors:
        if s.kind is SectorKind.TWISTED:
            for u in s.label.members:
                index[_partner_key(s, u)] = s
    result = {}
    for s in all_sectors:
        if s.kind is not SectorKind.TWISTED:
            result[s] = s
            continue
        target = (-s.label.representative) % s.label.modulus
        partner = index.get(_partner_key(s, target))
        if partner is None:
            raise InertiaConsistencyError(f"No inverse sector for {s.sector_id}")
        result[s] = partner
    return result


def sectors_by_full_order(g: int) -> Dict[int, List[HypSector]]:
    """Regroup the sectors by the order of the lifted automorphism on the curve."""
    groups: Dict[int, List[HypSector]] = defaultdict(list)
    for s in sectors_hyp(g):
        groups[s.full_order].append(s)
    return dict(sorted(groups.items()))
