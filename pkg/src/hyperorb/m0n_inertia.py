"""Twisted sectors of the stack of n unordered points on the Riemann sphere.

Each sector is recorded through its coarse space M_{0,k+2}/S_k or
M_{0,k+2}/(S_k x S_2) together with the character labelling it.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Tuple

from .exactnum import CharacterClass, ClassKind, decompositions, unit_classes
from .qpoly import QPolynomial, p0_swap, p0_two_fixed, poly_sum

logger = logging.getLogger(__name__)


class Symmetry(str, Enum):
    TWO_FIXED = "TWO_FIXED"      # M_{0,k+2} / S_k
    TWO_SWAPPED = "TWO_SWAPPED"  # M_{0,k+2} / (S_k x S_2)
    UNORDERED = "UNORDERED"      # M_{0,k} / S_k, the untwisted coarse space


@dataclass(frozen=True)
class CoarseSpace:
    k: int
    symmetry: Symmetry

    @property
    def dimension(self) -> int:
        if self.symmetry is Symmetry.UNORDERED:
            return self.k - 3
        return self.k - 1

    @property
    def poincare(self) -> QPolynomial:
        if self.symmetry is Symmetry.TWO_FIXED:
            return p0_two_fixed(self.k)
        if self.symmetry is Symmetry.TWO_SWAPPED:
            return p0_swap(self.k)
        # H^*(M_{0,k}/S_k) is trivial
        return QPolynomial.one()

    def describe(self) -> str:
        if self.symmetry is Symmetry.TWO_FIXED:
            return f"M_(0,{self.k + 2})/S_{self.k}"
        if self.symmetry is Symmetry.TWO_SWAPPED:
            return f"M_(0,{self.k + 2})/S_{self.k}xS_2"
        return f"M_(0,{self.k})/S_{self.k}"


@dataclass(frozen=True)
class M0nSector:
    n: int
    N: int
    k: int
    a: int
    label: CharacterClass
    coarse: CoarseSpace

    def __post_init__(self) -> None:
        if self.n != self.k * self.N + self.a:
            raise ValueError(f"n={self.n} != k*N + a = {self.k}*{self.N} + {self.a}")

    @property
    def sector_id(self) -> str:
        return f"m0n(n={self.n}) N={self.N} k={self.k} a={self.a} chi={self.label}"


def _sector(n: int, N: int, k: int, a: int, label: CharacterClass) -> M0nSector:
    symmetry = Symmetry.TWO_FIXED if a == 1 else Symmetry.TWO_SWAPPED
    return M0nSector(n=n, N=N, k=k, a=a, label=label, coarse=CoarseSpace(k, symmetry))


def sectors_m0n(n: int) -> Tuple[M0nSector, ...]:
    """All twisted sectors ordered by (N, a, canonical label)."""
    if n < 3:
        raise ValueError(f"[M_0,n/S_n] needs n >= 3, got n={n}")
    return _sectors_m0n_cached(n)


@lru_cache(maxsize=512)
def _sectors_m0n_cached(n: int) -> Tuple[M0nSector, ...]:
    found = []
    for N in range(2, n + 1):
        if N == 2 and n % 2 == 0:
            # n = 2(g+1) + 0 = 2g + 2: one sector labelled -1 for each split
            minus_one = CharacterClass(modulus=2, members=(1,), kind=ClassKind.FULL)
            for k, a in decompositions(n, N):
                found.append(_sector(n, N, k, a, minus_one))
            continue
        for k, a in decompositions(n, N):
            kind = ClassKind.FULL if a == 1 else ClassKind.INV
            for label in unit_classes(N, kind):
                found.append(_sector(n, N, k, a, label))
    found.sort(key=lambda s: (s.N, s.a, s.label.representative))
    logger.debug("m0n sectors n=%d count=%d", n, len(found))
    return tuple(found)


def inertia_poincare_m0n(n: int) -> QPolynomial:
    """Unshifted sum of coarse Poincare polynomials, untwisted sector counted as 1."""
    return QPolynomial.one() + poly_sum(s.coarse.poincare for s in sectors_m0n(n))
