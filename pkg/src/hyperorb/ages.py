"""Degree-shifting numbers of the sectors of H_g, computed two ways.

The oracle acts with the lifted automorphism on the cotangent basis
X^j (dX/Y)^2, j = 0..2g-2, and takes the age of the tangent representation.
The printed exponents a_g, b_g and the N = 2 values are evaluated literally
alongside it; the two are never merged.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

import numpy as np

from .exactnum import frac_sum
from .hyp_inertia import HypSector, SectorKind


@dataclass(frozen=True)
class WeightVector:
    """Cotangent weights: entry j is the exponent of zeta_N acquired by X^j (dX/Y)^2."""

    N: int
    residues: Tuple[int, ...]

    @property
    def zero_count(self) -> int:
        return self.residues.count(0)


@lru_cache(maxsize=2048)
def cotangent_weights(g: int, N: int, a: int, i: int) -> WeightVector:
    """Weights of x -> zeta_N^i x on the cotangent basis.

    (dX/Y)^2 picks up zeta^(2i) when y -> +-y (a = 0) and zeta^i when
    y^2 -> zeta^i y^2 (a = 1, 2); X^j adds zeta^(ij).
    """
    offset = 2 if a == 0 else 1
    j = np.arange(offset, 2 * g - 1 + offset, dtype=np.int64)
    residues = (i * j) % N
    return WeightVector(N=N, residues=tuple(residues.tolist()))


def weight_vector(sector: HypSector) -> WeightVector:
    if sector.kind is not SectorKind.TWISTED:
        return WeightVector(N=1, residues=(0,) * (2 * sector.g - 1))
    return cotangent_weights(sector.g, sector.N, sector.a, sector.i)


def age_oracle(w: WeightVector) -> Fraction:
    """Sum of (1 - w_j/N) over the nonzero weights (tangent weights are -w_j)."""
    nonzero = len(w.residues) - w.residues.count(0)
    return Fraction(w.N * nonzero - sum(w.residues), w.N)


def sector_age(sector: HypSector) -> Fraction:
    if sector.kind is not SectorKind.TWISTED:
        return Fraction(0)
    return _lift_age(sector.g, sector.N, sector.a, sector.i)


@lru_cache(maxsize=8192)
def _lift_age(g: int, N: int, a: int, i: int) -> Fraction:
    return age_oracle(cotangent_weights(g, N, a, i))


@lru_cache(maxsize=8192)
def a_g(g: int, i: int, N: int) -> Fraction:
    """2(2g-1 - sum_{j=1}^{2g-1} {i(j+1)/N})."""
    return 2 * (2 * g - 1 - frac_sum(i, N, range(2, 2 * g + 1)))


@lru_cache(maxsize=8192)
def b_g(g: int, i: int, N: int) -> Fraction:
    """2(2g-1 - sum_{j=1}^{2g-1} {ij/N})."""
    return 2 * (2 * g - 1 - frac_sum(i, N, range(1, 2 * g)))


def exponent_paper(sector: HypSector) -> Fraction:
    """Exponent the closed formula attaches to this sector."""
    if sector.kind is SectorKind.UNTWISTED:
        raise ValueError("The closed formula has no exponent for the untwisted sector")
    if sector.kind is SectorKind.TAU:
        return Fraction(0)
    g = sector.g
    if sector.N == 2:
        return Fraction(g - 1, 2) if sector.k == g + 1 else Fraction(g, 2)
    if sector.a == 0:
        return a_g(g, sector.i, sector.N)
    return b_g(g, sector.i, sector.N)

