"""Exact rationals and unit groups modulo M with their quotient identifications."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Tuple

import numpy as np
from sympy import totient

logger = logging.getLogger(__name__)

# Ages, exponents and fractional parts are all plain Fractions (always in lowest terms).
Rational = Fraction


class TwistModulusError(ValueError):
    """Raised when the twisted identification is requested for a modulus not divisible by 4."""


class ClassKind(str, Enum):
    FULL = "FULL"
    INV = "INV"
    TWIST = "TWIST"


@dataclass(frozen=True)
class CharacterClass:
    """A unit (or orbit of units) modulo ``modulus``.

    Characters of Z_M are written as exponents u (zeta -> zeta^u) once a
    generator is fixed, so every label is an integer residue.
    """

    modulus: int
    members: Tuple[int, ...]
    kind: ClassKind

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"Modulus must be positive, got {self.modulus}")
        if not self.members:
            raise ValueError("A character class needs at least one member")
        if tuple(sorted(set(self.members))) != self.members:
            raise ValueError(f"Members must be sorted and distinct, got {self.members}")
        for u in self.members:
            if math.gcd(u, self.modulus) != 1:
                raise ValueError(f"{u} is not a unit modulo {self.modulus}")
        if self.kind is ClassKind.FULL and len(self.members) != 1:
            raise ValueError("FULL classes are singletons")
        if self.kind is ClassKind.TWIST and self.modulus % 4 != 0:
            raise TwistModulusError("twisted identification not involutive for this modulus")

    @property
    def representative(self) -> int:
        return self.members[0]

    def contains(self, u: int) -> bool:
        return u % self.modulus in self.members

    def __str__(self) -> str:
        body = ",".join(str(u) for u in self.members)
        return f"{{{body}}} mod {self.modulus}"


def phi(M: int) -> int:
    """Euler totient; phi(1) = 1."""
    if M < 1:
        raise ValueError(f"phi is defined for M >= 1, got {M}")
    return _phi_cached(M)


@lru_cache(maxsize=None)
def _phi_cached(M: int) -> int:
    return int(totient(M))


def units(M: int) -> List[int]:
    """Residues coprime to M in ascending order; the trivial group mod 1 is [0]."""
    if M < 1:
        raise ValueError(f"units is defined for M >= 1, got {M}")
    if M == 1:
        return [0]
    return [u for u in range(1, M) if math.gcd(u, M) == 1]


def frac(x: Fraction | int) -> Fraction:
    """Fractional part x - floor(x), always in [0, 1)."""
    x = Fraction(x)
    return x - math.floor(x)


def frac_sum(i: int, N: int, multipliers: Iterable[int]) -> Fraction:
    """Exact sum of {i*m/N} over the given multipliers.

    {i*m/N} = (i*m mod N)/N, so the sum is an integer residue total over N.
    """
    if isinstance(multipliers, range):
        m = np.arange(multipliers.start, multipliers.stop, multipliers.step, dtype=np.int64)
    else:
        m = np.fromiter(multipliers, dtype=np.int64)
    residues = (i * m) % N
    return Fraction(int(residues.sum()), N)


def _involution(M: int, kind: ClassKind):
    if kind is ClassKind.FULL:
        return lambda u: u
    if kind is ClassKind.INV:
        return lambda u: (-u) % M
    if M % 4 != 0:
        raise TwistModulusError("twisted identification not involutive for this modulus")
    # -zeta^{-1} = zeta^{M/2 - 1}; squares to 1 mod M exactly when 4 | M
    twist = M // 2 - 1
    return lambda u: (u * twist) % M


def unit_classes(M: int, kind: ClassKind) -> List[CharacterClass]:
    """Partition units(M) into orbits of the identification named by ``kind``."""
    kind = ClassKind(kind)
    return list(_unit_classes_cached(M, kind))


@lru_cache(maxsize=None)
def _unit_classes_cached(M: int, kind: ClassKind) -> Tuple[CharacterClass, ...]:
    move = _involution(M, kind)
    seen = set()
    classes: List[CharacterClass] = []
    for u in units(M):
        if u in seen:
            continue
        orbit = tuple(sorted({u, move(u)}))
        seen.update(orbit)
        classes.append(CharacterClass(modulus=M, members=orbit, kind=kind))
    logger.debug("unit classes M=%d kind=%s count=%d", M, kind.value, len(classes))
    return tuple(classes)


def decompositions(n: int, N: int) -> List[Tuple[int, int]]:
    """All (k, a) with n = k*N + a, k >= 1 and a in {0, 1, 2}, ascending in a."""
    if n < 3:
        raise ValueError(f"Need at least 3 points, got n={n}")
    if N < 2:
        raise ValueError(f"Reduced order must be at least 2, got N={N}")
    found = []
    for a in (0, 1, 2):
        k, rest = divmod(n - a, N)
        if rest == 0 and k >= 1:
            found.append((k, a))
    return found
