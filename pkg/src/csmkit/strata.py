"""
Coordinate strata of complex projective space.

A nonempty set S of coordinate indices of P^n names two things: the torus
orbit O_S, where exactly the coordinates in S are nonzero, and its closure,
the coordinate subspace P_S.  Sets are stored as bit patterns; vectors over
the lattice are dense tuples indexed by the bit pattern (slot 0, the empty
set, is always zero).
"""

import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

DEFAULT_MAX_AMBIENT = 20
MAX_AMBIENT_ENV = "CSMKIT_MAX_AMBIENT"


def max_ambient() -> int:
    """Largest admissible ambient dimension (overridable by environment)."""
    value = os.environ.get(MAX_AMBIENT_ENV)
    if value is None:
        return DEFAULT_MAX_AMBIENT
    return int(value)


@dataclass(frozen=True, order=True)
class AmbientSpace:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"ambient dimension must be a nonnegative integer, got {self.n!r}")
        cap = max_ambient()
        if self.n > cap:
            raise ValueError(f"ambient dimension {self.n} exceeds the cap {cap}")

    @property
    def size(self) -> int:
        """Length of a dense lattice vector (2^(n+1))."""
        return 1 << (self.n + 1)

    @property
    def full(self) -> int:
        return self.size - 1

    def strata(self) -> list["StratumSet"]:
        return [StratumSet(self, bits) for bits in canonical_bits(self.n)]

    def __str__(self):
        return f"P^{self.n}"


def bits_of(members: Iterable[int]) -> int:
    bits = 0
    for i in members:
        if i < 0:
            raise ValueError(f"negative coordinate index {i}")
        bits |= 1 << i
    return bits


def members_of(bits: int) -> tuple[int, ...]:
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return tuple(out)


def popcount(bits: int) -> int:
    return bin(bits).count("1")


def canonical_key(bits: int) -> tuple[int, int]:
    return (popcount(bits), bits)


def canonical_bits(n: int) -> list[int]:
    """All nonempty subsets of {0..n} in canonical order: by size, then value."""
    return sorted(range(1, 1 << (n + 1)), key=canonical_key)


@dataclass(frozen=True)
class StratumSet:
    ambient: AmbientSpace
    bits: int

    def __post_init__(self):
        if self.bits <= 0:
            raise ValueError("a stratum needs at least one nonzero coordinate")
        if self.bits >> (self.ambient.n + 1):
            raise ValueError(f"stratum {set(members_of(self.bits))} is not inside {self.ambient}")

    @classmethod
    def of(cls, ambient, members: Iterable[int]) -> "StratumSet":
        if isinstance(ambient, int):
            ambient = AmbientSpace(ambient)
        return cls(ambient, bits_of(members))

    @property
    def members(self) -> tuple[int, ...]:
        return members_of(self.bits)

    @property
    def dimension(self) -> int:
        return popcount(self.bits) - 1

    def __len__(self):
        return popcount(self.bits)

    def __lt__(self, other):
        return (self.ambient.n, *canonical_key(self.bits)) < (other.ambient.n, *canonical_key(other.bits))

    def __str__(self):
        return "{" + ",".join(map(str, self.members)) + "}"


def orbit_dimension(S: StratumSet) -> int:
    return S.dimension


def strata_of_dimension(ambient: AmbientSpace, k: int) -> list[StratumSet]:
    """
    The C(n+1, k+1) strata of dimension k, i.e. the components of the locus
    where exactly n-k coordinates vanish.
    """
    if not 0 <= k <= ambient.n:
        raise ValueError(f"dimension {k} out of range 0..{ambient.n}")
    out = [S for S in ambient.strata() if S.dimension == k]
    assert len(out) == comb(ambient.n + 1, k + 1)
    return out


# -- transforms over the Boolean lattice --------------------------------------

def _check_length(coeffs: Sequence) -> int:
    size = len(coeffs)
    if size < 2 or size & (size - 1):
        raise ValueError(f"lattice vector length must be 2^(n+1), got {size}")
    return size.bit_length() - 1


def _sweep(coeffs, sign: int, upward: bool) -> tuple[Fraction, ...]:
    width = _check_length(coeffs)
    v = [Fraction(c) for c in coeffs]
    v[0] = Fraction(0)
    for b in range(width):
        bit = 1 << b
        for S in range(len(v)):
            if S & bit:
                if upward:
                    v[S ^ bit] += sign * v[S]
                else:
                    v[S] += sign * v[S ^ bit]
    v[0] = Fraction(0)
    return tuple(v)


def zeta_transform(coeffs: Sequence) -> tuple[Fraction, ...]:
    """output[S] = sum of input[T] over nonempty T contained in S."""
    return _sweep(coeffs, 1, upward=False)


def moebius_transform(coeffs: Sequence) -> tuple[Fraction, ...]:
    """Inverse of :func:`zeta_transform`: sum of (-1)^(|S|-|T|) input[T] over T in S."""
    return _sweep(coeffs, -1, upward=False)


def superset_zeta_transform(coeffs: Sequence) -> tuple[Fraction, ...]:
    """output[T] = sum of input[S] over S containing T.

    Sends the closed-subspace expansion sum a_S 1_{P_S} to orbit coefficients.
    """
    return _sweep(coeffs, 1, upward=True)


def superset_moebius_transform(coeffs: Sequence) -> tuple[Fraction, ...]:
    """Inverse of :func:`superset_zeta_transform`."""
    return _sweep(coeffs, -1, upward=True)
