"""
Constructible functions on P^n that are constant on coordinate torus orbits.

A function is stored by its value on each orbit O_S; a point of P^n is
represented only by its support (the set of its nonzero coordinates),
which determines the orbit it lies on.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .strata import (
    AmbientSpace,
    StratumSet,
    bits_of,
    canonical_bits,
    moebius_transform,
    popcount,
)


def _ambient(a) -> AmbientSpace:
    return a if isinstance(a, AmbientSpace) else AmbientSpace(a)


@dataclass(frozen=True)
class ConstructibleFunction:
    ambient: AmbientSpace
    orbit_coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.orbit_coeffs) != self.ambient.size:
            raise ValueError("coefficient vector does not match the ambient lattice")
        if self.orbit_coeffs[0] != 0:
            raise ValueError("slot of the empty set must be zero")

    @classmethod
    def zero(cls, ambient) -> "ConstructibleFunction":
        ambient = _ambient(ambient)
        return cls(ambient, (Fraction(0),) * ambient.size)

    @classmethod
    def from_orbit_values(cls, ambient, values: dict) -> "ConstructibleFunction":
        """Build from a mapping {stratum or iterable of indices or bit pattern: value}."""
        ambient = _ambient(ambient)
        v = [Fraction(0)] * ambient.size
        for key, value in values.items():
            v[_key_bits(ambient, key)] += Fraction(value)
        return cls(ambient, tuple(v))

    def coefficient(self, S) -> Fraction:
        return self.orbit_coeffs[_key_bits(self.ambient, S)]

    def items(self):
        """Nonzero (StratumSet, coefficient) pairs in canonical order."""
        for bits in canonical_bits(self.ambient.n):
            c = self.orbit_coeffs[bits]
            if c:
                yield StratumSet(self.ambient, bits), c

    def is_zero(self) -> bool:
        return not any(self.orbit_coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.orbit_coeffs)

    def _check(self, other):
        if not isinstance(other, ConstructibleFunction):
            return NotImplemented
        if other.ambient != self.ambient:
            raise ValueError(f"ambient mismatch: {self.ambient} vs {other.ambient}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return ConstructibleFunction(
            self.ambient, tuple(a + b for a, b in zip(self.orbit_coeffs, other.orbit_coeffs))
        )

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return ConstructibleFunction(
            self.ambient, tuple(a - b for a, b in zip(self.orbit_coeffs, other.orbit_coeffs))
        )

    def __neg__(self):
        return self.scale(-1)

    def scale(self, r) -> "ConstructibleFunction":
        r = Fraction(r)
        return ConstructibleFunction(self.ambient, tuple(r * c for c in self.orbit_coeffs))

    def __mul__(self, r):
        if isinstance(r, (int, Fraction)):
            return self.scale(r)
        return NotImplemented

    __rmul__ = __mul__

    def to_json(self) -> list:
        """[[subset, numerator, denominator], ...] over nonzero orbits, canonical order."""
        return [[list(S.members), c.numerator, c.denominator] for S, c in self.items()]

    @classmethod
    def from_json(cls, ambient, triples) -> "ConstructibleFunction":
        return cls.from_orbit_values(
            ambient, {tuple(s): Fraction(p, q) for s, p, q in triples}
        )


def _key_bits(ambient: AmbientSpace, key) -> int:
    if isinstance(key, StratumSet):
        if key.ambient != ambient:
            raise ValueError(f"stratum lives in {key.ambient}, not {ambient}")
        return key.bits
    bits = key if isinstance(key, int) else bits_of(key)
    StratumSet(ambient, bits)  # validates
    return bits


def indicator_orbit(S: StratumSet) -> ConstructibleFunction:
    v = [Fraction(0)] * S.ambient.size
    v[S.bits] = Fraction(1)
    return ConstructibleFunction(S.ambient, tuple(v))


def indicator_subspace(S: StratumSet) -> ConstructibleFunction:
    """Characteristic function of the coordinate subspace P_S."""
    v = [Fraction(0)] * S.ambient.size
    for T in range(1, S.ambient.size):
        if T & S.bits == T:
            v[T] = Fraction(1)
    return ConstructibleFunction(S.ambient, tuple(v))


def indicator_projective(ambient) -> ConstructibleFunction:
    ambient = _ambient(ambient)
    return indicator_subspace(StratumSet(ambient, ambient.full))


def _check_k(ambient: AmbientSpace, k: int):
    if not 0 <= k <= ambient.n:
        raise ValueError(f"k={k} out of range 0..{ambient.n}")


def indicator_L(ambient, k: int) -> ConstructibleFunction:
    """Points with at least n-k vanishing coordinates (support size <= k+1)."""
    ambient = _ambient(ambient)
    _check_k(ambient, k)
    v = [Fraction(0)] + [Fraction(int(popcount(b) <= k + 1)) for b in range(1, ambient.size)]
    return ConstructibleFunction(ambient, tuple(v))


def indicator_U(ambient, k: int) -> ConstructibleFunction:
    """Points with exactly n-k vanishing coordinates (support size == k+1)."""
    ambient = _ambient(ambient)
    _check_k(ambient, k)
    v = [Fraction(0)] + [Fraction(int(popcount(b) == k + 1)) for b in range(1, ambient.size)]
    return ConstructibleFunction(ambient, tuple(v))


def evaluate(f: ConstructibleFunction, support: Iterable[int]) -> Fraction:
    """Value of f at any point whose nonzero coordinates are exactly ``support``."""
    bits = support if isinstance(support, int) else bits_of(support)
    if bits == 0:
        raise ValueError("empty support: every coordinate zero is not a projective point")
    return f.coefficient(bits)


def orbit_euler_characteristic(S: StratumSet) -> int:
    # O_S is a torus (C*)^(|S|-1)
    return 1 if len(S) == 1 else 0


def orbit_euler_characteristics_by_moebius(ambient) -> tuple[Fraction, ...]:
    """chi(O_S) for every S, by Moebius inversion of chi(P_T) = |T|.

    Independent of :func:`orbit_euler_characteristic`; the two are compared
    in the test suite.
    """
    ambient = _ambient(ambient)
    closed = [0] + [popcount(b) for b in range(1, ambient.size)]
    return moebius_transform(closed)


def euler_integral(f: ConstructibleFunction) -> Fraction:
    """Integral of f against the Euler characteristic (pushforward to a point)."""
    return sum((f.orbit_coeffs[1 << i] for i in range(f.ambient.n + 1)), Fraction(0))

