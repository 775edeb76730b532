"""
Rational homology of P^n, free on the classes [P^0], ..., [P^n].

The same vectors model H_{2*}(P^n; Q) and A_*(P^n) (x) Q; on projective
space the cycle map identifies them degree by degree.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .strata import AmbientSpace


@dataclass(frozen=True)
class HomologyClass:
    ambient: AmbientSpace
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.ambient.n + 1:
            raise ValueError(
                f"expected {self.ambient.n + 1} coefficients for {self.ambient}, got {len(self.coeffs)}"
            )

    @classmethod
    def of(cls, ambient, coeffs: Sequence) -> "HomologyClass":
        if isinstance(ambient, int):
            ambient = AmbientSpace(ambient)
        return cls(ambient, tuple(Fraction(c) for c in coeffs))

    @classmethod
    def zero(cls, ambient) -> "HomologyClass":
        if isinstance(ambient, int):
            ambient = AmbientSpace(ambient)
        return cls(ambient, (Fraction(0),) * (ambient.n + 1))

    @classmethod
    def linear_subspace(cls, ambient, k: int) -> "HomologyClass":
        """The class [P^k] of a k-dimensional linear subspace."""
        h = cls.zero(ambient)
        _check_degree(h, k)
        c = list(h.coeffs)
        c[k] = Fraction(1)
        return cls(h.ambient, tuple(c))

    def __getitem__(self, k):
        return self.coeffs[k]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other):
        if not isinstance(other, HomologyClass):
            return False
        if other.ambient != self.ambient:
            raise ValueError(f"ambient mismatch: {self.ambient} vs {other.ambient}")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return HomologyClass(self.ambient, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return HomologyClass(self.ambient, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return self.scale(-1)

    def scale(self, r) -> "HomologyClass":
        r = Fraction(r)
        return HomologyClass(self.ambient, tuple(r * c for c in self.coeffs))

    def __mul__(self, r):
        if isinstance(r, (int, Fraction)):
            return self.scale(r)
        return NotImplemented

    __rmul__ = __mul__

    def to_json(self) -> list:
        return [[k, c.numerator, c.denominator] for k, c in enumerate(self.coeffs)]

    def __str__(self):
        terms = [f"{c}[P^{k}]" for k, c in reversed(list(enumerate(self.coeffs))) if c]
        return " + ".join(terms) if terms else "0"


def _check_degree(h: HomologyClass, i: int):
    if not 0 <= i <= h.ambient.n:
        raise ValueError(f"degree {i} out of range 0..{h.ambient.n}")


def fundamental_class(ambient) -> HomologyClass:
    if isinstance(ambient, int):
        ambient = AmbientSpace(ambient)
    return HomologyClass.linear_subspace(ambient, ambient.n)


def component(h: HomologyClass, i: int) -> HomologyClass:
    _check_degree(h, i)
    return HomologyClass(
        h.ambient, tuple(c if k == i else Fraction(0) for k, c in enumerate(h.coeffs))
    )


def top_component(h: HomologyClass) -> HomologyClass:
    return component(h, h.ambient.n)
