"""
Morphisms between projective spaces that respect the coordinate strata.

Three kinds are admitted:

* ``PowerMap(n, d)``: [x_0 : ... : x_n] -> [x_0^d : ... : x_n^d] on P^n,
* ``CoordinateInclusion``: P^m -> P^n placing coordinate j at index images[j],
* ``CoordinatePermutation``: P^n -> P^n sending coordinate i to index perm[i].

Each maps an orbit O_S onto a single orbit with finite fibers of constant
size, so pushforward of constructible functions is diagonal-like in the
orbit basis.  :func:`fiber_oracle` recomputes the fibers from scratch by
enumerating preimages and is used to check :func:`pushforward_cf`.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .constructible import ConstructibleFunction
from .homology import HomologyClass
from .strata import AmbientSpace, bits_of, members_of, popcount


def _ambient(a) -> AmbientSpace:
    return a if isinstance(a, AmbientSpace) else AmbientSpace(a)


def _map_bits(bits: int, images: Sequence[int]) -> int:
    return bits_of(images[i] for i in members_of(bits))


@dataclass(frozen=True)
class PowerMap:
    ambient: AmbientSpace
    d: int

    def __post_init__(self):
        object.__setattr__(self, "ambient", _ambient(self.ambient))
        if not isinstance(self.d, int) or self.d < 1:
            raise ValueError(f"power map degree must be >= 1, got {self.d!r}")

    @property
    def source(self):
        return self.ambient

    @property
    def target(self):
        return self.ambient

    def orbit_image(self, bits: int) -> tuple[int, int]:
        # covering of degree d^k on a k-dimensional torus orbit
        return bits, self.d ** (popcount(bits) - 1)

    def homology_factor(self, k: int) -> tuple[int, int]:
        return k, self.d**k

    @property
    def descriptor(self):
        return f"pow:{self.d}"


@dataclass(frozen=True)
class CoordinateInclusion:
    images: tuple[int, ...]
    target: AmbientSpace

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        object.__setattr__(self, "target", _ambient(self.target))
        if not self.images:
            raise ValueError("an inclusion needs at least one coordinate")
        if len(set(self.images)) != len(self.images):
            raise ValueError(f"inclusion {self.images} is not injective")
        if min(self.images) < 0 or max(self.images) > self.target.n:
            raise ValueError(f"inclusion {self.images} does not land in {self.target}")

    @classmethod
    def standard(cls, m: int, n: int) -> "CoordinateInclusion":
        """P^m as the first m+1 coordinates of P^n."""
        return cls(tuple(range(m + 1)), n)

    @classmethod
    def omitting(cls, n: int, j: int) -> "CoordinateInclusion":
        """P^(n-1) -> P^n onto the hyperplane x_j = 0, order preserving."""
        return cls(tuple(i for i in range(n + 1) if i != j), n)

    @property
    def source(self):
        return AmbientSpace(len(self.images) - 1)

    def orbit_image(self, bits):
        return _map_bits(bits, self.images), 1

    def homology_factor(self, k):
        return k, 1

    @property
    def descriptor(self):
        return "incl:" + ",".join(map(str, self.images))


@dataclass(frozen=True)
class CoordinatePermutation:
    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"{self.perm} is not a permutation of 0..{len(self.perm) - 1}")
        AmbientSpace(len(self.perm) - 1)

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "CoordinatePermutation":
        p = list(range(n + 1))
        p[i], p[j] = p[j], p[i]
        return cls(tuple(p))

    @property
    def source(self):
        return AmbientSpace(len(self.perm) - 1)

    target = source

    def orbit_image(self, bits):
        return _map_bits(bits, self.perm), 1

    def homology_factor(self, k):
        # projective linear maps are homotopic to the identity
        return k, 1

    @property
    def descriptor(self):
        return "perm:" + ",".join(map(str, self.perm))


@dataclass(frozen=True)
class Pipeline:
    """A composite of maps, applied left to right."""

    maps: tuple

    @property
    def source(self):
        return self.maps[0].source

    @property
    def target(self):
        return self.maps[-1].target


VarietyMap = PowerMap | CoordinateInclusion | CoordinatePermutation


def compose(maps: Sequence) -> Pipeline:
    maps = tuple(maps)
    if not maps:
        raise ValueError("cannot compose an empty sequence of maps")
    flat = []
    for m in maps:
        flat.extend(m.maps if isinstance(m, Pipeline) else (m,))
    for a, b in zip(flat, flat[1:]):
        if a.target != b.source:
            raise ValueError(f"cannot follow {a.descriptor} ({a.target}) by {b.descriptor} ({b.source})")
    return Pipeline(tuple(flat))


def normal_form(m) -> Pipeline:
    """Rewrite any map or pipeline as an inclusion followed by one power map.

    Power maps commute with coordinate maps and multiply in degree, so a
    pipeline is determined by where each source coordinate lands and by
    the product of its degrees.
    """
    steps = m.maps if isinstance(m, Pipeline) else (m,)
    images = tuple(range(steps[0].source.n + 1))
    degree = 1
    for step in steps:
        if isinstance(step, PowerMap):
            degree *= step.d
        elif isinstance(step, CoordinateInclusion):
            images = tuple(step.images[i] for i in images)
        elif isinstance(step, CoordinatePermutation):
            images = tuple(step.perm[i] for i in images)
        else:
            raise TypeError(f"unsupported map {step!r}")
    target = steps[-1].target
    return Pipeline((CoordinateInclusion(images, target), PowerMap(target, degree)))


def _check_source(m, ambient):
    if ambient != m.source:
        raise ValueError(f"map has source {m.source}, argument lives in {ambient}")


def pushforward_cf(m, f: ConstructibleFunction) -> ConstructibleFunction:
    if isinstance(m, Pipeline):
        for step in m.maps:
            f = pushforward_cf(step, f)
        return f
    _check_source(m, f.ambient)
    out = [Fraction(0)] * m.target.size
    for bits in range(1, f.ambient.size):
        c = f.orbit_coeffs[bits]
        if c:
            image, mult = m.orbit_image(bits)
            out[image] += mult * c
    return ConstructibleFunction(m.target, tuple(out))


def pushforward_homology(m, h: HomologyClass) -> HomologyClass:
    if isinstance(m, Pipeline):
        for step in m.maps:
            h = pushforward_homology(step, h)
        return h
    _check_source(m, h.ambient)
    out = [Fraction(0)] * (m.target.n + 1)
    for k, c in enumerate(h.coeffs):
        j, factor = m.homology_factor(k)
        out[j] += factor * c
    return HomologyClass(m.target, tuple(out))


# -- brute-force fibers --------------------------------------------------------

def _power_fiber(d: int, support: tuple[int, ...]) -> int:
    """Number of points [y] with [y_0^d : ... : y_n^d] equal to a fixed point of this support.

    Take the target point with every supported coordinate equal to 1.  A
    preimage has y_i = zeta^(e_i) * c on the support and 0 elsewhere, with
    zeta a primitive d-th root of unity; two exponent tuples give the same
    projective point iff they differ by a constant mod d.
    """
    classes = set()
    for exps in itertools.product(range(d), repeat=len(support)):
        shift = exps[0]
        classes.add(tuple((e - shift) % d for e in exps))
    return len(classes)


def fiber_oracle(m, target_support) -> list[tuple[tuple[int, ...], int]]:
    """Preimage of a point with the given support, grouped by source stratum.

    Returns [(source_support, euler characteristic of the fiber part)].
    Fibers here are finite, so the Euler characteristic is a point count.
    """
    T = tuple(sorted(target_support))
    if not T or T[0] < 0 or T[-1] > m.target.n:
        raise ValueError(f"support {T} is not a point of {m.target}")
    if isinstance(m, PowerMap):
        return [(T, _power_fiber(m.d, T))]
    if isinstance(m, CoordinateInclusion):
        inverse = {img: j for j, img in enumerate(m.images)}
        if not all(t in inverse for t in T):
            return []
        return [(tuple(sorted(inverse[t] for t in T)), 1)]
    if isinstance(m, CoordinatePermutation):
        inverse = {img: j for j, img in enumerate(m.perm)}
        return [(tuple(sorted(inverse[t] for t in T)), 1)]
    raise TypeError(f"no fiber oracle for {type(m).__name__}")


def pushforward_by_fibers(m, f: ConstructibleFunction) -> ConstructibleFunction:
    """f_* computed pointwise as y -> sum over the fiber of f times chi."""
    _check_source(m, f.ambient)
    values = {}
    for bits in range(1, m.target.size):
        total = Fraction(0)
        for src, chi in fiber_oracle(m, members_of(bits)):
            total += chi * f.coefficient(src)
        values[bits] = total
    return ConstructibleFunction.from_orbit_values(m.target, values)


def parse_map(descriptor: str, ambient: int, target: int | None = None):
    """Build a map from ``pow:d``, ``incl:i0,...,im`` or ``perm:p0,...,pn``.

    ``ambient`` is the source dimension.  An inclusion lands in P^target,
    defaulting to the smallest projective space containing its image.
    """
    kind, sep, rest = descriptor.partition(":")
    if not sep or not rest:
        raise ValueError(f"bad map descriptor {descriptor!r}")
    try:
        args = [int(x) for x in rest.split(",")]
    except ValueError:
        raise ValueError(f"bad map descriptor {descriptor!r}") from None
    if kind == "pow":
        if len(args) != 1:
            raise ValueError("pow takes a single degree")
        return PowerMap(AmbientSpace(ambient), args[0])
    if kind == "incl":
        if len(args) != ambient + 1:
            raise ValueError(f"incl needs {ambient + 1} indices for P^{ambient}")
        return CoordinateInclusion(tuple(args), max(args) if target is None else target)
    if kind == "perm":
        if len(args) != ambient + 1:
            raise ValueError(f"perm needs {ambient + 1} indices for P^{ambient}")
        return CoordinatePermutation(tuple(args))
    raise ValueError(f"unknown map kind {kind!r}")
