"""
The Chern-Schwartz-MacPherson transformation on coordinate-constructible functions.

The primary rule works in the orbit basis: csm(1_{O_S}) = [P^(|S|-1)].
An independent route expands f in characteristic functions of coordinate
subspaces and applies c(T P^k) cap [P^k] = sum_i C(k+1, i+1) [P^i] to each;
:func:`csm_closed_rule` implements it and the tests keep the two in step.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .constructible import ConstructibleFunction, indicator_projective
from .homology import HomologyClass, component
from .strata import AmbientSpace, popcount, superset_moebius_transform
from .varmaps import CoordinateInclusion, PowerMap, pushforward_cf, pushforward_homology


def csm(f: ConstructibleFunction) -> HomologyClass:
    out = [Fraction(0)] * (f.ambient.n + 1)
    for bits in range(1, f.ambient.size):
        c = f.orbit_coeffs[bits]
        if c:
            out[popcount(bits) - 1] += c
    return HomologyClass(f.ambient, tuple(out))


def total_chern_coefficients(k: int) -> tuple[int, ...]:
    """Coefficients of c(T P^k) = (1+h)^(k+1), truncated at h^k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return tuple(comb(k + 1, j) for j in range(k + 1))


def csm_of_subspace(ambient: AmbientSpace, size: int) -> HomologyClass:
    """c(T P_S) cap [P_S] for a coordinate subspace with |S| = size, pushed into the ambient."""
    k = size - 1
    out = [Fraction(0)] * (ambient.n + 1)
    # c_j(T P^k) cap [P^k] is C(k+1, j) times the class of a (k-j)-plane
    for j, c in enumerate(total_chern_coefficients(k)):
        out[k - j] += c
    return HomologyClass(ambient, tuple(out))


def csm_closed_rule(f: ConstructibleFunction) -> HomologyClass:
    closed = superset_moebius_transform(f.orbit_coeffs)
    total = HomologyClass.zero(f.ambient)
    by_size: dict[int, Fraction] = {}
    for bits in range(1, f.ambient.size):
        if closed[bits]:
            s = popcount(bits)
            by_size[s] = by_size.get(s, Fraction(0)) + closed[bits]
    for s, a in sorted(by_size.items()):
        total = total + csm_of_subspace(f.ambient, s).scale(a)
    return total


def csm_component(f: ConstructibleFunction, i: int) -> HomologyClass:
    return component(csm(f), i)


@dataclass
class Witness:
    """Outcome of a verifier: the inputs, both sides compared, and the verdict."""

    name: str
    inputs: dict
    lhs: object
    rhs: object
    ok: bool
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        def enc(x):
            if hasattr(x, "to_json"):
                return x.to_json()
            if isinstance(x, Fraction):
                return [x.numerator, x.denominator]
            if isinstance(x, (list, tuple)):
                return [enc(y) for y in x]
            return x

        return {
            "check": self.name,
            "inputs": self.inputs,
            "lhs": enc(self.lhs),
            "rhs": enc(self.rhs),
            "equal": self.ok,
            **{k: enc(v) for k, v in self.details.items()},
        }


def verify_theorem1(n: int, i: int) -> Witness:
    """Check mpc_i(1_{P^n}) = C(n+1, i+1) * incl_* mpc_i(1_{P^i}) for P^i inside P^n."""
    if not 0 <= i < n:
        raise ValueError(f"need 0 <= i < n, got n={n}, i={i}")
    lhs = csm_component(indicator_projective(n), i)
    incl = CoordinateInclusion.standard(i, n)
    rhs = pushforward_homology(incl, csm_component(indicator_projective(i), i)).scale(comb(n + 1, i + 1))
    return Witness("theorem1", {"n": n, "i": i}, lhs, rhs, lhs == rhs)


def deck_group_order(n: int, d: int) -> int:
    """Order of the deck group of the d-th power map on P^n, by enumeration.

    Deck transformations are diagonal scalings by d-th roots of unity,
    modulo the overall scalar.
    """
    seen = set()
    for idx in range(d ** (n + 1)):
        exps = []
        for _ in range(n + 1):
            idx, e = divmod(idx, d)
            exps.append(e)
        seen.add(tuple((e - exps[0]) % d for e in exps))
    return len(seen)


def verify_quotient_isomorphism(n: int, d: int) -> Witness:
    """P^n as the quotient of P^n by the deck group G of the d-th power map.

    G acts on H_*(P^n; Q) trivially, so the invariant part is everything and
    the pushforward must be bijective degree by degree.  Also checks that
    f_*(1_{P^n}) = |G| * 1_{P^n} plus a function supported in lower dimension.
    """
    if n < 0 or d < 1:
        raise ValueError(f"need n >= 0 and d >= 1, got n={n}, d={d}")
    f = PowerMap(AmbientSpace(n), d)
    diagonal = [pushforward_homology(f, HomologyClass.linear_subspace(n, k))[k] for k in range(n + 1)]
    off_diagonal_zero = all(
        pushforward_homology(f, HomologyClass.linear_subspace(n, k)) == HomologyClass.linear_subspace(n, k).scale(diagonal[k])
        for k in range(n + 1)
    )
    bijective = off_diagonal_zero and all(x != 0 for x in diagonal)

    order = deck_group_order(n, d)
    one = indicator_projective(n)
    pushed = pushforward_cf(f, one)
    remainder = pushed - one.scale(order)
    top = pushed.orbit_coeffs[one.ambient.full]
    lower = all(c == 0 or popcount(bits) - 1 < n for bits, c in enumerate(remainder.orbit_coeffs))
    ok = bijective and top == order and lower
    return Witness(
        "quotient",
        {"n": n, "d": d},
        top,
        order,
        ok,
        {"diagonal": diagonal, "bijective": bijective, "remainder_lower_dimensional": lower},
    )


@dataclass
class Decomposition:
    coefficients: tuple[Fraction, ...]
    residuals: tuple[HomologyClass, ...]

    @property
    def residual_vanishes(self) -> bool:
        return all(r.is_zero() for r in self.residuals)


def mpc_on_projective(i: int, m: int) -> HomologyClass:
    """mpc_i(1_{P^m}) = C(m+1, i+1) [P^i] (zero when i > m)."""
    h = HomologyClass.zero(m)
    if i > m:
        return h
    return HomologyClass.linear_subspace(m, i).scale(comb(m + 1, i + 1))


def decompose_into_csm(values: Sequence[HomologyClass]) -> Decomposition:
    """Write a transformation as sum r_i mpc_i from its values on 1_{P^0}, ..., 1_{P^N}.

    ``values[i]`` is tau(1_{P^i}) in H_*(P^i).  r_i is read off as the
    top-dimensional coefficient; the residual tau - sum r_i mpc_i is
    returned on every 1_{P^i} so callers can check it vanishes.
    """
    for i, h in enumerate(values):
        if h.ambient.n != i:
            raise ValueError(f"values[{i}] should live on P^{i}, got {h.ambient}")
    r = tuple(h[i] for i, h in enumerate(values))
    residuals = []
    for m, h in enumerate(values):
        expected = HomologyClass.zero(m)
        for i, ri in enumerate(r):
            if ri:
                expected = expected + mpc_on_projective(i, m).scale(ri)
        residuals.append(h - expected)
    return Decomposition(r, tuple(residuals))
