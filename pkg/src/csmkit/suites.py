"""Batch verifiers over grids of (n, i, d) cells."""

from .constructible import indicator_orbit
from .csm import Witness, csm, verify_quotient_isomorphism, verify_theorem1
from .strata import AmbientSpace
from .varmaps import (
    CoordinateInclusion,
    CoordinatePermutation,
    PowerMap,
    pushforward_cf,
    pushforward_homology,
)

DEFAULT_NATURALITY_DEGREES = (1, 2, 3, 5)
DEFAULT_QUOTIENT_DEGREES = (1, 2, 3, 4, 5)


def generator_maps(n: int, degrees=DEFAULT_NATURALITY_DEGREES) -> list:
    """Generators with target P^n: power maps, hyperplane inclusions, adjacent swaps."""
    gens = [PowerMap(AmbientSpace(n), d) for d in degrees]
    if n >= 1:
        gens += [CoordinateInclusion.omitting(n, j) for j in range(n + 1)]
        gens += [CoordinatePermutation.transposition(n, i, i + 1) for i in range(n)]
    return gens


def naturality_square(m, f) -> Witness:
    lhs = csm(pushforward_cf(m, f))
    rhs = pushforward_homology(m, csm(f))
    return Witness("naturality", {"map": m.descriptor, "source": m.source.n}, lhs, rhs, lhs == rhs)


def check_naturality(m) -> Witness:
    """The naturality square for ``m`` on every orbit indicator of its source."""
    failures = []
    strata = m.source.strata()
    for S in strata:
        w = naturality_square(m, indicator_orbit(S))
        if not w.ok:
            failures.append({"stratum": list(S.members), "lhs": w.lhs.to_json(), "rhs": w.rhs.to_json()})
    return Witness(
        "naturality",
        {"map": m.descriptor, "source": m.source.n, "target": m.target.n},
        len(strata) - len(failures),
        len(strata),
        not failures,
        {"failures": failures},
    )


def naturality_suite(max_n: int, degrees=DEFAULT_NATURALITY_DEGREES) -> list[Witness]:
    return [check_naturality(g) for n in range(max_n + 1) for g in generator_maps(n, degrees)]


def theorem1_suite(max_n: int) -> list[Witness]:
    return [verify_theorem1(n, i) for n in range(1, max_n + 1) for i in range(n)]


def quotient_suite(max_n: int, degrees=DEFAULT_QUOTIENT_DEGREES) -> list[Witness]:
    return [verify_quotient_isomorphism(n, d) for n in range(max_n + 1) for d in degrees]


SUITES = {
    "naturality": naturality_suite,
    "theorem1": theorem1_suite,
    "quotient": quotient_suite,
}


def describe(w: Witness) -> str:
    args = " ".join(f"{k}={v}" for k, v in w.inputs.items())
    return f"{'PASS' if w.ok else 'FAIL'} {w.name} {args}"
