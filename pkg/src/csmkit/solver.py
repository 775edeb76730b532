"""
Naturality constraints on an unknown transformation tau: C -> H_*( ; Q).

The unknowns are the values tau(1_{O_S}) in H_*(P^m) for every orbit of
every P^m with m <= N, one rational per homological degree.  Linearity of
tau is built in.  Each generator map g: P^a -> P^b and each orbit O_S of
P^a contribute the commuting square

    tau(g_* 1_{O_S}) - g_* tau(1_{O_S}) = 0

expanded degree by degree.  The solution space is compared against the
span of the components mpc_0, ..., mpc_N restricted to these objects.

Only the coordinate subcategory is modelled.  Nothing here says anything
about transformations on varieties outside it.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .constructible import ConstructibleFunction, indicator_projective, indicator_U
from .csm import Witness, decompose_into_csm
from .homology import HomologyClass
from .strata import AmbientSpace, StratumSet, canonical_bits, popcount
from .varmaps import (
    CoordinateInclusion,
    CoordinatePermutation,
    PowerMap,
    pushforward_homology,
)

DEFAULT_SOLVER_MAX_AMBIENT = 6


@dataclass(frozen=True)
class SubcategorySpec:
    N: int
    power_degrees: frozenset = frozenset({2, 3})
    include_inclusions: bool = True
    include_permutations: bool = True
    max_ambient: int = DEFAULT_SOLVER_MAX_AMBIENT

    def __post_init__(self):
        object.__setattr__(self, "power_degrees", frozenset(self.power_degrees))
        if self.N < 0:
            raise ValueError("N must be nonnegative")
        if self.N > self.max_ambient:
            raise ValueError(f"N={self.N} exceeds the solver cap {self.max_ambient}")
        if any(d < 2 for d in self.power_degrees):
            raise ValueError("power-map degrees must be >= 2")

    def generators(self) -> list:
        gens = []
        for m in range(self.N + 1):
            for d in sorted(self.power_degrees):
                gens.append(PowerMap(AmbientSpace(m), d))
        if self.include_inclusions:
            for m in range(1, self.N + 1):
                gens.extend(CoordinateInclusion.omitting(m, j) for j in range(m + 1))
        if self.include_permutations:
            for m in range(1, self.N + 1):
                gens.extend(CoordinatePermutation.transposition(m, i, i + 1) for i in range(m))
        return gens

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "power_degrees": sorted(self.power_degrees),
            "include_inclusions": self.include_inclusions,
            "include_permutations": self.include_permutations,
        }


def unknown_layout(N: int) -> list[tuple[int, int, int]]:
    """Unknowns (m, stratum bits, degree) in canonical order."""
    return [
        (m, bits, j)
        for m in range(N + 1)
        for bits in canonical_bits(m)
        for j in range(m + 1)
    ]


def _kind(g) -> str:
    return {PowerMap: "power", CoordinateInclusion: "inclusion", CoordinatePermutation: "permutation"}[type(g)]


@dataclass
class TransformationSystem:
    spec: SubcategorySpec
    unknowns: list[tuple[int, int, int]]
    index: dict[tuple[int, int, int], int]
    rows: list[dict[int, Fraction]]
    provenance: list[str]

    @property
    def unknown_count(self):
        return len(self.unknowns)

    @property
    def constraint_count(self):
        return len(self.rows)

    def constraint_counts(self) -> dict[str, int]:
        counts = {"power": 0, "inclusion": 0, "permutation": 0}
        for tag in self.provenance:
            counts[tag.split()[0]] += 1
        return counts

    def residual(self, candidate: "CandidateTransformation") -> list[Fraction]:
        return linalg.apply(self.rows, candidate.to_vector(self.index))


def assemble(spec: SubcategorySpec) -> TransformationSystem:
    unknowns = unknown_layout(spec.N)
    index = {u: c for c, u in enumerate(unknowns)}
    rows, provenance = [], []
    for g in spec.generators():
        a, b = g.source.n, g.target.n
        # g_* on homology as a matrix: column k is the image of [P^k]
        hmat = [pushforward_homology(g, HomologyClass.linear_subspace(a, k)) for k in range(a + 1)]
        for S in canonical_bits(a):
            T, mult = g.orbit_image(S)
            for j in range(b + 1):
                row: dict[int, Fraction] = {}
                col = index[(b, T, j)]
                row[col] = row.get(col, 0) + Fraction(mult)
                for k in range(a + 1):
                    coef = hmat[k][j]
                    if coef:
                        col = index[(a, S, k)]
                        row[col] = row.get(col, 0) - coef
                row = {c: v for c, v in row.items() if v}
                if row:
                    rows.append(row)
                    provenance.append(
                        f"{_kind(g)} {g.descriptor} on P^{a}: orb{StratumSet(AmbientSpace(a), S)} degree {j}"
                    )
    return TransformationSystem(spec, unknowns, index, rows, provenance)


@dataclass(frozen=True)
class CandidateTransformation:
    """Values tau(1_{O_S}) for every orbit of every P^m, m <= N."""

    N: int
    values: dict  # (m, bits) -> HomologyClass

    @classmethod
    def from_vector(cls, N: int, vector: dict) -> "CandidateTransformation":
        values = {}
        for m in range(N + 1):
            for bits in canonical_bits(m):
                values[(m, bits)] = HomologyClass.zero(m)
        layout = unknown_layout(N)
        coeffs = {key: [Fraction(0)] * (key[0] + 1) for key in values}
        for col, c in vector.items():
            m, bits, j = layout[col]
            coeffs[(m, bits)][j] = Fraction(c)
        return cls(N, {key: HomologyClass.of(key[0], cs) for key, cs in coeffs.items()})

    @classmethod
    def from_rule(cls, N: int, rule) -> "CandidateTransformation":
        """Build from ``rule(m, bits) -> HomologyClass``."""
        return cls(N, {(m, bits): rule(m, bits) for m in range(N + 1) for bits in canonical_bits(m)})

    def to_vector(self, index: dict) -> dict[int, Fraction]:
        v = {}
        for (m, bits), h in self.values.items():
            for j, c in enumerate(h.coeffs):
                if c:
                    v[index[(m, bits, j)]] = c
        return v

    def value(self, S: StratumSet) -> HomologyClass:
        return self.values[(S.ambient.n, S.bits)]

    def evaluate(self, f: ConstructibleFunction) -> HomologyClass:
        m = f.ambient.n
        if m > self.N:
            raise ValueError(f"transformation is only defined up to P^{self.N}")
        total = HomologyClass.zero(m)
        for bits in range(1, f.ambient.size):
            c = f.orbit_coeffs[bits]
            if c:
                total = total + self.values[(m, bits)].scale(c)
        return total

    def values_on_projective_spaces(self) -> list[HomologyClass]:
        return [self.evaluate(indicator_projective(m)) for m in range(self.N + 1)]

    def is_zero(self) -> bool:
        return all(h.is_zero() for h in self.values.values())

    def to_json(self) -> list:
        out = []
        for m in range(self.N + 1):
            for bits in canonical_bits(m):
                h = self.values[(m, bits)]
                for j, c in enumerate(h.coeffs):
                    if c:
                        out.append([m, list(StratumSet(AmbientSpace(m), bits).members), j, c.numerator, c.denominator])
        return out


def mpc_restriction(N: int, i: int) -> CandidateTransformation:
    """The component mpc_i on the coordinate subcategory: 1_{O_S} -> [P^i] iff |S| = i+1."""

    def rule(m, bits):
        if popcount(bits) - 1 == i:
            return HomologyClass.linear_subspace(m, i)
        return HomologyClass.zero(m)

    return CandidateTransformation.from_rule(N, rule)


def csm_restriction(N: int) -> CandidateTransformation:
    return CandidateTransformation.from_rule(
        N, lambda m, bits: HomologyClass.linear_subspace(m, popcount(bits) - 1)
    )


def solve(system: TransformationSystem) -> list[CandidateTransformation]:
    """Reduced-echelon basis of the solution space.

    Pivots follow the canonical unknown order, so equal solution spaces
    give identical bases.
    """
    n = system.unknown_count
    null = linalg.nullspace(system.rows, n)
    echelon, _ = linalg.rref(null, n)
    return [CandidateTransformation.from_vector(system.spec.N, v) for v in echelon]


def verify_eigenvalue_vanishing(solution: CandidateTransformation, i: int) -> Witness:
    """Degree-i part of tau(1_{U_k}) vanishes on every P^m for every k != i."""
    if not 0 <= i <= solution.N:
        raise ValueError(f"degree {i} out of range 0..{solution.N}")
    offenders = []
    for m in range(i, solution.N + 1):
        for k in range(m + 1):
            if k == i:
                continue
            c = solution.evaluate(indicator_U(m, k))[i]
            if c:
                offenders.append({"m": m, "k": k, "coefficient": [c.numerator, c.denominator]})
    return Witness("eigenvalue_vanishing", {"i": i, "N": solution.N}, len(offenders), 0, not offenders,
                   {"offenders": offenders})


@dataclass
class UniquenessReport:
    spec: SubcategorySpec
    unknown_count: int
    constraint_count: int
    constraint_counts: dict
    dimension: int
    expected_dimension: int
    span_equal: bool
    basis: list
    csm_coefficients: list
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "unknown_count": self.unknown_count,
            "constraint_count": self.constraint_count,
            "constraint_counts": self.constraint_counts,
            "dimension": self.dimension,
            "expected_dimension": self.expected_dimension,
            "span_equal": self.span_equal,
            "verdict": self.verdict,
            "basis": [
                {
                    "csm_coefficients": [[r.numerator, r.denominator] for r in rs],
                    "values": b.to_json(),
                }
                for b, rs in zip(self.basis, self.csm_coefficients)
            ],
            "failures": self.failures,
        }


def uniqueness_report(spec: SubcategorySpec) -> UniquenessReport:
    system = assemble(spec)
    basis = solve(system)
    N = spec.N
    mpc = [mpc_restriction(N, i).to_vector(system.index) for i in range(N + 1)]
    span_equal = linalg.same_row_space(
        [b.to_vector(system.index) for b in basis], mpc, system.unknown_count
    )
    failures = []
    if len(basis) != N + 1:
        failures.append(f"solution dimension {len(basis)} differs from expected {N + 1}")
    if not span_equal:
        failures.append("solution space differs from span of mpc_0..mpc_N")
    coefficients = []
    for n_b, b in enumerate(basis):
        dec = decompose_into_csm(b.values_on_projective_spaces())
        coefficients.append(dec.coefficients)
        combo = CandidateTransformation.from_rule(
            N,
            lambda m, bits: HomologyClass.linear_subspace(m, popcount(bits) - 1).scale(
                dec.coefficients[popcount(bits) - 1]
            ),
        )
        bad = [key for key in b.values if b.values[key] != combo.values[key]]
        if bad:
            m, bits = bad[0]
            failures.append(
                f"basis vector {n_b}: residual after subtracting sum r_i mpc_i is nonzero "
                f"on {len(bad)} orbit(s), first P^{m} orb{StratumSet(AmbientSpace(m), bits)}"
            )
    return UniquenessReport(
        spec=spec,
        unknown_count=system.unknown_count,
        constraint_count=system.constraint_count,
        constraint_counts=system.constraint_counts(),
        dimension=len(basis),
        expected_dimension=N + 1,
        span_equal=span_equal,
        basis=basis,
        csm_coefficients=coefficients,
        failures=failures,
    )


# -- experimental: integral solutions ----------------------------------------

@dataclass
class IntegralReport:
    """EXPERIMENTAL.  Whether the integer solutions are the Z-span of mpc_0..mpc_N.

    A positive answer on the coordinate subcategory is consistent with, but
    proves nothing about, the integral question for all varieties.
    """

    spec: SubcategorySpec
    lattice_rank: int
    spanned_by_mpc: bool
    lattice_basis: list

    def to_json(self):
        return {
            "experimental": True,
            "spec": self.spec.to_json(),
            "lattice_rank": self.lattice_rank,
            "spanned_by_mpc": self.spanned_by_mpc,
        }


def integral_report(spec: SubcategorySpec) -> IntegralReport:
    system = assemble(spec)
    n = system.unknown_count
    lattice = linalg.integer_kernel(system.rows, n)
    mpc = [mpc_restriction(spec.N, i).to_vector(system.index) for i in range(spec.N + 1)]
    spanned = len(lattice) == len(mpc)
    if spanned:
        # mpc vectors are integer solutions, so they lie in the lattice;
        # equality holds iff every lattice vector is an integer combination of them
        for v in lattice:
            x = linalg.solve_in_span(mpc, v, n)
            if x is None or any(c.denominator != 1 for c in x):
                spanned = False
                break
    basis = [CandidateTransformation.from_vector(spec.N, v) for v in lattice]
    return IntegralReport(spec, len(lattice), spanned, basis)


def satisfies(system: TransformationSystem, candidate: CandidateTransformation) -> bool:
    return not any(system.residual(candidate))


def solution_dimension(spec: SubcategorySpec) -> int:
    system = assemble(spec)
    return system.unknown_count - linalg.rank(system.rows, system.unknown_count)

