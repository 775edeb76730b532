import sympy
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from csmkit import linalg
from csmkit.constructible import indicator_orbit, indicator_projective
from csmkit.csm import csm
from csmkit.solver import (
    CandidateTransformation,
    SubcategorySpec,
    assemble,
    csm_restriction,
    integral_report,
    mpc_restriction,
    satisfies,
    solution_dimension,
    solve,
    uniqueness_report,
    unknown_layout,
    verify_eigenvalue_vanishing,
)
from csmkit.homology import HomologyClass
from csmkit.strata import AmbientSpace


def sympy_dimension(spec):
    """Solution dimension from a dense sympy rank, independent of the sparse eliminator."""
    system = assemble(spec)
    n = system.unknown_count
    if not system.rows:
        return n
    M = sympy.Matrix([[int(r.get(c, 0)) for c in range(n)] for r in system.rows])
    return n - M.rank()


def test_unknown_count():
    assert len(unknown_layout(1)) == 1 * 1 + 3 * 2 == 7
    for N in range(5):
        assert len(unknown_layout(N)) == sum((2 ** (m + 1) - 1) * (m + 1) for m in range(N + 1))


@pytest.mark.parametrize(
    "spec, dim",
    [
        (SubcategorySpec(1, {2}), 2),
        (SubcategorySpec(2, {2}), 3),
        (SubcategorySpec(2, {2}, include_inclusions=False), 6),
    ],
)
def test_solution_dimensions(spec, dim):
    assert solution_dimension(spec) == dim == sympy_dimension(spec)


def test_no_constraints():
    spec = SubcategorySpec(2, set(), include_inclusions=False, include_permutations=False)
    system = assemble(spec)
    assert system.constraint_count == 0
    assert len(solve(system)) == system.unknown_count == 28


def test_solve_N3_matches_mpc():
    system = assemble(SubcategorySpec(3))
    basis = solve(system)
    assert len(basis) == 4
    mpc = [mpc_restriction(3, i).to_vector(system.index) for i in range(4)]
    reduced, _ = linalg.rref(mpc, system.unknown_count)
    assert [b.to_vector(system.index) for b in basis] == reduced


def test_csm_solves_every_spec():
    specs = [
        SubcategorySpec(N, degrees, incl, perm)
        for N in range(4)
        for degrees in ({2}, {3}, {2, 3, 5})
        for incl in (True, False)
        for perm in (True, False)
    ]
    for spec in specs:
        system = assemble(spec)
        assert satisfies(system, csm_restriction(spec.N))
        for i in range(spec.N + 1):
            assert satisfies(system, mpc_restriction(spec.N, i))


def test_csm_restriction_agrees_with_csm():
    t = csm_restriction(3)
    for m in range(4):
        for S in AmbientSpace(m).strata():
            assert t.evaluate(indicator_orbit(S)) == csm(indicator_orbit(S))
        assert t.evaluate(indicator_projective(m)) == csm(indicator_projective(m))


def test_degree_concentration():
    for spec in (SubcategorySpec(3, {2}, False, False), SubcategorySpec(3, {3}), SubcategorySpec(2, {5}, True, False)):
        for b in solve(assemble(spec)):
            for (m, bits), h in b.values.items():
                dim = bin(bits).count("1") - 1
                assert all(c == 0 for j, c in enumerate(h.coeffs) if j != dim)


def test_eigenvalue_vanishing():
    for i in range(4):
        assert verify_eigenvalue_vanishing(mpc_restriction(3, i), i)
    full = csm_restriction(3)
    for i in range(4):
        assert verify_eigenvalue_vanishing(full, i)
    zero = CandidateTransformation.from_vector(3, {})
    assert verify_eigenvalue_vanishing(zero, 2)


def test_eigenvalue_vanishing_catches_offender():
    def rule(m, bits):
        # put a degree-0 term on every orbit, violating concentration
        return HomologyClass.linear_subspace(m, 0)

    bad = CandidateTransformation.from_rule(2, rule)
    w = verify_eigenvalue_vanishing(bad, 0)
    assert not w.ok and w.details["offenders"]


def test_report_default_N4():
    r = uniqueness_report(SubcategorySpec(4))
    assert r.dimension == r.expected_dimension == 5
    assert r.span_equal and r.verdict == "PASS"
    assert all(c > 0 for c in r.constraint_counts.values())


def test_report_permutations_only():
    r = uniqueness_report(SubcategorySpec(3, set(), include_inclusions=False))
    assert r.verdict == "FAIL"
    assert r.dimension > 4
    assert r.failures


def test_report_degree_two_only():
    for N in range(5):
        r = uniqueness_report(SubcategorySpec(N, {2}))
        assert r.verdict == "PASS"
        assert r.to_json()["span_equal"] is True


def test_report_json_shape():
    data = uniqueness_report(SubcategorySpec(1)).to_json()
    assert set(data) >= {
        "spec", "unknown_count", "constraint_count", "dimension",
        "expected_dimension", "span_equal", "basis", "failures",
    }
    assert data["unknown_count"] == 7
    assert len(data["basis"]) == 2


def test_report_decomposes_basis_into_mpc():
    r = uniqueness_report(SubcategorySpec(3))
    # reduced echelon basis of span{mpc_i}: each basis vector is one component
    assert sorted(r.csm_coefficients) == sorted(tuple(int(i == j) for j in range(4)) for i in range(4))


def test_spec_limits():
    with pytest.raises(ValueError):
        SubcategorySpec(7)
    with pytest.raises(ValueError):
        SubcategorySpec(2, {1})
    assert SubcategorySpec(7, max_ambient=7).N == 7


def test_determinism():
    a = uniqueness_report(SubcategorySpec(3)).to_json()
    b = uniqueness_report(SubcategorySpec(3)).to_json()
    assert a == b


def test_monotonicity():
    flags = [
        SubcategorySpec(2, set(), False, False),
        SubcategorySpec(2, set(), False, True),
        SubcategorySpec(2, {2}, False, True),
        SubcategorySpec(2, {2}, True, True),
        SubcategorySpec(2, {2, 3}, True, True),
    ]
    dims = [solution_dimension(s) for s in flags]
    assert dims == sorted(dims, reverse=True)


@given(
    st.integers(0, 3),
    st.sets(st.integers(2, 4), max_size=2),
    st.booleans(),
    st.booleans(),
    st.sets(st.integers(2, 4), max_size=1),
    st.booleans(),
    st.booleans(),
)
@settings(max_examples=30, deadline=None)
def test_adding_generators_never_grows_solutions(N, degs, incl, perm, extra, more_incl, more_perm):
    small = SubcategorySpec(N, degs, incl, perm)
    big = SubcategorySpec(N, degs | extra, incl or more_incl, perm or more_perm)
    assert solution_dimension(big) <= solution_dimension(small)


def test_integral_experiment():
    rep = integral_report(SubcategorySpec(2))
    assert rep.lattice_rank == 3
    assert rep.spanned_by_mpc
    assert rep.to_json()["experimental"] is True
    loose = integral_report(SubcategorySpec(2, set(), include_inclusions=False))
    assert loose.lattice_rank == solution_dimension(SubcategorySpec(2, set(), include_inclusions=False))
    assert not loose.spanned_by_mpc


def test_reports_identical_across_threads():
    import json
    from concurrent.futures import ThreadPoolExecutor

    spec = SubcategorySpec(3)
    with ThreadPoolExecutor(4) as pool:
        outputs = list(pool.map(lambda _: json.dumps(uniqueness_report(spec).to_json()), range(4)))
    assert len(set(outputs)) == 1
