"""
Which transformations commute with pushforward?
===============================================

Treat tau(1_{O_S}) in H_*(P^m) as unknowns for every orbit of P^0..P^N,
impose naturality along power maps, coordinate inclusions and coordinate
swaps, and solve exactly over Q.  With the default generators only the
components mpc_0, ..., mpc_N survive.  Dropping the inclusions leaves
room for transformations that differ from ambient to ambient.
"""

from csmkit import SubcategorySpec, uniqueness_report
from csmkit.solver import integral_report

for spec in (
    SubcategorySpec(4),
    SubcategorySpec(4, {2}),
    SubcategorySpec(3, {2}, include_inclusions=False),
    SubcategorySpec(3, set(), include_inclusions=False),
):
    r = uniqueness_report(spec)
    print(
        f"N={spec.N} degrees={sorted(spec.power_degrees)} incl={spec.include_inclusions} "
        f"perm={spec.include_permutations}: {r.unknown_count} unknowns, "
        f"{r.constraint_count} constraints, dimension {r.dimension} -> {r.verdict}"
    )

# each basis vector of the default solution space is one component
r = uniqueness_report(SubcategorySpec(3))
for b, coeffs in zip(r.basis, r.csm_coefficients):
    print("basis vector =", " + ".join(f"{c}*mpc_{i}" for i, c in enumerate(coeffs) if c))

# experimental: integer solutions on this subcategory
rep = integral_report(SubcategorySpec(3))
print("integer solution lattice rank", rep.lattice_rank, "| Z-span of mpc_i:", rep.spanned_by_mpc)
