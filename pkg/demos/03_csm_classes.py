"""
Chern-Schwartz-MacPherson classes and the binomial identity
===========================================================

csm sends the indicator of an orbit O_S to the class of a linear subspace
of dimension |S| - 1.  On 1_{P^n} this gives sum_i C(n+1, i+1) [P^i].
"""

from math import comb

from csmkit import (
    PowerMap,
    AmbientSpace,
    csm,
    csm_closed_rule,
    indicator_projective,
    parse,
    pushforward_cf,
    pushforward_homology,
    verify_quotient_isomorphism,
    verify_theorem1,
)

for n in range(5):
    h = csm(indicator_projective(n))
    assert h == csm_closed_rule(indicator_projective(n))
    print(f"csm(1_P{n}) =", h, "| binomials:", [comb(n + 1, i + 1) for i in range(n + 1)])

# the identity tau(1_{P^n}) = C(n+1, i+1) tau(1_{P^i}) for tau = mpc_i
w = verify_theorem1(4, 1)
print("binomial identity n=4, i=1:", w.lhs, "==", w.rhs, w.ok)

# naturality along the cubing map, on a mixed function
g = parse("2 sub{0,1} - orb{1,2} + 1/3 orb{0,1,2}", 2)
cube = PowerMap(AmbientSpace(2), 3)
print("csm(f_* g) =", csm(pushforward_cf(cube, g)))
print("f_* csm(g) =", pushforward_homology(cube, csm(g)))

# P^3 as the quotient of P^3 by the deck group of the squaring map
w = verify_quotient_isomorphism(3, 2)
print("diagonal of f_* on H_*:", w.details["diagonal"], "| top coefficient", w.lhs, "= |G|", w.rhs)
