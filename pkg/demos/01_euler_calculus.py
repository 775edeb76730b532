"""
Euler calculus on the coordinate strata of P^2
===============================================

Every function here is constant on the torus orbits O_S of P^2, so it is a
vector of 7 rationals, one per nonempty subset S of {0, 1, 2}.
"""

from csmkit import (
    AmbientSpace,
    StratumSet,
    euler_integral,
    evaluate,
    indicator_L,
    indicator_orbit,
    indicator_U,
    parse,
    serialize,
    strata_of_dimension,
)

P2 = AmbientSpace(2)

# the three coordinate lines of P^2, and the orbits they contain
print("1-dimensional strata:", [str(S) for S in strata_of_dimension(P2, 1)])

# L_1: points with at least one vanishing coordinate (the three lines)
L1 = indicator_L(P2, 1)
print("L_1 =", serialize(L1))

# U_1 = L_1 - L_0: exactly one vanishing coordinate (three punctured lines)
U1 = indicator_U(P2, 1)
assert U1 == L1 - indicator_L(P2, 0)
print("U_1 =", serialize(U1))

# only the torus-fixed points carry Euler characteristic
print("chi(L_1) =", euler_integral(L1))   # three lines meeting pairwise: 3*2 - 3
print("chi(U_1) =", euler_integral(U1))   # three copies of C*
print("chi(O_{0}) =", euler_integral(indicator_orbit(StratumSet.of(P2, [0]))))

# pointwise values are read off from the support of a point
print("U_1 at [1:1:0] =", evaluate(U1, [0, 1]))
print("U_1 at [1:1:1] =", evaluate(U1, [0, 1, 2]))

# the same objects through the expression language
f = parse("L(2,1) - L(2,0)")
print("parsed:", serialize(f), "| equals U_1:", f == U1)
print("chi(1/2 orb{0} + 1/2 orb{1}) =", euler_integral(parse("1/2 orb{0} + 1/2 orb{1}", 2)))
