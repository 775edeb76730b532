"""
The squaring map and its pushforwards
=====================================

f: [x_0 : x_1 : x_2] -> [x_0^2 : x_1^2 : x_2^2] covers each k-dimensional
orbit with degree 2^k and multiplies H_{2k} by 2^k.
"""

from csmkit import (
    AmbientSpace,
    HomologyClass,
    PowerMap,
    fiber_oracle,
    indicator_projective,
    indicator_U,
    pushforward_cf,
    pushforward_homology,
    serialize,
)

P2 = AmbientSpace(2)
f = PowerMap(P2, 2)

# fibers, counted by brute-force enumeration of square-root choices
for support in ([0], [0, 1], [0, 1, 2]):
    print(f"fiber over a point with support {support}:", fiber_oracle(f, support))

# pushforward multiplies each orbit indicator by its covering degree
for k in range(3):
    print(f"f_* 1_U{k} =", serialize(pushforward_cf(f, indicator_U(P2, k))))

# on homology, degree k is multiplied by 2^k
print("f_* (1, 1, 1) =", pushforward_homology(f, HomologyClass.of(P2, [1, 1, 1])))

# the top orbit is covered |G| = 4 times; lower strata make up the rest
print("f_* 1_P2 =", serialize(pushforward_cf(f, indicator_projective(P2))))
