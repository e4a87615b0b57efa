"""Brute-force cross-checks on honest finite groups.

The filtration G_(n) = G_(ceil(n/p))^p prod [G_(i), G_(j)] is evaluated
literally, scanning every commutator pair with vectorized matrix
arithmetic. Nothing here knows any series formula, which is what makes
the agreement informative.
"""
import numpy as np

from zassenhaus import finite as fin
from zassenhaus.verify import _jl_polynomial

for m in (3, 4, 5):
    group = fin.unitriangular_group(m, 2)
    filt = fin.zassenhaus_filtration_finite(group, m)
    print(f"U_{m}(F_2), order {group.order}: layer dims {filt.dims}")

print()
group = fin.unitriangular_group(3, 3)
filt = fin.zassenhaus_filtration_finite(group, 4)
dims = [x for x in filt.dims if x]
print("U_3(F_3) layer dims:", filt.dims)

# group-algebra side: ranks of powers of the augmentation ideal
a = fin.group_algebra_aug_dims(group, 9)
print("augmentation quotient dims:", a)

# the two sides are linked by a polynomial identity
poly = _jl_polynomial(dims, group.p)
print("polynomial from the filtration:", [poly[k] for k in range(poly.degree + 1)])
assert a[: poly.degree + 1] == [poly[k] for k in range(poly.degree + 1)]

# closures from chosen generators
g = fin.unitriangular_group(3, 3)
corner = np.eye(3, dtype=np.int64)
corner[0, 2] = 1
sub = fin.subgroup_closure(g, g.index_of(corner[None]))
print()
print("central corner element generates a subgroup of order", len(sub))
