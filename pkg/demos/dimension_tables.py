"""Dimension tables c_n for the main families.

The pipeline is: Hilbert series -> logarithm -> Moebius inversion (giving
integer exponents w_n) -> summation along the p-divisibility chain
(giving c_n). Non-integer w_n cannot occur for genuine group series; the
library would raise rather than round.
"""
from zassenhaus.dimensions import dims_table, min_generators
from zassenhaus.groupspec import parse_group_spec


def show(text, p, order=12):
    table = dims_table(parse_group_spec(text), p, order)
    print(f"{text}  (p = {p})")
    print("  n:", list(range(1, order + 1)))
    print("  w:", list(table.w[1:]))
    print("  c:", list(table.c[1:]))
    print()


show("free(2)", 2)
show("demushkin(4)", 2)

# Z_p has c_n = 1 exactly at the powers of p
show("zp(1)", 2)

# superpythagorean: c_1 = d+1, then d at powers of 2, else 1
show("superpyth(3)", 2)

# a free product of involutions mimics a free group from degree 2 on
show("cyclic(2) * cyclic(2) * cyclic(2)", 2)
show("free(2)", 2, order=6)

# cumulative sums of c_n give the exponent of the Galois-theoretic index
table = dims_table(parse_group_spec("superpyth(3)"), 2, 8)
print("partial sums c_1 + ... + c_(n-1) for superpyth(3):",
      [table.galois_exponent(n) for n in range(1, 9)])

# the subgroup index formula turns those sums into generator counts
print("free(2): the 2nd filtration subgroup needs",
      min_generators(parse_group_spec("free(2)"), 2, 2, [2]), "generators")
print("demushkin(2): the 2nd filtration subgroup needs",
      min_generators(parse_group_spec("demushkin(2)"), 2, 2, [2]), "generators")
