"""
Characters two ways
===================

A formal character is a finite map weight -> multiplicity.  The library
computes it by two independent algorithms -- the Freudenthal recursion and
division of singular elements -- and the two must agree exactly.
"""

from collections import Counter

from splintbranch.formal import (
    character_via_weyl,
    freudenthal_character,
    product_expand,
    singular_element,
    weight_tables,
)
from splintbranch.rootsys import build_root_system, weyl_dimension

a2 = build_root_system("A", 2)
mu = a2.weight_from_labels([3, 2])

# Freudenthal builds the weight diagram shell by shell from the highest
# weight; the division route expands an alternating Weyl-orbit sum and
# divides by the denominator.
ch_f = freudenthal_character(a2, mu)
ch_w = character_via_weyl(a2, mu)
assert ch_f == ch_w
print("A2 [3,2]: both characters have", len(ch_f), "distinct weights")
print("dimension:", ch_f.evaluate_dimension(), "==",
      weyl_dimension(a2, mu))

# The multiplicity profile of the 42-dimensional module: three concentric
# hexagonal shells with multiplicities 1, 2, 3.
profile = Counter(ch_f.coeff(w) for w in ch_f.support())
print("multiplicity profile:", dict(sorted(profile.items())))
print()

# weight_tables gives the same data keyed for lookups: a map from every
# weight of the module to its dominant representative, and the multiplicity
# of each dominant weight.
dom_of, mult = weight_tables(a2, mu)
top = max(mult.values())
inner = [w for w, m in mult.items() if m == top]
print("innermost dominant weights (multiplicity %d):" % top,
      [a2.int_labels(w) for w in inner])
print()

# The denominator identity: the alternating orbit sum at the zero weight
# equals the product over positive roots of (1 - e^{-root}).  This is the
# engine behind the division algorithm and the fan construction alike.
for series, rank in [("A", 2), ("B", 2), ("G", 2), ("C", 3)]:
    rs = build_root_system(series, rank)
    zero = rs.weight_from_labels([0] * rank)
    lhs = singular_element(rs, zero)
    rhs = product_expand(rs.positive_roots, rs.ambient_dim)
    assert lhs == rhs
    print(f"{series}{rank}: denominator identity holds"
          f" ({len(lhs)} terms in the expansion)")
