"""
Root systems in exact arithmetic
================================

Every object in this library lives in an orthogonal ambient basis with
Fraction coordinates, so equality of weights is literal coordinate equality
and nothing is ever rounded.
"""

from splintbranch.rootsys import (
    SubsystemSpec,
    build_root_system,
    build_system,
    regular_subsystem,
    weyl_dimension,
)


def fmt(w):
    return "(" + ", ".join(str(c) for c in w.coords) + ")"

# Build the rank-2 exceptional system.  G2 is realized in three coordinates
# that sum to zero, which keeps both root lengths rational.
g2 = build_root_system("G", 2)
print("G2 simple roots:", [fmt(a) for a in g2.simple_roots])
print("G2 positive roots:", len(g2.positive_roots))
print("G2 Weyl vector:", fmt(g2.rho))
print("G2 Cartan matrix:", g2.cartan_matrix)
print()

# The classical positive-root counts come out of the construction.
for series, rank, expect in [("A", 3, 6), ("B", 4, 16), ("C", 3, 9),
                             ("D", 4, 12), ("F", 4, 24)]:
    rs = build_root_system(series, rank)
    assert len(rs.positive_roots) == expect
    print(f"{series}{rank}: {len(rs.positive_roots)} positive roots,"
          f" ambient dimension {rs.ambient_dim}")
print()

# Dimensions of highest-weight modules via the Weyl product formula.
# [1,0] of A2 is the defining 3, [1,1] the adjoint 8, [0,1] of G2 the 7.
a2 = build_root_system("A", 2)
print("dim A2[1,0] =", weyl_dimension(a2, a2.weight_from_labels([1, 0])))
print("dim A2[1,1] =", weyl_dimension(a2, a2.weight_from_labels([1, 1])))
print("dim G2[0,1] =", weyl_dimension(g2, g2.weight_from_labels([0, 1])))
print("dim G2[3,2] =", weyl_dimension(g2, g2.weight_from_labels([3, 2])))
print()

# Composite systems are direct sums living block-diagonally in one ambient
# space; `build_system` parses the label.
aa = build_system("A1+A1")
print("A1+A1 simple roots:", [fmt(a) for a in aa.simple_roots])
print()

# A regular subsystem keeps a subset of the parent's roots.  Keeping the
# first two simple roots of A3 and adding the orthogonal charge direction
# (1,1,1,-3) produces the rank-preserving reduction A3 > A2 + u1.
a3 = build_root_system("A", 3)
sub = regular_subsystem(
    a3, SubsystemSpec(kept=(0, 1), u1_charges=((1, 1, 1, -3),)))
print("A3 > A2+u1 subsystem label:", sub.label)
print("subsystem positive roots:", len(sub.positive_set))
print("u1 charge direction:", fmt(sub.u1_charges[0]))
