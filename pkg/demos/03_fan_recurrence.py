"""
The injection fan and its recurrence
====================================

For a rank-preserving reduction, expand the product of (1 - e^{-root}) over
the positive roots *outside* the subalgebra.  The support of that expansion
-- the fan -- drives a recurrence that computes every branching coefficient
of a module, one saturated weight at a time, entirely in the subalgebra's
weight lattice.
"""

from splintbranch.fan import compute_fan, fan_branching
from splintbranch.rootsys import (
    SubsystemSpec,
    build_root_system,
    regular_subsystem,
    weyl_dimension,
)
from splintbranch.splint import splint_catalog

# The fan of A2 > A1+u1: the complement holds two positive roots, so the
# expansion has four terms (one cancels against the base shift).
sd = splint_catalog("A2", "A1+u1")
fan = compute_fan(sd.parent, sd.stem_a)
print("A2 > A1+u1 fan carrier (canonical order):")
for gamma, s in fan.carrier_sorted():
    coords = ", ".join(str(c) for c in gamma.coords)
    print("  coefficient %+d at (%s)" % (s, coords))
print()

# Branch the defining 3-dimensional module.  The recurrence peels the
# module into an A1 doublet with charge +1 and a singlet with charge -2.
mu = sd.parent.weight_from_labels([1, 0])
res = fan_branching(sd.parent, sd.stem_a, mu)
print("A2 [1,0] --> A1+u1:")
for _, labels, charges, coeff in res.rows():
    charge = ", ".join(str(c) for c in charges)
    print("  A1%s charge (%s) multiplicity %d" % (labels, charge, coeff))
assert res.total_dimension() == 3
print()

# The same machinery works for any regular rank-preserving subsystem, not
# just the cataloged ones -- here B3 restricted to its D3 subsystem.
b3 = build_root_system("B", 3)
d3 = regular_subsystem(
    b3, SubsystemSpec(kept=(0, 1, (0, 1, 1)), u1_charges=()))
mu = b3.weight_from_labels([1, 1, 0])
res = fan_branching(b3, d3, mu)
print("B3 [1,1,0] --> D3: %d distinct highest weights, total %d == %d" % (
    len(res.coeffs), res.total_dimension(), weyl_dimension(b3, mu)))
for _, labels, charges, coeff in res.rows():
    print("  D3%s multiplicity %d" % (labels, coeff))
