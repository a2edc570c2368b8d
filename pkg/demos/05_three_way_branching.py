"""
Three algorithms, one answer
============================

Branching coefficients are computed three independent ways:

* splint  -- transfer of coimage weight multiplicities through the splint
             map (fastest, only for usable catalog rows),
* fan     -- the injection-fan recurrence (any regular rank-preserving
             subsystem),
* oracle  -- brute-force character peeling: restrict the full character and
             repeatedly subtract the subalgebra module of the highest
             remaining weight (slow, but independent of everything else).

The three must agree coefficient by coefficient.
"""

from splintbranch.branching import compare_methods, splint_branching
from splintbranch.cli import main
from splintbranch.errors import UnsupportedSplintError
from splintbranch.splint import splint_catalog

# The 42-dimensional A2 module over A1+u1: twelve constituents, all
# multiplicity one, arranged like the weight diagram of an A1+A1 module.
sd = splint_catalog("A2", "A1+u1")
mu = sd.parent.weight_from_labels([3, 2])
report, results = compare_methods(mu, sd.parent, sd.stem_a, sd=sd)
print(report["case"])
print("  agree:", report["agree"], " dimension:", report["dimension"])
for _, labels, charges, coeff in results["splint"].rows():
    charge = ", ".join(str(c) for c in charges)
    print(f"  A1{labels} charge ({charge})  x{coeff}")
print()

# The same comparison through the command-line entry point, rendered as a
# two-axis text diagram (columns: first label, rows: second label).
print("G2 [3,2] --> A2 as a diagram of multiplicities:")
main(["branch", "--algebra", "G2", "--subalgebra", "A2",
      "--weight", "3,2", "--method", "splint", "--format", "diagram"])
print()

# A refused row: C3's splint exists, but its transfer is not usable, so the
# dedicated method raises -- while fan and oracle still agree on the answer.
sd = splint_catalog("C3", "A1+A1+A1")
mu = sd.parent.weight_from_labels([1, 1, 1])
try:
    splint_branching(mu, sd)
except UnsupportedSplintError as e:
    print("C3 transfer refused:", e)
report, results = compare_methods(mu, sd.parent, sd.stem_a, sd=sd)
print("C3 [1,1,1] --> A1+A1+A1 via fan and oracle:")
print("  methods:", sorted(report["methods"]),
      " agree:", report["agree"],
      " constituents:", len(results["fan"].coeffs),
      " total:", report["dimension"])
