"""
Why the transfer matters
========================

The splint transfer replaces a branching computation in the parent algebra
with a weight-multiplicity computation in the (smaller) coimage.  This
script times the three methods on G2 --> A2 as the module grows.

Expect the ordering  splint <= fan <= oracle,  with the gap widening fast:
the oracle rebuilds full characters of both algebras, the fan recurrence
walks every saturated subalgebra weight, and the transfer only runs
Freudenthal on the coimage module.
"""

from splintbranch.branching import compare_methods
from splintbranch.splint import splint_catalog

sd = splint_catalog("G2", "A2")

print(f"{'module':>10} {'dim':>7} {'splint ms':>10} {'fan ms':>8}"
      f" {'oracle ms':>10}")
for k in (2, 4, 6):
    mu = sd.parent.weight_from_labels([k, k])
    report, _ = compare_methods(mu, sd.parent, sd.stem_a, sd=sd)
    assert report["agree"]
    t = report["timings_ms"]
    print(f"{'[%d,%d]' % (k, k):>10} {report['dimension']:>7}"
          f" {t['splint']:>10.1f} {t['fan']:>8.1f} {t['oracle']:>10.1f}")

# Past this size the oracle stops being fun; compare transfer and fan only.
print()
print(f"{'module':>10} {'dim':>9} {'splint ms':>10} {'fan ms':>8} {'ratio':>6}")
for k in (10, 14, 18):
    mu = sd.parent.weight_from_labels([k, k])
    report, _ = compare_methods(mu, sd.parent, sd.stem_a, sd=sd,
                                methods=("splint", "fan"))
    assert report["agree"]
    t = report["timings_ms"]
    print(f"{'[%d,%d]' % (k, k):>10} {report['dimension']:>9}"
          f" {t['splint']:>10.1f} {t['fan']:>8.1f}"
          f" {t['fan'] / t['splint']:>5.1f}x")
