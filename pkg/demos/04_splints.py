"""
Splints of root systems
=======================

A splint writes a root system as a disjoint union of the images of two
smaller systems under addition-preserving injections.  When one piece is a
genuine subsystem (the stem) the other piece's preimage (the coimage)
carries weight multiplicities that can transfer to branching coefficients.
"""

from splintbranch.rootsys import (
    SubsystemSpec,
    build_root_system,
    regular_subsystem,
)
from splintbranch.splint import (
    catalog_entries,
    chamber_condition,
    detect_injective_splint,
    splint_catalog,
    stem_pairing_witnesses,
)

# The catalog of rank-preserving injective splints with parent rank <= 4.
print("catalog:")
for parent, sub in catalog_entries(4):
    sd = splint_catalog(parent, sub)
    usable = chamber_condition(sd)
    print(f"  {parent:>2} = {sd.stem_a.label} stem + {sd.coimage.label}"
          f" coimage  (type {sd.splint_type},"
          f" transfer {'usable' if usable else 'REFUSED'})")
print()

# The chamber condition is what separates the usable rows from the refused
# ones: the transfer anchors the coimage's reflected weight orbit at the
# parent's Weyl vector, and every anchored point must stay inside the
# closed dominant chamber of the stem.
#
# The C-series rows fail it, and so does F4 > D4.  The F4 failure is not a
# defect of the implementation: branching the 26-dimensional F4 module over
# D4 gives 26 = 8 + 8 + 8 + 1 + 1, five constituents, and a transfer of
# coimage multiplicities (four weights of the defining D4 coimage module,
# multiplicities summing to 4 or 5) cannot reproduce them -- there is no
# 5-dimensional D4 module at all.
print("refused rows:", [f"{p} > {s}" for p, s in catalog_entries(4)
                        if not chamber_condition(splint_catalog(p, s))])
print()

# Every non-simple image of a coimage simple root splits as a parent simple
# root from the stem plus an earlier complement root.  These witnesses are
# what gives the transfer its edge-by-edge consistency.
sd = splint_catalog("G2", "A2")
print("G2 > A2 pairing witnesses:")
for beta, (alpha, beta_prime) in stem_pairing_witnesses(sd).items():
    print(f"  {tuple(map(str, beta.coords))} ="
          f" {tuple(map(str, alpha.coords))} (stem simple)"
          f" + {tuple(map(str, beta_prime.coords))}")
print()

# The catalog is not an oracle: an exhaustive search over additive
# assignments rediscovers each row from the root systems alone...
det = detect_injective_splint(sd.parent, sd.stem_a)
print("detection on G2 > A2:", "found" if det else "nothing",
      f"(coimage {det.coimage.label}, type {det.splint_type})")

# ...and rejects subsystems that do not split the complement additively.
g2 = build_root_system("G", 2)
long_a1 = regular_subsystem(
    g2, SubsystemSpec(kept=(0,), u1_charges=((0, -1, 1),)))
print("detection on G2 > long A1:",
      detect_injective_splint(g2, long_a1) or "nothing (correctly)")
