"""Injection-fan branching: a recurrence on formal characters.

For a rank-preserving regular subalgebra, the product of (1 - e^{-a}) over the
positive roots of the parent that are NOT roots of the subalgebra expands into
a finite alternating sum -sum_g s(g) e^{-g} supported on the "carrier".  The
carrier always contains 0 with coefficient s(0) = -1, and dividing the
alternating orbit sum of the parent highest weight by this product yields a
function k on the weight lattice whose values on the subalgebra's closed
dominant chamber are exactly the branching coefficients.

`fan_branching` runs that division over the saturated weight region below the
shifted highest weight and then verifies the division exactly, so the result
is self-checking.
"""

from dataclasses import dataclass, field

from .errors import (
    ConfigurationError,
    DomainError,
    InternalInvariantError,
)
from .exact import Weight
from .formal import FormalSum, product_expand, saturated_set, singular_element
from .rootsys import RootSystem, weyl_dimension


@dataclass(frozen=True)
class Fan:
    """The expanded carrier of the complementary-root product.

    `carrier` maps each lattice vector g to s(g), with the identity
    prod_{a in complement} (1 - e^{-a}) = -sum_g s(g) e^{-g}.
    `base` is the carrier element of lowest canonical order (always 0 here,
    with s(base) = -1), and `steps` holds the remaining carrier relative to
    `base` as (g - base, s(g)) pairs, precomputed for the recurrence.
    """

    parent: RootSystem
    sub: RootSystem
    carrier: dict
    base: Weight
    steps: tuple

    def carrier_sorted(self):
        key = self.parent.canonical_key
        return [(g, self.carrier[g]) for g in sorted(self.carrier, key=key)]

    def to_json(self):
        return {
            "parent": self.parent.label,
            "subalgebra": self.sub.label,
            "base": [str(c) for c in self.base.coords],
            "carrier": [
                {"gamma": [str(c) for c in g.coords], "s": s}
                for g, s in self.carrier_sorted()
            ],
        }


def _complement_positives(rs, sub):
    for b in sub.positive_roots:
        if b not in rs.positive_set:
            raise ConfigurationError(
                "subalgebra root %r is not a positive root of %s" % (b, rs.label))
    return [a for a in rs.positive_roots if a not in sub.positive_set]


def compute_fan(rs, sub):
    """Expand the product over the parent's positive roots outside the
    subalgebra and package it as a Fan."""
    complement = _complement_positives(rs, sub)
    if not complement:
        raise ConfigurationError(
            "subalgebra %s exhausts the roots of %s; nothing to branch over"
            % (sub.label, rs.label))
    prod = product_expand(complement, rs.ambient_dim)
    carrier = {-w: -c for w, c in prod.terms.items()}
    base = min(carrier, key=lambda g: (rs.height(g), g.coords))
    if not base.is_zero() or carrier[base] != -1:
        raise InternalInvariantError(
            "carrier must start at 0 with coefficient -1; the complement set "
            "is not closed the way a regular embedding requires")
    steps = tuple(
        sorted(((g - base, carrier[g]) for g in carrier if g != base),
               key=lambda p: (rs.height(p[0]), p[0].coords)))
    return Fan(rs, sub, carrier, base, steps)


@dataclass
class BranchingResult:
    """Branching coefficients of one parent module into one subalgebra.

    `coeffs` maps subalgebra-dominant weights (in parent coordinates) to
    positive integer multiplicities.  Rows are reported in canonical order
    with the weight split into subalgebra Dynkin labels and u(1) charges.
    """

    parent: RootSystem
    sub: RootSystem
    parent_weight: Weight
    method: str
    coeffs: dict
    timings_ms: dict = field(default_factory=dict)

    def rows(self):
        out = []
        for nu in sorted(self.coeffs, key=self.parent.canonical_key):
            labels = self.sub.int_labels(nu)
            charges = tuple(nu.dot(q) for q in self.sub.u1_charges)
            out.append((nu, labels, charges, self.coeffs[nu]))
        return out

    def total_dimension(self):
        return sum(c * weyl_dimension(self.sub, nu) for nu, c in self.coeffs.items())

    def to_json(self):
        return {
            "parent": self.parent.label,
            "parent_weight": list(self.parent.int_labels(self.parent_weight)),
            "subalgebra": self.sub.label,
            "method": self.method,
            "rows": [
                {
                    "weight_dynkin": list(labels),
                    "u1_charges": [str(q) for q in charges],
                    "coeff": c,
                }
                for _, labels, charges, c in self.rows()
            ],
        }


def fan_branching(rs, sub, mu, fan=None):
    """Branching coefficients of the parent module with highest weight mu via
    the carrier recurrence.

    The recurrence solves k * prod_{complement}(1 - e^{-a}) = orbit sum of
    mu + rho (shifted), sweeping the saturated region below mu in canonical
    order.  The division is verified exactly before the subalgebra-dominant
    values are read off.
    """
    if sub.rank + len(sub.u1_charges) != rs.rank:
        raise ConfigurationError(
            "fan branching needs a rank-preserving subalgebra: rank %d + %d "
            "charges != parent rank %d" % (sub.rank, len(sub.u1_charges), rs.rank))
    rs.require_dominant_integral(mu)
    if fan is None:
        fan = compute_fan(rs, sub)
    psi = singular_element(rs, mu)
    rho = rs.rho
    levels, _ = saturated_set(rs, mu + rho)
    k = {}
    base = fan.base
    steps = fan.steps
    for level in levels:
        for point in level:
            xi = point - rho
            v = psi.coeff(xi - base)
            for g, s in steps:
                m = k.get(xi + g)
                if m:
                    v += s * m
            if v:
                k[xi] = v  # s(base) = -1 makes the division by -s(base) trivial
    kfs = FormalSum(k)
    complement = [a for a in rs.positive_roots if a not in sub.positive_set]
    if kfs * product_expand(complement, rs.ambient_dim) != psi:
        raise InternalInvariantError("fan recurrence failed its division check")
    coeffs = {}
    for xi, v in k.items():
        if sub.is_dominant(xi):
            if v < 0:
                raise InternalInvariantError(
                    "negative branching coefficient at a dominant weight")
            coeffs[xi] = v
    return BranchingResult(rs, sub, mu, "fan", coeffs)
