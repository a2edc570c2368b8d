"""Branching coefficients by three independent methods, cross-validated.

Given a parent module and a rank-preserving regular subalgebra, the branching
coefficients say how the module decomposes under restriction.  Three routes
are implemented:

* `splint_branching`  - transfer through a splint: the coefficients equal the
  weight multiplicities of a single module of the coimage system, read off at
  translated points.  Fastest; only available when a validated splint with a
  label correspondence exists, is not of the refused type, and satisfies the
  chamber condition.
* `fan.fan_branching` - the carrier recurrence over the complementary roots
  (re-exported here for convenience).
* `oracle_branching`  - direct character peeling: compute the parent weight
  diagram, then repeatedly subtract the subalgebra character of the highest
  surviving subalgebra-dominant weight.  Slowest, assumption-free.

`compare_methods` runs the applicable methods, times them, and reports
term-by-term agreement plus a dimension sum check.
"""

import time
from dataclasses import dataclass

from .errors import (
    ConfigurationError,
    InternalInvariantError,
    PropertyViolationError,
    UnsupportedSplintError,
)
from .fan import BranchingResult, compute_fan, fan_branching
from .formal import weight_tables
from .rootsys import weyl_dimension
from .splint import chamber_condition


@dataclass(frozen=True)
class TildeModule:
    """The coimage module whose weight multiplicities become branching
    coefficients under the splint transfer."""

    labels: tuple
    highest_weight: object  # Weight in coimage coordinates


def tilde_highest_weight(mu, sd):
    """Transfer the parent highest weight to the coimage system.

    The coimage Dynkin labels are the parent labels re-read through the
    splint's label correspondence.  Raises UnsupportedSplintError when the
    splint cannot carry branching: refused type, missing label
    correspondence, or failed chamber condition.
    """
    if sd.splint_type == "ii_star":
        raise UnsupportedSplintError(
            "splint %s > %s is of the refused type: its subalgebra stem does "
            "not support the multiplicity transfer"
            % (sd.parent_label, sd.sub_label))
    if sd.label_perm is None:
        raise UnsupportedSplintError(
            "splint of %s has no label correspondence (detected splints do "
            "not determine one)" % (sd.parent_label,))
    if not chamber_condition(sd):
        raise UnsupportedSplintError(
            "splint %s > %s fails the chamber condition; transferred weights "
            "would leave the subalgebra-dominant chamber"
            % (sd.parent_label, sd.sub_label))
    sd.parent.require_dominant_integral(mu)
    m = sd.parent.int_labels(mu)
    labels = tuple(m[sd.label_perm[k]] for k in range(sd.coimage.rank))
    return TildeModule(labels, sd.coimage.weight_from_labels(labels))


def splint_branching(mu, sd):
    """Branching coefficients through the splint transfer.

    Computes the full weight system of the transferred coimage module, then
    places each multiplicity at the parent-side weight obtained by shifting
    mu through phi.  Every landing point is checked to be subalgebra-dominant
    and distinct; violations abort loudly because they would falsify the
    transfer's premises.
    """
    tm = tilde_highest_weight(mu, sd)
    dom_of, mult = weight_tables(sd.coimage, tm.highest_weight)
    coeffs = {}
    top = tm.highest_weight
    for w in dom_of:
        nu = mu - sd.phi(top - w)
        if not sd.stem_a.is_dominant(nu):
            raise PropertyViolationError(
                "transferred weight %r is not subalgebra-dominant" % (nu,))
        if nu in coeffs:
            raise PropertyViolationError(
                "transfer is not injective at %r" % (nu,))
        coeffs[nu] = mult[dom_of[w]]
    return BranchingResult(sd.parent, sd.stem_a, mu, "splint", coeffs)


def oracle_branching(mu, rs, sub):
    """Branching coefficients by direct character peeling.

    Restrict the parent weight diagram to subalgebra-dominant points, then
    walk them in canonical order (highest first): the surviving multiplicity
    at each point is its branching coefficient, and that many copies of the
    subalgebra character are subtracted before moving on.  The subtraction
    tables are memoized by subalgebra labels, which determine them up to
    translation.  Finishes by checking that everything cancelled exactly.
    """
    if sub.rank + len(sub.u1_charges) != rs.rank:
        raise ConfigurationError(
            "oracle branching needs a rank-preserving subalgebra: rank %d + "
            "%d charges != parent rank %d"
            % (sub.rank, len(sub.u1_charges), rs.rank))
    for b in sub.positive_roots:
        if b not in rs.positive_set:
            raise ConfigurationError(
                "subalgebra root %r is not a positive root of %s" % (b, rs.label))
    rs.require_dominant_integral(mu)
    dom_of, mult = weight_tables(rs, mu)
    residual = {w: mult[dom_of[w]] for w in dom_of if sub.is_dominant(w)}
    order = sorted(residual, key=rs.canonical_key)
    tables = {}
    coeffs = {}
    for xi in order:
        r = residual.get(xi, 0)
        if r == 0:
            continue
        if r < 0:
            raise InternalInvariantError(
                "peeling drove the multiplicity at %r negative" % (xi,))
        key = sub.int_labels(xi)
        table = tables.get(key)
        if table is None:
            sdom, smult = weight_tables(sub, xi)
            del sdom
            table = sorted(
                ((xi - w, m) for w, m in smult.items()),
                key=lambda p: p[0].coords)
            tables[key] = table
        for off, m in table:
            target = xi - off
            v = residual.get(target, 0) - r * m
            residual[target] = v
        coeffs[xi] = r
    bad = [w for w, v in residual.items() if v != 0]
    if bad:
        raise InternalInvariantError(
            "peeling left a nonzero residual at %d points" % len(bad))
    return BranchingResult(rs, sub, mu, "oracle", coeffs)


def compare_methods(mu, rs, sub, sd=None, methods=None):
    """Run the applicable branching methods and report agreement.

    `sd` supplies the splint route when available; without it only the fan
    recurrence and the peeling oracle run.  Methods that raise
    UnsupportedSplintError are recorded as unsupported rather than failing
    the comparison.  Returns a report dict with the case name, per-method
    timings in milliseconds, term-by-term agreement, any differing rows, and
    a dimension sum check per method.
    """
    if methods is None:
        methods = (["splint"] if sd is not None else []) + ["fan", "oracle"]
    runners = {}
    if "splint" in methods:
        if sd is None:
            raise ConfigurationError("splint method requested without a splint")
        runners["splint"] = lambda: splint_branching(mu, sd)
    if "fan" in methods:
        runners["fan"] = lambda: fan_branching(rs, sub, mu)
    if "oracle" in methods:
        runners["oracle"] = lambda: oracle_branching(mu, rs, sub)
    for name in methods:
        if name not in runners:
            raise ConfigurationError("unknown branching method %r" % (name,))

    results = {}
    timings = {}
    unsupported = {}
    for name in methods:
        t0 = time.perf_counter()
        try:
            results[name] = runners[name]()
        except UnsupportedSplintError as exc:
            unsupported[name] = str(exc)
            continue
        timings[name] = (time.perf_counter() - t0) * 1000.0

    names = [n for n in methods if n in results]
    agree = all(
        results[a].coeffs == results[b].coeffs
        for a, b in zip(names, names[1:]))
    diff = []
    if not agree:
        keys = set()
        for n in names:
            keys.update(results[n].coeffs)
        for k in sorted(keys, key=rs.canonical_key):
            vals = {n: results[n].coeffs.get(k, 0) for n in names}
            if len(set(vals.values())) > 1:
                diff.append({
                    "weight_dynkin": list(sub.int_labels(k)),
                    "u1_charges": [str(k.dot(q)) for q in sub.u1_charges],
                    "coeffs": vals,
                })
    dim = weyl_dimension(rs, mu)
    dim_check = {n: results[n].total_dimension() == dim for n in names}
    case = "%s -> %s [%s]" % (
        rs.label, sub.label, ",".join(str(c) for c in rs.int_labels(mu)))
    report = {
        "case": case,
        "agree": agree,
        "timings_ms": {n: round(t, 3) for n, t in timings.items()},
        "diff": diff,
        "dimension": dim,
        "dim_check": dim_check,
        "methods": names,
        "rows": {n: len(results[n].coeffs) for n in names},
        "unsupported": unsupported,
    }
    return report, results


__all__ = [
    "BranchingResult",
    "TildeModule",
    "compare_methods",
    "compute_fan",
    "fan_branching",
    "oracle_branching",
    "splint_branching",
    "tilde_highest_weight",
]
