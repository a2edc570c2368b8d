"""Shared fixtures, frozen reference data, and reporting hooks for the suite.

Reference values fall in two classes:

* classical facts (dimensions of defining/adjoint/spinor modules, Weyl group
  orders, weight-diagram profiles of small modules) that can be checked by
  hand, and
* cross-method identities (three independent branching algorithms, two
  independent character algorithms) where no value needs to be trusted at
  all -- the methods must merely agree exactly.
"""

import time
from collections import Counter
from fractions import Fraction

from splintbranch.branching import compare_methods
from splintbranch.rootsys import build_root_system, weyl_dimension
from splintbranch.splint import splint_catalog

# ---------------------------------------------------------------------------
# Frozen reference data
# ---------------------------------------------------------------------------

# Catalog rows with parent rank <= 4, in catalog order.
CATALOG_PAIRS = (
    ("G2", "A2"),
    ("F4", "D4"),
    ("B2", "D2"),
    ("B3", "D3"),
    ("B4", "D4"),
    ("C3", "A1+A1+A1"),
    ("C4", "A1+A1+A1+A1"),
    ("A2", "A1+u1"),
    ("A3", "A2+u1"),
    ("A4", "A3+u1"),
    ("B2", "A1+u1"),
)

# Pairs whose multiplicity transfer is usable: the anchored image of the
# coimage orbit stays inside the closed dominant chamber of the subalgebra.
# The starred C_r rows fail it (the catalog's refused type), and F4 > D4
# fails it too: the transfer there is provably impossible already for the
# 26-dimensional module (it would need a 5-dimensional D4 module).
CHAMBER_TRUE = frozenset(
    [
        ("G2", "A2"),
        ("B2", "D2"),
        ("B3", "D3"),
        ("B4", "D4"),
        ("A2", "A1+u1"),
        ("A3", "A2+u1"),
        ("A4", "A3+u1"),
        ("B2", "A1+u1"),
    ]
)
CHAMBER_FALSE = frozenset(set(CATALOG_PAIRS) - CHAMBER_TRUE)

# Weyl group orders (signed orbit of a regular weight has exactly |W| points).
WEYL_ORDERS = {
    "A1": 2,
    "A2": 6,
    "B2": 8,
    "G2": 12,
    "A3": 24,
    "B3": 48,
    "C3": 48,
    "A4": 120,
    "D4": 192,
    "B4": 384,
    "C4": 384,
    "F4": 1152,
}

# Classical dimensions, checkable by hand with the dimension product.
KNOWN_DIMS = {
    ("A2", (0, 0)): 1,
    ("A2", (1, 0)): 3,
    ("A2", (1, 1)): 8,
    ("A2", (3, 2)): 42,
    ("A3", (1, 0, 0)): 4,
    ("A3", (0, 1, 0)): 6,
    ("A4", (1, 0, 0, 0)): 5,
    ("B2", (1, 0)): 5,
    ("B2", (0, 1)): 4,
    ("B2", (3, 2)): 154,
    ("B3", (1, 0, 0)): 7,
    ("B3", (0, 0, 1)): 8,
    ("B4", (1, 0, 0, 0)): 9,
    ("B4", (0, 0, 0, 1)): 16,
    ("C3", (1, 0, 0)): 6,
    ("C3", (0, 0, 1)): 14,
    ("C4", (1, 0, 0, 0)): 8,
    ("D4", (1, 0, 0, 0)): 8,
    ("D4", (0, 0, 0, 1)): 8,
    ("D4", (0, 1, 0, 0)): 28,
    ("G2", (0, 1)): 7,
    ("G2", (1, 0)): 14,
    ("G2", (3, 2)): 2079,
}

# Weight-diagram profile of the 42-dimensional A2 module [3,2]:
# 27 distinct weights; 15 on the outer shell, 9 on the middle shell
# (multiplicity 2), 3 on the inner shell (multiplicity 3).
A2_32_PROFILE = {1: 15, 2: 9, 3: 3}

# Systems of rank <= 4, one representative per isomorphism class.
RANK_LE_4_SYSTEMS = (
    ("A", 1), ("A", 2), ("A", 3), ("A", 4),
    ("B", 2), ("B", 3), ("B", 4),
    ("C", 3), ("C", 4),
    ("D", 4),
    ("G", 2), ("F", 4),
)


def labels_grid(rank, max_label):
    """All Dynkin-label tuples of the given rank with entries 0..max_label."""
    if rank == 0:
        return [()]
    tails = labels_grid(rank - 1, max_label)
    return [(h,) + t for h in range(max_label + 1) for t in tails]


def mult_profile(coeffs):
    """Histogram {multiplicity: count} of a coefficient map."""
    return dict(Counter(coeffs.values()))


def run_compare(parent_label, sub_label, labels, methods=None):
    """Run the requested methods through compare_methods on a catalog pair and
    assert exact agreement plus the dimension sum rule for each method."""
    sd = splint_catalog(parent_label, sub_label)
    mu = sd.parent.weight_from_labels(labels)
    report, results = compare_methods(mu, sd.parent, sd.stem_a, sd=sd, methods=methods)
    assert report["agree"], (
        f"{parent_label} > {sub_label} {labels}: methods disagree: {report['diff']}"
    )
    want = weyl_dimension(sd.parent, mu)
    for name, res in results.items():
        got = res.total_dimension()
        assert got == want, f"{name} sum rule: {got} != {want}"
    return report, results


def timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0


# ---------------------------------------------------------------------------
# Acceptance reporting: one line per criterion in the terminal summary.
# ---------------------------------------------------------------------------

ACCEPTANCE_NOTES = {}


def note_acceptance(number, text):
    """Record a human-readable result line for an acceptance criterion."""
    ACCEPTANCE_NOTES[number] = text


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    reports = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in nodeid:
                reports.append((nodeid, outcome))
    if not reports:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for nodeid, outcome in sorted(reports):
        name = nodeid.split("::", 1)[1]
        number = int(name.split("_")[2])
        status = "PASS" if outcome == "passed" else "FAIL"
        note = ACCEPTANCE_NOTES.get(number, "")
        suffix = f" -- {note}" if note and status == "PASS" else ""
        terminalreporter.write_line(f"ACCEPTANCE {number:02d} {status}: {name}{suffix}")
