"""Root systems of the classical series A-D and the exceptional G2, F4.

Systems are realized in exact orthogonal coordinates:

* A_r lives in the sum-zero hyperplane of r+1 coordinates,
* B_r, C_r, D_r live in r coordinates,
* G2 lives in the sum-zero hyperplane of 3 coordinates (first simple root long),
* F4 lives in 4 coordinates and includes the spinor root (e1-e2-e3-e4)/2.

The inner product is the plain Euclidean dot product.  Every algorithm in the
package is invariant under a global rescaling of the inner product per simple
component, so no length normalization is applied.

Direct sums are realized block-diagonally, and a regular subsystem of a parent
system is represented by the same RootSystem class with its roots kept
literally in the parent's coordinates.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import (
    ConfigurationError,
    DomainError,
    InternalInvariantError,
    InvalidSubsystemError,
)
from .exact import Weight, invert_exact

MAX_RANK = 8

_F0 = Fraction(0)
_F1 = Fraction(1)
_HALF = Fraction(1, 2)


def _unit(dim, i, value=_F1):
    return tuple(value if k == i else _F0 for k in range(dim))


def _ei_minus_ej(dim, i, j):
    return tuple(_F1 if k == i else (-_F1 if k == j else _F0) for k in range(dim))


def _ei_plus_ej(dim, i, j):
    return tuple(_F1 if k in (i, j) else _F0 for k in range(dim))


def _series_data(series, rank):
    """Simple roots, positive roots and fundamental weights of one simple system.

    Returns (ambient_dim, simples, positives, fundamentals) as raw tuples of
    Fractions.
    """
    r = rank
    if series == "A":
        dim = r + 1
        simples = [_ei_minus_ej(dim, i, i + 1) for i in range(r)]
        positives = [
            _ei_minus_ej(dim, i, j) for i in range(dim) for j in range(i + 1, dim)
        ]
        fundamentals = [
            tuple((_F1 if k < i else _F0) - Fraction(i, dim) for k in range(dim))
            for i in range(1, r + 1)
        ]
        return dim, simples, positives, fundamentals
    if series == "B":
        dim = r
        simples = [_ei_minus_ej(dim, i, i + 1) for i in range(r - 1)]
        simples.append(_unit(dim, r - 1))
        positives = []
        for i, j in combinations(range(r), 2):
            positives.append(_ei_minus_ej(dim, i, j))
            positives.append(_ei_plus_ej(dim, i, j))
        positives.extend(_unit(dim, i) for i in range(r))
        fundamentals = [
            tuple(_F1 if k < i else _F0 for k in range(dim)) for i in range(1, r)
        ]
        fundamentals.append(tuple(_HALF for _ in range(dim)))
        return dim, simples, positives, fundamentals
    if series == "C":
        dim = r
        simples = [_ei_minus_ej(dim, i, i + 1) for i in range(r - 1)]
        simples.append(_unit(dim, r - 1, Fraction(2)))
        positives = []
        for i, j in combinations(range(r), 2):
            positives.append(_ei_minus_ej(dim, i, j))
            positives.append(_ei_plus_ej(dim, i, j))
        positives.extend(_unit(dim, i, Fraction(2)) for i in range(r))
        fundamentals = [
            tuple(_F1 if k < i else _F0 for k in range(dim)) for i in range(1, r + 1)
        ]
        return dim, simples, positives, fundamentals
    if series == "D":
        dim = r
        simples = [_ei_minus_ej(dim, i, i + 1) for i in range(r - 1)]
        simples.append(_ei_plus_ej(dim, r - 2, r - 1))
        positives = []
        for i, j in combinations(range(r), 2):
            positives.append(_ei_minus_ej(dim, i, j))
            positives.append(_ei_plus_ej(dim, i, j))
        fundamentals = [
            tuple(_F1 if k < i else _F0 for k in range(dim)) for i in range(1, r - 1)
        ]
        fundamentals.append(tuple(_HALF if k < r - 1 else -_HALF for k in range(dim)))
        fundamentals.append(tuple(_HALF for _ in range(dim)))
        return dim, simples, positives, fundamentals
    if series == "G2":
        f = Fraction
        simples = [(f(-2), f(1), f(1)), (f(1), f(-1), f(0))]
        positives = [
            (f(-2), f(1), f(1)),   # long simple
            (f(1), f(-1), f(0)),   # short simple
            (f(-1), f(0), f(1)),
            (f(0), f(-1), f(1)),
            (f(1), f(-2), f(1)),
            (f(-1), f(-1), f(2)),
        ]
        fundamentals = [(f(-1), f(-1), f(2)), (f(0), f(-1), f(1))]
        return 3, simples, positives, fundamentals
    if series == "F4":
        f = Fraction
        h = _HALF
        simples = [
            (f(0), f(1), f(-1), f(0)),
            (f(0), f(0), f(1), f(-1)),
            (f(0), f(0), f(0), f(1)),
            (h, -h, -h, -h),
        ]
        positives = [_unit(4, i) for i in range(4)]
        for i, j in combinations(range(4), 2):
            positives.append(_ei_minus_ej(4, i, j))
            positives.append(_ei_plus_ej(4, i, j))
        for s2 in (h, -h):
            for s3 in (h, -h):
                for s4 in (h, -h):
                    positives.append((h, s2, s3, s4))
        fundamentals = [
            (f(1), f(1), f(0), f(0)),
            (f(2), f(1), f(1), f(0)),
            (Fraction(3, 2), h, h, h),
            (f(1), f(0), f(0), f(0)),
        ]
        return 4, simples, positives, fundamentals
    raise ConfigurationError("unknown series %r" % (series,))


_RANK_BOUNDS = {
    "A": (1, MAX_RANK),
    "B": (2, MAX_RANK),
    "C": (2, MAX_RANK),
    "D": (3, MAX_RANK),
}


def _validate_series(series, rank):
    if series in ("G2", "F4"):
        want = 2 if series == "G2" else 4
        if rank != want:
            raise ConfigurationError("%s has fixed rank %d" % (series, want))
        return
    if series not in _RANK_BOUNDS:
        raise ConfigurationError("unknown series %r" % (series,))
    lo, hi = _RANK_BOUNDS[series]
    if not (lo <= rank <= hi):
        raise ConfigurationError(
            "series %s supports rank %d..%d, got %d" % (series, lo, hi, rank))


def parse_label(label):
    """Parse a system label like "A2", "G2", "A1+A1+A1" or "A2+u1".

    Returns (components, n_u1) where components is a tuple of (series, rank).
    """
    comps = []
    n_u1 = 0
    for tok in str(label).replace(" ", "").split("+"):
        if not tok:
            raise ConfigurationError("empty component in label %r" % (label,))
        if tok in ("u1", "u(1)", "U1", "U(1)"):
            n_u1 += 1
            continue
        if tok.upper() in ("G2", "F4"):
            comps.append((tok.upper(), 2 if tok.upper() == "G2" else 4))
            continue
        series, tail = tok[0].upper(), tok[1:]
        if series not in "ABCD" or not tail.isdigit():
            raise ConfigurationError("bad component %r in label %r" % (tok, label))
        comps.append((series, int(tail)))
    return tuple(comps), n_u1


def format_label(components, n_u1=0):
    parts = ["%s%d" % (s, r) if s in "ABCD" else s for s, r in components]
    parts.extend(["u1"] * n_u1)
    return "+".join(parts)


class RootSystem:
    """A finite root system with exact coordinates, plus optional u(1) charges.

    Instances are immutable in practice: no method mutates the defining data.
    Embedded subsystems carry `u1_charges`, the charge directions that complete
    them to a rank-preserving reductive subalgebra of their parent.
    """

    def __init__(self, label, components, simple_roots, positive_roots,
                 fundamental_weights, u1_charges=()):
        self.label = label
        self.components = tuple(components)
        self.simple_roots = tuple(simple_roots)
        self.fundamental_weights = tuple(fundamental_weights)
        self.u1_charges = tuple(u1_charges)
        if not self.simple_roots:
            raise ConfigurationError("a root system needs at least one simple root")
        self.ambient_dim = len(self.simple_roots[0])
        gram = [[a.dot(b) for b in self.simple_roots] for a in self.simple_roots]
        self._gram_inv = invert_exact(gram)
        self.positive_roots = tuple(
            sorted(positive_roots, key=lambda w: (self.height(w), w.coords)))
        self._pos_set = frozenset(self.positive_roots)
        self._root_set = self._pos_set | frozenset(-w for w in self.positive_roots)
        acc = Weight.zero(self.ambient_dim)
        for p in self.positive_roots:
            acc = acc + p
        self.rho = acc.scale(_HALF)
        fsum = Weight.zero(self.ambient_dim)
        for w in self.fundamental_weights:
            fsum = fsum + w
        if fsum != self.rho:
            raise InternalInvariantError(
                "half-sum of positive roots disagrees with the sum of "
                "fundamental weights")
        self.cartan_matrix = tuple(
            tuple(self._as_int(2 * a.dot(b) / b.norm2()) for b in self.simple_roots)
            for a in self.simple_roots)

    @staticmethod
    def _as_int(x):
        if x.denominator != 1:
            raise InternalInvariantError("expected an integer, got %s" % (x,))
        return int(x)

    @property
    def rank(self):
        return len(self.simple_roots)

    def __repr__(self):
        return "RootSystem(%s)" % self.label

    # --- membership -------------------------------------------------------

    def contains_root(self, w):
        return w in self._root_set

    @property
    def root_set(self):
        return self._root_set

    @property
    def positive_set(self):
        return self._pos_set

    # --- coordinates ------------------------------------------------------

    def labels(self, w):
        """Dynkin labels of w: 2(w, a)/(a, a) for each simple root a."""
        return tuple(2 * w.dot(a) / a.norm2() for a in self.simple_roots)

    def int_labels(self, w):
        return tuple(self._as_int(c) for c in self.labels(w))

    def weight_from_labels(self, labels):
        labels = list(labels)
        if len(labels) != self.rank:
            raise ConfigurationError(
                "expected %d Dynkin labels for %s, got %d"
                % (self.rank, self.label, len(labels)))
        acc = Weight.zero(self.ambient_dim)
        for l, om in zip(labels, self.fundamental_weights):
            acc = acc + om.scale(Fraction(l))
        return acc

    def root_coords(self, w):
        """Exact expansion of w in the simple-root basis.

        w must lie in the rational span of the simple roots.
        """
        d = [w.dot(a) for a in self.simple_roots]
        coords = tuple(
            sum(row[j] * d[j] for j in range(self.rank)) for row in self._gram_inv)
        acc = Weight.zero(self.ambient_dim)
        for c, a in zip(coords, self.simple_roots):
            acc = acc + a.scale(c)
        if acc != w:
            raise InternalInvariantError("weight lies outside the simple-root span")
        return coords

    def height(self, w):
        return sum(self.root_coords(w))

    def canonical_key(self, w):
        """Sort key for the canonical term order: descending height, then
        ascending lexicographic on exact coordinates."""
        return (-self.height(w), w.coords)

    # --- dominance --------------------------------------------------------

    def is_dominant(self, w):
        return all(w.dot(a) >= 0 for a in self.simple_roots)

    def is_dominant_integral(self, w):
        return all(c >= 0 and c.denominator == 1 for c in self.labels(w))

    def require_dominant_integral(self, w):
        if not self.is_dominant_integral(w):
            raise DomainError(
                "weight with labels %s is not dominant integral for %s"
                % (tuple(str(c) for c in self.labels(w)), self.label))


def build_root_system(series, rank):
    """Construct one simple root system ("A".."D" with a rank, or "G2"/"F4")."""
    series = str(series).upper()
    if series in ("G", "F"):
        series = "%s%d" % (series, rank)
    _validate_series(series, rank)
    dim, simples, positives, fundamentals = _series_data(series, rank)
    label = series if series in ("G2", "F4") else "%s%d" % (series, rank)
    return RootSystem(
        label,
        [(series, rank)],
        [Weight(s) for s in simples],
        [Weight(p) for p in positives],
        [Weight(f) for f in fundamentals],
    )


def build_system(label):
    """Construct a (possibly composite) system from a label like "A2+A1".

    Components are realized block-diagonally in the order they appear in the
    label.  u(1) factors are not constructible standalone and are rejected;
    they only arise as charge directions of regular subsystems.
    """
    comps, n_u1 = parse_label(label)
    if n_u1:
        raise ConfigurationError("u1 factors cannot be built standalone: %r" % (label,))
    if not comps:
        raise ConfigurationError("empty system label %r" % (label,))
    if len(comps) == 1:
        return build_root_system(*comps[0])
    datas = []
    for series, rank in comps:
        _validate_series(series, rank)
        datas.append(_series_data(series, rank))
    total = sum(d[0] for d in datas)
    simples, positives, fundamentals = [], [], []
    off = 0
    for dim, ss, ps, fs in datas:
        def pad(t, off=off, dim=dim):
            return Weight((_F0,) * off + tuple(t) + (_F0,) * (total - off - dim))
        simples.extend(pad(s) for s in ss)
        positives.extend(pad(p) for p in ps)
        fundamentals.extend(pad(f) for f in fs)
        off += dim
    return RootSystem(format_label(comps), comps, simples, positives, fundamentals)


def weyl_dimension(rs, mu):
    """Dimension of the irreducible module with highest weight mu (a Weight)."""
    rs.require_dominant_integral(mu)
    num = _F1
    den = _F1
    shifted = mu + rs.rho
    for a in rs.positive_roots:
        num *= shifted.dot(a)
        den *= rs.rho.dot(a)
    d = num / den
    if d.denominator != 1:
        raise InternalInvariantError("Weyl dimension is not an integer")
    return int(d)


# --- regular subsystems ----------------------------------------------------

@dataclass(frozen=True)
class SubsystemSpec:
    """Which roots of a parent system to keep, plus u(1) charge directions.

    `kept` entries are either integers (indices into the parent's simple
    roots) or explicit root coordinates.  The kept roots are closed up under
    addition inside the parent system.  The charge directions must be
    orthogonal to every kept root and complete the subsystem to full rank.
    """

    kept: tuple
    u1_charges: tuple = ()


def _component_partition(simples):
    """Partition simple-root indices into connected Dynkin components."""
    n = len(simples)
    seen = [False] * n
    comps = []
    for i in range(n):
        if seen[i]:
            continue
        stack, comp = [i], []
        seen[i] = True
        while stack:
            k = stack.pop()
            comp.append(k)
            for j in range(n):
                if not seen[j] and simples[k].dot(simples[j]) != 0:
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _classify_component(rank, npos, long_count, nlengths):
    if rank == 1:
        return ("A", 1)
    if nlengths == 1:
        if npos == rank * (rank + 1) // 2:
            return ("A", rank)
        if npos == rank * (rank - 1):
            return ("D", rank)
    else:
        if rank == 2 and npos == 6:
            return ("G2", 2)
        if rank == 4 and npos == 24:
            return ("F4", 4)
        if npos == rank * rank:
            # B2 and C2 coincide; B2 is the canonical name here.
            if rank == 2 or long_count == rank * (rank - 1):
                return ("B", rank)
            if long_count == rank:
                return ("C", rank)
    raise InternalInvariantError(
        "unrecognized component: rank %d, %d positive roots" % (rank, npos))


def identify_components(simples, positives, root_coords):
    """Classify the simple components of a root system.

    `root_coords` expands a positive root over `simples`.  Returns a tuple of
    (series, rank) pairs in the order the components appear among the simple
    roots.  Rank-3 systems with 6 same-length positive roots are reported as
    "A3" (their canonical name).
    """
    parts = _component_partition(simples)
    index_of = {}
    for ci, part in enumerate(parts):
        for k in part:
            index_of[k] = ci
    by_part = [[] for _ in parts]
    for p in positives:
        coords = root_coords(p)
        support = [i for i, c in enumerate(coords) if c != 0]
        owners = {index_of[i] for i in support}
        if len(owners) != 1:
            raise InternalInvariantError("positive root spans several components")
        by_part[owners.pop()].append(p)
    out = []
    for part, roots in zip(parts, by_part):
        lengths = {p.norm2() for p in roots}
        longest = max(lengths)
        long_count = sum(1 for p in roots if p.norm2() == longest)
        out.append(_classify_component(len(part), len(roots), long_count, len(lengths)))
    return tuple(out)


def _matrix_rank(rows):
    m = [list(r) for r in rows]
    if not m:
        return 0
    rank = 0
    for col in range(len(m[0])):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[rank])]
        rank += 1
    return rank


def regular_subsystem(rs, spec):
    """Build the regular subsystem of `rs` described by `spec`.

    The kept roots are closed under addition inside the parent system; the
    result is a RootSystem whose roots live literally in the parent's
    coordinates, labeled by its classified component types, with the charge
    directions attached.  Raises InvalidSubsystemError when `spec` does not
    describe a rank-preserving reductive subalgebra.
    """
    resolved = []
    for item in spec.kept:
        if isinstance(item, int):
            if not (0 <= item < rs.rank):
                raise InvalidSubsystemError("simple-root index %d out of range" % item)
            resolved.append(rs.simple_roots[item])
        else:
            resolved.append(item if isinstance(item, Weight) else Weight(item))
    if not resolved:
        raise InvalidSubsystemError("no roots kept")
    for w in resolved:
        if w not in rs.root_set:
            raise InvalidSubsystemError("%r is not a root of %s" % (w, rs.label))

    roots = set(resolved) | {-w for w in resolved}
    changed = True
    while changed:
        changed = False
        for x, y in combinations(list(roots), 2):
            z = x + y
            if z in rs.root_set and z not in roots:
                roots.add(z)
                roots.add(-z)
                changed = True
    positives = sorted(
        (w for w in roots if w in rs.positive_set),
        key=lambda w: (rs.height(w), w.coords))
    pos_set = set(positives)
    simples = [
        b for b in positives
        if not any(x != b and (b - x) in pos_set for x in positives)
    ]

    # fundamental weights inside the span of the subsystem:
    # solve (omega_j, a_k^vee) = delta_jk with omega_j in span(simples)
    coroots = [a.scale(Fraction(2) / a.norm2()) for a in simples]
    mat = [[al.dot(cv) for al in simples] for cv in coroots]
    inv = invert_exact(mat)
    fundamentals = []
    for j in range(len(simples)):
        acc = Weight.zero(rs.ambient_dim)
        for l in range(len(simples)):
            acc = acc + simples[l].scale(inv[l][j])
        fundamentals.append(acc)

    charges = tuple(c if isinstance(c, Weight) else Weight(c) for c in spec.u1_charges)
    if len(charges) != rs.rank - len(simples):
        raise InvalidSubsystemError(
            "need %d u(1) charge directions to preserve rank, got %d"
            % (rs.rank - len(simples), len(charges)))
    for q in charges:
        if len(q) != rs.ambient_dim:
            raise InvalidSubsystemError("charge direction has wrong dimension")
        if q.is_zero():
            raise InvalidSubsystemError("zero charge direction")
        if any(q.dot(b) != 0 for b in simples):
            raise InvalidSubsystemError(
                "charge direction %r is not orthogonal to the subsystem" % (q,))
        try:
            rs.root_coords(q)  # must lie in the parent's weight-space span
        except InternalInvariantError:
            raise InvalidSubsystemError(
                "charge direction %r lies outside the parent's weight space" % (q,))
    if charges:
        rows = [list(b.coords) for b in simples] + [list(q.coords) for q in charges]
        if _matrix_rank(rows) != rs.rank:
            raise InvalidSubsystemError("charge directions do not complete the rank")

    sysobj = RootSystem("sub", [("A", 1)], simples, positives, fundamentals, charges)
    comps = identify_components(simples, positives, sysobj.root_coords)
    sysobj.components = comps
    sysobj.label = format_label(
        sorted(comps, key=lambda c: (-c[1], c[0])), len(charges))
    return sysobj
