"""Splints of root systems: catalog, detection, and structural checks.

A splint decomposes the root set of a parent system into two disjoint pieces:
the roots of a regular subalgebra (the "a-stem") and the image of a second
root system (the "coimage") under an additive injection phi (the "s-stem").
The injection need not respect root lengths or angles; when it does up to one
global scale it is called metric here.

Splint types used throughout:

* "i"       - both stems are themselves splints equivalent to root systems,
              and the coimage is equivalent to the s-stem (metric phi);
* "ii"      - metric phi, coimage not equivalent to the a-stem;
* "ii_star" - metric phi onto the s-stem while the a-stem is not itself
              closed the way branching transfer needs; branching through
              these is refused;
* "iii"     - non-metric phi (the coimage geometry differs from the image);
              these come with u(1) charges completing the rank.

`splint_catalog` serves the built-in families; `detect_injective_splint`
searches for an injective splint directly from the root geometry.  Both
produce `SplintDescriptor`s that re-verify phi at construction time.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, permutations

from .errors import (
    ConfigurationError,
    InternalInvariantError,
    NotASplintError,
    PropertyViolationError,
)
from .exact import Weight
from .rootsys import (
    RootSystem,
    SubsystemSpec,
    build_root_system,
    build_system,
    format_label,
    parse_label,
    regular_subsystem,
)
from .weyl import signed_orbit

_F1 = Fraction(1)


def _normalize_components(comps):
    """Canonical multiset of simple components: C2 reads as B2, D2 as two A1,
    D3 as A3 (the coincidences of low-rank series)."""
    out = []
    for series, rank in comps:
        if (series, rank) == ("C", 2):
            out.append(("B", 2))
        elif (series, rank) == ("D", 2):
            out.extend([("A", 1), ("A", 1)])
        elif (series, rank) == ("D", 3):
            out.append(("A", 3))
        else:
            out.append((series, rank))
    return tuple(sorted(out))


@dataclass
class SplintDescriptor:
    """A validated splint of a parent system.

    `phi_images` are the images of the coimage's simple roots inside the
    parent; phi extends additively (by integer simple-root coordinates) to
    all coimage roots, and `phi_on_positives` records the full map.  The
    construction verifies that the extension lands bijectively on the
    parent-positive roots outside the subalgebra.

    `label_perm` aligns Dynkin labels: coimage node k carries the parent
    label at index `label_perm[k]`.  Detected splints leave it None because
    the root geometry alone does not determine the correspondence.
    """

    parent: RootSystem
    stem_a: RootSystem
    coimage: RootSystem
    phi_images: tuple
    label_perm: tuple
    splint_type: str
    parent_label: str
    sub_label: str
    s_metric: bool = field(init=False)
    phi_on_positives: dict = field(init=False)
    stem_s_positives: tuple = field(init=False)

    def __post_init__(self):
        if len(self.phi_images) != self.coimage.rank:
            raise InternalInvariantError("one phi image per coimage simple root")
        for b in self.stem_a.positive_roots:
            if b not in self.parent.positive_set:
                raise InternalInvariantError("subalgebra root outside the parent")
        complement = frozenset(
            a for a in self.parent.positive_roots
            if a not in self.stem_a.positive_set)
        phi_map = {}
        seen = set()
        for g in self.coimage.positive_roots:
            coords = self.coimage.root_coords(g)
            img = Weight.zero(self.parent.ambient_dim)
            for c, base in zip(coords, self.phi_images):
                if c.denominator != 1:
                    raise InternalInvariantError("non-integer root coordinates")
                img = img + base.scale(c)
            if img not in complement or img in seen:
                raise InternalInvariantError(
                    "phi does not map the coimage bijectively onto the "
                    "complementary stem")
            seen.add(img)
            phi_map[g] = img
        if len(seen) != len(complement):
            raise InternalInvariantError(
                "complementary stem has %d roots but the coimage supplies %d"
                % (len(complement), len(seen)))
        self.phi_on_positives = phi_map
        self.stem_s_positives = tuple(
            sorted(seen, key=lambda w: (self.parent.height(w), w.coords)))
        self.s_metric = self._compute_metric()
        if self.label_perm is not None:
            if sorted(self.label_perm) != list(range(self.parent.rank)):
                raise InternalInvariantError("label_perm must permute parent labels")
            if len(self.label_perm) != self.coimage.rank:
                raise InternalInvariantError("label_perm must cover coimage labels")
        if self.splint_type != "pending":
            expect_metric = self.splint_type in ("i", "ii", "ii_star")
            if self.s_metric != expect_metric:
                raise InternalInvariantError(
                    "splint type %s disagrees with the measured geometry"
                    % self.splint_type)

    def _compute_metric(self):
        simples = self.coimage.simple_roots
        imgs = self.phi_images
        scale = imgs[0].norm2() / simples[0].norm2()
        for i in range(len(simples)):
            for j in range(i, len(simples)):
                if imgs[i].dot(imgs[j]) != scale * simples[i].dot(simples[j]):
                    return False
        return True

    def phi(self, v):
        """Extend phi additively to any vector in the coimage root lattice."""
        coords = self.coimage.root_coords(v)
        acc = Weight.zero(self.parent.ambient_dim)
        for c, base in zip(coords, self.phi_images):
            acc = acc + base.scale(c)
        return acc

    def coimage_type(self):
        return _normalize_components(self.coimage.components)

    def stem_a_type(self):
        return _normalize_components(self.stem_a.components)

    def derived_type(self):
        """Type computed from the geometry alone (catalog rows may declare a
        family type that differs on degenerate low-rank members)."""
        if not self.s_metric:
            return "iii"
        if self.coimage_type() == self.stem_a_type():
            return "i"
        return "ii"

    def to_json(self):
        return {
            "parent": self.parent_label,
            "subalgebra": self.sub_label,
            "stem_a": self.stem_a.label,
            "coimage": self.coimage.label,
            "type": self.splint_type,
            "s_metric": self.s_metric,
            "label_perm": list(self.label_perm) if self.label_perm is not None else None,
            "phi_simple_images": [
                [str(c) for c in w.coords] for w in self.phi_images
            ],
            "chamber_ok": chamber_condition(self),
        }


# --- catalog ----------------------------------------------------------------

def _ones_charge(r):
    """The direction e1 + ... + e_r - r*e_{r+1} in r+1 coordinates."""
    return Weight(tuple([_F1] * r + [Fraction(-r)]))


def _unit_weight(dim, i, v=1):
    return Weight(tuple(Fraction(v) if k == i else Fraction(0) for k in range(dim)))


def catalog_entries(max_rank=4):
    """The (parent, subalgebra) label pairs served by `splint_catalog`,
    restricted to parents of rank at most `max_rank`."""
    entries = []
    if max_rank >= 2:
        entries.append(("G2", "A2"))
    if max_rank >= 4:
        entries.append(("F4", "D4"))
    for r in range(2, max_rank + 1):
        entries.append(("B%d" % r, "D%d" % r))
    for r in range(3, max_rank + 1):
        entries.append(("C%d" % r, "+".join(["A1"] * r)))
    for r in range(2, max_rank + 1):
        entries.append(("A%d" % r, "A%d+u1" % (r - 1)))
    entries.append(("B2", "A1+u1"))
    return entries


def splint_catalog(parent_label, sub_label):
    """Look up the built-in splint for a parent and a named subalgebra.

    Raises NotASplintError when the pair is not in the catalog.  The returned
    descriptor is fully validated; branching support is a separate question
    answered by `chamber_condition` and the splint type.
    """
    pcomps, pn_u1 = parse_label(parent_label)
    if pn_u1 or len(pcomps) != 1:
        raise ConfigurationError("parent must be one simple system, got %r"
                                 % (parent_label,))
    series, rank = pcomps[0]
    scomps, n_u1 = parse_label(sub_label)
    key = tuple(sorted(scomps))

    if (series, rank) == ("G2", 2) and key == (("A", 2),) and n_u1 == 0:
        parent = build_root_system("G2", 2)
        f = Fraction
        kept = (Weight((f(-2), f(1), f(1))), Weight((f(1), f(-2), f(1))))
        stem_a = regular_subsystem(parent, SubsystemSpec(kept))
        coimage = build_system("A2")
        images = (Weight((f(-1), f(0), f(1))), Weight((f(1), f(-1), f(0))))
        return SplintDescriptor(parent, stem_a, coimage, images, (0, 1), "i",
                                parent_label, sub_label)

    if (series, rank) == ("F4", 4) and key == (("D", 4),) and n_u1 == 0:
        parent = build_root_system("F4", 4)
        f = Fraction
        h = Fraction(1, 2)
        kept = (
            Weight((f(1), f(-1), f(0), f(0))),
            Weight((f(0), f(1), f(-1), f(0))),
            Weight((f(0), f(0), f(1), f(-1))),
            Weight((f(0), f(0), f(1), f(1))),
        )
        stem_a = regular_subsystem(parent, SubsystemSpec(kept))
        coimage = build_system("D4")
        images = (
            _unit_weight(4, 1),
            Weight((h, -h, -h, -h)),
            _unit_weight(4, 2),
            _unit_weight(4, 3),
        )
        return SplintDescriptor(parent, stem_a, coimage, images, (0, 3, 1, 2),
                                "i", parent_label, sub_label)

    if series == "B" and key == (("D", rank),) and n_u1 == 0:
        parent = build_root_system("B", rank)
        kept = tuple(range(rank - 1)) + (
            Weight(tuple(_F1 if k in (rank - 2, rank - 1) else Fraction(0)
                         for k in range(rank))),)
        stem_a = regular_subsystem(parent, SubsystemSpec(kept))
        coimage = build_system("+".join(["A1"] * rank))
        images = tuple(_unit_weight(rank, k) for k in range(rank))
        return SplintDescriptor(parent, stem_a, coimage, images,
                                tuple(range(rank)), "ii",
                                parent_label, sub_label)

    if (series == "C" and rank >= 3 and key == (("A", 1),) * rank and n_u1 == 0):
        parent = build_root_system("C", rank)
        kept = tuple(_unit_weight(rank, k, 2) for k in range(rank))
        stem_a = regular_subsystem(parent, SubsystemSpec(kept))
        coimage = build_system("D%d" % rank)
        images = tuple(coimage.simple_roots)
        return SplintDescriptor(parent, stem_a, coimage, images,
                                tuple(range(rank)), "ii_star",
                                parent_label, sub_label)

    if (series == "A" and rank >= 2 and key == (("A", rank - 1),) and n_u1 == 1):
        parent = build_root_system("A", rank)
        kept = tuple(range(rank - 1))
        stem_a = regular_subsystem(
            parent, SubsystemSpec(kept, (_ones_charge(rank),)))
        coimage = build_system("+".join(["A1"] * rank))
        images = tuple(
            Weight(tuple(
                _F1 if k == i else (-_F1 if k == rank else Fraction(0))
                for k in range(rank + 1)))
            for i in range(rank))
        return SplintDescriptor(parent, stem_a, coimage, images,
                                tuple(range(rank)), "iii",
                                parent_label, sub_label)

    if (series, rank) == ("B", 2) and key == (("A", 1),) and n_u1 == 1:
        parent = build_root_system("B", 2)
        stem_a = regular_subsystem(
            parent, SubsystemSpec((0,), (Weight((_F1, _F1)),)))
        coimage = build_system("A2")
        images = (_unit_weight(2, 0), _unit_weight(2, 1))
        return SplintDescriptor(parent, stem_a, coimage, images, (0, 1), "iii",
                                parent_label, sub_label)

    raise NotASplintError(
        "no catalog splint for %s with subalgebra %s" % (parent_label, sub_label))


# --- structural checks ------------------------------------------------------

def chamber_condition(sd):
    """Whether every coimage Weyl chamber anchors inside the subalgebra's
    closed dominant chamber.

    For each coimage Weyl element w the anchor point rho_parent -
    phi(rho_coimage - w(rho_coimage)) must be dominant for the subalgebra.
    When this fails, weights transferred from a single coimage module can
    escape the chamber where the branching recurrence reads them off, so
    splint branching is refused.  The result is cached on the descriptor.
    """
    cached = getattr(sd, "_chamber_ok", None)
    if cached is not None:
        return cached
    rho_t = sd.coimage.rho
    rho_p = sd.parent.rho
    ok = True
    for x in signed_orbit(rho_t, sd.coimage):
        anchor = rho_p - sd.phi(rho_t - x)
        if not sd.stem_a.is_dominant(anchor):
            ok = False
            break
    sd._chamber_ok = ok
    return ok


def stem_pairing_witnesses(sd):
    """For each phi-image of a coimage simple root that is not itself a simple
    root of the parent, exhibit it as (subalgebra simple) + (s-stem root).

    Returns a dict mapping each such image to its witness pair.  Raises
    PropertyViolationError if some image admits no witness, since that breaks
    the lowering argument behind the multiplicity transfer.
    """
    parent_simples = set(sd.parent.simple_roots)
    stem_candidates = [a for a in sd.parent.simple_roots if a in sd.stem_a.root_set]
    s_roots = set(sd.stem_s_positives)
    out = {}
    for beta in sd.phi_images:
        if beta in parent_simples:
            continue
        found = None
        for alpha in stem_candidates:
            rest = beta - alpha
            if rest in s_roots:
                found = (alpha, rest)
                break
        if found is None:
            raise PropertyViolationError(
                "image %r of a coimage simple root admits no decomposition "
                "as subalgebra-simple plus s-stem root" % (beta,))
        out[beta] = found
    return out


# --- detection --------------------------------------------------------------

_POOL = (
    [("A", r) for r in range(1, 9)]
    + [("B", r) for r in range(2, 9)]
    + [("C", r) for r in range(3, 9)]
    + [("D", r) for r in range(4, 9)]
    + [("G2", 2), ("F4", 4)]
)

_POOL_NPOS = {
    "A": lambda r: r * (r + 1) // 2,
    "B": lambda r: r * r,
    "C": lambda r: r * r,
    "D": lambda r: r * (r - 1),
    "G2": lambda r: 6,
    "F4": lambda r: 24,
}


def _pool_npos(series, rank):
    return _POOL_NPOS[series](rank)


def _candidate_multisets(total_rank, total_npos):
    """All multisets from the candidate pool with the given total rank and
    total number of positive roots, in a deterministic order."""
    pool = [c for c in _POOL if c[1] <= total_rank
            and _pool_npos(*c) <= total_npos]
    out = []
    for size in range(1, total_rank + 1):
        for combo in combinations_with_replacement(pool, size):
            if sum(c[1] for c in combo) != total_rank:
                continue
            if sum(_pool_npos(*c) for c in combo) != total_npos:
                continue
            out.append(combo)
    return out


def detect_injective_splint(parent, sub):
    """Search for an injective splint of `parent` complementing `sub`.

    The candidate images of the coimage's simple roots are the additively
    simple elements of the complementary positive set (those not a sum of two
    of its elements).  Each candidate coimage with matching rank and root
    count is tried through every assignment of its simple roots onto those
    elements; the assignment must extend additively to a bijection onto the
    complementary set.  Returns a validated SplintDescriptor (with no label
    correspondence, which the geometry does not determine) or None.

    Deterministic: candidates are enumerated in a fixed order and the
    canonically least successful assignment wins.
    """
    for b in sub.positive_roots:
        if b not in parent.positive_set:
            raise ConfigurationError(
                "subalgebra root %r is not a positive root of %s"
                % (b, parent.label))
    ds = [a for a in parent.positive_roots if a not in sub.positive_set]
    if not ds or len(ds) == len(parent.positive_roots):
        return None
    ds_set = frozenset(ds)
    simple_in_s = [
        b for b in ds
        if not any(x != b and (b - x) in ds_set for x in ds)
    ]
    if len(simple_in_s) > parent.rank:
        return None

    for combo in _candidate_multisets(len(simple_in_s), len(ds)):
        coimage = build_system(format_label(combo))
        pos_coords = [
            tuple(int(c) for c in coimage.root_coords(g))
            for g in coimage.positive_roots
        ]
        best = None
        for perm in permutations(range(len(simple_in_s))):
            assigned = [simple_in_s[p] for p in perm]
            images = []
            seen = set()
            ok = True
            for coords in pos_coords:
                img = Weight.zero(parent.ambient_dim)
                for c, base in zip(coords, assigned):
                    if c:
                        img = img + base.scale(c)
                if img not in ds_set or img in seen:
                    ok = False
                    break
                seen.add(img)
                images.append(img)
            if not ok or len(seen) != len(ds):
                continue
            key = tuple(parent.canonical_key(w) for w in assigned)
            if best is None or key < best[0]:
                best = (key, tuple(assigned))
        if best is None:
            continue
        sd = SplintDescriptor.__new__(SplintDescriptor)
        sd.parent = parent
        sd.stem_a = sub
        sd.coimage = coimage
        sd.phi_images = best[1]
        sd.label_perm = None
        sd.parent_label = parent.label
        sd.sub_label = sub.label
        sd.splint_type = "pending"
        sd.__post_init__()
        sd.splint_type = sd.derived_type()
        return sd
    return None
