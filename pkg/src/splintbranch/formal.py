"""Formal integer combinations of weights, and exact character algorithms.

A `FormalSum` models an element of the group ring Z[P] of the weight lattice:
finitely many weights with integer coefficients.  Characters, singular
elements (alternating Weyl-orbit sums), and denominator products all live
here.

Two independent character algorithms are provided:

* `freudenthal_character` - the classical recursive multiplicity formula run
  over the saturated weight set of the highest weight;
* `character_via_weyl` - division of the alternating orbit sum of the shifted
  highest weight by the product of (1 - e^{-a}) over positive roots, with an
  exact post-hoc verification of the division.

Both return the same FormalSum for every irreducible module; tests compare
them term by term.
"""

from fractions import Fraction

from .errors import InternalInvariantError
from .exact import Weight
from .weyl import signed_orbit, to_dominant


class FormalSum:
    """A finite integer combination of weights, stored sparsely.

    Arithmetic never keeps zero coefficients, so equality of FormalSums is
    plain dict equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for w, c in (terms.items() if isinstance(terms, dict) else terms):
                if c:
                    t[w] = t.get(w, 0) + c
                    if not t[w]:
                        del t[w]
        self.terms = t

    @classmethod
    def monomial(cls, w, c=1):
        return cls({w: c})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return isinstance(other, FormalSum) and self.terms == other.terms

    def __ne__(self, other):
        return not self.__eq__(other)

    def coeff(self, w):
        return self.terms.get(w, 0)

    def support(self):
        return set(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        s = FormalSum.__new__(FormalSum)
        s.terms = out
        return s

    def __sub__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) - c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        s = FormalSum.__new__(FormalSum)
        s.terms = out
        return s

    def __neg__(self):
        s = FormalSum.__new__(FormalSum)
        s.terms = {w: -c for w, c in self.terms.items()}
        return s

    def scale(self, k):
        k = int(k)
        s = FormalSum.__new__(FormalSum)
        s.terms = {} if k == 0 else {w: k * c for w, c in self.terms.items()}
        return s

    def shift(self, v):
        """Multiply by the monomial e^v: translate every term by v."""
        s = FormalSum.__new__(FormalSum)
        s.terms = {w + v: c for w, c in self.terms.items()}
        return s

    def __mul__(self, other):
        if len(other.terms) < len(self.terms):
            self, other = other, self
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                v = out.get(w, 0) + c1 * c2
                if v:
                    out[w] = v
                else:
                    del out[w]
        s = FormalSum.__new__(FormalSum)
        s.terms = out
        return s

    def items_sorted(self, rs):
        """Terms in canonical order: descending height, then lexicographic."""
        return [(w, self.terms[w]) for w in sorted(self.terms, key=rs.canonical_key)]

    def evaluate_dimension(self):
        """Sum of all coefficients (the dimension when self is a character)."""
        return sum(self.terms.values())

    def to_json(self, rs):
        return {
            "terms": [
                {"weight": [str(c) for c in w.coords], "coeff": m}
                for w, m in self.items_sorted(rs)
            ]
        }

    @classmethod
    def from_json(cls, data):
        terms = {}
        for row in data["terms"]:
            w = Weight(tuple(Fraction(c) for c in row["weight"]))
            terms[w] = terms.get(w, 0) + int(row["coeff"])
        return cls(terms)

    def __repr__(self):
        items = sorted(self.terms.items(), key=lambda kv: kv[0].coords)
        inner = ", ".join("%r: %d" % (w, c) for w, c in items[:6])
        more = "" if len(items) <= 6 else ", ... (%d terms)" % len(items)
        return "FormalSum({%s%s})" % (inner, more)


def singular_element(rs, mu):
    """Alternating orbit sum of mu + rho, written in shifted form:
    sum over the Weyl group of sign(w) e^{w(mu+rho) - rho}."""
    rs.require_dominant_integral(mu)
    orb = signed_orbit(mu + rs.rho, rs)
    return FormalSum({x - rs.rho: s for x, s in orb.items()})


def unshifted_singular_element(rs, mu):
    """Alternating orbit sum of mu + rho without the rho shift:
    sum over the Weyl group of sign(w) e^{w(mu+rho)}."""
    rs.require_dominant_integral(mu)
    orb = signed_orbit(mu + rs.rho, rs)
    return FormalSum(orb)


def product_expand(roots, dim=None):
    """Expand the product of (1 - e^{-a}) over the given vectors, exactly."""
    roots = list(roots)
    if dim is None:
        if not roots:
            raise InternalInvariantError("cannot infer dimension of empty product")
        dim = len(roots[0])
    acc = FormalSum.monomial(Weight.zero(dim))
    for a in roots:
        out = dict(acc.terms)
        for w, c in acc.terms.items():
            key = w - a
            v = out.get(key, 0) - c
            if v:
                out[key] = v
            else:
                del out[key]
        acc = FormalSum.__new__(FormalSum)
        acc.terms = out
    return acc


def saturated_set(rs, lam):
    """All weights nu with nu <= lam (dominant representative of nu reachable
    from lam by subtracting nonnegative integer combinations of simple roots),
    organized by depth below lam.

    lam must be dominant with integer labels times possibly half-integral
    coordinates; the set is generated by walking simple-root strings downward,
    which reaches every such weight because each level-(h+1) weight is one
    simple root below some level-h weight.

    Returns (levels, dom_of): `levels` is a list of lists of weights, level h
    holding the weights at height-distance h below lam; `dom_of` maps every
    weight in the set to its dominant representative.
    """
    def member_dominant(c):
        dom, _, _ = to_dominant(c, rs)
        diff = lam - dom
        for x in rs.root_coords(diff):
            if x < 0 or x.denominator != 1:
                return None
        return dom

    dom_of = {}
    top = member_dominant(lam)
    if top != lam:
        raise InternalInvariantError("saturated set requires a dominant apex")
    dom_of[lam] = lam
    levels = [[lam]]
    frontier = [lam]
    simples = rs.simple_roots
    while frontier:
        candidates = set()
        for x in frontier:
            for a in simples:
                candidates.add(x - a)
        nxt = []
        for c in sorted(candidates, key=lambda w: w.coords):
            if c in dom_of:
                continue
            dom = member_dominant(c)
            if dom is not None:
                dom_of[c] = dom
                nxt.append(c)
        if nxt:
            levels.append(nxt)
        frontier = nxt
    return levels, dom_of


def weight_tables(rs, mu):
    """Weight diagram of the irreducible module with highest weight mu.

    Returns (dom_of, mult): `dom_of` maps each weight of the module to its
    dominant representative, `mult` maps each dominant weight to its
    multiplicity.  Multiplicities come from the recursive string formula,
    evaluated only on dominant weights; the exactness of every division is
    asserted.
    """
    rs.require_dominant_integral(mu)
    levels, dom_of = saturated_set(rs, mu)
    diagram = dom_of.keys()
    rho = rs.rho
    c0 = (mu + rho).norm2()
    mult = {mu: 1}
    for level in levels[1:]:
        for xi in level:
            if dom_of[xi] != xi:
                continue
            total = Fraction(0)
            for a in rs.positive_roots:
                y = xi + a
                while y in diagram:
                    total += mult[dom_of[y]] * y.dot(a)
                    y = y + a
            denom = c0 - (xi + rho).norm2()
            if denom == 0:
                raise InternalInvariantError("vanishing denominator in the string formula")
            v = 2 * total / denom
            if v.denominator != 1 or v <= 0:
                raise InternalInvariantError("string formula gave a non-positive or "
                                             "fractional multiplicity")
            mult[xi] = int(v)
    return dom_of, mult


def freudenthal_character(rs, mu):
    """Character of the irreducible module with highest weight mu, computed by
    the recursive string formula on dominant weights and spread over orbits."""
    dom_of, mult = weight_tables(rs, mu)
    return FormalSum({w: mult[dom_of[w]] for w in dom_of})


def character_via_weyl(rs, mu):
    """Character of the irreducible module with highest weight mu, computed by
    dividing the alternating orbit sum of mu + rho by the denominator product.

    The recurrence walks downward level by level from mu; afterwards the
    division is verified exactly (character times denominator equals the
    orbit sum), so a truncated or corrupted expansion cannot escape.
    """
    rs.require_dominant_integral(mu)
    psi = singular_element(rs, mu)
    denom = product_expand(rs.positive_roots, rs.ambient_dim)
    zero = Weight.zero(rs.ambient_dim)
    if denom.coeff(zero) != 1:
        raise InternalInvariantError("denominator product lost its constant term")
    higher = [(w, c) for w, c in denom.terms.items() if w != zero]

    mult = {}
    frontier = [mu]
    val0 = psi.coeff(mu)
    if val0 != 1:
        raise InternalInvariantError("orbit sum does not start at the highest weight")
    mult[mu] = 1
    simples = rs.simple_roots
    while frontier:
        candidates = set()
        for x in frontier:
            for a in simples:
                candidates.add(x - a)
        frontier = []
        for x in sorted(candidates, key=lambda w: w.coords):
            if x in mult:
                continue
            v = psi.coeff(x)
            for w, c in higher:
                up = x - w
                m = mult.get(up)
                if m:
                    v -= c * m
            if v:
                mult[x] = v
                frontier.append(x)
    ch = FormalSum(mult)
    if ch * denom != FormalSum(psi.terms):
        raise InternalInvariantError("character division failed verification")
    return ch
