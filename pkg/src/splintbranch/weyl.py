"""Weyl-group operations: reflections, dominant representatives, signed orbits.

All operations act on exact `Weight` vectors through the ambient dot product.
The sign attached to an orbit element is the determinant of the group element
mapping the starting weight to it, computed incrementally from the generating
reflections.
"""

from typing import NamedTuple

from .errors import DomainError
from .exact import Weight


class SignedWeight(NamedTuple):
    """An orbit element together with the sign of the group element that
    produced it from the orbit's starting weight."""

    weight: Weight
    sign: int


def reflect(w, alpha):
    """Reflect the weight w in the hyperplane orthogonal to the root alpha."""
    n2 = alpha.norm2()
    if n2 == 0:
        raise DomainError("cannot reflect in a zero vector")
    return w - alpha.scale(2 * w.dot(alpha) / n2)


def to_dominant(w, rs):
    """Map w to the dominant chamber of rs by simple reflections.

    Returns (dominant, sign, regular): the dominant representative, the sign
    of the group element used (0 when w lies on a chamber wall, since the
    stabilizer then mixes signs), and whether w is regular (off all walls).
    """
    cur = w
    sign = 1
    moved = True
    while moved:
        moved = False
        for a in rs.simple_roots:
            if cur.dot(a) < 0:
                cur = reflect(cur, a)
                sign = -sign
                moved = True
                break
    regular = all(cur.dot(a) > 0 for a in rs.simple_roots)
    if not regular:
        sign = 0
    return cur, sign, regular


def signed_orbit(w, rs):
    """The full Weyl orbit of a regular weight w, with signs.

    Returns a dict mapping each orbit element to the sign of the group element
    carrying w to it.  Raises DomainError when w lies on a reflection wall
    (the sign would then be ill-defined).
    """
    if any(w.dot(a) == 0 for a in rs.simple_roots):
        raise DomainError("signed orbit requires a weight off all chamber walls")
    out = {w: 1}
    stack = [w]
    simples = rs.simple_roots
    while stack:
        x = stack.pop()
        s = -out[x]
        for a in simples:
            y = reflect(x, a)
            if y not in out:
                out[y] = s
                stack.append(y)
    return out


def orbit_items(w, rs):
    """signed_orbit as a deterministic list of SignedWeight, sorted by
    descending canonical order of the weights."""
    orb = signed_orbit(w, rs)
    return [SignedWeight(x, orb[x]) for x in sorted(orb, key=rs.canonical_key)]
