"""Exact rational vectors and small exact linear algebra.

Everything in the package computes over Q, never over floats.  A Weight is an
immutable vector of fractions.Fraction living in the ambient orthogonal
coordinate space of a root system; the same class also represents roots,
u(1) charge directions and root-lattice displacements.
"""

from fractions import Fraction

from .errors import InternalInvariantError


class Weight:
    """Immutable exact vector with the plain Euclidean inner product."""

    __slots__ = ("coords", "_hash")

    def __init__(self, coords):
        self.coords = tuple(Fraction(c) for c in coords)
        self._hash = hash(self.coords)

    @classmethod
    def _make(cls, coords):
        # fast path: coords is already a tuple of Fractions
        w = object.__new__(cls)
        w.coords = coords
        w._hash = hash(coords)
        return w

    @classmethod
    def zero(cls, dim):
        return cls._make((Fraction(0),) * dim)

    def __len__(self):
        return len(self.coords)

    def __add__(self, other):
        return Weight._make(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Weight._make(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Weight._make(tuple(-a for a in self.coords))

    def scale(self, k):
        k = Fraction(k)
        return Weight._make(tuple(k * a for a in self.coords))

    def __rmul__(self, k):
        return self.scale(k)

    def dot(self, other):
        return sum(a * b for a, b in zip(self.coords, other.coords))

    def norm2(self):
        return self.dot(self)

    def is_zero(self):
        return all(a == 0 for a in self.coords)

    def __eq__(self, other):
        return isinstance(other, Weight) and self.coords == other.coords

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Weight(%s)" % ", ".join(str(c) for c in self.coords)


def solve_exact(matrix, rhs):
    """Solve matrix @ x = rhs over Q by Gaussian elimination.

    `matrix` is a list of rows (lists of Fractions), square and invertible;
    `rhs` is a list of Fractions.  Returns a list of Fractions.
    """
    n = len(matrix)
    a = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise InternalInvariantError("singular matrix in exact solve")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def invert_exact(matrix):
    """Exact inverse of a square invertible matrix over Q."""
    n = len(matrix)
    cols = []
    for j in range(n):
        rhs = [Fraction(1) if i == j else Fraction(0) for i in range(n)]
        cols.append(solve_exact(matrix, rhs))
    return [[cols[j][i] for j in range(n)] for i in range(n)]
