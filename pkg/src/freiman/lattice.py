"""Exact lattice-point sets and sumset arithmetic.

Points are tuples of nonnegative integers; deduplication is exact tuple
equality, so collisions under addition are the signal everything else is
built on.  No floating point is used anywhere.
"""

from dataclasses import dataclass
from math import comb

from .linalg import integer_rank

ExponentVector = tuple  # tuple[int, ...], coordinates >= 0


@dataclass(frozen=True)
class PointSet:
    """A finite, duplicate-free set of lattice points in Z^ambient_dim."""

    ambient_dim: int
    points: frozenset

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise ValueError("ambient dimension must be positive")
        for p in self.points:
            if len(p) != self.ambient_dim:
                raise ValueError(
                    f"point {p} has length {len(p)}, expected {self.ambient_dim}"
                )
            if any(not isinstance(x, int) or x < 0 for x in p):
                raise ValueError(f"point {p} has a negative or non-integer coordinate")

    @classmethod
    def of(cls, points, ambient_dim=None):
        """Build from an iterable of coordinate sequences, inferring the
        ambient dimension from the first point unless given."""
        pts = frozenset(tuple(p) for p in points)
        if ambient_dim is None:
            if not pts:
                raise ValueError("cannot infer ambient dimension of an empty set")
            ambient_dim = len(next(iter(pts)))
        return cls(ambient_dim, pts)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def sorted_points(self):
        return sorted(self.points)


def _fresh(ambient_dim, points):
    # internal constructor for results of closed operations; skips validation
    ps = object.__new__(PointSet)
    object.__setattr__(ps, "ambient_dim", ambient_dim)
    object.__setattr__(ps, "points", points)
    return ps


def sumset(x: PointSet, y: PointSet) -> PointSet:
    """The Minkowski sum {a + b : a in x, b in y}, duplicate-free."""
    if x.ambient_dim != y.ambient_dim:
        raise ValueError(
            f"dimension mismatch: {x.ambient_dim} vs {y.ambient_dim}"
        )
    xs, ys = x.points, y.points
    if len(xs) > len(ys):
        xs, ys = ys, xs
    out = set()
    add = out.add
    for a in xs:
        for b in ys:
            add(tuple(map(int.__add__, a, b)))
    return _fresh(x.ambient_dim, frozenset(out))


def dilate(x: PointSet, k: int) -> PointSet:
    """The k-fold sumset kX = X + ... + X.  Accumulates incrementally,
    since the intermediate sets are themselves meaningful (they count
    generators of ideal powers)."""
    if k < 1:
        raise ValueError("dilation factor must be >= 1")
    cur = x
    for _ in range(k - 1):
        cur = sumset(cur, x)
    return cur


def affine_dim(x: PointSet) -> int:
    """Dimension of the affine hull of x: the exact rank over Q of the
    difference vectors against a fixed base point."""
    if not x.points:
        raise ValueError("affine hull of the empty set is undefined")
    pts = x.sorted_points()
    base = pts[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in pts[1:]]
    return integer_rank(diffs)


def freiman_lower_bound(m: int, d: int) -> int:
    """Lower bound (d+1)m - C(d+1, 2) for the doubling of an m-point set
    whose affine hull has dimension d."""
    return (d + 1) * m - comb(d + 1, 2)


def generalized_lower_bound(m: int, ell: int, k: int) -> int:
    """Lower bound C(ell+k-2, k-1)m - (k-1)C(ell+k-2, k) for the k-fold
    sumset; at k=2 this is freiman_lower_bound(m, ell-1)."""
    if ell < 1 or k < 1:
        raise ValueError("ell and k must be >= 1")
    return comb(ell + k - 2, k - 1) * m - (k - 1) * comb(ell + k - 2, k)
