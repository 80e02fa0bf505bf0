"""Core lattice data for the cyclic orbifold C^3/Z_r.

A normalized action (r; 1, a, b) determines the junior simplex: the
lattice triangle with corners u1 = (r, -a, -b), u2 = (0, 1, 0),
u3 = (0, 0, 1) inside the plane x + y + z = 1.  Its lattice points are
the ray generators of every crepant resolution.  All rational data is
carried as integer numerators over the fixed denominator r.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from .errors import NotCalabiYau, NotIsolated, OutOfRange

CORNER = "corner"
INTERIOR = "interior"


@dataclass(frozen=True)
class GroupAction:
    """Normalized cyclic group action (zeta_r, zeta_r^a, zeta_r^b)."""

    r: int
    a: int
    b: int

    def __post_init__(self):
        r, a, b = self.r, self.a, self.b
        if r < 3:
            raise OutOfRange(f"group order must be >= 3, got {r}")
        if not (0 < a < r and 0 < b < r):
            raise OutOfRange(f"weights must lie in (0, {r}), got {(a, b)}")
        if gcd(a, r) > 1 or gcd(b, r) > 1:
            raise NotIsolated(f"weights {(1, a, b)} share a factor with r={r}")
        if (1 + a + b) % r != 0:
            raise NotCalabiYau(f"1 + {a} + {b} is not divisible by r={r}")
        # With 0 < a, b < r the sum 1 + a + b lies in (1, 2r), so it is r
        # exactly; r even would force a, b odd and an odd sum.
        assert 1 + a + b == r
        assert r % 2 == 1

    @property
    def weights(self):
        return (1, self.a, self.b)


def normalize_action(r, w1, w2, w3):
    """Normalize a weight triple to the form (r; 1, a, b).

    All weights are multiplied by the inverse of the first weight mod r
    (every weight is a unit once the isolated check passes).

    Raises NotIsolated or NotCalabiYau on invalid input.
    """
    if r < 3:
        raise OutOfRange(f"group order must be >= 3, got {r}")
    weights = (w1, w2, w3)
    for w in weights:
        if not 0 < w < r:
            raise OutOfRange(f"weight {w} outside (0, {r})")
    for w in weights:
        if gcd(w, r) > 1:
            raise NotIsolated(f"gcd({w}, {r}) > 1: singularity is not isolated")
    if (w1 + w2 + w3) % r != 0:
        raise NotCalabiYau(f"weights {weights} do not sum to 0 mod {r}")
    inv = pow(w1, -1, r)
    return GroupAction(r, (w2 * inv) % r, (w3 * inv) % r)


@dataclass(frozen=True)
class SimplexPoint:
    """One lattice point of the junior simplex.

    `nu_num` holds the numerators of the rational triple nu over the
    common denominator r; for the three corners it is r times a unit
    vector, which makes the coordinate formula below uniform.
    """

    index: int  # 1-based; 1..3 are corners
    coords3: tuple
    nu_num: tuple
    kind: str

    @property
    def chart2(self):
        """Projection to the 2D chart (y, z); x = 1 - y - z."""
        return (self.coords3[1], self.coords3[2])

    def nu(self, r):
        return tuple(Fraction(n, r) for n in self.nu_num)


def coords_from_nu(action, nu_num):
    """Lattice coordinates (nu1*r, nu2 - a*nu1, nu3 - b*nu1) of a junior
    sector given its nu-numerators over r."""
    r, a, b = action.r, action.a, action.b
    n1, n2, n3 = nu_num
    assert (n2 - a * n1) % r == 0 and (n3 - b * n1) % r == 0
    return (n1, (n2 - a * n1) // r, (n3 - b * n1) // r)


def sector_nu(action, j):
    """Exact nu-triple of the j/r twisted sector."""
    r, a, b = action.r, action.a, action.b
    if not 0 < j < r:
        raise OutOfRange(f"sector index {j} outside (0, {r})")
    return (Fraction(j, r), Fraction(j * a % r, r), Fraction(j * b % r, r))


def sector_nu_num(action, j):
    """Numerators of sector_nu over the denominator r."""
    r, a, b = action.r, action.a, action.b
    if not 0 < j < r:
        raise OutOfRange(f"sector index {j} outside (0, {r})")
    return (j, j * a % r, j * b % r)


def interior_points(action):
    """All interior lattice points of the junior triangle, ordered by
    first coordinate.

    A sector j contributes a point exactly when its nu-numerators sum
    to r (the junior condition); the point is then
    (j, -floor(ja/r), -floor(jb/r)).
    """
    r, a, b = action.r, action.a, action.b
    points = []
    for j in range(1, r):
        n = sector_nu_num(action, j)
        if sum(n) != r:
            continue
        s = (j * a) // r
        t = (j * b) // r
        assert j - s - t == 1
        points.append(((j, -s, -t), n))
    result = []
    for offset, (coords, n) in enumerate(points):
        result.append(SimplexPoint(4 + offset, coords, n, INTERIOR))
    return result


@dataclass(frozen=True, eq=False)
class Simplex:
    """The junior simplex: corners u1..u3 plus interior points u4..uN."""

    action: GroupAction
    points: tuple

    @property
    def r(self):
        return self.action.r

    @property
    def n_points(self):
        return len(self.points)

    @cached_property
    def corners(self):
        return self.points[:3]

    @cached_property
    def interior(self):
        return self.points[3:]

    def point(self, index):
        return self.points[index - 1]

    @cached_property
    def by_chart(self):
        return {p.chart2: p for p in self.points}

    @cached_property
    def by_sector(self):
        """Interior points keyed by their sector index (first coordinate)."""
        return {p.coords3[0]: p for p in self.interior}

    @cached_property
    def doubled_area(self):
        return self.r


def junior_simplex(action):
    r, a, b = action.r, action.a, action.b
    corners = (
        SimplexPoint(1, (r, -a, -b), (r, 0, 0), CORNER),
        SimplexPoint(2, (0, 1, 0), (0, r, 0), CORNER),
        SimplexPoint(3, (0, 0, 1), (0, 0, r), CORNER),
    )
    return Simplex(action, corners + tuple(interior_points(action)))


def simplex_from_weights(r, w1, w2, w3):
    return junior_simplex(normalize_action(r, w1, w2, w3))


@dataclass(frozen=True)
class ChargeMatrix:
    """Left-kernel basis of the point matrix A, one row per interior point.

    Row alpha is (nu1, nu2, nu3, 0, ..., -1, ..., 0) with the -1 in the
    column of alpha.  Column j is the charge vector q_j of the ray x_j.
    """

    rows: tuple

    def column(self, j):
        """Charge vector of the j-th ray (1-based)."""
        return tuple(row[j - 1] for row in self.rows)


def charge_matrix(simplex):
    r = simplex.r
    n = simplex.n_points
    rows = []
    for p in simplex.interior:
        row = [Fraction(0)] * n
        for i in range(3):
            row[i] = Fraction(p.nu_num[i], r)
        row[p.index - 1] = Fraction(-1)
        rows.append(tuple(row))
    return ChargeMatrix(tuple(rows))
