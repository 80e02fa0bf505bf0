"""Jung-Hirzebruch continued fractions and corner fans.

Each corner of the junior triangle carries a 2D cyclic quotient cone
resolved by the minus-sign continued fraction r/c = [[b_1, ..., b_m]].
The m rays of that resolution end at interior points of the simplex and
start with strength b_j.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InvalidFraction, JuniorResolveError


@dataclass(frozen=True)
class ContinuedFraction:
    """Full expansion data of r/c = [[b_1, ..., b_m]].

    Satisfies r = c*b_1 - d_1 and d_{i-1} = d_i*b_{i+1} - d_{i+1} with
    d_0 = c, d_m = 0, P_m = r, and r = P_j*d_{j-1} - P_{j-1}*d_j.
    """

    r: int
    c: int
    b: tuple
    P: tuple
    Q: tuple
    d: tuple

    @property
    def length(self):
        return len(self.b)


def hj_expand(r, c):
    """Expand r/c as a minus-sign continued fraction."""
    if not (0 < c < r) or gcd(c, r) != 1:
        raise InvalidFraction(f"{r}/{c} is not a reduced proper fraction")
    b = []
    d = [c]
    hi, lo = r, c
    while lo > 0:
        q = -(-hi // lo)  # ceiling division
        b.append(q)
        hi, lo = lo, q * lo - hi
        d.append(lo)
    P = [1, b[0]]
    Q = [0, 1]
    for bi in b[1:]:
        P.append(bi * P[-1] - P[-2])
        Q.append(bi * Q[-1] - Q[-2])
    assert P[-1] == r and d[-1] == 0
    return ContinuedFraction(r, c, tuple(b), tuple(P), tuple(Q), tuple(d))


@dataclass(frozen=True)
class CornerRay:
    point: object  # SimplexPoint
    strength: int


@dataclass(frozen=True)
class CornerFan:
    corner: int  # 1, 2 or 3
    fraction: ContinuedFraction
    rays: tuple


def _corner_parameter(action, k):
    # c_k = a_{k+2} * a_{k+1}^{-1} mod r with weights (1, a, b) cyclic.
    w = action.weights
    nxt = w[k % 3]          # a_{k+1}
    nxt2 = w[(k + 1) % 3]   # a_{k+2}
    return (nxt2 * pow(nxt, -1, action.r)) % action.r


def corner_fan(simplex, k):
    """Ordered resolution rays of corner k with their initial strengths.

    Ray j ends at the interior point whose cyclic nu-pair
    (nu_{k+1}, nu_{k+2}) equals (P_{j-1}, d_{j-1})/r and carries
    strength b_j.
    """
    action = simplex.action
    r = action.r
    c = _corner_parameter(action, k)
    frac = hj_expand(r, c)
    i1 = k % 3          # 0-based position of nu_{k+1}
    i2 = (k + 1) % 3    # 0-based position of nu_{k+2}
    lookup = {(p.nu_num[i1], p.nu_num[i2]): p for p in simplex.interior}
    rays = []
    for j in range(1, frac.length + 1):
        key = (frac.P[j - 1], frac.d[j - 1])
        point = lookup.get(key)
        if point is None:
            raise JuniorResolveError(
                f"corner {k}: predicted ray point nu=({key[0]}/{r}, {key[1]}/{r}) "
                "is not an interior point"
            )
        rays.append(CornerRay(point, frac.b[j - 1]))
    return CornerFan(k, frac, tuple(rays))
