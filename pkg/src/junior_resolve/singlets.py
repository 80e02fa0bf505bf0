"""Twisted-sector data and singlet enumeration.

Singlets of the j/r twisted sector are counted two independent ways:

* the triple classification: case 1 solves c . nu = nu_i with all c_j
  non-negative, case 2 solves c . nu = c_i + 1 with exactly one
  c_i <= -2; both scans carry bounds that make them provably exhaustive
  (every nu_i is at least 1/r);
* a generating-function oracle that extracts the q^0 z^0 coefficient of
  the sector partition function over the exact exponent grid (1/2r)Z.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import OutOfRange, TruncationOverflow
from .orbifold import sector_nu_num

DEFAULT_TERM_CAP = 10**6


@dataclass(frozen=True)
class TwistedSector:
    """One twisted sector of the orbifold CFT.

    `nu_num` are numerators over r, `tilde_num` numerators over 2r.
    Only junior sectors (nu summing to 1) carry singlet data.
    """

    j: int
    r: int
    nu_num: tuple
    tilde_num: tuple
    energy: Fraction
    charge: Fraction

    @property
    def junior(self):
        return sum(self.nu_num) == self.r

    @property
    def nu(self):
        return tuple(Fraction(n, self.r) for n in self.nu_num)

    @property
    def tilde_nu(self):
        return tuple(Fraction(n, 2 * self.r) for n in self.tilde_num)


def twisted_sector(action, j):
    r = action.r
    if not 0 < j < r:
        raise OutOfRange(f"sector index {j} outside (0, {r})")
    nu = sector_nu_num(action, j)
    # tilde_nu = nu - 1/2 for nu <= 1/2, else nu - 3/2; r odd rules out
    # nu = 1/2, so both branches land in (-1, 0).
    tilde = tuple(2 * n - r if 2 * n < r else 2 * n - 3 * r for n in nu)
    energy = (
        sum(
            Fraction(n, r) * (1 - Fraction(n, r))
            + Fraction(t, 2 * r) * (1 + Fraction(t, 2 * r))
            for n, t in zip(nu, tilde)
        )
        / 2
        - Fraction(5, 8)
    )
    charge = Fraction(-3, 2) - sum(Fraction(t, 2 * r) for t in tilde)
    return TwistedSector(j, r, nu, tilde, energy, charge)


def junior_sectors(action):
    """Twisted sectors whose nu-triple sums to 1, ordered by index."""
    return [
        s
        for s in (twisted_sector(action, j) for j in range(1, action.r))
        if s.junior
    ]


@dataclass(frozen=True)
class SingletTriple:
    """Integer triple labelling one singlet.

    Case 1: target is the corner index i with c . nu = nu_i.
    Case 2: neg_index is the unique i with c_i <= -2 and depth = -c_i.
    """

    c: tuple
    case: int
    target: int = 0      # case 1 only
    neg_index: int = 0   # case 2 only
    depth: int = 0       # case 2 only


def singlets_case1(sector):
    """All case-1 singlets, grouped by target corner index (1..3).

    The scan over (c1, c2) with c1*n1 + c2*n2 <= n_i is exhaustive:
    every term of c . n is non-negative and every n_j >= 1.
    """
    if not sector.junior:
        raise OutOfRange(f"sector {sector.j} is not junior")
    n1, n2, n3 = sector.nu_num
    out = {1: [], 2: [], 3: []}
    for target, ni in zip((1, 2, 3), sector.nu_num):
        for c1 in range(ni // n1 + 1):
            rem1 = ni - c1 * n1
            for c2 in range(rem1 // n2 + 1):
                rem2 = rem1 - c2 * n2
                if rem2 % n3 == 0:
                    c = (c1, c2, rem2 // n3)
                    out[target].append(SingletTriple(c, 1, target=target))
    return out


def singlets_case2(sector):
    """All case-2 singlets, grouped by (neg_index, depth).

    For neg_index i and depth n = -c_i the remaining equation is
    sum_{j != i} c_j n_j = r - n*(r - n_i), whose right side is
    non-negative only while n <= r/(r - n_i); the two free entries are
    then bounded by that right side, so the scan is finite and complete.
    """
    if not sector.junior:
        raise OutOfRange(f"sector {sector.j} is not junior")
    n = sector.nu_num
    r = sector.r
    out = {}
    for i in range(3):
        others = [k for k in range(3) if k != i]
        deficit = r - n[i]  # r*(1 - nu_i) > 0
        depth = 2
        while r - depth * deficit >= 0:
            rhs = r - depth * deficit
            na, nb = n[others[0]], n[others[1]]
            found = []
            for ca in range(rhs // na + 1):
                rem = rhs - ca * na
                if rem % nb == 0:
                    c = [0, 0, 0]
                    c[i] = -depth
                    c[others[0]] = ca
                    c[others[1]] = rem // nb
                    found.append(
                        SingletTriple(tuple(c), 2, neg_index=i + 1, depth=depth)
                    )
            if found:
                out[(i + 1, depth)] = found
            depth += 1
    return out


def case1_counts(sector):
    """Case-1 multiplicity toward each corner, keyed 1..3."""
    return {i: len(v) for i, v in singlets_case1(sector).items()}


def case1_monomial_counts(simplex, alpha):
    """Case-1 triples at interior point alpha that define genuine
    monomials, keyed by target corner.

    A triple defines a monomial when the exponent it induces at every
    other point is an integer and non-negative.  For a sector index j
    coprime to r both properties are automatic, so this agrees with
    `case1_counts`; for degenerate sectors (gcd(j, r) > 1) some triples
    fail and the monomial count is the one realized as a deformation
    dimension and as an edge strength.
    """
    r = simplex.r
    point = simplex.point(alpha)
    weights = (1, simplex.action.a, simplex.action.b)
    sector = twisted_sector(simplex.action, point.coords3[0])
    others = [p.nu_num for p in simplex.interior if p.index != alpha]
    out = {}
    for target, triples in singlets_case1(sector).items():
        count = 0
        for t in triples:
            c = t.c
            if (sum(ci * w for ci, w in zip(c, weights))
                    - weights[target - 1]) % r:
                continue
            if all(
                c[0] * m[0] + c[1] * m[1] + c[2] * m[2] >= m[target - 1]
                for m in others
            ):
                count += 1
        out[target] = count
    return out


def case2_monomial_counts(simplex, alpha):
    """Case-2 triples at interior point alpha that induce integral
    exponents, grouped by (neg_index, depth).

    Same degeneracy story as `case1_monomial_counts`: for gcd(j, r) = 1
    every case-2 triple qualifies; for degenerate sectors the
    non-integral ones do not correspond to arrows of the resolution
    quiver and are dropped.
    """
    r = simplex.r
    point = simplex.point(alpha)
    weights = (1, simplex.action.a, simplex.action.b)
    sector = twisted_sector(simplex.action, point.coords3[0])
    out = {}
    for key, triples in singlets_case2(sector).items():
        count = sum(
            1
            for t in triples
            if sum(ci * w for ci, w in zip(t.c, weights)) % r == 0
        )
        if count:
            out[key] = count
    return out


def total_singlets(sector):
    c1 = sum(len(v) for v in singlets_case1(sector).values())
    c2 = sum(len(v) for v in singlets_case2(sector).values())
    return c1 + c2


def singlet_count_pf(sector, term_cap=DEFAULT_TERM_CAP):
    """q^0 z^0 coefficient of the sector partition function.

    The partition function is

        q^E z^(-3/2 - sum(tilde))
        * prod_i (1 + q^(1 + tilde_i) z^-1)(1 + q^(-tilde_i) z)
                 / ((1 - q^(nu_i))(1 - q^(1 - nu_i)))

    All q-exponents live on the grid (1/2r)Z.  The denominator product
    is expanded once as a coefficient array via strided prefix sums;
    the 2^6 numerator selections with balancing z-power are then read
    off against it.  Returns 0 when E > 0 or the z-offset is not an
    integer, since no term can then reach q^0 z^0.
    """
    if not sector.junior:
        raise OutOfRange(f"sector {sector.j} is not junior")
    r = sector.r
    if sector.charge.denominator != 1:
        return 0
    z_offset = int(sector.charge)
    # Exponent numerators over 2r.
    target_q = -sector.energy * 2 * r
    if target_q.denominator != 1:
        return 0
    target_q = int(target_q)
    if target_q < 0:
        return 0
    if target_q + 1 > term_cap:
        raise TruncationOverflow(
            f"series length {target_q + 1} exceeds cap {term_cap}"
        )

    # prod_i 1/((1 - q^nu_i)(1 - q^(1-nu_i))) as coefficients on 0..target_q
    coeffs = [0] * (target_q + 1)
    coeffs[0] = 1
    strides = []
    for n in sector.nu_num:
        strides.append(2 * n)
        strides.append(2 * (r - n))
    for s in strides:
        for k in range(s, target_q + 1):
            coeffs[k] += coeffs[k - s]

    # Each binomial contributes either 1 or a single (q-exp, z-shift) term.
    choices = []
    for n, t in zip(sector.nu_num, sector.tilde_num):
        choices.append((2 * r + t, -1))  # 1 + tilde_i, z^-1
        choices.append((-t, +1))         # -tilde_i, z^+1
    total = 0
    for mask in range(1 << 6):
        q_off = 0
        z_off = z_offset
        for bit in range(6):
            if mask >> bit & 1:
                q_off += choices[bit][0]
                z_off += choices[bit][1]
        if z_off == 0 and 0 <= target_q - q_off:
            total += coeffs[target_q - q_off]
    return total
