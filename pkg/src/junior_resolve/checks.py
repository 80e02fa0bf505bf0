"""Cross-route consistency checks, shared by the CLI verify command and
the test suite.

For one group action the full battery confirms:

* the charge matrix annihilates the point matrix;
* junior sectors biject onto interior points with matching nu-data;
* continued-fraction identities and corner-fan placement;
* triple-scan singlet counts against the partition-function oracle;
* equality of the quiver-built and knockout-built triangulations;
* three-route agreement of deformation dimensions on the distinguished
  triangulation (edge determinant, direct enumeration, singlet counts).
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .deformations import deformation_report, edge_k
from .hj import corner_fan
from .orbifold import (
    GroupAction,
    charge_matrix,
    coords_from_nu,
    junior_simplex,
    sector_nu_num,
)
from .singlets import (
    case1_monomial_counts,
    case2_monomial_counts,
    junior_sectors,
    singlet_count_pf,
    singlets_case1,
    singlets_case2,
)
from .triangulation import (
    _case2_arrow_nodes,
    ghilbert_triangulation,
    knockout_triangulation,
    quiver_from_singlets,
)


def all_actions(rmax, rmin=3):
    """Every valid normalized action (r; 1, a, b) with r <= rmax."""
    out = []
    for r in range(rmin, rmax + 1, 2):
        for a in range(1, r - 1):
            b = r - 1 - a
            if b <= 0:
                continue
            if gcd(a, r) == 1 and gcd(b, r) == 1:
                out.append(GroupAction(r, a, b))
    return out


def check_charge_matrix(simplex):
    failures = []
    phi = charge_matrix(simplex)
    coords = [p.coords3 for p in simplex.points]
    for row_idx, row in enumerate(phi.rows):
        for col in range(3):
            total = sum(
                row[j] * Fraction(coords[j][col]) for j in range(len(coords))
            )
            if total != 0:
                failures.append(
                    f"charge row {row_idx} does not annihilate column {col}"
                )
    return failures


def check_sector_bijection(simplex):
    failures = []
    action = simplex.action
    juniors = {
        j
        for j in range(1, action.r)
        if sum(sector_nu_num(action, j)) == action.r
    }
    interior_sectors = {p.coords3[0] for p in simplex.interior}
    if juniors != interior_sectors:
        failures.append("junior sectors do not match interior points")
    for p in simplex.interior:
        if coords_from_nu(action, p.nu_num) != p.coords3:
            failures.append(f"nu-reconstruction differs at u{p.index}")
    # boundary primitivity: edge vectors of the 2D triangle are primitive
    corners = [p.chart2 for p in simplex.corners]
    for i in range(3):
        ax, ay = corners[i]
        bx, by = corners[(i + 1) % 3]
        if gcd(abs(bx - ax), abs(by - ay)) != 1:
            failures.append(f"boundary edge {i} is not primitive")
    return failures


def check_continued_fractions(simplex):
    failures = []
    for k in (1, 2, 3):
        fan = corner_fan(simplex, k)
        frac = fan.fraction
        r, c = frac.r, frac.c
        d, b, P = frac.d, frac.b, frac.P
        if d[0] != c or d[-1] != 0 or P[-1] != r:
            failures.append(f"corner {k}: expansion endpoints wrong")
        chain = [r] + list(d)
        for i in range(len(b)):
            if chain[i] != chain[i + 1] * b[i] - chain[i + 2]:
                failures.append(f"corner {k}: remainder chain broken at {i}")
        for j in range(1, len(b) + 1):
            if P[j] * d[j - 1] - P[j - 1] * d[j] != r:
                failures.append(f"corner {k}: P/d determinant identity fails")
        seen = set()
        for ray in fan.rays:
            direction = (
                ray.point.chart2[0] - simplex.point(k).chart2[0],
                ray.point.chart2[1] - simplex.point(k).chart2[1],
            )
            if gcd(abs(direction[0]), abs(direction[1])) != 1:
                failures.append(f"corner {k}: ray to u{ray.point.index} not primitive")
            if direction in seen:
                failures.append(f"corner {k}: duplicate ray direction")
            seen.add(direction)
    return failures


def check_singlet_counts(action):
    failures = []
    for sector in junior_sectors(action):
        scan = sum(len(v) for v in singlets_case1(sector).values()) + sum(
            len(v) for v in singlets_case2(sector).values()
        )
        pf = singlet_count_pf(sector)
        if scan != pf:
            failures.append(
                f"sector {sector.j}: scan count {scan} != pf count {pf}"
            )
        seen = set()
        for group in singlets_case1(sector).values():
            seen.update(t.c for t in group)
        for group in singlets_case2(sector).values():
            for t in group:
                if t.c in seen:
                    failures.append(f"sector {sector.j}: duplicate triple {t.c}")
                seen.add(t.c)
    return failures


def check_hilbert_equality(simplex):
    failures = []
    quiver_built = ghilbert_triangulation(simplex)
    knockout_built = knockout_triangulation(simplex)
    if quiver_built.triangles != knockout_built.triangles:
        failures.append("quiver and knockout triangulations differ")
    elif quiver_built.strengths != knockout_built.strengths:
        failures.append("quiver and knockout edge strengths differ")
    return failures


def check_route_agreement(simplex, cache=None):
    """On the distinguished triangulation, all three dimension routes
    must agree pairwise and with the singlet quiver."""
    failures = []
    triang = ghilbert_triangulation(simplex)
    quiver = quiver_from_singlets(simplex)
    report = deformation_report(triang, cache=cache)
    vertex_dims = dict(report.vertex_pairs)
    interior_dims = dict(report.interior_pairs)
    # singlet route: monomial multiplicities = dimensions, including
    # multiplicity-one corner arrows and absent interior arrows; for
    # sectors with index coprime to r the raw case-1 counts agree too
    monomial = {
        p.index: case1_monomial_counts(simplex, p.index)
        for p in simplex.interior
    }
    for (alpha, corner), dim in vertex_dims.items():
        if monomial[alpha][corner] != dim:
            failures.append(
                f"pair (u{alpha}, u{corner}): dim {dim} != monomial count "
                f"{monomial[alpha][corner]}"
            )
        j = simplex.point(alpha).coords3[0]
        if gcd(j, simplex.r) == 1 and quiver.multiplicity(alpha, corner) != dim:
            failures.append(
                f"pair (u{alpha}, u{corner}): dim {dim} != case-1 count "
                f"{quiver.multiplicity(alpha, corner)}"
            )
    case2_arrows = {}
    for p in simplex.interior:
        for (neg_index, depth), count in case2_monomial_counts(
            simplex, p.index
        ).items():
            src, dst = _case2_arrow_nodes(simplex, p, neg_index, depth)
            case2_arrows[(src, dst)] = case2_arrows.get((src, dst), 0) + count
    for (alpha, beta), dim in interior_dims.items():
        if case2_arrows.get((alpha, beta), 0) != dim:
            failures.append(
                f"pair (u{alpha}, u{beta}): dim {dim} != case-2 arrow count "
                f"{case2_arrows.get((alpha, beta), 0)}"
            )
    for (src, dst), mult in case2_arrows.items():
        if interior_dims.get((src, dst), 0) != mult:
            failures.append(f"case-2 arrow u{src}->u{dst} missing from report")
    # determinant route on edges
    strengths = triang.strength_map
    for (i, j), strength in strengths.items():
        if i <= 3:
            k = edge_k(triang, i, j)
            if k + 1 != strength or vertex_dims[(j, i)] != k + 1:
                failures.append(f"edge u{i}-u{j}: determinant route disagrees")
        else:
            k = edge_k(triang, i, j)
            if abs(k) != strength:
                failures.append(f"edge u{i}-u{j}: |k|={abs(k)} != strength")
            fwd = interior_dims.get((j, i), 0) if k > 0 else interior_dims.get((i, j), 0)
            if abs(k) != fwd and k != 0:
                failures.append(f"edge u{i}-u{j}: directed dim mismatch")
            if k == 0 and (interior_dims.get((i, j), 0) or interior_dims.get((j, i), 0)):
                failures.append(f"edge u{i}-u{j}: flat edge has deformations")
    return failures


def check_energy(action):
    """Junior-sector vacuum energies expected non-positive; returns
    observations, not failures."""
    notes = []
    for sector in junior_sectors(action):
        if sector.energy > 0:
            notes.append(f"sector {sector.j}: positive energy {sector.energy}")
    return notes


def run_checks(action, deep=True):
    """Full battery for one action; returns a list of failure strings."""
    simplex = junior_simplex(action)
    failures = []
    failures += check_charge_matrix(simplex)
    failures += check_sector_bijection(simplex)
    failures += check_continued_fractions(simplex)
    failures += check_singlet_counts(action)
    failures += check_hilbert_equality(simplex)
    if deep:
        failures += check_route_agreement(simplex)
    return [f"({action.r};1,{action.a},{action.b}) {msg}" for msg in failures]
