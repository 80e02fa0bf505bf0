from __future__ import annotations

from fractions import Fraction

import pytest

from junior_resolve import (
    BoundaryEdge,
    NotAnEdge,
    Triangulation,
    all_triangulations,
    deformation_report,
    edge_k,
    ext_dim_interior_pair,
    ext_dim_vertex_pair,
    ghilbert_triangulation,
    minimality_sweep,
)
from junior_resolve import GroupAction, junior_simplex

Z11_VERTEX_DIMS = {
    (4, 1): 1, (4, 2): 2, (4, 3): 6,
    (5, 1): 1, (5, 2): 2, (5, 3): 1,
    (6, 1): 1, (6, 2): 3, (6, 3): 1,
    (7, 1): 3, (7, 2): 1, (7, 3): 2,
    (8, 1): 4, (8, 2): 2, (8, 3): 1,
}

Z11_INTERIOR_DIMS = {(4, 7): 1, (5, 4): 3, (6, 5): 2, (6, 8): 2}


def test_z11_edge_k_fixtures(z11):
    triang = ghilbert_triangulation(z11)
    assert edge_k(triang, 3, 4) == 5
    assert edge_k(triang, 4, 5) == 3
    assert edge_k(triang, 7, 5) == 0
    assert edge_k(triang, 1, 7) == 2
    assert edge_k(triang, 1, 8) == 3


def test_edge_k_rejects_non_edges_and_boundary(z11):
    triang = ghilbert_triangulation(z11)
    with pytest.raises(NotAnEdge):
        edge_k(triang, 4, 8)
    with pytest.raises(BoundaryEdge):
        edge_k(triang, 1, 2)


def test_z11_vertex_pair_enumeration(z11):
    triang = ghilbert_triangulation(z11)
    dim, monomials = ext_dim_vertex_pair(triang, 4, 3)
    assert dim == 6
    assert "x1^2 x2^3 x5 x6^2 x7 x8^2" in {str(m) for m in monomials}
    assert ext_dim_vertex_pair(triang, 5, 1)[0] == 1
    for pair, expected in Z11_VERTEX_DIMS.items():
        assert ext_dim_vertex_pair(triang, *pair)[0] == expected


def test_vertex_monomials_satisfy_induced_identities(z11):
    """Every emitted monomial for (alpha -> i) has c_alpha = 0 and
    c . nu^beta - c_beta = nu_i^beta at each interior beta."""
    triang = ghilbert_triangulation(z11)
    r = z11.r
    for (alpha, corner), _ in Z11_VERTEX_DIMS.items():
        _, monomials = ext_dim_vertex_pair(triang, alpha, corner)
        for mono in monomials:
            c = mono.exponents
            assert c[alpha - 1] == 0
            for p in z11.interior:
                lhs = sum(
                    Fraction(c[i] * p.nu_num[i], r) for i in range(3)
                ) - c[p.index - 1]
                assert lhs == Fraction(p.nu_num[corner - 1], r)


def test_z11_interior_pair_enumeration(z11):
    triang = ghilbert_triangulation(z11)
    assert ext_dim_interior_pair(triang, 5, 4)[0] == 3
    assert ext_dim_interior_pair(triang, 7, 8)[0] == 0
    assert ext_dim_interior_pair(triang, 4, 8)[0] == 0  # not an edge
    for pair, expected in Z11_INTERIOR_DIMS.items():
        assert ext_dim_interior_pair(triang, *pair)[0] == expected


def test_z11_report_totals(z11):
    report = deformation_report(ghilbert_triangulation(z11))
    assert dict(report.vertex_pairs) == Z11_VERTEX_DIMS
    interior = {p: d for p, d in report.interior_pairs if d}
    assert interior == Z11_INTERIOR_DIMS
    assert report.vertex_total == 31
    assert report.interior_total == 8
    assert report.grand_total == 39
    assert report.case1_total == 31
    assert report.case2_total == 8
    assert [
        (s.sector, s.case1, s.case2, s.vertex_dim_sum) for s in report.sectors
    ] == [(4, 9, 5, 9), (5, 4, 0, 4), (6, 5, 0, 5), (7, 6, 1, 6), (8, 7, 2, 7)]


def test_z11_ext_quiver_arrows(z11):
    report = deformation_report(ghilbert_triangulation(z11))
    arrows = report.ext_quiver_arrows()
    assert arrows[(4, 3)] == 6
    assert arrows[(5, 4)] == 3
    assert (7, 8) not in arrows
    assert sum(arrows.values()) == 39


def test_z3_report(z3):
    report = deformation_report(ghilbert_triangulation(z3))
    assert dict(report.vertex_pairs) == {(4, 1): 3, (4, 2): 3, (4, 3): 3}
    assert report.interior_total == 0
    assert report.grand_total == 9


def test_z9_report(z9):
    """Degenerate sector 3/9 (point u6): dimensions follow the filtered
    monomial counts (2, 2, 1), not the raw triple counts (3, 3, 3)."""
    report = deformation_report(ghilbert_triangulation(z9))
    dims = dict(report.vertex_pairs)
    assert (dims[(6, 1)], dims[(6, 2)], dims[(6, 3)]) == (2, 2, 1)


def test_explicit_bound_matches_default(z11):
    triang = ghilbert_triangulation(z11)
    default = deformation_report(triang)
    wide = deformation_report(triang, bound=5 * z11.r)
    assert default.vertex_pairs == wide.vertex_pairs
    assert default.interior_pairs == wide.interior_pairs


def test_z11_minimality_sweep(z11):
    result = minimality_sweep(z11)
    assert result.n_triangulations == 5
    assert sorted(t for t, _ in result.totals) == [39, 39, 41, 43, 45]
    assert result.minimum == 39
    assert result.ghilbert_total == 39
    assert result.singlet_total == 39
    assert result.minimal_is_ghilbert
    assert result.matches_singlets


def test_z7_sweep_matches_singlets():
    simplex = junior_simplex(GroupAction(7, 2, 4))
    result = minimality_sweep(simplex)
    assert result.minimal_is_ghilbert
    assert result.matches_singlets
    assert result.ghilbert_total == result.singlet_total


def test_flipped_triangulations_never_undercut(z11):
    ghilb_total = deformation_report(ghilbert_triangulation(z11)).grand_total
    for triang in all_triangulations(z11):
        assert deformation_report(triang).grand_total >= ghilb_total


def test_report_on_plain_triangulation_without_strengths(z11):
    triangles = ghilbert_triangulation(z11).triangles
    report = deformation_report(Triangulation(z11, triangles))
    assert report.grand_total == 39
