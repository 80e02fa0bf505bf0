"""First-order deformation counting for crepant resolutions.

Dimensions of the relevant Ext groups are computed two ways: a
determinant formula on triangulation edges, and direct enumeration of
the Laurent-monomial exponent triples, with non-negativity imposed
exactly at the points sharing a triangle with the pair.  Agreement of
the two routes (and with the singlet counts on the distinguished
triangulation) is the core consistency check of the package.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import (
    BoundaryEdge,
    BoundUnstable,
    NotAnEdge,
    SizeLimit,
)
from .singlets import case1_counts, singlets_case2, twisted_sector
from .triangulation import (
    Triangulation,
    _edge_key,
    all_triangulations,
    ghilbert_triangulation,
)


@dataclass(frozen=True)
class LaurentMonomial:
    """Exponent vector of one deformation monomial, indexed by point."""

    exponents: tuple  # exponent of x_j at position j-1

    def __str__(self):
        parts = []
        for idx, e in enumerate(self.exponents, start=1):
            if e == 1:
                parts.append(f"x{idx}")
            elif e != 0:
                parts.append(f"x{idx}^{e}")
        return " ".join(parts) or "1"


def edge_k(triang, p, q):
    """Lattice displacement coefficient of an edge.

    For the edge (p, q) with opposite points w1, w2 this is the unique
    integer k with w1 + w2 - p - q = k*(q - p) in the 2D chart.  When p
    is a corner the pair dimension toward p is k + 1; for an interior
    edge the magnitude |k| is the pair dimension, directed toward the
    endpoint nearer the generating corner.
    """
    key = _edge_key(p, q)
    if key in triang.boundary_edges:
        raise BoundaryEdge(f"edge {key} lies on the junior triangle boundary")
    ts = triang.edge_triangles.get(key)
    if ts is None:
        raise NotAnEdge(f"{key} is not an edge of the triangulation")
    pts = triang.simplex.points
    w1, w2 = (next(i for i in t if i not in key) for t in ts)
    ax, ay = pts[p - 1].chart2
    bx, by = pts[q - 1].chart2
    sx = pts[w1 - 1].chart2[0] + pts[w2 - 1].chart2[0] - ax - bx
    sy = pts[w1 - 1].chart2[1] + pts[w2 - 1].chart2[1] - ay - by
    dx, dy = bx - ax, by - ay
    # (sx, sy) is parallel to (dx, dy) in any unimodular triangulation.
    if dx != 0:
        k, rem = divmod(sx, dx)
        assert rem == 0 and sy == k * dy
    else:
        k, rem = divmod(sy, dy)
        assert rem == 0 and sx == 0
    return k


def _integrality_ok(simplex, c, target_component):
    """Exponents induced at every interior point are integers exactly
    when c1 + a*c2 + b*c3 matches the target weight mod r."""
    a, b = simplex.action.a, simplex.action.b
    weights = (1, a, b)
    t = weights[target_component - 1] if target_component else 0
    return (c[0] + a * c[1] + b * c[2] - t) % simplex.r == 0


def _scan_vertex_pair(simplex, alpha, corner, adjacent, bound):
    """Solutions (c1, c2, c3) of c . nu^alpha = nu_corner^alpha with
    non-negativity at `adjacent` point indices; |c_j| <= bound."""
    r = simplex.r
    n1, n2, n3 = simplex.point(alpha).nu_num
    ni = simplex.point(alpha).nu_num[corner - 1]
    interior_adj = [
        simplex.point(i) for i in adjacent if i > 3 and i != alpha
    ]
    adj_nu = [(p.index, p.nu_num) for p in interior_adj]
    lo = [0 if j + 1 in adjacent else -bound for j in range(3)]
    solutions = []
    for c1 in range(lo[0], bound + 1):
        rem1 = ni - c1 * n1
        for c2 in range(lo[1], bound + 1):
            rem2 = rem1 - c2 * n2
            if rem2 % n3 != 0:
                continue
            c3 = rem2 // n3
            if not lo[2] <= c3 <= bound:
                continue
            c = (c1, c2, c3)
            if not _integrality_ok(simplex, c, corner):
                continue
            ok = True
            for _, m in adj_nu:
                if c1 * m[0] + c2 * m[1] + c3 * m[2] < m[corner - 1]:
                    ok = False
                    break
            if ok:
                solutions.append(c)
    return solutions


def _scan_interior_pair(simplex, alpha, beta, adjacent, bound):
    """Solutions of c . nu^alpha = 0 and c . nu^beta = -1 with
    non-negativity at `adjacent` (the points sharing a triangle with
    both); |c_j| <= bound."""
    r = simplex.r
    na = simplex.point(alpha).nu_num
    nb = simplex.point(beta).nu_num
    interior_adj = [
        simplex.point(i).nu_num for i in adjacent if i > 3 and i not in (alpha, beta)
    ]
    lo = [0 if j + 1 in adjacent else -bound for j in range(3)]
    solutions = []
    for c1 in range(lo[0], bound + 1):
        rem1 = -c1 * na[0]
        for c2 in range(lo[1], bound + 1):
            rem2 = rem1 - c2 * na[1]
            if rem2 % na[2] != 0:
                continue
            c3 = rem2 // na[2]
            if not lo[2] <= c3 <= bound:
                continue
            if c1 * nb[0] + c2 * nb[1] + c3 * nb[2] != -r:
                continue
            c = (c1, c2, c3)
            if not _integrality_ok(simplex, c, 0):
                continue
            if all(c[0] * m[0] + c[1] * m[1] + c[2] * m[2] >= 0
                   for m in interior_adj):
                solutions.append(c)
    return solutions


def _with_shell_check(scan, bound):
    """Run a scan at `bound`; if a solution touches the box shell,
    double once and retry, then give up."""
    solutions = scan(bound)
    if any(max(abs(x) for x in c) >= bound for c in solutions):
        bound *= 2
        solutions = scan(bound)
        if any(max(abs(x) for x in c) >= bound for c in solutions):
            raise BoundUnstable(
                f"exponent search still touches the shell at bound {bound}"
            )
    return solutions


def _monomial_vertex(simplex, alpha, corner, c):
    r = simplex.r
    exps = []
    for p in simplex.points:
        if p.index <= 3:
            exps.append(c[p.index - 1])
        elif p.index == alpha:
            exps.append(0)
        else:
            m = p.nu_num
            num = c[0] * m[0] + c[1] * m[1] + c[2] * m[2] - m[corner - 1]
            assert num % r == 0
            exps.append(num // r)
    return LaurentMonomial(tuple(exps))


def _monomial_interior(simplex, alpha, beta, c):
    r = simplex.r
    exps = []
    for p in simplex.points:
        if p.index <= 3:
            exps.append(c[p.index - 1])
        elif p.index in (alpha, beta):
            exps.append(0)
        else:
            m = p.nu_num
            num = c[0] * m[0] + c[1] * m[1] + c[2] * m[2]
            assert num % r == 0
            exps.append(num // r)
    return LaurentMonomial(tuple(exps))


def ext_dim_vertex_pair(triang, alpha, corner, bound=None):
    """Dimension and monomial basis of the deformation space for the
    (interior alpha, corner) pair on this triangulation."""
    simplex = triang.simplex
    if bound is None:
        bound = 2 * simplex.r
    adjacent = frozenset(triang.adjacent(alpha))
    solutions = _with_shell_check(
        lambda b: _scan_vertex_pair(simplex, alpha, corner, adjacent, b), bound
    )
    monomials = [_monomial_vertex(simplex, alpha, corner, c) for c in solutions]
    return len(solutions), monomials


def ext_dim_interior_pair(triang, alpha, beta, bound=None):
    """Dimension and monomial basis for the ordered interior pair
    (alpha, beta); zero when the pair shares no edge (no common curve)."""
    simplex = triang.simplex
    if bound is None:
        bound = 2 * simplex.r
    key = _edge_key(alpha, beta)
    if key not in triang.edges:
        return 0, []
    ts = triang.edge_triangles[key]
    opposite = {next(i for i in t if i not in key) for t in ts}
    solutions = _with_shell_check(
        lambda b: _scan_interior_pair(simplex, alpha, beta, opposite, b), bound
    )
    monomials = [_monomial_interior(simplex, alpha, beta, c) for c in solutions]
    return len(solutions), monomials


class _DimCache:
    """Memoizes pair dimensions across triangulations of one simplex;
    a dimension depends only on the pair and its local adjacency."""

    def __init__(self, simplex, bound=None):
        self.simplex = simplex
        self.bound = bound if bound is not None else 2 * simplex.r
        self.vertex = {}
        self.interior = {}

    def vertex_dim(self, triang, alpha, corner):
        key = (alpha, corner, frozenset(triang.adjacent(alpha)))
        if key not in self.vertex:
            self.vertex[key] = len(
                _with_shell_check(
                    lambda b: _scan_vertex_pair(
                        self.simplex, alpha, corner, key[2], b
                    ),
                    self.bound,
                )
            )
        return self.vertex[key]

    def interior_dim(self, triang, alpha, beta):
        edge = _edge_key(alpha, beta)
        if edge not in triang.edges:
            return 0
        opposite = frozenset(
            next(i for i in t if i not in edge)
            for t in triang.edge_triangles[edge]
        )
        key = (alpha, beta, opposite)
        if key not in self.interior:
            self.interior[key] = len(
                _with_shell_check(
                    lambda b: _scan_interior_pair(
                        self.simplex, alpha, beta, opposite, b
                    ),
                    self.bound,
                )
            )
        return self.interior[key]


@dataclass(frozen=True)
class SectorComparison:
    sector: int
    case1: int
    case2: int
    vertex_dim_sum: int


@dataclass(frozen=True)
class DeformationReport:
    """Per-pair deformation dimensions for one triangulation."""

    triangulation: Triangulation
    vertex_pairs: tuple   # ((alpha, corner), dim) sorted
    interior_pairs: tuple  # ((alpha, beta), dim) sorted, ordered pairs
    sectors: tuple        # SectorComparison per interior point

    @cached_property
    def vertex_total(self):
        return sum(d for _, d in self.vertex_pairs)

    @cached_property
    def interior_total(self):
        return sum(d for _, d in self.interior_pairs)

    @property
    def grand_total(self):
        return self.vertex_total + self.interior_total

    @cached_property
    def case1_total(self):
        return sum(s.case1 for s in self.sectors)

    @cached_property
    def case2_total(self):
        return sum(s.case2 for s in self.sectors)

    def ext_quiver_arrows(self):
        """Arrow multiplicities of the Ext-quiver (dims, zero omitted)."""
        arrows = {}
        for (alpha, corner), dim in self.vertex_pairs:
            if dim:
                arrows[(alpha, corner)] = dim
        for (alpha, beta), dim in self.interior_pairs:
            if dim:
                arrows[(alpha, beta)] = dim
        return arrows


def deformation_report(triang, bound=None, cache=None):
    simplex = triang.simplex
    if cache is None:
        cache = _DimCache(simplex, bound)
    vertex_pairs = []
    sectors = []
    for p in simplex.interior:
        sector = twisted_sector(simplex.action, p.coords3[0])
        counts = case1_counts(sector)
        dims = {}
        for corner in (1, 2, 3):
            dims[corner] = cache.vertex_dim(triang, p.index, corner)
            vertex_pairs.append(((p.index, corner), dims[corner]))
        case2 = sum(len(v) for v in singlets_case2(sector).values())
        sectors.append(
            SectorComparison(
                p.index, sum(counts.values()), case2, sum(dims.values())
            )
        )
    interior_pairs = []
    interior_idx = [p.index for p in simplex.interior]
    for a in interior_idx:
        for b in triang.adjacent(a):
            if b > 3 and b != a:
                interior_pairs.append(
                    ((a, b), cache.interior_dim(triang, a, b))
                )
    return DeformationReport(
        triang,
        tuple(sorted(vertex_pairs)),
        tuple(sorted(interior_pairs)),
        tuple(sectors),
    )


@dataclass(frozen=True)
class MinimalityResult:
    """Grand totals over every crepant triangulation of one orbifold."""

    simplex: object
    totals: tuple          # (grand_total, triangles) per triangulation
    ghilbert_total: int
    singlet_total: int

    @property
    def minimum(self):
        return min(t for t, _ in self.totals)

    @property
    def n_triangulations(self):
        return len(self.totals)

    @property
    def minimal_is_ghilbert(self):
        return self.minimum == self.ghilbert_total

    @property
    def matches_singlets(self):
        return self.minimum == self.singlet_total


def minimality_sweep(simplex, cap=None, bound=None):
    from .triangulation import DEFAULT_TRIANGULATION_CAP

    cap = cap if cap is not None else DEFAULT_TRIANGULATION_CAP
    cache = _DimCache(simplex, bound)
    ghilb = ghilbert_triangulation(simplex)
    singlet_total = 0
    for p in simplex.interior:
        sector = twisted_sector(simplex.action, p.coords3[0])
        singlet_total += sum(case1_counts(sector).values())
        singlet_total += sum(len(v) for v in singlets_case2(sector).values())
    ghilb_report = deformation_report(ghilb, cache=cache)
    totals = []
    for triang in sorted(all_triangulations(simplex, cap=cap),
                         key=lambda t: t.triangles):
        report = deformation_report(triang, cache=cache)
        totals.append((report.grand_total, triang.triangles))
    return MinimalityResult(
        simplex, tuple(totals), ghilb_report.grand_total, singlet_total
    )
