"""Unimodular triangulations of the junior triangle.

Two independent constructions of the distinguished (G-Hilbert)
triangulation are provided: the singlet quiver (authoritative) and the
modified knockout propagation of corner rays (cross-check).  Both leave
scaled-triangle holes that are completed by their regular tessellation.
Diagonal flips enumerate every other crepant triangulation.
"""
from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    IrregularHole,
    JuniorResolveError,
    MissingNode,
    NonConvergent,
    SizeLimit,
)
from .hj import corner_fan
from .orbifold import Simplex
from .singlets import (
    case1_monomial_counts,
    case2_monomial_counts,
    singlets_case1,
    singlets_case2,
    twisted_sector,
)

DEFAULT_TRIANGULATION_CAP = 200_000


def _cross(o, p, q):
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


@dataclass(frozen=True)
class Quiver:
    """Directed multigraph on the simplex points; arrows with multiplicity."""

    simplex: Simplex
    arrows: tuple  # sorted ((src, dst), multiplicity) pairs

    @cached_property
    def arrow_map(self):
        return dict(self.arrows)

    def multiplicity(self, src, dst):
        return self.arrow_map.get((src, dst), 0)


@dataclass(frozen=True, eq=False)
class Triangulation:
    """Unimodular triangulation given by sorted index triples.

    `strengths` (optional) maps sorted non-boundary edge pairs to their
    integer edge strength; equality compares triangles and strengths.
    """

    simplex: Simplex
    triangles: tuple
    strengths: tuple = None  # sorted ((i, j), strength) pairs, or None

    def __eq__(self, other):
        if not isinstance(other, Triangulation):
            return NotImplemented
        if self.triangles != other.triangles:
            return False
        if self.strengths is None or other.strengths is None:
            return True
        return self.strengths == other.strengths

    def __hash__(self):
        return hash(self.triangles)

    @cached_property
    def strength_map(self):
        return dict(self.strengths) if self.strengths is not None else {}

    @cached_property
    def edges(self):
        out = set()
        for t in self.triangles:
            out.update(_triangle_edges(t))
        return frozenset(out)

    @cached_property
    def edge_triangles(self):
        out = defaultdict(list)
        for t in self.triangles:
            for e in _triangle_edges(t):
                out[e].append(t)
        return dict(out)

    @cached_property
    def neighbors(self):
        out = defaultdict(set)
        for i, j in self.edges:
            out[i].add(j)
            out[j].add(i)
        return dict(out)

    def adjacent(self, index):
        """Indices sharing at least one triangle (equivalently an edge)."""
        return self.neighbors.get(index, set())

    @cached_property
    def boundary_edges(self):
        return frozenset(((1, 2), (1, 3), (2, 3)))

    def validate(self):
        """Check the unimodular tiling invariants; raise on violation."""
        simplex = self.simplex
        charts = [p.chart2 for p in simplex.points]
        if len(self.triangles) != simplex.doubled_area:
            raise IrregularHole(
                f"{len(self.triangles)} triangles, expected {simplex.doubled_area}"
            )
        used = set()
        for t in self.triangles:
            o, p, q = (charts[i - 1] for i in t)
            if abs(_cross(o, p, q)) != 1:
                raise IrregularHole(f"triangle {t} is not unimodular")
            used.update(t)
        if used != set(range(1, simplex.n_points + 1)):
            raise IrregularHole("not every lattice point is a triangle vertex")
        for e, ts in self.edge_triangles.items():
            expected = 1 if e in self.boundary_edges else 2
            if len(ts) != expected:
                raise IrregularHole(f"edge {e} lies in {len(ts)} triangles")
        return self


def _triangle_edges(t):
    i, j, k = t
    return ((i, j), (i, k), (j, k))


def _edge_key(i, j):
    return (i, j) if i < j else (j, i)


def _case2_arrow_nodes(simplex, point, neg_index, depth):
    """Endpoints (src, dst) of the case-2 arrow at `depth` along the
    line from corner neg_index through the interior `point`."""
    corner = simplex.point(neg_index)
    cx, cy = corner.chart2
    dx, dy = point.chart2[0] - cx, point.chart2[1] - cy
    src = (cx + depth * dx, cy + depth * dy)
    dst = (cx + (depth - 1) * dx, cy + (depth - 1) * dy)
    try:
        return simplex.by_chart[src].index, simplex.by_chart[dst].index
    except KeyError:
        raise MissingNode(
            f"sector {point.coords3[0]}: node {src} or {dst} is not a "
            "simplex point"
        ) from None


def quiver_from_singlets(simplex):
    """Singlet quiver: one arrow per case-1 singlet toward its corner,
    one arrow per case-2 singlet stepping its node toward the corner."""
    action = simplex.action
    arrows = Counter()
    for p in simplex.interior:
        sector = twisted_sector(action, p.coords3[0])
        for target, triples in singlets_case1(sector).items():
            if triples:
                arrows[(p.index, target)] += len(triples)
        for (neg_index, depth), triples in singlets_case2(sector).items():
            src, dst = _case2_arrow_nodes(simplex, p, neg_index, depth)
            arrows[(src, dst)] += len(triples)
    return Quiver(simplex, tuple(sorted(arrows.items())))


def ghilbert_triangulation(simplex):
    """Distinguished triangulation built from the singlet quiver.

    Keeps corner arrows of monomial multiplicity >= 2 and every
    interior arrow as edges, adds the boundary, and fills the leftover
    scaled triangles with their regular tessellation.  Corner edges are
    weighted by the monomial count rather than the raw case-1 count;
    the two agree except for degenerate sectors (gcd(j, r) > 1), where
    only the monomial count matches the knockout strengths and the
    deformation dimensions.
    """
    edges = {}
    for p in simplex.interior:
        for target, count in case1_monomial_counts(simplex, p.index).items():
            if count >= 2:
                edges[_edge_key(p.index, target)] = count
        for (neg_index, depth), count in case2_monomial_counts(
            simplex, p.index
        ).items():
            src, dst = _case2_arrow_nodes(simplex, p, neg_index, depth)
            key = _edge_key(src, dst)
            if key in edges:
                raise JuniorResolveError(f"conflicting arrows on edge {key}")
            edges[key] = count
    return _complete_with_tessellation(simplex, edges)


def _line_runs(simplex):
    """Corner-ray lines extended through all collinear simplex points.

    Returns a list of (run, strength) where run[0] is the corner point
    and strength is the initial continued-fraction label.
    """
    lines = []
    for k in (1, 2, 3):
        fan = corner_fan(simplex, k)
        corner = simplex.point(k)
        for ray in fan.rays:
            cx, cy = corner.chart2
            px, py = ray.point.chart2
            dx, dy = px - cx, py - cy
            run = [corner]
            step = 1
            while True:
                nxt = simplex.by_chart.get((cx + step * dx, cy + step * dy))
                if nxt is None:
                    break
                run.append(nxt)
                step += 1
            lines.append((run, ray.strength))
    return lines


def knockout_triangulation(simplex, modified=True):
    """Triangulation from corner-ray propagation with strength bookkeeping.

    Each ray extends through collinear lattice points; passing through a
    point costs one strength per other line that still reaches that
    point, plus one extra at the first interior-to-interior step in the
    modified rule.  A segment is dropped once strength falls to 0
    (to 1 in the unmodified rule); a dropped line no longer counts
    toward reductions beyond its last surviving point, so the reach of
    all lines is iterated to a fixed point.  Lines are re-evaluated in
    decreasing order of initial strength (then run length) with
    in-place updates; this resolves the rare mutual-knockout cycles by
    truncating the strong lines first, consistent with the singlet
    quiver.  Leftover holes are regularly tessellated.
    """
    lines = _line_runs(simplex)
    floor = 0 if modified else 1
    positions = [
        {pt.index: i for i, pt in enumerate(run)} for run, _ in lines
    ]
    reach = [len(run) - 1 for run, _ in lines]

    def walk(lid):
        """Segments of one line given the current reach of the others;
        returns (position of last point reached, [(edge, strength)])."""
        run, strength = lines[lid]
        s = strength
        segments = []
        last = 0
        interior_step_paid = False
        for m in range(1, len(run)):
            if m >= 2:
                node = run[m - 1].index
                s -= sum(
                    1
                    for other, pos in enumerate(positions)
                    if other != lid and pos.get(node, len(lines[other][0])) <= reach[other]
                )
                if (modified and not interior_step_paid
                        and run[m - 1].kind == "interior"
                        and run[m].kind == "interior"):
                    s -= 1
                    interior_step_paid = True
                if s <= floor:
                    break
            key = _edge_key(run[m - 1].index, run[m].index)
            segments.append((key, s))
            last = m
        return last, segments

    order = sorted(
        range(len(lines)),
        key=lambda lid: (-lines[lid][1], -len(lines[lid][0]), lid),
    )
    all_segments = [None] * len(lines)
    for _ in range(4 * len(lines) + 4):
        changed = False
        for lid in order:
            last, segments = walk(lid)
            if last != reach[lid]:
                changed = True
                reach[lid] = last
            all_segments[lid] = segments
        if not changed:
            break
    else:
        raise NonConvergent("knockout propagation did not stabilize")

    edges = {}
    for segments in all_segments:
        for key, s in segments:
            if key in edges:
                raise JuniorResolveError(f"two lines produce edge {key}")
            edges[key] = s
    return _complete_with_tessellation(simplex, edges)


def _strictly_between(a, b, p):
    """True when p lies strictly inside segment a-b (all chart pairs)."""
    if _cross(a, b, p) != 0:
        return False
    dot = (p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1])
    length2 = (b[0] - a[0]) ** 2 + (b[1] - a[1]) ** 2
    return 0 < dot < length2


def _complete_with_tessellation(simplex, edges):
    """Close a partial edge set into a full unimodular triangulation.

    `edges` maps sorted interior/vertex edge pairs to strengths; the
    three boundary edges are added here.  Every face of the resulting
    planar subdivision that is not already a triangle must be a k-fold
    lattice triangle and is filled with its regular tessellation
    (new edges carry strength 0).
    """
    charts = {p.index: p.chart2 for p in simplex.points}
    all_edges = set(edges) | {(1, 2), (1, 3), (2, 3)}
    for i, j in all_edges:
        a, b = charts[i], charts[j]
        for p in simplex.points:
            if p.index not in (i, j) and _strictly_between(a, b, p.chart2):
                raise IrregularHole(
                    f"edge {(i, j)} passes through point u{p.index}"
                )

    adjacency = defaultdict(list)
    for i, j in all_edges:
        adjacency[i].append(j)
        adjacency[j].append(i)
    order = {}
    for v, nbrs in adjacency.items():
        vx, vy = charts[v]
        nbrs.sort(key=lambda u: math.atan2(charts[u][1] - vy, charts[u][0] - vx))
        order[v] = {u: pos for pos, u in enumerate(nbrs)}

    # Walk faces: from directed edge (u, v) continue to the neighbor of v
    # that precedes u in counterclockwise order (clockwise-next), which
    # traces each interior face once with positive orientation.
    def next_edge(u, v):
        nbrs = adjacency[v]
        pos = order[v][u]
        return (v, nbrs[pos - 1])

    seen = set()
    faces = []
    for i, j in all_edges:
        for start in ((i, j), (j, i)):
            if start in seen:
                continue
            cycle = []
            cur = start
            while cur not in seen:
                seen.add(cur)
                cycle.append(cur[0])
                cur = next_edge(*cur)
            if cur != start:
                raise IrregularHole("edge graph is not a planar subdivision")
            faces.append(cycle)

    def doubled_area(cycle):
        total = 0
        for idx in range(len(cycle)):
            x1, y1 = charts[cycle[idx]]
            x2, y2 = charts[cycle[(idx + 1) % len(cycle)]]
            total += x1 * y2 - x2 * y1
        return total

    interior_faces = [f for f in faces if doubled_area(f) > 0]
    if len(interior_faces) == len(faces) - 1 and sum(
        doubled_area(f) for f in interior_faces
    ) == simplex.doubled_area:
        pass
    else:
        # Opposite orientation convention: swap roles.
        interior_faces = [f[::-1] for f in faces if doubled_area(f) < 0]
        if len(interior_faces) != len(faces) - 1 or sum(
            doubled_area(f) for f in interior_faces
        ) != simplex.doubled_area:
            raise IrregularHole("faces do not tile the junior triangle")

    triangles = []
    strengths = dict(edges)
    for face in interior_faces:
        if len(set(face)) != len(face):
            raise IrregularHole(f"face {face} revisits a vertex")
        if len(face) == 3:
            triangles.append(tuple(sorted(face)))
        else:
            triangles.extend(_tessellate_face(simplex, face, strengths))

    triangulation = Triangulation(
        simplex,
        tuple(sorted(triangles)),
        tuple(sorted(strengths.items())),
    )
    return triangulation.validate()


def _tessellate_face(simplex, face, strengths):
    """Regular tessellation of a k-fold lattice triangle face (CCW cycle).

    New interior edges are recorded in `strengths` with strength 0.
    """
    charts = {p.index: p.chart2 for p in simplex.points}
    n = len(face)
    corner_pos = []
    for idx in range(n):
        prev = charts[face[idx - 1]]
        cur = charts[face[idx]]
        nxt = charts[face[(idx + 1) % n]]
        turn = _cross(prev, cur, nxt)
        if turn < 0:
            raise IrregularHole(f"face {face} is not convex")
        if turn > 0:
            corner_pos.append(idx)
    if len(corner_pos) != 3:
        raise IrregularHole(f"face {face} has {len(corner_pos)} corners")

    p0, p1, p2 = corner_pos
    sides = [
        [face[i % n] for i in range(p0, p0 + (p1 - p0) % n + 1)],
        [face[i % n] for i in range(p1, p1 + (p2 - p1) % n + 1)],
        [face[i % n] for i in range(p2, p2 + (p0 - p2) % n + 1)],
    ]
    scales = {len(s) - 1 for s in sides}
    if len(scales) != 1:
        raise IrregularHole(f"face {face} has unequal side subdivisions")
    k = scales.pop()
    a = charts[sides[0][0]]
    u = _uniform_step(charts, sides[0])
    w = [x * -1 for x in _uniform_step(charts, sides[2])]
    if abs(u[0] * w[1] - u[1] * w[0]) != 1:
        raise IrregularHole(f"face {face} is not a scaled unimodular triangle")

    grid = {}
    for i in range(k + 1):
        for j in range(k + 1 - i):
            pt = simplex.by_chart.get((a[0] + i * u[0] + j * w[0],
                                       a[1] + i * u[1] + j * w[1]))
            if pt is None:
                raise IrregularHole(
                    f"face {face}: tessellation point ({i},{j}) missing"
                )
            grid[(i, j)] = pt.index

    triangles = []
    for i in range(k):
        for j in range(k - i):
            tri = (grid[(i, j)], grid[(i + 1, j)], grid[(i, j + 1)])
            triangles.append(tuple(sorted(tri)))
            if i + j < k - 1:
                tri = (grid[(i + 1, j)], grid[(i, j + 1)], grid[(i + 1, j + 1)])
                triangles.append(tuple(sorted(tri)))
    for tri in triangles:
        for e in _triangle_edges(tri):
            if e not in strengths and e not in ((1, 2), (1, 3), (2, 3)):
                strengths.setdefault(e, 0)
    return triangles


def _uniform_step(charts, side):
    steps = set()
    for a, b in zip(side, side[1:]):
        ax, ay = charts[a]
        bx, by = charts[b]
        steps.add((bx - ax, by - ay))
    if len(steps) != 1:
        raise IrregularHole("side subdivision is not uniform")
    return list(steps.pop())


def flip_edge(triang, edge):
    """Flip an interior edge; return the new triangulation or None when
    the flip would not produce two unimodular triangles."""
    if edge in triang.boundary_edges:
        return None
    ts = triang.edge_triangles.get(edge)
    if ts is None or len(ts) != 2:
        return None
    p, q = edge
    w1, w2 = (next(i for i in t if i not in edge) for t in ts)
    charts = {idx: triang.simplex.points[idx - 1].chart2 for idx in (p, q, w1, w2)}
    d1 = _cross(charts[w1], charts[w2], charts[p])
    d2 = _cross(charts[w1], charts[w2], charts[q])
    if abs(d1) != 1 or abs(d2) != 1 or (d1 > 0) == (d2 > 0):
        return None
    new = [t for t in triang.triangles if t not in ts]
    new.append(tuple(sorted((w1, w2, p))))
    new.append(tuple(sorted((w1, w2, q))))
    return Triangulation(triang.simplex, tuple(sorted(new)))


def all_triangulations(simplex, cap=DEFAULT_TRIANGULATION_CAP):
    """Every unimodular triangulation on the full point set, as the flip
    closure of the G-Hilbert triangulation."""
    start = ghilbert_triangulation(simplex)
    start = Triangulation(simplex, start.triangles)
    found = {start.triangles: start}
    frontier = [start]
    while frontier:
        nxt = []
        for triang in frontier:
            for edge in triang.edges:
                flipped = flip_edge(triang, edge)
                if flipped is not None and flipped.triangles not in found:
                    found[flipped.triangles] = flipped
                    if len(found) > cap:
                        raise SizeLimit(f"more than {cap} triangulations")
                    nxt.append(flipped)
        frontier = nxt
    return set(found.values())


def triangulation_to_dict(triang):
    action = triang.simplex.action
    return {
        "schema": "1",
        "r": action.r,
        "a": action.a,
        "b": action.b,
        "points": [list(p.coords3) for p in triang.simplex.points],
        "triangles": [list(t) for t in triang.triangles],
    }


def triangulation_from_dict(data):
    from .orbifold import GroupAction, junior_simplex

    simplex = junior_simplex(GroupAction(data["r"], data["a"], data["b"]))
    expected = [list(p.coords3) for p in simplex.points]
    if list(map(list, data["points"])) != expected:
        raise JuniorResolveError("point list does not match the junior simplex")
    triangles = tuple(sorted(tuple(sorted(t)) for t in data["triangles"]))
    return Triangulation(simplex, triangles).validate()
