"""Text, DOT and TikZ emitters.  All output is deterministic."""
from __future__ import annotations


def quiver_dot(simplex, arrows, name="quiver"):
    """DOT digraph with one parallel arrow per unit of multiplicity."""
    lines = [f"digraph {name} {{"]
    for p in simplex.points:
        shape = "box" if p.index <= 3 else "circle"
        lines.append(
            f'  u{p.index} [shape={shape}, label="u{p.index}\\n{p.coords3}"];'
        )
    for (src, dst), mult in sorted(arrows.items() if isinstance(arrows, dict)
                                   else arrows):
        for _ in range(mult):
            lines.append(f"  u{src} -> u{dst};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def triangulation_tikz(triang):
    """TikZ picture of the triangulated junior triangle with strengths."""
    pts = triang.simplex.points
    lines = ["\\begin{tikzpicture}[scale=0.8]"]
    strengths = triang.strength_map
    for i, j in sorted(triang.edges):
        (ax, ay), (bx, by) = pts[i - 1].chart2, pts[j - 1].chart2
        label = strengths.get((i, j))
        if label is not None and label > 0:
            lines.append(
                f"  \\draw ({ax},{ay}) -- ({bx},{by}) "
                f"node[midway, fill=white, inner sep=1pt] {{{label}}};"
            )
        else:
            lines.append(f"  \\draw ({ax},{ay}) -- ({bx},{by});")
    for p in pts:
        x, y = p.chart2
        lines.append(f"  \\fill ({x},{y}) circle (2pt);")
        lines.append(f"  \\node[above right] at ({x},{y}) {{$u_{{{p.index}}}$}};")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def triangulation_text(triang):
    strengths = triang.strength_map
    out = []
    for t in triang.triangles:
        out.append(f"triangle u{t[0]} u{t[1]} u{t[2]}")
    for (i, j), s in sorted(strengths.items()):
        out.append(f"edge u{i}-u{j} strength {s}")
    return "\n".join(out) + "\n"


def simplex_text(simplex):
    out = [
        f"action ({simplex.action.r}; 1, {simplex.action.a}, {simplex.action.b})"
    ]
    for p in simplex.points:
        out.append(
            f"u{p.index} {p.kind} coords={p.coords3} "
            f"nu=({p.nu_num[0]}/{simplex.r}, {p.nu_num[1]}/{simplex.r}, "
            f"{p.nu_num[2]}/{simplex.r})"
        )
    return "\n".join(out) + "\n"
