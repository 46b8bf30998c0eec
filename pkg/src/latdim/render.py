"""SVG drawings of embeddings of lattice dimension at most three."""

from __future__ import annotations

from .embed import LatticeEmbedding
from .errors import DimensionTooHigh
from .graph import Graph

# third axis drawn as an oblique offset
DEPTH_SHEAR = 0.4


def plane_points(emb: LatticeEmbedding, project: bool = False) -> list[tuple[float, float]]:
    d = emb.d
    if d > 3 and not project:
        raise DimensionTooHigh(d)
    pts = []
    for v in range(emb.n):
        c = [int(x) for x in emb.coords[v][:3]] + [0, 0, 0]
        x, y, z = c[0], c[1], c[2]
        pts.append((x + DEPTH_SHEAR * z, y + DEPTH_SHEAR * z))
    return pts


def render_svg(
    g: Graph,
    emb: LatticeEmbedding,
    project: bool = False,
    scale: float = 40.0,
    margin: float = 20.0,
    radius: float = 5.0,
) -> str:
    """Deterministic SVG text; lattice ``y`` grows upwards."""
    pts = plane_points(emb, project)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    x0, y1 = min(xs), max(ys)
    width = (max(xs) - x0) * scale + 2 * margin
    height = (y1 - min(ys)) * scale + 2 * margin

    def at(v: int) -> tuple[str, str]:
        x, y = pts[v]
        return f"{(x - x0) * scale + margin:.2f}", f"{(y1 - y) * scale + margin:.2f}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2f}" height="{height:.2f}" '
        f'viewBox="0 0 {width:.2f} {height:.2f}">',
        '<g stroke="#555555" stroke-width="2">',
    ]
    for u, v in g.edges:
        (ax, ay), (bx, by) = at(u), at(v)
        out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>')
    out.append("</g>")
    out.append('<g fill="#1f5fa8">')
    for v in range(g.n):
        cx, cy = at(v)
        coords = " ".join(str(int(c)) for c in emb.coords[v])
        out.append(f'<circle cx="{cx}" cy="{cy}" r="{radius:.2f}"><title>{v}: {coords}</title></circle>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
