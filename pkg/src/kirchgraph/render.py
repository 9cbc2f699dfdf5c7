"""DOT and SVG renderings of vector graphs.

Exact layout uses the first two lattice coordinates; systems with k > 2
are projected onto them (callers should warn).  Output bytes are a pure
function of the graph, so identical inputs render identically.
"""

from __future__ import annotations

from kirchgraph.vgraph import VectorGraph

PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#17becf",
    "#7f7f7f",
)


def vector_color(idx: int) -> str:
    return PALETTE[idx % len(PALETTE)]


def _xy(coord) -> tuple[int, int]:
    if len(coord) >= 2:
        return coord[0], coord[1]
    return coord[0], 0


def render_dot(graph: VectorGraph, name: str = "G") -> str:
    """Graphviz digraph with pinned lattice positions and one edge
    statement per distinct edge, carrying its count when above 1."""
    verts = list(graph.vertices)
    vid = {v: i for i, v in enumerate(verts)}
    lines = [f'digraph "{name}" {{', "  node [shape=point, width=0.08];"]
    for v in verts:
        x, y = _xy(v)
        lines.append(f'  v{vid[v]} [pos="{x},{y}!", xlabel="{",".join(map(str, v))}"];')
    for edge, count in graph.edges():
        label = f"s{edge.vec_index + 1}" + (f" x{count}" if count > 1 else "")
        lines.append(
            f'  v{vid[edge.tail]} -> v{vid[edge.head]} '
            f'[label="{label}", color="{vector_color(edge.vec_index)}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _fmt(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else f"{x:.1f}"


def render_svg(graph: VectorGraph, name: str = "G", scale: int = 48) -> str:
    """Standalone SVG: lattice-positioned vertices, colored arrows per
    edge vector, a count annotation on coincident parallel copies, and a
    legend naming s1..sn."""
    system = graph.system
    n = system.n
    if graph.is_empty:
        body = ['<text x="10" y="20" font-size="14">empty graph</text>']
        width, height = 160, 40
    else:
        xs = [_xy(v)[0] for v in graph.vertices]
        ys = [_xy(v)[1] for v in graph.vertices]
        margin = 40
        legend_h = 18 * n + 10

        def px(v):
            x, y = _xy(v)
            return (
                margin + scale * (x - min(xs)),
                margin + scale * (max(ys) - y),
            )

        width = 2 * margin + scale * (max(xs) - min(xs)) + 140
        height = 2 * margin + scale * (max(ys) - min(ys)) + legend_h
        body = []
        for edge, count in graph.edges():
            x1, y1 = px(edge.tail)
            x2, y2 = px(edge.head)
            color = vector_color(edge.vec_index)
            body.append(
                f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                f'stroke="{color}" stroke-width="2" '
                f'marker-end="url(#arrow{edge.vec_index % len(PALETTE)})"/>'
            )
            if count > 1:
                mx, my = (x1 + x2) / 2, (y1 + y2) / 2
                body.append(
                    f'<text x="{_fmt(mx + 5)}" y="{_fmt(my - 5)}" font-size="12" '
                    f'fill="{color}">{count}</text>'
                )
        for v in graph.vertices:
            x, y = px(v)
            body.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="#000"/>')
        for i in range(n):
            ly = height - legend_h + 18 * i + 12
            body.append(
                f'<line x1="10" y1="{ly}" x2="34" y2="{ly}" stroke="{vector_color(i)}" '
                f'stroke-width="2" marker-end="url(#arrow{i % len(PALETTE)})"/>'
            )
            col = ",".join(str(x) for x in system.columns[i])
            body.append(f'<text x="40" y="{ly + 4}" font-size="12">s{i + 1} = ({col})</text>')

    defs = "".join(
        f'<marker id="arrow{ci}" viewBox="0 0 10 10" refX="9" refY="5" '
        f'markerWidth="7" markerHeight="7" orient="auto-start-reverse">'
        f'<path d="M 0 0 L 10 5 L 0 10 z" fill="{color}"/></marker>'
        for ci, color in enumerate(PALETTE)
    )
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    title = f'<title>{name}</title>'
    return head + title + f"<defs>{defs}</defs>" + "".join(body) + "</svg>\n"
