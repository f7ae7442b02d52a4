"""
SVG drawing of a path projection
"""

from config import SVG_MARGIN, SVG_MARKER_RADIUS, SVG_SIZE


def _fmt(x):
    return f"{float(x):.3f}"


def render_svg(path, i=1, j=2, size=SVG_SIZE, margin=SVG_MARGIN, radius=SVG_MARKER_RADIUS):
    """
    The (i, j) projection of a path in a size x size viewport: the unit square,
    the polyline, a marker at every breakpoint and axis ticks below and left of
    the square at the breakpoint coordinates.
    """
    planar = path.project(i, j)
    span = size - 2 * margin

    def sx(x):
        return margin + x * span

    def sy(y):
        return size - margin - y * span

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'  <rect x="{margin}" y="{margin}" width="{span}" height="{span}" fill="none" stroke="#999999" stroke-width="1"/>',
    ]
    append = lines.append

    xs = sorted({v[0] for v in planar.vertices})
    ys = sorted({v[1] for v in planar.vertices})
    for x in xs:
        append(f'  <line class="tick" x1="{_fmt(sx(x))}" y1="{size - margin}" x2="{_fmt(sx(x))}" y2="{size - margin + 6}" stroke="#333333"/>')
    for y in ys:
        append(f'  <line class="tick" x1="{margin - 6}" y1="{_fmt(sy(y))}" x2="{margin}" y2="{_fmt(sy(y))}" stroke="#333333"/>')

    points = " ".join(f"{_fmt(sx(x))},{_fmt(sy(y))}" for x, y in planar.vertices)
    append(f'  <polyline points="{points}" fill="none" stroke="#1f4e9c" stroke-width="2"/>')
    for x, y in planar.vertices:
        append(f'  <circle cx="{_fmt(sx(x))}" cy="{_fmt(sy(y))}" r="{radius}" fill="#c0392b"/>')
    append(f'  <text x="{size / 2}" y="{size - 4}" font-size="12" text-anchor="middle">x{i}</text>')
    append(f'  <text x="10" y="{size / 2}" font-size="12" text-anchor="middle">x{j}</text>')
    append("</svg>")
    return "\n".join(lines) + "\n"
