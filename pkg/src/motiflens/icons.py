"""Schematic SVG glyphs for explanation cards and cheat sheets.

Icons are addressed by asset key: ``net/<motif>`` for the network
pattern (black background, node-link form), ``<viz>/<motif>`` for the
lead visual pattern (white background), and ``<viz>/<motif>-v<1..3>``
for the three visual variations. Variations re-render the lead form
with a different size, stretch, or split so they read as the same
pattern looking different.
"""

from __future__ import annotations

import math

INK = "#1a1a1a"
ACCENT = "#2c7fb8"
FAINT = "#b8b8b8"


def _svg(body: str, bg: str, size: int) -> str:
    return (f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 100 100" '
            f'width="{size}" height="{size}">'
            f'<rect x="0" y="0" width="100" height="100" rx="8" fill="{bg}"/>{body}</svg>')


def _dot(x, y, r=4.5, fill=INK):
    return f'<circle cx="{x:.1f}" cy="{y:.1f}" r="{r}" fill="{fill}"/>'


def _line(p, q, w=2.0, color=INK):
    return (f'<line x1="{p[0]:.1f}" y1="{p[1]:.1f}" x2="{q[0]:.1f}" y2="{q[1]:.1f}" '
            f'stroke="{color}" stroke-width="{w}" stroke-linecap="round"/>')


def _arc_path(x, y1, y2, color=INK, w=2.0, sweep=0):
    r = abs(y2 - y1) / 2
    return (f'<path d="M {x:.1f} {y1:.1f} A {r:.1f} {r:.1f} 0 0 {sweep} {x:.1f} {y2:.1f}" '
            f'fill="none" stroke="{color}" stroke-width="{w}"/>')


def _loop(x, y, r=7.0, color=INK, w=2.0):
    return (f'<circle cx="{x:.1f}" cy="{y:.1f}" r="{r}" fill="none" '
            f'stroke="{color}" stroke-width="{w}"/>')


# -- node-link forms ---------------------------------------------------------

def _ring(cx, cy, radius, n, start=0.0):
    return [(cx + radius * math.cos(start + 2 * math.pi * i / n),
             cy + radius * math.sin(start + 2 * math.pi * i / n)) for i in range(n)]


def _graph_form(motif: str, ink: str, accent: str) -> str:
    parts: list[str] = []

    def dots(pts, r=4.5, fill=ink):
        parts.extend(_dot(x, y, r, fill) for x, y in pts)

    if motif == "strong-link":
        ctx = [(20, 22), (80, 20), (82, 78), (25, 80)]
        parts.append(_line(ctx[0], ctx[1], 1.2, FAINT))
        parts.append(_line(ctx[2], ctx[3], 1.2, FAINT))
        parts.append(_line((28, 62), (74, 38), 6.0, accent))
        dots(ctx, 3.5, FAINT)
        dots([(28, 62), (74, 38)])
    elif motif == "self-link":
        parts.append(_loop(62, 38, 9, accent, 2.5))
        parts.append(_line((30, 70), (55, 45), 1.5))
        dots([(55, 45)], 5)
        dots([(30, 70)], 3.5, FAINT)
    elif motif == "parallel-links":
        a, b = (25, 58), (75, 42)
        for off in (-4, 4):
            parts.append(_line((a[0], a[1] + off), (b[0], b[1] + off), 2.5,
                               accent if off < 0 else ink))
        dots([a, b])
    elif motif == "isolated-node":
        dots([(72, 30)], 5.5, accent)
        grp = [(25, 62), (38, 75), (22, 80)]
        parts.append(_line(grp[0], grp[1], 1.2, FAINT))
        parts.append(_line(grp[1], grp[2], 1.2, FAINT))
        dots(grp, 3.5, FAINT)
    elif motif == "hub":
        center = (50, 50)
        leaves = _ring(50, 50, 32, 8, 0.3)
        for p in leaves:
            parts.append(_line(center, p, 1.6))
        dots(leaves, 3.5)
        dots([center], 6.5, accent)
    elif motif == "bridge-node":
        left = _ring(27, 38, 14, 3, 0.5)
        right = _ring(73, 64, 14, 3, 1.2)
        mid = (50, 50)
        for grp in (left, right):
            for i in range(3):
                parts.append(_line(grp[i], grp[(i + 1) % 3], 1.6))
        parts.append(_line(left[0], mid, 1.8))
        parts.append(_line(right[0], mid, 1.8))
        dots(left + right, 4)
        dots([mid], 6, accent)
    elif motif == "fan":
        center = (38, 58)
        leaves = [(70, 26), (78, 44), (80, 62), (72, 80)]
        for p in leaves:
            parts.append(_line(center, p, 1.6))
        dots(leaves, 4)
        dots([center], 6, accent)
    elif motif == "chain":
        pts = [(14, 70), (32, 56), (50, 62), (68, 48), (86, 34)]
        for a, b in zip(pts, pts[1:]):
            parts.append(_line(a, b, 2))
        dots(pts, 4.5)
    elif motif == "clique":
        pts = _ring(50, 52, 28, 5, -math.pi / 2)
        for i in range(5):
            for j in range(i + 1, 5):
                parts.append(_line(pts[i], pts[j], 1.5))
        dots(pts, 4.5)
    elif motif == "cluster":
        pts = _ring(50, 52, 26, 6, 0.2) + [(50, 52)]
        linked = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (2, 6),
                  (3, 6), (5, 6), (1, 3), (0, 2)]
        for i, j in linked:
            parts.append(_line(pts[i], pts[j], 1.4))
        dots(pts, 4.2)
    elif motif == "biclique":
        left = [(28, 30), (28, 50), (28, 70)]
        right = [(72, 40), (72, 60)]
        for a in left:
            for b in right:
                parts.append(_line(a, b, 1.5))
        dots(left, 4.5)
        dots(right, 4.5, accent)
    elif motif == "reciprocal-link":
        parts.append(f'<path d="M 30 44 Q 50 28 70 44" fill="none" stroke="{ink}" '
                     f'stroke-width="2.2" marker-end="url(#ah)"/>')
        parts.append(f'<path d="M 70 56 Q 50 72 30 56" fill="none" stroke="{accent}" '
                     f'stroke-width="2.2" marker-end="url(#ah)"/>')
        parts.insert(0, f'<defs><marker id="ah" viewBox="0 0 6 6" refX="5" refY="3" '
                        f'markerWidth="5" markerHeight="5" orient="auto">'
                        f'<path d="M 0 0 L 6 3 L 0 6 z" fill="{ink}"/></marker></defs>')
        parts.append(_dot(27, 50, 5, ink))
        parts.append(_dot(73, 50, 5, ink))
    elif motif == "recurring-link":
        for k, w in enumerate((1.4, 2.0, 2.8)):
            y = 34 + k * 16
            parts.append(f'<path d="M 28 {y + 8} Q 50 {y - 10} 72 {y + 8}" fill="none" '
                         f'stroke="{ink}" stroke-width="{w}"/>')
            parts.append(_dot(28, y + 8, 3.5))
            parts.append(_dot(72, y + 8, 3.5))
    else:
        raise KeyError(motif)
    return "".join(parts)


# -- matrix forms ------------------------------------------------------------

_GRID_N = 7
_MATRIX_CELLS: dict[str, list[tuple[int, int, float]]] = {
    # (row, col, shade 0..1); mirrored cells listed explicitly
    "strong-link": [(1, 4, 1.0), (4, 1, 1.0), (2, 6, 0.3), (6, 2, 0.3), (5, 3, 0.3), (3, 5, 0.3)],
    "self-link": [(3, 3, 1.0), (1, 5, 0.3), (5, 1, 0.3)],
    "parallel-links": [(2, 5, 1.0), (5, 2, 1.0)],
    "isolated-node": [(1, 2, 0.5), (2, 1, 0.5), (5, 6, 0.5), (6, 5, 0.5), (1, 6, 0.5),
                      (6, 1, 0.5), (2, 6, 0.5), (6, 2, 0.5)],  # lane 3/4 left empty
    "hub": [(3, c, 0.8) for c in range(_GRID_N) if c != 3] +
           [(r, 3, 0.8) for r in range(_GRID_N) if r != 3],
    "bridge-node": [(3, 0, 0.8), (3, 1, 0.8), (0, 3, 0.8), (1, 3, 0.8),
                    (3, 5, 0.8), (3, 6, 0.8), (5, 3, 0.8), (6, 3, 0.8),
                    (0, 1, 0.4), (1, 0, 0.4), (5, 6, 0.4), (6, 5, 0.4)],
    "fan": [(2, 3, 0.8), (2, 4, 0.8), (2, 5, 0.8), (3, 2, 0.8), (4, 2, 0.8), (5, 2, 0.8)],
    "chain": [(0, 1, 0.8), (1, 0, 0.8), (1, 2, 0.8), (2, 1, 0.8), (2, 3, 0.8), (3, 2, 0.8),
              (3, 4, 0.8), (4, 3, 0.8), (4, 5, 0.8), (5, 4, 0.8)],
    "clique": [(r, c, 0.85) for r in range(1, 5) for c in range(1, 5) if r != c],
    "cluster": [(r, c, 0.7) for r in range(1, 6) for c in range(1, 6)
                if r != c and (r + c) % 3 != 0],
    "biclique": [(r, c, 0.8) for r in (0, 1) for c in (4, 5, 6)] +
                [(r, c, 0.8) for r in (4, 5, 6) for c in (0, 1)],
}


def _matrix_form(motif: str, variant: int) -> str:
    cells = _MATRIX_CELLS[motif]
    if variant == 1:  # pulled toward the diagonal
        cells = [(max(r - 1, 0), max(c - 1, 0), s) for r, c, s in cells]
    elif variant == 2:  # pushed away
        cells = [(min(r + 1, _GRID_N - 1), min(c + 2, _GRID_N - 1), s) for r, c, s in cells]
    elif variant == 3:  # split by a reordering
        half = len(cells) // 2
        cells = cells[:half] + [(min(r + 2, _GRID_N - 1), min(c + 1, _GRID_N - 1), s)
                                for r, c, s in cells[half:]]
    step = 84.0 / _GRID_N
    parts = [f'<rect x="8" y="8" width="84" height="84" fill="none" '
             f'stroke="{FAINT}" stroke-width="1"/>']
    for k in range(1, _GRID_N):
        p = 8 + k * step
        parts.append(f'<line x1="{p:.1f}" y1="8" x2="{p:.1f}" y2="92" stroke="{FAINT}" stroke-width="0.5"/>')
        parts.append(f'<line x1="8" y1="{p:.1f}" x2="92" y2="{p:.1f}" stroke="{FAINT}" stroke-width="0.5"/>')
    seen = set()
    for r, c, s in cells:
        if (r, c) in seen:
            continue
        seen.add((r, c))
        alpha = 0.25 + 0.75 * s
        parts.append(f'<rect x="{8 + c * step:.1f}" y="{8 + r * step:.1f}" '
                     f'width="{step:.1f}" height="{step:.1f}" fill="{INK}" '
                     f'fill-opacity="{alpha:.2f}"/>')
    return "".join(parts)


# -- time-arcs forms ---------------------------------------------------------

def _timearc_form(motif: str) -> str:
    rows = [24, 42, 60, 78]
    parts = [f'<line x1="10" y1="{y}" x2="90" y2="{y}" stroke="{FAINT}" stroke-width="0.8"/>'
             for y in rows]

    def event(x, r1, r2, w=2.0, color=INK, sweep=0):
        parts.append(_dot(x, rows[r1], 3))
        if r1 != r2:
            parts.append(_dot(x, rows[r2], 3))
            parts.append(_arc_path(x, rows[r1], rows[r2], color, w, sweep))
        else:
            parts.append(_loop(x, rows[r1] - 7, 5, color, w))

    if motif == "strong-link":
        event(30, 0, 2, 1.2, FAINT)
        event(50, 0, 3, 4.5, ACCENT)
        event(70, 1, 2, 1.2, FAINT)
    elif motif == "self-link":
        event(50, 2, 2, 2.2, ACCENT)
        event(28, 0, 1, 1.2, FAINT)
    elif motif == "parallel-links":
        event(50, 0, 2, 2.2, INK)
        parts.append(_arc_path(50, rows[0] + 4, rows[2] - 4, ACCENT, 2.2))
    elif motif == "isolated-node":
        event(30, 0, 1, 1.4)
        event(55, 0, 3, 1.4)
        event(75, 3, 0, 1.4)  # row 2 stays bare
    elif motif == "hub":
        for x, other in ((25, 1), (42, 2), (60, 3), (78, 2)):
            event(x, 0, other, 1.8)
    elif motif == "bridge-node":
        event(32, 1, 0, 1.6)
        event(48, 1, 2, 2.0, ACCENT)
        event(66, 2, 3, 1.6)
    elif motif == "fan":
        for x, other in ((40, 1), (50, 2), (60, 3)):
            event(x, 0, other, 1.6)
    elif motif == "chain":
        event(30, 0, 1, 1.8)
        event(50, 1, 2, 1.8)
        event(70, 2, 3, 1.8)
    elif motif == "clique":
        event(35, 0, 1, 1.6)
        event(45, 1, 2, 1.6)
        event(55, 0, 2, 1.6)
        event(65, 1, 3, 1.6)
        event(75, 2, 3, 1.6)
        event(85, 0, 3, 1.6)
    elif motif == "cluster":
        for x, (a, b) in ((30, (0, 1)), (38, (1, 2)), (46, (0, 2)), (54, (1, 2)),
                          (62, (0, 1)), (70, (1, 2))):
            event(x, a, b, 1.4)
    elif motif == "biclique":
        for x, (a, b) in ((35, (0, 2)), (45, (0, 3)), (60, (1, 2)), (70, (1, 3))):
            event(x, a, b, 1.6)
    elif motif == "reciprocal-link":
        parts.append(_arc_path(50, rows[1], rows[2], INK, 2.2, 0))
        parts.append(_arc_path(50, rows[1], rows[2], ACCENT, 2.2, 1))
        parts.append(_dot(50, rows[1], 3))
        parts.append(_dot(50, rows[2], 3))
    elif motif == "recurring-link":
        for x in (30, 50, 70):
            event(x, 1, 2, 1.8, ACCENT)
    else:
        raise KeyError(motif)
    return "".join(parts)


_VARIANT_TRANSFORM = {
    1: "translate(14,14) scale(0.72)",
    2: "translate(-11,10) scale(1.22,0.8)",
    3: "translate(50,50) rotate(18) translate(-50,-50) scale(0.92) translate(4,4)",
}


def icon_svg(key: str, size: int = 96) -> str:
    """Render an asset key to a self-contained SVG string."""
    family, _, rest = key.partition("/")
    motif, _, suffix = rest.partition("-v")
    variant = int(suffix) if suffix else 0
    if family == "net":
        return _svg(_graph_form(motif, "#f5f5f5", "#7fd4ff"), "#18181c", size)
    if family == "matrix":
        return _svg(_matrix_form(motif, variant), "#ffffff", size)
    if family == "node-link":
        body = _graph_form(motif, INK, ACCENT)
    elif family == "time-arcs":
        body = _timearc_form(motif)
    else:
        raise KeyError(f"unknown icon family in {key!r}")
    if variant:
        body = f'<g transform="{_VARIANT_TRANSFORM[variant]}">{body}</g>'
    return _svg(body, "#ffffff", size)
