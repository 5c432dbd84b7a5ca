"""Renderable mark generation and geometric selection resolution.

Every network element is represented by at least one mark, and every
mark points back at exactly one element, which is what makes rectangle
and lasso selections resolvable to element sets.

Conventions: canvas origin is top-left with y growing downward (browser
canvas convention). Arc marks store (cx, cy, r, a0, a1) with angles in
radians measured on the screen axes; the path is swept from a0 to a1,
and a decreasing angle appears counter-clockwise to the viewer. For hit
testing an arc is the fixed 48-segment polyline along that sweep, with a
3-unit tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DegenerateRegion, MissingCoordinates, MissingOrdering, NotTemporal
from .graph import ElementSet, Network
from .layout import NodeCoordinates
from .seriation import NodeOrdering

NODE_LINK = "node-link"
MATRIX = "matrix"
TIME_ARCS = "time-arcs"
VIZ_KINDS = (NODE_LINK, MATRIX, TIME_ARCS)

ARC_SAMPLES = 48
ARC_TOLERANCE = 3.0
PICK_RADIUS = 8.0

Point = tuple[float, float]


@dataclass(frozen=True)
class Mark:
    id: str
    element: str
    shape: str  # disc | rect | segment | arc
    params: dict
    channels: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"id": self.id, "element": self.element, "shape": self.shape,
                "params": self.params, "channels": self.channels}


@dataclass(frozen=True)
class MarkGeometry:
    viz: str
    canvas: tuple[float, float]
    marks: tuple[Mark, ...]

    def to_dict(self) -> dict:
        return {"viz": self.viz, "canvas": {"w": self.canvas[0], "h": self.canvas[1]},
                "marks": [m.to_dict() for m in self.marks]}


@dataclass(frozen=True)
class SelectionRegion:
    kind: str  # rectangle | lasso
    points: tuple[Point, ...]

    @classmethod
    def rectangle(cls, corner1: Point, corner2: Point) -> "SelectionRegion":
        return cls("rectangle", (tuple(corner1), tuple(corner2)))

    @classmethod
    def lasso(cls, points) -> "SelectionRegion":
        return cls("lasso", tuple(tuple(p) for p in points))


# weight channels use a fixed strictly increasing map of the absolute
# weight, so raising any link's weight darkens/thickens its mark even
# when it already was the heaviest
def _shade(weight: float) -> float:
    return 1.0 - 0.75 * 2.0 ** (-weight / 8.0)


def _thickness(weight: float) -> float:
    return 1.0 + 4.0 * (1.0 - 2.0 ** (-weight / 8.0))


def mark_geometry(net: Network, viz: str, ordering: NodeOrdering | None = None,
                  coordinates: NodeCoordinates | None = None,
                  canvas: tuple[float, float] = (800.0, 600.0)) -> MarkGeometry:
    """Generate the marks of one visualization of a network."""
    if viz == MATRIX:
        if ordering is None:
            raise MissingOrdering("matrix geometry requires a node ordering")
        return _matrix_marks(net, ordering, canvas)
    if viz == TIME_ARCS:
        if not net.temporal:
            raise NotTemporal("time-arcs geometry requires a temporal network")
        if ordering is None:
            raise MissingOrdering("time-arcs geometry requires a node ordering")
        return _time_arcs_marks(net, ordering, canvas)
    if viz == NODE_LINK:
        if coordinates is None:
            raise MissingCoordinates("node-link geometry requires coordinates")
        return _node_link_marks(net, coordinates, canvas)
    raise ValueError(f"unknown visualization {viz!r}")


def _matrix_marks(net: Network, ordering: NodeOrdering,
                  canvas: tuple[float, float]) -> MarkGeometry:
    w, h = canvas
    n = len(net.nodes)
    gutter = 0.12 * min(w, h)
    cell = min((w - gutter) / n, (h - gutter) / n)
    marks: list[Mark] = []
    for nid, i in sorted(ordering.permutation.items(), key=lambda kv: kv[1]):
        marks.append(Mark(f"row:{nid}", nid, "rect",
                          {"x": 2.0, "y": gutter + i * cell, "w": gutter - 4.0, "h": cell}))
        marks.append(Mark(f"col:{nid}", nid, "rect",
                          {"x": gutter + i * cell, "y": 2.0, "w": cell, "h": gutter - 4.0}))
    for l in net.links:
        i = ordering.rank(l.source)
        j = ordering.rank(l.target)
        channels = {"shade": _shade(l.weight), "type": l.type}
        cells = [(i, j)]
        if not net.directed and i != j:
            cells.append((j, i))
        for k, (r, c) in enumerate(cells):
            marks.append(Mark(f"cell:{l.id}:{k}", l.id, "rect",
                              {"x": gutter + c * cell, "y": gutter + r * cell,
                               "w": cell, "h": cell}, channels))
    return MarkGeometry(MATRIX, canvas, tuple(marks))


def _node_link_marks(net: Network, coordinates: NodeCoordinates,
                     canvas: tuple[float, float]) -> MarkGeometry:
    w, h = canvas
    margin = 0.06 * min(w, h)
    xs = [coordinates[n][0] for n in net.node_ids]
    ys = [coordinates[n][1] for n in net.node_ids]
    span_x = max(xs) - min(xs)
    span_y = max(ys) - min(ys)
    scale = min((w - 2 * margin) / (span_x or 1.0), (h - 2 * margin) / (span_y or 1.0))
    off_x = w / 2 - scale * (min(xs) + max(xs)) / 2
    off_y = h / 2 - scale * (min(ys) + max(ys)) / 2

    def to_canvas(nid: str) -> Point:
        x, y = coordinates[nid]
        return (x * scale + off_x, y * scale + off_y)

    radius = max(coordinates.node_radius * scale, 3.0)
    marks: list[Mark] = []
    groups: dict[tuple[str, str], list] = {}
    for l in net.links:
        groups.setdefault(l.pair, []).append(l)
    for pair, links in sorted(groups.items()):
        for k, l in enumerate(sorted(links, key=lambda l: l.id)):
            channels = {"thickness": _thickness(l.weight), "type": l.type}
            if l.source == l.target:
                x, y = to_canvas(l.source)
                r = radius * 0.7
                marks.append(Mark(f"loop:{l.id}", l.id, "arc",
                                  {"cx": x + radius, "cy": y - radius, "r": r,
                                   "a0": 0.0, "a1": -2 * math.pi}, channels))
                continue
            (x1, y1), (x2, y2) = to_canvas(l.source), to_canvas(l.target)
            # spread parallel links apart perpendicular to the line
            delta = (k - (len(links) - 1) / 2) * 4.0
            if delta:
                length = math.hypot(x2 - x1, y2 - y1) or 1.0
                px, py = -(y2 - y1) / length * delta, (x2 - x1) / length * delta
                x1, y1, x2, y2 = x1 + px, y1 + py, x2 + px, y2 + py
            marks.append(Mark(f"link:{l.id}", l.id, "segment",
                              {"x1": x1, "y1": y1, "x2": x2, "y2": y2}, channels))
    for nid in net.node_ids:
        x, y = to_canvas(nid)
        marks.append(Mark(f"node:{nid}", nid, "disc", {"x": x, "y": y, "r": radius}))
    return MarkGeometry(NODE_LINK, canvas, tuple(marks))


def _time_arcs_marks(net: Network, ordering: NodeOrdering,
                     canvas: tuple[float, float]) -> MarkGeometry:
    w, h = canvas
    n = len(net.nodes)
    gutter = 0.15 * w
    row_step = h / n
    times = sorted({l.time for l in net.links if l.time is not None})
    has_undated = any(l.time is None for l in net.links)
    columns: list = (["undated"] if has_undated else []) + times
    col_step = (w - gutter) / max(len(columns), 1)

    def row_y(nid: str) -> float:
        return (ordering.rank(nid) + 0.5) * row_step

    def col_x(time) -> float:
        key = "undated" if time is None else time
        return gutter + (columns.index(key) + 0.5) * col_step

    marks: list[Mark] = []
    for nid, i in sorted(ordering.permutation.items(), key=lambda kv: kv[1]):
        marks.append(Mark(f"rowlab:{nid}", nid, "rect",
                          {"x": 2.0, "y": (i + 0.1) * row_step,
                           "w": gutter - 6.0, "h": row_step * 0.8}))
    dot_r = max(min(row_step * 0.25, col_step * 0.2, 6.0), 2.0)
    for l in net.links:
        x = col_x(l.time)
        ys, yt = row_y(l.source), row_y(l.target)
        channels = {"thickness": _thickness(l.weight), "type": l.type}
        marks.append(Mark(f"dot:{l.id}:s", l.id, "disc", {"x": x, "y": ys, "r": dot_r}))
        if l.source != l.target:
            marks.append(Mark(f"dot:{l.id}:t", l.id, "disc", {"x": x, "y": yt, "r": dot_r}))
            # sweep from source to target, counter-clockwise on screen
            a0 = -math.pi / 2 if ys < yt else math.pi / 2
            marks.append(Mark(f"arc:{l.id}", l.id, "arc",
                              {"cx": x, "cy": (ys + yt) / 2, "r": abs(yt - ys) / 2,
                               "a0": a0, "a1": a0 - math.pi}, channels))
        else:
            marks.append(Mark(f"arc:{l.id}", l.id, "arc",
                              {"cx": x, "cy": ys - dot_r * 1.5, "r": dot_r,
                               "a0": 0.0, "a1": -2 * math.pi}, channels))
    return MarkGeometry(TIME_ARCS, canvas, tuple(marks))


# -- hit testing -------------------------------------------------------------

def _rect_corners(params: dict) -> tuple[float, float, float, float]:
    return (params["x"], params["y"], params["x"] + params["w"], params["y"] + params["h"])


def _point_in_rect(p: Point, r: tuple[float, float, float, float]) -> bool:
    return r[0] <= p[0] <= r[2] and r[1] <= p[1] <= r[3]


def _point_in_poly(p: Point, poly: tuple[Point, ...]) -> bool:
    x, y = p
    inside = False
    for i in range(len(poly)):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % len(poly)]
        if (y1 > y) != (y2 > y):
            xt = x1 + (y - y1) / (y2 - y1) * (x2 - x1)
            if x < xt:
                inside = not inside
    return inside


def _dist_point_segment(p: Point, a: Point, b: Point) -> float:
    ax, ay = a
    bx, by = b
    px, py = p
    dx, dy = bx - ax, by - ay
    denom = dx * dx + dy * dy
    if denom == 0:
        return math.hypot(px - ax, py - ay)
    t = max(0.0, min(1.0, ((px - ax) * dx + (py - ay) * dy) / denom))
    return math.hypot(px - (ax + t * dx), py - (ay + t * dy))


def _segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    def orient(p, q, r):
        v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
        return 0 if v == 0 else (1 if v > 0 else -1)

    def on_seg(p, q, r):
        return (min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
                and min(p[1], q[1]) <= r[1] <= max(p[1], q[1]))

    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    return ((o1 == 0 and on_seg(a, b, c)) or (o2 == 0 and on_seg(a, b, d))
            or (o3 == 0 and on_seg(c, d, a)) or (o4 == 0 and on_seg(c, d, b)))


def _dist_segment_segment(a: Point, b: Point, c: Point, d: Point) -> float:
    if _segments_intersect(a, b, c, d):
        return 0.0
    return min(_dist_point_segment(a, c, d), _dist_point_segment(b, c, d),
               _dist_point_segment(c, a, b), _dist_point_segment(d, a, b))


def _poly_edges(poly: tuple[Point, ...]):
    for i in range(len(poly)):
        yield poly[i], poly[(i + 1) % len(poly)]


def _rect_edges(r: tuple[float, float, float, float]):
    x0, y0, x1, y1 = r
    corners = [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]
    for i in range(4):
        yield corners[i], corners[(i + 1) % 4]


class _Region:
    """Solid selection region: axis-aligned rectangle or polygon."""

    def __init__(self, region: SelectionRegion):
        if region.kind == "rectangle":
            (x1, y1), (x2, y2) = region.points
            self.rect = (min(x1, x2), min(y1, y2), max(x1, x2), max(y1, y2))
            self.poly = None
        elif region.kind == "lasso":
            if len(region.points) < 3:
                raise DegenerateRegion("lasso needs at least 3 vertices")
            self.rect = None
            self.poly = region.points
        else:
            raise ValueError(f"unknown region kind {region.kind!r}")

    def area(self) -> float:
        if self.rect is not None:
            return (self.rect[2] - self.rect[0]) * (self.rect[3] - self.rect[1])
        a = 0.0
        for (x1, y1), (x2, y2) in _poly_edges(self.poly):
            a += x1 * y2 - x2 * y1
        return abs(a) / 2

    def bbox(self) -> tuple[float, float, float, float]:
        if self.rect is not None:
            return self.rect
        xs = [p[0] for p in self.poly]
        ys = [p[1] for p in self.poly]
        return (min(xs), min(ys), max(xs), max(ys))

    def center(self) -> Point:
        if self.rect is not None:
            return ((self.rect[0] + self.rect[2]) / 2, (self.rect[1] + self.rect[3]) / 2)
        xs = [p[0] for p in self.poly]
        ys = [p[1] for p in self.poly]
        return (sum(xs) / len(xs), sum(ys) / len(ys))

    def contains_point(self, p: Point) -> bool:
        if self.rect is not None:
            return _point_in_rect(p, self.rect)
        return _point_in_poly(p, self.poly)

    def edges(self):
        if self.rect is not None:
            yield from _rect_edges(self.rect)
        else:
            yield from _poly_edges(self.poly)

    def distance_to_point(self, p: Point) -> float:
        if self.contains_point(p):
            return 0.0
        return min(_dist_point_segment(p, a, b) for a, b in self.edges())

    def distance_to_segment(self, a: Point, b: Point) -> float:
        if self.contains_point(a) or self.contains_point(b):
            return 0.0
        return min(_dist_segment_segment(a, b, c, d) for c, d in self.edges())

    def intersects_rect(self, r: tuple[float, float, float, float]) -> bool:
        if self.rect is not None:
            return not (r[2] < self.rect[0] or r[0] > self.rect[2]
                        or r[3] < self.rect[1] or r[1] > self.rect[3])
        if any(_point_in_rect(p, r) for p in self.poly):
            return True
        x0, y0, x1, y1 = r
        if any(_point_in_poly(c, self.poly) for c in
               [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]):
            return True
        return any(_segments_intersect(a, b, c, d)
                   for a, b in _poly_edges(self.poly) for c, d in _rect_edges(r))


def arc_polyline(params: dict, samples: int = ARC_SAMPLES) -> list[Point]:
    cx, cy, r = params["cx"], params["cy"], params["r"]
    a0, a1 = params["a0"], params["a1"]
    pts = []
    for i in range(samples + 1):
        a = a0 + (a1 - a0) * i / samples
        pts.append((cx + r * math.cos(a), cy + r * math.sin(a)))
    return pts


def _mark_hit(mark: Mark, region: _Region) -> bool:
    p = mark.params
    if mark.shape == "disc":
        return region.distance_to_point((p["x"], p["y"])) <= p["r"]
    if mark.shape == "rect":
        return region.intersects_rect(_rect_corners(p))
    if mark.shape == "segment":
        half = max(mark.channels.get("thickness", 2.0) / 2, 1.0)
        return region.distance_to_segment((p["x1"], p["y1"]), (p["x2"], p["y2"])) <= half
    if mark.shape == "arc":
        pts = arc_polyline(p)
        return any(region.distance_to_segment(a, b) <= ARC_TOLERANCE
                   for a, b in zip(pts, pts[1:]))
    raise ValueError(f"unknown mark shape {mark.shape!r}")


def _mark_distance(mark: Mark, point: Point) -> float:
    p = mark.params
    if mark.shape == "disc":
        return max(math.hypot(point[0] - p["x"], point[1] - p["y"]) - p["r"], 0.0)
    if mark.shape == "rect":
        r = _rect_corners(p)
        if _point_in_rect(point, r):
            return 0.0
        return min(_dist_point_segment(point, a, b) for a, b in _rect_edges(r))
    if mark.shape == "segment":
        half = max(mark.channels.get("thickness", 2.0) / 2, 1.0)
        return max(_dist_point_segment(point, (p["x1"], p["y1"]), (p["x2"], p["y2"])) - half, 0.0)
    if mark.shape == "arc":
        pts = arc_polyline(p)
        return max(min(_dist_point_segment(point, a, b) for a, b in zip(pts, pts[1:]))
                   - ARC_TOLERANCE, 0.0)
    raise ValueError(f"unknown mark shape {mark.shape!r}")


def resolve_selection(geom: MarkGeometry, region: SelectionRegion) -> ElementSet:
    """Elements whose marks intersect the region.

    Intersection with the solid region counts, containment is not
    required. A zero-area region degrades to a point pick: the nearest
    mark within PICK_RADIUS wins, otherwise the selection is empty.
    """
    solid = _Region(region)
    if solid.area() == 0.0:
        return _point_pick(geom, solid.center())
    rb = solid.bbox()
    nodes: set[str] = set()
    links: set[str] = set()
    for mark in geom.marks:
        mb = _mark_bbox(mark)
        if mb[2] < rb[0] or mb[0] > rb[2] or mb[3] < rb[1] or mb[1] > rb[3]:
            continue
        if _mark_hit(mark, solid):
            (nodes if _refers_to_node(mark) else links).add(mark.element)
    return ElementSet(frozenset(nodes), frozenset(links))


def _mark_bbox(mark: Mark) -> tuple[float, float, float, float]:
    p = mark.params
    if mark.shape == "disc":
        return (p["x"] - p["r"], p["y"] - p["r"], p["x"] + p["r"], p["y"] + p["r"])
    if mark.shape == "rect":
        return _rect_corners(p)
    if mark.shape == "segment":
        half = max(mark.channels.get("thickness", 2.0) / 2, 1.0)
        return (min(p["x1"], p["x2"]) - half, min(p["y1"], p["y2"]) - half,
                max(p["x1"], p["x2"]) + half, max(p["y1"], p["y2"]) + half)
    pad = p["r"] + ARC_TOLERANCE
    return (p["cx"] - pad, p["cy"] - pad, p["cx"] + pad, p["cy"] + pad)


_NODE_MARK_PREFIXES = ("node", "row", "col", "rowlab")


def _refers_to_node(mark: Mark) -> bool:
    return mark.id.split(":", 1)[0] in _NODE_MARK_PREFIXES


def _point_pick(geom: MarkGeometry, point: Point) -> ElementSet:
    # on ties the later mark wins: it is drawn on top
    best: tuple[float, Mark] | None = None
    for mark in geom.marks:
        d = _mark_distance(mark, point)
        if d <= PICK_RADIUS and (best is None or d <= best[0]):
            best = (d, mark)
    if best is None:
        return ElementSet(frozenset(), frozenset())
    if _refers_to_node(best[1]):
        return ElementSet(frozenset({best[1].element}), frozenset())
    return ElementSet(frozenset(), frozenset({best[1].element}))
