import math

import pytest

from motiflens.errors import (MissingCoordinates, MissingOrdering, NotTemporal)
from motiflens.geometry import (MATRIX, NODE_LINK, TIME_ARCS, mark_geometry)
from motiflens.layout import force_layout
from motiflens.seriation import barycenter_order

from .conftest import gnp, net_from_links


def matrix_geom(net, canvas=(800.0, 800.0)):
    return mark_geometry(net, MATRIX, ordering=barycenter_order(net), canvas=canvas)


def nodelink_geom(net, canvas=(800.0, 600.0)):
    return mark_geometry(net, NODE_LINK, coordinates=force_layout(net, 0), canvas=canvas)


def timearcs_geom(net, canvas=(1000.0, 700.0)):
    return mark_geometry(net, TIME_ARCS, ordering=barycenter_order(net), canvas=canvas)


class TestPreconditions:
    def test_matrix_needs_ordering(self, k5):
        with pytest.raises(MissingOrdering):
            mark_geometry(k5, MATRIX)

    def test_node_link_needs_coordinates(self, k5):
        with pytest.raises(MissingCoordinates):
            mark_geometry(k5, NODE_LINK)

    def test_time_arcs_needs_temporal(self, k5):
        with pytest.raises(NotTemporal):
            mark_geometry(k5, TIME_ARCS, ordering=barycenter_order(k5))

    def test_unknown_viz(self, k5):
        with pytest.raises(ValueError):
            mark_geometry(k5, "pie-chart")


class TestMatrix:
    def test_triangle_has_six_offdiagonal_cells(self):
        net = net_from_links([("a", "b"), ("b", "c"), ("c", "a")])
        geom = matrix_geom(net)
        cells = [m for m in geom.marks if m.id.startswith("cell:")]
        assert len(cells) == 6
        headers = [m for m in geom.marks if m.id.startswith(("row:", "col:"))]
        assert len(headers) == 6

    def test_directed_links_fill_one_cell(self):
        net = net_from_links([("a", "b")], directed=True)
        geom = matrix_geom(net)
        assert len([m for m in geom.marks if m.id.startswith("cell:")]) == 1

    def test_doubling_a_weight_darkens_its_cell(self):
        def shade_of(weight):
            net = net_from_links([("a", "b", {"weight": weight}), ("b", "c"),
                                  ("c", "d")])
            geom = matrix_geom(net)
            return next(m.channels["shade"] for m in geom.marks
                        if m.id == "cell:e0:0")

        assert shade_of(4.0) > shade_of(2.0) > shade_of(1.0)

    def test_diagonal_cell_only_for_self_links(self):
        net = net_from_links([("a", "a"), ("a", "b")])
        geom = matrix_geom(net)
        cells = [m for m in geom.marks if m.id.startswith("cell:")]
        # self link: one diagonal cell; a-b: two mirrored cells
        assert len(cells) == 3

    def test_shade_is_monotone_in_weight(self):
        net = net_from_links([("a", "b", {"weight": w}) for w in (1, 2, 3)]
                             + [("c", "d", {"weight": 2.5})])
        geom = matrix_geom(net)
        by_link = {}
        for m in geom.marks:
            if m.id.startswith("cell:"):
                by_link[m.element] = m.channels["shade"]
        weights = {l.id: l.weight for l in net.links}
        for a in by_link:
            for b in by_link:
                if weights[a] < weights[b]:
                    assert by_link[a] <= by_link[b]


class TestNodeLink:
    def test_thickness_monotone_and_type_tagged(self):
        net = net_from_links([("a", "b", {"weight": 1, "type": "x"}),
                              ("b", "c", {"weight": 5, "type": "y"})])
        geom = nodelink_geom(net)
        segs = {m.element: m for m in geom.marks if m.shape == "segment"}
        assert segs["e0"].channels["thickness"] < segs["e1"].channels["thickness"]
        assert segs["e0"].channels["type"] == "x"

    def test_self_link_gets_a_loop_mark(self):
        net = net_from_links([("a", "a"), ("a", "b")])
        geom = nodelink_geom(net)
        assert any(m.id == "loop:e0" and m.shape == "arc" for m in geom.marks)

    def test_parallel_links_are_offset(self):
        net = net_from_links([("a", "b"), ("a", "b")])
        geom = nodelink_geom(net)
        segs = [m for m in geom.marks if m.shape == "segment"]
        assert len(segs) == 2
        assert segs[0].params != segs[1].params

    def test_single_node_centered(self):
        net = net_from_links([], extra_nodes=["solo"])
        geom = nodelink_geom(net, canvas=(800.0, 600.0))
        disc = geom.marks[-1]
        assert disc.params["x"] == pytest.approx(400.0)
        assert disc.params["y"] == pytest.approx(300.0)


class TestTimeArcs:
    def test_link_yields_two_discs_and_one_arc(self):
        net = net_from_links([("a", "b", {"time": 3})], temporal=True, directed=True)
        geom = timearcs_geom(net)
        discs = [m for m in geom.marks if m.shape == "disc" and m.element == "e0"]
        arcs = [m for m in geom.marks if m.shape == "arc" and m.element == "e0"]
        assert len(discs) == 2 and len(arcs) == 1
        assert discs[0].params["x"] == discs[1].params["x"]

    def test_arc_sweeps_counter_clockwise(self):
        net = net_from_links([("a", "b", {"time": 1}), ("b", "a", {"time": 2})],
                             temporal=True, directed=True)
        geom = timearcs_geom(net)
        arcs = {m.element: m.params for m in geom.marks if m.shape == "arc"}
        # downward link starts at the top of the circle, upward at the bottom;
        # both sweep by decreasing angle (counter-clockwise on screen)
        down = arcs["e0"] if arcs["e0"]["a0"] == -math.pi / 2 else arcs["e1"]
        up = arcs["e1"] if down is arcs["e0"] else arcs["e0"]
        assert down["a0"] == -math.pi / 2 and down["a1"] == -3 * math.pi / 2
        assert up["a0"] == math.pi / 2 and up["a1"] == -math.pi / 2
        for p in (down, up):
            assert p["a1"] < p["a0"]

    def test_distinct_timestamps_evenly_spaced(self):
        net = net_from_links([("a", "b", {"time": t}) for t in (1600, 1601, 1699)],
                             temporal=True, directed=True)
        geom = timearcs_geom(net)
        xs = sorted({m.params["x"] for m in geom.marks if m.shape == "disc"})
        assert len(xs) == 3
        assert xs[1] - xs[0] == pytest.approx(xs[2] - xs[1])

    def test_undated_links_get_a_column(self):
        net = net_from_links([("a", "b", {"time": 5}), ("b", "c")],
                             temporal=True, directed=True)
        geom = timearcs_geom(net)
        assert any(m.element == "e1" for m in geom.marks if m.shape == "disc")


@pytest.mark.parametrize("viz", [MATRIX, NODE_LINK, TIME_ARCS])
def test_every_element_has_a_mark(viz):
    import random
    for seed in range(8):
        rng = random.Random(seed)
        base = gnp(seed, 4 + seed, 0.3)
        pairs = [(l.source, l.target,
                  {"time": rng.choice([None, 1, 2, 3]), "weight": rng.choice([1.0, 2.0])})
                 for l in base.links]
        pairs.append((base.node_ids[0], base.node_ids[0], {"time": 1}))
        net = net_from_links(pairs, extra_nodes=base.node_ids, temporal=True)
        if viz == MATRIX:
            geom = matrix_geom(net)
        elif viz == NODE_LINK:
            geom = nodelink_geom(net)
        else:
            geom = timearcs_geom(net)
        covered = {m.element for m in geom.marks}
        assert covered == set(net.node_ids) | set(net.link_ids)
        for m in geom.marks:
            assert m.shape in ("disc", "rect", "segment", "arc")
