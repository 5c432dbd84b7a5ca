"""Acceptance suite: one test per release criterion.

Each test prints a single PASS line (visible with ``pytest -s`` or in
failure output); a failing criterion fails its test. Time budgets are
asserted where the criterion carries one.
"""

import itertools
import json
import random
import threading
import time
from pathlib import Path

import pytest
import requests

from motiflens.datasets import dataset_bytes, load_dataset
from motiflens.explain import MappingCase, classify_mapping, selector_summary
from motiflens.geometry import (MATRIX, NODE_LINK, TIME_ARCS, SelectionRegion,
                                mark_geometry, resolve_selection)
from motiflens.graph import elements
from motiflens.layout import force_layout
from motiflens.motifs import (MiningResult, MotifKind, PatternInstance,
                              detect_bicliques, detect_cliques, detect_fans,
                              detect_node_motifs, mine)
from motiflens.repository import default_repository
from motiflens.seriation import bandwidth, barycenter_order
from motiflens.service import make_server

from . import oracles
from .conftest import complete_net, gnp, net_from_links, path_net

GOLDEN = Path(__file__).parent / "golden" / "lesmis_topdown.json"


def report(name: str, detail: str) -> None:
    print(f"PASS  {name}: {detail}")


def test_dataset_fidelity():
    t0 = time.perf_counter()
    lesmis = load_dataset("lesmis")
    boucher = load_dataset("marieboucher")
    elapsed = time.perf_counter() - t0
    assert (len(lesmis.nodes), len(lesmis.links)) == (77, 254)
    assert (len(boucher.nodes), len(boucher.links)) == (189, 488)
    assert elapsed < 1.0
    report("dataset fidelity", f"77/254 and 189/488 loaded in {elapsed:.3f}s")


def test_clique_oracle_100_random_graphs():
    t0 = time.perf_counter()
    checked = 0
    for seed in range(100):
        n = 5 + (seed * 7) % 21  # 5..25
        p = (0.2, 0.4, 0.6)[seed % 3]
        net = gnp(seed, n, p)
        found = {frozenset(c.elements.node_ids) for c in detect_cliques(net)}
        brute = oracles.brute_maximal_cliques(oracles.adjacency(net), 5)
        assert found == brute, f"seed {seed}: {found} != {brute}"
        checked += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 30.0
    report("clique oracle", f"{checked} random graphs exact in {elapsed:.1f}s")


def test_heuristic_gates():
    assert len(detect_cliques(complete_net(5))) == 1
    assert len(detect_cliques(complete_net(4))) == 0
    fan3 = net_from_links([("c", "l1"), ("c", "l2"), ("c", "l3")])
    fan2 = net_from_links([("c", "l1"), ("c", "l2")])
    assert len(detect_fans(fan3)) == 1
    assert len(detect_fans(fan2)) == 0
    report("heuristic gates", "K5->1 K4->0; fan 3 leaves->1, 2 leaves->0")


def test_biclique_oracle_50_random_graphs():
    t0 = time.perf_counter()
    for seed in range(50):
        n = 5 + seed % 6  # 5..10
        p = (0.25, 0.45, 0.65)[seed % 3]
        net = gnp(seed + 500, n, p)
        found = {(frozenset(a), frozenset(b))
                 for inst in detect_bicliques(net)
                 for a, b in [_split_parts(net, inst)]}
        brute = oracles.brute_maximal_bicliques(oracles.adjacency(net), 2, 5)
        assert found == brute, f"seed {seed}"
    report("biclique oracle", f"50 graphs exact in {time.perf_counter()-t0:.1f}s")


def _split_parts(net, inst):
    """Recover the two parts of a biclique instance by 2-coloring its links."""
    links = [net.link(l) for l in inst.elements.link_ids]
    adj: dict[str, set[str]] = {n: set() for n in inst.elements.node_ids}
    for l in links:
        adj[l.source].add(l.target)
        adj[l.target].add(l.source)
    start = min(adj)
    color = {start: 0}
    queue = [start]
    while queue:
        u = queue.pop()
        for v in adj[u]:
            if v not in color:
                color[v] = 1 - color[u]
                queue.append(v)
    part_a = {n for n, c in color.items() if c == 0}
    part_b = {n for n, c in color.items() if c == 1}
    lo = min(min(part_a), min(part_b))
    return (part_a, part_b) if lo in part_a else (part_b, part_a)


def test_bridge_soundness_100_random_graphs():
    for seed in range(100):
        net = gnp(seed + 300, 6 + seed % 18, 0.18)
        adj = oracles.adjacency(net)
        base = oracles.component_count(adj)
        bridges = [i for i in detect_node_motifs(net)
                   if i.kind is MotifKind.BRIDGE_NODE]
        for inst in bridges:
            links = [net.link(l) for l in inst.elements.link_ids]
            center = next(n for n in inst.elements.node_ids
                          if all(n in (l.source, l.target) for l in links))
            assert oracles.component_count(adj, skip=center) > base
    report("bridge soundness", "every reported bridge splits its graph (100 graphs)")


def test_seriation_criteria():
    t0 = time.perf_counter()
    for seed in range(50):
        net = gnp(seed + 700, 6 + seed % 15, 0.3)
        trace: list[int] = []
        barycenter_order(net, trace=trace)
        assert all(b <= a for a, b in zip(trace, trace[1:]))
    p10 = path_net(10)
    for seed in range(20):
        rng = random.Random(seed)
        init = list(p10.node_ids)
        rng.shuffle(init)
        ordering = barycenter_order(p10, initial=init)
        assert bandwidth(p10, ordering.permutation) == 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0
    report("seriation", f"monotone on 50 graphs, P10 bandwidth 1 from 20 "
                        f"starts in {elapsed:.1f}s")


def test_selection_oracle_1000_regions():
    from .test_selection import all_geometries, random_region, random_temporal_net
    t0 = time.perf_counter()
    total = 0
    for net_seed in range(10):
        net = random_temporal_net(net_seed)
        rng = random.Random(net_seed * 31 + 1)
        for geom in all_geometries(net):
            for _ in range(34):
                region = random_region(rng, geom.canvas[0], geom.canvas[1])
                got = resolve_selection(geom, region)
                nodes, links = oracles.brute_hits(geom, region)
                assert got.node_ids == nodes and got.link_ids == links
                total += 1
    elapsed = time.perf_counter() - t0
    assert total >= 1000
    assert elapsed < 30.0
    report("selection oracle", f"{total} regions exact in {elapsed:.1f}s")


def test_mapping_classification_and_message():
    def result_of(count):
        instances = tuple(
            PatternInstance(MotifKind.HUB, elements([f"h{i}"]), {}, f"hub:{i:09d}")
            for i in range(count))
        return MiningResult(instances, {MotifKind.HUB: count} if count else {})

    for count in range(11):
        expected = (MappingCase.ARTIFACT if count == 0 else
                    MappingCase.ONE_TO_ONE if count == 1 else MappingCase.CONFUSER)
        assert classify_mapping(result_of(count)) is expected
    instances = tuple(
        PatternInstance(k, elements([f"x{i}"]), {}, f"{k.value}:{i:09d}")
        for k in (MotifKind.CLIQUE, MotifKind.STRONG_LINK) for i in range(2))
    result = MiningResult(instances, {MotifKind.CLIQUE: 2, MotifKind.STRONG_LINK: 2})
    assert selector_summary(result).message == \
        "Your selection has 4 network patterns, including 2 cliques and 2 strong links."
    report("mapping classification", "0/1/2+ exhaustive; selector sentence byte-exact")


def test_repository_completeness():
    repo = default_repository()
    assert len(repo) == 35
    for card in repo.all_cards():
        assert len(card.variation_icons) == 3
        assert len(card.variation_texts) == 3
    assert repo.card(MotifKind.FAN, MATRIX).visual_pattern_name == "Free Bar"
    per_viz = {v: len(repo.cards_for(v)) for v in (NODE_LINK, MATRIX, TIME_ARCS)}
    assert per_viz == {NODE_LINK: 11, MATRIX: 11, TIME_ARCS: 13}
    report("repository completeness", "35 cards (11+11+13), 3 variations each, Free Bar")


def test_end_to_end_golden():
    net = load_dataset("lesmis")
    result = mine(net)
    # independent verification of the frozen subsets before byte comparison
    adj = oracles.adjacency(net)
    found = {frozenset(i.elements.node_ids) for i in result.instances
             if i.kind is MotifKind.CLIQUE}
    assert found == oracles.brute_maximal_cliques(adj, 5)
    base = oracles.component_count(adj)
    for inst in result.instances:
        if inst.kind is MotifKind.BRIDGE_NODE:
            links = [net.link(l) for l in inst.elements.link_ids]
            center = next(n for n in inst.elements.node_ids
                          if all(n in (l.source, l.target) for l in links))
            assert oracles.component_count(adj, skip=center) > base
        elif inst.kind is MotifKind.FAN:
            nodes = sorted(inst.elements.node_ids)
            assert sum(1 for n in nodes if net.degree(n) == 1) == len(nodes) - 1
    payload = json.dumps(result.to_dict(), sort_keys=True, separators=(",", ":"))
    again = json.dumps(mine(load_dataset("lesmis")).to_dict(),
                       sort_keys=True, separators=(",", ":"))
    assert payload == again
    assert payload == GOLDEN.read_text()
    report("end-to-end golden", f"{len(result.instances)} instances byte-stable "
                                f"and oracle-verified")


def test_service_replay():
    script = [
        ("POST", "/networks?format=json", dataset_bytes("lesmis")),
        ("GET", "/networks/n1/views/matrix", None),
        ("POST", "/networks/n1/selection", json.dumps({
            "viz": "matrix",
            "region": {"kind": "rectangle", "points": [[96, 96], [400, 400]]},
        }).encode()),
        ("GET", "/networks/n1/patterns", None),
        ("GET", "/repository/cards", None),
    ]

    def run_script():
        server = make_server(port=0)
        thread = threading.Thread(target=server.serve_forever, daemon=True)
        thread.start()
        base = f"http://127.0.0.1:{server.server_address[1]}/api/v1"
        out = []
        try:
            for method, path, body in script:
                if method == "POST":
                    r = requests.post(base + path, data=body, timeout=60)
                else:
                    r = requests.get(base + path, timeout=60)
                out.append((r.status_code, r.content))
            key = json.loads(out[3][1])["instances"][0]["key"]
            r = requests.get(f"{base}/networks/n1/explanations/{key}?viz=matrix",
                             timeout=60)
            out.append((r.status_code, r.content))
        finally:
            server.shutdown()
            server.server_close()
        return out

    first = run_script()
    second = run_script()
    assert first == second
    assert all(status == 200 for status, _ in first)
    report("service replay", f"{len(first)} responses byte-identical across "
                             f"two fresh instances")
