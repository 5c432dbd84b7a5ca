"""Detection of network patterns in a whole network or a selection.

Each detector encodes one pattern predicate plus the qualification
heuristics (minimum sizes, thresholds) that decide when a motif is worth
reporting. Detectors are pure functions of an immutable Network and
return canonically ordered instances, so mining the same scope twice
yields identical results.

Topological predicates (hub, fan, chain, clique, cluster, biclique,
bridge) are evaluated on the simple undirected view; link-level patterns
see the raw multigraph; temporal patterns see link direction and
timestamps.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from enum import Enum

from . import algorithms
from .errors import NotTemporal
from .graph import ElementSet, Network, Subgraph

BOTTOM_UP = "bottom-up"
TOP_DOWN = "top-down"

# fraction of an instance's elements that must fall inside a selection
# for the instance to count as selected
CONTAINMENT_RATIO = 0.8

MIN_CLIQUE_NODES = 5
MIN_CLUSTER_NODES = 5
MIN_CLUSTER_DENSITY = 0.5
MIN_FAN_NODES = 4
MIN_CHAIN_INTERIOR = 3
MIN_BICLIQUE_PART = 2
MIN_BICLIQUE_NODES = 5
MIN_RECURRING_TIMES = 3
STRONG_LINK_PERCENTILE = 0.9
HUB_SIGMA = 2.0
HUB_MIN_DEGREE = 5


class MotifKind(Enum):
    STRONG_LINK = "strong-link"
    SELF_LINK = "self-link"
    PARALLEL_LINKS = "parallel-links"
    ISOLATED_NODE = "isolated-node"
    HUB = "hub"
    BRIDGE_NODE = "bridge-node"
    FAN = "fan"
    CHAIN = "chain"
    CLIQUE = "clique"
    CLUSTER = "cluster"
    BICLIQUE = "biclique"
    RECIPROCAL_LINK = "reciprocal-link"
    RECURRING_LINK = "recurring-link"

    @property
    def temporal(self) -> bool:
        return self in (MotifKind.RECIPROCAL_LINK, MotifKind.RECURRING_LINK)


TOPOLOGICAL_KINDS = tuple(k for k in MotifKind if not k.temporal)
TEMPORAL_KINDS = tuple(k for k in MotifKind if k.temporal)

# singular / plural display names used in selector messages
KIND_NAMES: dict[MotifKind, tuple[str, str]] = {
    MotifKind.STRONG_LINK: ("strong link", "strong links"),
    MotifKind.SELF_LINK: ("self link", "self links"),
    MotifKind.PARALLEL_LINKS: ("set of parallel links", "sets of parallel links"),
    MotifKind.ISOLATED_NODE: ("isolated node", "isolated nodes"),
    MotifKind.HUB: ("hub", "hubs"),
    MotifKind.BRIDGE_NODE: ("bridge node", "bridge nodes"),
    MotifKind.FAN: ("fan", "fans"),
    MotifKind.CHAIN: ("chain", "chains"),
    MotifKind.CLIQUE: ("clique", "cliques"),
    MotifKind.CLUSTER: ("cluster", "clusters"),
    MotifKind.BICLIQUE: ("biclique", "bicliques"),
    MotifKind.RECIPROCAL_LINK: ("reciprocal link", "reciprocal links"),
    MotifKind.RECURRING_LINK: ("recurring link", "recurring links"),
}

_KIND_ORDER = {k: i for i, k in enumerate(MotifKind)}

# patterns whose predicate depends on degrees local to the scope: in
# bottom-up mode these are evaluated inside the closed selection itself
SCOPE_LOCAL_KINDS = (MotifKind.ISOLATED_NODE, MotifKind.FAN, MotifKind.CHAIN)


@dataclass(frozen=True)
class PatternInstance:
    kind: MotifKind
    elements: ElementSet
    facts: dict
    salience_key: str

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "nodes": sorted(self.elements.node_ids),
            "links": sorted(self.elements.link_ids),
            "facts": self.facts,
            "key": self.salience_key,
        }


@dataclass(frozen=True)
class MiningResult:
    instances: tuple[PatternInstance, ...]
    counts: dict[MotifKind, int]

    def to_dict(self) -> dict:
        return {
            "instances": [i.to_dict() for i in self.instances],
            "counts": {k.value: c for k, c in self.counts.items()},
        }


def _instance(net: Network, kind: MotifKind, node_ids, link_ids) -> PatternInstance:
    nodes = frozenset(node_ids)
    links = frozenset(link_ids)
    pairs = {net.link(l).pair for l in links if net.link(l).source != net.link(l).target}
    n = len(nodes)
    possible = n * (n - 1) / 2
    facts = {
        "nodes": n,
        "links": len(links),
        "density": len(pairs) / possible if possible else 0.0,
    }
    digest = hashlib.sha1(
        f"{kind.value}|{','.join(sorted(nodes))}|{','.join(sorted(links))}".encode()
    ).hexdigest()[:12]
    return PatternInstance(kind, ElementSet(nodes, links), facts, f"{kind.value}:{digest}")


def _percentile(sorted_values: list[float], q: float) -> float:
    """Linearly interpolated percentile of an ascending list."""
    if not sorted_values:
        return 0.0
    pos = q * (len(sorted_values) - 1)
    lo = math.floor(pos)
    hi = min(lo + 1, len(sorted_values) - 1)
    frac = pos - lo
    return sorted_values[lo] + frac * (sorted_values[hi] - sorted_values[lo])


# -- link-level patterns ---------------------------------------------------

def detect_link_motifs(net: Network) -> list[PatternInstance]:
    """Strong links, self links, and parallel link groups."""
    out = []
    weights = sorted(l.weight for l in net.links)
    if weights:
        threshold = _percentile(weights, STRONG_LINK_PERCENTILE)
        median = _percentile(weights, 0.5)
        for l in net.links:
            if l.weight >= threshold and l.weight > median:
                out.append(_instance(net, MotifKind.STRONG_LINK, {l.source, l.target}, {l.id}))
    for l in net.links:
        if l.source == l.target:
            out.append(_instance(net, MotifKind.SELF_LINK, {l.source}, {l.id}))
    groups: dict[tuple[str, str], list[str]] = {}
    for l in net.links:
        groups.setdefault(l.pair, []).append(l.id)
    for pair, ids in sorted(groups.items()):
        if len(ids) >= 2:
            out.append(_instance(net, MotifKind.PARALLEL_LINKS, set(pair), ids))
    return _sorted(out)


# -- node-level patterns ---------------------------------------------------

def hub_degree_threshold(net: Network) -> float:
    """Scale-adaptive hub cutoff: mean + 2 sigma, but at least 5."""
    degrees = [net.degree(n) for n in net.node_ids]
    if not degrees:
        return float(HUB_MIN_DEGREE)
    mean = sum(degrees) / len(degrees)
    var = sum((d - mean) ** 2 for d in degrees) / len(degrees)
    return max(mean + HUB_SIGMA * math.sqrt(var), float(HUB_MIN_DEGREE))


def _star_elements(net: Network, center: str) -> tuple[set[str], set[str]]:
    neigh = net.neighbors()[center]
    links = {l.id for l in net.links
             if (l.source == center) != (l.target == center)}
    return {center} | set(neigh), links


def detect_node_motifs(net: Network) -> list[PatternInstance]:
    """Hubs, bridge nodes, and isolated nodes.

    Hub and bridge instances carry their 1-hop neighborhood so the
    surrounding star can be highlighted, not just the node itself.
    """
    out = []
    threshold = hub_degree_threshold(net)
    for nid in net.node_ids:
        if net.degree(nid) >= threshold:
            nodes, links = _star_elements(net, nid)
            out.append(_instance(net, MotifKind.HUB, nodes, links))
    for nid in algorithms.articulation_points(net.neighbors()):
        nodes, links = _star_elements(net, nid)
        out.append(_instance(net, MotifKind.BRIDGE_NODE, nodes, links))
    incident: dict[str, int] = {n: 0 for n in net.node_ids}
    for l in net.links:
        incident[l.source] += 1
        if l.target != l.source:
            incident[l.target] += 1
    for nid, cnt in incident.items():
        if cnt == 0:
            out.append(_instance(net, MotifKind.ISOLATED_NODE, {nid}, ()))
    return _sorted(out)


def detect_fans(net: Network) -> list[PatternInstance]:
    """A center plus its degree-1 neighbors, at least 4 nodes in total."""
    out = []
    neigh = net.neighbors()
    for center in net.node_ids:
        leaves = {v for v in neigh[center] if len(neigh[v]) == 1}
        if 1 + len(leaves) >= MIN_FAN_NODES:
            links = {l.id for l in net.links
                     if (l.source == center and l.target in leaves)
                     or (l.target == center and l.source in leaves)}
            out.append(_instance(net, MotifKind.FAN, {center} | leaves, links))
    return _sorted(out)


def detect_chains(net: Network) -> list[PatternInstance]:
    """Maximal paths whose interior nodes all have degree exactly 2.

    A chain needs at least 3 interior nodes; the two anchor endpoints
    are included in the instance. Runs that close into a cycle (no
    distinct anchors) do not qualify.
    """
    neigh = net.neighbors()
    deg2 = {v for v in net.node_ids if len(neigh[v]) == 2}
    seen: set[str] = set()
    out = []
    for start in sorted(deg2):
        if start in seen:
            continue
        run = {start}
        stack = [start]
        seen.add(start)
        while stack:
            u = stack.pop()
            for v in neigh[u]:
                if v in deg2 and v not in run:
                    run.add(v)
                    seen.add(v)
                    stack.append(v)
        if len(run) < MIN_CHAIN_INTERIOR:
            continue
        ends = [v for v in run if len(neigh[v] & run) <= 1]
        if not ends:
            continue  # cycle of degree-2 nodes
        if len(ends) == 1:
            continue  # defensive; a path run always has two ends
        e1, e2 = sorted(ends)[:2]
        a1 = next(iter(neigh[e1] - run), None)
        a2 = next(iter(neigh[e2] - run), None)
        if a1 is None or a2 is None or a1 == a2:
            continue  # loop anchored at a single node is not a path
        sequence = _order_run(neigh, run, e1, e2)
        sequence = [a1] + sequence + [a2]
        links: set[str] = set()
        for u, v in zip(sequence, sequence[1:]):
            links |= {l.id for l in net.links if {l.source, l.target} == {u, v}}
        out.append(_instance(net, MotifKind.CHAIN, set(sequence), links))
    return _sorted(out)


def _order_run(neigh, run: set[str], e1: str, e2: str) -> list[str]:
    seq = [e1]
    prev = None
    while seq[-1] != e2:
        nxt = next(v for v in sorted(neigh[seq[-1]] & run) if v != prev)
        prev = seq[-1]
        seq.append(nxt)
    return seq


# -- group patterns --------------------------------------------------------

def _internal_links(net: Network, nodes: set[str] | frozenset[str]) -> set[str]:
    return {l.id for l in net.links
            if l.source in nodes and l.target in nodes and l.source != l.target}


def detect_cliques(net: Network) -> list[PatternInstance]:
    """Maximal cliques of at least 5 nodes."""
    out = []
    for clique in algorithms.maximal_cliques(net.neighbors(), MIN_CLIQUE_NODES):
        out.append(_instance(net, MotifKind.CLIQUE, clique, _internal_links(net, clique)))
    return _sorted(out)


def detect_clusters(net: Network) -> list[PatternInstance]:
    """Modularity communities of at least 5 nodes and density >= 0.5.

    A community whose internal density is exactly 1.0 is a clique and is
    left to the clique detector to avoid reporting the same group twice.
    """
    out = []
    for comm in algorithms.greedy_modularity_communities(net.neighbors()):
        k = len(comm)
        if k < MIN_CLUSTER_NODES:
            continue
        pairs = sum(1 for u in comm for v in net.neighbors()[u] if v in comm) // 2
        possible = k * (k - 1) // 2
        if pairs == possible:
            continue
        if pairs / possible >= MIN_CLUSTER_DENSITY:
            out.append(_instance(net, MotifKind.CLUSTER, comm, _internal_links(net, comm)))
    return _sorted(out)


def detect_bicliques(net: Network) -> list[PatternInstance]:
    """Maximal induced bicliques: parts >= 2 nodes, >= 5 nodes overall."""
    out = []
    for part_a, part_b in algorithms.maximal_bicliques(
            net.neighbors(), MIN_BICLIQUE_PART, MIN_BICLIQUE_NODES):
        nodes = part_a | part_b
        links = {l.id for l in net.links
                 if (l.source in part_a and l.target in part_b)
                 or (l.source in part_b and l.target in part_a)}
        out.append(_instance(net, MotifKind.BICLIQUE, nodes, links))
    return _sorted(out)


# -- temporal patterns -----------------------------------------------------

def detect_temporal_motifs(net: Network) -> list[PatternInstance]:
    """Reciprocal pairs and recurring directed links in a temporal network."""
    if not net.temporal:
        raise NotTemporal("temporal motifs require a temporal network")
    directed: dict[tuple[str, str], list] = {}
    for l in net.links:
        directed.setdefault((l.source, l.target), []).append(l)
    out = []
    seen_pairs: set[tuple[str, str]] = set()
    for (a, b) in sorted(directed):
        if a == b or (b, a) not in directed:
            continue
        pair = (a, b) if a < b else (b, a)
        if pair in seen_pairs:
            continue
        seen_pairs.add(pair)
        links = [l.id for l in directed[(a, b)]] + [l.id for l in directed[(b, a)]]
        out.append(_instance(net, MotifKind.RECIPROCAL_LINK, set(pair), links))
    for (a, b), ls in sorted(directed.items()):
        timed = [l for l in ls if l.time is not None]
        if len({l.time for l in timed}) >= MIN_RECURRING_TIMES:
            out.append(_instance(net, MotifKind.RECURRING_LINK, {a, b},
                                 {l.id for l in timed}))
    return _sorted(out)


# -- mining ----------------------------------------------------------------

def _sorted(instances: list[PatternInstance]) -> list[PatternInstance]:
    return sorted(instances, key=lambda i: (_KIND_ORDER[i.kind],
                                            tuple(sorted(i.elements.node_ids)),
                                            tuple(sorted(i.elements.link_ids))))


def _global_instances(net: Network) -> list[PatternInstance]:
    out = detect_link_motifs(net) + detect_node_motifs(net)
    out = [i for i in out if i.kind is not MotifKind.ISOLATED_NODE]
    out += detect_cliques(net) + detect_clusters(net) + detect_bicliques(net)
    if net.temporal:
        out += detect_temporal_motifs(net)
    return out


def _local_instances(net: Network) -> list[PatternInstance]:
    out = detect_fans(net) + detect_chains(net)
    out += [i for i in detect_node_motifs(net) if i.kind is MotifKind.ISOLATED_NODE]
    return out


def contained_fraction(inst: PatternInstance, selection: ElementSet) -> float:
    return inst.elements.intersection_size(selection) / len(inst.elements)


def mine(scope: Network | Subgraph, mode: str = TOP_DOWN) -> MiningResult:
    """Run every detector over a scope.

    Top-down mines the scope as-is. Bottom-up treats a Subgraph as a
    user selection: globally defined patterns are mined on the parent
    network and kept when at least 80% of their elements fall inside the
    selection (a sloppy lasso still counts, spillover patterns do not),
    while degree-local patterns (fan, chain, isolated node) are
    evaluated inside the closed selection itself.
    """
    if mode not in (BOTTOM_UP, TOP_DOWN):
        raise ValueError(f"unknown mining mode {mode!r}")
    if isinstance(scope, Subgraph) and mode == BOTTOM_UP:
        selection = scope.elements
        kept = [i for i in _global_instances(scope.parent)
                if contained_fraction(i, selection) >= CONTAINMENT_RATIO]
        local_net = scope.as_network()
        instances = _sorted(kept + _local_instances(local_net))
    else:
        net = scope.as_network() if isinstance(scope, Subgraph) else scope
        instances = _sorted(_global_instances(net) + _local_instances(net))
    counts: dict[MotifKind, int] = {}
    for inst in instances:
        counts[inst.kind] = counts.get(inst.kind, 0) + 1
    return MiningResult(tuple(instances), counts)
