"""Network data model: nodes, links, selections, and basic statistics.

All motif detectors and layout code work against the immutable `Network`
defined here. Topological predicates use the *simple undirected view*:
self-links are ignored and parallel links collapse into a single
neighbor relation. Raw links (with weights, types, timestamps) stay
available for the link-level and temporal patterns.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UnknownElement

Timestamp = int | float


@dataclass(frozen=True)
class Node:
    id: str
    label: str = ""

    def __post_init__(self):
        if not self.id:
            raise ValueError("node id must be a non-empty string")
        if not self.label:
            object.__setattr__(self, "label", self.id)


@dataclass(frozen=True)
class Link:
    id: str
    source: str
    target: str
    weight: float = 1.0
    type: str = ""
    time: Timestamp | None = None

    def __post_init__(self):
        if self.weight < 0:
            raise ValueError(f"link {self.id!r} has negative weight {self.weight}")

    @property
    def pair(self) -> tuple[str, str]:
        """Unordered endpoint pair, canonical order."""
        return (self.source, self.target) if self.source <= self.target else (self.target, self.source)


class Network:
    """Immutable node/link store with adjacency caches.

    Node ids are unique non-empty strings; every link endpoint must
    reference an existing node. If `temporal` is false no link may carry
    a timestamp.
    """

    def __init__(self, nodes: list[Node], links: list[Link], *, directed: bool = False,
                 temporal: bool = False):
        seen: dict[str, Node] = {}
        for n in nodes:
            if n.id in seen:
                raise ValueError(f"duplicate node id {n.id!r}")
            seen[n.id] = n
        link_ids: dict[str, Link] = {}
        for l in links:
            if l.id in link_ids:
                raise ValueError(f"duplicate link id {l.id!r}")
            if l.source not in seen or l.target not in seen:
                raise ValueError(f"link {l.id!r} references unknown node")
            if not temporal and l.time is not None:
                raise ValueError(f"link {l.id!r} carries a timestamp in a non-temporal network")
            link_ids[l.id] = l
        self.nodes: tuple[Node, ...] = tuple(nodes)
        self.links: tuple[Link, ...] = tuple(links)
        self.directed = bool(directed)
        self.temporal = bool(temporal)
        self._nodes_by_id = seen
        self._links_by_id = link_ids
        self._neighbors: dict[str, frozenset[str]] | None = None

    # -- lookups ---------------------------------------------------------

    def node(self, node_id: str) -> Node:
        try:
            return self._nodes_by_id[node_id]
        except KeyError:
            raise UnknownElement(f"unknown node {node_id!r}") from None

    def link(self, link_id: str) -> Link:
        try:
            return self._links_by_id[link_id]
        except KeyError:
            raise UnknownElement(f"unknown link {link_id!r}") from None

    def has_node(self, node_id: str) -> bool:
        return node_id in self._nodes_by_id

    def has_link(self, link_id: str) -> bool:
        return link_id in self._links_by_id

    @property
    def node_ids(self) -> list[str]:
        return [n.id for n in self.nodes]

    @property
    def link_ids(self) -> list[str]:
        return [l.id for l in self.links]

    # -- simple undirected view ------------------------------------------

    def neighbors(self) -> dict[str, frozenset[str]]:
        """Neighbor sets of the simple undirected view (no self, no parallels)."""
        if self._neighbors is None:
            adj: dict[str, set[str]] = {n.id: set() for n in self.nodes}
            for l in self.links:
                if l.source != l.target:
                    adj[l.source].add(l.target)
                    adj[l.target].add(l.source)
            self._neighbors = {k: frozenset(v) for k, v in adj.items()}
        return self._neighbors

    def degree(self, node_id: str) -> int:
        return len(self.neighbors()[node_id])

    def simple_pairs(self) -> set[tuple[str, str]]:
        """Distinct unordered linked pairs, self-links excluded."""
        return {l.pair for l in self.links if l.source != l.target}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Network):
            return NotImplemented
        return (self.nodes == other.nodes and self.links == other.links
                and self.directed == other.directed and self.temporal == other.temporal)

    def __repr__(self) -> str:
        return (f"Network(nodes={len(self.nodes)}, links={len(self.links)}, "
                f"directed={self.directed}, temporal={self.temporal})")


@dataclass(frozen=True)
class ElementSet:
    """A set of node ids and link ids belonging to one network."""

    node_ids: frozenset[str] = field(default_factory=frozenset)
    link_ids: frozenset[str] = field(default_factory=frozenset)

    def __len__(self) -> int:
        return len(self.node_ids) + len(self.link_ids)

    def union(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.node_ids | other.node_ids, self.link_ids | other.link_ids)

    def intersection_size(self, other: "ElementSet") -> int:
        return len(self.node_ids & other.node_ids) + len(self.link_ids & other.link_ids)


def elements(node_ids=(), link_ids=()) -> ElementSet:
    return ElementSet(frozenset(node_ids), frozenset(link_ids))


@dataclass(frozen=True)
class Subgraph:
    """A closed selection of a parent network.

    Closure: endpoints of every included link are included nodes, and
    every parent link whose endpoints are both included is itself
    included.
    """

    parent: Network
    elements: ElementSet

    def as_network(self) -> Network:
        """Materialize the subgraph as a standalone Network (same ids)."""
        nodes = [self.parent.node(i) for i in self.parent.node_ids if i in self.elements.node_ids]
        links = [self.parent.link(i) for i in self.parent.link_ids if i in self.elements.link_ids]
        return Network(nodes, links, directed=self.parent.directed, temporal=self.parent.temporal)


def close_selection(network: Network, raw: ElementSet) -> Subgraph:
    """Close a raw element selection into a proper subgraph.

    Adds the endpoints of every selected link, then every link of the
    parent whose endpoints both ended up selected (a lasso around a
    group of nodes is meant to capture the links between them).
    """
    for nid in raw.node_ids:
        network.node(nid)
    for lid in raw.link_ids:
        network.link(lid)
    node_ids = set(raw.node_ids)
    for lid in raw.link_ids:
        l = network.link(lid)
        node_ids.add(l.source)
        node_ids.add(l.target)
    link_ids = set(raw.link_ids)
    for l in network.links:
        if l.source in node_ids and l.target in node_ids:
            link_ids.add(l.id)
    return Subgraph(network, ElementSet(frozenset(node_ids), frozenset(link_ids)))


def basic_stats(g: Network | Subgraph) -> dict:
    """Node/link counts, simple-graph density, and the weight rank table.

    Density is L / (N*(N-1)/2) over the undirected simple view; parallel
    and self links are excluded from the numerator. The rank table lists
    every link by descending weight with dense ranks (ties share a rank).
    """
    net = g.as_network() if isinstance(g, Subgraph) else g
    n = len(net.nodes)
    possible = n * (n - 1) / 2
    simple = len(net.simple_pairs())
    density = simple / possible if possible else 0.0
    table = []
    rank = 0
    last_weight = None
    for l in sorted(net.links, key=lambda l: (-l.weight, l.id)):
        if l.weight != last_weight:
            rank += 1
            last_weight = l.weight
        table.append({"link": l.id, "weight": l.weight, "rank": rank})
    return {
        "node_count": n,
        "link_count": len(net.links),
        "density": density,
        "weight_rank_table": table,
    }
