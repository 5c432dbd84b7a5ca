import random

import pytest

from motiflens.graph import Link, Network, Node


def net_from_links(pairs, extra_nodes=(), directed=False, temporal=False):
    """Build a network from (src, tgt) or (src, tgt, attrs) tuples."""
    links = []
    node_ids: list[str] = []
    seen = set()

    def note(nid):
        if nid not in seen:
            seen.add(nid)
            node_ids.append(nid)

    for i, spec in enumerate(pairs):
        src, tgt = spec[0], spec[1]
        attrs = spec[2] if len(spec) > 2 else {}
        note(src)
        note(tgt)
        links.append(Link(id=attrs.get("id", f"e{i}"), source=src, target=tgt,
                          weight=attrs.get("weight", 1.0), type=attrs.get("type", ""),
                          time=attrs.get("time")))
    for nid in extra_nodes:
        note(nid)
    return Network([Node(n) for n in node_ids], links,
                   directed=directed, temporal=temporal)


def gnp(seed: int, n: int, p: float, prefix: str = "v") -> Network:
    """Deterministic Erdős–Rényi style random network."""
    rng = random.Random(seed)
    ids = [f"{prefix}{i:02d}" for i in range(n)]
    links = []
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                links.append(Link(f"e{k}", ids[i], ids[j]))
                k += 1
    return Network([Node(i) for i in ids], links)


def complete_net(n: int, prefix: str = "k") -> Network:
    ids = [f"{prefix}{i}" for i in range(n)]
    pairs = [(ids[i], ids[j]) for i in range(n) for j in range(i + 1, n)]
    return net_from_links(pairs)


def path_net(n: int, prefix: str = "p") -> Network:
    ids = [f"{prefix}{i:02d}" for i in range(n)]
    return net_from_links([(ids[i], ids[i + 1]) for i in range(n - 1)])


@pytest.fixture
def k5():
    return complete_net(5)


@pytest.fixture
def lesmis():
    from motiflens.datasets import load_dataset
    return load_dataset("lesmis")


@pytest.fixture
def marieboucher():
    from motiflens.datasets import load_dataset
    return load_dataset("marieboucher")
