"""Regenerate the bundled sample datasets in src/motiflens/data/.

Needs networkx (dev-only dependency) for the Les Misérables
co-occurrence graph. The trade network is synthetic: a deterministic
merchant network with dated, directed links, sized to 189 nodes and
488 links.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

DATA = Path(__file__).resolve().parents[1] / "src" / "motiflens" / "data"


def build_lesmis() -> dict:
    import networkx as nx

    g = nx.les_miserables_graph()
    nodes = [{"id": n, "label": n} for n in sorted(g.nodes)]
    links = []
    for i, (u, v) in enumerate(sorted(g.edges)):
        links.append({"id": f"e{i}", "source": u, "target": v,
                      "weight": float(g[u][v]["weight"]), "type": "co-occurrence"})
    assert len(nodes) == 77 and len(links) == 254, (len(nodes), len(links))
    return {"directed": False, "temporal": False, "nodes": nodes, "links": links}


def build_marieboucher() -> dict:
    rng = random.Random(1652)
    n_nodes, n_links = 189, 488
    ids = [f"p{i:03d}" for i in range(1, n_nodes + 1)]
    nodes = [{"id": i, "label": f"Merchant {i[1:]}"} for i in ids]
    # 2 merchants with no surviving records, 12 big traders, the rest small
    isolated = set(ids[-2:])
    active = [i for i in ids if i not in isolated]
    core = active[:12]
    years = list(range(1630, 1696))
    types = ["trade", "trade", "trade", "credit", "letter"]

    links: list[dict] = []
    seen_pairs: set[tuple[str, str]] = set()

    def add(src: str, tgt: str, year: int, ltype: str | None = None,
            weight: float | None = None) -> None:
        links.append({
            "id": f"e{len(links)}", "source": src, "target": tgt,
            "weight": weight if weight is not None else float(rng.choice([1, 1, 1, 2, 2, 3, 5, 8])),
            "type": ltype if ltype is not None else rng.choice(types),
            "time": year,
        })
        seen_pairs.add((src, tgt))

    # a few core traders keep exclusive one-deal partners (fans), and one
    # trade route runs through a string of intermediaries (a chain)
    exclusive: set[str] = set()
    for hub, partners in ((core[0], active[12:17]), (core[3], active[17:21]),
                          (core[7], active[21:25])):
        for trader in partners:
            add(hub, trader, rng.choice(years), "trade")
            exclusive.add(trader)
    route = active[25:30]
    for a, b in zip([core[5]] + route, route + [core[9]]):
        add(a, b, rng.choice(years), "trade")
    exclusive |= set(route)

    # every other small trader deals with at least one partner (core-biased)
    for trader in active[12:]:
        if trader in exclusive:
            continue
        partner = rng.choice(core if rng.random() < 0.55 else active)
        while partner == trader or partner in exclusive:
            partner = rng.choice(active)
        src, tgt = (trader, partner) if rng.random() < 0.5 else (partner, trader)
        add(src, tgt, rng.choice(years))

    # recurring business: same ordered pair active in 3+ distinct years
    recurring = [(core[i], core[(i + 1) % 12]) for i in range(10)]
    for src, tgt in recurring:
        for year in rng.sample(years, rng.randint(3, 5)):
            add(src, tgt, year)

    # correspondence answered: reciprocal pairs
    for _ in range(25):
        src, tgt = rng.sample(active, 2)
        year = rng.choice(years)
        add(src, tgt, year, "letter")
        add(tgt, src, year + rng.randint(0, 2), "letter")

    # parallel dealings: same pair, same year, different link types
    for _ in range(8):
        src, tgt = rng.sample(core, 2)
        year = rng.choice(years)
        add(src, tgt, year, "trade")
        add(src, tgt, year, "credit")

    open_pool = [i for i in active if i not in exclusive]
    while len(links) < n_links:
        src = rng.choice(core if rng.random() < 0.4 else open_pool)
        tgt = rng.choice(open_pool)
        if src == tgt:
            continue
        add(src, tgt, rng.choice(years))

    assert len(links) == n_links, len(links)
    return {"directed": True, "temporal": True, "nodes": nodes, "links": links}


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    for name, doc in (("lesmis", build_lesmis()), ("marieboucher", build_marieboucher())):
        path = DATA / f"{name}.json"
        path.write_text(json.dumps(doc, ensure_ascii=False, indent=1) + "\n", "utf-8")
        print(f"{path}: {len(doc['nodes'])} nodes, {len(doc['links'])} links")


if __name__ == "__main__":
    main()
