"""Deterministic graph algorithms over simple adjacency maps.

All functions take a ``neighbors`` mapping node-id -> set of adjacent
node-ids (the simple undirected view of a network) and return results in
a canonical sorted order so repeated runs produce identical output.
"""

from __future__ import annotations

from collections import defaultdict

Adjacency = dict[str, frozenset[str]]


def connected_components(neighbors: Adjacency, skip: str | None = None) -> list[set[str]]:
    """Connected components, optionally ignoring one node entirely."""
    seen: set[str] = set()
    comps = []
    for start in sorted(neighbors):
        if start in seen or start == skip:
            continue
        comp = {start}
        stack = [start]
        seen.add(start)
        while stack:
            u = stack.pop()
            for v in neighbors[u]:
                if v not in seen and v != skip:
                    seen.add(v)
                    comp.add(v)
                    stack.append(v)
        comps.append(comp)
    return comps


def articulation_points(neighbors: Adjacency) -> list[str]:
    """Hopcroft–Tarjan articulation points, iterative DFS.

    A node is an articulation point when removing it increases the
    number of connected components.
    """
    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    parent: dict[str, str | None] = {}
    points: set[str] = set()
    counter = 0

    for root in sorted(neighbors):
        if root in disc:
            continue
        parent[root] = None
        root_children = 0
        # stack holds (node, iterator position) to emulate recursion
        stack = [(root, iter(sorted(neighbors[root])))]
        disc[root] = low[root] = counter
        counter += 1
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                if v not in disc:
                    parent[v] = u
                    if u == root:
                        root_children += 1
                    disc[v] = low[v] = counter
                    counter += 1
                    stack.append((v, iter(sorted(neighbors[v]))))
                    advanced = True
                    break
                elif v != parent[u]:
                    low[u] = min(low[u], disc[v])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if p != root and low[u] >= disc[p]:
                        points.add(p)
        if root_children > 1:
            points.add(root)
    return sorted(points)


def maximal_cliques(neighbors: Adjacency, min_size: int = 1) -> list[frozenset[str]]:
    """All maximal cliques of size >= min_size (Bron–Kerbosch with pivot)."""
    cliques: list[frozenset[str]] = []

    def expand(r: set[str], p: set[str], x: set[str]) -> None:
        if not p and not x:
            if len(r) >= min_size:
                cliques.append(frozenset(r))
            return
        # pivot with the most candidate neighbors; ties break on id
        pivot = max(sorted(p | x), key=lambda u: len(p & neighbors[u]))
        for v in sorted(p - neighbors[pivot]):
            expand(r | {v}, p & neighbors[v], x & neighbors[v])
            p.remove(v)
            x.add(v)

    expand(set(), set(neighbors), set())
    return sorted(cliques, key=lambda c: tuple(sorted(c)))


def maximal_bicliques(neighbors: Adjacency, min_part: int = 2,
                      min_total: int = 5) -> list[tuple[frozenset[str], frozenset[str]]]:
    """Maximal induced complete bipartite subgraphs.

    Both parts are independent sets, every cross pair is linked, and no
    outside vertex can be added to either part. Parts are returned as an
    ordered pair (part containing the smallest id first) and the result
    list is sorted canonically.

    Enumeration is seeded per edge (u, v) where u is the smallest vertex
    of the biclique and v the smallest vertex of the opposite part, so
    every maximal biclique is generated from exactly one seed.
    """
    all_nodes = sorted(neighbors)
    found: dict[tuple, tuple[frozenset[str], frozenset[str]]] = {}

    def addable_a(x: str, a: set[str], b: set[str]) -> bool:
        nx = neighbors[x]
        return not (nx & a) and b <= nx

    def is_maximal(a: set[str], b: set[str]) -> bool:
        for x in all_nodes:
            if x in a or x in b:
                continue
            if addable_a(x, a, b) or addable_a(x, b, a):
                return False
        return True

    def grow(a: set[str], b: set[str], cand_a: set[str], cand_b: set[str],
             ex_a: set[str], ex_b: set[str]) -> None:
        if len(a) + len(cand_a) < min_part or len(b) + len(cand_b) < min_part:
            return
        if len(a) + len(b) + len(cand_a | cand_b) < min_total:
            return
        # an excluded vertex that stays addable below this branch makes
        # every leaf non-maximal
        for x in ex_a:
            if addable_a(x, a, b) and not (neighbors[x] & cand_a) and cand_b <= neighbors[x]:
                return
        for x in ex_b:
            if addable_a(x, b, a) and not (neighbors[x] & cand_b) and cand_a <= neighbors[x]:
                return
        if not cand_a and not cand_b:
            if len(a) >= min_part and len(b) >= min_part and is_maximal(a, b):
                lo = min(min(a), min(b))
                first, second = (a, b) if lo in a else (b, a)
                key = (tuple(sorted(first)), tuple(sorted(second)))
                found[key] = (frozenset(first), frozenset(second))
            return
        w = min(cand_a | cand_b)
        nw = neighbors[w]
        if w in cand_a:
            grow(a | {w}, b, (cand_a - nw) - {w}, cand_b & nw, ex_a - nw, ex_b & nw)
        if w in cand_b:
            grow(a, b | {w}, cand_a & nw, (cand_b - nw) - {w}, ex_a & nw, ex_b - nw)
        grow(a, b, cand_a - {w}, cand_b - {w},
             ex_a | ({w} & cand_a), ex_b | ({w} & cand_b))

    for u in all_nodes:
        for v in sorted(neighbors[u]):
            if v <= u:
                continue
            nu, nv = neighbors[u], neighbors[v]
            cand_a = {w for w in nv if w > u and w not in nu and w != u}
            cand_b = {w for w in nu if w > v and w not in nv}
            grow({u}, {v}, cand_a, cand_b, set(), set())

    return [found[k] for k in sorted(found)]


def modularity(neighbors: Adjacency, communities: list[set[str]]) -> float:
    """Newman modularity of a partition over the simple undirected view."""
    m = sum(len(neighbors[u]) for u in neighbors) / 2
    if m == 0:
        return 0.0
    q = 0.0
    for comm in communities:
        internal = sum(1 for u in comm for v in neighbors[u] if v in comm) / 2
        degree_sum = sum(len(neighbors[u]) for u in comm)
        q += internal / m - (degree_sum / (2 * m)) ** 2
    return q


def greedy_modularity_communities(neighbors: Adjacency) -> list[set[str]]:
    """Agglomerative modularity maximization with deterministic ties.

    Starts from singletons and repeatedly merges the pair of connected
    communities with the largest modularity gain, breaking ties on the
    lexicographically smallest community labels; stops when no merge
    improves modularity.
    """
    m = sum(len(neighbors[u]) for u in neighbors) / 2
    if m == 0:
        return [{u} for u in sorted(neighbors)]
    # community label = smallest member id
    comm_of = {u: u for u in neighbors}
    members: dict[str, set[str]] = {u: {u} for u in neighbors}
    degree_sum = {u: len(neighbors[u]) for u in neighbors}
    between: dict[str, dict[str, int]] = defaultdict(lambda: defaultdict(int))
    for u in neighbors:
        for v in neighbors[u]:
            if u < v:
                between[u][v] += 1
                between[v][u] += 1

    while True:
        best = None
        for a in sorted(between):
            for b in sorted(between[a]):
                if b <= a or between[a][b] == 0:
                    continue
                gain = between[a][b] / m - 2 * (degree_sum[a] / (2 * m)) * (degree_sum[b] / (2 * m))
                if best is None or gain > best[0] + 1e-12:
                    best = (gain, a, b)
        if best is None or best[0] <= 1e-12:
            break
        _, a, b = best
        label = min(a, b)
        other = b if label == a else a
        members[label] |= members[other]
        degree_sum[label] += degree_sum[other]
        for u in members[other]:
            comm_of[u] = label
        for c, cnt in list(between[other].items()):
            if c == label:
                continue
            between[label][c] += cnt
            between[c][label] += cnt
            del between[c][other]
        between[label].pop(other, None)
        between.pop(other, None)
        for c in list(between):
            between[c].pop(other, None)
        del members[other], degree_sum[other]

    return [set(members[k]) for k in sorted(members)]
