"""Brute-force reference implementations used to check the package.

Nothing here imports the package's algorithms; inputs are plain node lists
and edge lists so the oracles stay independent of SyllableNetwork internals.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

INF = float("inf")


def floyd_warshall(nodes, edges, directed=False):
    """All-pairs hop distances as a dict of dicts; INF where unreachable."""
    nodes = list(nodes)
    dist = {u: {v: (0 if u == v else INF) for v in nodes} for u in nodes}
    for u, v in edges:
        dist[u][v] = 1
        if not directed:
            dist[v][u] = 1
    for w in nodes:
        dw = dist[w]
        for u in nodes:
            du = dist[u]
            duw = du[w]
            if duw == INF:
                continue
            for v in nodes:
                if duw + dw[v] < du[v]:
                    du[v] = duw + dw[v]
    return dist


def union_find_components(nodes, edges):
    parent = {u: u for u in nodes}

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups = {}
    for u in nodes:
        groups.setdefault(find(u), set()).add(u)
    return sorted((frozenset(g) for g in groups.values()), key=lambda g: (-len(g), min(g)))


def undirected_adjacency(nodes, edges):
    adj = {u: set() for u in nodes}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def local_clustering(nodes, edges):
    """C_i as exact fractions by enumerating every neighbour pair."""
    adj = undirected_adjacency(nodes, edges)
    out = {}
    for u in nodes:
        nb = sorted(adj[u])
        k = len(nb)
        if k < 2:
            out[u] = Fraction(0)
            continue
        links = sum(1 for a, b in itertools.combinations(nb, 2) if b in adj[a])
        out[u] = Fraction(2 * links, k * (k - 1))
    return out


def triangles(nodes, edges):
    adj = undirected_adjacency(nodes, edges)
    return sum(1 for a, b, c in itertools.combinations(sorted(nodes), 3)
               if b in adj[a] and c in adj[a] and c in adj[b])


def path_stats(nodes, edges, directed=False, largest_only=True):
    """(mean distance over connected ordered pairs, max distance) within the chosen scope."""
    comps = union_find_components(nodes, edges)
    scope = set(comps[0]) if (largest_only and comps) else set(nodes)
    sub_edges = [(u, v) for u, v in edges if u in scope and v in scope]
    dist = floyd_warshall(sorted(scope), sub_edges, directed)
    ds = [dist[u][v] for u in scope for v in scope if u != v and dist[u][v] != INF]
    if not ds:
        return None, None
    return Fraction(sum(ds), len(ds)), max(ds)


def naive_build(words, linking, directed, weighted):
    """Nested loops over syllable positions, no shared code with the builder."""
    nodes, edges = set(), {}
    for syl in words:
        nodes.update(syl)
        seen_pairs = set()
        if linking == "co_occurrence":
            first = {}
            for i, s in enumerate(syl):
                first.setdefault(s, i)
            for i in range(len(syl)):
                for j in range(len(syl)):
                    a, b = syl[i], syl[j]
                    if a == b or first[a] != i or first[b] != j or i >= j:
                        continue
                    key = (a, b) if directed else tuple(sorted((a, b)))
                    if key in seen_pairs:
                        continue
                    seen_pairs.add(key)
                    edges[key] = edges.get(key, 0) + 1
        else:
            for i in range(len(syl) - 1):
                a, b = syl[i], syl[i + 1]
                if a == b:
                    continue
                key = (a, b) if directed else tuple(sorted((a, b)))
                edges[key] = edges.get(key, 0) + 1
    if not weighted:
        edges = dict.fromkeys(edges, 1)
    return nodes, edges


def random_graph(rng: random.Random, n_max=50, directed=False):
    n = rng.randint(1, n_max)
    p = rng.choice([0.02, 0.05, 0.1, 0.2, 0.5])
    nodes = list(range(n))
    if directed:
        edges = [(u, v) for u in nodes for v in nodes if u != v and rng.random() < p]
    else:
        edges = [(u, v) for u, v in itertools.combinations(nodes, 2) if rng.random() < p]
    return nodes, edges
