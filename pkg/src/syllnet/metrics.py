"""Small-world measures for syllable networks.

All measures are topological: edge weights are ignored.  Conventions where
more than one reading is reasonable are selectable and recorded in
:attr:`NetworkMetrics.conventions`:

* average degree is 2K/N for undirected and K/N for directed networks; K/N
  is always reported alongside under ``avg_degree_k_over_n``;
* average path length L averages hop distances over connected ordered pairs
  of the largest (weakly) connected component (``"connected"``), or uses the
  per-node mean over all N nodes including the zero self-distance
  (``"literal"``);
* diameter D is the largest hop distance between connected pairs;
* average clustering averages C_i over all nodes, nodes of degree < 2
  contributing 0 (``"all_nodes"``), or over degree >= 2 nodes only
  (``"exclude_low_degree"``).

Distances in directed networks follow edge direction.  Clustering of a
directed network is taken on its undirected, unweighted projection.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from .errors import EmptyNetwork, NodeNotFound, RequiresUndirected, Undefined
from .netbuild import SyllableNetwork, to_undirected_unweighted

PATH_CONVENTIONS = ("connected", "literal")
CLUSTERING_MODES = ("all_nodes", "exclude_low_degree")
PATH_SCOPES = ("largest", "all")
DEGREE_CONVENTIONS = ("standard", "k_over_n")

# Upper bound on the bytes gathered per step of the bit-parallel BFS.
_GATHER_BYTES = 64 << 20


def average_degree(net: SyllableNetwork) -> float:
    if net.n == 0:
        raise EmptyNetwork()
    if net.directed:
        return net.k / net.n
    return 2 * net.k / net.n


def connected_components(net: SyllableNetwork) -> list[list]:
    """Node partition (weak connectivity when directed), largest first.

    Each component is sorted; equal-sized components are ordered by their
    smallest node.
    """
    adj = net.neighbours()
    seen = set()
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    comps.sort(key=lambda c: (-len(c), c[0]))
    return comps


def shortest_paths_from(net: SyllableNetwork, source) -> dict:
    """Hop distances from ``source`` by breadth-first search.

    Nodes that cannot be reached are absent from the result.  Directed
    networks are searched along edge direction.
    """
    if source not in net.nodes:
        raise NodeNotFound(source)
    adj = net.successors()
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


@dataclass
class DistanceSummary:
    """Aggregated hop distances over one set of nodes.

    ``distance_sum[i]`` and ``reachable[i]`` are the sum of d_ij and the
    number of j != i reachable from ``nodes[i]``; ``eccentricity[i]`` is the
    largest such d_ij.
    """

    nodes: list
    distance_sum: np.ndarray
    reachable: np.ndarray
    eccentricity: np.ndarray
    component_sizes: list = field(default_factory=list)

    @property
    def pairs(self) -> int:
        return int(self.reachable.sum())

    @property
    def total(self) -> int:
        return int(self.distance_sum.sum())

    @property
    def max_distance(self) -> int:
        return int(self.eccentricity.max()) if len(self.nodes) else 0

    def node_average(self, literal: bool = False) -> dict:
        """d_i per node: over reachable nodes, or divided by the node count when ``literal``."""
        n = len(self.nodes)
        out = {}
        for u, s, r in zip(self.nodes, self.distance_sum.tolist(), self.reachable.tolist()):
            if literal:
                out[u] = s / n
            else:
                out[u] = s / r if r else 0.0
        return out


def _csr(nodes: list, adj: dict):
    index = {u: i for i, u in enumerate(nodes)}
    indptr = np.zeros(len(nodes) + 1, dtype=np.int64)
    cols = []
    for i, u in enumerate(nodes):
        row = sorted(index[v] for v in adj[u] if v in index)
        cols.extend(row)
        indptr[i + 1] = len(cols)
    return indptr, np.asarray(cols, dtype=np.int64)


def _all_sources_bfs(indptr: np.ndarray, indices: np.ndarray, n: int):
    """Breadth-first search from every node at once using bitsets.

    Column i of ``reach`` holds the nodes reachable from i within the current
    number of hops; one level ORs together the columns of i's successors.
    """
    words = max(1, (n + 63) // 64)
    reach = np.zeros((words, n), dtype=np.uint64)
    ids = np.arange(n)
    reach[ids >> 6, ids] = np.left_shift(np.uint64(1), (ids & 63).astype(np.uint64))

    dist_sum = np.zeros(n, dtype=np.int64)
    reachable = np.zeros(n, dtype=np.int64)
    ecc = np.zeros(n, dtype=np.int64)
    has_out = np.diff(indptr) > 0
    starts = indptr[:-1][has_out]
    if len(indices) == 0:
        return dist_sum, reachable, ecc
    block = max(1, _GATHER_BYTES // (8 * len(indices)))

    level = 0
    while True:
        level += 1
        nxt = reach.copy()
        for r0 in range(0, words, block):
            r1 = min(words, r0 + block)
            gathered = reach[r0:r1][:, indices]
            nxt[r0:r1, has_out] |= np.bitwise_or.reduceat(gathered, starts, axis=1)
        fresh = np.bitwise_count(nxt & ~reach).sum(axis=0, dtype=np.int64)
        if not fresh.any():
            break
        dist_sum += level * fresh
        reachable += fresh
        ecc[fresh > 0] = level
        reach = nxt
    return dist_sum, reachable, ecc


def distance_summary(net: SyllableNetwork, scope: str = "largest") -> DistanceSummary:
    """All-pairs hop-distance aggregates for the largest component or the whole network."""
    if scope not in PATH_SCOPES:
        raise ValueError(f"scope must be one of {PATH_SCOPES}")
    comps = connected_components(net)
    sizes = [len(c) for c in comps]
    if not comps:
        nodes = []
    elif scope == "largest":
        nodes = comps[0]
    else:
        nodes = sorted(net.nodes)
    indptr, indices = _csr(nodes, net.successors())
    dist_sum, reachable, ecc = _all_sources_bfs(indptr, indices, len(nodes))
    return DistanceSummary(nodes, dist_sum, reachable, ecc, sizes)


def average_path_length(net: SyllableNetwork, convention: str = "connected",
                        scope: str = "largest", summary: DistanceSummary | None = None) -> float:
    """Mean shortest-path hop distance L.

    ``"connected"`` divides the distance total by the number of connected
    ordered pairs (path a-b-c gives 4/3).  ``"literal"`` averages the per-node
    sums divided by the node count, self included (a-b-c gives 8/9).
    """
    if convention not in PATH_CONVENTIONS:
        raise ValueError(f"convention must be one of {PATH_CONVENTIONS}")
    if net.n == 0:
        raise EmptyNetwork()
    s = summary or distance_summary(net, scope)
    if s.pairs == 0:
        raise Undefined("average path length needs at least one connected pair")
    if convention == "connected":
        return s.total / s.pairs
    n = len(s.nodes)
    return s.total / (n * n)


def diameter(net: SyllableNetwork, scope: str = "largest", summary: DistanceSummary | None = None) -> int:
    """Largest hop distance between connected pairs."""
    if net.n == 0:
        raise EmptyNetwork()
    s = summary or distance_summary(net, scope)
    if s.pairs == 0:
        raise Undefined("diameter needs at least one connected pair")
    return s.max_distance


@dataclass(frozen=True)
class NodeClustering:
    node: object
    degree: int
    links: int  # edges among the node's neighbours

    @property
    def fraction(self) -> Fraction:
        if self.degree < 2:
            return Fraction(0)
        return Fraction(2 * self.links, self.degree * (self.degree - 1))

    @property
    def value(self) -> float:
        if self.degree < 2:
            return 0.0
        return 2 * self.links / (self.degree * (self.degree - 1))


def _require_undirected(net: SyllableNetwork) -> None:
    if net.directed:
        raise RequiresUndirected("clustering needs an undirected network; "
                                 "apply to_undirected_unweighted first")


def clustering_local(net: SyllableNetwork, node) -> NodeClustering:
    _require_undirected(net)
    if node not in net.nodes:
        raise NodeNotFound(node)
    adj = net.neighbours()
    nbrs = adj[node]
    links = sum(len(adj[v] & nbrs) for v in nbrs) // 2
    return NodeClustering(node, len(nbrs), links)


def clustering_all(net: SyllableNetwork) -> dict:
    """NodeClustering for every node, counting triangles once per edge."""
    _require_undirected(net)
    adj = net.neighbours()
    tri = dict.fromkeys(adj, 0)
    for u, v in net.edges:
        common = len(adj[u] & adj[v])
        tri[u] += common
        tri[v] += common
    return {u: NodeClustering(u, len(adj[u]), tri[u] // 2) for u in adj}


def clustering_average(net: SyllableNetwork, mode: str = "all_nodes") -> float:
    if mode not in CLUSTERING_MODES:
        raise ValueError(f"mode must be one of {CLUSTERING_MODES}")
    _require_undirected(net)
    if net.n == 0:
        raise EmptyNetwork()
    values = [c.value for c in clustering_all(net).values()
              if mode == "all_nodes" or c.degree >= 2]
    if not values:
        return 0.0
    return math.fsum(values) / len(values)


@dataclass
class DegreeDistribution:
    counts: dict  # degree -> number of nodes

    @property
    def n(self) -> int:
        return sum(self.counts.values())

    def rows(self) -> list[tuple[int, int]]:
        return sorted((d, c) for d, c in self.counts.items() if c > 0)

    def loglog_points(self) -> list[tuple[float, float]]:
        """(ln degree, ln count), skipping zero degrees and empty bins."""
        return [(math.log(d), math.log(c)) for d, c in self.rows() if d > 0]

    def ols_fit(self):
        """Least-squares line through the log-log points: (slope, intercept, r2).

        Indicative only; this is not a power-law estimator.  Returns ``None``
        with fewer than two distinct degrees.
        """
        pts = self.loglog_points()
        if len(pts) < 2:
            return None
        x = np.array([p[0] for p in pts])
        y = np.array([p[1] for p in pts])
        slope, intercept = np.polyfit(x, y, 1)
        resid = y - (slope * x + intercept)
        ss_tot = float(((y - y.mean()) ** 2).sum())
        r2 = 1.0 - float((resid ** 2).sum()) / ss_tot if ss_tot > 0 else 1.0
        return float(slope), float(intercept), r2


def degree_distribution(net: SyllableNetwork) -> DegreeDistribution:
    return DegreeDistribution(dict(Counter(net.degrees().values())))


def top_k_by_degree(net: SyllableNetwork, k: int) -> list[tuple]:
    """Highest-degree nodes, ties broken by ascending node order."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return sorted(net.degrees().items(), key=lambda kv: (-kv[1], kv[0]))[:k]


@dataclass
class NetworkMetrics:
    n: int
    k: int
    avg_degree: float
    avg_path_length: float | None
    diameter: int | None
    avg_clustering: float
    components: int
    giant_fraction: float
    conventions: dict = field(default_factory=dict)

    FIELDS = ("n", "k", "avg_degree", "avg_path_length", "diameter",
              "avg_clustering", "components", "giant_fraction")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "NetworkMetrics":
        return cls(**{f: data[f] for f in cls.FIELDS}, conventions=dict(data.get("conventions", {})))


def analyze(net: SyllableNetwork, path_convention: str = "connected",
            clustering_mode: str = "all_nodes", scope: str = "largest",
            degree_convention: str = "standard") -> NetworkMetrics:
    """Compute every network measure for ``net``.

    ``degree_convention="k_over_n"`` reports K/N as ``avg_degree`` even for
    undirected networks.
    """
    if degree_convention not in DEGREE_CONVENTIONS:
        raise ValueError(f"degree_convention must be one of {DEGREE_CONVENTIONS}")
    if net.n == 0:
        raise EmptyNetwork()
    summary = distance_summary(net, scope)
    try:
        L = average_path_length(net, path_convention, scope, summary)
        D = diameter(net, scope, summary)
    except Undefined:
        L = D = None
    projected = to_undirected_unweighted(net) if net.directed else net
    sizes = summary.component_sizes
    conventions = {
        "avg_degree": "K/N" if net.directed or degree_convention == "k_over_n" else "2K/N",
        "avg_degree_k_over_n": net.k / net.n,
        "path_length": path_convention,
        "path_scope": scope,
        "distances": "directed" if net.directed else "undirected",
        "diameter": "max_connected_pair_distance",
        "clustering": clustering_mode,
        "clustering_graph": "undirected_projection" if net.directed else "as_is",
        "weights": "ignored",
    }
    return NetworkMetrics(
        n=net.n,
        k=net.k,
        avg_degree=net.k / net.n if degree_convention == "k_over_n" else average_degree(net),
        avg_path_length=L,
        diameter=D,
        avg_clustering=clustering_average(projected, clustering_mode),
        components=len(sizes),
        giant_fraction=sizes[0] / net.n,
        conventions=conventions,
    )
