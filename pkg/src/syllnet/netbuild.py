"""Syllable network construction, merging, transformation and filtering.

A network is built from syllabified words under one of eight variants:
the linking rule (every syllable pair in a word, or only adjacent ones)
times directed/undirected times weighted/unweighted.  Self-pairs such as the
two ``ma`` of ``ma·ma`` never become edges.
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import VariantMismatch

Node = Hashable
Edge = tuple  # (source, target); canonical (min, max) order when undirected


class Linking(str, enum.Enum):
    CO_OCCURRENCE = "co_occurrence"
    FIRST_NEIGHBOUR = "first_neighbour"

    @classmethod
    def parse(cls, value: "str | Linking") -> "Linking":
        if isinstance(value, cls):
            return value
        aliases = {"co": cls.CO_OCCURRENCE, "fn": cls.FIRST_NEIGHBOUR}
        return aliases.get(value) or cls(value)


@dataclass(frozen=True, order=True)
class NetworkVariant:
    linking: Linking = Linking.CO_OCCURRENCE
    directed: bool = False
    weighted: bool = False

    def __post_init__(self):
        object.__setattr__(self, "linking", Linking.parse(self.linking))

    @property
    def name(self) -> str:
        return "{}/{}/{}".format(
            self.linking.value,
            "directed" if self.directed else "undirected",
            "weighted" if self.weighted else "unweighted",
        )

    def __str__(self):
        return self.name


ALL_VARIANTS = tuple(
    NetworkVariant(link, d, w)
    for link in Linking for d in (False, True) for w in (False, True)
)
UNDIRECTED_UNWEIGHTED = NetworkVariant(Linking.CO_OCCURRENCE, False, False)


def edge_key(u, v, directed: bool) -> Edge:
    if directed or u <= v:
        return (u, v)
    return (v, u)


@dataclass
class SyllableNetwork:
    """Simple graph over syllables.

    ``edges`` maps ``(source, target)`` to a positive integer weight.  For
    undirected networks the key is the sorted pair, so each unordered pair is
    stored once.  Weights are all 1 when the variant is unweighted.
    """

    variant: NetworkVariant = UNDIRECTED_UNWEIGHTED
    nodes: set = field(default_factory=set)
    edges: dict = field(default_factory=dict)
    provenance: list = field(default_factory=list)

    @property
    def directed(self) -> bool:
        return self.variant.directed

    @property
    def weighted(self) -> bool:
        return self.variant.weighted

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def k(self) -> int:
        return len(self.edges)

    N = n
    K = k

    def add_node(self, u) -> None:
        self.nodes.add(u)

    def add_edge(self, u, v, weight: int = 1) -> None:
        """Add ``weight`` to edge u-v (or set it to 1 when unweighted); self-pairs are ignored."""
        self.nodes.add(u)
        self.nodes.add(v)
        if u == v:
            return
        key = edge_key(u, v, self.directed)
        if self.weighted:
            self.edges[key] = self.edges.get(key, 0) + weight
        else:
            self.edges[key] = 1

    def has_edge(self, u, v) -> bool:
        return edge_key(u, v, self.directed) in self.edges

    def neighbours(self) -> dict:
        """Undirected adjacency sets (direction is dropped for directed networks)."""
        adj = {u: set() for u in self.nodes}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def successors(self) -> dict:
        """Out-neighbour sets; equal to :meth:`neighbours` for undirected networks."""
        if not self.directed:
            return self.neighbours()
        adj = {u: set() for u in self.nodes}
        for u, v in self.edges:
            adj[u].add(v)
        return adj

    def degrees(self) -> dict:
        """Degree per node; in + out for directed networks."""
        deg = dict.fromkeys(self.nodes, 0)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def sorted_nodes(self) -> list:
        return sorted(self.nodes)

    def sorted_edges(self) -> list:
        return sorted(self.edges.items())

    def copy(self) -> "SyllableNetwork":
        return SyllableNetwork(self.variant, set(self.nodes), dict(self.edges), list(self.provenance))

    def same_graph(self, other: "SyllableNetwork") -> bool:
        return (self.directed == other.directed and self.weighted == other.weighted
                and self.nodes == other.nodes and self.edges == other.edges)

    def check(self) -> None:
        """Assert the structural invariants; used by tests and on import."""
        for (u, v), w in self.edges.items():
            assert u != v, f"self-loop on {u!r}"
            assert u in self.nodes and v in self.nodes, f"dangling edge {u!r}-{v!r}"
            assert isinstance(w, int) and w >= 1, f"bad weight {w!r}"
            if not self.weighted:
                assert w == 1, "unweighted network carries a weight != 1"
            if not self.directed:
                assert u <= v, f"undirected edge {u!r}-{v!r} not canonical"

    def __repr__(self):
        return f"SyllableNetwork({self.variant}, N={self.n}, K={self.k})"


def word_pairs(syllables: Sequence[str], variant: NetworkVariant) -> Iterator[tuple]:
    """The syllable pairs one word contributes, before weighting.

    Co-occurrence: every pair of distinct syllables, ordered by first
    occurrence in the word, each pair once.  First-neighbour: each adjacent
    pair (i, i+1), repeated as often as it occurs.
    """
    if variant.linking is Linking.CO_OCCURRENCE:
        distinct = list(dict.fromkeys(syllables))
        yield from itertools.combinations(distinct, 2)
    else:
        for a, b in zip(syllables, syllables[1:]):
            if a != b:
                yield a, b


def build_network(words: Iterable, variant: NetworkVariant = UNDIRECTED_UNWEIGHTED,
                  provenance: Sequence[str] = ()) -> SyllableNetwork:
    """Build a syllable network from a stream of syllabified words.

    ``words`` may hold :class:`~syllnet.syllabifier.SyllabifiedWord` objects or
    plain syllable sequences.  Every occurrence in the stream counts, so a
    word seen twice doubles its contribution to a weighted network.
    """
    net = SyllableNetwork(variant, provenance=list(provenance))
    counts = Counter()
    directed = variant.directed
    for word in words:
        syllables = getattr(word, "syllables", word)
        net.nodes.update(syllables)
        for a, b in word_pairs(syllables, variant):
            counts[edge_key(a, b, directed)] += 1
    if variant.weighted:
        net.edges = dict(counts)
    else:
        net.edges = dict.fromkeys(counts, 1)
    return net


def merge(networks: Sequence[SyllableNetwork]) -> SyllableNetwork:
    """Union of networks sharing one variant; weights add for weighted variants."""
    networks = list(networks)
    if not networks:
        return SyllableNetwork()
    variant = networks[0].variant
    for other in networks[1:]:
        if other.variant != variant:
            raise VariantMismatch(f"cannot merge {variant} with {other.variant}")
    out = SyllableNetwork(variant)
    for net in networks:
        out.nodes |= net.nodes
        for key, w in net.edges.items():
            out.edges[key] = out.edges.get(key, 0) + w if variant.weighted else 1
        out.provenance.extend(net.provenance)
    return out


def to_undirected_unweighted(net: SyllableNetwork) -> SyllableNetwork:
    """Collapse direction and weights. K never increases; idempotent."""
    variant = NetworkVariant(net.variant.linking, False, False)
    edges = dict.fromkeys((edge_key(u, v, False) for u, v in net.edges), 1)
    return SyllableNetwork(variant, set(net.nodes), edges, list(net.provenance))


def filter_min_degree(net: SyllableNetwork, k_min: int, iterative: bool = False) -> SyllableNetwork:
    """Drop nodes with degree below ``k_min`` together with their edges.

    With ``iterative`` the removal repeats until no node falls below the
    threshold, which yields the ``k_min``-core.  Degree is in + out for
    directed networks.
    """
    if k_min < 1:
        raise ValueError("k_min must be a positive integer")
    deg = net.degrees()
    if not iterative:
        keep = {u for u, d in deg.items() if d >= k_min}
    else:
        incident = defaultdict(list)
        for u, v in net.edges:
            incident[u].append(v)
            incident[v].append(u)
        removed = set()
        queue = deque(u for u, d in deg.items() if d < k_min)
        removed.update(queue)
        while queue:
            u = queue.popleft()
            for v in incident[u]:
                if v in removed:
                    continue
                deg[v] -= 1
                if deg[v] < k_min:
                    removed.add(v)
                    queue.append(v)
        keep = net.nodes - removed
    edges = {(u, v): w for (u, v), w in net.edges.items() if u in keep and v in keep}
    return SyllableNetwork(net.variant, keep, edges, list(net.provenance))
