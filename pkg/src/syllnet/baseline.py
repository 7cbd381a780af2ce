"""Erdős–Rényi G(n, M) baselines matched to a network's N and K."""

from __future__ import annotations

import math
import random
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

from .errors import EmptyNetwork, TooManyEdges, Undefined
from .metrics import NetworkMetrics, analyze
from .netbuild import SyllableNetwork, to_undirected_unweighted

DEFAULT_SAMPLES = 30
DEFAULT_SEED = 42


@dataclass(frozen=True)
class ERConfig:
    n: int
    k: int
    samples: int = DEFAULT_SAMPLES
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise ValueError("n and k must be non-negative")
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.k > self.n * (self.n - 1) // 2:
            raise TooManyEdges(self.n, self.k)


def pair_from_index(m: int, n: int) -> tuple[int, int]:
    """Inverse of the row-major enumeration of pairs i < j over n nodes."""
    # row i starts at offset i*(2n - i - 1)/2; solve for the largest such i <= m
    b = 2 * n - 1
    i = (b - math.isqrt(b * b - 8 * m)) // 2
    while i > 0 and i * (b - i) // 2 > m:
        i -= 1
    while (i + 1) * (b - i - 1) // 2 <= m:
        i += 1
    j = m - i * (b - i) // 2 + i + 1
    return i, j


def _sample_indices(rng: random.Random, population: int, k: int) -> list[int]:
    # Floyd's algorithm: k uniform distinct draws without materializing the population
    chosen = set()
    for top in range(population - k, population):
        t = rng.randrange(top + 1)
        chosen.add(top if t in chosen else t)
    return sorted(chosen)


def generate_er(config: ERConfig, sample_index: int = 0) -> SyllableNetwork:
    """One G(n, M) sample with nodes ``0..n-1`` and exactly ``k`` edges.

    The sample depends only on ``(seed, sample_index, n, k)``.
    """
    rng = random.Random(f"syllnet-er:{config.seed}:{sample_index}")
    population = config.n * (config.n - 1) // 2
    net = SyllableNetwork(provenance=[f"er(n={config.n},k={config.k},seed={config.seed},i={sample_index})"])
    net.nodes = set(range(config.n))
    net.edges = dict.fromkeys((pair_from_index(m, config.n)
                               for m in _sample_indices(rng, population, config.k)), 1)
    return net


def expected_er_clustering(n: int, k: int) -> float:
    """Edge density 2K/(N(N-1)), the expected clustering of a G(n, M) graph."""
    if n < 2:
        raise Undefined("expected clustering needs N >= 2")
    return 2 * k / (n * (n - 1))


@dataclass
class ComparisonReport:
    real: NetworkMetrics
    er_mean: NetworkMetrics
    er_stddev: dict
    clustering_ratio: float | None
    expected_er_clustering: float
    samples: int
    seed: int
    real_undirected: NetworkMetrics | None = None
    er_clustering_samples: list = field(default_factory=list)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["real"] = self.real.to_dict()
        d["er_mean"] = self.er_mean.to_dict()
        d["real_undirected"] = self.real_undirected.to_dict() if self.real_undirected else None
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ComparisonReport":
        ru = d.get("real_undirected")
        return cls(
            real=NetworkMetrics.from_dict(d["real"]),
            er_mean=NetworkMetrics.from_dict(d["er_mean"]),
            er_stddev=dict(d["er_stddev"]),
            clustering_ratio=d["clustering_ratio"],
            expected_er_clustering=d["expected_er_clustering"],
            samples=d["samples"],
            seed=d["seed"],
            real_undirected=NetworkMetrics.from_dict(ru) if ru else None,
            er_clustering_samples=list(d.get("er_clustering_samples", [])),
        )


_AVERAGED = ("avg_degree", "avg_path_length", "diameter", "avg_clustering", "components", "giant_fraction")


def _aggregate(samples: list[NetworkMetrics]):
    mean, std = {}, {}
    for name in _AVERAGED:
        values = [getattr(m, name) for m in samples if getattr(m, name) is not None]
        if not values:
            mean[name] = std[name] = None
            continue
        mean[name] = statistics.fmean(values)
        std[name] = statistics.stdev(values) if len(values) > 1 else 0.0
    first = samples[0]
    er_mean = NetworkMetrics(n=first.n, k=first.k, conventions=dict(first.conventions), **mean)
    return er_mean, std


def compare_with_er(net: SyllableNetwork, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED,
                    threads: int = 1, **analyze_kwargs) -> ComparisonReport:
    """Metrics of ``net`` next to the mean and spread over ``samples`` matched ER graphs.

    The ER graphs share N and K with ``net`` (K as stored, so a directed
    network is matched by its directed edge count).
    """
    if net.n == 0:
        raise EmptyNetwork()
    real = analyze(net, **analyze_kwargs)
    config = ERConfig(net.n, net.k, samples, seed)

    def one(i):
        return analyze(generate_er(config, i), **analyze_kwargs)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            er = list(pool.map(one, range(samples)))
    else:
        er = [one(i) for i in range(samples)]
    er_mean, er_std = _aggregate(er)
    ratio = real.avg_clustering / er_mean.avg_clustering if er_mean.avg_clustering > 0 else None
    return ComparisonReport(
        real=real,
        er_mean=er_mean,
        er_stddev=er_std,
        clustering_ratio=ratio,
        expected_er_clustering=expected_er_clustering(net.n, net.k) if net.n >= 2 else 0.0,
        samples=samples,
        seed=seed,
        real_undirected=analyze(to_undirected_unweighted(net), **analyze_kwargs) if net.directed else None,
        er_clustering_samples=[m.avg_clustering for m in er],
    )
