"""Syllable networks from text: syllabify, build, measure, compare with random graphs."""

__version__ = "0.1.0"

from .baseline import ComparisonReport, ERConfig, compare_with_er, expected_er_clustering, generate_er
from .corpus import RawDocument, Token, load_corpus, normalize, sample_corpus_path, tokenize
from .metrics import (DegreeDistribution, NetworkMetrics, NodeClustering, analyze, average_degree,
                      average_path_length, clustering_average, clustering_local, connected_components,
                      degree_distribution, diameter, shortest_paths_from, top_k_by_degree)
from .netbuild import (ALL_VARIANTS, Linking, NetworkVariant, SyllableNetwork, build_network,
                       filter_min_degree, merge, to_undirected_unweighted)
from .report_io import GraphFileFormat, TableSpec, emit_degree_distribution, emit_table, export_graph, import_graph
from .syllabifier import RuleSet, SyllabifiedWord, find_nuclei, segment_graphemes, syllabify
