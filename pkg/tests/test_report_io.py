import math
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from helpers import make_net, star, triangle
from syllnet.baseline import compare_with_er
from syllnet.errors import GraphParseError, MissingInput
from syllnet.metrics import DegreeDistribution, degree_distribution
from syllnet.netbuild import ALL_VARIANTS, Linking, NetworkVariant, SyllableNetwork, build_network
from syllnet.report_io import (GraphFileFormat, TableSpec, dumps_json, emit_degree_distribution, emit_table,
                               export_graph, import_graph, loglog_path, read_degree_distribution, read_json,
                               write_json, write_table)

DATA = Path(__file__).parent / "data"
FORMATS = list(GraphFileFormat)
SUFFIX = {GraphFileFormat.GRAPHML: ".graphml", GraphFileFormat.GEXF: ".gexf", GraphFileFormat.EDGE_CSV: ".csv"}


def syllable_star():
    return make_net(["ka", "ba", "da", "ga", "ma", "na"], [("ka", s) for s in ("ba", "da", "ga", "ma", "na")])


def assert_same(a: SyllableNetwork, b: SyllableNetwork):
    assert a.nodes == b.nodes
    assert a.edges == b.edges
    assert a.directed == b.directed and a.weighted == b.weighted
    assert a.variant == b.variant


# graph files

def test_format_from_suffix():
    assert GraphFileFormat.from_path("x.graphml") is GraphFileFormat.GRAPHML
    assert GraphFileFormat.from_path("x.gexf") is GraphFileFormat.GEXF
    assert GraphFileFormat.from_path("x.csv") is GraphFileFormat.EDGE_CSV
    with pytest.raises(ValueError):
        GraphFileFormat.from_path("x.png")


def test_triangle_csv_has_three_rows(tmp_path):
    export_graph(triangle(), "edge_csv", tmp_path / "t.csv")
    lines = (tmp_path / "t.csv").read_text(encoding="utf-8").splitlines()
    assert lines[1] == "source,target,weight"
    assert lines[2:] == ["a,b,1", "a,c,1", "b,c,1"]


@pytest.mark.parametrize("fmt", FORMATS)
def test_directed_weighted_round_trip(tmp_path, fmt):
    net = make_net(["ča", "đu"], [("ča", "đu"), ("đu", "ča")], directed=True, weighted=True, weights=[3, 1],
                   linking=Linking.FIRST_NEIGHBOUR)
    path = tmp_path / ("g" + SUFFIX[fmt])
    export_graph(net, fmt, path)
    assert_same(import_graph(path), net)


@pytest.mark.parametrize("fmt", FORMATS)
def test_empty_network_round_trip(tmp_path, fmt):
    path = tmp_path / ("e" + SUFFIX[fmt])
    export_graph(SyllableNetwork(), fmt, path)
    back = import_graph(path)
    assert back.n == 0 and back.k == 0


@pytest.mark.parametrize("fmt", FORMATS)
def test_isolated_nodes_survive(tmp_path, fmt):
    net = make_net(["a", "b", "c"], [("a", "b")])
    path = tmp_path / ("i" + SUFFIX[fmt])
    export_graph(net, fmt, path)
    assert_same(import_graph(path), net)


def test_three_row_csv_is_triangle():
    assert_same(import_graph(DATA / "star.csv"), syllable_star())
    # a foreign file without the metadata line is read as undirected and unweighted
    assert not import_graph(DATA / "star.csv").directed


def test_empty_csv_is_an_error(tmp_path):
    f = tmp_path / "empty.csv"
    f.write_text("", encoding="utf-8")
    with pytest.raises(GraphParseError, match="line 1"):
        import_graph(f)


@pytest.mark.parametrize("body, fragment", [
    ("source,target,weight\na,b,x\n", "line 2"),
    ("source,target,weight\na,b,1\nb,a,1\n", "duplicate"),
    ("source,target,weight\na,a,1\n", "self-loop"),
    ("source,target,weight\na,b,1,9\n", "line 2"),
    ("src,dst\n", "line 1"),
])
def test_malformed_csv_reports_context(tmp_path, body, fragment):
    f = tmp_path / "bad.csv"
    f.write_text(body, encoding="utf-8")
    with pytest.raises(GraphParseError, match=fragment):
        import_graph(f)


def test_malformed_xml_reports_position(tmp_path):
    f = tmp_path / "bad.graphml"
    f.write_text("<graphml><graph>\n<node id='a'>\n</graphml>", encoding="utf-8")
    with pytest.raises(GraphParseError, match="line"):
        import_graph(f)


def test_wrong_root_element(tmp_path):
    f = tmp_path / "x.gexf"
    f.write_text("<graphml/>", encoding="utf-8")
    with pytest.raises(GraphParseError, match="gexf"):
        import_graph(f)


def test_missing_directory_surfaces_path(tmp_path):
    with pytest.raises(OSError):
        export_graph(triangle(), "graphml", tmp_path / "nope" / "x.graphml")


@pytest.mark.parametrize("fmt", [GraphFileFormat.GRAPHML, GraphFileFormat.GEXF])
def test_files_open_in_networkx(tmp_path, fmt):
    net = make_net(["ma", "te", "ti"], [("ma", "te"), ("te", "ti")], directed=True, weighted=True,
                   weights=[2, 5])
    path = tmp_path / ("n" + SUFFIX[fmt])
    export_graph(net, fmt, path)
    g = nx.read_graphml(path) if fmt is GraphFileFormat.GRAPHML else nx.read_gexf(path)
    assert g.is_directed()
    assert set(g.nodes) == {"ma", "te", "ti"}
    assert {(u, v): int(d["weight"]) for u, v, d in g.edges(data=True)} == {("ma", "te"): 2, ("te", "ti"): 5}


def test_networkx_graphml_is_readable(tmp_path):
    g = nx.Graph()
    g.add_edge("lo", "pa", weight=3)
    g.add_node("ri")
    nx.write_graphml(g, tmp_path / "nx.graphml")
    net = import_graph(tmp_path / "nx.graphml")
    assert net.nodes == {"lo", "pa", "ri"}
    assert net.edges == {("lo", "pa"): 3}
    assert net.weighted and not net.directed


@settings(max_examples=25, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(words=st.lists(st.lists(st.sampled_from(["ma", "če", "lju", "nja", "dže", "ri"]), min_size=1, max_size=5),
                      max_size=10),
       variant=st.sampled_from(ALL_VARIANTS), fmt=st.sampled_from(FORMATS))
def test_round_trip_property(tmp_path, words, variant, fmt):
    net = build_network(words, variant)
    path = tmp_path / ("p" + SUFFIX[fmt])
    export_graph(net, fmt, path)
    assert_same(import_graph(path), net)


@pytest.mark.parametrize("fmt", FORMATS)
def test_export_is_byte_stable(tmp_path, fmt):
    net = build_network([["ma", "te", "ma", "ti", "ka"], ["ka", "ma"]], NetworkVariant(Linking.CO_OCCURRENCE, True, True))
    a, b = tmp_path / ("a" + SUFFIX[fmt]), tmp_path / ("b" + SUFFIX[fmt])
    export_graph(net, fmt, a)
    export_graph(net.copy(), fmt, b)
    assert a.read_bytes() == b.read_bytes()


# JSON

def test_json_round_trip_and_non_finite(tmp_path):
    write_json({"x": 1.5, "y": math.nan, "s": "čđ"}, tmp_path / "m.json")
    text = (tmp_path / "m.json").read_text(encoding="utf-8")
    assert "čđ" in text
    assert read_json(tmp_path / "m.json") == {"x": 1.5, "y": None, "s": "čđ"}
    assert dumps_json({"b": 1, "a": 2}) == dumps_json({"b": 1, "a": 2})


# degree distribution

def test_single_degree_row(tmp_path):
    emit_degree_distribution(DegreeDistribution({2: 3}), tmp_path / "d.tsv")
    assert (tmp_path / "d.tsv").read_text(encoding="utf-8").splitlines() == ["degree\tcount", "2\t3"]


def test_rows_ascending_and_loglog_companion(tmp_path):
    companion = emit_degree_distribution(DegreeDistribution({4: 1, 1: 4}), tmp_path / "d.tsv")
    assert (tmp_path / "d.tsv").read_text(encoding="utf-8").splitlines()[1:] == ["1\t4", "4\t1"]
    assert companion == loglog_path(tmp_path / "d.tsv") == tmp_path / "d.loglog.tsv"
    lines = companion.read_text(encoding="utf-8").splitlines()
    assert lines[1] == f"{0.0:.6f}\t{math.log(4):.6f}"
    assert lines[2] == f"{math.log(4):.6f}\t{0.0:.6f}"
    assert lines[-1].startswith("# ols_slope=-1.000000")
    assert "r2=1.000000" in lines[-1]


def test_counts_sum_to_n_on_reparse(tmp_path):
    net = build_network([["ma", "te", "ma", "ti", "ka"], ["ka", "ko", "la"], ["pa", "ra"]])
    emit_degree_distribution(degree_distribution(net), tmp_path / "d.tsv")
    back = read_degree_distribution(tmp_path / "d.tsv")
    assert back.n == net.n
    assert back.counts == degree_distribution(net).counts


# tables

def test_table2_on_triangle():
    report = compare_with_er(triangle(), samples=2)
    table = emit_table("table2", {"comparisons": {"T": report}})
    assert table.header == ["", "T", "ER_T"]
    assert [row[:2] for row in table.rows] == [["N", "3"], ["<k>", "2.00"], ["D", "1"], ["L", "1.000"],
                                               ["C", "1.000"]]
    # the ER twin of a triangle is the triangle itself
    assert [row[2] for row in table.rows] == ["3", "2.00", "1", "1.000", "1.000"]


def test_table1_recounts():
    words = [["ma", "te", "ma", "ti", "ka"], ["ka", "ma"], ["ti", "te"]]
    nets = {v.name: build_network(words, v) for v in ALL_VARIANTS[:4]}
    table = emit_table(TableSpec.TABLE1_COUNTS, {"networks": nets})
    assert table.header == [""] + list(nets)
    assert table.rows[0] == ["Nodes (N)"] + [str(len({s for w in words for s in w}))] * 4
    assert table.rows[1] == ["Links (K)"] + [str(len(n.edges)) for n in nets.values()]


def test_table3_needs_directed_report():
    with pytest.raises(MissingInput, match="real_undirected"):
        emit_table("table3", {"comparison": compare_with_er(triangle(), samples=1)})
    net = make_net("abc", [("a", "b"), ("b", "a"), ("b", "c")], directed=True)
    t = emit_table("table3", {"comparison": compare_with_er(net, samples=2), "label": "FN"})
    assert t.header == ["", "FN-Dir", "FN-Undir", "ER"]
    assert t.rows[1][:3] == ["K", "3", "2"]


def test_table4_star_sorted():
    t = emit_table("table4", {"networks": {"s": star(5)}, "k": 3})
    assert t.rows == [["x", "5"], ["l0", "1"], ["l1", "1"]]


def test_table4_star_golden():
    t = emit_table("table4", {"networks": {"star": import_graph(DATA / "star.csv")}, "k": 3})
    assert t.to_text() == (DATA / "star_table4.txt").read_text(encoding="utf-8")
    assert t.to_csv() == (DATA / "star_table4.csv").read_text(encoding="utf-8")


@pytest.mark.parametrize("spec, inputs, field", [
    ("table1", {}, "networks"),
    ("table2", {"comparisons": {}}, "comparisons"),
    ("table3", {}, "comparison"),
    ("table4", {"networks": None}, "networks"),
])
def test_missing_input_names_field(spec, inputs, field):
    with pytest.raises(MissingInput) as info:
        emit_table(spec, inputs)
    assert field in str(info.value)


def test_write_table_picks_rendering(tmp_path):
    t = emit_table("table4", {"networks": {"s": star(2)}, "k": 2})
    write_table(t, tmp_path / "t.csv")
    write_table(t, tmp_path / "t.txt")
    assert (tmp_path / "t.csv").read_text(encoding="utf-8") == t.to_csv()
    assert (tmp_path / "t.txt").read_text(encoding="utf-8") == t.to_text()
