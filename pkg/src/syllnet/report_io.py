"""Reading and writing networks, metrics and report tables.

Three graph formats are supported: GraphML 1.0, GEXF 1.2 and an edge CSV
(``source,target,weight``).  Node ids are the syllables themselves.  Each
writer also records the network variant and provenance so that files produced
here read back into an equal :class:`SyllableNetwork`; files from other tools
are accepted with the variant inferred (undirected unless the file says
otherwise, weighted when any weight differs from 1).

All writers are deterministic: nodes and edges are emitted in sorted order.
"""

from __future__ import annotations

import enum
import io
import json
import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .errors import GraphParseError, MissingInput
from .metrics import DegreeDistribution, top_k_by_degree
from .netbuild import Linking, NetworkVariant, SyllableNetwork

GRAPHML_NS = "http://graphml.graphdrawing.org/xmlns"
GEXF_NS = "http://www.gexf.net/1.2draft"
CSV_HEADER = "source,target,weight"
_META_PREFIX = "syllnet "


class GraphFileFormat(str, enum.Enum):
    GRAPHML = "graphml"
    GEXF = "gexf"
    EDGE_CSV = "edge_csv"

    @classmethod
    def from_path(cls, path) -> "GraphFileFormat":
        suffix = Path(path).suffix.lower()
        try:
            return {".graphml": cls.GRAPHML, ".xml": cls.GRAPHML, ".gexf": cls.GEXF,
                    ".csv": cls.EDGE_CSV}[suffix]
        except KeyError:
            raise ValueError(f"cannot infer graph format from {str(path)!r}; "
                             "use .graphml, .gexf or .csv") from None

    @classmethod
    def parse(cls, value) -> "GraphFileFormat":
        if isinstance(value, cls):
            return value
        return {"csv": cls.EDGE_CSV}.get(value) or cls(value)


def _meta(net: SyllableNetwork) -> dict:
    return {
        "linking": net.variant.linking.value,
        "directed": net.directed,
        "weighted": net.weighted,
        "provenance": list(net.provenance),
    }


def _network_from(meta: dict | None, directed: bool, edges: list, nodes: list) -> SyllableNetwork:
    """Assemble a network from parsed rows; ``edges`` holds (u, v, weight)."""
    if meta is not None:
        weighted = bool(meta.get("weighted", False))
        linking = meta.get("linking", Linking.CO_OCCURRENCE.value)
        provenance = list(meta.get("provenance", []))
    else:
        weighted = any(w != 1 for _, _, w in edges)
        linking = Linking.CO_OCCURRENCE.value
        provenance = []
    net = SyllableNetwork(NetworkVariant(linking, directed, weighted), provenance=provenance)
    net.nodes.update(nodes)
    for u, v, w in edges:
        if u == v:
            raise GraphParseError(f"self-loop on {u!r}")
        if net.has_edge(u, v):
            raise GraphParseError(f"duplicate edge {u!r}-{v!r}")
        if not weighted and w != 1:
            raise GraphParseError(f"edge {u!r}-{v!r} has weight {w} in an unweighted network")
        net.add_edge(u, v, w)
    return net


def _weight(text, context: str) -> int:
    try:
        value = float(text)
    except (TypeError, ValueError):
        raise GraphParseError(f"{context}: weight {text!r} is not a number") from None
    if value != int(value) or value < 1:
        raise GraphParseError(f"{context}: weight {text!r} is not a positive integer")
    return int(value)


def _local(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def _parse_xml(path) -> ET.Element:
    try:
        return ET.parse(path).getroot()
    except ET.ParseError as exc:
        line, col = exc.position
        raise GraphParseError(f"{path}: line {line}, column {col}: {exc}") from exc


def _write_xml(root: ET.Element, path) -> None:
    ET.indent(root)
    with open(path, "wb") as fh:
        ET.ElementTree(root).write(fh, encoding="utf-8", xml_declaration=True)
        fh.write(b"\n")


# GraphML -------------------------------------------------------------------

def write_graphml(net: SyllableNetwork, path) -> None:
    meta = _meta(net)
    root = ET.Element("graphml", xmlns=GRAPHML_NS)
    for key, scope, typ in (("linking", "graph", "string"), ("weighted", "graph", "boolean"),
                            ("provenance", "graph", "string"), ("weight", "edge", "int")):
        ET.SubElement(root, "key", {"id": key, "for": scope, "attr.name": key, "attr.type": typ})
    graph = ET.SubElement(root, "graph", id="G",
                          edgedefault="directed" if net.directed else "undirected")
    ET.SubElement(graph, "data", key="linking").text = meta["linking"]
    ET.SubElement(graph, "data", key="weighted").text = "true" if net.weighted else "false"
    ET.SubElement(graph, "data", key="provenance").text = json.dumps(meta["provenance"], ensure_ascii=False)
    for u in net.sorted_nodes():
        ET.SubElement(graph, "node", id=str(u))
    for (u, v), w in net.sorted_edges():
        edge = ET.SubElement(graph, "edge", source=str(u), target=str(v))
        ET.SubElement(edge, "data", key="weight").text = str(w)
    _write_xml(root, path)


def read_graphml(path) -> SyllableNetwork:
    root = _parse_xml(path)
    if _local(root.tag) != "graphml":
        raise GraphParseError(f"{path}: root element is <{_local(root.tag)}>, expected <graphml>")
    keys = {}
    for el in root:
        if _local(el.tag) == "key":
            keys[el.get("id")] = el.get("attr.name", el.get("id"))
    graph = next((el for el in root if _local(el.tag) == "graph"), None)
    if graph is None:
        raise GraphParseError(f"{path}: no <graph> element")
    directed = graph.get("edgedefault", "directed") == "directed"

    gdata = {}
    nodes, edges = [], []
    for i, el in enumerate(graph):
        tag = _local(el.tag)
        if tag == "data":
            gdata[keys.get(el.get("key"), el.get("key"))] = el.text or ""
        elif tag == "node":
            if el.get("id") is None:
                raise GraphParseError(f"{path}: <node> #{i} has no id")
            nodes.append(el.get("id"))
        elif tag == "edge":
            u, v = el.get("source"), el.get("target")
            if u is None or v is None:
                raise GraphParseError(f"{path}: <edge> #{i} lacks source or target")
            w = 1
            for d in el:
                if _local(d.tag) == "data" and keys.get(d.get("key"), d.get("key")) == "weight":
                    w = _weight(d.text, f"{path}: <edge {u}->{v}>")
            edges.append((u, v, w))

    meta = None
    if "linking" in gdata:
        try:
            meta = {"linking": gdata["linking"],
                    "weighted": gdata.get("weighted", "false").strip().lower() == "true",
                    "provenance": json.loads(gdata.get("provenance") or "[]")}
        except json.JSONDecodeError as exc:
            raise GraphParseError(f"{path}: bad provenance data: {exc}") from exc
    try:
        return _network_from(meta, directed, edges, nodes)
    except GraphParseError as exc:
        raise GraphParseError(f"{path}: {exc}") from exc


# GEXF ----------------------------------------------------------------------

def write_gexf(net: SyllableNetwork, path) -> None:
    root = ET.Element("gexf", xmlns=GEXF_NS, version="1.2")
    meta = ET.SubElement(root, "meta")
    ET.SubElement(meta, "creator").text = "syllnet"
    ET.SubElement(meta, "description").text = _META_PREFIX + json.dumps(_meta(net), ensure_ascii=False)
    graph = ET.SubElement(root, "graph", mode="static",
                          defaultedgetype="directed" if net.directed else "undirected")
    nodes = ET.SubElement(graph, "nodes")
    for u in net.sorted_nodes():
        ET.SubElement(nodes, "node", id=str(u), label=str(u))
    edges = ET.SubElement(graph, "edges")
    for i, ((u, v), w) in enumerate(net.sorted_edges()):
        ET.SubElement(edges, "edge", id=str(i), source=str(u), target=str(v), weight=str(w))
    _write_xml(root, path)


def read_gexf(path) -> SyllableNetwork:
    root = _parse_xml(path)
    if _local(root.tag) != "gexf":
        raise GraphParseError(f"{path}: root element is <{_local(root.tag)}>, expected <gexf>")
    meta = None
    graph = None
    for el in root:
        tag = _local(el.tag)
        if tag == "meta":
            for m in el:
                text = (m.text or "").strip()
                if _local(m.tag) == "description" and text.startswith(_META_PREFIX):
                    try:
                        meta = json.loads(text[len(_META_PREFIX):])
                    except json.JSONDecodeError as exc:
                        raise GraphParseError(f"{path}: bad <description> metadata: {exc}") from exc
        elif tag == "graph":
            graph = el
    if graph is None:
        raise GraphParseError(f"{path}: no <graph> element")
    directed = graph.get("defaultedgetype", "undirected") == "directed"
    if meta is not None and "directed" in meta:
        directed = bool(meta["directed"])
    nodes, edges = [], []
    for section in graph:
        tag = _local(section.tag)
        for i, el in enumerate(section):
            if tag == "nodes" and _local(el.tag) == "node":
                if el.get("id") is None:
                    raise GraphParseError(f"{path}: <node> #{i} has no id")
                nodes.append(el.get("id"))
            elif tag == "edges" and _local(el.tag) == "edge":
                u, v = el.get("source"), el.get("target")
                if u is None or v is None:
                    raise GraphParseError(f"{path}: <edge> #{i} lacks source or target")
                w = _weight(el.get("weight", "1"), f"{path}: <edge {u}->{v}>")
                edges.append((u, v, w))
    try:
        return _network_from(meta, directed, edges, nodes)
    except GraphParseError as exc:
        raise GraphParseError(f"{path}: {exc}") from exc


# edge CSV ------------------------------------------------------------------

def _check_csv_safe(node) -> str:
    s = str(node)
    assert s and not any(c in s for c in ',"\n\r') and not s.startswith("#"), \
        f"node {s!r} cannot be written to edge CSV unquoted"
    return s


def write_edge_csv(net: SyllableNetwork, path) -> None:
    """``source,target,weight`` rows after a ``# syllnet {...}`` metadata line.

    Nodes without edges appear as ``node,,`` rows.
    """
    lines = ["# " + _META_PREFIX + json.dumps(_meta(net), ensure_ascii=False), CSV_HEADER]
    touched = set()
    for (u, v), w in net.sorted_edges():
        lines.append(f"{_check_csv_safe(u)},{_check_csv_safe(v)},{w}")
        touched.update((u, v))
    for u in net.sorted_nodes():
        if u not in touched:
            lines.append(f"{_check_csv_safe(u)},,")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_edge_csv(path) -> SyllableNetwork:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise GraphParseError(f"{path}: invalid UTF-8 at byte {exc.start}") from exc
    meta = None
    header_seen = False
    nodes, edges = [], []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith(_META_PREFIX):
                try:
                    meta = json.loads(body[len(_META_PREFIX):])
                except json.JSONDecodeError as exc:
                    raise GraphParseError(f"{path}: line {lineno}: bad metadata: {exc}") from exc
            continue
        if not header_seen:
            if line.strip().replace(" ", "") not in (CSV_HEADER, "source,target"):
                raise GraphParseError(f"{path}: line {lineno}: expected header {CSV_HEADER!r}, got {line!r}")
            header_seen = True
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) == 2:
            fields.append("1" if fields[1] else "")
        if len(fields) != 3 or not fields[0]:
            raise GraphParseError(f"{path}: line {lineno}: expected 3 fields, got {line!r}")
        u, v, w = fields
        if not v:
            nodes.append(u)
            continue
        edges.append((u, v, _weight(w or "1", f"{path}: line {lineno}")))
    if not header_seen:
        raise GraphParseError(f"{path}: line 1: empty file, no {CSV_HEADER!r} header")
    directed = bool(meta.get("directed", False)) if meta else False
    try:
        return _network_from(meta, directed, edges, nodes)
    except GraphParseError as exc:
        raise GraphParseError(f"{path}: {exc}") from exc


_WRITERS = {GraphFileFormat.GRAPHML: write_graphml, GraphFileFormat.GEXF: write_gexf,
            GraphFileFormat.EDGE_CSV: write_edge_csv}
_READERS = {GraphFileFormat.GRAPHML: read_graphml, GraphFileFormat.GEXF: read_gexf,
            GraphFileFormat.EDGE_CSV: read_edge_csv}


def export_graph(net: SyllableNetwork, fmt, path) -> None:
    fmt = GraphFileFormat.from_path(path) if fmt is None else GraphFileFormat.parse(fmt)
    _WRITERS[fmt](net, path)


def import_graph(path, fmt=None) -> SyllableNetwork:
    fmt = GraphFileFormat.from_path(path) if fmt is None else GraphFileFormat.parse(fmt)
    if not Path(path).exists():
        raise FileNotFoundError(f"no such graph file: {path}")
    return _READERS[fmt](path)


# JSON ----------------------------------------------------------------------

def _clean(obj):
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def dumps_json(obj) -> str:
    return json.dumps(_clean(obj), indent=2, ensure_ascii=False) + "\n"


def write_json(obj, path) -> None:
    Path(path).write_text(dumps_json(obj), encoding="utf-8")


def read_json(path) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))


# degree distribution -------------------------------------------------------

def loglog_path(path) -> Path:
    path = Path(path)
    return path.with_name(path.stem + ".loglog" + (path.suffix or ".tsv"))


def emit_degree_distribution(dist: DegreeDistribution, path) -> Path:
    """Write ``degree<TAB>count`` rows plus a log-log companion file; returns the companion path."""
    rows = ["degree\tcount"] + [f"{d}\t{c}" for d, c in dist.rows()]
    Path(path).write_text("\n".join(rows) + "\n", encoding="utf-8")

    companion = loglog_path(path)
    lines = ["ln_degree\tln_count"] + [f"{x:.6f}\t{y:.6f}" for x, y in dist.loglog_points()]
    fit = dist.ols_fit()
    if fit is None:
        lines.append("# ols_slope=NA intercept=NA r2=NA (indicative only, not a power-law fit)")
    else:
        slope, intercept, r2 = fit
        lines.append(f"# ols_slope={slope:.6f} intercept={intercept:.6f} r2={r2:.6f} "
                     "(indicative only, not a power-law fit)")
    companion.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return companion


def read_degree_distribution(path) -> DegreeDistribution:
    counts = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#") or line.startswith("degree"):
            continue
        try:
            d, c = line.split("\t")
            counts[int(d)] = int(c)
        except ValueError:
            raise GraphParseError(f"{path}: line {lineno}: expected 'degree<TAB>count'") from None
    return DegreeDistribution(counts)


# tables --------------------------------------------------------------------

class TableSpec(str, enum.Enum):
    TABLE1_COUNTS = "table1_counts"
    TABLE2_METRICS = "table2_metrics"
    TABLE3_FN_METRICS = "table3_fn_metrics"
    TABLE4_TOP_SYLLABLES = "table4_top_syllables"

    @classmethod
    def parse(cls, value) -> "TableSpec":
        if isinstance(value, cls):
            return value
        short = {"table1": cls.TABLE1_COUNTS, "table2": cls.TABLE2_METRICS,
                 "table3": cls.TABLE3_FN_METRICS, "table4": cls.TABLE4_TOP_SYLLABLES}
        return short.get(value) or cls(value)


@dataclass
class Table:
    title: str
    header: list
    rows: list = field(default_factory=list)

    def to_csv(self) -> str:
        buf = io.StringIO()
        for row in [self.header] + self.rows:
            buf.write(",".join(str(c) for c in row) + "\n")
        return buf.getvalue()

    def to_text(self) -> str:
        grid = [[str(c) for c in row] for row in [self.header] + self.rows]
        widths = [max(len(r[i]) for r in grid) for i in range(len(self.header))]
        lines = [self.title]
        for r in grid:
            cells = [r[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(r[1:], widths[1:])]
            lines.append("  ".join(cells).rstrip())
        return "\n".join(lines) + "\n"


def _fmt_int(x) -> str:
    if x is None:
        return "n/a"
    if float(x).is_integer():
        return str(int(x))
    return f"{x:.2f}"


def _fmt(x, digits: int) -> str:
    return "n/a" if x is None else f"{x:.{digits}f}"


def _require(inputs: Mapping, name: str):
    value = inputs.get(name)
    if value is None or (hasattr(value, "__len__") and len(value) == 0):
        raise MissingInput(name)
    return value


def _table1(inputs):
    nets = _require(inputs, "networks")
    labels = list(nets)
    return Table("Network sizes", [""] + labels, [
        ["Nodes (N)"] + [str(nets[lb].n) for lb in labels],
        ["Links (K)"] + [str(nets[lb].k) for lb in labels],
    ])


def _table2(inputs):
    reports = _require(inputs, "comparisons")
    header = [""]
    cols = []
    for label, rep in reports.items():
        header += [label, f"ER_{label}"]
        cols += [rep.real, rep.er_mean]
    rows = [
        ["N"] + [str(m.n) for m in cols],
        ["<k>"] + [_fmt(m.avg_degree, 2) for m in cols],
        ["D"] + [_fmt_int(m.diameter) for m in cols],
        ["L"] + [_fmt(m.avg_path_length, 3) for m in cols],
        ["C"] + [_fmt(m.avg_clustering, 3) for m in cols],
    ]
    return Table("Measures next to the mean of matched ER graphs", header, rows)


def _table3(inputs):
    rep = _require(inputs, "comparison")
    label = inputs.get("label") or "net"
    if rep.real_undirected is None:
        raise MissingInput("comparison.real_undirected")
    cols = [rep.real, rep.real_undirected, rep.er_mean]
    rows = [
        ["N"] + [str(m.n) for m in cols],
        ["K"] + [str(m.k) for m in cols],
        ["D"] + [_fmt_int(m.diameter) for m in cols],
        ["C"] + [_fmt(m.avg_clustering, 3) for m in cols],
    ]
    return Table("Directed network, its undirected projection and matched ER graphs",
                 ["", f"{label}-Dir", f"{label}-Undir", "ER"], rows)


def _table4(inputs):
    nets = _require(inputs, "networks")
    k = int(inputs.get("k") or 10)
    tops = {label: top_k_by_degree(net, k) if net.n else [] for label, net in nets.items()}
    header = []
    for label in nets:
        header += [f"{label} Syll.", f"{label} Degree"]
    depth = max((len(t) for t in tops.values()), default=0)
    rows = []
    for i in range(depth):
        row = []
        for label in nets:
            entry = tops[label][i] if i < len(tops[label]) else ("", "")
            row += [str(entry[0]), str(entry[1])]
        rows.append(row)
    return Table("Highest-degree syllables", header, rows)


_TABLES = {TableSpec.TABLE1_COUNTS: _table1, TableSpec.TABLE2_METRICS: _table2,
           TableSpec.TABLE3_FN_METRICS: _table3, TableSpec.TABLE4_TOP_SYLLABLES: _table4}


def emit_table(spec, inputs: Mapping) -> Table:
    """Build one of the four report tables.

    Required inputs: ``networks`` (label -> network) for table1 and table4,
    plus optional ``k``; ``comparisons`` (label -> ComparisonReport) for
    table2; ``comparison`` (a report on a directed network) and optional
    ``label`` for table3.
    """
    return _TABLES[TableSpec.parse(spec)](inputs)


def write_table(table: Table, path) -> None:
    path = Path(path)
    text = table.to_csv() if path.suffix.lower() == ".csv" else table.to_text()
    path.write_text(text, encoding="utf-8")
