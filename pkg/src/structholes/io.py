"""Reading graphs from edge lists / Matrix Market and writing results.

Edge-list files hold one record per line: ``src dst [weight]`` for an
edge, or a lone ``label`` to declare a node (fixing its position in the
node order, or adding it as an isolated node). Lines starting with ``#``
are comments.

Matrix Market files may name their nodes in a ``% labels <l1> ... <ln>``
comment line; otherwise nodes are labelled ``"1".."n"``.
"""

from __future__ import annotations

import contextlib
import csv
import io as _io
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .errors import ParseError, UnsupportedFormatError
from .graph import Graph, build_graph
from .report import MeasureReport

__all__ = [
    "read_edge_list",
    "write_edge_list",
    "read_matrix_market",
    "write_matrix_market",
    "read_graph",
    "ResultDocument",
    "format_value",
    "render_report",
    "write_report",
    "read_report",
]

UNDEFINED = "undefined"


def _parse_weight(token, line):
    try:
        return float(token)
    except ValueError:
        raise ParseError(f"bad weight {token!r}", line) from None


def read_edge_list(path, directed: bool = False, delimiter: str | None = None) -> Graph:
    """Load an edge list; the graph is weighted iff any line has a weight."""
    nodes, edges, lines = [], [], []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            text = raw.strip()
            if not text or text.startswith("#"):
                continue
            parts = [p.strip() for p in text.split(delimiter)] if delimiter else text.split()
            if any(not p for p in parts):
                raise ParseError("empty field", lineno)
            if len(parts) == 1:
                nodes.append(parts[0])
            elif len(parts) == 2:
                edges.append((parts[0], parts[1]))
                lines.append(lineno)
            elif len(parts) == 3:
                edges.append((parts[0], parts[1], _parse_weight(parts[2], lineno)))
                lines.append(lineno)
            else:
                raise ParseError(f"expected 'src dst [weight]', got {len(parts)} fields", lineno)
    weighted = any(len(e) == 3 for e in edges)
    # bare edges in a weighted file get weight 1
    edges = [e if len(e) == 3 or not weighted else (e[0], e[1], 1.0) for e in edges]
    return build_graph(edges, directed=directed, weighted=weighted, nodes=nodes, lines=lines)


def _writer(target):
    if hasattr(target, "write"):
        return contextlib.nullcontext(target)
    return open(target, "w", encoding="utf-8")


def write_edge_list(g: Graph, target) -> None:
    """Write ``g`` (to a path or text stream) so that :func:`read_edge_list`
    restores it exactly."""
    with _writer(target) as fh:
        fh.write(f"# {g.n} nodes, {g.n_edges} edges, {'directed' if g.directed else 'undirected'}\n")
        for label in g.labels:
            fh.write(f"{label}\n")
        for src, dst, w in g.edges():
            fh.write(f"{src} {dst} {w!r}\n" if g.weighted else f"{src} {dst}\n")


def read_matrix_market(path) -> Graph:
    """Load a square coordinate Matrix Market file.

    ``symmetric`` gives an undirected graph, ``general`` a directed one;
    ``pattern`` gives a binary graph, ``real``/``integer`` a weighted one.
    """
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ParseError("empty file", 1)
    head = lines[0].split()
    if len(head) != 5 or head[0].lower() != "%%matrixmarket" or head[1].lower() != "matrix":
        raise ParseError("missing '%%MatrixMarket matrix' header", 1)
    layout, fieldname, symmetry = (h.lower() for h in head[2:])
    if layout != "coordinate":
        raise UnsupportedFormatError(f"unsupported layout {layout!r}", 1)
    if fieldname not in ("pattern", "real", "integer"):
        raise UnsupportedFormatError(f"unsupported field {fieldname!r}", 1)
    if symmetry not in ("general", "symmetric"):
        raise UnsupportedFormatError(f"unsupported symmetry {symmetry!r}", 1)
    pattern = fieldname == "pattern"
    directed = symmetry == "general"

    labels = None
    pos = 1
    while pos < len(lines) and (lines[pos].startswith("%") or not lines[pos].strip()):
        words = lines[pos].lstrip("%").split()
        if words[:1] == ["labels"]:
            labels = words[1:]
        pos += 1
    if pos == len(lines):
        raise ParseError("missing size line", pos)
    size = lines[pos].split()
    try:
        n_rows, n_cols, nnz = (int(t) for t in size)
    except ValueError:
        raise ParseError(f"bad size line {lines[pos]!r}", pos + 1) from None
    if n_rows != n_cols:
        raise UnsupportedFormatError(f"adjacency must be square, got {n_rows}x{n_cols}", pos + 1)
    n = n_rows
    if labels is None:
        labels = [str(i) for i in range(1, n + 1)]
    elif len(labels) != n:
        raise ParseError(f"labels line names {len(labels)} nodes, matrix has {n}")

    edges, where = [], []
    for lineno in range(pos + 2, len(lines) + 1):
        text = lines[lineno - 1].strip()
        if not text or text.startswith("%"):
            continue
        parts = text.split()
        if len(parts) != (2 if pattern else 3):
            raise ParseError(f"expected {'2' if pattern else '3'} fields, got {len(parts)}", lineno)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("non-integer index", lineno) from None
        if not (1 <= i <= n and 1 <= j <= n):
            raise ParseError(f"index ({i}, {j}) outside 1..{n}", lineno)
        e = (labels[i - 1], labels[j - 1])
        if not pattern:
            e = e + (_parse_weight(parts[2], lineno),)
        edges.append(e)
        where.append(lineno)
    if len(edges) != nnz:
        raise ParseError(f"size line declares {nnz} entries, found {len(edges)}")
    return build_graph(edges, directed=directed, weighted=not pattern, nodes=labels, lines=where)


def write_matrix_market(g: Graph, target) -> None:
    fieldname = "real" if g.weighted else "pattern"
    symmetry = "general" if g.directed else "symmetric"
    entries = []
    for i, j, w in g.adjacency.entries():
        if g.directed or i > j:
            entries.append(f"{i + 1} {j + 1}" + (f" {w!r}" if g.weighted else ""))
    with _writer(target) as fh:
        fh.write(f"%%MatrixMarket matrix coordinate {fieldname} {symmetry}\n")
        fh.write("% labels " + " ".join(g.labels) + "\n")
        fh.write(f"{g.n} {g.n} {len(entries)}\n")
        for e in entries:
            fh.write(e + "\n")


def read_graph(path, fmt: str = "edgelist", directed: bool = False) -> Graph:
    if fmt == "edgelist":
        return read_edge_list(path, directed=directed)
    if fmt == "mtx":
        return read_matrix_market(path)
    raise UnsupportedFormatError(f"unknown graph format {fmt!r}")


def format_value(v) -> str:
    """Fixed-point with 12 decimals, or ``undefined``."""
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return UNDEFINED
    return f"{float(v):.12f}"


@dataclass
class ResultDocument:
    """A measure's rows plus enough metadata to interpret them.

    Each row is ``(key, value)`` where ``key`` is a node label or a
    ``(src, dst)`` pair and ``value`` is a float or ``None`` (undefined).
    """

    measure: str
    rows: list
    variant: str | None = None
    graph: dict | None = None
    warnings: list = field(default_factory=list)
    version: str = __version__

    @classmethod
    def from_report(cls, report: MeasureReport, g: Graph | None = None) -> ResultDocument:
        meta = None
        if g is not None:
            meta = {"n": g.n, "edges": g.n_edges, "directed": g.directed, "weighted": g.weighted}
        rows = [(k, None if math.isnan(v) else float(v)) for k, v in zip(report.keys, report.values)]
        return cls(report.measure, rows, report.variant, meta, list(report.warnings))

    @property
    def per_edge(self) -> bool:
        return bool(self.rows) and isinstance(self.rows[0][0], tuple)

    def to_json(self) -> dict:
        if self.per_edge:
            rows = [{"src": k[0], "dst": k[1], "value": UNDEFINED if v is None else v} for k, v in self.rows]
        else:
            rows = [{"node": k, "value": UNDEFINED if v is None else v} for k, v in self.rows]
        return {
            "measure": self.measure,
            "variant": self.variant,
            "graph": self.graph,
            "rows": rows,
            "warnings": list(self.warnings),
            "version": self.version,
        }

    @classmethod
    def from_json(cls, doc: dict) -> ResultDocument:
        rows = []
        for r in doc["rows"]:
            key = (r["src"], r["dst"]) if "src" in r else r["node"]
            v = r["value"]
            rows.append((key, None if v == UNDEFINED else float(v)))
        return cls(doc["measure"], rows, doc.get("variant"), doc.get("graph"), doc.get("warnings", []), doc.get("version", __version__))


def render_report(doc: ResultDocument, fmt: str = "csv") -> str:
    if fmt == "json":
        return json.dumps(doc.to_json(), indent=2) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown output format {fmt!r}")
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if doc.per_edge or (not doc.rows and doc.measure == "local-constraint"):
        w.writerow(["src", "dst", "measure", "value"])
        for (src, dst), v in doc.rows:
            w.writerow([src, dst, doc.measure, format_value(v)])
    else:
        w.writerow(["node", "measure", "value"])
        for node, v in doc.rows:
            w.writerow([node, doc.measure, format_value(v)])
    return buf.getvalue()


def write_report(doc: ResultDocument, fmt: str = "csv", path=None) -> None:
    """Write to ``path``, or to stdout when ``path`` is None or ``-``."""
    text = render_report(doc, fmt)
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def read_report(path, fmt: str | None = None) -> ResultDocument:
    """Parse a report written by :func:`write_report` (CSV carries no metadata)."""
    text = Path(path).read_text(encoding="utf-8")
    if fmt is None:
        fmt = "json" if text.lstrip().startswith("{") else "csv"
    if fmt == "json":
        return ResultDocument.from_json(json.loads(text))
    reader = csv.reader(_io.StringIO(text))
    header = next(reader)
    rows, measure = [], None
    for rec in reader:
        if header[0] == "src":
            key, measure, v = (rec[0], rec[1]), rec[2], rec[3]
        else:
            key, measure, v = rec[0], rec[1], rec[2]
        rows.append((key, None if v == UNDEFINED else float(v)))
    if measure is None:
        measure = "local-constraint" if header[0] == "src" else ""
    return ResultDocument(measure, rows)
