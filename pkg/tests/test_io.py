import numpy as np
import pytest

from structholes import (
    DuplicateEdgeError,
    ParseError,
    SelfLoopError,
    UnsupportedFormatError,
    build_graph,
    constraint,
    effective_size,
    local_constraint,
)
from structholes.io import (
    ResultDocument,
    read_edge_list,
    read_matrix_market,
    read_report,
    render_report,
    write_edge_list,
    write_matrix_market,
    write_report,
)
from _graphs import binary_sweep, flavours


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_path_graph(tmp_path):
    g = read_edge_list(write(tmp_path, "p.edges", "A B\nB C\n"))
    assert g.labels == ("A", "B", "C")
    assert g.n_edges == 2 and not g.weighted and not g.directed


def test_fig1_both_formats(data_dir, fig1_graph):
    assert read_edge_list(data_dir / "fig1.edges") == fig1_graph
    assert read_matrix_market(data_dir / "fig1.mtx") == fig1_graph


def test_self_loop_line(tmp_path):
    with pytest.raises(SelfLoopError) as exc:
        read_edge_list(write(tmp_path, "s.edges", "A A\n"))
    assert exc.value.line == 1


def test_reverse_duplicate_is_error(tmp_path):
    with pytest.raises(DuplicateEdgeError) as exc:
        read_edge_list(write(tmp_path, "d.edges", "# c\nA B\nB A\n"))
    assert exc.value.line == 3
    g = read_edge_list(write(tmp_path, "d2.edges", "A B\nB A\n"), directed=True)
    assert g.n_edges == 2


@pytest.mark.parametrize("text, line", [("A B x\n", 1), ("A B 1 2\n", 1), ("A B\nA,B\nC D E F\n", 3)])
def test_parse_errors(tmp_path, text, line):
    with pytest.raises(ParseError) as exc:
        read_edge_list(write(tmp_path, "bad.edges", text))
    assert exc.value.line == line


def test_weighted_edge_list(tmp_path):
    g = read_edge_list(write(tmp_path, "w.edges", "a b 2.5\nb c\n"))
    assert g.weighted
    assert g.adjacency.get(1, 2) == 1.0 and g.adjacency.get(0, 1) == 2.5


def test_custom_delimiter(tmp_path):
    g = read_edge_list(write(tmp_path, "c.edges", "a,b,2\nb,c,3\n"), delimiter=",")
    assert g.weighted and g.adjacency.get(2, 1) == 3.0


def test_matrix_market_empty_1x1(tmp_path):
    g = read_matrix_market(write(tmp_path, "e.mtx", "%%MatrixMarket matrix coordinate pattern general\n1 1 0\n"))
    assert g.n == 1 and g.labels == ("1",) and g.adjacency.nnz == 0


@pytest.mark.parametrize(
    "header",
    [
        "%%MatrixMarket matrix coordinate complex general",
        "%%MatrixMarket matrix array real general",
        "%%MatrixMarket matrix coordinate real skew-symmetric",
    ],
)
def test_matrix_market_unsupported(tmp_path, header):
    with pytest.raises(UnsupportedFormatError):
        read_matrix_market(write(tmp_path, "u.mtx", header + "\n2 2 1\n2 1 1.0\n"))


def test_matrix_market_general_real(tmp_path):
    g = read_matrix_market(write(tmp_path, "g.mtx", "%%MatrixMarket matrix coordinate real general\n% x\n3 3 2\n1 2 0.5\n3 1 2\n"))
    assert g.directed and g.weighted
    assert g.labels == ("1", "2", "3")
    assert g.adjacency.get(0, 1) == 0.5 and g.adjacency.get(2, 0) == 2.0 and g.adjacency.get(1, 0) == 0.0


def test_matrix_market_errors(tmp_path):
    with pytest.raises(SelfLoopError) as exc:
        read_matrix_market(write(tmp_path, "l.mtx", "%%MatrixMarket matrix coordinate pattern symmetric\n2 2 1\n2 2\n"))
    assert exc.value.line == 3
    with pytest.raises(ParseError):
        read_matrix_market(write(tmp_path, "n.mtx", "%%MatrixMarket matrix coordinate pattern symmetric\n2 2 2\n2 1\n"))
    with pytest.raises(ParseError):
        read_matrix_market(write(tmp_path, "h.mtx", "not a header\n"))
    with pytest.raises(DuplicateEdgeError):
        read_matrix_market(write(tmp_path, "d.mtx", "%%MatrixMarket matrix coordinate pattern symmetric\n2 2 2\n2 1\n1 2\n"))


def test_edge_list_and_mtx_round_trip(tmp_path):
    rng = np.random.default_rng(4)
    for _, g in binary_sweep(seed=4)[::40]:
        for h in flavours(g, rng).values():
            write_edge_list(h, tmp_path / "g.edges")
            back = read_edge_list(tmp_path / "g.edges", directed=h.directed)
            if not h.weighted:
                assert back == h
            else:
                assert back.labels == h.labels
                np.testing.assert_array_equal(back.adjacency.to_dense(), h.adjacency.to_dense())
            write_matrix_market(h, tmp_path / "g.mtx")
            assert read_matrix_market(tmp_path / "g.mtx") == h


def test_report_csv_rows(fig1_graph):
    text = render_report(ResultDocument.from_report(effective_size(fig1_graph), fig1_graph))
    lines = text.splitlines()
    assert lines[0] == "node,measure,value"
    assert lines[1] == "A,effective-size,2.500000000000"
    assert len(lines) == 8


def test_report_empty_and_undefined():
    empty = build_graph([])
    assert render_report(ResultDocument.from_report(effective_size(empty), empty)) == "node,measure,value\n"
    g = build_graph([("a", "b")], nodes=["z"])
    text = render_report(ResultDocument.from_report(effective_size(g), g))
    assert "z,effective-size,undefined" in text.splitlines()


def test_report_json_and_csv_round_trip(tmp_path, fig1_graph):
    g = build_graph([("a", "b"), ("b", "c")], nodes=["z"])
    for graph, report in ((g, constraint(g)), (fig1_graph, local_constraint(fig1_graph).on_edges())):
        doc = ResultDocument.from_report(report, graph)
        write_report(doc, "json", tmp_path / "r.json")
        write_report(doc, "csv", tmp_path / "r.csv")
        from_json = read_report(tmp_path / "r.json")
        from_csv = read_report(tmp_path / "r.csv")
        assert from_json.measure == from_csv.measure == report.measure
        assert from_json.rows == doc.rows
        assert [k for k, _ in from_csv.rows] == [k for k, _ in from_json.rows]
        for (_, a), (_, b) in zip(from_csv.rows, from_json.rows):
            assert (a is None and b is None) or a == pytest.approx(b, abs=1e-12)
        assert from_json.graph == {"n": graph.n, "edges": graph.n_edges, "directed": False, "weighted": False}


def test_per_edge_csv_header(fig1_graph):
    text = render_report(ResultDocument.from_report(local_constraint(fig1_graph).on_edges()))
    assert text.splitlines()[0] == "src,dst,measure,value"
    assert "A,G,local-constraint,0.340277777778" in text
