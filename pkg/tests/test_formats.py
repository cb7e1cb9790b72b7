import json
import random
from fractions import Fraction

import pytest

from ahgraph.bounds import REPORT_FIELDS, bounds_report
from ahgraph.errors import CountMismatch, DuplicateEdge, ParseError, SelfLoop
from ahgraph.formats import (
    ReportDocument,
    csv_header,
    format_fraction,
    parse_dimacs_graph,
    parse_edge_list,
    parse_fraction,
    parse_report,
    read_graph_text,
    serialize_report,
    write_dimacs_graph,
)
from ahgraph.generators import complete_graph, gen_gnp, path_graph
from ahgraph.graph import build_graph


def test_parse_dimacs_path():
    assert parse_dimacs_graph("p edge 3 2\ne 1 2\ne 2 3") == path_graph(3)


def test_parse_dimacs_comments_and_col_header():
    text = "c a comment\np col 3 1\n\ne 3 1\n"
    assert parse_dimacs_graph(text) == build_graph(3, [(0, 2)])


@pytest.mark.parametrize(
    "text, exc",
    [
        ("p edge 2 1\ne 1 1", SelfLoop),
        ("p edge 3 2\ne 1 2", CountMismatch),
        ("p edge 3 2\ne 1 2\ne 2 1", DuplicateEdge),
        ("e 1 2\n", ParseError),
        ("p edge 3\n", ParseError),
        ("p edge 3 1\ne 1 x\n", ParseError),
        ("p edge 3 1\nq 1 2\n", ParseError),
        ("", ParseError),
    ],
)
def test_parse_dimacs_rejects(text, exc):
    with pytest.raises(exc):
        parse_dimacs_graph(text)


def test_count_mismatch_is_parse_error():
    with pytest.raises(ParseError):
        parse_dimacs_graph("p edge 3 2\ne 1 2")


def test_write_dimacs_examples():
    assert write_dimacs_graph(path_graph(3)) == "p edge 3 2\ne 1 2\ne 2 3\n"
    assert write_dimacs_graph(build_graph(0, [])) == "p edge 0 0\n"
    assert write_dimacs_graph(complete_graph(2)) == "p edge 2 1\ne 1 2\n"


def test_edge_list_and_autodetect():
    g = parse_edge_list("# triangle plus tail\n0 1\n1 2\n2 0\n2 3\n")
    assert (g.n, g.m) == (4, 4)
    assert read_graph_text("0 1\n1 2\n") == path_graph(3)
    assert read_graph_text("c hi\np edge 3 2\ne 1 2\ne 2 3\n") == path_graph(3)
    assert parse_edge_list("") == build_graph(0, [])
    with pytest.raises(ParseError):
        parse_edge_list("0 1 2\n")


def test_graph_round_trip_random():
    rng = random.Random(3)
    for i in range(200):
        g = gen_gnp(rng.randint(0, 25), rng.random(), seed=i)
        text = write_dimacs_graph(g)
        assert parse_dimacs_graph(text) == g
        assert write_dimacs_graph(parse_dimacs_graph(text)) == text


def test_fraction_strings():
    assert format_fraction(Fraction(3)) == "3/1"
    assert format_fraction(Fraction(48, 15)) == "16/5"
    assert parse_fraction("16/5") == Fraction(16, 5)
    for bad in ("3", "1.5/2", "a/b", "1/0"):
        with pytest.raises(ParseError):
            parse_fraction(bad)


def test_report_json_petersen(petersen):
    text = serialize_report(bounds_report(petersen))
    assert '"mad":"3/1"' in text and '"bound_mad":4' in text
    assert list(json.loads(text)) == list(REPORT_FIELDS)
    assert text.endswith("\n")


def test_report_json_k7k3(k7k3):
    text = serialize_report(bounds_report(k7k3))
    assert '"is_ah":false' in text and '"bound_soto":null' in text


def test_report_field_order():
    assert REPORT_FIELDS == (
        "n", "m", "avg_degree", "mad", "is_ah", "bound_mad", "bound_delta",
        "bound_brooks", "bound_soto", "lower_clique", "exact_case", "degeneracy",
        "greedy_colors", "exact_chromatic",
    )
    assert csv_header() == ",".join(REPORT_FIELDS) + "\n"


def test_report_csv_and_table(k7k3):
    r = bounds_report(k7k3)
    row = serialize_report(r, "csv-row")
    assert row == "10,24,24/5,6/1,false,7,7,7,,2,,6,7,\n"
    assert parse_report(row, "csv-row") == r
    assert parse_report(csv_header() + row, "csv-row") == r
    table = serialize_report(r, "table")
    assert table.splitlines()[0].split() == ["n", "10"]
    with pytest.raises(ValueError):
        serialize_report(r, "xml")


def test_report_round_trip_random():
    rng = random.Random(17)
    for i in range(200):
        g = gen_gnp(rng.randint(1, 10), rng.random(), seed=i)
        r = bounds_report(g, run_exact=rng.random() < 0.5)
        for fmt in ("json", "csv-row"):
            text = serialize_report(r, fmt)
            assert parse_report(text, fmt) == r
            assert serialize_report(parse_report(text, fmt), fmt) == text


def test_report_document_round_trip(petersen):
    doc = ReportDocument(bounds_report(petersen, run_exact=True), "petersen.col", "0.1.0", 7)
    text = doc.to_json()
    assert json.loads(text)["provenance"] == {
        "input": "petersen.col", "tool_version": "0.1.0", "seed": 7,
    }
    assert ReportDocument.from_json(text) == doc
    with pytest.raises(ParseError):
        ReportDocument.from_json("{not json")
    with pytest.raises(ParseError):
        parse_report('{"n": 1}')
