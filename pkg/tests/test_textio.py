import pytest

from quadloc.errors import FormatError, InputError
from quadloc.textio import parse_graph, write_graph
from helpers import klein_bottle_grid, two_squares_sphere


def test_round_trip_is_byte_identical(g1p):
    G, c = g1p
    text = write_graph(G, c)
    G2, c2 = parse_graph(text)
    assert write_graph(G2, c2) == text


def test_round_trip_verifies_identically(k4p):
    G, c = k4p
    G2, c2 = parse_graph(write_graph(G, c))
    assert G2.rotation == G.rotation
    assert G2.pairing == G.pairing
    assert G2.signature == G.signature
    assert G2.vertex_of == G.vertex_of
    assert c2.assignment == c.assignment


def test_round_trip_without_coloring():
    G, _ = klein_bottle_grid()
    text = write_graph(G)
    G2, c2 = parse_graph(text)
    assert c2 is None
    assert G2.face_lengths() == G.face_lengths()


def test_comments_and_blank_lines_ignored():
    G, c = two_squares_sphere()
    text = "# header\n\n" + write_graph(G, c).replace("edge e0", "edge e0 ", 1)
    G2, _ = parse_graph(text)
    assert G2.n_edges == G.n_edges


def test_parser_rejects_duplicate_darts():
    text = "vertex u : 0 1\nvertex w : 1\nedge e0 : 0 1 +\n"
    with pytest.raises(FormatError, match="duplicate dart"):
        parse_graph(text)


def test_parser_rejects_non_involutive_pairing():
    text = "vertex u : 0\nvertex w : 1\nedge e0 : 0 0 +\nedge e1 : 1 1 +\n"
    with pytest.raises(FormatError, match="itself"):
        parse_graph(text)


def test_parser_rejects_dart_on_two_edges():
    text = "vertex u : 0 2\nvertex w : 1 3\nedge e0 : 0 1 +\nedge e1 : 1 2 +\nedge e2 : 2 3 +\n"
    with pytest.raises(FormatError, match="two edges"):
        parse_graph(text)


def test_parser_rejects_disconnected():
    text = (
        "vertex a : 0\nvertex b : 1\nvertex c : 2\nvertex d : 3\n"
        "edge e0 : 0 1 +\nedge e1 : 2 3 +\n"
    )
    with pytest.raises(InputError, match="connected"):
        parse_graph(text)


def test_parser_rejects_partial_coloring():
    G, c = two_squares_sphere()
    text = write_graph(G, c)
    text = "\n".join(line for line in text.splitlines() if not line.startswith("color 4")) + "\n"
    with pytest.raises(FormatError, match="not total"):
        parse_graph(text)
