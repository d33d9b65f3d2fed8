"""
Tests for AND/OR products and powers, the sequence codec, type classes and
power headers.
"""

import pytest

from pydilworth.base import Limits
from pydilworth.families import generate_family
from pydilworth.products import (
    PowerIndex,
    PowerOracle,
    TypeVector,
    and_power,
    and_product,
    compound_union_power,
    decode_index,
    encode_sequence,
    format_sequence,
    header_path,
    or_power,
    or_product,
    parse_vertex,
    power,
    power_header,
    read_power_header,
    type_class_subgraph,
    type_vectors,
    write_power_header,
)


def test_sequence_codec():
    assert encode_sequence([1, 0, 2], 3) == 11
    assert decode_index(11, 3, 3) == (1, 0, 2)
    assert PowerIndex.encode((4, 4), 5).value == 24
    assert PowerIndex(5, 2, 7).label() == "12"

    with pytest.raises(ValueError):
        encode_sequence([3], 3)
    with pytest.raises(ValueError):
        decode_index(27, 3, 3)


def test_format_sequence():
    assert format_sequence((1, 0, 2)) == "102"
    assert format_sequence((10, 1)) == "10,1"


def test_and_square_of_single_edge(single_edge):
    P = and_power(single_edge, 2)
    assert P.n == 4
    # 00 -> 01, 10, 11 and 01 -> 11, 10 -> 11
    assert P.edges() == [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]


def test_or_square_of_single_edge(single_edge):
    P = or_power(single_edge, 2)
    assert P.edges() == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 1), (2, 3)]


def test_first_power_is_identity(t5):
    assert and_power(t5, 1) == t5
    assert or_power(t5, 1) == t5


def test_binary_products_of_different_graphs(single_edge):
    C3 = generate_family("C", 3)
    P = and_product(single_edge, C3)
    assert P.n == 6
    # (0, 0) -> (0, 1), (1, 0), (1, 1)
    assert list(P.edges())[:3] == [(0, 1), (0, 3), (0, 4)]
    Q = or_product(single_edge, C3)
    assert Q.has_edge(0, 5) and Q.has_edge(3, 4) and not Q.has_edge(3, 0)


@pytest.mark.parametrize("tag, params", [("A5", ()), ("T", (3,)), ("F", ()), ("V", ())])
@pytest.mark.parametrize("t", [1, 2, 3])
def test_complement_power_duality(tag, params, t):
    G = generate_family(tag, *params)
    assert and_power(G, t).complement() == or_power(G.complement(), t)


def test_oracle_matches_materialized(c5):
    for op in ("and", "or"):
        P = power(c5, 2, op)
        oracle = PowerOracle(c5, 2, op)
        assert oracle.n == 25
        assert all(oracle.has_edge(x, y) == P.has_edge(x, y) for x in range(25) for y in range(25) if x != y)
        assert not oracle.has_edge(3, 3)


def test_power_limits_and_validation(c5):
    with pytest.raises(ValueError, match="vertex limit"):
        and_power(c5, 3, Limits(max_vertices=100))
    with pytest.raises(ValueError, match="'t'"):
        power(c5, 0)
    with pytest.raises(ValueError, match="Unknown product"):
        power(c5, 2, "xor")
    with pytest.raises(ValueError):
        PowerOracle(c5, 0)


def test_type_vectors():
    assert [tv.counts for tv in type_vectors(2, 2)] == [(0, 2), (1, 1), (2, 0)]
    assert len(list(type_vectors(3, 4))) == 15
    tv = TypeVector((2, 1))
    assert tv.total == 3
    assert tv.class_size == 3
    assert list(tv.sequences()) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert TypeVector.of_sequence((2, 0, 2), 3).counts == (1, 0, 2)
    with pytest.raises(ValueError):
        TypeVector((1, -1))


def test_type_class_subgraph(c5_sym):
    sub, vertices = type_class_subgraph(c5_sym, 2, TypeVector((1, 1, 0, 0, 0)))
    # 01 and 10 are adjacent both ways in the square of the pentagon
    assert sub == generate_family("K", 2)
    assert vertices == [1, 5]

    with pytest.raises(ValueError, match="does not describe"):
        type_class_subgraph(c5_sym, 3, TypeVector((1, 1, 0, 0, 0)))


def test_compound_union_power(single_edge):
    U = compound_union_power([single_edge, single_edge.reverse()], 1)
    assert U == generate_family("K", 2)
    U2 = compound_union_power([single_edge, single_edge.reverse()], 2)
    assert U2.edge_count == 10
    with pytest.raises(ValueError):
        compound_union_power([], 2)
    with pytest.raises(ValueError, match="share a vertex set"):
        compound_union_power([single_edge, generate_family("C", 3)], 1)


def test_power_header_files(tmp_path):
    graph_path = str(tmp_path / "square.txt")
    assert header_path(graph_path) == graph_path + ".json"
    assert header_path("square.json") == "square.header.json"
    assert read_power_header(graph_path) is None

    write_power_header(graph_path, power_header(5, 2))
    assert read_power_header(graph_path) == {"base_n": 5, "t": 2, "op": "and"}

    with pytest.raises(ValueError):
        power_header(5, 2, "xor")


def test_parse_vertex():
    header = {"base_n": 3, "t": 2, "op": "and"}
    assert parse_vertex(7) == 7
    assert parse_vertex("7") == 7
    assert parse_vertex("12", header) == 5
    assert parse_vertex("1,2", header) == 5
    assert parse_vertex([1, 2], header) == 5

    with pytest.raises(ValueError):
        parse_vertex([1, 2])
    with pytest.raises(ValueError):
        parse_vertex("123", header)
    with pytest.raises(ValueError):
        parse_vertex(True)
