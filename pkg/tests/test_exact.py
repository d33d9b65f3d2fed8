"""
Tests for the exact parameter solvers, certificates and constructive colorings.
"""

import pytest

from pydilworth.base import BudgetExhausted, Limits
from pydilworth.digraph import Digraph
from pydilworth.exact import (
    PARAMETERS,
    AcyclicCover,
    CliqueSolver,
    Coloring,
    ParamResult,
    SubsetCertificate,
    a5c_square_cover,
    acyclicity_number,
    certificate_from_dict,
    certificate_to_dict,
    chromatic_number,
    compute_all_params,
    constructive_bound,
    constructive_power_coloring,
    dichromatic_number,
    height_coloring,
    independence_number,
    power_cover,
    power_oracle_coloring_check,
    symmetric_clique_number,
    transitive_clique_number,
    verify_certificate,
)
from pydilworth.families import generate_family
from pydilworth.products import and_power


@pytest.mark.parametrize(
    "tag, params, expected",
    [
        ("C", (5,), {"alpha": 2, "omega_s": 1, "omega_tr": 2, "a": 4, "chi": 3, "chi_dir": 2}),
        ("Csym", (5,), {"alpha": 2, "omega_s": 2, "omega_tr": 2, "a": 2, "chi": 3, "chi_dir": 3}),
        ("T", (5,), {"alpha": 1, "omega_s": 1, "omega_tr": 3, "a": 3, "chi": 5, "chi_dir": 2}),
        ("A5c", (), {"alpha": 1, "omega_s": 2, "omega_tr": 5, "a": 2, "chi": 5, "chi_dir": 3}),
        ("F", (), {"alpha": 1, "omega_s": 2, "omega_tr": 3, "a": 2, "chi": 3, "chi_dir": 2}),
        ("TT", (4,), {"alpha": 1, "omega_s": 1, "omega_tr": 4, "a": 4, "chi": 4, "chi_dir": 1}),
        ("E", (3,), {"alpha": 3, "omega_s": 1, "omega_tr": 1, "a": 3, "chi": 1, "chi_dir": 1}),
    ],
)
def test_parameters_of_named_graphs(tag, params, expected, limits):
    G = generate_family(tag, *params)
    results = compute_all_params(G, limits=limits)
    assert list(results) == list(PARAMETERS)
    for name, value in expected.items():
        result = results[name]
        assert result.value == value, name
        assert result.optimal, name
        assert result.lower == result.upper == value
        assert verify_certificate(G, result.certificate).ok


def test_result_unpacks_into_value_and_certificate(c5_sym):
    value, cert = chromatic_number(c5_sym)
    assert value == 3
    assert isinstance(cert, Coloring)
    assert cert.k == 3


def test_param_result_dict(c5):
    result = acyclicity_number(c5)
    payload = result.to_dict()
    assert payload["name"] == "acyclicity_number"
    assert payload["value"] == 4
    assert payload["optimal"] is True
    assert len(payload["digest"]) == 64
    assert result.status == "optimal"


def test_transitive_clique_certificate_has_order(t5):
    result = transitive_clique_number(t5)
    cert = result.certificate
    assert cert.kind == "transitive-clique"
    assert len(cert.order) == 3
    assert all(t5.has_edge(u, v) for i, u in enumerate(cert.order) for v in cert.order[i + 1:])


def test_dichromatic_returns_topological_orders(a5c):
    result = dichromatic_number(a5c)
    assert isinstance(result.certificate, AcyclicCover)
    assert result.certificate.k == 3
    assert verify_certificate(a5c, result.certificate).ok


@pytest.mark.parametrize("t", range(1, 6))
def test_chromatic_number_of_single_edge_powers(single_edge, t):
    result = chromatic_number(and_power(single_edge, t))
    assert result.value == t + 1
    assert result.optimal


@pytest.mark.slow
@pytest.mark.parametrize("t", [6, 7, 8])
def test_chromatic_number_of_large_single_edge_powers(single_edge, t):
    result = chromatic_number(and_power(single_edge, t))
    assert result.value == t + 1
    assert result.optimal


def test_pentagon_square(c5_sym, limits):
    square = and_power(c5_sym, 2)
    assert square.n == 25
    assert chromatic_number(square, limits=limits).value == 5
    assert independence_number(square, limits=limits).value == 5


def test_height_coloring():
    assert height_coloring(generate_family("TT", 3)) == [0, 1, 2]
    assert height_coloring(generate_family("C", 3)) is None


def test_verify_coloring_reports_first_edge():
    K2 = generate_family("K", 2)
    check = verify_certificate(K2, Coloring((0, 0)))
    assert not check
    assert check.violation == ("edge", (0, 1))
    assert verify_certificate(K2, Coloring((0, 1)))


@pytest.mark.parametrize(
    "cert",
    [
        Coloring((0, 1)),
        Coloring((0, 1, -1)),
        AcyclicCover(((0, 3),)),
        AcyclicCover(((0, 0, 1, 2),)),
        SubsetCertificate("independent", (0, 7)),
        SubsetCertificate("transitive-clique", (0, 1)),
        SubsetCertificate("transitive-clique", (0, 1), (0, 2)),
    ],
)
def test_verify_rejects_malformed_certificates(cert):
    with pytest.raises(ValueError):
        verify_certificate(generate_family("C", 3), cert)


def test_verify_acyclic_cover_violations():
    C3 = generate_family("C", 3)
    assert verify_certificate(C3, AcyclicCover(((0, 1),))).violation == ("uncovered", 2)
    assert verify_certificate(C3, AcyclicCover(((1, 0), (2,)))).violation == ("backward-edge", 0, (0, 1))
    assert verify_certificate(C3, AcyclicCover(((0, 1), (2,))))


def test_verify_subset_violations(c5):
    assert verify_certificate(c5, SubsetCertificate("independent", (0, 1))).violation == ("edge", (0, 1))
    assert verify_certificate(c5, SubsetCertificate("independent", (4, 0))).violation == ("edge", (4, 0))
    assert verify_certificate(c5, SubsetCertificate("symmetric-clique", (0, 1))).violation == ("missing-edge", (1, 0))
    assert verify_certificate(c5, SubsetCertificate("acyclic", (0, 1, 2, 3)))
    assert not verify_certificate(c5, SubsetCertificate("acyclic", (0, 1, 2, 3, 4)))


def test_acyclic_cover_from_classes():
    C3 = generate_family("C", 3)
    cover = AcyclicCover.from_classes(C3, [[2, 1], [0]])
    assert cover.orders == ((1, 2), (0,))
    assert cover.class_of(3) == [1, 0, 0]
    with pytest.raises(ValueError, match="directed cycle"):
        AcyclicCover.from_classes(C3, [[0, 1, 2]])


def test_coloring_helpers():
    coloring = Coloring((4, 2, 4, 7))
    assert coloring.k == 3
    assert coloring.classes() == [[1], [0, 2], [3]]
    assert coloring.normalized() == Coloring((0, 1, 0, 2))


def test_certificate_json_round_trip(t5):
    result = transitive_clique_number(t5)
    payload = certificate_to_dict(t5, result.certificate, result.value, result.optimal)
    assert payload["kind"] == "transitive-clique"
    assert payload["graph_hash"] == t5.graph_hash
    assert certificate_from_dict(payload) == result.certificate

    cover = dichromatic_number(t5).certificate
    assert certificate_from_dict(certificate_to_dict(t5, cover)) == cover


def test_certificate_from_dict_with_sequence_names():
    payload = {"kind": "acyclic_cover", "witness": {"orders": [["00", "01"], [[1, 0], [1, 1]]]}}
    cover = certificate_from_dict(payload, {"base_n": 2, "t": 2, "op": "and"})
    assert cover.orders == ((0, 1), (2, 3))

    with pytest.raises(ValueError):
        certificate_from_dict({"kind": "coloring"})
    with pytest.raises(ValueError, match="Unknown certificate kind"):
        certificate_from_dict({"kind": "clique", "witness": {}})


def test_a5c_square_cover_verifies(a5c):
    square = and_power(a5c, 2)
    cover = a5c_square_cover()
    assert cover.k == 6
    assert verify_certificate(square, cover).ok


def test_constructive_power_coloring(bollobas_graph, a5c):
    for G in (bollobas_graph, a5c):
        cover = dichromatic_number(G).certificate
        for t in (1, 2, 3):
            coloring = constructive_power_coloring(G, cover, t)
            assert coloring.k <= constructive_bound(G.n, cover.k, t)
            assert verify_certificate(and_power(G, t), coloring).ok


def test_constructive_power_coloring_rejects_bad_cover(c5):
    with pytest.raises(ValueError, match="does not verify"):
        constructive_power_coloring(c5, AcyclicCover((tuple(range(5)),)), 2)
    with pytest.raises(ValueError):
        constructive_power_coloring(c5, AcyclicCover(((0, 1, 2, 3), (4,))), 0)


def test_power_cover(c5):
    cover = dichromatic_number(c5).certificate
    squared = power_cover(c5, cover, 2)
    assert squared.k == cover.k**2
    assert verify_certificate(and_power(c5, 2), squared).ok


def test_power_oracle_coloring_check(single_edge):
    square = and_power(single_edge, 2)
    coloring = chromatic_number(square).certificate
    assert power_oracle_coloring_check(single_edge, 2, coloring)
    check = power_oracle_coloring_check(single_edge, 2, Coloring((0, 1, 1, 0)))
    assert check.violation == ("edge", (0, 3))


def test_solver_size_limit(c5):
    with pytest.raises(ValueError, match="solver limit"):
        chromatic_number(c5, limits=Limits(solver_max_n=4))


def test_unknown_parameter(c5):
    with pytest.raises(ValueError, match="Unknown parameter"):
        compute_all_params(c5, ["theta"])
    assert list(compute_all_params(c5, ["chi", "alpha"])) == ["alpha", "chi"]


def test_budget_exhaustion_gives_bracket(mocker, c5_sym):
    mocker.patch.object(CliqueSolver, "_expand", side_effect=BudgetExhausted("out of time"))
    result = independence_number(c5_sym)
    assert isinstance(result, ParamResult)
    assert not result.optimal
    assert result.status == "bracket"
    assert result.lower == result.value == 1
    assert result.upper >= 2
    assert verify_certificate(c5_sym, result.certificate).ok


def test_chromatic_bracket_keeps_valid_coloring(mocker, c5_sym):
    from pydilworth.exact import ChromaticSolver

    mocker.patch.object(ChromaticSolver, "_branch", side_effect=BudgetExhausted("out of time"))
    mocker.patch("pydilworth.exact.iterated_greedy", side_effect=lambda rows, colors: list(range(len(rows))))
    result = chromatic_number(c5_sym)
    assert not result.optimal
    assert result.upper == 5
    assert result.lower == 2
    assert verify_certificate(c5_sym, result.certificate).ok


def test_digraph_with_isolated_vertices_has_trivial_subsets():
    G = Digraph.empty(1)
    assert symmetric_clique_number(G).value == 1
    assert dichromatic_number(G).value == 1
