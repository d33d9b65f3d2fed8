"""
Compare the solvers with exhaustive reference implementations on seeded
random digraphs.
"""

import pytest

from pydilworth.digraph import closure_graph
from pydilworth.exact import compute_all_params, verify_certificate
from pydilworth.fractional import fractional_chromatic, fractional_dichromatic
from tests.oracles import brute_force

ORACLES = {
    "alpha": brute_force.alpha,
    "omega_s": brute_force.omega_s,
    "omega_tr": brute_force.omega_tr,
    "a": brute_force.acyclicity,
    "chi": brute_force.chromatic,
    "chi_dir": brute_force.dichromatic,
}

# vertex enumeration of the packing polytope grows too fast beyond this
LP_ENUMERATION_MAX_N = 7


def test_oracle_graphs_cover_every_size(oracle_digraphs):
    assert len(oracle_digraphs) == 200
    assert {G.n for G in oracle_digraphs} == set(range(2, 9))


@pytest.mark.slow
def test_parameters_match_brute_force(oracle_digraphs, limits):
    for G in oracle_digraphs:
        results = compute_all_params(G, limits=limits)
        for name, oracle in ORACLES.items():
            result = results[name]
            assert result.optimal, (name, G.edges())
            assert result.value == oracle(G), (name, G.edges())
            assert verify_certificate(G, result.certificate).ok


@pytest.mark.slow
def test_fractional_values_match_brute_force(oracle_digraphs):
    for G in oracle_digraphs:
        dichromatic = fractional_dichromatic(G)
        chromatic = fractional_chromatic(G)
        assert brute_force.covering_certificate_holds(G, dichromatic, "acyclic"), G.edges()
        assert brute_force.covering_certificate_holds(G, chromatic, "independent"), G.edges()
        if G.n <= LP_ENUMERATION_MAX_N:
            assert dichromatic.value == brute_force.fractional_dichromatic(G), G.edges()
            assert chromatic.value == brute_force.fractional_chromatic(G), G.edges()


def test_fractional_certificates_on_small_graphs(random_digraphs):
    for G in random_digraphs:
        if G.n > 5:
            continue
        assert brute_force.covering_certificate_holds(G, fractional_dichromatic(G), "acyclic"), G.edges()
        assert fractional_chromatic(G).value == brute_force.fractional_chromatic(G), G.edges()


def test_closure_matches_collision_pairs(random_digraphs):
    for G in random_digraphs:
        C = closure_graph(G)
        assert C.is_symmetric
        pairs = {(u, v) for u, v in C.edges() if u < v}
        assert pairs == brute_force.closure_pairs(G), G.edges()
