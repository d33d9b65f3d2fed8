"""
Independent brute-force oracles used by the equivalence suites.
"""
