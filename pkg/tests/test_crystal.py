from collections import Counter

import pytest

from mvlab.checks import axiom_violations
from mvlab.crystal import (apply_word, c_value, crystal_graph, epsilon, etilde, ftilde,
                           ftilde_power, generate, node_id, stats, string_bottom)
from mvlab.polytope import trivial

from conftest import corpus, kostant_counts


def test_first_steps_a2(a2):
    T = trivial(a2)
    F = ftilde(T, 1)
    assert F.weight == (-1, 0)
    assert F[(1, 0)] == -1
    assert etilde(T, 1) is None
    assert etilde(F, 1) == T
    st = stats(F, 1)
    assert (st.eps, st.phi, st.c) == (1, -1, -2)
    assert stats(F, 2).phi == 1


def test_operators_do_not_commute(a2):
    T = trivial(a2)
    assert apply_word(T, [1, 2]) != apply_word(T, [2, 1])
    assert apply_word(T, [1, 2]).weight == apply_word(T, [2, 1]).weight == (-1, -1)


@pytest.mark.parametrize("name, depth", [("A2", 8), ("A3", 5), ("D4", 4)])
def test_generated_weight_multiplicities_match_partition_function(name, depth):
    # B(infinity) has p(nu) elements of weight -nu; h_i coordinates = root coordinates
    got = Counter(tuple(-x for x in M.weight) for M in corpus(name, depth))
    assert got == Counter(kostant_counts(name, depth))


def test_depth_zero_and_negative(a2):
    assert generate(a2, 0) == [trivial(a2)]
    with pytest.raises(ValueError):
        generate(a2, -1)


def test_a2_depth_two_count(a2):
    S = generate(a2, 2)
    assert len(S) == 7
    assert sum(1 for M in S if M.weight == (-1, -1)) == 2


@pytest.mark.parametrize("name, depth", [("A2", 6), ("A3", 4), ("D4", 3)])
def test_crystal_axioms(name, depth):
    for M in corpus(name, depth):
        for j in range(1, M.rs.rank + 1):
            assert axiom_violations(M, j) == []


def test_string_bottom(a3):
    M = apply_word(trivial(a3), [2, 1, 1, 2])
    top, k = string_bottom(M, 1)
    assert epsilon(top, 1) == 0
    assert k == epsilon(M, 1)
    assert ftilde_power(top, 1, k) == M


def test_c_value_equals_phi_minus_one(d4):
    for M in corpus("D4", 3):
        for j in range(1, 5):
            assert c_value(M, j) == stats(M, j).phi - 1


def test_bad_index(a2):
    with pytest.raises(ValueError):
        ftilde(trivial(a2), 3)


def test_dot_graph(a2):
    S = generate(a2, 2)
    dot = crystal_graph(S)
    assert dot.startswith("digraph crystal {")
    # each node of depth < 2 has two outgoing edges inside S
    assert dot.count("->") == 6
    assert dot == crystal_graph(list(reversed(S)))
    assert node_id(S[0]).startswith("n") and len(node_id(S[0])) == 13


@pytest.mark.parametrize("j", [1, 2, 3, 4])
def test_ftilde_of_trivial_is_a_segment(d4, j):
    # the segment [-h_j, 0] has M_gamma = min(0, -<h_j, gamma>)
    F = ftilde(trivial(d4), j)
    assert F.entries == tuple(min(0, -g[j - 1]) for g in d4.gammas)


def test_trivial_stats(d4):
    for j in range(1, 5):
        st = stats(trivial(d4), j)
        assert (st.eps, st.phi, st.c) == (0, 0, -1)


def test_worked_d4_stats(d4):
    P = apply_word(trivial(d4), [2, 2])
    assert c_value(P, 1) == 1
    assert epsilon(P, 2) == 2
    assert etilde(ftilde(P, 1), 1) == P


def test_etilde_inverts_ftilde_on_sample():
    for M in corpus("D4", 4)[:100]:
        for j in range(1, 5):
            assert etilde(ftilde(M, j), j) == M


def test_graph_of_trivial(a2):
    dot = crystal_graph([trivial(a2)])
    assert dot.count("[label=\"(") == 1 and "->" not in dot
