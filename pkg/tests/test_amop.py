import pytest

from mvlab.amop import (AmbiguousMaximumError, EmptyBoxError, am, am_box_search,
                        check_conditions, check_instance, far_string_prediction, m_double_prime,
                        m_value, r_map, verify_theorem)
from mvlab.crystal import apply_word, ftilde, ftilde_power
from mvlab.polytope import Containment, compare, trivial

from conftest import corpus


def test_trivial_am_is_ftilde(a2):
    T = trivial(a2)
    res = am(T, 1, with_report=True)
    assert res.datum == ftilde(T, 1)
    assert res.equal_to_ftilde
    assert all(res.conditions_report.values())


def test_m_double_prime_matches_ftilde_in_a2(a2):
    # in A2 every <h_j, gamma> is at most 1, so M'' is f~ itself
    for M in corpus("A2", 5):
        for j in (1, 2):
            assert m_double_prime(M, j) == ftilde(M, j)


def test_box_search_agrees_with_fast_path():
    for M in corpus("A3", 3):
        for j in (1, 2, 3):
            assert am_box_search(M, j) == am(M, j).datum


def test_m_value_trivial_and_d4(d4):
    assert m_value(trivial(d4), 1) == 0
    P = apply_word(trivial(d4), [2, 2])
    assert m_value(P, 1) == 2


def test_r_map_sends_mu_sj_to_mu_e_minus_hj(a3):
    for M in corpus("A3", 3):
        for j in (1, 2, 3):
            assert check_conditions(M, ftilde(M, j), j)["r_sanity"]


def test_conditions_detect_wrong_candidate(a2):
    T = trivial(a2)
    rep = check_conditions(T, T, 1)
    assert not rep["ii"] and not rep["b"]


def test_far_string_prediction(a3):
    M = apply_word(trivial(a3), [2, 3])
    m = m_value(M, 2)
    Pk = ftilde_power(M, 2, m + 1)
    assert far_string_prediction(Pk, 2) == ftilde(Pk, 2).entries


@pytest.mark.parametrize("which", ["thm31", "thm32", "thm33", "am_conjecture"])
def test_theorems_small(which):
    rep = verify_theorem(corpus("A3", 3), None, which)
    assert rep.ok and rep.checked == 3 * len(corpus("A3", 3))


def test_unknown_selector(a2):
    with pytest.raises(ValueError):
        check_instance(trivial(a2), 1, "thm99")


def test_empty_box(a2):
    # a cap below f~ P has no feasible point
    from mvlab.amop import _box_max
    T = trivial(a2)
    F = ftilde(T, 1).entries
    with pytest.raises(EmptyBoxError):
        _box_max(F, tuple(x - 1 if i == 0 else x for i, x in enumerate(F)), a2)


def test_b3_strict_containment():
    # B3 folded from D4 has instances where AM is strictly inside f^
    from mvlab import parse_root_system
    rs = parse_root_system("B3@D4")
    hits = []
    for M in corpus("B3@D4", 5):
        res = am(M, 1)
        if not res.equal_to_ftilde:
            hits.append(M)
            assert compare(res.datum, ftilde(M, 1)) is Containment.FIRST_IN_SECOND
    assert sorted(M.weight for M in hits) == [(0, -2, -3), (0, -2, -2)]
    assert rs.name == "B3@D4"


def test_errors_are_distinct():
    assert issubclass(AmbiguousMaximumError, Exception)
    assert not issubclass(EmptyBoxError, AmbiguousMaximumError)


def test_worked_d4_am(d4):
    P = apply_word(trivial(d4), [2, 2])
    res = am(P, 1)
    assert res.route == "box_search"
    assert res.datum == ftilde(P, 1)
    Mpp = m_double_prime(P, 1)
    diff = [g for g in range(len(d4.gammas)) if Mpp.entries[g] != res.datum.entries[g]]
    assert [d4.gammas[g] for g in diff] == [(2, -1, 0, 0)]
    rep = check_conditions(P, Mpp, 1)
    assert rep["a"] and rep["b"] and rep["c"] and not rep["edge_valid"]


def test_trivial_m_double_prime_is_segment(d4):
    for j in range(1, 5):
        assert m_double_prime(trivial(d4), j) == ftilde(trivial(d4), j)
        assert am(trivial(d4), j).route == "fast_path"
