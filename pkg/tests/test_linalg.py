from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from mvlab import linalg


def test_rank_and_nullspace_by_hand():
    m = linalg.to_matrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert linalg.rank(m, 3) == 2
    ns = linalg.nullspace(m, 3)
    assert len(ns) == 1
    assert all(sum(a * b for a, b in zip(row, ns[0])) == 0 for row in m)


def test_inverse_and_solve_exact():
    a = linalg.to_matrix([[2, 1], [1, 1]])
    assert linalg.inverse(a) == [[1, -1], [-1, 2]]
    assert linalg.solve(a, [Fraction(3), Fraction(2)]) == [1, 1]
    assert linalg.solve(linalg.to_matrix([[1, 1], [1, 1]]), [Fraction(0), Fraction(1)]) is None


def test_express():
    basis = [[Fraction(1), Fraction(1)], [Fraction(0), Fraction(1)]]
    assert linalg.express(basis, [Fraction(2), Fraction(5)]) == [2, 3]


matrices = st.integers(1, 4).flatmap(lambda n: st.lists(
    st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=1, max_size=4))


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rank_nullity(m):
    n = len(m[0])
    a = linalg.to_matrix(m)
    null = linalg.nullspace(a, n)
    assert linalg.rank(a, n) + len(null) == n
    for v in null:
        assert all(sum(x * y for x, y in zip(row, v)) == 0 for row in a)
