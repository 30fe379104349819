from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from hhquiver import linalg

INC = [[1, -1, 0], [0, 1, -1], [-1, 0, 1]]


def fr(m):
    return [[Fraction(x) for x in row] for row in m]


def test_rref_identity_fixed():
    eye = fr([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert linalg.rref(eye) == eye


def test_rref_rank_one_scaling():
    assert linalg.rref([[2, 4], [1, 2]]) == fr([[1, 2], [0, 0]])


def test_rref_incidence_two_pivots():
    r, piv = linalg.rref_with_pivots(INC)
    assert len(piv) == 2
    assert r[2] == [0, 0, 0]


def test_rank_examples():
    assert linalg.rank([[0, 0, 0], [0, 0, 0]]) == 0
    assert linalg.rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert linalg.rank(INC) == 2


def test_kernel_examples():
    assert linalg.kernel_basis([[1, 0], [0, 1]]) == []
    assert len(linalg.kernel_basis([[0, 0, 0], [0, 0, 0]])) == 3
    (v,) = linalg.kernel_basis(INC)
    assert v[0] != 0 and v[0] == v[1] == v[2]


def test_kernel_with_no_rows_is_identity():
    assert linalg.kernel_basis([], 2) == [[1, 0], [0, 1]]


def test_mat_vec():
    assert linalg.mat_vec(INC, [1, 1, 1]) == [0, 0, 0]


matrices = st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=0, max_size=5)
    .map(lambda rows: (rows, c))
)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_rank_nullity(mc):
    m, c = mc
    assert linalg.rank(m, c) + len(linalg.kernel_basis(m, c)) == c


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_kernel_vectors_are_exact_solutions(mc):
    m, c = mc
    for v in linalg.kernel_basis(m, c):
        assert all(x == 0 for x in linalg.mat_vec(m, v))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_rref_idempotent(mc):
    m, c = mc
    r = linalg.rref(m, c)
    assert linalg.rref(r, c) == r
