import pytest
from hypothesis import given, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors

from lcymirror import lattice as la
from lcymirror.lattice import LatticeError, QuotientShape

entries = st.integers(min_value=-12, max_value=12)


@st.composite
def int_matrices(draw, max_dim=5):
    m = draw(st.integers(min_value=1, max_value=max_dim))
    n = draw(st.integers(min_value=1, max_value=max_dim))
    return la.intmat([[draw(entries) for _ in range(n)] for _ in range(m)])


def test_snf_worked_example():
    U, S, V = la.smith_normal_form(la.intmat([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]))
    assert la.as_int_list(S) == [[2, 0, 0], [0, 6, 0], [0, 0, 12]]


def test_cokernel_examples():
    assert la.cokernel_shape(la.intmat([[2, 0], [0, 3]])) == QuotientShape(0, (6,))
    assert la.cokernel_shape(la.intmat([[1, 1]])) == QuotientShape(0)
    assert la.cokernel_shape(la.intmat([[2], [0]])) == QuotientShape(1, (2,))
    assert la.cokernel_shape(la.zeros(2, 0)) == QuotientShape(2)
    assert str(QuotientShape(2, (8,))) == "Z^2 + Z/8"
    assert str(QuotientShape(0)) == "0"


@given(int_matrices())
def test_snf_factorization(M):
    U, S, V = la.smith_normal_form(M)
    assert la.mat_equal(U.dot(M).dot(V), S)
    assert abs(la.det(U)) == 1 and abs(la.det(V)) == 1
    d = [S[i, i] for i in range(min(S.shape))]
    assert all(S[i, j] == 0 for i in range(S.shape[0]) for j in range(S.shape[1]) if i != j)
    nz = [x for x in d if x != 0]
    assert all(x > 0 for x in nz)
    assert d[:len(nz)] == nz
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


@given(int_matrices())
def test_invariant_factors_match_sympy(M):
    ours = la.invariant_factors(M)
    theirs = [int(x) for x in sympy_invariant_factors(Matrix(la.as_int_list(M)), domain=ZZ) if x != 0]
    assert ours == [abs(x) for x in theirs]


@given(int_matrices())
def test_kernel_is_saturated_and_complete(M):
    ker = la.kernel_basis(M)
    for v in ker:
        assert not any(M.dot(v))
    assert len(ker) == M.shape[1] - la.rank(M)
    assert la.is_saturated(ker, M.shape[1])


@given(int_matrices(), st.lists(entries, min_size=5, max_size=5))
def test_solve_integer(M, x):
    x = la.intvec(x[:M.shape[1]])
    b = M.dot(x)
    y = la.solve_integer(M, b)
    assert y is not None and la.mat_equal(M.dot(y).reshape(-1, 1), b.reshape(-1, 1))


def test_solve_integer_none():
    assert la.solve_integer(la.intmat([[2]]), [1]) is None
    assert la.solve_integer(la.intmat([[1], [0]]), [0, 1]) is None


def test_orthogonal_complement_hyperbolic():
    H = la.intmat([[0, 1], [1, 0]])
    perp = la.orthogonal_complement(H, [[1, 0]])
    assert len(perp) == 1 and la.as_int_list(perp[0]) in ([1, 0], [-1, 0])
    with pytest.raises(LatticeError) as e:
        la.orthogonal_complement(la.intmat([[0, 1], [2, 0]]), [[1, 0]])
    assert e.value.code == "shape"


def test_unimodular_inverse_and_order():
    A = la.intmat([[0, -1], [1, 1]])
    assert la.mat_equal(A.dot(la.unimodular_inverse(A)), la.identity(2))
    assert la.matrix_order(A) == 6
    assert la.matrix_order(la.intmat([[1, 1], [0, 1]]), 50) is None
    with pytest.raises(LatticeError) as e:
        la.unimodular_inverse(la.intmat([[2, 0], [0, 1]]))
    assert e.value.code == "not_unimodular"


def test_quotient_shape_validation():
    with pytest.raises(LatticeError):
        QuotientShape(0, (2, 3))
    with pytest.raises(LatticeError):
        QuotientShape(-1)
    assert QuotientShape(1, (2,)).to_json() == {"free_rank": 1, "torsion": [2]}


def test_big_entries_stay_exact():
    M = la.intmat([[10**30, 1], [0, 10**30]])
    U, S, V = la.smith_normal_form(M)
    assert la.mat_equal(U.dot(M).dot(V), S)
    assert S[1, 1] == 10**60
    assert isinstance(S[1, 1], int)
