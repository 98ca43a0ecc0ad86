import pytest
from hypothesis import given, strategies as st
from sympy import GF, Matrix
from sympy.polys.matrices import DomainMatrix

from coverbetti.errors import StructureError
from coverbetti.linalg import GF32003, QQ, FieldSpec, SparseMatrix, rank


def test_empty_matrix():
    assert rank(SparseMatrix(0, 0)) == 0
    assert rank(SparseMatrix(3, 4)) == 0


def test_hollow_triangle_boundary():
    # edges 12, 13, 23 -> vertices 1, 2, 3
    d1 = SparseMatrix.from_dense([[-1, -1, 0], [1, 0, -1], [0, 1, 1]])
    assert rank(d1) == 2
    assert rank(d1, GF32003) == 2


def test_permutation_matrix():
    perm = SparseMatrix.from_dense([[0, 1, 0, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 0, 1, 0]])
    assert rank(perm) == 4


def test_characteristic_matters():
    m = SparseMatrix.from_dense([[1, 1], [1, -1]])
    assert rank(m, QQ) == 2
    assert rank(m, FieldSpec(2)) == 1


def test_field_spec():
    assert FieldSpec.parse("q") == QQ
    assert FieldSpec.parse("p:32003") == GF32003
    with pytest.raises(ValueError):
        FieldSpec.parse("p:32004")
    with pytest.raises(ValueError):
        FieldSpec.parse("reals")


def test_entries_out_of_range():
    with pytest.raises(StructureError):
        SparseMatrix(2, 2, {(2, 0): 1})


matrices = st.integers(0, 7).flatmap(
    lambda r: st.integers(0, 7).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r
        ).map(lambda rows: (r, c, rows))
    )
)


@given(matrices)
def test_rank_matches_sympy(data):
    r, c, rows = data
    m = SparseMatrix(r, c, {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v})
    expected_q = Matrix(r, c, [v for row in rows for v in row]).rank() if r and c else 0
    assert rank(m, QQ) == expected_q
    for p in (2, 3, 32003):
        if r and c:
            dm = DomainMatrix([[GF(p)(v) for v in row] for row in rows], (r, c), GF(p))
            expected = dm.rank()
        else:
            expected = 0
        assert rank(m, FieldSpec(p)) == expected
    assert rank(m.transpose(), QQ) == rank(m, QQ)
