from fractions import Fraction

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from exotic_mtc.cyclo import rational, sqrt_int
from exotic_mtc.linalg import det, inverse, matmul, nullspace, rank, rref

small = st.integers(-4, 4)


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_det_rank_match_numpy(rows):
    F = [[Fraction(x) for x in r] for r in rows]
    assert abs(float(det(F)) - np.linalg.det(np.array(rows, dtype=float))) < 1e-6
    assert rank(F) == np.linalg.matrix_rank(np.array(rows, dtype=float))


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_inverse_and_nullspace(rows):
    F = [[Fraction(x) for x in r] for r in rows]
    if det(F) != 0:
        I = matmul(F, inverse(F))
        assert I == [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    else:
        for v in nullspace(F, 3, Fraction(0), Fraction(1)):
            assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in F)


def test_over_cyclotomics():
    s = sqrt_int(3)
    M = [[s, rational(1)], [rational(1), s]]
    assert det(M) == 2
    Minv = inverse(M)
    assert matmul(M, Minv)[0][0] == 1 and matmul(M, Minv)[0][1] == 0
    R, piv = rref([[rational(2), rational(4)], [rational(1), rational(2)]])
    assert piv == [0]


def test_integer_input_stays_exact():
    assert inverse([[2, 0], [0, 4]]) == [[Fraction(1, 2), 0], [0, Fraction(1, 4)]]
