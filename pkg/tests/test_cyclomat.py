import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from exotic_mtc.cyclo import CycloNumber, root_of_unity
from exotic_mtc.cyclomat import CycloMatrix


def to_complex(M: CycloMatrix) -> np.ndarray:
    return np.array([[complex(x) for x in row] for row in M.entries()])


@st.composite
def matrices(draw, n=24, size=3, big=False):
    hi = 10**9 if big else 6
    rows = []
    for _ in range(size):
        row = []
        for _ in range(size):
            terms = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(-hi, hi), st.sampled_from([1, 2, 3])), max_size=3))
            row.append(CycloNumber.from_terms(n, [list(t) for t in terms]))
        rows.append(row)
    return CycloMatrix.from_entries(rows, n)


@settings(max_examples=40, deadline=None)
@given(matrices(), matrices())
def test_matmul_matches_complex(A, B):
    got = to_complex(A @ B)
    want = to_complex(A) @ to_complex(B)
    assert np.allclose(got, want, atol=1e-6)


@settings(max_examples=25, deadline=None)
@given(matrices(big=True), matrices(big=True))
def test_matmul_large_entries_exact(A, B):
    # compare against entrywise CycloNumber arithmetic (object path, no BLAS)
    C = A @ B
    a, b = A.entries(), B.entries()
    for i in range(3):
        for j in range(3):
            want = sum((a[i][k] * b[k][j] for k in range(3)), CycloNumber(24))
            assert C[i, j] == want


@settings(max_examples=25, deadline=None)
@given(matrices(), matrices(), matrices())
def test_associative_and_distributive(A, B, C):
    assert (A @ B) @ C == A @ (B @ C)
    assert A @ (B + C) == A @ B + A @ C


def test_identity_inverse_dagger():
    z = root_of_unity(12)
    U = CycloMatrix.from_entries([[z, 0], [0, z**5]], 12)
    assert U @ U.dagger() == CycloMatrix.identity(2, 12)
    assert U.inverse() == U.dagger()
    assert (U**12).is_identity()
    assert U.is_diagonal() and not (U + CycloMatrix.from_entries([[0, 1], [0, 0]], 12)).is_diagonal()


def test_key_and_hash():
    z = root_of_unity(12)
    A = CycloMatrix.from_entries([[z, 1], [0, z]], 12)
    B = CycloMatrix.from_entries([[z, 1], [0, z]], 12) @ CycloMatrix.identity(2, 12)
    assert A.key() == B.key()
    assert A == A.embed(24) and hash(A) == hash(A.embed(24))
    assert A.key() != (A @ A).key()
