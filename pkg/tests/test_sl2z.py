from collections import deque

import numpy as np
import pytest

from exotic_mtc import moddata as M
from exotic_mtc import sl2z as Q
from exotic_mtc.cyclo import rational, root_of_unity, sqrt_int


def float_closure(md, cap=50000):
    """Independent oracle: BFS over complex matrices keyed by rounded entries."""
    S = np.array([[complex(md.s(i, j)) for j in range(md.rank)] for i in range(md.rank)])
    S = S / np.sqrt(np.sum(np.abs(S[0]) ** 2))
    T = np.diag([complex(t) for t in md.t_diag])
    key = lambda g: (np.round(g, 6) + 0.0).tobytes()
    I = np.eye(md.rank, dtype=complex)
    seen = {key(I)}
    todo = deque([I])
    while todo:
        g = todo.popleft()
        for s in (S, T):
            h = g @ s
            k = key(h)
            if k not in seen:
                seen.add(k)
                assert len(seen) <= cap
                todo.append(h)
    return len(seen)


@pytest.fixture(scope="module")
def rep_e6(e6):
    return Q.from_moddata(e6)


def test_e6_relations(rep_e6):
    rep = Q.verify_e6_relation_suite(rep_e6)
    assert rep.ok, rep.text()
    assert len(rep.checks) == 19


def test_unitary(rep_e6):
    I = rep_e6.identity()
    assert rep_e6.S @ rep_e6.S.dagger() == I
    assert rep_e6.T @ rep_e6.T.dagger() == I


def test_words(rep_e6):
    w = Q.parse_word("S T^-1 S^2")
    assert w == [("S", 1), ("T", -1), ("S", 2)]
    g = Q.eval_word(rep_e6, w)
    assert g @ Q.eval_word(rep_e6, [("S", -2), ("T", 1), ("S", -1)]) == rep_e6.identity()
    with pytest.raises(ValueError):
        Q.parse_word("S U")


def test_e6_closure_matches_float_oracle(rep_e6, e6):
    n = Q.closure_order(rep_e6, strategy="bfs")
    assert n == Q.closure_order(rep_e6, strategy="dfs")
    assert n == float_closure(e6)
    assert 31104 % n == 0 and n % 10


def test_cap(rep_e6):
    with pytest.raises(Q.CapExceeded):
        Q.closure_order(rep_e6, cap=100)


def test_haagerup_presentation(haag):
    rep = Q.psl2_presentation_check(Q.from_moddata(haag), 39)
    assert rep.ok and len(rep.checks) == 4
    with pytest.raises(ValueError):
        Q.psl2_presentation_check(Q.from_moddata(haag), 38)


def test_presentation_detects_wrong_level(haag):
    rep = Q.psl2_presentation_check(Q.from_moddata(haag), 13)
    assert not rep.ok


@pytest.mark.slow
def test_haagerup_closure_matches_float_oracle(haag):
    rep = Q.from_moddata(haag)
    assert Q.closure_order(rep) == float_closure(haag) == 13104


def test_semion_image():
    s = [[rational(1), rational(1)], [rational(1), rational(-1)]]
    semion = M.from_matrices(["1", "s"], s, [rational(1), root_of_unity(4)], sqrt_int(2))
    assert M.validate(semion).ok
    rep = Q.from_moddata(semion)
    assert Q.closure_order(rep) == float_closure(semion)
