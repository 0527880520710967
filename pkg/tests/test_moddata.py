import json

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exotic_mtc import moddata as M
from exotic_mtc.cyclo import root_of_unity, sqrt_int
from exotic_mtc.fusion import kronecker


def numeric(md):
    S = np.array([[complex(md.s(i, j)) for j in range(md.rank)] for i in range(md.rank)])
    T = np.array([complex(t) for t in md.t_diag])
    return S, T


@pytest.mark.parametrize("name", ["z_e6", "z_haagerup"])
def test_axioms_pass(name):
    rep = M.validate(M.bundled(name))
    assert rep.ok, rep.text()


@pytest.mark.parametrize("name,rank,N", [("z_e6", 10, 24), ("z_haagerup", 12, 39)])
def test_shapes(name, rank, N):
    md = M.bundled(name)
    assert md.rank == rank and md.conductor == N


def test_numeric_oracle_agrees(e6, haag):
    for md in (e6, haag):
        S, T = numeric(md)
        D2 = float(np.sum(np.abs(S[0]) ** 2) / abs(S[0, 0]) ** 2) * abs(S[0, 0]) ** 2
        assert np.allclose(S @ S.conj().T, D2 * np.eye(md.rank), atol=1e-8)
        d = S[0].real / S[0, 0].real
        assert abs(float(M.global_dimension(md).approx().real) - float(np.sum(d**2))) < 1e-8
        # Gauss sum from numbers
        gauss = np.sum(T * d**2)
        assert abs(complex(M.gauss_sum(md)) - gauss) < 1e-8


def test_quantum_orders(e6, haag):
    assert M.total_quantum_order(e6) == 6 + 2 * sqrt_int(3)
    h = (39 + 9 * sqrt_int(13)) / 2
    assert M.global_dimension(haag) == h * h
    assert abs(float(M.total_quantum_order(haag).approx().real) - float((39 + 9 * mpmath.sqrt(13)) / 2)) < 1e-9


def test_central_charge_zero(e6, haag):
    assert M.central_charge(e6) == 0 and M.central_charge(haag) == 0


def test_duality(e6, haag):
    de = M.charge_conjugation(e6)
    assert [tuple(e6.labels[i] for i in p) for p in de.pairs] == [("X2", "X3")]
    assert de.self_dual == 8
    assert not M.charge_conjugation(haag).pairs


def test_round_trip(tmp_path, e6, haag):
    for md in (e6, haag):
        p = tmp_path / "m.json"
        M.save(md, p)
        back = M.load(p)
        assert back == md
        assert M.to_dict(back) == M.to_dict(md)


def test_trivial_and_product(e6):
    t = M.trivial()
    assert M.validate(t).ok
    prod = kronecker(t, t)
    assert prod.rank == 1


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("s_unnormalized"),
        lambda d: d.__setitem__("t_diag", d["t_diag"][:-1]),
        lambda d: d["s_unnormalized"].__setitem__(0, d["s_unnormalized"][0][:-1]),
        lambda d: d["s_unnormalized"][1].__setitem__(1, "bad"),
        lambda d: d.__setitem__("conductor", "x"),
        lambda d: d.__setitem__("labels", d["labels"][:-1]),
    ],
)
def test_malformed_rejected(mutate):
    raw = M.to_dict(M.bundled("z_e6"))
    raw = json.loads(json.dumps(raw))
    mutate(raw)
    with pytest.raises(M.ModularDataError):
        M.from_dict(raw)


def test_empty_and_missing(tmp_path):
    p = tmp_path / "e.json"
    p.write_text("")
    with pytest.raises(M.ModularDataError):
        M.load(p)
    with pytest.raises(M.ModularDataError):
        M.load(tmp_path / "nope.json")


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 9), st.integers(1, 23))
def test_twist_corruption_detected(i, k):
    md = M.bundled("z_e6")
    t = list(md.t_diag)
    t[i] = t[i] * root_of_unity(24, k)
    bad = M.from_matrices(md.labels, [[md.s(a, b) for b in range(10)] for a in range(10)], t, md.d_total)
    assert not M.validate(bad).ok
