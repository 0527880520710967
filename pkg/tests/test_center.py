import copy

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from exotic_mtc import suites
from exotic_mtc.center import double as CD
from exotic_mtc.center.data import CategoryDataError, build, load_raw
from exotic_mtc.cyclo import CycloNumber, root_of_unity
from exotic_mtc.report import Report


def test_pentagon_and_rigidity(center):
    cat, objs = center
    rep = CD.verify_rigidity(cat, CD.verify_pentagon(cat))
    assert rep.ok and len(rep.checks) >= 2


@pytest.mark.parametrize("idx", range(1, 10))
def test_half_braidings(center, idx):
    cat, objs = center
    assert CD.verify_half_braiding(cat, objs[idx].name, objs[idx].hb).ok


def test_simple_and_distinct(center):
    cat, objs = center
    assert [len(CD.center_hom(cat, o, o)) for o in objs] == [1] * 10
    assert not any(CD.center_hom(cat, a, b) for i, a in enumerate(objs) for b in objs[i + 1:])


def test_dim_double(center):
    cat, objs = center
    ok, _, _ = CD.dim_double_check(cat, objs)
    assert ok


def test_twists(center):
    cat, objs = center
    got = [CD.twist(cat, o).as_root_of_unity() for o in objs]
    from fractions import Fraction as F

    assert got == [F(0), F(1, 2), F(3, 4), F(5, 12), F(5, 12), F(1, 6), F(2, 3), F(0), F(1, 2), F(0)]


def test_derived_fusion_examples(center):
    cat, objs = center
    by = {o.name: o for o in objs}
    assert CD.center_tensor_decompose(cat, objs, by["X4"], by["X4"]) == {"1": 1, "X4": 1, "V": 1}
    assert CD.center_tensor_decompose(cat, objs, by["W"], by["W"]) == {"1": 1, "Y": 1, "X4": 1, "X5": 1, "U": 2, "V": 2}


def test_full_center_suite():
    rep = suites.center_e6()
    assert rep.ok, rep.text()
    assert rep["S-matches"].witness == "complex conjugate"


def test_bad_data_rejected(tmp_path):
    raw = load_raw()
    raw.pop("associators")
    with pytest.raises(CategoryDataError):
        build(raw)
    p = tmp_path / "x.json"
    p.write_text("{")
    with pytest.raises(CategoryDataError):
        load_raw(p)


# mutation sensitivity -------------------------------------------------------------

RAW = load_raw()


def _sites(raw):
    out = []
    for ai, a in enumerate(raw["associators"]):
        for r, row in enumerate(a["matrix"]):
            out += [("associator", ai, r, c) for c in range(len(row))]
    for hi, h in enumerate(raw["half_braidings"]):
        for x, terms in sorted(h["e"].items()):
            out += [("half-braiding", hi, x, t) for t in range(len(terms))]
    return out


SITES = _sites(RAW)


def mutate(raw, site, op):
    m = copy.deepcopy(raw)
    kind, i, a, b = site
    if kind == "associator":
        holder, key = m["associators"][i]["matrix"][a], b
    else:
        holder, key = m["half_braidings"][i]["e"][a][b], "c"
    lit = holder[key]
    if isinstance(lit, dict):
        lit = lit.setdefault("c", [])
    if op == "shift" or not lit:
        lit.append([0, 1, 1])  # add 1
    else:
        lit[:] = [[k, -num, den] for k, num, den in lit]  # negate
    return m


def detected(raw) -> bool:
    try:
        return not suites.center_axioms(raw).ok
    except (CategoryDataError, ArithmeticError):
        return True


@settings(max_examples=20, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.sampled_from(SITES), st.sampled_from(["shift", "negate"]))
def test_single_entry_mutation_is_detected(site, op):
    assert detected(mutate(RAW, site, op))


def test_unmutated_passes():
    assert not detected(RAW)
