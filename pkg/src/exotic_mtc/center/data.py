"""Loading the skeletal category and its half-braidings from JSON."""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any

import numpy as np

from ..cyclo import CycloNumber, parse_literal
from .category import SkeletalFusionCategory
from .double import CenterObject, HalfBraiding, underlying
from .scalars import RadicalNumber, Scalar


class CategoryDataError(ValueError):
    pass


def parse_scalar(value: Any, conductor: int, radicand: CycloNumber | None) -> Scalar:
    """Cyclotomic literal, or {"c": literal, "rho": literal} for c + rho_part * rho."""
    if isinstance(value, dict):
        if radicand is None:
            raise CategoryDataError("radical literal without a declared radical")
        extra = set(value) - {"c", "rho"}
        if extra:
            raise CategoryDataError(f"unknown keys {sorted(extra)} in scalar literal")
        a = parse_literal(value.get("c", []), conductor)
        b = parse_literal(value.get("rho", []), conductor)
        return RadicalNumber.make(a, b, radicand)
    return parse_literal(value, conductor)


def scalar_literal(x: Scalar, conductor: int) -> Any:
    if isinstance(x, RadicalNumber):
        return {"c": _cyc(x.a, conductor).terms(), "rho": _cyc(x.b, conductor).terms()}
    return _cyc(x, conductor).terms()


def _cyc(x: Scalar, conductor: int) -> CycloNumber:
    if isinstance(x, CycloNumber):
        return x.embed(conductor)
    return CycloNumber.from_rational(x, conductor)


def build(raw: dict) -> tuple[SkeletalFusionCategory, list[CenterObject]]:
    try:
        return _build(raw)
    except (KeyError, TypeError, IndexError, ValueError, AttributeError) as exc:
        if isinstance(exc, CategoryDataError):
            raise
        raise CategoryDataError(f"malformed category data: {exc!r}") from exc


def _build(raw: dict) -> tuple[SkeletalFusionCategory, list[CenterObject]]:
    N = raw["conductor"]
    radicand = parse_literal(raw["radical"]["square"], N) if "radical" in raw else None
    scal = lambda v: parse_scalar(v, N, radicand)  # noqa: E731
    names = list(raw["simples"])
    idx = {s: i for i, s in enumerate(names)}
    n = len(names)
    fusion = np.zeros((n, n, n), dtype=int)
    for a in range(n):
        fusion[0, a, a] = fusion[a, 0, a] = 1
    for a, b, c, m in raw["fusion"]:
        fusion[idx[a], idx[b], idx[c]] = m
    dims = [scal(raw["dims"][s]) for s in names]
    rigidity = {idx[s]: (scal(v["d"]), scal(v["b"])) for s, v in raw["rigidity"].items()}

    # F-matrices are given against explicit key lists; reorder to the evaluator's
    probe = SkeletalFusionCategory.__new__(SkeletalFusionCategory)
    probe.n, probe.N = n, fusion
    assoc = {}
    for entry in raw["associators"]:
        a, b, c = (idx[s] for s in entry["abc"])
        t = idx[entry["t"]]
        rows = [(idx[f], k, l) for f, k, l in entry["rows"]]
        cols = [(idx[e], m, v) for e, m, v in entry["cols"]]
        if sorted(rows) != sorted(SkeletalFusionCategory.right_keys(probe, a, b, c, t)):
            raise CategoryDataError(f"row basis of {entry['abc']}->{entry['t']} does not match the fusion rules")
        if sorted(cols) != sorted(SkeletalFusionCategory.left_keys(probe, a, b, c, t)):
            raise CategoryDataError(f"column basis of {entry['abc']}->{entry['t']} does not match the fusion rules")
        mat = entry["matrix"]
        if len(mat) != len(rows) or any(len(r) != len(cols) for r in mat):
            raise CategoryDataError(f"associator {entry['abc']}->{entry['t']} has the wrong shape")
        rpos = {k: i for i, k in enumerate(SkeletalFusionCategory.right_keys(probe, a, b, c, t))}
        cpos = {k: i for i, k in enumerate(SkeletalFusionCategory.left_keys(probe, a, b, c, t))}
        M = np.empty((len(rows), len(cols)), dtype=object)
        for i, rk in enumerate(rows):
            for j, ck in enumerate(cols):
                M[rpos[rk], cpos[ck]] = scal(mat[i][j])
        assoc[(a, b, c, t)] = M
    cat = SkeletalFusionCategory(names, fusion, assoc, dims, rigidity)

    # the unit object carries the trivial half-braiding
    objects = [CenterObject(raw.get("unit_name", "1"), HalfBraiding(0, {z: cat.relabel((0, z), (z, 0)) for z in range(1, n)}))]
    for hb in raw["half_braidings"]:
        comps = [idx[s] for s in hb["object"]]
        z = underlying(comps)
        e = {}
        for xname, terms in hb["e"].items():
            xi = idx[xname]
            src, tgt = (z, xi), (xi, z)
            m = cat.zero(src, tgt)
            for term in terms:
                t = idx[term["t"]]
                fz, fmu = term["from"]
                tz, tmu = term["to"]
                i = cat.position(src, t)[(idx[fz], xi, _ckey(comps, idx[fz]), None, fmu)]
                j = cat.position(tgt, t)[(xi, idx[tz], None, _ckey(comps, idx[tz]), tmu)]
                m.blocks[t][j, i] = m.blocks[t][j, i] + scal(term["c"])
            e[xi] = m
        missing = set(range(1, n)) - set(e)
        if missing:
            raise CategoryDataError(f"half-braiding {hb['name']} lacks components {sorted(names[m] for m in missing)}")
        objects.append(CenterObject(hb["name"], HalfBraiding(z, e)))
    return cat, objects


def _ckey(comps: list[int], s: int) -> Any:
    if len(comps) == 1:
        if s != comps[0]:
            raise CategoryDataError("term refers to a summand not in the object")
        return None
    return (comps.index(s), None)


def load_raw(path: str | Path | None = None) -> dict:
    if path is None:
        text = resources.files("exotic_mtc").joinpath("data/half_e6.json").read_text()
    else:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise CategoryDataError(str(exc)) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CategoryDataError(f"invalid JSON: {exc}") from exc


def load(path: str | Path | None = None) -> tuple[SkeletalFusionCategory, list[CenterObject]]:
    return build(load_raw(path))
