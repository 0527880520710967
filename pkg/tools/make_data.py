"""Regenerate the bundled JSON data files from hand-transcribed values.

    python3 tools/make_data.py

Every scalar is built exactly and serialized in canonical power-basis form.
"""
from __future__ import annotations

import json
from fractions import Fraction as Fr
from pathlib import Path

from exotic_mtc.center.data import scalar_literal
from exotic_mtc.center.scalars import RadicalNumber
from exotic_mtc.cyclo import CycloNumber, rational, root_of_unity, sqrt_int

OUT = Path(__file__).resolve().parents[1] / "src" / "exotic_mtc" / "data"


def E(k: int, n: int) -> CycloNumber:
    """exp(k pi i / n)."""
    return root_of_unity(2 * n, k)


I = root_of_unity(4)
S2, S3 = sqrt_int(2), sqrt_int(3)


def dump(name: str, obj: dict) -> None:
    text = json.dumps(obj, indent=1)
    (OUT / name).write_text(text + "\n")
    print("wrote", OUT / name)


# modular data of the double of the half-E6 category -------------------------


def z_e6() -> dict:
    r = S3
    a, b, c = r + 1, r + 2, r + 3
    z = rational(0)
    rows = [
        [1, 1, a, a, a, a, a, b, b, c],
        [1, 1, -a, -a, -a, a, a, b, b, -c],
        [a, -a, z, z, z, 2 * a, -2 * a, -a, a, z],
        [a, -a, z, -I * c, I * c, -a, a, -a, a, z],
        [a, -a, z, I * c, -I * c, -a, a, -a, a, z],
        [a, a, 2 * a, -a, -a, a, a, -a, -a, z],
        [a, a, -2 * a, a, a, a, a, -a, -a, z],
        [b, b, -a, -a, -a, -a, -a, 1, 1, c],
        [b, b, a, a, a, -a, -a, 1, 1, -c],
        [c, -c, z, z, z, z, z, c, -c, z],
    ]
    t = [1, -1, -I, E(5, 6), E(5, 6), E(1, 3), E(-2, 3), 1, -1, 1]
    lit = lambda x: scalar_literal(x, 24)  # noqa: E731
    return {
        "conductor": 24,
        "labels": ["1", "Y", "X1", "X2", "X3", "X4", "X5", "U", "V", "W"],
        "s_unnormalized": [[lit(x) for x in row] for row in rows],
        "t_diag": [lit(x) for x in t],
        "d_total": lit(6 + 2 * S3),
    }


# modular data of the double of the Haagerup subfactor --------------------------


def z_haagerup() -> dict:
    s13 = sqrt_int(13)
    d = (3 + s13) * Fr(1, 2)
    g = lambda k: root_of_unity(13, k)  # noqa: E731
    # x_i = -2 cos(2 pi k / 13), matched to the printed decimals
    ks = [4, 5, 6, 3, 2, 1]
    x = [-(g(k) + g(-k)) for k in ks]
    p, q = 3 * d + 1, 3 * d + 2
    A = [
        [1, p, q, q, q, q],
        [p, 1, q, q, q, q],
        [q, q, 2 * q, -q, -q, -q],
        [q, q, -q, 2 * q, -q, -q],
        [q, q, -q, -q, -q, 2 * q],
        [q, q, -q, -q, 2 * q, -q],
    ]
    B = [[3 * d] * 6, [-3 * d] * 6] + [[0] * 6 for _ in range(4)]
    pattern = [
        [1, 3, 6, 2, 4, 5],
        [3, 1, 2, 6, 5, 4],
        [6, 2, 4, 5, 1, 3],
        [2, 6, 5, 4, 3, 1],
        [4, 5, 1, 3, 6, 2],
        [5, 4, 3, 1, 2, 6],
    ]
    C = [[3 * d * x[k - 1] for k in row] for row in pattern]
    S = [A[i] + B[i] for i in range(6)] + [[B[j][i] for j in range(6)] + C[i] for i in range(6)]
    w = root_of_unity(3)
    T = [1, 1, 1, 1, w, w.conj(), g(2), g(-2), g(5), g(-5), g(6), g(-6)]
    lit = lambda v: scalar_literal(v if isinstance(v, CycloNumber) else rational(v), 39)  # noqa: E731
    return {
        "conductor": 39,
        "labels": ["1", "pi1", "pi2", "sigma1", "sigma2", "sigma3", "mu1", "mu2", "mu3", "mu4", "mu5", "mu6"],
        "s_unnormalized": [[lit(v) for v in row] for row in S],
        "t_diag": [lit(v) for v in T],
        "d_total": lit((39 + 9 * s13) * Fr(1, 2)),
        "aux": {
            "x": [lit(v) for v in x],
            "x_printed": ["0.7092097741", "1.497021496", "1.941883635", "-0.2410733605", "-1.136129493", "-1.770912051"],
            "x_polynomial": [-1, -3, 6, 4, -5, -1, 1],
        },
    }


# the half-E6 category with its half-braidings ---------------------------------------


def half_e6() -> dict:
    rho = RadicalNumber(0, 1, S3 * Fr(1, 2))
    lit = lambda v: scalar_literal(v, 24)  # noqa: E731
    names = ["1", "x", "y"]
    fusion = [["x", "x", "1", 1], ["x", "x", "x", 2], ["x", "x", "y", 1], ["x", "y", "x", 1], ["y", "x", "x", 1], ["y", "y", "1", 1]]
    N = {(a, b, c): m for a, b, c, m in fusion}
    for s in names:
        N[("1", s, s)] = N[(s, "1", s)] = 1
    n = lambda a, b, c: N.get((a, b, c), 0)  # noqa: E731

    def lkeys(a, b, c, t, order):
        return [[e, m, v] for e in order for m in range(n(a, b, e)) for v in range(n(e, c, t))]

    def rkeys(a, b, c, t, order):
        return [[f, k, l] for f in order for k in range(n(b, c, f)) for l in range(n(a, f, t))]

    h, q = (S3 - 1) * Fr(1, 2), (1 - S3) * Fr(1, 4)
    half = Fr(1, 2)
    axxx = [
        [h, h, q * E(1, 6), q * E(2, 3), q * E(2, 3), q * E(1, 6)],
        [h, -h, q * E(1, 6), q * E(2, 3), -q * E(2, 3), -q * E(1, 6)],
        [1, 1, -half * (E(1, 6) - 1), half * E(5, 6), half * (E(-1, 3) + I), half * E(1, 3)],
        [1, 1, half * E(1, 3), half * (E(-1, 3) + I), half * E(5, 6), -half * (E(1, 6) - 1)],
        [1, -1, -half * (E(1, 6) - 1), half * E(5, 6), -half * (E(-1, 3) + I), -half * E(1, 3)],
        [-1, 1, -half * E(1, 3), -half * (E(-1, 3) + I), half * E(5, 6), -half * (E(1, 6) - 1)],
    ]
    c = E(7, 12) / S2
    mats = {
        ("y", "y", "y", "y"): [[1]],
        ("x", "y", "y", "x"): [[1]],
        ("y", "y", "x", "x"): [[1]],
        ("x", "y", "x", "1"): [[1]],
        ("x", "x", "y", "1"): [[1]],
        ("x", "x", "y", "y"): [[1]],
        ("y", "x", "x", "1"): [[1]],
        ("y", "x", "x", "y"): [[1]],
        ("x", "y", "x", "y"): [[-1]],
        ("y", "x", "y", "x"): [[-1]],
        ("x", "y", "x", "x"): [[1, 0], [0, -1]],
        ("x", "x", "y", "x"): [[0, I], [-I, 0]],
        ("y", "x", "x", "x"): [[0, 1], [1, 0]],
        ("x", "x", "x", "1"): [[c, c * I], [c, -c * I]],
        ("x", "x", "x", "y"): [[c * I, c], [-c * I, c]],
        ("x", "x", "x", "x"): axxx,
    }
    assoc = []
    for (a, b, cc, t), M in mats.items():
        order = ["1", "y", "x"]
        assoc.append(
            {
                "abc": [a, b, cc],
                "t": t,
                "rows": rkeys(a, b, cc, t, order),
                "cols": lkeys(a, b, cc, t, order),
                "matrix": [[lit(v if not isinstance(v, int) else rational(v)) for v in row] for row in M],
            }
        )

    def term(coef, t, src, tgt):
        return {"c": lit(coef if not isinstance(coef, int) else rational(coef)), "t": t, "from": list(src), "to": list(tgt)}

    def xx(t, coef, i=0, j=0):
        # v^j o v_i inside x x -> x, or the unique vertex for t = 1, y
        return term(coef, t, ("x", i), ("x", j))

    def xsimple(ey, ex):
        return {"y": [term(ey, "x", ("x", 0), ("x", 0))], "x": ex}

    k = (S3 - 1) / S2
    hbs = [
        ("Y", ["y"], {"y": [term(-1, "1", ("y", 0), ("y", 0))], "x": [term(I, "x", ("y", 0), ("y", 0))]}),
        ("X1", ["x"], xsimple(I, [xx("1", I), xx("y", 1), xx("x", E(-1, 3), 0, 0), xx("x", E(-5, 6), 1, 1)])),
        ("X2", ["x"], xsimple(I, [xx("1", E(-5, 6)), xx("y", E(2, 3)), xx("x", (1 - S3) * half, 0, 0), xx("x", rho * I, 0, 1), xx("x", rho, 1, 0), xx("x", (S3 - 1) * half * I, 1, 1)])),
        ("X3", ["x"], xsimple(I, [xx("1", E(-5, 6)), xx("y", E(2, 3)), xx("x", (1 - S3) * half, 0, 0), xx("x", -rho * I, 0, 1), xx("x", -rho, 1, 0), xx("x", (S3 - 1) * half * I, 1, 1)])),
        ("X4", ["x"], xsimple(-I, [xx("1", E(-1, 3)), xx("y", E(1, 6)), xx("x", E(1, 4) / S2, 0, 0), xx("x", E(-1, 4) / S2, 0, 1), xx("x", E(1, 4) / S2, 1, 0), xx("x", E(3, 4) / S2, 1, 1)])),
        ("X5", ["x"], xsimple(-I, [xx("1", E(2, 3)), xx("y", E(-5, 6)), xx("x", E(-3, 4) / S2, 0, 0), xx("x", E(-1, 4) / S2, 0, 1), xx("x", E(1, 4) / S2, 1, 0), xx("x", E(-1, 4) / S2, 1, 1)])),
        ("U", ["1", "x"], {
            "y": [term(1, "y", ("1", 0), ("1", 0)), term(-I, "x", ("x", 0), ("x", 0))],
            "x": [
                term(S3 - 2, "x", ("1", 0), ("1", 0)), term(2 * S3 - 3, "x", ("1", 0), ("x", 0)), term(2 * S3 - 3, "x", ("1", 0), ("x", 1)),
                term(E(-5, 6), "x", ("x", 0), ("1", 0)), term(E(-1, 3), "x", ("x", 1), ("1", 0)),
                term(1, "1", ("x", 0), ("x", 0)), term(I, "y", ("x", 0), ("x", 0)),
                term(k * E(-5, 12), "x", ("x", 0), ("x", 0)), term(k * E(3, 4), "x", ("x", 0), ("x", 1)),
                term(k * E(-3, 4), "x", ("x", 1), ("x", 0)), term(k * E(1, 12), "x", ("x", 1), ("x", 1)),
            ],
        }),
        ("V", ["y", "x"], {
            "y": [term(-1, "1", ("y", 0), ("y", 0)), term(-I, "x", ("x", 0), ("x", 0))],
            "x": [
                term((S3 - 2) * I, "x", ("y", 0), ("y", 0)), term((2 * S3 - 3) * I, "x", ("y", 0), ("x", 0)), term(-(2 * S3 - 3) * I, "x", ("y", 0), ("x", 1)),
                term(E(1, 6), "x", ("x", 0), ("y", 0)), term(E(-1, 3), "x", ("x", 1), ("y", 0)),
                term(-1, "1", ("x", 0), ("x", 0)), term(-I, "y", ("x", 0), ("x", 0)),
                term(k * E(7, 12), "x", ("x", 0), ("x", 0)), term(k * E(3, 4), "x", ("x", 0), ("x", 1)),
                term(k * E(-3, 4), "x", ("x", 1), ("x", 0)), term(k * E(-11, 12), "x", ("x", 1), ("x", 1)),
            ],
        }),
        ("W", ["1", "y", "x"], {
            "y": [term(-1, "y", ("1", 0), ("1", 0)), term(1, "1", ("y", 0), ("y", 0)), term(I, "x", ("x", 0), ("x", 0))],
            "x": [
                term(2 * E(-5, 6), "x", ("1", 0), ("y", 0)), term(2 * E(-5, 6), "x", ("1", 0), ("x", 0)), term(2 * E(1, 6), "x", ("1", 0), ("x", 1)),
                term((2 - S3) * half * E(5, 6), "x", ("y", 0), ("1", 0)), term(k * E(-1, 4), "x", ("y", 0), ("x", 0)), term(k * E(-1, 4), "x", ("y", 0), ("x", 1)),
                term(1, "1", ("x", 0), ("x", 0)), term(-I, "y", ("x", 0), ("x", 0)),
                term((S3 - 1) * Fr(1, 4) * I, "x", ("x", 0), ("1", 0)), term((S3 - 1) * Fr(1, 4), "x", ("x", 1), ("1", 0)),
                term(E(-7, 12) / S2, "x", ("x", 0), ("y", 0)), term(E(-1, 12) / S2, "x", ("x", 1), ("y", 0)),
                term(k * E(5, 12), "x", ("x", 0), ("x", 0)), term(k * E(-1, 12), "x", ("x", 1), ("x", 1)),
            ],
        }),
    ]
    return {
        "conductor": 24,
        "radical": {"square": lit(S3 * Fr(1, 2)), "note": "rho = +sqrt(square), a positive real"},
        "simples": names,
        "fusion": fusion,
        "dims": {"1": lit(rational(1)), "x": lit(1 + S3), "y": lit(rational(1))},
        "rigidity": {"x": {"d": lit(rational(1)), "b": lit(1 + S3)}, "y": {"d": lit(rational(1)), "b": lit(rational(1))}},
        "associator_convention": "matrix[r][c] maps left-tree basis vector cols[c] of ((ab)c -> t) to right-tree basis vector rows[r] of (a(bc) -> t); cols are [e, mu in V^e_ab, nu in V^t_ec], rows are [f, kappa in V^f_bc, lambda in V^t_af]",
        "half_braiding_convention": "term {c, t, from: [z_from, i], to: [z_to, j]} adds c * split(x z_to -> t, vertex j) o fuse(z_from x -> t, vertex i) to e_z(x)",
        "associators": assoc,
        "half_braidings": [{"name": nm, "object": obj, "e": e} for nm, obj, e in hbs],
    }


# fusion rules as printed, for comparison against Verlinde ---------------------


def _rows(text: str) -> list[list[int]]:
    return [[int(v) for v in line.split()] for line in text.strip().splitlines()]


def printed_fusion() -> dict:
    F = ["Y", "X4", "X5", "U", "V"]
    M = ["X1", "X2", "X3", "W"]
    ff = [
        ["1", "X5", "X4", "V", "U"],
        ["X5", "1+X4+V", "Y+X5+U", "X5+U+V", "X4+U+V"],
        ["X4", "Y+X5+U", "1+X4+V", "X4+U+V", "X5+U+V"],
        ["V", "X5+U+V", "X4+U+V", "1+X4+X5+U+V", "Y+X4+X5+U+V"],
        ["U", "X4+U+V", "X5+U+V", "Y+X4+X5+U+V", "1+X4+X5+U+V"],
    ]
    fm = [
        ["X1", "X3", "X2", "W"],
        ["X1+W", "X3+W", "X2+W", "X1+X2+X3+W"],
        ["X1+W", "X2+W", "X3+W", "X1+X2+X3+W"],
        ["X2+X3+W", "X1+X3+W", "X1+X2+W", "X1+X2+X3+2W"],
        ["X2+X3+W", "X1+X3+W", "X1+X3+W", "X1+X2+X3+2W"],
    ]
    mm = [
        ["1+Y+X4+X5", "U+V", "U+V", "X4+X5+U+V"],
        ["U+V", "Y+X4+U", "1+X5+V", "X4+X5+U+V"],
        ["U+V", "1+X5+V", "Y+X4+U", "X4+X5+U+V"],
        ["X4+X5+U+V", "X4+X5+U+V", "X4+X5+U+V", "1+Y+X4+X5+2U+2V"],
    ]
    n_pi1 = """
0 1 0 0 0 0 0 0 0 0 0 0
1 1 1 1 1 1 1 1 1 1 1 1
0 1 2 1 1 1 1 1 1 1 1 1
0 1 1 2 1 1 1 1 1 1 1 1
0 1 1 1 2 1 1 1 1 1 1 1
0 1 1 1 1 2 1 1 1 1 1 1
0 1 1 1 1 1 0 1 1 1 1 1
0 1 1 1 1 1 1 0 1 1 1 1
0 1 1 1 1 1 1 1 0 1 1 1
0 1 1 1 1 1 1 1 1 0 1 1
0 1 1 1 1 1 1 1 1 1 0 1
0 1 1 1 1 1 1 1 1 1 1 0
"""
    n_pi2 = """
0 0 1 0 0 0 0 0 0 0 0 0
0 1 2 1 1 1 1 1 1 1 1 1
1 2 2 1 1 1 1 1 1 1 1 1
0 1 1 1 2 2 1 1 1 1 1 1
0 1 1 2 1 2 1 1 1 1 1 1
0 1 1 2 2 1 1 1 1 1 1 1
0 1 1 1 1 1 1 1 1 1 1 1
0 1 1 1 1 1 1 1 1 1 1 1
0 1 1 1 1 1 1 1 1 1 1 1
0 1 1 1 1 1 1 1 1 1 1 1
0 1 1 1 1 1 1 1 1 1 1 1
0 1 1 1 1 1 1 1 1 1 1 1
"""
    n_mu1 = """
0 0 0 0 0 0 0 1 0 0 0 0
0 1 1 1 1 1 1 0 1 1 1 1
0 1 1 1 1 1 1 1 1 1 1 1
0 1 1 1 1 1 1 1 1 1 1 1
0 1 1 1 1 1 1 1 1 1 1 1
0 1 1 1 1 1 1 1 1 1 1 1
0 1 1 1 1 1 1 1 1 1 0 0
1 0 1 1 1 1 1 1 0 1 1 1
0 1 1 1 1 1 1 0 1 0 1 1
0 1 1 1 1 1 1 1 0 1 1 0
0 1 1 1 1 1 0 1 1 1 0 1
0 1 1 1 1 1 0 1 1 0 1 1
"""
    return {
        "z_e6": {
            "convention": "entry [r][c] is row-label tensor column-label",
            "tables": {
                "FxF": {"rows": F, "cols": F, "entries": ff},
                "FxM": {"rows": F, "cols": M, "entries": fm},
                "MxM": {"rows": M, "cols": M, "entries": mm},
            },
            "generators": {
                "rows": ["1", "Y", "X1", "X2", "X3", "X4", "X5", "U", "V", "W"],
                "X4": ["X4", "X5", "X1+W", "X3+W", "X2+W", "1+X4+V", "Y+X5+U", "X5+U+V", "X4+U+V", "X1+X2+X3+W"],
                "X2": ["X2", "X3", "U+V", "Y+X4+U", "1+X5+V", "X3+W", "X2+W", "X1+X3+W", "X1+X2+W", "X4+X5+U+V"],
            },
        },
        "z_haagerup": {
            "convention": "matrix [j][k] is the multiplicity of label k in (named object) tensor label j",
            "matrices": {"pi1": _rows(n_pi1), "pi2": _rows(n_pi2), "mu1": _rows(n_mu1)},
            "relabel_group": ["mu1", "mu2", "mu3", "mu4", "mu5", "mu6"],
        },
    }


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    dump("z_e6.json", z_e6())
    dump("z_haagerup.json", z_haagerup())
    dump("half_e6.json", half_e6())
    dump("printed_fusion.json", printed_fusion())
