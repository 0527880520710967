"""Verification suites shared by the command line and the test-suite.

Each function appends named checks to a Report and returns it.  Checks that
compare against printed reference data are only run for the bundled datasets,
recognized by content rather than by file name.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable

import mpmath

from . import braid as B
from . import fusion as F
from . import liedata as L
from . import moddata as M
from . import sl2z as Q
from .cyclo import CycloNumber, rational, root_of_unity, sqrt_int
from .report import Report

E6_D = 6 + 2 * sqrt_int(3)
HAAGERUP_D = (39 + 9 * sqrt_int(13)) / 2
F_LABELS = ("1", "Y", "X4", "X5", "U", "V")


def _gamma_lists() -> dict[str, B.EigenvalueMultiset]:
    # printed squared braid eigenvalues gamma^4 {...}, gamma = e^{2 pi i/13}
    return {
        "mu2": B.gamma_list(4, [0, 0, 2, -2, -5], [1, -1]),
        "mu1": B.gamma_list(4, [0, 0, 0, 2, -2, -5, 6, -6], [1, -1]),
    }


def identify(md: M.ModularData) -> str | None:
    for name in M.BUNDLED:
        if md == M.bundled(name):
            return name
    return None


def _fmt(fr: F.FusionRing, subset) -> str:
    return "{" + ",".join(fr.labels[i] for i in sorted(subset)) + "}"


# modular data ------------------------------------------------------------------


def verify(md: M.ModularData, report: Report | None = None) -> Report:
    report = M.validate(md, report)
    name = identify(md)
    D = M.total_quantum_order(md)
    D2 = M.global_dimension(md)
    report.add("QORDER", "D-in-field", D is not None, f"D={D}" if D is not None else "")
    if name == "z_e6":
        report.add("QORDER", "D=6+2sqrt3", D == E6_D, f"D~{float(D.approx().real):.10f}" if D is not None else "")
    elif name == "z_haagerup":
        report.add("QORDER", "D^2=((39+9sqrt13)/2)^2", D2 == HAAGERUP_D * HAAGERUP_D)
        approx = float((39 + 9 * mpmath.sqrt(13)) / 2)
        got = float(D.approx().real) if D is not None else float("nan")
        report.add("QORDER", "D~35.72498", abs(got - approx) < 1e-6 and abs(got - 35.72498) < 1e-5, f"D={got:.8f}")
    report.add("QORDER", "D^2-non-integral", not D2.is_rational() or D2.rational().denominator != 1, f"D^2={D2}")
    if D is not None:
        ratio = M.gauss_sum(md) / D
        report.add("CHARGE", "D+/D=1", ratio == 1, f"D+/D={ratio}")
    c = M.central_charge(md)
    report.add("CHARGE", "c=0-mod-8", c == 0, f"c={c}")
    return report


# fusion rules ------------------------------------------------------------------


def fusion(md: M.ModularData, report: Report | None = None) -> Report:
    report = report if report is not None else Report()
    fr = F.verlinde(md)
    F.validate_ring(fr, report)
    name = identify(md)
    printed = F.printed_fusion()
    if name == "z_e6":
        F.compare_tables(fr, printed["z_e6"]["tables"], report, "TABLE")
        F.compare_tables(fr, F.generator_tables(printed["z_e6"]["generators"]), report, "GENERATORS")
    elif name == "z_haagerup":
        data = printed["z_haagerup"]
        for label, mat in data["matrices"].items():
            m = F.match_matrix(fr, label, mat, data["relabel_group"])
            report.add("MATRIX", f"N_{label}", m is not None, m.describe() if m else "no match")
    return report


def subcategories(md: M.ModularData, report: Report | None = None) -> Report:
    report = report if report is not None else Report()
    fr = F.verlinde(md)
    subs = F.tensor_subcategories(fr)
    report.add("SUBCAT", "lattice", True, " ".join(_fmt(fr, s) for s in subs))
    report.add("SUBCAT", "dim-times-centralizer", all(F.dim_product_check(md, s) for s in subs))
    prime = F.is_prime(md, fr)
    report.add("SUBCAT", "prime", prime.prime, " ".join(_fmt(fr, s) for s in prime.modular_subcategories))
    fact = F.product_factorization(md, fr)
    report.add("SUBCAT", "no-product-factorization", fact is None, f"{fact.left}x{fact.right}" if fact else "")
    grading = F.universal_grading(fr)
    report.add("SUBCAT", "universal-grading", True, f"{grading.structure()} " + " ".join(_fmt(fr, p) for p in grading.parts))
    name = identify(md)
    if name == "z_e6":
        Fs = frozenset(fr.index(x) for x in F_LABELS)
        Y = frozenset(fr.index(x) for x in ("1", "Y"))
        report.add("SUBCAT", "contains-{1,Y}-and-F", Y in subs and Fs in subs)
        cz = F.centralizer(md, Fs)
        report.add("SUBCAT", "centralizer(F)={1,Y}", cz == Y and F.subset_dim(md, cz) == 2, f"{_fmt(fr, cz)} dim={F.subset_dim(md, cz)}")
        hits = F.dimension_filter(md, E6_D)
        want = sorted([rational(1), rational(1), 1 + sqrt_int(3)], key=lambda d: float(d.approx().real))
        report.add("SUBCAT", "dimension-filter(6+2sqrt3)", hits == [want], "; ".join("{" + ",".join(map(str, h)) + "}" for h in hits))
    elif name == "z_haagerup":
        report.add("SUBCAT", "only-trivial-and-full", len(subs) == 2, str(len(subs)))
    return report


# SL(2,Z) -----------------------------------------------------------------------


def sl2z(md: M.ModularData, report: Report | None = None, closure: bool = True, cap: int = 40000) -> Report:
    report = report if report is not None else Report()
    rep = Q.from_moddata(md)
    name = identify(md)
    if name == "z_e6":
        Q.verify_e6_relation_suite(rep, report)
    N = md.conductor
    if N % 2 == 1:
        Q.psl2_presentation_check(rep, N, report)
    if closure:
        try:
            bfs = Q.closure_order(rep, cap, "bfs")
            dfs = Q.closure_order(rep, cap, "dfs")
        except Q.CapExceeded as exc:
            report.add("CLOSURE", "finite-within-cap", None, str(exc))
            return report
        report.add("CLOSURE", "bfs=dfs", bfs == dfs, f"order={bfs}")
        if name == "z_e6":
            report.add("CLOSURE", "divides-31104", 31104 % bfs == 0, f"order={bfs}")
            report.add("CLOSURE", "not-divisible-by-10", bfs % 10 != 0, f"order={bfs}")
    return report


# braids ------------------------------------------------------------------------


def braid_eigs(md: M.ModularData, report: Report | None = None, obj: str | None = None, target: str | None = None, use_center: bool = True) -> Report:
    report = report if report is not None else Report()
    fr = F.verlinde(md)
    name = identify(md)
    if name == "z_haagerup" and obj is None:
        printed = _gamma_lists()
        X = fr.index("mu1")
        for tgt, dim in (("mu2", 7), ("mu1", 10)):
            e = B.squared_braid_eigs(md, fr, X, fr.index(tgt))
            how = B.multiset_match(e, printed[tgt])
            report.add("BRAID", f"Hom({tgt},mu1^3)-squares", how is not None and len(e) == dim, f"dim={len(e)} match={how}")
        report.add("BRAID", "mu1-TW-criterion", True, f"irreducible={B.tw_irreducibility(md, fr, X)}")
        return report
    obj = obj or ("X4" if name == "z_e6" else fr.labels[1])
    X = fr.index(obj)
    summands = fr.product(X, X)
    exact = None
    if name == "z_e6" and use_center:
        from .center import double as CD
        from .center.data import load

        cat, objs = load()
        byname = {o.name: o for o in objs}
        eig = CD.braiding_eigenvalues(cat, objs, byname[obj])
        exact = B.EigenvalueMultiset.from_numbers(v for vs in eig.values() for v in vs)
        if obj == "X4":
            q = root_of_unity(12, 1)
            want = {"1": [q**-2], "X4": [-(q**-1)], "V": [q]}
            report.add("BRAID", "X4-eigenvalues={q^-2,-q^-1,q}", eig == want, str(exact))
    squares = B.squared_braid_eigs(md, fr, X, X)
    if exact is not None:
        report.add("BRAID", f"{obj}-squares-from-twists", exact.squared() == squares)
    e = exact if exact is not None else squares
    order = B.projective_order(e)
    if exact is None:
        report.add("BRAID", f"{obj}-squared-projective-order", True, str(order))
    else:
        report.add("BRAID", f"{obj}-projective-order", order == 12 if obj == "X4" else True, str(order))
    irr = B.tw_irreducibility(md, fr, X, exact) if fr.dual[X] == X else None
    report.add("BRAID", f"{obj}-TW-irreducible", irr if obj == "X4" else True, str(irr))
    advice = B.density_advisory(len(summands), order, irr) if exact is not None else B.INCONCLUSIVE
    report.add("BRAID", f"{obj}-density", advice == B.INFINITE if obj == "X4" else True, advice)
    if target is not None:
        T = fr.index(target)
        report.add("BRAID", f"Hom({target},{obj}^3)-squares", True, str(B.squared_braid_eigs(md, fr, X, T)))
    return report


# center of the E6 category ---------------------------------------------------------


def center_e6(path: str | None = None, report: Report | None = None) -> Report:
    from .center import double as CD
    from .center.data import _cyc, load

    report = report if report is not None else Report()
    cat, objs = load(path)
    CD.verify_pentagon(cat, report)
    CD.verify_rigidity(cat, report)
    for o in objs[1:]:
        CD.verify_half_braiding(cat, o.name, o.hb, report)
    ends = [len(CD.center_hom(cat, o, o)) for o in objs]
    report.add("CENTER", "simple", all(e == 1 for e in ends), str(ends))
    clash = [f"{a.name},{b.name}" for i, a in enumerate(objs) for b in objs[i + 1:] if CD.center_hom(cat, a, b)]
    report.add("CENTER", "pairwise-non-isomorphic", not clash, " ".join(clash))
    ok, total, want = CD.dim_double_check(cat, objs)
    report.add("CENTER", "dim=(dim E)^2", ok, f"{total} vs {want}")
    md = M.bundled("z_e6")
    idx = [md.index(o.name) for o in objs]
    n = md.conductor
    S = [[_cyc(CD.s_entry(cat, a, b), n) for b in objs] for a in objs]
    T = [_cyc(CD.twist(cat, o), n) for o in objs]
    rng = range(len(objs))
    direct = all(S[i][j] == md.s(idx[i], idx[j]) for i in rng for j in rng)
    conj = all(S[i][j].conj() == md.s(idx[i], idx[j]) for i in rng for j in rng)
    report.add("CENTER", "S-matches", direct or conj, "direct" if direct else ("complex conjugate" if conj else "differs"))
    report.add("CENTER", "T-matches", all(T[i] == md.t_diag[idx[i]] for i in rng))
    fr = F.verlinde(md)
    bad = []
    for i, a in enumerate(objs):
        for b in objs[i:]:
            got = CD.center_tensor_decompose(cat, objs, a, b)
            want = {fr.labels[k]: m for k, m in fr.product(fr.index(a.name), fr.index(b.name)).items()}
            if got != want:
                bad.append(f"{a.name}*{b.name}")
    report.add("CENTER", "fusion=Verlinde", not bad, " ".join(bad))
    return report


def center_axioms(raw: dict, report: Report | None = None) -> Report:
    """Pentagon, rigidity and half-braiding checks on raw category data."""
    from .center import double as CD
    from .center.data import build

    report = report if report is not None else Report()
    cat, objs = build(raw)
    CD.verify_pentagon(cat, report)
    CD.verify_rigidity(cat, report)
    for o in objs[1:]:
        CD.verify_half_braiding(cat, o.name, o.hb, report)
    return report


# Lie theory ----------------------------------------------------------------------------

PRINTED_C24 = [("A6", 7), ("A24", 1), ("B12", 2), ("C4", 10), ("D24", 1)]
PRINTED_RANK10_A = [(1, 9), (9, 1), (3, 2), (2, 3)]
PRINTED_RANK12 = [("G2", 5), ("A1", 11), ("B8", 2), ("C11", 1), ("D5", 2), ("E7", 3)]


def _pairs(xs) -> list[tuple[str, int]]:
    return sorted((str(g), k) for g, k in xs)


def _show(xs) -> str:
    return ",".join(f"({g},{k})" for g, k in xs)


def exclude(report: Report | None = None, listing: Callable[[str], None] | None = None) -> Report:
    report = report if report is not None else Report()
    say = listing or (lambda s: None)
    targets = {"z_e6": E6_D * E6_D, "z_haagerup": HAAGERUP_D * HAAGERUP_D}

    # Z(E): rank 10 with one dual pair
    a10 = L.a_type_rank_solutions(10)
    report.add("LIE", "A-rank-10-solutions", sorted(a10) == sorted(PRINTED_RANK10_A), str(a10))
    r10 = L.categories_of_rank(10)
    prof = {(str(g), k): L.self_dual_profile(g, k) for g, k in r10}
    say("rank 10: " + " ".join(f"({g},{k}):pairs={p.pairs}" for (g, k), p in prof.items()))
    report.add("LIE", "no-rank-10-with-one-dual-pair", all(p.pairs != 1 for p in prof.values()), _show(prof))
    md = M.bundled("z_e6")
    du = M.charge_conjugation(md)
    report.add("LIE", "Z(E)-has-one-dual-pair", len(du.pairs) == 1, " ".join(f"{md.labels[a]}<->{md.labels[b]}" for a, b in du.pairs))

    # Z(H): rank 12, self-dual, 13th-root twists
    r12 = L.categories_of_rank(12)
    sd12 = [(g, k) for g, k in r12 if L.self_dual_profile(g, k).all_self_dual]
    say("rank 12 (m | l): " + _show(_pairs(r12)))
    say("rank 12 self-dual: " + _show(_pairs(sd12)))
    report.add("LIE", "rank-12-self-dual-list", _pairs(sd12) == sorted(PRINTED_RANK12), f"computed={_show(_pairs(sd12))} printed={_show(sorted(PRINTED_RANK12))}")
    odd = [(L.SimpleLieType("B", 2), 9), (L.SimpleLieType("B", 5), 13)]
    for g, ell in odd:
        report.add("LIE", f"rank(so{2 * g.rank + 1},l={ell})=12", L.rank_count(g, ell) == 12, str(L.rank_count(g, ell)))
    mh = M.bundled("z_haagerup")
    h_orders = [o for o in M.twist_orders(mh) if o]
    report.add("LIE", "Z(H)-twists-have-order-13", any(o % 13 == 0 for o in h_orders), str(sorted(set(h_orders))))
    survivors = []
    cands = [(g, L.ell_from_level(g, k), f"({g},{k})") for g, k in r12] + [(g, ell, f"so{2 * g.rank + 1}@{ell}") for g, ell in odd]
    for g, ell, tag in cands:
        if any(o % 13 == 0 for o in L.twist_orders(g, ell)):
            survivors.append(tag)
    report.add("LIE", "13-twist-survivors", sorted(survivors) == sorted(["(A1,11)", "(C11,1)", "so11@13"]), " ".join(survivors))
    a1 = L.a1_fusion_ring(11)
    subs = F.tensor_subcategories(a1)
    report.add("LIE", "(A1,11)-has-tensor-subcategory", len(subs) > 2, " ".join(_fmt(a1, s) for s in subs))
    b5, A1 = L.SimpleLieType("B", 5), L.SimpleLieType("A", 1)
    db5 = sorted((L.qnumber_dim(b5, 13, w) for w in L.alcove(b5, 13)), key=str)
    da1 = [L.qnumber_dim(A1, 13, w) for w in L.alcove(A1, 13)]
    conj = [a for a in range(1, 52) if a % 2 and a % 13 and sorted((d.galois(a) for d in da1), key=str) == db5]
    report.add("LIE", "so11@13-dims-Galois-conjugate-to-(A1,11)", bool(conj), f"sigma_{conj[0]}" if conj else "")
    c11 = L.SimpleLieType("C", 11)
    dv = L.qnumber_dim(c11, 26, c11.fundamental(1))
    z = root_of_unity(26, 1)
    report.add("LIE", "(C11,1)-vector-qdim=2cos(pi/13)", dv == z + z**-1, f"{float(dv.approx().real):.6f}")
    report.add("LIE", "2cos(pi/13)~1.94188", abs(float(dv.approx().real) - 1.94188) < 1e-5)
    hdims = M.quantum_dims(mh)
    report.add("LIE", "(C11,1)-qdim-not-in-Z(H)", all(d != dv for d in hdims), "Z(H) dims in {1,3d,3d+1,3d+2}")

    # c = 24 and orbifolds
    c24 = L.solve_c24()
    say("c=24 (g,k): " + _show(_pairs(c24)))
    report.add("LIE", "c24-solutions", _pairs(c24) == sorted(PRINTED_C24), f"computed={_show(_pairs(c24))} printed={_show(sorted(PRINTED_C24))}")
    for g, k in c24:
        s = L.orbifold_screen(g, k, targets)
        report.add("ORBIFOLD", f"({g},{k})", s.excluded, f"rank={s.rank} {s.method} {s.detail}")
    for tag, (fam, r, k), printed in (("C4", ("C", 4, 10), 63.3), ("A6", ("A", 6, 7), 82.8)):
        g = L.SimpleLieType(fam, r)
        n = L.alcove_count(g, k)
        bound = 2 * L.min_total_order_from_rank(n)
        report.add("ORBIFOLD", f"bound({tag},{k})", abs(bound - printed) < 0.1, f"rank={n} 2sqrt(rank)={bound:.2f}")
    report.add("ORBIFOLD", "trivial-CFT-orbifolds-integral", not all(d.is_rational() for d in M.quantum_dims(md) + hdims))
    return report


def coset(report: Report | None = None) -> Report:
    report = report if report is not None else Report()
    D35, A7 = L.SimpleLieType("D", 35), L.SimpleLieType("A", 7)
    lam, mu = D35.fundamental(1), A7.fundamental(4)
    report.add("COSET", "dim-branching", D35.weyl_dim(lam) == A7.weyl_dim(mu) == 70)
    chi = L.dynkin_index(D35, lam, A7, [mu])
    report.add("COSET", "embedding-index=10", chi == 10, str(chi))
    c2 = L.coset_central_charge(D35, 2, A7, chi)
    c1 = L.coset_central_charge(D35, 1, A7, chi)
    report.add("COSET", "c(level 2)=24", c2 == 24, str(c2))
    report.add("COSET", "c(level 1)=0", c1 == 0, str(c1))
    ell_g, ell_p = L.ell_from_level(D35, 2), L.ell_from_level(A7, int(chi * 2))
    th_mu = L.twist_exponent(A7, ell_p, mu)
    report.add("COSET", "theta_mu=e^(9pi i/14)", th_mu == Fraction(9, 28), f"exp(2pi i {th_mu})")
    th_lam = L.twist_exponent(D35, ell_g, lam)
    report.add("COSET", "theta_lambda=q^69", th_lam == Fraction(69, 140), f"exp(2pi i {th_lam}) = -e^(-pi i/70)")
    r = L.coset_twist_ratio(D35, ell_g, lam, A7, ell_p, mu)
    alt = (r + Fraction(1, 2)) % 1  # with theta_lambda = e^(-pi i/70) instead
    for tag, x in (("computed", r), ("sign-flipped", alt)):
        report.add("COSET", f"ratio-excluded({tag})", L.excluded_by_twist_order(x), f"exp(2pi i {x}) order={x.denominator}")
    return report


# claims, each mapped to the checks that carry it --------------------------------------


def claims(report: Report | None = None, closure: bool = True) -> Report:
    report = report if report is not None else Report()
    e6, hg = M.bundled("z_e6"), M.bundled("z_haagerup")

    def sub(claim: str, inner: Report, names: set[str] | None = None) -> None:
        for c in inner.checks:
            if names is None or c.name in names:
                report.add(claim, f"{c.suite}:{c.name}", None if c.status == "UNDETERMINED" else c.status == "PASS", c.witness)

    for md in (e6, hg):
        sub("PRIME", subcategories(md), {"prime", "no-product-factorization"})
        sub("NONINTEGRAL-D2", verify(md), {"D^2-non-integral"})
    sub("NOT-QUANTUM-GROUP", exclude())
    sub("NOT-QUANTUM-GROUP", coset())
    sub("NOT-DOUBLE", subcategories(e6), {"dimension-filter(6+2sqrt3)", "centralizer(F)={1,Y}"})
    sub("NOT-DOUBLE", subcategories(hg), {"only-trivial-and-full"})
    sub("FINITE-SL2Z", sl2z(e6, closure=closure))
    sub("FINITE-SL2Z", sl2z(hg, closure=closure))
    sub("INFINITE-BRAID", braid_eigs(e6))
    g_e6 = subcategories(e6)
    sub("BIMODULE", g_e6, {"universal-grading", "contains-{1,Y}-and-F"})
    fr = F.verlinde(e6)
    grading = F.universal_grading(fr)
    Fs = frozenset(fr.index(x) for x in F_LABELS)
    report.add("BIMODULE", "Z(E)=F+M-as-F-bimodule", grading.order == 2 and grading.parts[0] == Fs, grading.structure())
    report.add("BIMODULE", "F-premodular-not-modular", not F.is_modular_subset(e6, sorted(Fs)))
    report.add("BIMODULE", "Z(H)-no-decomposition", F.universal_grading(F.verlinde(hg)).order == 1)
    return report
