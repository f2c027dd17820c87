"""Recompute the worked D4 example: P = f~_2^2(trivial), j = 1."""
from __future__ import annotations

from .amop import am, m_double_prime, m_value
from .crystal import apply_word, c_value, ftilde
from .polytope import compare, edge_lhs, trivial
from .rootsys import build_root_system

W_WORD = (1, 2, 4, 3, 2)


def d4_modules():
    from .preproj import LambdaModule, build_preprojective, direct_sum, simple
    rs = build_root_system("D", 4)
    alg = build_preprojective(rs)
    q = alg.quiver
    T = direct_sum(simple(q, 2), simple(q, 2))
    X = LambdaModule(q, [1, 1, 0, 0], {q.by_key["1->2"].index: [[1]]})
    return alg, T, direct_sum(X, simple(q, 2))


def d4_example(with_modules: bool = True) -> dict:
    rs = build_root_system("D", 4)
    j = 1
    P = apply_word(trivial(rs), [2, 2])
    F = ftilde(P, j)
    Mpp = m_double_prime(P, j)
    res = am(P, j)
    w = rs.word_index(W_WORD)
    g0 = rs.neg_gamma[rs.gidx[w][1]]
    gamma0 = rs.gammas[g0]
    s1g0 = rs.s_gamma[0][g0]
    ww0 = rs.word_index(W_WORD + rs.weyl_words[rs.w0])

    def at(word, i, sign):
        return Mpp.entries[rs.chamber(word, i, sign)]

    checks = []

    def check(name, got, want):
        checks.append({"name": name, "got": got, "expected": want, "ok": got == want})

    check("<h1, gamma0>", gamma0[0], 2)
    check("M_gamma0", P.entries[g0], 0)
    check("M_{s1 gamma0}", P.entries[s1g0], -2)
    check("c1(P)", c_value(P, j), 1)
    check("M''_gamma0", Mpp.entries[g0], 0)
    check("M'_gamma0", F.entries[g0], -1)
    check("M''_{-s1 varpi1}", at((1,), 1, -1), 0)
    check("M''_{-s1 s2 varpi2}", at((1, 2), 2, -1), -1)
    check("M''_{-s1 s2 s3 varpi3}", at((1, 2, 3), 3, -1), -1)
    check("M''_{-s1 s2 s4 varpi4}", at((1, 2, 4), 4, -1), -1)
    check("edge LHS of M'' at (w w0, 2)", edge_lhs(Mpp, ww0, 2), 1)
    check("AM_1(P) = f~_1(P)", compare(res.datum, F).value, "equal")
    check("gamma with <h1, gamma> = 2", [list(g) for g in rs.gammas if g[0] == 2], [list(gamma0)])
    check("M' and M'' differ only at gamma0",
          [g for g in range(len(rs.gammas)) if F.entries[g] != Mpp.entries[g]], [g0])
    check("m(1, P)", m_value(P, j), 2)
    if with_modules:
        from .preproj import ext1_dim, hom_dim, n_gamma, simple
        alg, T, Tp = d4_modules()
        N0 = n_gamma(alg, gamma0)
        N1 = n_gamma(alg, rs.gammas[s1g0])
        check("dim Hom(N(gamma0), T)", hom_dim(N0, T), 0)
        check("dim Hom(N(s1 gamma0), T)", hom_dim(N1, T), 2)
        check("dim Hom(N(gamma0), T')", hom_dim(N0, Tp), 1)
        check("dim Ext1(T, S1)", ext1_dim(T, simple(alg.quiver, 1)), 2)
    return {
        "gamma0": list(gamma0),
        "route": res.route,
        "side_by_side": {"M'": F.entries[g0], "M~": res.datum.entries[g0], "M''": Mpp.entries[g0]},
        "checks": checks,
        "ok": all(c["ok"] for c in checks),
    }
