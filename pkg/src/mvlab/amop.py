"""The Anderson-Mirkovic operator and checks of the AM-operator theorems.

AM_j(P) is the smallest pseudo-Weyl polytope satisfying conditions (i)-(iv);
in BZ terms it is the greatest datum X with X = M on Gamma^j, the fundamental
weight normalization, X <= M'' on Gamma_j, and the edge inequalities.  We
search for it between BZ(f~_j P) and M''.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .crystal import c_value, ftilde, ftilde_power
from .polytope import (BZDatum, Containment, compare, satisfies_edge_inequalities, tables,
                       validate_edge_inequalities, vertex)


class AMError(RuntimeError):
    pass


class EmptyBoxError(AMError):
    """BZ(f~_j P) exceeds M'' somewhere."""


class AmbiguousMaximumError(AMError):
    """Feasible points of the box have no greatest element."""


def m_value(M: BZDatum, j: int) -> int:
    rs = M.rs
    f = rs.fundamental[j - 1]
    sf = rs.s_gamma[j - 1][f]
    e = M.entries
    return e[f] - e[rs.neg_gamma[sf]] - e[sf]


def m_double_prime(M: BZDatum, j: int) -> BZDatum:
    rs = M.rs
    c = c_value(M, j)
    e = M.entries
    sj = rs.s_gamma[j - 1]
    out = []
    for g, gamma in enumerate(rs.gammas):
        h = gamma[j - 1]
        out.append(e[g] if h <= 0 else min(e[g], e[sj[g]] + c * h))
    return BZDatum(rs, tuple(out))


@dataclass
class AMResult:
    datum: BZDatum
    route: str
    equal_to_ftilde: bool
    conditions_report: dict = field(default_factory=dict)


def _box_max(lo: tuple[int, ...], hi: tuple[int, ...], rs) -> tuple[int, ...]:
    free = [g for g in range(len(lo)) if lo[g] != hi[g]]
    pos = {g: k for k, g in enumerate(free)}
    cons = []
    for terms in tables(rs).edge_constraints:
        fixed = 0
        var = []
        for g, coef in terms:
            if g in pos:
                var.append((pos[g], coef))
            else:
                fixed += coef * lo[g]
        if var:
            cons.append((fixed, tuple(var)))
        elif fixed > 0:
            raise EmptyBoxError("fixed coordinates already violate an edge inequality")
    lows = [lo[g] for g in free]
    highs = [hi[g] for g in free]
    touching = [[] for _ in free]
    for ci, (_, var) in enumerate(cons):
        for k, _ in var:
            touching[k].append(ci)

    def feasible_partial(values: list, changed: int) -> bool:
        for ci in touching[changed]:
            fixed, var = cons[ci]
            total = fixed
            for k, coef in var:
                x = values[k]
                if x is None:
                    total += coef * (lows[k] if coef > 0 else highs[k])
                else:
                    total += coef * x
            if total > 0:
                return False
        return True

    def search(order: list[int]) -> list | None:
        values: list = [None] * len(free)

        def rec(d: int) -> bool:
            if d == len(order):
                return True
            k = order[d]
            for x in range(highs[k], lows[k] - 1, -1):
                values[k] = x
                if feasible_partial(values, k) and rec(d + 1):
                    return True
            values[k] = None
            return False

        return list(values) if rec(0) else None

    best_vals = []
    for k in range(len(free)):
        order = [k] + [t for t in range(len(free)) if t != k]
        sol = search(order)
        if sol is None:
            raise EmptyBoxError("no feasible datum between BZ(f~ P) and M''")
        best_vals.append(sol[k])
    out = list(lo)
    for k, g in enumerate(free):
        out[g] = best_vals[k]
    if not satisfies_edge_inequalities(out, rs):
        raise AmbiguousMaximumError("feasible data in the box have no greatest element")
    return tuple(out)


def am(M: BZDatum, j: int, with_report: bool = False) -> AMResult:
    rs = M.rs
    F = ftilde(M, j)
    Mpp = m_double_prime(M, j)
    if satisfies_edge_inequalities(Mpp.entries, rs):
        datum, route = Mpp, "fast_path"
    else:
        if any(f > h for f, h in zip(F.entries, Mpp.entries)):
            raise EmptyBoxError("BZ(f~_j P) is not capped by M''")
        datum, route = BZDatum(rs, _box_max(F.entries, Mpp.entries, rs)), "box_search"
    report = check_conditions(M, datum, j) if with_report else {}
    return AMResult(datum, route, datum == F, report)


def am_box_search(M: BZDatum, j: int) -> BZDatum:
    """Force the fallback route (used to cross-check the fast path)."""
    F = ftilde(M, j)
    Mpp = m_double_prime(M, j)
    if any(f > h for f, h in zip(F.entries, Mpp.entries)):
        raise EmptyBoxError("BZ(f~_j P) is not capped by M''")
    return BZDatum(M.rs, _box_max(F.entries, Mpp.entries, M.rs))


def r_map(M: BZDatum, j: int, mu, c: int | None = None):
    """r_j(x) = s_j(x) + c_j h_j on coweights."""
    rs = M.rs
    if c is None:
        c = c_value(M, j)
    out = list(rs.reflect_coweight(j - 1, mu))
    out[j - 1] += c
    return tuple(out)


def _contains(Q: BZDatum, mu) -> bool:
    return all(sum(a * b for a, b in zip(mu, g)) >= v for g, v in zip(Q.rs.gammas, Q.entries))


def check_conditions(M: BZDatum, Q: BZDatum, j: int) -> dict:
    """Conditions (i)-(iv) and (a)-(c) for a candidate Q relative to M."""
    rs = M.rs
    c = c_value(M, j)
    mu = [vertex(M, w) for w in range(rs.order)]
    nu = [vertex(Q, w) for w in range(rs.order)]
    minus = [w for w in range(rs.order) if rs.left_descent(j, w)]
    plus = [w for w in range(rs.order) if not rs.left_descent(j, w)]
    hj = tuple(1 if k == j - 1 else 0 for k in range(rs.rank))
    e_idx = rs.identity
    sj_idx = rs.lmul[j - 1][e_idx]
    rep = {}
    rep["i"] = all(nu[w] == mu[w] for w in minus)
    rep["ii"] = nu[e_idx] == tuple(a - b for a, b in zip(mu[e_idx], hj))
    rep["iii"] = all(_contains(Q, mu[w]) for w in plus)
    rep["iv"] = all(_contains(Q, r_map(M, j, mu[w], c)) for w in minus
                    if rs.pair_alpha(mu[w], j - 1) >= c)
    e, q = M.entries, Q.entries
    upper = [g for g, gamma in enumerate(rs.gammas) if gamma[j - 1] <= 0]
    lower = [g for g, gamma in enumerate(rs.gammas) if gamma[j - 1] > 0]
    rep["a"] = all(q[g] == e[g] for g in upper)
    rep["b"] = all(q[rs.fundamental[i]] == e[rs.fundamental[i]] - (1 if i == j - 1 else 0)
                   for i in range(rs.rank))
    sj = rs.s_gamma[j - 1]
    rep["c"] = all(q[g] <= min(e[g], e[sj[g]] + c * rs.gammas[g][j - 1]) for g in lower)
    rep["r_sanity"] = r_map(M, j, mu[sj_idx], c) == tuple(a - b for a, b in zip(mu[e_idx], hj))
    rep["edge_valid"] = not validate_edge_inequalities(Q)
    return rep


# -- theorem checks ------------------------------------------------------------------


@dataclass
class TheoremReport:
    which: str
    checked: int = 0
    violations: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations


def far_string_prediction(Mk: BZDatum, j: int) -> tuple[int, ...]:
    """Second-branch-only update: M_gamma on Gamma^j, M_{s_j gamma} + c<h_j,gamma> else."""
    rs = Mk.rs
    c = c_value(Mk, j)
    e = Mk.entries
    sj = rs.s_gamma[j - 1]
    return tuple(e[g] if gamma[j - 1] <= 0 else e[sj[g]] + c * gamma[j - 1]
                 for g, gamma in enumerate(rs.gammas))


def check_instance(M: BZDatum, j: int, which: str) -> list:
    """Violations of one theorem at one (P, j); an empty list means it holds."""
    bad = []
    if which == "thm31":
        res = am(M, j)
        F = ftilde(M, j)
        rel = compare(res.datum, F)
        if rel not in (Containment.EQUAL, Containment.FIRST_IN_SECOND):
            bad.append({"reason": f"containment {rel.value}"})
        rep = check_conditions(M, F, j)
        failed = [k for k in ("i", "ii", "iii", "iv", "a", "b", "c", "r_sanity") if not rep[k]]
        if failed:
            bad.append({"reason": "conditions failed", "conditions": failed})
    elif which == "thm32":
        rs = M.rs
        F = ftilde(M, j)
        c = c_value(M, j)
        sj = rs.s_gamma[j - 1]
        for g, gamma in enumerate(rs.gammas):
            if gamma[j - 1] == 1:
                want = min(M.entries[g], M.entries[sj[g]] + c)
                if F.entries[g] != want:
                    bad.append({"gamma": list(gamma), "got": F.entries[g], "want": want})
    elif which == "thm33":
        m = m_value(M, j)
        if m < 0:
            bad.append({"reason": f"m = {m} < 0"})
            return bad
        Pk = ftilde_power(M, j, m + 1)
        for k in range(m + 1, m + 4):
            nxt = ftilde(Pk, j)
            if am(Pk, j).datum != nxt:
                bad.append({"k": k, "reason": "AM differs from f~"})
            if far_string_prediction(Pk, j) != nxt.entries:
                bad.append({"k": k, "reason": "second branch formula fails"})
            Pk = nxt
    elif which == "am_conjecture":
        res = am(M, j)
        if not res.equal_to_ftilde:
            rel = compare(res.datum, ftilde(M, j))
            bad.append({"route": res.route, "containment": rel.value,
                        "am": list(res.datum.entries)})
    else:
        raise ValueError(f"unknown theorem selector {which!r}")
    return bad


def verify_theorem(S, j: int | None, which: str) -> TheoremReport:
    """Run a theorem check over a set of data and all (or one) j."""
    rep = TheoremReport(which)
    for M in S:
        js = range(1, M.rs.rank + 1) if j is None else [j]
        for jj in js:
            rep.checked += 1
            for v in check_instance(M, jj, which):
                v.update({"j": jj, "entries": list(M.entries)})
                rep.violations.append(v)
    return rep
