"""Acceptance suite: one PASS/FAIL line per criterion, exact tolerances throughout."""
import itertools
import time

import pytest

from mvlab import parse_root_system
from mvlab.amop import m_value
from mvlab.checks import (axioms_report, fold_report, preproj_selftest, theorem_report,
                          validators_report)
from mvlab.crystal import apply_word, generate
from mvlab.d4example import d4_example, d4_modules
from mvlab.folding import build_folding, fold, sigma_invariant_part
from mvlab.polytope import LusztigDatum, bz_from_lusztig, lusztig_datum, trivial
from mvlab.preproj import ext1_dim, simple

from conftest import all_reduced_words, corpus, record

SWEEP = [("A2", 8), ("A3", 6), ("D4", 5)]


def test_criterion_1_d4_reproduction():
    t = time.time()
    rep = d4_example()
    elapsed = time.time() - t
    bad = [c["name"] for c in rep["checks"] if not c["ok"]]
    ok = rep["ok"] and elapsed < 60 and len(rep["checks"]) == 19
    record(1, "worked D4 example", ok, f"{len(rep['checks'])} checks, {elapsed:.1f}s, mismatches {bad}")
    assert ok


def test_criterion_2_am_sweep():
    t = time.time()
    counts = {}
    total = 0
    for name, depth in SWEEP:
        rep = theorem_report(corpus(name, depth), "thm31")
        counts[name] = (rep["instances"], rep["violations"])
        total += rep["violations"]
    elapsed = time.time() - t
    ok = total == 0 and elapsed < 600
    record(2, "AM containment and conditions (i)-(iv), (a)-(c)", ok, f"{counts}, {elapsed:.1f}s")
    assert ok


def test_criterion_3_first_branch_formula():
    counts = {}
    total = 0
    for name, depth in SWEEP:
        rep = theorem_report(corpus(name, depth), "thm32")
        counts[name] = rep["violations"]
        total += rep["violations"]
    # in type A every <h_j, gamma> is at most 1, which forces AM = f~ everywhere
    forced = {}
    for name, depth in SWEEP[:2]:
        rs = parse_root_system(name)
        assert max(max(g) for g in rs.gammas) == 1
        forced[name] = theorem_report(corpus(name, depth), "am_conjecture")["violations"]
        total += forced[name]
    ok = total == 0
    record(3, "M'_gamma = min(M_gamma, M_{s_j gamma} + c_j) at <h_j, gamma> = 1", ok,
           f"violations {counts}, AM != f~ in type A: {forced}")
    assert ok


def test_criterion_4_stability_threshold():
    counts = {}
    total = 0
    for name, depth in SWEEP:
        rep = theorem_report(corpus(name, depth), "thm33")
        counts[name] = rep["violations"]
        total += rep["violations"]
    rs = parse_root_system("D4")
    P = apply_word(trivial(rs), [2, 2])
    alg, T, _ = d4_modules()
    m = m_value(P, 1)
    ext = ext1_dim(T, simple(alg.quiver, 1))
    ok = total == 0 and m == ext == 2
    record(4, "AM = f~ beyond m(j, P); m(1, f~_2^2) = dim Ext1(S2+S2, S1)", ok,
           f"violations {counts}, m = {m}, Ext1 = {ext}")
    assert ok


@pytest.mark.xfail(strict=True, reason="no strict AM containment exists in C2 under exact "
                   "computation; the analysis is kept in the decisions ledger")
def test_criterion_5_c2_counterexample():
    rep = theorem_report(generate(parse_root_system("C2@A3"), 5), "am_conjecture")
    found = rep["violations"]
    ok = found >= 1 and rep["containment_holds"]
    record(5, "C2 pair with AM strictly inside f^, containment kept", ok,
           f"{rep['instances']} instances, {found} with AM != f^")
    assert ok


def test_criterion_6_folding_coherence():
    out = {}
    total = 0
    for name in ("C2@A3", "B3@D4", "G2@D4"):
        rep = fold_report(build_folding(name), 4)
        out[name] = (rep["polytopes"], rep["violations"])
        total += rep["violations"]
    # the folded crystal equals the sigma-invariant part of the cover crystal
    ctx = build_folding("C2@A3")
    inv = sigma_invariant_part(generate(ctx.cover, 8), ctx, 4)
    folded = generate(ctx.folded, 4)
    same = sorted(fold(M, ctx).entries for M in inv) == sorted(M.entries for M in folded)
    ok = total == 0 and same
    record(6, "fold/unfold round trips, c_j and m(j) transport, order independence", ok,
           f"{out}, invariant part matches: {same}")
    assert ok


def test_criterion_7_property_suites():
    t = time.time()
    bad = {}
    for name, depth in SWEEP + [("C2@A3", 6), ("B3@D4", 4), ("G2@D4", 5)]:
        S = corpus(name, depth)
        a = axioms_report(S)["violations"]
        v = validators_report(S)["violations"]
        if a or v:
            bad[name] = (a, v)
    trips = 0
    # B3 has 42 reduced words of length 9, so its box is entries <= 1
    for name, bound in (("A2", 2), ("A3", 2), ("C2@A3", 2), ("G2@D4", 2), ("B3@D4", 1)):
        rs = parse_root_system(name)
        words = all_reduced_words(rs)
        base = words[0]
        for n in itertools.product(range(bound + 1), repeat=len(base)):
            M = bz_from_lusztig(LusztigDatum(base, n), rs)
            for word in words:
                trips += 1
                if bz_from_lusztig(lusztig_datum(M, word), rs) != M:
                    bad.setdefault(name, []).append((n, word))
    elapsed = time.time() - t
    ok = not bad and elapsed < 300
    record(7, "crystal axioms, characterization, validators, Lusztig round trips", ok,
           f"{trips} round trips, {elapsed:.1f}s, failures {bad}")
    assert ok


def test_criterion_8_preproj_suite():
    t = time.time()
    rep = preproj_selftest()
    elapsed = time.time() - t
    failed = [r["name"] for r in rep["results"] if not r["ok"]]
    ok = not failed and elapsed < 300
    record(8, "preprojective algebra checks", ok,
           f"{len(rep['results'])} checks, {elapsed:.1f}s, failed {failed}")
    assert ok
