from collections import Counter

import pytest

from mvlab import parse_root_system
from mvlab.crystal import ftilde, generate
from mvlab.folding import (DiagramAutomorphism, FoldingError, NotSigmaInvariantError,
                           build_folding, fold, folded_ftilde, folded_height,
                           is_folded_mv, is_sigma_invariant, sigma_invariant_part, unfold)
from mvlab.polytope import trivial, validate_edge_inequalities

from conftest import corpus


@pytest.mark.parametrize("name, cartan", [
    ("C2@A3", ((2, -2), (-1, 2))),
    ("B3@D4", ((2, -1, 0), (-1, 2, -1), (0, -2, 2))),
    ("G2@D4", ((2, -3), (-1, 2))),
])
def test_folded_cartan(name, cartan):
    # folded entry: sum over the orbit of i of c_{t, rep j}
    assert build_folding(name).folded.cartan == cartan


def test_automorphism_orbits():
    s = DiagramAutomorphism({1: 3, 2: 2, 3: 4, 4: 1})
    assert s.order == 3
    assert s.orbits == ((1, 3, 4), (2,))
    with pytest.raises(FoldingError):
        DiagramAutomorphism({1: 2, 2: 2})


def test_bad_automorphism_rejected():
    from mvlab import build_root_system
    with pytest.raises(FoldingError):
        DiagramAutomorphism({1: 2, 2: 1, 3: 3}).validate(build_root_system("A", 3))


def test_fold_requires_invariance():
    ctx = build_folding("C2@A3")
    M = ftilde(trivial(ctx.cover), 1)
    assert not is_sigma_invariant(M, ctx)
    with pytest.raises(NotSigmaInvariantError):
        fold(M, ctx)


def test_c2_first_step():
    ctx = build_folding("C2@A3")
    Mh = ftilde(trivial(ctx.folded), 1)
    M = unfold(Mh, ctx)
    assert M == ftilde(ftilde(trivial(ctx.cover), 3), 1)
    assert fold(M, ctx) == Mh


def test_order_independence_g2():
    ctx = build_folding("G2@D4")
    M = folded_ftilde(trivial(ctx.cover), 2, ctx)
    a = folded_ftilde(M, 1, ctx)
    b = folded_ftilde(M, 1, ctx, order=(4, 1, 3))
    assert a == b


@pytest.mark.parametrize("name", ["C2@A3", "B3@D4", "G2@D4"])
def test_folded_data_are_pseudo_weyl(name):
    for Mh in corpus(name, 4):
        assert not validate_edge_inequalities(Mh)
        assert is_folded_mv(Mh)


def test_c2_multiplicities_match_dual_partition_function():
    # coweight multiplicities of B(infinity) for C2 count multisets from {a, b, a+b, a+2b}
    roots = [(1, 0), (0, 1), (1, 1), (1, 2)]
    depth = 7
    want = Counter({(0, 0): 1})
    for r in roots:
        new = Counter(want)
        for nu, c in want.items():
            k = 1
            while sum(nu) + k * sum(r) <= depth:
                new[tuple(a + k * b for a, b in zip(nu, r))] += c
                k += 1
        want = new
    got = Counter(tuple(-x for x in M.weight) for M in generate(parse_root_system("C2@A3"), depth))
    assert got == want


def test_sigma_invariant_part_matches_folded_crystal():
    ctx = build_folding("C2@A3")
    cover = generate(ctx.cover, 10)
    inv = sigma_invariant_part(cover, ctx, 5)
    folded = generate(ctx.folded, 5)
    assert sorted(fold(M, ctx).entries for M in inv) == sorted(M.entries for M in folded)
    assert all(folded_height(unfold(M, ctx), ctx) == M.height for M in folded)


def test_foreign_datum_rejected():
    ctx = build_folding("C2@A3")
    with pytest.raises(FoldingError):
        fold(trivial(parse_root_system("A2")), ctx)


def test_theta_images():
    ctx = build_folding("C2@A3")
    c2, a3 = ctx.folded, ctx.cover
    assert ctx.theta[c2.word_index((1,))] == a3.word_index((1, 3))
    assert ctx.theta[c2.word_index((2,))] == a3.word_index((2,))
    assert ctx.theta[c2.w0] == a3.w0
    g2 = build_folding("G2@D4")
    assert g2.sigma.order == 3 and sorted(g2.sigma.orbit_sizes.values()) == [1, 3, 3, 3]


def test_invariance_examples():
    ctx = build_folding("C2@A3")
    T = trivial(ctx.cover)
    assert is_sigma_invariant(T, ctx)
    assert not is_sigma_invariant(ftilde(T, 1), ctx)
    both = ftilde(ftilde(T, 3), 1)
    assert is_sigma_invariant(both, ctx)
    assert folded_ftilde(T, 1, ctx) == both == ftilde(ftilde(T, 1), 3)
    assert both.weight == (-1, 0, -1)
    assert fold(both, ctx)[(1, 0)] == both[(1, 0, 0)] == -1
    assert fold(T, ctx) == trivial(ctx.folded) and unfold(trivial(ctx.folded), ctx) == T
