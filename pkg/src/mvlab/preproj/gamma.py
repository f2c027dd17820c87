"""The modules N(gamma), the functionals D_gamma and the induced BZ data."""
from __future__ import annotations

from ..polytope import BZDatum
from ..rootsys import RootSystem
from .algebra import PreprojAlgebra
from .modules import LambdaModule, hom_dim, injective, is_isomorphic, soc_chain


def _witness_word(rs: RootSystem, gamma) -> tuple[tuple[int, ...], int]:
    """(reduced word of w, i) with -gamma = w varpi_i and w minimal in its coset."""
    neg = tuple(-x for x in gamma)
    w, i = rs.gamma_witness[rs.chamber_index(neg)]
    return rs.weyl_words[w], i


def other_words(rs: RootSystem, word) -> list[tuple[int, ...]]:
    """Reduced words of the same element reachable by a single braid move."""
    out = []
    for p in range(len(word) - 1):
        a, b = word[p], word[p + 1]
        if a == b:
            continue
        m = rs.bracket(a - 1, b - 1)
        blk = tuple(word[p:p + m])
        if len(blk) == m and all(x == (a if k % 2 == 0 else b) for k, x in enumerate(blk)):
            out.append(rs.apply_move(word, (p, m)))
    return out


def n_gamma_from_word(alg: PreprojAlgebra, word, i: int) -> LambdaModule:
    if word and word[-1] != i:
        raise ValueError("the reduced word must end with i")
    mod, _ = soc_chain(injective(alg, i), tuple(reversed(word)))
    return mod


def n_gamma(alg: PreprojAlgebra, gamma, check_words: bool = False) -> LambdaModule:
    rs = alg.quiver.rs
    key = tuple(gamma)
    cache = alg.__dict__.setdefault("_ngamma", {})
    if key in cache and not check_words:
        return cache[key]
    word, i = _witness_word(rs, gamma)
    mod = n_gamma_from_word(alg, word, i)
    fund = tuple(1 if k == i - 1 else 0 for k in range(rs.rank))
    want = rs.to_root_coords(tuple(a + b for a, b in zip(fund, gamma)))
    if tuple(mod.dims) != tuple(want):
        raise RuntimeError(f"dimv N({key}) = {mod.dims}, expected {want}")
    if check_words:
        for alt in other_words(rs, word):
            if not is_isomorphic(mod, n_gamma_from_word(alg, alt, i)):
                raise RuntimeError(f"N({key}) depends on the reduced word")
    cache[key] = mod
    return mod


def d_gamma(alg: PreprojAlgebra, gamma, X: LambdaModule) -> int:
    return hom_dim(n_gamma(alg, gamma), X)


def bz_from_module(alg: PreprojAlgebra, X: LambdaModule) -> BZDatum:
    """M_gamma = -dim Hom(N(gamma), X); validity is for the caller to check."""
    rs = alg.quiver.rs
    return BZDatum(rs, tuple(-d_gamma(alg, g, X) for g in rs.gammas))
