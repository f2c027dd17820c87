"""Diagram automorphisms, the folded root systems and the bijection Phi.

A folded system is an ordinary :class:`RootSystem` built from the folded
Cartan matrix, so its Weyl group, chamber weights and edge inequalities come
for free.  Anything that needs MV-ness (crystal operators, reconstruction from
Lusztig data) is routed through the simply-laced cover.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .polytope import (BZDatum, LusztigDatum, NotMVError, bz_from_lusztig, lusztig_datum,
                       permute_weight)
from .rootsys import RootSystem, UnsupportedTypeError, build_root_system, cartan_matrix


class FoldingError(ValueError):
    pass


class NotSigmaInvariantError(FoldingError):
    pass


@dataclass(frozen=True)
class DiagramAutomorphism:
    perm: dict
    order: int = field(init=False)
    orbits: tuple = field(init=False)

    def __post_init__(self):
        p = self.perm
        if sorted(p) != sorted(p.values()):
            raise FoldingError("not a permutation")
        k = 1
        cur = dict(p)
        while any(cur[i] != i for i in cur):
            cur = {i: p[cur[i]] for i in cur}
            k += 1
        orbits = []
        seen = set()
        for i in sorted(p):
            if i in seen:
                continue
            orb = [i]
            while p[orb[-1]] != i:
                orb.append(p[orb[-1]])
            seen.update(orb)
            orbits.append(tuple(orb))
        object.__setattr__(self, "order", k)
        object.__setattr__(self, "orbits", tuple(orbits))

    def __hash__(self):
        return hash(tuple(sorted(self.perm.items())))

    def __call__(self, i: int) -> int:
        return self.perm[i]

    def orbit(self, i: int) -> tuple[int, ...]:
        for o in self.orbits:
            if i in o:
                return o
        raise KeyError(i)

    @property
    def orbit_sizes(self) -> dict[int, int]:
        return {i: len(self.orbit(i)) for i in self.perm}

    def validate(self, rs: RootSystem) -> None:
        c = rs.cartan
        if sorted(self.perm) != list(range(1, rs.rank + 1)):
            raise FoldingError("automorphism does not match the index set")
        for i in self.perm:
            for j in self.perm:
                if c[i - 1][j - 1] != c[self.perm[i] - 1][self.perm[j] - 1]:
                    raise FoldingError("permutation does not preserve the Cartan matrix")
        for o in self.orbits:
            for a in o:
                for b in o:
                    if a != b and c[a - 1][b - 1]:
                        raise FoldingError("orbit contains an edge")


def _perm(n: int, cycles) -> dict[int, int]:
    p = {i: i for i in range(1, n + 1)}
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            p[a] = b
    return p


# name -> (cover kind, rank, cycles, folded kind, folded rank, experimental)
FOLDINGS = {
    "C2@A3": ("A", 3, [(1, 3)], "C", 2, False),
    "C3@A5": ("A", 5, [(1, 5), (2, 4)], "C", 3, False),
    "B3@D4": ("D", 4, [(3, 4)], "B", 3, False),
    "B4@D5": ("D", 5, [(4, 5)], "B", 4, False),
    "G2@D4": ("D", 4, [(1, 3, 4)], "G", 2, False),
    "F4@E6": ("E", 6, [(1, 6), (2, 5)], "F", 4, True),
}


class FoldedContext:
    """Cover, automorphism, folded root system and the isomorphism Theta."""

    def __init__(self, name: str, cover: RootSystem, sigma: DiagramAutomorphism,
                 expected: tuple[str, int]):
        sigma.validate(cover)
        self.name = name
        self.cover = cover
        self.sigma = sigma
        self.reps = tuple(o[0] for o in sigma.orbits)
        self.orbit_of = {k + 1: o for k, o in enumerate(sigma.orbits)}
        c = cover.cartan
        n = len(self.reps)
        folded_c = [[sum(c[t - 1][self.reps[j] - 1] for t in self.orbit_of[i + 1])
                     for j in range(n)] for i in range(n)]
        if tuple(map(tuple, folded_c)) != cartan_matrix(*expected):
            raise FoldingError(f"folded Cartan matrix {folded_c} is not of type {expected}")
        self.folded = RootSystem(expected[0], expected[1], folded_c, name=name)
        self.folded.folding = self
        f = self.folded
        self.theta = tuple(cover.word_index(self.expand(f.weyl_words[w])) for w in range(f.order))
        if self.theta[f.w0] != cover.w0:
            raise FoldingError("Theta(w0) is not the longest element of the cover")
        # folded gamma -> a cover gamma index, checked on every representative
        fold_map: list[int | None] = [None] * len(f.gammas)
        reps_for: list[list[int]] = [[] for _ in f.gammas]
        for w in range(f.order):
            tw = self.theta[w]
            for i in range(n):
                g = f.gidx[w][i]
                cg = cover.gidx[tw][self.reps[i] - 1]
                reps_for[g].append(cg)
                if fold_map[g] is None:
                    fold_map[g] = cg
        self.fold_map = tuple(fold_map)
        self.fold_reps = tuple(tuple(sorted(set(r))) for r in reps_for)
        self.sigma_gamma = tuple(cover.gamma_index[permute_weight(sigma.perm, g)]
                                 for g in cover.gammas)

    def __repr__(self) -> str:
        return f"FoldedContext({self.name})"

    def expand(self, word) -> tuple[int, ...]:
        """Theta on words: each folded letter becomes its orbit block."""
        out = []
        for i in word:
            out.extend(self.orbit_of[i])
        return tuple(out)

    def theta_element(self, w: int) -> int:
        return self.theta[w]

    def restrict(self, lam) -> tuple[int, ...]:
        """Restriction of a cover weight to the folded Cartan subalgebra."""
        return tuple(sum(lam[t - 1] for t in self.orbit_of[i + 1]) for i in range(len(self.reps)))

    def folded_h(self, i: int) -> tuple[int, ...]:
        """h-hat_i as a cover coweight."""
        return tuple(1 if k + 1 in self.orbit_of[i] else 0 for k in range(self.cover.rank))


@functools.lru_cache(maxsize=None)
def build_folding(name: str, experimental: bool = False) -> FoldedContext:
    if name not in FOLDINGS:
        raise UnsupportedTypeError(f"unsupported folding {name!r}; choose from {sorted(FOLDINGS)}")
    kind, rank, cycles, fk, fr, exp = FOLDINGS[name]
    if exp and not experimental:
        raise UnsupportedTypeError(f"{name} is experimental; pass experimental=True")
    cover = build_root_system(kind, rank, experimental=exp)
    return FoldedContext(name, cover, DiagramAutomorphism(_perm(rank, cycles)), (fk, fr))


def context_of(rs: RootSystem) -> FoldedContext:
    if rs.folding is None:
        raise FoldingError(f"{rs.name} is not a folded root system")
    return rs.folding


# -- invariance and Phi --------------------------------------------------------------


def is_sigma_invariant(M: BZDatum, sigma) -> bool:
    if isinstance(sigma, FoldedContext):
        e = M.entries
        return all(e[g] == e[s] for g, s in enumerate(sigma.sigma_gamma))
    perm = sigma.perm if hasattr(sigma, "perm") else sigma
    rs = M.rs
    return all(M.entries[g] == M.entries[rs.gamma_index[permute_weight(perm, gamma)]]
               for g, gamma in enumerate(rs.gammas))


def fold(M: BZDatum, ctx: FoldedContext) -> BZDatum:
    if M.system != ctx.cover.name:
        raise FoldingError(f"datum lives on {M.system}, not {ctx.cover.name}")
    if not is_sigma_invariant(M, ctx):
        raise NotSigmaInvariantError("datum is not sigma-invariant")
    e = M.entries
    for reps in ctx.fold_reps:
        if len({e[g] for g in reps}) > 1:
            raise NotSigmaInvariantError("sigma-invariance violated across representatives")
    return BZDatum(ctx.folded, tuple(e[g] for g in ctx.fold_map))


def expand_lusztig(L: LusztigDatum, ctx: FoldedContext) -> LusztigDatum:
    word, n = [], []
    for i, v in zip(L.word, L.n):
        blk = ctx.orbit_of[i]
        word.extend(blk)
        n.extend([v] * len(blk))
    return LusztigDatum(tuple(word), tuple(n))


def folded_bz_from_lusztig(L: LusztigDatum, rs: RootSystem) -> BZDatum:
    ctx = context_of(rs)
    return fold(bz_from_lusztig(expand_lusztig(L, ctx), ctx.cover), ctx)


@functools.lru_cache(maxsize=100_000)
def unfold(Mh: BZDatum, ctx: FoldedContext | None = None) -> BZDatum:
    ctx = ctx or context_of(Mh.rs)
    f = ctx.folded
    if Mh.system != f.name:
        raise FoldingError(f"datum lives on {Mh.system}, not {f.name}")
    L = lusztig_datum(Mh, f.longest_word())
    M = bz_from_lusztig(expand_lusztig(L, ctx), ctx.cover)
    if fold(M, ctx) != Mh:
        raise NotMVError("folded datum is not in the image of Phi")
    return M


def is_folded_mv(Mh: BZDatum) -> bool:
    try:
        unfold(Mh)
    except (NotMVError, FoldingError):
        return False
    return True


# -- folded crystal ------------------------------------------------------------------


def folded_ftilde(M: BZDatum, j: int, ctx: FoldedContext, order=None) -> BZDatum:
    """f~_j^sigma on a sigma-invariant cover datum (j a folded index)."""
    from .crystal import ftilde
    if not is_sigma_invariant(M, ctx):
        raise NotSigmaInvariantError("input is not sigma-invariant")
    for t in (order or ctx.orbit_of[j]):
        M = ftilde(M, t)
    if not is_sigma_invariant(M, ctx):  # pragma: no cover - guaranteed by theory
        raise NotSigmaInvariantError("f~^sigma broke sigma-invariance")
    return M


def folded_etilde(M: BZDatum, j: int, ctx: FoldedContext) -> BZDatum | None:
    from .crystal import etilde
    for t in ctx.orbit_of[j]:
        M = etilde(M, t)
        if M is None:
            return None
    return M


def fhat(Mh: BZDatum, j: int) -> BZDatum:
    ctx = context_of(Mh.rs)
    return fold(folded_ftilde(unfold(Mh, ctx), j, ctx), ctx)


def ehat(Mh: BZDatum, j: int) -> BZDatum | None:
    ctx = context_of(Mh.rs)
    up = folded_etilde(unfold(Mh, ctx), j, ctx)
    return None if up is None else fold(up, ctx)


def folded_crystal(ctx: FoldedContext, depth: int) -> list[BZDatum]:
    from .crystal import generate
    return generate(ctx.folded, depth)


def folded_height(M: BZDatum, ctx: FoldedContext) -> int:
    """Number of f~^sigma steps needed to reach a sigma-invariant cover datum."""
    wt = M.weight
    return -sum(wt[r - 1] for r in ctx.reps)


def sigma_invariant_part(S, ctx: FoldedContext, depth: int) -> list[BZDatum]:
    return [M for M in S if is_sigma_invariant(M, ctx) and folded_height(M, ctx) <= depth]
