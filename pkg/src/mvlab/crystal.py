"""Kashiwara operators on MV polytopes and crystal generation."""
from __future__ import annotations

import functools
import hashlib
from dataclasses import dataclass
from typing import Iterable

from .polytope import BZDatum, LusztigDatum, bz_from_lusztig, lusztig_datum, trivial
from .rootsys import Coweight, RootSystem


@dataclass(frozen=True)
class CrystalStats:
    j: int
    wt: Coweight
    eps: int
    phi: int
    c: int


def base_word(rs: RootSystem, j: int):
    """Lexicographically smallest reduced word of w0 beginning with j."""
    return rs.longest_word(j)


def _check_index(rs: RootSystem, j: int) -> None:
    if not 1 <= j <= rs.rank:
        raise ValueError(f"index {j} out of range for {rs.name}")


@functools.lru_cache(maxsize=200_000)
def ftilde(M: BZDatum, j: int) -> BZDatum:
    rs = M.rs
    _check_index(rs, j)
    if rs.folding is not None:
        from .folding import fhat
        return fhat(M, j)
    L = lusztig_datum(M, base_word(rs, j))
    n = (L.n[0] + 1,) + L.n[1:]
    return bz_from_lusztig(LusztigDatum(L.word, n), rs)


@functools.lru_cache(maxsize=200_000)
def etilde(M: BZDatum, j: int) -> BZDatum | None:
    rs = M.rs
    _check_index(rs, j)
    if rs.folding is not None:
        from .folding import ehat
        return ehat(M, j)
    L = lusztig_datum(M, base_word(rs, j))
    if L.n[0] == 0:
        return None
    n = (L.n[0] - 1,) + L.n[1:]
    return bz_from_lusztig(LusztigDatum(L.word, n), rs)


def ftilde_power(M: BZDatum, j: int, k: int) -> BZDatum:
    for _ in range(k):
        M = ftilde(M, j)
    return M


def apply_word(M: BZDatum, ops: Iterable[int]) -> BZDatum:
    """Apply f~ along ``ops`` from right to left, as in f~_1 f~_2 (M)."""
    for j in reversed(list(ops)):
        M = ftilde(M, j)
    return M


def epsilon(M: BZDatum, j: int) -> int:
    _check_index(M.rs, j)
    return lusztig_datum(M, base_word(M.rs, j)).n[0]


def c_value(M: BZDatum, j: int) -> int:
    rs = M.rs
    f = rs.fundamental[j - 1]
    return M.entries[f] - M.entries[rs.s_gamma[j - 1][f]] - 1


def stats(M: BZDatum, j: int) -> CrystalStats:
    rs = M.rs
    wt = M.weight
    eps = epsilon(M, j)
    c = c_value(M, j)
    phi = eps + rs.pair_alpha(wt, j - 1)
    assert phi == c + 1, f"phi route mismatch at j={j}: {phi} vs {c + 1}"
    return CrystalStats(j, wt, eps, phi, c)


def string_bottom(M: BZDatum, j: int) -> tuple[BZDatum, int]:
    """The j-extremal element of the j-string through M and the distance to it."""
    k = 0
    while True:
        up = etilde(M, j)
        if up is None:
            return M, k
        M, k = up, k + 1


def generate(rs: RootSystem, depth: int) -> list[BZDatum]:
    """Every polytope reachable from the trivial one by at most ``depth`` f~ steps.

    Returned in BFS order, ties broken by sorted entries.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    start = trivial(rs)
    seen = {start}
    out = [start]
    frontier = [start]
    for _ in range(depth):
        nxt = set()
        for M in frontier:
            for j in range(1, rs.rank + 1):
                F = ftilde(M, j)
                if F not in seen:
                    nxt.add(F)
        level = sorted(nxt, key=lambda m: m.entries)
        seen.update(level)
        out.extend(level)
        frontier = level
    return out


def node_id(M: BZDatum) -> str:
    return "n" + hashlib.sha256(f"{M.system}:{M.key()}".encode()).hexdigest()[:12]


def crystal_edges(S: Iterable[BZDatum]) -> list[tuple[BZDatum, int, BZDatum]]:
    S = list(S)
    members = set(S)
    edges = []
    for M in S:
        for j in range(1, M.rs.rank + 1):
            F = ftilde(M, j)
            if F in members:
                edges.append((M, j, F))
    return edges


def crystal_graph(S: Iterable[BZDatum]) -> str:
    """DOT description of the crystal graph induced on ``S``."""
    S = sorted(set(S), key=lambda m: (m.height, m.entries))
    lines = ["digraph crystal {"]
    for M in S:
        wt = ",".join(map(str, M.weight))
        lines.append(f'  {node_id(M)} [label="({wt})"];')
    edges = sorted(crystal_edges(S), key=lambda e: (node_id(e[0]), e[1], node_id(e[2])))
    for a, j, b in edges:
        lines.append(f'  {node_id(a)} -> {node_id(b)} [label="{j}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
