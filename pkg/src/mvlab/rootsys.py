"""Root systems, Weyl groups and chamber weights.

Weights are integer tuples in the fundamental-weight basis, coweights are
integer tuples in the simple-coroot basis, so that ``<h, lam>`` is a plain dot
product.  The Cartan convention is ``c[i][j] = <h_i, alpha_j>``; the simple
root ``alpha_j`` therefore has fundamental-weight coordinates given by the
``j``-th column of the Cartan matrix.

Node labels in the public API are 1-based, as in Dynkin diagram pictures.
Internal tables are indexed by ``label - 1``.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Weight = tuple[int, ...]
Coweight = tuple[int, ...]
Word = tuple[int, ...]


class UnsupportedTypeError(ValueError):
    """Raised for Cartan types outside the supported table."""


class NotAChamberWeightError(ValueError):
    pass


# Simply-laced types are handled directly; the others only as Cartan data.
SIMPLY_LACED = {("A", n) for n in range(1, 6)} | {("D", 4), ("D", 5)}
EXPERIMENTAL = {("E", 6)}
NON_SIMPLY_LACED = {("B", 2), ("B", 3), ("B", 4), ("C", 2), ("C", 3),
                    ("G", 2), ("F", 4)}


def _edges_matrix(n: int, edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for a, b in edges:
        c[a - 1][b - 1] = -1
        c[b - 1][a - 1] = -1
    return c


def cartan_matrix(kind: str, rank: int) -> tuple[tuple[int, ...], ...]:
    n = rank
    if kind == "A":
        c = _edges_matrix(n, [(i, i + 1) for i in range(1, n)])
    elif kind == "D":
        c = _edges_matrix(n, [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)])
    elif kind == "E":
        # 1-2-3-5-6 with 4 hanging off 3
        c = _edges_matrix(n, [(1, 2), (2, 3), (3, 4), (3, 5), (5, 6)])
    elif kind == "B":
        c = _edges_matrix(n, [(i, i + 1) for i in range(1, n)])
        c[n - 1][n - 2] = -2
    elif kind == "C":
        c = _edges_matrix(n, [(i, i + 1) for i in range(1, n)])
        c[n - 2][n - 1] = -2
    elif kind == "G":
        c = [[2, -3], [-1, 2]]
    elif kind == "F":
        c = _edges_matrix(4, [(1, 2), (2, 3), (3, 4)])
        c[1][2] = -2
    else:
        raise UnsupportedTypeError(f"unsupported type {kind}{rank}")
    return tuple(tuple(row) for row in c)


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element, identified by its index in ``rs.weyl``.

    ``matrix`` holds the images of the fundamental weights as columns.
    """

    index: int
    matrix: tuple[Weight, ...] = field(compare=False)
    length: int = field(compare=False)
    word: Word = field(compare=False)


@dataclass(frozen=True)
class ChamberWeight:
    weight: Weight
    witness: tuple[Word, int] | None = field(default=None, compare=False)


class RootSystem:
    """Cartan data plus the fully enumerated Weyl group and chamber weights."""

    def __init__(self, kind: str, rank: int, cartan: Sequence[Sequence[int]] | None = None,
                 name: str | None = None):
        self.kind = kind
        self.rank = rank
        self.cartan = tuple(tuple(r) for r in (cartan or cartan_matrix(kind, rank)))
        self.name = name or f"{kind}{rank}"
        n = rank
        c = self.cartan
        for i in range(n):
            if c[i][i] != 2:
                raise ValueError("Cartan diagonal must be 2")
            for j in range(n):
                if i != j and (c[i][j] > 0 or (c[i][j] == 0) != (c[j][i] == 0)):
                    raise ValueError("invalid Cartan matrix")
        self.simply_laced = all(c[i][j] == c[j][i] for i in range(n) for j in range(n))
        self.folding = None  # set by mvlab.folding for folded systems
        # alpha_j in the fundamental-weight basis
        self.alpha: tuple[Weight, ...] = tuple(
            tuple(c[k][j] for k in range(n)) for j in range(n))
        self._enumerate_weyl()
        self._enumerate_chamber_weights()

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"

    # -- simple reflections -------------------------------------------------

    def reflect(self, j: int, lam: Sequence[int]) -> Weight:
        """s_j on a weight; ``j`` is 0-based."""
        x = lam[j]
        if not x:
            return tuple(lam)
        a = self.alpha[j]
        return tuple(l - x * ai for l, ai in zip(lam, a))

    def reflect_coweight(self, j: int, mu: Sequence[int]) -> Coweight:
        """s_j on a coweight in coroot coordinates; ``j`` is 0-based."""
        x = self.pair_alpha(mu, j)
        if not x:
            return tuple(mu)
        out = list(mu)
        out[j] -= x
        return tuple(out)

    def pair_alpha(self, mu: Sequence[int], j: int) -> int:
        """<mu, alpha_j> for a coweight in coroot coordinates."""
        c = self.cartan
        return sum(mu[i] * c[i][j] for i in range(self.rank) if mu[i])

    def bracket(self, j: int, k: int) -> int:
        """Order of s_j s_k (0-based labels)."""
        p = self.cartan[j][k] * self.cartan[k][j]
        return {0: 2, 1: 3, 2: 4, 3: 6}[p] if j != k else 1

    # -- Weyl group -----------------------------------------------------------

    def _enumerate_weyl(self) -> None:
        n = self.rank
        ident = tuple(tuple(1 if k == i else 0 for k in range(n)) for i in range(n))
        mats = [ident]
        words: list[Word] = [()]
        lengths = [0]
        index = {ident: 0}
        rmul: list[list[int]] = [[] for _ in range(n)]
        queue = deque([0])
        while queue:
            w = queue.popleft()
            cols = mats[w]
            for i in range(n):
                wa = tuple(sum(self.cartan[k][i] * cols[k][t] for k in range(n)) for t in range(n))
                new = list(cols)
                new[i] = tuple(a - b for a, b in zip(cols[i], wa))
                key = tuple(new)
                if key not in index:
                    index[key] = len(mats)
                    mats.append(key)
                    words.append(words[w] + (i + 1,))
                    lengths.append(lengths[w] + 1)
                    queue.append(index[key])
        size = len(mats)
        for i in range(n):
            row = [0] * size
            for w in range(size):
                cols = mats[w]
                wa = tuple(sum(self.cartan[k][i] * cols[k][t] for k in range(n)) for t in range(n))
                new = list(cols)
                new[i] = tuple(a - b for a, b in zip(cols[i], wa))
                row[w] = index[tuple(new)]
            rmul[i] = row
        lmul = []
        for j in range(n):
            row = [0] * size
            for w in range(size):
                row[w] = index[tuple(self.reflect(j, col) for col in mats[w])]
            lmul.append(row)
        self.weyl_matrices = mats
        self.weyl_words = words
        self.weyl_lengths = lengths
        self.weyl_index = index
        self.rmul = rmul
        self.lmul = lmul
        self.w0 = max(range(size), key=lengths.__getitem__)
        self.identity = 0

    @property
    def order(self) -> int:
        return len(self.weyl_matrices)

    @property
    def num_positive_roots(self) -> int:
        return self.weyl_lengths[self.w0]

    def element(self, w: int | Sequence[int]) -> WeylElement:
        """Weyl element from an index or a word of 1-based labels."""
        if isinstance(w, int):
            idx = w
        else:
            idx = self.word_index(w)
        return WeylElement(idx, self.weyl_matrices[idx], self.weyl_lengths[idx],
                           self.weyl_words[idx])

    def word_index(self, word: Sequence[int]) -> int:
        idx = 0
        for i in word:
            idx = self.rmul[i - 1][idx]
        return idx

    def is_reduced(self, word: Sequence[int]) -> bool:
        return self.weyl_lengths[self.word_index(word)] == len(word)

    def act(self, w: WeylElement | int, lam: Sequence[int]) -> Weight:
        idx = w.index if isinstance(w, WeylElement) else w
        cols = self.weyl_matrices[idx]
        n = self.rank
        return tuple(sum(cols[k][t] * lam[k] for k in range(n)) for t in range(n))

    def act_coweight(self, w: WeylElement | int, mu: Sequence[int]) -> Coweight:
        idx = w.index if isinstance(w, WeylElement) else w
        out = tuple(mu)
        for i in reversed(self.weyl_words[idx]):
            out = self.reflect_coweight(i - 1, out)
        return out

    def left_descent(self, j: int, w: int) -> bool:
        """s_j w < w; ``j`` is 1-based."""
        return self.weyl_lengths[self.lmul[j - 1][w]] < self.weyl_lengths[w]

    def right_descent(self, i: int, w: int) -> bool:
        return self.weyl_lengths[self.rmul[i - 1][w]] < self.weyl_lengths[w]

    def longest_word(self, start: int | None = None) -> Word:
        """Lexicographically smallest reduced word of w0 (optionally starting with ``start``)."""
        prefix: Word = () if start is None else (start,)
        return self.extend_to_w0(prefix)

    def extend_to_w0(self, prefix: Sequence[int]) -> Word:
        """Greedily extend a reduced word to a reduced word of w0."""
        u = self.word_index(prefix)
        if self.weyl_lengths[u] != len(prefix):
            raise ValueError(f"word {tuple(prefix)} is not reduced")
        word = list(prefix)
        while u != self.w0:
            for i in range(1, self.rank + 1):
                v = self.rmul[i - 1][u]
                if self.weyl_lengths[v] > self.weyl_lengths[u]:
                    word.append(i)
                    u = v
                    break
        return tuple(word)

    def prefix_word(self, w: WeylElement | int) -> Word:
        """Reduced word of w0 whose length-l(w) prefix multiplies to ``w``."""
        idx = w.index if isinstance(w, WeylElement) else w
        return self.extend_to_w0(self.weyl_words[idx])

    # -- braid moves ----------------------------------------------------------

    def braid_path(self, u: Sequence[int], v: Sequence[int]) -> list[tuple[int, int]]:
        """Braid moves turning reduced word ``u`` into ``v`` (same element).

        Each move is ``(position, m)``: the alternating block of length ``m``
        starting at 0-based ``position`` is replaced by the other alternating
        block.  Built by the constructive argument behind Matsumoto's theorem.
        """
        if self.word_index(u) != self.word_index(v) or len(u) != len(v):
            raise ValueError("words do not represent the same element")
        cur = list(u)
        moves: list[tuple[int, int]] = []
        for pos in range(len(v)):
            if cur[pos] != v[pos]:
                self._bring_front(cur, pos, v[pos], moves)
        return moves

    def _bring_front(self, cur: list[int], pos: int, s: int, moves: list) -> None:
        t = cur[pos]
        if t == s:
            return
        m = self.bracket(s - 1, t - 1)
        for k in range(1, m):
            self._bring_front(cur, pos + k, s if k % 2 else t, moves)
        cur[pos:pos + m] = [s if k % 2 == 0 else t for k in range(m)]
        moves.append((pos, m))

    @staticmethod
    def apply_move(word: Sequence[int], move: tuple[int, int]) -> Word:
        pos, m = move
        a, b = word[pos], word[pos + 1]
        block = tuple(b if k % 2 == 0 else a for k in range(m))
        return tuple(word[:pos]) + block + tuple(word[pos + m:])

    # -- chamber weights ------------------------------------------------------

    def _enumerate_chamber_weights(self) -> None:
        n = self.rank
        gammas: list[Weight] = []
        gindex: dict[Weight, int] = {}
        witness: list[tuple[int, int]] = []
        table = []
        # BFS order of the Weyl group makes the first witness a shortest one
        for w, cols in enumerate(self.weyl_matrices):
            row = []
            for i in range(n):
                g = cols[i]
                if g not in gindex:
                    gindex[g] = len(gammas)
                    gammas.append(g)
                    witness.append((w, i + 1))
                row.append(gindex[g])
            table.append(tuple(row))
        self.gammas = gammas
        self.gamma_index = gindex
        self.gamma_witness = witness
        self.gidx = table  # gidx[w][i-1] = index of w.varpi_i
        self.s_gamma = [tuple(gindex[self.reflect(j, g)] for g in gammas) for j in range(n)]
        self.neg_gamma = tuple(gindex[tuple(-x for x in g)] for g in gammas)
        self.fundamental = tuple(gindex[tuple(1 if k == i else 0 for k in range(n))]
                                 for i in range(n))

    def chamber_weights(self) -> list[ChamberWeight]:
        return [ChamberWeight(g, (self.weyl_words[w], i))
                for g, (w, i) in zip(self.gammas, self.gamma_witness)]

    def chamber_index(self, gamma: Sequence[int]) -> int:
        try:
            return self.gamma_index[tuple(gamma)]
        except KeyError:
            raise NotAChamberWeightError(f"{tuple(gamma)} is not a chamber weight") from None

    def chamber(self, word: Sequence[int], i: int, sign: int = 1) -> int:
        """Index of ``sign * w varpi_i`` for ``w`` given by a word."""
        g = self.gidx[self.word_index(word)][i - 1]
        return g if sign > 0 else self.neg_gamma[g]

    def classify(self, j: int, gamma: Sequence[int]) -> str:
        """'upper' when gamma is in Gamma^j (<h_j, gamma> <= 0), else 'lower'."""
        self.chamber_index(gamma)
        return "upper" if gamma[j - 1] <= 0 else "lower"

    # -- lattice helpers --------------------------------------------------------

    def to_root_coords(self, lam: Sequence[int]) -> tuple:
        """Express a weight in the simple-root basis (exact, may be fractional)."""
        from fractions import Fraction
        from .linalg import solve, to_matrix
        a = to_matrix([[self.alpha[j][k] for j in range(self.rank)] for k in range(self.rank)])
        x = solve(a, [Fraction(v) for v in lam])
        return tuple(int(v) if v.denominator == 1 else v for v in x)

    def symmetric_form(self, x: Sequence[int], y: Sequence[int]) -> int:
        """(x, y) for root-lattice elements in simple-root coordinates; simply-laced only."""
        c = self.cartan
        return sum(x[i] * c[i][k] * y[k] for i in range(self.rank) for k in range(self.rank))


_NAME = re.compile(r"^([A-G])(\d+)$")


def build_root_system(kind: str, rank: int, experimental: bool = False) -> RootSystem:
    key = (kind, rank)
    if key in EXPERIMENTAL and not experimental:
        raise UnsupportedTypeError(f"{kind}{rank} requires the experimental flag")
    if key in NON_SIMPLY_LACED:
        raise UnsupportedTypeError(
            f"{kind}{rank} is available only through folding, e.g. B3@D4, C2@A3, G2@D4")
    if key not in SIMPLY_LACED | EXPERIMENTAL:
        raise UnsupportedTypeError(f"unsupported type {kind}{rank}")
    return _cached(kind, rank)


_CACHE: dict[tuple[str, int], RootSystem] = {}


def _cached(kind: str, rank: int) -> RootSystem:
    key = (kind, rank)
    if key not in _CACHE:
        _CACHE[key] = RootSystem(kind, rank)
    return _CACHE[key]


def parse_root_system(name: str, experimental: bool = False) -> RootSystem:
    """'A2', 'D4', or folded notation such as 'C2@A3'."""
    if "@" in name:
        from .folding import build_folding
        return build_folding(name, experimental=experimental).folded
    m = _NAME.match(name.strip())
    if not m:
        raise UnsupportedTypeError(f"cannot parse root system {name!r}")
    return build_root_system(m.group(1), int(m.group(2)), experimental=experimental)
