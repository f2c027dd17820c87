"""BZ data, GGMS vertices, Lusztig data and braid-move propagation.

A BZ datum is stored as a tuple of integers aligned with ``rs.gammas``.  The
normalization ``mu_{w0} = 0`` is part of the type: ``M_{w0 varpi_i} = 0``.
"""
from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .rootsys import Coweight, RootSystem, Word


class NotMVError(ValueError):
    """A datum failed an MV condition (negative Lusztig coordinate, ...)."""


class PluckerViolationError(ValueError):
    """Braid propagation assigned two different values to one chamber weight."""


class NotNormalizedError(ValueError):
    pass


class RootSystemMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class BZDatum:
    rs: RootSystem = field(compare=False, repr=False)
    entries: tuple[int, ...]
    system: str = ""

    def __post_init__(self):
        if not self.system:
            object.__setattr__(self, "system", self.rs.name)
        if len(self.entries) != len(self.rs.gammas):
            raise ValueError("BZ datum must be total on the chamber weights")

    def __getitem__(self, gamma: Sequence[int]) -> int:
        return self.entries[self.rs.chamber_index(gamma)]

    def at(self, word: Sequence[int], i: int, sign: int = 1) -> int:
        """M at ``sign * w varpi_i`` where ``w`` is given by a word."""
        return self.entries[self.rs.chamber(word, i, sign)]

    def replace(self, values: Mapping[int, int]) -> "BZDatum":
        e = list(self.entries)
        for g, v in values.items():
            e[g] = v
        return BZDatum(self.rs, tuple(e))

    @property
    def weight(self) -> Coweight:
        """mu_e, the lowest vertex, in coroot coordinates."""
        return vertex(self, self.rs.identity)

    @property
    def height(self) -> int:
        return -sum(self.weight)

    def key(self) -> str:
        return ",".join(map(str, self.entries))

    def __reduce__(self):
        # ship the system name only; workers rebuild the (cached) root system
        return (_restore, (self.system, self.entries))


def _restore(system: str, entries: tuple[int, ...]) -> "BZDatum":
    from .rootsys import parse_root_system
    return BZDatum(parse_root_system(system, experimental=True), entries)


@dataclass(frozen=True)
class LusztigDatum:
    word: Word
    n: tuple[int, ...]


def trivial(rs: RootSystem) -> BZDatum:
    return BZDatum(rs, (0,) * len(rs.gammas))


def _check_same(a: BZDatum, b: BZDatum) -> None:
    if a.system != b.system:
        raise RootSystemMismatchError(f"{a.system} vs {b.system}")


# -- per-root-system tables ---------------------------------------------------------


class _Tables:
    def __init__(self, rs: RootSystem):
        self.rs = rs
        n = rs.rank
        c = rs.cartan
        size = rs.order
        inv = [0] * size
        for w in range(size):
            inv[w] = rs.word_index(tuple(reversed(rs.weyl_words[w])))
        self.inverse = inv
        # edge inequality rows, one per (w, i), and a deduplicated list
        rows = []
        dedup = {}
        for w in range(size):
            for i in range(n):
                terms = {}
                ws = rs.rmul[i][w]
                a = rs.gidx[w][i]
                b = rs.gidx[ws][i]
                terms[a] = terms.get(a, 0) + 1
                terms[b] = terms.get(b, 0) + 1
                for j in range(n):
                    if j != i and c[j][i]:
                        g = rs.gidx[w][j]
                        terms[g] = terms.get(g, 0) + c[j][i]
                t = tuple(sorted(terms.items()))
                rows.append((w, i + 1, t))
                dedup.setdefault(t, (w, i + 1))
        self.edge_rows = rows
        self.edge_constraints = list(dedup)
        # tropical Plucker triples, simply-laced only
        pl = []
        if rs.simply_laced:
            for w in range(size):
                asc = [i for i in range(n) if rs.weyl_lengths[rs.rmul[i][w]] > rs.weyl_lengths[w]]
                for x, i in enumerate(asc):
                    for j in asc[x + 1:]:
                        if c[i][j] == 0:
                            continue
                        wi, wj = rs.rmul[i][w], rs.rmul[j][w]
                        pl.append((w, i + 1, j + 1,
                                   rs.gidx[wi][i], rs.gidx[wj][j],
                                   rs.gidx[w][i], rs.gidx[rs.rmul[j][wi]][j],
                                   rs.gidx[rs.rmul[i][wj]][i], rs.gidx[w][j]))
        self.plucker = pl

    @functools.lru_cache(maxsize=None)
    def word_data(self, word: Word):
        """Prefix elements, coroots beta_k and Lusztig-formula index data."""
        rs = self.rs
        c = rs.cartan
        n = rs.rank
        prefixes = [rs.identity]
        for i in word:
            prefixes.append(rs.rmul[i - 1][prefixes[-1]])
        if prefixes[-1] != rs.w0 or len(word) != rs.num_positive_roots:
            raise ValueError(f"{word} is not a reduced word of w0")
        betas = []
        lus = []
        for k, i in enumerate(word):
            h = tuple(1 if t == i - 1 else 0 for t in range(n))
            betas.append(rs.act_coweight(prefixes[k], h))
            wprev, wcur = prefixes[k], prefixes[k + 1]
            others = tuple((rs.gidx[wcur][j], c[j][i - 1]) for j in range(n)
                           if j != i - 1 and c[j][i - 1])
            lus.append((rs.gidx[wprev][i - 1], rs.gidx[wcur][i - 1], others))
        return prefixes, betas, lus


@functools.lru_cache(maxsize=None)
def tables(rs: RootSystem) -> _Tables:
    return _Tables(rs)


# -- validators ---------------------------------------------------------------------


def edge_lhs(M: BZDatum, w: int, i: int) -> int:
    """LHS of the edge inequality at (w, i); ``w`` an index, ``i`` 1-based."""
    rs = M.rs
    e = M.entries
    ws = rs.rmul[i - 1][w]
    total = e[rs.gidx[w][i - 1]] + e[rs.gidx[ws][i - 1]]
    for j in range(rs.rank):
        if j != i - 1:
            total += rs.cartan[j][i - 1] * e[rs.gidx[w][j]]
    return total


def validate_edge_inequalities(M: BZDatum) -> list[tuple[int, int, int]]:
    """Violations ``(w index, i, lhs)`` with ``lhs > 0``; empty means valid."""
    e = M.entries
    out = []
    for w, i, terms in tables(M.rs).edge_rows:
        lhs = sum(coef * e[g] for g, coef in terms)
        if lhs > 0:
            out.append((w, i, lhs))
    return out


def satisfies_edge_inequalities(entries: Sequence[int], rs: RootSystem) -> bool:
    for terms in tables(rs).edge_constraints:
        if sum(coef * entries[g] for g, coef in terms) > 0:
            return False
    return True


def validate_tropical_plucker(M: BZDatum) -> list[tuple[int, int, int, int, int]]:
    """Violations ``(w, i, j, lhs, rhs)`` of the rank-2 A2 relations.

    Pairs with ``c_ij = 0`` impose no condition.
    """
    if not M.rs.simply_laced:
        raise NotImplementedError("tropical Plucker relations for non-simply-laced "
                                  "types are not implemented; use folding")
    e = M.entries
    out = []
    for w, i, j, a, b, c1, d1, c2, d2 in tables(M.rs).plucker:
        lhs = e[a] + e[b]
        rhs = min(e[c1] + e[d1], e[c2] + e[d2])
        if lhs != rhs:
            out.append((w, i, j, lhs, rhs))
    return out


def is_mv(M: BZDatum) -> bool:
    if M.rs.folding is not None:
        from .folding import is_folded_mv
        return is_folded_mv(M)
    return not validate_edge_inequalities(M) and not validate_tropical_plucker(M)


# -- vertices -----------------------------------------------------------------------


def vertex(M: BZDatum, w: int) -> Coweight:
    """mu_w solving <mu_w, w varpi_i> = M_{w varpi_i} (coroot coordinates)."""
    rs = M.rs
    n = rs.rank
    winv = tables(rs).inverse[w]
    cols = rs.weyl_matrices[winv]  # cols[t] = w^{-1} varpi_t
    vals = [M.entries[rs.gidx[w][i]] for i in range(n)]
    return tuple(sum(cols[t][i] * vals[i] for i in range(n)) for t in range(n))


def vertices_from_bz(M: BZDatum) -> list[Coweight]:
    """GGMS datum indexed like ``rs.weyl_matrices``."""
    verts = [vertex(M, w) for w in range(M.rs.order)]
    if any(verts[M.rs.w0]):
        raise NotNormalizedError("datum is not normalized at mu_{w0} = 0")
    return verts


def pair(mu: Sequence[int], lam: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(mu, lam))


def is_tight(M: BZDatum) -> bool:
    """M_gamma equals the minimum of <mu_w, gamma> over all vertices."""
    verts = vertices_from_bz(M)
    for g, gamma in enumerate(M.rs.gammas):
        if min(pair(mu, gamma) for mu in verts) != M.entries[g]:
            return False
    return True


# -- Lusztig data and braid moves -------------------------------------------------------


def lusztig_datum(M: BZDatum, word: Sequence[int], check: bool = True) -> LusztigDatum:
    word = tuple(word)
    _, _, lus = tables(M.rs).word_data(word)
    e = M.entries
    n = []
    for a, b, others in lus:
        v = -e[a] - e[b] - sum(coef * e[g] for g, coef in others)
        n.append(v)
    if check and any(v < 0 for v in n):
        raise NotMVError(f"negative Lusztig coordinate in word {word}: {n}")
    return LusztigDatum(word, tuple(n))


def braid_transition(word: Sequence[int], n: Sequence[int], position: int,
                     rs: RootSystem | None = None) -> LusztigDatum:
    """Lusztig datum in the word obtained by a braid move at ``position`` (0-based)."""
    word = tuple(word)
    n = tuple(n)
    p = position
    if p < 0 or p + 1 >= len(word) or word[p] == word[p + 1]:
        raise ValueError(f"no braid move at position {p} of {word}")
    a, b = word[p], word[p + 1]
    if rs is not None:
        m = rs.bracket(a - 1, b - 1)
    else:
        m = 3 if p + 2 < len(word) and word[p + 2] == a else 2
    if m == 2:
        new_word = word[:p] + (b, a) + word[p + 2:]
        new_n = n[:p] + (n[p + 1], n[p]) + n[p + 2:]
    elif m == 3:
        if p + 2 >= len(word) or word[p + 2] != a:
            raise ValueError(f"no braid move at position {p} of {word}")
        x, y, z = n[p:p + 3]
        t = min(x, z)
        new_word = word[:p] + (b, a, b) + word[p + 3:]
        new_n = n[:p] + (y + z - t, t, x + y - t) + n[p + 3:]
    else:
        raise ValueError("braid moves of length > 3 need the folded route")
    return LusztigDatum(new_word, new_n)


@dataclass
class _Node:
    parent: int
    move: tuple[int, int]
    word: Word
    new_positions: tuple[int, ...]  # prefix lengths k whose vertex changes
    betas: tuple
    assign: tuple  # per new position: tuple of (gamma index, gamma weight)


class PropagationPlan:
    """Spanning tree of reduced words reachable from ``base`` by braid moves.

    The union of the prefixes of the words covers every chamber weight, so
    walking the tree with the Lusztig transition maps determines the full BZ
    datum of a polytope from one Lusztig datum.
    """

    def __init__(self, rs: RootSystem, base: Word):
        self.rs = rs
        self.base = base
        prefixes, betas, _ = tables(rs).word_data(base)
        self.root_betas = tuple(betas)
        self.root_assign = tuple(
            tuple((rs.gidx[w][i], rs.gammas[rs.gidx[w][i]]) for i in range(rs.rank))
            for w in prefixes)
        covered = {g for row in self.root_assign for g, _ in row}
        self.nodes: list[_Node] = []
        words = {base: -1}
        for g in range(len(rs.gammas)):
            if g in covered:
                continue
            w, _ = rs.gamma_witness[g]
            target = rs.prefix_word(w)
            cur, cur_id = base, -1
            for move in rs.braid_path(base, target):
                nxt = rs.apply_move(cur, move)
                if nxt not in words:
                    node = self._make_node(cur_id, move, nxt)
                    words[nxt] = len(self.nodes)
                    self.nodes.append(node)
                    covered.update(g2 for row in node.assign for g2, _ in row)
                cur, cur_id = nxt, words[nxt]
            if g not in covered:  # pragma: no cover - Matsumoto guarantees coverage
                raise AssertionError("braid propagation failed to cover a chamber weight")

    def _make_node(self, parent: int, move: tuple[int, int], word: Word) -> _Node:
        rs = self.rs
        prefixes, betas, _ = tables(rs).word_data(word)
        pos, m = move
        new = tuple(range(pos + 1, pos + m))
        assign = tuple(
            tuple((rs.gidx[prefixes[k]][i], rs.gammas[rs.gidx[prefixes[k]][i]])
                  for i in range(rs.rank)) for k in new)
        return _Node(parent, move, word, new, tuple(betas[pos:pos + m]), assign)

    def run(self, n: Sequence[int]) -> tuple[int, ...]:
        rs = self.rs
        r = len(self.base)
        dim = rs.rank
        vals: list[int | None] = [None] * len(rs.gammas)
        # vertices from the mu_{w0} = 0 end
        verts = [None] * (r + 1)
        verts[r] = (0,) * dim
        for k in range(r, 0, -1):
            b = self.root_betas[k - 1]
            nk = n[k - 1]
            verts[k - 1] = tuple(x - nk * y for x, y in zip(verts[k], b)) if nk else verts[k]
        for k, row in enumerate(self.root_assign):
            mu = verts[k]
            for g, gamma in row:
                v = sum(a * b for a, b in zip(mu, gamma))
                old = vals[g]
                if old is None:
                    vals[g] = v
                elif old != v:
                    raise PluckerViolationError(f"chamber weight {gamma}: {old} vs {v}")
        states = [(tuple(n), verts)]
        node_state = []
        for node in self.nodes:
            pn, pverts = states[0] if node.parent < 0 else node_state[node.parent]
            pos, m = node.move
            nn = _transition(pn, pos, m)
            nv = list(pverts)
            mu = pverts[pos]
            for off in range(m):
                b = node.betas[off]
                c = nn[pos + off]
                if c:
                    mu = tuple(x + c * y for x, y in zip(mu, b))
                if off < m - 1:
                    nv[pos + off + 1] = mu
            if mu != pverts[pos + m]:
                raise PluckerViolationError("braid transition does not close up")
            for k, row in zip(node.new_positions, node.assign):
                vk = nv[k]
                for g, gamma in row:
                    v = sum(a * b for a, b in zip(vk, gamma))
                    old = vals[g]
                    if old is None:
                        vals[g] = v
                    elif old != v:
                        raise PluckerViolationError(f"chamber weight {gamma}: {old} vs {v}")
            node_state.append((nn, nv))
        if any(v is None for v in vals):  # pragma: no cover
            raise AssertionError("propagation did not reach every chamber weight")
        return tuple(vals)  # type: ignore[arg-type]


def _transition(n: tuple[int, ...], p: int, m: int) -> tuple[int, ...]:
    if m == 2:
        return n[:p] + (n[p + 1], n[p]) + n[p + 2:]
    x, y, z = n[p:p + 3]
    t = min(x, z)
    return n[:p] + (y + z - t, t, x + y - t) + n[p + 3:]


@functools.lru_cache(maxsize=None)
def propagation_plan(rs: RootSystem, base: Word) -> PropagationPlan:
    return PropagationPlan(rs, base)


def bz_from_lusztig(L: LusztigDatum, rs: RootSystem) -> BZDatum:
    if any(v < 0 for v in L.n):
        raise NotMVError("Lusztig data of MV polytopes are nonnegative")
    if rs.folding is not None:
        from .folding import folded_bz_from_lusztig
        return folded_bz_from_lusztig(L, rs)
    if len(L.n) != len(L.word):
        raise ValueError("word and datum lengths differ")
    return BZDatum(rs, propagation_plan(rs, tuple(L.word)).run(L.n))


# -- comparisons and symmetries -----------------------------------------------------------


class Containment(enum.Enum):
    EQUAL = "equal"
    FIRST_IN_SECOND = "P<=Q"
    SECOND_IN_FIRST = "Q<=P"
    INCOMPARABLE = "incomparable"


def compare(Mp: BZDatum, Mq: BZDatum) -> Containment:
    """Containment of P(Mp) and P(Mq); Q <= P iff Mq >= Mp entrywise (tight data)."""
    _check_same(Mp, Mq)
    q_ge = all(q >= p for p, q in zip(Mp.entries, Mq.entries))
    p_ge = all(p >= q for p, q in zip(Mp.entries, Mq.entries))
    if q_ge and p_ge:
        return Containment.EQUAL
    if q_ge:
        return Containment.SECOND_IN_FIRST
    if p_ge:
        return Containment.FIRST_IN_SECOND
    return Containment.INCOMPARABLE


def permute_weight(perm: Mapping[int, int] | Sequence[int], lam: Sequence[int]) -> tuple[int, ...]:
    """sigma(lam) with <h_k, sigma lam> = <h_{sigma(k)}, lam>; labels 1-based."""
    p = _perm_map(perm)
    return tuple(lam[p[k + 1] - 1] for k in range(len(lam)))


def _perm_map(perm) -> dict[int, int]:
    if hasattr(perm, "perm"):
        perm = perm.perm
    if isinstance(perm, Mapping):
        return dict(perm)
    return {k + 1: v for k, v in enumerate(perm)}


def sigma_act(sigma, M: BZDatum) -> BZDatum:
    """BZ datum of sigma(P): M'_gamma = M_{sigma(gamma)}."""
    rs = M.rs
    p = _perm_map(sigma)
    if sorted(p) != list(range(1, rs.rank + 1)) or sorted(p.values()) != sorted(p):
        raise ValueError("permutation does not match the root system")
    c = rs.cartan
    if any(c[i - 1][j - 1] != c[p[i] - 1][p[j] - 1] for i in p for j in p):
        raise ValueError("permutation is not a diagram automorphism")
    idx = rs.gamma_index
    return BZDatum(rs, tuple(M.entries[idx[permute_weight(p, g)]] for g in rs.gammas))


def renormalize(entries: Sequence[int], rs: RootSystem) -> BZDatum:
    """Translate a datum so that mu_{w0} = 0 (the only translation action used)."""
    tmp = BZDatum(rs, tuple(entries))
    nu = vertex(tmp, rs.w0)
    return BZDatum(rs, tuple(e - pair(nu, g) for e, g in zip(entries, rs.gammas)))


def from_values(rs: RootSystem, values: Iterable[tuple[Sequence[int], int]]) -> BZDatum:
    e = [None] * len(rs.gammas)
    for gamma, v in values:
        e[rs.chamber_index(gamma)] = int(v)
    if any(x is None for x in e):
        raise ValueError("BZ datum must be total on the chamber weights")
    return BZDatum(rs, tuple(e))  # type: ignore[arg-type]
