"""Finite-dimensional Lambda-modules, morphisms, Hom/Ext dimensions, socles and tops."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .. import linalg
from .algebra import PreprojAlgebra
from .quiver import DoubledQuiver

Matrix = list[list[Fraction]]


def _zero(m: int, n: int) -> Matrix:
    return [[Fraction(0)] * n for _ in range(m)]


def _apply(a: Matrix, v) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def _mul(a: Matrix, b: Matrix, inner: int, ncols: int) -> Matrix:
    out = _zero(len(a), ncols)
    for i, row in enumerate(a):
        for k in range(inner):
            x = row[k]
            if x:
                bk = b[k]
                for j in range(ncols):
                    if bk[j]:
                        out[i][j] += x * bk[j]
    return out


class LambdaModule:
    """Graded spaces ``dims[v-1]`` and arrow maps ``maps[a]`` of shape (dim t(a), dim s(a))."""

    def __init__(self, quiver: DoubledQuiver, dims, maps: dict[int, Matrix], check: bool = True):
        self.quiver = quiver
        self.dims = tuple(int(d) for d in dims)
        self.maps = {}
        for a in quiver.arrows:
            m = maps.get(a.index)
            rows, cols = self.dim(a.target), self.dim(a.source)
            if m is None:
                m = _zero(rows, cols)
            m = [[Fraction(x) for x in row] for row in m]
            if len(m) != rows or any(len(r) != cols for r in m):
                raise ValueError(f"arrow {a.key} has the wrong shape")
            self.maps[a.index] = m
        if check and not self.satisfies_relations():
            raise ValueError("preprojective relations fail")

    def dim(self, v: int) -> int:
        return self.dims[v - 1]

    @property
    def dimv(self) -> tuple[int, ...]:
        return self.dims

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def satisfies_relations(self) -> bool:
        q = self.quiver
        for v in q.vertices:
            d = self.dim(v)
            acc = _zero(d, d)
            for a in q.into[v]:
                mid = self.dim(a.source)
                prod = _mul(self.maps[a.index], self.maps[a.star], mid, d)
                for i in range(d):
                    for j in range(d):
                        acc[i][j] += a.eps * prod[i][j]
            if any(any(r) for r in acc):
                return False
        return True

    def __repr__(self) -> str:
        return f"LambdaModule(dimv={self.dims})"


# -- constructors -----------------------------------------------------------------


def zero_module(q: DoubledQuiver) -> LambdaModule:
    return LambdaModule(q, [0] * q.n, {})


def simple(q: DoubledQuiver, i: int) -> LambdaModule:
    return LambdaModule(q, [1 if v == i else 0 for v in q.vertices], {})


def direct_sum(*mods: LambdaModule) -> LambdaModule:
    q = mods[0].quiver
    dims = [sum(m.dim(v) for m in mods) for v in q.vertices]
    maps = {}
    for a in q.arrows:
        big = _zero(dims[a.target - 1], dims[a.source - 1])
        r0 = c0 = 0
        for m in mods:
            blk = m.maps[a.index]
            for i, row in enumerate(blk):
                for j, x in enumerate(row):
                    big[r0 + i][c0 + j] = x
            r0 += m.dim(a.target)
            c0 += m.dim(a.source)
        maps[a.index] = big
    return LambdaModule(q, dims, maps, check=False)


def projective(alg: PreprojAlgebra, i: int) -> LambdaModule:
    """P_i: paths starting at i, arrows acting by appending."""
    q = alg.quiver
    paths = alg.paths_from(i)
    pos = {}
    per = {v: [] for v in q.vertices}
    for b in paths:
        pos[b.index] = len(per[b.end])
        per[b.end].append(b)
    maps = {}
    for a in q.arrows:
        m = _zero(len(per[a.target]), len(per[a.source]))
        for c, b in enumerate(per[a.source]):
            for k, x in alg.times_arrow({b.index: Fraction(1)}, a.index).items():
                m[pos[k]][c] = x
        maps[a.index] = m
    return LambdaModule(q, [len(per[v]) for v in q.vertices], maps)


def injective(alg: PreprojAlgebra, i: int) -> LambdaModule:
    """I_i: the dual of the paths ending at i; arrows act by transposed prepending."""
    q = alg.quiver
    per = {v: [] for v in q.vertices}
    pos = {}
    for b in alg.paths_to(i):
        pos[b.index] = len(per[b.start])
        per[b.start].append(b)
    maps = {}
    for a in q.arrows:
        # phi in I_{s(a)} -> (X_a phi)(p) = phi(a p) for p in per[t(a)]
        m = _zero(len(per[a.target]), len(per[a.source]))
        for r, p in enumerate(per[a.target]):
            for k, x in alg.path(a.source, (a.index,) + p.arrows).items():
                m[r][pos[k]] = x
        maps[a.index] = m
    return LambdaModule(q, [len(per[v]) for v in q.vertices], maps)


def standard_module(alg: PreprojAlgebra, kind: str, i: int) -> LambdaModule:
    if kind == "simple":
        return simple(alg.quiver, i)
    if kind == "projective":
        return projective(alg, i)
    if kind == "injective":
        return injective(alg, i)
    raise ValueError(f"unknown module kind {kind!r}")


# -- morphisms --------------------------------------------------------------------------


@dataclass
class ModuleMap:
    source: LambdaModule
    target: LambdaModule
    blocks: dict[int, Matrix]  # vertex -> matrix (dim target_v x dim source_v)


def _hom_system(X: LambdaModule, Y: LambdaModule):
    q = X.quiver
    off = {}
    n = 0
    for v in q.vertices:
        off[v] = n
        n += Y.dim(v) * X.dim(v)
    rows = []
    for a in q.arrows:
        s, t = a.source, a.target
        Xa, Ya = X.maps[a.index], Y.maps[a.index]
        for r in range(Y.dim(t)):
            for c in range(X.dim(s)):
                row = [Fraction(0)] * n
                # (f_t X_a)[r][c] = sum_k f_t[r][k] Xa[k][c]
                for k in range(X.dim(t)):
                    if Xa[k][c]:
                        row[off[t] + r * X.dim(t) + k] += Xa[k][c]
                # (Y_a f_s)[r][c] = sum_k Ya[r][k] f_s[k][c]
                for k in range(Y.dim(s)):
                    if Ya[r][k]:
                        row[off[s] + k * X.dim(s) + c] -= Ya[r][k]
                if any(row):
                    rows.append(row)
    return rows, n, off


def hom_basis(X: LambdaModule, Y: LambdaModule) -> list[ModuleMap]:
    rows, n, off = _hom_system(X, Y)
    out = []
    for vec in linalg.nullspace(rows, n):
        blocks = {}
        for v in X.quiver.vertices:
            dx, dy = X.dim(v), Y.dim(v)
            blocks[v] = [[vec[off[v] + r * dx + c] for c in range(dx)] for r in range(dy)]
        out.append(ModuleMap(X, Y, blocks))
    return out


def hom_dim(X: LambdaModule, Y: LambdaModule) -> int:
    rows, n, _ = _hom_system(X, Y)
    return n - linalg.rank(rows, n)


def symmetric_form(q: DoubledQuiver, x, y) -> int:
    c = q.rs.cartan
    return sum(x[i] * c[i][k] * y[k] for i in range(q.n) for k in range(q.n))


def ext1_dim(X: LambdaModule, Y: LambdaModule) -> int:
    """Crawley-Boevey: hom(X,Y) + hom(Y,X) - (dimv X, dimv Y)."""
    val = hom_dim(X, Y) + hom_dim(Y, X) - symmetric_form(X.quiver, X.dims, Y.dims)
    if val < 0:
        raise RuntimeError("negative Ext^1: input is not a valid pair of Lambda-modules")
    return val


def is_isomorphic(X: LambdaModule, Y: LambdaModule, tries: int = 40, seed: int = 0) -> bool:
    if X.dims != Y.dims:
        return False
    basis = hom_basis(X, Y)
    if not basis and X.total_dim:
        return False
    rng = random.Random(seed)
    for _ in range(tries):
        coefs = [rng.randint(-7, 7) for _ in basis]
        ok = True
        for v in X.quiver.vertices:
            d = X.dim(v)
            if not d:
                continue
            m = [[sum((c * f.blocks[v][r][k] for c, f in zip(coefs, basis)), Fraction(0))
                  for k in range(d)] for r in range(d)]
            if linalg.rank(m, d) < d:
                ok = False
                break
        if ok:
            return True
    return False


# -- submodules, socles and tops ------------------------------------------------------------


def submodule(X: LambdaModule, spaces: dict[int, list]) -> LambdaModule:
    """Submodule spanned by per-vertex bases (must be arrow-stable)."""
    q = X.quiver
    maps = {}
    for a in q.arrows:
        src, tgt = spaces[a.source], spaces[a.target]
        m = _zero(len(tgt), len(src))
        for c, v in enumerate(src):
            img = _apply(X.maps[a.index], v)
            coords = linalg.express(tgt, img)
            for r, x in enumerate(coords):
                m[r][c] = x
        maps[a.index] = m
    return LambdaModule(q, [len(spaces[v]) for v in q.vertices], maps)


def _extend_socle(X: LambdaModule, spaces: dict[int, list], j: int) -> list:
    """Vectors v in X_j whose images under all arrows out of j lie in ``spaces``."""
    q = X.quiver
    dj = X.dim(j)
    outs = q.out_of[j]
    n = dj + sum(len(spaces[a.target]) for a in outs)
    rows = []
    col = dj
    for a in outs:
        B = spaces[a.target]
        Xa = X.maps[a.index]
        for r in range(X.dim(a.target)):
            row = [Fraction(0)] * n
            for c in range(dj):
                row[c] = Xa[r][c]
            for k, b in enumerate(B):
                row[col + k] = -b[r]
            rows.append(row)
        col += len(B)
    vecs = [v[:dj] for v in linalg.nullspace(rows, n)]
    red, _ = linalg.rref(list(spaces[j]) + vecs, dj)
    return red


def soc_chain(X: LambdaModule, seq) -> tuple[LambdaModule, dict[int, list]]:
    """soc_{(j_1,...,j_t)}(X) and its per-vertex subspaces of X."""
    spaces = {v: [] for v in X.quiver.vertices}
    for j in seq:
        spaces[j] = _extend_socle(X, spaces, j)
    return submodule(X, spaces), spaces


def socle(X: LambdaModule, j: int) -> LambdaModule:
    return soc_chain(X, (j,))[0]


def top_dim(X: LambdaModule, j: int) -> int:
    """dim tp_j X = dim X_j minus the rank of the incoming arrows."""
    cols = []
    for a in X.quiver.into[j]:
        m = X.maps[a.index]
        for c in range(X.dim(a.source)):
            cols.append([m[r][c] for r in range(X.dim(j))])
    return X.dim(j) - (linalg.rank(cols, X.dim(j)) if X.dim(j) else 0)
