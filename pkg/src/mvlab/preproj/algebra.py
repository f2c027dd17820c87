"""The preprojective algebra as a graded path algebra with a normal-form basis.

Degree d is obtained from degree d-1 by appending arrows to basis paths and
dividing by the relations u * rho_v for basis elements u of degree d-2.  That
is enough because the degree-d part of the ideal is (ideal in degree d-1) * H
plus Lambda_{d-2} * rho.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .. import linalg
from ..rootsys import RootSystem
from .quiver import DoubledQuiver

Vec = dict  # basis index -> Fraction


@dataclass(frozen=True)
class BasisPath:
    index: int
    start: int
    end: int
    arrows: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.arrows)


class PreprojAlgebra:
    def __init__(self, quiver: DoubledQuiver):
        self.quiver = quiver
        q = quiver
        self.basis: list[BasisPath] = []
        self._times: dict[tuple[int, int], Vec] = {}  # (basis idx, arrow) -> normal form
        by_degree = [[self._add(v, v, ()) for v in q.vertices]]
        cap = 2 * (q.coxeter_number() - 1)
        d = 0
        while by_degree[-1]:
            d += 1
            if d > cap:
                raise RuntimeError("path degree exceeded 2(h-1); relations are wrong")
            by_degree.append(self._next_degree(by_degree, d))
        self.max_degree = d - 1
        self.by_degree = by_degree[:-1]
        self._check_dimension()

    def _add(self, s: int, t: int, arrows: tuple[int, ...]) -> int:
        b = BasisPath(len(self.basis), s, t, arrows)
        self.basis.append(b)
        return b.index

    def _next_degree(self, by_degree, d: int) -> list[int]:
        q = self.quiver
        cands = [(b, a.index) for b in by_degree[d - 1]
                 for a in q.out_of[self.basis[b].end]]
        col = {c: k for k, c in enumerate(cands)}
        rows = []
        if d >= 2:
            for u in by_degree[d - 2]:
                v = self.basis[u].end
                row = [Fraction(0)] * len(cands)
                for a in q.into[v]:
                    mid = self._times[(u, a.star)]
                    for b, coef in mid.items():
                        row[col[(b, a.index)]] += a.eps * coef
                if any(row):
                    rows.append(row)
        red, pivots = linalg.rref(rows, len(cands))
        pivset = set(pivots)
        new = {}
        for k, (b, a) in enumerate(cands):
            if k not in pivset:
                bp = self.basis[b]
                new[k] = self._add(bp.start, q.arrows[a].target, bp.arrows + (a,))
                self._times[(b, a)] = {new[k]: Fraction(1)}
        for row, p in zip(red, pivots):
            vec = {new[k]: -row[k] for k in new if row[k]}
            self._times[cands[p]] = vec
        return [new[k] for k in sorted(new)]

    def _check_dimension(self) -> None:
        rs = self.quiver.rs
        want = 0
        for i in range(rs.rank):
            g = rs.gammas[rs.fundamental[i]]
            low = rs.act(rs.w0, g)
            want += sum(rs.to_root_coords(tuple(a - b for a, b in zip(g, low))))
        if want != len(self.basis):
            raise RuntimeError(f"dim Lambda = {len(self.basis)}, expected {want}")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def times_arrow(self, vec: Vec, arrow: int) -> Vec:
        """Right multiplication (append an arrow) on a normal-form vector."""
        out: Vec = {}
        for b, coef in vec.items():
            if self.basis[b].end != self.quiver.arrows[arrow].source:
                continue
            nf = self._times.get((b, arrow))
            if nf is None:  # basis path of top degree times an arrow
                continue
            for k, x in nf.items():
                out[k] = out.get(k, 0) + coef * x
        return {k: x for k, x in out.items() if x}

    def path(self, start: int, arrows) -> Vec:
        """Normal form of the path starting at ``start`` along ``arrows``."""
        vec: Vec = {start - 1: Fraction(1)}
        for a in arrows:
            vec = self.times_arrow(vec, a)
        return vec

    def paths_from(self, i: int) -> list[BasisPath]:
        return [b for b in self.basis if b.start == i]

    def paths_to(self, i: int) -> list[BasisPath]:
        return [b for b in self.basis if b.end == i]


_CACHE: dict = {}


def build_preprojective(rs: RootSystem, orientation=None) -> PreprojAlgebra:
    q = DoubledQuiver(rs, orientation)
    key = (rs.name, q.orientation)
    if key not in _CACHE:
        _CACHE[key] = PreprojAlgebra(q)
    return _CACHE[key]
