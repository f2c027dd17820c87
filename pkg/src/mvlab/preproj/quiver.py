"""Doubled Dynkin quivers."""
from __future__ import annotations

from dataclasses import dataclass

from ..rootsys import RootSystem


@dataclass(frozen=True)
class Arrow:
    index: int
    source: int
    target: int
    eps: int

    @property
    def star(self) -> int:
        return self.index ^ 1

    @property
    def key(self) -> str:
        return f"{self.source}->{self.target}"


def default_orientation(rs: RootSystem) -> tuple[tuple[int, int], ...]:
    """A_n: i -> i+1; D and E: every edge points toward the branch node."""
    c = rs.cartan
    n = rs.rank
    edges = [(i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if c[i][j]]
    if rs.kind == "A":
        return tuple(edges)
    deg = {v: sum(1 for e in edges if v in e) for v in range(1, n + 1)}
    center = max(deg, key=lambda v: (deg[v], -v))
    # orient along distance to the branch node, far end first
    dist = {center: 0}
    frontier = [center]
    while frontier:
        nxt = []
        for v in frontier:
            for a, b in edges:
                for x, y in ((a, b), (b, a)):
                    if x == v and y not in dist:
                        dist[y] = dist[v] + 1
                        nxt.append(y)
        frontier = nxt
    return tuple((a, b) if dist[a] > dist[b] else (b, a) for a, b in edges)


class DoubledQuiver:
    """Arrow 2k is the k-th arrow of Omega (eps = +1), arrow 2k+1 its star (eps = -1)."""

    def __init__(self, rs: RootSystem, orientation=None):
        if not rs.simply_laced or rs.folding is not None:
            raise ValueError("preprojective algebras are built for simply-laced types only")
        self.rs = rs
        self.n = rs.rank
        orient = tuple(tuple(e) for e in (orientation or default_orientation(rs)))
        c = rs.cartan
        want = {frozenset((i + 1, j + 1)) for i in range(self.n) for j in range(self.n)
                if i != j and c[i][j]}
        if {frozenset(e) for e in orient} != want or len(orient) != len(want):
            raise ValueError("orientation does not match the Dynkin diagram")
        self.orientation = orient
        arrows = []
        for k, (s, t) in enumerate(orient):
            arrows.append(Arrow(2 * k, s, t, 1))
            arrows.append(Arrow(2 * k + 1, t, s, -1))
        self.arrows = tuple(arrows)
        self.by_key = {a.key: a for a in arrows}
        self.out_of = {v: tuple(a for a in arrows if a.source == v) for v in range(1, self.n + 1)}
        self.into = {v: tuple(a for a in arrows if a.target == v) for v in range(1, self.n + 1)}

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def coxeter_number(self) -> int:
        return 2 * self.rs.num_positive_roots // self.n
