"""Recognize cycles, prisms P2 x Cn and Moebius ladders among small graphs."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .cayley import Graph, GraphError, is_bipartite, is_connected, is_regular

MAX_ISO_VERTICES = 64

CYCLE = "cycle"
PRISM = "prism"
MOBIUS = "mobius"
CUBIC_BIPARTITE = "cubic_bipartite"
OTHER = "other"


def canonical_cycle(m: int) -> Graph:
    if m < 3:
        raise GraphError(f"cycle needs m >= 3, got {m}")
    return Graph.from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def canonical_prism(n: int) -> Graph:
    """Outer cycle 0..n-1, inner cycle n..2n-1, rungs i -- n+i."""
    if n < 3:
        raise GraphError(f"prism needs n >= 3, got {n}")
    edges = []
    for i in range(n):
        j = (i + 1) % n
        edges += [(i, j), (n + i, n + j), (i, n + i)]
    return Graph.from_edges(2 * n, edges)


def canonical_mobius(m: int) -> Graph:
    """m-cycle plus chords i -- i + m/2."""
    if m < 4 or m % 2:
        raise GraphError(f"Moebius ladder needs even m >= 4, got {m}")
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(i, i + m // 2) for i in range(m // 2)]
    return Graph.from_edges(m, edges)


def hypercube_q3() -> Graph:
    return Graph.from_edges(8, [(v, v ^ (1 << b)) for v in range(8) for b in range(3)])


def complete_graph(m: int) -> Graph:
    return Graph.from_edges(m, [(i, j) for i in range(m) for j in range(i + 1, m)])


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def _profile(g: Graph, v: int):
    row = g.distances.rows[v]
    return (g.degree(v), tuple(sorted(row)))


def is_isomorphism(g: Graph, h: Graph, mapping) -> bool:
    """Exhaustive check that ``mapping`` is an adjacency-preserving bijection."""
    N = g.num_vertices
    if h.num_vertices != N or sorted(mapping) != list(range(N)):
        return False
    return all(
        g.has_edge(u, v) == h.has_edge(mapping[u], mapping[v])
        for u in range(N)
        for v in range(N)
    )


def isomorphic(g: Graph, h: Graph) -> Optional[tuple[int, ...]]:
    """First isomorphism g -> h in lexicographic backtracking order, or None.

    Vertex x of g may map to y of h only if their degrees and sorted distance
    rows agree, and every already-mapped pair keeps its distance.
    """
    N = g.num_vertices
    if N > MAX_ISO_VERTICES or h.num_vertices > MAX_ISO_VERTICES:
        raise GraphError(f"isomorphism search is capped at {MAX_ISO_VERTICES} vertices")
    if h.num_vertices != N or len(g.edges()) != len(h.edges()):
        return None
    gp = [_profile(g, v) for v in range(N)]
    hp = [_profile(h, v) for v in range(N)]
    if Counter(gp) != Counter(hp):
        return None
    candidates = [[y for y in range(N) if hp[y] == gp[x]] for x in range(N)]
    gd, hd = g.distances.rows, h.distances.rows
    mapping = [-1] * N
    used = [False] * N

    def extend(x):
        if x == N:
            return True
        for y in candidates[x]:
            if used[y]:
                continue
            if all(gd[x][x2] == hd[y][mapping[x2]] for x2 in range(x)):
                mapping[x] = y
                used[y] = True
                if extend(x + 1):
                    return True
                used[y] = False
        mapping[x] = -1
        return False

    if extend(0):
        return tuple(mapping)
    return None


@dataclass(frozen=True)
class StructureVerdict:
    kind: str
    size: Optional[int] = None
    mapping: Optional[tuple[int, ...]] = None

    def to_dict(self) -> dict:
        return {"kind": self.kind, "size": self.size}

    def __str__(self):
        return self.kind if self.size is None else f"{self.kind}({self.size})"


def recognize(g: Graph) -> StructureVerdict:
    """Fixed check order: cycle, prism, Moebius ladder, cubic bipartite, other.

    ``size`` is the cycle length, the prism's n, or the ladder's vertex count.
    """
    if not is_connected(g):
        raise GraphError("recognition requires a connected graph")
    N = g.num_vertices
    deg = is_regular(g)
    if deg == 2 and N >= 3:
        return StructureVerdict(CYCLE, N, isomorphic(g, canonical_cycle(N)))
    if deg != 3:
        return StructureVerdict(OTHER)
    if N % 2 == 0 and N // 2 >= 3:
        m = isomorphic(g, canonical_prism(N // 2))
        if m is not None:
            return StructureVerdict(PRISM, N // 2, m)
    if N % 2 == 0 and N >= 4:
        m = isomorphic(g, canonical_mobius(N))
        if m is not None:
            return StructureVerdict(MOBIUS, N, m)
    if is_bipartite(g):
        return StructureVerdict(CUBIC_BIPARTITE)
    return StructureVerdict(OTHER)


def template_for(verdict: StructureVerdict) -> Optional[Graph]:
    if verdict.kind == CYCLE:
        return canonical_cycle(verdict.size)
    if verdict.kind == PRISM:
        return canonical_prism(verdict.size)
    if verdict.kind == MOBIUS:
        return canonical_mobius(verdict.size)
    return None
