"""Cayley graphs Cay(D_2n, S), BFS distances, structural predicates, export."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from .dihedral import ConnectionSet, DihedralElement, elements, inverse, multiply

UNREACHABLE = -1
MAX_CAYLEY_VERTICES = 4096


class GraphError(ValueError):
    pass


class DistanceMatrix:
    """All-pairs hop counts; ``UNREACHABLE`` marks pairs in different components."""

    def __init__(self, dist: np.ndarray):
        dist = np.array(dist, dtype=np.int32)
        dist.setflags(write=False)
        self.dist = dist
        self.rows: tuple[tuple[int, ...], ...] = tuple(tuple(int(x) for x in r) for r in dist)

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Sequence[int]]) -> DistanceMatrix:
        N = len(adjacency)
        dist = np.full((N, N), UNREACHABLE, dtype=np.int32)
        for src in range(N):
            row = dist[src]
            row[src] = 0
            queue = deque([src])
            while queue:
                u = queue.popleft()
                du = row[u] + 1
                for v in adjacency[u]:
                    if row[v] == UNREACHABLE:
                        row[v] = du
                        queue.append(v)
        return cls(dist)

    def __getitem__(self, uv):
        u, v = uv
        return self.rows[u][v]

    def __len__(self):
        return len(self.rows)

    @property
    def connected(self) -> bool:
        return bool((self.dist != UNREACHABLE).all())

    def eccentricity(self, v: int) -> int:
        return max(self.rows[v])

    @property
    def diameter(self) -> int:
        return int(self.dist.max()) if len(self.rows) else 0


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices 0..N-1 with sorted neighbor lists."""

    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        adj = tuple(tuple(sorted(set(nb))) for nb in self.adjacency)
        object.__setattr__(self, "adjacency", adj)
        N = len(adj)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(N)))
        elif len(self.labels) != N:
            raise GraphError("one label per vertex required")
        for u, nb in enumerate(adj):
            for v in nb:
                if not 0 <= v < N:
                    raise GraphError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise GraphError(f"loop at vertex {u}")
                if u not in adj[v]:
                    raise GraphError(f"edge {u}-{v} is not symmetric")

    @classmethod
    def from_edges(cls, num_vertices: int, edges, labels: Sequence[str] = ()) -> Graph:
        adj = [set() for _ in range(num_vertices)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        return cls(tuple(tuple(a) for a in adj), tuple(labels))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.adjacency == other.adjacency

    def __hash__(self):
        return hash(self.adjacency)

    @property
    def num_vertices(self) -> int:
        return len(self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self.neighbor_masks[u] >> v) & 1 == 1

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in nb) for nb in self.adjacency)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v]

    @cached_property
    def distances(self) -> DistanceMatrix:
        return all_pairs_distances(self)


@dataclass(frozen=True, eq=False)
class CayleyGraph(Graph):
    n: int = 0
    connection_set: Optional[ConnectionSet] = None

    @property
    def vertices(self) -> tuple[DihedralElement, ...]:
        return elements(self.n)


def build_cayley(n: int, S: ConnectionSet) -> CayleyGraph:
    """Cay(D_2n, S): u ~ v iff u v^-1 in S, i.e. the neighbors of v are s*v."""
    if not isinstance(S, ConnectionSet):
        raise GraphError("connection set must be a ConnectionSet")
    if S.modulus != n:
        raise GraphError(f"connection set is over D_{2 * S.modulus}, not D_{2 * n}")
    if 2 * n > MAX_CAYLEY_VERTICES:
        raise GraphError(f"2n={2 * n} exceeds the dense-graph cap {MAX_CAYLEY_VERTICES}")
    verts = elements(n)
    adj = tuple(tuple(sorted(multiply(s, v).index for s in S)) for v in verts)
    return CayleyGraph(adj, tuple(v.token for v in verts), n=n, connection_set=S)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix.from_adjacency(g.adjacency)


def is_adjacent_by_rule(u: DihedralElement, v: DihedralElement, S: ConnectionSet) -> bool:
    return multiply(u, inverse(v)) in S


def is_connected(g: Graph) -> bool:
    return g.num_vertices == 0 or g.distances.connected


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.num_vertices
    for start in range(g.num_vertices):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def is_regular(g: Graph) -> Optional[int]:
    """Common degree of all vertices, or None."""
    degrees = {len(nb) for nb in g.adjacency}
    if len(degrees) == 1:
        return degrees.pop()
    return None


def is_path(g: Graph) -> bool:
    N = g.num_vertices
    if N < 2 or not is_connected(g):
        return False
    degrees = sorted(g.degree(v) for v in range(N))
    return len(g.edges()) == N - 1 and degrees[:2] == [1, 1] and all(d <= 2 for d in degrees)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f'  {v} [label="{g.labels[v]}"];' for v in range(g.num_vertices)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: CayleyGraph) -> str:
    return json.dumps(
        {
            "n": g.n,
            "set": str(g.connection_set),
            "vertices": list(g.labels),
            "edges": [list(e) for e in g.edges()],
        }
    )


def export(g: Graph, format: str = "json") -> str:
    if format == "dot":
        return to_dot(g)
    if format == "json":
        if not isinstance(g, CayleyGraph):
            raise GraphError("JSON export needs a Cayley graph")
        return to_json(g)
    raise GraphError(f"unknown export format {format!r}")


def from_json(text: str) -> CayleyGraph:
    """Rebuild a Cayley graph from :func:`to_json` output, checking its edges."""
    data = json.loads(text)
    n = int(data["n"])
    g = build_cayley(n, ConnectionSet.parse(data["set"], n))
    if list(g.labels) != list(data["vertices"]):
        raise GraphError("vertex list does not match canonical order")
    if sorted(tuple(e) for e in data["edges"]) != g.edges():
        raise GraphError("edge list does not match the connection set")
    return g
