"""Exact metric dimension by pruned subset search.

A set W resolves a graph when the distance vectors ``r(v|W)`` are pairwise
distinct.  The search walks k-subsets in lexicographic order for
k = lb, lb+1, ... and returns the first resolving one, so the reported basis
is the lexicographically smallest minimum resolving set.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .cayley import Graph, is_bipartite, is_connected, is_path, is_regular

JOBS_ENV = "CAYLEYDIM_JOBS"


class SearchError(ValueError):
    """Input the solver refuses: disconnected, too small, or over a cap."""


class SearchCapExceeded(SearchError):
    pass


def default_parallelism() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class SearchConfig:
    max_vertices: int = 40
    max_k: int = 6
    parallelism: int = field(default_factory=default_parallelism)


@dataclass(frozen=True)
class ResolvingCertificate:
    witness_set: tuple[int, ...]
    table: dict[int, tuple[int, ...]]
    resolves: bool
    failing_pair: Optional[tuple[int, int]] = None

    @property
    def verdict(self) -> str:
        if self.resolves:
            return "resolves"
        return f"fails{self.failing_pair}"


@dataclass(frozen=True)
class SearchStats:
    examined: int = 0
    pruned: int = 0


@dataclass(frozen=True)
class DimensionResult:
    dimension: int
    basis: tuple[int, ...]
    lower_bound: int
    stats: SearchStats


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise SearchError("graph is disconnected; metric dimension is undefined")


def representation(g: Graph, v: int, W: Sequence[int]) -> tuple[int, ...]:
    rows = g.distances.rows
    return tuple(rows[w][v] for w in W)


def is_resolving(g: Graph, W: Sequence[int]) -> ResolvingCertificate:
    _require_connected(g)
    W = tuple(W)
    if not W:
        raise SearchError("witness set must be non-empty")
    N = g.num_vertices
    if any(not 0 <= w < N for w in W):
        raise SearchError(f"witness set {W} contains vertices outside 0..{N - 1}")
    table = {v: representation(g, v, W) for v in range(N)}
    first_seen: dict[tuple[int, ...], int] = {}
    failing = None
    for v in range(N):
        u = first_seen.setdefault(table[v], v)
        if u != v and (failing is None or (u, v) < failing):
            failing = (u, v)
    return ResolvingCertificate(W, table, failing is None, failing)


def twin_classes(g: Graph) -> list[tuple[int, ...]]:
    """Classes of size >= 2 of vertices whose distance rows agree off each other."""
    rows = g.distances.rows
    N = g.num_vertices
    cls = list(range(N))
    for u in range(N):
        if cls[u] != u:
            continue
        ru = rows[u]
        for v in range(u + 1, N):
            if cls[v] != v:
                continue
            rv = rows[v]
            if all(ru[x] == rv[x] for x in range(N) if x != u and x != v):
                cls[v] = u
    groups: dict[int, list[int]] = {}
    for v, root in enumerate(cls):
        groups.setdefault(root, []).append(v)
    return [tuple(m) for m in groups.values() if len(m) > 1]


def lower_bound(g: Graph, classes: Optional[list[tuple[int, ...]]] = None) -> int:
    if classes is None:
        classes = twin_classes(g)
    lb = max(1, sum(len(c) - 1 for c in classes))
    if is_regular(g) == 3 and is_bipartite(g):
        lb = max(lb, 3)
    return lb


def _search_level(rows, k, base, twin_of, n_classes, first_choices=None):
    """Lexicographically first resolving k-subset, or None.

    Prunes branches that would leave two members of one twin class outside W,
    and branches where the largest block of still-identical codes cannot be
    split by the remaining witnesses (each splits a block into <= base parts).
    """
    N = len(rows)
    examined = 0
    pruned = 0
    excluded = [0] * n_classes
    chosen: list[int] = []

    def exclude(v):
        c = twin_of[v]
        if c < 0:
            return True
        excluded[c] += 1
        return excluded[c] <= 1

    def unexclude(v):
        c = twin_of[v]
        if c >= 0:
            excluded[c] -= 1

    def dfs(start, codes, depth):
        nonlocal examined, pruned
        if depth == k:
            tail = Counter(twin_of[v] for v in range(start, N) if twin_of[v] >= 0)
            if any(excluded[c] + t > 1 for c, t in tail.items()):
                pruned += 1
                return None
            examined += 1
            return tuple(chosen) if len(set(codes)) == N else None
        r = k - depth
        if depth and max(Counter(codes).values()) > base**r:
            pruned += 1
            return None
        skipped = []
        found = None
        for w in range(start, N - r + 1):
            if w > start:
                skipped.append(w - 1)
                if not exclude(w - 1):
                    pruned += 1
                    break
            if depth == 0 and first_choices is not None and w not in first_choices:
                continue
            row = rows[w]
            chosen.append(w)
            found = dfs(w + 1, [c * base + d for c, d in zip(codes, row)], depth + 1)
            chosen.pop()
            if found is not None:
                break
        for v in skipped:
            unexclude(v)
        return found

    found = dfs(0, [0] * N, 0)
    return found, examined, pruned


def _level_worker(args):
    rows, k, base, twin_of, n_classes, first_choices = args
    return _search_level(rows, k, base, twin_of, n_classes, set(first_choices))


def metric_dimension_exact(g: Graph, config: Optional[SearchConfig] = None) -> DimensionResult:
    config = config or SearchConfig()
    N = g.num_vertices
    if N < 3:
        raise SearchError("solver requires at least 3 vertices")
    if N > config.max_vertices:
        raise SearchCapExceeded(f"graph has {N} vertices, cap is {config.max_vertices}")
    _require_connected(g)

    classes = twin_classes(g)
    lb = lower_bound(g, classes)
    if lb == 1:
        if is_path(g):
            end = min(v for v in range(N) if g.degree(v) == 1)
            return DimensionResult(1, (end,), 1, SearchStats(1, 0))
        lb = 2
    if lb > config.max_k:
        raise SearchCapExceeded(f"lower bound {lb} exceeds max_k={config.max_k}")

    rows = g.distances.rows
    base = g.distances.diameter + 1
    twin_of = [-1] * N
    for i, c in enumerate(classes):
        for v in c:
            twin_of[v] = i

    examined = pruned = 0
    jobs = max(1, config.parallelism)
    for k in range(lb, min(config.max_k, N - 1) + 1):
        if jobs == 1:
            found, e, p = _search_level(rows, k, base, twin_of, len(classes))
            examined += e
            pruned += p
        else:
            chunks = [tuple(range(i, N, jobs)) for i in range(jobs)]
            tasks = [(rows, k, base, twin_of, len(classes), c) for c in chunks if c]
            with ProcessPoolExecutor(max_workers=len(tasks)) as pool:
                results = list(pool.map(_level_worker, tasks))
            hits = [f for f, _, _ in results if f is not None]
            found = min(hits) if hits else None
            examined += sum(r[1] for r in results)
            pruned += sum(r[2] for r in results)
        if found is not None:
            return DimensionResult(k, found, lb, SearchStats(examined, pruned))
    raise SearchCapExceeded(f"no resolving set with at most {config.max_k} vertices")


def metric_dimension_naive(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Unpruned reference: every subset by size, straight from the definition."""
    _require_connected(g)
    rows = g.distances.rows
    N = g.num_vertices
    for k in range(1, N + 1):
        for W in itertools.combinations(range(N), k):
            reps = {tuple(rows[w][v] for w in W) for v in range(N)}
            if len(reps) == N:
                return k, W
    raise AssertionError("the full vertex set always resolves")


@dataclass(frozen=True)
class BasisReport:
    u: int
    v: int
    path_count: int
    path: Optional[tuple[int, ...]]
    degree_u: int
    degree_v: int
    internal_degrees: tuple[int, ...]

    @property
    def unique_path(self) -> bool:
        return self.path_count == 1

    @property
    def endpoint_degrees_ok(self) -> bool:
        return self.degree_u <= 3 and self.degree_v <= 3

    @property
    def internal_degrees_ok(self) -> bool:
        return all(d <= 5 for d in self.internal_degrees)

    @property
    def ok(self) -> bool:
        return self.unique_path and self.endpoint_degrees_ok and self.internal_degrees_ok

    def violations(self) -> list[str]:
        out = []
        if not self.unique_path:
            out.append(f"{self.path_count} shortest paths between {self.u} and {self.v}")
        if not self.endpoint_degrees_ok:
            out.append(f"endpoint degrees {self.degree_u}, {self.degree_v} exceed 3")
        if not self.internal_degrees_ok:
            out.append(f"internal degrees {self.internal_degrees} exceed 5")
        return out


def count_shortest_paths(g: Graph, u: int, v: int) -> int:
    rows = g.distances.rows
    du = rows[u]
    d = du[v]
    layers: list[list[int]] = [[] for _ in range(d + 1)]
    for x in range(g.num_vertices):
        if du[x] >= 0 and du[x] + rows[x][v] == d:
            layers[du[x]].append(x)
    count = {u: 1}
    for layer in layers[1:]:
        for x in layer:
            count[x] = sum(count.get(y, 0) for y in g.adjacency[x] if du[y] == du[x] - 1)
    return count[v]


def check_basis_properties(g: Graph, u: int, v: int) -> BasisReport:
    """Necessary conditions on a two-vertex basis {u, v}, computed without
    assuming the pair resolves."""
    _require_connected(g)
    rows = g.distances.rows
    paths = count_shortest_paths(g, u, v)
    path = None
    internal: tuple[int, ...] = ()
    if paths == 1:
        # walk the unique geodesic back from v
        walk = [v]
        while walk[-1] != u:
            x = walk[-1]
            walk.append(next(y for y in g.adjacency[x] if rows[u][y] == rows[u][x] - 1))
        path = tuple(reversed(walk))
        internal = tuple(g.degree(x) for x in path[1:-1])
    return BasisReport(u, v, paths, path, g.degree(u), g.degree(v), internal)


def dim2_basis_properties(g: Graph, basis: Sequence[int]) -> BasisReport:
    if len(basis) != 2:
        raise SearchError("a two-vertex basis is required")
    u, v = basis
    if not is_resolving(g, (u, v)).resolves:
        raise SearchError(f"{{{u}, {v}}} does not resolve the graph")
    return check_basis_properties(g, u, v)
