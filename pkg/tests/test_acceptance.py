"""Acceptance gate: every criterion at its stated bound, exact matches only.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints one
PASS/FAIL line per criterion.
"""

import itertools
import math
import random
import time

import pytest
from conftest import cay

from cayleydim.cayley import build_cayley, is_bipartite, is_regular
from cayleydim.dihedral import (
    ConnectionSet,
    elements,
    identity,
    inverse,
    is_generating,
    is_generating_fast,
    reflection,
    rotation,
)
from cayleydim.metric import SearchConfig, dim2_basis_properties, is_resolving, metric_dimension_exact
from cayleydim.structure import canonical_mobius, canonical_prism, hypercube_q3, is_isomorphism, recognize, template_for
from cayleydim.verify import enumerate_connection_sets, verify_range

# The default subset cap (k <= 6) cannot certify the 41 twin-heavy |S| = 4
# sets at n = 7, 8 whose lower bound is 7 or 8; lift it so nothing is skipped.
FULL = SearchConfig(max_vertices=40, max_k=15, parallelism=1)


def exact_dim(g):
    return metric_dimension_exact(g, SearchConfig(max_k=g.num_vertices - 1, parallelism=1)).dimension


@pytest.fixture(scope="module")
def main_run():
    start = time.perf_counter()
    report = verify_range(2, 8, 4, FULL)
    return report, time.perf_counter() - start


@pytest.mark.criterion(1, "dim2 verdict == (solver == 2) for all generating |S| <= 4, n in [2, 8]")
def test_main_theorem_exhaustive(main_run):
    report, elapsed = main_run
    expected = sum(1 for n in range(2, 9) for _ in enumerate_connection_sets(n, 4, generating_only=True))
    assert len(report.records) == expected
    assert report.skipped == []
    for r in report.records:
        assert r.dim2 == (r.solver_dimension == 2), f"n={r.n} S={r.set}"
    assert report.disagreements == []
    assert elapsed < 120


@pytest.mark.criterion(2, "prism P2 x Cn: 2 for n odd, 3 for n even")
@pytest.mark.parametrize("n, expected", [(3, 2), (5, 2), (7, 2), (9, 2), (4, 3), (6, 3), (8, 3)])
def test_prism_values(n, expected):
    S = ConnectionSet.of([rotation(1, n), rotation(n - 1, n), reflection(0, n)], n)
    assert exact_dim(build_cayley(n, S)) == expected
    assert exact_dim(canonical_prism(n)) == expected


@pytest.mark.criterion(3, "Moebius ladder M_m in {3, 4}; exactly 3 when m = 2 mod 8")
@pytest.mark.parametrize("m", [8, 10, 12, 14, 16, 18])
def test_mobius_values(m):
    d = exact_dim(canonical_mobius(m))
    assert d in (3, 4)
    n = m // 2
    if n % 2 == 0:
        S = ConnectionSet.of([rotation(n // 2, n), reflection(1, n), reflection(2, n)], n)
        if is_generating(S):
            assert exact_dim(build_cayley(n, S)) == d


@pytest.mark.criterion(3, "Moebius ladder M_m in {3, 4}; exactly 3 when m = 2 mod 8")
@pytest.mark.parametrize("m", [10, 18])
def test_mobius_two_mod_eight(m):
    assert exact_dim(canonical_mobius(m)) == 3


@pytest.mark.criterion(4, "three reflections give dim >= 3; Q3 has dim exactly 3")
def test_cubic_bipartite_bound():
    count = 0
    for n in range(3, 9):
        for S, _ in enumerate_connection_sets(n, 3, generating_only=True):
            if len(S.reflections) == 3:
                g = build_cayley(n, S)
                assert is_regular(g) == 3 and is_bipartite(g)
                assert exact_dim(g) >= 3, str(S)
                count += 1
    assert count > 0
    assert exact_dim(hypercube_q3()) == 3


@pytest.mark.criterion(5, "|S| = 4 generating sets give dim >= 3, n in [2, 6]")
def test_big_sets():
    count = 0
    for n in range(2, 7):
        for S, _ in enumerate_connection_sets(n, 4, generating_only=True):
            if len(S) == 4:
                assert exact_dim(build_cayley(n, S)) >= 3, str(S)
                count += 1
    assert count > 0


@pytest.mark.criterion(6, "every solver basis of size 2 has a unique geodesic and low degrees")
def test_basis_structure(main_run):
    report, _ = main_run
    dim2 = [r for r in report.records if r.solver_dimension == 2]
    assert dim2
    for r in dim2:
        g = cay(r.n, r.set)
        basis = [g.labels.index(t) for t in r.solver_basis]
        rep = dim2_basis_properties(g, basis)
        assert rep.ok, (r.n, r.set, rep.violations())


@pytest.mark.criterion(7, "gcd generating-set formulas == closure oracle, n in [2, 12]")
def test_generating_formulas():
    checked = 0
    for n in range(2, 13):
        for i, j in itertools.combinations(range(n), 2):
            pair = [reflection(i, n), reflection(j, n)]
            shapes = [ConnectionSet.of(pair, n)]
            if n % 2 == 0:
                shapes.append(ConnectionSet.of(pair + [rotation(n // 2, n)], n))
            for S in shapes:
                assert is_generating_fast(S) == is_generating(S), (n, str(S))
                checked += 1
            assert is_generating_fast(shapes[0]) == (math.gcd(n, i - j) == 1)
    assert checked == sum(math.comb(n, 2) * (2 if n % 2 == 0 else 1) for n in range(2, 13))


@pytest.mark.criterion(8, "property suites: group axioms, distance axioms, monotonicity, witnesses, determinism")
class TestPropertySuites:
    @pytest.mark.parametrize("n", range(2, 13))
    def test_group_axioms(self, n):
        G = elements(n)
        e = identity(n)
        for x in G:
            assert x * e == x == e * x
            assert x * inverse(x) == e == inverse(x) * x
        for x, y, z in itertools.product(G, repeat=3):
            assert (x * y) * z == x * (y * z)

    def test_distance_axioms(self, main_run):
        report, _ = main_run
        for r in report.records:
            g = cay(r.n, r.set)
            rows = g.distances.rows
            N = g.num_vertices
            for u in range(N):
                assert rows[u][u] == 0
                for v in range(N):
                    assert rows[u][v] == rows[v][u]
                    assert (rows[u][v] == 1) == g.has_edge(u, v)
                    assert all(rows[u][w] <= rows[u][v] + rows[v][w] for w in range(N))

    def test_resolving_monotonicity(self):
        rng = random.Random(20261018)
        pool = [(n, str(S)) for n in range(2, 9) for S, _ in enumerate_connection_sets(n, 4, generating_only=True)]
        for _ in range(200):
            g = cay(*rng.choice(pool))
            N = g.num_vertices
            order = rng.sample(range(N), N)
            W = order[: rng.randint(1, 3)]
            while not is_resolving(g, W).resolves:
                W.append(order[len(W)])
            extra = [v for v in range(N) if v not in W]
            sup = W + rng.sample(extra, rng.randint(0, len(extra)))
            assert is_resolving(g, sup).resolves

    def test_monotonicity_from_bases(self, main_run):
        report, _ = main_run
        rng = random.Random(7)
        for r in rng.sample(report.records, 200):
            g = cay(r.n, r.set)
            basis = [g.labels.index(t) for t in r.solver_basis]
            extra = [v for v in range(g.num_vertices) if v not in basis]
            assert is_resolving(g, basis + rng.sample(extra, rng.randint(0, len(extra)))).resolves

    def test_isomorphism_witnesses(self, main_run):
        report, _ = main_run
        hits = 0
        for r in report.records:
            g = cay(r.n, r.set)
            v = recognize(g)
            if v.mapping is not None:
                assert is_isomorphism(g, template_for(v), v.mapping)
                hits += 1
        assert hits > 0

    def test_verify_determinism(self):
        runs = []
        for jobs in (1, 2, 8):
            cfg = SearchConfig(max_vertices=40, max_k=15, parallelism=jobs)
            runs.append(verify_range(2, 6, 4, cfg).to_dict(timing=False))
        assert runs[0] == runs[1] == runs[2]
