"""Exhaustive cross-check of the classifier against the exact solver."""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterator, Optional

from .cayley import build_cayley, is_bipartite, is_regular
from .classifier import CUBIC_BIPARTITE_3REFL, classify_dim2
from .dihedral import ConnectionSet, check_modulus, is_generating, reflection, rotation
from .metric import SearchCapExceeded, SearchConfig, dim2_basis_properties, metric_dimension_exact
from .structure import CUBIC_BIPARTITE, MOBIUS, PRISM, recognize


def inverse_orbits(n: int) -> list[tuple]:
    """Atoms of inverse-closed sets: involutions alone, rotations with their inverse."""
    atoms = []
    for k in range(1, n):
        if 2 * k < n:
            atoms.append((rotation(k, n), rotation(-k, n)))
        elif 2 * k == n:
            atoms.append((rotation(k, n),))
    atoms += [(reflection(k, n),) for k in range(n)]
    return atoms


def enumerate_connection_sets(
    n: int, max_size: int, generating_only: bool = False
) -> Iterator[tuple[ConnectionSet, bool]]:
    """Yield ``(S, generates)`` for every inverse-closed, identity-free S with
    2 <= |S| <= max_size, ordered by size and then by member indices."""
    check_modulus(n)
    if max_size < 2:
        raise ValueError("max_size must be at least 2")
    atoms = inverse_orbits(n)
    found = []
    for r in range(1, len(atoms) + 1):
        if r > max_size:
            break
        for combo in itertools.combinations(atoms, r):
            members = [x for atom in combo for x in atom]
            if 2 <= len(members) <= max_size:
                found.append(ConnectionSet.of(members, n))
    found.sort(key=lambda S: (len(S), [s.index for s in S]))
    for S in found:
        gen = is_generating(S)
        if gen or not generating_only:
            yield S, gen


@dataclass
class InstanceRecord:
    n: int
    set: str
    generating: bool
    case_label: Optional[str] = None
    dim2: Optional[bool] = None
    predicted: Optional[dict] = None
    solver_dimension: Optional[int] = None
    solver_basis: Optional[list] = None
    structure: Optional[dict] = None
    basis_properties_ok: Optional[bool] = None
    agree: Optional[bool] = None
    problems: list = field(default_factory=list)
    skipped: Optional[str] = None
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def _structure_consistent(cls, verdict, g) -> bool:
    expected = cls.predicted_structure
    if expected is None:
        return True
    if cls.case_label == CUBIC_BIPARTITE_3REFL:
        # a more specific template verdict may take precedence
        return is_regular(g) == 3 and is_bipartite(g) and verdict.kind in (CUBIC_BIPARTITE, PRISM, MOBIUS)
    return verdict.kind == expected


def check_instance(n: int, set_text: str, config: SearchConfig) -> InstanceRecord:
    """Classifier, predictor, recognizer and solver on one generating set."""
    start = time.perf_counter()
    S = ConnectionSet.parse(set_text, n)
    rec = InstanceRecord(n, str(S), True)
    cls = classify_dim2(n, S)
    rec.case_label = cls.case_label
    rec.dim2 = cls.dim2
    rec.predicted = cls.predicted.to_dict()
    g = build_cayley(n, S)
    verdict = recognize(g)
    rec.structure = verdict.to_dict()
    try:
        res = metric_dimension_exact(g, replace(config, parallelism=1))
    except SearchCapExceeded as exc:
        rec.skipped = str(exc)
        rec.elapsed = time.perf_counter() - start
        return rec
    rec.solver_dimension = res.dimension
    rec.solver_basis = [g.labels[v] for v in res.basis]
    if cls.dim2 != (res.dimension == 2):
        rec.problems.append(f"dim2 verdict {cls.dim2} but solver found {res.dimension}")
    if not cls.predicted.contains(res.dimension):
        rec.problems.append(f"prediction {cls.predicted} excludes {res.dimension}")
    if not _structure_consistent(cls, verdict, g):
        rec.problems.append(f"case {cls.case_label} expects {cls.predicted_structure}, recognized {verdict}")
    if res.dimension == 2:
        report = dim2_basis_properties(g, res.basis)
        rec.basis_properties_ok = report.ok
        rec.problems += report.violations()
    rec.agree = not rec.problems
    rec.elapsed = time.perf_counter() - start
    return rec


def _check_task(args):
    return check_instance(*args)


@dataclass
class VerificationReport:
    n_lo: int
    n_hi: int
    max_size: int
    records: list[InstanceRecord]
    non_generating: int = 0

    @property
    def disagreements(self) -> list[InstanceRecord]:
        return [r for r in self.records if r.agree is False]

    @property
    def skipped(self) -> list[InstanceRecord]:
        return [r for r in self.records if r.skipped]

    def summary(self) -> dict:
        per_case: dict[str, int] = {}
        for r in self.records:
            per_case[r.case_label] = per_case.get(r.case_label, 0) + 1
        return {
            "instances": len(self.records),
            "agreements": sum(1 for r in self.records if r.agree),
            "disagreements": [f"n={r.n} S={r.set}: {'; '.join(r.problems)}" for r in self.disagreements],
            "skipped": [f"n={r.n} S={r.set}: {r.skipped}" for r in self.skipped],
            "non_generating": self.non_generating,
            "per_case": dict(sorted(per_case.items())),
        }

    def to_dict(self, timing: bool = True) -> dict:
        records = [r.to_dict() for r in self.records]
        if not timing:
            for r in records:
                r.pop("elapsed")
        return {
            "meta": {"n_lo": self.n_lo, "n_hi": self.n_hi, "max_size": self.max_size},
            "records": records,
            "summary": self.summary(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> VerificationReport:
        meta = data["meta"]
        return cls(
            meta["n_lo"],
            meta["n_hi"],
            meta["max_size"],
            [InstanceRecord(**r) for r in data["records"]],
            data["summary"].get("non_generating", 0),
        )


def verify_range(
    n_lo: int, n_hi: int, max_size: int, config: Optional[SearchConfig] = None
) -> VerificationReport:
    config = config or SearchConfig()
    tasks = []
    non_generating = 0
    for n in range(n_lo, n_hi + 1):
        for S, gen in enumerate_connection_sets(n, max_size):
            if gen:
                tasks.append((n, str(S), config))
            else:
                non_generating += 1
    records = []
    for n, text, _ in tasks:
        if 2 * n > config.max_vertices:
            records.append(InstanceRecord(n, text, True, skipped=f"2n={2 * n} exceeds max_vertices={config.max_vertices}"))
        else:
            records.append(None)
    todo = [t for t, r in zip(tasks, records) if r is None]
    if config.parallelism > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            done = list(pool.map(_check_task, todo, chunksize=4))
    else:
        done = [check_instance(*t) for t in todo]
    it = iter(done)
    records = [r if r is not None else next(it) for r in records]
    return VerificationReport(n_lo, n_hi, max_size, records, non_generating)
