"""Closed-form test for metric dimension two on Cay(D_2n, S).

Decides from (n, S) alone, without building the graph.  dim = 2 exactly when

* n = 2 and |S| = 2,
* S = {a^i b, a^j b} with gcd(i - j, n) = 1, or
* n is odd and S = {a^i, a^-i, a^j b} with gcd(i, n) = 1.

Every other generating set falls in a branch with a known value or bound,
which :func:`predicted_dimension` reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .dihedral import ConnectionSet, DihedralError, is_generating, is_generating_fast
from .structure import CUBIC_BIPARTITE, CYCLE, MOBIUS, PRISM

A_N2 = "A_n2"
B_TWO_REFLECTIONS = "B_two_reflections"
C_ROTPAIR_REFLECTION = "C_rotpair_reflection"
PRISM_1 = "PRISM_1"
MOBIUS_21 = "MOBIUS_21"
PRISM_22 = "PRISM_22"
CUBIC_BIPARTITE_3REFL = "CUBIC_BIPARTITE_3REFL"
BIG_SET = "BIG_SET"
OTHER = "OTHER"

DIM2_CASES = frozenset({A_N2, B_TWO_REFLECTIONS, C_ROTPAIR_REFLECTION})

# Moebius ladders below 8 vertices, where the 3-or-4 result does not apply.
# Values come from the exact solver: M_4 = K_4 has dimension 3, M_6 = K_{3,3}
# has dimension 4.
SMALL_MOBIUS_DIMENSION = {4: 3, 6: 4}


class ClassifierError(DihedralError):
    pass


@dataclass(frozen=True)
class Prediction:
    """``exact`` (lo == hi), ``interval`` [lo, hi] or ``at_least`` (hi is None)."""

    kind: str
    lo: int
    hi: Optional[int] = None

    @classmethod
    def exact(cls, k: int) -> Prediction:
        return cls("exact", k, k)

    @classmethod
    def interval(cls, lo: int, hi: int) -> Prediction:
        return cls("interval", lo, hi)

    @classmethod
    def at_least(cls, k: int) -> Prediction:
        return cls("at_least", k, None)

    def contains(self, value: int) -> bool:
        return value >= self.lo and (self.hi is None or value <= self.hi)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "lo": self.lo, "hi": self.hi}

    def __str__(self):
        if self.kind == "exact":
            return str(self.lo)
        if self.kind == "interval":
            return f"[{self.lo}, {self.hi}]"
        return f">= {self.lo}"


@dataclass(frozen=True)
class Classification:
    dim2: bool
    case_label: str
    predicted: Prediction
    predicted_structure: Optional[str]

    def to_dict(self) -> dict:
        return {
            "dim2": self.dim2,
            "case": self.case_label,
            "predicted": self.predicted.to_dict(),
            "structure": self.predicted_structure,
        }


def _check_input(n: int, S: ConnectionSet) -> None:
    if S.modulus != n:
        raise ClassifierError(f"connection set is over D_{2 * S.modulus}, not D_{2 * n}")
    fast = is_generating_fast(S)
    generating = fast if fast is not None else is_generating(S)
    if not generating:
        raise ClassifierError(f"{S} does not generate D_{2 * n}; the Cayley graph is disconnected")


def _case(n: int, S: ConnectionSet) -> str:
    rots, refs = S.rotations, S.reflections
    if len(S) == 2:
        if n == 2:
            return A_N2
        if len(refs) == 2 and math.gcd(refs[0].exponent - refs[1].exponent, n) == 1:
            return B_TWO_REFLECTIONS
        return OTHER
    if len(S) >= 4:
        return BIG_SET
    if len(refs) == 3:
        return CUBIC_BIPARTITE_3REFL
    if len(refs) == 1 and len(rots) == 2:
        i = rots[0].exponent
        if n % 2 == 1 and math.gcd(i, n) == 1:
            return C_ROTPAIR_REFLECTION
        if n % 2 == 0 and math.gcd(i, n) == 1:
            return PRISM_1
        return OTHER
    if len(refs) == 2 and len(rots) == 1 and n % 2 == 0 and rots[0].exponent == n // 2:
        g = math.gcd(refs[0].exponent - refs[1].exponent, n)
        if g == 1:
            return MOBIUS_21
        if g == 2 and n % 4 == 2:
            return PRISM_22
    return OTHER


def _prediction(n: int, case: str) -> tuple[Prediction, Optional[str]]:
    if case in (A_N2, B_TWO_REFLECTIONS):
        return Prediction.exact(2), CYCLE
    if case == C_ROTPAIR_REFLECTION:
        return Prediction.exact(2), PRISM
    if case in (PRISM_1, PRISM_22):
        # even prism P2 x Cn
        return Prediction.exact(3), PRISM
    if case == MOBIUS_21:
        m = 2 * n
        if m < 8:
            return Prediction.exact(SMALL_MOBIUS_DIMENSION[m]), MOBIUS
        # n is even here, so m = 0 mod 4
        return Prediction.interval(3, 4), MOBIUS
    if case == CUBIC_BIPARTITE_3REFL:
        return Prediction.at_least(3), CUBIC_BIPARTITE
    if case == BIG_SET:
        # every vertex has degree >= 4, but a two-vertex basis needs degree <= 3
        return Prediction.at_least(3), None
    return Prediction.at_least(2), None


def classify_dim2(n: int, S: ConnectionSet) -> Classification:
    _check_input(n, S)
    case = _case(n, S)
    predicted, structure = _prediction(n, case)
    return Classification(case in DIM2_CASES, case, predicted, structure)


def predicted_dimension(n: int, S: ConnectionSet) -> Prediction:
    return classify_dim2(n, S).predicted
