"""Arithmetic in the dihedral group D_2n = <a, b | a^n = b^2 = (ab)^2 = e>.

Elements are rotations ``a^k`` and reflections ``a^k b``.  Every element
carries its modulus ``n`` so that mixing groups is caught instead of silently
reduced.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

MIN_MODULUS = 2
MAX_MODULUS = 2048

_TOKEN_RE = re.compile(r"^([rs])(-?\d+)$")


class DihedralError(ValueError):
    """Invalid dihedral input: bad modulus, mismatched groups, malformed tokens."""


def check_modulus(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise DihedralError(f"modulus must be an integer, got {n!r}")
    if not MIN_MODULUS <= n <= MAX_MODULUS:
        raise DihedralError(f"modulus n={n} outside supported range [{MIN_MODULUS}, {MAX_MODULUS}]")
    return n


@dataclass(frozen=True, order=False)
class DihedralElement:
    """``a^exponent`` (rotation) or ``a^exponent b`` (reflection) in D_2n."""

    reflection: bool
    exponent: int
    modulus: int

    def __post_init__(self):
        check_modulus(self.modulus)
        object.__setattr__(self, "exponent", self.exponent % self.modulus)

    @property
    def kind(self) -> str:
        return "reflection" if self.reflection else "rotation"

    @property
    def is_identity(self) -> bool:
        return not self.reflection and self.exponent == 0

    @property
    def index(self) -> int:
        """Position in the canonical order e, a, ..., a^(n-1), b, ab, ..., a^(n-1)b."""
        return self.exponent + (self.modulus if self.reflection else 0)

    @property
    def token(self) -> str:
        return f"{'s' if self.reflection else 'r'}{self.exponent}"

    def __repr__(self):
        if self.reflection:
            return f"a^{self.exponent}b (n={self.modulus})"
        return f"a^{self.exponent} (n={self.modulus})"

    def __str__(self):
        return self.token

    def __mul__(self, other: DihedralElement) -> DihedralElement:
        return multiply(self, other)

    def __pow__(self, t: int) -> DihedralElement:
        return power(self, t)

    def inverse(self) -> DihedralElement:
        return inverse(self)

    def order(self) -> int:
        return element_order(self)


def rotation(k: int, n: int) -> DihedralElement:
    return DihedralElement(False, k, n)


def reflection(k: int, n: int) -> DihedralElement:
    return DihedralElement(True, k, n)


def identity(n: int) -> DihedralElement:
    return DihedralElement(False, 0, n)


def from_index(index: int, n: int) -> DihedralElement:
    if not 0 <= index < 2 * n:
        raise DihedralError(f"index {index} out of range for D_{2 * n}")
    return DihedralElement(index >= n, index % n, n)


def elements(n: int) -> tuple[DihedralElement, ...]:
    """All 2n elements of D_2n in canonical order."""
    check_modulus(n)
    return tuple(from_index(i, n) for i in range(2 * n))


def multiply(x: DihedralElement, y: DihedralElement) -> DihedralElement:
    # b a^k = a^-k b, so a reflection on the left negates the right exponent.
    if x.modulus != y.modulus:
        raise DihedralError(f"cannot multiply elements of D_{2 * x.modulus} and D_{2 * y.modulus}")
    sign = -1 if x.reflection else 1
    return DihedralElement(x.reflection != y.reflection, x.exponent + sign * y.exponent, x.modulus)


def inverse(x: DihedralElement) -> DihedralElement:
    if x.reflection:
        return x
    return DihedralElement(False, -x.exponent, x.modulus)


def power(x: DihedralElement, t: int) -> DihedralElement:
    if x.reflection:
        return x if t % 2 else identity(x.modulus)
    return DihedralElement(False, x.exponent * t, x.modulus)


def element_order(x: DihedralElement) -> int:
    if x.reflection:
        return 2
    return x.modulus // math.gcd(x.exponent, x.modulus)


def closure(seed: Iterable[DihedralElement], n: int) -> frozenset[DihedralElement]:
    """Subgroup generated by ``seed``.

    Grows the set by right multiplication with the generators and their
    inverses until nothing new appears; in a finite group this fixpoint is
    closed under products and inverses.
    """
    check_modulus(n)
    gens = set()
    for g in seed:
        if g.modulus != n:
            raise DihedralError(f"element {g!r} does not belong to D_{2 * n}")
        gens.add(g)
        gens.add(inverse(g))
    gens = sorted(gens, key=lambda g: g.index)
    e = identity(n)
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = multiply(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


class InvalidConnectionSet(DihedralError):
    pass


@dataclass(frozen=True)
class ConnectionSet:
    """Inverse-closed, identity-free subset S of D_2n in canonical order.

    Build with :meth:`of` or :meth:`parse`; the constructor only validates.
    """

    modulus: int
    members: tuple[DihedralElement, ...]

    def __post_init__(self):
        n = check_modulus(self.modulus)
        members = tuple(self.members)
        object.__setattr__(self, "members", members)
        for s in members:
            if not isinstance(s, DihedralElement) or s.modulus != n:
                raise InvalidConnectionSet(f"{s!r} is not an element of D_{2 * n}")
        idx = [s.index for s in members]
        if idx != sorted(set(idx)):
            raise InvalidConnectionSet("members must be distinct and in canonical order")
        if any(s.is_identity for s in members):
            raise InvalidConnectionSet("connection set contains the identity r0")
        present = set(members)
        for s in members:
            if inverse(s) not in present:
                raise InvalidConnectionSet(
                    f"connection set is not inverse-closed: {s.token} present, {inverse(s).token} missing"
                )

    @classmethod
    def of(cls, members: Iterable[DihedralElement], n: int) -> ConnectionSet:
        unique = {m for m in members}
        return cls(n, tuple(sorted(unique, key=lambda s: s.index)))

    @classmethod
    def parse(cls, text: str, n: int) -> ConnectionSet:
        """Parse ``"r1,r4,s0"`` style text; exponents are reduced mod n."""
        check_modulus(n)
        body = "".join(text.split())
        if not body:
            raise InvalidConnectionSet("empty connection set")
        found = []
        for tok in body.split(","):
            m = _TOKEN_RE.match(tok)
            if m is None:
                raise InvalidConnectionSet(f"malformed token {tok!r} (expected r<k> or s<k>)")
            found.append(DihedralElement(m.group(1) == "s", int(m.group(2)), n))
        return cls.of(found, n)

    def __str__(self):
        return ",".join(s.token for s in self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self) -> Iterator[DihedralElement]:
        return iter(self.members)

    def __contains__(self, x) -> bool:
        return x in self.members

    @property
    def rotations(self) -> tuple[DihedralElement, ...]:
        return tuple(s for s in self.members if not s.reflection)

    @property
    def reflections(self) -> tuple[DihedralElement, ...]:
        return tuple(s for s in self.members if s.reflection)


def is_generating(S: ConnectionSet) -> bool:
    """Closure oracle: S generates D_2n iff its subgroup has 2n elements."""
    return len(closure(S.members, S.modulus)) == 2 * S.modulus


def is_generating_fast(S: ConnectionSet) -> Optional[bool]:
    """gcd formula for the two shapes the characterization analyzes.

    ``{a^i b, a^j b}`` generates iff gcd(n, i-j) = 1.  For ``{a^(n/2), a^i b,
    a^j b}`` with n even the answer also depends on whether the central
    rotation lies in the cyclic subgroup <a^(i-j)>.  Other shapes return None.
    """
    n = S.modulus
    rots, refs = S.rotations, S.reflections
    if len(refs) != 2:
        return None
    g = math.gcd(refs[0].exponent - refs[1].exponent, n)
    if not rots:
        return g == 1
    if len(rots) == 1 and n % 2 == 0 and rots[0].exponent == n // 2:
        if g == 1:
            return True
        if g == 2:
            # a^(n/2) is outside <a^2> exactly when n/2 is odd.
            return n % 4 == 2
        return False
    return None
