"""Lattice paths, rational Dyck path validity, and the mesa-set bijection."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Set

from .errors import (
    InvalidPathError,
    NotAdmissibleError,
    NotCoprimeError,
    NotMaximalError,
    WrongContextError,
)
from .mesas import MesaSet, is_admissible, make_mesa_set

NORTH = "N"
EAST = "E"


@dataclass(frozen=True)
class LatticePath:
    """A north/east path from the origin, stored as a string over {N, E}.

    ``steps[i-1]`` is the i-th step, matching the 1-based step indexing
    used throughout.
    """

    steps: str

    def __post_init__(self):
        if any(s not in (NORTH, EAST) for s in self.steps):
            raise InvalidPathError(f"steps must be over {{N, E}}: {self.steps!r}")

    @property
    def east_count(self) -> int:
        return self.steps.count(EAST)

    @property
    def north_count(self) -> int:
        return self.steps.count(NORTH)

    @property
    def target(self):
        """Endpoint (l, m) with l east steps and m north steps."""
        return (self.east_count, self.north_count)

    def points(self):
        """All visited lattice points, (0,0) first."""
        a = b = 0
        yield (a, b)
        for s in self.steps:
            if s == EAST:
                a += 1
            else:
                b += 1
            yield (a, b)

    def __str__(self):
        return self.steps


def parse_path(text: str) -> LatticePath:
    """Parse an N/E step string; commas and spaces are ignored."""
    cleaned = text.replace(",", "").replace(" ", "").upper()
    return LatticePath(steps=cleaned)


def is_rational_dyck(p: LatticePath) -> bool:
    """Whether p stays below the line y = (m/l)x.

    Requires coprime (m, l); then no interior lattice point can lie on
    the line, so the interior test is strict: b*l < a*m.
    """
    ell, m = p.target
    if ell < 1 or m < 1 or math.gcd(m, ell) != 1:
        raise NotCoprimeError(f"target ({ell}, {m}) must have coprime coordinates")
    for a, b in p.points():
        if (a, b) in ((0, 0), (ell, m)):
            continue
        if b * ell >= a * m:
            return False
    return True


@dataclass(frozen=True)
class RationalDyckPath:
    """A LatticePath validated to stay below its rational slope line."""

    path: LatticePath

    @classmethod
    def from_path(cls, p: LatticePath) -> "RationalDyckPath":
        if not is_rational_dyck(p):
            raise InvalidPathError(f"{p} rises above the line")
        return cls(path=p)

    @property
    def steps(self) -> str:
        return self.path.steps

    @property
    def target(self):
        return self.path.target

    def __str__(self):
        return self.path.steps


def delta(M: MesaSet) -> RationalDyckPath:
    """Map a maximal-size admissible set in context 3k-1 to a Dyck path.

    Step i is north iff i is in the set; the image is a (2k-1, k)-Dyck
    path and the map is a bijection onto them.
    """
    n = M.context_order
    if n % 3 != 2:
        raise WrongContextError(f"context order {n} is not of the form 3k-1")
    k = (n + 1) // 3
    if len(M.elements) != 2 * k - 1:
        raise NotMaximalError(
            f"|M| = {len(M.elements)}, maximal size in context {n} is {2 * k - 1}"
        )
    if not is_admissible(M):
        raise NotAdmissibleError(f"{M} is not an admissible mesa set")
    members = set(M.elements)
    steps = "".join(NORTH if i in members else EAST for i in range(1, n + 1))
    return RationalDyckPath.from_path(LatticePath(steps=steps))


def delta_inverse(p: RationalDyckPath) -> MesaSet:
    """Recover the maximal mesa set from a (2k-1, k)-Dyck path."""
    ell, m = p.target
    if m != 2 * ell - 1:
        raise InvalidPathError(f"target ({ell}, {m}) is not of shape (k, 2k-1)")
    if not is_rational_dyck(p.path):
        raise InvalidPathError(f"{p} rises above the line")
    elements = [i for i, s in enumerate(p.steps, start=1) if s == NORTH]
    return make_mesa_set(elements, context_order=3 * ell - 1)


def rational_catalan(m: int, ell: int) -> int:
    """The rational Catalan number (1/ell) * binom(ell+m-1, m), exactly.

    Counts (m, ell)-Dyck paths for coprime m, ell; the division is exact
    under coprimality.
    """
    if m < 1 or ell < 1:
        raise ValueError("arguments must be positive")
    if math.gcd(m, ell) != 1:
        raise NotCoprimeError(f"({m}, {ell}) must be coprime")
    numerator = math.comb(ell + m - 1, m)
    quotient, remainder = divmod(numerator, ell)
    if remainder:
        raise ArithmeticError(f"binom({ell + m - 1}, {m}) not divisible by {ell}")
    return quotient


def area(p: RationalDyckPath) -> int:
    """Sum over east steps of the height at which each is taken.

    Equals the number of unit cells below the path and above the x-axis,
    counted by column, and matches the inversion count of the preimage
    set under the mesa-set bijection.
    """
    height = 0
    total = 0
    for s in p.steps:
        if s == NORTH:
            height += 1
        else:
            total += height
    return total


def inversions(M: MesaSet) -> int:
    """Pairs (m, u) with m in the set, u outside it, m < u, u <= context."""
    members = set(M.elements)
    complement = [u for u in range(1, M.context_order + 1) if u not in members]
    return sum(1 for m in members for u in complement if m < u)
