"""Candidate mesa sets: admissibility, witnesses, and structural moves."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Set

from .errors import ExtensionBlockedError, NotAdmissibleError
from .stirling import StirlingPermutation, validate_stirling


@dataclass(frozen=True)
class MesaSet:
    """A candidate mesa set together with the order it is read against.

    ``elements`` is strictly increasing.  Admissibility is a property of
    the elements alone; ``context_order`` only matters for witness
    construction and for the extend/restrict moves.
    """

    elements: tuple
    context_order: int

    def __post_init__(self):
        elems = tuple(int(v) for v in self.elements)
        object.__setattr__(self, "elements", elems)
        if any(v < 1 for v in elems):
            raise ValueError("elements must be positive integers")
        if any(a >= b for a, b in zip(elems, elems[1:])):
            raise ValueError("elements must be strictly increasing")
        if elems and self.context_order < elems[-1]:
            raise ValueError(
                f"context order {self.context_order} below max element {elems[-1]}"
            )
        if self.context_order < 1:
            raise ValueError("context order must be >= 1")

    def __str__(self):
        if not self.elements:
            return "{}"
        return "{" + ",".join(str(v) for v in self.elements) + "}"


def make_mesa_set(elements: Iterable[int], context_order=None) -> MesaSet:
    """Build a MesaSet, defaulting the context to the largest element."""
    elems = tuple(sorted(set(int(v) for v in elements)))
    if context_order is None:
        context_order = elems[-1] if elems else 1
    return MesaSet(elements=elems, context_order=context_order)


def _elements(M) -> tuple:
    if isinstance(M, MesaSet):
        return M.elements
    return tuple(sorted(set(int(v) for v in M)))


def truncate(M, x: int) -> Set[int]:
    """M restricted to [1, x]."""
    return {v for v in _elements(M) if v <= x}


def is_admissible(M) -> bool:
    """Whether M is realizable as the mesa set of some Stirling permutation.

    Characterization: 3 * |M ∩ [1,x]| <= 2x - 1 for every x in M.  Uses
    integer arithmetic only; the context order is irrelevant.
    """
    for i, x in enumerate(_elements(M)):
        if 3 * (i + 1) > 2 * x - 1:
            return False
    return True


def max_mesa_count(n: int) -> int:
    """The sharp upper bound floor((2n-1)/3) on the number of mesas."""
    if n < 1:
        raise ValueError("order must be >= 1")
    return (2 * n - 1) // 3


def minimal_mesa_floor(l: int) -> List[int]:
    """Component-wise lower bound (2, 4, 5, 7, 8, ...) on sorted mesas.

    Entry i (1-based) is floor(3i/2) + 1.
    """
    if l < 1:
        raise ValueError("length must be >= 1")
    return [3 * i // 2 + 1 for i in range(1, l + 1)]


def canonical_witness(M) -> StirlingPermutation:
    """The canonical witness permutation for an admissible set.

    With mesas m_1 < ... < m_l and complement values u_1 < ... < u_{n-l},
    the word is t_1 m_1 m_1 t_2 m_2 m_2 ... t_l m_l m_l t_{l+1} ...
    t_{2(n-l)} where t_j = u_{ceil(j/2)}.  For the empty set this
    degenerates to 1122...nn.
    """
    if not isinstance(M, MesaSet):
        M = make_mesa_set(M)
    if not is_admissible(M):
        raise NotAdmissibleError(f"{M} is not an admissible mesa set")
    n = M.context_order
    mesas = M.elements
    complement = [u for u in range(1, n + 1) if u not in set(mesas)]

    word = []
    for j in range(1, 2 * (n - len(mesas)) + 1):
        word.append(complement[(j + 1) // 2 - 1])
        if j <= len(mesas):
            word.extend((mesas[j - 1], mesas[j - 1]))
    return validate_stirling(word)


def sharp_witness(n: int) -> StirlingPermutation:
    """A permutation of order n with the maximal number of mesas.

    Takes the top floor((2n-1)/3) values as mesas; that block is itself
    admissible, and its canonical witness realizes the bound.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    k = max_mesa_count(n)
    return canonical_witness(make_mesa_set(range(n - k + 1, n + 1), n))


def restrict(M: MesaSet) -> MesaSet:
    """Drop the context's top value (if present) and shrink the context.

    Maps an admissible set in context n+1 to an admissible set in
    context n; injective on the sets that actually contain n+1.
    """
    n = M.context_order - 1
    if n < 1:
        raise ValueError("cannot restrict below order 1")
    elems = tuple(v for v in M.elements if v != M.context_order)
    return MesaSet(elements=elems, context_order=n)


def extend(M: MesaSet) -> MesaSet:
    """Adjoin n+1 to an admissible set in context n.

    Succeeds exactly when the enlarged set is still admissible; the only
    failure mode is n = 3k-1 with |M| = 2k-1 (a maximal-size set).
    """
    if not is_admissible(M):
        raise NotAdmissibleError(f"{M} is not an admissible mesa set")
    n = M.context_order
    enlarged = M.elements + (n + 1,)
    if not is_admissible(enlarged):
        raise ExtensionBlockedError(size=len(M.elements), context_order=n)
    return MesaSet(elements=enlarged, context_order=n + 1)
