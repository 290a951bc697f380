"""Counting admissible mesa sets by independent engines, and reconciling them.

Engines:
  brute_force  -- exhaust Q_n, deduplicate mesa sets (ground truth, slow)
  subset       -- pruned depth-first enumeration of admissible subsets
  recurrence   -- the doubling recurrences with the maximal-count correction
  closed_form  -- 2^(n-1) minus a short sum of weighted rational Catalan terms
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterator, List, Optional, Sequence

from .dyck import rational_catalan
from .mesas import MesaSet
from .stirling import _raw_words, enumeration_ceiling, mesa_mask
from .errors import ResourceGuardError

ENGINE_NAMES = ("brute_force", "subset", "recurrence", "closed_form")

CSV_HEADER = (
    "order,brute_force_count,subset_count,recurrence_count,"
    "closed_form_count,maximal_count,agree"
)


@dataclass
class CountReport:
    """Counts of admissible mesa sets at one order, per engine.

    A count is None when the engine was skipped.  ``agree`` is true iff
    all present counts coincide.
    """

    order: int
    brute_force_count: Optional[int] = None
    subset_count: Optional[int] = None
    recurrence_count: Optional[int] = None
    closed_form_count: Optional[int] = None
    maximal_count: Optional[int] = None
    agree: bool = True

    def present_counts(self) -> List[int]:
        return [
            c
            for c in (
                self.brute_force_count,
                self.subset_count,
                self.recurrence_count,
                self.closed_form_count,
            )
            if c is not None
        ]

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "brute_force_count": self.brute_force_count,
            "subset_count": self.subset_count,
            "recurrence_count": self.recurrence_count,
            "closed_form_count": self.closed_form_count,
            "maximal_count": self.maximal_count,
            "agree": self.agree,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_csv_row(self) -> str:
        cells = [
            self.order,
            self.brute_force_count,
            self.subset_count,
            self.recurrence_count,
            self.closed_form_count,
            self.maximal_count,
            str(self.agree).lower(),
        ]
        return ",".join("" if c is None else str(c) for c in cells)


def enumerate_ams(n: int) -> Iterator[MesaSet]:
    """Yield every admissible subset of [n], smallest-first depth-first.

    Prunes on the prefix condition: if 3j > 2x - 1 already fails at the
    j-th chosen element x, no superset with larger elements can recover.
    """
    if n < 1:
        raise ValueError("order must be >= 1")

    def walk(prefix, start):
        yield MesaSet(elements=tuple(prefix), context_order=n)
        for x in range(start, n + 1):
            if 3 * (len(prefix) + 1) <= 2 * x - 1:
                prefix.append(x)
                yield from walk(prefix, x + 1)
                prefix.pop()

    yield from walk([], 2)


def enumerate_maximal(k: int) -> Iterator[MesaSet]:
    """Admissible subsets of [3k-1] of the maximal size 2k-1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    size = 2 * k - 1
    for M in enumerate_ams(3 * k - 1):
        if len(M.elements) == size:
            yield M


def count_subsets(n: int) -> int:
    """|AMS_n| by pruned subset enumeration."""
    return sum(1 for _ in enumerate_ams(n))


def _brute_masks(args) -> set:
    n, top_gap = args
    masks = set()
    for word in _raw_words(n, top_gap=top_gap):
        masks.add(mesa_mask(word))
    return masks


def count_brute_force(
    n: int,
    *,
    ceiling=None,
    allow_large: bool = False,
    workers: int = 1,
) -> int:
    """|AMS_n| by exhausting Q_n and deduplicating mesa sets.

    Mesa sets are deduplicated as bitmasks.  With workers > 1 the stream
    is split by the outermost pair-insertion position and the per-worker
    mask sets are merged by union, which is order-independent.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    cap = enumeration_ceiling(ceiling)
    if n > cap and not allow_large:
        raise ResourceGuardError(n, cap)
    if workers > 1 and n > 1:
        jobs = [(n, gap) for gap in range(2 * n - 1)]
        with Pool(processes=workers) as pool:
            partials = pool.map(_brute_masks, jobs)
        masks = set().union(*partials)
    else:
        masks = _brute_masks((n, None))
    return len(masks)


def count_recurrence(n: int) -> int:
    """|AMS_n| from |AMS_1| = 1 via the tri-cyclic recurrences.

    count(3k-1) = 2*count(3k-2); count(3k) = 2*count(3k-1) - C_{2k-1,k};
    count(3k+1) = 2*count(3k).
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    count = 1
    for order in range(2, n + 1):
        if order % 3 == 0:
            k = order // 3
            count = 2 * count - rational_catalan(2 * k - 1, k)
        else:
            count = 2 * count
    return count


def count_closed_form(n: int) -> int:
    """|AMS_n| = 2^(n-1) - sum_{i=0}^{k-1} 2^(3i+r) C_{2(k-i)-1, k-i}.

    Here n = 3k + r with r in {0, 1, 2}; the sum is empty for k = 0.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    k, r = divmod(n, 3)
    correction = sum(
        2 ** (3 * i + r) * rational_catalan(2 * (k - i) - 1, k - i)
        for i in range(k)
    )
    return 2 ** (n - 1) - correction


def maximal_count(n: int) -> Optional[int]:
    """Number of maximal-size admissible sets at order n = 3k-1, else None."""
    if n % 3 != 2:
        return None
    k = (n + 1) // 3
    return rational_catalan(2 * k - 1, k)


def full_report(
    n: int,
    engines: Sequence[str] = ENGINE_NAMES,
    *,
    ceiling=None,
    allow_large: bool = False,
    workers: int = 1,
    corrupt: Optional[str] = None,
) -> CountReport:
    """Run the selected engines and flag any disagreement.

    Brute force is silently skipped above the enumeration ceiling unless
    ``allow_large`` is set.  ``corrupt`` names an engine whose result is
    perturbed by one; it exists so the disagreement path is testable.
    """
    for name in engines:
        if name not in ENGINE_NAMES:
            raise ValueError(f"unknown engine {name!r}; choose from {ENGINE_NAMES}")
    report = CountReport(order=n, maximal_count=maximal_count(n))
    cap = enumeration_ceiling(ceiling)
    if "brute_force" in engines and (n <= cap or allow_large):
        report.brute_force_count = count_brute_force(
            n, ceiling=cap, allow_large=allow_large, workers=workers
        )
    if "subset" in engines:
        report.subset_count = count_subsets(n)
    if "recurrence" in engines:
        report.recurrence_count = count_recurrence(n)
    if "closed_form" in engines:
        report.closed_form_count = count_closed_form(n)
    if corrupt is not None:
        field = f"{corrupt}_count"
        value = getattr(report, field)
        if value is not None:
            setattr(report, field, value + 1)
    counts = report.present_counts()
    report.agree = len(set(counts)) <= 1
    return report
