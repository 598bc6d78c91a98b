"""Independent brute-force enumeration of all groups of a small order up
to isomorphism: the ground-truth oracle for the classification claims.

The table search lives in a kernel with two interchangeable backends: a
compiled extension (_fillcore_c, built from Cython) and a pure-Python
fallback (_fillcore). The compiled one is picked at import when available;
set CAYLEY_PURE_FILL=1 to force the fallback. Both run the identical
algorithm and return identical tables in identical order.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from . import _fillcore
from .core import FiniteGroup, from_table
from .errors import BudgetExceededError
from .morphisms import find_isomorphism, fingerprint

DEFAULT_BUDGET = 16
HARD_ORDER_LIMIT = _fillcore.MAX_KERNEL_ORDER

try:
    from . import _fillcore_c  # type: ignore[attr-defined]

    _COMPILED = _fillcore_c
except ImportError:  # pragma: no cover - depends on the build environment
    _COMPILED = None

if _COMPILED is not None and not os.environ.get("CAYLEY_PURE_FILL"):
    _ACTIVE = _COMPILED
    BACKEND = "compiled"
else:
    _ACTIVE = _fillcore
    BACKEND = "pure"


def available_backends() -> dict[str, object]:
    backends: dict[str, object] = {"pure": _fillcore}
    if _COMPILED is not None:
        backends["compiled"] = _COMPILED
    return backends


def enumerate_tables(n: int, backend: str | None = None) -> tuple[list[tuple[int, ...]], int]:
    """Raw kernel run: canonical-search tables plus the node count."""
    module = _ACTIVE if backend is None else available_backends()[backend]
    return module.enumerate_group_tables(n)


@dataclass(frozen=True)
class EnumerationStats:
    nodes: int
    tables_completed: int
    iso_rejections: int
    backend: str


@dataclass(frozen=True)
class EnumerationReport:
    order: int
    representatives: tuple[FiniteGroup, ...]
    count: int
    stats: EnumerationStats


def enumerate_groups(
    n: int,
    budget: int | None = None,
    backend: str | None = None,
) -> EnumerationReport:
    """All groups of order n up to isomorphism.

    The kernel's canonical search is complete but may emit isomorphic
    duplicates; they are removed here by fingerprint bucketing followed by
    the full isomorphism search, so the oracle never trusts fingerprints
    for a positive identification.
    """
    if budget is None:
        budget = DEFAULT_BUDGET
    if n < 1:
        raise BudgetExceededError("order must be at least 1")
    if n > budget:
        raise BudgetExceededError(
            f"order {n} exceeds the enumeration budget {budget}; pass budget={n}"
        )
    if n > HARD_ORDER_LIMIT:
        raise BudgetExceededError(f"kernel supports orders up to {HARD_ORDER_LIMIT}")
    tables, nodes = enumerate_tables(n, backend=backend)
    representatives: list[FiniteGroup] = []
    buckets: dict[tuple, list[FiniteGroup]] = {}
    rejections = 0
    for flat in tables:
        group = from_table(n, np.array(flat, dtype=np.int32).reshape(n, n))
        key = fingerprint(group)
        bucket = buckets.setdefault(key, [])
        if any(find_isomorphism(group, rep) is not None for rep in bucket):
            rejections += 1
            continue
        bucket.append(group)
        representatives.append(group)
    stats = EnumerationStats(
        nodes=nodes,
        tables_completed=len(tables),
        iso_rejections=rejections,
        backend=BACKEND if backend is None else backend,
    )
    return EnumerationReport(n, tuple(representatives), len(representatives), stats)


def count_groups(n: int, budget: int | None = None) -> int:
    """Number of isomorphism classes of groups of order n."""
    return enumerate_groups(n, budget=budget).count
