"""Brute-force maximisation of the edge count, independent of the formula.

Two searches are provided:

* ``brute_force_max`` runs over every fully nested n-point set (finite order
  ideals of N^d), which is enough because gravity never loses edges.
* ``raw_subset_max`` runs over every n-subset of a box and assumes nothing
  about nestedness. It also certifies whether the box was large enough; see
  ``extent_bound``.

The searches never consult the formula; only ``verify_range`` compares
against it.
"""

from __future__ import annotations

import itertools
import json
import math
import os
import time
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from gridmax.errors import BudgetExceeded, DomainError
from gridmax.pointset import PointSet, edge_count

__all__ = [
    "OracleBudget",
    "OracleReport",
    "VerifyRow",
    "VerifyTable",
    "enumerate_fully_nested",
    "brute_force_max",
    "raw_subset_max",
    "extent_bound",
    "sufficient_box_side",
    "verify_range",
]

DEFAULT_CAP = 10**7
DEFAULT_SECONDS = 60.0


@dataclass(frozen=True, slots=True)
class OracleBudget:
    """Hard limits for one search: visited candidates and wall-clock seconds."""

    cap: int = DEFAULT_CAP
    seconds: float = DEFAULT_SECONDS

    @classmethod
    def from_env(cls, env: dict[str, str] | None = None) -> OracleBudget:
        env = os.environ if env is None else env
        cap = env.get("GRIDMAX_ORACLE_CAP")
        secs = env.get("GRIDMAX_ORACLE_SECS")
        try:
            return cls(
                cap=int(cap) if cap else DEFAULT_CAP,
                seconds=float(secs) if secs else DEFAULT_SECONDS,
            )
        except ValueError as exc:
            raise DomainError(f"bad oracle budget in environment: {exc}") from None


class _Meter:
    def __init__(self, budget: OracleBudget, what: str) -> None:
        self.budget = budget
        self.what = what
        self.count = 0
        self.deadline = time.monotonic() + budget.seconds

    def tick(self) -> None:
        self.count += 1
        if self.count > self.budget.cap:
            self.count -= 1
            raise BudgetExceeded(f"{self.what}: visit cap {self.budget.cap} reached", self.count)
        if self.count & 0x3FF == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded(
                f"{self.what}: time limit {self.budget.seconds}s reached", self.count
            )


@dataclass(frozen=True, slots=True)
class OracleReport:
    n: int
    d: int
    max_edges_found: int
    witness: PointSet
    candidates_examined: int
    method: str  # "order-ideal" or "raw-subset"
    box_side: int | None = None
    box_certified: bool | None = None

    def to_dict(self) -> dict:
        doc = {
            "n": self.n,
            "d": self.d,
            "max": self.max_edges_found,
            "witness": self.witness.to_dict(),
            "examined": self.candidates_examined,
            "method": self.method,
        }
        if self.box_side is not None:
            doc["box_side"] = self.box_side
            doc["box_certified"] = self.box_certified
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


# -- order ideals -----------------------------------------------------------


class _IdealCatalog:
    """Fully nested sets grouped by (size, dimension), built layer by layer.

    A d-dimensional ideal is a stack of (d-1)-dimensional ideals along the
    last axis, each contained in the one below it.
    """

    def __init__(self) -> None:
        self._by_size: dict[tuple[int, int], tuple[frozenset, ...]] = {}

    def ideals(self, k: int, dim: int) -> tuple[frozenset, ...]:
        key = (k, dim)
        hit = self._by_size.get(key)
        if hit is None:
            hit = tuple(self.stacks(k, dim, None))
            self._by_size[key] = hit
        return hit

    def stacks(self, k: int, dim: int, floor: frozenset | None) -> Iterator[frozenset]:
        """Ideals of size ``k`` in N^dim whose bottom layer lies inside ``floor``."""
        if dim == 1:
            if floor is None or k <= len(floor):
                yield frozenset((i,) for i in range(1, k + 1))
            return
        yield from self._stack_from(k, dim, floor, 1)

    def _stack_from(
        self, k: int, dim: int, below: frozenset | None, height: int
    ) -> Iterator[frozenset]:
        top = k if below is None else min(k, len(below))
        for size in range(top, 0, -1):
            for layer in self.ideals(size, dim - 1):
                if below is not None and not layer <= below:
                    continue
                here = frozenset(p + (height,) for p in layer)
                if size == k:
                    yield here
                else:
                    for rest in self._stack_from(k - size, dim, layer, height + 1):
                        yield here | rest


def enumerate_fully_nested(
    n: int,
    d: int,
    visitor: Callable[[PointSet], None] | None = None,
    budget: OracleBudget | None = None,
) -> int:
    """Visit every fully nested n-point set in N^d once; return how many.

    The order is a pure function of ``(n, d)``. For ``d = 2`` the sets are
    the Young diagrams of the partitions of ``n``.
    """
    if n < 1 or d < 1:
        raise DomainError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    meter = _Meter(budget or OracleBudget(), f"order ideals of size {n} in dimension {d}")
    catalog = _IdealCatalog()
    source = catalog.stacks(n, d, None)
    for pts in source:
        meter.tick()
        if visitor is not None:
            visitor(PointSet._trusted(d, pts))
    return meter.count


def _better(edges: int, pts: list, best_edges: int, best_pts: list | None) -> bool:
    if edges != best_edges:
        return edges > best_edges
    return best_pts is None or pts < best_pts


def brute_force_max(n: int, d: int, budget: OracleBudget | None = None) -> OracleReport:
    """Maximum edge count over all fully nested n-point sets, with a witness.

    Among tied witnesses the one with the lexicographically least sorted
    point list is kept.
    """
    best = -1
    best_pts: list | None = None

    def visit(s: PointSet) -> None:
        nonlocal best, best_pts
        e = edge_count(s)
        if e >= best:
            pts = s.sorted_points()
            if _better(e, pts, best, best_pts):
                best, best_pts = e, pts

    examined = enumerate_fully_nested(n, d, visit, budget)
    return OracleReport(n, d, best, PointSet(d, best_pts), examined, "order-ideal")


# -- raw subsets ------------------------------------------------------------


def _extent_vectors(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing extent vectors a connected n-set could have."""

    def rec(prefix: tuple[int, ...], slack: int, cap: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == d:
            yield prefix
            return
        for s in range(min(cap, slack + 1), 0, -1):
            yield from rec(prefix + (s,), slack - (s - 1), s)

    for ext in rec((), n - 1, n):
        if math.prod(ext) >= n:
            yield ext


def extent_bound(n: int, d: int, known: int) -> int:
    """Largest bounding-box side any n-point set with more than ``known``
    edges could have; 0 when no such set can exist.

    An optimal set is connected (two components can be slid together to gain
    an edge). For a connected set with bounding-box sides ``s_1..s_d``:
    ``edges <= d*n - sum_k n_k`` where ``n_k`` is the size of the projection
    forgetting axis k, and that projection is a connected set with sides
    ``s_i (i != k)``, so ``n_k >= sum_{i != k} s_i - (d - 2)``; also every
    line along axis k holds at most ``s_k`` points, so ``n_k >= ceil(n/s_k)``.
    """
    widest = 0
    for ext in _extent_vectors(n, d):
        total = sum(ext)
        proj = 0
        for k, s_k in enumerate(ext):
            by_connectivity = total - s_k - (d - 2) if d > 1 else 1
            proj += max(by_connectivity, -(-n // s_k), 1)
        if d * n - proj > known:
            widest = max(widest, ext[0])
    return widest


def raw_subset_max(
    n: int,
    d: int,
    box_side: int,
    budget: OracleBudget | None = None,
    visitor: Callable[[PointSet], None] | None = None,
) -> OracleReport:
    """Maximum edge count over every n-subset of the box ``[box_side]^d``.

    Subsets are generated in lexicographic order, so the first maximiser met
    is the lexicographically least. The report's ``box_certified`` says
    whether :func:`extent_bound` proves no larger set beats the result.
    """
    if n < 1 or d < 1 or box_side < 1:
        raise DomainError(f"need n, d, box_side >= 1; got {n}, {d}, {box_side}")
    budget = budget or OracleBudget()
    cells = list(itertools.product(range(1, box_side + 1), repeat=d))
    if n > len(cells):
        raise DomainError(f"box [{box_side}]^{d} has fewer than {n} cells")
    total = math.comb(len(cells), n)
    if total > budget.cap:
        raise BudgetExceeded(f"C({len(cells)}, {n}) = {total} subsets exceed cap {budget.cap}", 0)

    index = {p: j for j, p in enumerate(cells)}
    back = []  # bitmask of lexicographically smaller neighbours of each cell
    for p in cells:
        mask = 0
        for i in range(d):
            if p[i] > 1:
                mask |= 1 << index[p[:i] + (p[i] - 1,) + p[i + 1 :]]
        back.append(mask)

    meter = _Meter(budget, f"{n}-subsets of [{box_side}]^{d}")
    n_cells = len(cells)
    best = -1
    best_idx: tuple[int, ...] = ()
    chosen: list[int] = []

    def rec(start: int, left: int, mask: int, edges: int) -> None:
        nonlocal best, best_idx
        for j in range(start, n_cells - left + 1):
            e = edges + (mask & back[j]).bit_count()
            chosen.append(j)
            if left == 1:
                meter.tick()
                if e > best:
                    best, best_idx = e, tuple(chosen)
                if visitor is not None:
                    visitor(PointSet._trusted(d, frozenset(cells[c] for c in chosen)))
            else:
                rec(j + 1, left - 1, mask | 1 << j, e)
            chosen.pop()

    rec(0, n, 0, 0)
    witness = PointSet(d, [cells[j] for j in best_idx])
    certified = extent_bound(n, d, best) <= box_side
    return OracleReport(n, d, best, witness, meter.count, "raw-subset", box_side, certified)


def sufficient_box_side(n: int, d: int, budget: OracleBudget | None = None) -> int:
    """Smallest box side this module can certify for ``raw_subset_max``.

    Starts from the smallest box holding ``n`` cells, and grows it to the
    extent bound implied by the best value found so far until the bound fits.
    """
    if n < 1 or d < 1:
        raise DomainError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    side = 1
    while side**d < n:
        side += 1
    while True:
        found = raw_subset_max(n, d, side, budget).max_edges_found
        need = extent_bound(n, d, found)
        if need <= side:
            return side
        side = need


# -- verification sweep -----------------------------------------------------


@dataclass(frozen=True, slots=True)
class VerifyRow:
    n: int
    formula_value: int
    oracle_value: int

    @property
    def agree(self) -> bool:
        return self.formula_value == self.oracle_value


@dataclass(frozen=True, slots=True)
class VerifyTable:
    """Rows for ``n = 1..`` in order; ``truncated_at`` marks where a budget ran out."""

    d: int
    n_max: int
    rows: list[VerifyRow] = field(default_factory=list)
    truncated_at: int | None = None

    @property
    def all_agree(self) -> bool:
        return self.truncated_at is None and all(r.agree for r in self.rows)


def _oracle_value(args: tuple[int, int, OracleBudget]) -> int:
    n, d, budget = args
    return brute_force_max(n, d, budget).max_edges_found


def _closed_form(n: int, d: int) -> int:
    from gridmax.formula import max_edges

    return max_edges(n, d).edges


def verify_range(
    d: int,
    n_max: int,
    formula: Callable[[int, int], int] | None = None,
    budget: OracleBudget | None = None,
    jobs: int = 1,
) -> VerifyTable:
    """Compare ``formula(n, d)`` with the order-ideal oracle for ``n = 1..n_max``.

    ``formula`` defaults to the closed form; the oracle values never touch
    it. With
    ``jobs > 1`` the values of ``n`` are spread over worker processes; the
    table is the same either way. A budget overrun ends the table early and
    sets ``truncated_at`` to the first missing ``n``.
    """
    if d < 1 or n_max < 1:
        raise DomainError(f"need d >= 1 and n_max >= 1, got d={d}, n_max={n_max}")
    budget = budget or OracleBudget()
    formula = formula or _closed_form
    table = VerifyTable(d, n_max)
    tasks = [(n, d, budget) for n in range(1, n_max + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_oracle_value, t) for t in tasks]
            for (n, _, _), fut in zip(tasks, futures):
                try:
                    value = fut.result()
                except BudgetExceeded:
                    for rest in futures:
                        rest.cancel()
                    return VerifyTable(d, n_max, table.rows, n)
                table.rows.append(VerifyRow(n, formula(n, d), value))
        return table
    for t in tasks:
        try:
            value = _oracle_value(t)
        except BudgetExceeded:
            return VerifyTable(d, n_max, table.rows, t[0])
        table.rows.append(VerifyRow(t[0], formula(t[0], d), value))
    return table
