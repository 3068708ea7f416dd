"""Exhaustive enumeration of uninorms on small chains, and the certification
experiment comparing the structural case conditions against brute-force
distributivity over the full pair space.

The search fills the upper triangle of the table in a fixed traversal
(increasing x, then y >= x), with the neutral row propagated first.
Monotonicity prunes a candidate cell immediately via its neighbour bounds;
associativity is pruned incrementally by checking exactly the triples whose
four lookups became determined with the new cell.  Both pruning rules can
be switched off (the output set must not change: see the differential
tests).  Determinism: candidates are tried in ascending order, so tables
stream out in lexicographic order of their row-major values.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .core import ChainScale, OpTable, Uninorm
from .distributivity import (
    ClassifyResult,
    Decomposition,
    TheoremCase,
    check_distributivity,
    classify_and_check,
    decompose,
    necessity_conditions,
)
from .errors import InternalConsistencyError, SearchLimitError, StructureError

DEFAULT_ENUMERATION_LIMIT = 6
DEFAULT_CERTIFY_LIMIT = 4
QUICK_CERTIFY_LIMIT = 3


@dataclass
class SearchStats:
    """Mutable counters shared across one enumeration run."""

    nodes_expanded: int = 0
    emitted: int = 0


@dataclass(frozen=True)
class EnumerationTask:
    """What to enumerate: a chain, a neutral element, optional filters."""

    scale: ChainScale
    e: int
    idempotent_only: bool = False
    locally_internal_only: bool = False
    conjunctive_only: bool = False

    def __post_init__(self):
        if not 0 <= self.e <= self.scale.n:
            raise StructureError(f"neutral index {self.e} outside chain 0..{self.scale.n}")


def _free_cells(n: int, e: int):
    return [(x, y) for x in range(n + 1) for y in range(x, n + 1) if x != e and y != e]


def _neutral_table(n: int, e: int):
    t = [[-1] * (n + 1) for _ in range(n + 1)]
    for y in range(n + 1):
        t[e][y] = y
        t[y][e] = y
    return t


def _candidates(t, x, y, n, e, task, prune_monotone, prune_filters):
    if prune_monotone:
        lo = 0
        if x > 0:
            lo = max(lo, t[x - 1][y])
        if y > 0:
            lo = max(lo, t[x][y - 1])
        hi = n
        if x < e:
            hi = min(hi, t[e][y])
        if y < e:
            hi = min(hi, t[x][e])
    else:
        lo, hi = 0, n
    values = range(lo, hi + 1)
    if prune_filters:
        if task.idempotent_only and x == y:
            values = [x] if lo <= x <= hi else []
        elif task.locally_internal_only and x < e < y:
            values = [v for v in (x, y) if lo <= v <= hi]
        if task.conjunctive_only and (x, y) == (0, n):
            values = [0] if 0 in values else []
    return values


def _triple_consistent(t, a, b, c):
    ab = t[a][b]
    if ab < 0:
        return True
    bc = t[b][c]
    if bc < 0:
        return True
    left = t[ab][c]
    right = t[a][bc]
    return left < 0 or right < 0 or left == right


def _assoc_ok_after(t, x, y, n):
    # every triple whose four lookups became determined with cell (x, y)
    # references the new cell in one of them; scan those reference patterns
    rng = range(n + 1)
    for c in rng:
        if not (_triple_consistent(t, x, y, c) and _triple_consistent(t, y, x, c)):
            return False
        if not (_triple_consistent(t, c, x, y) and _triple_consistent(t, c, y, x)):
            return False
    for a in rng:
        row = t[a]
        for b in rng:
            ab = row[b]
            if ab == x:
                if not _triple_consistent(t, a, b, y):
                    return False
            if ab == y:
                if not _triple_consistent(t, a, b, x):
                    return False
    for b in rng:
        row = t[b]
        for c in rng:
            bc = row[c]
            if bc == y:
                if not _triple_consistent(t, x, b, c):
                    return False
            if bc == x:
                if not _triple_consistent(t, y, b, c):
                    return False
    return True


def _fully_monotone(t, n):
    for x in range(n):
        for y in range(n + 1):
            if t[x][y] > t[x + 1][y]:
                return False
    return True


def _fully_associative(t, n):
    rng = range(n + 1)
    for a in rng:
        for b in rng:
            ab = t[a][b]
            for c in rng:
                if t[ab][c] != t[a][t[b][c]]:
                    return False
    return True


def _passes_filters(t, n, e, task):
    if task.idempotent_only and any(t[x][x] != x for x in range(n + 1)):
        return False
    if task.locally_internal_only:
        for x in range(e):
            for y in range(e + 1, n + 1):
                if t[x][y] not in (x, y):
                    return False
    if task.conjunctive_only and t[0][n] != 0:
        return False
    return True


def _search(t, cells, i, n, e, task, prune_monotone, prune_associative, prune_filters, stats):
    if i == len(cells):
        if not prune_monotone and not _fully_monotone(t, n):
            return
        if not prune_associative and not _fully_associative(t, n):
            return
        if not _passes_filters(t, n, e, task):
            return
        stats.emitted += 1
        yield tuple(tuple(row) for row in t)
        return
    x, y = cells[i]
    for v in _candidates(t, x, y, n, e, task, prune_monotone, prune_filters):
        t[x][y] = t[y][x] = v
        stats.nodes_expanded += 1
        if not prune_associative or _assoc_ok_after(t, x, y, n):
            yield from _search(t, cells, i + 1, n, e, task,
                               prune_monotone, prune_associative, prune_filters, stats)
        t[x][y] = t[y][x] = -1


def enumerate_uninorms(task: EnumerationTask, *,
                       max_n: int = DEFAULT_ENUMERATION_LIMIT,
                       prune_monotone: bool = True,
                       prune_associative: bool = True,
                       prune_filters: bool = True,
                       stats: SearchStats | None = None):
    """Yield every uninorm on the task's chain with the task's neutral element.

    Each table appears exactly once, in lexicographic order of its rows.
    Scales above ``max_n`` are refused: the search space grows so fast that
    anything larger needs a deliberate override, not a default.
    """
    n, e = task.scale.n, task.e
    if n > max_n:
        raise SearchLimitError(
            f"enumeration on L_{n} refused: limit is n <= {max_n}; "
            f"pass max_n={n} explicitly if you really want the blow-up"
        )
    if stats is None:
        stats = SearchStats()
    if task.conjunctive_only and e == 0:
        return  # row 0 is the identity, so u(0, n) = n: nothing qualifies
    t = _neutral_table(n, e)
    cells = _free_cells(n, e)
    scale = task.scale
    for rows in _search(t, cells, 0, n, e, task,
                        prune_monotone, prune_associative, prune_filters, stats):
        yield Uninorm(OpTable(scale, rows), e)


def _expand_partition(args):
    task, prefix, max_n, flags = args
    n, e = task.scale.n, task.e
    t = _neutral_table(n, e)
    cells = _free_cells(n, e)
    stats = SearchStats()
    for (x, y), v in zip(cells, prefix):
        t[x][y] = t[y][x] = v
    out = []
    for rows in _search(t, cells, len(prefix), n, e, task, *flags, stats):
        out.append(rows)
    return out


def enumerate_partitioned(task: EnumerationTask, *,
                          workers: int = 1,
                          depth: int = 2,
                          max_n: int = DEFAULT_ENUMERATION_LIMIT,
                          prune_monotone: bool = True,
                          prune_associative: bool = True,
                          prune_filters: bool = True):
    """Partition the search tree at a fixed depth and expand each part.

    Partitions share nothing; results are merged in prefix order, so the
    output list is identical to the single-worker stream regardless of the
    worker count.
    """
    n, e = task.scale.n, task.e
    if n > max_n:
        raise SearchLimitError(f"enumeration on L_{n} refused: limit is n <= {max_n}")
    cells = _free_cells(n, e)
    depth = max(0, min(depth, len(cells)))
    flags = (prune_monotone, prune_associative, prune_filters)

    if task.conjunctive_only and e == 0:
        return []

    # collect valid prefixes of the fixed depth with the same pruning rules
    prefixes: list[tuple] = []

    def collect(t, i, acc):
        if i == depth:
            prefixes.append(tuple(acc))
            return
        x, y = cells[i]
        for v in _candidates(t, x, y, n, e, task, prune_monotone, prune_filters):
            t[x][y] = t[y][x] = v
            if not prune_associative or _assoc_ok_after(t, x, y, n):
                acc.append(v)
                collect(t, i + 1, acc)
                acc.pop()
            t[x][y] = t[y][x] = -1

    collect(_neutral_table(n, e), 0, [])
    jobs = [(task, prefix, max_n, flags) for prefix in prefixes]
    scale = task.scale
    if workers <= 1 or len(jobs) <= 1:
        chunks = [_expand_partition(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_expand_partition, jobs))
    merged = []
    seen = set()
    for chunk in chunks:
        for rows in chunk:
            if rows in seen:  # duplicates across partitions would be a search bug
                raise InternalConsistencyError(f"partitioned search produced a duplicate table: {rows}")
            seen.add(rows)
            merged.append(Uninorm(OpTable(scale, rows), e))
    return merged


@dataclass(frozen=True)
class PairDivergence:
    """A pair where the case conditions and the exhaustive scan disagree."""

    e1: int
    index1: int
    e2: int
    index2: int
    case: str
    conditions_verdict: bool
    exhaustive_verdict: bool
    u1_rows: tuple
    u2_rows: tuple


@dataclass(frozen=True)
class CertificationReport:
    """Outcome of comparing both distributivity routes over a full pair space."""

    scale_n: int
    uninorm_counts: tuple          # ((e, count), ...) for e = 0..n
    pairs_checked: int
    pair_case_counts: tuple        # ((case value, pairs), ...)
    distributive_case_counts: tuple
    agreements: int
    divergences: tuple
    nodes_expanded: int
    wall_time_s: float
    partial: bool = False

    def __post_init__(self):
        if not self.partial:
            total = sum(c for _, c in self.uninorm_counts)
            by_e = dict(self.uninorm_counts)
            expected = sum(by_e[e1] * by_e[e2] for e1 in by_e for e2 in by_e)
            if self.pairs_checked != expected:
                raise InternalConsistencyError("pair count does not match the enumeration counts")
        if (len(self.divergences) == 0) != (self.agreements == self.pairs_checked):
            raise InternalConsistencyError("divergence list disagrees with the agreement count")


def _check_pair_block(args):
    """Classify a contiguous slice of the canonical pair list."""
    tables_by_e, scale_n, start, stop = args
    scale = ChainScale(scale_n)
    uni = {
        e: [Uninorm(OpTable(scale, rows), e) for rows in tables]
        for e, tables in tables_by_e
    }
    order = sorted(uni)
    sizes = {e: len(uni[e]) for e in order}
    pair_cases: dict[str, int] = {}
    dist_cases: dict[str, int] = {}
    agreements = 0
    divergences = []
    k = 0
    for e1 in order:
        for i1 in range(sizes[e1]):
            for e2 in order:
                block = sizes[e2]
                if k + block <= start or k >= stop:
                    k += block
                    continue
                for i2 in range(block):
                    if not start <= k < stop:
                        k += 1
                        continue
                    result = classify_and_check(uni[e1][i1], uni[e2][i2])
                    case = result.case.value
                    pair_cases[case] = pair_cases.get(case, 0) + 1
                    if result.exhaustive.verdict:
                        dist_cases[case] = dist_cases.get(case, 0) + 1
                    if result.agreement:
                        agreements += 1
                    else:
                        divergences.append(PairDivergence(
                            e1, i1, e2, i2, case,
                            result.conditions.verdict, result.exhaustive.verdict,
                            uni[e1][i1].rows, uni[e2][i2].rows,
                        ))
                    k += 1
    return pair_cases, dist_cases, agreements, divergences


def certify(scale: ChainScale, *,
            workers: int = 1,
            max_n: int = DEFAULT_CERTIFY_LIMIT,
            pair_budget: int | None = None) -> CertificationReport:
    """Enumerate every uninorm for every neutral element and classify every
    ordered pair, comparing the case conditions against the exhaustive scan.

    Deterministic for a given scale: counts, ordering and divergence lists
    do not depend on the worker count (only the wall time does).  If a
    ``pair_budget`` is given and the pair space is larger, the canonical
    prefix is checked and the report is marked partial.
    """
    n = scale.n
    if n > max_n:
        raise SearchLimitError(
            f"certification on L_{n} refused: limit is n <= {max_n} "
            f"(pass max_n={n} to override; expect a combinatorial blow-up)"
        )
    started = time.perf_counter()
    stats = SearchStats()
    by_e = []
    for e in range(n + 1):
        task = EnumerationTask(scale, e)
        by_e.append((e, tuple(u.rows for u in enumerate_uninorms(task, max_n=max(max_n, n), stats=stats))))

    counts = tuple((e, len(tables)) for e, tables in by_e)
    total_pairs = sum(c1 * c2 for _, c1 in counts for _, c2 in counts)
    limit = total_pairs if pair_budget is None else min(pair_budget, total_pairs)
    partial = limit < total_pairs

    bounds = []
    if workers <= 1:
        bounds.append((0, limit))
    else:
        step = -(-limit // workers)
        lo = 0
        while lo < limit:
            bounds.append((lo, min(lo + step, limit)))
            lo += step
    jobs = [(by_e, n, lo, hi) for lo, hi in bounds]
    if len(jobs) <= 1 or workers <= 1:
        results = [_check_pair_block(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_pair_block, jobs))

    pair_cases: dict[str, int] = {}
    dist_cases: dict[str, int] = {}
    agreements = 0
    divergences: list[PairDivergence] = []
    for pc, dc, agree, div in results:
        for case, c in pc.items():
            pair_cases[case] = pair_cases.get(case, 0) + c
        for case, c in dc.items():
            dist_cases[case] = dist_cases.get(case, 0) + c
        agreements += agree
        divergences.extend(div)

    case_order = [c.value for c in TheoremCase]
    return CertificationReport(
        scale_n=n,
        uninorm_counts=counts,
        pairs_checked=limit,
        pair_case_counts=tuple((c, pair_cases.get(c, 0)) for c in case_order),
        distributive_case_counts=tuple((c, dist_cases.get(c, 0)) for c in case_order),
        agreements=agreements,
        divergences=tuple(divergences),
        nodes_expanded=stats.nodes_expanded,
        wall_time_s=time.perf_counter() - started,
        partial=partial,
    )


@dataclass(frozen=True)
class PairHit:
    """One distributive pair found by a scan, with its attached evidence."""

    u1: Uninorm
    u2: Uninorm
    classification: ClassifyResult
    necessity: object = None       # CheckReport, for pairs with e1 != e2
    decomposition: Decomposition | None = None


def scan_pairs(scale: ChainScale, e1: int, e2: int, *,
               max_n: int = DEFAULT_CERTIFY_LIMIT) -> list:
    """All distributive pairs (u1 with neutral e1, u2 with neutral e2).

    Each hit carries the classification of both routes; for e1 != e2 also
    the necessity battery, and for proper unequal neutrals the block
    decomposition.
    """
    n = scale.n
    if n > max_n:
        raise SearchLimitError(f"pair scan on L_{n} refused: limit is n <= {max_n}")
    firsts = list(enumerate_uninorms(EnumerationTask(scale, e1), max_n=max(max_n, n)))
    seconds = list(enumerate_uninorms(EnumerationTask(scale, e2), max_n=max(max_n, n)))
    hits = []
    decomposable = e1 != e2 and 0 < min(e1, e2) and max(e1, e2) < n
    for u1 in firsts:
        for u2 in seconds:
            result = classify_and_check(u1, u2)
            if not result.exhaustive.verdict:
                continue
            necessity = necessity_conditions(u1, u2) if e1 != e2 else None
            decomposition = None
            if decomposable and result.conditions.verdict:
                decomposition = decompose(u1, u2)
            hits.append(PairHit(u1, u2, result, necessity, decomposition))
    return hits


def universal_bounds_hold(u: Uninorm) -> bool:
    """Every uninorm distributes over max (e = 0) and over min (e = n)."""
    n = u.n
    rows_max = tuple(tuple(max(x, y) for y in range(n + 1)) for x in range(n + 1))
    rows_min = tuple(tuple(min(x, y) for y in range(n + 1)) for x in range(n + 1))
    over_max = check_distributivity(u, Uninorm(OpTable(u.scale, rows_max), 0))
    over_min = check_distributivity(u, Uninorm(OpTable(u.scale, rows_min), n))
    return over_max.verdict and over_min.verdict
