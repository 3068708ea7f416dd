"""Exact binary operations on finite chains, with uninorm axiom validation.

The carrier is the finite chain L_n = {0, 1, ..., n}; everything works on
integer indices into that set, so every check is exact.  A uninorm is a
commutative, associative, monotone table over L_n with a neutral element e;
t-norms are the e = n case and t-conorms the e = 0 case.  The off-diagonal
region A(e) is the complement of the squares [0,e]^2 and [e,n]^2, where any
uninorm stays between min and max.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    EmptyRestrictionError,
    InternalConsistencyError,
    InvalidUninormError,
    NotProperError,
    StructureError,
)


@dataclass(frozen=True)
class ChainScale:
    """Resolution of the chain L_n; valid indices are 0..n inclusive."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise StructureError(f"chain resolution must be a positive integer, got {self.n!r}")

    @property
    def size(self) -> int:
        return self.n + 1

    @property
    def points(self) -> range:
        return range(self.n + 1)


@dataclass(frozen=True)
class OpTable:
    """A commutative binary operation on L_n, stored as a full square table.

    Symmetry and index range are enforced at construction; the remaining
    uninorm axioms are checked by :func:`validate_uninorm`.
    """

    scale: ChainScale
    values: tuple  # (n+1) rows of (n+1) chain indices

    def __post_init__(self):
        for violation in _structural_violations(self.values, self.scale.n):
            raise StructureError(violation.describe())

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "OpTable":
        values = tuple(tuple(int(v) for v in row) for row in rows)
        if not values:
            raise StructureError("table has no rows")
        return cls(ChainScale(len(values) - 1), values)

    @classmethod
    def from_func(cls, scale: ChainScale, op) -> "OpTable":
        pts = scale.points
        return cls(scale, tuple(tuple(op(x, y) for y in pts) for x in pts))

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.values, dtype=np.intp)
        arr.setflags(write=False)
        return arr

    def __getitem__(self, xy) -> int:
        x, y = xy
        return self.values[x][y]


@dataclass(frozen=True)
class Uninorm:
    """An operation table together with its neutral element index.

    The plain constructor only checks that ``e`` is a valid index; use
    :meth:`checked` when the table comes from an untrusted source, so the
    neutrality, monotonicity and associativity axioms are verified.
    """

    table: OpTable
    e: int

    def __post_init__(self):
        if not 0 <= self.e <= self.table.scale.n:
            raise StructureError(
                f"neutral index {self.e} outside chain 0..{self.table.scale.n}"
            )

    @classmethod
    def checked(cls, table: OpTable, e: int) -> "Uninorm":
        report = validate_uninorm(table, e)
        if not report.verdict:
            raise InvalidUninormError(report)
        return cls(table, e)

    @property
    def scale(self) -> ChainScale:
        return self.table.scale

    @property
    def n(self) -> int:
        return self.table.scale.n

    @property
    def rows(self) -> tuple:
        return self.table.values

    def __call__(self, x: int, y: int) -> int:
        return self.table.values[x][y]

    @property
    def is_tnorm(self) -> bool:
        return self.e == self.n

    @property
    def is_tconorm(self) -> bool:
        return self.e == 0

    @property
    def is_proper(self) -> bool:
        return 0 < self.e < self.n


class RegionTag(Enum):
    """Position of a point relative to the two squares around the neutral element."""

    LOWER_SQUARE = "lower-square"
    UPPER_SQUARE = "upper-square"
    OFF_DIAGONAL = "off-diagonal"


@dataclass(frozen=True)
class Violation:
    """One witnessed law failure.

    ``witness`` holds the chain indices that reproduce the failure when
    replayed against the inputs; ``lhs``/``rhs`` hold the two observed (or
    observed vs. expected) values where that makes sense.
    """

    law: str
    witness: tuple
    lhs: int | None = None
    rhs: int | None = None
    subject: str = ""
    detail: str = ""

    def describe(self) -> str:
        where = ",".join(str(i) for i in self.witness)
        who = f"{self.subject}: " if self.subject else ""
        vals = ""
        if self.lhs is not None or self.rhs is not None:
            vals = f" [lhs={self.lhs} rhs={self.rhs}]"
        note = f" ({self.detail})" if self.detail else ""
        return f"{who}{self.law} at ({where}){vals}{note}"


@dataclass(frozen=True)
class CheckReport:
    """Verdict of a law check plus the witnesses for every failed law."""

    verdict: bool
    violations: tuple = ()

    def __post_init__(self):
        if self.verdict != (len(self.violations) == 0):
            raise InternalConsistencyError("report verdict disagrees with its violations")

    @classmethod
    def ok(cls) -> "CheckReport":
        return cls(True, ())

    @classmethod
    def from_violations(cls, violations: Iterable[Violation]) -> "CheckReport":
        vs = tuple(violations)
        return cls(len(vs) == 0, vs)

    def laws_violated(self) -> tuple:
        seen = []
        for v in self.violations:
            if v.law not in seen:
                seen.append(v.law)
        return tuple(seen)


class WitnessLog:
    """Collects violations, keeping only the first one per law unless verbose."""

    def __init__(self, verbose: bool = False):
        self.verbose = verbose
        self._items: list[Violation] = []
        self._laws_seen: set[str] = set()

    def add(self, violation: Violation) -> None:
        key = (violation.subject, violation.law)
        if self.verbose or key not in self._laws_seen:
            self._laws_seen.add(key)
            self._items.append(violation)

    def wants(self, law: str, subject: str = "") -> bool:
        return self.verbose or (subject, law) not in self._laws_seen

    def report(self) -> CheckReport:
        return CheckReport.from_violations(self._items)


def region_of(x: int, y: int, e: int) -> RegionTag:
    """Classify a point against the squares around e.

    Boundary lines x = e and y = e belong to the squares, so the
    off-diagonal region is exactly {x < e < y} union {y < e < x}.
    """
    if x <= e and y <= e:
        return RegionTag.LOWER_SQUARE
    if x >= e and y >= e:
        return RegionTag.UPPER_SQUARE
    return RegionTag.OFF_DIAGONAL


def _structural_violations(values, n: int) -> Iterator[Violation]:
    if len(values) != n + 1:
        yield Violation("structure", (len(values),), detail=f"expected {n + 1} rows, got {len(values)}")
        return
    for x, row in enumerate(values):
        if len(row) != n + 1:
            yield Violation("structure", (x,), detail=f"row {x} has {len(row)} entries, expected {n + 1}")
            return
    for x, row in enumerate(values):
        for y, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool):
                yield Violation("structure", (x, y), detail=f"entry {v!r} is not an integer")
            elif not 0 <= v <= n:
                yield Violation("structure", (x, y), lhs=v, detail=f"entry out of range 0..{n}")
    for x in range(n + 1):
        for y in range(x + 1, n + 1):
            if values[x][y] != values[y][x]:
                yield Violation("structure", (x, y), lhs=values[x][y], rhs=values[y][x],
                                detail="table is not symmetric")


def validate_uninorm(table, e: int, *, verbose: bool = False) -> CheckReport:
    """Check the uninorm axioms for (table, e).

    ``table`` may be an :class:`OpTable` or raw nested sequences; malformed
    raw input is reported as ``structure`` violations rather than raised.
    Axioms are scanned in the order neutrality, monotonicity, associativity;
    by default only the first witness per law is kept (all under ``verbose``).
    """
    log = WitnessLog(verbose)
    if isinstance(table, OpTable):
        values = table.values
        n = table.scale.n
    else:
        values = tuple(tuple(v for v in row) for row in table)
        n = len(values) - 1
        if n < 1:
            return CheckReport.from_violations(
                [Violation("structure", (len(values),), detail="table needs at least 2 rows")]
            )
        structural = list(_structural_violations(values, n))
        if structural:
            for v in structural:
                log.add(v)
            return log.report()
    if not 0 <= e <= n:
        log.add(Violation("structure", (e,), detail=f"neutral index outside chain 0..{n}"))
        return log.report()

    arr = table.array if isinstance(table, OpTable) else np.array(values, dtype=np.intp)
    idx = np.arange(n + 1)

    bad = np.nonzero(arr[e] != idx)[0]
    for x in bad:
        if not log.wants("neutrality"):
            break
        log.add(Violation("neutrality", (int(x),), lhs=int(arr[e, x]), rhs=int(x)))

    drop = arr[:-1, :] > arr[1:, :]
    if drop.any():
        for x, y in np.argwhere(drop):
            if not log.wants("monotonicity"):
                break
            log.add(Violation("monotonicity", (int(x), int(x) + 1, int(y)),
                              lhs=int(arr[x, y]), rhs=int(arr[x + 1, y])))

    # (x*y)*z vs x*(y*z); swapping x and z yields the mirrored equation, so
    # reporting is restricted to x <= z.
    left = arr[arr, :]
    right = arr[:, arr]
    neq = left != right
    if neq.any():
        xs, ys, zs = np.nonzero(neq)
        for x, y, z in sorted(zip(xs.tolist(), ys.tolist(), zs.tolist())):
            if x > z:
                continue
            if not log.wants("associativity"):
                break
            log.add(Violation("associativity", (x, y, z),
                              lhs=int(arr[arr[x, y], z]), rhs=int(arr[x, arr[y, z]])))
    return log.report()


def is_idempotent(u: Uninorm) -> bool:
    """True iff u(x, x) = x for every x."""
    return all(u(x, x) == x for x in u.scale.points)


def is_locally_internal(u: Uninorm) -> bool:
    """True iff u(x, y) is one of its arguments everywhere on A(e)."""
    e, n = u.e, u.n
    for x in range(e):
        for y in range(e + 1, n + 1):
            if u(x, y) not in (x, y):
                return False
    return True


def is_conjunctive(u: Uninorm) -> bool:
    """True iff the proper uninorm u annihilates at u(0, n) = 0.

    A valid proper uninorm can only take 0 or n there; anything else is a
    bug in the caller's table, not a property of the input space.
    """
    if not u.is_proper:
        raise NotProperError(f"conjunctive/disjunctive split needs 0 < e < n, got e={u.e}, n={u.n}")
    v = u(0, u.n)
    if v == 0:
        return True
    if v == u.n:
        return False
    raise InternalConsistencyError(f"valid proper uninorm has u(0,n)={v}, expected 0 or {u.n}")


def dual(u: Uninorm) -> Uninorm:
    """Conjugate by the order reversal x -> n - x; swaps t-norms and t-conorms."""
    n = u.n
    rows = tuple(tuple(n - u(n - x, n - y) for y in u.scale.points) for x in u.scale.points)
    return Uninorm(OpTable(u.scale, rows), n - u.e)


def _restriction(u: Uninorm, lo: int, hi: int, new_e: int) -> Uninorm:
    pts = range(lo, hi + 1)
    rows = tuple(tuple(u(x, y) - lo for y in pts) for x in pts)
    return Uninorm(OpTable(ChainScale(hi - lo), rows), new_e)


def underlying_tnorm(u: Uninorm) -> Uninorm:
    """The restriction of u to [0, e]^2 as a t-norm on L_e (identity reindex)."""
    if u.e < 1:
        raise EmptyRestrictionError("no lower square: neutral element is 0")
    return _restriction(u, 0, u.e, u.e)


def underlying_tconorm(u: Uninorm) -> Uninorm:
    """The restriction of u to [e, n]^2 as a t-conorm on L_{n-e} (shift by -e)."""
    if u.e > u.n - 1:
        raise EmptyRestrictionError("no upper square: neutral element is n")
    return _restriction(u, u.e, u.n, 0)
