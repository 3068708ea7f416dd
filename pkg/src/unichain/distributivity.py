"""Distributivity checking and the structural conditions for distributive pairs.

``check_distributivity`` is the exhaustive ground truth: it scans every
triple of the law  u1(x, u2(y,z)) = u2(u1(x,y), u1(x,z)).  The three
``*_conditions`` predicates evaluate the structural characterization for
the matching order of neutral elements (e1 = e2, e1 > e2, e1 < e2);
``classify_and_check`` runs both routes and flags any disagreement as a
theorem divergence, which is a reportable finding, never silently dropped.

Index-range conventions used by the case predicates (all bounds inclusive
unless marked strict):

    equal   (e1 = e2 = e):  off-diagonal region = {x < e < y} and mirror
    greater (e2 < e1):      hypothesis  T2 = min on [0,e2]^2, u2 internal on A(e2)
                            clause i    x in [0,e2), y in [e2,n]
                            side cond.  x0 in [0,e2), y0 in [e1,n]
                            clause ii   x in [0,e2), y in [e2,e1]
                            clause iii  upper block [e2,n]^2, inner neutral e1-e2
    less    (e1 < e2):      hypothesis  S2 = max on [e2,n]^2, u2 internal on A(e2)
                            clause i    x in (e2,n], y in [0,e2]
                            side cond.  x0 in (e2,n], y0 in [0,e1]
                            clause ii   x in (e2,n], y in [e1,e2]
                            clause iii  lower block [0,e2]^2, inner neutral e1
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from functools import lru_cache

import numpy as np

from .core import (
    CheckReport,
    ChainScale,
    OpTable,
    Uninorm,
    Violation,
    WitnessLog,
    underlying_tconorm,
    underlying_tnorm,
    validate_uninorm,
    _restriction,
)
from .errors import (
    CompositionInvalid,
    NotDistributiveError,
    ScaleMismatchError,
    WrongCaseError,
)


class TheoremCase(Enum):
    """Which of the three neutral-element orderings a pair falls under."""

    EQUAL_NEUTRAL = "equal-neutral"
    GREATER_NEUTRAL = "greater-neutral"
    LESS_NEUTRAL = "less-neutral"


class Pick(Enum):
    """Which argument a locally internal operation returns at a point."""

    FIRST = "first"
    SECOND = "second"


def _same_scale(u1: Uninorm, u2: Uninorm) -> None:
    if u1.scale != u2.scale:
        raise ScaleMismatchError(f"operands live on L_{u1.n} and L_{u2.n}")


def case_of(u1: Uninorm, u2: Uninorm) -> TheoremCase:
    _same_scale(u1, u2)
    if u1.e == u2.e:
        return TheoremCase.EQUAL_NEUTRAL
    return TheoremCase.GREATER_NEUTRAL if u1.e > u2.e else TheoremCase.LESS_NEUTRAL


@lru_cache(maxsize=None)
def _pair_grid(m: int):
    # unordered (y, z) pairs; swapping y and z leaves both sides unchanged,
    # so each pair is evaluated once
    return np.triu_indices(m)


def check_distributivity(u1: Uninorm, u2: Uninorm, *, verbose: bool = False) -> CheckReport:
    """Exhaustively test that u1 distributes over u2.

    Witnesses are triples (x, y, z) with y <= z carrying both side values,
    emitted in lexicographic order.
    """
    _same_scale(u1, u2)
    a = u1.table.array
    b = u2.table.array
    ys, zs = _pair_grid(u1.n + 1)
    lhs = a[:, b[ys, zs]]
    rhs = b[a[:, ys], a[:, zs]]
    neq = lhs != rhs
    if not neq.any():
        return CheckReport.ok()
    log = WitnessLog(verbose)
    for x, k in zip(*(w.tolist() for w in np.nonzero(neq))):
        if not log.wants("distributivity"):
            break
        log.add(Violation("distributivity", (x, int(ys[k]), int(zs[k])),
                          lhs=int(lhs[x, k]), rhs=int(rhs[x, k])))
    return log.report()


def verify_ordered_semiring(u1: Uninorm, u2: Uninorm, *, verbose: bool = False) -> CheckReport:
    """Check that (L_n, u2, u1, <=) is a commutative ordered semiring.

    Both operations must satisfy the uninorm axioms (commutativity is
    structural) and u1 must distribute over u2.
    """
    _same_scale(u1, u2)
    violations = []
    for subject, u in (("u1", u1), ("u2", u2)):
        rep = validate_uninorm(u.table, u.e, verbose=verbose)
        violations.extend(replace(v, subject=subject) for v in rep.violations)
    violations.extend(check_distributivity(u1, u2, verbose=verbose).violations)
    return CheckReport.from_violations(violations)


def equal_neutral_conditions(u1: Uninorm, u2: Uninorm, *, verbose: bool = False) -> CheckReport:
    """Structural conditions for distributivity when e1 = e2.

    u2 must be idempotent, and on the off-diagonal region both operations
    must agree and return one of their arguments.
    """
    _same_scale(u1, u2)
    if u1.e != u2.e:
        raise WrongCaseError(f"equal-neutral conditions need e1 = e2, got {u1.e} and {u2.e}")
    e, n = u1.e, u1.n
    log = WitnessLog(verbose)
    for x in range(n + 1):
        if u2(x, x) != x:
            log.add(Violation("idempotency", (x,), lhs=u2(x, x), rhs=x, subject="u2"))
    for x in range(e):
        for y in range(e + 1, n + 1):
            a, b = u1(x, y), u2(x, y)
            if a != b:
                log.add(Violation("agreement", (x, y), lhs=a, rhs=b))
            elif a not in (x, y):
                log.add(Violation("local-internality", (x, y), lhs=a))
    return log.report()


def _upper_inner(u1: Uninorm, e2: int) -> Uninorm:
    # block [e2,n]^2 shifted down by e2; closure must be checked first
    return _restriction(u1, e2, u1.n, u1.e - e2)


def _lower_inner(u1: Uninorm, e2: int) -> Uninorm:
    return _restriction(u1, 0, e2, u1.e)


def greater_neutral_conditions(u1: Uninorm, u2: Uninorm, *, verbose: bool = False) -> CheckReport:
    """Structural conditions for distributivity when e1 > e2.

    The hypothesis class of u2 (underlying t-norm = min, locally internal)
    is checked rather than assumed, so the predicate is total on the case;
    pairs outside the class fail with ``hypothesis-*`` violations.
    Boundary neutral elements degenerate gracefully: empty strips are
    vacuous and for e2 = 0 the inner block is the whole table.
    """
    _same_scale(u1, u2)
    e1, e2, n = u1.e, u2.e, u1.n
    if e1 <= e2:
        raise WrongCaseError(f"greater-neutral conditions need e1 > e2, got {e1} and {e2}")
    log = WitnessLog(verbose)

    for x in range(e2 + 1):
        for y in range(x, e2 + 1):
            if u2(x, y) != x:  # min(x, y) with x <= y
                log.add(Violation("hypothesis-tnorm-min", (x, y), lhs=u2(x, y), rhs=x, subject="u2"))
    for x in range(e2):
        for y in range(e2 + 1, n + 1):
            if u2(x, y) not in (x, y):
                log.add(Violation("hypothesis-local-internality", (x, y), lhs=u2(x, y), subject="u2"))

    for x in range(e2):
        for y in range(e2, n + 1):
            a, b = u1(x, y), u2(x, y)
            if a != b:
                log.add(Violation("clause-i-agreement", (x, y), lhs=a, rhs=b))
            elif a not in (x, y):
                log.add(Violation("clause-i-choice", (x, y), lhs=a))
    for x0 in range(e2):
        for y0 in range(e1, n + 1):
            if u2(x0, y0) == y0 and u2(y0, y0) != y0:
                log.add(Violation("clause-i-side-condition", (x0, y0),
                                  lhs=u2(y0, y0), rhs=y0, subject="u2",
                                  detail="second argument picked at a non-idempotent point"))

    for x in range(e2):
        for y in range(e2, e1 + 1):
            if u1(x, y) != x:
                log.add(Violation("clause-ii-min", (x, y), lhs=u1(x, y), rhs=x, subject="u1"))
            if u2(x, y) != x:
                log.add(Violation("clause-ii-min", (x, y), lhs=u2(x, y), rhs=x, subject="u2"))

    closed = True
    for x in range(e2, n + 1):
        for y in range(x, n + 1):
            if u1(x, y) < e2:
                closed = False
                log.add(Violation("clause-iii-closure", (x, y), lhs=u1(x, y), rhs=e2, subject="u1",
                                  detail="upper block leaks below e2, no inner uninorm exists"))
    if closed:
        inner = _upper_inner(u1, e2)
        inner_report = validate_uninorm(inner.table, inner.e, verbose=verbose)
        if not inner_report.verdict:
            for v in inner_report.violations:
                log.add(replace(v, law=f"clause-iii-inner-{v.law}", subject="u1",
                                detail="indices shifted by -e2 onto the upper subchain"))
        else:
            s2 = underlying_tconorm(u2)
            for v in check_distributivity(inner, s2, verbose=verbose).violations:
                log.add(replace(v, law="clause-iii-distributivity",
                                detail="indices shifted by -e2 onto the upper subchain"))
    return log.report()


def less_neutral_conditions(u1: Uninorm, u2: Uninorm, *, verbose: bool = False) -> CheckReport:
    """Structural conditions for distributivity when e1 < e2.

    Mirror of the greater case under order reversal: u2 must have
    underlying t-conorm = max and be locally internal, both operations
    agree (returning an argument) below e2, equal max on the middle strip,
    and the lower block of u1 forms an inner uninorm distributing over the
    underlying t-norm of u2.
    """
    _same_scale(u1, u2)
    e1, e2, n = u1.e, u2.e, u1.n
    if e1 >= e2:
        raise WrongCaseError(f"less-neutral conditions need e1 < e2, got {e1} and {e2}")
    log = WitnessLog(verbose)

    for x in range(e2, n + 1):
        for y in range(x, n + 1):
            if u2(x, y) != y:  # max(x, y) with x <= y
                log.add(Violation("hypothesis-tconorm-max", (x, y), lhs=u2(x, y), rhs=y, subject="u2"))
    for x in range(e2):
        for y in range(e2 + 1, n + 1):
            if u2(x, y) not in (x, y):
                log.add(Violation("hypothesis-local-internality", (x, y), lhs=u2(x, y), subject="u2"))

    for x in range(e2 + 1, n + 1):
        for y in range(e2 + 1):
            a, b = u1(x, y), u2(x, y)
            if a != b:
                log.add(Violation("clause-i-agreement", (x, y), lhs=a, rhs=b))
            elif a not in (x, y):
                log.add(Violation("clause-i-choice", (x, y), lhs=a))
    for x0 in range(e2 + 1, n + 1):
        for y0 in range(0, e1 + 1):
            if u2(x0, y0) == y0 and u2(y0, y0) != y0:
                log.add(Violation("clause-i-side-condition", (x0, y0),
                                  lhs=u2(y0, y0), rhs=y0, subject="u2",
                                  detail="second argument picked at a non-idempotent point"))

    for x in range(e2 + 1, n + 1):
        for y in range(e1, e2 + 1):
            if u1(x, y) != x:
                log.add(Violation("clause-ii-max", (x, y), lhs=u1(x, y), rhs=x, subject="u1"))
            if u2(x, y) != x:
                log.add(Violation("clause-ii-max", (x, y), lhs=u2(x, y), rhs=x, subject="u2"))

    closed = True
    for x in range(e2 + 1):
        for y in range(x, e2 + 1):
            if u1(x, y) > e2:
                closed = False
                log.add(Violation("clause-iii-closure", (x, y), lhs=u1(x, y), rhs=e2, subject="u1",
                                  detail="lower block leaks above e2, no inner uninorm exists"))
    if closed:
        inner = _lower_inner(u1, e2)
        inner_report = validate_uninorm(inner.table, inner.e, verbose=verbose)
        if not inner_report.verdict:
            for v in inner_report.violations:
                log.add(replace(v, law=f"clause-iii-inner-{v.law}", subject="u1",
                                detail="restricted to the lower subchain"))
        else:
            t2 = underlying_tnorm(u2)
            for v in check_distributivity(inner, t2, verbose=verbose).violations:
                log.add(replace(v, law="clause-iii-distributivity",
                                detail="restricted to the lower subchain"))
    return log.report()


def greater_necessity_conditions(u1: Uninorm, u2: Uninorm, *, verbose: bool = False) -> CheckReport:
    """Necessary consequences of distributivity when e1 > e2.

    Narrower than the full case conditions: only the strip equalities, the
    agreement block (y >= e1 rather than y >= e2), the side-condition and
    the local internality of u2.  Every brute-force-distributive pair must
    satisfy all of them.
    """
    _same_scale(u1, u2)
    e1, e2, n = u1.e, u2.e, u1.n
    if e1 <= e2:
        raise WrongCaseError(f"necessity battery for e1 > e2, got {e1} and {e2}")
    log = WitnessLog(verbose)
    for x in range(e2 + 1):
        for y in range(x, e2 + 1):
            if u2(x, y) != x:
                log.add(Violation("necessity-i-tnorm-min", (x, y), lhs=u2(x, y), rhs=x, subject="u2"))
    for x in range(e2 + 1):  # closed x-range for u1
        for y in range(e2, e1 + 1):
            if u1(x, y) != min(x, y):
                log.add(Violation("necessity-ii-u1-min", (x, y), lhs=u1(x, y), rhs=min(x, y), subject="u1"))
    for x in range(e2):  # strict x-range for u2
        for y in range(e2, e1 + 1):
            if u2(x, y) != x:
                log.add(Violation("necessity-iii-u2-min", (x, y), lhs=u2(x, y), rhs=x, subject="u2"))
    for x in range(e2):
        for y in range(e1, n + 1):
            a, b = u1(x, y), u2(x, y)
            if a != b:
                log.add(Violation("necessity-iv-agreement", (x, y), lhs=a, rhs=b))
            elif a not in (x, y):
                log.add(Violation("necessity-iv-choice", (x, y), lhs=a))
            if b == y and u2(y, y) != y:
                log.add(Violation("necessity-iv-side-condition", (x, y), lhs=u2(y, y), rhs=y, subject="u2"))
    for x in range(e2):
        for y in range(e2 + 1, n + 1):
            if u2(x, y) not in (x, y):
                log.add(Violation("necessity-local-internality", (x, y), lhs=u2(x, y), subject="u2"))
    return log.report()


def less_necessity_conditions(u1: Uninorm, u2: Uninorm, *, verbose: bool = False) -> CheckReport:
    """Necessary consequences of distributivity when e1 < e2 (order-reversed mirror)."""
    _same_scale(u1, u2)
    e1, e2, n = u1.e, u2.e, u1.n
    if e1 >= e2:
        raise WrongCaseError(f"necessity battery for e1 < e2, got {e1} and {e2}")
    log = WitnessLog(verbose)
    for x in range(e2, n + 1):
        for y in range(x, n + 1):
            if u2(x, y) != y:
                log.add(Violation("necessity-i-tconorm-max", (x, y), lhs=u2(x, y), rhs=y, subject="u2"))
    for x in range(e2, n + 1):  # closed x-range for u1
        for y in range(e1, e2 + 1):
            if u1(x, y) != max(x, y):
                log.add(Violation("necessity-ii-u1-max", (x, y), lhs=u1(x, y), rhs=max(x, y), subject="u1"))
    for x in range(e2 + 1, n + 1):  # strict x-range for u2
        for y in range(e1, e2 + 1):
            if u2(x, y) != x:
                log.add(Violation("necessity-iii-u2-max", (x, y), lhs=u2(x, y), rhs=x, subject="u2"))
    for x in range(e2 + 1, n + 1):
        for y in range(e1 + 1):
            a, b = u1(x, y), u2(x, y)
            if a != b:
                log.add(Violation("necessity-iv-agreement", (x, y), lhs=a, rhs=b))
            elif a not in (x, y):
                log.add(Violation("necessity-iv-choice", (x, y), lhs=a))
            if b == y and u2(y, y) != y:
                log.add(Violation("necessity-iv-side-condition", (x, y), lhs=u2(y, y), rhs=y, subject="u2"))
    for x in range(e2):
        for y in range(e2 + 1, n + 1):
            if u2(x, y) not in (x, y):
                log.add(Violation("necessity-local-internality", (x, y), lhs=u2(x, y), subject="u2"))
    return log.report()


def necessity_conditions(u1: Uninorm, u2: Uninorm, *, verbose: bool = False) -> CheckReport:
    """Dispatch the necessity battery on the order of the neutral elements."""
    if u1.e > u2.e:
        return greater_necessity_conditions(u1, u2, verbose=verbose)
    if u1.e < u2.e:
        return less_necessity_conditions(u1, u2, verbose=verbose)
    raise WrongCaseError("necessity batteries apply to pairs with e1 != e2")


_CONDITIONS = {
    TheoremCase.EQUAL_NEUTRAL: equal_neutral_conditions,
    TheoremCase.GREATER_NEUTRAL: greater_neutral_conditions,
    TheoremCase.LESS_NEUTRAL: less_neutral_conditions,
}


@dataclass(frozen=True)
class ClassifyResult:
    """Both verdicts for one pair: structural conditions vs. exhaustive scan.

    Disagreement between the two routes is the single most important output
    this toolkit can produce; it is exposed as an explicit divergence
    record instead of being collapsed into one verdict.
    """

    case: TheoremCase
    conditions: CheckReport
    exhaustive: CheckReport

    @property
    def agreement(self) -> bool:
        return self.conditions.verdict == self.exhaustive.verdict

    @property
    def verdict(self) -> bool:
        """The ground-truth (exhaustive) distributivity verdict."""
        return self.exhaustive.verdict

    def divergence(self) -> Violation | None:
        if self.agreement:
            return None
        return Violation(
            "theorem-divergence", (),
            detail=(f"case {self.case.value}: conditions say {self.conditions.verdict}, "
                    f"exhaustive scan says {self.exhaustive.verdict}"),
        )


def classify_and_check(u1: Uninorm, u2: Uninorm, *, verbose: bool = False) -> ClassifyResult:
    """Pick the case from (e1, e2), run its conditions and the exhaustive scan."""
    case = case_of(u1, u2)
    conditions = _CONDITIONS[case](u1, u2, verbose=verbose)
    exhaustive = check_distributivity(u1, u2, verbose=verbose)
    return ClassifyResult(case, conditions, exhaustive)


@dataclass(frozen=True)
class Decomposition:
    """Block components of a distributive pair with unequal proper neutrals.

    For the greater case: ``inner`` is the upper block of u1 shifted onto
    L_{n-e2} (neutral e1-e2) and ``boundary_op`` the underlying t-conorm of
    u2.  For the less case: ``inner`` is the lower block of u1 on L_{e2}
    (neutral e1) and ``boundary_op`` the underlying t-norm of u2.
    ``selection`` lists (x, y, pick) over the off-diagonal strip in the
    ambient coordinates, recording which argument both operations return.
    """

    case: TheoremCase
    inner: Uninorm
    boundary_op: Uninorm
    selection: tuple

    def __post_init__(self):
        if self.case is TheoremCase.EQUAL_NEUTRAL:
            raise WrongCaseError("equal neutral elements admit no block decomposition")
        object.__setattr__(
            self, "selection",
            tuple(sorted(tuple(self.selection), key=lambda item: (item[0], item[1]))),
        )

    def selection_map(self) -> dict:
        return {(x, y): pick for x, y, pick in self.selection}


def _greater_selection_domain(n: int, e2: int):
    return [(x, y) for x in range(e2) for y in range(e2, n + 1)]


def _less_selection_domain(n: int, e2: int):
    return [(x, y) for x in range(e2 + 1, n + 1) for y in range(e2 + 1)]


def decompose(u1: Uninorm, u2: Uninorm) -> Decomposition:
    """Split a distributive pair with unequal proper neutrals into its blocks.

    Refuses non-distributive pairs (and pairs where the structural
    conditions disagree with the exhaustive scan) with the failing clauses;
    pairs with equal or boundary neutral elements have no block structure
    and raise :class:`WrongCaseError`.
    """
    result = classify_and_check(u1, u2)
    if not (result.conditions.verdict and result.exhaustive.verdict):
        failing = result.conditions.violations + result.exhaustive.violations
        raise NotDistributiveError(CheckReport.from_violations(failing))
    if result.case is TheoremCase.EQUAL_NEUTRAL:
        raise WrongCaseError("equal neutral elements admit no block decomposition")
    e1, e2, n = u1.e, u2.e, u1.n
    if not (0 < min(e1, e2) and max(e1, e2) < n):
        raise WrongCaseError(
            f"decomposition needs proper neutral elements, got e1={e1}, e2={e2} on L_{n}"
        )
    if result.case is TheoremCase.GREATER_NEUTRAL:
        inner = _upper_inner(u1, e2)
        boundary = underlying_tconorm(u2)
        domain = _greater_selection_domain(n, e2)
    else:
        inner = _lower_inner(u1, e2)
        boundary = underlying_tnorm(u2)
        domain = _less_selection_domain(n, e2)
    selection = tuple(
        (x, y, Pick.FIRST if u1(x, y) == x else Pick.SECOND) for x, y in domain
    )
    return Decomposition(result.case, inner, boundary, selection)


def _reject(law: str, witness: tuple, message: str, **kw) -> CompositionInvalid:
    violation = Violation(law, witness, **kw)
    return CompositionInvalid(CheckReport.from_violations([violation]), f"{message}: {violation.describe()}")


def compose(d: Decomposition, scale: ChainScale, e1: int, e2: int):
    """Assemble the candidate pair (u1, u2) from decomposition blocks.

    The block diagram fixes everything except the free corner of u1, which
    is filled canonically (min below e2 in the greater case, max above e2
    in the less case).  Both candidates must pass full axiom validation,
    the case conditions and the exhaustive distributivity scan; an
    arbitrary selection map can break associativity, and a selection that
    picks the second argument at a point where the boundary operation is
    not idempotent is rejected before assembly.
    """
    n = scale.n
    greater = d.case is TheoremCase.GREATER_NEUTRAL
    if greater:
        if not 0 < e2 < e1 < n:
            raise _reject("shape", (e1, e2), "greater case needs 0 < e2 < e1 < n")
        m = n - e2
        if d.inner.n != m or d.inner.e != e1 - e2:
            raise _reject("shape", (d.inner.n, d.inner.e),
                          f"inner must live on L_{m} with neutral {e1 - e2}")
        if d.boundary_op.n != m or d.boundary_op.e != 0:
            raise _reject("shape", (d.boundary_op.n, d.boundary_op.e),
                          f"boundary must be a t-conorm on L_{m}")
        domain = _greater_selection_domain(n, e2)
    else:
        if not 0 < e1 < e2 < n:
            raise _reject("shape", (e1, e2), "less case needs 0 < e1 < e2 < n")
        if d.inner.n != e2 or d.inner.e != e1:
            raise _reject("shape", (d.inner.n, d.inner.e),
                          f"inner must live on L_{e2} with neutral {e1}")
        if d.boundary_op.n != e2 or d.boundary_op.e != e2:
            raise _reject("shape", (d.boundary_op.n, d.boundary_op.e),
                          f"boundary must be a t-norm on L_{e2}")
        domain = _less_selection_domain(n, e2)

    sel = d.selection_map()
    if sorted(sel) != domain or len(sel) != len(d.selection):
        raise _reject("selection-domain", (len(sel),),
                      "selection must cover the off-diagonal strip exactly once")

    if greater:
        for (x, y), pick in sel.items():
            if y <= e1 and pick is Pick.SECOND:
                raise _reject("clause-ii-selection", (x, y),
                              "strip up to e1 is forced to min, cannot pick the second argument")
            if y >= e1 and pick is Pick.SECOND and d.boundary_op(y - e2, y - e2) != y - e2:
                raise _reject("side-condition", (x, y), "second argument picked at a "
                              "point where the boundary operation is not idempotent",
                              lhs=e2 + d.boundary_op(y - e2, y - e2), rhs=y)
    else:
        for (x, y), pick in sel.items():
            if y >= e1 and pick is Pick.SECOND:
                raise _reject("clause-ii-selection", (x, y),
                              "strip down to e1 is forced to max, cannot pick the second argument")
            if y <= e1 and pick is Pick.SECOND and d.boundary_op(y, y) != y:
                raise _reject("side-condition", (x, y), "second argument picked at a "
                              "point where the boundary operation is not idempotent",
                              lhs=d.boundary_op(y, y), rhs=y)

    def strip_value(x, y):
        pick = sel[(x, y)]
        return x if pick is Pick.FIRST else y

    if greater:
        def value1(x, y):
            if x > y:
                x, y = y, x
            if x >= e2:
                return e2 + d.inner(x - e2, y - e2)
            if y >= e2:
                return strip_value(x, y)
            return x  # free corner, canonical min fill

        def value2(x, y):
            if x > y:
                x, y = y, x
            if x >= e2:
                return e2 + d.boundary_op(x - e2, y - e2)
            if y > e1:
                return strip_value(x, y)
            return x  # min on the lower square and on the strip up to e1
    else:
        def value1(x, y):
            if x < y:
                x, y = y, x
            if x <= e2:
                return d.inner(x, y)
            if y <= e2:
                return strip_value(x, y)
            return x  # free corner, canonical max fill

        def value2(x, y):
            if x < y:
                x, y = y, x
            if x <= e2:
                return d.boundary_op(x, y)
            if y < e1:
                return strip_value(x, y)
            return x  # max on the upper square and on the strip down to e1

    table1 = OpTable.from_func(scale, value1)
    table2 = OpTable.from_func(scale, value2)
    for subject, table, e in (("u1", table1, e1), ("u2", table2, e2)):
        rep = validate_uninorm(table, e)
        if not rep.verdict:
            tagged = tuple(replace(v, subject=subject) for v in rep.violations)
            raise CompositionInvalid(CheckReport.from_violations(tagged),
                                     f"assembled {subject} fails the uninorm axioms")
    cand1, cand2 = Uninorm(table1, e1), Uninorm(table2, e2)
    conditions = (greater_neutral_conditions if greater else less_neutral_conditions)(cand1, cand2)
    if not conditions.verdict:
        raise CompositionInvalid(conditions, "assembled pair fails the case conditions")
    exhaustive = check_distributivity(cand1, cand2)
    if not exhaustive.verdict:
        raise CompositionInvalid(exhaustive,
                                 "assembled pair passes the case conditions but fails the "
                                 "exhaustive scan: theorem divergence")
    return cand1, cand2
