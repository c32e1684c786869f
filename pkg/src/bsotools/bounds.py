"""Registry of BSO inequalities, evaluated numerically with equality classification.

Each bound compares ``lhs <= rhs`` (or ``lhs == rhs`` for the regular-graph
identity). Equality is *detected* from the numbers and *predicted* from the
structure of the graph (regular, or semiregular bipartite); a report keeps
both so disagreement is visible instead of resolved in either direction.
"""

from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable

from .graph import DegreeSummary, DomainError, Graph, complement, degree_summary
from .indices import IndexKind, all_indices, edge_sum

DEFAULT_TOL = 1e-9
SQRT2 = math.sqrt(2.0)


class BoundId(str, enum.Enum):
    T3_1_LOWER = "T3.1-lower"
    T3_1_UPPER = "T3.1-upper"
    T3_2 = "T3.2"
    T3_3_LOWER = "T3.3-lower"
    T3_3_UPPER = "T3.3-upper"
    T3_4 = "T3.4"
    T3_5_LOWER = "T3.5-lower"
    T3_5_UPPER = "T3.5-upper"
    T3_6_LOWER = "T3.6-lower"
    T3_6_UPPER = "T3.6-upper"
    T3_7 = "T3.7"
    C3_5 = "C3.5"
    T3_8 = "T3.8"
    T3_9 = "T3.9"
    C3_6 = "C3.6"
    C3_7 = "C3.7"
    T3_10 = "T3.10"
    C3_8 = "C3.8"
    T3_11_LOWER = "T3.11-lower"
    T3_11_UPPER = "T3.11-upper"
    T3_12 = "T3.12"
    C3_1 = "C3.1"
    C3_2 = "C3.2"
    C3_3_LOWER = "C3.3-lower"
    C3_3_UPPER = "C3.3-upper"
    C3_4_LOWER = "C3.4-lower"
    C3_4_UPPER = "C3.4-upper"


class EqualityCondition(str, enum.Enum):
    REGULAR = "Regular"
    REGULAR_OR_SEMIREGULAR_BIPARTITE = "RegularOrSemiregularBipartite"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class BoundReport:
    id: BoundId
    lhs: float | None
    rhs: float | None
    slack: float | None
    holds: bool
    equality_detected: bool
    equality_predicted: bool
    consistent: bool
    skipped: bool = False
    skip_reason: str | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["id"] = self.id.value
        return d


FIELDS = tuple(BoundReport.__dataclass_fields__)


# ---------------------------------------------------------------------------
# scalar helpers


def euclidean_norm_bracket(a: float, b: float) -> tuple[float, float, float]:
    """Return ``(lower, sqrt(a^2+b^2), upper)`` for positive ``a, b``.

    ``lower = 2*sqrt(2)*(a^2+b^2+ab) / (3(a+b))`` and
    ``upper = sqrt(2)*(a^2+b^2) / (a+b)``; all three coincide iff ``a == b``.
    """
    if a <= 0 or b <= 0:
        raise ValueError("a and b must be positive")
    s = a * a + b * b
    return 2.0 * SQRT2 * (s + a * b) / (3.0 * (a + b)), math.sqrt(s), SQRT2 * s / (a + b)


def split_factor(m: int) -> Fraction:
    """``(1/4)(1 - (1 + (-1)^(m+1)) / (2 m^2))``, exactly."""
    if m < 1:
        raise ValueError("m must be positive")
    sign = 1 if (m + 1) % 2 == 0 else -1
    return Fraction(1, 4) * (1 - Fraction(1 + sign, 2 * m * m))


def split_factor_floor(m: int) -> Fraction:
    """``(1/m) floor(m/2) (1 - (1/m) floor(m/2))``, exactly."""
    if m < 1:
        raise ValueError("m must be positive")
    half = Fraction(m // 2, m)
    return half * (1 - half)


def _split_factor_checked(m: int) -> float:
    closed = split_factor(m)
    assert closed == split_factor_floor(m), f"split factor forms disagree at m={m}"
    return float(closed)


# ---------------------------------------------------------------------------
# evaluation context


class _Quantities:
    """Everything the registry reads from one graph, computed once."""

    def __init__(self, g: Graph, summary: DegreeSummary):
        self.g = g
        self.s = summary
        self.n = summary.n
        self.m = summary.m
        self.hi = summary.max_degree
        self.lo = summary.min_degree
        self.ix = all_indices(g)

    @cached_property
    def complement_bso(self) -> float:
        return edge_sum(complement(self.g), IndexKind.BSO)

    @property
    def complement_size(self) -> float:
        return (self.n * (self.n - 1) - 2 * self.m) / 2.0


Evaluator = Callable[[_Quantities], tuple[float, float]]
Precondition = Callable[[_Quantities], "str | None"]


def _needs_regular(q: _Quantities) -> str | None:
    return None if q.s.is_regular else "not-regular"


def _needs_unicyclic(q: _Quantities) -> str | None:
    return None if q.m == q.n else "not-unicyclic"


def _needs_complement_degree(q: _Quantities) -> str | None:
    return None if q.hi <= q.n - 2 else "complement-zero-degree"


@dataclass(frozen=True)
class _Bound:
    id: BoundId
    condition: EqualityCondition
    evaluate: Evaluator
    requires: tuple[Precondition, ...] = ()
    identity: bool = False


def _registry() -> dict[BoundId, _Bound]:
    B, R, RS, NA = BoundId, EqualityCondition.REGULAR, EqualityCondition.REGULAR_OR_SEMIREGULAR_BIPARTITE, EqualityCondition.NOT_APPLICABLE
    K = IndexKind

    def ix(q: _Quantities, k: IndexKind) -> float:
        return q.ix[k]

    def c36(q):
        # The relaxation of T3.9 via SDD <= m(D/d + d/D)/2, M2* <= m/d^2, SO >= sqrt(2) m d.
        hi, lo = q.hi, q.lo
        return ix(q, K.BSO), (q.m * (hi * hi * lo + lo ** 3) + hi * ix(q, K.F)) / (2 * SQRT2 * hi * lo ** 3)

    def c37(q):
        hi, lo = q.hi, q.lo
        return ix(q, K.BSO), q.m ** 2 * (2 * hi ** 3 + hi * hi * lo + lo ** 3) / (2 * hi * lo * lo * ix(q, K.SO))

    def c38(q):
        hi, lo, m = q.hi, q.lo, q.m
        num = m * m * hi * hi + m * m * lo * lo + 4 * m * hi * ix(q, K.ISI)
        return ix(q, K.BSO), num / (2 * SQRT2 * hi * lo * lo * ix(q, K.GA))

    def t312(q):
        hi, lo, m = q.hi, q.lo, q.m
        lhs = abs(ix(q, K.BSO) / m - ix(q, K.SO) * ix(q, K.M2STAR) / (m * m))
        rhs = _split_factor_checked(m) * SQRT2 * (hi + lo) * (hi - lo) ** 2 / (hi * hi * lo * lo)
        return lhs, rhs

    def c33_upper(q):
        rhs = SQRT2 * (q.m / q.lo + q.complement_size / (q.n - 1 - q.hi))
        return ix(q, K.BSO) + q.complement_bso, rhs

    def c34_upper(q):
        rhs = 2 * q.n - (2 - SQRT2) * (q.m / q.hi + q.complement_size / (q.n - 1 - q.lo))
        return ix(q, K.BSO) + q.complement_bso, rhs

    bounds = [
        _Bound(B.T3_1_LOWER, R, lambda q: (q.n / SQRT2, ix(q, K.BSO))),
        _Bound(B.T3_1_UPPER, R, lambda q: (ix(q, K.BSO), SQRT2 * q.m / q.lo)),
        _Bound(B.T3_2, R, lambda q: (ix(q, K.BSO), q.n - q.m * (2 - SQRT2) / q.hi)),
        _Bound(B.T3_3_LOWER, R, lambda q: (SQRT2 * ix(q, K.R), ix(q, K.BSO))),
        _Bound(B.T3_3_UPPER, R, lambda q: (ix(q, K.BSO), SQRT2 * q.hi * ix(q, K.M2STAR))),
        _Bound(B.T3_4, RS, lambda q: (ix(q, K.BSO), math.sqrt(q.m * ix(q, K.ID)))),
        _Bound(B.T3_5_LOWER, R, lambda q: (SQRT2 * ix(q, K.H), ix(q, K.BSO))),
        _Bound(
            B.T3_5_UPPER,
            R,
            lambda q: (ix(q, K.BSO), (q.hi / q.lo + q.lo / q.hi) * ix(q, K.H) / SQRT2),
        ),
        _Bound(
            B.T3_6_LOWER,
            R,
            lambda q: (2 * SQRT2 / (3 * q.hi) * ix(q, K.SDD) + SQRT2 / 3 * ix(q, K.H), ix(q, K.BSO)),
        ),
        _Bound(B.T3_6_UPPER, R, lambda q: (ix(q, K.BSO), SQRT2 / q.lo * ix(q, K.SDD))),
        _Bound(B.T3_7, RS, lambda q: (ix(q, K.BSO), math.sqrt(2 * ix(q, K.M2STAR) * ix(q, K.SDD)))),
        _Bound(
            B.C3_5,
            RS,
            lambda q: (ix(q, K.BSO), math.sqrt(q.m * ix(q, K.M2STAR) * (q.hi / q.lo + q.lo / q.hi))),
        ),
        _Bound(
            B.T3_8,
            R,
            lambda q: (
                SQRT2 / (q.hi ** 3 + q.lo ** 3) * (q.m * q.lo ** 3 / q.hi + ix(q, K.F) / 2),
                ix(q, K.BSO),
            ),
        ),
        _Bound(
            B.T3_9,
            RS,
            lambda q: (
                ix(q, K.BSO),
                (2 * q.m * ix(q, K.SDD) + ix(q, K.M2STAR) * ix(q, K.F)) / (2 * ix(q, K.SO)),
            ),
        ),
        _Bound(B.C3_6, R, c36),
        _Bound(B.C3_7, R, c37),
        _Bound(
            B.T3_10,
            R,
            lambda q: (
                ix(q, K.BSO),
                (ix(q, K.H) * ix(q, K.SDD) + 2 * ix(q, K.M2STAR) * ix(q, K.ISI)) / (SQRT2 * ix(q, K.GA)),
            ),
        ),
        _Bound(B.C3_8, R, c38),
        _Bound(B.T3_11_LOWER, R, lambda q: (2 * q.m ** 2 / ix(q, K.SO), ix(q, K.BSO))),
        _Bound(B.T3_11_UPPER, R, lambda q: (ix(q, K.BSO), ix(q, K.SO) / q.lo ** 2)),
        _Bound(B.T3_12, NA, t312),
        _Bound(B.C3_1, NA, lambda q: (ix(q, K.BSO), q.n / SQRT2), (_needs_regular,), identity=True),
        _Bound(B.C3_2, NA, lambda q: (q.n / SQRT2, ix(q, K.BSO)), (_needs_unicyclic,)),
        _Bound(
            B.C3_3_LOWER,
            R,
            lambda q: (SQRT2 * q.n, ix(q, K.BSO) + q.complement_bso),
            (_needs_complement_degree,),
        ),
        _Bound(B.C3_3_UPPER, R, c33_upper, (_needs_complement_degree,)),
        _Bound(
            B.C3_4_LOWER,
            R,
            lambda q: (SQRT2 * q.n, ix(q, K.BSO) + q.complement_bso),
            (_needs_complement_degree,),
        ),
        _Bound(B.C3_4_UPPER, R, c34_upper, (_needs_complement_degree,)),
    ]
    return {b.id: b for b in bounds}


REGISTRY: dict[BoundId, _Bound] = _registry()
assert list(REGISTRY) == list(BoundId)


def equality_condition(bound_id: BoundId | str) -> EqualityCondition:
    return REGISTRY[BoundId(bound_id)].condition


def predict_equality(condition: EqualityCondition, summary: DegreeSummary) -> bool:
    if condition is EqualityCondition.REGULAR:
        return summary.is_regular
    if condition is EqualityCondition.REGULAR_OR_SEMIREGULAR_BIPARTITE:
        return summary.is_regular or summary.is_semiregular_bipartite
    return False


# ---------------------------------------------------------------------------
# evaluation


def _base_check(summary: DegreeSummary) -> str | None:
    if not summary.is_connected:
        return "disconnected"
    if summary.m == 0 or summary.min_degree == 0:
        return "zero-degree"
    return None


def _report(bound: _Bound, q: _Quantities, tol: float) -> BoundReport:
    lhs, rhs = bound.evaluate(q)
    slack = rhs - lhs
    scale = tol * max(1.0, abs(rhs))
    detected = abs(slack) <= scale
    holds = detected if bound.identity else slack >= -scale
    if bound.condition is EqualityCondition.NOT_APPLICABLE:
        predicted, consistent = False, True
    else:
        predicted = predict_equality(bound.condition, q.s)
        consistent = detected == predicted
    return BoundReport(bound.id, lhs, rhs, slack, holds, detected, predicted, consistent)


def _skipped(bound_id: BoundId, reason: str) -> BoundReport:
    return BoundReport(bound_id, None, None, None, False, False, False, True, True, reason)


def _quantities(g: Graph) -> _Quantities:
    summary = degree_summary(g)
    code = _base_check(summary)
    if code is not None:
        raise DomainError(code)
    return _Quantities(g, summary)


def evaluate_bound(g: Graph, bound_id: BoundId | str, tol: float = DEFAULT_TOL) -> BoundReport:
    """Evaluate one inequality on ``g``.

    Raises :class:`DomainError` when a precondition fails; its ``code`` tells
    which one.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    bound = REGISTRY[BoundId(bound_id)]
    q = _quantities(g)
    for check in bound.requires:
        code = check(q)
        if code is not None:
            raise DomainError(code)
    return _report(bound, q, tol)


def check_all_bounds(g: Graph, tol: float = DEFAULT_TOL, ids: Iterable[BoundId] | None = None) -> list[BoundReport]:
    """One report per registered bound; failed preconditions become skipped rows."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    selected = list(BoundId) if ids is None else [BoundId(i) for i in ids]
    try:
        q = _quantities(g)
    except DomainError as exc:
        return [_skipped(b, exc.code) for b in selected]
    reports = []
    for bound_id in selected:
        bound = REGISTRY[bound_id]
        reason = next((c for c in (check(q) for check in bound.requires) if c is not None), None)
        reports.append(_skipped(bound_id, reason) if reason else _report(bound, q, tol))
    return reports
