"""Free and chemical tree enumeration, extremal search and closed forms for trees.

Trees are produced from canonical level sequences (the constant amortized
time scheme of Wright, Richmond, Odlyzko and McKay): each free tree is
rooted at its centre and emitted exactly once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .graph import Graph, to_graph6
from .indices import IndexKind, edge_sum

MAX_ORDER = 20
CHEMICAL_MAX_DEGREE = 4
DEFAULT_TOL = 1e-9

SQRT2 = math.sqrt(2.0)
SQRT5 = math.sqrt(5.0)
SQRT17 = math.sqrt(17.0)


# ---------------------------------------------------------------------------
# level sequences


def _split(layout: list[int]) -> tuple[list[int], list[int]]:
    """Split a rooted level sequence into the first principal subtree and the rest."""
    m = len(layout)
    seen_one = False
    for i in range(1, len(layout)):
        if layout[i] == 1:
            if seen_one:
                m = i
                break
            seen_one = True
    left = [x - 1 for x in layout[1:m]]
    rest = [0] + layout[m:]
    return left, rest


def _next_rooted(layout: list[int], p: int | None = None) -> list[int] | None:
    """Next rooted level sequence in reverse lexicographic order, or None."""
    if p is None:
        p = len(layout) - 1
        while layout[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while layout[q] != layout[p] - 1:
        q -= 1
    out = list(layout)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _next_free(candidate: list[int]) -> list[int]:
    """Advance ``candidate`` to the nearest sequence that is centre-rooted canonical."""
    left, rest = _split(candidate)
    lh, rh = max(left), max(rest)
    valid = rh >= lh
    if valid and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            valid = False
    if valid:
        return candidate
    p = len(left)
    nxt = _next_rooted(candidate, p)
    if candidate[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[-len(tail):] = tail
    return nxt


def level_sequences(n: int) -> Iterator[list[int]]:
    """Yield one canonical level sequence per free tree of order ``n``."""
    if n == 1:
        yield [0]
        return
    layout: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        layout = _next_free(layout)
        yield layout
        layout = _next_rooted(layout)


def level_sequence_edges(layout: list[int]) -> list[tuple[int, int]]:
    edges = []
    last_at_level: list[int] = []
    for v, level in enumerate(layout):
        del last_at_level[level:]
        if level:
            edges.append((last_at_level[level - 1], v))
        last_at_level.append(v)
    return edges


def _max_degree(layout: list[int]) -> int:
    deg = [0] * len(layout)
    for u, v in level_sequence_edges(layout):
        deg[u] += 1
        deg[v] += 1
    return max(deg)


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"tree order must be in 1..{MAX_ORDER}, got {n}")


def enumerate_trees(n: int) -> Iterator[Graph]:
    """All free trees of order ``n``, one per isomorphism class, in a fixed order."""
    _check_order(n)
    for layout in level_sequences(n):
        yield Graph(n, level_sequence_edges(layout))


def enumerate_chemical_trees(n: int) -> Iterator[Graph]:
    """Free trees of order ``n`` with maximum degree at most 4."""
    _check_order(n)
    for layout in level_sequences(n):
        if _max_degree(layout) > CHEMICAL_MAX_DEGREE:
            continue
        tree = Graph(n, level_sequence_edges(layout))
        assert max(tree.degrees) <= CHEMICAL_MAX_DEGREE
        yield tree


def count_trees(n: int, chemical: bool = False) -> int:
    gen = enumerate_chemical_trees(n) if chemical else enumerate_trees(n)
    return sum(1 for _ in gen)


# ---------------------------------------------------------------------------
# closed forms


def path_bso_closed_form(n: int) -> float:
    """BSO of the path on ``n >= 3`` vertices: ``sqrt(2)(n-3)/2 + sqrt(5)``."""
    if n < 3:
        raise ValueError("path closed form needs n >= 3")
    return SQRT2 * (n - 3) / 2 + SQRT5


def star_bso_closed_form(n: int) -> float:
    """BSO of the star ``K_{1,n-1}``: ``sqrt(1 + (n-1)^2)``."""
    if n < 2:
        raise ValueError("star closed form needs n >= 2")
    return math.sqrt(1 + (n - 1) ** 2)


def chemical_bso_upper_bound(n: int) -> float:
    """Upper bound on BSO over chemical trees of order ``n``.

    Only certified for ``n >= 5`` with ``n - 2`` divisible by 3; there the
    maximisers are exactly the trees whose degrees are all 1 or 4.
    """
    if n < 5 or (n - 2) % 3:
        raise ValueError(f"chemical bound is certified only for n >= 5 with n = 2 (mod 3), got n={n}")
    return (2 * SQRT17 * (n + 1) + SQRT2 * (n - 5)) / 12


def path_excess_term(x: int, y: int) -> float:
    """Per-edge excess of a ``(x, y)`` edge over the path value, after eliminating
    ``m_{1,2}`` and ``m_{2,2}``. Zero at (1,2) and (2,2), positive on other types."""
    if not (isinstance(x, int) and isinstance(y, int)) or not 1 <= x <= y:
        raise ValueError("need integers 1 <= x <= y")
    return math.sqrt(1 / x**2 + 1 / y**2) + (SQRT2 - SQRT5) * (x + y) / (x * y) + SQRT5 - 1.5 * SQRT2


def star_excess_term(x: int, y: int, max_degree: int) -> float:
    """Per-edge deficit of a ``(x, y)`` edge after eliminating ``m_{1,D}`` and
    ``m_{D,D}`` (``D = max_degree``). Zero at (1,D) and (D,D), negative otherwise."""
    d = max_degree
    if not all(isinstance(v, int) for v in (x, y, d)) or d < 2 or not 1 <= x <= y <= d:
        raise ValueError("need integers 1 <= x <= y <= max_degree, max_degree >= 2")
    r = math.sqrt(d * d + 1)
    return (
        math.sqrt(1 / x**2 + 1 / y**2)
        + (SQRT2 - r) / (d - 1) * (x + y) / (x * y)
        + (2 * r - SQRT2 * (d + 1)) / (d * (d - 1))
    )


def star_family_bound(x: float, n: int) -> float:
    """BSO of any ``n``-vertex tree with degrees in {1, x} as a function of real ``x``.

    Equals the path value at ``x = 2`` and the star value at ``x = n - 1``.
    """
    if x < 2 or n < 3:
        raise ValueError("need x >= 2 and n >= 3")
    r = math.sqrt(x * x + 1)
    return ((x - 2) * n * r + SQRT2 * (n - x - 1) + 2 * r) / (x * (x - 1))


# ---------------------------------------------------------------------------
# extremal search


@dataclass(frozen=True)
class TreeFamily:
    n: int
    chemical: bool = False

    def trees(self) -> Iterator[Graph]:
        return enumerate_chemical_trees(self.n) if self.chemical else enumerate_trees(self.n)


@dataclass
class _Extreme:
    """Running extreme with all candidates within tolerance of it."""

    sign: int  # +1 tracks the maximum, -1 the minimum
    tol: float
    value: float | None = None
    hits: list[tuple[float, Graph]] = field(default_factory=list)

    def _close(self, a: float, b: float) -> bool:
        return abs(a - b) <= self.tol * max(1.0, abs(b))

    def push(self, value: float, tree: Graph) -> None:
        if self.value is None or self.sign * (value - self.value) > 0:
            self.value = value
            self.hits = [h for h in self.hits if self._close(h[0], value)]
        if self._close(value, self.value):
            self.hits.append((value, tree))

    def merge(self, other: "_Extreme") -> "_Extreme":
        out = _Extreme(self.sign, self.tol)
        for value, tree in self.hits + other.hits:
            out.push(value, tree)
        return out


@dataclass
class ExtremalResult:
    family: TreeFamily
    index: IndexKind
    min_value: float
    max_value: float
    min_trees: list[Graph]
    max_trees: list[Graph]
    tree_count: int
    closed_form_min: float | None = None
    closed_form_max: float | None = None
    chemical_upper_bound: float | None = None

    def _matches(self, found: float, closed: float | None, tol: float = DEFAULT_TOL) -> bool | None:
        if closed is None:
            return None
        return abs(found - closed) <= tol * max(1.0, abs(closed))

    @property
    def closed_form_min_matches(self) -> bool | None:
        return self._matches(self.min_value, self.closed_form_min)

    @property
    def closed_form_max_matches(self) -> bool | None:
        return self._matches(self.max_value, self.closed_form_max)

    def to_dict(self) -> dict:
        d = {
            "n": self.family.n,
            "chemical": self.family.chemical,
            "index": self.index.value,
            "min_value": self.min_value,
            "max_value": self.max_value,
            "closed_form_min": self.closed_form_min,
            "closed_form_max": self.closed_form_max,
            "min_trees": [to_graph6(t) for t in self.min_trees],
            "max_trees": [to_graph6(t) for t in self.max_trees],
            "tree_count": self.tree_count,
            "closed_form_min_matches": self.closed_form_min_matches,
            "closed_form_max_matches": self.closed_form_max_matches,
        }
        if self.chemical_upper_bound is not None:
            d["chemical_upper_bound"] = self.chemical_upper_bound
            d["chemical_bound_holds"] = self.max_value <= self.chemical_upper_bound * (1 + DEFAULT_TOL)
            d["chemical_bound_attained"] = self._matches(self.max_value, self.chemical_upper_bound)
        return d


def _search(trees: Iterable[Graph], index: IndexKind, tol: float) -> tuple[_Extreme, _Extreme, int]:
    lo, hi = _Extreme(-1, tol), _Extreme(+1, tol)
    count = 0
    for tree in trees:
        value = edge_sum(tree, index)
        lo.push(value, tree)
        hi.push(value, tree)
        count += 1
    return lo, hi, count


def extremal_search(family: TreeFamily, index: IndexKind | str = IndexKind.BSO, tol: float = DEFAULT_TOL) -> ExtremalResult:
    """Exhaustive minimum and maximum of ``index`` over ``family``, with every
    attaining tree (up to isomorphism)."""
    index = IndexKind.parse(index) if isinstance(index, str) else index
    if family.n < 2:
        raise ValueError("trees of order 1 have no edges; need n >= 2")
    _check_order(family.n)
    lo, hi, count = _search(family.trees(), index, tol)
    result = ExtremalResult(
        family=family,
        index=index,
        min_value=lo.value,
        max_value=hi.value,
        min_trees=[t for _, t in lo.hits],
        max_trees=[t for _, t in hi.hits],
        tree_count=count,
    )
    if index is IndexKind.BSO and family.n >= 3:
        if not family.chemical:
            result.closed_form_min = path_bso_closed_form(family.n)
            result.closed_form_max = star_bso_closed_form(family.n)
        elif family.n >= 5 and (family.n - 2) % 3 == 0:
            result.chemical_upper_bound = chemical_bso_upper_bound(family.n)
    return result


@dataclass(frozen=True)
class ChemicalBoundCheck:
    n: int
    bound: float
    max_value: float
    tree_count: int
    violations: int
    attaining: int
    only_degrees_1_and_4: int
    iff_holds: bool

    @property
    def passed(self) -> bool:
        return self.violations == 0 and self.iff_holds


def check_chemical_bound(n: int, tol: float = DEFAULT_TOL) -> ChemicalBoundCheck:
    """Compare every chemical tree of order ``n`` with :func:`chemical_bso_upper_bound`.

    ``iff_holds`` is true when the trees attaining the bound are exactly those
    with no vertex of degree 2 or 3.
    """
    bound = chemical_bso_upper_bound(n)
    count = violations = attaining = pure = 0
    iff = True
    best = -math.inf
    for tree in enumerate_chemical_trees(n):
        value = edge_sum(tree, IndexKind.BSO)
        best = max(best, value)
        count += 1
        if value > bound + tol * max(1.0, bound):
            violations += 1
        equal = abs(value - bound) <= tol * max(1.0, bound)
        no_23 = not any(d in (2, 3) for d in tree.degrees)
        attaining += equal
        pure += no_23
        iff &= equal == no_23
    return ChemicalBoundCheck(n, bound, best, count, violations, attaining, pure, iff)
