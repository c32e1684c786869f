"""Simple undirected graphs, their text encodings and structural predicates.

Vertices are the integers ``0..n-1``. A :class:`Graph` is immutable once
built; everything the degree-based indices and bounds need (degrees,
connectivity, bipartiteness, edge-type counts) is derived from it here.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

GRAPH6_HEADER = ">>graph6<<"


class GraphParseError(ValueError):
    """Raised when a graph6 line or edge list cannot be decoded."""

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        if offset is not None:
            message = f"byte {offset}: {message}"
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.offset = offset
        self.line = line


class DomainError(ValueError):
    """A graph is outside the domain of an index or bound.

    ``code`` is one of ``disconnected``, ``zero-degree``,
    ``complement-zero-degree``, ``not-unicyclic``, ``not-regular``.
    """

    def __init__(self, code: str, message: str = ""):
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Edges are kept in the order they were supplied (after dropping
    duplicates), each as a pair ``(u, v)`` with ``u < v``. Equality and
    hashing depend only on ``n`` and the edge *set*.
    """

    __slots__ = ("n", "edges", "degrees", "adjacency", "_edge_set")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={n}")
        seen: set[tuple[int, int]] = set()
        ordered: list[tuple[int, int]] = []
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                continue
            seen.add(e)
            ordered.append(e)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(ordered)
        self.degrees: tuple[int, ...] = tuple(len(a) for a in adj)
        self.adjacency: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        self._edge_set = frozenset(seen)

    def __setattr__(self, name, value):
        if hasattr(self, "_edge_set"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edge_set == other._edge_set

    def __hash__(self) -> int:
        return hash((self.n, self._edge_set))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeSummary:
    n: int
    m: int
    max_degree: int
    min_degree: int
    degree_sequence: tuple[int, ...]
    is_connected: bool
    is_regular: bool
    is_bipartite: bool
    is_semiregular_bipartite: bool


@dataclass(frozen=True)
class EdgeTypeCounts:
    """Counts ``m_{i,j}`` of edges joining degree ``i`` to degree ``j`` (``i <= j``)
    and ``n_i`` of vertices of degree ``i``."""

    edge_types: dict[tuple[int, int], int] = field(default_factory=dict)
    vertex_degrees: dict[int, int] = field(default_factory=dict)

    def m_ij(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return self.edge_types.get((i, j), 0)

    def n_i(self, i: int) -> int:
        return self.vertex_degrees.get(i, 0)

    @property
    def max_degree(self) -> int:
        return max(self.vertex_degrees, default=0)


# ---------------------------------------------------------------------------
# graph6


def _graph6_size(data: bytes) -> tuple[int, int]:
    """Decode the order prefix; return ``(n, bytes consumed)``."""
    if not data:
        raise GraphParseError("empty graph6 string", offset=0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise GraphParseError("truncated size field", offset=len(data))
    n = 0
    for b in data[start : start + width]:
        n = (n << 6) | (b - 63)
    return n, start + width


def parse_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 line (the ``>>graph6<<`` header is optional).

    >>> parse_graph6("Bg").edges
    ((0, 1), (1, 2))
    """
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise GraphParseError("non-ASCII character", offset=exc.start) from None
    data = data.strip()
    base = 0
    if data.startswith(GRAPH6_HEADER.encode()):
        base = len(GRAPH6_HEADER)
        data = data[base:]
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphParseError(f"byte value {b} outside 63..126", offset=base + i)
    n, pos = _graph6_size(data)
    if n < 1:
        raise GraphParseError("graph with zero vertices is not supported", offset=base)
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    body = data[pos:]
    if len(body) < need:
        raise GraphParseError(
            f"truncated bit vector: expected {need} bytes, got {len(body)}",
            offset=base + len(data),
        )
    if len(body) > need:
        raise GraphParseError("trailing bytes after bit vector", offset=base + pos + need)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string without header."""
    n = g.n
    if n <= 62:
        out = [n + 63]
    elif n <= 258047:
        out = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        out = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out).decode("ascii")


# ---------------------------------------------------------------------------
# edge lists


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines; ``#`` starts a comment and ``n`` is the largest label + 1."""
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(f"expected two vertex labels, got {len(tokens)}", line=lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphParseError(f"non-integer token in {line!r}", line=lineno) from None
        if u < 0 or v < 0:
            raise GraphParseError("negative vertex label", line=lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", line=lineno)
        edges.append((u, v))
    if not edges:
        raise GraphParseError("no edges found")
    n = max(max(e) for e in edges) + 1
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges)


# ---------------------------------------------------------------------------
# structure


def complement(g: Graph) -> Graph:
    n = g.n
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)))


def _two_colour(g: Graph) -> tuple[bool, bool]:
    """BFS over every component; return ``(connected, bipartite)``."""
    colour = [-1] * g.n
    components = 0
    bipartite = True
    for s in range(g.n):
        if colour[s] != -1:
            continue
        components += 1
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    bipartite = False
    return components == 1, bipartite


def degree_summary(g: Graph) -> DegreeSummary:
    connected, bipartite = _two_colour(g)
    deg = g.degrees
    hi, lo = max(deg), min(deg)
    semiregular = (
        bipartite
        and hi != lo
        and g.m > 0
        and all({deg[u], deg[v]} == {hi, lo} for u, v in g.edges)
    )
    return DegreeSummary(
        n=g.n,
        m=g.m,
        max_degree=hi,
        min_degree=lo,
        degree_sequence=tuple(sorted(deg, reverse=True)),
        is_connected=connected,
        is_regular=hi == lo,
        is_bipartite=bipartite,
        is_semiregular_bipartite=semiregular,
    )


def is_connected(g: Graph) -> bool:
    return _two_colour(g)[0]


def is_semiregular_bipartite(g: Graph) -> bool:
    """True iff every edge joins a max-degree vertex to a min-degree vertex
    (with the two degrees distinct) and ``g`` is bipartite.

    Together with regularity this is exactly when ``d_u**2 + d_v**2`` is the
    same on every edge of a connected graph.
    """
    summary = degree_summary(g)
    if not summary.is_connected:
        raise DomainError("disconnected", "semiregularity is defined for connected graphs")
    return summary.is_semiregular_bipartite


def edge_type_counts(g: Graph) -> EdgeTypeCounts:
    deg = g.degrees
    edge_types: Counter[tuple[int, int]] = Counter()
    for u, v in g.edges:
        a, b = deg[u], deg[v]
        edge_types[(a, b) if a <= b else (b, a)] += 1
    return EdgeTypeCounts(
        edge_types=dict(sorted(edge_types.items())),
        vertex_degrees=dict(sorted(Counter(deg).items())),
    )


# ---------------------------------------------------------------------------
# standard families


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def star_graph(n: int) -> Graph:
    """The star ``K_{1,n-1}`` with centre 0."""
    return Graph(n, ((0, v) for v in range(1, n)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def from_edges(edges: Sequence[tuple[int, int]]) -> Graph:
    n = max(max(e) for e in edges) + 1 if edges else 1
    return Graph(n, edges)
