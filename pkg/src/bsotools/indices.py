"""Vertex-degree-based topological indices as edge sums.

Every index here has the form ``sum over edges uv of phi(d_u, d_v)``. The
first Banhatti-Sombor index ``BSO`` uses ``phi = sqrt(1/d_u**2 + 1/d_v**2)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

from .graph import DomainError, EdgeTypeCounts, Graph, edge_type_counts, is_connected


class IndexKind(str, enum.Enum):
    BSO = "BSO"
    SO = "SO"
    R = "R"
    M2STAR = "M2STAR"
    H = "H"
    ID = "ID"
    SDD = "SDD"
    ISI = "ISI"
    GA = "GA"
    F = "F"

    @classmethod
    def parse(cls, name: str) -> "IndexKind":
        key = name.strip().upper().replace("*", "STAR").replace("M2_STAR", "M2STAR")
        try:
            return cls(key)
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown index {name!r}; expected one of {choices}") from None


@dataclass(frozen=True)
class IndexValue:
    kind: IndexKind
    value: float


EdgeTerm = Callable[[int, int], float]

EDGE_TERMS: dict[IndexKind, EdgeTerm] = {
    IndexKind.BSO: lambda a, b: math.sqrt(1.0 / (a * a) + 1.0 / (b * b)),
    IndexKind.SO: lambda a, b: math.sqrt(a * a + b * b),
    IndexKind.R: lambda a, b: 1.0 / math.sqrt(a * b),
    IndexKind.M2STAR: lambda a, b: 1.0 / (a * b),
    IndexKind.H: lambda a, b: 2.0 / (a + b),
    IndexKind.ID: lambda a, b: 1.0 / (a * a) + 1.0 / (b * b),
    IndexKind.SDD: lambda a, b: (a * a + b * b) / (2.0 * a * b),
    IndexKind.ISI: lambda a, b: a * b / (a + b),
    IndexKind.GA: lambda a, b: 2.0 * math.sqrt(a * b) / (a + b),
    IndexKind.F: lambda a, b: float(a * a + b * b),
}


def _check_domain(g: Graph, *, connected: bool = True) -> None:
    if connected and not is_connected(g):
        raise DomainError("disconnected", "indices are defined for connected graphs")
    if g.m == 0 or min(g.degrees) == 0:
        raise DomainError("zero-degree", "graph has a vertex of degree 0")


def edge_sum(g: Graph, kind: IndexKind) -> float:
    """Evaluate the edge sum for ``kind`` without requiring connectivity.

    Graphs with an isolated vertex are still rejected. Used for complements,
    which need not be connected.
    """
    _check_domain(g, connected=False)
    term = EDGE_TERMS[kind]
    deg = g.degrees
    total = 0.0
    for u, v in g.edges:
        total += term(deg[u], deg[v])
    return total


def bso(g: Graph) -> float:
    """First Banhatti-Sombor index of a connected graph with no isolated vertex."""
    _check_domain(g)
    return edge_sum(g, IndexKind.BSO)


def sombor(g: Graph) -> float:
    _check_domain(g)
    return edge_sum(g, IndexKind.SO)


def classical_index(g: Graph, kind: IndexKind | str) -> IndexValue:
    kind = IndexKind.parse(kind) if isinstance(kind, str) else kind
    if kind is IndexKind.BSO:
        return IndexValue(kind, bso(g))
    if kind is IndexKind.SO:
        return IndexValue(kind, sombor(g))
    _check_domain(g)
    return IndexValue(kind, edge_sum(g, kind))


def all_indices(g: Graph) -> dict[IndexKind, float]:
    """All ten indices, in declaration order of :class:`IndexKind`."""
    _check_domain(g)
    return {kind: edge_sum(g, kind) for kind in IndexKind}


def bso_from_edge_types(counts: EdgeTypeCounts) -> float:
    """BSO from the edge-type counts ``m_{i,j}`` rather than from the edges."""
    return sum(
        math.sqrt(1.0 / (i * i) + 1.0 / (j * j)) * mij
        for (i, j), mij in counts.edge_types.items()
    )


def bso_via_edge_types(g: Graph) -> float:
    _check_domain(g)
    return bso_from_edge_types(edge_type_counts(g))
