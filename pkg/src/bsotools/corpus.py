"""Deterministic graph corpora for bound sweeps."""

from __future__ import annotations

import random
from typing import Iterator

from .graph import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    is_connected,
)
from .trees import enumerate_trees

EDGE_PROBABILITIES = (0.2, 0.5, 0.8)
DEFAULT_SEED = 42


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """G(n, p) sample, redrawn until connected."""
    if n < 2:
        raise ValueError("need n >= 2 for a connected graph with edges")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    while True:
        g = Graph(n, [e for e in pairs if rng.random() < p])
        if is_connected(g):
            return g


def random_graphs(count: int, seed: int = DEFAULT_SEED, min_n: int = 3, max_n: int = 12) -> Iterator[tuple[str, Graph]]:
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(min_n, max_n)
        p = EDGE_PROBABILITIES[i % len(EDGE_PROBABILITIES)]
        yield f"random#{i}(n={n},p={p})", random_connected_graph(rng, n, p)


def structured_graphs() -> Iterator[tuple[str, Graph]]:
    for n in range(3, 21):
        yield f"C{n}", cycle_graph(n)
    for n in range(2, 9):
        yield f"K{n}", complete_graph(n)
    for a in range(1, 7):
        for b in range(a, 7):
            yield f"K{a},{b}", complete_bipartite_graph(a, b)


def tree_graphs(max_n: int = 10) -> Iterator[tuple[str, Graph]]:
    for n in range(2, max_n + 1):
        for i, tree in enumerate(enumerate_trees(n)):
            yield f"tree(n={n})#{i}", tree


def verification_corpus(
    seed: int = DEFAULT_SEED, random_count: int = 1000, max_tree_n: int = 10
) -> Iterator[tuple[str, Graph]]:
    """Trees up to ``max_tree_n``, cycles up to 20, ``K_n`` up to 8,
    ``K_{a,b}`` with ``a, b <= 6``, then ``random_count`` random connected graphs."""
    yield from tree_graphs(max_tree_n)
    yield from structured_graphs()
    yield from random_graphs(random_count, seed)
