"""Slow, independent tree enumeration used to check the level-sequence generator.

Labelled trees are decoded from Prüfer sequences and deduplicated by a
centre-rooted canonical string. Only sequences whose label multiplicities
are non-increasing in the label are decoded: every tree admits a labelling
with degrees non-increasing in the label, so this subset still reaches
every isomorphism class while keeping n = 10 to about 10^5 sequences.
"""

from __future__ import annotations

import heapq
from typing import Iterator, Sequence

from .graph import Graph


def prufer_decode(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    if len(seq) != n - 2:
        raise ValueError("Prüfer sequence must have length n - 2")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def _centres(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def _encode(adj: list[list[int]], root: int, parent: int) -> str:
    return "(" + "".join(sorted(_encode(adj, c, root) for c in adj[root] if c != parent)) + ")"


def canonical_form(tree: Graph) -> str:
    """Isomorphism-invariant string for a tree (AHU encoding from its centre)."""
    if tree.m != tree.n - 1:
        raise ValueError("not a tree")
    adj = [sorted(a) for a in tree.adjacency]
    return min(_encode(adj, c, -1) for c in _centres(adj))


def _multiset_permutations(counts: list[int]) -> Iterator[list[int]]:
    total = sum(counts)
    seq: list[int] = []

    def rec():
        if len(seq) == total:
            yield list(seq)
            return
        for label, c in enumerate(counts):
            if c:
                counts[label] -= 1
                seq.append(label)
                yield from rec()
                seq.pop()
                counts[label] += 1

    yield from rec()


def _nonincreasing_compositions(total: int, parts: int, cap: int | None = None) -> Iterator[list[int]]:
    if parts == 0:
        if total == 0:
            yield []
        return
    cap = total if cap is None else cap
    for first in range(min(total, cap), -1, -1):
        for rest in _nonincreasing_compositions(total - first, parts - 1, first):
            yield [first] + rest


def prufer_trees(n: int) -> Iterator[Graph]:
    """One labelled tree per isomorphism class of order ``n``, in no particular order."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        yield Graph(1)
        return
    seen: set[str] = set()
    for counts in _nonincreasing_compositions(n - 2, n):
        for seq in _multiset_permutations(counts):
            tree = Graph(n, prufer_decode(seq, n))
            key = canonical_form(tree)
            if key not in seen:
                seen.add(key)
                yield tree


def prufer_tree_count(n: int) -> int:
    return sum(1 for _ in prufer_trees(n))
