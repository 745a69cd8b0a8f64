"""Seeded random linear hypergraphs for property and cross-validation tests."""

from __future__ import annotations

import random
from itertools import combinations

from .core import LinearHypergraph, mask_of

__all__ = ["random_linear", "random_corpus"]


def random_linear(n: int, r: int, rng: random.Random, max_edges: int | None = None) -> LinearHypergraph:
    """Greedy linear system over a shuffled list of r-subsets.

    With ``max_edges=None`` the result is maximal: no further r-subset can be
    added without repeating a pair.
    """
    cands = list(combinations(range(n), r))
    rng.shuffle(cands)
    adj = [0] * n
    edges = []
    for e in cands:
        if max_edges is not None and len(edges) >= max_edges:
            break
        m = mask_of(e)
        if any(adj[v] & m for v in e):
            continue
        edges.append(e)
        for v in e:
            adj[v] |= m & ~(1 << v)
    return LinearHypergraph(n, r, tuple(sorted(edges)))


def random_corpus(count: int, seed: int, r_values=(3,), n_range=(6, 15), maximal: bool = True) -> list[LinearHypergraph]:
    """``count`` instances; when not ``maximal`` each stops at a random edge count."""
    rng = random.Random(seed)
    out = []
    lo, hi = n_range
    for _ in range(count):
        r = rng.choice(r_values)
        n = rng.randint(max(lo, r), hi)
        cap = None if maximal else rng.randint(1, max(1, n * (n - 1) // (r * (r - 1))))
        out.append(random_linear(n, r, rng, cap))
    return out
