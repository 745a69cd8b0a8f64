"""Exact linear Turan numbers on small instances by branch and bound.

The search walks the set-enumeration tree of r-subsets in lexicographic
order: a node is a linear, pattern-free edge set and its children add one
candidate lex-greater than the last edge.  Each node keeps the list of
candidates that are still addable (linear with every chosen edge and not
completing a forbidden copy), which gives the pruning bound.

No theorem bound is used for pruning; only the pair bound and a per-vertex
degree count.  The search can therefore falsify a claimed bound.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from math import comb
from typing import Sequence

from .bounds import Certificate, verify_b4_extremal
from .core import HypergraphError, LinearHypergraph, validate
from .patterns import EdgeMatcher, Pattern, contains, contains_pattern_generic, path

__all__ = [
    "CapExceeded",
    "SearchConfig",
    "SearchResult",
    "ProbeResult",
    "exact_linear_turan",
    "max_linear_system",
    "conjecture_probe",
    "is_canonical",
    "canonical_form",
    "MAX_N",
]

MAX_N = 24
MAX_CANDIDATES = 60_000


class CapExceeded(HypergraphError):
    pass


@dataclass
class SearchConfig:
    node_budget: int | None = None
    time_budget: float | None = None  # seconds
    symmetry: bool = True
    symmetry_depth: int = 3
    incremental_detection: bool = True
    workers: int = 1

    def __post_init__(self):
        if self.node_budget is not None and self.node_budget <= 0:
            raise ValueError("node_budget must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


@dataclass
class SearchResult:
    value: int
    witness: LinearHypergraph
    optimal: bool
    nodes: int
    elapsed: float

    @property
    def status(self) -> str:
        return "optimal" if self.optimal else "budget_exhausted"

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "optimal": self.optimal,
            "status": self.status,
            "witness": self.witness.to_dict(),
            "nodes": self.nodes,
            "elapsed": round(self.elapsed, 6),
        }


# --- isomorph rejection -------------------------------------------------------


def canonical_form(edges: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least relabelling of a small edge set.

    The least image labels vertices in order of first appearance when its
    edges are read in sorted order, so it suffices to try every edge order
    and every within-edge order.  Cost is ``m! * (r!)^m``; use for m <= 3.
    """
    edges = [tuple(e) for e in edges]
    best = None
    inner = [list(permutations(e)) for e in edges]
    for order in permutations(range(len(edges))):
        for choice in _product([inner[i] for i in order]):
            lab: dict[int, int] = {}
            img = []
            for e in choice:
                for v in e:
                    if v not in lab:
                        lab[v] = len(lab)
                img.append(tuple(sorted(lab[v] for v in e)))
            img.sort()
            t = tuple(img)
            if best is None or t < best:
                best = t
    return best or ()


def _product(seqs):
    if not seqs:
        yield ()
        return
    for head in seqs[0]:
        for tail in _product(seqs[1:]):
            yield (head,) + tail


def is_canonical(edges: Sequence[Sequence[int]]) -> bool:
    """True iff the sorted edge list is the least in its isomorphism class."""
    srt = tuple(sorted(tuple(sorted(e)) for e in edges))
    return canonical_form(srt) == srt


# --- the searcher -------------------------------------------------------------


def _connected(P: Pattern) -> bool:
    pm = P.hypergraph.masks
    reach = pm[0] if pm else 0
    grown = True
    while grown:
        grown = False
        for m in pm:
            if m & reach and m & ~reach:
                reach |= m
                grown = True
    return all(m & reach == m for m in pm)


class _Budget(Exception):
    pass


class _Searcher:
    def __init__(self, n, r, patterns, cfg, deadline):
        self.n, self.r = n, r
        self.patterns = list(patterns)
        self.matchers = [EdgeMatcher(P) for P in self.patterns]
        self.star_k = [P.k if P.kind == "star" else 0 for P in self.patterns]
        # disconnected patterns could link the new edge to anything
        self.max_k = max((P.k if _connected(P) else n for P in self.patterns), default=0)
        self.cfg = cfg
        self.deadline = deadline
        self.tuples = list(combinations(range(n), r))
        self.cmask = [sum(1 << v for v in t) for t in self.tuples]
        self.chosen: list[int] = []
        self.hmasks: list[int] = []
        self.inc: list[list[int]] = [[] for _ in range(n)]
        self.adj = [0] * n
        self.best = -1
        self.best_set: list[int] = []
        self.nodes = 0
        self.ceiling = min(comb(n, 2) // comb(r, 2), n * ((n - 1) // (r - 1)) // r) if n >= r else 0
        self.sym_depth = cfg.symmetry_depth if cfg.symmetry else 0

    # state ---------------------------------------------------------------
    def push(self, c):
        cm = self.cmask[c]
        idx = len(self.hmasks)
        self.chosen.append(c)
        self.hmasks.append(cm)
        for v in self.tuples[c]:
            self.inc[v].append(idx)
            self.adj[v] |= cm & ~(1 << v)

    def pop(self):
        c = self.chosen.pop()
        self.hmasks.pop()
        t = self.tuples[c]
        for v in t:
            self.inc[v].pop()
        for v in t:
            m = 0
            for i in self.inc[v]:
                m |= self.hmasks[i]
            self.adj[v] = m & ~(1 << v)

    def creates_pattern(self, c) -> bool:
        """Would adding candidate ``c`` complete a forbidden copy?"""
        if not self.matchers:
            return False
        self.push(c)
        try:
            if self.cfg.incremental_detection:
                anchor = len(self.hmasks) - 1
                for k, m in zip(self.star_k, self.matchers):
                    if k:
                        # a star through the new edge exists iff one of its vertices reaches degree k
                        if any(len(self.inc[v]) >= k for v in self.tuples[c]):
                            return True
                    elif m.find(self.hmasks, self.inc, anchor) is not None:
                        return True
                return False
            H = LinearHypergraph(self.n, self.r, tuple(sorted(self.tuples[i] for i in self.chosen)))
            return any(contains(H, P) is not None for P in self.patterns)
        finally:
            self.pop()

    def initial_viable(self):
        last = self.chosen[-1] if self.chosen else -1
        out = []
        for c in range(last + 1, len(self.cmask)):
            cm = self.cmask[c]
            if any(cm & self.adj[v] for v in self.tuples[c]):
                continue
            if not self.creates_pattern(c):
                out.append(c)
        return out

    def bound(self, viable) -> int:
        """Upper bound on how many of ``viable`` can still be added together.

        Each added edge through ``v`` uses ``r-1`` pairs at ``v`` that some live
        candidate through ``v`` covers, and adds ``r`` to the degree sum.
        """
        k = len(viable)
        if k == 0:
            return 0
        cnt = [0] * self.n
        avail = [0] * self.n
        tuples, cmask = self.tuples, self.cmask
        for c in viable:
            m = cmask[c]
            for v in tuples[c]:
                cnt[v] += 1
                avail[v] |= m
        r1 = self.r - 1
        total = 0
        for v in range(self.n):
            if cnt[v]:
                free = (avail[v].bit_count() - 1) // r1
                total += cnt[v] if cnt[v] < free else free
        return min(k, total // self.r)

    def record(self):
        if len(self.chosen) > self.best:
            self.best = len(self.chosen)
            self.best_set = list(self.chosen)

    def tick(self):
        self.nodes += 1
        cfg = self.cfg
        if cfg.node_budget is not None and self.nodes > cfg.node_budget:
            raise _Budget
        if self.deadline is not None and not self.nodes & 255 and time.perf_counter() > self.deadline:
            raise _Budget

    def reach(self, mask, steps) -> int:
        """Vertices reachable from ``mask`` through at most ``steps`` chosen edges."""
        for _ in range(steps):
            grown = mask
            for hm in self.hmasks:
                if hm & mask:
                    grown |= hm
            if grown == mask:
                break
            mask = grown
        return mask

    def child_viable(self, viable, pos):
        """Candidates after ``viable[pos]`` that survive adding it (already pushed).

        A new forbidden copy through candidate ``c2`` must also use the new edge,
        and a connected k-edge copy links them through at most k-2 other
        edges, so only candidates meeting that neighbourhood are re-tested.
        """
        cmask = self.cmask
        cm = cmask[viable[pos]]
        ball = self.reach(cm, self.max_k - 2) if self.matchers else 0
        child = []
        for c2 in viable[pos + 1:]:
            m2 = cmask[c2]
            x = m2 & cm
            if x & (x - 1):
                continue
            if m2 & ball and self.creates_pattern(c2):
                continue
            child.append(c2)
        return child

    def dfs(self, viable):
        self.tick()
        self.record()
        depth = len(self.chosen)
        if self.best >= self.ceiling:
            return
        if depth + self.bound(viable) <= self.best:
            return
        cmask, tuples = self.cmask, self.tuples
        for pos, c in enumerate(viable):
            if depth + len(viable) - pos <= self.best:
                break
            if depth < self.sym_depth and not is_canonical([tuples[i] for i in self.chosen] + [tuples[c]]):
                continue
            self.push(c)
            self.dfs(self.child_viable(viable, pos))
            self.pop()
            if self.best >= self.ceiling:
                return

    def frontier(self, viable, depth_limit, out):
        """Collect (prefix, viable) pairs at ``depth_limit`` in DFS order."""
        depth = len(self.chosen)
        if depth == depth_limit:
            out.append((list(self.chosen), list(viable)))
            return
        self.record()
        for pos, c in enumerate(viable):
            if depth < self.sym_depth and not is_canonical([self.tuples[i] for i in self.chosen] + [self.tuples[c]]):
                continue
            self.push(c)
            self.frontier(self.child_viable(viable, pos), depth_limit, out)
            self.pop()

    def witness(self, chosen=None) -> LinearHypergraph:
        chosen = self.best_set if chosen is None else chosen
        return validate(self.n, self.r, [self.tuples[i] for i in chosen])




def _run_subtree(args):
    n, r, patterns, cfg, deadline, prefix, viable, floor = args
    s = _Searcher(n, r, patterns, cfg, deadline)
    for c in prefix:
        s.push(c)
    s.best = floor
    done = True
    try:
        s.dfs(viable)
    except _Budget:
        done = False
    found = s.best_set if s.best > floor else None
    return found, s.nodes, done


def exact_linear_turan(n: int, r: int, patterns: Sequence[Pattern] = (), cfg: SearchConfig | None = None) -> SearchResult:
    """Largest linear r-graph on ``n`` vertices containing none of ``patterns``.

    ``optimal`` is False when a budget ran out; the witness is then the best
    found so far.
    """
    cfg = cfg or SearchConfig()
    if r < 2 or n < 0:
        raise HypergraphError("need r >= 2 and n >= 0")
    if n > MAX_N or comb(n, r) > MAX_CANDIDATES:
        raise CapExceeded(f"instance n={n}, r={r} exceeds the search cap (n <= {MAX_N}, C(n,r) <= {MAX_CANDIDATES})")
    for P in patterns:
        if P.r != r:
            raise HypergraphError(f"pattern {P} has r={P.r}, search has r={r}")
    start = time.perf_counter()
    deadline = start + cfg.time_budget if cfg.time_budget else None
    s = _Searcher(n, r, patterns, cfg, deadline)
    if cfg.workers > 1:
        return _parallel(s, cfg, start, deadline)
    optimal = True
    try:
        s.tick()
        root = s.initial_viable()
        s.dfs(root)
    except _Budget:
        optimal = False
    W = s.witness()
    return SearchResult(W.m, W, optimal, s.nodes, time.perf_counter() - start)


def _parallel(s: _Searcher, cfg: SearchConfig, start: float, deadline) -> SearchResult:
    root = s.initial_viable()
    split = max(1, min(2, s.sym_depth or 2))
    tasks: list = []
    s.frontier(root, split, tasks)
    floor = -1
    jobs = [(s.n, s.r, s.patterns, cfg, deadline, p, v, floor) for p, v in tasks]
    best = s.best_set if s.best >= 0 else []
    nodes = s.nodes
    optimal = True
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        for found, k, done in pool.map(_run_subtree, jobs):
            nodes += k
            optimal &= done
            if found is None:
                continue
            key = (-len(found), [s.tuples[i] for i in found])
            if (-len(best), [s.tuples[i] for i in best]) > key:
                best = found
    W = s.witness(best)
    return SearchResult(W.m, W, optimal, nodes, time.perf_counter() - start)


def max_linear_system(n: int, r: int, cfg: SearchConfig | None = None) -> SearchResult:
    """Maximum packing of pairs by r-sets (no forbidden pattern)."""
    return exact_linear_turan(n, r, (), cfg)


@dataclass
class ProbeResult:
    result: SearchResult
    ceiling: Fraction
    within_ceiling: bool
    shape_checked: bool
    shape: Certificate | None
    status: str  # "consistent" | "inconclusive" | "violation"

    def to_dict(self) -> dict:
        d = self.result.to_dict()
        d.update({
            "ceiling": f"{self.ceiling.numerator}/{self.ceiling.denominator}",
            "within_ceiling": self.within_ceiling,
            "shape_checked": self.shape_checked,
            "shape_passed": None if self.shape is None else self.shape.passed,
            "probe_status": self.status,
        })
        return d


def conjecture_probe(n: int, r: int, cfg: SearchConfig | None = None) -> ProbeResult:
    """Instance evidence on whether P_4-free linear r-graphs stay within (r+1)n/r.

    When ``r^2 | n`` and the ceiling is attained, the witness is also checked
    to be a disjoint union of S(2, r, r^2).
    """
    if r < 3:
        raise HypergraphError("the probe needs r >= 3")
    P = path(4, r)
    res = exact_linear_turan(n, r, [P], cfg)
    if contains(res.witness, P) is not None or contains_pattern_generic(res.witness, P) is not None:
        raise AssertionError("search returned a witness containing P_4")
    ceiling = Fraction((r + 1) * n, r)
    within = res.value <= ceiling
    shape = None
    if n % (r * r) == 0 and n > 0 and res.value == ceiling:
        shape = verify_b4_extremal(res.witness)
    if not within:
        status = "violation"
    elif not res.optimal:
        status = "inconclusive"
    else:
        status = "consistent"
    return ProbeResult(res, ceiling, within, shape is not None, shape, status)


def default_workers() -> int:
    env = os.environ.get("HYPERTURAN_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1
