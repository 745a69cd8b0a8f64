"""Forbidden configurations and containment detection.

Containment means an injective vertex map carrying every pattern edge onto a
host edge (sub-hypergraph containment, not induced, not Berge).

Three independent detection routes exist:

* specialized detectors (``contains_star`` ... ``contains_crown``) that reason
  on host edges directly,
* :func:`contains_pattern_generic`, a vertex-level backtracking embedder used
  as the oracle for the specialized ones,
* :class:`EdgeMatcher`, an edge-level matcher anchored at a given host edge,
  used by the exact search to test only copies through a newly added edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Sequence

from .core import HypergraphError, LinearHypergraph, validate

__all__ = [
    "PatternError",
    "UnsupportedK",
    "EdgeNotInHost",
    "Tree",
    "Pattern",
    "Embedding",
    "star_tree",
    "path_tree",
    "broom_tree",
    "expand_tree",
    "star",
    "path",
    "broom",
    "crown",
    "pattern_from_spec",
    "contains_star",
    "contains_path",
    "contains_b4",
    "contains_crown",
    "find_crown_with_base",
    "contains_pattern_generic",
    "contains",
    "EdgeMatcher",
]


class PatternError(HypergraphError):
    pass


class UnsupportedK(PatternError):
    pass


class EdgeNotInHost(PatternError):
    pass


@dataclass(frozen=True)
class Tree:
    """A graph tree with ``k`` edges on vertices ``0..k``."""

    k: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.edges) != self.k or self.k < 1:
            raise PatternError(f"a tree with k={self.k} needs exactly k >= 1 edges")
        parent = list(range(self.k + 1))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for u, v in self.edges:
            if not (0 <= u <= self.k and 0 <= v <= self.k) or u == v:
                raise PatternError(f"bad tree edge {(u, v)}")
            a, b = find(u), find(v)
            if a == b:
                raise PatternError("tree edges contain a cycle")
            parent[a] = b
        # k edges, no cycle, k+1 vertices: connected


def star_tree(k: int) -> Tree:
    return Tree(k, tuple((0, i) for i in range(1, k + 1)))


def path_tree(k: int) -> Tree:
    return Tree(k, tuple((i, i + 1) for i in range(k)))


def broom_tree() -> Tree:
    # star S_3 centred at 0 with an extra edge hanging off leaf 1
    return Tree(4, ((0, 1), (0, 2), (0, 3), (1, 4)))


@dataclass(frozen=True)
class Pattern:
    """A small forbidden configuration.

    ``roles`` lists the pattern edges in construction order (for a star the
    spokes, for a path the edges along the path, for the crown the base first);
    specialized detectors report host edges in this order.
    """

    kind: str  # "star" | "path" | "broom4" | "crown4" | "tree"
    k: int
    r: int
    hypergraph: LinearHypergraph
    roles: tuple[tuple[int, ...], ...]

    @property
    def name(self) -> str:
        if self.kind in ("star", "path"):
            return f"{self.kind}{self.k}"
        return self.kind

    def __str__(self) -> str:
        return f"{self.name}^{self.r}"


@dataclass(frozen=True)
class Embedding:
    vertex_map: dict[int, int]
    edge_map: dict[int, int]
    host_edges: tuple[tuple[int, ...], ...]
    route: str = "search"

    def is_valid(self, P: Pattern, H: LinearHypergraph) -> bool:
        vm = self.vertex_map
        if sorted(vm) != list(range(P.hypergraph.n)):
            return False
        if len(set(vm.values())) != len(vm):
            return False
        if len(set(self.edge_map.values())) != len(self.edge_map):
            return False
        for i, pe in enumerate(P.hypergraph.edges):
            if i not in self.edge_map:
                return False
            if tuple(sorted(vm[v] for v in pe)) != H.edges[self.edge_map[i]]:
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "vertex_map": {str(k): v for k, v in sorted(self.vertex_map.items())},
            "host_edges": [list(e) for e in self.host_edges],
            "route": self.route,
        }


# --- builders ---------------------------------------------------------------


def _make_pattern(kind: str, k: int, r: int, n: int, roles: list[list[int]]) -> Pattern:
    H = validate(n, r, roles)
    return Pattern(kind, k, r, H, tuple(tuple(sorted(e)) for e in roles))


def expand_tree(t: Tree, r: int, kind: str = "tree") -> Pattern:
    """Replace each tree edge ``{u, v}`` by ``{u, v}`` plus ``r - 2`` private vertices."""
    if r < 2:
        raise PatternError("uniformity must be at least 2")
    nxt = t.k + 1
    roles = []
    for u, v in t.edges:
        roles.append([u, v] + list(range(nxt, nxt + r - 2)))
        nxt += r - 2
    P = _make_pattern(kind, t.k, r, nxt, roles)
    assert P.hypergraph.n == (r - 1) * t.k + 1
    return P


def star(k: int, r: int) -> Pattern:
    return expand_tree(star_tree(k), r, "star")


def path(k: int, r: int) -> Pattern:
    return expand_tree(path_tree(k), r, "path")


def broom(r: int) -> Pattern:
    return expand_tree(broom_tree(), r, "broom4")


def crown(r: int) -> Pattern:
    """Base ``{0..r-1}`` and three disjoint edges through base vertices 0, 1, 2."""
    if r < 3:
        raise PatternError("the crown needs r >= 3")
    base = list(range(r))
    arms = []
    nxt = r
    for a in range(3):
        arms.append([a] + list(range(nxt, nxt + r - 1)))
        nxt += r - 1
    P = _make_pattern("crown4", 4, r, nxt, [base] + arms)
    assert P.hypergraph.n == 4 * r - 3
    return P


def pattern_from_spec(spec: str, r: int) -> Pattern:
    """Parse ``star:k``, ``s:k``, ``path:k``, ``p2``/``p3``/``p4``, ``b4``, ``crown``."""
    s = spec.strip().lower()
    if s in ("b4", "broom", "broom4"):
        return broom(r)
    if s in ("crown", "crown4", "e4"):
        return crown(r)
    if s[:1] == "p" and s[1:].isdigit():
        return path(int(s[1:]), r)
    if ":" in s:
        head, _, num = s.partition(":")
        try:
            k = int(num)
        except ValueError:
            raise PatternError(f"bad pattern spec {spec!r}") from None
        if head in ("star", "s"):
            return star(k, r)
        if head in ("path", "p"):
            return path(k, r)
    raise PatternError(f"bad pattern spec {spec!r}")


# --- embeddings from host edges in role order --------------------------------


def _embed(P: Pattern, H: LinearHypergraph, host_idx: Sequence[int], route: str) -> Embedding:
    masks = [H.masks[i] for i in host_idx]
    where: dict[int, list[int]] = {}
    for j, pe in enumerate(P.roles):
        for w in pe:
            where.setdefault(w, []).append(j)
    vm: dict[int, int] = {}
    for w, js in where.items():
        if len(js) > 1:
            common = masks[js[0]]
            for j in js[1:]:
                common &= masks[j]
            assert common and common & (common - 1) == 0, "shared vertex has no unique image"
            vm[w] = common.bit_length() - 1
    taken = set(vm.values())
    for j, pe in enumerate(P.roles):
        free = [x for x in H.edges[host_idx[j]] if x not in taken]
        private = [w for w in pe if w not in vm]
        for w, x in zip(private, free):
            vm[w] = x
        taken.update(free)
    em = {P.hypergraph.index_of(P.roles[j]): host_idx[j] for j in range(len(P.roles))}
    emb = Embedding(vm, em, tuple(H.edges[i] for i in host_idx), route)
    assert emb.is_valid(P, H), "specialized detector produced an invalid embedding"
    return emb


# --- specialized detectors ----------------------------------------------------


def contains_star(H: LinearHypergraph, k: int, P: Pattern | None = None) -> Embedding | None:
    """Any ``k`` edges through one vertex form a star, so this is ``max degree >= k``."""
    if k < 1:
        raise UnsupportedK("star needs k >= 1")
    for v in range(H.n):
        inc = H.incidence[v]
        if len(inc) >= k:
            return _embed(P or star(k, H.r), H, inc[:k], "degree")
    return None


def contains_path(H: LinearHypergraph, k: int, P: Pattern | None = None) -> Embedding | None:
    """Linear path with ``k`` edges, ``1 <= k <= 4``."""
    if not 1 <= k <= 4:
        raise UnsupportedK(f"path detection supports k <= 4, got {k}")
    masks, inc, edges = H.masks, H.incidence, H.edges
    P = P or path(k, H.r)
    if k == 1:
        return _embed(P, H, [0], "path") if edges else None

    def extend(chain, link_mask, used_mask):
        # chain: edge indices; last link vertex bitmask; union of all but last edge
        if len(chain) == k:
            return chain
        last = chain[-1]
        for y in edges[last]:
            ybit = 1 << y
            if ybit & link_mask:
                continue
            for j in inc[y]:
                if j == last or masks[j] & used_mask:
                    continue
                found = extend(chain + [j], ybit, used_mask | masks[last])
                if found:
                    return found
        return None

    for i in range(len(edges)):
        found = extend([i], 0, 0)
        if found:
            return _embed(P, H, found, "path")
    return None


def contains_b4(H: LinearHypergraph, P: Pattern | None = None) -> Embedding | None:
    """Three edges through ``v`` plus an edge hanging off one of them away from ``v``."""
    masks, inc, edges = H.masks, H.incidence, H.edges
    for v in range(H.n):
        if len(inc[v]) < 3:
            continue
        for e1 in inc[v]:
            for u in edges[e1]:
                if u == v:
                    continue
                for f in inc[u]:
                    if f == e1:
                        continue
                    others = [j for j in inc[v] if j != e1 and not masks[j] & masks[f]]
                    if len(others) >= 2:
                        return _embed(P or broom(H.r), H, [e1, others[0], others[1], f], "broom")
    return None


def _crown_on_base(H: LinearHypergraph, b: int):
    masks, inc, edges = H.masks, H.incidence, H.edges
    arms = [[j for j in inc[x] if j != b] for x in edges[b]]
    for xa, xb, xc in combinations(range(len(arms)), 3):
        for f in arms[xa]:
            for g in arms[xb]:
                if masks[f] & masks[g]:
                    continue
                fg = masks[f] | masks[g]
                for h in arms[xc]:
                    if not masks[h] & fg:
                        return [b, f, g, h]
    return None


def contains_crown(H: LinearHypergraph, P: Pattern | None = None) -> Embedding | None:
    for b in range(H.m):
        found = _crown_on_base(H, b)
        if found:
            return _embed(P or crown(H.r), H, found, "crown")
    return None


def find_crown_with_base(H: LinearHypergraph, e, P: Pattern | None = None) -> Embedding | None:
    """Crown whose base is the host edge ``e``.

    When ``e`` has distinct vertices ``a, b, c`` with degrees at least
    ``2r``, ``r+1`` and ``2``, the arms are picked greedily (``route ==
    "greedy"``) and success is guaranteed; otherwise an exhaustive search over
    arms on ``e`` is run (``route == "exhaustive"``).
    """
    e = tuple(sorted(e))
    if not H.has_edge(e):
        raise EdgeNotInHost(f"{e} is not an edge of the host")
    b_idx = H.index_of(e)
    r = H.r
    P = P or crown(r)
    masks, inc = H.masks, H.incidence
    deg = H.degree
    triple = None
    for a in e:
        if deg(a) < 2 * r:
            continue
        for b in e:
            if b == a or deg(b) < r + 1:
                continue
            for c in e:
                if c not in (a, b) and deg(c) >= 2:
                    triple = (a, b, c)
                    break
            if triple:
                break
        if triple:
            break
    if triple:
        a, b, c = triple
        f = next(j for j in inc[c] if j != b_idx)
        g = next(j for j in inc[b] if j != b_idx and not masks[j] & masks[f])
        fg = masks[f] | masks[g]
        h = next(j for j in inc[a] if j != b_idx and not masks[j] & fg)
        # role order follows the base vertex order so the map stays canonical
        arms = sorted([f, g, h], key=lambda j: (masks[j] & masks[b_idx]).bit_length())
        return _embed(P, H, [b_idx] + arms, "greedy")
    found = _crown_on_base(H, b_idx)
    return _embed(P, H, found, "exhaustive") if found else None


# --- generic vertex-level embedder (oracle) -----------------------------------


def _bfs_order(P: Pattern) -> list[int]:
    pm = P.hypergraph.masks
    order: list[int] = []
    todo = list(range(len(pm)))
    while todo:
        queue = [todo[0]]
        seen = {todo[0]}
        while queue:
            i = queue.pop(0)
            order.append(i)
            for j in range(len(pm)):
                if j not in seen and pm[i] & pm[j]:
                    seen.add(j)
                    queue.append(j)
        todo = [i for i in todo if i not in seen]
    return order


def contains_pattern_generic(H: LinearHypergraph, P: Pattern) -> Embedding | None:
    """Backtracking embedder over vertex assignments; first hit in canonical order."""
    if P.r != H.r:
        raise PatternError(f"pattern has r={P.r}, host has r={H.r}")
    pedges = P.hypergraph.edges
    order = _bfs_order(P)
    hedges, inc = H.edges, H.incidence
    vm: dict[int, int] = {}
    used_host: set[int] = set()
    em: dict[int, int] = {}

    def assign(depth):
        if depth == len(order):
            return True
        pi = order[depth]
        pe = pedges[pi]
        anchor = next((w for w in pe if w in vm), None)
        cands = inc[vm[anchor]] if anchor is not None else range(len(hedges))
        mapped = [w for w in pe if w in vm]
        unmapped = [w for w in pe if w not in vm]
        for hi in cands:
            if hi in used_host:
                continue
            he = hedges[hi]
            if any(vm[w] not in he for w in mapped):
                continue
            images = {vm[w] for w in mapped}
            rest = [x for x in he if x not in images]
            if any(x in used_host_vertices for x in rest):
                continue
            for perm in permutations(rest):
                for w, x in zip(unmapped, perm):
                    vm[w] = x
                    used_host_vertices.add(x)
                used_host.add(hi)
                em[pi] = hi
                if assign(depth + 1):
                    return True
                del em[pi]
                used_host.discard(hi)
                for w, x in zip(unmapped, perm):
                    del vm[w]
                    used_host_vertices.discard(x)
        return False

    used_host_vertices: set[int] = set()
    if not assign(0):
        return None
    return Embedding(dict(sorted(vm.items())), dict(sorted(em.items())),
                     tuple(hedges[em[i]] for i in range(len(pedges))), "generic")


def contains(H: LinearHypergraph, P: Pattern) -> Embedding | None:
    """Dispatch to the specialized detector for ``P.kind`` (generic for plain trees)."""
    if P.kind == "star":
        return contains_star(H, P.k, P)
    if P.kind == "path" and P.k <= 4:
        return contains_path(H, P.k, P)
    if P.kind == "broom4":
        return contains_b4(H, P)
    if P.kind == "crown4":
        return contains_crown(H, P)
    return contains_pattern_generic(H, P)


# --- anchored edge-level matcher ------------------------------------------------


@dataclass
class EdgeMatcher:
    """Find copies of a linear pattern that use one given host edge.

    Works on raw bitmask edge lists so the search can call it on its mutable
    state.  For linear patterns and hosts an edge assignment is a copy iff
    pairwise intersections agree (empty vs. one vertex) and every triple of
    pairwise meeting edges agrees on having a common vertex.
    """

    pattern: Pattern
    _plans: list = field(init=False, repr=False)

    def __post_init__(self):
        pm = [sum(1 << v for v in e) for e in self.pattern.roles]
        k = len(pm)
        meet = [[bool(pm[i] & pm[j]) for j in range(k)] for i in range(k)]
        self._plans = []
        seen_anchor_classes = set()
        for a in range(k):
            # roles with the same meeting profile are interchangeable as anchors
            sig = self._anchor_signature(pm, a)
            if sig in seen_anchor_classes:
                continue
            seen_anchor_classes.add(sig)
            order = [a]
            while len(order) < k:
                nxt = next((j for j in range(k) if j not in order and any(meet[i][j] for i in order)), None)
                if nxt is None:
                    nxt = next(j for j in range(k) if j not in order)
                order.append(nxt)
            steps = []
            for pos in range(1, k):
                j = order[pos]
                prev = order[:pos]
                parent = next((p for p, i in enumerate(prev) if meet[i][j]), None)
                meets = tuple(meet[i][j] for i in prev)
                triples = tuple(
                    (p, q, bool(pm[prev[p]] & pm[prev[q]] & pm[j]))
                    for p, q in combinations(range(pos), 2)
                    if meet[prev[p]][j] and meet[prev[q]][j] and meet[prev[p]][prev[q]]
                )
                steps.append((parent, meets, triples))
            self._plans.append((order, steps))

    @staticmethod
    def _anchor_signature(pm, a):
        # exact automorphism classes are not needed; only skip anchors whose
        # neighbourhood structure is identical up to relabelling of the others
        k = len(pm)
        others = [j for j in range(k) if j != a]
        best = None
        for perm in permutations(others):
            lab = [a] + list(perm)
            sig = tuple(
                tuple(bool(pm[lab[i]] & pm[lab[j]]) for j in range(k)) for i in range(k)
            ) + tuple(
                bool(pm[lab[i]] & pm[lab[j]] & pm[lab[l]]) for i, j, l in combinations(range(k), 3)
            )
            if best is None or sig < best:
                best = sig
        return best

    def find(self, masks: Sequence[int], incidence: Sequence[Sequence[int]], anchor: int):
        """Host edge indices in role order, or ``None``."""
        for order, steps in self._plans:
            chosen = [anchor]
            got = self._extend(masks, incidence, steps, chosen)
            if got:
                out = [0] * len(order)
                for role, hi in zip(order, got):
                    out[role] = hi
                return out
        return None

    def _extend(self, masks, incidence, steps, chosen):
        pos = len(chosen)
        if pos - 1 == len(steps):
            return chosen
        parent, meets, triples = steps[pos - 1]
        forbid = 0
        need = []
        for p in range(pos):
            if meets[p]:
                need.append(masks[chosen[p]])
            else:
                forbid |= masks[chosen[p]]
        if parent is None:
            cands = range(len(masks))
        else:
            cands = []
            x = masks[chosen[parent]]
            while x:
                low = x & -x
                cands.extend(incidence[low.bit_length() - 1])
                x ^= low
        for h in cands:
            hm = masks[h]
            if hm & forbid or h in chosen:
                continue
            ok = True
            for m in need:
                if not hm & m:
                    ok = False
                    break
            if not ok:
                continue
            for p, q, common in triples:
                if bool(masks[chosen[p]] & masks[chosen[q]] & hm) != common:
                    ok = False
                    break
            if not ok:
                continue
            chosen.append(h)
            if self._extend(masks, incidence, steps, chosen):
                return chosen
            chosen.pop()
        return None

    def find_in(self, H: LinearHypergraph, anchor: int | None = None) -> Embedding | None:
        anchors = range(H.m) if anchor is None else [anchor]
        for a in anchors:
            got = self.find(H.masks, H.incidence, a)
            if got:
                return _embed(self.pattern, H, got, "matcher")
        return None
