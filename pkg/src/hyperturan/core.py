"""Linear r-uniform hypergraphs: validation, degrees, components and IO.

Vertices are the integers ``0..n-1``.  Every edge is kept both as a sorted
vertex tuple and as an ``int`` bitmask over the vertex set, so two edges
intersect iff ``a & b`` is nonzero.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "HypergraphError",
    "UniformityViolation",
    "LinearityViolation",
    "VertexOutOfRange",
    "FormatError",
    "LinearHypergraph",
    "DegreeProfile",
    "ComponentPartition",
    "validate",
    "degree_profile",
    "components",
    "parse",
    "parse_labeled",
    "serialize",
    "to_json",
    "from_json",
    "disjoint_union",
    "mask_of",
    "vertices_of",
]


class HypergraphError(ValueError):
    """Base class for rejected hypergraph input."""


class UniformityViolation(HypergraphError):
    pass


class LinearityViolation(HypergraphError):
    def __init__(self, pair, first, second):
        self.pair = pair
        self.edges = (first, second)
        super().__init__(f"pair {pair} lies in edges {first} and {second}")


class VertexOutOfRange(HypergraphError):
    pass


class FormatError(HypergraphError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class LinearHypergraph:
    """A validated linear r-uniform hypergraph.

    Build instances with :func:`validate`; the constructor trusts its input.
    ``edges`` is in canonical order: each edge sorted, the list sorted
    lexicographically.
    """

    n: int
    r: int
    edges: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(mask_of(e) for e in self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices through each vertex, ascending."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def pair_edge(self) -> dict[tuple[int, int], int]:
        """Map from each covered pair ``(u, v)``, ``u < v``, to its edge index."""
        return {p: i for i, e in enumerate(self.edges) for p in combinations(e, 2)}

    @cached_property
    def edge_index(self) -> dict[tuple[int, ...], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.incidence)

    def index_of(self, edge: Iterable[int]) -> int:
        """Index of ``edge`` in :attr:`edges`; ``KeyError`` if absent."""
        return self.edge_index[tuple(sorted(edge))]

    def has_edge(self, edge: Iterable[int]) -> bool:
        return tuple(sorted(edge)) in self.edge_index

    def without_edges(self, drop: Iterable[Sequence[int]]) -> "LinearHypergraph":
        gone = {tuple(sorted(e)) for e in drop}
        return LinearHypergraph(self.n, self.r, tuple(e for e in self.edges if e not in gone))

    def with_edges(self, extra: Iterable[Sequence[int]]) -> "LinearHypergraph":
        return validate(self.n, self.r, list(self.edges) + [list(e) for e in extra])

    def to_dict(self) -> dict:
        return {"r": self.r, "n": self.n, "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    min: int
    max: int
    histogram: dict[int, int] = field(default_factory=dict)


@dataclass(frozen=True)
class ComponentPartition:
    labels: tuple[int, ...]
    count: int

    def members(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.count)]
        for v, c in enumerate(self.labels):
            out[c].append(v)
        return out


def validate(n: int, r: int, raw_edges: Iterable[Sequence[int]]) -> LinearHypergraph:
    """Check uniformity, range and linearity, and return the canonical hypergraph.

    Duplicate edges are collapsed.
    """
    if n < 0:
        raise HypergraphError(f"vertex count must be non-negative, got {n}")
    if r < 2:
        raise HypergraphError(f"uniformity must be at least 2, got {r}")
    seen: set[tuple[int, ...]] = set()
    for raw in raw_edges:
        e = tuple(sorted(int(v) for v in raw))
        if len(e) != r or len(set(e)) != r:
            raise UniformityViolation(f"edge {list(raw)} does not have {r} distinct vertices")
        if e[0] < 0 or e[-1] >= n:
            raise VertexOutOfRange(f"edge {list(raw)} has a vertex outside [0, {n})")
        seen.add(e)
    edges = tuple(sorted(seen))
    owner: dict[tuple[int, int], tuple[int, ...]] = {}
    for e in edges:
        for p in combinations(e, 2):
            prev = owner.get(p)
            if prev is not None:
                raise LinearityViolation(p, prev, e)
            owner[p] = e
    return LinearHypergraph(n, r, edges)


def degree_profile(H: LinearHypergraph) -> DegreeProfile:
    d = H.degrees
    if not d:
        return DegreeProfile((), 0, 0, {})
    return DegreeProfile(d, min(d), max(d), dict(sorted(Counter(d).items())))


def components(H: LinearHypergraph) -> ComponentPartition:
    """Connected components; labels follow the smallest vertex of each component."""
    parent = list(range(H.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in H.edges:
        a = find(e[0])
        for v in e[1:]:
            b = find(v)
            if a != b:
                if b < a:
                    a, b = b, a
                parent[b] = a
    labels = []
    relabel: dict[int, int] = {}
    for v in range(H.n):
        root = find(v)
        if root not in relabel:
            relabel[root] = len(relabel)
        labels.append(relabel[root])
    return ComponentPartition(tuple(labels), len(relabel))


def disjoint_union(parts: Sequence[LinearHypergraph]) -> LinearHypergraph:
    """Place the hypergraphs side by side on consecutive vertex blocks."""
    if not parts:
        raise HypergraphError("need at least one hypergraph")
    r = parts[0].r
    if any(p.r != r for p in parts):
        raise UniformityViolation("all parts must share the same uniformity")
    edges = []
    offset = 0
    for p in parts:
        edges.extend(tuple(v + offset for v in e) for e in p.edges)
        offset += p.n
    return LinearHypergraph(offset, r, tuple(sorted(edges)))


# --- .lhg text format -------------------------------------------------------


def _data_lines(text: str):
    for lineno, line in enumerate(text.split("\n"), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        yield lineno, s


def _ints(s: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in s.split()]
    except ValueError:
        raise FormatError(f"expected integers, got {s!r}", lineno) from None


def _read_lhg(text: str):
    lines = list(_data_lines(text))
    if not lines:
        raise FormatError("missing header line", 1)
    lineno, head = lines[0]
    header = _ints(head, lineno)
    if len(header) != 3:
        raise FormatError("header must be 'r n m'", lineno)
    r, n, m = header
    if min(header) < 0:
        raise FormatError("header values must be non-negative", lineno)
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header declares {m} edges, found {len(body)}", body[-1][0] if body else lineno)
    edges = []
    for lineno, s in body:
        e = _ints(s, lineno)
        if len(e) != r:
            raise FormatError(f"edge has {len(e)} vertices, expected {r}", lineno)
        edges.append(e)
    return r, n, edges


def parse(text: str) -> LinearHypergraph:
    """Read the ``.lhg`` format: a ``r n m`` header, then ``m`` edge lines."""
    r, n, edges = _read_lhg(text)
    return validate(n, r, edges)


def parse_labeled(text: str) -> tuple[LinearHypergraph, list[int]]:
    """Like :func:`parse` but compress arbitrary vertex labels onto ``0..n-1``.

    Returns the hypergraph and ``labels`` with ``labels[i]`` the original id of
    vertex ``i``.  Labels absent from every edge but below the declared ``n``
    are kept as isolated vertices.
    """
    r, n, edges = _read_lhg(text)
    used = sorted({v for e in edges for v in e} | set(range(n)))
    index = {v: i for i, v in enumerate(used)}
    H = validate(len(used), r, [[index[v] for v in e] for e in edges])
    return H, used


def serialize(H: LinearHypergraph) -> str:
    lines = [f"{H.r} {H.n} {H.m}"]
    lines.extend(" ".join(map(str, e)) for e in H.edges)
    return "\n".join(lines) + "\n"


def to_json(H: LinearHypergraph, labels: Sequence[int] | None = None) -> str:
    d = H.to_dict()
    if labels is not None:
        d["labels"] = list(labels)
    return json.dumps(d)


def from_json(text: str) -> LinearHypergraph:
    d = json.loads(text)
    try:
        return validate(int(d["n"]), int(d["r"]), d["edges"])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed hypergraph JSON: {exc}") from None
