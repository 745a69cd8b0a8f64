"""Steiner systems S(2, r, n): counting, classical constructions, verification."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import HypergraphError, LinearHypergraph, validate

__all__ = [
    "DesignError",
    "DivisibilityFailure",
    "NotAdmissible",
    "NotPrime",
    "PreconditionViolation",
    "UniquenessFailure",
    "SteinerCounts",
    "DesignSpec",
    "is_prime",
    "steiner_counts",
    "design_spec",
    "construct_design",
    "construct_sts",
    "construct_affine_plane",
    "construct_projective_plane",
    "verify_steiner",
    "parallel_classes",
    "unique_avoiding_edge",
]


class DesignError(HypergraphError):
    pass


class DivisibilityFailure(DesignError):
    pass


class NotAdmissible(DesignError):
    pass


class NotPrime(DesignError):
    pass


class PreconditionViolation(DesignError):
    pass


class UniquenessFailure(RuntimeError):
    """Raised when an exhaustive check contradicts a uniqueness guarantee."""


@dataclass(frozen=True)
class SteinerCounts:
    edges: int
    degree: int


@dataclass(frozen=True)
class DesignSpec:
    t: int
    r: int
    n: int
    status: str  # "constructible" | "known_nonexistent" | "unknown"
    method: str | None = None
    param: int | None = None

    @property
    def constructible(self) -> bool:
        return self.status == "constructible"


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    i = 2
    while i * i <= q:
        if q % i == 0:
            return False
        i += 1
    return True


def steiner_counts(n: int, r: int) -> SteinerCounts:
    """Block count and replication number of an S(2, r, n), if integral."""
    if r < 2 or n < r:
        raise DesignError(f"need r >= 2 and n >= r, got n={n}, r={r}")
    edges = Fraction(n * (n - 1), r * (r - 1))
    degree = Fraction(n - 1, r - 1)
    if degree.denominator != 1:
        raise DivisibilityFailure(f"(r-1) does not divide (n-1): degree would be {degree}")
    if edges.denominator != 1:
        raise DivisibilityFailure(f"r(r-1) does not divide n(n-1): block count would be {edges}")
    return SteinerCounts(int(edges), int(degree))


def _int_sqrt(x: int) -> int | None:
    s = int(round(x ** 0.5))
    for c in (s - 1, s, s + 1):
        if c >= 0 and c * c == x:
            return c
    return None


def design_spec(r: int, n: int) -> DesignSpec:
    """Which implemented construction, if any, yields an S(2, r, n).

    ``unknown`` is reported whenever none of the implemented constructions
    applies; it is never a claim about existence.
    """
    if n <= 1:
        return DesignSpec(2, r, n, "constructible", "trivial", n)
    if n == r:
        return DesignSpec(2, r, n, "constructible", "single_block", n)
    if n < r:
        return DesignSpec(2, r, n, "known_nonexistent")
    try:
        steiner_counts(n, r)
    except DivisibilityFailure:
        return DesignSpec(2, r, n, "known_nonexistent")
    if r == 3 and n % 6 in (1, 3):
        return DesignSpec(2, r, n, "constructible", "sts", n)
    if n == r * r and is_prime(r):
        return DesignSpec(2, r, n, "constructible", "ag", r)
    q = r - 1
    if n == q * q + q + 1 and is_prime(q):
        return DesignSpec(2, r, n, "constructible", "pg", q)
    if r == 2:
        return DesignSpec(2, r, n, "constructible", "complete_graph", n)
    # Fisher-type impossibilities known in closed form: PG(2,6) (Bruck-Ryser) and AG(2,6).
    if (r, n) in {(7, 43), (6, 36)}:
        return DesignSpec(2, r, n, "known_nonexistent")
    return DesignSpec(2, r, n, "unknown")


def construct_design(spec: DesignSpec) -> LinearHypergraph:
    if not spec.constructible:
        raise DesignError(f"no construction for S(2,{spec.r},{spec.n}) (status {spec.status})")
    if spec.method == "trivial":
        return LinearHypergraph(spec.n, spec.r, ())
    if spec.method == "single_block":
        return LinearHypergraph(spec.n, spec.r, (tuple(range(spec.n)),))
    if spec.method == "sts":
        return construct_sts(spec.n)
    if spec.method == "ag":
        return construct_affine_plane(spec.param)
    if spec.method == "pg":
        return construct_projective_plane(spec.param)
    if spec.method == "complete_graph":
        return validate(spec.n, 2, combinations(range(spec.n), 2))
    raise DesignError(f"unknown method {spec.method!r}")


def construct_sts(n: int) -> LinearHypergraph:
    """Steiner triple system on ``n`` points (Bose for n = 3 mod 6, Skolem for n = 1 mod 6)."""
    if n < 3 or n % 6 not in (1, 3):
        raise NotAdmissible(f"a Steiner triple system needs n = 1 or 3 (mod 6) and n >= 3, got {n}")
    if n % 6 == 3:
        blocks = _bose(n // 3)
    else:
        blocks = _skolem((n - 1) // 6)
    H = validate(n, 3, blocks)
    assert H.m == n * (n - 1) // 6
    return H


def _bose(q: int) -> list[tuple[int, int, int]]:
    # idempotent commutative quasigroup of odd order q: x o y = (x + y) / 2 mod q
    half = (q + 1) // 2

    def pt(x, i):
        return x + i * q

    blocks = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(q)]
    for x, y in combinations(range(q), 2):
        z = (x + y) * half % q
        for i in range(3):
            blocks.append((pt(x, i), pt(y, i), pt(z, (i + 1) % 3)))
    return blocks


def _skolem(m: int) -> list[tuple[int, int, int]]:
    # half-idempotent commutative quasigroup of order 2m: x o x = (x + m) o (x + m) = x mod m
    order = 2 * m
    relabel = [0] * order
    for i in range(m):
        relabel[2 * i] = i
        relabel[2 * i + 1] = m + i

    def op(x, y):
        return relabel[(x + y) % order]

    inf = 3 * order

    def pt(x, i):
        return x + i * order

    blocks = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(m)]
    for x in range(m):
        for i in range(3):
            blocks.append((inf, pt(x + m, i), pt(x, (i + 1) % 3)))
    for x, y in combinations(range(order), 2):
        z = op(x, y)
        for i in range(3):
            blocks.append((pt(x, i), pt(y, i), pt(z, (i + 1) % 3)))
    return blocks


def construct_affine_plane(q: int) -> LinearHypergraph:
    """AG(2, q) for prime ``q``; point ``(x, y)`` is vertex ``x*q + y``."""
    if not is_prime(q):
        raise NotPrime(f"affine plane order must be prime, got {q}")
    lines = []
    for a in range(q):
        for b in range(q):
            lines.append([x * q + (a * x + b) % q for x in range(q)])
    for c in range(q):
        lines.append([c * q + y for y in range(q)])
    return validate(q * q, q, lines)


def parallel_classes(H: LinearHypergraph) -> list[list[int]]:
    """Group edge indices into classes of pairwise disjoint edges (greedy by first fit).

    For an affine plane this recovers its parallel classes exactly, since
    parallelism is an equivalence relation there.
    """
    classes: list[list[int]] = []
    masks = H.masks
    for i, m in enumerate(masks):
        for cls in classes:
            if all(masks[j] & m == 0 for j in cls):
                cls.append(i)
                break
        else:
            classes.append([i])
    return classes


def _normalized_points(q: int) -> list[tuple[int, int, int]]:
    # first nonzero coordinate equal to 1
    pts = []
    for x in range(q):
        for y in range(q):
            pts.append((1, x, y))
    for y in range(q):
        pts.append((0, 1, y))
    pts.append((0, 0, 1))
    return pts


def construct_projective_plane(q: int) -> LinearHypergraph:
    """PG(2, q) for prime ``q``: points and lines are the 1-dim subspaces of F_q^3."""
    if not is_prime(q):
        raise NotPrime(f"projective plane order must be prime, got {q}")
    pts = _normalized_points(q)
    lines = []
    for a in pts:
        lines.append([i for i, p in enumerate(pts) if (a[0] * p[0] + a[1] * p[1] + a[2] * p[2]) % q == 0])
    return validate(len(pts), q + 1, lines)


def verify_steiner(H: LinearHypergraph) -> bool:
    """True iff every pair of the ``n`` vertices lies in exactly one edge."""
    n = H.n
    count = [[0] * n for _ in range(n)]
    for e in H.edges:
        for u, v in combinations(e, 2):
            count[u][v] += 1
    return all(count[u][v] == 1 for u in range(n) for v in range(u + 1, n))


def unique_avoiding_edge(H: LinearHypergraph, e, v: int) -> tuple[int, ...]:
    """The one edge through ``v`` missing ``e`` in an S(2, r, r^2).

    Every other edge through ``v`` meets ``e`` in exactly one vertex; both facts
    are checked exhaustively.
    """
    e = tuple(sorted(e))
    r = H.r
    if H.n != r * r:
        raise PreconditionViolation(f"need n = r^2 = {r * r}, got n = {H.n}")
    if not H.has_edge(e):
        raise PreconditionViolation(f"{e} is not an edge")
    if not 0 <= v < H.n or v in e:
        raise PreconditionViolation(f"vertex {v} must be a vertex outside {e}")
    if not verify_steiner(H):
        raise PreconditionViolation("host is not a Steiner system S(2, r, r^2)")
    emask = H.masks[H.index_of(e)]
    avoiding = []
    for i in H.incidence[v]:
        meet = (H.masks[i] & emask).bit_count()
        if meet == 0:
            avoiding.append(H.edges[i])
        elif meet != 1:
            raise UniquenessFailure(f"edge {H.edges[i]} meets {e} in {meet} vertices")
    if len(avoiding) != 1:
        raise UniquenessFailure(f"{len(avoiding)} edges through {v} avoid {e}")
    return avoiding[0]
