"""Bound formulas, lower-bound witness constructions and extremal certificates.

Every value is an exact :class:`~fractions.Fraction`; integer rounding is left
to the caller (``BoundReport.floor``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import patterns as pt
from .core import HypergraphError, LinearHypergraph, components, degree_profile, disjoint_union
from .designs import DesignError, DivisibilityFailure, construct_design, design_spec, verify_steiner

__all__ = [
    "UnsupportedKind",
    "DesignUnavailable",
    "ConsistencyError",
    "BoundReport",
    "Certificate",
    "EdgeWeightDiagnostics",
    "upper_bound",
    "pair_bound",
    "tree_lower_construction",
    "p4_lower_construction",
    "verify_b4_extremal",
    "edge_weight_diagnostics",
]


class UnsupportedKind(HypergraphError):
    pass


class DesignUnavailable(DesignError):
    def __init__(self, t, r, status):
        self.t, self.r, self.status = t, r, status
        super().__init__(f"no construction for S(2,{r},{t}) (status: {status})")


class ConsistencyError(RuntimeError):
    """Two independent checks of the same claim disagreed."""


@dataclass
class BoundReport:
    statement: str
    side: str  # "lower" | "upper" | "exact"
    value: Fraction
    witness: LinearHypergraph | None = None
    assumptions: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def floor(self) -> int:
        return self.value.numerator // self.value.denominator

    def to_dict(self) -> dict:
        d = {
            "statement": self.statement,
            "side": self.side,
            "value": f"{self.value.numerator}/{self.value.denominator}",
            "floor": self.floor,
            "assumptions": [{"condition": c, "holds": h} for c, h in self.assumptions],
        }
        if self.witness is not None:
            d["witness"] = self.witness.to_dict()
        return d


def pair_bound(n: int, r: int) -> Fraction:
    """C(n,2)/C(r,2): no linear r-graph on n vertices has more edges."""
    return Fraction(comb(n, 2), comb(r, 2))


_KINDS = {
    "star": "Prop1",
    "b4": "Thm3",
    "crown4": "Thm4",
    "path": "PathUpper",
    "pair": "PairBound",
    "p2": "P2formula",
}


def upper_bound(kind: str, n: int, r: int, k: int | None = None) -> BoundReport:
    """Upper bound on the linear Turan number for ``kind``.

    Kinds: ``star`` (needs ``k``), ``b4``, ``crown4``, ``path`` (``k >= 3``),
    ``p2`` (exact value ``floor(n/r)``) and ``pair``.
    """
    kind = kind.lower()
    if kind == "crown":
        kind = "crown4"
    if kind not in _KINDS:
        raise UnsupportedKind(f"unknown bound kind {kind!r}")
    if r < 3 and kind != "pair":
        raise UnsupportedKind("the bounds are stated for r >= 3")
    if n < 0:
        raise HypergraphError("n must be non-negative")
    if kind == "star":
        if k is None or k < 1:
            raise UnsupportedKind("star bound needs k >= 1")
        # equality needs a (k-1)-regular linear r-graph on n vertices
        conds = [
            (f"r | n(k-1): {r} | {n * (k - 1)}", n * (k - 1) % r == 0),
            (f"(k-1)(r-1) <= n-1: {(k - 1) * (r - 1)} <= {n - 1}", (k - 1) * (r - 1) <= n - 1),
        ]
        return BoundReport("Prop1", "upper", Fraction(n * (k - 1), r), assumptions=conds)
    if kind == "b4":
        return BoundReport("Thm3", "upper", Fraction((r + 1) * n, r))
    if kind == "crown4":
        return BoundReport("Thm4", "upper", Fraction((2 * r - 1) * n, r))
    if kind == "pair":
        return BoundReport("PairBound", "upper", pair_bound(n, r))
    if kind == "p2":
        return BoundReport("P2formula", "exact", Fraction(n // r))
    if k is None or k < 3:
        raise UnsupportedKind("path bound needs k >= 3")
    if k == 3:
        return BoundReport("P3upper", "upper", Fraction(n))
    return BoundReport("ZhouYuanPk", "upper", Fraction((2 * r - 3) * k * n, 2))


def _trees_with_k_edges(k: int, r: int) -> list[pt.Pattern]:
    # every tree with k <= 4 edges, up to isomorphism
    if k == 1:
        return [pt.path(1, r)]
    if k == 2:
        return [pt.path(2, r)]
    if k == 3:
        return [pt.path(3, r), pt.star(3, r)]
    if k == 4:
        return [pt.path(4, r), pt.star(4, r), pt.broom(r)]
    return []


def _copies_of_design(n: int, r: int, t: int) -> tuple[LinearHypergraph, list[tuple[str, bool]]]:
    spec = design_spec(r, t)
    conds = [(f"{t} | {n}", n % t == 0), (f"S(2,{r},{t}) constructible ({spec.method or spec.status})", spec.constructible)]
    if n % t:
        raise DivisibilityFailure(f"{t} does not divide n={n}")
    if not spec.constructible:
        raise DesignUnavailable(t, r, spec.status)
    block = construct_design(spec)
    return disjoint_union([block] * (n // t)), conds


def tree_lower_construction(n: int, r: int, k: int, tree: pt.Tree | None = None) -> BoundReport:
    """Disjoint copies of S(2, r, t), ``t = (r-1)(k-1)+1``: free of every k-edge tree.

    Each component has ``t < (r-1)k+1`` vertices, too few to hold a k-edge
    linear tree; for ``k <= 4`` the detectors re-check this on the witness.
    """
    if r < 3 or k < 2:
        raise HypergraphError("need r >= 3 and k >= 2")
    t = (r - 1) * (k - 1) + 1
    value = Fraction(n * (k - 1), r)
    if n == 0:
        return BoundReport("Thm2", "lower", Fraction(0), LinearHypergraph(0, r, ()))
    W, conds = _copies_of_design(n, r, t)
    if Fraction(W.m) != value:
        raise ConsistencyError(f"witness has {W.m} edges, expected {value}")
    sizes = [len(c) for c in components(W).members()]
    by_count = max(sizes) < (r - 1) * k + 1
    checks = _trees_with_k_edges(k, r)
    if tree is not None:
        checks.append(pt.expand_tree(tree, r))
    by_detector = all(pt.contains(W, P) is None for P in checks)
    if checks and by_count != by_detector:
        raise ConsistencyError("vertex-count argument and detectors disagree on the witness")
    if not by_count:
        raise ConsistencyError("witness component large enough to hold the tree")
    return BoundReport("Thm2", "lower", value, W, conds)


def p4_lower_construction(n: int, r: int) -> BoundReport:
    """Disjoint copies of S(2, r, r^2) with (r+1)n/r edges and no linear P_4."""
    if r < 3:
        raise HypergraphError("need r >= 3")
    value = Fraction((r + 1) * n, r)
    if n == 0:
        return BoundReport("Thm5", "lower", Fraction(0), LinearHypergraph(0, r, ()))
    W, conds = _copies_of_design(n, r, r * r)
    if Fraction(W.m) != value:
        raise ConsistencyError(f"witness has {W.m} edges, expected {value}")
    if pt.contains_path(W, 4) is not None:
        raise ConsistencyError("P_4 found in a disjoint union of S(2,r,r^2)")
    return BoundReport("Thm5", "lower", value, W, conds)


@dataclass
class Certificate:
    passed: bool
    clause: str | None = None
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "clause": self.clause, "detail": self.detail}


def verify_b4_extremal(H: LinearHypergraph) -> Certificate:
    """Check that ``H`` is B_4-free, has (r+1)n/r edges, and is a union of S(2, r, r^2).

    Clauses, checked in order: ``a`` no B_4; ``b`` edge count; ``c``
    (r+1)-regular; ``d`` every component has r^2 vertices; ``e`` every
    component is a Steiner system.
    """
    r, n = H.r, H.n
    emb = pt.contains_b4(H)
    if emb is not None:
        return Certificate(False, "a", {"b4": emb.to_dict()})
    target = Fraction((r + 1) * n, r)
    if Fraction(H.m) != target:
        return Certificate(False, "b", {"edges": H.m, "expected": str(target)})
    for v, d in enumerate(H.degrees):
        if d != r + 1:
            return Certificate(False, "c", {"vertex": v, "degree": d, "expected": r + 1})
    parts = components(H).members()
    for cid, verts in enumerate(parts):
        if len(verts) != r * r:
            return Certificate(False, "d", {"component": cid, "size": len(verts), "expected": r * r})
    for cid, verts in enumerate(parts):
        index = {v: i for i, v in enumerate(verts)}
        sub = LinearHypergraph(len(verts), r, tuple(sorted(
            tuple(index[v] for v in e) for e in H.edges if e[0] in index)))
        if not verify_steiner(sub):
            missing = _uncovered_pair(sub)
            pair = [verts[missing[0]], verts[missing[1]]] if missing else None
            return Certificate(False, "e", {"component": cid, "uncovered_pair": pair})
    return Certificate(True)


def _uncovered_pair(H: LinearHypergraph):
    covered = H.pair_edge
    for u in range(H.n):
        for v in range(u + 1, H.n):
            if (u, v) not in covered:
                return (u, v)
    return None


@dataclass
class EdgeWeightDiagnostics:
    A: int
    B: int
    s: list[int]
    s_star: list[int]
    large: list[int]

    def to_dict(self) -> dict:
        return {"A": self.A, "B": self.B, "s": self.s, "s_star": self.s_star, "large": self.large}


def edge_weight_diagnostics(H: LinearHypergraph) -> EdgeWeightDiagnostics:
    """Edge weights ``s(e)`` (sum of degrees on ``e``) and their capped version.

    ``A = 4r-3`` is the large-degree threshold, ``B = r^2+3r-3`` the cap
    applied to edges touching a large vertex.
    """
    r = H.r
    if r < 3:
        raise HypergraphError("diagnostics are defined for r >= 3")
    A = 4 * r - 3
    B = A + r * (r - 1)
    d = degree_profile(H).degrees
    large = [v for v in range(H.n) if d[v] >= A]
    big = set(large)
    s = [sum(d[v] for v in e) for e in H.edges]
    s_star = [min(w, B) if big.intersection(e) else w for w, e in zip(s, H.edges)]
    return EdgeWeightDiagnostics(A, B, s, s_star, large)
