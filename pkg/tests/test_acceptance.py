"""Exit criteria.  Each test prints one PASS/FAIL line (also collected into the
terminal summary by ``conftest.py``)."""

import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from hyperturan.bounds import p4_lower_construction, tree_lower_construction, verify_b4_extremal
from hyperturan.corpus import random_corpus
from hyperturan.designs import (
    construct_affine_plane,
    construct_projective_plane,
    construct_sts,
    steiner_counts,
    unique_avoiding_edge,
    verify_steiner,
)
from hyperturan.patterns import (
    EdgeMatcher,
    broom,
    contains,
    contains_b4,
    contains_crown,
    contains_path,
    contains_pattern_generic,
    contains_star,
    crown,
    find_crown_with_base,
    path,
    star,
)
from hyperturan.search import SearchConfig, conjecture_probe, exact_linear_turan, max_linear_system

RESULTS: list[str] = []
CORPUS_SEED = 20261015


@contextmanager
def criterion(label, limit_s):
    t0 = time.perf_counter()
    try:
        yield
        dt = time.perf_counter() - t0
        assert dt < limit_s, f"runtime {dt:.2f}s exceeds {limit_s}s"
    except BaseException as exc:
        line = f"FAIL  {label}: {exc}"
        RESULTS.append(line)
        print(line)
        raise
    line = f"PASS  {label} ({time.perf_counter() - t0:.2f}s)"
    RESULTS.append(line)
    print(line)


@pytest.fixture(scope="module")
def maximal_corpus():
    return random_corpus(500, CORPUS_SEED, (3,), (6, 15), maximal=True)


def test_c1_steiner_counts():
    with criterion("1 Steiner counts match for STS(7), STS(9), AG(2,3), PG(2,2), PG(2,3)", 1.0):
        for H in (construct_sts(7), construct_sts(9), construct_affine_plane(3),
                  construct_projective_plane(2), construct_projective_plane(3)):
            c = steiner_counts(H.n, H.r)
            assert verify_steiner(H)
            assert H.m == c.edges
            assert set(H.degrees) == {c.degree}


def test_c2_b4_equality_at_9():
    with criterion("2 B4 equality at n=9, r=3 (AG(2,3) certified; exact search = 12, optimal)", 10.0):
        ag = construct_affine_plane(3)
        assert ag.m == 12
        assert contains_b4(ag) is None
        assert verify_b4_extremal(ag).passed
        res = exact_linear_turan(9, 3, [broom(3)], SearchConfig(symmetry=True))
        assert res.value == 12 and res.optimal


def test_c3_tree_lower_bound_instance():
    with criterion("3 tree lower construction (14,3,4): 14 edges, no P4/S4/B4", 1.0):
        rep = tree_lower_construction(14, 3, 4)
        W = rep.witness
        assert W.m == 14 and rep.value == Fraction(14 * 3, 3)
        assert contains_path(W, 4) is None
        assert contains_star(W, 4) is None
        assert contains_b4(W) is None


def test_c4_p4_lower_instances():
    with criterion("4 P4 lower construction at n=9, 18: 12 and 24 edges, P4-free", 1.0):
        for n, m in ((9, 12), (18, 24)):
            rep = p4_lower_construction(n, 3)
            assert rep.witness.m == m
            assert rep.value == Fraction(4 * n, 3)
            assert contains_path(rep.witness, 4) is None


def test_c5_unique_avoiding_edge():
    with criterion("5 unique disjoint edge in AG(2,3), AG(2,5): zero violations", 5.0):
        for q in (3, 5):
            H = construct_affine_plane(q)
            violations = 0
            for e, em in zip(H.edges, H.masks):
                for v in range(H.n):
                    if v in e:
                        continue
                    meets = [(H.masks[j] & em).bit_count() for j in H.incidence[v]]
                    if meets.count(0) != 1 or meets.count(1) != q:
                        violations += 1
                    f = unique_avoiding_edge(H, e, v)
                    if v not in f or H.masks[H.index_of(f)] & em:
                        violations += 1
            assert violations == 0


def test_c6_crown_consistency(maximal_corpus):
    with criterion("6 crown present whenever |E| > (2r-1)n/r on 500 maximal STS-like systems + S(2,3,13), S(2,3,15)", 30.0):
        hosts = list(maximal_corpus) + [construct_sts(13), construct_sts(15)]
        dense = 0
        for H in hosts:
            if H.m > Fraction((2 * H.r - 1) * H.n, H.r):
                dense += 1
                assert contains_crown(H) is not None, H
        assert dense >= 2
        S13 = construct_sts(13)
        for e in S13.edges:
            emb = find_crown_with_base(S13, e)
            assert emb is not None and emb.route == "greedy" and emb.is_valid(crown(3), S13)


def test_c7_detector_oracle_equivalence(maximal_corpus):
    with criterion("7 specialized detectors == generic embedder on 7 kinds x 500 instances", 60.0):
        mixed = random_corpus(500, CORPUS_SEED + 1, (3, 4), (4, 15), maximal=False)
        checked = 0
        for corpus in (maximal_corpus, mixed):
            for H in corpus:
                r = H.r
                for P in (star(3, r), star(4, r), path(2, r), path(3, r), path(4, r), broom(r), crown(r)):
                    a = contains(H, P)
                    b = contains_pattern_generic(H, P)
                    assert (a is None) == (b is None), (H, P)
                    if a is not None:
                        assert a.is_valid(P, H)
                    checked += 1
        assert checked == 7 * 1000


def test_c8_search_formula_agreement():
    with criterion("8 search: P2 = floor(n/3) n=3..12; S3 at n=6 = 4 (2-regular); packings 7,12,4", 60.0):
        for n in range(3, 13):
            res = exact_linear_turan(n, 3, [path(2, 3)])
            assert res.optimal and res.value == n // 3
        res = exact_linear_turan(6, 3, [star(3, 3)])
        assert res.optimal and res.value == 4 and set(res.witness.degrees) == {2}
        for n, v in ((7, 7), (9, 12), (6, 4)):
            res = max_linear_system(n, 3)
            assert res.optimal and res.value == v


def test_c9_conjecture_probe():
    with criterion("9 P4 probe: n=9 gives 12 optimal; n=12 within ceiling 16 under 30 min", 1900.0):
        pr = conjecture_probe(9, 3)
        assert pr.result.value == 12 and pr.result.optimal and pr.status == "consistent"
        pr = conjecture_probe(12, 3, SearchConfig(time_budget=1800))
        assert pr.ceiling == 16
        # a value above 16 with a validated witness would falsify the conjecture
        assert pr.status != "violation", f"P4-free witness with {pr.result.value} > 16 edges: {pr.result.witness.edges}"
        assert pr.status == ("consistent" if pr.result.optimal else "inconclusive")
        print(f"      n=12: value={pr.result.value} optimal={pr.result.optimal} status={pr.status}")
