"""Acceptance criteria 1-10, each with its exact check and runtime limit.

Every criterion records a PASS/FAIL line which is printed at the end of the
pytest session.  Run directly with ``python3 tests/test_acceptance.py``.
"""
from __future__ import annotations

import itertools
import random
import time

import pytest

from _registry import record
from basicqh.ahs import build_ahs, build_semisimple, nontriviality_certificate
from basicqh.axioms import mutate_entry, verify
from basicqh.census import (
    YDDatum,
    _prime_power,
    enumerate_data,
    lifting_obstruction,
    rank2_solvability,
    semisimple_classes,
    upsilon,
)
from basicqh.cyclotomic import root_of_unity
from basicqh.group_algebra import (
    cohomology_invariant,
    is_three_cocycle,
    omega_cocycle,
    random_coboundary,
    verify_twist_conditions,
)
from basicqh.nichols import build_quantum_line


def _check(n, ok, detail, elapsed, limit=None):
    within = limit is None or elapsed < limit
    lim = f" (limit {limit:.0f}s)" if limit is not None else ""
    record(n, ok and within, f"{detail}; {elapsed:.1f}s{lim}")
    assert ok, detail
    assert within, f"runtime {elapsed:.1f}s exceeds {limit}s"


def test_criterion_01_cocycles():
    t0 = time.perf_counter()
    bad = []
    for m in (3, 5, 9, 15):
        Q = root_of_unity(m)
        invs = []
        for s in range(m):
            w = omega_cocycle(m, s)
            inv = cohomology_invariant(w)
            if not is_three_cocycle(w) or inv != Q ** s:
                bad.append((m, s))
            invs.append(inv)
        if len(set(invs)) != m:
            bad.append((m, "not distinct"))
    rng = random.Random(20261016)
    cob_bad = 0
    for k in range(100):
        m = (3, 5, 9, 15)[k % 4]
        if not cohomology_invariant(random_coboundary(m, rng)).is_one():
            cob_bad += 1
    ok = not bad and cob_bad == 0
    _check(1, ok, f"cocycle failures {bad}, coboundaries with invariant != 1: {cob_bad}/100",
           time.perf_counter() - t0, 30)


def test_criterion_02_twists():
    t0 = time.perf_counter()
    bad = [(m, s) for m in (3, 5) for s in range(m) if not verify_twist_conditions(m, s).ok]
    _check(2, not bad, f"twist condition failures {bad}", time.perf_counter() - t0, 120)


@pytest.fixture(scope="module")
def line5():
    t0 = time.perf_counter()
    H = build_quantum_line(5, 1, 1)
    return H, time.perf_counter() - t0


@pytest.fixture(scope="module")
def ahs51(line5):
    H, t_h = line5
    t0 = time.perf_counter()
    res = build_ahs(H, 1)
    return res, t_h + time.perf_counter() - t0


def test_criterion_03_central_construction(ahs51):
    res, elapsed = ahs51
    A = res.sub
    N = res.H.field_order
    checks = {
        "certified": res.certified,
        "dim A = 125": A is not None and A.dim == 125,
        "dim A * m = dim H = 625": res.ledger["dimension_ok"] and res.ledger["dim_H"] == 625,
        "alpha*beta = sigma^-1": res.ledger["alpha_ok"] and res.ledger["beta_ok"],
        "associator = Phi_1": res.ledger["associator_ok"],
        "invariant Q != 1": res.invariant == root_of_unity(N, N // 5) and not res.invariant.is_one(),
        "nontrivial": nontriviality_certificate(res)["verdict"] == "non-trivial associator class",
    }
    failed = [k for k, v in checks.items() if not v]
    _check(3, not failed, f"dim {A.dim if A else None}, failed checks {failed}", elapsed, 300)


def test_criterion_04_closure_vs_upsilon(line5, ahs51):
    H, _ = line5
    t0 = time.perf_counter()
    closed = []
    for s in range(5):
        r = ahs51[0] if s == 1 else build_ahs(H, s)
        if r.closure.ok:
            closed.append(s)
    u = upsilon(YDDatum(25, ((1, 1),)), 5)
    expected = [0, 1]
    detail = (f"closure holds for s in {closed}, criterion expects {expected}; "
              f"upsilon()={u['values']} hopf_compatible={u['hopf_compatible']}")
    _check(4, closed == expected and u["values"] == [1], detail, time.perf_counter() - t0)


def test_criterion_05_rank_bound():
    t0 = time.perf_counter()
    res = enumerate_data(25, 2, "upsilon-coprime")
    _check(5, res == [], f"{len(res)} data over Z_25 of rank 2 with a unit in upsilon",
           time.perf_counter() - t0, 60)


def test_criterion_06_rank3():
    t0 = time.perf_counter()
    r25 = enumerate_data(25, 3, "finite-cartan", symmetry=True)
    r9 = enumerate_data(9, 3, "finite-cartan", symmetry=True)
    types9 = sorted({r.dynkin for _, r in r9})
    ok = r25 == [] and bool(r9) and types9 == ["A2xA1"]
    _check(6, ok, f"Z_25 rank 3: {len(r25)} data; Z_9 rank 3: {len(r9)} data of types {types9}",
           time.perf_counter() - t0, 600)


def _odd_prime_powers(limit):
    return [n for n in range(3, limit + 1, 2) if _prime_power(n)]


def test_criterion_07_solvability():
    t0 = time.perf_counter()
    types = ("A1xA1", "A2", "B2", "G2")
    disagree = []
    table = {}
    for n in _odd_prime_powers(169):
        p, k = _prime_power(n)
        found = {r.dynkin for _, r in enumerate_data(n, 2, "finite-cartan", normalize=True)}
        for t in types:
            brute = t in found
            pred = rank2_solvability(p, k, t)
            table[(n, t)] = brute
            if brute != pred:
                disagree.append((n, t, pred, brute))
    spot = all(table[(13, t)] for t in ("A2", "B2", "G2")) and not any(table[(11, t)] for t in ("A2", "B2", "G2"))
    _check(7, not disagree and spot, f"{len(_odd_prime_powers(169))} moduli, disagreements {disagree}",
           time.perf_counter() - t0)


def test_criterion_08_obstruction():
    t0 = time.perf_counter()
    a2 = [D for D, r in enumerate_data(13, 2, "finite-cartan") if r.dynkin == "A2"]
    trivial = []
    for D in a2:
        res = lifting_obstruction(D, 13)
        if not res["elements"] or not res["all_nontrivial"]:
            trivial.append(D.pairs)
    w = lifting_obstruction("A2", 13, [3, 9])["elements"]
    witness_ok = len(w) == 1 and w[0]["lambda_exponent"] == 2 and w[0]["gamma"] == [2, 2]
    _check(8, bool(a2) and not trivial and witness_ok,
           f"{len(a2)} A2 data over Z_13, {len(trivial)} with some lambda_w = 1; witness lambda_w0 = q^{w[0]['lambda_exponent']}",
           time.perf_counter() - t0)


def test_criterion_09_semisimple():
    t0 = time.perf_counter()
    bad = []
    for m in (5, 25):
        for s in range(m):
            if not verify(build_semisimple(m, s, verify_mode=None)).certified:
                bad.append((m, s))
    c1 = semisimple_classes(5, 1)
    c2 = semisimple_classes(5, 2)
    ok = not bad and c1["orbits"] == [[1, 4], [2, 3]]
    detail = (f"axiom failures {bad}; (5,1) orbits {c1['orbits']}; "
              f"(5,2) computed {c2['computed_count']} classes vs stated {c2['stated_count']} (flagged discrepancy)")
    _check(9, ok, detail, time.perf_counter() - t0)


def test_criterion_10_mutations():
    t0 = time.perf_counter()
    H = build_quantum_line(3, 1, 1)
    A = build_ahs(H, 1).sub
    corpus = [("line m=3", H), ("A(H,1)", A)] + [(f"H(3,{s})", build_semisimple(3, s)) for s in range(3)]
    assert all(verify(P).certified for _, P in corpus)
    rng = random.Random(10)
    survivors = []
    for k, (name, P) in zip(range(50), itertools.cycle(corpus)):
        desc, Q = mutate_entry(P, rng)
        if verify(Q, "basis", fail_fast=True).certified:
            survivors.append((name, desc))
    _check(10, not survivors, f"50 single-entry mutations over {len(corpus)} presentations, undetected: {survivors}",
           time.perf_counter() - t0)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
