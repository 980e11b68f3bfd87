from __future__ import annotations

import random

import pytest

from basicqh.ahs import (
    antipode_image,
    build_ahs,
    build_semisimple,
    delta_closure_witness,
    nontriviality_certificate,
    sweep,
)
from basicqh.axioms import mutate_entry, verify
from basicqh.cyclotomic import root_of_unity
from basicqh.nichols import build_quantum_line, build_quantum_plane


@pytest.fixture(scope="module")
def line3():
    return build_quantum_line(3, 1, 1)


@pytest.fixture(scope="module")
def ahs31(line3):
    return build_ahs(line3, 1)


def test_line_m3_s1_certified(ahs31):
    r = ahs31
    assert r.certified
    assert r.sub.dim == 27
    assert r.ledger["dim_H"] == 81 and r.ledger["dimension_ok"]
    for k in ("associator_ok", "alpha_ok", "beta_ok", "counit_alpha_beta_ok", "invariant_ok"):
        assert r.ledger[k], k
    assert r.invariant == root_of_unity(3)
    assert r.sub.labels[0] == "1|e_0" and r.sub.labels[3] == "x|e_0"


def test_delta_and_antipode_diagnostics(ahs31):
    w = delta_closure_witness(ahs31)
    assert w["member"] and w["formula_match"]
    a = antipode_image(ahs31)
    assert a["member"]
    assert a["formula_match"] == {"+b": True, "-b": False}


@pytest.mark.parametrize("s", [0, 2])
def test_closure_fails_outside_upsilon(line3, s):
    r = build_ahs(line3, s)
    assert not r.closure.comult
    assert "comult" in r.closure.witnesses
    assert r.sub is None and not r.certified


def test_sweep_matches_upsilon(line3):
    table = sweep(line3)
    assert [s for s, (ok, _, _) in table.items() if ok] == [1]
    assert table[1][1]


def test_untwisted_delta_is_not_a_member(ahs31, line3):
    r0 = build_ahs(line3, 0)
    assert delta_closure_witness(r0)["member"] is False


@pytest.mark.parametrize("convention,closed", [("literal", [2]), ("left", [])])
def test_other_conventions(convention, closed):
    H = build_quantum_line(3, 1, 1, convention=convention)
    table = sweep(H)
    assert [s for s, (ok, _, _) in table.items() if ok] == closed


def test_hopf_compatible_plane_at_s0():
    H = build_quantum_plane(3, [(3, 1), (6, 1)])
    r = build_ahs(H, 0)
    assert r.certified
    assert r.sub.dim * 3 == H.dim
    assert r.invariant.is_one()
    assert nontriviality_certificate(r)["verdict"] == "trivial"


def test_group_basis_build_agrees():
    H = build_quantum_line(3, 1, 1, basis="group")
    r = build_ahs(H, 1)
    assert r.certified and r.sub.dim == 27


def test_semisimple_examples():
    P = build_semisimple(5, 0)
    assert all(v.is_one() for v in P.assoc.values())
    assert verify(build_semisimple(5, 2, verify_mode=None)).certified
    c = nontriviality_certificate(build_semisimple(25, 5))
    assert c["verdict"] == "non-trivial associator class" and c["invariant_order"] == 5
    assert nontriviality_certificate(build_semisimple(5, 3))["invariant_order"] == 5
    assert nontriviality_certificate(build_semisimple(5, 0))["verdict"] == "trivial"
    with pytest.raises(ValueError):
        build_semisimple(5, 5)


def test_semisimple_group_basis():
    P = build_semisimple(5, 2, basis="group")
    assert P.labels[1] == "sigma^1"


def test_mutations_of_ahs_are_detected(ahs31):
    rng = random.Random(3)
    for _ in range(10):
        desc, Q = mutate_entry(ahs31.sub, rng)
        assert not verify(Q, fail_fast=True).certified, desc


def test_ahs_json_contains_presentation(ahs31):
    obj = ahs31.to_json()
    assert obj["certified"] and obj["presentation"]["dimension"] == 27
    assert "presentation" not in ahs31.to_json(include_presentation=False)
