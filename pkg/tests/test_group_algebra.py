from __future__ import annotations

import itertools
import random

import pytest

from basicqh.cyclotomic import one, root_of_unity
from basicqh.group_algebra import (
    associator,
    coboundary,
    cohomology_invariant,
    group_element,
    idempotent,
    idempotent_embedding_check,
    is_three_cocycle,
    omega,
    omega_cocycle,
    random_coboundary,
    twist_coefficient,
    twist_j,
    unit_tensor,
    verify_twist_conditions,
)


def test_idempotent_examples():
    assert idempotent(1, 0) == unit_tensor(1, 1, "group")
    total = idempotent(3, 0) + idempotent(3, 1) + idempotent(3, 2)
    assert total == unit_tensor(3, 1, "group")
    e = idempotent(9, 2)
    assert group_element(9, 1) * e == e.scale(root_of_unity(9, 2))
    with pytest.raises(ValueError):
        idempotent(3, 3)


@pytest.mark.parametrize("n", [2, 3, 5, 9, 16])
def test_idempotents_are_orthogonal(n):
    es = [idempotent(n, b) for b in range(n)]
    zero = es[0].scale(root_of_unity(n, 0) - 1)
    for a, b in itertools.product(range(n), repeat=2):
        assert es[a] * es[b] == (es[a] if a == b else zero)


@pytest.mark.parametrize("m", [2, 3, 5])
def test_idempotent_embedding(m):
    assert idempotent_embedding_check(m)


def test_basis_change_round_trip():
    g = group_element(9, 4)
    assert g.to_basis("idempotent").to_basis("group") == g


def test_omega_values():
    q = lambda m, k: root_of_unity(m * m, k)  # noqa: E731
    assert omega(3, 1, 2, 2, 2) == q(3, 6)
    assert omega(5, 1, 2, 3, 4) == q(5, 10)
    assert all(omega(4, 0, i, j, k).is_one() for i, j, k in itertools.product(range(4), repeat=3))


@pytest.mark.parametrize("m", [3, 5])
def test_cocycles_and_invariants(m):
    Q = root_of_unity(m)
    invs = []
    for s in range(m):
        w = omega_cocycle(m, s)
        assert w.is_normalized()
        assert is_three_cocycle(w)
        inv = cohomology_invariant(w)
        assert inv == Q ** s
        invs.append(inv)
    assert len(set(invs)) == m
    for s, t in itertools.product(range(m), repeat=2):
        assert invs[s] * invs[t] == invs[(s + t) % m]


def test_perturbed_cocycle_is_rejected():
    w = omega_cocycle(5, 1)
    assert w(1, 2, 1).is_one()
    bad = w.perturbed(1, 2, 1, root_of_unity(25, 5))
    assert not is_three_cocycle(bad)


def test_random_coboundaries_have_trivial_invariant():
    rng = random.Random(11)
    for m in (3, 4, 5):
        for _ in range(5):
            w = random_coboundary(m, rng)
            assert is_three_cocycle(w)
            assert cohomology_invariant(w).is_one()


def test_associator():
    assert associator(4, 0) == unit_tensor(4, 3, "idempotent", 16)
    phi = associator(3, 1)
    for i, j, k in itertools.product(range(3), repeat=3):
        assert phi[i, j, k] == omega(3, 1, i, j, k)


def test_twist_coefficients():
    assert twist_coefficient(3, 4, 5) == root_of_unity(9, 3)
    assert twist_coefficient(3, 2, 2).is_one()
    assert twist_j(3, 0) == unit_tensor(9, 2, "idempotent", 9)
    J = twist_j(3, 2)
    assert J * J.inverse() == unit_tensor(9, 2, "idempotent", 9)


@pytest.mark.parametrize("m,s", [(3, 0), (3, 1), (3, 2), (5, 4)])
def test_twist_conditions(m, s):
    r = verify_twist_conditions(m, s)
    assert r.counit_ok and r.coboundary_ok


def test_coboundary_ordering_is_the_standard_one():
    # the inverse ordering gives Phi_s^{-1}, not Phi_s
    assert not verify_twist_conditions(3, 1, "inverse").coboundary_ok
    assert coboundary(twist_j(3, 1), "inverse") == coboundary(twist_j(3, 1)).inverse()
    with pytest.raises(ValueError):
        coboundary(twist_j(3, 1), "sideways")


def test_tensor_json_round_trip():
    from basicqh.group_algebra import GroupAlgebraTensor

    J = twist_j(3, 1)
    obj = J.to_json()
    keys = [tuple(e[0]) for e in obj["entries"]]
    assert keys == sorted(keys)
    assert GroupAlgebraTensor.from_json(obj) == J
    assert obj["basis"] == "idempotent" and obj["arity"] == 2 and obj["modulus"] == 9
    assert one(9).is_one()
