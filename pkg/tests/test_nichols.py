from __future__ import annotations

import pytest

from basicqh.axioms import verify
from basicqh.cyclotomic import one, root_of_unity
from basicqh.nichols import (
    build_pointed,
    build_quantum_line,
    build_quantum_plane,
    height,
    q_binomial,
    q_binomial_recursive,
)
from basicqh.presentation import tmul


def test_q_binomial_examples():
    t = root_of_unity(7, 2)
    assert q_binomial(5, 0, t).is_one()
    assert q_binomial(2, 1, t) == one(7) + t
    z = root_of_unity(5)
    assert q_binomial(4, 2, z) == q_binomial(3, 1, z) * z ** 2 + q_binomial(3, 2, z)
    with pytest.raises(ValueError):
        q_binomial(2, 3, z)


@pytest.mark.parametrize("a", range(7))
def test_q_binomial_two_routes(a):
    t = root_of_unity(9, 2)
    for k in range(a + 1):
        assert q_binomial(a, k, t) == q_binomial_recursive(a, k, t)


def test_heights():
    assert height(25, 1, 1) == 25
    assert height(9, 1, 1) == 9
    assert height(25, 5, 1) == 5
    with pytest.raises(ValueError):
        height(9, 3, 3)


def test_degenerate_line_rejected():
    with pytest.raises(ValueError):
        build_quantum_line(3, 3, 3)


def _degree(P, i):
    n = P.meta["n"]
    heights = P.meta["heights"]
    k = i // n
    deg = 0
    for h in reversed(heights):
        deg += k % h
        k //= h
    return deg


@pytest.mark.parametrize("convention", ["adopted", "literal", "left"])
@pytest.mark.parametrize("basis", ["idempotent", "group"])
def test_quantum_line_m3(convention, basis):
    P = build_quantum_line(3, 1, 1, convention=convention, basis=basis, verify_mode="basis")
    assert P.dim == 81
    assert P.meta["certificate"]["certified"]


def test_delta_x_squared_has_three_terms():
    P = build_quantum_line(3, 1, 1, basis="group", verify_mode=None)
    x2 = 2 * 9
    assert len(P.comult[x2]) == 3


def test_q_pascal_consistency():
    P = build_quantum_line(3, 1, 1, verify_mode=None)
    x = P.generators[1]
    D_x = {}
    for i, c in x.items():
        for k, v in P.comult[i].items():
            D_x[k] = D_x.get(k, 0 * c) + c * v
    prev = {k: v for k, v in D_x.items() if v}
    power = dict(x)
    from basicqh.presentation import vmul
    for a in range(2, 6):
        power = vmul(P, x, power)
        closed = {}
        for i, c in power.items():
            for k, v in P.comult[i].items():
                closed[k] = closed.get(k, 0 * c) + c * v
        prev = tmul(P, D_x, prev)
        assert prev == {k: v for k, v in closed.items() if v}


def test_radical_grading_and_graded_comultiplication():
    P = build_quantum_line(3, 1, 1, verify_mode=None)
    n = P.meta["n"]
    positive = {i for i in range(P.dim) if _degree(P, i) > 0}
    assert P.dim - len(positive) == n
    for i in range(P.dim):
        for j, v in P.mult[i].items():
            for k in v:
                assert _degree(P, k) == _degree(P, i) + _degree(P, j)
    for i in range(P.dim):
        for a, b in P.comult[i]:
            assert _degree(P, a) + _degree(P, b) == _degree(P, i)


def test_quantum_plane_examples():
    P = build_quantum_plane(2, [(1, 1), (1, 3)], verify_mode="basis")
    assert P.dim == 4 * 4 * 4
    P = build_quantum_plane(3, [(3, 1), (6, 1)], verify_mode="basis")
    assert P.dim == 3 * 3 * 9
    with pytest.raises(ValueError):
        build_quantum_plane(3, [(1, 1), (1, 1)])


def test_plane_pairs_over_z25_are_a1xa1():
    # 5 * 1 + 20 * 1 = 25
    P = build_pointed(25, [(5, 1), (20, 1)], m=5)
    assert P.meta["heights"] == [5, 5]
    assert P.dim == 5 * 5 * 25


def test_generator_mode_agrees_with_basis_mode():
    P = build_quantum_line(3, 1, 2, verify_mode=None)
    assert verify(P, "basis").certified
    assert verify(P, "generators").certified


def test_mutated_antipode_detected():
    P = build_quantum_line(3, 1, 1, verify_mode=None)
    x = 9
    P.antipode[x] = {k: -v for k, v in P.antipode[x].items()}
    assert not verify(P, "basis").certified
