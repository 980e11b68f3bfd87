from __future__ import annotations

import json

import pytest

from basicqh.ahs import build_semisimple
from basicqh.axioms import QB_VERDICTS, ANTIPODE_VERDICTS, verify, verify_antipode, verify_quasi_bialgebra
from basicqh.cyclotomic import one, rational, root_of_unity
from basicqh.group_algebra import associator, twist_coefficient, twist_j
from basicqh.linalg import Subspace, invert_sparse, rank
from basicqh.nichols import build_quantum_line, group_algebra_presentation
from basicqh.presentation import QuasiHopfPresentation, vmul
from basicqh.twisting import invert_tensor, restrict_to_subalgebra, twist_presentation


def _u(n=9):
    return one(n)


# -- linear algebra --------------------------------------------------------------

def test_subspace_rref_and_coordinates():
    u = _u(5)
    S = Subspace()
    assert S.add({0: u, 1: u})
    assert S.add({1: u, 2: u})
    assert not S.add({0: u, 2: -u})  # difference of the two
    assert len(S) == 2
    assert S.pivots == [0, 1]
    v = {0: u * 3, 1: u * 5, 2: u * 2}
    c = S.coordinates(v)
    assert c is not None
    assert S.contains({0: u, 1: -u, 2: -u * 2})
    assert not S.contains({0: u})


def test_rank_and_inverse():
    z = root_of_unity(5)
    rows = [{0: one(5), 1: z}, {0: z, 1: one(5)}]
    assert rank(rows) == 2
    assert rank(rows + [{0: one(5) + z, 1: one(5) + z}]) == 2
    inv = invert_sparse(rows, 2)
    for i in range(2):
        for j in range(2):
            s = sum((inv[i].get(k, 0 * z) * rows[k].get(j, 0 * z) for k in range(2)), 0 * z)
            assert s == (one(5) if i == j else 0 * z)
    assert invert_sparse([{0: one(5)}, {0: rational(5, 2)}], 2) is None


# -- axiom suite -----------------------------------------------------------------

def test_group_algebra_passes():
    for basis in ("idempotent", "group"):
        rep = verify(group_algebra_presentation(5, basis))
        assert rep.certified, rep.witness
        assert set(rep.verdicts) == set(QB_VERDICTS) | set(ANTIPODE_VERDICTS)


@pytest.mark.parametrize("s", range(5))
def test_semisimple_family_passes(s):
    P = build_semisimple(5, s, verify_mode=None)
    assert verify(P).certified


def test_pentagon_breaking_mutation():
    P = build_semisimple(5, 1, verify_mode=None)
    key = (1, 2, 1)
    P.assoc[key] = P.assoc[key] * root_of_unity(P.field_order, 1)
    P.assoc_inv[key] = P.assoc[key].inverse()
    rep = verify_quasi_bialgebra(P)
    assert rep.verdicts["pentagon"] is False
    assert rep.witness is not None


def test_alpha_one_breaks_zigzag():
    P = build_semisimple(5, 2, verify_mode=None)
    assert not verify_antipode(P).failed
    Q = P.copy(alpha=dict(P.unit))
    rep = verify_antipode(Q)
    assert rep.failed
    assert not (rep.verdicts["zigzag_1"] and rep.verdicts["zigzag_2"])


def test_swapped_alpha_beta_also_passes():
    # recorded: beta = sigma^{-s}, alpha = 1 is an equally valid choice for this family
    P = build_semisimple(5, 2, verify_mode=None)
    Q = P.copy(alpha=dict(P.beta), beta=dict(P.alpha))
    assert verify(Q).certified


def test_fail_fast_stops_early():
    P = build_semisimple(5, 1, verify_mode=None)
    P.mult[0][0] = {1: one(P.field_order)}
    rep = verify(P, fail_fast=True)
    assert not rep.certified
    assert rep.failed


# -- twisting --------------------------------------------------------------------

def _group_algebra_twisted(m, s):
    P = group_algebra_presentation(m * m, "idempotent")
    J = dict(twist_j(m, s).coeffs)
    return P, twist_presentation(P, J)


def test_trivial_twist_is_identity():
    P = group_algebra_presentation(9, "idempotent")
    J = dict(twist_j(3, 0).coeffs)
    assert twist_presentation(P, J).same_structure(P)


@pytest.mark.parametrize("m,s", [(3, 1), (3, 2), (5, 3)])
def test_twisted_group_algebra(m, s):
    P, T = _group_algebra_twisted(m, s)
    M = m * m
    # dJ equals the image of Phi_s under sigma = chi^m
    image = associator(m, s, field_order=M).embed(m)
    assert T.assoc == {k: v for k, v in image.coeffs.items() if v}
    # alpha_J = sum_z c(-z, z)^{-s} 1_z; the exponent +s does not give sigma^{-s} below
    assert T.alpha == {z: twist_coefficient(m, -z % M, z) ** (-s) for z in range(M)}
    assert vmul(T, {z: twist_coefficient(m, -z % M, z) ** s for z in range(M)}, T.beta) != \
        {z: root_of_unity(M, -m * s * z) for z in range(M)}
    # alpha_J beta_J = sigma^{-s}
    ab = vmul(T, T.alpha, T.beta)
    sigma_inv = {z: root_of_unity(M, -m * s * z) for z in range(M)}
    assert ab == sigma_inv
    assert verify(T).certified


def test_twist_then_inverse_twist_round_trips():
    P, T = _group_algebra_twisted(3, 1)
    Jinv = invert_tensor(P, dict(twist_j(3, 1).coeffs))
    back = twist_presentation(T, Jinv)
    assert back.same_structure(P)


def test_non_invertible_twist_rejected():
    P = group_algebra_presentation(9, "idempotent")
    J = dict(twist_j(3, 1).coeffs)
    J.pop((0, 0))
    with pytest.raises(ZeroDivisionError):
        twist_presentation(P, J)


# -- restriction -----------------------------------------------------------------

def test_restrict_to_full_basis():
    P = build_semisimple(5, 2, verify_mode=None)
    R = restrict_to_subalgebra(P, [P.basis_vector(i) for i in range(P.dim)])
    assert R.closure.ok and R.sub.dim == P.dim
    assert verify(R.sub).certified


def test_untwisted_line_is_not_delta_closed():
    H = build_quantum_line(3, 1, 1)
    n = 9
    sigma = {3 * 1 * 0 + g: root_of_unity(9, 3 * g) for g in range(n)}  # chi^3 in the idempotent basis
    x = H.generators[1]
    R = restrict_to_subalgebra(H, [sigma, x])
    assert not R.closure.comult
    assert "comult" in R.closure.witnesses
    assert R.sub is None


def test_rejects_foreign_generators():
    P = build_semisimple(3, 1, verify_mode=None)
    with pytest.raises(ValueError):
        restrict_to_subalgebra(P, [{7: one(P.field_order)}])


# -- JSON -------------------------------------------------------------------------

def test_presentation_json_round_trip():
    P = build_semisimple(5, 3, verify_mode=None)
    text = P.dumps()
    Q = QuasiHopfPresentation.loads(text)
    assert Q.same_structure(P)
    assert json.loads(text) == json.loads(Q.dumps())
    assert verify(Q).certified
