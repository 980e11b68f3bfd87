"""The quasi-Hopf algebras A(H,s) and the semisimple family H(m,s).

A(H,s) is obtained from a radically graded Hopf algebra H over Z_{m^2} by
twisting with J_s, gauging the antipode data by beta_J (so that beta = 1 and
alpha = alpha_J beta_J = sigma^{-s}), and restricting to the subalgebra
generated by sigma = chi^m and the skew-primitives.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import isqrt

from .axioms import AxiomReport, verify
from .cyclotomic import CyclotomicNumber, one, root_of_unity
from .group_algebra import (
    Cocycle3,
    GroupAlgebraTensor,
    associator,
    cohomology_invariant,
    group_element,
    twist_coefficient,
    twist_j,
)
from .nichols import build_pointed
from .presentation import QuasiHopfPresentation
from .twisting import ClosureReport, gauge_antipode, restrict_to_subalgebra, twist_presentation

__all__ = [
    "AHSResult",
    "build_ahs",
    "build_semisimple",
    "sweep",
    "delta_closure_witness",
    "antipode_image",
    "nontriviality_certificate",
    "degree_zero_tensor",
]


@dataclass
class AHSResult:
    m: int
    s: int
    pairs: list
    convention: str
    basis: str
    H: QuasiHopfPresentation
    twisted: QuasiHopfPresentation  # H^{J_s}, antipode data gauged by beta_J
    closure: ClosureReport
    sub: QuasiHopfPresentation | None = None
    axioms: AxiomReport | None = None
    index: list = field(default_factory=list)  # A basis position -> (alpha, t)
    ledger: dict = field(default_factory=dict)
    invariant: CyclotomicNumber | None = None

    @property
    def certified(self) -> bool:
        return self.sub is not None and self.axioms is not None and self.axioms.certified and all(
            v for k, v in self.ledger.items() if k.endswith("_ok")
        )

    def to_json(self, include_presentation: bool = True) -> dict:
        out = {
            "m": self.m,
            "s": self.s,
            "pairs": [list(p) for p in self.pairs],
            "convention": self.convention,
            "basis": self.basis,
            "closure": self.closure.to_json(),
            "certified": self.certified,
            "ledger": {k: _plain(v) for k, v in sorted(self.ledger.items())},
            "invariant": None if self.invariant is None else self.invariant.to_json(),
            "axioms": None if self.axioms is None else self.axioms.to_json(),
        }
        if include_presentation and self.sub is not None:
            out["presentation"] = self.sub.to_json()
        return out


def _plain(v):
    if isinstance(v, CyclotomicNumber):
        return v.to_json()
    return v


def degree_zero_tensor(P: QuasiHopfPresentation, T: dict, n: int, basis: str, arity: int) -> GroupAlgebraTensor | None:
    """Read a tensor supported on indices < n as an element of k[Z_n]^{(x) r}."""
    if arity == 1:
        T = {(k,) if not isinstance(k, tuple) else k: c for k, c in T.items()}
    if any(i >= n for k in T for i in k):
        return None
    return GroupAlgebraTensor._raw(n, arity, basis, P.field_order, dict(T))


def _vector_from(t: GroupAlgebraTensor) -> dict:
    return {k[0]: c for k, c in t.coeffs.items()}


# -- semisimple family ----------------------------------------------------------

def build_semisimple(m: int, s: int, basis: str = "idempotent", verify_mode: str | None = "basis") -> QuasiHopfPresentation:
    """k[Z_m] with associator Phi_s, alpha = sigma^{-s}, beta = 1, S(sigma) = sigma^{-1}."""
    if m < 1 or not 0 <= s < m:
        raise ValueError("need m >= 1 and 0 <= s < m")
    P = build_pointed(m, (), basis=basis)
    N = P.field_order
    phi = associator(m, s, field_order=N).to_basis(basis)
    P.assoc = dict(phi.coeffs)
    P.assoc_inv = dict(phi.inverse().coeffs)
    P.alpha = _vector_from(group_element(m, -s, N).to_basis(basis))
    P.beta = dict(P.unit)
    P.labels = [f"1_{g}" if basis == "idempotent" else f"sigma^{g}" for g in range(m)]
    P.meta = {"kind": "semisimple", "m": m, "s": s, "basis": basis, "generator_names": ["sigma"]}
    if verify_mode is not None:
        rep = verify(P, verify_mode)
        if not rep.certified:
            raise AssertionError(f"H({m},{s}) fails the quasi-Hopf axioms: {rep.witness}")
        P.meta["certificate"] = rep.to_json()
    return P


# -- A(H, s) --------------------------------------------------------------------

def _ambient_m(H: QuasiHopfPresentation) -> int:
    if H.meta.get("kind") != "pointed":
        raise ValueError("ambient algebra must come from the pointed builder")
    n = H.meta["n"]
    m = isqrt(n)
    if m * m != n:
        raise ValueError("ambient group order is not a square")
    return m


def _preferred_basis(H: QuasiHopfPresentation, m: int):
    n = H.meta["n"]
    heights = H.meta["heights"]
    basis = H.meta["basis"]
    monos = list(itertools.product(*[range(h) for h in heights]))
    mono_index = {a: i for i, a in enumerate(monos)}
    order = sorted(((a, t) for a in monos for t in range(m)), key=lambda at: (sum(at[0]), at[0], at[1]))
    u = one(H.field_order)
    vecs, labels = [], []
    names = ["x"] if len(heights) == 1 else [f"x{i + 1}" for i in range(len(heights))]
    for alpha, t in order:
        base = mono_index[alpha] * n
        if basis == "idempotent":
            vecs.append({base + m * i + t: u for i in range(m)})
            tail = f"e_{t}"
        else:
            vecs.append({base + m * t: u})
            tail = f"sigma^{t}"
        parts = [nm if a == 1 else f"{nm}^{a}" for nm, a in zip(names, alpha) if a]
        labels.append(f"{'*'.join(parts) or '1'}|{tail}")
    return order, vecs, labels


def _twist_data(H: QuasiHopfPresentation, m: int, s: int):
    basis = H.meta["basis"]
    J = twist_j(m, s)
    Jb = J.to_basis(basis)
    Jinv = J.inverse().to_basis(basis)
    return dict(Jb.coeffs), dict(Jinv.coeffs)


def _degree0_inverse(H: QuasiHopfPresentation, v: dict) -> dict:
    n, basis = H.meta["n"], H.meta["basis"]
    t = degree_zero_tensor(H, v, n, basis, 1)
    if t is None:
        raise ValueError("element is not of degree zero")
    return _vector_from(t.inverse())


def twisted_ambient(H: QuasiHopfPresentation, s: int) -> QuasiHopfPresentation:
    """H^{J_s} with (S, alpha, beta) gauged by beta_J."""
    m = _ambient_m(H)
    J, Jinv = _twist_data(H, m, s)
    T = twist_presentation(H, J, Jinv)
    g = T.beta
    T = gauge_antipode(T, g, _degree0_inverse(H, g))
    T.meta["twist_s"] = s
    return T


def build_ahs(H: QuasiHopfPresentation, s: int, verify_mode: str = "basis", twisted: QuasiHopfPresentation | None = None) -> AHSResult:
    """Twist H by J_s, gauge, restrict to <sigma, x_i> and certify."""
    m = _ambient_m(H)
    if not 0 <= s < m:
        raise ValueError("s must lie in 0..m-1")
    cert = H.meta.get("certificate")
    if not (cert and cert.get("certified")):
        rep = verify(H, "auto")
        if not rep.certified:
            raise ValueError(f"ambient algebra is not a certified Hopf algebra: {rep.witness}")
        H.meta["certificate"] = rep.to_json()
    basis = H.meta["basis"]
    N = H.field_order
    T = twisted if twisted is not None else twisted_ambient(H, s)

    u = one(N)
    sigma = _vector_from(GroupAlgebraTensor._raw(m * m, 1, "group", N, {(m,): u}).to_basis(basis))
    gens = [sigma] + list(H.generators[1:])
    order, vecs, labels = _preferred_basis(H, m)
    R = restrict_to_subalgebra(T, gens, basis=None, generator_coords=False)
    res = AHSResult(
        m=m, s=s, pairs=[tuple(p) for p in H.meta["pairs"]], convention=H.meta["convention"],
        basis=basis, H=H, twisted=T, closure=R.closure, index=order,
    )
    dim_R = 1
    for h in H.meta["heights"]:
        dim_R *= h
    res.ledger.update({"dim_H": H.dim, "dim_A_span": R.closure.dimension, "m_dim_R": m * dim_R})
    res.ledger["dimension_ok"] = R.closure.dimension * m == H.dim == m * m * dim_R
    if not R.closure.ok:
        return res

    R = restrict_to_subalgebra(T, gens, basis=vecs, labels=labels)
    A = R.sub
    A.meta.update({
        "kind": "ahs", "m": m, "s": s, "pairs": [list(p) for p in res.pairs],
        "convention": res.convention, "basis": basis, "generator_names": ["sigma"] + H.meta["generator_names"][1:],
    })
    res.sub = A

    phi = degree_zero_tensor(A, A.assoc, m, basis, 3)
    res.ledger["associator_ok"] = phi is not None and phi == associator(m, s, field_order=N)
    alpha = degree_zero_tensor(A, A.alpha, m, basis, 1)
    res.ledger["alpha_ok"] = alpha is not None and alpha == group_element(m, -s, N)
    res.ledger["beta_ok"] = A.beta == A.unit
    res.ledger["counit_alpha_beta_ok"] = (A.counit_of(A.alpha) * A.counit_of(A.beta)).is_one()
    if phi is not None:
        w = _cocycle_of(phi)
        res.invariant = cohomology_invariant(w)
        res.ledger["invariant_ok"] = res.invariant == root_of_unity(N, (N // m) * s)
    res.axioms = verify(A, verify_mode)
    return res


def _cocycle_of(phi: GroupAlgebraTensor) -> Cocycle3:
    t = phi.to_basis("idempotent")
    m = t.modulus
    table = [t[(i, j, k)] for i, j, k in itertools.product(range(m), repeat=3)]
    return Cocycle3(m, table, t.field_order, "restricted")


def _sweep_one(args):
    H, s, verify_mode = args
    r = build_ahs(H, s, verify_mode)
    return s, r.closure.ok, r.certified, r.closure.witnesses


def sweep(H: QuasiHopfPresentation, verify_mode: str = "basis", workers: int = 1) -> dict:
    """Build A(H, s) for every s; returns {s: (closure_ok, certified, witnesses)}."""
    m = _ambient_m(H)
    jobs = [(H, s, verify_mode) for s in range(m)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(_sweep_one, jobs))
    else:
        rows = [_sweep_one(j) for j in jobs]
    return {s: (ok, cert, wit) for s, ok, cert, wit in sorted(rows)}


# -- diagnostics ------------------------------------------------------------------

def _x_index(H: QuasiHopfPresentation, i: int):
    r = len(H.meta["heights"])
    alpha = tuple(1 if j == i else 0 for j in range(r))
    monos = list(itertools.product(*[range(h) for h in H.meta["heights"]]))
    return monos.index(alpha)


def _to_idempotent_tensor(H: QuasiHopfPresentation, T: dict, arity: int) -> dict:
    """Rewrite a tensor of H from the group basis into the idempotent basis."""
    if H.meta["basis"] == "idempotent":
        return T
    n = H.meta["n"]
    out: dict = {}
    for key, c in T.items():
        monos = tuple(k // n for k in key)
        g = tuple(k % n for k in key)
        conv = GroupAlgebraTensor._raw(n, arity, "group", H.field_order, {g: c}).to_basis("idempotent")
        for gg, cc in conv.coeffs.items():
            k2 = tuple(a * n + b for a, b in zip(monos, gg))
            prev = out.get(k2)
            out[k2] = cc if prev is None else prev + cc
    return {k: v for k, v in out.items() if v}


def delta_closure_witness(res: AHSResult, i: int = 0) -> dict:
    """Delta_{J_s}(x_i) in the idempotent basis, its membership in A (x) A, and a termwise comparison
    with the closed form sum c(z,y)^s/c(z-d,y)^s q^{e y} x 1_{z-d} (x) 1_y + c(z,y)^s/c(z,y-d)^s 1_z (x) x 1_{y-d},
    where e = b under the literal reading and e = -b under the adopted one."""
    H, T, m, s = res.H, res.twisted, res.m, res.s
    n = m * m
    N = H.field_order
    b, d = res.pairs[i]
    xi = H.generators[1 + i]
    D: dict = {}
    for k, c in xi.items():
        for key, v in T.comult[k].items():
            D[key] = D[key] + c * v if key in D else c * v
    D = {k: v for k, v in D.items() if v}
    Di = _to_idempotent_tensor(H, D, 2)
    mono = _x_index(H, i)
    if res.convention == "left":
        expected = None
    else:
        e = b if res.convention == "literal" else -b
        expected = {}
        for z in range(n):
            for y in range(n):
                c1 = twist_coefficient(m, z, y) ** s / twist_coefficient(m, z - d, y) ** s
                k1 = (mono * n + (z - d) % n, y)
                expected[k1] = expected.get(k1, 0 * c1) + c1 * root_of_unity(N, (N // n) * e * y)
                c2 = twist_coefficient(m, z, y) ** s / twist_coefficient(m, z, y - d) ** s
                k2 = (z, mono * n + (y - d) % n)
                expected[k2] = expected.get(k2, 0 * c2) + c2
        expected = {k: v for k, v in expected.items() if v}
    mismatch = None if expected is None else sorted(
        k for k in set(expected) | set(Di) if expected.get(k) != Di.get(k)
    )
    return {
        "expansion": {(H.labels[a], H.labels[c]): v for (a, c), v in sorted(Di.items())},
        "member": _delta_member(res, D),
        "formula_match": None if mismatch is None else not mismatch,
        "mismatched_terms": [] if not mismatch else [(H.labels[a], H.labels[c]) for a, c in mismatch[:10]],
    }


def _span_of_A(res: AHSResult):
    from .linalg import Subspace

    H, m = res.H, res.m
    _, vecs, _ = _preferred_basis(H, m)
    S = Subspace()
    for v in vecs:
        S.add(v)
    return S, vecs


def _delta_member(res: AHSResult, D: dict) -> bool:
    from .twisting import _Coords

    S, vecs = _span_of_A(res)
    return _Coords(S, vecs).tensor_coords(D) is not None


def antipode_image(res: AHSResult, i: int = 0) -> dict:
    """S_{J_s}(x_i) = beta_J S(x_i) beta_J^{-1} (the gauged antipode), its membership in A, and a
    comparison with -x_i sum_y c(y+d,-y-d)^s / c(y,-y)^s q^{e y} 1_y for both signs of e = +-b."""
    H, T, m, s = res.H, res.twisted, res.m, res.s
    n = m * m
    N = H.field_order
    b, d = res.pairs[i]
    xi = H.generators[1 + i]
    Sx: dict = {}
    for k, c in xi.items():
        for j, v in T.antipode[k].items():
            Sx[j] = Sx[j] + c * v if j in Sx else c * v
    Sx = {k: v for k, v in Sx.items() if v}
    Si = {k[0]: v for k, v in _to_idempotent_tensor(H, {(k,): v for k, v in Sx.items()}, 1).items()}
    mono = _x_index(H, i)
    match = {}
    for sign in (1, -1):
        exp = {}
        for y in range(n):
            c = twist_coefficient(m, y + d, -y - d) ** s / twist_coefficient(m, y, -y) ** s
            c = -c * root_of_unity(N, (N // n) * sign * b * y)
            if c:
                exp[mono * n + y] = c
        match["+b" if sign > 0 else "-b"] = exp == Si
    S, vecs = _span_of_A(res)
    from .twisting import _Coords

    member = _Coords(S, vecs).tensor_coords({(k,): v for k, v in Sx.items()}) is not None
    return {
        "expansion": {H.labels[k]: v for k, v in sorted(Si.items())},
        "member": member,
        "formula_match": match,
    }


def nontriviality_certificate(res_or_P) -> dict:
    """Non-trivial associator class iff the H^3 invariant of the degree-zero associator is not 1.

    Only this necessary condition is computed; twist inequivalence to a Hopf
    algebra in general is not decided here.
    """
    if isinstance(res_or_P, AHSResult):
        inv = res_or_P.invariant
        m = res_or_P.m
    else:
        P = res_or_P
        m = P.meta["m"]
        phi = degree_zero_tensor(P, P.assoc, m, P.meta.get("basis", "idempotent"), 3)
        inv = None if phi is None else cohomology_invariant(_cocycle_of(phi))
    if inv is None:
        return {"verdict": "unavailable", "invariant": None, "scope": "associator not of degree zero"}
    return {
        "verdict": "trivial" if inv.is_one() else "non-trivial associator class",
        "invariant": inv.to_json(),
        "invariant_order": _order(inv, m),
        "scope": "certifies only that the associator class in H^3(Z_m) is non-trivial; "
                 "twist inequivalence to a Hopf algebra is not decided",
    }


def _order(x: CyclotomicNumber, m: int) -> int:
    for k in range(1, m + 1):
        if (x ** k).is_one():
            return k
    return 0
