"""Drinfeld twists, gauge changes of the antipode data, and restriction to subalgebras."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .cyclotomic import one
from .linalg import Subspace, axpy, clean, invert_sparse
from .presentation import (
    QuasiHopfPresentation,
    apply_comult,
    apply_counit,
    outer,
    tmul,
    unit_power,
    vmul,
)

__all__ = [
    "twist_presentation",
    "gauge_antipode",
    "restrict_to_subalgebra",
    "invert_tensor",
    "invert_vector",
    "ClosureReport",
    "Restriction",
]


def _orthogonal_family(P: QuasiHopfPresentation, idx: set) -> bool:
    """True iff the basis elements in idx are orthogonal idempotents summing to 1."""
    u = one(P.field_order)
    for i in idx:
        row = P.mult[i]
        if row.get(i) != {i: u}:
            return False
        if any(j in idx and j != i for j in row):
            return False
    return clean(P.unit) == {i: u for i in idx}


def invert_tensor(P: QuasiHopfPresentation, T: dict) -> dict:
    """Inverse of a tensor supported on a complete family of orthogonal idempotents.

    Such a tensor is invertible iff every coefficient on the full product grid
    is nonzero; the inverse is then taken entrywise.
    """
    if not T:
        raise ZeroDivisionError("zero tensor is not invertible")
    r = len(next(iter(T)))
    legs = set(clean(P.unit))
    if not _orthogonal_family(P, legs) or any(i not in legs for k in T for i in k):
        raise ValueError("tensor is not supported on a complete orthogonal idempotent family; supply its inverse")
    out = {}
    for key in itertools.product(sorted(legs), repeat=r):
        c = T.get(key)
        if c is None or not c:
            raise ZeroDivisionError(f"tensor is not invertible (zero at {key})")
        out[key] = c.inverse()
    return out


def invert_vector(P: QuasiHopfPresentation, v: dict) -> dict:
    return {k[0]: c for k, c in invert_tensor(P, {(i,): c for i, c in v.items()}).items()}


def twist_presentation(P: QuasiHopfPresentation, J: dict, J_inv: dict | None = None, check: bool = True) -> QuasiHopfPresentation:
    """Twist P by J: Delta_J = J Delta J^{-1}, Phi_J = (1 J)(id D)(J) Phi (D id)(J^{-1})(J^{-1} 1).

    alpha_J = sum S(jbar^1) alpha jbar^2 over J^{-1}, beta_J = sum j^1 beta S(j^2);
    the antipode map is unchanged.
    """
    if J_inv is None:
        J_inv = invert_tensor(P, J)
    one2 = unit_power(P, 2)
    if check:
        if tmul(P, J, J_inv) != one2 or tmul(P, J_inv, J) != one2:
            raise ValueError("supplied J_inv is not the inverse of J")
        if apply_counit(P, J, 0) != {(i,): c for i, c in clean(P.unit).items()} or \
                apply_counit(P, J, 1) != {(i,): c for i, c in clean(P.unit).items()}:
            raise ValueError("twist does not have unit counit contractions")

    comult = [tmul(P, tmul(P, J, D), J_inv) for D in P.comult]

    U = P.unit
    left = tmul(P, outer(U, J), apply_comult(P, J, 1))
    right = tmul(P, apply_comult(P, J_inv, 0), outer(J_inv, U))
    assoc = tmul(P, tmul(P, left, P.assoc), right)
    left_i = tmul(P, outer(J, U), apply_comult(P, J, 0))
    right_i = tmul(P, apply_comult(P, J_inv, 1), outer(U, J_inv))
    assoc_inv = tmul(P, tmul(P, left_i, P.assoc_inv), right_i)

    alpha = beta = None
    if P.antipode is not None and P.alpha is not None and P.beta is not None:
        u = one(P.field_order)
        alpha = {}
        for (i, j), c in J_inv.items():
            axpy(alpha, vmul(P, vmul(P, P.antipode[i], P.alpha), {j: u}), c)
        beta = {}
        for (i, j), c in J.items():
            axpy(beta, vmul(P, vmul(P, {i: u}, P.beta), P.antipode[j]), c)
    meta = dict(P.meta)
    meta["twisted"] = True
    return P.copy(comult=comult, assoc=assoc, assoc_inv=assoc_inv, alpha=alpha, beta=beta, meta=meta)


def gauge_antipode(P: QuasiHopfPresentation, g: dict, g_inv: dict | None = None) -> QuasiHopfPresentation:
    """Replace (S, alpha, beta) by (g S(-) g^{-1}, g alpha, beta g^{-1})."""
    if g_inv is None:
        g_inv = invert_vector(P, g)
    if vmul(P, g, g_inv) != clean(P.unit):
        raise ValueError("g_inv is not the inverse of g")
    antipode = [vmul(P, vmul(P, g, s), g_inv) for s in P.antipode]
    alpha = vmul(P, g, P.alpha)
    beta = vmul(P, P.beta, g_inv)
    return P.copy(antipode=antipode, alpha=alpha, beta=beta)


@dataclass
class ClosureReport:
    dimension: int
    comult: bool
    associator: bool
    associator_inverse: bool
    antipode: bool
    alpha: bool
    beta: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all((self.comult, self.associator, self.associator_inverse, self.antipode, self.alpha, self.beta))

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "ok": self.ok,
            "comult": self.comult,
            "associator": self.associator,
            "associator_inverse": self.associator_inverse,
            "antipode": self.antipode,
            "alpha": self.alpha,
            "beta": self.beta,
            "witnesses": {k: repr(v) for k, v in sorted(self.witnesses.items())},
        }


@dataclass
class Restriction:
    sub: QuasiHopfPresentation | None
    closure: ClosureReport
    inclusion: list  # basis vectors of the sub, as vectors of the ambient algebra


class _Coords:
    """Coordinates in a chosen basis of a subspace, with membership testing."""

    def __init__(self, S: Subspace, basis: list):
        self.S = S
        self.basis = basis
        piv = S.pivots
        pos = {p: n for n, p in enumerate(piv)}
        self.pos = pos
        # express the chosen basis in RREF coordinates and invert
        rows = []
        for b in basis:
            c = S.coordinates(b)
            if c is None:
                raise ValueError("preferred basis vector lies outside the subalgebra")
            rows.append({pos[p]: x for p, x in c.items()})
        if len(basis) != len(piv):
            raise ValueError("preferred basis has the wrong size")
        inv = invert_sparse(rows, len(piv))
        if inv is None:
            raise ValueError("preferred basis is linearly dependent")
        self.rref_to_pref = inv  # row r: RREF row r as a combination of preferred vectors
        self.identity = all(
            len(r) == 1 and next(iter(r)) == n and next(iter(r.values())).is_one() for n, r in enumerate(inv)
        )

    def transform(self, T: dict) -> dict:
        """Map a tensor with RREF-coordinate legs to preferred-basis legs."""
        if self.identity:
            return T
        for leg in range(len(next(iter(T))) if T else 0):
            out: dict = {}
            for key, c in T.items():
                for n, x in self.rref_to_pref[key[leg]].items():
                    k = key[:leg] + (n,) + key[leg + 1:]
                    y = c * x
                    prev = out.get(k)
                    out[k] = y if prev is None else prev + y
            T = {k: v for k, v in out.items() if v}
        return T

    def tensor_coords(self, T: dict) -> dict | None:
        """Preferred-basis coordinates of T in sub^{(x) r}, or None if T is not inside."""
        pos, rows = self.pos, self.S.rows
        coords = {}
        for key, c in T.items():
            if all(i in pos for i in key):
                coords[tuple(pos[i] for i in key)] = c
        piv = self.S.pivots
        recon: dict = {}
        for key, c in coords.items():
            vecs = [rows[piv[n]] for n in key]
            acc = {(): c}
            for v in vecs:
                acc = {k + (i,): x * y for k, x in acc.items() for i, y in v.items()}
            axpy(recon, acc)
        if recon != clean(T):
            return None
        return self.transform(coords)


def restrict_to_subalgebra(P: QuasiHopfPresentation, generators: list, basis: list | None = None,
                           labels: list | None = None, generator_coords: bool = True) -> Restriction:
    """Restrict P to the subalgebra generated by `generators` (vectors of P).

    The subalgebra is the span closure of 1 under left multiplication by the
    generators.  A preferred basis of it may be supplied; otherwise the
    reduced echelon basis (lowest-index pivots) is used.
    """
    d = P.dim
    for g in generators:
        if any(not (isinstance(i, int) and 0 <= i < d) for i in g):
            raise ValueError("generator is not a vector of the ambient algebra")
    S = Subspace()
    S.add(P.unit)
    frontier = [clean(P.unit)]
    while frontier:
        nxt = []
        for v in frontier:
            for g in generators:
                w = vmul(P, g, v)
                if w and S.add(w):
                    nxt.append(w)
        frontier = nxt
    if basis is None:
        basis = S.basis()
    C = _Coords(S, basis)
    n = len(basis)
    wit: dict = {}

    def coords_vec(v):
        c = C.tensor_coords({(i,): x for i, x in v.items()})
        return None if c is None else {k[0]: x for k, x in c.items()}

    mult = [dict() for _ in range(n)]
    for a in range(n):
        for b in range(n):
            prod = vmul(P, basis[a], basis[b])
            if prod:
                c = coords_vec(prod)
                if c is None:  # cannot happen for a genuine span closure
                    raise AssertionError("span closure is not multiplicatively closed")
                if c:
                    mult[a][b] = c

    comult, ok_d = [], True
    for a in range(n):
        D: dict = {}
        for i, x in basis[a].items():
            axpy(D, P.comult[i], x)
        c = C.tensor_coords(D)
        if c is None:
            ok_d = False
            wit.setdefault("comult", a)
            comult.append({})
        else:
            comult.append(c)

    assoc = C.tensor_coords(P.assoc)
    assoc_inv = C.tensor_coords(P.assoc_inv)
    if assoc is None:
        wit["associator"] = "Phi not in sub^3"
    if assoc_inv is None:
        wit["associator_inverse"] = "Phi^-1 not in sub^3"

    antipode, ok_s = None, True
    if P.antipode is not None:
        antipode = []
        for a in range(n):
            Sv: dict = {}
            for i, x in basis[a].items():
                axpy(Sv, P.antipode[i], x)
            c = coords_vec(Sv)
            if c is None:
                ok_s = False
                wit.setdefault("antipode", a)
                antipode.append({})
            else:
                antipode.append(c)
    alpha = coords_vec(P.alpha) if P.alpha is not None else None
    beta = coords_vec(P.beta) if P.beta is not None else None
    if P.alpha is not None and alpha is None:
        wit["alpha"] = "alpha not in sub"
    if P.beta is not None and beta is None:
        wit["beta"] = "beta not in sub"

    report = ClosureReport(
        dimension=n, comult=ok_d, associator=assoc is not None, associator_inverse=assoc_inv is not None,
        antipode=ok_s, alpha=P.alpha is None or alpha is not None, beta=P.beta is None or beta is not None,
        witnesses=wit,
    )
    sub = None
    if report.ok:
        counit = {}
        for a in range(n):
            e = P.counit_of(basis[a])
            if e:
                counit[a] = e
        unit = coords_vec(P.unit)
        gens = None
        if generator_coords:
            gens = [coords_vec(g) for g in generators]
        sub = QuasiHopfPresentation(
            labels=labels or [f"b{a}" for a in range(n)], field_order=P.field_order,
            mult=mult, unit=unit, comult=comult, counit=counit,
            assoc=assoc, assoc_inv=assoc_inv, antipode=antipode, alpha=alpha, beta=beta,
            generators=gens, meta={"restricted_from_dim": d},
        )
    return Restriction(sub, report, basis)
