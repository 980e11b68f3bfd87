"""Structure-constant presentations of finite-dimensional quasi-Hopf algebras.

Vectors are sparse dicts basis-index -> CyclotomicNumber and tensors of arity
r are sparse dicts keyed by r-tuples of basis indices.  The multiplication is
stored by rows: mult[i][j] is the vector e_i e_j, present only when nonzero,
so mult[i].keys() is the set of right partners of e_i.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .cyclotomic import CyclotomicNumber, from_json, one, zero
from .linalg import axpy, clean

__all__ = [
    "QuasiHopfPresentation",
    "vmul",
    "tmul",
    "outer",
    "comult_vec",
    "apply_comult",
    "apply_counit",
    "antipode_vec",
    "unit_power",
]


@dataclass
class QuasiHopfPresentation:
    labels: list
    field_order: int
    mult: list
    unit: dict
    comult: list
    counit: dict
    assoc: dict
    assoc_inv: dict
    antipode: list | None = None
    alpha: dict | None = None
    beta: dict | None = None
    generators: list | None = None
    meta: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def basis_vector(self, i: int) -> dict:
        return {i: one(self.field_order)}

    def counit_of(self, v: dict) -> CyclotomicNumber:
        out = zero(self.field_order)
        for i, c in v.items():
            e = self.counit.get(i)
            if e is not None:
                out = out + c * e
        return out

    # -- structural checks ------------------------------------------------
    def validate(self) -> None:
        """Reject malformed tensors before any axiom is checked."""
        d, N = self.dim, self.field_order
        if len(set(self.labels)) != d:
            raise ValueError("basis labels must be distinct")
        if len(self.mult) != d or len(self.comult) != d:
            raise ValueError("multiplication/comultiplication tables have wrong length")
        if self.antipode is not None and len(self.antipode) != d:
            raise ValueError("antipode table has wrong length")

        def chk_vec(v, what, arity=1):
            for k, c in v.items():
                idx = (k,) if arity == 1 else k
                if len(idx) != arity or not all(isinstance(i, int) and 0 <= i < d for i in idx):
                    raise ValueError(f"{what}: index {k!r} out of range")
                if not isinstance(c, CyclotomicNumber) or N % c.order:
                    raise ValueError(f"{what}: coefficient outside Q(zeta_{N})")

        for i, row in enumerate(self.mult):
            for j, v in row.items():
                chk_vec({j: one(N)}, "mult")
                chk_vec(v, "mult")
        for v in self.comult:
            chk_vec(v, "comult", 2)
        chk_vec(self.unit, "unit")
        chk_vec(self.counit, "counit")
        chk_vec(self.assoc, "associator", 3)
        chk_vec(self.assoc_inv, "associator inverse", 3)
        if self.antipode is not None:
            for v in self.antipode:
                chk_vec(v, "antipode")
        for name in ("alpha", "beta"):
            v = getattr(self, name)
            if v is not None:
                chk_vec(v, name)
        for g in self.generators or []:
            chk_vec(g, "generator")

    def copy(self, **changes) -> "QuasiHopfPresentation":
        data = dict(
            labels=list(self.labels), field_order=self.field_order,
            mult=[{j: dict(v) for j, v in row.items()} for row in self.mult],
            unit=dict(self.unit), comult=[dict(v) for v in self.comult],
            counit=dict(self.counit), assoc=dict(self.assoc), assoc_inv=dict(self.assoc_inv),
            antipode=None if self.antipode is None else [dict(v) for v in self.antipode],
            alpha=None if self.alpha is None else dict(self.alpha),
            beta=None if self.beta is None else dict(self.beta),
            generators=None if self.generators is None else [dict(g) for g in self.generators],
            meta=dict(self.meta),
        )
        data.update(changes)
        return QuasiHopfPresentation(**data)

    def same_structure(self, other: "QuasiHopfPresentation") -> bool:
        """Entrywise equality of every structure tensor."""
        return (
            self.dim == other.dim
            and [clean(r) for r in self.mult] == [clean(r) for r in other.mult]
            and clean(self.unit) == clean(other.unit)
            and [clean(v) for v in self.comult] == [clean(v) for v in other.comult]
            and clean(self.counit) == clean(other.counit)
            and clean(self.assoc) == clean(other.assoc)
            and clean(self.assoc_inv) == clean(other.assoc_inv)
            and _opt_list(self.antipode) == _opt_list(other.antipode)
            and _opt(self.alpha) == _opt(other.alpha)
            and _opt(self.beta) == _opt(other.beta)
        )

    # -- JSON -------------------------------------------------------------
    def to_json(self) -> dict:
        def vec(v):
            return [[k, v[k].to_json()] for k in sorted(v)]

        def ten(t):
            return [[list(k), t[k].to_json()] for k in sorted(t)]

        mult = []
        for i, row in enumerate(self.mult):
            for j in sorted(row):
                for k in sorted(row[j]):
                    mult.append([[i, j, k], row[j][k].to_json()])
        comult = []
        for i, v in enumerate(self.comult):
            for k in sorted(v):
                comult.append([[i, *k], v[k].to_json()])
        out = {
            "dimension": self.dim,
            "basis": list(self.labels),
            "field_order": self.field_order,
            "multiplication": mult,
            "unit": vec(self.unit),
            "comultiplication": comult,
            "counit": vec(self.counit),
            "associator": ten(self.assoc),
            "associator_inverse": ten(self.assoc_inv),
            "meta": _jsonable(self.meta),
        }
        if self.antipode is not None:
            out["antipode"] = [[[i, j], v[j].to_json()] for i, v in enumerate(self.antipode) for j in sorted(v)]
        if self.alpha is not None:
            out["alpha"] = vec(self.alpha)
        if self.beta is not None:
            out["beta"] = vec(self.beta)
        if self.generators is not None:
            out["generators"] = [vec(g) for g in self.generators]
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, obj: dict) -> "QuasiHopfPresentation":
        d = int(obj["dimension"])
        if len(obj["basis"]) != d:
            raise ValueError("basis length does not match dimension")

        def vec(entries):
            return clean({int(k): from_json(c) for k, c in entries})

        def ten(entries):
            return clean({tuple(int(i) for i in k): from_json(c) for k, c in entries})

        mult = [dict() for _ in range(d)]
        for (i, j, k), c in obj["multiplication"]:
            c = from_json(c)
            if c:
                mult[i].setdefault(j, {})[k] = c
        comult = [dict() for _ in range(d)]
        for (i, j, k), c in obj["comultiplication"]:
            c = from_json(c)
            if c:
                comult[i][(j, k)] = c
        antipode = None
        if "antipode" in obj:
            antipode = [dict() for _ in range(d)]
            for (i, j), c in obj["antipode"]:
                c = from_json(c)
                if c:
                    antipode[i][j] = c
        P = cls(
            labels=list(obj["basis"]), field_order=int(obj["field_order"]),
            mult=mult, unit=vec(obj["unit"]), comult=comult, counit=vec(obj["counit"]),
            assoc=ten(obj["associator"]), assoc_inv=ten(obj["associator_inverse"]),
            antipode=antipode,
            alpha=vec(obj["alpha"]) if "alpha" in obj else None,
            beta=vec(obj["beta"]) if "beta" in obj else None,
            generators=[vec(g) for g in obj["generators"]] if "generators" in obj else None,
            meta=obj.get("meta", {}),
        )
        return P

    @classmethod
    def loads(cls, text: str) -> "QuasiHopfPresentation":
        return cls.from_json(json.loads(text))


def _opt(v):
    return None if v is None else clean(v)


def _opt_list(vs):
    return None if vs is None else [clean(v) for v in vs]


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, CyclotomicNumber):
        return x.to_json()
    return x


# -- products -----------------------------------------------------------------

def vmul(P: QuasiHopfPresentation, u: dict, v: dict) -> dict:
    """Product of two vectors in P."""
    out: dict = {}
    M = P.mult
    for i, a in u.items():
        row = M[i]
        for j in row.keys() & v.keys():
            c = a * v[j]
            for k, s in row[j].items():
                x = c * s
                prev = out.get(k)
                out[k] = x if prev is None else prev + x
    return {k: x for k, x in out.items() if x}


def orthogonal_idempotents(P: QuasiHopfPresentation) -> frozenset:
    """Basis indices e_i with e_i e_j = delta_ij e_i among themselves (recomputed, never cached)."""
    M = P.mult
    cand = set()
    for i, row in enumerate(M):
        v = row.get(i)
        if v is not None and len(v) == 1 and i in v and v[i].is_one():
            cand.add(i)
    for i in cand:
        for j in M[i].keys() & cand:
            if j != i:
                return frozenset()
    return frozenset(cand)


def _trie(T: dict) -> dict:
    root: dict = {}
    for key, c in T.items():
        node = root
        for i in key[:-1]:
            node = node.setdefault(i, {})
        node[key[-1]] = c
    return root


def tmul(P: QuasiHopfPresentation, A: dict, B: dict) -> dict:
    """Product of two arity-r tensors in P^{(x) r}."""
    if not A or not B:
        return {}
    M = P.mult
    idem = orthogonal_idempotents(P)
    if idem and all(i in idem for k in A for i in k) and all(i in idem for k in B for i in k):
        # both factors live in a commutative semisimple part: entrywise product
        out = {}
        for k, a in A.items():
            b = B.get(k)
            if b is not None:
                c = a * b
                if c:
                    out[k] = c
        return out
    trie = _trie(B)
    out: dict = {}
    get = out.get
    for ekey, a in A.items():
        partial = [(trie, ())]
        for e in ekey:
            row = M[e]
            nxt = []
            for node, fs in partial:
                for f in row.keys() & node.keys():
                    nxt.append((node[f], fs + (f,)))
            partial = nxt
            if not partial:
                break
        for b, fs in partial:
            terms = [((), a * b)]
            for e, f in zip(ekey, fs):
                d = M[e][f]
                if len(d) == 1:
                    (kk, cc), = d.items()
                    terms = [(k + (kk,), c * cc) for k, c in terms]
                else:
                    terms = [(k + (kk,), c * cc) for k, c in terms for kk, cc in d.items()]
            for k, c in terms:
                prev = get(k)
                out[k] = c if prev is None else prev + c
    return {k: x for k, x in out.items() if x}


def outer(A: dict, B: dict) -> dict:
    """Outer product of tensors (vectors are promoted to 1-tuples)."""
    A = _as_tensor(A)
    B = _as_tensor(B)
    return {ka + kb: a * b for ka, a in A.items() for kb, b in B.items()}


def _as_tensor(T: dict) -> dict:
    for k in T:
        if isinstance(k, tuple):
            return T
        return {(i,): c for i, c in T.items()}
    return T


def unit_power(P: QuasiHopfPresentation, r: int) -> dict:
    T = {(): one(P.field_order)}
    for _ in range(r):
        T = outer(T, P.unit)
    return T


def comult_vec(P: QuasiHopfPresentation, v: dict) -> dict:
    out: dict = {}
    for i, c in v.items():
        axpy(out, P.comult[i], c)
    return out


def apply_comult(P: QuasiHopfPresentation, T: dict, pos: int) -> dict:
    """(id (x) .. Delta .. (x) id)(T) with Delta on leg `pos`."""
    out: dict = {}
    get = out.get
    for key, c in T.items():
        pre, post = key[:pos], key[pos + 1:]
        for (j, k), d in P.comult[key[pos]].items():
            nk = pre + (j, k) + post
            x = c * d
            prev = get(nk)
            out[nk] = x if prev is None else prev + x
    return {k: x for k, x in out.items() if x}


def apply_counit(P: QuasiHopfPresentation, T: dict, pos: int) -> dict:
    out: dict = {}
    for key, c in T.items():
        e = P.counit.get(key[pos])
        if e is None:
            continue
        nk = key[:pos] + key[pos + 1:]
        x = c * e
        prev = out.get(nk)
        out[nk] = x if prev is None else prev + x
    return {k: x for k, x in out.items() if x}


def antipode_vec(P: QuasiHopfPresentation, v: dict) -> dict:
    out: dict = {}
    for i, c in v.items():
        axpy(out, P.antipode[i], c)
    return out

