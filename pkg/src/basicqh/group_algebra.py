"""The group algebra k[Z_n], its idempotents, cocycles omega_s and twists J_s.

Conventions: chi generates Z_n, q = zeta_N^(N/n) is the chosen primitive n-th
root of unity inside the ambient field Q(zeta_N), and 1_b is the idempotent
with chi * 1_b = q^b 1_b.  For the pair Z_m < Z_{m^2} we write sigma = chi^m and
Q = q^m, and the idempotents of k[Z_m] are denoted e_s (sigma e_s = Q^s e_s).
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .cyclotomic import CyclotomicNumber, one, rational, root_of_unity, zero

__all__ = [
    "GroupAlgebraTensor",
    "Cocycle3",
    "idempotent",
    "group_element",
    "idempotent_embedding_check",
    "omega",
    "omega_cocycle",
    "is_three_cocycle",
    "cohomology_invariant",
    "coboundary_cocycle",
    "random_coboundary",
    "associator",
    "twist_coefficient",
    "twist_j",
    "coboundary",
    "verify_twist_conditions",
    "TwistReport",
]

BASES = ("group", "idempotent")


def _q(n: int, N: int, k: int) -> CyclotomicNumber:
    # q^k for q the primitive n-th root inside Q(zeta_N)
    return root_of_unity(N, (N // n) * k)


class GroupAlgebraTensor:
    """Element of k[Z_n]^{(x) r}, stored sparsely by index tuple."""

    __slots__ = ("modulus", "arity", "basis", "field_order", "coeffs")

    def __init__(self, modulus: int, arity: int, basis: str, coeffs=None, field_order: int | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        if arity < 1:
            raise ValueError("arity must be positive")
        N = field_order or modulus
        if N % modulus:
            raise ValueError("field order must be a multiple of the modulus")
        self.modulus = modulus
        self.arity = arity
        self.basis = basis
        self.field_order = N
        self.coeffs: dict[tuple, CyclotomicNumber] = {}
        for idx, c in (coeffs or {}).items():
            idx = tuple(int(i) % modulus for i in idx)
            if len(idx) != arity:
                raise ValueError("index tuple has wrong arity")
            if not isinstance(c, CyclotomicNumber):
                c = rational(N, c)
            c = c + zero(N)  # lifts lower orders
            if c.order != N:
                raise ValueError("coefficient outside the ambient field")
            if c:
                prev = self.coeffs.get(idx)
                c = c if prev is None else prev + c
                if c:
                    self.coeffs[idx] = c
                else:
                    del self.coeffs[idx]

    @classmethod
    def _raw(cls, modulus, arity, basis, N, coeffs):
        t = object.__new__(cls)
        t.modulus, t.arity, t.basis, t.field_order = modulus, arity, basis, N
        t.coeffs = {k: v for k, v in coeffs.items() if v}
        return t

    def __getitem__(self, idx) -> CyclotomicNumber:
        if isinstance(idx, int):
            idx = (idx,)
        return self.coeffs.get(tuple(i % self.modulus for i in idx), zero(self.field_order))

    def __repr__(self) -> str:
        return f"GroupAlgebraTensor(n={self.modulus}, r={self.arity}, {self.basis}, {len(self.coeffs)} terms)"

    def _compatible(self, other: "GroupAlgebraTensor") -> tuple["GroupAlgebraTensor", "GroupAlgebraTensor"]:
        if (self.modulus, self.arity) != (other.modulus, other.arity):
            raise ValueError("tensors differ in modulus or arity")
        a, b = self, other
        if a.field_order != b.field_order:
            from math import lcm

            N = lcm(a.field_order, b.field_order)
            a, b = a.with_field(N), b.with_field(N)
        if b.basis != a.basis:
            b = b.to_basis(a.basis)
        return a, b

    def with_field(self, N: int) -> "GroupAlgebraTensor":
        if N == self.field_order:
            return self
        from .cyclotomic import lift

        return GroupAlgebraTensor._raw(
            self.modulus, self.arity, self.basis, N, {k: lift(v, N) for k, v in self.coeffs.items()}
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupAlgebraTensor):
            return NotImplemented
        a, b = self._compatible(other)
        return a.coeffs == b.coeffs

    def __add__(self, other):
        a, b = self._compatible(other)
        out = dict(a.coeffs)
        for k, v in b.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return GroupAlgebraTensor._raw(a.modulus, a.arity, a.basis, a.field_order, out)

    def scale(self, c) -> "GroupAlgebraTensor":
        return GroupAlgebraTensor._raw(
            self.modulus, self.arity, self.basis, self.field_order, {k: v * c for k, v in self.coeffs.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, GroupAlgebraTensor):
            return self.scale(other)
        a, b = self._compatible(other)
        n = a.modulus
        out: dict[tuple, CyclotomicNumber] = {}
        if a.basis == "idempotent":
            for k, v in a.coeffs.items():
                w = b.coeffs.get(k)
                if w is not None:
                    out[k] = v * w
        else:
            for k1, v in a.coeffs.items():
                for k2, w in b.coeffs.items():
                    k = tuple((x + y) % n for x, y in zip(k1, k2))
                    p = v * w
                    out[k] = out[k] + p if k in out else p
        return GroupAlgebraTensor._raw(n, a.arity, a.basis, a.field_order, out)

    __rmul__ = scale

    # -- basis change ---------------------------------------------------
    def to_basis(self, basis: str) -> "GroupAlgebraTensor":
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        if basis == self.basis:
            return self
        n, N = self.modulus, self.field_order
        sign = 1 if basis == "idempotent" else -1
        inv_n = rational(N, 1) / n
        cur = dict(self.coeffs)
        for axis in range(self.arity):
            nxt: dict[tuple, CyclotomicNumber] = {}
            for idx, v in cur.items():
                j = idx[axis]
                for b in range(n):
                    c = v * _q(n, N, sign * b * j)
                    if sign < 0:
                        c = c * inv_n
                    k = idx[:axis] + (b,) + idx[axis + 1:]
                    nxt[k] = nxt[k] + c if k in nxt else c
            cur = {k: v for k, v in nxt.items() if v}
        return GroupAlgebraTensor._raw(n, self.arity, basis, N, cur)

    # -- Hopf structure of the group algebra ------------------------------
    def coproduct(self, pos: int) -> "GroupAlgebraTensor":
        """Apply Delta to tensor leg `pos`, raising the arity by one."""
        n = self.modulus
        out: dict[tuple, CyclotomicNumber] = {}
        for idx, v in self.coeffs.items():
            z = idx[pos]
            if self.basis == "group":
                k = idx[:pos] + (z, z) + idx[pos + 1:]
                out[k] = v
            else:
                for u in range(n):
                    k = idx[:pos] + (u, (z - u) % n) + idx[pos + 1:]
                    out[k] = v
        return GroupAlgebraTensor._raw(n, self.arity + 1, self.basis, self.field_order, out)

    def counit(self, pos: int) -> "GroupAlgebraTensor":
        """Contract leg `pos` with epsilon."""
        n = self.modulus
        out: dict[tuple, CyclotomicNumber] = {}
        for idx, v in self.coeffs.items():
            if self.basis == "idempotent" and idx[pos] != 0:
                continue
            k = idx[:pos] + idx[pos + 1:]
            out[k] = out[k] + v if k in out else v
        if self.arity == 1:
            return out.get((), zero(self.field_order))
        return GroupAlgebraTensor._raw(n, self.arity - 1, self.basis, self.field_order, out)

    def antipode(self) -> "GroupAlgebraTensor":
        n = self.modulus
        return GroupAlgebraTensor._raw(
            n, self.arity, self.basis, self.field_order,
            {tuple((-i) % n for i in k): v for k, v in self.coeffs.items()},
        )

    def inverse(self) -> "GroupAlgebraTensor":
        t = self.to_basis("idempotent")
        n = t.modulus
        out = {}
        for idx in itertools.product(range(n), repeat=t.arity):
            v = t.coeffs.get(idx)
            if v is None:
                raise ZeroDivisionError("tensor is not invertible")
            out[idx] = v.inverse()
        return GroupAlgebraTensor._raw(n, t.arity, "idempotent", t.field_order, out).to_basis(self.basis)

    def tensor(self, other: "GroupAlgebraTensor") -> "GroupAlgebraTensor":
        if self.modulus != other.modulus or self.basis != other.basis:
            raise ValueError("outer product needs equal modulus and basis")
        a, b = self, other
        if a.field_order != b.field_order:
            from math import lcm

            N = lcm(a.field_order, b.field_order)
            a, b = a.with_field(N), b.with_field(N)
        out = {k1 + k2: v * w for k1, v in a.coeffs.items() for k2, w in b.coeffs.items()}
        return GroupAlgebraTensor._raw(a.modulus, a.arity + b.arity, a.basis, a.field_order, out)

    def embed(self, factor: int) -> "GroupAlgebraTensor":
        """Image under Z_n -> Z_{n*factor}, generator to chi^factor."""
        n, M = self.modulus, self.modulus * factor
        N = self.field_order
        if N % M:
            from math import lcm

            N = lcm(N, M)
        src = self.with_field(N)
        out: dict[tuple, CyclotomicNumber] = {}
        if src.basis == "group":
            for idx, v in src.coeffs.items():
                out[tuple(factor * i for i in idx)] = v
        else:
            # e_s = sum_i 1_{n i + s}
            for idx, v in src.coeffs.items():
                for lifts in itertools.product(range(factor), repeat=self.arity):
                    out[tuple(n * i + s for i, s in zip(lifts, idx))] = v
        return GroupAlgebraTensor._raw(M, self.arity, src.basis, N, out)

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus,
            "arity": self.arity,
            "basis": self.basis,
            "field_order": self.field_order,
            "entries": [[list(k), self.coeffs[k].to_json()] for k in sorted(self.coeffs)],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GroupAlgebraTensor":
        from .cyclotomic import from_json

        return cls(
            obj["modulus"], obj["arity"], obj["basis"],
            {tuple(k): from_json(c) for k, c in obj["entries"]},
            field_order=obj.get("field_order"),
        )


def unit_tensor(n: int, arity: int = 1, basis: str = "idempotent", field_order: int | None = None):
    N = field_order or n
    if basis == "group":
        return GroupAlgebraTensor._raw(n, arity, basis, N, {(0,) * arity: one(N)})
    return GroupAlgebraTensor._raw(
        n, arity, basis, N, {idx: one(N) for idx in itertools.product(range(n), repeat=arity)}
    )


def group_element(n: int, j: int, field_order: int | None = None) -> GroupAlgebraTensor:
    N = field_order or n
    return GroupAlgebraTensor._raw(n, 1, "group", N, {(j % n,): one(N)})


def idempotent(n: int, b: int, field_order: int | None = None) -> GroupAlgebraTensor:
    """1_b = n^{-1} sum_j q^{-bj} chi^j, in the group basis."""
    if not 0 <= b < n:
        raise ValueError(f"idempotent index {b} out of range for Z_{n}")
    N = field_order or n
    return GroupAlgebraTensor._raw(n, 1, "idempotent", N, {(b,): one(N)}).to_basis("group")


def idempotent_embedding_check(m: int) -> bool:
    """sum_i 1_{mi+s} equals the image of e_s under sigma = chi^m, for every s."""
    if m < 2:
        raise ValueError("m must be at least 2")
    M = m * m
    for s in range(m):
        lhs = GroupAlgebraTensor(M, 1, "group", {}, field_order=M)
        for i in range(m):
            lhs = lhs + idempotent(M, m * i + s, field_order=M)
        rhs = idempotent(m, s, field_order=M).embed(m)
        if lhs != rhs:
            return False
    return True


# -- cocycles ----------------------------------------------------------------

def omega(m: int, s: int, i: int, j: int, k: int, field_order: int | None = None) -> CyclotomicNumber:
    """omega_s(i,j,k) = q^{s i (j+k-(j+k)')}, q of order m^2; a power of Q."""
    for a in (i, j, k):
        if not 0 <= a < m:
            raise ValueError("cocycle arguments must lie in 0..m-1")
    N = field_order or m * m
    # q^{s i m floor((j+k)/m)} = Q^{s i floor((j+k)/m)}
    return _q(m, N, s * i * ((j + k) // m))


@dataclass
class Cocycle3:
    """A normalized 3-cochain on Z_m with values in Q(zeta_N), stored densely."""

    m: int
    table: list
    field_order: int
    label: str = ""

    def __call__(self, i: int, j: int, k: int) -> CyclotomicNumber:
        m = self.m
        return self.table[((i % m) * m + (j % m)) * m + (k % m)]

    def is_normalized(self) -> bool:
        m, u = self.m, one(self.field_order)
        return all(
            self(i, j, k) is u
            for i, j, k in itertools.product(range(m), repeat=3)
            if 0 in (i, j, k)
        )

    def perturbed(self, i: int, j: int, k: int, value: CyclotomicNumber) -> "Cocycle3":
        t = list(self.table)
        t[(i * self.m + j) * self.m + k] = value
        return Cocycle3(self.m, t, self.field_order, self.label + "*")

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "field_order": self.field_order,
            "entries": [
                [[i, j, k], self(i, j, k).to_json()]
                for i, j, k in itertools.product(range(self.m), repeat=3)
            ],
        }


def omega_cocycle(m: int, s: int, field_order: int | None = None) -> Cocycle3:
    if not 0 <= s < m:
        raise ValueError("s must lie in 0..m-1")
    N = field_order or m * m
    table = [omega(m, s, i, j, k, N) for i, j, k in itertools.product(range(m), repeat=3)]
    return Cocycle3(m, table, N, f"omega_{s}")


def is_three_cocycle(w: Cocycle3) -> bool:
    m = w.m
    for i, j, k, l in itertools.product(range(m), repeat=4):
        lhs = w(j, k, l) * w(i, j + k, l) * w(i, j, k)
        rhs = w(i + j, k, l) * w(i, j, k + l)
        if lhs != rhs:
            return False
    return True


def cohomology_invariant(w: Cocycle3) -> CyclotomicNumber:
    """prod_j w(1, j, 1): equals Q^s on omega_s and 1 on coboundaries."""
    out = one(w.field_order)
    if w.m == 1:
        return out
    for j in range(w.m):
        out = out * w(1, j, 1)
    return out


def coboundary_cocycle(m: int, phi, field_order: int) -> Cocycle3:
    """d(phi)(i,j,k) = phi(j,k) phi(i,j+k) / (phi(i+j,k) phi(i,j))."""
    table = []
    for i, j, k in itertools.product(range(m), repeat=3):
        num = phi((j) % m, k) * phi(i, (j + k) % m)
        den = phi((i + j) % m, k) * phi(i, j)
        table.append(num / den)
    return Cocycle3(m, table, field_order, "coboundary")


def random_coboundary(m: int, rng: random.Random, field_order: int | None = None) -> Cocycle3:
    """Coboundary of a random normalized 2-cochain with values in roots of unity times +-1, +-2."""
    N = field_order or m * m
    vals = {}
    for i, j in itertools.product(range(m), repeat=2):
        if i == 0 or j == 0:
            vals[(i, j)] = one(N)
        else:
            vals[(i, j)] = root_of_unity(N, rng.randrange(N)) * rng.choice((1, -1, 2, -2))
    return coboundary_cocycle(m, lambda a, b: vals[(a, b)], N)


def associator(m: int, s: int, field_order: int | None = None) -> GroupAlgebraTensor:
    """Phi_s = sum omega_s(i,j,k) e_i (x) e_j (x) e_k in the idempotent basis of k[Z_m]."""
    w = omega_cocycle(m, s, field_order)
    coeffs = {(i, j, k): w(i, j, k) for i, j, k in itertools.product(range(m), repeat=3)}
    return GroupAlgebraTensor._raw(m, 3, "idempotent", w.field_order, coeffs)


def associator_from_cocycle(w: Cocycle3) -> GroupAlgebraTensor:
    m = w.m
    coeffs = {(i, j, k): w(i, j, k) for i, j, k in itertools.product(range(m), repeat=3)}
    return GroupAlgebraTensor._raw(m, 3, "idempotent", w.field_order, coeffs)


# -- twists ------------------------------------------------------------------

def twist_coefficient(m: int, i: int, j: int) -> CyclotomicNumber:
    """c(i,j) = q^{i (j - j')} with j' = j mod m and q of order m^2."""
    M = m * m
    jr = j % m
    return root_of_unity(M, (i * (j - jr)) % M)


def twist_j(m: int, s: int) -> GroupAlgebraTensor:
    """J_s = sum c(i,j)^s 1_i (x) 1_j in k[Z_{m^2}]^{(x)2}, idempotent basis."""
    if not 0 <= s < m:
        raise ValueError("s must lie in 0..m-1")
    M = m * m
    coeffs = {(i, j): twist_coefficient(m, i, j) ** s for i in range(M) for j in range(M)}
    return GroupAlgebraTensor._raw(M, 2, "idempotent", M, coeffs)


def coboundary(J: GroupAlgebraTensor, ordering: str = "standard") -> GroupAlgebraTensor:
    """dJ for an invertible arity-2 tensor of the group algebra.

    "standard": (1 (x) J)(id (x) Delta)(J)[(Delta (x) id)(J)]^{-1}(J (x) 1)^{-1}
    "inverse":  the reciprocal ordering, equal to the inverse of the above
    since the algebra is commutative.
    """
    if J.arity != 2:
        raise ValueError("twist must have arity 2")
    n, N = J.modulus, J.field_order
    one1 = unit_tensor(n, 1, J.basis, N)
    lhs = one1.tensor(J) * J.coproduct(1)
    rhs = J.coproduct(0) * J.tensor(one1)
    d = lhs * rhs.inverse()
    if ordering == "standard":
        return d
    if ordering == "inverse":
        return d.inverse()
    raise ValueError(f"unknown ordering {ordering!r}")


@dataclass
class TwistReport:
    m: int
    s: int
    counit_ok: bool
    coboundary_ok: bool
    ordering: str = "standard"
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.counit_ok and self.coboundary_ok


def verify_twist_conditions(m: int, s: int, ordering: str = "standard") -> TwistReport:
    J = twist_j(m, s)
    M = m * m
    unit = unit_tensor(M, 1, "idempotent", M)
    counit_ok = J.counit(0) == unit and J.counit(1) == unit
    dJ = coboundary(J, ordering)
    image = associator(m, s, field_order=M).embed(m)
    return TwistReport(m, s, counit_ok, dJ == image, ordering)
