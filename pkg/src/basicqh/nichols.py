"""Radically graded pointed Hopf algebras B(V) # k[Z_n] of rank 1 and type A1xA1.

The group Z_n is generated by chi, q = zeta_n, and each skew-primitive x_i
carries a datum (b_i, d_i) with chi x_i chi^{-1} = q^{d_i} x_i.  Three
coproduct conventions are available:

    "adopted":  Delta(x) = x (x) chi^{-b} + 1 (x) x,   S(x) = -x chi^{b}
    "literal":  Delta(x) = x (x) chi^{b}  + 1 (x) x,   S(x) = -x chi^{-b}
    "left":     Delta(x) = x (x) 1 + chi^{b} (x) x,    S(x) = -chi^{-b} x

Only the sign of b distinguishes the first two.  "adopted" is the default
because it is the reading under which twisting by J_s closes on the
subalgebra generated by chi^m and the x_i exactly when b_i = s d_i mod m.

Basis elements are X^alpha g with X^alpha = x_1^{a_1} x_2^{a_2} and g either
an idempotent 1_z ("idempotent") or a group element chi^h ("group").  The
index of X^alpha g is mono_index(alpha) * n + g, so degree-zero elements
occupy indices 0..n-1.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from math import gcd

from .cyclotomic import CyclotomicNumber, one, root_of_unity, zero
from .linalg import axpy
from .presentation import QuasiHopfPresentation, unit_power, vmul

__all__ = [
    "q_binomial",
    "q_binomial_recursive",
    "build_quantum_line",
    "build_quantum_plane",
    "build_pointed",
    "group_algebra_presentation",
    "height",
    "CONVENTIONS",
]

CONVENTIONS = ("adopted", "literal", "left")


# -- Gaussian binomials ---------------------------------------------------------

def _pmul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _pdiv_exact(a: list, b: list) -> list:
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c, r = divmod(a[k + len(b) - 1], b[-1])
        if r:
            raise ArithmeticError("inexact division")
        q[k] = c
        for i, y in enumerate(b):
            a[k + i] -= c * y
    if any(a):
        raise ArithmeticError("inexact division")
    return q


def _one_minus_xk(k: int) -> list:
    p = [0] * (k + 1)
    p[0], p[k] = 1, -1
    return p


@lru_cache(maxsize=None)
def _gauss_poly(a: int, k: int) -> tuple:
    num, den = [1], [1]
    for i in range(k):
        num = _pmul(num, _one_minus_xk(a - i))
        den = _pmul(den, _one_minus_xk(i + 1))
    return tuple(_pdiv_exact(num, den))


def _eval(poly, t: CyclotomicNumber) -> CyclotomicNumber:
    out = zero(t.order)
    for c in reversed(poly):
        out = out * t + c
    return out


def q_binomial(a: int, k: int, t: CyclotomicNumber) -> CyclotomicNumber:
    """Gaussian binomial [a choose k]_t from the product formula, divided exactly in Z[t]."""
    if a < 0 or k < 0:
        raise ValueError("arguments must be non-negative")
    if k > a:
        raise ValueError("k must not exceed a")
    return _eval(_gauss_poly(a, k), t)


def q_binomial_recursive(a: int, k: int, t: CyclotomicNumber) -> CyclotomicNumber:
    """Same value via the q-Pascal rule [a,k] = t^k [a-1,k] + [a-1,k-1]."""
    if k < 0 or k > a:
        raise ValueError("need 0 <= k <= a")
    rows = [[one(t.order)]]
    for n in range(1, a + 1):
        prev = rows[-1]
        row = [one(t.order)]
        for j in range(1, n):
            row.append(t ** j * prev[j] + prev[j - 1])
        row.append(one(t.order))
        rows.append(row)
    return rows[a][k]


def height(n: int, b: int, d: int) -> int:
    """Order of q^{bd} for q of order n."""
    e = (b * d) % n
    if e == 0:
        raise ValueError(f"q^(b d) = 1 for (b, d) = ({b}, {d}) over Z_{n}: Nichols algebra is infinite")
    return n // gcd(n, e)


# -- builder ------------------------------------------------------------------

def _mono_label(alpha) -> str:
    parts = []
    for i, a in enumerate(alpha):
        if a:
            name = "x" if len(alpha) == 1 else f"x{i + 1}"
            parts.append(name if a == 1 else f"{name}^{a}")
    return "*".join(parts) if parts else "1"


def build_pointed(n: int, pairs=(), convention: str = "adopted", basis: str = "idempotent",
                  field_order: int | None = None, m: int | None = None) -> QuasiHopfPresentation:
    """Hopf presentation of B(V) # k[Z_n] for rank <= 2 (rank 2 of type A1xA1)."""
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    if basis not in ("idempotent", "group"):
        raise ValueError(f"unknown basis {basis!r}")
    pairs = [(b % n, d % n) for b, d in pairs]
    r = len(pairs)
    if r > 2:
        raise ValueError("only rank 1 and rank 2 (A1xA1) data are buildable")
    N = field_order or n
    if N % n:
        raise ValueError("field order must be a multiple of n")
    heights = [height(n, b, d) for b, d in pairs]
    if r == 2:
        (b1, d1), (b2, d2) = pairs
        if (b1 * d2 + b2 * d1) % n:
            raise ValueError("rank-2 datum is not of type A1xA1 (q12 q21 != 1)")

    def q(k):
        return root_of_unity(N, (N // n) * k)

    u = one(N)
    ds = [d for _, d in pairs]
    if convention == "adopted":
        es = [(-b) % n for b, _ in pairs]
    else:
        es = [b for b, _ in pairs]
    # x_1 x_2 = lam x_2 x_1
    lam_exp = 0
    if r == 2:
        lam_exp = es[0] * ds[1]
    monos = list(itertools.product(*[range(h) for h in heights]))
    mono_index = {a: i for i, a in enumerate(monos)}
    dim = len(monos) * n

    def idx(alpha, g):
        return mono_index[alpha] * n + g % n

    def mono_mul(al, be):
        # X^al X^be = c X^(al+be): move x_2^{al_2} past x_1^{be_1}
        tot = tuple(a + b for a, b in zip(al, be))
        if any(t >= h for t, h in zip(tot, heights)):
            return None, None
        e = 0
        if r == 2:
            e = -lam_exp * al[1] * be[0]
        return tot, e

    def deg_char(alpha):
        return sum(a * d for a, d in zip(alpha, ds))

    labels = []
    for alpha in monos:
        for g in range(n):
            tail = f"1_{g}" if basis == "idempotent" else f"chi^{g}"
            labels.append(f"{_mono_label(alpha)}|{tail}")

    mult = [dict() for _ in range(dim)]
    for al in monos:
        for be in monos:
            tot, e = mono_mul(al, be)
            if tot is None:
                continue
            dbe = deg_char(be)
            for g in range(n):
                i = idx(al, g)
                if basis == "idempotent":
                    # (X^al 1_g)(X^be 1_h) = X^al X^be 1_{g - be.d} 1_h
                    h = (g - dbe) % n
                    mult[i][idx(be, h)] = {idx(tot, h): q(e)}
                else:
                    for h in range(n):
                        mult[i][idx(be, h)] = {idx(tot, g + h): q(e + g * dbe)}

    if basis == "idempotent":
        unit = {idx(monos[0], g): u for g in range(n)}
        counit = {idx(monos[0], 0): u}
    else:
        unit = {idx(monos[0], 0): u}
        counit = {idx(monos[0], g): u for g in range(n)}

    ts = [q(e * d) if convention != "left" else q(b * d) for e, d, (b, _) in zip(es, ds, pairs)]
    comult = []
    for alpha in monos:
        # Delta(X^alpha) = sum coeff * X^kappa chi^L (x) X^(alpha-kappa) chi^R
        terms = []
        for kappa in itertools.product(*[range(a + 1) for a in alpha]):
            rest = tuple(a - k for a, k in zip(alpha, kappa))
            c = u
            for a, k, t in zip(alpha, kappa, ts):
                c = c * q_binomial(a, k, t)
            if convention == "left":
                L = sum(b * x for (b, _), x in zip(pairs, rest))
                R = 0
                e = 0
                if r == 2:
                    e = pairs[0][0] * rest[0] * ds[1] * kappa[1]
            else:
                L = 0
                R = sum(e_ * k for e_, k in zip(es, kappa))
                e = 0
                if r == 2:
                    e = es[0] * kappa[0] * ds[1] * rest[1]
            terms.append((kappa, rest, L, R, c * q(e)))
        for g in range(n):
            D: dict = {}
            for kappa, rest, L, R, c in terms:
                if basis == "idempotent":
                    for a in range(n):
                        b = (g - a) % n
                        # X^kappa chi^L 1_a (x) X^rest chi^R 1_b
                        D[(idx(kappa, a), idx(rest, b))] = c * q(L * a + R * b)
                else:
                    D[(idx(kappa, L + g), idx(rest, R + g))] = c
            comult.append({k: v for k, v in D.items() if v})

    assoc = None
    meta = {
        "kind": "pointed", "n": n, "pairs": [list(p) for p in pairs], "heights": heights,
        "convention": convention, "basis": basis,
    }
    if m is not None:
        meta["m"] = m
    P = QuasiHopfPresentation(
        labels=labels, field_order=N, mult=mult, unit=unit, comult=comult, counit=counit,
        assoc={}, assoc_inv={}, meta=meta,
    )
    assoc = unit_power(P, 3)
    P.assoc, P.assoc_inv = assoc, dict(assoc)

    # group-likes and generators
    def chi_pow(h):
        if basis == "idempotent":
            return {idx(monos[0], z): q(h * z) for z in range(n)}
        return {idx(monos[0], h): u}

    xs = []
    for i in range(r):
        unit_i = tuple(1 if j == i else 0 for j in range(r))
        xs.append({idx(unit_i, z): u for z in range(n)} if basis == "idempotent" else {idx(unit_i, 0): u})
    s_x = []
    for i in range(r):
        if convention == "left":
            v = vmul(P, chi_pow(-pairs[i][0]), xs[i])
        else:
            v = vmul(P, xs[i], chi_pow(-es[i]))
        s_x.append({k: -c for k, c in v.items()})
    # S(X^alpha g) = S(g) S(x_r)^{a_r} ... S(x_1)^{a_1}
    powers = []
    for i in range(r):
        pw = [dict(P.unit)]
        for _ in range(heights[i] - 1):
            pw.append(vmul(P, pw[-1], s_x[i]))
        powers.append(pw)
    antipode = []
    for alpha in monos:
        tail = dict(P.unit)
        for i in reversed(range(r)):
            tail = vmul(P, tail, powers[i][alpha[i]])
        for g in range(n):
            sg = {idx(monos[0], -g): u}
            antipode.append(vmul(P, sg, tail))
    P.antipode = antipode
    P.alpha = dict(P.unit)
    P.beta = dict(P.unit)
    P.generators = [chi_pow(1)] + xs
    P.meta["generator_names"] = ["chi"] + (["x"] if r == 1 else [f"x{i + 1}" for i in range(r)])
    return P


def group_algebra_presentation(n: int, basis: str = "idempotent", field_order: int | None = None) -> QuasiHopfPresentation:
    """k[Z_n] as a Hopf presentation."""
    return build_pointed(n, (), basis=basis, field_order=field_order)


def build_quantum_line(m: int, b: int, d: int, convention: str = "adopted", basis: str = "idempotent",
                       verify_mode: str | None = "auto") -> QuasiHopfPresentation:
    """Quantum line B(V) # k[Z_{m^2}] with datum (b, d); certified before return."""
    P = build_pointed(m * m, [(b, d)], convention, basis, m=m)
    return _certify(P, verify_mode)


def build_quantum_plane(m: int, pairs, convention: str = "adopted", basis: str = "idempotent",
                        verify_mode: str | None = "auto") -> QuasiHopfPresentation:
    """Quantum plane of type A1xA1 over Z_{m^2}; certified before return."""
    pairs = list(pairs)
    if len(pairs) != 2:
        raise ValueError("quantum plane needs exactly two (b, d) pairs")
    P = build_pointed(m * m, pairs, convention, basis, m=m)
    return _certify(P, verify_mode)


def _certify(P: QuasiHopfPresentation, verify_mode: str | None) -> QuasiHopfPresentation:
    if verify_mode is None:
        return P
    from .axioms import verify

    rep = verify(P, verify_mode)
    if not rep.certified:
        raise AssertionError(f"constructed presentation fails the Hopf axioms: {rep.witness}")
    P.meta["certificate"] = rep.to_json()
    return P
