"""Yetter-Drinfeld data over cyclic groups and their number-theoretic census.

A datum over Z_n is a list of pairs (b_i, d_i); with q of order n the
braiding is q_ij = q^{b_j d_i}, so q_ii = q^{b_i d_i} and the symmetric
product q_ij q_ji = q^{b_i d_j + b_j d_i}.  All arithmetic below is on these
exponents modulo n.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

__all__ = [
    "YDDatum",
    "ClassificationReport",
    "cartan_type",
    "classify",
    "dynkin_name",
    "is_finite_cartan",
    "rank2_solvability",
    "rank2_exists",
    "b2hat_check",
    "enumerate_data",
    "upsilon",
    "v_sets",
    "weyl_elements",
    "lifting_obstruction",
    "grouplike_congruence_check",
    "semisimple_classes",
    "CARTAN_MATRICES",
    "CEILINGS",
    "FILTERS",
]

CEILINGS = {1: 10 ** 4, 2: 169, 3: 81, 4: 27}
HARD_CEILINGS = {1: 10 ** 5, 2: 361, 3: 125, 4: 49}
FILTERS = ("all", "finite", "finite-cartan", "upsilon", "upsilon-coprime", "standard")
CARTAN_OPTIONS = (0, -1, -2, -3)

CARTAN_MATRICES = {
    "A1xA1": ((2, 0), (0, 2)),
    "A2": ((2, -1), (-1, 2)),
    "B2": ((2, -1), (-2, 2)),
    "G2": ((2, -1), (-3, 2)),
}


def _factor(n: int) -> dict:
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _prime_power(n: int):
    f = _factor(n)
    if len(f) != 1:
        return None
    (p, k), = f.items()
    return p, k


def _ord(e: int, n: int) -> int:
    """Order of q^e for q of order n."""
    return n // gcd(n, e % n)


@dataclass(frozen=True)
class YDDatum:
    n: int
    pairs: tuple

    def __post_init__(self):
        pairs = tuple((int(b) % self.n, int(d) % self.n) for b, d in self.pairs)
        object.__setattr__(self, "pairs", pairs)

    @property
    def rank(self) -> int:
        return len(self.pairs)

    def validate(self) -> None:
        for i, (b, d) in enumerate(self.pairs):
            if (b * d) % self.n == 0:
                raise ValueError(f"q^(b d) = 1 at vertex {i + 1}: Nichols algebra is infinite-dimensional")

    def exponents(self) -> list:
        """Matrix of b_i d_j mod n."""
        n = self.n
        return [[(bi * dj) % n for _, dj in self.pairs] for bi, _ in self.pairs]

    def permuted(self, perm) -> "YDDatum":
        return YDDatum(self.n, tuple(self.pairs[i] for i in perm))

    def to_json(self) -> dict:
        return {"n": self.n, "pairs": [list(p) for p in self.pairs]}


# -- Cartan type -----------------------------------------------------------------

def _admissible(n: int, e: int, t: int) -> list:
    return [a for a in CARTAN_OPTIONS if (a * e - t) % n == 0]


def cartan_type(datum: YDDatum):
    """Cartan matrix (tuple of tuples) of the braiding, or None.

    a_ij is the admissible exponent of least absolute value with
    q_ii^{a_ij} = q_ij q_ji.
    """
    mat, _ = _cartan_with_admissible(datum)
    return mat


def _cartan_with_admissible(datum: YDDatum):
    n, P = datum.n, datum.pairs
    r = len(P)
    A = [[2] * r for _ in range(r)]
    adm = {}
    ok = True
    for i in range(r):
        e = (P[i][0] * P[i][1]) % n
        for j in range(r):
            if i == j:
                continue
            t = (P[i][0] * P[j][1] + P[j][0] * P[i][1]) % n
            cand = _admissible(n, e, t)
            adm[(i, j)] = cand
            if not cand:
                ok = False
            else:
                A[i][j] = min(cand, key=abs)
    return (tuple(tuple(row) for row in A) if ok else None), adm


def _minor_positive(A, idx) -> bool:
    M = [[Fraction(A[i][j]) for j in idx] for i in idx]
    k = len(M)
    det = Fraction(1)
    for c in range(k):
        piv = next((r for r in range(c, k) if M[r][c] != 0), None)
        if piv is None:
            return False
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, k):
            f = M[r][c] / M[c][c]
            for cc in range(c, k):
                M[r][cc] -= f * M[c][cc]
    return det > 0


def is_finite_cartan(A) -> bool:
    """All principal minors positive (finite type criterion for generalized Cartan matrices)."""
    r = len(A)
    for i in range(r):
        for j in range(r):
            if i != j and (A[i][j] == 0) != (A[j][i] == 0):
                return False
    for k in range(1, r + 1):
        for idx in itertools.combinations(range(r), k):
            if not _minor_positive(A, idx):
                return False
    return True


def _components(r: int, linked) -> list:
    seen, comps = set(), []
    for s in range(r):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in range(r):
                if w not in seen and linked(v, w):
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _name_component(A, comp) -> str | None:
    """Dynkin name of a connected Cartan component of rank <= 4, or None if not of finite type."""
    k = len(comp)
    if k == 1:
        return "A1"
    edges = {}
    for x, y in itertools.combinations(comp, 2):
        if A[x][y]:
            edges[(x, y)] = A[x][y] * A[y][x]
    deg = {v: 0 for v in comp}
    for x, y in edges:
        deg[x] += 1
        deg[y] += 1
    if len(edges) != k - 1 or any(w > 3 for w in edges.values()):
        return None  # a cycle, or a bond of affine/hyperbolic strength
    if k == 2:
        return {1: "A2", 2: "B2", 3: "G2"}[next(iter(edges.values()))]
    if any(w == 3 for w in edges.values()):
        return None  # triple bond only occurs in rank 2
    multi = [(x, y) for (x, y), w in edges.items() if w == 2]
    if max(deg.values()) == 3:
        return "D4" if k == 4 and not multi else None
    if not multi:
        return f"A{k}"
    if len(multi) > 1:
        return None
    x, y = multi[0]
    if deg[x] == 2 and deg[y] == 2:
        return "F4" if k == 4 else None
    end, inner = (x, y) if deg[x] == 1 else (y, x)
    # the end vertex is the short root iff a_{end,inner} = -2
    return f"B{k}" if A[end][inner] == -2 else f"C{k}"


def dynkin_name(A) -> str | None:
    """Name of a Cartan matrix of rank <= 4 ('A2xA1', ...) or None when it is not of finite type."""
    r = len(A)
    comps = _components(r, lambda v, w: A[v][w] != 0)
    names = []
    for c in comps:
        nm = _name_component(A, c)
        if nm is None:
            return None
        names.append(nm)
    return "x".join(sorted(names, key=lambda s: (-int(s[1:]), s)))


def _hat_b2(n: int, P, i: int, j: int) -> bool:
    """Fingerprint of the standard braiding: q_ii in G_3, q_jj = zeta not in {1} u G_3, q_ij q_ji = zeta^{-1}."""
    e_i = (P[i][0] * P[i][1]) % n
    e_j = (P[j][0] * P[j][1]) % n
    t = (P[i][0] * P[j][1] + P[j][0] * P[i][1]) % n
    return _ord(e_i, n) == 3 and _ord(e_j, n) not in (1, 3) and (t + e_j) % n == 0


def _hat_b3(n: int, P, comp) -> bool:
    if len(comp) != 3 or n % 9:
        return False
    u = n // 9
    for z in (1, 2, 4, 5, 7, 8):  # zeta = q^{u z}, a primitive 9th root
        for a, b, c in itertools.permutations(comp):
            def e(x):
                return (P[x][0] * P[x][1]) % n

            def t(x, y):
                return (P[x][0] * P[y][1] + P[y][0] * P[x][1]) % n

            Z = lambda k: (u * z * k) % n  # noqa: E731
            if t(a, c) != 0:
                continue
            if e(a) == Z(1) and t(a, b) == Z(-1) and e(c) == Z(-3):
                if e(b) == Z(1) and t(b, c) == Z(-1):
                    return True
                if e(b) == Z(-4) and t(b, c) == Z(4):
                    return True
    return False


@dataclass
class ClassificationReport:
    datum: YDDatum
    exponents: list
    cartan: tuple | None
    admissible: dict
    dynkin: str  # Dynkin or standard type name, or "infinite"/"none"
    finite: bool
    standard: str | None
    upsilon: list | None
    hopf_compatible: bool | None
    v_sets: dict
    v_violation: bool
    obstruction: dict | None = None

    @property
    def finite_cartan(self) -> bool:
        return self.finite and self.standard is None

    def to_json(self) -> dict:
        return {
            "datum": self.datum.to_json(),
            "exponents": self.exponents,
            "cartan": None if self.cartan is None else [list(r) for r in self.cartan],
            "admissible": {f"{i + 1},{j + 1}": v for (i, j), v in sorted(self.admissible.items())},
            "dynkin": self.dynkin,
            "finite": self.finite,
            "standard": self.standard,
            "upsilon": self.upsilon,
            "hopf_compatible": self.hopf_compatible,
            "v_sets": {str(p): v for p, v in sorted(self.v_sets.items())},
            "v_violation": self.v_violation,
            "obstruction": self.obstruction,
        }


def classify(datum: YDDatum, with_obstruction: bool = True) -> ClassificationReport:
    datum.validate()
    n, P = datum.n, datum.pairs
    r = datum.rank
    A, adm = _cartan_with_admissible(datum)
    standard = None
    if A is not None:
        name = dynkin_name(A)
        finite = name is not None
        dyn = name or "infinite"
    else:
        # decompose by q_ij q_ji != 1 and recognise standard components at p = 3
        comps = _components(r, lambda v, w: (P[v][0] * P[w][1] + P[w][0] * P[v][1]) % n != 0)
        pp = _prime_power(n)
        names = []
        for c in comps:
            sub = YDDatum(n, tuple(P[i] for i in c))
            Ac = cartan_type(sub)
            if Ac is not None:
                names.append(dynkin_name(Ac))
            elif pp and pp[0] == 3 and len(c) == 2 and (_hat_b2(n, P, c[0], c[1]) or _hat_b2(n, P, c[1], c[0])):
                names.append("hatB2")
            elif pp and pp[0] == 3 and _hat_b3(n, P, c):
                names.append("hatB3")
            else:
                names.append(None)
        if all(names) and any(nm.startswith("hat") for nm in names):
            finite = True
            standard = "x".join(nm for nm in names if nm.startswith("hat"))
            dyn = "x".join(sorted(names, key=lambda s: (-len(s), s)))
        else:
            finite = False
            dyn = "none"
    ups, hopf = None, None
    m = isqrt(n)
    if m * m == n and m > 1:
        u = upsilon(datum, m)
        ups, hopf = u["values"], u["hopf_compatible"]
    vs = v_sets(datum, n)
    report = ClassificationReport(
        datum=datum, exponents=datum.exponents(), cartan=A, admissible=adm, dynkin=dyn,
        finite=finite, standard=standard, upsilon=ups, hopf_compatible=hopf,
        v_sets=vs, v_violation=any(len(v) > 2 for v in vs.values()),
    )
    if with_obstruction and A is not None and finite and r <= 2:
        report.obstruction = lifting_obstruction(datum, n)
    return report


# -- arithmetic predicates ----------------------------------------------------------

def upsilon(datum: YDDatum, m: int) -> dict:
    """{s in 1..m-1 : b_i = s d_i mod m for all i}, plus the s = 0 (Hopf) flag."""
    vals = [s for s in range(1, m) if all((b - s * d) % m == 0 for b, d in datum.pairs)]
    return {"values": vals, "hopf_compatible": all(b % m == 0 for b, _ in datum.pairs)}


def v_sets(datum: YDDatum, m: int) -> dict:
    """V(p) = {i : b_i d_i not 0 mod p^a} for each prime power p^a || m (1-based indices)."""
    out = {}
    for p, a in sorted(_factor(m).items()):
        pa = p ** a
        out[p] = [i + 1 for i, (b, d) in enumerate(datum.pairs) if (b * d) % pa]
    return out


def rank2_solvability(p: int, k: int, dynkin_type: str) -> bool:
    """Existence of a rank-2 datum of the given type over Z_{p^k}, by the congruence analysis."""
    if p < 3 or p % 2 == 0 or _prime_power(p) != (p, 1):
        raise ValueError("p must be an odd prime")
    if k < 1:
        raise ValueError("k must be positive")
    t = dynkin_type.replace("×", "x")
    if t == "A1xA1":
        return True
    if t == "A2":
        return p % 3 == 1 or p == 3
    if t == "B2":
        return p % 4 == 1
    if t == "G2":
        return p % 3 == 1
    raise ValueError(f"unsupported type {dynkin_type!r}")


def b2hat_check(k: int) -> bool:
    """(+-3^{k-1} +- 1)^2 = 1 -+ 3^{k-1} mod 3^k, and 1 +- 3^{k-1} are squares mod 3^k."""
    if k < 2:
        raise ValueError("k must be at least 2 (k = 1 collapses to a Cartan braiding)")
    M = 3 ** k
    h = 3 ** (k - 1)
    ident = ((h + 1) ** 2 - (1 - h)) % M == 0 and ((-h + 1) ** 2 - (1 + h)) % M == 0
    squares = {(x * x) % M for x in range(M)}
    return ident and (1 + h) % M in squares and (1 - h) % M in squares


# -- Weyl group and the lifting obstruction --------------------------------------------

def _reflect(A, i: int, v: tuple) -> tuple:
    # s_i(beta) = beta - <beta, alpha_i^vee> alpha_i with <alpha_j, alpha_i^vee> = a_ij
    c = sum(A[i][j] * v[j] for j in range(len(v)))
    return tuple(x - (c if j == i else 0) for j, x in enumerate(v))


def _act(A, word, v):
    for i in reversed(word):
        v = _reflect(A, i, v)
    return v


def weyl_elements(A, length: int) -> list:
    """Weyl group elements of exactly the given length, each with its reduced words and gamma_w = rho - w(rho).

    gamma_w is computed as sum_j s_{i_1} ... s_{i_{j-1}}(alpha_{i_j}).
    """
    r = len(A)
    basis = [tuple(1 if k == j else 0 for k in range(r)) for j in range(r)]

    def key(word):
        return tuple(_act(A, word, b) for b in basis)

    seen_len = {key(()): 0}
    frontier = [()]
    words_at = {0: {key(()): [()]}}
    for L in range(1, length + 1):
        nxt, bucket = [], {}
        for w in frontier:
            for i in range(r):
                w2 = w + (i,)
                kk = key(w2)
                if kk in seen_len and seen_len[kk] < L:
                    continue
                seen_len[kk] = L
                bucket.setdefault(kk, []).append(w2)
                nxt.append(w2)
        words_at[L] = bucket
        frontier = nxt
    out = []
    for kk, words in words_at.get(length, {}).items():
        words = sorted(set(words))
        w = words[0]
        gamma = [0] * r
        for j, i in enumerate(w):
            root = _act(A, w[:j], basis[i])
            gamma = [g + x for g, x in zip(gamma, root)]
        out.append({"word": [i + 1 for i in w], "reduced_words": [[i + 1 for i in x] for x in words], "gamma": gamma})
    out.sort(key=lambda e: e["word"])
    return out


def lifting_obstruction(datum_or_type, m: int, d=None) -> dict:
    """lambda_w = q^{-sum n_i d_i} (q of order m) for every Weyl element of length 3.

    Accepts a YDDatum of rank <= 2 (its Cartan matrix is used) or a type name
    from CARTAN_MATRICES together with the d exponents.
    """
    if isinstance(datum_or_type, YDDatum):
        A = cartan_type(datum_or_type)
        if A is None or not is_finite_cartan(A):
            raise ValueError("datum is not of finite Cartan type")
        ds = [dd for _, dd in datum_or_type.pairs]
        tname = dynkin_name(A)
    else:
        tname = str(datum_or_type).replace("×", "x")
        if tname not in CARTAN_MATRICES:
            raise ValueError(f"unsupported type {datum_or_type!r}")
        A = CARTAN_MATRICES[tname]
        ds = list(d or [])
    if len(A) > 2:
        raise ValueError("obstruction check is implemented for rank <= 2")
    if len(ds) != len(A):
        raise ValueError("need one d exponent per vertex")
    rows = []
    for w in weyl_elements(A, 3):
        e = (-sum(n * dd for n, dd in zip(w["gamma"], ds))) % m
        rows.append({**w, "lambda_exponent": e, "lambda": f"q^{e}", "nontrivial": e != 0})
    return {"type": tname, "m": m, "d": list(ds), "elements": rows, "all_nontrivial": all(r["nontrivial"] for r in rows)}


def grouplike_congruence_check(datum: YDDatum, m: int, s: int, linking_pairs=(), roots=()) -> bool:
    """Check b_i + b_j = 0 mod m for linking pairs with d_i + d_j = 0 mod m^2, and
    N (sum n_i b_i) = 0 mod m for root data (n, N) with N (sum n_i d_i) = 0 mod m^2.

    Pairs/roots whose hypothesis fails are skipped.  Indices are 1-based.
    """
    P = datum.pairs
    M = m * m
    for i, j in linking_pairs:
        bi, di = P[i - 1]
        bj, dj = P[j - 1]
        if (di + dj) % M:
            continue
        if (bi + bj) % m:
            return False
    for coeffs, N in roots:
        if (N * sum(c * P[k][1] for k, c in enumerate(coeffs))) % M:
            continue
        if (N * sum(c * P[k][0] for k, c in enumerate(coeffs))) % m:
            return False
    return True


def semisimple_classes(p: int, n: int) -> dict:
    """Orbits of {1, ..., p^n - 1} under s -> u^2 s, grouped by p-adic valuation."""
    if p < 3 or p % 2 == 0 or _prime_power(p) != (p, 1) or n < 1:
        raise ValueError("need an odd prime p and n >= 1")
    M = p ** n
    squares = sorted({(u * u) % M for u in range(1, M) if u % p})
    seen, orbits = set(), []
    for s in range(1, M):
        if s in seen:
            continue
        orb = sorted({(q * s) % M for q in squares})
        seen.update(orb)
        orbits.append(orb)
    by_val = {}
    for orb in orbits:
        s = orb[0]
        v = 0
        while s % p == 0:
            s //= p
            v += 1
        entry = by_val.setdefault(v, {})
        kind = "residue" if (p ** v) in orb else "non_residue"
        entry[kind] = orb
    stated = 2 * (n - 1)
    return {
        "p": p, "n": n,
        "orbits": orbits,
        "by_valuation": {v: by_val[v] for v in sorted(by_val)},
        "computed_count": len(orbits),
        "stated_count": stated,
        "agrees_with_stated": len(orbits) == stated,
        "note": "valuation-0 stratum included in the computed count" if len(orbits) != stated else "",
    }


# -- enumeration ------------------------------------------------------------------------

def _vertices(n: int) -> list:
    return [(b, d) for b in range(n) for d in range(n) if (b * d) % n]


def _pair_finite(n: int, u, v, p3: bool) -> bool:
    """Rank-2 finiteness by exponent arithmetic alone (same verdict as classify)."""
    eu, ev = (u[0] * u[1]) % n, (v[0] * v[1]) % n
    t = (u[0] * v[1] + v[0] * u[1]) % n
    au, av = _admissible(n, eu, t), _admissible(n, ev, t)
    if au and av:
        return min(au, key=abs) * min(av, key=abs) <= 3
    if not p3:
        return False
    P = (u, v)
    return _hat_b2(n, P, 0, 1) or _hat_b2(n, P, 1, 0)


def _check_filter(filt: str, rep: ClassificationReport) -> bool:
    if filt == "all":
        return True
    if not rep.finite:
        return False
    if filt == "finite":
        return True
    if filt == "finite-cartan":
        return rep.standard is None
    if filt == "standard":
        return rep.standard is not None
    if rep.upsilon is None:
        raise ValueError("upsilon filters need a square modulus")
    if filt == "upsilon":
        return bool(rep.upsilon)
    if filt == "upsilon-coprime":
        m = isqrt(rep.datum.n)
        return any(gcd(s, m) == 1 for s in rep.upsilon)
    raise ValueError(f"unknown filter {filt!r}")


def _orbit_reps(n: int) -> list:
    """First-vertex representatives under (b, d) -> (u b, w d), u, w units: (g, h) with g, h | n."""
    divs = [g for g in range(1, n + 1) if n % g == 0]
    return [(g % n, h % n) for g in divs for h in divs if (g * h) % n]


def _adjacency(n: int, verts: list, lo: int, hi: int) -> dict:
    pp = _prime_power(n)
    p3 = bool(pp) and pp[0] == 3
    adj = {}
    for a in range(lo, hi):
        u = verts[a]
        adj[a] = [c for c in range(a, len(verts)) if _pair_finite(n, u, verts[c], p3)]
    return adj


def _cliques(adj: dict, r: int) -> list:
    out = []
    nbr = {a: set(v) for a, v in adj.items()}

    def grow(chosen, cand):
        if len(chosen) == r:
            out.append(tuple(chosen))
            return
        for c in sorted(cand):
            if c < chosen[-1]:
                continue
            grow(chosen + [c], cand & nbr[c])

    for a in sorted(adj):
        if a in nbr[a] or r == 1:
            grow([a], nbr[a])
        else:
            grow([a], nbr[a] - {a})
    return out


def enumerate_data(n: int, r: int, filt: str | list = "finite", symmetry: bool = True, normalize: bool = False,
                   ceiling: int | None = None, workers: int = 1) -> list:
    """Exhaustive census of rank-r data over Z_n, classified and filtered.

    symmetry=True lists each datum once up to permutation of the vertices
    (pairs in non-decreasing order).  normalize=True additionally fixes the
    first vertex to a representative under (b, d) -> (u b, w d) for units
    u, w (rank 2 only; ordered pairs).  Results are sorted lexicographically.
    """
    filters = [filt] if isinstance(filt, str) else list(filt)
    for f in filters:
        if f not in FILTERS:
            raise ValueError(f"unknown filter {f!r}")
    if r < 1 or r > 4:
        raise ValueError("rank must be between 1 and 4")
    lim = CEILINGS[r] if ceiling is None else ceiling
    if lim > HARD_CEILINGS[r]:
        raise ValueError(f"ceiling {lim} exceeds the hard limit {HARD_CEILINGS[r]} for rank {r}")
    if n > lim:
        raise ValueError(f"modulus {n} exceeds the rank-{r} ceiling {lim}")
    if n < 2:
        raise ValueError("modulus must be at least 2")
    verts = _vertices(n)
    pruned = all(f != "all" for f in filters)

    tuples = []
    if normalize:
        if r != 2:
            raise ValueError("normalization is implemented for rank 2")
        tuples = [(u, v) for u in _orbit_reps(n) for v in verts]
    elif r == 1:
        tuples = [(v,) for v in verts]
    elif not pruned:
        it = itertools.combinations_with_replacement(verts, r) if symmetry else itertools.product(verts, repeat=r)
        tuples = list(it)
    else:
        adj = _parallel_adjacency(n, verts, workers)
        for cl in _cliques(adj, r):
            t = tuple(verts[i] for i in cl)
            if symmetry:
                tuples.append(t)
            else:
                tuples.extend(sorted(set(itertools.permutations(t))))
    out = []
    for t in tuples:
        D = YDDatum(n, t)
        rep = classify(D)
        if all(_check_filter(f, rep) for f in filters):
            out.append((D, rep))
    out.sort(key=lambda dr: dr[0].pairs)
    return out


def _adj_job(args):
    n, verts, lo, hi = args
    return _adjacency(n, verts, lo, hi)


def _parallel_adjacency(n: int, verts: list, workers: int) -> dict:
    L = len(verts)
    if workers <= 1 or L < 64:
        return _adjacency(n, verts, 0, L)
    step = -(-L // (4 * workers))
    jobs = [(n, verts, lo, min(L, lo + step)) for lo in range(0, L, step)]
    adj = {}
    with ProcessPoolExecutor(max_workers=workers) as ex:
        for part in ex.map(_adj_job, jobs):
            adj.update(part)
    return adj


def rank2_exists(n: int, dynkin_type: str, normalize: bool = True) -> bool:
    """Brute-force existence of a rank-2 datum of the given Cartan type over Z_n."""
    t = dynkin_type.replace("×", "x")
    for D, rep in enumerate_data(n, 2, "finite-cartan", symmetry=not normalize, normalize=normalize,
                                 ceiling=max(n, CEILINGS[2])):
        if rep.dynkin == t:
            return True
    return False
