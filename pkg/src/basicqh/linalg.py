"""Sparse exact linear algebra over cyclotomic fields.

Vectors are dicts index -> CyclotomicNumber with zero entries omitted.
"""
from __future__ import annotations

from .cyclotomic import CyclotomicNumber


def axpy(acc: dict, v: dict, c=None) -> dict:
    """acc += c * v in place (c=None means 1)."""
    for k, x in v.items():
        if c is not None:
            x = x * c
        prev = acc.get(k)
        if prev is None:
            acc[k] = x
        else:
            s = prev + x
            if s:
                acc[k] = s
            else:
                del acc[k]
    return acc


def scale(v: dict, c) -> dict:
    return {k: x * c for k, x in v.items()}


def clean(v: dict) -> dict:
    return {k: x for k, x in v.items() if x}


class Subspace:
    """Reduced row echelon basis of a growing subspace.

    Rows are kept with a unit pivot at their lowest nonzero index and zeros at
    every other pivot, so coordinates of a member vector are read off at the
    pivot positions.
    """

    def __init__(self):
        self.rows: dict[int, dict] = {}  # pivot -> row

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def basis(self) -> list[dict]:
        return [self.rows[p] for p in self.pivots]

    def reduce(self, v: dict) -> dict:
        r = dict(v)
        hit = [p for p in r if p in self.rows]
        while hit:
            for p in hit:
                c = r.get(p)
                if c is not None:
                    axpy(r, self.rows[p], -c)
            hit = [p for p in r if p in self.rows]
        return r

    def add(self, v: dict) -> bool:
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        inv = r[p].inverse()
        r = {k: x * inv for k, x in r.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c is not None:
                axpy(row, r, -c)
        self.rows[p] = r
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def coordinates(self, v: dict) -> dict[int, CyclotomicNumber] | None:
        """Coordinates w.r.t. the pivot rows, or None when v is not a member."""
        coords = {p: v[p] for p in v if p in self.rows}
        recon: dict = {}
        for p, c in coords.items():
            axpy(recon, self.rows[p], c)
        return coords if recon == clean(v) else None


def rank(vectors) -> int:
    S = Subspace()
    for v in vectors:
        S.add(v)
    return len(S)


def invert_sparse(rows: list[dict], n: int) -> list[dict] | None:
    """Inverse of the n x n matrix whose i-th row is rows[i] (column -> entry).

    Returns rows of the inverse, or None when singular.  Gauss-Jordan on
    augmented sparse rows, pivoting on the lowest available column.
    """
    from .cyclotomic import one

    field = None
    for r in rows:
        for x in r.values():
            field = x.order
            break
        if field:
            break
    if field is None:
        return None if n else []
    u = one(field)
    aug = [(dict(r), {i: u}) for i, r in enumerate(rows)]
    pivot_row: dict[int, int] = {}
    for col in range(n):
        src = None
        for i, (r, _) in enumerate(aug):
            if i not in pivot_row.values() and col in r:
                src = i
                break
        if src is None:
            return None
        pivot_row[col] = src
        r, t = aug[src]
        inv = r[col].inverse()
        r = {k: x * inv for k, x in r.items()}
        t = {k: x * inv for k, x in t.items()}
        aug[src] = (r, t)
        for i, (r2, t2) in enumerate(aug):
            if i != src and col in r2:
                c = -r2[col]
                axpy(r2, r, c)
                axpy(t2, t, c)
    return [aug[pivot_row[col]][1] for col in range(n)]
