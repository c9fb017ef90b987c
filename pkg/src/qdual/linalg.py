"""Exact linear algebra over the rationals with deterministic pivoting.

A matrix is a list of rows whose entries are ints or Fractions.  Rows are
rescaled to primitive integer vectors up front, and elimination is
fraction-free in the Bareiss style: every update is the two-by-two cross
product divided exactly by the previous pivot, so intermediate entries stay
integral.  The pivot is always the first row holding a nonzero entry in the
current column, which makes every result deterministic for a fixed row
order.

Kernel vectors are normalized so the first nonzero coordinate equals 1;
this makes "same line" comparisons plain equality checks.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class LinAlgError(ValueError):
    """Ragged input, inconsistent lengths, or an inexact division."""


def _exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise LinAlgError("inexact division %d / %d" % (a, b))
    return q


def integer_row(row) -> list:
    """Scale a rational row to a primitive integer row (empty rows pass)."""
    fr = [Fraction(x) for x in row]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    out = [int(x * den) for x in fr]
    g = 0
    for x in out:
        g = gcd(g, x)
    if g > 1:
        out = [x // g for x in out]
    return out


def echelon(rows, ncols: int):
    """Fraction-free row echelon form.

    Returns (echelon_rows, pivot_columns) where echelon_rows are the
    nonzero integer rows, one per pivot column, in pivot order.
    """
    mat = []
    for r in rows:
        if len(r) != ncols:
            raise LinAlgError("row length %d does not match %d" % (len(r), ncols))
        ir = integer_row(r)
        if any(ir):
            mat.append(ir)
    pivots = []
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((t for t in range(rank, len(mat)) if mat[t][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        lead = mat[rank][col]
        top = mat[rank]
        for t in range(rank + 1, len(mat)):
            row = mat[t]
            head = row[col]
            for j in range(col + 1, ncols):
                row[j] = _exact_div(lead * row[j] - head * top[j], prev)
            row[col] = 0
        prev = lead
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    return mat[:rank], pivots


def rank(rows, ncols: int) -> int:
    return len(echelon(rows, ncols)[1])


def monic(vec) -> tuple:
    """Scale a vector so its first nonzero coordinate is 1."""
    fr = [Fraction(x) for x in vec]
    lead = next((x for x in fr if x), None)
    if lead is None:
        raise LinAlgError("cannot normalize the zero vector")
    return tuple(x / lead for x in fr)


def kernel_basis(rows, ncols: int) -> list:
    """Right kernel {x : A x = 0} as monic Fraction tuples.

    One vector per free column, in column order; the vector for free
    column f has zero coordinates at every other free column.
    """
    mat, pivots = echelon(rows, ncols)
    pivot_set = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for t in reversed(range(len(pivots))):
            p = pivots[t]
            row = mat[t]
            s = Fraction(0)
            for j in range(p + 1, ncols):
                if x[j]:
                    s += x[j] * row[j]
            x[p] = -s / row[p]
        out.append(monic(x))
    return out


def proportional(u, v) -> bool:
    """True iff both vectors are nonzero multiples of one another."""
    if len(u) != len(v):
        raise LinAlgError("mismatched vector lengths")
    fu = [Fraction(x) for x in u]
    fv = [Fraction(x) for x in v]
    k = next((t for t, x in enumerate(fu) if x), None)
    if k is None or not fv[k]:
        return False
    return all(fu[t] * fv[k] == fv[t] * fu[k] for t in range(len(fu)))


def span_equal(rows_a, rows_b, ncols: int) -> bool:
    ra = rank(rows_a, ncols)
    rb = rank(rows_b, ncols)
    return ra == rb == rank(list(rows_a) + list(rows_b), ncols)


def in_span(rows, vec, ncols: int) -> bool:
    return rank(rows, ncols) == rank(list(rows) + [list(vec)], ncols)


def dedupe_rows(rows) -> list:
    """Drop zero rows and scalar repeats, keeping first-seen order.

    Rows are compared after primitive-integer scaling with a positive
    leading entry, so parallel rows collapse to one representative.
    """
    seen = set()
    out = []
    for r in rows:
        ir = integer_row(r)
        lead = next((x for x in ir if x), None)
        if lead is None:
            continue
        if lead < 0:
            ir = [-x for x in ir]
        key = tuple(ir)
        if key not in seen:
            seen.add(key)
            out.append(r)
    return out


class SpanReducer:
    """Row space over sparse vectors keyed by sortable coordinates.

    Vectors are dicts {key: Fraction}.  Rows are kept fully reduced (no
    row contains another row's pivot) with monic pivots, ordered by pivot
    key, so membership and dimension are canonical and deterministic.
    """

    __slots__ = ("rows",)

    def __init__(self):
        self.rows: list = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _residual(self, vec: dict) -> dict:
        x = {k: Fraction(v) for k, v in vec.items() if v}
        for pivot, row in self.rows:
            c = x.get(pivot)
            if not c:
                continue
            for k, rv in row.items():
                nv = x.get(k, 0) - c * rv
                if nv:
                    x[k] = nv
                else:
                    x.pop(k, None)
        return x

    def contains(self, vec: dict) -> bool:
        return not self._residual(vec)

    def add(self, vec: dict) -> bool:
        x = self._residual(vec)
        if not x:
            return False
        pivot = min(x)
        lead = x[pivot]
        new = {k: v / lead for k, v in x.items()}
        for t, (p, row) in enumerate(self.rows):
            c = row.get(pivot)
            if not c:
                continue
            merged = dict(row)
            for k, nv in new.items():
                val = merged.get(k, 0) - c * nv
                if val:
                    merged[k] = val
                else:
                    merged.pop(k, None)
            self.rows[t] = (p, merged)
        pos = next(
            (t for t, (p, _) in enumerate(self.rows) if p > pivot),
            len(self.rows),
        )
        self.rows.insert(pos, (pivot, new))
        return True
