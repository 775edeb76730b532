"""
Exact sparse linear algebra over Q (and, experimentally, over Z).

Rows and vectors are dicts {column: value}; absent keys are zero.
"""

from fractions import Fraction
from typing import Iterable, Mapping

SparseRow = dict[int, Fraction]


def _clean(row: Mapping) -> SparseRow:
    return {c: Fraction(v) for c, v in row.items() if v}


def rref(rows: Iterable[Mapping], ncols: int) -> tuple[list[SparseRow], list[int]]:
    """Reduced row echelon form of a sparse matrix.

    Returns (rows, pivots) with rows[k] having a 1 at column pivots[k] and
    pivots strictly increasing.  Pivots are chosen in column order, so the
    output is the unique canonical RREF.
    """
    by_pivot: dict[int, SparseRow] = {}
    for raw in rows:
        row = _clean(raw)
        if any(c < 0 or c >= ncols for c in row):
            raise ValueError("column index out of range")
        # reduce against existing pivots, lowest first
        while row:
            lead = min(row)
            piv = by_pivot.get(lead)
            if piv is None:
                break
            factor = row[lead]
            for c, v in piv.items():
                nv = row.get(c, 0) - factor * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        if not row:
            continue
        lead = min(row)
        inv = 1 / row[lead]
        row = {c: v * inv for c, v in row.items()}
        # keep previously stored rows reduced in the new pivot column
        for other in by_pivot.values():
            factor = other.get(lead)
            if factor:
                for c, v in row.items():
                    nv = other.get(c, 0) - factor * v
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
        by_pivot[lead] = row
    # a later pivot may have been inserted below an earlier row's support,
    # so finish back-substitution in descending pivot order
    pivots = sorted(by_pivot)
    for p in reversed(pivots):
        prow = by_pivot[p]
        for q in pivots:
            if q >= p:
                break
            other = by_pivot[q]
            factor = other.get(p)
            if factor:
                for c, v in prow.items():
                    nv = other.get(c, 0) - factor * v
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
    return [by_pivot[p] for p in pivots], pivots


def nullspace(rows: Iterable[Mapping], ncols: int) -> list[SparseRow]:
    """Canonical basis of {x : A x = 0}: one vector per free column, in column order."""
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = {free: Fraction(1)}
        for p, row in zip(pivots, reduced):
            c = row.get(free)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def rank(rows: Iterable[Mapping], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def apply(rows: Iterable[Mapping], v: Mapping) -> list[Fraction]:
    return [sum((c * v.get(j, 0) for j, c in row.items()), Fraction(0)) for row in rows]


def same_row_space(a: Iterable[Mapping], b: Iterable[Mapping], ncols: int) -> bool:
    ra, _ = rref(a, ncols)
    rb, _ = rref(b, ncols)
    return ra == rb


def solve_in_span(basis: list[Mapping], v: Mapping, ncols: int) -> list[Fraction] | None:
    """Coefficients x with sum x_k basis[k] = v, or None if v is outside the span.

    The basis must be linearly independent.
    """
    # solve on the transposed system: unknowns are the x_k
    k = len(basis)
    rows = []
    for j in range(ncols):
        row = {i: b[j] for i, b in enumerate(basis) if b.get(j)}
        if v.get(j):
            row[k] = -Fraction(v[j])
        if row:
            rows.append(row)
    null = nullspace(rows, k + 1)
    for z in null:
        if z.get(k):
            scale = 1 / z[k]
            return [z.get(i, Fraction(0)) * scale for i in range(k)]
    return None


def integer_kernel(rows: Iterable[Mapping], ncols: int) -> list[dict[int, int]]:
    """A Z-basis of {x in Z^ncols : A x = 0} for an integer matrix A.

    Constraints are imposed one at a time.  For each, the current basis
    vectors are combined by a unimodular Euclidean reduction until exactly
    one of them pairs nontrivially with the constraint; that one is dropped.
    """
    basis: list[dict[int, int]] = [{j: 1} for j in range(ncols)]
    for raw in rows:
        row = {c: int(v) for c, v in raw.items() if v}
        if any(Fraction(v) != int(v) for v in raw.values()):
            raise ValueError("integer_kernel needs an integer matrix")

        def pair(b):
            return sum(v * row.get(c, 0) for c, v in b.items())

        keep, active = [], []
        for b in basis:
            t = pair(b)
            (active if t else keep).append((t, b))
        while len(active) > 1:
            active.sort(key=lambda tb: (abs(tb[0]), min(tb[1])))
            t0, b0 = active[0]
            nxt = [(t0, b0)]
            for t, b in active[1:]:
                q = t // t0
                nb = dict(b)
                for c, v in b0.items():
                    nv = nb.get(c, 0) - q * v
                    if nv:
                        nb[c] = nv
                    else:
                        nb.pop(c, None)
                r = t - q * t0
                if r:
                    nxt.append((r, nb))
                else:
                    keep.append((0, nb))
            active = nxt
        basis = [b for _, b in keep]
    return sorted(basis, key=lambda b: sorted(b.items()))
