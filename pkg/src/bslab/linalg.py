"""Exact rank computations over the rationals without fractions.

Rows are sparse ``{column_key: int}`` dicts.  Column keys only need to be
mutually comparable; the largest key of a row is its pivot.  Eliminating
the pivot keeps integer entries by cross-multiplication, and each row is
divided by the gcd of its entries afterwards.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Hashable, Iterable, Mapping, Sequence


def integral_row(row: Mapping[Hashable, Fraction | int]) -> dict:
    """Scale a rational row to a primitive integer row with positive pivot."""
    den = 1
    for c in row.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    out = {k: int(c * den) for k, c in row.items() if c}
    return _primitive(out)


def _primitive(row: dict) -> dict:
    if not row:
        return row
    g = 0
    for c in row.values():
        g = gcd(g, c)
        if g == 1:
            break
    if row[max(row)] < 0:
        g = -g
    if g != 1:
        row = {k: c // g for k, c in row.items()}
    return row


class SparseEchelon:
    """Incrementally built echelon basis keyed by pivot column."""

    def __init__(self):
        self.pivots: dict[Hashable, dict] = {}

    def __len__(self) -> int:
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping) -> dict:
        row = integral_row(row)
        while row:
            lead = max(row)
            pivot = self.pivots.get(lead)
            if pivot is None:
                return row
            a, b = pivot[lead], row[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {k: a * c for k, c in row.items()}
            for k, c in pivot.items():
                v = new.get(k, 0) - b * c
                if v:
                    new[k] = v
                else:
                    new.pop(k, None)
            row = _primitive(new)
        return row

    def add(self, row: Mapping) -> bool:
        """Insert ``row``; returns False when it was already in the span."""
        reduced = self.reduce(row)
        if not reduced:
            return False
        self.pivots[max(reduced)] = reduced
        return True

    def contains(self, row: Mapping) -> bool:
        return not self.reduce(row)


def sparse_rank(rows: Iterable[Mapping]) -> int:
    ech = SparseEchelon()
    for row in rows:
        ech.add(row)
    return ech.rank


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of a dense integer matrix by fraction-free (Bareiss) elimination."""
    M = [[int(x) for x in row] for row in matrix]
    if not M:
        return 0
    nrows, ncols = len(M), len(M[0])
    prev = 1
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        pivot_row = next((r for r in range(rank, nrows) if M[r][col]), None)
        if pivot_row is None:
            continue
        M[rank], M[pivot_row] = M[pivot_row], M[rank]
        p = M[rank][col]
        for r in range(rank + 1, nrows):
            f = M[r][col]
            row_r, row_p = M[r], M[rank]
            for c in range(col, ncols):
                row_r[c] = (p * row_r[c] - f * row_p[c]) // prev
        prev = p
        rank += 1
    return rank
