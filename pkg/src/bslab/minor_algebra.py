"""Flagged minors of the generic upper-triangular matrix.

Polynomials live in the variables ``x_i_j`` (``i <= j``) ordered row-major,
so the lexicographic order on exponent tuples ranks
``x_1_1 > x_1_2 > ... > x_1_n > x_2_2 > ... > x_n_n``.  Under this order the
leading monomial of every flagged minor is its main diagonal.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidMinorError
from .polynomial import Poly, determinant
from .tableaux import RowFilling, Tableau, row_standardize


@lru_cache(maxsize=None)
def upper_variables(n: int) -> tuple[str, ...]:
    return tuple(f"x_{i}_{j}" for i in range(1, n + 1) for j in range(i, n + 1))


@lru_cache(maxsize=None)
def _var_index(n: int) -> dict[tuple[int, int], int]:
    return {(i, j): k for k, (i, j) in enumerate((i, j) for i in range(1, n + 1) for j in range(i, n + 1))}


def precedes(R: Sequence[int], C: Sequence[int]) -> bool:
    """``R <= C`` entrywise after sorting: the flagged condition."""
    return all(r <= c for r, c in zip(sorted(R), sorted(C)))


@lru_cache(maxsize=None)
def _minor_terms(R: tuple[int, ...], C: tuple[int, ...], n: int) -> tuple:
    index = _var_index(n)
    nvars = len(index)
    terms: dict[tuple[int, ...], int] = {}

    # expand along rows in order; columns still available are tracked as a tuple
    def rec(k: int, cols: tuple[int, ...], exp: list[int], sign: int):
        if k == len(R):
            key = tuple(exp)
            terms[key] = terms.get(key, 0) + sign
            return
        r = R[k]
        for pos, c in enumerate(cols):
            if r > c:
                continue
            v = index[(r, c)]
            exp[v] += 1
            rec(k + 1, cols[:pos] + cols[pos + 1:], exp, -sign if pos % 2 else sign)
            exp[v] -= 1

    rec(0, C, [0] * nvars, 1)
    return tuple((e, c) for e, c in terms.items() if c)


def minor_poly(R: Sequence[int], C: Sequence[int], n: int) -> Poly:
    """``[R:C]``: the determinant of rows ``R`` and columns ``C`` of the generic upper-triangular matrix.

    Rows and columns are taken in increasing order.  Non-flagged minors are
    returned as the zero polynomial.
    """
    R, C = tuple(sorted(R)), tuple(sorted(C))
    if len(R) != len(C):
        raise InvalidMinorError(f"|R|={len(R)} differs from |C|={len(C)}")
    if len(set(R)) != len(R) or len(set(C)) != len(C):
        raise InvalidMinorError("row and column sets must not repeat")
    if any(not 1 <= x <= n for x in R + C):
        raise InvalidMinorError(f"indices must lie in 1..{n}")
    variables = upper_variables(n)
    if not precedes(R, C):
        return Poly.zero(variables)
    return Poly(variables, dict(_minor_terms(R, C, n)))


def rows_poly(rows: Iterable[RowFilling], n: int) -> Poly:
    """Product of the row minors, after sorting each row (with its sign)."""
    out = Poly.constant(upper_variables(n), 1)
    for raw in rows:
        sign, row = row_standardize(raw, n)
        if sign == 0:
            return Poly.zero(upper_variables(n))
        out = out * minor_poly(row.entries, row.columns, n)
        if sign < 0:
            out = -out
    return out


def tableau_poly(t: Tableau) -> Poly:
    return rows_poly(t.rows, t.n)


@dataclass(frozen=True)
class AlphaMatrix:
    """``alpha[i, j]``: how many times ``i`` occurs in column ``j``."""

    n: int
    counts: tuple[int, ...]  # row-major over i <= j, aligned with upper_variables(n)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if i > j:
            return 0
        return self.counts[_var_index(self.n)[(i, j)]]

    def __add__(self, other: "AlphaMatrix") -> "AlphaMatrix":
        if other.n != self.n:
            raise ValueError("alpha matrices of different sizes")
        return AlphaMatrix(self.n, tuple(a + b for a, b in zip(self.counts, other.counts)))

    def column_sum(self, j: int) -> int:
        return sum(self[i, j] for i in range(1, j + 1))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {ij: self.counts[k] for ij, k in _var_index(self.n).items() if self.counts[k]}

    @classmethod
    def zero(cls, n: int) -> "AlphaMatrix":
        return cls(n, (0,) * len(upper_variables(n)))


def leading_exponent(t: Tableau) -> AlphaMatrix:
    index = _var_index(t.n)
    counts = [0] * len(index)
    for row in t.rows:
        for c, e in zip(row.columns, row.entries):
            if e > c:
                raise InvalidMinorError(f"entry {e} in column {c} is not flagged")
            counts[index[(e, c)]] += 1
    return AlphaMatrix(t.n, tuple(counts))


def evaluate(p: Poly, point) -> int:
    return p.evaluate(point)


def upper_point(matrix: Sequence[Sequence[int]]) -> dict[str, int]:
    """Variable assignment read off the upper triangle of a square matrix."""
    n = len(matrix)
    return {f"x_{i}_{j}": matrix[i - 1][j - 1] for i in range(1, n + 1) for j in range(i, n + 1)}


# -- the three-dimensional configuration coordinates -------------------------

# (row, column) pairs that are structurally zero in each factor
_P1_ZEROS = {(3, 1), (3, 2)}
_P2_ZEROS = {(2, 1), (3, 1)}
_FACTORS = (("a", _P1_ZEROS), ("b", _P2_ZEROS), ("c", _P1_ZEROS))


@lru_cache(maxsize=None)
def parabolic_variables() -> tuple[str, ...]:
    return tuple(
        f"{name}_{i}_{j}"
        for name, zeros in _FACTORS
        for i in range(1, 4)
        for j in range(1, 4)
        if (i, j) not in zeros
    )


def _factor_matrix(name: str, zeros: set) -> list[list[Poly]]:
    variables = parabolic_variables()
    return [
        [
            Poly.zero(variables) if (i, j) in zeros else Poly.var(variables, f"{name}_{i}_{j}")
            for j in range(1, 4)
        ]
        for i in range(1, 4)
    ]


def _matmul(A: list[list[Poly]], B: list[list[Poly]]) -> list[list[Poly]]:
    variables = parabolic_variables()
    size = len(A)
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            acc = Poly.zero(variables)
            for k in range(size):
                acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(row)
    return out


def _submatrix_det(M, rows: Sequence[int], cols: Sequence[int]) -> Poly:
    sub = [[M[r - 1][c - 1] for c in cols] for r in rows]
    return determinant(sub, parabolic_variables())


def plucker_coords_3d() -> dict[str, Poly]:
    """Coordinates ``s_i``, ``r_ij``, ``q_i`` of the embedding into P^1 x P^2 x P^2.

    ``r_13`` is the minor with rows taken in the order (3, 1), i.e. minus the
    increasing-order minor; this is the orientation under which
    ``s1*r23 + s2*r13`` and ``q1*r23 + q2*r13 + q3*r12`` vanish.
    """
    p1, p2, p3 = (_factor_matrix(name, zeros) for name, zeros in _FACTORS)
    p12 = _matmul(p1, p2)
    p123 = _matmul(p12, p3)
    return {
        "s1": _submatrix_det(p1, [1], [1]),
        "s2": _submatrix_det(p1, [2], [1]),
        "r23": _submatrix_det(p12, [2, 3], [1, 2]),
        "r13": _submatrix_det(p12, [3, 1], [1, 2]),
        "r12": _submatrix_det(p12, [1, 2], [1, 2]),
        "q1": _submatrix_det(p123, [1], [1]),
        "q2": _submatrix_det(p123, [2], [1]),
        "q3": _submatrix_det(p123, [3], [1]),
    }


def parse_monomial(text: str, variables: Sequence[str]) -> Poly:
    """``"a21*a33*b11"`` style shorthand over the parabolic variables."""
    powers: dict[str, int] = {}
    for token in text.split("*"):
        token = token.strip()
        name = f"{token[0]}_{token[1]}_{token[2]}" if "_" not in token else token
        powers[name] = powers.get(name, 0) + 1
    return Poly.monomial(variables, powers)
