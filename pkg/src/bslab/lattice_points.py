"""Leading exponents as integral points and Gelfand-Tsetlin patterns."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import EmbeddingError, InvalidTableauError, NotSkewError
from .minor_algebra import AlphaMatrix, leading_exponent
from .section_ring import initial_exponent_set
from .tableaux import Tableau, is_contra
from .word import Shape


@dataclass(frozen=True, eq=False)
class LatticePoint:
    """Rows ``p^(1), ..., p^(n)``, each listed as ``(p_n, ..., p_1)``.

    ``p^(k)_j`` counts the entries ``>= k`` in column ``j``.  Equality and
    hashing use only the ``n(n-1)/2`` coordinates of ``p^(2), ..., p^(n)``
    that are not structurally zero; ``p^(1)`` is fixed by the shape.
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(x for k in range(2, self.n + 1) for x in self.rows[k - 1][: self.n - k + 1])

    def __eq__(self, other):
        if not isinstance(other, LatticePoint):
            return NotImplemented
        return self.n == other.n and self.key == other.key

    def __hash__(self):
        return hash((self.n, self.key))

    def pattern(self) -> "GTPattern":
        return GTPattern(tuple(self.rows[k - 1][: self.n - k + 1] for k in range(1, self.n + 1)))

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "LatticePoint":
        return cls(int(data["n"]), tuple(tuple(r) for r in data["rows"]))


@dataclass(frozen=True)
class GTPattern:
    rows: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    def interlaces(self) -> bool:
        for upper, lower in zip(self.rows, self.rows[1:]):
            for i, x in enumerate(lower):
                if not upper[i] >= x >= upper[i + 1]:
                    return False
        return True

    def render(self) -> str:
        width = max([1] + [len(str(x)) for row in self.rows for x in row])
        lines = []
        for k, row in enumerate(self.rows):
            cells = [str(x).rjust(width) for x in row]
            lines.append(" " * (k * (width + 1)) + (" " * (width + 2)).join(cells))
        return "\n".join(lines)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> "GTPattern":
        return cls(tuple(tuple(r) for r in data))


def point_from_alpha(alpha: Mapping[tuple[int, int], int], n: int) -> LatticePoint:
    """``p^(n) = (alpha_nn, 0, ...)``, ``p^(r-1) = p^(r) + (alpha_{r-1,n}, ..., alpha_{r-1,r-1}, 0, ...)``."""
    rows: list[tuple[int, ...]] = [()] * n
    current = [0] * n
    for r in range(n, 0, -1):
        # position 0 holds column n, position n-j holds column j
        step = [alpha.get((r, n - pos), 0) if n - pos >= r else 0 for pos in range(n)]
        current = [a + b for a, b in zip(current, step)]
        rows[r - 1] = tuple(current)
    return LatticePoint(n, tuple(rows))


def point_of_tableau(t: Tableau, size: int | None = None) -> LatticePoint:
    size = t.n if size is None else size
    alpha = leading_exponent(t).as_dict()
    if any(j > size for _, j in alpha):
        raise EmbeddingError(f"tableau uses columns beyond size {size}")
    return point_from_alpha(alpha, size)


def embed(point: LatticePoint, n: int) -> LatticePoint:
    """Pad a smaller point into size ``n`` with structurally zero leading coordinates."""
    if point.n > n:
        raise EmbeddingError(f"cannot embed a size-{point.n} point into size {n}")
    pad = n - point.n
    rows = [(0,) * pad + tuple(r) for r in point.rows]
    rows += [(0,) * n] * pad
    return LatticePoint(n, tuple(rows))


def sum_points(parts: Sequence[LatticePoint], n: int) -> LatticePoint:
    total = [[0] * n for _ in range(n)]
    for part in parts:
        for k, row in enumerate(embed(part, n).rows):
            for i, x in enumerate(row):
                total[k][i] += x
    return LatticePoint(n, tuple(tuple(r) for r in total))


def contra_to_semistandard(t: Tableau, size: int | None = None) -> list[list[int]]:
    """Transpose and reverse: column ``j`` (from ``n`` down) becomes a row of entries ``n+1-e``."""
    n = t.n if size is None else size
    rows = []
    for j in range(n, 0, -1):
        rows.append(sorted(n + 1 - e for e in t.column(j)))
    while rows and not rows[-1]:
        rows.pop()
    return rows


def is_semistandard(rows: Sequence[Sequence[int]]) -> bool:
    lengths = [len(r) for r in rows]
    if any(a < b for a, b in zip(lengths, lengths[1:])):
        return False
    if any(a > b for r in rows for a, b in zip(r, r[1:])):
        return False
    for upper, lower in zip(rows, rows[1:]):
        if any(lower[i] <= upper[i] for i in range(len(lower))):
            return False
    return True


def gt_pattern_of_semistandard(rows: Sequence[Sequence[int]], n: int) -> GTPattern:
    """Row ``k`` of the pattern is the shape of the entries ``<= n+1-k``, padded to length ``n+1-k``."""
    out = []
    for k in range(1, n + 1):
        bound = n + 1 - k
        shape = [sum(1 for x in r if x <= bound) for r in rows]
        shape = (shape + [0] * bound)[:bound]
        out.append(tuple(shape))
    return GTPattern(tuple(out))


def gt_pattern_of_contra(t: Tableau, size: int | None = None) -> GTPattern:
    try:
        contra = is_contra(t)
    except NotSkewError as exc:
        raise InvalidTableauError(str(exc)) from exc
    if not contra:
        raise InvalidTableauError("not a contra-tableau")
    n = t.n if size is None else size
    ssyt = contra_to_semistandard(t, n)
    if not is_semistandard(ssyt):
        raise InvalidTableauError("transposed reversal is not semistandard")
    return gt_pattern_of_semistandard(ssyt, n)


def initial_exponents(shape: Shape, d: int) -> set[AlphaMatrix]:
    return initial_exponent_set(shape.scaled(d))


def degree_one_sums(shape: Shape, d: int) -> set[AlphaMatrix]:
    """All sums of ``d`` leading exponents of degree one."""
    base = initial_exponents(shape, 1)
    acc = {AlphaMatrix.zero(shape.n)}
    for _ in range(d):
        acc = {a + b for a in acc for b in base}
    return acc


def generated_in_degree_one(shape: Shape, dmax: int) -> dict[int, bool]:
    return {d: degree_one_sums(shape, d) == initial_exponents(shape, d) for d in range(dmax + 1)}
