"""Row fillings, straight tableaux and contra-tableaux.

A tableau of shape ``(m, i)`` is a stack of rows, each row ``[R:C]`` filling
the column interval ``C`` with the increasing entries ``R``.  Rows are kept
top-to-bottom exactly as they are drawn.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import (
    BlockMismatchError,
    InvalidEntryError,
    InvalidSectionError,
    InvalidTableauError,
    NotSkewError,
)
from .word import Shape, decompose_multiplicity, is_interval


@dataclass(frozen=True)
class RowFilling:
    columns: tuple[int, ...]
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(int(c) for c in self.columns))
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if len(self.columns) != len(self.entries):
            raise InvalidTableauError(
                f"{len(self.entries)} entries for {len(self.columns)} columns {self.columns}"
            )
        if list(self.columns) != sorted(set(self.columns)) or not is_interval(self.columns):
            raise InvalidTableauError(f"columns {self.columns} do not form an increasing interval")

    def __len__(self) -> int:
        return len(self.columns)

    def entry(self, column: int) -> int | None:
        if not self.columns or not self.columns[0] <= column <= self.columns[-1]:
            return None
        return self.entries[column - self.columns[0]]

    @property
    def is_increasing(self) -> bool:
        return all(a < b for a, b in zip(self.entries, self.entries[1:]))

    @property
    def is_flagged(self) -> bool:
        return all(e <= c for e, c in zip(self.entries, self.columns))


def row_standardize(raw: RowFilling, n: int | None = None) -> tuple[int, RowFilling | None]:
    """Sort a row's entries, returning the sign of the sorting permutation.

    A repeated entry gives ``(0, None)``: the determinant vanishes.
    """
    if n is not None:
        for e in raw.entries:
            if not 1 <= e <= n:
                raise InvalidEntryError(f"entry {e} outside 1..{n}")
    elif any(e < 1 for e in raw.entries):
        raise InvalidEntryError(f"entries {raw.entries} must be positive")
    if len(set(raw.entries)) != len(raw.entries):
        return 0, None
    entries = raw.entries
    inversions = sum(1 for a, b in itertools.combinations(entries, 2) if a > b)
    return (-1) ** inversions, RowFilling(raw.columns, tuple(sorted(entries)))


@dataclass(frozen=True)
class Tableau:
    """A row-standard tableau.

    With a ``shape`` the rows must match the shape's rows and be flagged.
    Without one the tableau is a free-standing fragment (only row-standard
    and in range is required), which is what the straightness predicate
    needs for the displays that are not sections.
    """

    n: int
    rows: tuple[RowFilling, ...]
    shape: Shape | None = None

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        for row in self.rows:
            if not row.is_increasing:
                raise InvalidTableauError(f"row {row.entries} is not strictly increasing")
            for e in row.entries:
                if not 1 <= e <= self.n:
                    raise InvalidEntryError(f"entry {e} outside 1..{self.n}")
            if row.columns and row.columns[-1] > self.n:
                raise InvalidTableauError(f"column {row.columns[-1]} exceeds n={self.n}")
        if self.shape is not None:
            if self.shape.n != self.n:
                raise InvalidTableauError("tableau rank differs from its shape's rank")
            want = [r.columns for r in self.shape.rows]
            got = [r.columns for r in self.rows]
            if want != got:
                raise InvalidTableauError(f"rows use columns {got}, shape requires {want}")
            for row in self.rows:
                if not row.is_flagged:
                    raise InvalidTableauError(f"row {row.entries} on {row.columns} is not flagged")

    @classmethod
    def from_shape(cls, shape: Shape, entries: Sequence[Sequence[int]]) -> "Tableau":
        if len(entries) != len(shape.rows):
            raise InvalidTableauError(f"{len(entries)} rows given, shape has {len(shape.rows)}")
        rows = tuple(RowFilling(r.columns, tuple(e)) for r, e in zip(shape.rows, entries))
        return cls(shape.n, rows, shape)

    @classmethod
    def from_rows(cls, n: int, rows: Iterable[tuple[Sequence[int], Sequence[int]]]) -> "Tableau":
        """Fragment from ``(columns, entries)`` pairs, top row first."""
        return cls(n, tuple(RowFilling(tuple(c), tuple(e)) for c, e in rows))

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def sort_key(self) -> tuple[int, ...]:
        return tuple(e for row in self.rows for e in row.entries)

    def entries(self) -> list[tuple[int, ...]]:
        return [row.entries for row in self.rows]

    def column(self, c: int) -> list[int]:
        return [e for row in self.rows if (e := row.entry(c)) is not None]

    def render(self) -> str:
        width = max([1] + [len(str(e)) for row in self.rows for e in row.entries])
        lines = []
        for row in self.rows:
            cells = []
            for c in range(1, self.n + 1):
                e = row.entry(c)
                cells.append(" " * width if e is None else str(e).rjust(width))
            lines.append(("" if width == 1 else " ").join(cells))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "shape": _shape_ref(self.shape),
            "rows": [
                [{"column": c, "entry": e} for c, e in zip(row.columns, row.entries)]
                for row in self.rows
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        shape = None
        if data.get("shape") is not None:
            shape = Shape.from_json(data["shape"])
        n = int(data.get("n", shape.n if shape is not None else 0))
        rows = []
        for raw in data["rows"]:
            cells = sorted((int(cell["column"]), int(cell["entry"])) for cell in raw)
            rows.append(RowFilling(tuple(c for c, _ in cells), tuple(e for _, e in cells)))
        return cls(n, tuple(rows), shape)


def _shape_ref(shape: Shape | None) -> dict | None:
    if shape is None:
        return None
    return {"n": shape.n, "word": list(shape.word.letters), "m": list(shape.m)}


# -- straightness ---------------------------------------------------------


def rows_compatible(upper: RowFilling, lower: RowFilling) -> bool:
    """The straightness condition for one pair of rows, ``upper`` drawn above ``lower``."""
    for k, below in zip(lower.columns, lower.entries):
        above = upper.entry(k)
        if above is None or above <= below:
            continue
        left = upper.entry(k - 1)
        if left is None or left < below:
            return False
    return True


def is_straight(t: Tableau) -> bool:
    rows = t.rows
    return all(
        rows_compatible(rows[i], rows[j]) for i in range(len(rows)) for j in range(i + 1, len(rows))
    )


def is_skew(t: Tableau) -> bool:
    """Rows right-aligned on a common column with lengths weakly increasing downward."""
    if not t.rows:
        return True
    right = {row.columns[-1] for row in t.rows if row.columns}
    if len(right) > 1 or any(not row.columns for row in t.rows):
        return False
    lengths = [len(row) for row in t.rows]
    return all(a <= b for a, b in zip(lengths, lengths[1:]))


def is_contra(t: Tableau) -> bool:
    if not is_skew(t):
        raise NotSkewError("tableau rows do not form a skew diagram (k,...,k)/lambda")
    if not all(row.is_increasing for row in t.rows):
        return False
    for c in range(1, t.n + 1):
        col = t.column(c)
        if any(a > b for a, b in zip(col, col[1:])):
            return False
    return True


# -- enumeration ------------------------------------------------------------


@lru_cache(maxsize=None)
def row_candidates(columns: tuple[int, ...]) -> tuple[RowFilling, ...]:
    """All flagged increasing fillings of a column interval, in lexicographic order."""
    if not columns:
        return (RowFilling((), ()),)
    out = []
    for combo in itertools.combinations(range(1, columns[-1] + 1), len(columns)):
        if all(e <= c for e, c in zip(combo, columns)):
            out.append(RowFilling(columns, combo))
    return tuple(out)


def iter_straight(shape: Shape) -> Iterator[Tableau]:
    choices = [row_candidates(r.columns) for r in shape.rows]
    placed: list[RowFilling] = []

    def extend(depth: int) -> Iterator[Tableau]:
        if depth == len(choices):
            yield Tableau(shape.n, tuple(placed), shape)
            return
        for cand in choices[depth]:
            if all(rows_compatible(up, cand) for up in placed):
                placed.append(cand)
                yield from extend(depth + 1)
                placed.pop()

    yield from extend(0)


def enumerate_straight(shape: Shape) -> list[Tableau]:
    return list(iter_straight(shape))


def iter_row_standard(shape: Shape) -> Iterator[Tableau]:
    choices = [row_candidates(r.columns) for r in shape.rows]
    for rows in itertools.product(*choices):
        yield Tableau(shape.n, rows, shape)


def enumerate_row_standard(shape: Shape) -> list[Tableau]:
    return list(iter_row_standard(shape))


def enumerate_contra(shape: Shape) -> list[Tableau]:
    """Flagged contra-tableaux of a skew shape, by filtering all row-standard fillings."""
    return [t for t in iter_row_standard(shape) if is_contra(t)]


# -- blocks -----------------------------------------------------------------


def block_shapes(shape: Shape) -> list[Shape]:
    return [Shape(shape.word, mj) for mj in decompose_multiplicity(shape)]


def block_factor(t: Tableau) -> list[Tableau]:
    if t.shape is None:
        raise BlockMismatchError("block factorization needs a tableau with a shape")
    parts = []
    for j, sub in enumerate(block_shapes(t.shape), start=1):
        rows = tuple(row for row, srow in zip(t.rows, t.shape.rows) if srow.block == j)
        parts.append(Tableau(t.n, rows, sub))
    return parts


def block_product(parts: Sequence[Tableau]) -> Tableau:
    if not parts:
        raise BlockMismatchError("no parts given")
    shapes = [p.shape for p in parts]
    if any(s is None for s in shapes):
        raise BlockMismatchError("every part needs a shape")
    word = shapes[0].word
    if any(s.word != word for s in shapes):
        raise BlockMismatchError("parts are built on different words")
    if not word.is_canonical:
        raise BlockMismatchError("block products require the canonical word")
    if len(parts) != word.n - 1:
        raise BlockMismatchError(f"expected {word.n - 1} parts, got {len(parts)}")
    for j, s in enumerate(shapes, start=1):
        if any(r.block != j for r in s.rows):
            raise BlockMismatchError(f"part {j} has rows outside block {j}")
    m = tuple(sum(col) for col in zip(*(s.m for s in shapes)))
    shape = Shape(word, m)
    rows = tuple(row for p in reversed(parts) for row in p.rows)
    return Tableau(word.n, rows, shape)


def canonical_block_tableau(shape: Shape, j: int) -> Tableau:
    """Block ``j`` of ``shape`` with every row filled by its own column set."""
    sub = block_shapes(shape)[j - 1]
    return Tableau(shape.n, tuple(RowFilling(r.columns, r.columns) for r in sub.rows), sub)


def lift_flag_section(t: Tableau, shape: Shape) -> Tableau:
    """Prepend the canonical lower blocks to a contra-tableau of the top block."""
    if t.shape is None or t.shape.word != shape.word:
        raise InvalidSectionError("section must live on the same word as the target shape")
    top = decompose_multiplicity(shape)[-1]
    if t.shape.m != top:
        raise InvalidSectionError(f"section has multiplicity {t.shape.m}, top block of target is {top}")
    try:
        contra = is_contra(t)
    except NotSkewError as exc:
        raise InvalidSectionError(str(exc)) from exc
    if not contra:
        raise InvalidSectionError("section is not a contra-tableau")
    lower = [canonical_block_tableau(shape, j) for j in range(1, shape.n - 1)]
    return block_product(lower + [t])

