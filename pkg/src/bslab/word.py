"""Reduced words, column sets and tableau shapes.

The canonical word for rank ``n`` is ``(1)(2 1)(3 2 1)...(n-1 ... 1)``.  A
word together with a multiplicity vector ``m`` determines a row-convex
shape: the column set ``C^(k)`` is repeated ``m_k`` times, with the rows for
the last letter on top and those for the first letter at the bottom.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

from .errors import InvalidRankError, ShapeError, UnsupportedWordError


def triangular(j: int) -> int:
    """Block boundary ``p_j = j(j-1)/2``."""
    return j * (j - 1) // 2


@dataclass(frozen=True)
class Word:
    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise InvalidRankError(f"rank must be at least 2, got {self.n}")
        object.__setattr__(self, "letters", tuple(int(a) for a in self.letters))
        for a in self.letters:
            if not 1 <= a <= self.n - 1:
                raise InvalidRankError(f"letter {a} outside 1..{self.n - 1}")

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def is_canonical(self) -> bool:
        return self.letters == _canonical_letters(self.n)

    def permutation(self) -> tuple[int, ...]:
        """One-line notation of ``s_{i_1} s_{i_2} ... s_{i_l}`` acting on 1..n."""
        return tuple(_apply(self.letters, k) for k in range(1, self.n + 1))

    def to_json(self) -> dict:
        return {"n": self.n, "letters": list(self.letters)}

    @classmethod
    def from_json(cls, data: dict) -> "Word":
        return cls(int(data["n"]), tuple(data["letters"]))


def _canonical_letters(n: int) -> tuple[int, ...]:
    return tuple(a for top in range(1, n) for a in range(top, 0, -1))


def _transpose(i: int, k: int) -> int:
    if k == i:
        return i + 1
    if k == i + 1:
        return i
    return k


def _apply(letters: Sequence[int], k: int) -> int:
    # composition of maps: the rightmost transposition acts first
    for i in reversed(letters):
        k = _transpose(i, k)
    return k


def longest_word(n: int) -> Word:
    if n < 2:
        raise InvalidRankError(f"rank must be at least 2, got {n}")
    return Word(n, _canonical_letters(n))


@dataclass(frozen=True)
class ColumnSetList:
    sets: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.sets)

    def __getitem__(self, index: int) -> tuple[int, ...]:
        return self.sets[index]

    def C(self, k: int) -> tuple[int, ...]:
        """The column set with 1-based index ``k``."""
        return self.sets[k - 1]

    def to_json(self) -> dict:
        return {"sets": [list(s) for s in self.sets]}

    @classmethod
    def from_json(cls, data: dict) -> "ColumnSetList":
        return cls(tuple(tuple(sorted(s)) for s in data["sets"]))


def column_sets(word: Word) -> ColumnSetList:
    """``C^(k) = s_{i_1}...s_{i_k} {1..i_k}`` for every prefix of the word."""
    out = []
    for k, i in enumerate(word.letters, start=1):
        prefix = word.letters[:k]
        out.append(tuple(sorted(_apply(prefix, c) for c in range(1, i + 1))))
    return ColumnSetList(tuple(out))


def is_interval(s: Sequence[int]) -> bool:
    return not s or max(s) - min(s) + 1 == len(set(s))


def is_row_convex(sets: ColumnSetList | Sequence[Sequence[int]]) -> bool:
    return all(is_interval(s) for s in sets)


def block_of(index: int) -> int:
    """Block ``j`` containing word position ``index`` (1-based): ``p_j < index <= p_{j+1}``."""
    j = 1
    while triangular(j + 1) < index:
        j += 1
    return j


@dataclass(frozen=True)
class ShapeRow:
    lo: int
    hi: int
    source: int  # 1-based word position a of the column set C^(a)
    block: int  # 0 when the word is not canonical
    repeat: int  # b in [R_b^(a) : C^(a)], 1 is the bottom-most copy

    @property
    def columns(self) -> tuple[int, ...]:
        return tuple(range(self.lo, self.hi + 1))

    def __len__(self) -> int:
        return self.hi - self.lo + 1


@dataclass(frozen=True)
class Shape:
    word: Word
    m: tuple[int, ...]
    rows: tuple[ShapeRow, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        m = tuple(int(x) for x in self.m)
        object.__setattr__(self, "m", m)
        if len(m) != len(self.word):
            raise ShapeError(f"multiplicity has length {len(m)}, word has length {len(self.word)}")
        if any(x < 0 for x in m):
            raise ShapeError(f"negative multiplicity in {m}")
        sets = column_sets(self.word)
        canonical = self.word.is_canonical
        rows = []
        for a in range(len(m), 0, -1):
            cs = sets.C(a)
            if not is_interval(cs):
                raise ShapeError(f"column set C^({a}) = {set(cs)} is not an interval")
            j = block_of(a) if canonical else 0
            for b in range(m[a - 1], 0, -1):
                rows.append(ShapeRow(cs[0], cs[-1], a, j, b))
        object.__setattr__(self, "rows", tuple(rows))

    @property
    def n(self) -> int:
        return self.word.n

    @property
    def size(self) -> int:
        return sum(self.m)

    def scaled(self, d: int) -> "Shape":
        return Shape(self.word, tuple(d * x for x in self.m))

    @cached_property
    def blocks(self) -> list[tuple[int, ...]] | None:
        if not self.word.is_canonical:
            return None
        return decompose_multiplicity(self)

    @cached_property
    def flag_weight(self) -> tuple[int, ...] | None:
        """Column lengths of the top block, read from column n down to column 1."""
        if not self.word.is_canonical:
            return None
        top = self.n - 1
        counts = [0] * (self.n + 1)
        for row in self.rows:
            if row.block == top:
                for c in row.columns:
                    counts[c] += 1
        return tuple(counts[c] for c in range(self.n, 0, -1))

    def column_counts(self) -> dict[int, int]:
        counts = {c: 0 for c in range(1, self.n + 1)}
        for row in self.rows:
            for c in row.columns:
                counts[c] += 1
        return counts

    def render(self, fill: str = "X") -> str:
        lines = []
        for row in self.rows:
            lines.append("".join(fill if row.lo <= c <= row.hi else " " for c in range(1, self.n + 1)))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "word": list(self.word.letters),
            "m": list(self.m),
            "rows": [
                {"columns": [r.lo, r.hi], "source": r.source, "block": r.block, "repeat": r.repeat}
                for r in self.rows
            ],
            "blocks": [list(b) for b in self.blocks] if self.blocks is not None else None,
            "flagWeight": list(self.flag_weight) if self.flag_weight is not None else None,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Shape":
        n = int(data["n"])
        letters = data.get("word")
        word = Word(n, tuple(letters)) if letters is not None else longest_word(n)
        shape = cls(word, tuple(data["m"]))
        if "rows" in data and data["rows"] is not None:
            got = [tuple(r["columns"]) for r in data["rows"]]
            want = [(r.lo, r.hi) for r in shape.rows]
            if got != want:
                raise ShapeError("row layout does not match word and multiplicity")
        return shape


def build_shape(word: Word, m: Sequence[int]) -> Shape:
    return Shape(word, tuple(m))


def decompose_multiplicity(shape: Shape) -> list[tuple[int, ...]]:
    """Split ``m`` into ``m(1), ..., m(n-1)`` along the block boundaries."""
    if not shape.word.is_canonical:
        raise UnsupportedWordError("block decomposition requires the canonical word")
    n, m = shape.n, shape.m
    parts = []
    for j in range(1, n):
        lo, hi = triangular(j), triangular(j + 1)
        parts.append(tuple(x if lo < a <= hi else 0 for a, x in enumerate(m, start=1)))
    return parts
