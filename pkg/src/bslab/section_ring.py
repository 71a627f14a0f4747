"""Section spaces spanned by tableaux: dimensions, bases and Hilbert functions."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import BasisFailure, NonPolynomialGrowthError
from .linalg import SparseEchelon, bareiss_rank
from .minor_algebra import AlphaMatrix, leading_exponent, tableau_poly, upper_variables
from .polynomial import Poly
from .series import UniPoly, format_poly, interpolate, poly_eval
from .tableaux import Tableau, iter_row_standard, iter_straight
from .word import Shape


def dim_sections(shape: Shape) -> int:
    return sum(1 for _ in iter_straight(shape))


@dataclass
class BasisReport:
    shape: Shape
    straight_count: int
    symbolic_rank: int
    span_verified: bool
    row_standard_count: int = 0
    witness_failures: list[Tableau] = field(default_factory=list)
    evaluation_rank: int | None = None

    @property
    def ok(self) -> bool:
        return self.span_verified and self.symbolic_rank == self.straight_count

    def to_json(self) -> dict:
        return {
            "shape": {"n": self.shape.n, "word": list(self.shape.word.letters), "m": list(self.shape.m)},
            "straightCount": self.straight_count,
            "symbolicRank": self.symbolic_rank,
            "spanVerified": self.span_verified,
            "rowStandardCount": self.row_standard_count,
            "evaluationRank": self.evaluation_rank,
            "witnessFailures": [t.to_json() for t in self.witness_failures],
        }


def _random_upper_point(n: int, rng: random.Random) -> dict[str, int]:
    return {name: rng.randint(-20, 20) for name in upper_variables(n)}


def evaluation_rank(polys: list[Poly], n: int, seed: int = 0, extra: int = 3) -> int:
    """Rank of the matrix of values at random integer matrices.

    A lower bound for the symbolic rank; equality with the number of
    polynomials certifies independence.
    """
    rng = random.Random(seed)
    points = [_random_upper_point(n, rng) for _ in range(len(polys) + extra)]
    return bareiss_rank([[p.evaluate(pt) for pt in points] for p in polys])


def verify_basis(shape: Shape, precheck: bool = False, seed: int = 0) -> BasisReport:
    """Exact rank of the straight-tableau polynomials and span of all row-standard ones."""
    straight = list(iter_straight(shape))
    polys = [tableau_poly(t) for t in straight]
    ech = SparseEchelon()
    failures = []
    for t, p in zip(straight, polys):
        if not ech.add(p.terms):
            failures.append(t)
    rank = ech.rank
    count = 0
    spanned = True
    for t in iter_row_standard(shape):
        count += 1
        if not ech.contains(tableau_poly(t).terms):
            spanned = False
            failures.append(t)
    report = BasisReport(shape, len(straight), rank, spanned, count, failures)
    if precheck:
        report.evaluation_rank = evaluation_rank(polys, shape.n, seed)
    return report


@lru_cache(maxsize=32)
def _straight_index(shape: Shape) -> dict[tuple[int, ...], Tableau]:
    index = {}
    for t in iter_straight(shape):
        key = leading_exponent(t).counts
        if key in index:
            raise BasisFailure(f"two straight tableaux share the leading exponent {key}")
        index[key] = t
    return index


def straighten(t: Tableau) -> dict[Tableau, int]:
    """Coefficients expressing ``t`` in the straight basis of its shape.

    Ordered by leading monomial the straight polynomials form a
    unitriangular system, so the solve is a back-substitution on leading
    terms.  The result is re-expanded and compared with ``t`` exactly.
    """
    if t.shape is None:
        raise BasisFailure("straightening needs a tableau with a shape")
    index = _straight_index(t.shape)
    target = tableau_poly(t)
    rest = target
    coeffs: dict[Tableau, int] = {}
    cache: dict[Tableau, Poly] = {}
    while rest:
        lead, c = rest.leading_term()
        s = index.get(lead)
        if s is None:
            raise BasisFailure(f"no straight tableau with leading exponent {lead}")
        if s not in cache:
            cache[s] = tableau_poly(s)
        coeffs[s] = coeffs.get(s, 0) + c
        rest = rest - cache[s] * c
    coeffs = {s: c for s, c in coeffs.items() if c}
    check = Poly.zero(target.vars)
    for s, c in coeffs.items():
        check = check + cache[s] * c
    if check != target:
        raise BasisFailure("straightening does not reproduce the tableau polynomial")
    return dict(sorted(coeffs.items(), key=lambda item: item[0].sort_key))


def verify_straightening(t: Tableau, coeffs: dict[Tableau, int]) -> bool:
    total = Poly.zero(upper_variables(t.n))
    for s, c in coeffs.items():
        total = total + tableau_poly(s) * c
    return total == tableau_poly(t)


@dataclass
class GradedDimensionTable:
    shape: Shape
    entries: list[int]
    interpolated: UniPoly | None = None

    def __getitem__(self, d: int) -> int:
        return self.entries[d]

    def polynomial_text(self, var: str = "d") -> str | None:
        return None if self.interpolated is None else format_poly(self.interpolated, var)

    def to_json(self) -> dict:
        return {
            "shape": {"n": self.shape.n, "word": list(self.shape.word.letters), "m": list(self.shape.m)},
            "entries": [{"d": d, "dim": v} for d, v in enumerate(self.entries)],
            "interpolated": None
            if self.interpolated is None
            else {
                "coefficients": [str(c) for c in self.interpolated],
                "text": self.polynomial_text(),
            },
        }

    @classmethod
    def from_json(cls, data: dict) -> "GradedDimensionTable":
        shape = Shape.from_json(data["shape"])
        entries = [int(e["dim"]) for e in sorted(data["entries"], key=lambda e: e["d"])]
        interp = data.get("interpolated")
        coeffs = None if interp is None else tuple(Fraction(c) for c in interp["coefficients"])
        return cls(shape, entries, coeffs)


def hilbert_table(shape: Shape, dmax: int, degree: int | None = None) -> GradedDimensionTable:
    """Dimensions of ``M(d m)`` for ``d = 0..dmax``.

    The Hilbert polynomial has degree at most ``degree`` (the word length by
    default).  When ``dmax > degree`` it is interpolated through
    ``d = 0..degree`` and checked against every remaining entry.
    """
    if degree is None:
        degree = len(shape.word)
    entries = [dim_sections(shape.scaled(d)) for d in range(dmax + 1)]
    table = GradedDimensionTable(shape, entries)
    if dmax > degree:
        coeffs = interpolate(entries[: degree + 1])
        for d in range(degree + 1, dmax + 1):
            if poly_eval(coeffs, d) != entries[d]:
                raise NonPolynomialGrowthError(
                    f"interpolant predicts {poly_eval(coeffs, d)} at d={d}, counted {entries[d]}"
                )
        table.interpolated = coeffs
    return table


def initial_exponent_set(shape: Shape) -> set[AlphaMatrix]:
    return {leading_exponent(t) for t in iter_straight(shape)}
