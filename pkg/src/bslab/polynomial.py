"""Sparse multivariate polynomials with exact coefficients.

Terms are stored as a dict from exponent tuples (one slot per variable of a
fixed, ordered variable tuple) to nonzero ``int`` or ``Fraction``
coefficients.  Comparing exponent tuples with Python's tuple order is the
lexicographic term order with the first variable largest.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from .errors import EvaluationError


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Poly:
    __slots__ = ("vars", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple[int, ...], Rational] | None = None):
        self.vars = tuple(variables)
        clean = {}
        for exp, c in (terms or {}).items():
            if c:
                if len(exp) != len(self.vars):
                    raise ValueError(f"exponent {exp} has wrong length for {len(self.vars)} variables")
                clean[tuple(exp)] = _normalize(c)
        self.terms = clean

    # construction ----------------------------------------------------------

    @classmethod
    def zero(cls, variables) -> "Poly":
        return cls(variables)

    @classmethod
    def constant(cls, variables, c) -> "Poly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables, name: str) -> "Poly":
        variables = tuple(variables)
        exp = [0] * len(variables)
        exp[variables.index(name)] = 1
        return cls(variables, {tuple(exp): 1})

    @classmethod
    def monomial(cls, variables, powers: Mapping[str, int], c=1) -> "Poly":
        variables = tuple(variables)
        exp = [0] * len(variables)
        for name, k in powers.items():
            exp[variables.index(name)] += k
        return cls(variables, {tuple(exp): c})

    # arithmetic -------------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise ValueError("polynomials over different variable tuples")
            return other
        if isinstance(other, Rational):
            return Poly.constant(self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Poly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            return Poly(self.vars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[tuple[int, ...], Rational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Poly(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly.constant(self.vars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = Poly.constant(self.vars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # queries ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def leading_term(self) -> tuple[tuple[int, ...], Rational]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    def leading_exponent(self) -> tuple[int, ...]:
        return self.leading_term()[0]

    def coefficient(self, powers: Mapping[str, int]) -> Rational:
        exp = [0] * len(self.vars)
        for name, k in powers.items():
            exp[self.vars.index(name)] = k
        return self.terms.get(tuple(exp), 0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def evaluate(self, point: Mapping[str, Rational]) -> Rational:
        used = {self.vars[i] for e in self.terms for i, k in enumerate(e) if k}
        missing = used - set(point)
        if missing:
            raise EvaluationError(f"no value for {sorted(missing)}")
        values = [point.get(name, 0) for name in self.vars]
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term *= v**k
            total += term
        return _normalize(total) if isinstance(total, Fraction) else total

    def flip(self, names: Iterable[str]) -> "Poly":
        """Substitute ``x -> -x`` for every variable in ``names``."""
        idx = [self.vars.index(name) for name in names]
        return Poly(
            self.vars,
            {e: (-c if sum(e[i] for i in idx) % 2 else c) for e, c in self.terms.items()},
        )

    # output -------------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Rational]]:
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                name if k == 1 else f"{name}^{k}" for name, k in zip(self.vars, e) if k
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Poly({self})"

    def to_json(self) -> list[dict]:
        return [
            {
                "exponents": {name: k for name, k in zip(self.vars, e) if k},
                "coeff": str(c),
            }
            for e, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, variables, data: list[dict]) -> "Poly":
        variables = tuple(variables)
        terms = {}
        for item in data:
            exp = [0] * len(variables)
            for name, k in item["exponents"].items():
                exp[variables.index(name)] = int(k)
            terms[tuple(exp)] = terms.get(tuple(exp), 0) + Fraction(item["coeff"])
        return cls(variables, terms)


def determinant(matrix: list[list[Poly]], variables) -> Poly:
    """Laplace expansion along the first row, skipping zero entries."""
    size = len(matrix)
    if size == 0:
        return Poly.constant(variables, 1)
    memo: dict[tuple[int, tuple[int, ...]], Poly] = {}

    def rec(row: int, cols: tuple[int, ...]) -> Poly:
        if row == size:
            return Poly.constant(variables, 1)
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = Poly.zero(variables)
        for k, c in enumerate(cols):
            entry = matrix[row][c]
            if entry.is_zero():
                continue
            minor = rec(row + 1, cols[:k] + cols[k + 1:])
            if minor.is_zero():
                continue
            term = entry * minor
            total = total + (term if k % 2 == 0 else -term)
        memo[key] = total
        return total

    return rec(0, tuple(range(size)))
