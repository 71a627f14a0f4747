"""The three-dimensional example ``Z = P1 x P2 x P1 / B^3`` inside P^1 x P^2 x P^2.

Coordinates are ``s1, s2`` (degree (1,0,0)), ``r23, r13, r12`` (degree
(0,1,0)) and ``q1, q2, q3`` (degree (0,0,1)).  Two one-parameter families
deform the pair of incidence relations; at ``tau = 0`` each becomes a pair
of binomials.  Everything is polarized by O(1) x O(1) x O(1), so only the
graded pieces of degree ``(d, d, d)`` are counted.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from networkx.utils import UnionFind

from .errors import NotBinomialError
from .linalg import SparseEchelon
from .polynomial import Poly
from .section_ring import dim_sections, hilbert_table
from .series import series_numerator, trim
from .word import Shape, longest_word

VARIABLES = ("s1", "s2", "r23", "r13", "r12", "q1", "q2", "q3")
DEGREES = {
    "s1": (1, 0, 0), "s2": (1, 0, 0),
    "r23": (0, 1, 0), "r13": (0, 1, 0), "r12": (0, 1, 0),
    "q1": (0, 0, 1), "q2": (0, 0, 1), "q3": (0, 0, 1),
}


def hilbert_polynomial_Z(d: int) -> int:
    return (5 * d**3 + 11 * d**2 + 8 * d + 2) // 2


def ehrhart_D3(d: int) -> int:
    return (d + 1) ** 2 * (2 * d + 1)


def ehrhart_G(d: int) -> int:
    return (d + 1) ** 2 * (d + 2) // 2


def ehrhart_K2(d: int) -> int:
    return (d + 1) * (3 * d + 2) // 2


def _v(name: str) -> Poly:
    return Poly.var(VARIABLES, name)


@dataclass
class TriGradedPresentation:
    relations: list[Poly]
    family: int | None = None
    tau: Fraction | None = None

    def degree(self, p: Poly) -> tuple[int, int, int]:
        degs = set()
        for e in p.terms:
            deg = [0, 0, 0]
            for name, k in zip(VARIABLES, e):
                for axis in range(3):
                    deg[axis] += k * DEGREES[name][axis]
            degs.add(tuple(deg))
        if len(degs) != 1:
            raise ValueError(f"relation {p} is not tri-homogeneous")
        return degs.pop()

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "tau": None if self.tau is None else str(self.tau),
            "relations": [
                {"degree": list(self.degree(p)), "terms": p.to_json()} for p in self.relations
            ],
        }


def family_presentation(family: int, tau=1) -> TriGradedPresentation:
    """Family 1 puts ``tau`` on ``q3 r12``; family 2 puts it on ``q2 r13``."""
    tau = Fraction(tau)
    s1, s2, r23, r13, r12, q1, q2, q3 = (_v(x) for x in VARIABLES)
    first = s1 * r23 + s2 * r13
    if family == 1:
        second = q1 * r23 + q2 * r13 + q3 * r12 * tau
    elif family == 2:
        second = q1 * r23 + q2 * r13 * tau + q3 * r12
    else:
        raise ValueError(f"family must be 1 or 2, got {family}")
    return TriGradedPresentation([first, second], family, tau)


def _compositions(total: int, parts: int):
    if total < 0:
        return
    for cut in itertools.combinations(range(total + parts - 1), parts - 1):
        prev, out = -1, []
        for c in cut + (total + parts - 1,):
            out.append(c - prev - 1)
            prev = c
        yield tuple(out)


@lru_cache(maxsize=None)
def monomials(deg: tuple[int, int, int]) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors over ``VARIABLES`` of the given tri-degree."""
    if any(x < 0 for x in deg):
        return ()
    return tuple(
        a + b + c
        for a in _compositions(deg[0], 2)
        for b in _compositions(deg[1], 3)
        for c in _compositions(deg[2], 3)
    )


def _shift(e, f):
    return tuple(a + b for a, b in zip(e, f))


def fiber_dimension(pres: TriGradedPresentation, d: int) -> int:
    """Dimension of the degree-(d,d,d) piece of the quotient, by exact rank."""
    target = (d, d, d)
    basis = monomials(target)
    ech = SparseEchelon()
    for rel in pres.relations:
        delta = pres.degree(rel)
        rest = tuple(t - x for t, x in zip(target, delta))
        for u in monomials(rest):
            ech.add({_shift(u, e): c for e, c in rel.terms.items()})
    return len(basis) - ech.rank


def pure_difference_form(relations: Sequence[Poly]) -> tuple[tuple[str, ...], list[tuple[tuple, tuple]]]:
    """Find sign flips ``x -> -x`` turning every relation into ``c (m1 - m2)``.

    Returns the flipped variables and the monomial pairs.
    """
    for rel in relations:
        if len(rel.terms) != 2:
            raise NotBinomialError(f"{rel} does not have exactly two terms")
    names = relations[0].vars if relations else ()
    for size in range(len(names) + 1):
        for flips in itertools.combinations(names, size):
            pairs = []
            for rel in relations:
                (e1, c1), (e2, c2) = sorted(rel.flip(flips).terms.items(), reverse=True)
                if c1 != -c2:
                    break
                pairs.append((e1, e2))
            else:
                return flips, pairs
    raise NotBinomialError("no sign change makes every relation a pure difference")


def congruence_count(pres: TriGradedPresentation, d: int, seed: int | None = None) -> int:
    """Number of monomial classes in degree (d,d,d) under the binomial moves.

    For pure-difference binomial ideals the classes are a basis of the
    quotient.  ``seed`` shuffles the order in which moves are merged.
    """
    _, pairs = pure_difference_form(pres.relations)
    target = (d, d, d)
    moves = []
    for (e1, e2), rel in zip(pairs, pres.relations):
        delta = pres.degree(rel)
        rest = tuple(t - x for t, x in zip(target, delta))
        for u in monomials(rest):
            moves.append((_shift(u, e1), _shift(u, e2)))
    if seed is not None:
        random.Random(seed).shuffle(moves)
    classes = UnionFind(monomials(target))
    for a, b in moves:
        classes.union(a, b)
    return sum(1 for _ in classes.to_sets())


# -- components of the special fiber of family 1 -----------------------------

PARAMETERS = ("u1", "u2", "v", "w", "z", "y")
# s = (u1, u2), (r23, r13, r12) = (u2 v, u1 v, w), q = (u1 z, u2 z, y)
D3_MAP = {
    "s1": {"u1": 1},
    "s2": {"u2": 1},
    "r23": {"u2": 1, "v": 1},
    "r13": {"u1": 1, "v": 1},
    "r12": {"w": 1},
    "q1": {"u1": 1, "z": 1},
    "q2": {"u2": 1, "z": 1},
    "q3": {"y": 1},
}


def d3_image(e: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(PARAMETERS)
    for name, k in zip(VARIABLES, e):
        for p, m in D3_MAP[name].items():
            out[PARAMETERS.index(p)] += k * m
    return tuple(out)


def d3_parametrization_valid() -> bool:
    """The monomial map kills both binomials of family 1 at tau = 0 and reaches r13 r23 != 0."""
    _, pairs = pure_difference_form(family_presentation(1, 0).relations)
    kills = all(d3_image(a) == d3_image(b) for a, b in pairs)
    # every coordinate is a monomial in the torus parameters, so it is nonzero at u = v = ... = 1
    reaches = all(D3_MAP[x] for x in ("r13", "r23"))
    return kills and reaches


def d3_count(d: int) -> int:
    return len({d3_image(e) for e in monomials((d, d, d))})


def g_count(d: int) -> int:
    r23, r13 = VARIABLES.index("r23"), VARIABLES.index("r13")
    return sum(1 for e in monomials((d, d, d)) if e[r23] == 0 and e[r13] == 0)


def component_counts(d: int) -> dict[str, int]:
    fiber = congruence_count(family_presentation(1, 0), d)
    D3, G = d3_count(d), g_count(d)
    return {"D3": D3, "G": G, "K2": D3 + G - fiber, "fiber": fiber}


def ehrhart_series_numerator(values: Sequence[int], power: int) -> tuple[int, ...]:
    """Integer coefficients (ascending) of the numerator over ``(1-t)^power``."""
    return tuple(int(c) for c in series_numerator(values, power))


# -- convex hull of a small lattice point set --------------------------------


def _rank(vectors: Sequence[Sequence[int]]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


@dataclass
class PolytopeFaces:
    dimension: int
    vertices: list[tuple[int, ...]] = field(default_factory=list)
    facets: list[tuple[tuple[int, ...], int]] = field(default_factory=list)


def hull_faces_3d(points: Sequence[Sequence[int]]) -> PolytopeFaces:
    """Vertices and facets of a 3-dimensional lattice polytope by exhaustive plane search.

    Points may live in a higher-dimensional space; they are projected to
    three coordinates that are injective on their affine hull.
    """
    pts = sorted(set(tuple(p) for p in points))
    base = pts[0]
    diffs = [tuple(a - b for a, b in zip(p, base)) for p in pts[1:]]
    dim = _rank(diffs)
    if dim != 3:
        return PolytopeFaces(dim)
    coords = next(
        c for c in itertools.combinations(range(len(base)), 3)
        if _rank([[v[i] for i in c] for v in diffs]) == 3
    )
    proj = [tuple(p[i] for i in coords) for p in pts]
    planes = {}
    for a, b, c in itertools.combinations(range(len(proj)), 3):
        pa, pb, pc = proj[a], proj[b], proj[c]
        normal = _cross(tuple(x - y for x, y in zip(pb, pa)), tuple(x - y for x, y in zip(pc, pa)))
        if normal == (0, 0, 0):
            continue
        g = gcd(*normal)
        normal = tuple(x // g for x in normal)
        values = [sum(n * x for n, x in zip(normal, p)) for p in proj]
        offset = sum(n * x for n, x in zip(normal, pa))
        if all(v <= offset for v in values):
            planes[(normal, offset)] = True
        elif all(v >= offset for v in values):
            planes[(tuple(-x for x in normal), -offset)] = True
    facets = sorted(planes)
    vertices = []
    for p, q in zip(pts, proj):
        on = [n for n, off in facets if sum(a * b for a, b in zip(n, q)) == off]
        if on and _rank(on) == 3:
            vertices.append(p)
    return PolytopeFaces(3, vertices, facets)


def d3_polytope(d: int = 1) -> PolytopeFaces:
    return hull_faces_3d(sorted({d3_image(e) for e in monomials((d, d, d))}))


# -- report ------------------------------------------------------------------


@dataclass
class Check:
    name: str
    degree: int | None
    expected: object
    computed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "degree": self.degree,
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "pass": self.passed,
        }


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    return x


@dataclass
class Example3Report:
    dmax: int
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {"dmax": self.dmax, "passed": self.passed, "checks": [c.to_json() for c in self.checks]}


def verify_example3(dmax: int) -> Example3Report:
    if dmax < 3:
        raise ValueError("dmax must be at least 3 to determine the series numerators")
    checks: list[Check] = []
    shape = Shape(longest_word(3), (1, 1, 1))
    fam1_0, fam2_0 = family_presentation(1, 0), family_presentation(2, 0)
    fam1_1 = family_presentation(1, 1)
    series = {"D3": [], "G": [], "K2": [], "Y3": []}
    checks.append(Check("D3 parametrization kills the tau=0 binomials", None, True, d3_parametrization_valid()))
    for d in range(dmax + 1):
        hp = hilbert_polynomial_Z(d)
        checks.append(Check("fiber dimension, tau=1", d, hp, fiber_dimension(fam1_1, d)))
        fiber1 = congruence_count(fam1_0, d)
        fiber2 = congruence_count(fam2_0, d)
        checks.append(Check("monomial classes, family 1, tau=0", d, hp, fiber1))
        checks.append(Check("monomial classes, family 2, tau=0", d, hp, fiber2))
        checks.append(Check("straight tableaux of shape d(1,1,1)", d, hp, dim_sections(shape.scaled(d))))
        D3, G = d3_count(d), g_count(d)
        K2 = D3 + G - fiber1
        checks.append(Check("EP(D3)", d, ehrhart_D3(d), D3))
        checks.append(Check("EP(G)", d, ehrhart_G(d), G))
        checks.append(Check("EP(K2) by inclusion-exclusion", d, ehrhart_K2(d), K2))
        checks.append(Check("HP(D3) + HP(G) - HP(K2)", d, hp, D3 + G - K2))
        series["D3"].append(D3)
        series["G"].append(G)
        series["K2"].append(K2)
        series["Y3"].append(fiber2)
    checks.append(Check("ES(D3) numerator", None, (1, 8, 3), ehrhart_series_numerator(series["D3"], 4)))
    checks.append(Check("ES(G) numerator", None, (1, 2), ehrhart_series_numerator(series["G"], 4)))
    checks.append(Check("ES(K2) numerator", None, (1, 2), ehrhart_series_numerator(series["K2"], 3)))
    checks.append(Check("ES(Y3) numerator", None, (1, 9, 5), ehrhart_series_numerator(series["Y3"], 4)))
    cube = d3_polytope(1)
    checks.append(Check("D3 polytope (vertices, facets)", 1, (8, 6), (len(cube.vertices), len(cube.facets))))
    if dmax >= 4:
        table = hilbert_table(shape, dmax)
        expected = trim([Fraction(1), Fraction(4), Fraction(11, 2), Fraction(5, 2)])
        checks.append(Check("interpolated Hilbert polynomial", None, expected, table.interpolated))
    return Example3Report(dmax, checks)
