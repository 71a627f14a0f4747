"""Acceptance criteria 1 to 7, each at zero tolerance with exact arithmetic.

Every test carries an ``acceptance`` marker; the terminal summary prints one
PASS/FAIL line per criterion.
"""
import itertools
from fractions import Fraction

import pytest

from bslab.degeneration3 import (
    component_counts,
    congruence_count,
    ehrhart_series_numerator,
    family_presentation,
    fiber_dimension,
)
from bslab.lattice_points import point_of_tableau, sum_points
from bslab.minor_algebra import (
    leading_exponent,
    minor_poly,
    parabolic_variables,
    parse_monomial,
    plucker_coords_3d,
    precedes,
    upper_variables,
)
from bslab.polynomial import Poly
from bslab.section_ring import hilbert_table, initial_exponent_set, straighten, verify_basis, verify_straightening
from bslab.tableaux import (
    block_factor,
    block_product,
    enumerate_contra,
    enumerate_row_standard,
    enumerate_straight,
)
from bslab.word import Shape, column_sets, longest_word, triangular

SHAPE = Shape(longest_word(3), (1, 1, 1))
COUNTS = [1, 13, 51, 130, 265, 471]


def criterion(number, title):
    return pytest.mark.acceptance(number, title)


@pytest.fixture(scope="module")
def counts():
    return hilbert_table(SHAPE, 5).entries


# -- 1 -----------------------------------------------------------------------


@criterion(1, "straight counts 1,13,51,130,265,471 and HP(d) = (5d^3+11d^2+8d+2)/2")
def test_c1_hilbert_polynomial():
    table = hilbert_table(SHAPE, 5)
    assert table.entries == COUNTS
    assert table.interpolated == (Fraction(1), Fraction(4), Fraction(11, 2), Fraction(5, 2))
    assert table.polynomial_text() == "(5d^3 + 11d^2 + 8d + 2)/2"


# -- 2 -----------------------------------------------------------------------


@criterion(2, "straight tableaux form a basis with distinct leading exponents (d=1,2)")
@pytest.mark.parametrize("d", [1, 2])
def test_c2_basis_and_initial_terms(d):
    shape = SHAPE.scaled(d)
    report = verify_basis(shape)
    assert report.symbolic_rank == report.straight_count == COUNTS[d]
    assert report.span_verified and report.row_standard_count == len(enumerate_row_standard(shape))
    straight = enumerate_straight(shape)
    exps = [leading_exponent(t) for t in straight]
    assert len(set(exps)) == len(exps) == COUNTS[d]
    assert initial_exponent_set(shape) == set(exps)


# -- 3 -----------------------------------------------------------------------


@criterion(3, "generic fiber and both special fibers agree with the tableau counts (d<=4)")
@pytest.mark.parametrize("d", range(5))
def test_c3_flat_degeneration(d, counts):
    generic = fiber_dimension(family_presentation(1, 1), d)
    special1 = congruence_count(family_presentation(1, 0), d)
    special2 = congruence_count(family_presentation(2, 0), d)
    assert generic == special1 == special2 == counts[d]


# -- 4 -----------------------------------------------------------------------


@criterion(4, "component lattice point counts and Ehrhart series numerators")
def test_c4_components():
    D3, G, K2, fiber2 = [], [], [], []
    for d in range(5):
        c = component_counts(d)
        assert c["D3"] == (d + 1) ** 2 * (2 * d + 1)
        assert 2 * c["G"] == (d + 1) ** 2 * (d + 2)
        assert 2 * c["K2"] == (d + 1) * (3 * d + 2)
        D3.append(c["D3"])
        G.append(c["G"])
        K2.append(c["K2"])
        fiber2.append(congruence_count(family_presentation(2, 0), d))
    assert ehrhart_series_numerator(D3, 4) == (1, 8, 3)
    assert ehrhart_series_numerator(G, 4) == (1, 2)
    assert ehrhart_series_numerator(K2, 3) == (1, 2)
    assert ehrhart_series_numerator(fiber2, 4) == (1, 9, 5)


# -- 5 -----------------------------------------------------------------------


@criterion(5, "worked Gelfand-Tsetlin patterns, their sum, and additivity on n=3, m<=(2,2,2)")
def test_c5_patterns(small_parts, block_parts):
    patterns = [point_of_tableau(t).pattern().rows for t in small_parts]
    assert patterns == [
        ((1, 0), (0,)),
        ((3, 2, 0), (3, 1), (2,)),
        ((5, 2, 1, 0), (3, 1, 0), (1, 1), (1,)),
    ]
    total = ((5, 5, 4, 0), (3, 4, 1), (1, 3), (1,))
    assert sum_points([point_of_tableau(t) for t in small_parts], 4).pattern().rows == total
    assert point_of_tableau(block_product(block_parts)).pattern().rows == total


@criterion(5, "worked Gelfand-Tsetlin patterns, their sum, and additivity on n=3, m<=(2,2,2)")
def test_c5_additivity():
    checked = 0
    for m in itertools.product(range(3), repeat=3):
        for t in enumerate_row_standard(Shape(longest_word(3), m)):
            parts = block_factor(t)
            assert block_product(parts) == t
            assert point_of_tableau(t) == sum_points([point_of_tableau(p) for p in parts], 3)
            checked += 1
    assert checked > 1000


# -- 6 -----------------------------------------------------------------------


@criterion(6, "coordinate identities and both incidence relations vanish")
def test_c6_symbolic_identities():
    c = plucker_coords_3d()
    variables = parabolic_variables()
    assert c["r23"] == parse_monomial("a21*a33*b11*b32", variables)
    assert c["q3"] == parse_monomial("a33*b32*c21", variables)
    assert (c["s1"] * c["r23"] + c["s2"] * c["r13"]).is_zero()
    assert (c["q1"] * c["r23"] + c["q2"] * c["r13"] + c["q3"] * c["r12"]).is_zero()


# -- 7 -----------------------------------------------------------------------


@criterion(7, "property suites: diagonal leading terms, column-set closed form, straight=contra, straightening")
def test_c7_diagonal_leading_terms():
    for n in range(2, 7):
        variables = upper_variables(n)
        for k in range(1, 5):
            for R in itertools.combinations(range(1, n + 1), k):
                for C in itertools.combinations(range(1, n + 1), k):
                    if not precedes(R, C):
                        continue
                    diag = Poly.monomial(variables, {f"x_{r}_{c}": 1 for r, c in zip(R, C)})
                    assert minor_poly(R, C, n).leading_term() == (diag.leading_exponent(), 1)


@criterion(7, "property suites: diagonal leading terms, column-set closed form, straight=contra, straightening")
def test_c7_column_set_closed_form():
    for n in range(2, 9):
        sets = column_sets(longest_word(n))
        for j in range(2, n + 1):
            for t in range(j - 1):
                assert sets.C(triangular(j - 1) + 1 + t) == tuple(range(t + 2, j + 1))


@criterion(7, "property suites: diagonal leading terms, column-set closed form, straight=contra, straightening")
def test_c7_straight_equals_contra():
    for n in range(2, 5):
        w = longest_word(n)
        for j in range(1, n):
            lo = triangular(j)
            for block_m in itertools.product(range(3), repeat=j):
                m = (0,) * lo + block_m + (0,) * (len(w) - lo - j)
                shape = Shape(w, m)
                assert set(enumerate_straight(shape)) == set(enumerate_contra(shape))


@criterion(7, "property suites: diagonal leading terms, column-set closed form, straight=contra, straightening")
def test_c7_straightening_reverifies():
    shapes = [SHAPE, SHAPE.scaled(2), Shape(longest_word(4), (1,) * 6)]
    for shape in shapes:
        for t in enumerate_row_standard(shape):
            assert verify_straightening(t, straighten(t))
