import itertools
import json

import pytest

from bslab.errors import EmbeddingError, InvalidTableauError
from bslab.lattice_points import (
    GTPattern,
    LatticePoint,
    contra_to_semistandard,
    embed,
    generated_in_degree_one,
    gt_pattern_of_contra,
    initial_exponents,
    is_semistandard,
    point_of_tableau,
    sum_points,
)
from bslab.minor_algebra import AlphaMatrix
from bslab.section_ring import dim_sections
from bslab.tableaux import Tableau, block_factor, block_product, enumerate_contra, enumerate_row_standard
from bslab.word import Shape, longest_word

T1 = ((1, 0), (0,))
T2 = ((3, 2, 0), (3, 1), (2,))
T3 = ((5, 2, 1, 0), (3, 1, 0), (1, 1), (1,))
TOTAL = ((5, 5, 4, 0), (3, 4, 1), (1, 3), (1,))


def block_contra_tableaux(n, bound=2):
    w = longest_word(n)
    for j in range(1, n):
        lo = j * (j - 1) // 2
        for block_m in itertools.product(range(bound + 1), repeat=j):
            m = (0,) * lo + block_m + (0,) * (len(w) - lo - j)
            for t in enumerate_contra(Shape(w, m)):
                yield j, t


def test_displayed_patterns(small_parts):
    patterns = [point_of_tableau(t).pattern().rows for t in small_parts]
    assert patterns == [T1, T2, T3]


def test_displayed_sum(small_parts):
    total = sum_points([point_of_tableau(t) for t in small_parts], 4)
    assert total.pattern().rows == TOTAL


def test_sum_equals_point_of_product(block_parts):
    product = block_product(block_parts)
    assert point_of_tableau(product).pattern().rows == TOTAL
    assert point_of_tableau(product) == sum_points([point_of_tableau(t) for t in block_parts], 4)


def test_gt_of_contra(small_parts):
    assert gt_pattern_of_contra(small_parts[2]).rows == T3
    assert gt_pattern_of_contra(small_parts[0]).rows == T1
    assert gt_pattern_of_contra(Tableau(3, ())).rows == ((0, 0, 0), (0, 0), (0,))


def test_gt_of_contra_rejects_non_contra():
    t = Tableau.from_shape(Shape(longest_word(3), (0, 1, 1)), [(3,), (1, 2)])
    with pytest.raises(InvalidTableauError):
        gt_pattern_of_contra(t)
    with pytest.raises(InvalidTableauError):
        gt_pattern_of_contra(Tableau.from_rows(3, [((2,), (1,)), ((2, 3), (1, 2))]))


def test_contra_conversion_routes_agree():
    count = 0
    for n in (2, 3, 4):
        for j, t in block_contra_tableaux(n):
            ssyt = contra_to_semistandard(t, j + 1)
            assert is_semistandard(ssyt)
            pattern = gt_pattern_of_contra(t, j + 1)
            assert pattern.interlaces()
            assert pattern == point_of_tableau(t, j + 1).pattern()
            count += 1
    assert count > 3000


def test_empty_point_is_zero():
    p = point_of_tableau(Tableau(4, ()))
    assert all(x == 0 for row in p.rows for x in row)
    assert sum_points([p, p], 4) == p


def test_sum_of_single_part(small_parts):
    p = point_of_tableau(small_parts[2])
    assert sum_points([p], 4) == p


@pytest.mark.parametrize("m", list(itertools.product(range(3), repeat=3)))
def test_additivity_n3(m):
    shape = Shape(longest_word(3), m)
    for t in enumerate_row_standard(shape):
        parts = block_factor(t)
        assert point_of_tableau(t) == sum_points([point_of_tableau(p) for p in parts], 3)


def test_embed():
    p = point_of_tableau(Tableau.from_shape(Shape(longest_word(2), (1,)), [(1,)]))
    assert embed(p, 4).rows == ((0, 0, 1, 0), (0, 0, 0, 0), (0,) * 4, (0,) * 4)
    with pytest.raises(EmbeddingError):
        embed(p, 1)
    with pytest.raises(EmbeddingError):
        point_of_tableau(Tableau.from_rows(3, [((3,), (1,))]), size=2)


def test_point_equality_ignores_fixed_row():
    a = LatticePoint(2, ((1, 0), (0, 0)))
    b = LatticePoint(2, ((7, 3), (0, 9)))
    assert a == b and hash(a) == hash(b)
    assert a != LatticePoint(2, ((1, 0), (1, 0)))


def test_interlacing_detects_violation():
    assert GTPattern(T3).interlaces()
    assert not GTPattern(((2, 0), (3,))).interlaces()


def test_render():
    assert GTPattern(T2).render() == "3   2   0\n  3   1\n    2"


def test_json_roundtrip(small_parts):
    p = point_of_tableau(small_parts[2])
    assert LatticePoint.from_json(json.loads(json.dumps(p.to_json()))) == p
    g = p.pattern()
    assert GTPattern.from_json(json.loads(json.dumps(g.to_json()))) == g


def test_initial_exponents(shape3):
    assert initial_exponents(shape3, 0) == {AlphaMatrix.zero(3)}
    for d in range(1, 5):
        assert len(initial_exponents(shape3, d)) == dim_sections(shape3.scaled(d))


def test_generated_in_degree_one(shape3):
    assert generated_in_degree_one(shape3, 3) == {0: True, 1: True, 2: True, 3: True}
