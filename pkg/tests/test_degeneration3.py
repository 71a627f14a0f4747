import json

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from bslab.degeneration3 import (
    VARIABLES,
    component_counts,
    congruence_count,
    d3_count,
    d3_image,
    d3_parametrization_valid,
    d3_polytope,
    ehrhart_D3,
    ehrhart_G,
    ehrhart_K2,
    ehrhart_series_numerator,
    family_presentation,
    fiber_dimension,
    g_count,
    hilbert_polynomial_Z,
    hull_faces_3d,
    monomials,
    pure_difference_form,
    verify_example3,
)
from bslab.errors import NotBinomialError
from bslab.minor_algebra import plucker_coords_3d
from bslab.polynomial import Poly

HP = [1, 13, 51, 130, 265]


def v(name):
    return Poly.var(VARIABLES, name)


def sympy_fiber_dimension(pres, d):
    """Independent oracle: rank of the multiplied-out relations with sympy."""
    basis = monomials((d, d, d))
    index = {e: i for i, e in enumerate(basis)}
    rows = []
    for rel in pres.relations:
        rest = tuple(d - x for x in pres.degree(rel))
        for u in monomials(rest):
            row = [0] * len(basis)
            for e, c in rel.terms.items():
                row[index[tuple(a + b for a, b in zip(u, e))]] = c
            rows.append(row)
    return len(basis) - sympy.Matrix(rows).rank()


def test_presentations():
    fam1 = family_presentation(1)
    assert fam1.relations[0] == v("s1") * v("r23") + v("s2") * v("r13")
    assert fam1.relations[1] == v("q1") * v("r23") + v("q2") * v("r13") + v("q3") * v("r12")
    assert family_presentation(2).relations == fam1.relations
    assert [fam1.degree(r) for r in fam1.relations] == [(1, 1, 0), (0, 1, 1)]
    assert len(family_presentation(1, 0).relations[1].terms) == 2
    assert len(family_presentation(2, 0).relations[1].terms) == 2
    with pytest.raises(ValueError):
        family_presentation(3)


def test_presentation_relations_hold_on_coordinates():
    coords = plucker_coords_3d()
    for rel in family_presentation(1).relations:
        total = None
        for e, c in rel.terms.items():
            term = c
            for name, k in zip(VARIABLES, e):
                for _ in range(k):
                    term = coords[name] * term
            total = term if total is None else total + term
        assert total.is_zero()


def test_presentation_json():
    data = json.loads(json.dumps(family_presentation(2, 0).to_json()))
    assert data["family"] == 2 and data["tau"] == "0"
    assert [r["degree"] for r in data["relations"]] == [[1, 1, 0], [0, 1, 1]]


def test_monomial_counts():
    for d in range(4):
        assert len(monomials((d, d, d))) == (d + 1) * ((d + 1) * (d + 2) // 2) ** 2
    assert monomials((-1, 0, 0)) == ()


@pytest.mark.parametrize("d", [0, 1, 2])
def test_fiber_dimension_against_sympy(d):
    for pres in (family_presentation(1), family_presentation(1, 0), family_presentation(2, 0)):
        assert fiber_dimension(pres, d) == sympy_fiber_dimension(pres, d)


@pytest.mark.parametrize("d", range(5))
def test_fibers_match_hilbert_polynomial(d):
    assert fiber_dimension(family_presentation(1), d) == HP[d]
    assert congruence_count(family_presentation(1, 0), d) == HP[d]
    assert congruence_count(family_presentation(2, 0), d) == HP[d]


@pytest.mark.parametrize("d", range(4))
def test_special_fiber_rank_equals_classes(d):
    for family in (1, 2):
        pres = family_presentation(family, 0)
        assert fiber_dimension(pres, d) == congruence_count(pres, d)


@settings(max_examples=15)
@given(st.integers(0, 10**6))
def test_congruence_count_is_order_independent(seed):
    pres = family_presentation(2, 0)
    assert congruence_count(pres, 2, seed=seed) == 51


def test_pure_difference_form():
    flips, pairs = pure_difference_form(family_presentation(1, 0).relations)
    assert flips == ("r23",)
    assert len(pairs) == 2
    with pytest.raises(NotBinomialError):
        pure_difference_form(family_presentation(1, 1).relations)
    with pytest.raises(NotBinomialError):
        pure_difference_form([v("s1") * v("r23") + 2 * v("s2") * v("r13")])


def test_hilbert_polynomial_closed_form():
    assert [hilbert_polynomial_Z(d) for d in range(6)] == [1, 13, 51, 130, 265, 471]


def test_d3_parametrization():
    assert d3_parametrization_valid()
    _, pairs = pure_difference_form(family_presentation(1, 0).relations)
    for a, b in pairs:
        assert d3_image(a) == d3_image(b)


@pytest.mark.parametrize("d", range(5))
def test_component_counts(d):
    counts = component_counts(d)
    assert counts["D3"] == d3_count(d) == ehrhart_D3(d) == (d + 1) ** 2 * (2 * d + 1)
    assert counts["G"] == g_count(d) == ehrhart_G(d)
    assert counts["K2"] == ehrhart_K2(d)
    assert counts["fiber"] == HP[d]


@pytest.mark.parametrize("d", range(5))
def test_intersection_counted_directly(d):
    r23, r13 = VARIABLES.index("r23"), VARIABLES.index("r13")
    on_g = {d3_image(e) for e in monomials((d, d, d)) if e[r23] == 0 and e[r13] == 0}
    assert len(on_g) == ehrhart_K2(d)


def test_series_numerators_against_sympy():
    t, d = sympy.symbols("t d")
    cases = [(ehrhart_D3, 4, (1, 8, 3)), (ehrhart_G, 4, (1, 2)), (ehrhart_K2, 3, (1, 2)), (hilbert_polynomial_Z, 4, (1, 9, 5))]
    for f, power, want in cases:
        values = [f(k) for k in range(8)]
        assert ehrhart_series_numerator(values, power) == want
        numer = sum(c * t**k for k, c in enumerate(want))
        series = sympy.series(numer / (1 - t) ** power, t, 0, 8).removeO()
        assert [series.coeff(t, k) for k in range(8)] == values


def test_d3_polytope_is_a_cube():
    cube = d3_polytope(1)
    assert cube.dimension == 3
    assert len(cube.vertices) == 8 and len(cube.facets) == 6


def test_hull_small_polytopes():
    simplex = hull_faces_3d([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 0)])
    assert (len(simplex.vertices), len(simplex.facets)) == (4, 4)
    pyramid = hull_faces_3d([(0, 0, 0), (2, 0, 0), (0, 2, 0), (2, 2, 0), (1, 1, 1), (1, 1, 0)])
    assert (len(pyramid.vertices), len(pyramid.facets)) == (5, 5)
    assert hull_faces_3d([(0, 0, 0), (1, 0, 0), (0, 1, 0)]).dimension == 2


def test_verify_example3():
    report = verify_example3(4)
    assert report.passed, [c.to_json() for c in report.failures()]
    data = json.loads(json.dumps(report.to_json()))
    assert data["passed"] and len(data["checks"]) == len(report.checks)
    with pytest.raises(ValueError):
        verify_example3(2)
