from fractions import Fraction

import pytest

from conftest import DK_CASES, XY, polys, random_polynomial
from gsvindex import families
from gsvindex.complex_oracle import (FormSpace, contraction_matrix, descends, homology_at,
                                     homology_dims, homology_dims_star, relation_span,
                                     rss_megabytes, stabilized_homology)
from gsvindex.config import EngineConfig
from gsvindex.errors import NoStabilization, OracleRefused
from gsvindex.index_core import Invariants
from gsvindex.parser import ProblemSpec


def test_form_space_layout():
    space = FormSpace(2, 1, 3)
    assert space.width == 2
    assert space.size == 12
    assert space.column((0, 0), (0,)) == 0
    assert space.column((1, 0), (1,)) == 3
    assert FormSpace(3, 2, 2).size == 4 * 3


def test_contraction_of_euler_field():
    X = polys('x', 'y')
    one_forms = contraction_matrix(X, 1, 3)
    assert one_forms.columns[0] == {1: 1}      # dx -> x
    assert one_forms.columns[1] == {2: 1}      # dy -> y
    two_forms = contraction_matrix(X, 2, 3)
    assert two_forms.columns[0] == {3: 1, 4: -1}  # dx^dy -> x dy - y dx


def test_contraction_degree_range():
    with pytest.raises(ValueError):
        contraction_matrix(polys('x', 'y'), 3, 3)


@pytest.mark.parametrize('names', [XY, ('x', 'y', 'z')])
def test_contraction_squares_to_zero(rng, names):
    n = len(names)
    for _ in range(10):
        X = [random_polynomial(rng, n, 3, names=names) for _ in range(n)]
        for i in range(2, n + 1):
            assert contraction_matrix(X, i - 1, 5).compose(contraction_matrix(X, i, 5)).is_zero()


def test_relations_descend(d4):
    for i in (1, 2):
        assert descends(d4, i, 6)


def test_zero_field_gives_the_forms_on_the_curve():
    spec = ProblemSpec.build(XY, 'x^2 + y^2', ['0', '0'])
    h_star, _ = homology_at(spec, 4)
    for i in range(3):
        assert h_star[i] == FormSpace(2, i, 4).size - relation_span(spec.f, i, 4).rank


def test_quadric_homology(quadric2):
    assert homology_dims_star(quadric2) == [1, 0, 0]
    h, chi = homology_dims(quadric2)
    assert h == [1, 1]
    assert chi == 0


def test_d4_homology(d4):
    result = stabilized_homology(d4)
    assert result.h_star == [10, 4, 4]
    assert result.h == [10, 4]
    assert result.chi == 6
    assert result.orders[-1] - result.orders[-2] == 2
    assert result.peak_rss > 0


@pytest.mark.parametrize('spec', [families.dk(k, m) for k, m in DK_CASES]
                         + [families.ak_euler(mu) for mu in range(1, 5)]
                         + [families.quadric(2)],
                         ids=['D%d_m%d' % case for case in DK_CASES]
                         + ['A%d' % mu for mu in range(1, 5)] + ['quadric2'])
def test_oracle_reproduces_the_formulas(spec):
    inv = Invariants(spec)
    dims = inv.dims()
    result = stabilized_homology(spec)
    assert result.h_star == dims.h_star
    assert result.h == dims.h
    assert result.chi == inv.homological_index()


def test_quadric_in_three_variables():
    result = stabilized_homology(families.quadric(3))
    assert result.h_star == [1, 0, 0, 0]
    assert result.h == [1, 0, 1]
    assert result.chi == 2


def test_oracle_refusals(d4):
    with pytest.raises(OracleRefused):
        homology_at(families.quadric(4), 4)
    with pytest.raises(OracleRefused):
        homology_at(d4, 40)
    with pytest.raises(NoStabilization) as info:
        stabilized_homology(d4, EngineConfig(oracle_cap=5))
    assert info.value.orders == []


def test_rss_is_reported():
    assert rss_megabytes() > 0


def test_homology_ignores_the_scale_of_the_field():
    # components of X with different denominators
    spec = families.dk(5, 2)
    expected = homology_at(spec, 10)
    assert expected[0] == [9, 4, 4]
    for factor in (8, Fraction(1, 3)):
        scaled = ProblemSpec.build(spec.vars, spec.f, [factor * x for x in spec.X])
        assert homology_at(scaled, 10) == expected
