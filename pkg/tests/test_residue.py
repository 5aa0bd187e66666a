from fractions import Fraction

import pytest
import sympy

from conftest import XY, poly, polys, random_form, random_polynomial, to_sympy
from gsvindex import config, residue
from gsvindex.algebra_core import PolyMatrix
from gsvindex.config import EngineConfig
from gsvindex.errors import ArityMismatch, NotRegular
from gsvindex.local_engine import colength
from gsvindex.residue import (grothendieck_residue, local_multiplicity, monomial_cover,
                              poincare_hopf_index, residue_from_cover)

D4_GENS = ('1/3*x^4', 'x^2*y + y^3')


def test_cover_of_maximal_ideal():
    cover = monomial_cover(polys('x', 'y'))
    assert cover.exponents == (1, 1)
    assert cover.exact
    assert cover.A == PolyMatrix([polys('1', '0'), polys('0', '1')])


def test_cover_of_monomial_sequence():
    cover = monomial_cover(polys('x^2', 'y^3'))
    assert cover.exponents == (2, 3)
    assert cover.A == PolyMatrix([polys('1', '0'), polys('0', '1')])


def test_exact_cover_for_d4_data():
    cover = monomial_cover(polys(*D4_GENS))
    assert cover.exact
    assert cover.exponents == (4, 5)
    for i in range(2):
        assert cover.residual(i).is_zero()


def test_basic_residues():
    assert grothendieck_residue(poly('1'), polys('x', 'y')) == 1
    assert grothendieck_residue(poly('(x + y)^2'), polys('x^2', 'y^2')) == 2
    h = poly('(x^2 + 3*y^2)*(2/3*x^3)')
    assert grothendieck_residue(h, polys(*D4_GENS)) == 6


def test_local_cover_when_generators_vanish_elsewhere():
    gens = polys('x - x^2', 'y')
    cover = monomial_cover(gens)
    assert not cover.exact
    assert cover.exponents == (1, 1)
    assert grothendieck_residue(poly('1'), gens) == 1
    assert poincare_hopf_index(gens) == 1


def test_poincare_hopf():
    assert poincare_hopf_index(polys('x', 'y')) == 1
    assert poincare_hopf_index(polys('x^2', 'y^3')) == 6
    assert poincare_hopf_index(polys('3*y^2', '-2*x')) == 2
    with pytest.raises(NotRegular):
        poincare_hopf_index(polys('1/3*x^4', '1/3*x^3*y'), EngineConfig(trunc_cap=12))


def test_shape_errors():
    with pytest.raises(ArityMismatch):
        grothendieck_residue(poly('1'), polys('x'))
    with pytest.raises(ArityMismatch):
        grothendieck_residue(poly('1', names=('x', 'y', 'z')), polys('x', 'y'))


def test_cover_is_cached():
    gens = polys(*D4_GENS)
    assert monomial_cover(gens) is monomial_cover(gens)


def test_cover_cache_is_bounded_and_clearable(monkeypatch):
    first, second = polys(*D4_GENS), polys('x', 'y')
    cover = monomial_cover(first)
    residue.clear_cache()
    assert monomial_cover(first) is not cover
    monkeypatch.setattr(config, 'COVER_CACHE_SIZE', 1)
    cover = monomial_cover(first)
    monomial_cover(second)
    assert monomial_cover(first) is not cover


# property suite over random homogeneous regular sequences

def _regular_pairs(rng, count):
    symbols = sympy.symbols('x y')
    found = 0
    while found < count:
        g1 = random_form(rng, rng.randint(1, 3))
        g2 = random_form(rng, rng.randint(1, 3))
        common = sympy.gcd(to_sympy(g1, symbols), to_sympy(g2, symbols))
        if sympy.Poly(common, *symbols).total_degree() > 0:
            continue
        found += 1
        yield [g1, g2]


def test_property_annihilation(rng, fast_config):
    for gens in _regular_pairs(rng, 100):
        q = random_polynomial(rng, 2, 3, min_degree=0, names=XY)
        for g in gens:
            assert grothendieck_residue(g * q, gens, fast_config) == 0


def test_property_linearity(rng, fast_config):
    for gens in _regular_pairs(rng, 100):
        h1 = random_polynomial(rng, 2, 4, min_degree=0, names=XY)
        h2 = random_polynomial(rng, 2, 4, min_degree=0, names=XY)
        a, b = Fraction(rng.randint(-4, 4), 3), Fraction(rng.randint(-4, 4))
        left = grothendieck_residue(h1 * a + h2 * b, gens, fast_config)
        right = (a * grothendieck_residue(h1, gens, fast_config)
                 + b * grothendieck_residue(h2, gens, fast_config))
        assert left == right


def test_property_cover_independence(rng, fast_config):
    for gens in _regular_pairs(rng, 100):
        cover = monomial_cover(gens, fast_config)
        h = random_polynomial(rng, 2, 4, min_degree=0, names=XY)
        base = residue_from_cover(h, cover)
        for i in range(2):
            raised = cover.raised(i)
            assert raised.residual(i).is_zero()
            assert residue_from_cover(h, raised) == base


def test_property_multiplicity_matches_colength(rng, fast_config):
    for gens in _regular_pairs(rng, 100):
        expected = gens[0].degree() * gens[1].degree()
        assert colength(gens, fast_config).value == expected
        assert local_multiplicity(gens, fast_config) == expected


def test_property_monomial_denominators(rng):
    for _ in range(100):
        a, b = rng.randint(1, 5), rng.randint(1, 5)
        gens = [poly('x^%d' % a), poly('y^%d' % b)]
        h = random_polynomial(rng, 2, 8, min_degree=0, terms=6, names=XY)
        assert grothendieck_residue(h, gens) == h.coefficient((a - 1, b - 1))
