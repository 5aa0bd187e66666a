import random

import pytest
import sympy

from gsvindex import families
from gsvindex.algebra_core import Polynomial
from gsvindex.config import EngineConfig
from gsvindex import local_engine, residue
from gsvindex.parser import ProblemSpec, parse_polynomial

XY = ('x', 'y')

DK_CASES = [(4, 2), (4, 3), (5, 2), (5, 3), (6, 2)]


def poly(text, names=XY):
    return parse_polynomial(text, names)


def polys(*texts, names=XY):
    return [parse_polynomial(t, names) for t in texts]


def random_polynomial(rng, nvars, max_degree, min_degree=1, terms=3, bound=3, names=None):
    out = {}
    for _ in range(terms):
        degree = rng.randint(min_degree, max_degree)
        cut = sorted(rng.randint(0, degree) for _ in range(nvars - 1))
        exponent = tuple(b - a for a, b in zip([0] + cut, cut + [degree]))
        out[exponent] = out.get(exponent, 0) + rng.randint(-bound, bound)
    return Polynomial(out, nvars, names)


def random_form(rng, degree, bound=3):
    """Homogeneous polynomial in x, y of the given degree, never zero."""
    while True:
        p = Polynomial({(degree - i, i): rng.randint(-bound, bound) for i in range(degree + 1)},
                       2, XY)
        if not p.is_zero():
            return p


def to_sympy(p, symbols):
    total = sympy.Integer(0)
    for exponent, coeff in p.terms.items():
        term = sympy.Rational(coeff.numerator, coeff.denominator)
        for s, e in zip(symbols, exponent):
            term *= s ** e
        total += term
    return sympy.expand(total)


@pytest.fixture(autouse=True)
def fresh_caches():
    local_engine.clear_cache()
    residue.clear_cache()
    yield


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture
def d4():
    return families.dk(4, 3)


@pytest.fixture
def quadric2():
    return ProblemSpec.build(XY, 'x^2 + y^2', ['x', 'y'])


@pytest.fixture
def hamiltonian():
    return ProblemSpec.build(XY, 'x^2 + y^3', ['3*y^2', '-2*x'])


@pytest.fixture
def fast_config():
    return EngineConfig(trunc_cap=12)
