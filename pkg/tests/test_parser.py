from fractions import Fraction

import pytest

from conftest import XY, poly, random_polynomial
from gsvindex.algebra_core import Polynomial
from gsvindex.errors import (ArityMismatch, NotAGerm, PolySyntaxError, TangencyMismatch,
                             UnknownVariable)
from gsvindex.parser import (format_polynomial, format_problem, parse_polynomial,
                             parse_problem, split_names)

D4_TEXT = """\
# D_4 with m = 3
vars: x y
f: x^2*y + y^3
X: 1/3*x^4, 1/3*x^3*y
"""


def test_parse_d4_germ():
    p = poly('x^2*y + y^3')
    assert p.terms == {(2, 1): 1, (0, 3): 1}


def test_parse_zero_and_rational_coefficient():
    assert poly('0').is_zero()
    assert poly('1/3*x^4').terms == {(4, 0): Fraction(1, 3)}
    assert poly('x^4/3') == poly('1/3*x^4')


def test_parse_merges_and_cancels_terms():
    assert poly('x*y + y*x - 2*x*y').is_zero()
    assert poly('(x + y)^2') == poly('x^2 + 2*x*y + y^2')


def test_power_binds_tighter_than_unary_minus():
    assert poly('-x^2').terms == {(2, 0): -1}
    assert poly('-3/2*x^2*y').terms == {(2, 1): Fraction(-3, 2)}


def test_multi_letter_names():
    p = parse_polynomial('alpha*beta_2 - beta_2^2', ['alpha', 'beta_2'])
    assert p.terms == {(1, 1): 1, (0, 2): -1}


@pytest.mark.parametrize('text, position', [
    ('2x', 1),
    ('x + z', 4),
])
def test_errors_carry_positions(text, position):
    with pytest.raises(PolySyntaxError) as info:
        poly(text)
    assert info.value.position == position


def test_unknown_variable_is_a_syntax_error_subclass():
    with pytest.raises(UnknownVariable):
        poly('x*w')


@pytest.mark.parametrize('text', [
    'x*(y + 1',
    'x + y)',
    'x/y',
    'x/0',
    'x^2^3',
    'x^y',
    'x $ y',
    '',
    'x +',
    'x^99999999999',
])
def test_rejected_expressions(text):
    with pytest.raises(PolySyntaxError):
        poly(text)


def test_format_fixed_renderings():
    assert format_polynomial(Polynomial.zero(2, XY)) == '0'
    assert format_polynomial(poly('y + x')) == 'x + y'
    assert format_polynomial(poly('y^3 + x^2*y')) == 'x^2*y + y^3'
    assert format_polynomial(poly('x - 1/3*y')) == 'x - 1/3*y'
    assert format_polynomial(poly('3 - y + x^2')) == 'x^2 - y + 3'
    assert format_polynomial(poly('-x')) == '-x'
    assert format_polynomial(poly('x^4/3')) == '1/3*x^4'


@pytest.mark.parametrize('names', [XY, ('x', 'y', 'z'), ('u1', 'u2', 'u3', 'u4')])
def test_format_parse_round_trip(rng, names):
    n = len(names)
    for _ in range(150):
        p = random_polynomial(rng, n, 6, min_degree=0, terms=rng.randint(1, 6), bound=7,
                              names=names)
        p = p * Fraction(rng.randint(-5, 5), rng.randint(1, 6))
        assert parse_polynomial(format_polynomial(p), names) == p


def test_parse_problem_d4_verifies_tangency():
    spec = parse_problem(D4_TEXT + 'c: x^3\n')
    assert spec.vars == XY
    assert spec.n == 2
    assert spec.c_hint == poly('x^3')
    assert spec.X[0] == poly('1/3*x^4')


def test_parse_problem_without_c():
    spec = parse_problem('vars: x y\nf: x^2 + y^2\nX: x, y\n')
    assert spec.c_hint is None
    assert spec.f == poly('x^2 + y^2')


def test_parse_problem_rejects_non_germ():
    with pytest.raises(NotAGerm):
        parse_problem('vars: x y\nf: x^2 + y^2 + 1\nX: x, y\n')
    with pytest.raises(NotAGerm):
        parse_problem('vars: x y\nf: x^2 + y^2\nX: x + 1, y\n')


def test_parse_problem_arity():
    with pytest.raises(ArityMismatch):
        parse_problem('vars: x y\nf: x^2 + y^2\nX: x\n')
    with pytest.raises(ArityMismatch):
        parse_problem('vars: x\nf: x^2\nX: x\n')


def test_parse_problem_wrong_declared_c():
    with pytest.raises(TangencyMismatch):
        parse_problem(D4_TEXT + 'c: x^2\n')


def test_parse_problem_reports_line_and_column():
    with pytest.raises(PolySyntaxError) as info:
        parse_problem('vars: x y\nf: x^2*y + 2y\nX: x, y\n')
    err = info.value
    assert err.line == 2
    assert err.position == 12
    assert 'line 2, column 13' in str(err)


def test_parse_problem_unknown_key_and_missing_line():
    with pytest.raises(PolySyntaxError):
        parse_problem(D4_TEXT + 'g: x\n')
    with pytest.raises(PolySyntaxError):
        parse_problem('vars: x y\nf: x^2 + y^2\n')


def test_format_problem_round_trip(d4):
    assert parse_problem(format_problem(d4)) == d4


def test_split_names():
    assert split_names('x, y  z') == ['x', 'y', 'z']
    with pytest.raises(PolySyntaxError):
        split_names('x 2y')
