#!/usr/bin/env python3
# File name   : parser.py
# Description : Polynomial expressions and problem files, in and out
# Author      : gsvindex developers
# Date        : 2026/10/16
"""
Text surface of gsvindex.

Grammar (explicit `*` is required, so multi-letter names are unambiguous):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*      division by nonzero constants only
    unary  := ('-' | '+') unary | power
    power  := atom ('^' INTEGER)?
    atom   := INTEGER | NAME | '(' expr ')'

`^` binds tighter than unary minus, so -x^2 is -(x^2).

Problem files hold `vars:`, `f:`, `X:` and an optional `c:` line; lines
starting with `#` are comments.
"""
import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra_core import Polynomial, apply_vector_field
from .errors import (ArityMismatch, NotAGerm, PolySyntaxError, TangencyMismatch,
                     UnknownVariable)

MAX_EXPONENT = 2 ** 31 - 1

NAME_RE = re.compile(r'[A-Za-z_][A-Za-z0-9_]*\Z')
_TOKEN_RE = re.compile(r'\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))')


@dataclass(frozen=True)
class ProblemSpec:
    vars: tuple
    f: Polynomial
    X: tuple
    c_hint: Polynomial = None
    coordinate_change: tuple = None

    @property
    def n(self):
        return len(self.vars)

    @classmethod
    def build(cls, names, f, X, c_hint=None):
        """Validate and assemble a problem from polynomials or expression strings."""
        names = tuple(names)
        if len(names) < 2:
            raise ArityMismatch('need at least 2 variables, got %d' % len(names))
        if len(set(names)) != len(names):
            raise PolySyntaxError('duplicate variable name in %s' % ', '.join(names))
        if isinstance(f, str):
            f = parse_polynomial(f, names)
        X = tuple(parse_polynomial(x, names) if isinstance(x, str) else x for x in X)
        if isinstance(c_hint, str):
            c_hint = parse_polynomial(c_hint, names)
        if len(X) != len(names):
            raise ArityMismatch('vector field has %d components for %d variables'
                                % (len(X), len(names)))
        for p in (f,) + X + ((c_hint,) if c_hint is not None else ()):
            if p.nvars != len(names):
                raise ArityMismatch('polynomial in %d variables, expected %d'
                                    % (p.nvars, len(names)))
        if f.constant_term():
            raise NotAGerm('f(0) = %s is not zero' % f.constant_term())
        if f.is_zero():
            raise NotAGerm('f is the zero polynomial')
        for i, x in enumerate(X):
            if x.constant_term():
                raise NotAGerm('X%d(0) = %s is not zero' % (i + 1, x.constant_term()))
        f = f.with_names(names)
        X = tuple(x.with_names(names) for x in X)
        if c_hint is not None:
            c_hint = c_hint.with_names(names)
            if apply_vector_field(X, f) != c_hint * f:
                raise TangencyMismatch('X(f) != (%s)*f' % format_polynomial(c_hint))
        return cls(names, f, X, c_hint)


class _Parser:
    def __init__(self, text, names):
        self.text = text
        self.index = {name: i for i, name in enumerate(names)}
        self.names = tuple(names)
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _tokenize(self, text):
        tokens = []
        i = 0
        while i < len(text):
            m = _TOKEN_RE.match(text, i)
            if m is None:
                break
            number, name, other = m.groups()
            if number is not None:
                tokens.append(('num', int(number), m.start(1)))
            elif name is not None:
                tokens.append(('name', name, m.start(2)))
            elif other is not None:
                if other not in '+-*/^()':
                    raise PolySyntaxError('unexpected character %r' % other, m.start(3))
                tokens.append((other, other, m.start(3)))
            i = m.end()
        tokens.append(('end', None, len(text)))
        return tokens

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def constant(self, value):
        return Polynomial.constant(value, len(self.names), self.names)

    def parse(self):
        if self.peek()[0] == 'end':
            raise PolySyntaxError('empty expression', 0)
        result = self.expr()
        token = self.peek()
        if token[0] != 'end':
            if token[0] in ('num', 'name', '('):
                raise PolySyntaxError('implicit multiplication is not allowed; use *', token[2])
            if token[0] == ')':
                raise PolySyntaxError('unbalanced parenthesis', token[2])
            raise PolySyntaxError('unexpected %r' % token[1], token[2])
        return result

    def expr(self):
        result = self.term()
        while self.peek()[0] in ('+', '-'):
            op = self.take()[0]
            rhs = self.term()
            result = result + rhs if op == '+' else result - rhs
        return result

    def term(self):
        result = self.unary()
        while self.peek()[0] in ('*', '/'):
            op, _, where = self.take()
            rhs = self.unary()
            if op == '*':
                result = result * rhs
            else:
                if not rhs.is_constant():
                    raise PolySyntaxError('division by a non-constant', where)
                value = rhs.constant_term()
                if not value:
                    raise PolySyntaxError('division by zero', where)
                result = result * (1 / value)
        return result

    def unary(self):
        kind = self.peek()[0]
        if kind == '-':
            self.take()
            return -self.unary()
        if kind == '+':
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] != '^':
            return base
        self.take()
        kind, value, where = self.take()
        if kind != 'num':
            raise PolySyntaxError('exponent must be a nonnegative integer literal', where)
        if value > MAX_EXPONENT:
            raise PolySyntaxError('exponent %d overflows' % value, where)
        if self.peek()[0] == '^':
            raise PolySyntaxError('chained exponents need parentheses', self.peek()[2])
        if value and base.terms and max(max(e) for e in base.terms) * value > MAX_EXPONENT:
            raise PolySyntaxError('exponent %d overflows' % value, where)
        return base ** value

    def atom(self):
        kind, value, where = self.take()
        if kind == 'num':
            return self.constant(value)
        if kind == 'name':
            if value not in self.index:
                raise UnknownVariable('unknown variable %r' % value, where)
            return Polynomial.variable(self.index[value], len(self.names), self.names)
        if kind == '(':
            inner = self.expr()
            token = self.peek()
            if token[0] != ')':
                raise PolySyntaxError('unbalanced parenthesis', token[2])
            self.take()
            return inner
        if kind == 'end':
            raise PolySyntaxError('unexpected end of expression', where)
        if kind == ')':
            raise PolySyntaxError('unbalanced parenthesis', where)
        raise PolySyntaxError('unexpected %r' % value, where)


def parse_polynomial(text, names):
    return _Parser(text, names).parse()


def split_names(text):
    names = [t for t in re.split(r'[\s,]+', text.strip()) if t]
    for name in names:
        if not NAME_RE.match(name):
            raise PolySyntaxError('bad variable name %r' % name)
    return names


def _shift(err, offset, line):
    position = None if err.position is None else err.position + offset
    return type(err)(err.message, position, line)


def parse_problem(text):
    fields = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith('#'):
            continue
        if ':' not in raw:
            raise PolySyntaxError("expected 'key: value'", raw.index(stripped[0]), lineno)
        key, _, value = raw.partition(':')
        key = key.strip()
        if key not in ('vars', 'f', 'X', 'c'):
            raise PolySyntaxError('unknown key %r' % key, raw.index(key), lineno)
        if key in fields:
            raise PolySyntaxError('duplicate key %r' % key, raw.index(key), lineno)
        fields[key] = (value, raw.index(':') + 1, lineno)
    for key in ('vars', 'f', 'X'):
        if key not in fields:
            raise PolySyntaxError('missing %r line' % key)

    value, offset, lineno = fields['vars']
    try:
        names = split_names(value)
    except PolySyntaxError as err:
        raise err.at_line(lineno)
    if len(names) < 2:
        raise ArityMismatch('need at least 2 variables, got %d' % len(names))

    def parse_at(text, offset, lineno):
        try:
            return parse_polynomial(text, names)
        except PolySyntaxError as err:
            raise _shift(err, offset, lineno)

    value, offset, lineno = fields['f']
    f = parse_at(value, offset, lineno)
    value, offset, lineno = fields['X']
    X = []
    start = 0
    for piece in value.split(','):
        X.append(parse_at(piece, offset + start, lineno))
        start += len(piece) + 1
    c_hint = None
    if 'c' in fields:
        value, offset, lineno = fields['c']
        c_hint = parse_at(value, offset, lineno)
    return ProblemSpec.build(names, f, X, c_hint)


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '%d/%d' % (value.numerator, value.denominator)


def _render_monomial(exponent, names):
    factors = []
    for name, e in zip(names, exponent):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append('%s^%d' % (name, e))
    return '*'.join(factors)


def format_polynomial(p):
    """Descending graded-lex rendering; parse_polynomial inverts it."""
    if p.is_zero():
        return '0'
    pieces = []
    for exponent, coeff in p.sorted_terms():
        monomial = _render_monomial(exponent, p.names)
        size = abs(coeff)
        if not monomial:
            body = format_rational(size)
        elif size == 1:
            body = monomial
        else:
            body = '%s*%s' % (format_rational(size), monomial)
        if not pieces:
            pieces.append('-' + body if coeff < 0 else body)
        else:
            pieces.append(('- ' if coeff < 0 else '+ ') + body)
    return ' '.join(pieces)


def format_problem(spec):
    lines = ['vars: %s' % ' '.join(spec.vars),
             'f: %s' % format_polynomial(spec.f),
             'X: %s' % ', '.join(format_polynomial(x) for x in spec.X)]
    if spec.c_hint is not None:
        lines.append('c: %s' % format_polynomial(spec.c_hint))
    return '\n'.join(lines) + '\n'
