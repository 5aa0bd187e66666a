#!/usr/bin/env python3
# File name   : algebra_core.py
# Description : Exact sparse multivariate polynomials over the rationals
# Author      : gsvindex developers
# Date        : 2026/10/16
"""
Sparse multivariate polynomials with exact rational coefficients.

A polynomial maps exponent tuples (one entry per variable) to nonzero
Fractions.  Objects are immutable and hashable, so they can key caches and
be shared between worker threads.
"""
import dataclasses
import itertools
from fractions import Fraction

from .errors import ArityMismatch, SingularMatrix


def default_names(nvars):
    return tuple('x%d' % (i + 1) for i in range(nvars))


def grlex_key(exponent):
    return (sum(exponent), exponent)


class Polynomial:
    __slots__ = ('terms', 'nvars', 'names', '_hash')

    def __init__(self, terms=None, nvars=None, names=None):
        if names is not None:
            names = tuple(names)
            if nvars is None:
                nvars = len(names)
        if nvars is None:
            raise ArityMismatch('polynomial needs a variable count')
        if names is None:
            names = default_names(nvars)
        if len(names) != nvars:
            raise ArityMismatch('%d names for %d variables' % (len(names), nvars))
        clean = {}
        for exponent, coeff in (terms or {}).items():
            exponent = tuple(exponent)
            if len(exponent) != nvars:
                raise ArityMismatch('exponent %r has wrong length for %d variables'
                                    % (exponent, nvars))
            if any(e < 0 for e in exponent):
                raise ValueError('negative exponent %r' % (exponent,))
            coeff = Fraction(coeff)
            if coeff:
                clean[exponent] = clean.get(exponent, 0) + coeff
                if not clean[exponent]:
                    del clean[exponent]
        self.terms = clean
        self.nvars = nvars
        self.names = names
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, nvars, names=None):
        return cls({}, nvars, names)

    @classmethod
    def constant(cls, value, nvars, names=None):
        return cls({(0,) * nvars: value}, nvars, names)

    @classmethod
    def variable(cls, index, nvars, names=None):
        if not 0 <= index < nvars:
            raise ArityMismatch('variable index %d out of range for %d variables'
                                % (index, nvars))
        exponent = [0] * nvars
        exponent[index] = 1
        return cls({tuple(exponent): 1}, nvars, names)

    @classmethod
    def monomial(cls, exponent, coeff=1, names=None):
        exponent = tuple(exponent)
        return cls({exponent: coeff}, len(exponent), names)

    @classmethod
    def _raw(cls, terms, nvars, names):
        # terms already canonical
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.nvars = nvars
        obj.names = names
        obj._hash = None
        return obj

    # queries
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def coefficient(self, exponent):
        return self.terms.get(tuple(exponent), Fraction(0))

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def order(self):
        """Lowest total degree of a term; None for the zero polynomial."""
        if not self.terms:
            return None
        return min(sum(e) for e in self.terms)

    def sorted_terms(self, descending=True):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=descending)

    def leading(self):
        return max(self.terms.items(), key=lambda t: grlex_key(t[0]))

    def homogeneous_part(self, degree):
        return Polynomial._raw({e: c for e, c in self.terms.items() if sum(e) == degree},
                               self.nvars, self.names)

    def truncate(self, order):
        """Drop every term of total degree >= order."""
        return Polynomial._raw({e: c for e, c in self.terms.items() if sum(e) < order},
                               self.nvars, self.names)

    def with_names(self, names):
        names = tuple(names)
        if len(names) != self.nvars:
            raise ArityMismatch('%d names for %d variables' % (len(names), self.nvars))
        return Polynomial._raw(self.terms, self.nvars, names)

    # arithmetic
    def _check(self, other):
        if other.nvars != self.nvars:
            raise ArityMismatch('polynomials in %d and %d variables'
                                % (self.nvars, other.nvars))

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.nvars, self.names)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(out, self.nvars, self.names)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self.terms.items()}, self.nvars, self.names)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(other, self)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        if not self.terms or not other.terms:
            return Polynomial._raw({}, self.nvars, self.names)
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return Polynomial._raw({e: c for e, c in out.items() if c}, self.nvars, self.names)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(other, self)
        return NotImplemented

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError('polynomial powers need a nonnegative integer exponent')
        result = Polynomial.constant(1, self.nvars, self.names)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.nvars, self.names)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        from .parser import format_polynomial
        return format_polynomial(self)

    def __repr__(self):
        return 'Polynomial(%r)' % str(self)

    # calculus and substitution
    def derivative(self, index):
        return partial_derivative(self, index)

    def compose_linear(self, matrix):
        """Return p(M z) for a square rational matrix M."""
        n = self.nvars
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ArityMismatch('substitution matrix must be %dx%d' % (n, n))
        forms = [Polynomial({tuple(1 if k == j else 0 for k in range(n)): matrix[i][j]
                             for j in range(n)}, n, self.names) for i in range(n)]
        powers = [[Polynomial.constant(1, n, self.names)] for _ in range(n)]
        result = Polynomial.zero(n, self.names)
        for exponent, coeff in self.terms.items():
            term = Polynomial.constant(coeff, n, self.names)
            for i, e in enumerate(exponent):
                while len(powers[i]) <= e:
                    powers[i].append(powers[i][-1] * forms[i])
                term = term * powers[i][e]
            result = result + term
        return result


class PolyMatrix:
    """Square matrix of polynomials."""

    def __init__(self, entries):
        rows = tuple(tuple(row) for row in entries)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ArityMismatch('polynomial matrix must be square')
        if n == 0:
            raise ArityMismatch('empty polynomial matrix')
        self.entries = rows
        self.size = n
        self.nvars = rows[0][0].nvars
        self.names = rows[0][0].names

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return 'PolyMatrix(%s)' % [[str(p) for p in row] for row in self.entries]

    def one(self):
        return Polynomial.constant(1, self.nvars, self.names)

    def submatrix(self, rows, cols):
        return PolyMatrix([[self.entries[i][j] for j in cols] for i in rows])

    def shift_diagonal(self, p):
        """Return M - p * Id."""
        return PolyMatrix([[self.entries[i][j] - p if i == j else self.entries[i][j]
                            for j in range(self.size)] for i in range(self.size)])

    def scale_row(self, i, p):
        return PolyMatrix([[q * p for q in row] if k == i else row
                           for k, row in enumerate(self.entries)])

    def det(self):
        if self.size <= 3:
            return _cofactor_det(self.entries)
        return _bareiss_det(self.entries)


def _cofactor_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Polynomial.zero(rows[0][0].nvars, rows[0][0].names)
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = rows[0][j] * _cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _bareiss_det(rows):
    a = [list(row) for row in rows]
    n = len(a)
    sign = 1
    prev = Polynomial.constant(1, a[0][0].nvars, a[0][0].names)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return Polynomial.zero(prev.nvars, prev.names)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                quotient = divide_exact(num, prev)
                if quotient is None:
                    raise ArithmeticError('Bareiss step is not an exact division')
                a[i][j] = quotient
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


# Ring operations

def add(p, q):
    p._check(q)
    return p + q


def mul(p, q):
    p._check(q)
    return p * q


def scale(r, p):
    r = Fraction(r)
    if not r:
        return Polynomial._raw({}, p.nvars, p.names)
    return Polynomial._raw({e: r * c for e, c in p.terms.items()}, p.nvars, p.names)


def divide_exact(p, q):
    """Return p / q when q divides p in the polynomial ring, else None."""
    p._check(q)
    if q.is_zero():
        raise ZeroDivisionError('division by the zero polynomial')
    lead_e, lead_c = q.leading()
    quotient = {}
    rest = p
    while not rest.is_zero():
        e, c = rest.leading()
        shift = tuple(a - b for a, b in zip(e, lead_e))
        if any(s < 0 for s in shift):
            return None
        factor = c / lead_c
        quotient[shift] = quotient.get(shift, 0) + factor
        rest = rest - Polynomial._raw({shift: factor}, p.nvars, p.names) * q
    return Polynomial(quotient, p.nvars, p.names)


def partial_derivative(p, index):
    if not 0 <= index < p.nvars:
        raise ArityMismatch('no variable %d in %d variables' % (index, p.nvars))
    out = {}
    for exponent, coeff in p.terms.items():
        e = exponent[index]
        if e:
            shifted = exponent[:index] + (e - 1,) + exponent[index + 1:]
            out[shifted] = coeff * e
    return Polynomial._raw(out, p.nvars, p.names)


def apply_vector_field(X, p):
    """X(p) = sum_i X_i * dp/dz_i."""
    if len(X) != p.nvars:
        raise ArityMismatch('vector field has %d components for %d variables'
                            % (len(X), p.nvars))
    result = Polynomial.zero(p.nvars, p.names)
    for i, component in enumerate(X):
        component_d = partial_derivative(p, i)
        if not component_d.is_zero() and not component.is_zero():
            result = result + component * component_d
    return result


def jacobian(X):
    n = len(X)
    return PolyMatrix([[partial_derivative(X[i], j) for j in range(n)] for i in range(n)])


def sigma(M, k):
    """Sum of the k x k principal minors; sigma_0 = 1 and sigma_n = det M."""
    if not 0 <= k <= M.size:
        raise ArityMismatch('sigma_%d undefined for a %dx%d matrix' % (k, M.size, M.size))
    if k == 0:
        return M.one()
    total = Polynomial.zero(M.nvars, M.names)
    for idx in itertools.combinations(range(M.size), k):
        total = total + M.submatrix(idx, idx).det()
    return total


def chat_numerator(X, c):
    """sum_{k=0}^{n-1} (-1)^k c^k sigma_{n-k-1}(DX)."""
    n = len(X)
    DX = jacobian(X)
    total = Polynomial.zero(c.nvars, c.names)
    power = Polynomial.constant(1, c.nvars, c.names)
    for k in range(n):
        term = power * sigma(DX, n - k - 1)
        total = total + term if k % 2 == 0 else total - term
        power = power * c
    return total


def invert_matrix(M):
    n = len(M)
    a = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            raise SingularMatrix('matrix %r is singular' % (M,))
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
    return [row[n:] for row in a]


def matmul(A, B):
    n = len(A)
    return [[sum((Fraction(A[i][k]) * B[k][j] for k in range(n)), Fraction(0))
             for j in range(n)] for i in range(n)]


def apply_linear_change(spec, M):
    """Pull the problem back along z -> M z.

    f' = f o M, X' = M^{-1} (X o M) and c' = c o M, so X'(f') = c' f'.
    """
    n = len(spec.vars)
    M = [[Fraction(v) for v in row] for row in M]
    if len(M) != n or any(len(row) != n for row in M):
        raise ArityMismatch('coordinate change must be %dx%d' % (n, n))
    Minv = invert_matrix(M)
    f_new = spec.f.compose_linear(M)
    pulled = [x.compose_linear(M) for x in spec.X]
    X_new = []
    for i in range(n):
        component = Polynomial.zero(n, spec.f.names)
        for j in range(n):
            if Minv[i][j]:
                component = component + scale(Minv[i][j], pulled[j])
        X_new.append(component)
    c_new = None if spec.c_hint is None else spec.c_hint.compose_linear(M)
    previous = spec.coordinate_change
    total = M if previous is None else matmul(previous, M)
    return dataclasses.replace(spec, f=f_new, X=tuple(X_new), c_hint=c_new,
                               coordinate_change=tuple(tuple(row) for row in total))
