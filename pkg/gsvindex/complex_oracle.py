#!/usr/bin/env python3
# File name   : complex_oracle.py
# Description : Homology of the contraction complexes by truncated linear algebra
# Author      : gsvindex developers
# Date        : 2026/10/16
"""
Brute-force check of the homology dimensions.

Forms monomial * dz_J (|J| = i) of polynomial degree < N are indexed by
column = monomial_column * C(n, i) + position of J, so lower orders are
prefixes again.  On the hypersurface the i-forms are
Omega^i / R^i with R^i = f*Omega^i + df ^ Omega^(i-1), and

    dim H_i = rank(Z + R^i) - rank(B + R^i)

where Z are the forms contracted into R^(i-1) and B the contractions of
(i+1)-forms.  Z is found at a lifted order and projected back.
"""
import itertools
import logging
from dataclasses import dataclass, field

import psutil

from . import config as _config
from .echelon import Echelon, integer_vector
from .errors import NoStabilization, OracleRefused
from .local_engine import monomial_index

log = logging.getLogger(__name__)


def rss_megabytes():
    """Resident memory of this process in MB, using psutil."""
    return psutil.Process().memory_info().rss / (1024.0 * 1024.0)


class FormSpace:
    """Truncated i-forms in n variables below order N."""

    def __init__(self, n, i, N):
        self.n = n
        self.i = i
        self.N = N
        self.subsets = list(itertools.combinations(range(n), i))
        self.position = {J: k for k, J in enumerate(self.subsets)}
        self.index = monomial_index(n)
        self.index.ensure(N)

    @property
    def width(self):
        return len(self.subsets)

    @property
    def size(self):
        return self.index.size(self.N) * self.width

    def column(self, exponent, J):
        return self.index.column(exponent) * self.width + self.position[J]

    def basis(self):
        for col in range(self.size):
            mono, pos = divmod(col, self.width)
            yield col, self.index.monomials[mono], self.subsets[pos]

    def vector(self, form, shift=None):
        """Integer vector of a form {J: Polynomial} times x^shift, truncated below N."""
        out = {}
        for J, p in form.items():
            for exponent, coeff in p.terms.items():
                if shift is not None:
                    exponent = tuple(a + b for a, b in zip(exponent, shift))
                if sum(exponent) < self.N:
                    col = self.column(exponent, J)
                    out[col] = out.get(col, 0) + coeff
        return integer_vector({c: v for c, v in out.items() if v})[0]


@dataclass
class LinearMap:
    domain: int
    codomain: int
    columns: list

    def apply(self, vec):
        out = {}
        for col, value in vec.items():
            for row, entry in self.columns[col].items():
                w = out.get(row, 0) + value * entry
                if w:
                    out[row] = w
                else:
                    out.pop(row, None)
        return out

    def compose(self, other):
        """self o other."""
        return LinearMap(other.domain, self.codomain,
                         [self.apply(column) for column in other.columns])

    def is_zero(self):
        return not any(self.columns)


def _contract(J, X):
    """Interior product of dz_J with X as {J minus j: X_j with sign}."""
    form = {}
    for pos, j in enumerate(J):
        rest = J[:pos] + J[pos + 1:]
        form[rest] = X[j] if pos % 2 == 0 else -X[j]
    return form


def contraction_matrix(X, i, N, codomain_order=None):
    """Matrix of contraction with X from i-forms to (i-1)-forms below order N."""
    n = len(X)
    if not 1 <= i <= n:
        raise ValueError('contraction degree %d outside 1..%d' % (i, n))
    source = FormSpace(n, i, N)
    target = FormSpace(n, i - 1, codomain_order or N)
    columns = []
    for col, exponent, J in source.basis():
        image = {}
        for K, p in _contract(J, X).items():
            for e, coeff in p.terms.items():
                e = tuple(a + b for a, b in zip(e, exponent))
                if sum(e) < target.N:
                    row = target.column(e, K)
                    image[row] = image.get(row, 0) + coeff
        columns.append({r: v for r, v in image.items() if v})
    return LinearMap(source.size, target.size, columns)


def relation_generators(f, i):
    """O-module generators of f*Omega^i + df ^ Omega^(i-1) as forms {J: Polynomial}."""
    n = f.nvars
    gens = [{J: f} for J in itertools.combinations(range(n), i)]
    if i >= 1:
        grads = [f.derivative(j) for j in range(n)]
        for L in itertools.combinations(range(n), i - 1):
            form = {}
            for j in range(n):
                if j in L:
                    continue
                sign = -1 if sum(1 for l in L if l < j) % 2 else 1
                J = tuple(sorted(L + (j,)))
                form[J] = grads[j] if sign > 0 else -grads[j]
            gens.append({J: p for J, p in form.items() if not p.is_zero()})
    return [g for g in gens if g]


def relation_span(f, i, N):
    space = FormSpace(f.nvars, i, N)
    echelon = Echelon()
    for form in relation_generators(f, i):
        low = min(p.order() for p in form.values())
        if low >= N:
            continue
        for shift in space.index.monomials[:space.index.size(N - low)]:
            vec = space.vector(form, shift)
            if vec:
                echelon.insert(vec)
    return echelon


def _boundaries(X, i, N, relations):
    """B + R^i below order N, as an echelon."""
    work = relations.copy()
    if i < len(X):
        for column in contraction_matrix(X, i + 1, N).columns:
            if column:
                work.insert(integer_vector(column)[0])
    return work


def _cycles(X, f, i, N, config, relations):
    """Z + R^i below order N; Z lifted to a higher order first."""
    if i == 0:
        return FormSpace(len(X), 0, N).size
    low = min((x.order() for x in X if not x.is_zero()), default=N)
    domain = N + config.slack(N)
    codomain = domain + low
    lowered = relation_span(f, i - 1, codomain)
    image = contraction_matrix(X, i, domain, codomain)
    limit = FormSpace(len(X), i, N).size
    work = relations.copy()
    for col, column in enumerate(image.columns):
        if column:
            ints, scale = integer_vector(column)
            relation = lowered.insert(ints, {col: scale})
        else:
            relation = {col: 1}
        if relation is not None:
            projected = {c: v for c, v in relation.items() if c < limit}
            if projected:
                work.insert(integer_vector(projected)[0])
    return work.rank


def descends(spec, i, N):
    """True if contraction maps R^i into R^(i-1) below order N."""
    X = list(spec.X)
    target = relation_span(spec.f, i - 1, N)
    space = FormSpace(spec.n, i, N)
    contraction = contraction_matrix(X, i, N)
    for form in relation_generators(spec.f, i):
        for shift in space.index.monomials[:space.index.size(N)]:
            vec = space.vector(form, shift)
            if not vec:
                continue
            image = contraction.apply(vec)
            if image and not target.contains(integer_vector(image)[0]):
                return False
    return True


@dataclass
class OracleResult:
    h_star: list
    h: list
    orders: list = field(default_factory=list)
    peak_rss: float = 0.0

    @property
    def chi(self):
        return sum((-1) ** i * value for i, value in enumerate(self.h))


def homology_at(spec, N, config=None):
    """(h_star, h) of both contraction complexes below order N."""
    config = _config.resolve(config)
    n = spec.n
    if n > config.oracle_max_n:
        raise OracleRefused('oracle handles at most %d variables, problem has %d'
                            % (config.oracle_max_n, n))
    if N > config.oracle_cap:
        raise OracleRefused('oracle order %d exceeds the cap %d' % (N, config.oracle_cap))
    X = list(spec.X)
    h_star, h = [], []
    for i in range(n + 1):
        relations = relation_span(spec.f, i, N)
        cycles = _cycles(X, spec.f, i, N, config, relations)
        boundaries = _boundaries(X, i, N, relations).rank
        h_star.append(cycles - boundaries)
        if i == n - 1:
            h.append(cycles - relations.rank)
        elif i < n - 1:
            h.append(h_star[-1])
        log.debug('oracle order %d degree %d: cycles %d boundaries %d relations %d',
                  N, i, cycles, boundaries, relations.rank)
    return h_star, h


def homology_dims_star(spec, N=None, config=None):
    if N is not None:
        return homology_at(spec, N, config)[0]
    return stabilized_homology(spec, config).h_star


def homology_dims(spec, N=None, config=None):
    """Dimensions h_0..h_{n-1} and their alternating sum."""
    if N is not None:
        h = homology_at(spec, N, config)[1]
    else:
        h = stabilized_homology(spec, config).h
    return h, sum((-1) ** i * value for i, value in enumerate(h))


def stabilized_homology(spec, config=None):
    config = _config.resolve(config)
    degree = max([spec.f.degree()] + [x.degree() for x in spec.X])
    N = config.start_order(degree)
    orders, values = [], []
    peak = 0.0
    previous = None
    while N <= config.oracle_cap:
        current = homology_at(spec, N, config)
        rss = rss_megabytes()
        peak = max(peak, rss)
        orders.append(N)
        values.append(current)
        log.info('oracle order %d: h* = %s, h = %s, rss %.1f MB', N, current[0], current[1], rss)
        if previous is not None and previous == current:
            return OracleResult(current[0], current[1], orders, peak)
        previous = current
        N += config.oracle_step
    raise NoStabilization('oracle homology did not stabilize by order %d' % config.oracle_cap,
                          orders, values)

