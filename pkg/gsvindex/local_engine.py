#!/usr/bin/env python3
# File name   : local_engine.py
# Description : Ideals of the local ring as subspaces of truncations O/m^N
# Author      : gsvindex developers
# Date        : 2026/10/16
"""
Artinian reduction.

Everything here works in O/m^N with the monomials of degree < N as basis,
listed degree-ascending and lexicographically inside a degree
(1, x, y, x^2, x*y, y^2, ...).  The list for order N is a prefix of the list
for any larger order, so truncating a vector is dropping columns.

Ideals whose value depends on the working order (colons, intersections) are
described by small recipe objects with an ``at(N)`` method; dimensions are
evaluated at increasing orders until two consecutive orders agree.
"""
import logging
import math
import random
import threading
from collections import OrderedDict
from dataclasses import dataclass, field

from . import config as _config
from .algebra_core import Polynomial, apply_linear_change, default_names
from .echelon import Echelon, integer_vector
from .errors import (ArityMismatch, DegreeOverflow, InternalInconsistency, NoStabilization,
                     NormalizationFailed, NotAGerm, NotNested, RingMismatch, SingularMatrix)

log = logging.getLogger(__name__)

INFINITE = math.inf


class MonomialIndex:
    """Degree-ascending monomial list in n variables, grown on demand."""

    def __init__(self, n):
        self.n = n
        self.monomials = []
        self.index = {}
        self.ends = [0]     # ends[d] = number of monomials of degree < d
        self._lock = threading.Lock()

    def _degree(self, d):
        if self.n == 1:
            return [(d,)]
        out = []
        for first in range(d, -1, -1):
            for rest in _compositions(d - first, self.n - 1):
                out.append((first,) + rest)
        return out

    def ensure(self, order):
        if len(self.ends) > order:
            return
        with self._lock:
            while len(self.ends) <= order:
                d = len(self.ends) - 1
                for exponent in self._degree(d):
                    self.index[exponent] = len(self.monomials)
                    self.monomials.append(exponent)
                self.ends.append(len(self.monomials))

    def size(self, order):
        self.ensure(order)
        return self.ends[order]

    def column(self, exponent):
        col = self.index.get(exponent)
        if col is None:
            self.ensure(sum(exponent) + 1)
            col = self.index[exponent]
        return col


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


_indices = {}
_indices_lock = threading.Lock()


def monomial_index(n):
    with _indices_lock:
        if n not in _indices:
            _indices[n] = MonomialIndex(n)
        return _indices[n]


@dataclass(frozen=True)
class TruncatedRing:
    n: int
    N: int

    @property
    def size(self):
        return monomial_index(self.n).size(self.N)

    @property
    def basis(self):
        index = monomial_index(self.n)
        return index.monomials[:index.size(self.N)]

    def vector(self, p, strict=False):
        """Coefficient vector {column: Fraction} of p mod m^N."""
        if p.nvars != self.n:
            raise ArityMismatch('polynomial in %d variables, ring has %d' % (p.nvars, self.n))
        index = monomial_index(self.n)
        out = {}
        for exponent, coeff in p.terms.items():
            if sum(exponent) >= self.N:
                if strict:
                    raise DegreeOverflow('term of degree %d does not fit below order %d'
                                         % (sum(exponent), self.N))
                continue
            out[index.column(exponent)] = coeff
        return out

    def polynomial(self, vec, names=None):
        monomials = monomial_index(self.n).monomials
        return Polynomial({monomials[c]: v for c, v in vec.items()}, self.n, names)


@dataclass(frozen=True)
class StabilizedDim:
    value: object
    orders_used: list
    stable: bool
    values: list = field(default_factory=list)

    @property
    def finite(self):
        return self.value != INFINITE

    def __int__(self):
        if not self.finite:
            raise ValueError('infinite dimension')
        return int(self.value)


class IdealSpan:
    """(I + m^N)/m^N as an echelon basis, optionally with generator witnesses."""

    def __init__(self, ring, gens, echelon, names=None, tracked=False, labels=None):
        self.ring = ring
        self.gens = tuple(gens)
        self.echelon = echelon
        self.names = names or default_names(ring.n)
        self.tracked = tracked
        self.labels = labels or {}      # internal generator index -> position in gens

    @property
    def rank(self):
        return self.echelon.rank

    @property
    def colength(self):
        return self.ring.size - self.echelon.rank

    def rows(self):
        return [self.ring.polynomial(v, self.names) for v in self.echelon.vectors()]

    def witnesses(self):
        """For each row, polynomials (a_1..a_s) with row = sum a_j g_j mod m^N."""
        if not self.tracked:
            return span(self.gens, self.ring.N, witnesses=True).witnesses()
        out = []
        for pivot in sorted(self.echelon.rows):
            _, combo = self.echelon.rows[pivot]
            out.append(self._combo_to_polys(combo or {}))
        return out

    def _combo_to_polys(self, combo):
        n = self.ring.n
        terms = [{} for _ in self.gens]
        for (j, exponent), value in combo.items():
            position = self.labels[j]
            terms[position][exponent] = terms[position].get(exponent, 0) + value
        return tuple(Polynomial(t, n, self.names) for t in terms)

    def contains(self, p):
        return self.echelon.contains(integer_vector(self.ring.vector(p))[0])

    def __repr__(self):
        return 'IdealSpan(N=%d, rank=%d, colength=%d)' % (self.ring.N, self.rank, self.colength)


def _clean(gens):
    seen = {}
    for position, g in enumerate(gens):
        if not g.is_zero() and g not in seen:
            seen[g] = position
    return list(seen.items())


def _build_span(gens, N, tracked):
    gens = tuple(gens)
    if not gens:
        raise ArityMismatch('an ideal needs at least one generator (use 0 for the zero ideal)')
    n = gens[0].nvars
    ring = TruncatedRing(n, N)
    index = monomial_index(n)
    index.ensure(N)
    echelon = Echelon()
    labels = {}
    for j, (g, position) in enumerate(_clean(gens)):
        labels[j] = position
        low = g.order()
        if low >= N:
            continue
        ints, scale = integer_vector(g.terms)
        terms = list(ints.items())
        for shift in index.monomials[:index.size(N - low)]:
            vec = {}
            for exponent, coeff in terms:
                e = tuple(a + b for a, b in zip(exponent, shift))
                if sum(e) < N:
                    vec[index.column(e)] = coeff
            if vec:
                combo = {(j, shift): scale} if tracked else None
                echelon.insert(vec, combo)
    return IdealSpan(ring, gens, echelon, gens[0].names, tracked, labels)


_span_cache = OrderedDict()
_span_lock = threading.Lock()


def span(gens, N, witnesses=False):
    """Image of the ideal (gens) in O/m^N."""
    if N < 1:
        raise ValueError('truncation order must be positive')
    key = (tuple(gens), N, witnesses)
    with _span_lock:
        cached = _span_cache.get(key)
        if cached is not None:
            _span_cache.move_to_end(key)
    if cached is not None:
        return cached
    result = _build_span(gens, N, witnesses)
    log.debug('span of %d generators at order %d: rank %d of %d',
              len(result.gens), N, result.rank, result.ring.size)
    with _span_lock:
        _span_cache[key] = result
        while len(_span_cache) > _config.SPAN_CACHE_SIZE:
            _span_cache.popitem(last=False)
    return result


def clear_cache():
    with _span_lock:
        _span_cache.clear()


def from_vectors(ring, vectors, names=None):
    """IdealSpan of a subspace already closed under the variables."""
    echelon = Echelon()
    for vec in vectors:
        echelon.insert(vec)
    gens = [ring.polynomial(v, names) for v in echelon.vectors()]
    if not gens:
        gens = [Polynomial.zero(ring.n, names)]
    return IdealSpan(ring, gens, echelon, names)


def is_closed(ideal):
    """True when z_i * row stays in the subspace for every row and variable."""
    n = ideal.ring.n
    for row in ideal.rows():
        for i in range(n):
            shifted = (row * Polynomial.variable(i, n, row.names)).truncate(ideal.ring.N)
            if not ideal.contains(shifted):
                return False
    return True


def membership_witness(p, ideal):
    """Coefficients (a_1..a_s) with p = sum a_j g_j mod m^N, or None."""
    ring = ideal.ring
    vec = ring.vector(p, strict=True)
    if not ideal.tracked:
        ideal = span(ideal.gens, ring.N, witnesses=True)
    ints, scale = integer_vector(vec)
    combo = ideal.echelon.solve(ints)
    if combo is None:
        return None
    combo = {k: v / scale for k, v in combo.items()}
    return ideal._combo_to_polys(combo)


# Ideal recipes

class Ideal:
    def at(self, N, config=None):
        raise NotImplementedError

    def start_order(self, config):
        raise NotImplementedError


class Generated(Ideal):
    """(gens) plus `series` generators known only modulo a power of m.

    Series generators are cut to the working order in at() and do not raise
    the start order.
    """

    def __init__(self, gens, series=()):
        self.gens = tuple(gens)
        self.series = tuple(series)

    def at(self, N, config=None):
        return span(self.gens + tuple(s.truncate(N) for s in self.series), N)

    def start_order(self, config):
        return config.start_order(max((g.degree() for g in self.gens), default=0))

    def __repr__(self):
        return 'Generated(%s)' % ', '.join(str(g) for g in self.gens + self.series)


class ColonIdeal(Ideal):
    def __init__(self, base, p, series=False):
        self.base = as_ideal(base)
        self.p = p
        self.series = series
        self._spans = {}

    def at(self, N, config=None):
        if N not in self._spans:
            self._spans[N] = span(colon(self.base, self.p, N, config), N)
        return self._spans[N]

    def start_order(self, config):
        if self.series:
            return self.base.start_order(config)
        return max(self.base.start_order(config), config.start_order(max(self.p.degree(), 0)))

    def __repr__(self):
        return 'ColonIdeal(%r : %s)' % (self.base, self.p)


class SumIdeal(Ideal):
    def __init__(self, *parts):
        self.parts = [as_ideal(p) for p in parts]

    def at(self, N, config=None):
        gens = []
        for part in self.parts:
            gens.extend(part.at(N, config).rows())
        return span(gens or [self.zero(N)], N)

    def zero(self, N):
        first = self.parts[0].at(N)
        return Polynomial.zero(first.ring.n, first.names)

    def start_order(self, config):
        return max(part.start_order(config) for part in self.parts)


class IntersectionIdeal(Ideal):
    def __init__(self, first, second, floor=0):
        self.first = as_ideal(first)
        self.second = as_ideal(second)
        self.floor = floor

    def at(self, N, config=None):
        return intersect(self.first.at(N, config), self.second.at(N, config))

    def start_order(self, config):
        return max(self.first.start_order(config), self.second.start_order(config), self.floor)


def as_ideal(obj):
    if isinstance(obj, Ideal):
        return obj
    return Generated(obj)


# Colon ideals

def colon(base, p, N, config=None):
    """Generators of ((I + m^L) : p) mod m^N with L = N + slack + ord(p)."""
    config = _config.resolve(config)
    base = as_ideal(base)
    n = p.nvars
    if p.is_zero():
        return [Polynomial.constant(1, n, p.names)]
    low = p.order()
    domain = N + config.slack(N)
    codomain = domain + low
    index = monomial_index(n)
    index.ensure(codomain)
    echelon = base.at(codomain, config).echelon.copy()
    ints, _ = integer_vector(p.terms)
    terms = list(ints.items())
    kernel = []
    for shift in index.monomials[:index.size(domain)]:
        vec = {}
        for exponent, coeff in terms:
            e = tuple(a + b for a, b in zip(exponent, shift))
            if sum(e) < codomain:
                vec[index.column(e)] = coeff
        relation = echelon.insert(vec, {shift: 1})
        if relation is not None:
            projected = {index.column(e): v for e, v in relation.items() if sum(e) < N}
            if projected:
                kernel.append(integer_vector(projected)[0])
    log.debug('colon at order %d: lifted to %d/%d, kernel %d', N, domain, codomain, len(kernel))
    ring = TruncatedRing(n, N)
    basis = Echelon()
    for vec in kernel:
        basis.insert(vec)
    return minimal_generators([ring.polynomial(v, p.names) for v in basis.vectors()], N) \
        or [Polynomial.zero(n, p.names)]


def minimal_generators(candidates, N):
    """Greedy lowest-order-first selection; each kept element is new mod the ideal so far."""
    if not candidates:
        return []
    n = candidates[0].nvars
    index = monomial_index(n)
    generated = Echelon()
    chosen = []
    for q in sorted(candidates, key=lambda q: q.order()):
        vec, _ = integer_vector(TruncatedRing(n, N).vector(q))
        if generated.contains(vec):
            continue
        chosen.append(q)
        ints, _ = integer_vector(q.terms)
        low = q.order()
        for shift in index.monomials[:index.size(N - low)]:
            moved = {}
            for exponent, coeff in ints.items():
                e = tuple(a + b for a, b in zip(exponent, shift))
                if sum(e) < N:
                    moved[index.column(e)] = coeff
            generated.insert(moved)
    return chosen


def intersect(first, second):
    """Zassenhaus intersection of two truncated ideals."""
    if first.ring != second.ring:
        raise RingMismatch('cannot intersect ideals of %r and %r' % (first.ring, second.ring))
    ring = first.ring
    size = ring.size
    work = Echelon()
    for vec in first.echelon.vectors():
        doubled = dict(vec)
        doubled.update({c + size: v for c, v in vec.items()})
        work.insert(doubled)
    for vec in second.echelon.vectors():
        work.insert(vec)
    common = [{c - size: v for c, v in row.items()}
              for pivot, (row, _) in sorted(work.rows.items()) if pivot >= size]
    result = from_vectors(ring, common, first.names)
    if not is_closed(result):
        raise InternalInconsistency('intersection is not closed under the variables')
    return result


# Stabilization

def stabilize(evaluate, start, config, what='dimension'):
    """Evaluate at start, start+1, ... until two consecutive values agree.

    INFINITE when the value strictly increases at every order from start to
    the cap and at least config.infinite_window steps were taken.
    """
    cap = config.trunc_cap
    orders, values = [], []
    if start > cap:
        raise NoStabilization('%s: starting order %d exceeds the cap %d' % (what, start, cap),
                              orders, values)
    for N in range(start, cap + 1):
        value = evaluate(N)
        orders.append(N)
        values.append(value)
        log.debug('%s at order %d: %s', what, N, value)
        if len(values) >= 2 and values[-1] == values[-2]:
            log.info('%s = %d (orders %d..%d)', what, value, orders[0], N)
            return StabilizedDim(value, orders, True, values)
    window = config.infinite_window
    if len(values) > window and all(a < b for a, b in zip(values, values[1:])):
        log.info('%s is infinite (still growing at order %d)', what, cap)
        return StabilizedDim(INFINITE, orders, False, values)
    raise NoStabilization('%s did not stabilize by order %d: %s' % (what, cap, values),
                          orders, values)


def colength(gens, config=None):
    config = _config.resolve(config)
    ideal = as_ideal(gens)
    return stabilize(lambda N: ideal.at(N, config).colength, ideal.start_order(config),
                     config, 'colength')


def quotient_module_dim(J1, J2, config=None, start=None):
    """dim J1/J2 for nested ideals, by rank difference over increasing orders."""
    config = _config.resolve(config)
    J1, J2 = as_ideal(J1), as_ideal(J2)
    first = max(J1.start_order(config), J2.start_order(config), start or 0)

    def evaluate(N):
        big, small = J1.at(N, config), J2.at(N, config)
        for vec in small.echelon.vectors():
            if not big.echelon.contains(vec):
                raise NotNested('%r is not contained in %r at order %d' % (J2, J1, N))
        return big.rank - small.rank

    return stabilize(evaluate, first, config, 'quotient dimension')


def regular_sequence_check(gens, config=None):
    gens = list(gens)
    n = gens[0].nvars
    if len(gens) != n:
        raise ArityMismatch('%d elements given in %d variables' % (len(gens), n))
    for g in gens:
        if g.constant_term():
            raise NotAGerm('%s does not vanish at the origin' % g)
    return colength(gens, config).finite


def _random_matrix(rng, n, bound):
    return [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]


def normalize_coordinates(spec, seed=0, config=None):
    """Make (X_1..X_{n-1}, f) a regular sequence by a seeded linear change."""
    config = _config.resolve(config)
    if regular_sequence_check(list(spec.X[:-1]) + [spec.f], config):
        return spec
    rng = random.Random(seed)
    matrix = None
    for attempt in range(config.normalize_retries):
        matrix = _random_matrix(rng, spec.n, config.normalize_entry)
        try:
            candidate = apply_linear_change(spec, matrix)
        except SingularMatrix:
            continue
        try:
            ok = regular_sequence_check(list(candidate.X[:-1]) + [candidate.f], config)
        except NoStabilization:
            ok = False
        if ok:
            log.info('coordinate change %s after %d attempts', matrix, attempt + 1)
            return candidate
    raise NormalizationFailed('no regular coordinates after %d attempts'
                              % config.normalize_retries, matrix)
