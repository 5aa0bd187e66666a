#!/usr/bin/env python3
# File name   : residue.py
# Description : Grothendieck residues through monomial covers
# Author      : gsvindex developers
# Date        : 2026/10/16
"""
Residues res[h / (g_1..g_n)] of a regular sequence at the origin.

A cover is a pair (k, A) with x_i^{k_i} = sum_j A_ij g_j.  By the
transformation law the residue is the coefficient of x^(k-1) in h * det A.
Exact covers are found with a Macaulay matrix of multiplier degree d; when
the generators have other common zeros no exact cover exists and a local one
is used instead, with a residual deep enough in m to leave that coefficient
untouched.
"""
import logging
import threading
from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction

from . import config as _config
from .algebra_core import Polynomial, PolyMatrix, jacobian
from .echelon import Echelon, integer_vector
from .errors import ArityMismatch, InternalInconsistency, NotRegular
from .local_engine import colength, membership_witness, monomial_index, span

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResidueCover:
    exponents: tuple
    A: PolyMatrix
    exact: bool
    gens: tuple

    def det(self):
        return self.A.det()

    def raised(self, i):
        """Same cover with k_i + 1, row i multiplied by x_i."""
        n = len(self.exponents)
        exponents = tuple(k + (j == i) for j, k in enumerate(self.exponents))
        xi = Polynomial.variable(i, n, self.A.names)
        return ResidueCover(exponents, self.A.scale_row(i, xi), self.exact, self.gens)

    def residual(self, i):
        n = len(self.exponents)
        target = Polynomial.monomial(tuple(self.exponents[i] * (j == i) for j in range(n)),
                                     1, self.A.names)
        combined = Polynomial.zero(n, self.A.names)
        for j, g in enumerate(self.gens):
            combined = combined + self.A[i, j] * g
        return target - combined


_cover_cache = OrderedDict()
_cover_lock = threading.Lock()


def clear_cache():
    with _cover_lock:
        _cover_cache.clear()


def _check_shape(gens):
    gens = tuple(gens)
    if not gens:
        raise ArityMismatch('no generators')
    n = gens[0].nvars
    if len(gens) != n:
        raise ArityMismatch('%d generators in %d variables' % (len(gens), n))
    return gens, n


def _power(i, k, n, names):
    return Polynomial.monomial(tuple(k * (j == i) for j in range(n)), 1, names)


def _exact_rows(gens, targets, degree):
    """Solve x_i^k_i = sum_j A_ij g_j with deg A_ij <= degree, or None."""
    n = gens[0].nvars
    names = gens[0].names
    top = degree + max(g.degree() for g in gens)
    index = monomial_index(n)
    index.ensure(top + 1)
    echelon = Echelon()
    for j, g in enumerate(gens):
        ints, scale = integer_vector(g.terms)
        for shift in index.monomials[:index.size(degree + 1)]:
            vec = {index.column(tuple(a + b for a, b in zip(e, shift))): c
                   for e, c in ints.items()}
            echelon.insert(vec, {(j, shift): scale})
    rows = []
    for target in targets:
        if target.degree() > top:
            return None
        combo = echelon.solve({index.column(e): int(c) for e, c in target.terms.items()})
        if combo is None:
            return None
        entries = [{} for _ in gens]
        for (j, shift), value in combo.items():
            entries[j][shift] = entries[j].get(shift, 0) + value
        rows.append([Polynomial(t, n, names) for t in entries])
    return rows


def monomial_cover(gens, config=None):
    config = _config.resolve(config)
    gens, n = _check_shape(gens)
    key = (gens, config.trunc_cap, config.cover_retries, config.cover_retry_step)
    with _cover_lock:
        if key in _cover_cache:
            _cover_cache.move_to_end(key)
            return _cover_cache[key]

    length = colength(gens, config)
    if not length.finite:
        raise NotRegular('(%s) is not a regular sequence' % ', '.join(str(g) for g in gens))
    order = length.orders_used[-1]
    ideal = span(gens, order)
    names = gens[0].names
    exponents = []
    for i in range(n):
        k = next(k for k in range(1, order) if ideal.contains(_power(i, k, n, names)))
        exponents.append(k)
    exponents = tuple(exponents)
    targets = [_power(i, k, n, names) for i, k in enumerate(exponents)]

    rows = None
    degree = max(exponents)
    for attempt in range(config.cover_retries + 1):
        rows = _exact_rows(gens, targets, degree)
        if rows is not None:
            break
        log.debug('no exact cover with multiplier degree %d', degree)
        degree += config.cover_retry_step
    exact = rows is not None
    if not exact:
        depth = sum(k - 1 for k in exponents) + 1
        # two spare degrees keep raised() covers valid
        local = max(order, 2 * depth + 2)
        tracked = span(gens, local, witnesses=True)
        rows = [list(membership_witness(t, tracked)) for t in targets]
        log.warning('(%s) has no exact monomial cover; using a local cover mod m^%d',
                    ', '.join(str(g) for g in gens), local)
    cover = ResidueCover(exponents, PolyMatrix(rows), exact, gens)
    if exact and any(not cover.residual(i).is_zero() for i in range(n)):
        raise InternalInconsistency('exact cover identity fails on expansion')
    log.debug('cover of (%s): k = %s, exact = %s',
              ', '.join(str(g) for g in gens), exponents, exact)
    with _cover_lock:
        _cover_cache[key] = cover
        while len(_cover_cache) > _config.COVER_CACHE_SIZE:
            _cover_cache.popitem(last=False)
    return cover


def residue_from_cover(h, cover):
    """Coefficient of x^(k-1) in h * det A."""
    det = cover.det()
    corner = tuple(k - 1 for k in cover.exponents)
    total = Fraction(0)
    for exponent, coeff in h.terms.items():
        rest = tuple(a - b for a, b in zip(corner, exponent))
        if min(rest) >= 0:
            total += coeff * det.coefficient(rest)
    return total


def grothendieck_residue(h, gens, config=None):
    gens, n = _check_shape(gens)
    if h.nvars != n:
        raise ArityMismatch('numerator in %d variables, %d generators' % (h.nvars, n))
    return residue_from_cover(h, monomial_cover(gens, config))


def local_multiplicity(gens, config=None):
    """Colength of a regular sequence, as res[det Jacobian / gens]."""
    gens, _ = _check_shape(gens)
    value = grothendieck_residue(jacobian(gens).det(), gens, config)
    if value.denominator != 1:
        raise InternalInconsistency('multiplicity %s is not an integer' % value)
    return int(value)


def poincare_hopf_index(X, config=None):
    return local_multiplicity(X, config)
