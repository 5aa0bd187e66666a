#!/usr/bin/env python3
# File name   : index_core.py
# Description : Tangency factor, homology dimensions and the GSV index by three routes
# Author      : gsvindex developers
# Date        : 2026/10/16
"""
Notation used below, for a germ f and a vector field X with X(f) = c*f:

    I_k   = (X_1, .., X_k)
    B     = O/I_n,  B' = O/I_{n-1}
    Jac   = (df/dz_1, .., df/dz_n),  A = O/Jac   (the Milnor algebra)

Annihilators become colon ideals: ann_{O/I}(p) = (I : p)/I.
"""
import logging
import threading
from dataclasses import dataclass, field
from functools import cached_property

from . import config as _config
from .algebra_core import apply_vector_field, chat_numerator, divide_exact, jacobian, partial_derivative
from .errors import (GsvError, InternalInconsistency, NonPolynomialFactor, NotRegular,
                     NotTangent)
from .local_engine import (ColonIdeal, Generated, IntersectionIdeal, SumIdeal, colength,
                           normalize_coordinates, quotient_module_dim, regular_sequence_check)
from .parser import format_polynomial
from .residue import grothendieck_residue, poincare_hopf_index

log = logging.getLogger(__name__)


def compute_c(f, X, order=None):
    """The factor c with X(f) = c*f.

    Exact polynomial division first; failing that, c is expanded degree by
    degree against the lowest form of f up to `order`, which either proves X
    is not tangent or yields a truncated series (NonPolynomialFactor).
    """
    if f.is_zero():
        raise NotTangent('f is zero')
    image = apply_vector_field(X, f)
    if image.is_zero():
        return image
    c = divide_exact(image, f)
    if c is not None:
        if c * f != image:
            raise InternalInconsistency('exact division does not multiply back')
        return c
    order = order or _config.TRUNC_CAP
    low = f.order()
    lowest = f.homogeneous_part(low)
    residual = image
    c = image - image
    for d in range(order):
        if residual.order() < low + d:
            raise NotTangent('X(f) = %s is not a multiple of f' % format_polynomial(image))
        piece = residual.homogeneous_part(low + d)
        if piece.is_zero():
            continue
        quotient = divide_exact(piece, lowest)
        if quotient is None:
            raise NotTangent('X(f) = %s is not a multiple of f' % format_polynomial(image))
        c = c + quotient
        residual = residual - quotient * f
        if residual.is_zero():
            return c
    raise NonPolynomialFactor('X(f)/f is a power series; truncated below degree %d' % order,
                              c, order)


def _finite(dim, what):
    if not dim.finite:
        raise NotRegular('%s is infinite' % what)
    return int(dim.value)


def _as_int(value, what):
    if value.denominator != 1:
        raise InternalInconsistency('%s = %s is not an integer' % (what, value))
    return int(value)


@dataclass
class HomologyDims:
    h_star: list
    h: list
    lam: int
    milnor: int
    route: dict = field(default_factory=dict)

    def euler_characteristic(self):
        return sum((-1) ** i * value for i, value in enumerate(self.h))


class Invariants:
    """Every dimension the formulas need, computed once per problem."""

    def __init__(self, spec, config=None, c=None, c_exact=True):
        self.spec = spec
        self.config = _config.resolve(config)
        self.n = spec.n
        self.f = spec.f
        self.X = list(spec.X)
        self.jac = [partial_derivative(spec.f, i) for i in range(self.n)]
        self.c_exact = c_exact
        if c is not None:
            self.__dict__['c'] = c

    @cached_property
    def c(self):
        return compute_c(self.f, self.X, self.config.trunc_cap)

    def with_c(self, gens):
        """The ideal (gens, c); a truncated c enters as a series generator."""
        if self.c_exact:
            return Generated(list(gens) + [self.c])
        return Generated(gens, series=[self.c])

    def colon_c(self, base):
        return ColonIdeal(base, self.c, series=not self.c_exact)

    @cached_property
    def h0_star(self):
        return _finite(colength(self.X + [self.f], self.config), 'dim B/(f)')

    @cached_property
    def term1(self):
        """dim ann_B(f)/(c)."""
        dim = quotient_module_dim(ColonIdeal(self.X, self.f),
                                  self.with_c(self.X), self.config)
        return int(dim)

    @cached_property
    def term2(self):
        """dim ann_B'(X_n) / (ann_B'(X_n) intersected with B'(f, df/dz_n))."""
        base = self.X[:-1]
        annihilator = ColonIdeal(base, self.X[-1])
        cut = base + [self.f, self.jac[-1]]
        floor = colength(cut, self.config).orders_used[-1]
        lower = SumIdeal(IntersectionIdeal(annihilator, cut, floor), base)
        return int(quotient_module_dim(annihilator, lower, self.config, start=floor))

    @cached_property
    def h1_star(self):
        return self.term1 + self.term2

    @cached_property
    def milnor(self):
        return _finite(colength(self.jac, self.config), 'Milnor number')

    @cached_property
    def milnor_mod_c(self):
        return _finite(colength(self.with_c(self.jac), self.config), 'dim A/(c)')

    @cached_property
    def milnor_mod_f(self):
        return _finite(colength(self.jac + [self.f], self.config), 'dim A/(f)')

    @cached_property
    def lam(self):
        """dim ann_A(f)/(c), checked against dim ann_A(c)/(f)."""
        first = int(quotient_module_dim(ColonIdeal(self.jac, self.f),
                                        self.with_c(self.jac), self.config))
        second = int(quotient_module_dim(self.colon_c(self.jac),
                                         Generated(self.jac + [self.f]), self.config))
        if first != second:
            raise InternalInconsistency('ann_A(f)/(c) has dimension %d but ann_A(c)/(f) has %d'
                                        % (first, second))
        return first

    def homological_index(self):
        value = self.h0_star - self.term1 - self.term2
        if self.n % 2 == 0:
            value += self.milnor_mod_c - self.milnor
        else:
            value += self.milnor_mod_f
        if self.milnor_mod_f == self.milnor and self.milnor_mod_c != self.milnor:
            log.warning('f lies in its Jacobian ideal but dim A/(c) = %d differs from dim A = %d',
                        self.milnor_mod_c, self.milnor)
        return value

    def residue_numerator(self):
        return self.jac[-1] * chat_numerator(self.X, self.c)

    def residue_index(self):
        gens = self.X[:-1] + [self.f]
        return _as_int(grothendieck_residue(self.residue_numerator(), gens, self.config),
                       'residue index')

    @cached_property
    def x_regular(self):
        return regular_sequence_check(self.X, self.config)

    def gomez_mont_index(self):
        if not self.x_regular:
            return None
        if self.n % 2 == 0:
            value = self.h0_star - self.milnor_mod_f
        else:
            value = self.h0_star - self.milnor_mod_c + self.milnor
        shifted = jacobian(self.X).shift_diagonal(self.c).det()
        check = (self.poincare_hopf()
                 - _as_int(grothendieck_residue(shifted, self.X, self.config), 'shifted residue'))
        if check != value:
            raise InternalInconsistency('Gomez-Mont reduction gives %d, residues give %d'
                                        % (value, check))
        return value

    def poincare_hopf(self):
        if not self.x_regular:
            return None
        return poincare_hopf_index(self.X, self.config)

    def dims(self):
        n = self.n
        h_star = [self.h0_star, self.h1_star] + [self.lam] * (n - 1)
        h = h_star[:n - 1] + [h_star[n - 1] + self.milnor_mod_f - h_star[n]]
        route = {'h_0*': 'colength(X, f)',
                 'h_1*': 'ann_B(f)/(c) + ann_B\'(X_n) quotient',
                 'h_i*, i >= 2': 'lambda = ann_A(f)/(c)',
                 'h_%d' % (n - 1): 'h_%d* + dim A/(f) - h_%d*' % (n - 1, n)}
        return HomologyDims(h_star, h, self.lam, self.milnor, route)

    def exact_sequence_holds(self):
        return self.lam - self.milnor_mod_f == self.milnor_mod_c - self.milnor

    def gorenstein_checks(self):
        """lambda against ann_B(f)/(c) and ann_B(c)/(f), when X is regular."""
        first = self.term1
        second = int(quotient_module_dim(self.colon_c(self.X),
                                         Generated(self.X + [self.f]), self.config))
        return first == second == self.lam

    def transfer_holds(self):
        """res[c / X] = res[df/dz_n / (X_1..X_{n-1}, f)]."""
        left = grothendieck_residue(self.c, self.X, self.config)
        right = grothendieck_residue(self.jac[-1], self.X[:-1] + [self.f], self.config)
        return left == right


# Spec-level entry points

def h0_star(spec, config=None):
    return Invariants(spec, config).h0_star


def h1_star(spec, config=None):
    return Invariants(spec, config).h1_star


def lambda_dim(spec, config=None):
    return Invariants(spec, config).lam


def homology_dims(spec, config=None):
    return Invariants(spec, config).dims()


def gsv_index_homological(spec, config=None):
    return Invariants(spec, config).homological_index()


def gsv_index_residue(spec, config=None):
    return Invariants(spec, config).residue_index()


def gsv_index_gomez_mont(spec, config=None):
    return Invariants(spec, config).gomez_mont_index()


@dataclass
class IndexReport:
    spec: object
    c: object = None
    c_exact: bool = True
    dims: HomologyDims = None
    gsv_homological: int = None
    gsv_residue: int = None
    gsv_gomez_mont: int = None
    poincare_hopf: int = None
    consistent: bool = False
    failed_routes: list = field(default_factory=list)
    euler_ok: bool = None
    exact_sequence_ok: bool = None
    lambda_ok: bool = None
    transfer_ok: bool = None
    diagnostics: list = field(default_factory=list)
    truncation: dict = field(default_factory=dict)

    @property
    def index(self):
        for value in (self.gsv_homological, self.gsv_residue, self.gsv_gomez_mont):
            if value is not None:
                return value
        return None

    def indices(self):
        return {'homological': self.gsv_homological,
                'residue': self.gsv_residue,
                'gomez_mont': self.gsv_gomez_mont,
                'poincare_hopf': self.poincare_hopf}

    def to_dict(self):
        spec = self.spec
        return {
            'problem': {'vars': list(spec.vars),
                        'f': format_polynomial(spec.f),
                        'X': [format_polynomial(x) for x in spec.X],
                        'coordinate_change': None if spec.coordinate_change is None else
                        [[str(v) for v in row] for row in spec.coordinate_change]},
            'c': None if self.c is None else format_polynomial(self.c),
            'c_exact': self.c_exact,
            'h_star': None if self.dims is None else list(self.dims.h_star),
            'h': None if self.dims is None else list(self.dims.h),
            'lambda': None if self.dims is None else self.dims.lam,
            'milnor': None if self.dims is None else self.dims.milnor,
            'indices': self.indices(),
            'consistent': self.consistent,
            'failed_routes': list(self.failed_routes),
            'checks': {'euler': self.euler_ok,
                       'exact_sequence': self.exact_sequence_ok,
                       'lambda_b': self.lambda_ok,
                       'transfer': self.transfer_ok},
            'truncation': dict(self.truncation),
            'diagnostics': list(self.diagnostics),
        }


class RouteWorker(threading.Thread):
    """Runs one index route and keeps its value or its error."""

    def __init__(self, name, target):
        super(RouteWorker, self).__init__(name='route-%s' % name, daemon=True)
        self.route = name
        self.target = target
        self.result = None
        self.error = None

    def run(self):
        try:
            self.result = self.target()
        except Exception as err:
            if not isinstance(err, GsvError):
                log.exception('route %s crashed', self.route)
            self.error = err

    def describe_error(self):
        return '%s: %s: %s' % (self.route, type(self.error).__name__, self.error)


def _homological_route(inv):
    dims = inv.dims()
    return dims, inv.homological_index()


def full_report(spec, seed=0, config=None):
    config = _config.resolve(config)
    report = IndexReport(spec, truncation={'start': config.trunc_start,
                                           'cap': config.trunc_cap,
                                           'seed': seed})
    try:
        spec = normalize_coordinates(spec, seed, config)
    except GsvError as err:
        report.diagnostics.append('normalization: %s: %s' % (type(err).__name__, err))
        return report
    report.spec = spec
    if spec.coordinate_change is not None:
        report.diagnostics.append('coordinate change applied: %s'
                                  % [[str(v) for v in row] for row in spec.coordinate_change])

    try:
        c = compute_c(spec.f, spec.X, config.trunc_cap)
    except NonPolynomialFactor as err:
        c = err.c
        report.c_exact = False
        report.diagnostics.append('tangency: X(f)/f is not a polynomial; using c truncated '
                                  'below degree %d' % err.order)
        log.warning('using truncated tangency factor %s', format_polynomial(c))
    except GsvError as err:
        report.diagnostics.append('tangency: %s: %s' % (type(err).__name__, err))
        return report
    report.c = c
    if spec.c_hint is not None and spec.c_hint != c:
        report.diagnostics.append('declared c %s replaced by %s'
                                  % (format_polynomial(spec.c_hint), format_polynomial(c)))

    inv = Invariants(spec, config, c, report.c_exact)
    workers = [RouteWorker('homological', lambda: _homological_route(inv)),
               RouteWorker('residue', inv.residue_index),
               RouteWorker('gomez_mont', inv.gomez_mont_index)]
    if config.threaded_routes:
        for worker in workers:
            worker.start()
        for worker in workers:
            worker.join()
    else:
        for worker in workers:
            worker.run()

    for worker in workers:
        if worker.error is not None:
            report.failed_routes.append(worker.route)
            report.diagnostics.append(worker.describe_error())
            log.warning('route failed: %s', worker.describe_error())
    homological, residue, gomez_mont = workers
    if homological.error is None:
        report.dims, report.gsv_homological = homological.result
        report.euler_ok = report.dims.euler_characteristic() == report.gsv_homological
        report.exact_sequence_ok = inv.exact_sequence_holds()
    if residue.error is None:
        report.gsv_residue = residue.result
    if gomez_mont.error is None:
        report.gsv_gomez_mont = gomez_mont.result
        if gomez_mont.result is not None:
            try:
                report.poincare_hopf = inv.poincare_hopf()
                report.transfer_ok = inv.transfer_holds()
                report.lambda_ok = inv.gorenstein_checks()
            except GsvError as err:
                report.diagnostics.append('regular-field checks: %s: %s'
                                          % (type(err).__name__, err))

    values = [v for v in (report.gsv_homological, report.gsv_residue, report.gsv_gomez_mont)
              if v is not None]
    report.consistent = (bool(values) and len(set(values)) == 1
                         and report.euler_ok is not False
                         and report.exact_sequence_ok is not False)
    if not report.consistent and values:
        log.warning('index routes disagree: %s', report.indices())
    for name, ok in (('euler', report.euler_ok), ('exact sequence', report.exact_sequence_ok),
                     ('lambda over B', report.lambda_ok), ('transfer', report.transfer_ok)):
        if ok is False:
            report.diagnostics.append('check failed: %s' % name)
    log.info('index report: %s', report.indices())
    return report
