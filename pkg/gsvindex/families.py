#!/usr/bin/env python3
# File name   : families.py
# Description : Ready-made problems with known indices
# Author      : gsvindex developers
# Date        : 2026/10/16
from fractions import Fraction

from .algebra_core import Polynomial
from .errors import ConfigError
from .parser import ProblemSpec

XY = ('x', 'y')


def _var(i, names):
    return Polynomial.variable(i, len(names), names)


def dk(k, m):
    """D_k: f = x^2*y + y^(k-1) with a field tangent along c = x^m; index (m-1)(k-1)."""
    if k < 4 or m < 2:
        raise ConfigError('D_k family needs k >= 4 and m >= 2')
    x, y = _var(0, XY), _var(1, XY)
    f = x ** 2 * y + y ** (k - 1)
    X = (Fraction(k - 2, 2 * (k - 1)) * x ** (m + 1),
         Fraction(1, k - 1) * x ** m * y)
    return ProblemSpec.build(XY, f, X, x ** m)


def ak_euler(mu):
    """Euler field of the quasihomogeneous A_mu germ x^2 + y^(mu+1)."""
    if mu < 1:
        raise ConfigError('A_mu family needs mu >= 1')
    x, y = _var(0, XY), _var(1, XY)
    f = x ** 2 + y ** (mu + 1)
    X = ((mu + 1) * x, 2 * y)
    return ProblemSpec.build(XY, f, X, Polynomial.constant(2 * (mu + 1), 2, XY))


def quadric(n):
    """Euler field on z_1^2 + .. + z_n^2, tangent with c = 2."""
    if n < 2:
        raise ConfigError('quadric needs at least 2 variables')
    if n <= 3:
        names = ('x', 'y', 'z')[:n]
    else:
        names = tuple('z%d' % (i + 1) for i in range(n))
    zs = [_var(i, names) for i in range(n)]
    f = sum((z ** 2 for z in zs[1:]), zs[0] ** 2)
    return ProblemSpec.build(names, f, tuple(zs), Polynomial.constant(2, n, names))


def from_text(text):
    """Parse `dk:K,M`, `ak:MU` or `quadric:N`."""
    kind, _, args = text.partition(':')
    try:
        numbers = [int(a) for a in args.split(',') if a.strip()]
    except ValueError:
        raise ConfigError('bad family arguments %r' % text)
    builders = {'dk': (dk, 2), 'ak': (ak_euler, 1), 'quadric': (quadric, 1)}
    if kind not in builders:
        raise ConfigError('unknown family %r (use dk, ak or quadric)' % kind)
    builder, count = builders[kind]
    if len(numbers) != count:
        raise ConfigError('family %s takes %d integer(s)' % (kind, count))
    return builder(*numbers)
