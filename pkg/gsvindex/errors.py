#!/usr/bin/env python3
# File name   : errors.py
# Description : Exception classes raised by the gsvindex engine and CLI
# Author      : gsvindex developers
# Date        : 2026/10/16


class GsvError(Exception):
    """Base class of every error raised by gsvindex."""


class ConfigError(GsvError):
    pass


class PolySyntaxError(GsvError):
    """Malformed polynomial or problem text, annotated with its position."""

    def __init__(self, message, position=None, line=None):
        self.message = message
        self.position = position
        self.line = line
        super().__init__(self._render())

    def _render(self):
        where = []
        if self.line is not None:
            where.append('line %d' % self.line)
        if self.position is not None:
            where.append('column %d' % (self.position + 1))
        if where:
            return '%s (%s)' % (self.message, ', '.join(where))
        return self.message

    def at_line(self, line):
        return PolySyntaxError(self.message, self.position, line)


class UnknownVariable(PolySyntaxError):
    pass


class ArityMismatch(GsvError):
    pass


class NotAGerm(GsvError):
    pass


class TangencyMismatch(GsvError):
    pass


class NotTangent(GsvError):
    pass


class NonPolynomialFactor(GsvError):
    """X(f)/f exists only as a power series; `c` is its truncation."""

    def __init__(self, message, c, order):
        self.c = c
        self.order = order
        super().__init__(message)


class SingularMatrix(GsvError):
    pass


class DegreeOverflow(GsvError):
    pass


class RingMismatch(GsvError):
    pass


class NotNested(GsvError):
    pass


class NoStabilization(GsvError):
    """Truncated values did not settle before the truncation cap."""

    def __init__(self, message, orders=(), values=()):
        self.orders = list(orders)
        self.values = list(values)
        super().__init__(message)


class NotRegular(GsvError):
    pass


class NormalizationFailed(GsvError):
    def __init__(self, message, matrix=None):
        self.matrix = matrix
        super().__init__(message)


class InternalInconsistency(GsvError):
    pass


class OracleRefused(GsvError):
    pass
