#!/usr/bin/env python3
# File name   : echelon.py
# Description : Incremental fraction-free row echelon form on sparse vectors
# Author      : gsvindex developers
# Date        : 2026/10/16
"""
Sparse exact linear algebra.

Vectors are dicts {column: int}.  A row's pivot is its smallest column, so
dropping every column >= k from an echelon basis leaves an echelon basis of
the projected space (rows with pivot >= k vanish).  Optional combination
records {label: Fraction} follow each row through elimination, which turns
zero reductions into kernel relations and membership tests into witnesses.
"""
import heapq
import math
from fractions import Fraction

TARGET = '__target__'


def integer_vector(values):
    """Clear denominators: return ({col: int}, multiplier) with ints = multiplier * values."""
    values = {c: Fraction(v) for c, v in values.items() if v}
    if not values:
        return {}, 1
    lcm = 1
    for v in values.values():
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    return {c: int(v * lcm) for c, v in values.items()}, lcm


def _content(vec):
    g = 0
    for v in vec.values():
        g = math.gcd(g, v)
        if g == 1:
            break
    return g


def _combine(a, x, b, y):
    """a*x - b*y for sparse dicts, dropping zeros."""
    out = {k: a * v for k, v in x.items()} if a != 1 else dict(x)
    for k, v in y.items():
        w = out.get(k, 0) - b * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


class Echelon:
    """Rows keyed by pivot column; each row has a positive pivot and unit content."""

    def __init__(self):
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self):
        return len(self.rows)

    def copy(self):
        other = Echelon()
        other.rows = dict(self.rows)
        return other

    def reduce(self, vec, combo=None):
        vec = dict(vec)
        heap = list(vec)
        heapq.heapify(heap)
        while heap:
            col = heapq.heappop(heap)
            value = vec.get(col)
            if not value or col not in self.rows:
                continue
            row, row_combo = self.rows[col]
            pivot = row[col]
            g = math.gcd(pivot, value)
            a, b = pivot // g, value // g
            vec = _combine(a, vec, b, row)
            if combo is not None:
                combo = _combine(a, combo, b, row_combo or {})
            for c in row:
                if c > col and c in vec:
                    heapq.heappush(heap, c)
        if vec:
            g = _content(vec)
            if vec[min(vec)] < 0:
                g = -g
            if g != 1:
                vec = {c: v // g for c, v in vec.items()}
                if combo is not None:
                    combo = {k: Fraction(v) / g for k, v in combo.items()}
        return vec, combo

    def insert(self, vec, combo=None):
        """Add vec; return None if it grew the span, else the zero-reduction combo."""
        reduced, combo = self.reduce(vec, combo)
        if reduced:
            self.rows[min(reduced)] = (reduced, combo)
            return None
        return combo if combo is not None else {}

    def contains(self, vec):
        reduced, _ = self.reduce(vec)
        return not reduced

    def solve(self, vec):
        """Express vec through the tracked labels, or return None if outside the span."""
        reduced, combo = self.reduce(vec, {TARGET: Fraction(1)})
        if reduced:
            return None
        scale = combo.pop(TARGET)
        return {k: -Fraction(v) / scale for k, v in combo.items() if v}

    def vectors(self):
        return [row for _, (row, _) in sorted(self.rows.items())]
