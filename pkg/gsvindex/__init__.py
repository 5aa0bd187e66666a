#!/usr/bin/env python3
# File name   : __init__.py
# Description : GSV index of vector fields tangent to hypersurface singularities
# Author      : gsvindex developers
# Date        : 2026/10/16
"""
Exact computation of the GSV index and the homology dimensions of the
contraction complexes, by closed algebraic formulas, by Grothendieck residues
and by a truncated-complex oracle.
"""
from .algebra_core import (PolyMatrix, Polynomial, add, apply_linear_change, apply_vector_field,
                           chat_numerator, jacobian, mul, partial_derivative, scale, sigma)
from .config import DEFAULT_CONFIG, EngineConfig
from .errors import *  # noqa: F401,F403
from .index_core import (HomologyDims, IndexReport, compute_c, full_report, gsv_index_gomez_mont,
                         gsv_index_homological, gsv_index_residue, h0_star, h1_star, lambda_dim)
from .local_engine import (INFINITE, IdealSpan, StabilizedDim, TruncatedRing, colength, colon,
                           intersect, membership_witness, normalize_coordinates,
                           quotient_module_dim, regular_sequence_check, span)
from .parser import ProblemSpec, format_polynomial, parse_polynomial, parse_problem
from .residue import (ResidueCover, grothendieck_residue, local_multiplicity, monomial_cover,
                      poincare_hopf_index)

__version__ = '1.0.0'
