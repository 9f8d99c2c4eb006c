"""Exact computations for line arrangements in the projective plane.

The module of logarithmic derivations, its minimal free resolution, the
associated rank-2 bundle (Chern data, stability, splitting types, jump lines)
and a constraint pipeline for freeness of a fixed intersection lattice.
"""

from .arrangement import (Arrangement, InvalidArrangement, Line, PreconditionError,
                          jacobian_degree, max_mu, parse_line, poincare, singular_points,
                          triple)
from .bundle import (chern, fit_dual_curve, is_jump_line, jump_scan, splitting_type,
                     stability)
from .derivations import freeness, graded_piece, hilbert_table, regularity, resolve

__version__ = "0.1.0"
