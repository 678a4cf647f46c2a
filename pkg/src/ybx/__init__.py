"""Exact verification toolkit for the birational R-matrix on tori from geometric crystals."""
from .algebra import LAMBDA, Matrix, Polynomial, RationalFunction, mat_det, mat_inverse, mat_mul, projective_equal
from .rmatrix import TorusPoint, apply_R, closed_form_R, f_map, g_map, matrix_af, matrix_af_inv, matrix_ag
from .verify import SuiteConfig, run_suite

__version__ = "0.1.0"
