"""Exact Alexander-module computations for spun high-dimensional knots."""

from .exact_matrix import IntMatrix, LaurentMatrix, det_int, det_laurent, minors
from .lambda_module import ModulePresentation, cyclic_class, fitting_generators, is_trivial, same_cyclic_module
from .laurent import AlexanderClass, LaurentPoly, format_poly, lp_canonicalize, parse_poly
from .seifert import SeifertMatrix, alexander_class, knottedness_certificate, validate_seifert

__version__ = "0.1.0"
