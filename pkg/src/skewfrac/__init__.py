"""Exact arithmetic in central skew polynomial rings over the rational
quaternions, their right Ore fraction fields, and the coordinate-
polynomial model of quaternionic polynomial functions.

Quick tour::

    >>> from skewfrac import HFRAC, HPOLY, I, J, K, X, sigma, vanishes, y_constant
    >>> t = HPOLY.t
    >>> print((t - I) * (t - J))
    t^2 - (i + j)*t + k
    >>> print(HFRAC(HPOLY.one, t - I))          # (t - i)^-1, canonical form
    1 / (t - i)
    >>> print(sigma(X * I - I * X))             # a commutator as a polynomial
    (-2*k)*t3 + (2*j)*t4
    >>> recon = y_constant(1) + I*y_constant(2) + J*y_constant(3) + K*y_constant(4)
    >>> vanishes(X - recon)                     # X equals its reconstruction
    True
"""

from .centralpoly import (CentralPoly, PolyRing, gcld, gcrd, lclm, lcrm,
                          lcrm_with_cofactors)
from .errors import (DepthExceededError, MixedContextError, ParseError,
                     UnknownSuiteError)
from .fractionfield import (HFRAC, HPOLY, QFRAC, QPOLY, FractionField,
                            RightFraction, centralize_denominator,
                            component_decompose, component_recompose)
from .freealgebra import (FreeExpr, X, eval_free, find_witness, func_eq, phi,
                          sigma, vanishes, y_constant)
from .multipoly import MultiPoly
from .parser import classify, evaluate, parse, parse_and_eval
from .quaternion import HH, I, J, K, ONE, QQ, Quaternion, ZERO, quat
from .selftest import run_suite
from .tower import (DEFAULT_DEPTH_LIMIT, tower_constant, tower_field,
                    tower_variable)

__version__ = "0.1.0"

__all__ = [
    "CentralPoly", "PolyRing", "gcld", "gcrd", "lclm", "lcrm",
    "lcrm_with_cofactors",
    "DepthExceededError", "MixedContextError", "ParseError",
    "UnknownSuiteError",
    "HFRAC", "HPOLY", "QFRAC", "QPOLY", "FractionField", "RightFraction",
    "centralize_denominator", "component_decompose", "component_recompose",
    "FreeExpr", "X", "eval_free", "find_witness", "func_eq", "phi", "sigma",
    "vanishes", "y_constant",
    "MultiPoly",
    "classify", "evaluate", "parse", "parse_and_eval",
    "HH", "I", "J", "K", "ONE", "QQ", "Quaternion", "ZERO", "quat",
    "run_suite",
    "DEFAULT_DEPTH_LIMIT", "tower_constant", "tower_field", "tower_variable",
    "__version__",
]
