"""Gamma-family special functions and numerical checks of digamma inequalities."""

__version__ = "0.1.0"

from .errors import (  # noqa: F401
    EvalError,
    NotConverged,
    OutOfDomain,
    Overflow,
    PoleOrNonpositive,
    UnknownCase,
)
from .specfun import (  # noqa: F401
    EULER_GAMMA,
    constants,
    digamma,
    gamma,
    log_abs_gamma_signed,
    log_gamma,
    psi_root,
    tetragamma,
    trigamma,
)
