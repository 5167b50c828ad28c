"""Sum systems, joint ordered factorisations and their counting functions."""

from fractions import Fraction

from ._core import *  # noqa: F401,F403
from ._core import _tau_c


def tau_c(doubled_components, n):
    """Second moment of a centred system given as doubled values, as an exact Fraction."""
    num, den = _tau_c(doubled_components, n)
    return Fraction(num, den)
