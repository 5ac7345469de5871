"""Diagonal approximate inverse of diagonally dominant positive matrices."""

from ._ddinv import *  # noqa: F401,F403
from ._ddinv import __doc__  # noqa: F401
