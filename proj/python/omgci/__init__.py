"""Coherent information of phase-insensitive one-mode Gaussian channels."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
