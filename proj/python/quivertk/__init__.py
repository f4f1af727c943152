"""Exact computations with bound quiver algebras."""

from ._core import *  # noqa: F401,F403
from ._core import QuiverError, ParseError, ValidationError, UnsupportedError, GuardError  # noqa: F401
