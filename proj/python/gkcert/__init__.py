"""Exact certificate toolkit for generalized Kneser graph bounds."""

from gkcert._core import *  # noqa: F401,F403
from gkcert._core import __version__  # noqa: F401
