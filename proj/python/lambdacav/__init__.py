"""Exact dynamics and nonclassicality measures of a Lambda-type three-level
atom coupled to two cavity modes in a Kerr medium."""

from lambdacav._core import *  # noqa: F401,F403
from lambdacav._core import __doc__  # noqa: F401

__version__ = "0.1.0"
