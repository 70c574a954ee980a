"""Pricing with inequity aversion: exact solvers, approximation algorithms,
instance generators and hardness constructions."""

from ._core import *  # noqa: F401,F403
from ._core import ParseError, SizeLimitError, ValidationError  # noqa: F401

__version__ = "0.1.0"
