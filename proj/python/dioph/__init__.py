"""Bounded solvers for S-unit and Thue-Mahler equations over Q.

Rationals travel as fractions.Fraction, integers as int, sets of primes as lists of int.
Equation specs use the same text form as the command line tool, e.g. "roots=0,1,-1;k=1;H=1".
"""

from ._dioph import *  # noqa: F401,F403
from ._dioph import CapExceeded, ParseError  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
