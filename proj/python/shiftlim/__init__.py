"""Exact-arithmetic shift equivalence and simple direct limits.

Endomorphisms of Z^r are square integer matrices. The package decides
equality in the simple direct limit of such a map, verifies and searches
shift-equivalence certificates, and converts between certificates and
conjugacies of the coshift automorphisms on the limits, all in exact
arbitrary-precision arithmetic.
"""

from shiftlim._core import *  # noqa: F401,F403
from shiftlim._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
