"""Character degree divisibility statistics for GL(n, q).

Partition combinatorics, l-adic valuation arithmetic and the character
degree engine for the finite general linear groups, plus exact sweeps of
divisibility proportions over all irreducible characters.
"""

from glqdiv.errors import IntegralityError

__version__ = "0.1.0"

__all__ = ["IntegralityError", "__version__"]
