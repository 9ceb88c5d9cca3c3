"""
O'Nan Moonshine Toolkit

Exact q-series, class groups of binary quadratic forms, CM traces of
singular moduli and the O'Nan 3A McKay-Thompson series, used to decide
5-Selmer triviality for quadratic twists of the elliptic curve of
conductor 15.
"""

from .errors import MoonshineError

__version__ = "0.1.0"

__all__ = ["MoonshineError", "__version__"]
