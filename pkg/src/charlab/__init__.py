"""charlab: an exact-arithmetic laboratory for character sums over countable
fields, Folner-set diagnostics, combinatorial pattern searches, and field
reconstruction from multiplicative data."""

__version__ = "0.1.0"

from .fields import GF, Q, RatFunc  # noqa: F401
