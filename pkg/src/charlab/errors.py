"""Exception types shared by the charlab modules."""


class CharlabError(Exception):
    """Base class for all charlab errors."""


class DescriptorMismatch(CharlabError):
    """Operands belong to different fields."""


class DivisionByZero(CharlabError, ZeroDivisionError):
    """Division by, or inversion of, the zero element."""


class CapExceeded(CharlabError):
    """A brute-force enumeration would exceed the configured cap."""


class NotAPthPower(CharlabError):
    """pth_root applied to an element that is not a p-th power."""


class DepthInsufficient(CharlabError):
    """Residue-character expansion depth too small for the argument."""


class ZeroArgument(CharlabError):
    """Multiplicative character evaluated at zero."""


class OrderOverflow(CharlabError):
    """Cyclotomic order lift beyond the configured cap."""


class ZeroInSupport(CharlabError):
    """Zero found in a weighted-set support where it is not allowed."""


class EmptyAfterDrop(CharlabError):
    """Support became empty after dropping zero."""


class TooShort(CharlabError):
    """Series too short for the requested summary."""


class CharDividesN(CharlabError):
    """The field characteristic divides the exponent n."""


class BadA(CharlabError):
    """Triple-correlation parameter a outside K \\ {0, 1}."""


class BadS(CharlabError):
    """Invalid shift tuple for the positive-correlation check."""


class TooSmall(CharlabError):
    """Point set too small to carry an ordered-triple construction."""


class NotInverseClosed(CharlabError):
    """Set is not closed under multiplicative inversion."""


class ZeroU(CharlabError):
    """Correction map u vanishes on a sample point."""


class BadWeight(CharlabError):
    """Weight whose prime-to-p part is divisible by the characteristic."""


class ParseError(CharlabError):
    """Malformed literal or configuration text."""
