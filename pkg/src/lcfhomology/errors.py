"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`LcfError`,
so the CLI can map them to exit codes in one place.
"""


class LcfError(Exception):
    """Base class."""


class InputError(LcfError, ValueError):
    """Malformed input (bad indices, bad JSON shape, bad permutation)."""


class GradingViolation(LcfError, ValueError):
    pass


class HasMinimum(LcfError, ValueError):
    pass


class CycleDetected(LcfError, ValueError):
    pass


class NotAtomModular(LcfError, ValueError):
    pass


class InvalidFamily(LcfError, ValueError):
    """A covering family failed validation where a valid one is required."""


class NotDownClosed(LcfError, ValueError):
    pass


class NotAPermutation(LcfError, ValueError):
    pass


class GroupTooLarge(LcfError, ValueError):
    pass


class NotPrime(LcfError, ValueError):
    pass


class SuspensionOutOfRange(LcfError, ValueError):
    pass


class NotACycle(LcfError, ValueError):
    pass


class SupportOutsideI(LcfError, ValueError):
    pass


class NotAComplex(LcfError, ValueError):
    """d o d != 0."""


class NotLocallyPQuillen(LcfError, ValueError):
    pass
