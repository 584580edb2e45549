"""Typed errors raised by path, functional, audit and simulation operations."""


class RegularityError(ValueError):
    """Base class for every input error of the toolkit."""


# Path construction / evaluation
class NonMonotoneBreakpoints(RegularityError):
    pass


class BreakpointOutOfRange(RegularityError):
    pass


class LengthMismatch(RegularityError):
    pass


class DimensionMismatch(RegularityError):
    pass


class NonFiniteValue(RegularityError):
    pass


class TimeOutOfRange(RegularityError):
    pass


class LeftLimitAtZero(RegularityError):
    pass


# Functionals
class UnorderedTriple(RegularityError):
    pass


class EmptyWindow(RegularityError):
    pass


class WindowNotNested(RegularityError):
    pass


class NonpositiveEta(RegularityError):
    pass


class BadParams(RegularityError):
    pass


class BadMu(BadParams):
    pass


class BadP(BadParams):
    pass


class BadGrid(RegularityError):
    pass


# Audit
class MissingConstants(RegularityError):
    pass


class ExponentNotIntegrable(RegularityError):
    pass


# Simulation / configuration
class BadProcessSpec(RegularityError):
    pass


class BadConfig(RegularityError):
    pass
