"""Exception types shared across the package."""


class LVMBError(Exception):
    """Base class for all errors raised by :mod:`lvmb`."""


class PrecisionExhausted(LVMBError):
    """A sign could not be certified from the declared generator enclosures.

    The offending value is nonzero as a formal expression, but its interval
    evaluation straddles zero.  Supply tighter enclosures and retry.
    """


class SingularMatrix(LVMBError):
    pass


class Infeasible(LVMBError):
    """The equality part of a linear program has no solution."""


class RankDeficient(LVMBError):
    pass


class InconsistentDatum(LVMBError):
    pass


class NotComplete(LVMBError):
    pass


class NotSimplicial(LVMBError):
    pass


class ParseError(LVMBError):
    def __init__(self, message, where=None):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


class InvariantViolation(LVMBError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))
