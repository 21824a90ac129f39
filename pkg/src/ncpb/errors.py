"""Exception hierarchy shared by every ncpb module."""


class NCBError(Exception):
    """Base class for all errors raised by ncpb."""


class DomainError(NCBError, ValueError):
    pass


class PartitionError(NCBError, ValueError):
    """Blocks overlap, miss an element, or mention an element outside the ground set."""


class SymmetryError(PartitionError):
    """Some block B has no antipodal block -B."""


class ZeroBlockError(PartitionError):
    """More than one block is closed under negation."""


class NotNoncrossingError(NCBError, ValueError):
    pass


class SpecError(NCBError, ValueError):
    pass


class CostGuardError(NCBError, RuntimeError):
    pass


class PairSizeError(NCBError, ValueError):
    pass


class ClassError(NCBError, ValueError):
    """An element has the wrong point class for the requested operation."""


class AmbiguityError(NCBError, RuntimeError):
    """Singleton reinsertion found zero or several admissible target blocks."""


class FixedSetError(NCBError, ValueError):
    pass


class CapacityError(NCBError, OverflowError):
    pass


class SchemeError(NCBError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class IntegralityError(NCBError, ArithmeticError):
    pass


class RegistryError(NCBError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class OracleError(NCBError, AssertionError):
    pass


class ParseError(NCBError, ValueError):
    def __init__(self, message, location=None):
        super().__init__(message if location is None else f"{location}: {message}")
        self.location = location


class IoError(NCBError, OSError):
    pass
